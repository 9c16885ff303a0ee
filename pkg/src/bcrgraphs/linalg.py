"""Exact sparse linear algebra over Q for relation sets.

Rank uses fraction-free integer elimination with a Markowitz-style pivot
choice (sparsest row, then least-populated column), which keeps intermediate
entries small on the sparse relation matrices produced here.  Span queries
and normal forms use a column-ordered echelon over Fraction with witness
tracking, so every membership answer comes with coefficients that re-verify
by plain arithmetic.
"""

from fractions import Fraction
from math import gcd


class BasisMismatch(KeyError):
    pass


class RelationSet:
    """An ordered basis of canonical keys plus relation rows over it."""

    def __init__(self, basis):
        self.basis = list(basis)
        self.index = {k: i for i, k in enumerate(self.basis)}
        self.rows = []
        self.tags = []
        self._seen = set()
        self._ech = None

    def columns(self, vec):
        out = {}
        for k, c in vec.items():
            i = self.index.get(k)
            if i is None:
                raise BasisMismatch("key not in basis: %s" % k)
            if c:
                out[i] = Fraction(c)
        return out

    def add(self, vec, tag, dedupe_key=None):
        """Add a relation vector (dict key -> Fraction). Zero rows and exact
        duplicates (after scale normalization) are dropped."""
        cols = self.columns(vec)
        if not cols:
            return False
        if dedupe_key is None:
            dedupe_key = _scale_normal(cols)
        if dedupe_key in self._seen:
            return False
        self._seen.add(dedupe_key)
        self.rows.append(cols)
        self.tags.append(tag)
        self._ech = None
        return True

    def row_vector(self, i):
        return {self.basis[c]: x for c, x in self.rows[i].items()}

    def echelon(self):
        if self._ech is None:
            ech = Echelon()
            for i, row in enumerate(self.rows):
                ech.add(row, i)
            self._ech = ech
        return self._ech

    def to_json(self):
        return {
            "basis": list(self.basis),
            "rows": [sorted((c, x.numerator, x.denominator) for c, x in row.items())
                     for row in self.rows],
            "tags": list(self.tags),
        }


def _scale_normal(cols):
    items = sorted(cols.items())
    lead = items[0][1]
    scaled = [(c, x / lead) for c, x in items]
    den = 1
    for _c, x in scaled:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [(c, int(x * den)) for c, x in scaled]
    g = 0
    for _c, x in ints:
        g = gcd(g, abs(x))
    return tuple((c, x // g) for c, x in ints)


def _integerize(cols):
    den = 1
    for x in cols.values():
        den = den * x.denominator // gcd(den, x.denominator)
    ints = {c: int(x * den) for c, x in cols.items() if x}
    g = 0
    for x in ints.values():
        g = gcd(g, abs(x))
    if g > 1:
        ints = {c: x // g for c, x in ints.items()}
    return ints


def rank(relset):
    """Exact rank over Q by fraction-free forward elimination."""
    rows = [r for r in (_integerize(row) for row in relset.rows) if r]
    rk = 0
    while rows:
        colcount = {}
        for r in rows:
            for c in r:
                colcount[c] = colcount.get(c, 0) + 1
        best = min(range(len(rows)), key=lambda i: (len(rows[i]), i))
        piv = rows.pop(best)
        pcol = min(piv, key=lambda c: (colcount[c], c))
        pval = piv[pcol]
        rk += 1
        nxt = []
        for r in rows:
            q = r.get(pcol)
            if q is None:
                nxt.append(r)
                continue
            out = {}
            for c, x in r.items():
                out[c] = pval * x
            for c, x in piv.items():
                y = out.get(c, 0) - q * x
                if y:
                    out[c] = y
                else:
                    out.pop(c, None)
            if out:
                g = 0
                for x in out.values():
                    g = gcd(g, abs(x))
                if g > 1:
                    out = {c: x // g for c, x in out.items()}
                nxt.append(out)
        rows = nxt
    return rk


class Echelon:
    """Column-ordered forward echelon over Fraction with witness tracking.

    Stored rows have their pivot at the smallest support column with
    coefficient 1, and each carries its expression as a combination of the
    original rows it was built from.
    """

    def __init__(self):
        self.pivots = {}  # col -> (rowdict, combo dict rowid -> Fraction)

    def _reduce(self, vec, combo):
        vec = dict(vec)
        while vec:
            c = min(vec)
            hit = self.pivots.get(c)
            if hit is None:
                # smallest column is free; continue with the rest
                rest = {cc for cc in vec if cc > c and cc in self.pivots}
                if not rest:
                    break
                c = min(rest)
                hit = self.pivots[c]
            row, rcombo = hit
            alpha = vec[c]
            for cc, x in row.items():
                y = vec.get(cc, 0) - alpha * x
                if y:
                    vec[cc] = y
                else:
                    vec.pop(cc, None)
            for rid, x in rcombo.items():
                y = combo.get(rid, 0) + alpha * x
                if y:
                    combo[rid] = y
                else:
                    combo.pop(rid, None)
        return vec, combo

    def add(self, vec, rowid):
        residue, combo = self._reduce(vec, {})
        if not residue:
            return False
        c = min(residue)
        lead = residue[c]
        row = {cc: x / lead for cc, x in residue.items()}
        # combo expresses the reduced part; the stored row equals
        # (original - sum combo) / lead
        mu = {rid: -x / lead for rid, x in combo.items()}
        mu[rowid] = mu.get(rowid, 0) + Fraction(1) / lead
        self.pivots[c] = (row, mu)
        return True

    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Returns (residue, combo): vec = residue + sum combo[i]*original_i."""
        return self._reduce(vec, {})


def normal_form(vec, relset):
    """Coset representative of vec modulo the row span (support on non-pivot
    columns only); normal_form(v) == normal_form(w) iff v - w is in the span."""
    cols = relset.columns(vec)
    residue, _combo = relset.echelon().reduce(cols)
    return {relset.basis[c]: x for c, x in residue.items()}


def in_span(vec, relset):
    """None, or exact coefficients c_i with vec = sum c_i * row_i."""
    cols = relset.columns(vec)
    residue, combo = relset.echelon().reduce(cols)
    if residue:
        return None
    out = [Fraction(0)] * len(relset.rows)
    for rid, x in combo.items():
        out[rid] = x
    return out


def verify_witness(vec, relset, coeffs):
    """Recheck vec == sum coeffs[i]*row_i by plain rational arithmetic."""
    acc = {}
    for i, c in enumerate(coeffs):
        if not c:
            continue
        for col, x in relset.rows[i].items():
            y = acc.get(col, 0) + c * x
            if y:
                acc[col] = y
            else:
                acc.pop(col, None)
    return acc == relset.columns(vec)
