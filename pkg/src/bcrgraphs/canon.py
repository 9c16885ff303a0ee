"""Canonical forms of colored graphs, with orientation signs.

Canonicalization is isomorphism-class canonical labeling by iterative
refinement plus individualization, with the certificate taken to be the
lexicographically smallest relabeled edge list among refinement-admissible
labelings.  Graphs here are tiny, so the worst-case exponential search is
perfectly affordable and keeps the package dependency-free.

The orientation relations live here:

* even parity: two colorings (edge numberings) of isomorphic graphs compare
  with the parity of the induced edge permutation.  A graph is Zero when a
  pair of same-kind parallel edges exists (their transposition is an odd
  automorphism) or some automorphism induces an odd edge permutation.
* odd parity: colorings (edge orientations + vertex labels) compare with
  parity(vertex relabelling) * (-1)^(number of reversed edges).  A graph is
  Zero when it has a loop (swapping the loop's two ends reverses exactly one
  edge) or some automorphism carries total sign -1.
"""

from fractions import Fraction

from .graphs import Graph, EVEN, ODD, DASHED

_CACHE = {}

_KIND_ORDER = {DASHED: 0, "s": 1}


def _perm_parity(perm):
    # perm as a list: i -> perm[i]; returns +1 / -1
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _initial_cells(g):
    inv = []
    for v in range(g.n):
        dd = sd = dl = 0
        for a, b, k in g.edges:
            hits = (a == v) + (b == v)
            if not hits:
                continue
            if k == DASHED:
                dd += hits
                if a == b == v:
                    dl += 1
            else:
                sd += hits
        inv.append((g.kinds[v], dd, sd, dl))
    buckets = {}
    for v in range(g.n):
        buckets.setdefault(inv[v], []).append(v)
    return [buckets[key] for key in sorted(buckets)]


def _refine(g, cells):
    adj = [[] for _ in range(g.n)]
    for a, b, k in g.edges:
        if a == b:
            adj[a].append((k, -1))  # loop marker
            adj[a].append((k, -1))
        else:
            adj[a].append((k, b))
            adj[b].append((k, a))
    while True:
        cell_of = [0] * g.n
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            prof = {}
            for v in cell:
                p = tuple(sorted((k, w if w < 0 else cell_of[w]) for k, w in adj[v]))
                prof.setdefault(p, []).append(v)
            if len(prof) > 1:
                changed = True
            for p in sorted(prof):
                new_cells.append(prof[p])
        cells = new_cells
        if not changed:
            return cells


def _labelings(g):
    out = []

    def rec(cells):
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            out.append([c[0] for c in cells])
            return
        cell = cells[target]
        for v in sorted(cell):
            rest = [w for w in cell if w != v]
            nxt = cells[:target] + [[v], rest] + cells[target + 1:]
            rec(_refine(g, nxt))

    rec(_refine(g, _initial_cells(g)))
    return out


def _certificate(g, order):
    # order: new position -> old vertex
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    kinds = "".join(g.kinds[v] for v in order)
    edges = []
    for u, v, k in g.edges:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        edges.append((_KIND_ORDER[k], a, b))
    edges.sort()
    return kinds, tuple(edges), pos


def _encode(parity, kinds, sorted_edges):
    p = "e" if parity == EVEN else "o"
    body = ",".join("%s%d.%d" % ("ds"[kk], a, b) for kk, a, b in sorted_edges)
    return "%s|%s|%s" % (p, kinds, body)


def decode(key):
    """Rebuild the canonical Graph from its certificate key."""
    p, kinds, body = key.split("|")
    parity = EVEN if p == "e" else ODD
    edges = []
    if body:
        for tok in body.split(","):
            k = tok[0]
            a, b = tok[1:].split(".")
            edges.append((int(a), int(b), k))
    return Graph(parity, kinds, edges)


def _even_zero_and_sign(g, best_orders, cert_edges):
    # parallel same-kind edges make the class vanish outright
    seen = set()
    norm = []
    for u, v, k in g.edges:
        t = (min(u, v), max(u, v), k)
        if t in seen:
            return True, 0
        seen.add(t)
        norm.append(t)
    index = {t: j for j, t in enumerate(norm)}

    pos0 = [0] * g.n
    for p, v in enumerate(best_orders[0]):
        pos0[v] = p
    base_inv = [0] * g.n
    for p, v in enumerate(best_orders[0]):
        base_inv[p] = v

    for order in best_orders[1:]:
        # automorphism old->old composing this labeling with the first
        phi = [0] * g.n
        posx = [0] * g.n
        for p, v in enumerate(order):
            posx[v] = p
        for x in range(g.n):
            phi[x] = base_inv[posx[x]]
        perm = [index[(min(phi[u], phi[v]), max(phi[u], phi[v]), k)]
                for u, v, k in g.edges]
        if _perm_parity(perm) < 0:
            return True, 0

    # sign of the input numbering against the canonical one
    rank = {t: r for r, t in enumerate(cert_edges)}
    perm = []
    for u, v, k in g.edges:
        a, b = pos0[u], pos0[v]
        if a > b:
            a, b = b, a
        perm.append(rank[(_KIND_ORDER[k], a, b)])
    return False, _perm_parity(perm)


def _odd_reversals(g, phi):
    # parity of the number of orientation reversals induced by the vertex
    # automorphism phi; well defined per parallel class
    classes = {}
    for u, v, k in g.edges:
        a, b = (u, v) if u < v else (v, u)
        classes.setdefault((a, b, k), []).append((u, v))
    rev = 0
    for (a, b, k), members in classes.items():
        fa, fb = phi[a], phi[b]
        ta, tb = (fa, fb) if fa < fb else (fb, fa)
        target = classes[(ta, tb, k)]
        fwd = sum(1 for (u, v) in members if (phi[u], phi[v]) == (ta, tb))
        fwd_target = sum(1 for (u, v) in target if (u, v) == (ta, tb))
        rev += fwd + fwd_target
    return rev & 1


def _odd_zero_and_sign(g, best_orders):
    if any(u == v for u, v, _k in g.edges):
        return True, 0

    pos0 = [0] * g.n
    for p, v in enumerate(best_orders[0]):
        pos0[v] = p
    base_inv = list(best_orders[0])

    for order in best_orders[1:]:
        posx = [0] * g.n
        for p, v in enumerate(order):
            posx[v] = p
        phi = [base_inv[posx[x]] for x in range(g.n)]
        s = _perm_parity(phi)
        if _odd_reversals(g, phi):
            s = -s
        if s < 0:
            return True, 0

    sign = _perm_parity(pos0)
    reversals = sum(1 for u, v, _k in g.edges if pos0[u] > pos0[v])
    if reversals & 1:
        sign = -sign
    return False, sign


def _canon_data(g):
    # returns (key, sign) with sign = 0 exactly when the class is Zero; the
    # key is the certificate of the isomorphism class either way
    data = _CACHE.get(g)
    if data is not None:
        return data
    orders = _labelings(g)
    best = None
    best_orders = []
    for order in orders:
        kinds, edges, _pos = _certificate(g, order)
        cert = (kinds, edges)
        if best is None or cert < best:
            best = cert
            best_orders = [order]
        elif cert == best:
            best_orders.append(order)
    kinds, edges = best
    key = _encode(g.parity, kinds, edges)
    if g.parity == EVEN:
        zero, sign = _even_zero_and_sign(g, best_orders, edges)
    else:
        zero, sign = _odd_zero_and_sign(g, best_orders)
    data = (key, 0 if zero else sign)
    _CACHE[g] = data
    return data


def canonicalize(g):
    """Canonical class of a colored graph: (key, sign) or None for Zero."""
    key, sign = _canon_data(g)
    if sign == 0:
        return None
    return key, sign


def cert_key(g):
    """Certificate of the isomorphism class, defined also for Zero classes."""
    return _canon_data(g)[0]


def canonical_vector(g, coeff=1):
    """The graph as a one-term vector over canonical keys ({} if Zero)."""
    key, sign = _canon_data(g)
    if sign == 0:
        return {}
    return {key: Fraction(sign * coeff)}


def iso_sign(g1, g2):
    """None if non-isomorphic or either class is Zero, else the sign s with
    canonicalize(g1) = s * canonicalize(g2)."""
    c1 = canonicalize(g1)
    c2 = canonicalize(g2)
    if c1 is None or c2 is None:
        return None
    if c1[0] != c2[0]:
        return None
    return c1[1] * c2[1]


def is_zero(g):
    return _canon_data(g)[1] == 0


def cache_clear():
    _CACHE.clear()
