"""Graded components, basis enumeration, and quotient-space dimensions.

All five quotient spaces are graded by (total vertices, total edges): every
relation family preserves both counts, so each component is a finite
independent computation.  Basis enumeration goes solid-type partitions
first, then dashed multigraphs on the resulting degree sequence, then
canonicalize-and-dedupe; Zero classes are dropped.
"""

from collections import namedtuple

from . import config
from .canon import canonicalize, decode
from .graphs import (
    Graph, EVEN, ODD, EXTERNAL, INTERNAL, DASHED, SOLID,
    BCR, HAIRY, CHORD, is_connected,
)

Component = namedtuple("Component", "v e parity")

SPACES = ("B", "A", "Abar", "Ac", "Acbar")

_SPACE_CLASS = {"B": HAIRY, "A": BCR, "Abar": BCR, "Ac": CHORD, "Acbar": CHORD}

_BASIS_CACHE = {}
_RELSET_CACHE = {}


def space_class(space):
    if space not in _SPACE_CLASS:
        raise ValueError("unknown space %r (choose from %s)" % (space, ", ".join(SPACES)))
    return _SPACE_CLASS[space]


def _partitions(total, parts, maxpart=None):
    # descending partitions of `total` into exactly `parts` positive parts
    if maxpart is None:
        maxpart = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = -(-total // parts)  # ceil: keep parts positive and descending
    for first in range(min(total - parts + 1, maxpart), lo - 1, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _dashed_multigraphs(deg):
    """All labeled dashed multigraphs with the given degree sequence, each
    exactly once (partners of the active vertex chosen non-decreasing)."""
    n = len(deg)
    rem = list(deg)
    out = []
    acc = []

    def rec(u, vmin):
        while u < n and rem[u] == 0:
            u += 1
            vmin = u
        if u == n:
            out.append(tuple(acc))
            return
        start = max(vmin, u)
        for v in range(start, n):
            if v == u:
                if rem[u] >= 2:
                    rem[u] -= 2
                    acc.append((u, u))
                    rec(u, v)
                    acc.pop()
                    rem[u] += 2
            elif rem[v] >= 1:
                rem[u] -= 1
                rem[v] -= 1
                acc.append((u, v))
                rec(u, v)
                acc.pop()
                rem[u] += 1
                rem[v] += 1

    rec(0, 0)
    return out


def _templates(v, e, klass):
    # (kinds, solid_edges, dashed_degrees) for every admissible split
    for k in range(1, v + 1):
        n = v - k
        if (k + 3 * n) % 2:
            continue
        ndash = (k + 3 * n) // 2
        nsolid = e - ndash
        if nsolid < 0:
            continue
        s = k - nsolid
        if not (1 <= s <= k):
            continue
        if klass == HAIRY and nsolid != 0:
            continue
        if klass == CHORD and n != 0:
            continue
        kinds = EXTERNAL * k + INTERNAL * n
        degrees = [1] * k + [3] * n
        for lam in _partitions(k, s):
            solid = []
            base = 0
            for ln in lam:
                for i in range(ln - 1):
                    solid.append((base + i, base + i + 1, SOLID))
                base += ln
            yield kinds, tuple(solid), degrees


def enumerate_basis(component, klass=None):
    """Sorted canonical keys of all nonzero classes in the component."""
    v, e, parity = component
    config.check_caps(v, e)
    if klass is None:
        klass = BCR
    ck = (v, e, parity, klass)
    hit = _BASIS_CACHE.get(ck)
    if hit is not None:
        return hit
    keys = set()
    for kinds, solid, degrees in _templates(v, e, klass):
        for dashed in _dashed_multigraphs(degrees):
            edges = tuple((a, b, DASHED) for a, b in dashed) + solid
            g = Graph(parity, kinds, edges)
            if not is_connected(g):
                continue
            c = canonicalize(g)
            if c is not None:
                keys.add(c[0])
    out = sorted(keys)
    _BASIS_CACHE[ck] = out
    return out


def space_relations(space, component):
    """The RelationSet presenting the space in this graded component."""
    from . import relations
    from .linalg import RelationSet

    klass = space_class(space)
    ck = (space, tuple(component))
    hit = _RELSET_CACHE.get(ck)
    if hit is not None:
        return hit
    v, e, parity = component
    rs = RelationSet(enumerate_basis(component, klass))
    if space == "B":
        rows = relations.gen_ihx(v, e, parity, HAIRY)
    elif space == "A":
        rows = relations.gen_ihx(v, e, parity, BCR) + relations.gen_stu(v, e, parity)
    elif space == "Abar":
        rows = (relations.gen_ihx(v, e, parity, BCR) + relations.gen_stu(v, e, parity)
                + relations.gen_chord(v, e, parity, BCR))
    elif space == "Ac":
        rows = relations.gen_4t(v, e, parity)
    else:
        rows = relations.gen_4t(v, e, parity) + relations.gen_chord(v, e, parity, CHORD)
    for vec, tag in rows:
        rs.add(vec, tag)
    _RELSET_CACHE[ck] = rs
    return rs


def dimension(space, component):
    """dim of the quotient space in the component: |basis| - rank(relations)."""
    from .linalg import rank
    rs = space_relations(space, component)
    return len(rs.basis) - rank(rs)


def quotient_basis(space, component):
    """Coset representatives plus the normal-form reducer of the quotient.

    The representatives are the basis keys away from the pivot columns of
    the echelonized relation set; their normal forms are linearly
    independent and span the quotient.
    """
    from .linalg import normal_form
    rs = space_relations(space, component)
    ech = rs.echelon()
    reps = [k for i, k in enumerate(rs.basis) if i not in ech.pivots]

    def reducer(vec):
        return normal_form(vec, rs)

    return reps, reducer


def components_within(max_v, max_e, parity):
    """All potentially nonempty components in the box, in fixed order."""
    return [Component(v, e, parity)
            for v in range(1, max_v + 1)
            for e in range(0, max_e + 1)]


def cache_clear():
    _BASIS_CACHE.clear()
    _RELSET_CACHE.clear()
