"""Local rewiring moves: leg swaps, merges, resolutions, contractions, IHX.

All moves return new graphs; coloring bookkeeping is positional throughout
(see graphs).  The merge move and its inverse deliberately reuse the two
original vertex slots, so vertex labels survive unchanged in the odd case
and the new dashed edge sits exactly where the removed solid edge was,
inheriting its number.
"""

from .graphs import (
    Graph, EXTERNAL, INTERNAL, DASHED, SOLID, EVEN,
    solid_components, dashed_leg,
)


def _set_endpoint(edges, idx, slot, newv):
    u, v, k = edges[idx]
    edges[idx] = (newv, v, k) if slot == 0 else (u, newv, k)


def adjacent_pairs(g):
    """All solid-adjacent external pairs (a, b), ordered along components."""
    pairs = []
    for comp in solid_components(g):
        for i in range(len(comp) - 1):
            pairs.append((comp[i], comp[i + 1]))
    return pairs


def swap_legs(g, a, b):
    """(U D)_u for the transposition of the legs at external vertices a, b:
    every dashed endpoint at a moves to b and vice versa."""
    edges = []
    for u, v, k in g.edges:
        if k == DASHED:
            u2 = b if u == a else (a if u == b else u)
            v2 = b if v == a else (a if v == b else v)
            edges.append((u2, v2, k))
        else:
            edges.append((u, v, k))
    return g.replace(edges=edges)


def merge_pair(g, a, b):
    """S_i D: merge solid-adjacent externals a, b.

    a stays external and takes over b's solid continuation; b turns internal;
    the solid edge a-b becomes a dashed edge in place (same number and
    orientation); both old legs end up on b.
    """
    if g.kinds[a] != EXTERNAL or g.kinds[b] != EXTERNAL:
        raise ValueError("merge endpoints must be external")
    jf = [j for j, (u, v, k) in enumerate(g.edges)
          if k == SOLID and {u, v} == {a, b}]
    if len(jf) != 1:
        raise ValueError("vertices %d, %d are not joined by a unique solid edge" % (a, b))
    jf = jf[0]
    ja = dashed_leg(g, a)
    edges = list(g.edges)
    u, v, k = edges[jf]
    edges[jf] = (u, v, DASHED)
    # a's old leg moves to b
    u, v, k = edges[ja]
    edges[ja] = (b, v, k) if u == a else (u, b, k)
    # b's remaining solid edges move to a
    for j, (u, v, k) in enumerate(edges):
        if k == SOLID:
            if u == b:
                edges[j] = (a, v, k)
            elif v == b:
                edges[j] = (u, a, k)
    kinds = list(g.kinds)
    kinds[b] = INTERNAL
    return g.replace(kinds="".join(kinds), edges=edges)


def resolvable_legs(g):
    """Indices of dashed edges joining an internal to an external vertex."""
    out = []
    for j, (u, v, k) in enumerate(g.edges):
        if k != DASHED or u == v:
            continue
        if {g.kinds[u], g.kinds[v]} == {EXTERNAL, INTERNAL}:
            out.append(j)
    return out


def resolve_internal(g, e_idx):
    """Resolve internal vertex w along its leg e to external v.

    v splits into the solid-adjacent pair (v, w); e becomes the connecting
    solid edge in place; w's other two darts attach to v in the two possible
    ways, giving the pair (T, U).  The resolution step of kappa is T + U.
    """
    u0, v0, k0 = g.edges[e_idx]
    if k0 != DASHED or u0 == v0:
        raise ValueError("resolution needs a dashed non-loop edge")
    if g.kinds[u0] == EXTERNAL and g.kinds[v0] == INTERNAL:
        v, w = u0, v0
    elif g.kinds[u0] == INTERNAL and g.kinds[v0] == EXTERNAL:
        v, w = v0, u0
    else:
        raise ValueError("edge %d is not internal-to-external" % e_idx)

    base = list(g.edges)
    u, vv, _k = base[e_idx]
    base[e_idx] = (u, vv, SOLID)
    # v keeps its first solid edge, any further one moves to w
    kept = False
    for j, (x, y, k) in enumerate(base):
        if k != SOLID or j == e_idx:
            continue
        if x == v or y == v:
            if not kept:
                kept = True
            else:
                _set_endpoint(base, j, 0 if x == v else 1, w)
    darts = []
    for j, (x, y, k) in enumerate(base):
        if k != DASHED or j == e_idx:
            continue
        if x == w:
            darts.append((j, 0))
        if y == w:
            darts.append((j, 1))
    if len(darts) != 2:
        raise ValueError("internal vertex %d does not have exactly two free darts" % w)
    kinds = list(g.kinds)
    kinds[w] = EXTERNAL
    kinds = "".join(kinds)

    et = list(base)
    _set_endpoint(et, darts[0][0], darts[0][1], v)
    eu = list(base)
    _set_endpoint(eu, darts[1][0], darts[1][1], v)
    return g.replace(kinds=kinds, edges=et), g.replace(kinds=kinds, edges=eu)


def contract_dashed(g, e_idx):
    """Contract a dashed non-loop edge; returns (graph, sign).

    Even case: sign = (-1)^(m - position), the parity of moving the edge to
    the last slot; remaining edges renumber order-preservingly.  Odd case:
    the head of the edge merges into the tail and the sign is the parity of
    moving the dead vertex's label to the last slot.  The merged vertex is
    external when either endpoint was.
    """
    x, y, k0 = g.edges[e_idx]
    if k0 != DASHED:
        raise ValueError("only dashed edges contract")
    if x == y:
        raise ValueError("cannot contract a loop")
    live, dead = x, y
    if g.parity == EVEN:
        sign = -1 if (g.m - 1 - e_idx) % 2 else 1
    else:
        sign = -1 if (g.n - 1 - dead) % 2 else 1

    def remap(v):
        v = live if v == dead else v
        return v - 1 if v > dead else v

    kinds = list(g.kinds)
    merged = EXTERNAL if EXTERNAL in (g.kinds[x], g.kinds[y]) else INTERNAL
    kinds[live] = merged
    del kinds[dead]
    edges = [(remap(u), remap(v), k)
             for j, (u, v, k) in enumerate(g.edges) if j != e_idx]
    return Graph(g.parity, "".join(kinds), edges), sign


def internal_edges(g):
    """Indices of dashed non-loop edges joining two internal vertices."""
    return [j for j, (u, v, k) in enumerate(g.edges)
            if k == DASHED and u != v
            and g.kinds[u] == INTERNAL and g.kinds[v] == INTERNAL]


def ihx_variants(g, e_idx):
    """The two rewirings of the middle edge e between internal vertices.

    With w1's other darts (p1, p2) and w2's (r1, r2), the variants realize
    the pairings {p1 r1 | p2 r2} and {p1 r2 | p2 r1}; all numbers, labels
    and orientations are carried along unchanged.
    """
    w1, w2, k0 = g.edges[e_idx]
    if k0 != DASHED or w1 == w2:
        raise ValueError("IHX needs a dashed edge between two distinct internal vertices")
    if g.kinds[w1] != INTERNAL or g.kinds[w2] != INTERNAL:
        raise ValueError("IHX endpoints must be internal")

    def darts_at(w):
        out = []
        for j, (x, y, k) in enumerate(g.edges):
            if k != DASHED or j == e_idx:
                continue
            if x == w:
                out.append((j, 0))
            if y == w:
                out.append((j, 1))
        return out

    p = darts_at(w1)
    r = darts_at(w2)
    if len(p) != 2 or len(r) != 2:
        raise ValueError("IHX endpoints must be trivalent")

    def rewire(move_to_w2, move_to_w1):
        edges = list(g.edges)
        _set_endpoint(edges, move_to_w2[0], move_to_w2[1], w2)
        _set_endpoint(edges, move_to_w1[0], move_to_w1[1], w1)
        return g.replace(edges=edges)

    # swap p2 <-> r1 and p2 <-> r2
    return rewire(p[1], r[0]), rewire(p[1], r[1])
