"""Colored graphs with external/internal vertices and dashed/solid edges.

A graph is stored dart-free as a vertex kind string plus a tuple of edge
triples.  The coloring is positional:

* even parity: the edge at index j carries the number j+1; the order of the
  two endpoints inside a triple is irrelevant.
* odd parity: vertex i carries the label i+1 and each edge (u, v, kind) is
  oriented u -> v.

Loops (u == v) are allowed and count twice toward the dashed degree.
"""

from collections import Counter

EXTERNAL = "e"
INTERNAL = "i"
DASHED = "d"
SOLID = "s"

EVEN = "even"
ODD = "odd"

BCR = "bcr"
HAIRY = "hairy"
CHORD = "chord"

GRAPH_CLASSES = (BCR, HAIRY, CHORD)


class Graph:
    __slots__ = ("parity", "kinds", "edges", "_hash")

    def __init__(self, parity, kinds, edges):
        if parity not in (EVEN, ODD):
            raise ValueError("parity must be %r or %r" % (EVEN, ODD))
        self.parity = parity
        self.kinds = str(kinds)
        self.edges = tuple((u, v, k) for (u, v, k) in edges)
        n = len(self.kinds)
        for u, v, k in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge endpoint out of range: %r" % ((u, v, k),))
            if k not in (DASHED, SOLID):
                raise ValueError("bad edge kind %r" % (k,))
        self._hash = hash((self.parity, self.kinds, self.edges))

    @property
    def n(self):
        return len(self.kinds)

    @property
    def m(self):
        return len(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.parity == other.parity
            and self.kinds == other.kinds
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Graph(%r, %r, %r)" % (self.parity, self.kinds, self.edges)

    def degree(self, v, kind):
        d = 0
        for a, b, k in self.edges:
            if k != kind:
                continue
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def replace(self, kinds=None, edges=None):
        return Graph(
            self.parity,
            self.kinds if kinds is None else kinds,
            self.edges if edges is None else edges,
        )


def is_connected(g):
    n = g.n
    if n == 0:
        return True
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _k in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    root = find(0)
    return all(find(v) == root for v in range(n))


def validate(g, klass=BCR):
    """Check the defining clauses of the requested graph class.

    Returns a list of (code, message) violations; an empty list means the
    graph is a valid member of the class.  Violations are data, not faults.
    """
    if klass not in GRAPH_CLASSES:
        raise ValueError("unknown graph class %r" % (klass,))
    bad = []
    n = g.n
    if not any(k == EXTERNAL for k in g.kinds):
        bad.append(("no-external", "graph has no external vertex"))
    if not is_connected(g):
        bad.append(("disconnected", "graph is not connected"))

    for v in range(n):
        dd = g.degree(v, DASHED)
        sd = g.degree(v, SOLID)
        if g.kinds[v] == INTERNAL:
            if dd != 3:
                bad.append(("internal-dashed-degree",
                            "internal vertex %d has dashed degree %d != 3" % (v, dd)))
            if sd != 0:
                bad.append(("internal-solid-degree",
                            "internal vertex %d has solid degree %d != 0" % (v, sd)))
        else:
            if dd != 1:
                bad.append(("external-dashed-degree",
                            "external vertex %d has dashed degree %d != 1" % (v, dd)))
            if sd > 2:
                bad.append(("external-solid-degree",
                            "external vertex %d has solid degree %d > 2" % (v, sd)))

    # Solid edges must form disjoint simple paths on external vertices.
    solid = [(u, v) for u, v, k in g.edges if k == SOLID]
    seen = Counter()
    for u, v in solid:
        if u == v:
            bad.append(("solid-loop", "solid loop at vertex %d" % u))
        seen[frozenset((u, v))] += 1
    for pair, c in seen.items():
        if c > 1 and len(pair) == 2:
            u, v = sorted(pair)
            bad.append(("solid-multi-edge",
                        "double solid edge between %d and %d" % (u, v)))
    # A cycle of solid edges: component with as many edges as vertices.
    comp_edges, comp_verts = _solid_union(g)
    for root, ec in comp_edges.items():
        if ec >= len(comp_verts[root]):
            bad.append(("solid-cycle",
                        "solid edges form a closed loop through %s"
                        % sorted(comp_verts[root])))

    if klass == HAIRY and solid:
        bad.append(("hairy-has-solid", "hairy graph contains a solid edge"))
    if klass == CHORD and any(k == INTERNAL for k in g.kinds):
        bad.append(("chord-has-internal", "chord diagram contains an internal vertex"))
    return bad


def _solid_union(g):
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, k in g.edges:
        if k == SOLID and u != v:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    comp_edges = {}
    comp_verts = {}
    for v in range(g.n):
        comp_verts.setdefault(find(v), set()).add(v)
    for r in comp_verts:
        comp_edges[r] = 0
    for u, v, k in g.edges:
        if k == SOLID:
            comp_edges[find(u)] += 1
    return comp_edges, comp_verts


def assert_valid(g, klass=BCR):
    bad = validate(g, klass)
    if bad:
        raise ValueError("invalid %s graph: %s" % (klass, "; ".join(m for _c, m in bad)))


def solid_components(g):
    """The broken lines, each as the ordered tuple of its vertices.

    An isolated external vertex is a length-1 component.  Each path is read
    in the direction that makes its vertex tuple lexicographically smaller,
    and components are sorted by that tuple, so the result is deterministic
    for a fixed labeling.
    """
    adj = {}
    for u, v, k in g.edges:
        if k == SOLID:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    comps = []
    seen = set()
    for v in range(g.n):
        if g.kinds[v] != EXTERNAL or v in seen:
            continue
        if v not in adj:
            seen.add(v)
            comps.append((v,))
            continue
        # walk to one end of the path, then read it off
        prev, cur = None, v
        while True:
            nxts = [w for w in adj[cur] if w != prev]
            # a doubled endpoint in adj means multi-edge; validation catches it
            if not nxts or (prev is not None and len(adj[cur]) == 1):
                break
            nxt = nxts[0]
            prev, cur = cur, nxt
            if cur == v:
                break  # defensive: solid cycle
        start = cur
        path = [start]
        prev, cur = None, start
        while True:
            nxts = [w for w in adj[cur] if w != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            if cur == start:
                break
            path.append(cur)
        seen.update(path)
        tup = tuple(path)
        rev = tuple(reversed(path))
        comps.append(min(tup, rev))
    comps.sort()
    return comps


def solid_type(g):
    """Descending multiset of solid-component vertex counts."""
    return tuple(sorted((len(c) for c in solid_components(g)), reverse=True))


def is_hairy(g):
    return all(k != SOLID for _u, _v, k in g.edges)


def is_chord(g):
    return INTERNAL not in g.kinds


def graph_class_of(g):
    if is_hairy(g):
        return HAIRY
    if is_chord(g):
        return CHORD
    return BCR


def dashed_leg(g, v):
    """Index of the unique dashed edge at external vertex v."""
    hits = [j for j, (a, b, k) in enumerate(g.edges)
            if k == DASHED and (a == v or b == v)]
    if len(hits) != 1:
        raise ValueError("vertex %d does not carry exactly one dashed edge" % v)
    return hits[0]
