"""Relation-vector generators: STU, IHX, chord, 4T.

Sign conventions (the signed permutation action is pi D = sign(pi) (pi D)_u):

* STU.  S_i D = D - U_i D, so the emitted row is
  canon(D) + canon((U_i D)_u) - canon(S_i D).
* IHX.  The three expansions of a four-valent collapse, all colorings
  carried unchanged, enter symmetrically: canon(G) + canon(H) + canon(X)
  (times the configurable IHX_SIGN on the rewired pair).
* chord.  Two graphs whose designated chords contract to the same class
  with matching orientations: canon(D1) + s*canon(D2), s the product of the
  matched contraction orientations (times CHORD_ROW_SIGN); contractions
  closing a solid-only loop are excluded.  When the contracted class is
  itself Zero both relative orientations occur, so both rows are emitted.
* 4T.  Two resolutions of one internal vertex: (T + U) - (T' + U').

Every generator emits (vector, tag) pairs; vectors are homogeneous in
(V, E) by construction and the RelationSet basis lookup re-checks that.
"""

from itertools import combinations

from . import config
from .canon import canonicalize, canonical_vector, cert_key, decode
from .graphs import INTERNAL, EXTERNAL, DASHED, BCR, CHORD, solid_components
from .moves import (
    adjacent_pairs, swap_legs, merge_pair, resolve_internal,
    resolvable_legs, contract_dashed, internal_edges, ihx_variants,
)
from .vectors import vadd, vscale


def stu_row(g, a, b):
    """The STU relation for the solid-adjacent external pair (a, b) of g."""
    return vadd(
        canonical_vector(g),
        canonical_vector(swap_legs(g, a, b)),
        canonical_vector(merge_pair(g, a, b), -1),
    )


def gen_stu(v, e, parity):
    from .spaces import enumerate_basis
    rows = []
    for key in enumerate_basis((v, e, parity), BCR):
        g = decode(key)
        for a, b in adjacent_pairs(g):
            row = stu_row(g, a, b)
            if row:
                rows.append((row, ("STU", key, a, b)))
    return rows


def gen_ihx(v, e, parity, klass=BCR):
    from .spaces import enumerate_basis
    rows = []
    for key in enumerate_basis((v, e, parity), klass):
        g = decode(key)
        for j in internal_edges(g):
            h, x = ihx_variants(g, j)
            row = vadd(
                {key: 1},
                vscale(vadd(canonical_vector(h), canonical_vector(x)), config.IHX_SIGN),
            )
            if row:
                rows.append((row, ("IHX", key, j)))
    return rows


def _chord_instances(v, e, parity, klass):
    """(graph key, edge index, contracted certificate, matched orientation or
    None when the contracted class is Zero) for every designated chord."""
    from .spaces import enumerate_basis
    out = []
    for key in enumerate_basis((v, e, parity), klass):
        g = decode(key)
        comp_of = {}
        for ci, comp in enumerate(solid_components(g)):
            for x in comp:
                comp_of[x] = ci
        for j, (a, b, k) in enumerate(g.edges):
            if k != DASHED or a == b:
                continue
            if g.kinds[a] != EXTERNAL or g.kinds[b] != EXTERNAL:
                continue
            if comp_of[a] == comp_of[b]:
                continue  # contraction would close a solid-only loop
            c, eps = contract_dashed(g, j)
            cc = canonicalize(c)
            if cc is None:
                out.append((key, j, cert_key(c), None))
            else:
                out.append((key, j, cc[0], eps * cc[1]))
    return out


def gen_chord(v, e, parity, klass):
    """Chord-relation rows for the class (BCR graphs or chord diagrams)."""
    if klass not in (BCR, CHORD):
        raise ValueError("chord relations are generated for %r or %r" % (BCR, CHORD))
    groups = {}
    for key, j, ckey, nu in _chord_instances(v, e, parity, klass):
        groups.setdefault(ckey, []).append((key, j, nu))
    rows = []
    for ckey in sorted(groups):
        inst = groups[ckey]
        for (k1, j1, nu1), (k2, j2, nu2) in combinations(inst, 2):
            tag = ("Chord", k1, j1, k2, j2)
            if nu1 is None or nu2 is None:
                for s in (1, -1):
                    row = vadd({k1: 1}, {k2: config.CHORD_ROW_SIGN * s})
                    if row:
                        rows.append((row, tag + (s,)))
            else:
                s = nu1 * nu2
                row = vadd({k1: 1}, {k2: config.CHORD_ROW_SIGN * s})
                if row:
                    rows.append((row, tag + (s,)))
    return rows


def resolution_step(g, e_idx):
    """kappa's one-step value T + U for the leg e_idx."""
    t, u = resolve_internal(g, e_idx)
    return vadd(canonical_vector(t), canonical_vector(u))


def gen_4t(v, e, parity):
    """4T rows: differences of the STU resolutions of one-internal graphs."""
    from .spaces import enumerate_basis
    rows = []
    for key in enumerate_basis((v, e, parity), BCR):
        g = decode(key)
        if sum(1 for k in g.kinds if k == INTERNAL) != 1:
            continue
        legs = resolvable_legs(g)
        for i, j in combinations(legs, 2):
            row = vadd(resolution_step(g, i), vscale(resolution_step(g, j), -1))
            if row:
                rows.append((row, ("4T", key, i, j)))
    return rows


GENERATORS = {
    "stu": lambda v, e, p: gen_stu(v, e, p),
    "ihx": lambda v, e, p: gen_ihx(v, e, p, BCR),
    "chord": lambda v, e, p: gen_chord(v, e, p, BCR),
    "4t": lambda v, e, p: gen_4t(v, e, p),
}
