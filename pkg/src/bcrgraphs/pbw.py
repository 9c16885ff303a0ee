"""The maps between the graph spaces: chi, sigma, iota, kappa.

sigma is the inductive left inverse of the inclusion of hairy graphs: on a
hairy class it is the projection to the IHX quotient, and otherwise

    sigma(D) = 1/|S_k(D)| * sum_{pi in S_k(D)} sigma(Gamma_D(pi)),

where S_k(D) is the group of leg permutations preserving solid components
and Gamma_D(pi) = sum_l S_{i_l} U_{i_{l+1}} ... U_{i_n} D for any word
U_{i_1} ... U_{i_n} representing pi (bubble-sort words by default; the value
is word-independent, which the verification suites check).  Signs follow
pi D = sign(pi) (pi D)_u throughout.

kappa resolves internal vertices one at a time; each step replaces a graph
by T + U, the two reattachments of the resolved vertex's free darts.  The
result is a chord-diagram vector, well defined up to 4T relations.
"""

import random
from fractions import Fraction
from itertools import permutations, product

from .canon import canonical_vector, decode
from .graphs import INTERNAL, is_hairy, is_chord, solid_components, graph_class_of, HAIRY, CHORD
from .linalg import normal_form
from .moves import merge_pair, swap_legs, resolvable_legs, resolve_internal
from .spaces import space_relations
from .vectors import vadd, vscale

_SIGMA = {}
_KAPPA = {}


def chi(vec):
    """Inclusion of hairy-graph vectors into BCR-graph vectors."""
    for k in vec:
        if graph_class_of(decode(k)) != HAIRY:
            raise ValueError("chi expects hairy keys, got %s" % k)
    return dict(vec)


def iota(vec):
    """Inclusion of chord-diagram vectors into BCR-graph vectors."""
    for k in vec:
        if not is_chord(decode(k)):
            raise ValueError("iota expects chord-diagram keys, got %s" % k)
    return dict(vec)


def word_for(perm):
    """A bubble-sort word for the position permutation (leg j -> perm[j]).

    Applying the returned transpositions right to left to the identity
    arrangement realizes the permutation.
    """
    n = len(perm)
    target = [0] * n
    for j, p in enumerate(perm):
        target[p] = j
    arr = list(target)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i)
                changed = True
    return word


def component_words(g, pis):
    """Translate per-component position permutations into one vertex-pair word."""
    comps = solid_components(g)
    if len(pis) != len(comps):
        raise ValueError("need one permutation per solid component")
    word = []
    for comp, pi in zip(comps, pis):
        if sorted(pi) != list(range(len(comp))):
            raise ValueError("not a permutation of the component positions")
        for i in word_for(tuple(pi)):
            word.append((comp[i], comp[i + 1]))
    return word


def gamma(g, word):
    """Gamma_D of the word: sum_l +- canon(S_{i_l} (U_{i_{l+1}}..U_{i_n} D)_u)."""
    terms = {}
    x = g
    n = len(word)
    for l in range(n - 1, -1, -1):
        a, b = word[l]
        coeff = -1 if (n - 1 - l) % 2 else 1
        terms = vadd(terms, canonical_vector(merge_pair(x, a, b), coeff))
        x = swap_legs(x, a, b)
    return terms


def _nf_b(vec):
    if not vec:
        return {}
    g = decode(next(iter(vec)))
    rs = space_relations("B", (g.n, g.m, g.parity))
    return normal_form(vec, rs)


def sigma_key(key):
    """sigma of a single canonical class, as a reduced hairy vector."""
    hit = _SIGMA.get(key)
    if hit is not None:
        return hit
    g = decode(key)
    if is_hairy(g):
        out = _nf_b({key: Fraction(1)})
        _SIGMA[key] = out
        return out
    comps = solid_components(g)
    acc = {}
    count = 0
    for pis in product(*(permutations(range(len(c))) for c in comps)):
        count += 1
        word = component_words(g, pis)
        acc = vadd(acc, sigma(gamma(g, word)))
    out = vscale(acc, Fraction(1, count))
    _SIGMA[key] = out
    return out


def sigma(vec_or_graph):
    """sigma extended by linearity; accepts a Graph or a vector."""
    if hasattr(vec_or_graph, "edges"):
        vec = canonical_vector(vec_or_graph)
    else:
        vec = vec_or_graph
    out = {}
    for k, c in vec.items():
        out = vadd(out, vscale(sigma_key(k), c))
    return out


def _pick_leg(legs, key, strategy):
    if strategy == "min":
        return min(legs)
    if strategy == "max":
        return max(legs)
    if strategy.startswith("seed:"):
        rng = random.Random((strategy, key))
        return rng.choice(sorted(legs))
    raise ValueError("unknown strategy %r" % strategy)


def kappa_key(key, strategy="min"):
    hit = _KAPPA.get((key, strategy))
    if hit is not None:
        return hit
    g = decode(key)
    if INTERNAL not in g.kinds:
        out = {key: Fraction(1)}
    else:
        legs = resolvable_legs(g)
        e = _pick_leg(legs, key, strategy)
        t, u = resolve_internal(g, e)
        out = vadd(
            kappa(canonical_vector(t), strategy),
            kappa(canonical_vector(u), strategy),
        )
    _KAPPA[(key, strategy)] = out
    return out


def kappa(vec_or_graph, strategy="min"):
    """Resolve a BCR vector into a chord-diagram vector by repeated STU.

    The leg-selection policy is "min" (smallest canonical edge label),
    "max", or "seed:N" for a deterministic seeded choice; the results of any
    two policies differ by 4T relations.
    """
    if hasattr(vec_or_graph, "edges"):
        vec = canonical_vector(vec_or_graph)
    else:
        vec = vec_or_graph
    out = {}
    for k, c in vec.items():
        out = vadd(out, vscale(kappa_key(k, strategy), c))
    return out


def cache_clear():
    _SIGMA.clear()
    _KAPPA.clear()
