"""Formal Q-linear combinations of canonical classes.

A vector is a plain dict mapping canonical keys to nonzero Fractions; keys
whose class is Zero never appear.  Everything here is purely functional.
"""

from fractions import Fraction


def vzero():
    return {}


def vadd(*vs):
    out = {}
    for v in vs:
        for k, c in v.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def vscale(v, c):
    c = Fraction(c)
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def vsub(a, b):
    return vadd(a, vscale(b, -1))


def veq(a, b):
    return vsub(a, b) == {}


def vnormalize(v):
    """Scale-normalized copy: sorted support, positive leading coefficient,
    integer entries with content 1.  Used to deduplicate relation rows."""
    if not v:
        return ()
    items = sorted(v.items())
    lead = items[0][1]
    scaled = [(k, c / lead) for k, c in items]
    from math import gcd
    den = 1
    for _k, c in scaled:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [(k, int(c * den)) for k, c in scaled]
    g = 0
    for _k, c in ints:
        g = gcd(g, abs(c))
    return tuple((k, c // g) for k, c in ints)


def vstr(v):
    if not v:
        return "0"
    parts = []
    for k, c in sorted(v.items()):
        parts.append("%s * [%s]" % (c, k))
    return "  +  ".join(parts)
