"""Global configuration: enumeration caps and reconstructed sign conventions.

The two figure-reconstruction constants below are deliberately isolated so
they can be flipped globally.  Their current values are the ones under which
the whole verification suite (sigma relations, IHX-in-STU witnesses, kappa
chord-relation preservation) passes; flipping either one makes those suites
fail, which is exactly the gate they were chosen by.
"""

# Hard ceiling for basis enumeration.  Components beyond this raise
# CapsExceeded instead of silently grinding.
MAX_VERTICES = 10
MAX_EDGES = 10

# Sign of the second term in a chord-relation row  canon(D1) + s * canon(D2)
# (relative orientations already matched through the contraction signs).
CHORD_ROW_SIGN = 1

# Sign of the two rewired terms in an IHX row  canon(G) + s*(canon(H) + canon(X)).
# The symmetric form is forced by well-definedness (the two rewirings are not
# ordered); +1 is the value under which every IHX row is a sum of STU rows.
IHX_SIGN = 1

# Odd-case orientation bookkeeping: the sign relating two colorings is
# parity(vertex relabelling) * (-1)**(number of edge-orientation reversals).
ODD_SIGN_CONVENTION = "vertex-parity * (-1)^reversals"


class CapsExceeded(ValueError):
    """A graded component outside the configured enumeration caps."""


def check_caps(vertices, edges):
    if vertices > MAX_VERTICES or edges > MAX_EDGES:
        raise CapsExceeded(
            "component (V=%d, E=%d) exceeds caps (V<=%d, E<=%d)"
            % (vertices, edges, MAX_VERTICES, MAX_EDGES)
        )


def header(parity, max_vertices=None, max_edges=None):
    """Self-describing header carried by every table and report."""
    h = {
        "format_version": 1,
        "parity": parity,
        "chord_row_sign": CHORD_ROW_SIGN,
        "ihx_sign": IHX_SIGN,
        "odd_sign_convention": ODD_SIGN_CONVENTION,
    }
    if max_vertices is not None:
        h["caps"] = {"max_vertices": max_vertices, "max_edges": max_edges}
    return h
