"""Bundled reference tables.

Comparison targets only: every value here is transcribed data, never computed.
The checks recompute each quantity independently and diff against these
tables, so a mismatch is reported as a finding about the table, not patched
over.  Keys follow the historical labels used by the bundled tables.

Polynomial values are GPoly dicts {(p, q, i, j): Fraction} for the monomial
a1^p a3^q s^i t^j, the same encoding the algebroid layer uses.
"""

from fractions import Fraction
from typing import Dict, Tuple

GPoly = Dict[Tuple[int, int, int, int], Fraction]


def _gp(*terms) -> GPoly:
    # terms: (num, den, p, q, i, j)
    out: GPoly = {}
    for num, den, p, q, i, j in terms:
        out[(p, q, i, j)] = Fraction(num, den)
    return out


# Right unit on the base ring generators.
ETA_R_DISPLAYS: Dict[str, GPoly] = {
    "a1": _gp((1, 1, 1, 0, 0, 0), (2, 1, 0, 0, 1, 0)),
    "a3": _gp(
        (1, 1, 0, 1, 0, 0),
        (1, 3, 1, 0, 2, 0),
        (1, 3, 2, 0, 1, 0),
        (2, 1, 0, 0, 0, 1),
    ),
}

# res(tr(s^i t^j)) for the six basis monomials with transfer of filtration
# zero, keyed by (i, j).
RES_TR_DISPLAYS: Dict[Tuple[int, int], GPoly] = {
    (2, 0): _gp(
        (1, 1, 2, 0, 0, 0),
        (2, 1, 1, 0, 1, 0),
        (2, 1, 0, 0, 2, 0),
    ),
    (3, 0): _gp(
        (-1, 1, 3, 0, 0, 0),
        (-3, 1, 2, 0, 1, 0),
        (-3, 1, 1, 0, 2, 0),
    ),
    (0, 1): _gp(
        (-1, 1, 0, 1, 0, 0),
        (-1, 3, 2, 0, 1, 0),
        (-1, 3, 1, 0, 2, 0),
    ),
    (1, 1): _gp(
        (1, 1, 1, 1, 0, 0),
        (1, 3, 3, 0, 1, 0),
        (1, 1, 0, 1, 1, 0),
        (2, 3, 2, 0, 2, 0),
        (1, 3, 1, 0, 3, 0),
        (1, 1, 1, 0, 0, 1),
        (2, 1, 0, 0, 1, 1),
    ),
    (2, 1): _gp(
        (-1, 1, 2, 1, 0, 0),
        (-1, 3, 4, 0, 1, 0),
        (-3, 1, 1, 1, 1, 0),
        (-1, 1, 3, 0, 2, 0),
        (-1, 1, 0, 1, 2, 0),
        (-2, 3, 2, 0, 3, 0),
        (-2, 1, 2, 0, 0, 1),
        (-4, 1, 1, 0, 1, 1),
    ),
    (3, 1): _gp(
        (1, 1, 3, 1, 0, 0),
        (1, 3, 5, 0, 1, 0),
        (6, 1, 2, 1, 1, 0),
        (4, 3, 4, 0, 2, 0),
        (4, 1, 1, 1, 2, 0),
        (1, 1, 3, 0, 3, 0),
        (1, 1, 0, 1, 3, 0),
        (4, 1, 3, 0, 0, 1),
        (10, 1, 2, 0, 1, 1),
        (5, 1, 1, 0, 2, 1),
        (2, 1, 0, 0, 3, 1),
    ),
}

# The module generators realized as elements of the algebroid.
REALIZATION_DISPLAYS: Dict[str, GPoly] = {
    "e4": _gp((2, 1, 0, 0, 2, 0), (2, 1, 1, 0, 1, 0)),
    "e6": _gp((1, 1, 2, 0, 1, 0), (1, 1, 1, 0, 2, 0)),
    "e8": _gp(
        (2, 1, 0, 0, 1, 1),
        (1, 1, 1, 0, 0, 1),
        (1, 1, 0, 1, 1, 0),
        (1, 3, 2, 0, 2, 0),
        (1, 3, 1, 0, 3, 0),
    ),
    "e10": _gp((1, 1, 1, 1, 1, 0), (1, 1, 0, 1, 2, 0)),
    "e12": _gp(
        (2, 1, 0, 0, 3, 1),
        (-1, 1, 2, 1, 1, 0),
        (1, 1, 0, 1, 3, 0),
        (1, 1, 3, 0, 0, 1),
        (4, 1, 2, 0, 1, 1),
        (5, 1, 1, 0, 2, 1),
    ),
}

# Coaction values as tuples of (generator, left tensor factor).  The term
# ("one", f) encodes f (x) 1; the table's "e_i (x) 1" summand therefore
# appears as ("one", REALIZATION_DISPLAYS[e_i]) since the module embeds in
# the algebroid by those realizations.
COACTION_DISPLAYS: Dict[str, Tuple[Tuple[str, GPoly], ...]] = {
    "e4": (
        ("one", REALIZATION_DISPLAYS["e4"]),
        ("e4", _gp((1, 1, 0, 0, 0, 0))),
    ),
    "e6": (
        ("one", REALIZATION_DISPLAYS["e6"]),
        ("e4", _gp((-1, 1, 0, 0, 1, 0))),
        ("e6", _gp((1, 1, 0, 0, 0, 0))),
    ),
    "e8": (
        ("one", REALIZATION_DISPLAYS["e8"]),
        ("e4", _gp((-1, 3, 0, 0, 2, 0))),
        ("e6", _gp((2, 1, 0, 0, 1, 0))),
        ("e8", _gp((1, 1, 0, 0, 0, 0))),
    ),
    "e10": (
        ("one", REALIZATION_DISPLAYS["e10"]),
        ("e4", _gp((1, 1, 0, 0, 0, 1), (-1, 3, 0, 0, 3, 0))),
        ("e6", _gp((1, 1, 0, 0, 2, 0), (-1, 3, 1, 0, 1, 0))),
        ("e10", _gp((1, 1, 0, 0, 0, 0))),
    ),
    "e12": (
        ("one", REALIZATION_DISPLAYS["e12"]),
        ("e4", _gp(
            (1, 1, 1, 0, 3, 0),
            (-3, 1, 0, 1, 1, 0),
            (-3, 1, 1, 0, 0, 1),
            (-11, 1, 0, 0, 1, 1),
        )),
        ("e6", _gp(
            (5, 1, 0, 0, 0, 1),
            (44, 9, 0, 0, 3, 0),
            (16, 9, 1, 0, 2, 0),
            (2, 3, 2, 0, 1, 0),
        )),
        ("e8", _gp((3, 1, 0, 0, 2, 0), (3, 1, 1, 0, 1, 0))),
        ("e10", _gp((5, 1, 0, 0, 1, 0))),
        ("e12", _gp((1, 1, 0, 0, 0, 0))),
    ),
}

# Generating sets the bundled fourth-page table lists for the two bidegrees
# feeding the survival argument, written in the generators of the fourth
# page presentation used here (t1sq is the square of the degree-(1,1,1)
# class, so the table's "t1^4" reads t1sq^2).  The listed sets are larger
# than the computed groups; the checks report the rank differences.
CLAIMED_FOURTH_PAGE: Dict[Tuple[int, int, int], Tuple[str, ...]] = {
    (10, 0, -6): ("m1*t1sq*w*v1^2", "t2*w*v1^2", "m1^3*w*v1^2"),
    (10, 0, -10): ("m1*t1sq^2", "m1^3*t1sq", "m1^2*t2", "m1^5", "t1sq*t2"),
}

# Classes the same table asserts support a d7; the first is the asserted
# marker the survival check discloses (the Leibniz value computed here is
# zero because the product lands on a multiple of a*v1).
CLAIMED_D7_SUPPORTS: Tuple[str, ...] = ("t2*w*v1^2", "t1sq*t2")

# The permanent cycle whose survival the window check certifies, and the
# degree it lives in.
SURVIVAL_TARGET = ("a^5*w*v3", (9, 0, 5))
