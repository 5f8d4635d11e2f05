"""Exact bookkeeping for Seifert fibered spaces over closed orientable bases.

A closed orientable Seifert fibered space with orientable base is described
here by the genus g of the base surface together with an ordered list of
exceptional-fiber pairs (a_i, b_i), a_i >= 1.  Two rational invariants are
attached to this data:

* the Euler number e = sum b_i / a_i, the obstruction to a horizontal
  section of the fibration, and
* the orbifold Euler characteristic chi = 2 - 2g - sum (1 - 1/a_i) of the
  base 2-orbifold.

The pair of signs (e == 0?, sign of chi) determines which of the six
Seifert geometries the total space supports; `classify_geometry` encodes
that table.  Everything is computed with `fractions.Fraction`, so all
results are exact and equality is structural.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "SeifertInvariants",
    "GeometryClass",
    "euler_number",
    "orbifold_euler_characteristic",
    "normalize",
    "classify_geometry",
]

# Exact rational scalars are plain standard-library fractions: they are
# arbitrary precision, kept in lowest terms with a positive denominator by
# construction, and hash/compare structurally.
Rational = Fraction


class GeometryClass(enum.Enum):
    """The eight closed 3-manifold geometries, plus a non-geometric marker.

    Only six of these can arise for an orientable Seifert space over an
    orientable base; H3 and Sol are listed so that the label set is the
    full standard one, and NotApplicable covers non-geometric contexts
    such as nontrivial graph manifolds.
    """

    H3 = "H3"
    SL2R_TILDE = "SL2R-tilde"
    H2_X_R = "H2xR"
    SOL = "Sol"
    NIL = "Nil"
    EUCLIDEAN = "Euclidean"
    S3 = "S3"
    S2_X_R = "S2xR"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class SeifertInvariants:
    """Genus of the base surface plus the list of fiber pairs (a_i, b_i).

    The fiber list may be empty (a circle bundle over a closed surface).
    Pairs with a_i = 1 are allowed; they describe no orbifold singularity
    but still shift the Euler number by b_i.
    """

    genus: int
    fibers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError("genus must be a non-negative integer")
        fibers = tuple((int(a), int(b)) for a, b in self.fibers)
        for a, _ in fibers:
            if a < 1:
                raise ValueError("fiber orders a_i must be integers >= 1")
        object.__setattr__(self, "fibers", fibers)


def euler_number(S: SeifertInvariants) -> Fraction:
    """Euler number of the fibration, sum of b_i / a_i (0 for no fibers)."""
    total = Fraction(0)
    for a, b in S.fibers:
        total += Fraction(b, a)
    return total


def orbifold_euler_characteristic(S: SeifertInvariants) -> Fraction:
    """Orbifold Euler characteristic 2 - 2g - sum (1 - 1/a_i) of the base."""
    total = Fraction(2 - 2 * S.genus)
    for a, _ in S.fibers:
        total -= 1 - Fraction(1, a)
    return total


def normalize(S: SeifertInvariants) -> SeifertInvariants:
    """Drop order-1 fibers, folding their b_i into one trailing (1, sum) pair.

    The trailing pair is emitted only when the accumulated sum is nonzero,
    so the result carries no redundant entries.  Both rational invariants
    are unchanged.
    """
    kept = []
    spare = 0
    for a, b in S.fibers:
        if a == 1:
            spare += b
        else:
            kept.append((a, b))
    if spare != 0:
        kept.append((1, spare))
    return SeifertInvariants(S.genus, tuple(kept))


def classify_geometry(S: SeifertInvariants) -> GeometryClass:
    """Geometry of the total space from the signs of e and chi.

    The decision table for orientable Seifert spaces over orientable
    bases is standard:

    ==========  =========  ==============
    chi < 0     e != 0     SL2R-tilde
    chi < 0     e == 0     H2xR
    chi == 0    e != 0     Nil
    chi == 0    e == 0     Euclidean
    chi > 0     e != 0     S3
    chi > 0     e == 0     S2xR
    ==========  =========  ==============

    H3 and Sol never occur in this encoding.
    """
    e = euler_number(S)
    chi = orbifold_euler_characteristic(S)
    if chi < 0:
        return GeometryClass.SL2R_TILDE if e != 0 else GeometryClass.H2_X_R
    if chi == 0:
        return GeometryClass.NIL if e != 0 else GeometryClass.EUCLIDEAN
    return GeometryClass.S3 if e != 0 else GeometryClass.S2_X_R
