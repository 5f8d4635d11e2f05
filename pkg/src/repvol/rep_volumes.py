"""The finite set of representation volumes of a Seifert fibered space.

For a closed Seifert fibered space N with positive base genus g and Euler
number e != 0, the nonzero volumes of representations of pi_1(N) into the
identity component of the isometry group of the SL2R-tilde geometry are
exactly the numbers

    (4 pi^2 / |e|) * (sum n_i / a_i - n)^2

taken over integer tuples (n; n_1, ..., n_s) satisfying the floor/ceiling
admissibility conditions

    sum floor(n_i / a_i) - n <= 2g - 2   and
    sum ceil(n_i / a_i)  - n >= 2 - 2g.

Both the conditions and the value depend on (n; n_i) only through the
residues r_i = n_i mod a_i and the shift m = sum floor(n_i / a_i) - n, so
the infinite tuple space collapses to the finite rectangle of classes
(r, m) with 2 - 2g - |{i : r_i != 0}| <= m <= 2g - 2.  `enumerate_volume_set`
walks that rectangle exactly; `brute_force_volume_set` is a deliberately
dumb search over raw tuples kept as an independent oracle.  Every distinct
value is reported once, together with a certificate tuple that witnesses
it and the exact rational data (zeta, z_i) of the underlying
representation shape.

All volume values are represented by their exact rational coefficient of
4 pi^2.  The value 0 (attained whenever sum n_i / a_i = n, in particular
by the all-zero tuple) is always included.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _backend
from .seifert_core import (
    GeometryClass,
    SeifertInvariants,
    classify_geometry,
    euler_number,
    orbifold_euler_characteristic,
)

__all__ = [
    "FOUR_PI_SQUARED",
    "AdmissibleTuple",
    "VolumeValue",
    "RepresentationCertificate",
    "ehn_admissible",
    "volume_of_tuple",
    "enumerate_volume_set",
    "max_volume",
    "brute_force_volume_set",
]

FOUR_PI_SQUARED = 4.0 * math.pi * math.pi

_POSITIVE_GENUS_MSG = "unsupported base: the volume set requires positive genus"
_ZERO_EULER_MSG = "not SL2R-tilde: volume formula undefined"

# Window multiplier for the oracle's raw tuple search: n_i ranges over
# [-_ORACLE_SPAN * a_i, _ORACLE_SPAN * a_i], enough to hit every residue
# with several floor values of each sign on both sides of it.
_ORACLE_SPAN = 2


@dataclass(frozen=True)
class AdmissibleTuple:
    """A residue/shift class (r, m): canonical coordinates of a tuple.

    residues holds r_i = n_i mod a_i and shift holds
    m = sum floor(n_i / a_i) - n.  For base genus g the class is
    admissible when 2 - 2g - |{i : r_i != 0}| <= m <= 2g - 2.
    """

    residues: tuple[int, ...]
    shift: int

    def admissible_for(self, genus: int) -> bool:
        nonzero = sum(1 for r in self.residues if r)
        return 2 - 2 * genus - nonzero <= self.shift <= 2 * genus - 2


@dataclass(frozen=True, order=True)
class VolumeValue:
    """An exact volume: rational coefficient q meaning q * 4 pi^2.

    float_value is a derived double-precision rendering of the actual
    volume; the coefficient is the authoritative datum.
    """

    coefficient: Fraction
    float_value: float = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if isinstance(self.coefficient, float):
            raise TypeError("coefficient must be exact (int or Fraction)")
        coefficient = Fraction(self.coefficient)
        if coefficient < 0:
            raise ValueError("volume coefficient must be non-negative")
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "float_value", float(coefficient) * FOUR_PI_SQUARED)


@dataclass(frozen=True)
class RepresentationCertificate:
    """Witness data (n; n_1..n_s) with its exact shape parameters.

    zeta = (sum n_i / a_i - n) / e and z_i = n_i / a_i - (b_i / a_i) zeta;
    these satisfy sum z_i = n, which is checked at construction.
    """

    n: int
    n_list: tuple[int, ...]
    zeta: Fraction
    z_list: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "n_list", tuple(self.n_list))
        object.__setattr__(self, "z_list", tuple(self.z_list))
        if sum(self.z_list, Fraction(0)) != self.n:
            raise ValueError("certificate inconsistent: sum of z_i must equal n")


def ehn_admissible(g: int, n_list: Sequence[int], n: int, a_list: Sequence[int]) -> bool:
    """Floor/ceiling admissibility of the tuple (n; n_1..n_s) at genus g.

    True iff sum floor(n_i / a_i) - n <= 2g - 2 and
    sum ceil(n_i / a_i) - n >= 2 - 2g.  Genus 0 is rejected: the
    characterization assumes a positive-genus base.
    """
    if g < 1:
        raise ValueError(_POSITIVE_GENUS_MSG)
    if len(n_list) != len(a_list):
        raise ValueError("n_list and a_list must have the same length")
    floors = 0
    ceils = 0
    for ni, ai in zip(n_list, a_list):
        if ai < 1:
            raise ValueError("fiber orders a_i must be integers >= 1")
        fl = ni // ai
        floors += fl
        ceils += fl + (1 if ni - fl * ai else 0)
    return floors - n <= 2 * g - 2 and ceils - n >= 2 - 2 * g


def volume_of_tuple(S: SeifertInvariants, n_list: Sequence[int], n: int) -> VolumeValue:
    """Exact volume (sum n_i / a_i - n)^2 / |e| of one admissible tuple.

    The caller is responsible for admissibility (see `ehn_admissible`);
    the value is computed for any tuple of the right length.
    """
    e = euler_number(S)
    if e == 0:
        raise ValueError(_ZERO_EULER_MSG)
    if len(n_list) != len(S.fibers):
        raise ValueError("n_list must have one entry per fiber")
    total = Fraction(-n)
    for ni, (ai, _) in zip(n_list, S.fibers):
        total += Fraction(ni, ai)
    return VolumeValue(total * total / abs(e))


def _scaled_setup(S: SeifertInvariants):
    a = tuple(ai for ai, _ in S.fibers)
    L = math.lcm(*a) if a else 1
    w = tuple(L // ai for ai in a)
    E = sum(bi * wi for (_, bi), wi in zip(S.fibers, w))
    return a, w, L, E


def _check_enumeration_preconditions(S: SeifertInvariants) -> None:
    if S.genus < 1:
        raise ValueError(_POSITIVE_GENUS_MSG)
    if euler_number(S) == 0:
        raise ValueError(_ZERO_EULER_MSG)


def enumerate_volume_set(
    S: SeifertInvariants,
) -> list[tuple[VolumeValue, RepresentationCertificate]]:
    """All attainable volumes, ascending, one certificate per value.

    Walks the finite rectangle of residue/shift classes.  Duplicate values
    arising from different classes are collapsed; the certificate kept for
    a value comes from its lexicographically smallest witness (r, m) and
    uses the tuple n_i = r_i, n = -m.
    """
    _check_enumeration_preconditions(S)
    a, w, L, E = _scaled_setup(S)
    classes = _backend.enumerate_classes(a, w, L, S.genus)
    denominator = L * abs(E)
    out = []
    for key in sorted(classes):
        residues, shift = classes[key]
        witness = AdmissibleTuple(tuple(residues), shift)
        assert witness.admissible_for(S.genus)
        value = VolumeValue(Fraction(key * key, denominator))
        t_signed = sum(ri * wi for ri, wi in zip(witness.residues, w)) + shift * L
        zeta = Fraction(t_signed, E)
        z_list = tuple(
            Fraction(ri, ai) - Fraction(bi, ai) * zeta
            for ri, (ai, bi) in zip(witness.residues, S.fibers)
        )
        certificate = RepresentationCertificate(
            n=-shift, n_list=witness.residues, zeta=zeta, z_list=z_list
        )
        out.append((value, certificate))
    return out


def max_volume(S: SeifertInvariants) -> VolumeValue:
    """The largest attainable volume, chi^2 / |e| as a coefficient of 4 pi^2."""
    geometry = classify_geometry(S)
    if geometry is not GeometryClass.SL2R_TILDE:
        raise ValueError(
            "maximal volume requires SL2R-tilde geometry (e != 0 and chi < 0); "
            f"got {geometry.value}"
        )
    chi = orbifold_euler_characteristic(S)
    return VolumeValue(chi * chi / abs(euler_number(S)))


def brute_force_volume_set(S: SeifertInvariants) -> list[VolumeValue]:
    """Oracle: the volume set recomputed by a raw search over tuples.

    Iterates n_i over [-2 a_i, 2 a_i] and n over the window the
    floor/ceiling conditions allow, keeping every admissible tuple's
    value.  The window covers every residue/shift class (with plenty of
    redundant representatives), so the result must equal the value list
    of `enumerate_volume_set`; the redundancy is the point, as it
    exercises the floor/ceiling logic away from the canonical
    representatives.
    """
    _check_enumeration_preconditions(S)
    a, w, L, E = _scaled_setup(S)
    keys = _backend.brute_force_classes(a, w, L, S.genus, _ORACLE_SPAN)
    e_abs = abs(Fraction(E, L))
    return [VolumeValue(Fraction(k, L) ** 2 / e_abs) for k in sorted(keys)]
