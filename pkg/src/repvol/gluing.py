"""One-edged graph manifolds: exact volume values and filling estimates.

A one-edged graph manifold is glued from two pieces along a single torus,
with the sewing recorded by an integer matrix [[a, b], [c, d]] of
determinant -1 acting on section-fiber bases.  Two computations live
here.

When both pieces are Seifert (and b != 0, so the gluing is not itself
Seifert), passing to an n-fold covering that restricts to the q x q
characteristic covering over the torus produces volume values that depend
only on p = n / q^2 and on which entries of the matrix vanish:

    (i)   a = d = 0   ->  2 p        (times 4 pi^2)
    (ii)  a c != 0    ->  p / |ac|
    (iii) c d != 0    ->  p / |cd|
    (iv)  c = 0       ->  p / |b|

`graph_volume_values` returns every applicable case.  `case_ii_pipeline`
re-derives case (ii) by literally composing the covering construction:
fill the Seifert-side lifts, compute the Euler number of the filled
piece, apply the volume formula to the tuple n_i = 1, n = 0, add the
zero-volume piece, and divide by the covering degree |c|.  It exists as
an independent oracle for the closed form.

When one piece is hyperbolic, Dehn filling its cusp along a slope (a, c)
beyond a norm threshold keeps it hyperbolic, and the filled volume
admits a leading-order estimate through the cusp shape z0:

    length(gamma) ~ 2 pi Im(z0) / |a + z0 c|^2
    vol(filled)   ~ vol - (pi / 2) length(gamma)
    total         ~ n (vol - pi^2 Im(z0) / (q |a + z0 c|^2))

with corrections of order O(1/(a^4 + c^4)) that are reported as a textual
caveat, never as a number.  This side of the module works in double
precision; exactness is reserved for the Seifert-side coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .rep_volumes import VolumeValue, ehn_admissible, volume_of_tuple
from .seifert_core import SeifertInvariants

__all__ = [
    "GluingMatrix",
    "CoveringParameters",
    "HyperbolicPieceData",
    "FillingEstimate",
    "ERROR_ORDER_NOTE",
    "graph_volume_values",
    "case_ii_pipeline",
    "additivity",
    "geodesic_length_leading",
    "dehn_filling_volume_estimate",
    "filling_admissible",
]

_PI_SQUARED = math.pi * math.pi

ERROR_ORDER_NOTE = "O(1/(a^4+c^4)) uncontrolled"

_SEIFERT_GLUING_MSG = "Seifert gluing: not a one-edged graph manifold"
_THRESHOLD_MSG = (
    "slope below the Dehn-filling admissibility threshold: "
    "hyperbolic filling is not guaranteed"
)


@dataclass(frozen=True)
class GluingMatrix:
    """The sewing matrix [[a, b], [c, d]], constrained to determinant -1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != -1:
            raise ValueError("gluing matrix must have determinant -1")

    def inverse(self) -> "GluingMatrix":
        """The inverse sewing matrix [[-d, b], [c, -a]] (determinant -1 again)."""
        return GluingMatrix(-self.d, self.b, self.c, -self.a)


@dataclass(frozen=True)
class CoveringParameters:
    """Covering degree n and torus characteristic q, with n = p q^2.

    The quotient p = n / q^2 is the only combination the volume values
    depend on; it is computed and stored at construction, and n that is
    not divisible by q^2 is rejected.
    """

    n: int
    q: int
    p: int = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.q, int):
            raise ValueError("covering parameters must be integers")
        if self.n < 1 or self.q < 1:
            raise ValueError("covering parameters must be positive")
        if self.n % (self.q * self.q):
            raise ValueError("n must equal p*q^2")
        object.__setattr__(self, "p", self.n // (self.q * self.q))


@dataclass(frozen=True)
class HyperbolicPieceData:
    """Inputs describing a one-cusped hyperbolic piece.

    volume is the complete hyperbolic volume, cusp_modulus the shape z0
    of the cusp torus (Im z0 > 0), and threshold the norm bound beyond
    which a filling slope is accepted.  All three are user-supplied; this
    library never computes hyperbolic structures.
    """

    volume: float
    cusp_modulus: complex
    threshold: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "volume", float(self.volume))
        object.__setattr__(self, "cusp_modulus", complex(self.cusp_modulus))
        object.__setattr__(self, "threshold", float(self.threshold))
        if not self.volume >= 0:
            raise ValueError("volume must be non-negative")
        if not self.cusp_modulus.imag > 0:
            raise ValueError("cusp modulus must have positive imaginary part")
        if not self.threshold > 0:
            raise ValueError("threshold must be positive")


@dataclass(frozen=True)
class FillingEstimate:
    """Leading-order filling data; the dropped terms are named, not bounded."""

    length_gamma: float
    filled_volume_leading: float
    total_volume_leading: float
    error_order_note: str = ERROR_ORDER_NOTE

    def __post_init__(self) -> None:
        if not self.length_gamma > 0:
            raise ValueError("geodesic length must be positive")


def graph_volume_values(
    M: GluingMatrix, cov: CoveringParameters
) -> list[tuple[str, VolumeValue]]:
    """Every applicable closed-form volume value for the gluing M.

    The cases overlap (for instance ac != 0 and cd != 0 can hold at
    once); each applicable one is returned with its label, in the fixed
    order i, ii, iii, iv.  b = 0 is rejected: that gluing matrix produces
    a Seifert manifold, not a one-edged graph manifold.
    """
    if M.b == 0:
        raise ValueError(_SEIFERT_GLUING_MSG)
    p = cov.p
    out: list[tuple[str, VolumeValue]] = []
    if M.a == 0 and M.d == 0:
        out.append(("i", VolumeValue(Fraction(2 * p))))
    if M.a * M.c != 0:
        out.append(("ii", VolumeValue(Fraction(p, abs(M.a * M.c)))))
    if M.c * M.d != 0:
        out.append(("iii", VolumeValue(Fraction(p, abs(M.c * M.d)))))
    if M.c == 0:
        out.append(("iv", VolumeValue(Fraction(p, abs(M.b)))))
    return out


def case_ii_pipeline(a: int, c: int, p: int) -> VolumeValue:
    """Oracle for case (ii): rebuild p/|ac| from the covering construction.

    Filling the p lifted boundary tori of the covering piece along the
    lifted slope gives a Seifert space over a genus p+2 surface with p
    exceptional fibers contributing 1/a each to the Euler number.  The
    tuple n_i = 1, n = 0 is admissible there, its volume coefficient is
    |e| = p/|a|, the other piece contributes 0 through additivity, and
    dividing by the covering degree |c| lands on p/|ac|.
    """
    if a * c == 0:
        raise ValueError("case (ii) needs a*c != 0")
    if p < 1:
        raise ValueError("p must be a positive integer")
    filled = SeifertInvariants(
        genus=p + 2, fibers=((abs(a), 1 if a > 0 else -1),) * p
    )
    n_list = [1] * p
    if not ehn_admissible(filled.genus, n_list, 0, [abs(a)] * p):
        raise AssertionError("filled covering tuple must be admissible")
    covered = additivity(volume_of_tuple(filled, n_list, 0), VolumeValue(Fraction(0)))
    return VolumeValue(covered.coefficient / abs(c))


def additivity(vol_left, vol_right):
    """Volume of a gluing is the sum of the filled pieces' volumes.

    Two `VolumeValue` inputs are added exactly (coefficient arithmetic);
    any other mix of numbers is added in double precision.
    """
    if isinstance(vol_left, VolumeValue) and isinstance(vol_right, VolumeValue):
        return VolumeValue(vol_left.coefficient + vol_right.coefficient)
    left = vol_left.float_value if isinstance(vol_left, VolumeValue) else float(vol_left)
    right = vol_right.float_value if isinstance(vol_right, VolumeValue) else float(vol_right)
    return left + right


def _norm_squared(z0: complex, a: int, c: int) -> float:
    return (a + c * z0.real) ** 2 + (c * z0.imag) ** 2


def geodesic_length_leading(z0: complex, a: int, c: int) -> float:
    """Leading term 2 pi Im(z0) / |a + z0 c|^2 of the core geodesic length."""
    if a == 0 and c == 0:
        raise ValueError("slope (0, 0) is not a filling slope")
    z0 = complex(z0)
    if not z0.imag > 0:
        raise ValueError("cusp modulus must have positive imaginary part")
    return 2.0 * math.pi * z0.imag / _norm_squared(z0, a, c)


def filling_admissible(a: int, c: int, C: float) -> bool:
    """True when the slope norm sqrt(a^2 + c^2) exceeds the threshold C."""
    if not C > 0:
        raise ValueError("threshold must be positive")
    return math.hypot(a, c) > C


def dehn_filling_volume_estimate(
    H: HyperbolicPieceData, slope: tuple[int, int], cov: CoveringParameters
) -> FillingEstimate:
    """Leading-order volume data for filling H along slope, lifted n-fold.

    The total is n (vol - pi^2 Im(z0) / (q |a + z0 c|^2)); with q = 1 this
    is n times the filled piece's leading volume.  Slopes at or below the
    threshold are rejected outright rather than estimated.
    """
    a, c = slope
    if not filling_admissible(a, c, H.threshold):
        raise ValueError(_THRESHOLD_MSG)
    length = geodesic_length_leading(H.cusp_modulus, a, c)
    filled = H.volume - 0.5 * math.pi * length
    z0 = H.cusp_modulus
    total = cov.n * (H.volume - _PI_SQUARED * z0.imag / (cov.q * _norm_squared(z0, a, c)))
    return FillingEstimate(
        length_gamma=length,
        filled_volume_leading=filled,
        total_volume_leading=total,
    )
