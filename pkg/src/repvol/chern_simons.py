"""Chern-Simons values: conversions to volume and the cs* calculus.

Chern-Simons invariants of flat connections are only defined modulo
integers, so comparisons are done through the exponential

    cs*(c) = e^{2 i pi c},

which kills the ambiguity.  Two conversion rules tie cs to volume: for
the Seifert-side geometry cs = (2/3) vol, and for a hyperbolic manifold
the volume sits in the imaginary part, vol = -pi^2 Im(cs); the real part
carries no geometric meaning here and is passed through untouched.

On a torus boundary the holonomy is described by a pair (alpha, beta),
and cs* obeys three rules implemented below: half-period shifts of alpha
or beta multiply it by e^{-4 i pi beta} or e^{4 i pi alpha}, the solid
torus with holonomy (1/2, beta) has cs* = e^{-4 i pi beta}, and
deforming along a path of boundary holonomies transports cs* by
e^{-8 i pi integral(alpha beta' - beta alpha')}.  The transport integral
is evaluated by the trapezoid rule on caller-supplied samples (for the
bilinear integrand, each straight segment contributes exactly
alpha0 beta1 - alpha1 beta0); sampling density is the caller's
responsibility.  Gluing two pieces multiplies their cs* values.

Phase factors e^{2 i pi x} are computed through a helper that reduces x
mod 1 first and returns exact unit values at quarter periods when x is
given exactly (int, Fraction, or a float that is exactly a multiple of
1/4), so identities like cs*(1) = 1 and e^{-4 i pi / 4} = -1 hold with no
rounding at all.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BoundaryHolonomy",
    "CsStar",
    "seifert_cs_from_volume",
    "hyperbolic_volume_from_cs",
    "cs_star",
    "shift_half_alpha",
    "shift_half_beta",
    "solid_torus_cs_star",
    "path_cs_transport",
    "cs_star_multiply",
]

_TWO_PI = 2.0 * math.pi
_PI_SQUARED = math.pi * math.pi

_QUARTER_TURNS = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): -1j,
}


@dataclass(frozen=True)
class BoundaryHolonomy:
    """Normal-form parameters (alpha, beta) of a torus boundary holonomy."""

    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))


@dataclass(frozen=True)
class CsStar:
    """The exponentiated invariant e^{2 i pi cs}; never zero."""

    value: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", complex(self.value))
        if self.value == 0:
            raise ValueError("cs* is a nonzero complex number")


def _cis(x):
    """e^{2 pi i x} with the periodic part reduced mod 1 before exponentiating.

    Quarter-period reduced arguments give exact unit values.  Accepts
    int, Fraction, float, or complex (the imaginary part contributes the
    magnitude e^{-2 pi Im x}).
    """
    if isinstance(x, complex):
        periodic, im = x.real, x.imag
    else:
        periodic, im = x, 0.0
    if isinstance(periodic, (int, Fraction)):
        reduced = Fraction(periodic) % 1
    else:
        reduced = periodic - math.floor(periodic)
    unit = _QUARTER_TURNS.get(reduced)
    if unit is None:
        unit = cmath.exp(_TWO_PI * 1j * float(reduced))
    if im:
        unit = unit * math.exp(-_TWO_PI * im)
    return unit


def seifert_cs_from_volume(v):
    """cs = (2/3) vol for the Seifert-side geometry; exact on exact input."""
    if isinstance(v, (int, Fraction)):
        return Fraction(2, 3) * v
    return 2.0 * v / 3.0


def hyperbolic_volume_from_cs(cs) -> float:
    """vol = -pi^2 Im(cs); the real part of cs is ignored."""
    return -_PI_SQUARED * complex(cs).imag + 0.0


def cs_star(cs) -> CsStar:
    """cs*(c) = e^{2 i pi c}, invariant under integer shifts of c."""
    return CsStar(_cis(cs))


def shift_half_alpha(s: CsStar, beta) -> CsStar:
    """cs* after shifting alpha by 1/2: multiply by e^{-4 i pi beta}."""
    return CsStar(s.value * _cis(-2 * beta))


def shift_half_beta(s: CsStar, alpha) -> CsStar:
    """cs* after shifting beta by 1/2: multiply by e^{4 i pi alpha}."""
    return CsStar(s.value * _cis(2 * alpha))


def solid_torus_cs_star(beta) -> CsStar:
    """cs* of the solid torus with boundary holonomy (1/2, beta)."""
    return CsStar(_cis(-2 * beta))


def path_cs_transport(s0: CsStar, path) -> CsStar:
    """Transport cs* along a sampled path of boundary holonomies.

    path is an ordered sequence of at least two samples, each either a
    `BoundaryHolonomy` or a plain (alpha, beta) pair.  The transport
    factor is e^{-8 i pi I} with I the trapezoid-rule value of
    integral(alpha beta' - beta alpha') dt on the sampled polyline.
    """
    points = []
    for sample in path:
        if isinstance(sample, BoundaryHolonomy):
            points.append((sample.alpha, sample.beta))
        else:
            alpha, beta = sample
            points.append((complex(alpha), complex(beta)))
    if len(points) < 2:
        raise ValueError("path transport needs at least 2 samples")
    integral = 0j
    for (a0, b0), (a1, b1) in zip(points, points[1:]):
        integral += a0 * b1 - a1 * b0
    return CsStar(s0.value * cmath.exp(-8j * math.pi * integral))


def cs_star_multiply(s1: CsStar, s2: CsStar) -> CsStar:
    """cs* of a union of pieces is the product of the pieces' cs* values."""
    return CsStar(s1.value * s2.value)
