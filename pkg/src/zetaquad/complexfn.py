"""Branch-fixed complex elementary functions, the Gamma family, and Bernoulli numbers.

Every other module builds on the conventions fixed here:

* the principal argument lives in (-pi, pi], closed on top;
* complex powers are exp(k * principal_log(z));
* Bernoulli numbers use the B_1 = -1/2 sign convention.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "BranchedConstant",
    "BernoulliTable",
    "DomainError",
    "PoleError",
    "principal_log",
    "complex_pow",
    "gamma",
    "log_gamma",
    "bernoulli_numbers",
]

TWO_PI = 2.0 * math.pi

BERNOULLI_CAP = 200


class DomainError(ValueError):
    """Argument outside the domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


@dataclass(frozen=True)
class BranchedConstant:
    """A nonzero constant stored in polar form so its logarithm is branch-fixed.

    The logarithm is ln(r) + i*theta with theta kept in [0, 2*pi); it is
    never re-reduced to the principal sheet.
    """

    r: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        if not self.r > 0.0:
            raise DomainError(f"modulus must be positive, got {self.r}")
        if not 0.0 <= self.theta < TWO_PI:
            raise DomainError(f"argument must lie in [0, 2*pi), got {self.theta}")

    @property
    def log_value(self) -> complex:
        return complex(math.log(self.r), self.theta)

    @property
    def value(self) -> complex:
        return self.r * cmath.exp(1j * self.theta)


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0..B_n, B_1 = -1/2 convention."""

    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]


def principal_log(z: complex) -> complex:
    """ln|z| + i*Arg(z) with Arg in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise DomainError("log of zero")
    return cmath.log(z)


def complex_pow(z: complex, k: complex) -> complex:
    """z**k on the principal branch; 0**k = 0 when Re(k) > 0."""
    z = complex(z)
    k = complex(k)
    if z == 0:
        if k.real > 0.0:
            return 0j
        raise DomainError("0**k undefined for Re(k) <= 0")
    if k == 0:
        return 1.0 + 0j
    return cmath.exp(k * principal_log(z))


# Lanczos rational approximation, g = 671/128 (Numerical Recipes set);
# relative error around 1e-15 in the right half-plane.
_LANCZOS_G = 5.2421875
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_COF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_TWO_PI = 2.5066282746310005


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _lanczos_series(z: complex) -> complex:
    y = z
    ser = _LANCZOS_C0 + 0j
    for c in _LANCZOS_COF:
        y += 1
        ser += c / y
    return ser


def gamma(z: complex) -> complex:
    """Gamma(z); reflection formula for Re(z) < 1/2."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # keeps the rational approximation in its accurate half-plane
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    t = z + _LANCZOS_G
    ser = _lanczos_series(z)
    return cmath.exp((z + 0.5) * cmath.log(t) - t) * _SQRT_TWO_PI * ser / z


def log_gamma(z: complex) -> complex:
    """A branch of log Gamma continuous on the cut plane, real for z > 0."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma pole at z = {z}")
    shift = 0j
    while z.real < 1.5:
        shift += principal_log(z)
        z += 1
    t = z + _LANCZOS_G
    ser = _lanczos_series(z)
    return (z + 0.5) * cmath.log(t) - t + cmath.log(_SQRT_TWO_PI * ser / z) - shift


@lru_cache(maxsize=None)
def _bernoulli_fractions(n_max: int) -> tuple[Fraction, ...]:
    # defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(n):
            if b[j]:
                acc += math.comb(n + 1, j) * b[j]
        b.append(-acc / (n + 1))
    return tuple(b)


def bernoulli_numbers(n_max: int) -> BernoulliTable:
    """Table of B_0..B_{n_max} (B_1 = -1/2 convention)."""
    if not isinstance(n_max, int) or n_max < 1:
        raise DomainError("n_max must be a positive integer")
    if n_max > BERNOULLI_CAP:
        raise DomainError(f"n_max = {n_max} exceeds the cap of {BERNOULLI_CAP}")
    return BernoulliTable(tuple(float(x) for x in _bernoulli_fractions(n_max)))
