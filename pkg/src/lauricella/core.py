"""Complex scalar kernel: Gamma, Pochhammer, branch-aware powers and root families.

All values are plain Python ``complex`` (a pair of binary64 reals).  Returned
values are always finite; domain problems raise instead of propagating NaN.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

__all__ = [
    "BranchSide",
    "DEFAULT_SIDE",
    "DomainError",
    "GammaPoleError",
    "gamma",
    "pochhammer",
    "principal_pow",
    "roots_of_unity",
    "unit_partition_roots",
]


class BranchSide(Enum):
    """Which side of the cut (-inf, 0] a logarithm limit is taken on."""

    ABOVE = "above"
    BELOW = "below"

    def flipped(self) -> "BranchSide":
        return BranchSide.ABOVE if self is BranchSide.BELOW else BranchSide.BELOW


# Library-wide continuation convention for function arguments approaching the
# cut [1, inf): the limit is taken from Im x < 0.  Calibrated once against the
# catalog entry "enu5-1", whose closed form (1-i)/2 * K(1/sqrt(2)) has negative
# imaginary part, and frozen here.
DEFAULT_SIDE = BranchSide.BELOW


class GammaPoleError(ValueError):
    """Gamma evaluated at (or within 1e-12 of) a non-positive integer."""


class DomainError(ValueError):
    """Argument outside the operation's domain."""


# Rational-series coefficients (g = 607/128, 15 terms), good to ~1e-15
# relative on the right half plane in double precision.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
)

_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _sin_pi(z: complex) -> complex:
    # reduce by the nearest integer first: z - n is exact, so sin(pi z) keeps
    # full relative precision even for large |Re z|
    n = round(z.real)
    value = cmath.sin(cmath.pi * (z - n))
    return -value if n % 2 else value


def gamma(z: complex) -> complex:
    """Gamma function for complex arguments.

    Uses a fixed published rational-series approximation on Re z >= 1/2 and
    the reflection formula elsewhere.  Raises :class:`GammaPoleError` within
    1e-12 of a non-positive integer.
    """
    z = complex(z)
    if abs(z.imag) < 1e-12:
        nearest = round(z.real)
        if nearest <= 0 and abs(z.real - nearest) < 1e-12:
            raise GammaPoleError(f"gamma pole near z = {nearest}: z = {z}")
    if z.real < 0.5:
        # gamma(z) gamma(1-z) = pi / sin(pi z)
        return cmath.pi / (_sin_pi(z) * gamma(1.0 - z))
    zz = z - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    value = _SQRT_2PI * t ** (zz + 0.5) * cmath.exp(-t) * acc
    if z.imag == 0.0:
        return complex(value.real, 0.0)
    return value


def pochhammer(a: complex, m: int) -> complex:
    """Rising factorial a (a+1) ... (a+m-1), by direct product."""
    if m < 0:
        raise DomainError(f"pochhammer needs m >= 0, got {m}")
    value = complex(1.0, 0.0)
    a = complex(a)
    for k in range(m):
        value *= a + k
    return value


def principal_pow(base: complex, exponent: complex, side: BranchSide = DEFAULT_SIDE) -> complex:
    """base**exponent with the principal logarithm.

    When ``base`` lies on the cut (-inf, 0], the argument is taken as +pi for
    ``side=ABOVE`` and -pi for ``side=BELOW``.
    """
    base = complex(base)
    exponent = complex(exponent)
    if exponent == 0:
        return complex(1.0, 0.0)
    if base == 0:
        if exponent.real > 0 and exponent.imag == 0:
            return complex(0.0, 0.0)
        raise DomainError("0 cannot be raised to an exponent with Re <= 0")
    if exponent == 1:
        return base
    if base.imag == 0.0 and base.real < 0.0:
        arg = math.pi if side is BranchSide.ABOVE else -math.pi
        log = complex(math.log(-base.real), arg)
        return cmath.exp(exponent * log)
    return cmath.exp(exponent * cmath.log(base))


def _snap(value: float) -> float:
    return 0.0 if abs(value) < 1e-15 else value


def roots_of_unity(n: int) -> list[complex]:
    """The n-th roots of unity except 1, as exp(2 pi i k / n), k = 1..n-1."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    out = []
    for k in range(1, n):
        angle = 2.0 * math.pi * k / n
        out.append(complex(_snap(math.cos(angle)), _snap(math.sin(angle))))
    return out


def unit_partition_roots(n: int) -> list[complex]:
    """Reciprocals of the roots of u**n + (1-u)**n = 0, in ascending index order.

    Each returned value is 1 + cos((2k-1) pi / n) + i sin((2k-1) pi / n) for
    k = 1..n; when n is odd the index k = (n+1)/2 is skipped (the polynomial
    drops to degree n-1), so the list has length n for even n and n-1 for odd.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    skip = (n + 1) // 2 if n % 2 == 1 else None
    out = []
    for k in range(1, n + 1):
        if k == skip:
            continue
        angle = (2 * k - 1) * math.pi / n
        out.append(complex(1.0 + _snap(math.cos(angle)), _snap(math.sin(angle))))
    return out
