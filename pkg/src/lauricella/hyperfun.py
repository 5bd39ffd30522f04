"""Gauss 2F1, Appell F1 and Lauricella FD evaluation.

Inside the polydisk (|x| <= 0.9) the functions are summed as power series;
everywhere else they are computed from the one-dimensional integral
representation

    Gamma(c)/(Gamma(a) Gamma(c-a)) * int_0^1 u**(a-1) (1-u)**(c-a-1)
        * prod_k (1 - x_k u)**(-b_k) du,

which also defines the continuation onto the cut [1, inf) as a side limit:
``side=BELOW`` is the limit from Im x < 0, in which case the vanishing factor
(1 - x u) crosses the negative axis from above (argument +pi).
"""

from __future__ import annotations

import cmath
import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import BranchSide, DEFAULT_SIDE, DomainError, gamma, principal_pow
from .quadrature import IntegrandSpec, integrate

__all__ = [
    "HyperSpec",
    "DEFAULT_QUAD_TOL",
    "appell_f1",
    "eulerian_a",
    "eulerian_b",
    "fd_order_reduce",
    "hyp2f1",
    "hyp2f1_series",
    "lauricella_fd",
    "pfaff_f1",
]

DEFAULT_QUAD_TOL = 1e-11
_SERIES_RADIUS = 0.9
_MAX_TERMS = 100_000


@dataclass(frozen=True)
class HyperSpec:
    """Parameter bundle (a; b_1..b_n; c | x_1..x_n) for an FD evaluation."""

    a: complex
    bs: tuple[complex, ...]
    c: complex
    xs: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "bs", tuple(complex(b) for b in self.bs))
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "xs", tuple(complex(x) for x in self.xs))
        if len(self.bs) != len(self.xs):
            raise DomainError("bs and xs must have equal length")
        if not self.bs:
            raise DomainError("need at least one (b, x) pair")
        c = self.c
        if abs(c.imag) < 1e-12 and round(c.real) <= 0 and abs(c.real - round(c.real)) < 1e-12:
            raise DomainError(f"c must not be a non-positive integer, got {c}")

    @property
    def order(self) -> int:
        return len(self.xs)


def _on_cut(x: complex) -> bool:
    return x.real > 1.0 and abs(x.imag) <= 1e-13 * (1.0 + x.real)


def _near_one(x: complex) -> bool:
    return abs(x - 1.0) < 1e-14


# ---------------------------------------------------------------------------
# series evaluation

def hyp2f1_series(a: complex, b: complex, c: complex, x: complex) -> complex:
    """Gauss series, valid for |x| <= 0.9."""
    a, b, c, x = complex(a), complex(b), complex(c), complex(x)
    if abs(x) > _SERIES_RADIUS + 1e-12:
        raise DomainError(f"series restricted to |x| <= {_SERIES_RADIUS}, got |x| = {abs(x)}")
    total = term = complex(1.0)
    small = 0
    for m in range(_MAX_TERMS):
        term = term * (a + m) * (b + m) / ((c + m) * (1 + m)) * x
        total += term
        if abs(term) < 1e-16 * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise DomainError("series did not converge within the term budget")


def _appell_series(a, b1, b2, c, x1, x2) -> complex:
    # row over m1 with an inner Gauss series in x2
    total = 0j
    row_coeff = complex(1.0)
    small = 0
    for m1 in range(2000):
        inner = hyp2f1_series(a + m1, b2, c + m1, x2)
        contribution = row_coeff * inner
        total += contribution
        if abs(contribution) < 1e-16 * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        row_coeff = row_coeff * (a + m1) * (b1 + m1) / ((c + m1) * (1 + m1)) * x1
    raise DomainError("Appell series did not converge within the term budget")


# ---------------------------------------------------------------------------
# Euler-integral evaluation

def _euler_integrand(
    a: complex,
    bs: Sequence[complex],
    c: complex,
    xs: Sequence[complex],
    side: BranchSide,
) -> IntegrandSpec:
    """Distance-aware integrand u**(a-1) (1-u)**(c-a-1) prod (1-x u)**(-b)."""
    am1 = a - 1.0
    cam1 = c - a - 1.0
    base_arg = math.pi if side is BranchSide.BELOW else -math.pi  # arg of 1-xu past the split

    cut: list[tuple[float, complex, complex]] = []    # (split, x_re, -b)
    plain: list[tuple[complex, complex]] = []         # (x, -b)
    for b, x in zip(bs, xs):
        if _on_cut(x):
            cut.append((1.0 / x.real, x.real, -b))
        else:
            plain.append((x, -b))
    splits = tuple(sorted(s for s, _, _ in cut if 0.0 < s < 1.0))
    boundaries = (0.0,) + splits + (1.0,)
    # phase of (negative base)**exponent for each cut factor
    phases = {s: cmath.exp(1j * base_arg * e) for s, _, e in cut}

    am1_real = am1.imag == 0.0
    cam1_real = cam1.imag == 0.0

    def g(u: float, d_lo: float, d_hi: float) -> complex:
        # locate the panel via its midpoint: u itself may have rounded onto a
        # shared boundary, the midpoint never does
        mid = u + 0.5 * (d_hi - d_lo)
        i = min(max(bisect_right(boundaries, mid), 1), len(boundaries) - 1)
        p_lo, p_hi = boundaries[i - 1], boundaries[i]
        val: complex = 1.0 + 0.0j

        base = d_lo if p_lo == 0.0 else u
        if am1 != 0.0:
            val *= math.pow(base, am1.real) if am1_real else cmath.exp(am1 * math.log(base))
        base = d_hi if p_hi == 1.0 else 1.0 - u
        if cam1 != 0.0:
            val *= math.pow(base, cam1.real) if cam1_real else cmath.exp(cam1 * math.log(base))

        for s, x_re, e in cut:
            if s >= p_hi:
                mag = x_re * d_hi if s == p_hi else 1.0 - x_re * u
                neg = False
            else:
                mag = x_re * d_lo if s == p_lo else x_re * u - 1.0
                neg = True
            piece = math.pow(mag, e.real) if e.imag == 0.0 else cmath.exp(e * math.log(mag))
            val *= piece * phases[s] if neg else piece
        for x, e in plain:
            val *= cmath.exp(e * cmath.log(1.0 - x * u))
        return val

    def f(u: float) -> complex:
        i = min(max(bisect_right(boundaries, u), 1), len(boundaries) - 1)
        return g(u, u - boundaries[i - 1], boundaries[i] - u)

    return IntegrandSpec(
        evaluator=f,
        interior_singularities=splits,
        endpoint_exponents=(max(am1.real, -0.999), max(cam1.real, -0.999)),
        distance_evaluator=g,
    )


def _euler_fd(
    a: complex,
    bs: Sequence[complex],
    c: complex,
    xs: Sequence[complex],
    side: BranchSide,
    quad_tol: float,
) -> complex:
    if not (c.real > a.real > 0.0):
        raise DomainError(
            f"integral path needs Re c > Re a > 0; got a = {a}, c = {c}"
        )
    for b, x in zip(bs, xs):
        if _on_cut(x) and b.real >= 1.0:
            raise DomainError(
                f"non-integrable split singularity: argument {x} on the cut with Re b = {b.real} >= 1"
            )
    spec = _euler_integrand(a, bs, c, xs, side)
    result = integrate(spec, 0.0, 1.0, quad_tol)
    return gamma(c) / (gamma(a) * gamma(c - a)) * result.value


# ---------------------------------------------------------------------------
# public evaluators

def hyp2f1(
    a: complex,
    b: complex,
    c: complex,
    x: complex,
    side: BranchSide = DEFAULT_SIDE,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> complex:
    """Gauss 2F1 with analytic continuation off the unit disk.

    Series for |x| <= 0.9; otherwise the integral representation, using
    whichever of the symmetric parameter orders (a,b) / (b,a) is admissible,
    with one Pfaff transformation attempted as a fallback.
    """
    a, b, c, x = complex(a), complex(b), complex(c), complex(x)
    if _near_one(x):
        raise DomainError("argument 1 is on the divergence boundary")
    if abs(x) <= _SERIES_RADIUS:
        return hyp2f1_series(a, b, c, x)
    on_cut = _on_cut(x)
    for a_int, b_pow in ((a, b), (b, a)):
        if c.real > a_int.real > 0.0 and not (on_cut and b_pow.real >= 1.0):
            return _euler_fd(a_int, [b_pow], c, [x], side, quad_tol)
    # Pfaff: 2F1(a,b;c|x) = (1-x)**(-a) 2F1(a, c-b; c | x/(x-1))
    x_t = x / (x - 1.0)
    if abs(x_t) <= _SERIES_RADIUS:
        pref = principal_pow(1.0 - x, -a, side.flipped() if on_cut else side)
        return pref * hyp2f1_series(a, c - b, c, x_t)
    raise DomainError(
        f"no admissible evaluation path for 2F1(a={a}, b={b}, c={c} | x={x})"
    )


def appell_f1(
    a: complex,
    b1: complex,
    b2: complex,
    c: complex,
    x1: complex,
    x2: complex,
    side: BranchSide = DEFAULT_SIDE,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> complex:
    """Appell F1, by double series inside the polydisk, else Euler integral."""
    a, b1, b2, c = complex(a), complex(b1), complex(b2), complex(c)
    x1, x2 = complex(x1), complex(x2)
    if _near_one(x1) or _near_one(x2):
        raise DomainError("argument 1 is on the divergence boundary")
    if max(abs(x1), abs(x2)) <= _SERIES_RADIUS:
        return _appell_series(a, b1, b2, c, x1, x2)
    if c.real > a.real > 0.0:
        return _euler_fd(a, [b1, b2], c, [x1, x2], side, quad_tol)
    spec, pref = pfaff_f1(a, b1, b2, c, x1, x2, side)
    if spec.c.real > spec.a.real > 0.0:
        return pref * _euler_fd(spec.a, spec.bs, spec.c, spec.xs, side, quad_tol)
    raise DomainError(f"no admissible evaluation path for F1(a={a}; {b1},{b2}; {c})")


def lauricella_fd(
    spec: HyperSpec,
    side: BranchSide = DEFAULT_SIDE,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> complex:
    """Lauricella FD of any order n >= 1 (n=1 is 2F1, n=2 is Appell F1).

    For n >= 3 the one-dimensional integral representation is always used;
    a Pfaff transformation is attempted when Re c > Re a > 0 fails.
    """
    if spec.order == 1:
        return hyp2f1(spec.a, spec.bs[0], spec.c, spec.xs[0], side, quad_tol)
    if spec.order == 2:
        return appell_f1(spec.a, spec.bs[0], spec.bs[1], spec.c, spec.xs[0], spec.xs[1], side, quad_tol)
    if any(_near_one(x) for x in spec.xs):
        raise DomainError("argument 1 is on the divergence boundary")
    if spec.c.real > spec.a.real > 0.0:
        return _euler_fd(spec.a, spec.bs, spec.c, spec.xs, side, quad_tol)
    transformed, pref = _pfaff_fd(spec, side)
    if transformed.c.real > transformed.a.real > 0.0:
        return pref * _euler_fd(
            transformed.a, transformed.bs, transformed.c, transformed.xs, side, quad_tol
        )
    raise DomainError(f"no admissible evaluation path for FD spec {spec}")


# ---------------------------------------------------------------------------
# transformations

def _pfaff_fd(spec: HyperSpec, side: BranchSide = DEFAULT_SIDE) -> tuple[HyperSpec, complex]:
    pref: complex = 1.0 + 0.0j
    new_xs = []
    for b, x in zip(spec.bs, spec.xs):
        if _near_one(x):
            raise DomainError("Pfaff transformation has a pole at argument 1")
        base_side = side.flipped() if _on_cut(x) else side
        pref *= principal_pow(1.0 - x, -b, base_side)
        new_xs.append(x / (x - 1.0))
    return HyperSpec(spec.c - spec.a, spec.bs, spec.c, tuple(new_xs)), pref


def pfaff_f1(
    a: complex,
    b1: complex,
    b2: complex,
    c: complex,
    x1: complex,
    x2: complex,
    side: BranchSide = DEFAULT_SIDE,
) -> tuple[HyperSpec, complex]:
    """First-degree transformation x -> x/(x-1) for Appell F1.

    Returns (transformed spec, prefactor) with
    F1(a; b1, b2; c | x1, x2) = prefactor * F1(transformed).
    """
    return _pfaff_fd(HyperSpec(a, (b1, b2), c, (x1, x2)), side)


def fd_order_reduce(spec: HyperSpec, side: BranchSide = DEFAULT_SIDE) -> tuple[HyperSpec, complex]:
    """Eliminate the last argument when c equals the sum of the b parameters.

    Returns (reduced spec, prefactor) with FD(spec) = prefactor * FD(reduced),
    the reduced arguments being (x_k - x_n)/(1 - x_n) and the prefactor
    (1 - x_n)**(-a).
    """
    if spec.order < 2:
        raise DomainError("order reduction needs at least two arguments")
    b_sum = sum(spec.bs)
    if abs(spec.c - b_sum) > 1e-12:
        raise DomainError(f"order reduction requires c = sum(bs); c = {spec.c}, sum = {b_sum}")
    x_n = spec.xs[-1]
    if _near_one(x_n):
        raise DomainError("cannot eliminate an argument equal to 1")
    base_side = side.flipped() if _on_cut(x_n) else side
    pref = principal_pow(1.0 - x_n, -spec.a, base_side)
    new_xs = tuple((x - x_n) / (1.0 - x_n) for x in spec.xs[:-1])
    return HyperSpec(spec.a, spec.bs[:-1], spec.c, new_xs), pref


# ---------------------------------------------------------------------------
# Eulerian integral closed forms

def eulerian_a(n: int, a: complex, b: complex) -> complex:
    """Closed form of int_0^1 t**(a-1) (1 - t**n)**(-b) dt."""
    a, b = complex(a), complex(b)
    if a.real <= 0.0 or b.real >= 1.0:
        raise DomainError(f"need Re a > 0 and Re b < 1, got a = {a}, b = {b}")
    return gamma(a / n) * gamma(1.0 - b) / (n * gamma(1.0 + a / n - b))


def eulerian_b(n: int, a: float, b: float) -> complex:
    """Closed form of int_0^inf t**(a-1) (1 + t**n)**(-b) dt."""
    if not (a > 0.0 and b > 0.0 and n * b > a):
        raise DomainError(f"need a > 0, b > 0, n b > a; got n = {n}, a = {a}, b = {b}")
    return gamma(a / n) * gamma((n * b - a) / n) / (n * gamma(b))
