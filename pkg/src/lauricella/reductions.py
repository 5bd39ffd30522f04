"""Hyperelliptic-to-elliptic reduction checks by quadrature of both sides.

Each record holds the two definite integrals of one classical reduction (plus
the rational substitution behind it) and, where available, the closed-form
value both sides must equal.  Verification integrates both sides numerically
and never relies on the substitution algebra itself.
"""

from __future__ import annotations

import fnmatch
import math
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .core import gamma
from .elliptic import (
    MODULUS_HERMITE_QUARTIC,
    MODULUS_INV_SQRT2,
    MODULUS_SERRET_CUBIC,
    complete_k,
    incomplete_f,
)
from .hyperfun import HyperSpec, lauricella_fd
from .identities import EvalReport
from .quadrature import IntegrandSpec, integrate, integrate_semi_infinite

__all__ = [
    "IntegralSide",
    "ReductionRecord",
    "check_reduction",
    "check_all_reductions",
    "reduction_registry",
    "representation_formulas_check",
    "substitution_errors",
]

FINITE_QUAD_TOL = 1e-11
SEMI_QUAD_TOL = 1e-9


@dataclass(frozen=True)
class IntegralSide:
    spec: IntegrandSpec
    lo: float
    hi: float                      # math.inf marks a semi-infinite interval
    mapped_exponent: float = 0.0   # u -> 0 order after the reciprocal map


@dataclass(frozen=True)
class ReductionRecord:
    id: str
    anchor: str
    lhs: IntegralSide
    rhs: IntegralSide
    rhs_scale: complex = 1.0
    combine: str = "ratio"         # "ratio": lhs = scale*rhs; "product": lhs*rhs = closed_form
    closed_form: Optional[Callable[[], complex]] = None
    substitution: Optional[Callable[[float], float]] = None
    substitution_points: tuple[tuple[float, float], ...] = ()
    tolerance: float = 1e-8


def _side_value(side: IntegralSide, tol: float) -> complex:
    if math.isinf(side.hi):
        return integrate_semi_infinite(side.spec, side.lo, tol, side.mapped_exponent).value
    return integrate(side.spec, side.lo, side.hi, tol).value


def _dist_spec(g, interior=(), exponents=(0.0, 0.0)) -> IntegrandSpec:
    return IntegrandSpec(
        evaluator=lambda x: g(x, math.nan, math.nan),
        interior_singularities=tuple(interior),
        endpoint_exponents=exponents,
        distance_evaluator=g,
    )


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def hermite_cubic_root(a: float, b: float) -> float:
    """Largest real root of 4 z**3 - 3 a z - b, polished by Newton."""
    p, q = -0.75 * a, -0.25 * b
    disc = -4.0 * p ** 3 - 27.0 * q ** 2
    if disc > 0.0:
        # three real roots: trigonometric form, largest branch
        r = 2.0 * math.sqrt(-p / 3.0)
        phi = math.acos(3.0 * q / (p * r)) / 3.0
        z = r * math.cos(phi)
    else:
        s = math.sqrt(q * q / 4.0 + p ** 3 / 27.0)
        z = _cbrt(-q / 2.0 + s) + _cbrt(-q / 2.0 - s)
    for _ in range(60):
        f = 4.0 * z ** 3 - 3.0 * a * z - b
        step = f / (12.0 * z * z - 3.0 * a)
        z -= step
        if abs(step) <= 1e-15 * max(1.0, abs(z)):
            break
    return z


# ---------------------------------------------------------------------------
# record construction

def _jacobi_g2() -> ReductionRecord:
    a, b = 4.0, 2.0
    ab = a * b
    c = -((math.sqrt(a) - math.sqrt(b)) ** 2) / ((1 - a) * (1 - b))
    sab = math.sqrt(ab)

    def lhs(z, dl, dh):
        return (sab + z) / math.sqrt(dl * dh * (ab - z) * (a - z) * (b - z))

    def rhs(x, dl, dh):
        return 1.0 / math.sqrt(dl * dh * (1.0 - c * x))

    return ReductionRecord(
        id="jacobi-g2",
        anchor='"changes to elliptic a genus 2" (degree-2 map), at (a, b) = (4, 2)',
        lhs=IntegralSide(_dist_spec(lhs, exponents=(-0.5, -0.5)), 0.0, 1.0),
        rhs=IntegralSide(_dist_spec(rhs, exponents=(-0.5, -0.5)), 0.0, 1.0),
        rhs_scale=1.0 / math.sqrt((1 - a) * (1 - b)),
        substitution=lambda z: (1 - a) * (1 - b) * z / ((z - a) * (z - b)),
        substitution_points=((0.0, 0.0), (1.0, 1.0)),
    )


def _hermite_ugu() -> ReductionRecord:
    # needs b >= a**1.5 so the integrand stays real on [z1, inf)
    a, b = 1.0, 2.0
    z1 = hermite_cubic_root(a, b)
    quad_c = z1 * z1 - 0.75 * a           # 4z^3-3az-b = 4(z-z1)(z^2+z1 z+quad_c)

    def lhs(z, dl, _dh):
        if z > 1e50:
            return 0.0
        return z / math.sqrt((z * z - a) * 4.0 * dl * (z * z + z1 * z + quad_c))

    def rhs(y, dl, _dh):
        if y > 1e100:
            return 0.0
        return 1.0 / math.sqrt(dl * (y * y - 2.0 * z1 * y + 4.0 * z1 * z1 - 3.0 * a))

    return ReductionRecord(
        id="hermite-ugu",
        anchor='"founded on the first Hermite reduction" (degree-3 map), at (a, b) = (1, 2)',
        lhs=IntegralSide(_dist_spec(lhs, exponents=(-0.5, 0.0)), z1, math.inf,
                         mapped_exponent=-0.5),
        rhs=IntegralSide(_dist_spec(rhs, exponents=(-0.5, 0.0)), -2.0 * z1, math.inf,
                         mapped_exponent=-0.5),
        rhs_scale=1.0 / math.sqrt(6.0),
        tolerance=1e-7,
        substitution=lambda z: 2.0 * (z ** 3 - b) / (3.0 * (z * z - a)),
        substitution_points=((z1, -2.0 * z1),),
    )


def _beta_third() -> complex:
    return math.sqrt(math.pi) / 3.0 * gamma(1.0 / 3.0) / gamma(5.0 / 6.0)


def _goursat_dig() -> ReductionRecord:
    def lhs(x, dl, _dh):
        if x > 1e60:
            return 0.0
        return 1.0 / math.sqrt(x * dl * (x * x + x + 1.0))

    def rhs(t, _dl, _dh):
        if t > 1e45:
            return 0.0
        return 1.0 / math.sqrt((t ** 3 + 2.0) * (t ** 3 + 8.0))

    return ReductionRecord(
        id="goursat-dig",
        anchor='"as starting point to find our next identity" (cubic Goursat map)',
        lhs=IntegralSide(_dist_spec(lhs, exponents=(-0.5, 0.0)), 1.0, math.inf,
                         mapped_exponent=0.0),
        rhs=IntegralSide(_dist_spec(rhs), 1.0, math.inf, mapped_exponent=1.0),
        rhs_scale=6.0,
        tolerance=1e-7,
        closed_form=_beta_third,
        substitution=lambda t: (t ** 3 + 2.0) / (3.0 * t),
        substitution_points=((1.0, 1.0),),
    )


def _goursat_gb0() -> ReductionRecord:
    def lhs(x, _dl, dh):
        return 1.0 / math.sqrt(dh * (1.0 + x + x * x))

    def rhs(t, _dl, _dh):
        return 1.0 / math.sqrt((t ** 3 + 2.0) * (t ** 3 + 8.0))

    return ReductionRecord(
        id="goursat-gb0",
        anchor='"slight modification of the Goursat reduction"',
        lhs=IntegralSide(_dist_spec(lhs, exponents=(0.0, -0.5)), 0.0, 1.0),
        rhs=IntegralSide(_dist_spec(rhs), 0.0, 1.0),
        rhs_scale=6.0,
        closed_form=_beta_third,
        substitution=lambda t: 3.0 * t / (t ** 3 + 2.0),
        substitution_points=((0.0, 0.0), (1.0, 1.0)),
    )


def _goursat_011b() -> ReductionRecord:
    def lhs(x, _dl, dh):
        return 1.0 / math.sqrt(dh * (x * x + 3.0 * x + 4.0))

    def rhs(t, _dl, _dh):
        return 3.0 * t / math.sqrt((t ** 3 + 1.0) * (4.0 * t ** 3 + t + 1.0))

    return ReductionRecord(
        id="goursat-011b",
        anchor='"which can be rewritten as" (complete-cubic Goursat case)',
        lhs=IntegralSide(_dist_spec(lhs, exponents=(0.0, -0.5)), 0.0, 1.0),
        rhs=IntegralSide(_dist_spec(rhs), 0.0, 1.0),
        closed_form=lambda: 2.0 ** -0.75
        * incomplete_f(math.acos((9.0 - 4.0 * math.sqrt(2.0)) / 7.0), MODULUS_SERRET_CUBIC),
        substitution=lambda t: t * t * (3.0 - t) / (1.0 + t ** 3),
        substitution_points=((0.0, 0.0), (1.0, 1.0)),
    )


def _hermite_b0() -> ReductionRecord:
    # a = 1; the genus-2 side carries the stated factor 3a
    def lhs(z, dl, _dh):
        return 3.0 / math.sqrt(dl * (1.0 - z * z) * (3.0 - 4.0 * z * z))

    def rhs(x, dl, dh):
        return 1.0 / math.sqrt(dh * dl * (1.0 - x))

    return ReductionRecord(
        id="hermite-b0",
        anchor="degree-3 Hermite reduction with vanishing constant term, a = 1",
        lhs=IntegralSide(_dist_spec(lhs, exponents=(-0.5, 0.0)), 0.0, 0.5),
        rhs=IntegralSide(_dist_spec(rhs, exponents=(-0.5, -0.5)), -1.0, 0.0),
        closed_form=lambda: math.sqrt(2.0) * complete_k(MODULUS_INV_SQRT2),
        substitution=lambda z: 4.0 * z ** 3 - 3.0 * z,
        substitution_points=((0.0, 0.0), (0.5, -1.0)),
    )


def _hermite_full() -> ReductionRecord:
    a = 28.0 / 3.0
    s73 = math.sqrt(7.0 / 3.0)
    edge = 2.0 * s73                     # sqrt(28/3)

    def lhs(z, dl, _dh):
        return 1.0 / math.sqrt((a - z * z) * dl * (2.0 - z) * (z + 3.0))

    def rhs(x, dl, dh):
        return 1.0 / math.sqrt(dh * (edge - x) * dl)

    def closed() -> complex:
        coeff = math.sqrt(3.0) / 14.0 * math.sqrt((s73 - 1.0) * (7.0 / 3.0 + s73))
        return coeff * complete_k(MODULUS_HERMITE_QUARTIC)

    return ReductionRecord(
        id="hermite-full",
        anchor="degree-3 Hermite reduction with both constants fixed (a = 28/3, b = -48)",
        lhs=IntegralSide(_dist_spec(lhs, exponents=(-0.5, 0.0)), 1.0, s73),
        rhs=IntegralSide(_dist_spec(rhs, exponents=(-0.5, -0.5)), -edge, -18.0 / 7.0),
        rhs_scale=1.0 / math.sqrt(21.0),
        closed_form=closed,
        substitution=lambda z: (3.0 * z ** 3 - 21.0 * z) / 7.0,
        substitution_points=((1.0, -18.0 / 7.0), (s73, -edge)),
    )


_G3_P1 = (math.sqrt(8.0) - math.sqrt(3.0)) / 5.0
_G3_P2 = (math.sqrt(8.0) + math.sqrt(3.0)) / 5.0
_G3_LO = (math.sqrt(11.0) - math.sqrt(3.0)) / 2.0
_G3_HI = 2.0 / math.sqrt(5.0)


def _cubic_lhs(y, dl, dh):
    # 1/sqrt(y^3 - 3y) on (-sqrt3, 0): positive via |y| = dh, y + sqrt3 = dl
    return 1.0 / math.sqrt(dh * (math.sqrt(3.0) - y) * dl)


_CUBIC_SIDE = IntegralSide(
    _dist_spec(_cubic_lhs, exponents=(-0.5, -0.5)), -math.sqrt(3.0), 0.0
)


def _g3_map(x: float) -> float:
    phi = 125.0 * x ** 6 - 210.0 * x ** 4 + 93.0 * x * x - 4.0
    psi = phi - 12.0 * x * (x * x - 1.0) * (10.0 * x ** 3 - 8.0 * x)
    return psi / (12.0 * x * (x * x - 1.0) ** 2)


def _hermite_g3() -> ReductionRecord:
    pref = 0.4 * math.sqrt(0.6)

    def rhs(x, _dl, dh):
        return (
            pref * (5.0 * x * x - 1.0)
            / math.sqrt(x * dh * (_G3_HI + x) * (x * x - _G3_P1 ** 2) * (_G3_P2 ** 2 - x * x))
        )

    return ReductionRecord(
        id="hermite-g3",
        anchor='"reducing a hyperelliptic integral of genus 3" (degree-6 map), a = 1, b = 0',
        lhs=_CUBIC_SIDE,
        rhs=IntegralSide(_dist_spec(rhs, exponents=(0.0, -0.5)), _G3_LO, _G3_HI),
        closed_form=lambda: (4.0 / 3.0) ** 0.25 * complete_k(MODULUS_INV_SQRT2),
        substitution=_g3_map,
        substitution_points=((_G3_LO, -math.sqrt(3.0)), (_G3_HI, 0.0)),
    )


_G4_LO = 3.0 * (113.0 - 20.0 * math.sqrt(22.0))
_G4_FAR = 3.0 * (113.0 + 20.0 * math.sqrt(22.0))


def _g4_map(x: float) -> float:
    return (
        (x * x - 84.0) * (x ** 4 + 1617.0 * x * x - 1333584.0) ** 2
        / (100.0 * (x ** 3 - 1029.0 * x) ** 2 * (x ** 3 - 624.0 * x))
    )


def _maier_g4() -> ReductionRecord:
    def rhs(u, dl, dh):
        return (
            5.0 * (273.0 - u) * u ** -0.25
            / math.sqrt((624.0 - u) * dh * dl * (_G4_FAR - u))
        )

    return ReductionRecord(
        id="maier-g4",
        anchor='"Restricting ourselves to the integral where the cubic" (degree-10 map)',
        lhs=_CUBIC_SIDE,
        rhs=IntegralSide(_dist_spec(rhs, exponents=(-0.5, -0.5)), _G4_LO, 84.0),
        closed_form=lambda: (4.0 / 3.0) ** 0.25 * complete_k(MODULUS_INV_SQRT2),
        substitution=_g4_map,
        substitution_points=(
            (-2.0 * math.sqrt(21.0), 0.0),
            (5.0 * math.sqrt(3.0) - 2.0 * math.sqrt(66.0), -math.sqrt(3.0)),
        ),
    )


def _a_side(n: int, a: int) -> IntegralSide:
    def g(x, _dl, dh):
        poly = sum(x ** j for j in range(n))
        return x ** (a - 1) / math.sqrt(dh * poly)

    return IntegralSide(_dist_spec(g, exponents=(0.0 if a > 1 else min(a - 1, 0), -0.5)), 0.0, 1.0)


def _b_side(n: int, a: int) -> IntegralSide:
    limit = 1e290 ** (1.0 / n)

    def f(t: float) -> float:
        if t > limit:
            return t ** (a - 1 - 0.5 * n)
        return t ** (a - 1) / math.sqrt(1.0 + t ** n)

    spec = IntegrandSpec(evaluator=f)
    return IntegralSide(spec, 0.0, math.inf, mapped_exponent=0.5 * n - a - 1)


def _legendre_z1(n: int, a: int) -> ReductionRecord:
    return ReductionRecord(
        id=f"legendre-z1[n={n},a={a}]",
        anchor='"two remarkable formulae due to Legendre", first relation',
        lhs=_a_side(n, a),
        rhs=_b_side(n, a),
        rhs_scale=math.cos(a * math.pi / n),
        tolerance=1e-7,
    )


def _legendre_z2(n: int, a: int) -> ReductionRecord:
    return ReductionRecord(
        id=f"legendre-z2[n={n},a={a}]",
        anchor='"two remarkable formulae due to Legendre", product relation',
        lhs=_b_side(n, n - a),
        rhs=_a_side(n, a),
        combine="product",
        closed_form=lambda: 2.0 * math.pi / (n * (2 * a - n) * math.sin(math.pi * a / n)),
        tolerance=1e-7,
    )


_registry_cache: Optional[list[ReductionRecord]] = None


def reduction_registry() -> list[ReductionRecord]:
    """All reduction records (the two Legendre relations carry small grids)."""
    global _registry_cache
    if _registry_cache is None:
        _registry_cache = [
            _jacobi_g2(),
            _hermite_ugu(),
            _goursat_dig(),
            _goursat_gb0(),
            _goursat_011b(),
            _hermite_b0(),
            _hermite_full(),
            _hermite_g3(),
            _maier_g4(),
            *(_legendre_z1(n, a) for n, a in ((4, 1), (6, 1), (6, 2), (8, 1), (8, 3))),
            *(_legendre_z2(n, a) for n, a in ((4, 3), (6, 4), (8, 5))),
        ]
    return list(_registry_cache)


def _lookup(id: str) -> ReductionRecord:
    for record in reduction_registry():
        if record.id == id:
            return record
    raise KeyError(f"unknown reduction id {id!r}")


def check_reduction(id: str, tol: Optional[float] = None) -> EvalReport:
    """Integrate both sides of one record and compare."""
    record = _lookup(id)
    use_tol = record.tolerance if tol is None else tol
    start = time.perf_counter()
    quad_finite = min(FINITE_QUAD_TOL, use_tol / 10.0)
    quad_semi = min(SEMI_QUAD_TOL, use_tol / 10.0)

    def side_tol(side: IntegralSide) -> float:
        return quad_semi if math.isinf(side.hi) else quad_finite

    lhs_val = _side_value(record.lhs, side_tol(record.lhs))
    rhs_val = _side_value(record.rhs, side_tol(record.rhs))
    note = ""
    if record.combine == "product":
        compare_l = lhs_val * rhs_val
        compare_r = complex(record.closed_form())
    else:
        compare_l = lhs_val
        compare_r = record.rhs_scale * rhs_val
        if record.closed_form is not None:
            closed = complex(record.closed_form())
            closed_err = abs(compare_l - closed) / max(abs(closed), 1e-6)
            note = f"closed form agrees to {closed_err:.2e}"
            if closed_err > use_tol:
                note = f"closed-form mismatch: {closed_err:.2e}"
    abs_err = abs(compare_l - compare_r)
    rel_err = abs_err / max(abs(compare_r), 1e-6)
    status = "pass" if rel_err <= use_tol and "mismatch" not in note else "fail"
    elapsed = time.perf_counter() - start
    return EvalReport(record.id, record.anchor, compare_l, compare_r,
                      abs_err, rel_err, status, elapsed, note)


def check_all_reductions(
    filter: Optional[str] = None, tol: Optional[float] = None
) -> list[EvalReport]:
    ids = sorted(
        r.id for r in reduction_registry() if filter is None or fnmatch.fnmatch(r.id, filter)
    )
    return [check_reduction(one, tol) for one in ids]


def substitution_errors(id: str) -> list[float]:
    """|image - expected| for each declared endpoint of the record's map."""
    record = _lookup(id)
    if record.substitution is None:
        return []
    return [
        abs(record.substitution(x) - expected)
        for x, expected in record.substitution_points
    ]


# ---------------------------------------------------------------------------
# representation formulas for the section-5 integrands

def _fd_value(a, bs, c, xs) -> complex:
    return lauricella_fd(HyperSpec(a, tuple(bs), c, tuple(xs)))


def _quintic_case(tag: str, a, b, c, y, d, e) -> EvalReport:
    start = time.perf_counter()

    def g(z, dl, _dh):
        return 1.0 / math.sqrt((z - a) * (z - b) * dl * (d - z) * (e - z))

    quad = integrate(_dist_spec(g, exponents=(-0.5, 0.0)), c, y, FINITE_QUAD_TOL).value
    pref = 2.0 * math.sqrt((y - c) / ((c - a) * (c - b) * (d - c) * (e - c)))
    fd = _fd_value(
        0.5, (0.5,) * 4, 1.5,
        ((c - y) / (c - a), (c - y) / (c - b), (y - c) / (d - c), (y - c) / (e - c)),
    )
    rhs = pref * fd
    abs_err = abs(quad - rhs)
    rel_err = abs_err / abs(rhs)
    return EvalReport(
        f"rep-quintic[{tag}]", "order-4 representation of the quintic-radical integral",
        quad, rhs, abs_err, rel_err, "pass" if rel_err <= 1e-8 else "fail",
        time.perf_counter() - start,
    )


def _sextic_case(tag: str, a, b, c, y, m) -> EvalReport:
    start = time.perf_counter()

    def g(x, _dl, dh):
        return x ** m / math.sqrt(x * dh * (b + x) * (x * x - a * a) * (c * c - x * x))

    quad = integrate(_dist_spec(g, exponents=(0.0, -0.5)), y, b, FINITE_QUAD_TOL).value
    delta = b * b - y * y
    # the first parameter of the representation is 1 (the printed 1/2 fails
    # the very quadrature cross-check this routine performs)
    fd = _fd_value(
        1.0, (0.75 - 0.5 * m, 0.5, 0.5), 1.5,
        (-delta / (y * y), delta / (a * a - y * y), delta / (c * c - y * y)),
    )
    rhs = y ** (m - 1.5) * math.sqrt(delta / ((y * y - a * a) * (c * c - y * y))) * fd
    abs_err = abs(quad - rhs)
    rel_err = abs_err / abs(rhs)
    return EvalReport(
        f"rep-sextic[{tag}]", "order-3 representation of the even-sextic-radical integral",
        quad, rhs, abs_err, rel_err, "pass" if rel_err <= 1e-8 else "fail",
        time.perf_counter() - start,
    )


def _quartic_case(tag: str, a, b, c, d, m) -> EvalReport:
    start = time.perf_counter()

    def g(x, dl, dh):
        return x ** m / math.sqrt(dl * dh * (c - x) * (d - x))

    quad = integrate(_dist_spec(g, exponents=(-0.5, -0.5)), a, b, FINITE_QUAD_TOL).value
    fd = _fd_value(
        0.5, (-m, 0.5, 0.5), 1.0,
        ((a - b) / a, (b - a) / (c - a), (b - a) / (d - a)),
    )
    rhs = math.pi * a ** m / math.sqrt((c - a) * (d - a)) * fd
    abs_err = abs(quad - rhs)
    rel_err = abs_err / abs(rhs)
    return EvalReport(
        f"rep-quartic[{tag}]", "order-3 representation of the complete quartic-radical integral",
        quad, rhs, abs_err, rel_err, "pass" if rel_err <= 1e-8 else "fail",
        time.perf_counter() - start,
    )


def representation_formulas_check() -> list[EvalReport]:
    """Quadrature vs. hypergeometric value for the three stated formulas."""
    s73 = math.sqrt(7.0 / 3.0)
    reports = [
        _quintic_case("source", -2.0 * s73, -3.0, 1.0, s73, 2.0, 2.0 * s73),
        _quintic_case("generic", -2.0, -1.0, 0.5, 1.0, 2.0, 3.0),
        _sextic_case("source-m2", _G3_P1, _G3_HI, _G3_P2, _G3_LO, 2),
        _sextic_case("source-m0", _G3_P1, _G3_HI, _G3_P2, _G3_LO, 0),
        _sextic_case("generic", 0.3, 0.9, 1.4, 0.5, 1),
        _quartic_case("source", _G4_LO, 84.0, _G4_FAR, 624.0, -0.25),
        _quartic_case("generic", 1.0, 2.0, 4.0, 7.0, 1),
    ]
    return reports
