"""Certified sup-norms, exact L2 norms, and geometry-of-numbers count bounds.

Canonical-metric sup-norms reduce to the maximum of |f| on the unit circle
(p1z) or unit 2-torus (p2z); we certify the square g = |f|^2, a real
trigonometric polynomial with integer coefficients, by interval subdivision
with a Bernstein derivative bound.  Fubini-Study sup-norms are certified by
plain interval subdivision of the chart function over the closed unit disc
in two charts.  Integer content is factored out first, so enclosures scale
exactly under integer multiples of a section.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, gcd, lgamma

from mpmath import iv

from .errors import BudgetExhausted
from .intervals import (
    _prec,
    certified_le,
    exp_enclosure,
    floor_of_enclosure,
    from_fraction,
    log_of_int,
    sqrt_enclosure,
    to_fractions,
)
from .model import (
    ArithmeticModel,
    HermitianLineBundle,
    MetricFamily,
    ModelKind,
    monomial_exponents,
)

# 355/113 > pi; used for rational upper bounds on arc lengths
_PI_HI = Fraction(355, 113)
_EVAL_PREC = 64

DEFAULT_TOL = 1e-9
DEFAULT_BUDGET = 10**6


class Status(str, Enum):
    IN = "in"
    OUT = "out"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("enclosure endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def scale(self, k: int) -> "Enclosure":
        k = abs(k)
        return Enclosure(self.lo * k, self.hi * k)


@dataclass(frozen=True)
class NormBodyBounds:
    n: int
    inner_log_count: float
    outer_log_count: float


def fs_weights(n: int) -> list[Fraction]:
    """L2 weights of the degree-n monomials under the probability FS measure."""
    fact = [math.factorial(i) for i in range(n + 2)]
    return [Fraction(fact[i] * fact[n - i], fact[n + 1]) for i in range(n + 1)]


def l2_weights(bundle: HermitianLineBundle, n: int) -> list[Fraction]:
    if bundle.family is MetricFamily.FUBINI_STUDY:
        return fs_weights(n)
    return [Fraction(1)] * len(monomial_exponents(bundle.model, n))


def l2_norm_sq(bundle: HermitianLineBundle, m: int, coeffs) -> Fraction:
    """Exact squared L2 norm of the ambient section (no metric constant)."""
    n = bundle.degree * m
    w = l2_weights(bundle, n)
    return sum((Fraction(a) * a) * wj for a, wj in zip(coeffs, w, strict=True)) or Fraction(0)


def min_l2_weight(bundle: HermitianLineBundle, n: int) -> Fraction:
    if bundle.family is MetricFamily.FUBINI_STUDY:
        return min(fs_weights(n))
    return Fraction(1)


def min_nonzero_norm_logbound(bundle: HermitianLineBundle, m: int) -> float:
    """lambda with log(ambient sup) >= lambda for every nonzero integer section.

    Canonical: 0 (sup >= L2 >= 1).  Fubini-Study: half the log of the smallest
    monomial L2 weight.
    """
    w = min_l2_weight(bundle, bundle.degree * m)
    if w == 1:
        return 0.0
    return 0.5 * (log_of_int(w.numerator) - log_of_int(w.denominator))


def _content(coeffs) -> int:
    g = 0
    for a in coeffs:
        g = gcd(g, abs(a))
    return g


# ---------------------------------------------------------------------------
# exact sample evaluations (cheap OUT certificates)
# ---------------------------------------------------------------------------


def _abs2_gaussian(coeffs, exps, points) -> Fraction:
    """|f(points)|^2 at unit arguments in Z[i], exact."""
    re, im = 0, 0
    for a, e in zip(coeffs, exps):
        zr, zi = 1, 0
        for x, (pr, pi) in zip(e, points):
            for _ in range(x):
                zr, zi = zr * pr - zi * pi, zr * pi + zi * pr
        re += a * zr
        im += a * zi
    return Fraction(re * re + im * im)


def _exact_samples_sq(coeffs, exps, nvars: int) -> Fraction:
    """Max of |f|^2 over a small set of exactly evaluable torus points."""
    units = [(1, 0), (-1, 0), (0, 1)]
    best = Fraction(0)
    if nvars == 1:
        for pt in units:
            best = max(best, _abs2_gaussian(coeffs, exps, [pt]))
        # sixth and third roots of unity: |sum a_j w^j|^2 = x^2 +- xy + y^2
        for sign in (1, -1):
            x = y = 0
            for a, (j,) in zip(coeffs, exps):
                r = j % 6 if sign == 1 else (2 * j) % 6
                # w^r = u + v*w with w a primitive 6th root, w^2 = w - 1
                u, v = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)][r]
                x += a * u
                y += a * v
            best = max(best, Fraction(x * x + x * y + y * y))
    else:
        for p1 in units:
            for p2 in units:
                best = max(best, _abs2_gaussian(coeffs, exps, [p1, p2]))
    return best


# ---------------------------------------------------------------------------
# subdivision engines
# ---------------------------------------------------------------------------


class _MaxEngine:
    """Shared bookkeeping for branch-and-bound maximization of g >= 0."""

    def __init__(self):
        self.lower = Fraction(0)
        self.evals = 0

    @property
    def upper(self) -> Fraction:
        raise NotImplementedError

    def step(self, max_evals: int) -> None:
        raise NotImplementedError

    def bounds(self) -> tuple[Fraction, Fraction]:
        return self.lower, self.upper


class _CircleMax(_MaxEngine):
    """Certified max of g(t) = c0 + 2 sum c_r cos(r t) over [0, pi].

    Arc certificates use the Bernstein bound |g'| <= deg(g) * sup g.
    """

    def __init__(self, acorr: list[int]):
        super().__init__()
        self.acorr = acorr
        self.deg = max((r for r in range(1, len(acorr)) if acorr[r]), default=0)
        u0 = Fraction(acorr[0] + 2 * sum(abs(c) for c in acorr[1:]))
        self._u0 = u0
        self.arcs: list[tuple[Fraction, Fraction, Fraction]] | None = None

    def _eval(self, q: Fraction) -> tuple[Fraction, Fraction]:
        self.evals += 1
        with _prec(_EVAL_PREC):
            theta = from_fraction(q) * iv.pi
            acc = iv.mpf(self.acorr[0])
            for r, cr in enumerate(self.acorr):
                if r and cr:
                    acc += 2 * cr * iv.cos(r * theta)
        lo, hi = to_fractions(acc)
        return max(lo, Fraction(0)), hi

    @property
    def upper(self) -> Fraction:
        if self.arcs is None:
            return self._u0
        return max([self.lower] + [c for _, _, c in self.arcs])

    def _start(self):
        pieces = max(8, 2 * (self.deg + 1))
        self.arcs = []
        u = self._u0
        for i in range(pieces):
            lo, hi = Fraction(i, pieces), Fraction(i + 1, pieces)
            mid = (lo + hi) / 2
            vlo, vhi = self._eval(mid)
            self.lower = max(self.lower, vlo)
            cert = min(u, vhi + (hi - lo) / 2 * _PI_HI * self.deg * u)
            self.arcs.append((lo, hi, cert))

    def step(self, max_evals: int) -> None:
        if self.arcs is None:
            self._start()
            return
        budget = self.evals + max_evals
        u = self.upper
        self.arcs.sort(key=lambda a: a[2], reverse=True)
        fresh: list[tuple[Fraction, Fraction, Fraction]] = []
        rest = list(self.arcs)
        self.arcs = fresh
        while rest and self.evals < budget:
            lo, hi, cert = rest.pop(0)
            if cert <= self.lower:
                continue
            mid = (lo + hi) / 2
            for a, b in ((lo, mid), (mid, hi)):
                c = (a + b) / 2
                vlo, vhi = self._eval(c)
                self.lower = max(self.lower, vlo)
                child = min(cert, vhi + (b - a) / 2 * _PI_HI * self.deg * u)
                if child > self.lower:
                    fresh.append((a, b, child))
        fresh.extend(rest)


class _TorusMax(_MaxEngine):
    """Certified max of g(t1,t2) = sum C_(r,s) cos(r t1 + s t2) on the 2-torus."""

    def __init__(self, terms: dict[tuple[int, int], int]):
        super().__init__()
        # terms maps (r, s) -> coefficient, with (0,0) the constant and each
        # nonconstant key counted once (factor 2 applied at evaluation)
        self.terms = terms
        self.deg1 = max((abs(r) for (r, s) in terms if (r, s) != (0, 0)), default=0)
        self.deg2 = max((abs(s) for (r, s) in terms if (r, s) != (0, 0)), default=0)
        c0 = terms.get((0, 0), 0)
        self._u0 = Fraction(c0 + 2 * sum(abs(v) for k, v in terms.items() if k != (0, 0)))
        self.boxes: list[tuple[Fraction, Fraction, Fraction, Fraction, Fraction]] | None = None

    def _eval(self, q1: Fraction, q2: Fraction) -> tuple[Fraction, Fraction]:
        self.evals += 1
        with _prec(_EVAL_PREC):
            t1 = from_fraction(q1) * iv.pi
            t2 = from_fraction(q2) * iv.pi
            acc = iv.mpf(self.terms.get((0, 0), 0))
            for (r, s), v in self.terms.items():
                if (r, s) != (0, 0) and v:
                    acc += 2 * v * iv.cos(r * t1 + s * t2)
        lo, hi = to_fractions(acc)
        return max(lo, Fraction(0)), hi

    @property
    def upper(self) -> Fraction:
        if self.boxes is None:
            return self._u0
        return max([self.lower] + [b[4] for b in self.boxes])

    def _cert(self, lo1, hi1, lo2, hi2, vhi, u, parent):
        spread = ((hi1 - lo1) / 2 * self.deg1 + (hi2 - lo2) / 2 * self.deg2) * _PI_HI
        return min(parent, vhi + spread * u)

    def _start(self):
        n1 = max(4, self.deg1 + 1)
        n2 = max(4, self.deg2 + 1)
        self.boxes = []
        u = self._u0
        for i in range(n1):
            for j in range(2 * n2):
                lo1, hi1 = Fraction(i, n1), Fraction(i + 1, n1)
                lo2, hi2 = Fraction(j - n2, n2), Fraction(j + 1 - n2, n2)
                vlo, vhi = self._eval((lo1 + hi1) / 2, (lo2 + hi2) / 2)
                self.lower = max(self.lower, vlo)
                cert = self._cert(lo1, hi1, lo2, hi2, vhi, u, u)
                self.boxes.append((lo1, hi1, lo2, hi2, cert))

    def step(self, max_evals: int) -> None:
        if self.boxes is None:
            self._start()
            return
        budget = self.evals + max_evals
        u = self.upper
        self.boxes.sort(key=lambda b: b[4], reverse=True)
        rest = list(self.boxes)
        fresh: list[tuple[Fraction, Fraction, Fraction, Fraction, Fraction]] = []
        self.boxes = fresh
        while rest and self.evals < budget:
            lo1, hi1, lo2, hi2, cert = rest.pop(0)
            if cert <= self.lower:
                continue
            if (hi1 - lo1) * self.deg1 >= (hi2 - lo2) * self.deg2:
                mid = (lo1 + hi1) / 2
                children = ((lo1, mid, lo2, hi2), (mid, hi1, lo2, hi2))
            else:
                mid = (lo2 + hi2) / 2
                children = ((lo1, hi1, lo2, mid), (lo1, hi1, mid, hi2))
            for a1, b1, a2, b2 in children:
                vlo, vhi = self._eval((a1 + b1) / 2, (a2 + b2) / 2)
                self.lower = max(self.lower, vlo)
                child = self._cert(a1, b1, a2, b2, vhi, u, cert)
                if child > self.lower:
                    fresh.append((a1, b1, a2, b2, child))
        fresh.extend(rest)


class _DiscMax(_MaxEngine):
    """Certified max of |f(t)|^2 / (1+|t|^2)^n over the Riemann sphere.

    Two charts (coefficients and reversed coefficients) each cover the closed
    unit disc; boxes are (rho, theta) rectangles evaluated by plain interval
    extension (monotone refinement, no derivative bound needed).
    """

    def __init__(self, coeffs: list[int]):
        super().__init__()
        self.n = len(coeffs) - 1
        self.charts = [list(coeffs), list(reversed(coeffs))]
        # per chart: radial profiles d[s][t]: |f|^2 = sum_s rho^s sum_t d cos(t theta)
        self.profiles = []
        for cs in self.charts:
            prof: dict[int, dict[int, int]] = {}
            for j, aj in enumerate(cs):
                for k, ak in enumerate(cs):
                    if aj and ak:
                        s, t = j + k, abs(j - k)
                        prof.setdefault(s, {})[t] = prof.setdefault(s, {}).get(t, 0) + aj * ak
            self.profiles.append(prof)
        u0 = Fraction(0)
        for prof in self.profiles:
            tot = sum(abs(v) for row in prof.values() for v in row.values())
            u0 = max(u0, Fraction(tot))
        self._u0 = u0
        self.boxes: list[tuple[int, Fraction, Fraction, Fraction, Fraction, Fraction]] | None = None

    def _range(self, chart: int, r_lo: Fraction, r_hi: Fraction, t_lo: Fraction, t_hi: Fraction, point: bool):
        self.evals += 1
        prof = self.profiles[chart]
        with _prec(_EVAL_PREC):
            if point:
                rho = from_fraction((r_lo + r_hi) / 2)
                theta = from_fraction((t_lo + t_hi) / 2) * iv.pi
            else:
                rho = iv.mpf([from_fraction(r_lo).a, from_fraction(r_hi).b])
                theta = iv.mpf([(from_fraction(t_lo) * iv.pi).a, (from_fraction(t_hi) * iv.pi).b])
            num = iv.mpf(0)
            for s, row in prof.items():
                inner = iv.mpf(0)
                for t, v in row.items():
                    inner += v * (iv.cos(t * theta) if t else iv.mpf(1))
                num += inner * rho**s
            den = (1 + rho**2) ** self.n
            val = num / den
        lo, hi = to_fractions(val)
        return max(lo, Fraction(0)), hi

    @property
    def upper(self) -> Fraction:
        if self.boxes is None:
            return self._u0
        return max([self.lower] + [b[5] for b in self.boxes])

    def _start(self):
        self.boxes = []
        for chart in range(2):
            for i in range(4):
                for j in range(4):
                    r_lo, r_hi = Fraction(i, 4), Fraction(i + 1, 4)
                    t_lo, t_hi = Fraction(j, 4), Fraction(j + 1, 4)
                    plo, _ = self._range(chart, r_lo, r_hi, t_lo, t_hi, point=True)
                    self.lower = max(self.lower, plo)
                    _, vhi = self._range(chart, r_lo, r_hi, t_lo, t_hi, point=False)
                    self.boxes.append((chart, r_lo, r_hi, t_lo, t_hi, vhi))

    def step(self, max_evals: int) -> None:
        if self.boxes is None:
            self._start()
            return
        budget = self.evals + max_evals
        self.boxes.sort(key=lambda b: b[5], reverse=True)
        rest = list(self.boxes)
        fresh: list[tuple[int, Fraction, Fraction, Fraction, Fraction, Fraction]] = []
        self.boxes = fresh
        while rest and self.evals < budget:
            chart, r_lo, r_hi, t_lo, t_hi, cert = rest.pop(0)
            if cert <= self.lower:
                continue
            if r_hi - r_lo >= t_hi - t_lo:
                mid = (r_lo + r_hi) / 2
                children = ((r_lo, mid, t_lo, t_hi), (mid, r_hi, t_lo, t_hi))
            else:
                mid = (t_lo + t_hi) / 2
                children = ((r_lo, r_hi, t_lo, mid), (r_lo, r_hi, mid, t_hi))
            for a1, b1, a2, b2 in children:
                plo, _ = self._range(chart, a1, b1, a2, b2, point=True)
                self.lower = max(self.lower, plo)
                _, vhi = self._range(chart, a1, b1, a2, b2, point=False)
                vhi = min(vhi, cert)
                if vhi > self.lower:
                    fresh.append((chart, a1, b1, a2, b2, vhi))
        fresh.extend(rest)


# ---------------------------------------------------------------------------
# per-section-space evaluator
# ---------------------------------------------------------------------------


class SupEvaluator:
    """Certified squared ambient sup-norms for one space of sections.

    Caches per primitive coefficient vector, so repeated queries (as in set
    enumeration) refine incrementally instead of restarting.
    """

    def __init__(self, bundle: HermitianLineBundle, m: int):
        self.bundle = bundle
        self.n = bundle.degree * m
        self.exps = monomial_exponents(bundle.model, self.n)
        self.nvars = bundle.model.d - 1
        self.is_fs = bundle.family is MetricFamily.FUBINI_STUDY
        self._engines: dict[tuple[int, ...], _MaxEngine] = {}
        self._fsw = fs_weights(self.n) if self.is_fs else None

    # -- exact hooks --------------------------------------------------------

    def exact_sq(self, coeffs) -> Fraction | None:
        """Exact squared sup for monomial-supported (and tiny FS) sections."""
        support = [i for i, a in enumerate(coeffs) if a]
        if not support:
            return Fraction(0)
        if len(support) == 1:
            a = coeffs[support[0]]
            if not self.is_fs:
                return Fraction(a * a)
            (i,) = self.exps[support[0]]
            if i == 0 or i == self.n:
                return Fraction(a * a)
            return Fraction(a * a) * Fraction(i**i * (self.n - i) ** (self.n - i), self.n**self.n)
        if self.is_fs and self.n == 1:
            return Fraction(coeffs[0] ** 2 + coeffs[1] ** 2)
        return None

    # -- cheap two-sided bounds ---------------------------------------------

    def quick_bounds_sq(self, coeffs) -> tuple[Fraction, Fraction]:
        exact = self.exact_sq(coeffs)
        if exact is not None:
            return exact, exact
        if self.is_fs:
            lo = self._fs_l2(coeffs)
            hi = Fraction(sum(abs(a) for a in coeffs)) ** 2
            return lo, hi
        lo = _exact_samples_sq(coeffs, self.exps, self.nvars)
        lo = max(lo, Fraction(sum(a * a for a in coeffs)))
        eng = self._engine(coeffs)
        return lo, eng.upper

    def _fs_l2(self, coeffs) -> Fraction:
        return sum((Fraction(a) * a) * w for a, w in zip(coeffs, self._fsw)) or Fraction(0)

    # -- refinement ---------------------------------------------------------

    def _engine(self, coeffs) -> _MaxEngine:
        key = tuple(coeffs)
        eng = self._engines.get(key)
        if eng is not None:
            return eng
        if self.is_fs:
            eng = _DiscMax(list(coeffs))
        elif self.nvars == 1:
            acorr = [
                sum(coeffs[j] * coeffs[j + r] for j in range(len(coeffs) - r))
                for r in range(len(coeffs))
            ]
            eng = _CircleMax(acorr)
        else:
            # one term per conjugate pair: keep (r, s) lexicographically >= (0, 0)
            terms: dict[tuple[int, int], int] = {}
            support = [(e, a) for e, a in zip(self.exps, coeffs) if a]
            for (i1, j1), a in support:
                for (i2, j2), b in support:
                    r, s = i1 - i2, j1 - j2
                    if (r, s) >= (0, 0):
                        terms[(r, s)] = terms.get((r, s), 0) + a * b
            eng = _TorusMax(terms)
        # seed the lower bound with the exact samples
        if not self.is_fs:
            eng.lower = max(eng.lower, _exact_samples_sq(coeffs, self.exps, self.nvars))
        self._engines[key] = eng
        return eng

    def refine_sq(self, coeffs, lo_target: Fraction, hi_target: Fraction, budget: int) -> tuple[Fraction, Fraction]:
        """Refine until the enclosure separates from [lo_target, hi_target].

        Returns the current (lower, upper) bounds for sup^2; the caller
        decides what separation means.  Spends at most `budget` evaluations.
        """
        eng = self._engine(coeffs)
        start = eng.evals
        while eng.evals - start < budget:
            lo, hi = eng.bounds()
            if hi < lo_target or lo > hi_target or hi == lo:
                break
            eng.step(min(64, budget - (eng.evals - start)))
        return eng.bounds()

    def refine_to_width(self, coeffs, tol_sq: Fraction, budget: int) -> tuple[Fraction, Fraction, bool]:
        eng = self._engine(coeffs)
        start = eng.evals
        lo, hi = eng.bounds()
        while hi - lo > tol_sq:
            if eng.evals - start >= budget:
                return lo, hi, False
            eng.step(min(64, budget - (eng.evals - start)))
            lo, hi = eng.bounds()
        return lo, hi, True


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def sup_norm(
    bundle: HermitianLineBundle,
    m: int,
    coeffs,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
) -> Enclosure:
    """Certified enclosure of the metric sup-norm of a section of the m-th power."""
    coeffs = list(coeffs)
    n = bundle.degree * m
    if len(coeffs) != len(monomial_exponents(bundle.model, n)):
        raise ValueError("coefficient vector has wrong rank")
    factor_lo, factor_hi = exp_enclosure(-m * bundle.c)
    g0 = _content(coeffs)
    if g0 == 0:
        return Enclosure(Fraction(0), Fraction(0))
    prim = [a // g0 for a in coeffs]
    ev = SupEvaluator(bundle, m)
    exact = ev.exact_sq(prim)
    if exact is not None:
        slo, shi = sqrt_enclosure(exact)
        if slo * slo == exact:
            slo = shi = slo
        return Enclosure(g0 * slo * factor_lo, g0 * shi * factor_hi)
    tol_frac = Fraction(tol).limit_denominator(10**15)
    # width target on the squared scale: d(sup) ~ d(sup^2) / (2 sup)
    qlo, qhi = ev.quick_bounds_sq(prim)
    root_scale = sqrt_enclosure(max(qlo, Fraction(1)))[0]
    lo2, hi2, ok = ev.refine_to_width(prim, tol_frac * tol_frac + tol_frac * root_scale, budget)
    lo2 = max(lo2, qlo)
    if not ok:
        raise BudgetExhausted("sup-norm refinement budget exhausted")
    slo = sqrt_enclosure(lo2)[0]
    shi = sqrt_enclosure(hi2)[1]
    return Enclosure(g0 * slo * factor_lo, g0 * shi * factor_hi)


def effectivity_status(
    bundle: HermitianLineBundle,
    m: int,
    coeffs,
    budget: int = DEFAULT_BUDGET,
    evaluator: SupEvaluator | None = None,
) -> Status:
    """Certified comparison of the ambient sup-norm against exp(m*c).

    Divisibility constraints from vertical twists are a separate, exact check
    owned by the section enumerator; this status is the norm half only.
    """
    coeffs = list(coeffs)
    g0 = _content(coeffs)
    if g0 == 0:
        return Status.IN
    prim = [a // g0 for a in coeffs]
    ev = evaluator if evaluator is not None else SupEvaluator(bundle, m)
    tau_c = 2 * m * bundle.c
    g0sq = Fraction(g0 * g0)

    exact = ev.exact_sq(prim)
    if exact is not None:
        # sup^2 = g0sq * exact, compare against e^{2mc}
        if tau_c == 0:
            return Status.IN if g0sq * exact <= 1 else Status.OUT
        verdict = certified_le(
            lambda p: (g0sq * exact, g0sq * exact),
            lambda p: exp_enclosure(tau_c, p),
        )
        if verdict is None:
            return Status.AMBIGUOUS
        return Status.IN if verdict else Status.OUT

    def tau_sq(prec: int) -> tuple[Fraction, Fraction]:
        lo, hi = exp_enclosure(tau_c, prec)
        return lo / g0sq, hi / g0sq

    t_lo, t_hi = tau_sq(96)
    qlo, qhi = ev.quick_bounds_sq(prim)
    if qhi <= t_lo:
        return Status.IN
    if qlo > t_hi:
        return Status.OUT
    lo2, hi2 = ev.refine_sq(prim, t_lo, t_hi, budget)
    if hi2 <= t_lo:
        return Status.IN
    if lo2 > t_hi:
        return Status.OUT
    # retry the threshold at higher precision in case tau was the blocker
    t_lo, t_hi = tau_sq(320)
    if hi2 <= t_lo:
        return Status.IN
    if lo2 > t_hi:
        return Status.OUT
    return Status.AMBIGUOUS


def cross_polytope_count(rank: int, k: int) -> int:
    """Number of integer points with sum |x_i| <= k in Z^rank."""
    if k < 0:
        return 0
    return sum(2**i * comb(rank, i) * comb(k, i) for i in range(0, min(rank, k) + 1))


def norm_body_bounds(bundle: HermitianLineBundle, m: int) -> NormBodyBounds:
    """Inner and outer log-counts for the effective-section body at power m."""
    from .model import divisor_factor

    n = bundle.degree * m
    exps = monomial_exponents(bundle.model, n)
    rank = len(exps)
    weights = l2_weights(bundle, n)
    d_factor = divisor_factor(bundle, m)
    mc = m * bundle.c

    # inner: integer points of the scaled cross-polytope are all effective
    if mc == 0 and d_factor == 1:
        k = 1
    else:
        target = mc - Fraction(0)

        def encl(prec: int) -> tuple[Fraction, Fraction]:
            lo, hi = exp_enclosure(target, prec)
            return lo / d_factor, hi / d_factor

        try:
            k = floor_of_enclosure(encl)
        except ArithmeticError:
            k = 0
    inner_count = cross_polytope_count(rank, max(k, 0))
    inner_log = log_of_int(inner_count)

    # outer: every effective section lies in the weighted L2 ellipsoid of
    # radius e^{mc}/d_factor; disjoint unit cells inflate it by half the cell
    # diameter in the weighted metric
    rho = math.exp(float(mc)) / d_factor
    cell = math.sqrt(sum(float(w) for w in weights)) / 2
    log_ball = (rank / 2) * math.log(math.pi) - lgamma(rank / 2 + 1)
    log_axes = -0.5 * sum(math.log(float(w)) for w in weights)
    outer_log = log_ball + rank * math.log(rho + cell) + log_axes
    outer_log = max(outer_log, inner_log)
    return NormBodyBounds(n=rank, inner_log_count=inner_log, outer_log_count=outer_log)
