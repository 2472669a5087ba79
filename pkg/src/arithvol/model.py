"""Supported arithmetic models and hermitian line bundles.

The catalog is fixed: the projective line and plane over the integers, with
either the canonical (Weil) metric family or the Fubini-Study family on the
line.  Bundles carry an exact rational metric constant and a multiset of
vertical twists (prime, multiplicity); a positive multiplicity k forces
divisibility of effective sections by p**(m*k) at power m while leaving the
norm threshold untouched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import InvalidTwist, ModelMismatch, NegativeDegree, NotPrime, UnsupportedCombination


class ModelKind(str, Enum):
    P1Z = "p1z"
    P2Z = "p2z"


class MetricFamily(str, Enum):
    CANONICAL = "canonical"
    FUBINI_STUDY = "fubini_study"


@dataclass(frozen=True)
class ArithmeticModel:
    kind: ModelKind

    @property
    def d(self) -> int:
        """Absolute dimension (arithmetic direction included)."""
        return 2 if self.kind is ModelKind.P1Z else 3

    @property
    def e0(self) -> int:
        """Number of geometric connected components; 1 over the rationals."""
        return 1


@dataclass(frozen=True)
class MetricSpec:
    family: MetricFamily
    c: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))


@dataclass(frozen=True)
class HermitianLineBundle:
    model: ArithmeticModel
    degree: int
    metric: MetricSpec
    vertical_twists: tuple[tuple[int, int], ...] = ()

    @property
    def c(self) -> Fraction:
        return self.metric.c

    @property
    def family(self) -> MetricFamily:
        return self.metric.family


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def make_model(kind: ModelKind | str) -> ArithmeticModel:
    return ArithmeticModel(ModelKind(kind))


def make_bundle(model: ArithmeticModel, a: int, metric: MetricSpec) -> HermitianLineBundle:
    if a < 0:
        raise NegativeDegree(f"degree {a} < 0")
    if metric.family is MetricFamily.FUBINI_STUDY and model.kind is not ModelKind.P1Z:
        raise UnsupportedCombination("Fubini-Study metrics are supported on p1z only")
    return HermitianLineBundle(model, a, metric, ())


def _merge_twists(base: Iterable[tuple[int, int]], extra: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for p, k in base:
        acc[p] = acc.get(p, 0) + k
    for p, k in extra:
        if not is_prime(p):
            raise InvalidTwist(f"twist prime {p} is not prime")
        acc[p] = acc.get(p, 0) + k
    for p, k in acc.items():
        if k < 0:
            raise InvalidTwist(f"net multiplicity {k} at prime {p} is negative")
    return tuple(sorted((p, k) for p, k in acc.items() if k != 0))


def twist(bundle: HermitianLineBundle, alpha: Fraction | int, vertical: Iterable[tuple[int, int]] = ()) -> HermitianLineBundle:
    """Shift the metric constant by alpha and merge vertical twists.

    Merged multiplicities must stay nonnegative; a negative entry may only
    cancel an existing positive one.
    """
    metric = MetricSpec(bundle.metric.family, bundle.metric.c + Fraction(alpha))
    twists = _merge_twists(bundle.vertical_twists, vertical)
    return HermitianLineBundle(bundle.model, bundle.degree, metric, twists)


def add_bundles(b1: HermitianLineBundle, b2: HermitianLineBundle) -> HermitianLineBundle:
    if b1.model != b2.model or b1.metric.family is not b2.metric.family:
        raise ModelMismatch("bundles must share model and metric family")
    metric = MetricSpec(b1.metric.family, b1.c + b2.c)
    twists = _merge_twists(b1.vertical_twists, b2.vertical_twists)
    return HermitianLineBundle(b1.model, b1.degree + b2.degree, metric, twists)


def scale_bundle(bundle: HermitianLineBundle, m: int) -> HermitianLineBundle:
    """The m-th power of the bundle, collapsed to a level-one bundle."""
    if m < 1:
        raise ValueError("power must be >= 1")
    metric = MetricSpec(bundle.metric.family, bundle.c * m)
    twists = tuple((p, k * m) for p, k in bundle.vertical_twists)
    return HermitianLineBundle(bundle.model, bundle.degree * m, metric, twists)


def divisor_factor(bundle: HermitianLineBundle, m: int) -> int:
    """Product of p**(m*k) over the vertical twists: forced content of sections."""
    out = 1
    for p, k in bundle.vertical_twists:
        out *= p ** (m * k)
    return out


def monomial_exponents(model: ArithmeticModel, n: int) -> list[tuple[int, ...]]:
    """Exponent tuples indexing the monomial basis of degree-n sections.

    p1z: (j,) for t**j, j = 0..n.  p2z: (i, j) for t1**i t2**j with i+j <= n,
    in lexicographic order.
    """
    if model.kind is ModelKind.P1Z:
        return [(j,) for j in range(n + 1)]
    return [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]


def bundle_to_json(bundle: HermitianLineBundle) -> str:
    obj = {
        "model": bundle.model.kind.value,
        "degree": bundle.degree,
        "family": bundle.metric.family.value,
        "c_num": bundle.c.numerator,
        "c_den": bundle.c.denominator,
        "twists": [[p, k] for p, k in bundle.vertical_twists],
    }
    return json.dumps(obj)


def bundle_from_json(text: str | dict) -> HermitianLineBundle:
    obj = json.loads(text) if isinstance(text, str) else text
    model = make_model(obj["model"])
    metric = MetricSpec(MetricFamily(obj["family"]), Fraction(obj["c_num"], obj["c_den"]))
    bundle = make_bundle(model, obj["degree"], metric)
    return twist(bundle, 0, [(p, k) for p, k in obj.get("twists", [])])
