"""Certified interval plumbing on top of mpmath's interval context.

All enclosures are returned as pairs of exact `Fraction` endpoints (mpmath
interval endpoints are dyadic, so the conversion is lossless).  Comparisons
against transcendental quantities escalate the working precision until the
intervals separate; callers that can hit exact ties must handle them before
calling in here.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from typing import Callable

from mpmath import iv

DEFAULT_PREC = 80
_PREC_LADDER = (80, 160, 320, 640, 1280, 2560)


@contextmanager
def _prec(prec: int):
    old = iv.prec
    iv.prec = prec
    try:
        yield
    finally:
        iv.prec = old


def _libmpf_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    man = int(man)
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise OverflowError("non-finite interval endpoint")
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


def to_fractions(x) -> tuple[Fraction, Fraction]:
    """Exact endpoints of an mpmath interval."""
    lo, hi = x._mpi_
    return _libmpf_to_fraction(lo), _libmpf_to_fraction(hi)


def from_fraction(q: Fraction):
    """Interval enclosing an exact rational under the current precision."""
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def exp_enclosure(q: Fraction, prec: int = DEFAULT_PREC) -> tuple[Fraction, Fraction]:
    with _prec(prec):
        return to_fractions(iv.exp(from_fraction(q)))


def log_enclosure(q: Fraction | int, prec: int = DEFAULT_PREC) -> tuple[Fraction, Fraction]:
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log of nonpositive value")
    with _prec(prec):
        return to_fractions(iv.log(from_fraction(q)))


def sqrt_enclosure(q: Fraction, prec: int = DEFAULT_PREC) -> tuple[Fraction, Fraction]:
    if q < 0:
        raise ValueError("sqrt of negative value")
    with _prec(prec):
        return to_fractions(iv.sqrt(from_fraction(q)))


def root_enclosure(q: Fraction, k: int, prec: int = DEFAULT_PREC) -> tuple[Fraction, Fraction]:
    """Enclosure of q**(1/k) for q >= 0."""
    if q < 0:
        raise ValueError("root of negative value")
    if q == 0:
        return Fraction(0), Fraction(0)
    with _prec(prec):
        x = from_fraction(q) ** (iv.mpf(1) / iv.mpf(k))
        return to_fractions(x)


def certified_le(
    lhs: Callable[[int], tuple[Fraction, Fraction]],
    rhs: Callable[[int], tuple[Fraction, Fraction]],
) -> bool | None:
    """Decide lhs <= rhs from escalating enclosures; None if never separated."""
    for prec in _PREC_LADDER:
        llo, lhi = lhs(prec)
        rlo, rhi = rhs(prec)
        if lhi <= rlo:
            return True
        if llo > rhi:
            return False
    return None


def const_enclosure(q: Fraction) -> Callable[[int], tuple[Fraction, Fraction]]:
    return lambda prec: (q, q)


def floor_of_enclosure(f: Callable[[int], tuple[Fraction, Fraction]]) -> int:
    """Floor of a real number given by escalating enclosures.

    Requires the number not to be an integer unless the enclosure is exact.
    """
    for prec in _PREC_LADDER:
        lo, hi = f(prec)
        flo, fhi = math.floor(lo), math.floor(hi)
        if flo == fhi:
            return flo
        if lo == hi:
            return flo
    raise ArithmeticError("floor undecided: value too close to an integer")


def floor_quotient_log(x: Fraction, p: int) -> int:
    """floor(x / log p) for rational x and integer p >= 2, certified.

    x / log p is irrational for x != 0, so the escalation terminates.
    """
    if x < 0:
        raise ValueError("nonnegative x expected")
    if x == 0:
        return 0

    def encl(prec: int) -> tuple[Fraction, Fraction]:
        with _prec(prec):
            v = from_fraction(x) / iv.log(iv.mpf(p))
            return to_fractions(v)

    return floor_of_enclosure(encl)


def log_of_int(n: int) -> float:
    """Natural log of a (possibly huge) positive integer, as a float."""
    if n <= 0:
        raise ValueError("positive integer expected")
    k = n.bit_length() - 53
    if k <= 0:
        return math.log(n)
    return math.log(n >> k) + k * math.log(2)
