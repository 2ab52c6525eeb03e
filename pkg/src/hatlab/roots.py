"""Exact real-root counting (Sturm sequences) and the recurrence-defined
polynomial families used for the minimal-root theorems.

All counting is over exact rationals.  Sequences are content-normalized
at every step to keep coefficients tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import UnivariatePoly


class RootError(ValueError):
    pass


def sturm_sequence(p: UnivariatePoly) -> list[UnivariatePoly]:
    if p.is_zero():
        raise RootError("zero polynomial has no Sturm sequence")
    p = p.square_free().normalized()
    seq = [p, p.derivative().normalized()]
    while not seq[-1].is_zero():
        r = seq[-2].rem(seq[-1])
        seq.append((-r).normalized())
    seq.pop()
    return seq


def _sign_variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(seq, x) -> int:
    return _sign_variations([q(x) for q in seq])


def _variations_at_inf(seq, positive: bool) -> int:
    vals = []
    for q in seq:
        lc = q.leading()
        if not positive and q.degree() % 2 == 1:
            lc = -lc
        vals.append(lc)
    return _sign_variations(vals)


def sturm_roots(p: UnivariatePoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    if p.is_zero():
        raise RootError("zero polynomial")
    if not lo < hi:
        raise RootError("empty interval")
    seq = sturm_sequence(p)
    return _variations_at(seq, lo) - _variations_at(seq, hi)


def count_real_roots(p: UnivariatePoly) -> int:
    """Number of distinct real roots over the whole real line."""
    seq = sturm_sequence(p)
    return _variations_at_inf(seq, False) - _variations_at_inf(seq, True)


def cauchy_bound(p: UnivariatePoly) -> Fraction:
    """All real roots lie in (-B, B]."""
    lc = abs(p.leading())
    b = max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))
    return b + 1


def _divisors(n: int, cap: int = 200_000):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n and len(out) < cap:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out) if d * d > n else None


def _smallest_positive_rational_root(p: UnivariatePoly):
    """Rational-root search on the integer-cleared polynomial; None when
    no positive rational root is found (or the search is infeasible)."""
    cs = p.integer_cleared()
    lead = cs[-1]
    i0 = next(i for i, c in enumerate(cs) if c != 0)
    const = cs[i0]
    if abs(const) > 10**12 or abs(lead) > 10**12:
        return None
    nums, dens = _divisors(const), _divisors(lead)
    if nums is None or dens is None:
        return None
    best = None
    for den in dens:
        for num in nums:
            cand = Fraction(num, den)
            if (best is None or cand < best) and p(cand) == 0:
                best = cand
    return best


@dataclass(frozen=True)
class IsolatingInterval:
    lower: Fraction
    upper: Fraction
    exact_root: Fraction | None = None

    def width(self) -> Fraction:
        return self.upper - self.lower


def smallest_positive_root(
    p: UnivariatePoly,
    candidate: Fraction | None = None,
    width: Fraction = Fraction(1, 10**12),
):
    """Isolate the smallest positive real root of p, or return None when
    there is none.

    With a rational candidate: confirm p(candidate) == 0 exactly and
    that the Sturm count strictly below it is zero (the cheapest exact
    minimality proof).  Without one: bisect down to the requested width,
    reporting exact rational endpoints."""
    if p.is_zero():
        raise RootError("zero polynomial")
    if p(Fraction(0)) == 0:
        raise RootError("p(0) = 0; smallest positive root is ill-posed")
    if candidate is not None:
        candidate = Fraction(candidate)
        if candidate <= 0:
            raise RootError("candidate must be positive")
        if p(candidate) != 0:
            raise RootError(f"candidate {candidate} is not a root")
        below = sturm_roots(p, Fraction(0), candidate) - 1
        if below != 0:
            raise RootError(
                f"candidate {candidate} is not minimal: {below} roots below it"
            )
        return IsolatingInterval(candidate, candidate, candidate)

    hi = cauchy_bound(p)
    if sturm_roots(p, Fraction(0), hi) == 0:
        return None
    exact = _smallest_positive_rational_root(p)
    if exact is not None and sturm_roots(p, Fraction(0), exact) == 1:
        return IsolatingInterval(exact, exact, exact)
    lo = Fraction(0)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if p(mid) == 0:
            # bisection landed exactly on a rational root; check minimality
            if sturm_roots(p, lo, mid) == 1 and (
                lo == 0 or sturm_roots(p, Fraction(0), lo) == 0
            ):
                return IsolatingInterval(mid, mid, mid)
        if sturm_roots(p, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return IsolatingInterval(lo, hi, None)


# -- the recurrence families ------------------------------------------

_K = UnivariatePoly.x()  # the family variable


def _family_A(n: int) -> UnivariatePoly:
    a, b = UnivariatePoly.ONE, _K + 1  # A_0, A_1
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, _K * (a + b)
    return b


def _family_B(n: int) -> UnivariatePoly:
    # B_n = f_n(k+1, ..., k+1, k+3); forced base cases B_0 = 1, B_1 = k+3
    a, b = UnivariatePoly.ONE, _K + 3
    if n == 0:
        return a
    for m in range(2, n + 1):
        a, b = b, (_K + 2) * _family_A(m - 1) + _K * _family_A(m - 2)
    return b


def _family_L(n: int) -> UnivariatePoly:
    if n < 2:
        raise RootError("L_n is defined for n >= 2")
    if n == 2:
        return (_K + 2) * (_K + 4)
    return (_K + 2) * _family_B(n - 1) + _K * _family_B(n - 2)


def _family_Phi(n: int) -> UnivariatePoly:
    a, b = UnivariatePoly.ONE, _K  # Phi_0, Phi_1
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, _K * b - a
    return b


def _family_E(n: int) -> UnivariatePoly:
    if n < 1:
        raise RootError("E_n is defined for n >= 1")
    if n == 1:
        return _K + 1
    return (_K + 2) * _family_Phi(n - 1)


_FAMILIES = {
    "A": _family_A,
    "B": _family_B,
    "L": _family_L,
    "Phi": _family_Phi,
    "E": _family_E,
}


@dataclass(frozen=True)
class FamilyPoly:
    tag: str
    n: int
    poly: UnivariatePoly


def family(tag: str, n: int, k=None):
    """Polynomial of the named family at index n, as a polynomial in k,
    or its exact value when k is given."""
    if tag not in _FAMILIES:
        raise RootError(f"unknown family {tag!r}; choose from {sorted(_FAMILIES)}")
    if n < 0:
        raise RootError("family index must be nonnegative")
    p = _FAMILIES[tag](n)
    if k is not None:
        return p(Fraction(k))
    return FamilyPoly(tag, n, p)


_FAMILY_INTERVALS = {"A": (Fraction(-4), Fraction(0)), "Phi": (Fraction(-2), Fraction(2))}


def verify_root_interval(tag: str, n: int, interval=None) -> bool:
    """True iff all real roots of the family polynomial lie inside the
    closed interval (default: the family's claimed interval)."""
    if tag not in _FAMILY_INTERVALS and interval is None:
        raise RootError(f"no claimed interval for family {tag!r}")
    lo, hi = interval if interval is not None else _FAMILY_INTERVALS[tag]
    lo, hi = Fraction(lo), Fraction(hi)
    p = family(tag, n).poly
    if p.degree() == 0:
        return True
    inside = sturm_roots(p, lo, hi) + (1 if p(lo) == 0 else 0)
    return inside == count_real_roots(p)
