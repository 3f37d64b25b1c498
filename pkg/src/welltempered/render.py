"""Fixed-point decimal rendering of exact values.

Every printed decimal is the round-half-even rendering of the exact value
at the requested number of places.  Floats never enter the pipeline, so
the same value always renders to the same bytes.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .discretize import _scaled
from .exactnum import CertifiedApprox, LogValue, exact_floor, exact_is_integer


def scale(value, k: int):
    """k times an exact value, staying in the value's family."""
    if isinstance(value, LogValue):
        return value.scaled(k)
    return _scaled(k, value)


def _certified_floor(y) -> int:
    # enclosure refinement sidesteps the huge integer powers an exact
    # logarithm floor would need at large scale factors
    if isinstance(y, LogValue) and not y.is_integer():
        approx = CertifiedApprox(y)
        for _ in range(64):
            lo = math.floor(approx.lower)
            if lo == math.floor(approx.upper):
                return lo
            approx.refine()
    return exact_floor(y)


def render_decimal(value, places: int = 4) -> str:
    """Round-half-even fixed-point rendering with exactly `places` decimals."""
    if places < 0:
        raise ValueError("places must be nonnegative")
    k = 10 ** places
    doubled = scale(value, 2 * k)
    n2 = _certified_floor(doubled)
    q = n2 // 2
    if n2 % 2 == 0:
        scaled = q
    elif exact_is_integer(doubled):
        scaled = q + (q & 1)  # exact tie: round to even
    else:
        scaled = q + 1
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), k)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def render_compact(value, places: int = 4) -> str:
    """Integers render bare; short terminating rationals render exactly.

    Everything else gets `places` decimals, round-half-even.
    """
    if exact_is_integer(value):
        return str(exact_floor(value))
    if isinstance(value, (int, Fraction)):
        f = Fraction(value)
        d, twos, fives = f.denominator, 0, 0
        while d % 2 == 0:
            d //= 2
            twos += 1
        while d % 5 == 0:
            d //= 5
            fives += 1
        digits = max(twos, fives)
        if d == 1 and digits <= places:
            return render_decimal(f, digits)
    return render_decimal(value, places)


def render_exact(value) -> str:
    """The exact symbolic form: a+b*tau, m*log2(n)+c, or p/q."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError("render_exact needs an exact value")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    return str(value)
