"""Exact number families used throughout the library.

``GoldenNumber`` is the ring Z[tau], tau = (sqrt(5) - 1)/2, with a total
order decided purely by integer sign analysis.  ``LogValue`` is an
unevaluated m*log2(n) + c ordered through big-integer power comparisons.
``fractions.Fraction`` (aliased ``ExactRational``) covers the rational
family.  Floats never decide anything: they only seed searches whose
answers are verified exactly, and certified enclosures are built from
integer square roots and interval squaring.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Union

ExactRational = Fraction

Rational = Union[int, Fraction]
Coeff = Union[int, Fraction]

_TAU_FLOAT = (math.sqrt(5.0) - 1.0) / 2.0


def _as_coeff(x: Coeff) -> Coeff:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"coefficient must be int or Fraction, got {type(x).__name__}")
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 1, k >= 1, exactly."""
    if k == 1 or n == 1:
        return n if k == 1 else 1
    r = int(round(n ** (1.0 / k)))
    while r > 1 and r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def _primitive_power(n: int) -> tuple[int, int]:
    """Write n >= 2 as r**k with k maximal; the base r is then not a perfect power."""
    for k in range(n.bit_length() - 1, 1, -1):
        r = _integer_root(n, k)
        if r ** k == n:
            return r, k
    return n, 1


def _sign_u_v_sqrt5(u: int, v: int) -> int:
    """Sign of u + v*sqrt(5) for integers u, v.

    When u and v have opposite signs the comparison u**2 vs 5*v**2 decides;
    5*v**2 is never a perfect square for v != 0, so the result is never a
    spurious zero.
    """
    if v == 0:
        return (u > 0) - (u < 0)
    if v > 0:
        if u >= 0:
            return 1
        return 1 if u * u < 5 * v * v else -1
    if u <= 0:
        return -1
    return 1 if u * u > 5 * v * v else -1


def _sign_a_b_tau(a: Coeff, b: Coeff) -> int:
    """Sign of a + b*tau for rational a, b."""
    if isinstance(a, Fraction) or isinstance(b, Fraction):
        fa, fb = Fraction(a), Fraction(b)
        q = (fa.denominator * fb.denominator) // math.gcd(fa.denominator, fb.denominator)
        a, b = int(fa * q), int(fb * q)
    # a + b*tau = ((2a - b) + b*sqrt(5)) / 2
    return _sign_u_v_sqrt5(2 * a - b, b)


def _floor_int_tau(a: int, b: int) -> int:
    """floor(a + b*tau) for integers a, b, by integer square root."""
    if b == 0:
        return a
    s = math.isqrt(5 * b * b)
    if b > 0:
        # max k with 2k + b <= b*sqrt(5); equality is impossible
        return a + (s - b) // 2
    # b*tau is irrational, so floor(-x) = -floor(x) - 1
    return a - ((s + b) // 2 + 1)


@total_ordering
class GoldenNumber:
    """An element a + b*tau of Z[tau] (or Q[tau] with Fraction coefficients).

    tau = (sqrt(5) - 1)/2 satisfies tau**2 = 1 - tau, which keeps products
    inside the ring.  Ordering, floor and fractional part are all exact.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: Coeff = 0, b: Coeff = 0):
        self._a = _as_coeff(a)
        self._b = _as_coeff(b)

    @property
    def a(self) -> Coeff:
        return self._a

    @property
    def b(self) -> Coeff:
        return self._b

    @classmethod
    def from_int(cls, n: int) -> GoldenNumber:
        return cls(n, 0)

    def __repr__(self) -> str:
        return f"GoldenNumber({self._a!r}, {self._b!r})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        if self._a == 0:
            return f"{self._b}*tau"
        sign = "+" if self._b > 0 else "-"
        return f"{self._a}{sign}{abs(self._b)}*tau"

    def _coerce(self, other) -> "GoldenNumber | None":
        if isinstance(other, GoldenNumber):
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction)):
            return GoldenNumber(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNumber(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GoldenNumber(self._a - o._a, self._b - o._b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self._a, -self._b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        # (a1 + b1 tau)(a2 + b2 tau) with tau^2 = 1 - tau
        return GoldenNumber(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GoldenNumber:
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = GoldenNumber(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _sign_a_b_tau(self._a - o._a, self._b - o._b) < 0

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def sign(self) -> int:
        return _sign_a_b_tau(self._a, self._b)

    def is_integer(self) -> bool:
        return self._b == 0 and (isinstance(self._a, int))

    def is_rational(self) -> bool:
        return self._b == 0

    def floor(self) -> int:
        a, b = self._a, self._b
        if b == 0:
            return math.floor(a)
        if isinstance(a, int) and isinstance(b, int):
            return _floor_int_tau(a, b)
        fa, fb = Fraction(a), Fraction(b)
        q = (fa.denominator * fb.denominator) // math.gcd(fa.denominator, fb.denominator)
        # floor(x/q) = floor(floor(x)/q) for positive integer q
        return _floor_int_tau(int(fa * q), int(fb * q)) // q

    def ceil(self) -> int:
        f = self.floor()
        return f if self == f else f + 1

    def frac(self) -> GoldenNumber:
        return self - self.floor()

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * _TAU_FLOAT

    def enclosure(self, prec_bits: int = 64) -> tuple[Fraction, Fraction]:
        """Certified rational interval containing the value."""
        a, b = Fraction(self._a), Fraction(self._b)
        s = math.isqrt(5 << (2 * prec_bits))
        scale = 1 << (prec_bits + 1)
        tau_lo = Fraction((s - (1 << prec_bits)), scale)
        tau_hi = Fraction((s + 1 - (1 << prec_bits)), scale)
        if b >= 0:
            return (a + b * tau_lo, a + b * tau_hi)
        return (a + b * tau_hi, a + b * tau_lo)


TAU = GoldenNumber(0, 1)


def golden_add(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x + y


def golden_mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x * y


def golden_compare(x: GoldenNumber, y) -> int:
    """-1, 0 or 1 as x is below, equal to, or above y (GoldenNumber or rational)."""
    if not isinstance(y, GoldenNumber):
        y = GoldenNumber(y, 0)
    return (x - y).sign()


@lru_cache(maxsize=None)
def certified_log2(n: int, prec_bits: int) -> tuple[Fraction, Fraction]:
    """Certified enclosure of log2(n) by interval squaring.

    Keeps lower/upper mantissas with directed rounding; stops early (with a
    correct, wider interval) if the interval ever straddles a bit decision.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    e = n.bit_length() - 1
    if n == (1 << e):
        return (Fraction(e), Fraction(e))
    B = prec_bits + 16
    one = 1 << B
    two = one << 1
    lo = n << (B - e) if B >= e else n >> (e - B)
    hi = lo
    y = 0
    k = 0
    while k < prec_bits:
        lo = (lo * lo) >> B
        hi = ((hi * hi) + one - 1) >> B
        k += 1
        y <<= 1
        if hi < two:
            continue
        if lo >= two:
            y |= 1
            lo >>= 1
            hi = (hi + 1) >> 1
            continue
        # interval straddles 2: cannot certify this bit, widen and stop
        y >>= 1
        k -= 1
        break
    scale = 1 << k
    return (Fraction(e) + Fraction(y, scale), Fraction(e) + Fraction(y + 1, scale))


_FLOOR_CACHE: dict[tuple[int, int], int] = {}


class LogValue:
    """Unevaluated m*log2(n) + c with integers m >= 1, n >= 1 and c.

    Canonical form keeps n odd (powers of two fold into the offset) and not
    a perfect power (m absorbs the exponent), so equal values share one
    representation and the value is an integer exactly when n == 1.
    Comparisons reduce to big-integer power comparisons and are exact.
    """

    __slots__ = ("_m", "_n", "_c")

    def __init__(self, mult: int, arg: int, offset: int = 0):
        if not (isinstance(mult, int) and isinstance(arg, int) and isinstance(offset, int)):
            raise TypeError("LogValue parts must be integers")
        if mult < 1 or arg < 1:
            raise ValueError("need mult >= 1 and arg >= 1")
        while arg % 2 == 0:
            arg //= 2
            offset += mult
        if arg > 1:
            # canonical base is not a perfect power, so equal values share
            # one representation (and one hash): m*log2(r^k) = (m*k)*log2(r)
            root, k = _primitive_power(arg)
            if k > 1:
                arg = root
                mult *= k
        if arg == 1:
            mult = 1
        self._m = mult
        self._n = arg
        self._c = offset

    @property
    def mult(self) -> int:
        return self._m

    @property
    def arg(self) -> int:
        return self._n

    @property
    def offset(self) -> int:
        return self._c

    @classmethod
    def log2(cls, n: int) -> LogValue:
        return cls(1, n)

    def __repr__(self) -> str:
        return f"LogValue({self._m}, {self._n}, {self._c})"

    def __str__(self) -> str:
        if self._n == 1:
            return str(self._c)
        head = f"log2({self._n})" if self._m == 1 else f"{self._m}*log2({self._n})"
        if self._c == 0:
            return head
        return f"{head}{self._c:+d}"

    def is_integer(self) -> bool:
        return self._n == 1

    def __add__(self, other):
        if isinstance(other, LogValue):
            if self._n == 1:
                return other + self._c
            if other._n == 1:
                return self + other._c
            if self._m == other._m:
                return LogValue(self._m, self._n * other._n, self._c + other._c)
            bits = self._m * self._n.bit_length() + other._m * other._n.bit_length()
            if bits > 10 ** 6:
                raise ValueError("sum too large to represent exactly")
            return LogValue(1, self._n ** self._m * other._n ** other._m,
                            self._c + other._c)
        if isinstance(other, int) and not isinstance(other, bool):
            return LogValue(self._m, self._n, self._c + other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return LogValue(self._m, self._n, self._c - other)
        return NotImplemented

    def scaled(self, k: int) -> LogValue:
        """k * (m*log2(n) + c) for a positive integer k."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("scale must be a positive integer")
        return LogValue(self._m * k if self._n != 1 else 1, self._n, self._c * k)

    def _power(self) -> int:
        return self._n ** self._m

    def floor(self) -> int:
        if self._n == 1:
            return self._c
        key = (self._m, self._n)
        f = _FLOOR_CACHE.get(key)
        if f is None:
            f = self._power().bit_length() - 1
            _FLOOR_CACHE[key] = f
        return f + self._c

    def ceil(self) -> int:
        return self._c if self._n == 1 else self.floor() + 1

    def frac(self) -> LogValue:
        return LogValue(self._m, self._n, self._c - self.floor())

    def _cmp_rational(self, r: Rational) -> int:
        if self._n == 1:
            c = Fraction(self._c)
            rr = Fraction(r)
            return (c > rr) - (c < rr)
        rr = Fraction(r)
        p, q = rr.numerator, rr.denominator
        # m*log2(n) + c vs p/q  <=>  n^(m*q) vs 2^(p - c*q)
        rhs_exp = p - self._c * q
        if rhs_exp < 0:
            return 1
        lhs = self._n ** (self._m * q)
        rhs = 1 << rhs_exp
        return (lhs > rhs) - (lhs < rhs)

    def _cmp(self, other) -> int:
        if isinstance(other, LogValue):
            if self._n == other._n and self._m == other._m:
                return (self._c > other._c) - (self._c < other._c)
            if other._n == 1:
                return self._cmp_rational(other._c)
            if self._n == 1:
                return -other._cmp_rational(self._c)
            s = max(0, -self._c, -other._c)
            lhs = self._power() << (self._c + s)
            rhs = other._power() << (other._c + s)
            return (lhs > rhs) - (lhs < rhs)
        if isinstance(other, bool):
            raise TypeError("cannot compare LogValue with bool")
        if isinstance(other, (int, Fraction)):
            return self._cmp_rational(other)
        raise TypeError(f"cannot compare LogValue with {type(other).__name__}")

    def __eq__(self, other):
        if isinstance(other, (LogValue, int, Fraction)) and not isinstance(other, bool):
            return self._cmp(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        if self._n == 1:
            return hash(self._c)
        return hash((self._m, self._n, self._c))

    def __float__(self) -> float:
        return self._m * math.log2(self._n) + self._c

    def enclosure(self, prec_bits: int = 64) -> tuple[Fraction, Fraction]:
        lo, hi = certified_log2(self._n, prec_bits)
        return (self._m * lo + self._c, self._m * hi + self._c)


ExactValue = Union[int, Fraction, GoldenNumber, LogValue]


def is_exact_value(x) -> bool:
    return isinstance(x, (int, Fraction, GoldenNumber, LogValue)) and not isinstance(x, bool)


def exact_floor(x: ExactValue) -> int:
    if isinstance(x, (GoldenNumber, LogValue)):
        return x.floor()
    return math.floor(x)


def exact_ceil(x: ExactValue) -> int:
    if isinstance(x, (GoldenNumber, LogValue)):
        return x.ceil()
    return math.ceil(x)


def exact_frac(x: ExactValue):
    """x - floor(x), in the same family as x."""
    if isinstance(x, (GoldenNumber, LogValue)):
        return x.frac()
    return Fraction(x) - math.floor(x)


def exact_is_integer(x: ExactValue) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    return x.is_integer()


def floor_alpha(x: ExactValue, alpha: Rational) -> int:
    """Rounding with threshold: floor(x) if frac(x) < alpha, else ceiling(x).

    alpha must be an exact rational in [0, 1].  The floor condition is
    strict, so a fractional part exactly equal to alpha rounds up; alpha = 0
    is pure ceiling and alpha = 1 pure flooring.  Integers are fixed points
    for every alpha.
    """
    if isinstance(alpha, bool) or not isinstance(alpha, (int, Fraction)):
        raise TypeError("alpha must be an exact rational")
    if not (0 <= alpha <= 1):
        raise ValueError("alpha must lie in [0, 1]")
    k = exact_floor(x)
    f = exact_frac(x)
    if f == 0:
        return k
    return k if f < alpha else k + 1


class CertifiedApprox:
    """A rational enclosure [lower, upper] of an exact value, refinable on demand."""

    __slots__ = ("_value", "_prec", "_lo", "_hi")

    def __init__(self, value: ExactValue, prec_bits: int = 64):
        if not is_exact_value(value):
            raise TypeError("CertifiedApprox needs an exact value")
        self._value = value
        self._prec = prec_bits
        self._compute()

    def _compute(self) -> None:
        v = self._value
        if isinstance(v, (GoldenNumber, LogValue)):
            self._lo, self._hi = v.enclosure(self._prec)
        else:
            self._lo = self._hi = Fraction(v)

    @property
    def value(self) -> ExactValue:
        return self._value

    @property
    def lower(self) -> Fraction:
        return self._lo

    @property
    def upper(self) -> Fraction:
        return self._hi

    @property
    def width(self) -> Fraction:
        return self._hi - self._lo

    def refine(self) -> None:
        self._prec *= 2
        self._compute()

    def __repr__(self) -> str:
        return f"CertifiedApprox({self._value!r}, [{float(self._lo)}, {float(self._hi)}])"


def cross_compare(x: ExactValue, y: ExactValue, gap: Fraction = Fraction(1, 10 ** 6)) -> str:
    """Compare values from different exact families.

    Returns "less", "greater", "equal" or "inconclusive".  Orderings are
    proven by disjoint certified enclosures; "equal" is only reported when
    both sides are exactly representable integers or the comparison stays
    within one family.  "inconclusive" means both enclosures were refined
    below ``gap`` without separating.
    """
    if not (is_exact_value(x) and is_exact_value(y)):
        raise TypeError("cross_compare needs exact values")
    same_family = (
        (isinstance(x, GoldenNumber) and isinstance(y, (GoldenNumber, int, Fraction)))
        or (isinstance(y, GoldenNumber) and isinstance(x, (int, Fraction)))
        or (isinstance(x, LogValue) and isinstance(y, (LogValue, int, Fraction)))
        or (isinstance(y, LogValue) and isinstance(x, (int, Fraction)))
        or (isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)))
    )
    if same_family:
        if x == y:
            return "equal"
        return "less" if x < y else "greater"
    if exact_is_integer(x) and exact_is_integer(y):
        ix = exact_floor(x)
        iy = exact_floor(y)
        if ix == iy:
            return "equal"
        return "less" if ix < iy else "greater"
    ax = CertifiedApprox(x)
    ay = CertifiedApprox(y)
    while True:
        if ax.upper < ay.lower:
            return "less"
        if ay.upper < ax.lower:
            return "greater"
        if ax.width < gap and ay.width < gap:
            return "inconclusive"
        ax.refine()
        ay.refine()


def rational_between(lo: ExactValue, hi: ExactValue) -> Fraction:
    """A dyadic rational strictly between two exact values (lo < hi required)."""
    k = 0
    while k < 512:
        k += 1
        scale = 1 << k
        if isinstance(hi, GoldenNumber):
            j = (hi * scale).floor()
        elif isinstance(hi, LogValue):
            j = hi.scaled(scale).floor()
        else:
            j = math.floor(Fraction(hi) * scale)
        for cand_num in (j, j - 1):
            cand = Fraction(cand_num, scale)
            if lo < cand and cand < hi:
                return cand
    raise ValueError("values are not separated (or not ordered lo < hi)")
