"""Exact truncated power series in ``z`` and in ``(z, t)``.

Coefficients are :class:`fractions.Fraction`.  A :class:`Series` of order ``N``
stands for ``c_0 + c_1 z + ... + c_N z^N + O(z^(N+1))``.  A :class:`BiSeries`
stores, for every ``n``, the polynomial in ``t`` multiplying ``z^n``; its
``t``-degree is capped by ``n + slack`` (``slack`` is 0 for every counting
series, a tree with ``n`` nodes having at most ``n`` deepest nodes).

Products go through Kronecker substitution: both operands are scaled to
integers, packed into one big integer, multiplied once and unpacked.  This
keeps order-200 arithmetic over 500-bit coefficients fast in pure Python.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "Series",
    "BiSeries",
    "SeriesError",
    "TDegreeOverflow",
    "DivisionByZeroSeries",
    "NonExactDivision",
    "BadConstantTerm",
    "OutOfRange",
    "series_z",
    "bi_zt",
    "t_times",
    "sqrt",
    "solve_v",
    "d_dt",
    "eval_t",
    "coeff",
]

Rational = Fraction
Scalar = Union[int, Fraction]


class SeriesError(ArithmeticError):
    pass


class TDegreeOverflow(SeriesError):
    pass


class DivisionByZeroSeries(SeriesError, ZeroDivisionError):
    pass


class NonExactDivision(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


class OutOfRange(SeriesError, IndexError):
    pass


# ---------------------------------------------------------------------------
# integer kernels


def _lcm_of_denominators(values: Iterable[Fraction]) -> int:
    d = 1
    for c in values:
        cd = c.denominator
        if cd != 1:
            d = d * cd // gcd(d, cd)
    return d


def _to_ints(values: Sequence[Fraction]) -> tuple[list[int], int]:
    d = _lcm_of_denominators(values)
    if d == 1:
        return [c.numerator for c in values], 1
    return [c.numerator * (d // c.denominator) for c in values], d


def _pack(ints: Sequence[int], nbytes: int) -> int:
    """``sum c_i 2^(8 nbytes i)`` for signed ``c_i``, built from byte strings."""
    pos = b"".join(c.to_bytes(nbytes, "little") if c > 0 else bytes(nbytes) for c in ints)
    neg = b"".join((-c).to_bytes(nbytes, "little") if c < 0 else bytes(nbytes) for c in ints)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(x: int, nbytes: int, slots: int, count: int) -> list[int]:
    # Adding half a slot to every slot turns balanced digits into plain bytes.
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes((bytes(nbytes - 1) + b"\x80") * slots, "little")
    raw = (x + offset).to_bytes(nbytes * slots, "little")
    return [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
        for i in range(count)
    ]


def _convolve(a: Sequence[int], b: Sequence[int], count: int) -> list[int]:
    """First ``count`` entries of the integer convolution ``a * b``.

    Kronecker substitution: with slots wide enough to hold any product
    coefficient, ``pack(a) * pack(b) = pack(a * b)``.
    """
    a, b = a[:count], b[:count]
    if not a or not b:
        return [0] * count
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if ma == 0 or mb == 0:
        return [0] * count
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    slots = len(a) + len(b) - 1
    x = _pack(a, nbytes) * _pack(b, nbytes)
    out = _unpack(x, nbytes, slots, min(count, slots))
    return out + [0] * (count - len(out))


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# univariate


class Series:
    """Truncated power series ``sum c_n z^n + O(z^(order+1))``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        c = [_frac(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            c = c[: order + 1] + [Fraction(0)] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least one coefficient")
        self._c = tuple(c)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> Series:
        return cls([value], order)

    @classmethod
    def monomial(cls, n: int, order: int, value: Scalar = 1) -> Series:
        c = [0] * (order + 1)
        if n <= order:
            c[n] = value
        return cls(c)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, n: int) -> Fraction:
        return coeff(self, n)

    def __len__(self) -> int:
        return len(self._c)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` for a zero series."""
        for n, c in enumerate(self._c):
            if c:
                return n
        return None

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return Series(self._c[: order + 1])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Series | None:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order)
        return None

    def __add__(self, other):
        if isinstance(other, BiSeries):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series([self._c[i] + o._c[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-c for c in self._c])

    def __sub__(self, other):
        if isinstance(other, BiSeries):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, BiSeries):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self._c])
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, da = _to_ints(self._c[: n + 1])
        b, db = _to_ints(other._c[: n + 1])
        prod = _convolve(a, b, n + 1)
        d = da * db
        return Series([Fraction(x, d) for x in prod])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Series:
        if k < 0:
            return Series.constant(1, self.order) / self ** (-k)
        result = Series.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> Series:
        """Multiplicative inverse of a unit, by Newton iteration ``x <- x(2 - bx)``."""
        c0 = self._c[0]
        if not c0:
            raise NonExactDivision("constant term is zero")
        x = Series([1 / c0])
        prec = 1
        while prec < len(self._c):
            prec = min(2 * prec, len(self._c))
            b = Series(self._c[:prec])
            x = Series(x._c, prec - 1)
            x = x * (2 - b * x)
        return x

    def sqrt(self) -> Series:
        """Square root with constant term 1 (requires ``self[0] == 1``)."""
        c = self._c
        if c[0] != 1:
            raise BadConstantTerm(f"sqrt needs constant term 1, got {c[0]}")
        r = [Fraction(1)]
        for n in range(1, len(c)):
            acc = c[n] - sum(r[j] * r[n - j] for j in range(1, n))
            r.append(acc / 2)
        return Series(r)

    def __truediv__(self, other):
        if isinstance(other, BiSeries):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZeroSeries("division by zero scalar")
            return Series([c / other for c in self._c])
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        w = other.truncate(n).valuation()
        if w is None:
            raise DivisionByZeroSeries("divisor vanishes to its order")
        va = self.truncate(n).valuation()
        if va is not None and va < w:
            raise NonExactDivision(
                f"dividend valuation {va} below divisor valuation {w}"
            )
        if w == n + 1 or n - w < 0:
            raise NonExactDivision("no precision left after shifting")
        num = Series(self._c[w : n + 1])
        den = Series(other._c[w : n + 1])
        return num * den.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Series({self!s}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self._c):
            if c:
                terms.append(_term(c, n))
        return _join(terms)


# ---------------------------------------------------------------------------
# bivariate


def _trim(poly: Sequence[Fraction]) -> tuple[Fraction, ...]:
    p = list(poly)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def _poly_str(p: Sequence[Fraction]) -> str:
    terms = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "t" if i == 1 else f"t^{i}"
            terms.append(mono if c == 1 else ("-" + mono if c == -1 else f"{c}*{mono}"))
    return _join(terms)


class BiSeries:
    """Truncated series in ``z`` whose coefficients are polynomials in ``t``.

    ``coeffs[n]`` lists the ``t``-coefficients of ``[z^n]``.  Its degree may
    not exceed ``n + slack``; anything larger raises :class:`TDegreeOverflow`.
    """

    __slots__ = ("_c", "slack")

    def __init__(self, coeffs: Iterable[Iterable[Scalar]], order: int | None = None, slack: int = 0):
        c = [_trim([_frac(x) for x in p]) for p in coeffs]
        if order is not None:
            c = c[: order + 1] + [()] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least one coefficient")
        for n, p in enumerate(c):
            if len(p) - 1 > n + slack:
                raise TDegreeOverflow(
                    f"t-degree {len(p) - 1} at z^{n} exceeds cap {n + slack}"
                )
        self._c = tuple(c)
        self.slack = slack

    @classmethod
    def lift(cls, s: Series) -> BiSeries:
        return cls([[c] for c in s.coeffs])

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._c

    def __getitem__(self, n: int) -> tuple[Fraction, ...]:
        return coeff(self, n)

    def valuation(self) -> int | None:
        for n, p in enumerate(self._c):
            if p:
                return n
        return None

    def truncate(self, order: int) -> BiSeries:
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return BiSeries(self._c[: order + 1], slack=self.slack)

    def tighten(self, slack: int = 0) -> BiSeries:
        """Re-check the series under a smaller slack (raises on violation)."""
        return BiSeries(self._c, slack=slack)

    def t_degree(self) -> int:
        return max((len(p) - 1 for p in self._c), default=-1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for p in self._c for c in p)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> BiSeries | None:
        if isinstance(other, BiSeries):
            return other
        if isinstance(other, Series):
            return BiSeries.lift(other)
        if isinstance(other, (int, Fraction)):
            return BiSeries([[other]], self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        out = []
        for i in range(n + 1):
            p, r = self._c[i], o._c[i]
            m = max(len(p), len(r))
            out.append([(p[j] if j < len(p) else 0) + (r[j] if j < len(r) else 0) for j in range(m)])
        return BiSeries(out, slack=max(self.slack, o.slack))

    __radd__ = __add__

    def __neg__(self) -> BiSeries:
        return BiSeries([[-c for c in p] for p in self._c], slack=self.slack)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def _flat(self, n: int, stride: int) -> tuple[list[int], int]:
        flat = [Fraction(0)] * ((n + 1) * stride)
        for i in range(n + 1):
            for j, c in enumerate(self._c[i]):
                flat[i * stride + j] = c
        return _to_ints(flat)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiSeries([[c * other for c in p] for p in self._c], slack=self.slack)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        da = max((len(p) for p in self._c[: n + 1]), default=0)
        db = max((len(p) for p in o._c[: n + 1]), default=0)
        stride = max(da + db - 1, da, db, 1)
        a, ka = self._flat(n, stride)
        b, kb = o._flat(n, stride)
        prod = _convolve(a, b, (n + 1) * stride)
        d = ka * kb
        out = [[Fraction(x, d) for x in prod[i * stride : (i + 1) * stride]] for i in range(n + 1)]
        return BiSeries(out, slack=self.slack + o.slack)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BiSeries:
        if k < 0:
            raise ValueError("negative powers of a BiSeries are not supported")
        result = BiSeries([[1]], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> BiSeries:
        c0 = self._c[0]
        if not c0 or len(c0) != 1:
            raise NonExactDivision("constant term must be a nonzero rational")
        x = BiSeries([[1 / c0[0]]])
        prec = 1
        total = len(self._c)
        while prec < total:
            prec = min(2 * prec, total)
            b = BiSeries(self._c[:prec], slack=self.slack)
            x = BiSeries(x._c, prec - 1, slack=x.slack)
            x = (x * (2 - b * x)).tighten(self.slack)
        return x

    def div(self, other, slack: int | None = None) -> BiSeries:
        """Exact quotient, shifting out the divisor's valuation.

        The quotient must satisfy the cap with ``max(self.slack,
        other.slack)`` unless a larger ``slack`` is requested.
        """
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZeroSeries("division by zero scalar")
            return BiSeries([[c / other for c in p] for p in self._c], slack=self.slack)
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide by {type(other).__name__}")
        n = min(self.order, o.order)
        w = o.truncate(n).valuation()
        if w is None:
            raise DivisionByZeroSeries("divisor vanishes to its order")
        va = self.truncate(n).valuation()
        if va is not None and va < w:
            raise NonExactDivision(
                f"dividend valuation {va} below divisor valuation {w}"
            )
        if len(o._c[w]) != 1:
            raise NonExactDivision(
                f"divisor's leading coefficient {_poly_str(o._c[w])} is not a rational"
            )
        den = BiSeries(o._c[w : n + 1], slack=o.slack + w)
        num = BiSeries(self._c[w : n + 1], slack=self.slack + w)
        cap = max(self.slack, o.slack) if slack is None else slack
        return (num * den.inverse()).tighten(cap)

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, Series, BiSeries)):
            return NotImplemented
        return self.div(other)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other) -> bool:
        if isinstance(other, BiSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"BiSeries({self!s}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for n, p in enumerate(self._c):
            if not p:
                continue
            nonzero = [c for c in p if c]
            if len(nonzero) == 1 and p[0]:
                terms.append(_term(p[0], n))
            elif len(nonzero) == 1:
                body = _poly_str(p)
                terms.append(body if n == 0 else f"{body}*{_zpow(n)}")
            else:
                body = f"({_poly_str(p)})"
                terms.append(body if n == 0 else f"{body}*{_zpow(n)}")
        return _join(terms)


# ---------------------------------------------------------------------------
# printing helpers


def _zpow(n: int) -> str:
    return "z" if n == 1 else f"z^{n}"


def _term(c: Fraction, n: int) -> str:
    if n == 0:
        return str(c)
    if c == 1:
        return _zpow(n)
    if c == -1:
        return "-" + _zpow(n)
    return f"{c}*{_zpow(n)}"


def _join(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# ---------------------------------------------------------------------------
# module-level operations


def series_z(order: int) -> Series:
    """The series ``z`` truncated at ``order``."""
    return Series.monomial(1, order)


def bi_zt(order: int) -> BiSeries:
    """The bivariate monomial ``z t``."""
    return BiSeries([[], [0, 1]], order)


def t_times(s: Series) -> BiSeries:
    """``t * s`` as a bivariate series (``slack = 1`` covers a nonzero ``s(0)``)."""
    return BiSeries([[0, c] for c in s.coeffs], slack=1)


def sqrt(a: Series) -> Series:
    return a.sqrt()


def solve_v(order: int) -> Series:
    """The series ``v`` with ``v(0) = 0`` and ``v = z (1 + 3 v + v^2)``.

    Fixed-point iteration where each sweep settles one more coefficient;
    ``[z^n]`` of the right-hand side only reads coefficients of ``v`` below
    ``n``, so ``order`` sweeps reach the fixed point.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    v = [0] * (order + 1)
    for n in range(1, order + 1):
        # [z^n] z(1 + 3v + v^2) = [n == 1] + 3 v_{n-1} + sum_{i+j=n-1} v_i v_j
        m = n - 1
        s = 3 * v[m] + sum(v[i] * v[m - i] for i in range(1, m))
        v[n] = s + (1 if n == 1 else 0)
    return Series(v)


def d_dt(a: BiSeries) -> BiSeries:
    return BiSeries([[j * c for j, c in enumerate(p)][1:] for p in a.coeffs], slack=a.slack)


def eval_t(a: BiSeries, t0: Scalar) -> Series:
    t0 = _frac(t0)
    out = []
    for p in a.coeffs:
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * t0 + c
        out.append(acc)
    return Series(out)


def coeff(a: Series | BiSeries, n: int):
    if not 0 <= n <= a.order:
        raise OutOfRange(f"index {n} outside 0..{a.order}")
    return a.coeffs[n]
