"""Exact arithmetic over Q(q^(1/2)), the scalar field of the symbolic layer.

Elements are reduced fractions of Laurent polynomials in q^(1/2) with
rational coefficients.  The canonical form makes structural equality decide
field equality, so identity checks in the algebra layers are decidable.
All values are immutable; operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .errors import DivisionByZero, EvaluationPole, ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LaurentPoly:
    """Laurent polynomial in s = q^(1/2), coefficients exact rationals.

    Exponents count half powers of q: exponent 2 means q, exponent -3 means
    q^(-3/2).  No zero coefficients are stored.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c:
                    d[e] = c
        self.coeffs = d
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return _LP_ZERO

    @staticmethod
    def one():
        return _LP_ONE

    @staticmethod
    def const(c):
        c = Fraction(c)
        return LaurentPoly({0: c}) if c else _LP_ZERO

    @staticmethod
    def q_power(k, coeff=1):
        """coeff * q^k with k in whole q units."""
        return LaurentPoly({2 * k: Fraction(coeff)})

    @staticmethod
    def half_power(n, coeff=1):
        """coeff * q^(n/2) with n counting half units."""
        return LaurentPoly({n: Fraction(coeff)})

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == {0: _ONE}

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.coeffs.items())))
        return self._hash

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def leading_coeff(self):
        """Coefficient of the highest power of q^(1/2); 0 for the zero poly."""
        return self.coeffs[max(self.coeffs)] if self.coeffs else _ZERO

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = d.get(e)
            if v is None:
                d[e] = c
            else:
                v = v + c
                if v:
                    d[e] = v
                else:
                    del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        out._hash = None
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            if not self.coeffs or not other.coeffs:
                return _LP_ZERO
            a, b = self.coeffs, other.coeffs
            if len(a) > len(b):
                a, b = b, a
            d = {}
            for e1, c1 in a.items():
                for e2, c2 in b.items():
                    e = e1 + e2
                    v = d.get(e)
                    if v is None:
                        d[e] = c1 * c2
                    else:
                        v = v + c1 * c2
                        if v:
                            d[e] = v
                        else:
                            del d[e]
            out = LaurentPoly.__new__(LaurentPoly)
            out.coeffs = d
            out._hash = None
            return out
        c = Fraction(other)
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return _LP_ZERO
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: v * c for e, v in self.coeffs.items()}
        out._hash = None
        return out

    def shift(self, n):
        """Multiply by q^(n/2): add n to every exponent."""
        if n == 0:
            return self
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e + n: c for e, c in self.coeffs.items()}
        out._hash = None
        return out

    def __pow__(self, n):
        if n < 0:
            raise ValueError("LaurentPoly power must be nonnegative")
        result = _LP_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- numerics -----------------------------------------------------

    def eval_pair(self, q0):
        """Split into even/odd half powers and evaluate both at the exact
        rational q0, returning (P_even(q0), P_odd(q0)) with
        value = P_even + sqrt(q0) * P_odd."""
        q0 = Fraction(q0)
        even = _ZERO
        odd = _ZERO
        for e, c in self.coeffs.items():
            if e % 2 == 0:
                even += c * q0 ** (e // 2)
            else:
                odd += c * q0 ** ((e - 1) // 2)
        return even, odd

    def eval_mpf(self, q0):
        """Value at q0 using the current mpmath precision."""
        even, odd = self.eval_pair(Fraction(q0))
        s = mpmath.sqrt(mpmath.mpf(Fraction(q0).numerator) / Fraction(q0).denominator)
        return mpmath.mpf(even.numerator) / even.denominator + s * (
            mpmath.mpf(odd.numerator) / odd.denominator
        )

    def eval_float(self, q0):
        """Fast float64 value at q0 (numeric layer only)."""
        q0 = float(q0)
        s = q0 ** 0.5
        return sum(c.numerator / c.denominator * s ** e for e, c in self.coeffs.items())

    def __repr__(self):
        return f"LaurentPoly({render_poly(self)!r})"


_LP_ZERO = LaurentPoly()
_LP_ONE = LaurentPoly({0: _ONE})


def _dense(p: LaurentPoly):
    """Dense coefficient list (low to high) of a min-exp-0 polynomial."""
    n = p.max_exp()
    out = [_ZERO] * (n + 1)
    for e, c in p.coeffs.items():
        out[e] = c
    return out


def _from_dense(lst):
    return LaurentPoly({e: c for e, c in enumerate(lst) if c})


def _dense_divmod(num, den):
    """Polynomial division on dense lists; den nonzero."""
    num = list(num)
    dn = len(den) - 1
    while den[dn] == 0:
        dn -= 1
    lead = den[dn]
    deg = len(num) - 1
    quot = [_ZERO] * max(deg - dn + 1, 1)
    while deg >= dn:
        while deg >= 0 and num[deg] == 0:
            deg -= 1
        if deg < dn:
            break
        f = num[deg] / lead
        quot[deg - dn] = f
        for i in range(dn + 1):
            num[deg - dn + i] -= f * den[i]
        deg -= 1
    return quot, num


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd (as polynomials in q^(1/2), up to unit powers of q^(1/2))."""
    if a.is_zero():
        return _monic_shifted(b)
    if b.is_zero():
        return _monic_shifted(a)
    x = _dense(a.shift(-a.min_exp()))
    y = _dense(b.shift(-b.min_exp()))
    while any(y):
        _, r = _dense_divmod(x, y)
        while r and r[-1] == 0:
            r.pop()
        x, y = y, r if r else [_ZERO]
    g = _from_dense(x)
    return _monic_shifted(g)


def _monic_shifted(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    p = p.shift(-p.min_exp())
    lc = p.leading_coeff()
    return p if lc == 1 else p.scale(1 / lc)


def poly_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division num/den; remainder must vanish."""
    shift = num.min_exp() - den.min_exp()
    n = _dense(num.shift(-num.min_exp()))
    d = _dense(den.shift(-den.min_exp()))
    q, r = _dense_divmod(n, d)
    if any(r):
        raise ValueError("non-exact polynomial division")
    return _from_dense(q).shift(shift)


class RationalQ:
    """Reduced fraction num/den over Q(q^(1/2)).

    Canonical form: den is a genuine polynomial in q^(1/2) with nonzero
    constant term, monic in its top power, and gcd(num, den) = 1; the zero
    element is 0/1.  Structural equality on (num, den) then decides field
    equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.const(num)
        if den is None:
            den = _LP_ONE
        elif isinstance(den, (int, Fraction)):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator in Q(q^(1/2))")
        if not den.is_one():
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _raw(num, den=_LP_ONE):
        """Trusted constructor: (num, den) already canonical."""
        out = RationalQ.__new__(RationalQ)
        out.num = num
        out.den = den
        out._hash = None
        return out

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_int(n):
        return RationalQ._raw(LaurentPoly.const(n))

    @staticmethod
    def q_power(k, coeff=1):
        """coeff * q^k, k integer."""
        return RationalQ._raw(LaurentPoly.q_power(k, coeff))

    @staticmethod
    def half_power(n, coeff=1):
        """coeff * q^(n/2), n integer counting half units."""
        return RationalQ._raw(LaurentPoly.half_power(n, coeff))

    # -- structure ------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.den.is_one() and self.num.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalQ(other)
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- field arithmetic -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalQ(other)
        elif not isinstance(other, RationalQ):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RationalQ._raw(self.num + other.num)
        if self.den == other.den:
            return RationalQ(self.num + other.num, self.den)
        return RationalQ(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalQ._raw(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalQ(other)
        elif not isinstance(other, RationalQ):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Q_ZERO
            return RationalQ._raw(self.num.scale(Fraction(other)), self.den)
        if not isinstance(other, RationalQ):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RationalQ._raw(self.num * other.num)
        return RationalQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def mul_poly(self, p: LaurentPoly):
        """Multiply by a Laurent polynomial (den-1 fast path)."""
        if self.den.is_one():
            return RationalQ._raw(self.num * p)
        return RationalQ(self.num * p, self.den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalQ(other)
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalQ(other) * self.inverse()

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero in Q(q^(1/2))")
        return RationalQ(self.den, self.num)

    def __pow__(self, n):
        if n == 0:
            return Q_ONE
        if n < 0:
            return self.inverse() ** (-n)
        result = Q_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- numerics ---------------------------------------------------------

    def eval_float(self, q0):
        den = self.den.eval_float(q0)
        if den == 0.0:
            raise EvaluationPole(f"pole at q0 = {q0}")
        return self.num.eval_float(q0) / den

    def __repr__(self):
        return f"RationalQ({render(self)!r})"

    def __str__(self):
        return render(self)


def _reduce(num: LaurentPoly, den: LaurentPoly):
    """Bring num/den to canonical form."""
    if num.is_zero():
        return _LP_ZERO, _LP_ONE
    g = poly_gcd(num, den)
    if not g.is_one():
        num = poly_exact_div(num, g)
        den = poly_exact_div(den, g)
    shift = den.min_exp()
    if shift:
        den = den.shift(-shift)
        num = num.shift(-shift)
    lc = den.leading_coeff()
    if lc != 1:
        den = den.scale(1 / lc)
        num = num.scale(1 / lc)
    return num, den


Q_ZERO = RationalQ._raw(_LP_ZERO)
Q_ONE = RationalQ._raw(_LP_ONE)
Q = RationalQ._raw(LaurentPoly.q_power(1))
QINV = RationalQ._raw(LaurentPoly.q_power(-1))
QHALF = RationalQ._raw(LaurentPoly.half_power(1))


def qpow(k):
    """q^k for integer k."""
    return RationalQ._raw(LaurentPoly.q_power(k))


def qhalfpow(n, coeff=1):
    """coeff * q^(n/2) for integer n."""
    return RationalQ._raw(LaurentPoly.half_power(n, coeff))


def qint(n: int) -> RationalQ:
    """The q-integer (q^n - q^-n)/(q - q^-1) in expanded polynomial form."""
    if n == 0:
        return Q_ZERO
    if n < 0:
        return -qint(-n)
    return RationalQ._raw(LaurentPoly({2 * (n - 1 - 2 * i): _ONE for i in range(n)}))


def qlambda() -> RationalQ:
    """q - q^-1."""
    return RationalQ._raw(LaurentPoly({2: _ONE, -2: -_ONE}))


def normalize(x: RationalQ) -> RationalQ:
    """Re-normalize an element (idempotent; provided for external callers)."""
    num, den = _reduce(x.num, x.den)
    return RationalQ._raw(num, den)


def evaluate(x: RationalQ, q0, precision: int = 53):
    """Value of x at 0 < q0 < 1 as an mpmath float.

    The relative error is below 2^-precision.  Raises EvaluationPole when
    the denominator vanishes at q0 (decided exactly).
    """
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise ValueError("q0 must satisfy 0 < q0 < 1")
    de, do = x.den.eval_pair(q0)
    # den(q0) = de + sqrt(q0)*do; vanishes iff both parts are zero or
    # sqrt(q0) = -de/do exactly.
    if (de == 0 and do == 0) or (
        do != 0 and de * de == q0 * do * do and (de > 0) != (do > 0)
    ):
        raise EvaluationPole(f"pole at q0 = {q0}")
    with mpmath.workprec(precision + 20):
        val = x.num.eval_mpf(q0) / x.den.eval_mpf(q0)
        return +val


# -- rendering and parsing --------------------------------------------------


def _render_exp(e):
    if e == 2:
        return "q"
    if e % 2 == 0:
        return f"q^{e // 2}"
    return f"q^({e}/2)"


def render_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs):
        c = p.coeffs[e]
        neg = c < 0
        c = abs(c)
        if e == 0:
            body = str(c)
        elif c == 1:
            body = _render_exp(e)
        else:
            body = f"{c}*{_render_exp(e)}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def render(x: RationalQ) -> str:
    """Canonical text form, e.g. "(-1 + q^2)/(1 - q^4)"."""
    if x.den.is_one():
        return render_poly(x.num)
    return f"({render_poly(x.num)})/({render_poly(x.den)})"


class _PolyParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_int(self):
        self.skip()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse_fraction(self):
        n = self.parse_int()
        save = self.pos
        if self.peek() == "/":
            self.pos += 1
            if self.peek().isdigit():
                return Fraction(n, self.parse_int())
            self.pos = save
        return Fraction(n)

    def parse_power(self):
        """q, q^k, or q^(n/2); returns half-unit exponent."""
        self.skip()
        if self.text[self.pos : self.pos + 1] != "q":
            self.error("expected q")
        self.pos += 1
        if self.peek() != "^":
            return 2
        self.pos += 1
        if self.peek() == "(":
            self.pos += 1
            n = self.parse_int()
            self.expect("/")
            d = self.parse_int()
            self.expect(")")
            if d != 2:
                self.error("only half-integer exponents are supported")
            return n
        return 2 * self.parse_int()

    def parse_term(self, sign):
        """[coeff] [* q-power]; returns LaurentPoly."""
        coeff = Fraction(sign)
        exp = 0
        ch = self.peek()
        if ch.isdigit():
            coeff *= self.parse_fraction()
            if self.peek() == "*":
                self.pos += 1
                exp = self.parse_power()
        elif ch == "q":
            exp = self.parse_power()
        else:
            self.error("expected term")
        return LaurentPoly({exp: coeff})

    def parse_sum(self):
        self.skip()
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        elif self.peek() == "+":
            self.pos += 1
        acc = self.parse_term(sign)
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                acc = acc + self.parse_term(1)
            elif ch == "-":
                self.pos += 1
                acc = acc + self.parse_term(-1)
            else:
                return acc

    def parse_rational(self):
        if self.peek() == "(":
            self.pos += 1
            num = self.parse_sum()
            self.expect(")")
            if self.peek() == "/":
                self.pos += 1
                self.expect("(")
                den = self.parse_sum()
                self.expect(")")
                result = RationalQ(num, den)
            else:
                result = RationalQ(num)
        else:
            result = RationalQ(self.parse_sum())
        self.skip()
        if self.pos != len(self.text):
            self.error("trailing input")
        return result


def parse(text: str) -> RationalQ:
    """Parse the textual rendering back into a RationalQ (lossless)."""
    return _PolyParser(text).parse_rational()
