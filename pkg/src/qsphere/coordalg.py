"""The coordinate *-Hopf algebra of quantum SU(2) with PBW normal forms.

Generators a, b, c, d with the relations

    ab = q ba,  ac = q ca,  bc = cb,  bd = q db,  cd = q dc,
    ad = 1 + q bc,  da = 1 + q^-1 bc.

Normal monomials are a^i b^j c^k and b^j c^k d^l (a and d never mix).  In the
localized algebra, obtained by inverting b and c, the exponents j and k range
over all integers; the Hopf operations are only defined on the unlocalized
subalgebra.

Elements are immutable; all operations are pure, so values can be shared
freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NotInHopfDomain
from .scalar import LaurentPoly, Q_ONE, Q_ZERO, RationalQ, qhalfpow, render

# A monomial is (aexp, bexp, cexp, dexp) with aexp, dexp >= 0, aexp*dexp = 0.
MONO_ONE = (0, 0, 0, 0)

_ONE_POLY = LaurentPoly.one()


@lru_cache(maxsize=None)
def _gamma(t):
    """Coefficients g[0..t] with a^t d^t = sum_i g[i] * b^i c^i (Laurent in q).

    Recursion: one (a,d) pair contracts through ad = 1 + q bc, picking up
    q^(2t-1) when the new bc crosses the remaining letters.
    """
    if t == 0:
        return (_ONE_POLY,)
    prev = _gamma(t - 1)
    shift = LaurentPoly.q_power(2 * t - 1)
    out = []
    for i in range(t + 1):
        p = prev[i] if i < t else LaurentPoly.zero()
        if i > 0:
            p = p + prev[i - 1] * shift
        out.append(p)
    return tuple(out)


@lru_cache(maxsize=None)
def _dgamma(s, t):
    """Coefficients g[0..min(s,t)] of d^s a^t = sum_i g[i] a^x b^i c^i d^y,
    where x = max(t-s, 0) and y = max(s-t, 0)."""
    if s == 0 or t == 0:
        return (_ONE_POLY,)
    prev = _dgamma(s - 1, t - 1)
    m = min(s, t)
    x = t - m
    shift = LaurentPoly.q_power(-(2 * s - 1) - 2 * x)
    out = []
    for i in range(m + 1):
        p = prev[i] if i < m else LaurentPoly.zero()
        if i > 0:
            p = p + prev[i - 1] * shift
        out.append(p)
    return tuple(out)


def _word(A, B, C, D):
    """Normal form of the ordered word a^A b^B c^C d^D as (mono, poly) pairs."""
    if A == 0 or D == 0:
        return ((( A, B, C, D), _ONE_POLY),)
    t = min(A, D)
    gam = _gamma(t)
    base = LaurentPoly.q_power(t * (B + C))
    return tuple(
        ((A - t, B + i, C + i, D - t), gam[i] * base) for i in range(t + 1)
    )


def mono_mul(m1, m2):
    """Product of two normal monomials as (mono, LaurentPoly) pairs."""
    a1, b1, c1, d1 = m1
    a2, b2, c2, d2 = m2
    s, t = d1, a2
    m = min(s, t)
    x = t - m
    y = s - m
    scal = -x * (b1 + c1) - y * (b2 + c2)
    out = []
    for i, g in enumerate(_dgamma(s, t)):
        gshift = g.shift(2 * scal)
        for mono, w in _word(a1 + x, b1 + i + b2, c1 + i + c2, y + d2):
            out.append((mono, gshift if w is _ONE_POLY else gshift * w))
    return out


class CoordElement:
    """Element of the coordinate algebra (optionally of its localization)."""

    __slots__ = ("terms", "localized")

    def __init__(self, terms=None, localized=False):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, RationalQ):
                    coeff = RationalQ(coeff)
                if coeff.is_zero():
                    continue
                _check_mono(mono, localized)
                clean[mono] = coeff
        self.terms = clean
        self.localized = localized

    @staticmethod
    def _raw(terms, localized=False):
        out = CoordElement.__new__(CoordElement)
        out.terms = terms
        out.localized = localized
        return out

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(localized=False):
        return CoordElement._raw({}, localized)

    @staticmethod
    def one(localized=False):
        return CoordElement._raw({MONO_ONE: Q_ONE}, localized)

    @staticmethod
    def monomial(mono, coeff=Q_ONE, localized=False):
        _check_mono(mono, localized)
        if not isinstance(coeff, RationalQ):
            coeff = RationalQ(coeff)
        if coeff.is_zero():
            return CoordElement.zero(localized)
        return CoordElement._raw({tuple(mono): coeff}, localized)

    # -- structure ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CoordElement.one() * other if other else CoordElement.zero()
        if not isinstance(other, CoordElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self):
        return max((sum(abs(e) for e in m) for m in self.terms), default=0)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Q_ZERO)

    # -- linear structure -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = scalar_coord(other)
        if not isinstance(other, CoordElement):
            return NotImplemented
        loc = self.localized or other.localized
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = d.get(m)
            if v is None:
                d[m] = c
            else:
                v = v + c
                if v.is_zero():
                    del d[m]
                else:
                    d[m] = v
        return CoordElement._raw(d, loc)

    __radd__ = __add__

    def __neg__(self):
        return CoordElement._raw({m: -c for m, c in self.terms.items()}, self.localized)

    def __sub__(self, other):
        if isinstance(other, int):
            other = scalar_coord(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, coeff):
        if not isinstance(coeff, RationalQ):
            coeff = RationalQ(coeff)
        if coeff.is_zero():
            return CoordElement.zero(self.localized)
        return CoordElement._raw(
            {m: c * coeff for m, c in self.terms.items()}, self.localized
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalQ)):
            return self.scale(other)
        if not isinstance(other, CoordElement):
            return NotImplemented
        loc = self.localized or other.localized
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for mono, poly in mono_mul(m1, m2):
                    v = c.mul_poly(poly)
                    old = out.get(mono)
                    if old is None:
                        out[mono] = v
                    else:
                        old = old + v
                        if old.is_zero():
                            del out[mono]
                        else:
                            out[mono] = old
        return CoordElement._raw(out, loc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalQ)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined on elements")
        result = CoordElement.one(self.localized)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- Hopf structure ---------------------------------------------------

    def _require_hopf(self, op):
        if self.localized:
            raise NotInHopfDomain(f"{op} is not defined on localized elements")

    def star(self):
        """The *-involution: a* = d, b* = -q c, c* = -q^-1 b, d* = a."""
        self._require_hopf("star")
        out = {}
        for (a, b, c, d), coeff in self.terms.items():
            mono = (d, c, b, a)
            v = coeff * qhalfpow(2 * (b - c), (-1) ** (b + c))
            old = out.get(mono)
            out[mono] = v if old is None else old + v
        return CoordElement._raw({m: c for m, c in out.items() if not c.is_zero()})

    def counit(self):
        self._require_hopf("counit")
        total = Q_ZERO
        for (a, b, c, d), coeff in self.terms.items():
            if b == 0 and c == 0:
                total = total + coeff
        return total

    def antipode(self):
        """Antipode: S(a) = d, S(b) = -q^-1 b, S(c) = -q c, S(d) = a.

        These images are forced by the convolution-inverse axiom for the
        chosen relations and coproduct (equivalently S(u_ij) = u_ji* for the
        unitary corepresentation matrix).
        """
        self._require_hopf("antipode")
        out = {}
        for (a, b, c, d), coeff in self.terms.items():
            mono = (d, b, c, a)
            v = coeff * qhalfpow(2 * (c - b), (-1) ** (b + c))
            old = out.get(mono)
            out[mono] = v if old is None else old + v
        return CoordElement._raw({m: c for m, c in out.items() if not c.is_zero()})

    def coproduct(self, n=2):
        self._require_hopf("coproduct")
        if n < 2:
            raise ValueError("coproduct arity must be at least 2")
        out = TensorElement.zero(n)
        for mono, coeff in self.terms.items():
            out = out + _mono_coproduct(mono, n).scale(coeff)
        return out

    # -- weights ------------------------------------------------------------

    def left_weight(self):
        """2w such that K acts on the left by q^w, or None if mixed."""
        ws = {(-a + b - c + d) for (a, b, c, d) in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def right_weight(self):
        """2w such that K acts on the right by q^w, or None if mixed."""
        ws = {(-a - b + c + d) for (a, b, c, d) in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def localize(self):
        """The same element viewed in the localization (b, c inverted)."""
        return CoordElement._raw(dict(self.terms), True)

    def __repr__(self):
        return f"CoordElement({render_coord(self)!r})"

    def __str__(self):
        return render_coord(self)


def _check_mono(mono, localized):
    a, b, c, d = mono
    if a < 0 or d < 0:
        raise ValueError(f"negative a or d exponent in {mono}")
    if a and d:
        raise ValueError(f"monomial {mono} mixes a and d")
    if not localized and (b < 0 or c < 0):
        raise ValueError(f"negative b or c exponent outside the localization: {mono}")


def scalar_coord(coeff, localized=False):
    """coeff * 1 as a CoordElement."""
    if not isinstance(coeff, RationalQ):
        coeff = RationalQ(coeff)
    if coeff.is_zero():
        return CoordElement.zero(localized)
    return CoordElement._raw({MONO_ONE: coeff}, localized)


# generator elements
gen_a = CoordElement._raw({(1, 0, 0, 0): Q_ONE})
gen_b = CoordElement._raw({(0, 1, 0, 0): Q_ONE})
gen_c = CoordElement._raw({(0, 0, 1, 0): Q_ONE})
gen_d = CoordElement._raw({(0, 0, 0, 1): Q_ONE})
gen_binv = CoordElement._raw({(0, -1, 0, 0): Q_ONE}, True)
gen_cinv = CoordElement._raw({(0, 0, -1, 0): Q_ONE}, True)


def coord_multiply(x: CoordElement, y: CoordElement) -> CoordElement:
    return x * y


def coord_star(x: CoordElement) -> CoordElement:
    return x.star()


def coord_counit(x: CoordElement) -> RationalQ:
    return x.counit()


def coord_antipode(x: CoordElement) -> CoordElement:
    return x.antipode()


def coord_coproduct(x: CoordElement, n: int = 2) -> "TensorElement":
    return x.coproduct(n)


def localize(x: CoordElement) -> CoordElement:
    return x.localize()


class TensorElement:
    """Element of the n-fold tensor power of the coordinate algebra."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = arity
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if not isinstance(coeff, RationalQ):
                    coeff = RationalQ(coeff)
                if coeff.is_zero():
                    continue
                if len(key) != arity:
                    raise ValueError("tensor key arity mismatch")
                clean[key] = coeff
        self.terms = clean

    @staticmethod
    def _raw(arity, terms):
        out = TensorElement.__new__(TensorElement)
        out.arity = arity
        out.terms = terms
        return out

    @staticmethod
    def zero(arity):
        return TensorElement._raw(arity, {})

    @staticmethod
    def of(*factors: CoordElement):
        """Tensor product of coordinate-algebra elements."""
        arity = len(factors)
        terms = {(): Q_ONE}
        for f in factors:
            new = {}
            for key, coeff in terms.items():
                for mono, c in f.terms.items():
                    new[key + (mono,)] = coeff * c
            terms = new
        return TensorElement(arity, terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __add__(self, other):
        if self.arity != other.arity:
            raise ValueError("tensor arity mismatch")
        d = dict(self.terms)
        for k, c in other.terms.items():
            v = d.get(k)
            if v is None:
                d[k] = c
            else:
                v = v + c
                if v.is_zero():
                    del d[k]
                else:
                    d[k] = v
        return TensorElement._raw(self.arity, d)

    def __neg__(self):
        return TensorElement._raw(self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if not isinstance(coeff, RationalQ):
            coeff = RationalQ(coeff)
        if coeff.is_zero():
            return TensorElement.zero(self.arity)
        return TensorElement._raw(self.arity, {k: c * coeff for k, c in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product of equal-arity tensors."""
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError("tensor arity mismatch")
        out = TensorElement.zero(self.arity)
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                # expand slotwise products
                parts = [mono_mul(m1, m2) for m1, m2 in zip(k1, k2)]
                keys = [((), _ONE_POLY)]
                for slot in parts:
                    keys = [
                        (key + (mono,), poly if kp is _ONE_POLY else kp * poly)
                        for key, kp in keys
                        for mono, poly in slot
                    ]
                for key, poly in keys:
                    v = c.mul_poly(poly)
                    old = acc.get(key)
                    if old is None:
                        acc[key] = v
                    else:
                        old = old + v
                        if old.is_zero():
                            del acc[key]
                        else:
                            acc[key] = old
        out.terms = acc
        return out

    def slot_counit(self, slot):
        """Apply the counit in one slot, lowering the arity."""
        out = {}
        for key, coeff in self.terms.items():
            a, b, c, d = key[slot]
            if b == 0 and c == 0:
                k = key[:slot] + key[slot + 1 :]
                v = out.get(k)
                out[k] = coeff if v is None else v + coeff
        return TensorElement._raw(
            self.arity - 1, {k: v for k, v in out.items() if not v.is_zero()}
        )

    def __repr__(self):
        return f"TensorElement(arity={self.arity}, {len(self.terms)} terms)"


# coproducts of the generators: Delta(u_ij) = sum_k u_ik (x) u_kj for the
# corepresentation matrix u = [[a, b], [c, d]]
_U = {(0, 0): (1, 0, 0, 0), (0, 1): (0, 1, 0, 0), (1, 0): (0, 0, 1, 0), (1, 1): (0, 0, 0, 1)}
_GEN_POS = {(1, 0, 0, 0): (0, 0), (0, 1, 0, 0): (0, 1), (0, 0, 1, 0): (1, 0), (0, 0, 0, 1): (1, 1)}


@lru_cache(maxsize=None)
def _letter_coproduct(letter, n):
    """n-fold coproduct of a single generator letter as a TensorElement."""
    i, j = _GEN_POS[letter]
    terms = {}
    for path in range(2 ** (n - 1)):
        ks = [i] + [(path >> t) & 1 for t in range(n - 1)] + [j]
        key = tuple(_U[(ks[t], ks[t + 1])] for t in range(n))
        terms[key] = Q_ONE
    return TensorElement._raw(n, terms)


@lru_cache(maxsize=None)
def _mono_coproduct(mono, n):
    a, b, c, d = mono
    out = TensorElement._raw(n, {(MONO_ONE,) * n: Q_ONE})
    for letter, exp in (
        ((1, 0, 0, 0), a),
        ((0, 1, 0, 0), b),
        ((0, 0, 1, 0), c),
        ((0, 0, 0, 1), d),
    ):
        if exp:
            base = _letter_coproduct(letter, n)
            for _ in range(exp):
                out = out * base
    return out


def render_coord(x: CoordElement) -> str:
    if not x.terms:
        return "0"
    names = ("a", "b", "c", "d")
    parts = []
    for mono in sorted(x.terms, key=lambda m: (sum(abs(e) for e in m), m)):
        coeff = x.terms[mono]
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        body = "*".join(factors) if factors else "1"
        cs = render(coeff)
        if cs == "1":
            s = body
        elif cs == "-1":
            s = f"-{body}"
        elif (" " in cs or "/" in cs) and body != "1":
            s = f"({cs})*{body}"
        elif body == "1":
            s = cs
        else:
            s = f"{cs}*{body}"
        parts.append(s)
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _convention_self_test():
    """Assert the relation conventions reproduce the sphere relations."""
    A = gen_b * gen_c * RationalQ.q_power(-1, -1)
    B = gen_a * gen_c
    Bs = gen_d * gen_b * Fraction(-1)
    assert gen_d * gen_a == CoordElement.one() + gen_b * gen_c * RationalQ.q_power(-1)
    assert gen_a * gen_d == CoordElement.one() + gen_b * gen_c * RationalQ.q_power(1)
    assert Bs * B == A - A * A
    assert B * Bs == A * RationalQ.q_power(2) - (A * A) * RationalQ.q_power(4)
    assert B.star() == Bs
    assert A.star() == A


_convention_self_test()
