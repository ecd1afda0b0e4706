"""The standard quantum 2-sphere: normal forms, embedding and recognition.

Abstract presentation: generators A = A*, B, B* with

    BA = q^2 AB,  AB* = q^2 B*A,  B*B = A - A^2,  BB* = q^2 A - q^4 A^2,

realized inside the coordinate algebra by A = -q^-1 bc, B = ac, B* = -db.
Basis monomials are A^i B^j (j >= 0) and A^i B*^k (k >= 1); keys are pairs
(i, j) with j > 0 for B powers and j < 0 for B* powers.

The sphere is exactly the right-K-invariant part of the coordinate algebra,
and the modular automorphism of the invariant state acts by
sigma(A) = A, sigma(B) = q^2 B, sigma(B*) = q^-2 B*.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coordalg import CoordElement, gen_a, gen_b, gen_c, gen_d
from .errors import NotInSubalgebra
from .scalar import Q_ONE, Q_ZERO, RationalQ, qpow
from .uq import act_left, act_right, gen_K, gen_Kinv

MONO_ONE = (0, 0)


class PodlesElement:
    """Element of the quantum-sphere coordinate algebra in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, RationalQ):
                    coeff = RationalQ(coeff)
                if coeff.is_zero():
                    continue
                i, j = mono
                if i < 0:
                    raise ValueError(f"negative A exponent in {mono}")
                clean[(i, j)] = coeff
        self.terms = clean

    @staticmethod
    def _raw(terms):
        out = PodlesElement.__new__(PodlesElement)
        out.terms = terms
        return out

    @staticmethod
    def zero():
        return PodlesElement._raw({})

    @staticmethod
    def one():
        return PodlesElement._raw({MONO_ONE: Q_ONE})

    @staticmethod
    def monomial(mono, coeff=Q_ONE):
        return PodlesElement({tuple(mono): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = PodlesElement.one().scale(other) if other else PodlesElement.zero()
        if not isinstance(other, PodlesElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self):
        return max((i + abs(j) for i, j in self.terms), default=0)

    def __add__(self, other):
        if isinstance(other, int):
            other = PodlesElement.one().scale(other)
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
        return PodlesElement._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return PodlesElement._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = PodlesElement.one().scale(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, coeff):
        if not isinstance(coeff, RationalQ):
            coeff = RationalQ(coeff)
        if coeff.is_zero():
            return PodlesElement.zero()
        return PodlesElement._raw({m: c * coeff for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalQ)):
            return self.scale(other)
        if not isinstance(other, PodlesElement):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for mono, cc in _mono_mul(m1, m2):
                    v = cc * c
                    old = out.get(mono)
                    if old is None:
                        out[mono] = v
                    else:
                        old = old + v
                        if old.is_zero():
                            del out[mono]
                        else:
                            out[mono] = old
        return PodlesElement._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalQ)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        result = PodlesElement.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def star(self):
        """A* = A, (B)* = B*; (A^i B^j)* = q^(-2ij) A^i B^-j on basis keys."""
        out = {}
        for (i, j), c in self.terms.items():
            out[(i, -j)] = c * qpow(-2 * i * j)
        return PodlesElement._raw(out)

    def __repr__(self):
        return f"PodlesElement({render_podles(self)!r})"

    def __str__(self):
        return render_podles(self)


gen_A = PodlesElement._raw({(1, 0): Q_ONE})
gen_B = PodlesElement._raw({(0, 1): Q_ONE})
gen_Bs = PodlesElement._raw({(0, -1): Q_ONE})


@lru_cache(maxsize=None)
def _bb_cross(m, k):
    """B^m B*^k (m, k >= 1) in normal form as a PodlesElement."""
    # innermost pair: B B* = q^2 A - q^4 A^2
    mid = PodlesElement._raw({(1, 0): qpow(2), (2, 0): -qpow(4)})
    left = PodlesElement._raw({(0, m - 1): Q_ONE})
    right = PodlesElement._raw({(0, -(k - 1)): Q_ONE}) if k > 1 else PodlesElement.one()
    return left * mid * right


@lru_cache(maxsize=None)
def _bsb_cross(k, m):
    """B*^k B^m (k, m >= 1) in normal form."""
    mid = PodlesElement._raw({(1, 0): Q_ONE, (2, 0): -Q_ONE})  # B*B = A - A^2
    left = PodlesElement._raw({(0, -(k - 1)): Q_ONE}) if k > 1 else PodlesElement.one()
    right = PodlesElement._raw({(0, m - 1): Q_ONE})
    return left * mid * right


def _mono_mul(m1, m2):
    """Product of basis monomials as (mono, RationalQ) pairs."""
    i1, j1 = m1
    i2, j2 = m2
    # move the B-part of m1 past A^i2:
    # B^m A^i = q^(2 m i) A^i B^m and B*^m A^i = q^(-2 m i) A^i B*^m,
    # uniformly q^(2 j1 i2) with the signed exponent j1
    scal = qpow(2 * j1 * i2)
    i = i1 + i2
    if j1 == 0 or j2 == 0 or (j1 > 0) == (j2 > 0):
        return (((i, j1 + j2), scal),)
    if j1 > 0:
        crossed = _bb_cross(j1, -j2)
    else:
        crossed = _bsb_cross(-j1, j2)
    # prepending A^i to a normal element costs nothing
    return tuple(
        ((ci + i, cj), scal * cc) for (ci, cj), cc in crossed.terms.items()
    )


def pod_multiply(x: PodlesElement, y: PodlesElement) -> PodlesElement:
    return x * y


def sigma(x: PodlesElement) -> PodlesElement:
    """Modular automorphism: A -> A, B -> q^2 B, B* -> q^-2 B*."""
    return PodlesElement._raw(
        {(i, j): c * qpow(2 * j) for (i, j), c in x.terms.items()}
    )


def sigma_inverse(x: PodlesElement) -> PodlesElement:
    return PodlesElement._raw(
        {(i, j): c * qpow(-2 * j) for (i, j), c in x.terms.items()}
    )


# embedded generators
_EMB_A = (gen_b * gen_c).scale(RationalQ.q_power(-1, -1))
_EMB_B = gen_a * gen_c
_EMB_BS = (gen_d * gen_b).scale(-1)


@lru_cache(maxsize=None)
def _embed_mono(mono) -> CoordElement:
    i, j = mono
    out = _EMB_A ** i
    if j > 0:
        out = out * _EMB_B ** j
    elif j < 0:
        out = out * _EMB_BS ** (-j)
    return out


def embed(x: PodlesElement) -> CoordElement:
    """Algebra embedding into the coordinate algebra."""
    out = CoordElement.zero()
    for mono, c in x.terms.items():
        out = out + _embed_mono(mono).scale(c)
    return out


def recognize(x: CoordElement) -> PodlesElement:
    """Inverse of embed on the right-K-invariant subalgebra.

    Each embedded basis monomial is a scalar multiple of a single coordinate
    monomial, so recognition solves a diagonal linear system; a final embed
    verifies the result exactly and makes the map total on the subalgebra.
    """
    if x.localized:
        raise NotInSubalgebra("localized elements are outside the subalgebra")
    if act_right(x, gen_K) != x:
        raise NotInSubalgebra("element is not right-K-invariant")
    out = {}
    for (a, b, c, d), coeff in x.terms.items():
        if d == 0 and c == a + b:
            key = (b, a)  # a^j b^i c^(i+j) = embed of A^i B^j up to scalar
        elif a == 0 and b == c + d:
            key = (c, -d)  # b^(i+k) c^i d^k matches A^i B*^k
        else:
            raise NotInSubalgebra(f"monomial {(a, b, c, d)} has no sphere pattern")
        emb = _embed_mono(key)
        base_coeff = emb.terms[(a, b, c, d)]
        out[key] = coeff / base_coeff
    result = PodlesElement._raw(out)
    if embed(result) != x:
        raise NotInSubalgebra("linear solve failed to reproduce the element")
    return result


def k_invariant(x: CoordElement) -> bool:
    """Whether x <| K = x, the membership criterion for the sphere."""
    return act_right(x, gen_K) == x


def sigma_via_action(x: PodlesElement) -> PodlesElement:
    """sigma computed through the module structure as K^-2 |> x."""
    y = act_left(gen_Kinv, act_left(gen_Kinv, embed(x)))
    return recognize(y)


def render_podles(x: PodlesElement) -> str:
    if not x.terms:
        return "0"
    from .scalar import render

    parts = []
    for (i, j) in sorted(x.terms, key=lambda m: (m[0] + abs(m[1]), m[0], m[1])):
        coeff = x.terms[(i, j)]
        factors = []
        if i == 1:
            factors.append("A")
        elif i:
            factors.append(f"A^{i}")
        if j == 1:
            factors.append("B")
        elif j > 0:
            factors.append(f"B^{j}")
        elif j == -1:
            factors.append("Bs")
        elif j < 0:
            factors.append(f"Bs^{-j}")
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
