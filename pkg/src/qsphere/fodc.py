"""The 2-dimensional covariant differential calculus on the quantum sphere
and the twisted cyclic cohomology machinery, including the volume 2-form
pairing and the distinguished 2-cocycle.

A one-form dx is represented by its two multiplication components
(q^(-1/2) R_F(x), q^(1/2) R_E(x)); the global unit i of dx = i[D, x] is
dropped, which no checked identity is sensitive to.  The wedge of two
one-forms is reduced against the central volume form w via

    x dy ^ dz = x (R_F(y) R_E(z) - q^2 R_E(y) R_F(z)) w,

so every 2-form is recorded by its unique coefficient in the sphere algebra.

Chains are tensors over the sphere; cochains are multilinear evaluators.
The twisted boundary, cyclicity and pairing operators follow the usual
conventions for an algebra automorphism sigma.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coordalg import CoordElement, gen_a, gen_b, gen_binv, gen_c, gen_cinv, gen_d
from .errors import ArityError, NotInSubalgebra
from .haar import haar, haar_podles
from .podles import (
    PodlesElement,
    embed,
    gen_A,
    gen_B,
    gen_Bs,
    recognize,
    sigma,
)
from .scalar import Q_ONE, Q_ZERO, RationalQ, qhalfpow, qlambda, qpow
from .uq import UqElement, gen_E, gen_F, r_action, uq_coproduct


def r_e(x: PodlesElement) -> CoordElement:
    return r_action(gen_E, embed(x))


def r_f(x: PodlesElement) -> CoordElement:
    return r_action(gen_F, embed(x))


@dataclass(frozen=True)
class OneForm:
    """Off-diagonal pair of multiplication symbols representing a 1-form."""

    fcomp: CoordElement
    ecomp: CoordElement

    def __add__(self, other):
        return OneForm(self.fcomp + other.fcomp, self.ecomp + other.ecomp)

    def __sub__(self, other):
        return OneForm(self.fcomp - other.fcomp, self.ecomp - other.ecomp)

    def is_zero(self):
        return self.fcomp.is_zero() and self.ecomp.is_zero()


def differential(x: PodlesElement) -> OneForm:
    """dx as the pair (q^(-1/2) R_F(x), q^(1/2) R_E(x))."""
    return OneForm(r_f(x).scale(qhalfpow(-1)), r_e(x).scale(qhalfpow(1)))


def lmul(x: PodlesElement, w: OneForm) -> OneForm:
    y = embed(x)
    return OneForm(y * w.fcomp, y * w.ecomp)


def rmul(w: OneForm, x: PodlesElement) -> OneForm:
    y = embed(x)
    return OneForm(w.fcomp * y, w.ecomp * y)


def wedge_kernel(y: PodlesElement, z: PodlesElement) -> PodlesElement:
    """The coefficient of dy ^ dz against the volume form:
    R_F(y) R_E(z) - q^2 R_E(y) R_F(z), recognized back into the sphere."""
    u = r_f(y) * r_e(z) - (r_e(y) * r_f(z)).scale(qpow(2))
    try:
        return recognize(u)
    except NotInSubalgebra as exc:  # pragma: no cover - would be a bug
        raise NotInSubalgebra(f"wedge kernel left the sphere algebra: {exc}")


def wedge_coeff(eta_pairs, rho_pairs) -> PodlesElement:
    """Volume coefficient of (sum_i x_i dy_i) ^ (sum_j z_j dw_j).

    The left factors of the second form are absorbed with the Leibniz rule
    dy z = d(y z) - y dz before applying the kernel.
    """
    out = PodlesElement.zero()
    for x, y in eta_pairs:
        for z, w in rho_pairs:
            out = out + x * wedge_kernel(y * z, w) - (x * y) * wedge_kernel(z, w)
    return out


_P_MATRIX = {
    (1, 1): gen_A,
    (1, 2): gen_Bs,
    (2, 1): gen_B,
    (2, 2): PodlesElement.one() - gen_A.scale(qpow(2)),
}


def volume_check() -> PodlesElement:
    """Volume coefficient of the invariant 2-form built from the projector
    matrix [[A, B*], [B, 1 - q^2 A]]; the expected value is 1."""
    total = PodlesElement.zero()
    for i in (1, 2):
        for j in (1, 2):
            for k in (1, 2):
                coeff = qpow(2 - 2 * i)
                term = wedge_kernel(_P_MATRIX[(i, j)], _P_MATRIX[(j, k)])
                total = total + (term * _P_MATRIX[(k, i)]).scale(coeff)
    return total


# localized commutator representation of the two derivations
_DB_INV = gen_d * gen_binv
_AC_INV = gen_a * gen_cinv


def localized_commutator_check(x: PodlesElement) -> tuple[bool, bool]:
    """Check R_F(x) = [q^(1/2) lambda^-1 d b^-1, x] and
    R_E(x) = -[q^(-1/2) lambda^-1 a c^-1, x] in the localized algebra."""
    lam_inv = qlambda().inverse()
    y = embed(x).localize()
    lhs_f = _DB_INV * y - y * _DB_INV
    ok_f = lhs_f.scale(qhalfpow(1) * lam_inv) == r_f(x).localize()
    lhs_e = _AC_INV * y - y * _AC_INV
    ok_e = lhs_e.scale(qhalfpow(-1) * lam_inv * -1) == r_e(x).localize()
    return ok_f, ok_e


# -- twisted cyclic cohomology ------------------------------------------------


class Cochain:
    """(n+1)-linear form on the sphere algebra, held extensionally."""

    __slots__ = ("arity", "evaluator", "name")

    def __init__(self, arity, evaluator, name=""):
        self.arity = arity
        self.evaluator = evaluator
        self.name = name

    def __call__(self, *args: PodlesElement) -> RationalQ:
        if len(args) != self.arity:
            raise ArityError(f"{self.name or 'cochain'} expects {self.arity} arguments")
        return self.evaluator(*args)


class Chain:
    """Element of the (n+1)-fold tensor power of the sphere algebra."""

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
                    raise ArityError("chain key arity mismatch")
                clean[key] = coeff
        self.terms = clean

    @staticmethod
    def of(*factors: PodlesElement):
        arity = len(factors)
        terms = {(): Q_ONE}
        for f in factors:
            terms = {
                key + (m,): c0 * c
                for key, c0 in terms.items()
                for m, c in f.terms.items()
            }
        return Chain(arity, terms)

    def __add__(self, other):
        if self.arity != other.arity:
            raise ArityError("chain arity mismatch")
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
        out = Chain(self.arity)
        out.terms = d
        return out

    def __sub__(self, other):
        return self + other.scale(RationalQ.from_int(-1))

    def scale(self, coeff):
        out = Chain(self.arity)
        out.terms = {}
        for k, c in self.terms.items():
            v = c * coeff
            if not v.is_zero():
                out.terms[k] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def slots(self):
        """Iterate (coeff, tuple of basis PodlesElements)."""
        for key, coeff in self.terms.items():
            yield coeff, tuple(PodlesElement.monomial(m) for m in key)


def b_sigma(phi: Cochain) -> Cochain:
    """Twisted coboundary: inserts products at adjacent slots and wraps the
    last argument through sigma."""
    n = phi.arity - 1

    def ev(*xs):
        if len(xs) != n + 2:
            raise ArityError("coboundary arity mismatch")
        total = Q_ZERO
        for j in range(n + 1):
            args = xs[:j] + (xs[j] * xs[j + 1],) + xs[j + 2 :]
            val = phi(*args)
            total = total + (val if j % 2 == 0 else -val)
        wrap = phi(sigma(xs[-1]) * xs[0], *xs[1:-1])
        total = total + (wrap if (n + 1) % 2 == 0 else -wrap)
        return total

    return Cochain(phi.arity + 1, ev, f"b_sigma({phi.name})")


def lambda_sigma(phi: Cochain) -> Cochain:
    """Twisted cyclic permutation of the arguments."""
    n = phi.arity - 1

    def ev(*xs):
        if len(xs) != phi.arity:
            raise ArityError("cyclicity arity mismatch")
        val = phi(sigma(xs[-1]), *xs[:-1])
        return val if n % 2 == 0 else -val

    return Cochain(phi.arity, ev, f"lambda_sigma({phi.name})")


def b_sigma_chain(eta: Chain) -> Chain:
    n = eta.arity - 1
    out = Chain(n)
    for coeff, xs in eta.slots():
        for j in range(n):
            prod = xs[j] * xs[j + 1]
            rest = xs[:j] + (prod,) + xs[j + 2 :]
            term = Chain.of(*rest).scale(coeff if j % 2 == 0 else -coeff)
            out = out + term
        wrap = Chain.of(sigma(xs[-1]) * xs[0], *xs[1:-1]).scale(
            coeff if n % 2 == 0 else -coeff
        )
        out = out + wrap
    return out


def lambda_sigma_chain(eta: Chain) -> Chain:
    n = eta.arity - 1
    out = Chain(eta.arity)
    for coeff, xs in eta.slots():
        out = out + Chain.of(sigma(xs[-1]), *xs[:-1]).scale(
            coeff if n % 2 == 0 else -coeff
        )
    return out


def pair_chain(phi: Cochain, eta: Chain) -> RationalQ:
    if phi.arity != eta.arity:
        raise ArityError("cochain/chain arity mismatch")
    total = Q_ZERO
    for coeff, xs in eta.slots():
        total = total + phi(*xs) * coeff
    return total


def act_on_chain(f: UqElement, eta: Chain) -> Chain:
    """Diagonal left action through the iterated coproduct."""
    from .uq import act_left

    out = Chain(eta.arity)
    for key, coeff in uq_coproduct(f, eta.arity).terms.items():
        legs = [UqElement.monomial(m) for m in key]
        for ccoeff, xs in eta.slots():
            factors = []
            ok = True
            for leg, x in zip(legs, xs):
                y = act_left(leg, embed(x))
                factors.append(recognize(y))
            term = Chain.of(*factors).scale(coeff * ccoeff)
            out = out + term
    return out


def tau(x0: PodlesElement, x1: PodlesElement, x2: PodlesElement) -> RationalQ:
    """The twisted cyclic 2-cocycle
    tau(x0, x1, x2) = h(x0 (R_F(x1) R_E(x2) - q^2 R_E(x1) R_F(x2)))."""
    kernel = r_f(x1) * r_e(x2) - (r_e(x1) * r_f(x2)).scale(qpow(2))
    return haar(embed(x0) * kernel)


TAU = Cochain(3, tau, "tau")


def tau_via_volume(x0, x1, x2) -> RationalQ:
    """tau computed through the volume form: h applied to the wedge
    coefficient of x0 dx1 ^ dx2 (independent route)."""
    return haar_podles(wedge_coeff([(x0, x1)], [(PodlesElement.one(), x2)]))


def eta() -> Chain:
    """The twisted 2-cycle whose pairing with tau is -1."""
    A, B, Bs = gen_A, gen_B, gen_Bs
    q2 = qpow(2)
    qm2 = qpow(-2)
    return (
        Chain.of(Bs, A, B)
        + Chain.of(B, Bs, A).scale(q2)
        + Chain.of(A, B, Bs).scale(q2)
        + Chain.of(Bs, B, A).scale(-qm2)
        + Chain.of(A, Bs, B).scale(-qm2)
        + Chain.of(B, A, Bs).scale(RationalQ.from_int(-1))
        + Chain.of(A, A, A).scale(qpow(6) - qm2)
    )
