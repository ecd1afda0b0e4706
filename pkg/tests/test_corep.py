"""Tests for the ladder construction and exact matrices."""

from fractions import Fraction

import pytest

from qsphere.coordalg import CoordElement
from qsphere.corep import (
    ExactMatrix,
    alpha_squared,
    build_ladder,
    ladder_vector,
    mult_matrix,
    vplus_vminus_basis,
)
from qsphere.errors import CutoffExceeded
from qsphere.haar import haar_product, inner
from qsphere.podles import PodlesElement, embed, gen_A, gen_B, gen_Bs
from qsphere.scalar import Q_ONE, Q_ZERO, qhalfpow, qint
from qsphere.uq import act_left, act_right, gen_E, gen_F, gen_K, r_action


def test_seed_vector_is_a():
    v = ladder_vector(1, -1, -1)
    assert v.elem == CoordElement.monomial((1, 0, 0, 0))
    assert v.norm2 == inner(v.elem, v.elem)


def test_weight_invariants():
    for (twol, twoj, twok), v in build_ladder(Fraction(5, 2)).items():
        assert act_right(v.elem, gen_K) == v.elem.scale(qhalfpow(twoj))
        assert act_left(gen_K, v.elem) == v.elem.scale(qhalfpow(twok))


def test_norm2_consistency():
    for v in build_ladder(2).values():
        assert v.norm2 == inner(v.elem, v.elem)
        assert not v.norm2.is_zero()


def test_orthogonality_up_to_seven_halves():
    fam = build_ladder(Fraction(7, 2))
    vecs = list(fam.values())
    for i, v in enumerate(vecs):
        for w in vecs[i + 1 :]:
            assert haar_product(w.star_elem(), v.elem) == Q_ZERO


def test_ladder_bottom_annihilated():
    # R_E kills the bottom of each j-ladder
    for twol in (1, 2, 3):
        v = ladder_vector(twol, -twol, -twol)
        assert r_action(gen_E, v.elem).is_zero()
        # F |> kills the bottom of each k-ladder
        assert act_left(gen_F, v.elem).is_zero()


def test_dirac_eigenvalue_ladder_identity():
    # R_E(w_{1/2,k}) = [l+1/2+1/2]^2 w_{-1/2,k} exactly: the squared step
    # equals [n]^2 with n = l + 1/2, the absolute Dirac eigenvalue
    for twol in (1, 3, 5, 7):
        n = (twol + 1) // 2
        for twok in range(-twol, twol + 1, 2):
            up = ladder_vector(twol, 1, twok)
            down = ladder_vector(twol, -1, twok)
            assert alpha_squared(twol, -1) == qint(n) * qint(n)
            assert r_action(gen_E, up.elem) == down.elem.scale(qint(n) * qint(n))
            # norm ratio matches the same factor
            assert up.norm2 == down.norm2 * qint(n) * qint(n)
            # and R_F raises back by construction
            assert r_action(gen_F, down.elem) == up.elem


def test_vplus_vminus_membership():
    vplus, vminus = vplus_vminus_basis(Fraction(5, 2))
    for v in vplus:
        assert act_right(v.elem, gen_K) == v.elem.scale(qhalfpow(1))
    for v in vminus:
        assert act_right(v.elem, gen_K) == v.elem.scale(qhalfpow(-1))
    assert len(vplus) == len(vminus) == 2 + 4 + 6


def test_sphere_multiplication_preserves_families():
    # x * v stays inside the same family span: expanding A * v over the
    # V+ basis reproduces the element exactly (no residual)
    vplus, _ = vplus_vminus_basis(Fraction(7, 2))
    m = mult_matrix(gen_A, vplus, vplus)
    for beta in vplus:
        if beta.key() in m.untrusted_cols:
            continue
        u = embed(gen_A) * beta.elem
        acc = CoordElement.zero()
        for alpha in vplus:
            c = m.entry(alpha.key(), beta.key())
            if not c.is_zero():
                acc = acc + alpha.elem.scale(c)
        assert acc == u


def test_left_action_preserves_families():
    vplus, vminus = vplus_vminus_basis(2)
    for fam, tj in ((vplus, 1), (vminus, -1)):
        for v in fam[:6]:
            w = act_left(gen_E, v.elem)
            if w.is_zero():
                continue
            assert act_right(w, gen_K) == w.scale(qhalfpow(tj))


def test_mult_matrix_identity():
    vplus, _ = vplus_vminus_basis(2)
    m = mult_matrix(PodlesElement.one(), vplus, vplus)
    for a in vplus:
        for b in vplus:
            expected = Q_ONE if a.key() == b.key() else Q_ZERO
            assert m.entry(a.key(), b.key()) == expected
    assert not m.untrusted_cols


def test_mult_matrix_A_is_block_banded():
    # multiplication by A couples l to l and l +- 1 only (exact computation
    # at l_max = 4 is the oracle)
    vplus, _ = vplus_vminus_basis(4)
    m = mult_matrix(gen_A, vplus, vplus)
    for (rk, ck), v in m.entries.items():
        assert abs(rk[0] - ck[0]) <= 2
        assert rk[2] == ck[2]  # A has left weight 0: k preserved
        assert not v.is_zero()
    # some l -> l+1 coupling really occurs
    assert any(rk[0] != ck[0] for (rk, ck) in m.entries)


def test_mult_matrix_star_adjacency():
    # (B w_beta, w_alpha) = (w_beta, B* w_alpha), i.e. the matrices of B and
    # B* are adjoint up to the norm weights
    vplus, _ = vplus_vminus_basis(3)
    mb = mult_matrix(gen_B, vplus, vplus)
    mbs = mult_matrix(gen_Bs, vplus, vplus)
    for alpha in vplus:
        for beta in vplus:
            if beta.key() in mb.untrusted_cols or alpha.key() in mbs.untrusted_cols:
                continue
            lhs = mb.entry(alpha.key(), beta.key()) * alpha.norm2
            rhs = mbs.entry(beta.key(), alpha.key()) * beta.norm2
            assert lhs == rhs


def test_mult_matrix_untrusted_boundary():
    vplus, _ = vplus_vminus_basis(2)
    m = mult_matrix(gen_A, vplus, vplus)
    top = max(v.twol for v in vplus)
    for v in vplus:
        flagged = v.key() in m.untrusted_cols
        assert flagged == (v.twol + 2 > top)


def test_cutoff_guard():
    with pytest.raises(CutoffExceeded):
        build_ladder(100)


def test_exact_matrix_export_roundtrip():
    vplus, _ = vplus_vminus_basis(1)
    m = mult_matrix(gen_A, vplus, vplus)
    js = m.to_json()
    assert '"entries"' in js
    csv = m.to_csv()
    assert csv.count("\n") == len(m.row_keys)
