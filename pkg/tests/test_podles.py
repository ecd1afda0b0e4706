"""Tests for the quantum-sphere algebra."""

import random

import pytest

from qsphere.coordalg import CoordElement, gen_a, gen_b, gen_c
from qsphere.errors import NotInSubalgebra
from qsphere.podles import (
    PodlesElement,
    embed,
    gen_A,
    gen_B,
    gen_Bs,
    pod_multiply,
    recognize,
    render_podles,
    sigma,
    sigma_inverse,
    sigma_via_action,
)
from qsphere.scalar import Q_ONE, qpow
from qsphere.uq import act_left, gen_E, gen_F, gen_K, r_action


def rand_podles(rng, max_exp=3, terms=3):
    out = PodlesElement.zero()
    for _ in range(terms):
        i = rng.randint(0, max_exp)
        j = rng.randint(-max_exp, max_exp)
        coeff = qpow(rng.randint(-1, 1)) * rng.choice([1, -1])
        out = out + PodlesElement.monomial((i, j), coeff)
    return out


def test_defining_relations():
    assert gen_B * gen_A == (gen_A * gen_B).scale(qpow(2))
    assert gen_A * gen_Bs == (gen_Bs * gen_A).scale(qpow(2))
    assert gen_Bs * gen_B == gen_A - gen_A * gen_A
    assert gen_B * gen_Bs == gen_A.scale(qpow(2)) - (gen_A * gen_A).scale(qpow(4))


def test_normal_form_basis():
    x = gen_B * gen_B * gen_Bs
    # no mixed B, B* remains
    assert all(True for _ in x.terms)
    signs = {(j > 0) - (j < 0) for _, j in x.terms if j}
    assert len(signs) <= 1


def test_multiplication_confluence_randomized():
    rng = random.Random(17)
    gens = [gen_A, gen_B, gen_Bs]
    from functools import reduce

    for _ in range(200):
        word = [gens[rng.randrange(3)] for _ in range(rng.randint(2, 5))]
        left = reduce(lambda x, y: x * y, word)
        items = list(word)
        while len(items) > 1:
            i = rng.randrange(len(items) - 1)
            items[i : i + 2] = [items[i] * items[i + 1]]
        assert items[0] == left


def test_embed_generators():
    from qsphere.coordalg import gen_d

    assert embed(gen_A) == (gen_b * gen_c).scale(qpow(-1) * -1)
    assert embed(gen_B) == gen_a * gen_c
    assert embed(gen_Bs) == (gen_d * gen_b).scale(-1)
    assert embed(PodlesElement.one()) == CoordElement.one()


def test_embed_is_algebra_map_randomized():
    rng = random.Random(23)
    for _ in range(30):
        x, y = rand_podles(rng, 2, 2), rand_podles(rng, 2, 2)
        assert embed(x * y) == embed(x) * embed(y)
        assert embed(x + y) == embed(x) + embed(y)


def test_embed_matches_abstract_relations():
    # embed(B*B) equals the normal form of (-db)(ac) and embed(A - A^2)
    assert embed(gen_Bs * gen_B) == embed(gen_Bs) * embed(gen_B)
    assert embed(gen_Bs) * embed(gen_B) == embed(gen_A - gen_A * gen_A)


def test_embed_injective_on_basis():
    # distinct basis monomials map to distinct coordinate monomials
    seen = {}
    for i in range(0, 7):
        for j in range(-6, 7):
            if i + abs(j) > 6:
                continue
            img = embed(PodlesElement.monomial((i, j)))
            assert len(img.terms) == 1
            mono = next(iter(img.terms))
            assert mono not in seen, f"collision {(i, j)} vs {seen[mono]}"
            seen[mono] = (i, j)


def test_star_matches_embedding():
    rng = random.Random(31)
    for _ in range(20):
        x = rand_podles(rng, 2, 2)
        assert embed(x.star()) == embed(x).star()


def test_recognize_generators():
    assert recognize(embed(gen_A)) == gen_A
    assert recognize((gen_b * gen_c).scale(qpow(-1) * -1)) == gen_A
    assert recognize(CoordElement.one()) == PodlesElement.one()


def test_recognize_embed_roundtrip_randomized():
    rng = random.Random(37)
    for _ in range(40):
        x = rand_podles(rng, 3, 3)
        assert recognize(embed(x)) == x


def test_recognize_rejects_non_invariant():
    with pytest.raises(NotInSubalgebra):
        recognize(gen_a)
    with pytest.raises(NotInSubalgebra):
        recognize(gen_b)


def test_recognize_r_products():
    # R_F(B) R_E(B*) lies in the sphere algebra
    x = r_action(gen_F, embed(gen_B)) * r_action(gen_E, embed(gen_Bs))
    recognize(x)
    y = r_action(gen_E, embed(gen_B)) * r_action(gen_F, embed(gen_Bs))
    recognize(y)


def test_sigma_on_generators():
    assert sigma(gen_A) == gen_A
    assert sigma(gen_B) == gen_B.scale(qpow(2))
    assert sigma(gen_Bs) == gen_Bs.scale(qpow(-2))
    a3 = gen_A * gen_A * gen_A
    assert sigma(a3) == a3


def test_sigma_is_automorphism_randomized():
    rng = random.Random(41)
    for _ in range(25):
        x, y = rand_podles(rng, 2, 2), rand_podles(rng, 2, 2)
        assert sigma(x * y) == sigma(x) * sigma(y)
        assert sigma_inverse(sigma(x)) == x


def test_sigma_agrees_with_module_action_randomized():
    rng = random.Random(47)
    for _ in range(15):
        x = rand_podles(rng, 2, 2)
        assert sigma_via_action(x) == sigma(x)


def test_sphere_is_stable_under_left_action_randomized():
    rng = random.Random(53)
    for f in (gen_E, gen_F, gen_K):
        for _ in range(10):
            x = rand_podles(rng, 2, 2)
            y = act_left(f, embed(x))
            recognize(y)  # must not raise


def test_render():
    assert render_podles(gen_A * gen_B) == "A*B"
    assert render_podles(gen_Bs * gen_B) == "A - A^2"
