"""Standard modules, string modules, Hom spaces and isomorphism testing."""

import random
from fractions import Fraction

import pytest

from quivertau import (PresentationError, Representation, StringWord, hom_space,
                       is_indecomposable, is_isomorphic, standard_module,
                       string_module, structure)
from quivertau import ratlinalg as rl
from quivertau.annquot import Ideal, quotient_presentation
from quivertau.presentations import AlgebraElement

from conftest import summands
from genrandom import module_pool


def test_standard_module_dimensions(ex1, ex2):
    p1 = standard_module(ex2.algebra, "P", "1")
    assert p1.dim_vector() == (1, 1, 1, 0)
    p7 = standard_module(ex1.algebra, "P", "7")
    assert p7.total_dim == 4
    for v in "1234567":
        s = standard_module(ex1.algebra, "S", v)
        p = standard_module(ex1.algebra, "P", v)
        is_sink = not ex1.algebra.quiver.arrows_from(v)
        assert (p.total_dim == 1) == is_sink
        assert is_isomorphic(s, p) == is_sink


def test_injectives_satisfy_relations(ex1, ex5, ex6):
    for session in (ex1, ex5, ex6):
        for v in session.algebra.quiver.vertices:
            standard_module(session.algebra, "I", v).check_relations()


def test_yoneda_dimension_formula(ex1, ex6):
    rng = random.Random(3)
    for session in (ex1, ex6):
        a = session.algebra
        for m in module_pool(rng, a, size=6):
            for v in a.quiver.vertices:
                p = standard_module(a, "P", v)
                assert len(hom_space(p, m)) == m.dims[v]


def test_string_module_dimensions(ex6):
    a = ex6.algebra
    m = string_module(a, StringWord((("alpha", True), ("gamma", True))))
    assert {v: d for v, d in m.dims.items() if d} == {"1": 1, "2": 1, "3": 1}
    triv = string_module(a, StringWord((), "6"))
    assert is_isomorphic(triv, standard_module(a, "S", "6"))


def test_string_dimension_vector_counts_letters(ex2):
    w = StringWord((("alpha", True), ("theta", True), ("omega", False),
                    ("lam", True), ("beta", True)))
    m = string_module(ex2.algebra, w)
    assert m.dim_vector() == (2, 2, 1, 1)
    assert m.total_dim == len(w.letters) + 1


def test_string_rejects_zero_relation_over_quotient(ex6):
    a = ex6.algebra
    gl = StringWord((("gamma", True), ("lam", True)))
    string_module(a, gl)  # valid over A
    j = Ideal.from_elements(a, [AlgebraElement.from_path(a.make_path(["gamma", "lam"]))])
    quotient = quotient_presentation(a, j).quotient
    with pytest.raises(PresentationError, match="zero path|forbidden"):
        string_module(quotient, gl)


def test_string_rejects_unreduced(ex6):
    with pytest.raises(PresentationError, match="not reduced"):
        string_module(ex6.algebra, StringWord((("alpha", True), ("alpha", False))))


def test_structure_ex1(ex1):
    a = ex1.algebra
    p7 = standard_module(a, "P", "7")
    st = structure(p7)
    rad_top = structure(st.radical).top_multiplicities
    assert rad_top == {"5": 1, "6": 1}
    s3 = standard_module(a, "S", "3")
    rep = structure(s3)
    assert rep.top_multiplicities == {"3": 1}
    assert rep.radical.total_dim == 0


def test_structure_ex5_top_count(ex5):
    t = summands(ex5)
    total = sum(sum(structure(m).top_multiplicities.values()) for m in t)
    assert total == 7


def test_hom_simples_delta(ex1):
    a = ex1.algebra
    for v in "1234567":
        for w in "1234567":
            d = len(hom_space(standard_module(a, "S", v), standard_module(a, "S", w)))
            assert d == (1 if v == w else 0)


def test_hom_dims_ex4_family(ex4_n4):
    s = ex4_n4
    ta = [s.modules[f"Ta{j}"] for j in (1, 2, 3)]
    assert len(hom_space(ta[1], ta[0])) == 1
    assert len(hom_space(ta[2], ta[1])) == 1
    assert len(hom_space(ta[2], ta[0])) == 0
    pn, pn1 = s.modules["Pn"], s.modules["Pn1"]
    assert len(hom_space(pn1, pn)) == 1


def test_is_isomorphic_equivalence(ex1):
    rng = random.Random(11)
    pool = module_pool(rng, ex1.algebra, size=8)
    for m in pool:
        assert is_isomorphic(m, m)
    for m in pool:
        for n in pool:
            assert is_isomorphic(m, n) == is_isomorphic(n, m)


def test_is_isomorphic_base_change_invariance(ex6):
    rng = random.Random(13)
    a = ex6.algebra
    m = standard_module(a, "P", "1")
    # conjugate by random invertible matrices per vertex
    base = {}
    for v, d in m.dims.items():
        while True:
            g = [[Fraction(rng.randint(-2, 2)) for _ in range(d)] for _ in range(d)]
            if rl.is_invertible(g):
                base[v] = g
                break
    amap = a.quiver.arrow_map()
    maps = {}
    for name, (s, t) in amap.items():
        inv = rl.invert(base[s])
        maps[name] = rl.mat_mul(rl.mat_mul(inv, m.maps[name], ncols=m.dims[t]),
                                base[t], ncols=m.dims[t])
    twisted = Representation(a, dict(m.dims), maps)
    assert is_isomorphic(m, twisted)
    assert not is_isomorphic(m, standard_module(a, "P", "2"))


def test_indecomposability(ex1, ex2):
    a = ex1.algebra
    for v in "1234567":
        assert is_indecomposable(standard_module(a, "S", v))
        assert is_indecomposable(standard_module(a, "P", v))
        assert is_indecomposable(standard_module(a, "I", v))
    s = standard_module(a, "S", "3")
    assert not is_indecomposable(s.direct_sum(s))
    u1 = ex2.modules["U1"]
    assert is_indecomposable(u1)
    with pytest.raises(PresentationError):
        is_indecomposable(Representation(a, {}, check=False))


def test_all_strings_indecomposable_ex6(ex6):
    from quivertau.tau import enumerate_strings

    for w in enumerate_strings(ex6.algebra):
        assert is_indecomposable(string_module(ex6.algebra, w))
