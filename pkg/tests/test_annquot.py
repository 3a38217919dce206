"""Annihilators, quotient presentations and witness classification."""

import pytest

from quivertau import (AlgebraElement, Ideal, PresentationError, annihilator,
                       quotient_presentation, standard_module,
                       theorem_b_classify, tilting_over_quotient_check)
from quivertau.annquot import quotient_as_module, restrict_to_quotient
from quivertau.tau import direct_sum_all
from quivertau.homological import pd

from conftest import summands


def test_annihilator_ex1(ex1):
    ann = annihilator(direct_sum_all(summands(ex1)))
    assert [str(p) for p in ann.path_generators] == ["gamma"]
    assert ann.nilpotent
    assert ann.is_closed_under_arrows()


def test_annihilator_ex5(ex5):
    ann = annihilator(direct_sum_all(summands(ex5)))
    assert sorted(str(p) for p in ann.path_generators) == \
        ["delta", "epsilon*mu", "gamma*lam"]


def test_regular_module_is_faithful(ex1):
    a = ex1.algebra
    regs = [standard_module(a, "P", v) for v in a.quiver.vertices]
    ann = annihilator(direct_sum_all(regs))
    assert ann.dim == 0
    assert ann.path_generators == []


def test_quotient_ex2(ex2):
    ann = annihilator(direct_sum_all(summands(ex2)))
    qp = quotient_presentation(ex2.algebra, ann)
    assert qp.arrows_dropped == []
    assert sorted(str(g) for g in qp.quotient.relations) == \
        ["alpha*beta", "beta*alpha", "lam*theta"]


def test_quotient_ex1_disconnects(ex1):
    a = ex1.algebra
    ann = annihilator(direct_sum_all(summands(ex1)))
    qp = quotient_presentation(a, ann)
    assert qp.arrows_dropped == ["gamma"]
    assert [str(g) for g in qp.quotient.relations] == ["omega*beta - theta*alpha"]
    # the quotient quiver falls apart into two components
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(qp.quotient.quiver.vertices)
    for _, s, t in qp.quotient.quiver.arrows:
        g.add_edge(s, t)
    assert nx.number_connected_components(g) == 2


def test_quotient_dimension_bookkeeping(ex1, ex6):
    for session in (ex1, ex6):
        a = session.algebra
        ann = annihilator(direct_sum_all(summands(session)))
        qp = quotient_presentation(a, ann)
        assert a.dim == qp.quotient.dim + ann.dim


def test_quotient_requires_path_generation():
    # over the free commutative square, the line spanned by ab + cd is a
    # two-sided ideal with no path generators
    from quivertau import BoundQuiver, Quiver, Path

    q = Quiver(("1", "2", "3", "4"),
               (("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")))
    a = BoundQuiver(q, [])
    elem = (AlgebraElement.from_path(Path("1", "4", ("a", "b")))
            + AlgebraElement.from_path(Path("1", "4", ("c", "d"))))
    j = Ideal.from_elements(a, [elem])
    assert j.dim == 1
    assert j.path_generators is None
    with pytest.raises(PresentationError, match="paths"):
        quotient_presentation(a, j)


def test_restriction_is_identity_on_data(ex1):
    a = ex1.algebra
    t = direct_sum_all(summands(ex1))
    ann = annihilator(t)
    qp = quotient_presentation(a, ann)
    restricted = restrict_to_quotient(t, qp)
    assert restricted.dims == t.dims
    for name, _, _ in qp.quotient.quiver.arrows:
        assert restricted.maps[name] == t.maps[name]


def test_theorem_b_ex5(ex5):
    a = ex5.algebra
    ann = annihilator(direct_sum_all(summands(ex5)))
    wc = theorem_b_classify(a, ann, a.make_path(["gamma", "lam"]))
    assert wc.kind == "CaseII" and str(wc.gamma) == "alpha"
    assert sorted(str(p) for p in wc.relation.paths()) == \
        ["alpha*gamma*lam", "beta*delta"]
    wc = theorem_b_classify(a, ann, a.make_path(["epsilon", "mu"]))
    assert wc.kind == "CaseI" and str(wc.gamma) == "lam"
    wc = theorem_b_classify(a, ann, a.make_path(["delta"]))
    assert wc.kind == "NotApplicable"


def test_theorem_b_preconditions(ex5):
    a = ex5.algebra
    ann = annihilator(direct_sum_all(summands(ex5)))
    with pytest.raises(PresentationError, match="not in the annihilator"):
        theorem_b_classify(a, ann, a.make_path(["alpha"]))
    with pytest.raises(PresentationError, match="zero in A"):
        theorem_b_classify(a, ann, a.make_path(["lam", "epsilon", "mu"]))


def test_tilting_over_quotient_ex1(ex1):
    report = tilting_over_quotient_check(summands(ex1))
    assert report.passes
    assert report.pd_over_quotient.value <= 1
    assert report.ext1_dim == 0
    assert report.pd_a_quotient_module.value == 2


def test_tilting_over_quotient_regular(ex1):
    a = ex1.algebra
    regs = [standard_module(a, "P", v) for v in a.quiver.vertices]
    report = tilting_over_quotient_check(regs)
    assert report.passes
    assert report.pd_a_t.value == 0


def test_tilting_over_quotient_ex6(ex6):
    report = tilting_over_quotient_check(summands(ex6))
    assert report.passes


def test_pd_quotient_module_ex1(ex1):
    a = ex1.algebra
    ann = annihilator(direct_sum_all(summands(ex1)))
    aq = quotient_as_module(a, ann)
    assert pd(aq).value == 2
