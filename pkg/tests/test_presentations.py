"""Path algebra normal forms, relation taxonomy and class recognition."""

import random
from fractions import Fraction

import pytest

from quivertau import (AlgebraElement, BoundQuiver, Path, PresentationError,
                       Quiver, classify_relations, recognize_class, trivial_path)


def brute_force_ex1_dimension():
    """Independent count of the basis of EX1: enumerate all paths of the
    quiver, drop those containing a monomial relation as a subword, and
    identify theta*alpha with omega*beta."""
    arrows = {"alpha": ("5", "4"), "beta": ("6", "4"), "gamma": ("4", "3"),
              "delta": ("3", "1"), "epsilon": ("3", "2"), "theta": ("7", "5"),
              "omega": ("7", "6")}
    dead = [("alpha", "gamma"), ("beta", "gamma"), ("gamma", "delta")]
    paths = [()]
    frontier = [((), v) for v in "1234567"]
    all_paths = [((), v) for v in "1234567"]
    level = [((a,), arrows[a][0]) for a in arrows]
    while level:
        all_paths.extend(level)
        nxt = []
        for word, src in level:
            tail = arrows[word[-1]][1]
            for a, (s, t) in arrows.items():
                if s == tail:
                    nxt.append((word + (a,), src))
        level = nxt
        if len(all_paths) > 10000:
            raise AssertionError("runaway enumeration")

    def contains_dead(word):
        return any(word[i:i + 2] in dead for i in range(len(word) - 1))

    alive = [w for w, _ in all_paths if not contains_dead(w)]
    normalized = set()
    for w in alive:
        # rewrite every occurrence of theta*alpha to omega*beta
        w = list(w)
        for i in range(len(w) - 1):
            if w[i] == "theta" and w[i + 1] == "alpha":
                w[i], w[i + 1] = "omega", "beta"
        if not contains_dead(tuple(w)):
            normalized.add(tuple(w))
    trivials = 7
    return trivials + len([w for w in normalized if w])


def test_ex1_dimension_against_independent_count(ex1):
    assert brute_force_ex1_dimension() == 16
    assert ex1.algebra.dim == 16


def test_ex1_reduce_binomial(ex1):
    a = ex1.algebra
    theta_alpha = a.make_path(["theta", "alpha"])
    omega_beta = a.make_path(["omega", "beta"])
    assert a.reduce(AlgebraElement.from_path(theta_alpha)) == \
        AlgebraElement.from_path(omega_beta)


def test_ex2_reduce(ex2):
    a = ex2.algebra
    assert a.path_is_zero(a.make_path(["alpha", "beta"]))
    ba = a.make_path(["beta", "alpha"])
    assert a.reduce(AlgebraElement.from_path(ba)) == AlgebraElement.from_path(ba)


def test_trivial_idempotent(ex1):
    a = ex1.algebra
    e = AlgebraElement.from_path(trivial_path("3"))
    assert a.mul(e, e) == e


def test_point_algebra():
    a = BoundQuiver(Quiver(("1",), ()), [])
    assert a.dim == 1
    assert a.nilpotency == 1
    assert a.basis == [trivial_path("1")]


def test_relation_too_short_rejected():
    q = Quiver(("1", "2"), (("a", "1", "2"),))
    with pytest.raises(PresentationError, match="length < 2"):
        BoundQuiver(q, [AlgebraElement.from_path(Path("1", "2", ("a",)))])


def test_loop_without_relations_rejected():
    q = Quiver(("1",), (("x", "1", "1"),))
    with pytest.raises(PresentationError, match="not nilpotent"):
        BoundQuiver(q, [], lmax=10)


def test_reduce_is_linear_idempotent_and_kills_ideal(ex1, ex5):
    rng = random.Random(7)
    for session in (ex1, ex5):
        a = session.algebra
        paths = a.nonzero_paths() + [p for p in a._nf if a.path_nf(p).is_zero()][:5]
        for _ in range(20):
            x = AlgebraElement({rng.choice(paths): Fraction(rng.randint(-3, 3))
                                for _ in range(3)})
            y = AlgebraElement({rng.choice(paths): Fraction(rng.randint(-3, 3))
                                for _ in range(3)})
            rx = a.reduce(x)
            assert a.reduce(rx) == rx
            assert a.reduce(x + y) == a.reduce(x) + a.reduce(y)
            assert a.mul(x, y) == a.reduce(a.reduce(x).raw_mul(a.reduce(y)))
        for g in a.relations:
            assert a.reduce(g).is_zero()
            for x in (AlgebraElement.from_path(p) for p in paths[:6]):
                assert a.mul(g, x).is_zero()
                assert a.mul(x, g).is_zero()


def test_dimension_accounting_and_radical_nilpotency(ex1, ex2, ex6):
    for session in (ex1, ex2, ex6):
        a = session.algebra
        assert a.dim == sum(len(b) for b in a.basis_by_pair.values())
        n = a.nilpotency
        # rad^(n-1) != 0: some product of n-1 arrows survives
        assert any(len(p) == n - 1 for p in a.nonzero_paths()) or n == 1
        # rad^n = 0: every n-fold product of basis radical elements dies
        long_paths = [p for p in a._nf if len(p) == n]
        assert all(a.path_nf(p).is_zero() for p in long_paths)


def test_classification_ex5(ex5):
    classes = {str(rc.generator): rc for rc in classify_relations(ex5.algebra)}
    binom = classes["-beta*delta + alpha*gamma*lam"]
    assert binom.kind == "minimal"
    assert tuple(map(str, binom.binomial_pair)) == ("beta*delta", "alpha*gamma*lam")
    assert classes["lam*epsilon*mu"].kind == "zero-relation"


def test_classification_ex4_all_zero_relations(ex4_n4):
    assert all(rc.kind == "zero-relation" for rc in classify_relations(ex4_n4.algebra))


def test_classification_non_minimal_sum():
    # a generator p + q with p already in the ideal classifies as
    # non-minimal, without raising
    q = Quiver(("1", "2", "3", "4"),
               (("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")))
    ab = Path("1", "4", ("a", "b"))
    cd = Path("1", "4", ("c", "d"))
    gen = AlgebraElement.from_path(ab) + AlgebraElement.from_path(cd)
    algebra = BoundQuiver(q, [AlgebraElement.from_path(ab), gen])
    classes = {str(rc.generator): rc.kind for rc in classify_relations(algebra)}
    assert classes["a*b"] == "zero-relation"
    assert classes["a*b + c*d"] == "non-minimal"


def test_recognition_catalog(ex1, ex2, ex4_n4, ex5, ex6):
    r1 = recognize_class(ex1.algebra)
    assert not r1.is_monomial and r1.is_special_biserial
    r2 = recognize_class(ex2.algebra)
    assert r2.is_monomial and r2.is_special_biserial
    r4 = recognize_class(ex4_n4.algebra)
    assert r4.is_monomial and not r4.is_special_biserial
    assert any("alpha" in v for v in r4.violations)
    r5 = recognize_class(ex5.algebra)
    assert not r5.is_monomial and not r5.is_special_biserial
    assert any("epsilon" in v for v in r5.violations)
    r6 = recognize_class(ex6.algebra)
    assert not r6.is_monomial and r6.is_special_biserial


def test_recognition_hereditary_a2():
    a = BoundQuiver(Quiver(("1", "2"), (("a", "1", "2"),)), [])
    rep = recognize_class(a)
    assert rep.is_monomial and rep.is_special_biserial


def test_binomial_pairs_ex1(ex1):
    pairs = ex1.algebra.binomial_pairs()
    assert [(str(p), str(q)) for p, q in pairs] == [("omega*beta", "theta*alpha")]


def test_minimal_zero_paths_ex2(ex2):
    zeros = {str(p) for p in ex2.algebra.minimal_zero_paths()}
    assert zeros == {"lam*theta", "alpha*beta", "lam*beta*alpha"}
