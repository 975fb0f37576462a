import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tautilt.algebra import (
    ZERO_ALGEBRA,
    AlgebraSpec,
    Indec,
    InvalidAlgebraError,
    Shape,
    above,
    below,
    composition_vertices,
    hom_dim,
    hom_nonzero,
    indecomposables,
    make_linear_kupisch,
    make_uniform,
    quotient_kill,
    tau,
)

from conftest import algebras, hom_dim_by_linear_algebra, linear_kupisch


@pytest.mark.parametrize(
    "shape, n, r, expected",
    [
        ("linear", 4, 2, (2, 2, 2, 1)),
        ("linear", 3, 5, (3, 2, 1)),
        ("cyclic", 1, 2, (2,)),
        ("cyclic", 3, 4, (4, 4, 4)),
        ("linear", 0, 3, ()),
    ],
)
def test_make_uniform(shape, n, r, expected):
    assert make_uniform(shape, n, r).kupisch == expected


@pytest.mark.parametrize("n, r", [(-1, 2), (3, 0), (2, -4)])
def test_make_uniform_rejects(n, r):
    with pytest.raises(InvalidAlgebraError):
        make_uniform("linear", n, r)


def test_make_linear_kupisch():
    assert make_linear_kupisch([2, 3, 2, 1]).n == 4
    assert make_linear_kupisch([1]).kupisch == (1,)
    with pytest.raises(InvalidAlgebraError, match="index 1"):
        make_linear_kupisch([3, 1, 1])
    with pytest.raises(InvalidAlgebraError):
        make_linear_kupisch([2, 2])
    with pytest.raises(InvalidAlgebraError):
        make_linear_kupisch([0, 1])
    with pytest.raises(InvalidAlgebraError):
        AlgebraSpec(Shape.CYCLIC, (2, 3))


def test_indecomposables():
    assert indecomposables(make_linear_kupisch([2, 1])) == [(1, 1), (1, 2), (2, 1)]
    assert len(indecomposables(make_uniform("cyclic", 2, 2))) == 4
    assert indecomposables(ZERO_ALGEBRA) == []


def test_tau_examples():
    A2 = make_linear_kupisch([2, 1])
    assert tau(A2, Indec(1, 1)) == Indec(2, 1)
    assert tau(A2, Indec(1, 2)) is None
    loop = make_uniform("cyclic", 1, 2)
    assert tau(loop, Indec(1, 1)) == Indec(1, 1)


def test_hom_examples():
    A2 = make_linear_kupisch([2, 1])
    assert not hom_nonzero(A2, Indec(1, 1), Indec(1, 2))
    assert hom_nonzero(A2, Indec(1, 2), Indec(1, 1))
    loop = make_uniform("cyclic", 1, 2)
    S = Indec(1, 1)
    assert hom_nonzero(loop, S, tau(loop, S))


def test_hom_dim_can_exceed_one_on_cyclic():
    # k[x]/x^3: End of the projective is 3-dimensional
    A = make_uniform("cyclic", 1, 3)
    assert hom_dim(A, Indec(1, 3), Indec(1, 3)) == 3
    assert hom_dim(A, Indec(1, 2), Indec(1, 3)) == 2


@settings(max_examples=60, deadline=None)
@given(algebras())
def test_hom_dim_matches_linear_algebra(A):
    for m, n in itertools.product(indecomposables(A), repeat=2):
        assert hom_dim(A, m, n) == hom_dim_by_linear_algebra(A, m, n), (A, m, n)


@settings(max_examples=100, deadline=None)
@given(algebras(max_n=8, max_r=9))
def test_module_invariants(A):
    mods = indecomposables(A)
    assert len(mods) == sum(A.kupisch)
    for m in mods:
        assert hom_dim(A, m, m) >= 1
        t = tau(A, m)
        if t is not None:
            assert 1 <= t.len <= A.c(t.top)
            if A.is_linear:
                assert not hom_nonzero(A, m, t)


def test_loop_simple_not_rigid_for_all_r():
    for r in range(2, 6):
        A = make_uniform("cyclic", 1, r)
        for l in range(1, r):
            assert hom_nonzero(A, Indec(1, l), tau(A, Indec(1, l)))


def test_composition_vertices():
    lin = make_uniform("linear", 5, 5)
    assert sorted(composition_vertices(lin, Indec(2, 3)).elements()) == [2, 3, 4]
    cyc = make_uniform("cyclic", 2, 3)
    assert composition_vertices(cyc, Indec(1, 3)) == {1: 2, 2: 1}
    assert list(composition_vertices(lin, Indec(4, 1))) == [4]


def test_quotient_examples():
    comps = quotient_kill(make_uniform("linear", 4, 2), {2})
    assert [c.algebra.kupisch for c in comps] == [(1,), (2, 1)]
    assert [c.vertex_map for c in comps] == [(1,), (3, 4)]

    comps = quotient_kill(make_uniform("cyclic", 4, 2), {4})
    assert [c.algebra.kupisch for c in comps] == [(2, 2, 1)]
    assert comps[0].vertex_map == (1, 2, 3)

    comps = quotient_kill(make_uniform("cyclic", 4, 5), {2})
    assert [c.algebra.kupisch for c in comps] == [(3, 2, 1)]
    assert comps[0].vertex_map == (3, 4, 1)

    assert quotient_kill(make_uniform("linear", 3, 2), {1, 2, 3}) == []
    A = make_uniform("cyclic", 3, 2)
    assert quotient_kill(A, set()) == [(A, (1, 2, 3))]


def test_prefix_suffix_of_mixed_algebra():
    A = make_linear_kupisch([2, 3, 2, 1])
    assert below(A, 4).kupisch == (2, 2, 1)
    assert below(A, 1) == ZERO_ALGEBRA
    assert above(A, 1).kupisch == (3, 2, 1)
    assert above(A, 4) == ZERO_ALGEBRA


def _lifted_modules(A, T):
    return sorted(comp.lift(m) for comp in quotient_kill(A, T) for m in indecomposables(comp.algebra))


@settings(max_examples=80, deadline=None)
@given(algebras(max_n=7, max_r=8), st.data())
def test_quotient_modules_are_those_avoiding_killed(A, data):
    T = data.draw(st.sets(st.integers(1, A.n)))
    expected = sorted(
        m for m in indecomposables(A) if T.isdisjoint(composition_vertices(A, m))
    )
    if not T and not A.is_linear:
        assert quotient_kill(A, T)[0].algebra == A
    assert _lifted_modules(A, T) == expected


@settings(max_examples=60, deadline=None)
@given(algebras(max_n=7, max_r=8), st.data())
def test_quotient_composes(A, data):
    T1 = data.draw(st.sets(st.integers(1, A.n)))
    T2 = data.draw(st.sets(st.integers(1, A.n)))
    two_step = []
    for comp in quotient_kill(A, T1):
        inner_killed = {j for j, v in enumerate(comp.vertex_map, start=1) if v in T2}
        for sub in quotient_kill(comp.algebra, inner_killed):
            lifted = tuple(comp.vertex_map[v - 1] for v in sub.vertex_map)
            two_step.append((sub.algebra, lifted))
    direct = [(c.algebra, c.vertex_map) for c in quotient_kill(A, T1 | T2)]
    assert sorted(two_step, key=lambda x: x[1]) == sorted(direct, key=lambda x: x[1])


@given(linear_kupisch())
def test_linear_quotient_of_nothing_is_identity(c):
    A = make_linear_kupisch(c)
    assert quotient_kill(A, set()) == [(A, tuple(range(1, A.n + 1)))]
