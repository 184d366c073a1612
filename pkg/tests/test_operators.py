import pytest

from leibniz_rb.core import adjoint_grep
from leibniz_rb.errors import (InvalidInput, InvalidOperator,
                               NotAdjointContext, ResourceLimit, WrongField)
from leibniz_rb.linalg import Matrix
from leibniz_rb.operators import (WeightedRBO, OperatorMorphism,
                                  check_crossed_homomorphism,
                                  check_operator_morphism,
                                  check_weighted_rbo,
                                  check_weighted_relative_rbo,
                                  derived_operators, graph_check,
                                  ideal_context, induced_algebra,
                                  invert_crossed, search_rbos)
from leibniz_rb.core import validate_leibniz

from conftest import dim2_nonlie, heisenberg, rho_l_context, small_contexts


def test_identity_is_minus_one_weighted_rbo(Q):
    a = dim2_nonlie(Q)
    t = Matrix.identity(Q, 2)
    assert check_weighted_rbo(a, Q.coerce(-1), t).ok
    assert not check_weighted_rbo(a, Q.one, t).ok


def test_zero_operator_weight_zero(Q):
    a = heisenberg(Q)
    assert check_weighted_rbo(a, Q.zero, Matrix.zeros(Q, 3, 3)).ok


def test_report_names_violated_law(Q):
    a = dim2_nonlie(Q)
    rep = check_weighted_rbo(a, Q.one, Matrix.identity(Q, 2))
    assert rep.laws_violated() == ["operator-identity"]


def test_graph_check_agrees_with_direct_identity(gf5):
    # exhaustive over small contexts: graph criterion == operator identity
    ctxs = small_contexts(gf5, (1, 1)) + small_contexts(gf5, (2, 1))
    for d in ctxs:
        for lam in (gf5.zero, gf5.one):
            n, m = d.g.dim, d.h.dim
            for t in _all_matrices(gf5, n, m):
                direct = check_weighted_relative_rbo(d, lam, t).ok
                assert graph_check(d, lam, t) == direct


def _all_matrices(fld, rows, cols):
    els = fld.elements()
    total = len(els) ** (rows * cols)
    for code in range(total):
        digits = []
        c = code
        for _ in range(rows * cols):
            digits.append(els[c % len(els)])
            c //= len(els)
        yield Matrix(fld, [[digits[r * cols + c] for c in range(cols)]
                           for r in range(rows)])


def test_induced_algebra_is_leibniz(Q):
    r = WeightedRBO.on_algebra(dim2_nonlie(Q), Q.coerce(-1),
                               Matrix.identity(Q, 2))
    b = induced_algebra(r)
    assert validate_leibniz(b).ok
    # [u, v]_T with T = id, lambda = -1 collapses to [u,v] + [u,v] - [u,v]
    assert b.bracket_basis(0, 0) == dim2_nonlie(Q).bracket_basis(0, 0)


def test_induced_algebra_rejects_invalid(Q):
    r = WeightedRBO.on_algebra(dim2_nonlie(Q), Q.one, Matrix.identity(Q, 2))
    assert not r.is_valid
    with pytest.raises(InvalidOperator):
        induced_algebra(r)


def test_operator_morphism_identity_and_failure(Q):
    a = dim2_nonlie(Q)
    r = WeightedRBO.on_algebra(a, Q.coerce(-1), Matrix.identity(Q, 2))
    ident = OperatorMorphism(Matrix.identity(Q, 2), Matrix.identity(Q, 2))
    assert check_operator_morphism(r, r, ident)
    # weight mismatch fails outright
    r0 = WeightedRBO.on_algebra(a, Q.zero, Matrix.zeros(Q, 2, 2))
    assert not check_operator_morphism(r, r0, ident)
    # non-morphism phi fails
    bad = OperatorMorphism(Matrix(Q, [[1, 0], [0, 2]]), Matrix.identity(Q, 2))
    assert not check_operator_morphism(r, r, bad)


def test_crossed_homomorphism_inverse(Q):
    # D = T^{-1} of an invertible weighted RBO is a crossed homomorphism
    a = dim2_nonlie(Q)
    d = adjoint_grep(a)
    t = Matrix.identity(Q, 2)
    assert check_crossed_homomorphism(d, Q.coerce(-1), t.inverse()).ok
    r = invert_crossed(d, Q.coerce(-1), t.inverse())
    assert r.t == t and r.is_valid
    # something that is not one
    assert not check_crossed_homomorphism(d, Q.coerce(-1),
                                          Matrix(Q, [[2, 0], [0, 2]])).ok
    with pytest.raises(InvalidInput):
        invert_crossed(d, Q.coerce(-1), Matrix(Q, [[2, 0], [0, 2]]))


def test_derived_operators_are_valid(Q):
    a = dim2_nonlie(Q)
    r = WeightedRBO.on_algebra(a, Q.coerce(-1), Matrix.identity(Q, 2))
    for nu in (Q.coerce(2), Q.coerce(-3)):
        first, second = derived_operators(r, nu)
        assert first.weight == nu * r.weight and first.is_valid
        assert second.weight == r.weight and second.is_valid
        assert second.t == Matrix.identity(Q, 2) - r.t


def test_derived_operators_need_adjoint_context(Q):
    d = rho_l_context(Q)
    r = WeightedRBO(d, Q.zero, Matrix.zeros(Q, 1, 1))
    with pytest.raises(NotAdjointContext):
        derived_operators(r, Q.one)


def test_ideal_context_inclusion_is_rbo(Q):
    a = heisenberg(Q)  # span(e3) is a two-sided ideal (the center)
    ctx, incl = ideal_context(a, [2])
    assert ctx.h.dim == 1
    assert check_weighted_relative_rbo(ctx, Q.coerce(-1), incl).ok
    # graph criterion agrees
    assert graph_check(ctx, Q.coerce(-1), incl)


def test_ideal_context_rejects_non_ideal(Q):
    a = dim2_nonlie(Q)  # span(e1) is not an ideal: [e1,e1] = e2
    with pytest.raises(InvalidInput):
        ideal_context(a, [0])


def test_search_matches_brute_force(gf5):
    d = rho_l_context(gf5)
    for lam in (gf5.zero, gf5.one):
        found = {tuple(tuple(row) for row in t.rows)
                 for t in search_rbos(d, lam)}
        brute = {tuple(tuple(row) for row in t.rows)
                 for t in _all_matrices(gf5, 1, 1)
                 if check_weighted_relative_rbo(d, lam, t).ok}
        assert found == brute


def test_search_deterministic_order(gf5):
    d = rho_l_context(gf5)
    a = [t.rows for t in search_rbos(d, gf5.zero)]
    b = [t.rows for t in search_rbos(d, gf5.zero)]
    assert a == b


def test_search_requires_finite_field(Q):
    d = rho_l_context(Q)
    with pytest.raises(WrongField):
        list(search_rbos(d, Q.zero))


def test_search_resource_limit(gf5):
    d = adjoint_grep(dim2_nonlie(gf5))
    with pytest.raises(ResourceLimit):
        list(search_rbos(d, gf5.zero, cap=10))


def test_weighted_rbo_validate_consistency(gf5):
    for d in small_contexts(gf5, (1, 1)):
        for lam in (gf5.zero, gf5.coerce(2)):
            for t in _all_matrices(gf5, 1, 1):
                r = WeightedRBO(d, lam, t)
                assert r.is_valid == r.validate().ok
