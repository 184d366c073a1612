import pytest

from leibniz_rb.core import validate_leibniz
from leibniz_rb.errors import (InvalidInput, InvalidOperator, NotInvertible,
                               WrongWeight)
from leibniz_rb.linalg import Matrix
from leibniz_rb.operators import WeightedRBO, induced_algebra
from leibniz_rb.postleibniz import (PostLeibnizAlgebra,
                                    check_skewsymmetric_reduction,
                                    compatible_structure, from_rbo,
                                    total_algebra, total_grep,
                                    validate_post_leibniz,
                                    validate_pre_leibniz)

from conftest import dim2_nonlie, heisenberg


def _zero_tensor(fld, n):
    return [[[fld.zero] * n for _ in range(n)] for _ in range(n)]


def test_zero_structure_is_post_leibniz(Q):
    p = PostLeibnizAlgebra.zero(Q, 2)
    assert validate_post_leibniz(p).ok
    from leibniz_rb.core import LeibnizAlgebra
    assert total_algebra(p) == LeibnizAlgebra.zero(Q, 2)


def test_from_rbo_and_total_equals_induced(Q):
    a = dim2_nonlie(Q)
    r = WeightedRBO.on_algebra(a, Q.coerce(-1), Matrix.identity(Q, 2))
    p = from_rbo(r)
    assert validate_post_leibniz(p).ok
    assert total_algebra(p) == induced_algebra(r)


def test_from_rbo_rejects_invalid(Q):
    r = WeightedRBO.on_algebra(dim2_nonlie(Q), Q.one, Matrix.identity(Q, 2))
    with pytest.raises(InvalidOperator):
        from_rbo(r)


def test_invalid_structure_reports_laws(Q):
    z = _zero_tensor(Q, 2)
    bad = PostLeibnizAlgebra(Q, 2, z, z,
                             [[[Q.zero, Q.one], [Q.one, Q.zero]],
                              [[Q.one, Q.zero], [Q.zero, Q.zero]]])
    brep = validate_post_leibniz(bad)
    assert not brep.ok
    assert all(law.startswith("post-l") for law in brep.laws_violated())
    with pytest.raises(InvalidInput):
        total_algebra(bad)


def test_pre_leibniz_matches_zero_bracket_post(Q):
    a = dim2_nonlie(Q)
    z = _zero_tensor(Q, 2)
    rep = validate_pre_leibniz(Q, 2, a.c, z)
    p = PostLeibnizAlgebra(Q, 2, a.c, z, z)
    assert rep.ok == validate_post_leibniz(p).ok


def test_skewsymmetric_reduction_heisenberg(Q):
    a = heisenberg(Q)
    p = PostLeibnizAlgebra(Q, 3, a.c, a.c, _zero_tensor(Q, 3))
    assert validate_post_leibniz(p).ok
    red = check_skewsymmetric_reduction(p)
    assert red.is_skewsymmetric
    assert red.post_lie.ok


def test_skew_reduction_detects_asymmetry(Q):
    a = dim2_nonlie(Q)  # [e1,e1] = e2 is not antisymmetric
    p = PostLeibnizAlgebra(Q, 2, _zero_tensor(Q, 2), _zero_tensor(Q, 2), a.c)
    red = check_skewsymmetric_reduction(p)
    assert red.skew_pair and not red.skew_bracket
    assert red.post_lie is None


def test_total_grep_identity_roundtrip(Q):
    a = heisenberg(Q)
    p = PostLeibnizAlgebra(Q, 3, a.c, a.c, _zero_tensor(Q, 3))
    d = total_grep(p)
    assert validate_leibniz(d.g).ok and validate_leibniz(d.h).ok
    r = WeightedRBO(d, Q.one, Matrix.identity(Q, 3))
    assert r.is_valid
    assert compatible_structure(d.g, r) == p


def test_compatible_structure_minus_identity(Q):
    a = dim2_nonlie(Q)
    r = WeightedRBO.on_algebra(a, Q.one, Matrix.identity(Q, 2).scale(-Q.one))
    assert r.is_valid
    p = compatible_structure(a, r)
    assert validate_post_leibniz(p).ok
    assert total_algebra(p) == a


def test_compatible_structure_gates(Q):
    a = dim2_nonlie(Q)
    r = WeightedRBO.on_algebra(a, Q.coerce(-1), Matrix.identity(Q, 2))
    with pytest.raises(WrongWeight):
        compatible_structure(a, r)
    rz = WeightedRBO.on_algebra(heisenberg(Q), Q.one,
                                Matrix.zeros(Q, 3, 3))
    # codomain mismatch is checked before invertibility
    with pytest.raises(InvalidInput):
        compatible_structure(a, rz)
    with pytest.raises(NotInvertible):
        compatible_structure(heisenberg(Q), rz)
