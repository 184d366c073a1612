"""Shared construction helpers for the test suite."""

import random

import pytest

from leibniz_rb.core import (ActionPair, LeibnizAlgebra, LeibnizGRep,
                             adjoint_grep, validate_leibniz_g_rep)
from leibniz_rb.fields import PrimeField, RationalField
from leibniz_rb.linalg import Matrix
from leibniz_rb.multimap import MultiMap


@pytest.fixture
def Q():
    return RationalField()


@pytest.fixture
def gf5():
    return PrimeField(5)


@pytest.fixture
def gf7():
    return PrimeField(7)


@pytest.fixture
def gf2():
    return PrimeField(2)


def dim2_nonlie(field):
    """[e1, e1] = e2, the smallest non-Lie Leibniz algebra."""
    return LeibnizAlgebra.from_entries(field, 2, {(0, 0, 1): 1})


def heisenberg(field):
    """Three-dimensional Heisenberg Lie algebra."""
    return LeibnizAlgebra.from_entries(field, 3, {(0, 1, 2): 1, (1, 0, 2): -1})


def rho_r_context(field):
    """Dims (1,1), zero brackets, rho^R(e1, e1) = e1.

    Not a representation (it breaks the third axiom); useful for raw
    operator-identity and enumeration tests that do not assume validity.
    """
    g = LeibnizAlgebra.zero(field, 1)
    h = LeibnizAlgebra.zero(field, 1)
    pair = ActionPair(field, 1, 1, [[[field.zero]]], [[[field.one]]])
    return LeibnizGRep(g, h, pair)


def rho_l_context(field):
    """Dims (1,1), zero brackets, rho^L(e1, e1) = e1; a valid context."""
    g = LeibnizAlgebra.zero(field, 1)
    h = LeibnizAlgebra.zero(field, 1)
    pair = ActionPair(field, 1, 1, [[[field.one]]], [[[field.zero]]])
    return LeibnizGRep(g, h, pair)


def small_contexts(field, dims):
    """A list of validated Leibniz g-representations of the given dims."""
    ng, nh = dims
    out = [LeibnizGRep(LeibnizAlgebra.zero(field, ng),
                       LeibnizAlgebra.zero(field, nh),
                       ActionPair.zero(field, ng, nh))]
    if dims == (1, 1):
        out.append(rho_l_context(field))
        g = LeibnizAlgebra.zero(field, 1)
        h = LeibnizAlgebra.zero(field, 1)
        two = field.coerce(2)
        out.append(LeibnizGRep(g, h, ActionPair(
            field, 1, 1, [[[two]]], [[[field.zero]]])))
    elif dims == (2, 2):
        out.append(adjoint_grep(dim2_nonlie(field)))
    elif dims == (2, 1):
        g = dim2_nonlie(field)
        h = LeibnizAlgebra.zero(field, 1)
        # g acting on its ideal span{e2}: all products vanish
        left = [[[field.zero]], [[field.zero]]]
        right = [[[field.zero], [field.zero]]]
        out.append(LeibnizGRep(g, h, ActionPair(field, 2, 1, left, right)))
        # rho^L(e1, u) = u on an abelian pair
        ga = LeibnizAlgebra.zero(field, 2)
        left2 = [[[field.one]], [[field.zero]]]
        out.append(LeibnizGRep(ga, h, ActionPair(field, 2, 1, left2, right)))
    elif dims == (1, 2):
        g = LeibnizAlgebra.zero(field, 1)
        h = dim2_nonlie(field)
        # rho^L(e1, -) = bracket-with-e1 fails rep axioms in general; use
        # the regular action of h on itself transported along h -> g = 0
        out.append(LeibnizGRep(g, h, ActionPair.zero(field, 1, 2)))
        hz = LeibnizAlgebra.zero(field, 2)
        left = [[[field.zero, field.zero], [field.one, field.zero]]]
        right = [[[field.zero, field.zero]], [[field.zero, field.zero]]]
        out.append(LeibnizGRep(g, hz, ActionPair(field, 1, 2, left, right)))
    for d in out:
        assert validate_leibniz_g_rep(d).ok
    return out


def random_multimap(field, arity, src, tgt, rng, lo=-3, hi=4):
    m = MultiMap(field, arity, src, tgt)
    if field.characteristic:
        draw = lambda: field.coerce(rng.randrange(field.p))
    else:
        draw = lambda: field.coerce(rng.randrange(lo, hi))
    for idx in m.tuples():
        m.set_(idx, [draw() for _ in range(tgt)])
    return m


def random_matrix(field, nrows, ncols, rng, lo=-3, hi=4):
    if field.characteristic:
        draw = lambda: field.coerce(rng.randrange(field.p))
    else:
        draw = lambda: field.coerce(rng.randrange(lo, hi))
    return Matrix(field, [[draw() for _ in range(ncols)]
                          for _ in range(nrows)])


def seeded(n=0):
    return random.Random(n)
