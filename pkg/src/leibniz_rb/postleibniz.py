"""Post-Leibniz algebras and their reductions.

A post-Leibniz algebra carries three bilinear operations (u<v, u>v and a
bracket [u,v]_a, written left/right/bracket here) subject to seven
identities in which the combined operation

    [u, v]_star = u<v + u>v + [u,v]_a

appears; summing the seven identities shows [.,.]_star is a Leibniz
bracket (the total algebra).  Every weighted relative Rota-Baxter operator
produces one via u<v = rho^R(u, Tv), u>v = rho^L(Tu, v) and lambda-scaled
bracket, and invertible weight-1 operators correspond to compatible
structures on their codomain.
"""

from dataclasses import dataclass
from typing import Optional

from .core import (ActionPair, LeibnizAlgebra, LeibnizGRep, ValidationReport,
                   _coerce_tensor3, basis_vec, validate_leibniz)
from .errors import (InvalidInput, InvalidOperator, OracleDisagreement,
                     ShapeMismatch, WrongWeight)
from .linalg import vec_add, vec_scale, vec_sub, zero_vec


def _apply2(field, c, x, y):
    """Evaluate a bilinear operation given by a structure tensor."""
    n = len(c)
    out = zero_vec(field, n)
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            out = vec_add(out, vec_scale(x[i] * y[j], c[i][j]))
    return out


def _add_tensors(field, n, *tensors):
    return tuple(tuple(tuple(sum((t[i][j][k] for t in tensors), field.zero)
                             for k in range(n))
                       for j in range(n)) for i in range(n))


class PostLeibnizAlgebra:
    """Structure tensors for u<v (left), u>v (right) and [u,v]_a (bracket)."""

    def __init__(self, field, dim, left, right, bracket):
        self.field = field
        self.dim = dim
        self.left = _coerce_tensor3(field, (dim, dim, dim), left)
        self.right = _coerce_tensor3(field, (dim, dim, dim), right)
        self.bracket = _coerce_tensor3(field, (dim, dim, dim), bracket)

    @classmethod
    def zero(cls, field, dim):
        z = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        return cls(field, dim, z, z, z)

    def lt(self, x, y):
        return _apply2(self.field, self.left, x, y)

    def rt(self, x, y):
        return _apply2(self.field, self.right, x, y)

    def br(self, x, y):
        return _apply2(self.field, self.bracket, x, y)

    def star(self, x, y):
        return vec_add(vec_add(self.lt(x, y), self.rt(x, y)), self.br(x, y))

    def star_tensor(self):
        return _add_tensors(self.field, self.dim,
                            self.left, self.right, self.bracket)

    def __eq__(self, other):
        return (isinstance(other, PostLeibnizAlgebra)
                and self.field == other.field and self.dim == other.dim
                and self.left == other.left and self.right == other.right
                and self.bracket == other.bracket)

    def __repr__(self):
        return "PostLeibnizAlgebra(dim=%d)" % self.dim


def validate_post_leibniz(p):
    """Check identities post-l1..post-l7 on all basis triples."""
    fld, n = p.field, p.dim
    rep = ValidationReport("post-leibniz")
    bv = [basis_vec(fld, n, i) for i in range(n)]
    for i in range(n):
        u = bv[i]
        for j in range(n):
            v = bv[j]
            for k in range(n):
                w = bv[k]
                checks = [
                    ("post-l1", p.lt(u, p.star(v, w)),
                     vec_add(p.lt(p.lt(u, v), w), p.rt(v, p.lt(u, w)))),
                    ("post-l2", p.rt(u, p.lt(v, w)),
                     vec_add(p.lt(p.rt(u, v), w), p.lt(v, p.star(u, w)))),
                    ("post-l3", p.rt(u, p.rt(v, w)),
                     vec_add(p.rt(p.star(u, v), w), p.rt(v, p.rt(u, w)))),
                    ("post-l4", p.rt(u, p.br(v, w)),
                     vec_add(p.br(p.rt(u, v), w), p.br(v, p.rt(u, w)))),
                    ("post-l5", p.br(u, p.rt(v, w)),
                     vec_add(p.br(p.lt(u, v), w), p.rt(v, p.br(u, w)))),
                    ("post-l6", p.br(u, p.lt(v, w)),
                     vec_add(p.lt(p.br(u, v), w), p.br(v, p.lt(u, w)))),
                    ("post-l7", p.br(u, p.br(v, w)),
                     vec_add(p.br(p.br(u, v), w), p.br(v, p.br(u, w)))),
                ]
                for law, lhs, rhs in checks:
                    if lhs != rhs:
                        rep.add(law, (i, j, k), lhs, rhs)
    return rep


def total_algebra(p):
    """The total Leibniz algebra (a, [.,.]_star) of a valid structure."""
    rep = validate_post_leibniz(p)
    if not rep.ok:
        raise InvalidInput("not a post-Leibniz algebra: %s" % rep.summary())
    total = LeibnizAlgebra(p.field, p.dim, p.star_tensor())
    check = validate_leibniz(total)
    if not check.ok:
        raise OracleDisagreement("total bracket fails the Leibniz identity "
                                 "on a validated structure")
    return total


def from_rbo(r):
    """The post-Leibniz algebra of a valid weighted operator on h."""
    rep = r.validate()
    if not rep.ok:
        raise InvalidOperator("operator fails the weighted identity: %s"
                              % rep.summary())
    d, fld, t = r.context, r.field, r.t
    nh, act = d.h.dim, d.actions
    bv = [basis_vec(fld, nh, a) for a in range(nh)]
    left = [[act.right_act(bv[a], t.mul_vec(bv[b])) for b in range(nh)]
            for a in range(nh)]
    right = [[act.left_act(t.mul_vec(bv[a]), bv[b]) for b in range(nh)]
             for a in range(nh)]
    bracket = [[vec_scale(r.weight, d.h.bracket(bv[a], bv[b]))
                for b in range(nh)] for a in range(nh)]
    p = PostLeibnizAlgebra(fld, nh, left, right, bracket)
    check = validate_post_leibniz(p)
    if not check.ok:
        raise OracleDisagreement("operator-induced structure fails: %s"
                                 % check.summary())
    return p


def validate_pre_leibniz(field, dim, left, right):
    """The three pre-Leibniz identities on all basis triples.

    The post-Leibniz validator on (left, right, 0) must return the same
    verdict; a split raises OracleDisagreement.
    """
    p = PostLeibnizAlgebra(field, dim,
                           left, right,
                           [[[field.zero] * dim for _ in range(dim)]
                            for _ in range(dim)])
    rep = ValidationReport("pre-leibniz")
    bv = [basis_vec(field, dim, i) for i in range(dim)]
    for i in range(dim):
        u = bv[i]
        for j in range(dim):
            v = bv[j]
            for k in range(dim):
                w = bv[k]
                both = lambda x, y: vec_add(p.lt(x, y), p.rt(x, y))
                checks = [
                    ("pre-l1", p.lt(u, both(v, w)),
                     vec_add(p.lt(p.lt(u, v), w), p.rt(v, p.lt(u, w)))),
                    ("pre-l2", p.rt(u, p.lt(v, w)),
                     vec_add(p.lt(p.rt(u, v), w), p.lt(v, both(u, w)))),
                    ("pre-l3", p.rt(u, p.rt(v, w)),
                     vec_add(p.rt(both(u, v), w), p.rt(v, p.rt(u, w)))),
                ]
                for law, lhs, rhs in checks:
                    if lhs != rhs:
                        rep.add(law, (i, j, k), lhs, rhs)
    if rep.ok != validate_post_leibniz(p).ok:
        raise OracleDisagreement("pre-Leibniz and zero-bracket post-Leibniz "
                                 "validators disagree")
    return rep


@dataclass
class SkewReduction:
    skew_pair: bool
    skew_bracket: bool
    post_lie: Optional[ValidationReport] = None

    @property
    def is_skewsymmetric(self):
        return self.skew_pair and self.skew_bracket


def check_skewsymmetric_reduction(p):
    """Test u<v = -v>u and bracket antisymmetry; then the post-Lie laws.

    When both hypotheses hold, (a, >, [.,.]_a) is checked to be a post-Lie
    algebra: Lie bracket, u>. a derivation of it, and
    [u,v] > w = u>(v>w) - (u>v)>w - v>(u>w) + (v>u)>w.
    """
    fld, n = p.field, p.dim
    bv = [basis_vec(fld, n, i) for i in range(n)]
    skew_pair = all(p.lt(bv[i], bv[j]) == vec_scale(-fld.one, p.rt(bv[j], bv[i]))
                    for i in range(n) for j in range(n))
    skew_bracket = all(p.br(bv[i], bv[j]) == vec_scale(-fld.one, p.br(bv[j], bv[i]))
                       for i in range(n) for j in range(n))
    out = SkewReduction(skew_pair, skew_bracket)
    if not out.is_skewsymmetric:
        return out
    rep = ValidationReport("post-lie")
    for i in range(n):
        u = bv[i]
        for j in range(n):
            v = bv[j]
            for k in range(n):
                w = bv[k]
                lhs = p.br(u, p.br(v, w))
                rhs = vec_add(p.br(p.br(u, v), w), p.br(v, p.br(u, w)))
                if lhs != rhs:
                    rep.add("lie-jacobi", (i, j, k), lhs, rhs)
                lhs = p.rt(u, p.br(v, w))
                rhs = vec_add(p.br(p.rt(u, v), w), p.br(v, p.rt(u, w)))
                if lhs != rhs:
                    rep.add("post-lie-derivation", (i, j, k), lhs, rhs)
                lhs = p.rt(p.br(u, v), w)
                rhs = vec_sub(p.rt(u, p.rt(v, w)), p.rt(p.rt(u, v), w))
                rhs = vec_sub(rhs, p.rt(v, p.rt(u, w)))
                rhs = vec_add(rhs, p.rt(p.rt(v, u), w))
                if lhs != rhs:
                    rep.add("post-lie-curvature", (i, j, k), lhs, rhs)
    out.post_lie = rep
    return out


def total_grep(p):
    """The carrier a, with its own bracket, as a representation of a_Tot.

    Left action u > v of the total algebra, right action v < u; the
    identity map then becomes a 1-weighted relative Rota-Baxter operator
    recovering p through compatible_structure.
    """
    total = total_algebra(p)
    carrier = LeibnizAlgebra(p.field, p.dim, p.bracket)
    actions = ActionPair(p.field, p.dim, p.dim, p.right, p.left)
    return LeibnizGRep(total, carrier, actions)


def compatible_structure(a, r):
    """The compatible post-Leibniz structure of an invertible weight-1 operator.

    Requires r to be a valid operator onto a with weight 1 and invertible
    T; then x<y = T(rho^R(T^-1 x, y)), x>y = T(rho^L(x, T^-1 y)) and
    [x,y]' = T[T^-1 x, T^-1 y]_h sum to the bracket of a exactly.
    """
    if r.weight != a.field.one:
        raise WrongWeight("compatible structures need weight 1")
    if r.context.g != a:
        raise InvalidInput("operator codomain differs from the target algebra")
    rep = r.validate()
    if not rep.ok:
        raise InvalidOperator("operator fails the weighted identity: %s"
                              % rep.summary())
    d, fld, t = r.context, r.field, r.t
    if t.nrows != t.ncols:
        raise ShapeMismatch("compatible structures need T square")
    tinv = t.inverse()
    n, act = a.dim, d.actions
    bv = [basis_vec(fld, n, i) for i in range(n)]
    left = [[t.mul_vec(act.right_act(tinv.mul_vec(bv[i]), bv[j]))
             for j in range(n)] for i in range(n)]
    right = [[t.mul_vec(act.left_act(bv[i], tinv.mul_vec(bv[j])))
              for j in range(n)] for i in range(n)]
    bracket = [[t.mul_vec(d.h.bracket(tinv.mul_vec(bv[i]),
                                      tinv.mul_vec(bv[j])))
                for j in range(n)] for i in range(n)]
    p = PostLeibnizAlgebra(fld, n, left, right, bracket)
    if p.star_tensor() != a.c:
        raise OracleDisagreement("compatible structure does not sum to the "
                                 "original bracket")
    check = validate_post_leibniz(p)
    if not check.ok:
        raise OracleDisagreement("compatible structure fails validation: %s"
                                 % check.summary())
    return p
