"""Weighted (relative) Rota-Baxter operators on Leibniz algebras.

An operator is a linear map T: h -> g attached to a Leibniz g-representation
(g, h, rho^L, rho^R) and a weight lambda, subject to

    [Tu, Tv]_g = T( rho^L(Tu, v) + rho^R(u, Tv) + lambda [u, v]_h ).

Non-relative operators (T: g -> g) are handled by placing them in the
adjoint context, so all verification code has a single code path.
"""

from .core import (ActionPair, LeibnizAlgebra, LeibnizGRep, ValidationReport,
                   adjoint_grep, basis_vec, is_adjoint_grep,
                   is_algebra_morphism)
from .errors import (InvalidInput, InvalidOperator, NotAdjointContext,
                     ResourceLimit, ShapeMismatch, WrongField)
from .fields import PrimeField
from .linalg import Matrix, span_rank, vec_add, vec_scale


def _check_operator_shape(d, t):
    if t.shape != (d.g.dim, d.h.dim):
        raise ShapeMismatch("operator must be %dx%d, got %dx%d"
                            % (d.g.dim, d.h.dim, t.shape[0], t.shape[1]))


def operator_rhs(d, lam, t, u, v):
    """rho^L(Tu,v) + rho^R(u,Tv) + lambda [u,v]_h as a vector of h."""
    act = d.actions
    tu, tv = t.mul_vec(u), t.mul_vec(v)
    out = vec_add(act.left_act(tu, v), act.right_act(u, tv))
    return vec_add(out, vec_scale(lam, d.h.bracket(u, v)))


def check_weighted_relative_rbo(d, lam, t):
    """Verify the weighted operator identity on all basis pairs of h."""
    _check_operator_shape(d, t)
    lam = d.field.coerce(lam)
    rep = ValidationReport("weighted-relative-rbo")
    for a in range(d.h.dim):
        ea = basis_vec(d.field, d.h.dim, a)
        for b in range(d.h.dim):
            eb = basis_vec(d.field, d.h.dim, b)
            lhs = d.g.bracket(t.mul_vec(ea), t.mul_vec(eb))
            rhs = t.mul_vec(operator_rhs(d, lam, t, ea, eb))
            if lhs != rhs:
                rep.add("operator-identity", (a, b), lhs, rhs)
    return rep


def check_weighted_rbo(a, lam, t):
    """Verify [Tx,Ty] = T([Tx,y] + [x,Ty] + lambda[x,y]) on an algebra."""
    rep = check_weighted_relative_rbo(adjoint_grep(a), lam, t)
    rep.subject = "weighted-rbo"
    return rep


def is_weighted_relative_rbo(d, lam, t):
    return check_weighted_relative_rbo(d, lam, t).ok


class WeightedRBO:
    """An operator T: h -> g of weight lambda on a Leibniz g-representation."""

    def __init__(self, context, weight, t):
        _check_operator_shape(context, t)
        self.context = context
        self.field = context.field
        self.weight = self.field.coerce(weight)
        self.t = t

    @classmethod
    def on_algebra(cls, a, weight, t):
        """Wrap a non-relative operator T: a -> a in the adjoint context."""
        return cls(adjoint_grep(a), weight, t)

    def validate(self):
        return check_weighted_relative_rbo(self.context, self.weight, self.t)

    @property
    def is_valid(self):
        return self.validate().ok

    def __eq__(self, other):
        return (isinstance(other, WeightedRBO) and self.context == other.context
                and self.weight == other.weight and self.t == other.t)

    def __repr__(self):
        return "WeightedRBO(weight=%s, t=%r)" % (self.weight, self.t)


def graph_check(d, lam, t):
    """Is the graph Gr(T) = {(Tu, u)} a subalgebra of the semidirect product?

    Independent of check_weighted_relative_rbo: membership of each bracket
    in the span of the graph basis is decided by a rank computation on the
    semidirect product of the context.
    """
    from .core import semidirect_product_unchecked

    _check_operator_shape(d, t)
    lam = d.field.coerce(lam)
    sdp = semidirect_product_unchecked(d, lam)
    ng, nh = d.g.dim, d.h.dim
    graph = []
    for a in range(nh):
        col = t.col(a) + basis_vec(d.field, nh, a)
        graph.append(col)
    base_rank = span_rank(d.field, graph)
    for a in range(nh):
        for b in range(nh):
            w = sdp.bracket(graph[a], graph[b])
            if span_rank(d.field, graph + [w]) != base_rank:
                return False
    return True


def induced_algebra(r):
    """The Leibniz algebra (h, [.,.]_T) induced by a valid operator."""
    rep = r.validate()
    if not rep.ok:
        raise InvalidOperator("operator fails the weighted identity: %s"
                              % rep.summary())
    d, fld = r.context, r.field
    nh = d.h.dim
    c = []
    for a in range(nh):
        ea = basis_vec(fld, nh, a)
        row = []
        for b in range(nh):
            eb = basis_vec(fld, nh, b)
            row.append(operator_rhs(d, r.weight, r.t, ea, eb))
        c.append(row)
    return LeibnizAlgebra(fld, nh, c)


class OperatorMorphism:
    """A pair (phi: g -> g', psi: h -> h') between operator contexts."""

    def __init__(self, phi, psi):
        self.phi = phi
        self.psi = psi


def check_operator_morphism(r, rp, m):
    """All five morphism conditions between two weighted operators.

    phi and psi must be algebra morphisms, intertwine the operators
    (phi T = T' psi) and both actions.  Returns a bool; when the
    conditions hold, psi is additionally confirmed to carry the induced
    bracket of r to that of rp.
    """
    d, dp = r.context, rp.context
    phi, psi = m.phi, m.psi
    if r.weight != rp.weight:
        return False
    if not (is_algebra_morphism(d.g, dp.g, phi)
            and is_algebra_morphism(d.h, dp.h, psi)):
        return False
    if phi * r.t != rp.t * psi:
        return False
    fld = d.field
    for i in range(d.g.dim):
        ei = basis_vec(fld, d.g.dim, i)
        for a in range(d.h.dim):
            ea = basis_vec(fld, d.h.dim, a)
            if psi.mul_vec(d.actions.left_act(ei, ea)) != \
                    dp.actions.left_act(phi.mul_vec(ei), psi.mul_vec(ea)):
                return False
            if psi.mul_vec(d.actions.right_act(ea, ei)) != \
                    dp.actions.right_act(psi.mul_vec(ea), phi.mul_vec(ei)):
                return False
    if r.is_valid and rp.is_valid:
        assert is_algebra_morphism(induced_algebra(r), induced_algebra(rp), psi)
    return True


def check_crossed_homomorphism(d, lam, dmap):
    """Verify D[x,y]_g = rho^L(x,Dy) + rho^R(Dx,y) + lambda[Dx,Dy]_h."""
    if dmap.shape != (d.h.dim, d.g.dim):
        raise ShapeMismatch("crossed homomorphism must be %dx%d"
                            % (d.h.dim, d.g.dim))
    lam = d.field.coerce(lam)
    act = d.actions
    rep = ValidationReport("crossed-homomorphism")
    for i in range(d.g.dim):
        ei = basis_vec(d.field, d.g.dim, i)
        for j in range(d.g.dim):
            ej = basis_vec(d.field, d.g.dim, j)
            lhs = dmap.mul_vec(d.g.bracket(ei, ej))
            di, dj = dmap.mul_vec(ei), dmap.mul_vec(ej)
            rhs = vec_add(vec_add(act.left_act(ei, dj), act.right_act(di, ej)),
                          vec_scale(lam, d.h.bracket(di, dj)))
            if lhs != rhs:
                rep.add("crossed-homomorphism", (i, j), lhs, rhs)
    return rep


def invert_crossed(d, lam, dmap):
    """T = D^{-1} of an invertible crossed homomorphism, as a WeightedRBO."""
    rep = check_crossed_homomorphism(d, lam, dmap)
    if not rep.ok:
        raise InvalidInput("not a crossed homomorphism: %s" % rep.summary())
    return WeightedRBO(d, lam, dmap.inverse())


def derived_operators(r, nu):
    """The two derived operators of a non-relative weighted operator.

    Returns (nu T with weight nu lambda, -lambda id - T with weight lambda).
    Only defined when the context is the adjoint one.
    """
    d = r.context
    if not is_adjoint_grep(d):
        raise NotAdjointContext("derived operators need a non-relative "
                                "operator (adjoint context)")
    fld = d.field
    nu = fld.coerce(nu)
    first = WeightedRBO(d, nu * r.weight, r.t.scale(nu))
    ident = Matrix.identity(fld, d.g.dim)
    second = WeightedRBO(d, r.weight, ident.scale(-r.weight) - r.t)
    return first, second


def ideal_context(a, indices):
    """The relative context of an ideal spanned by coordinate basis vectors.

    indices selects basis vectors of a spanning a two-sided ideal h; the
    g-action on h is the restricted bracket.  Returns (context, inclusion)
    where inclusion: h -> g is the evident matrix; with weight -1 it is a
    relative Rota-Baxter operator.
    """
    indices = sorted(set(indices))
    if not indices or any(i < 0 or i >= a.dim for i in indices):
        raise InvalidInput("ideal indices out of range")
    fld, n, m = a.field, a.dim, len(indices)
    inside = set(indices)
    pos = {gi: k for k, gi in enumerate(indices)}

    def project(v, where):
        for k in range(n):
            if v[k] != fld.zero and k not in inside:
                raise InvalidInput("subspace is not an ideal: bracket at %s "
                                   "leaves the span" % (where,))
        return tuple(v[gi] for gi in indices)

    hc = [[project(a.bracket_basis(indices[x], indices[y]), (x, y))
           for y in range(m)] for x in range(m)]
    left = [[project(a.bracket_basis(i, indices[x]), (i, x))
             for x in range(m)] for i in range(n)]
    right = [[project(a.bracket_basis(indices[x], i), (x, i))
              for i in range(n)] for x in range(m)]
    h = LeibnizAlgebra(fld, m, hc)
    ctx = LeibnizGRep(a, h, ActionPair(fld, n, m, left, right))
    cols = [basis_vec(fld, n, gi) for gi in indices]
    return ctx, Matrix.from_cols(fld, cols, n)


def search_rbos(d, lam, cap=10 ** 6):
    """All operators T over GF(p) satisfying the weighted identity.

    Enumerates every n_g x n_h matrix in lexicographic order of the
    row-major entry vector (entries ordered 0..p-1) and yields the ones
    passing check_weighted_relative_rbo.  The order is deterministic.
    """
    fld = d.field
    if not isinstance(fld, PrimeField):
        raise WrongField("operator search requires a finite prime field")
    p = fld.p
    ng, nh = d.g.dim, d.h.dim
    cells = ng * nh
    total = p ** cells
    if total > cap:
        raise ResourceLimit("search space %d exceeds cap %d" % (total, cap))
    lam = fld.coerce(lam)
    for code in range(total):
        digits = []
        c = code
        for _ in range(cells):
            c, r = divmod(c, p)
            digits.append(r)
        digits.reverse()
        rows = [[fld.coerce(digits[i * nh + j]) for j in range(nh)]
                for i in range(ng)]
        t = Matrix(fld, rows)
        if check_weighted_relative_rbo(d, lam, t).ok:
            yield t
