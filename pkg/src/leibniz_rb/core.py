"""Leibniz algebras, representations and the general Leibniz differential.

Structure constants follow the convention c[i][j][k] = coefficient of
e_k in [e_i, e_j].  Validation is always explicit: constructors accept
arbitrary tensors so that deliberately broken structures can be used in
negative tests.
"""

from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import InvalidInput, ShapeMismatch
from .linalg import Matrix, vec_add, vec_scale, zero_vec
from .multimap import MultiMap


@dataclass
class Violation:
    law: str
    where: tuple
    lhs: list
    rhs: list


@dataclass
class ValidationReport:
    subject: str
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, law, where, lhs, rhs):
        self.violations.append(Violation(law, where, lhs, rhs))

    def laws_violated(self):
        return sorted({v.law for v in self.violations})

    def summary(self):
        if self.ok:
            return "%s: valid" % self.subject
        return "%s: %d violation(s) in %s" % (
            self.subject, len(self.violations), ", ".join(self.laws_violated()))


def _coerce_tensor3(field, dims, tensor):
    d0, d1, d2 = dims
    if len(tensor) != d0:
        raise ShapeMismatch("tensor first axis %d != %d" % (len(tensor), d0))
    out = []
    for plane in tensor:
        if len(plane) != d1:
            raise ShapeMismatch("tensor second axis mismatch")
        rows = []
        for row in plane:
            if len(row) != d2:
                raise ShapeMismatch("tensor third axis mismatch")
            rows.append(tuple(field.coerce(x) for x in row))
        out.append(tuple(rows))
    return tuple(out)


def zero_tensor3(field, d0, d1, d2):
    return tuple(tuple(tuple(field.zero for _ in range(d2))
                       for _ in range(d1)) for _ in range(d0))


class LeibnizAlgebra:
    """Finite-dimensional algebra given by bracket structure constants."""

    def __init__(self, field, dim, bracket):
        self.field = field
        self.dim = dim
        self.c = _coerce_tensor3(field, (dim, dim, dim), bracket)

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim, zero_tensor3(field, dim, dim, dim))

    @classmethod
    def from_entries(cls, field, dim, entries):
        """entries: {(i, j, k): scalar} with [e_i, e_j] = sum_k c e_k."""
        c = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), v in entries.items():
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ShapeMismatch("bracket entry index out of range")
            c[i][j][k] = field.coerce(v)
        return cls(field, dim, c)

    def bracket_basis(self, i, j):
        return list(self.c[i][j])

    def bracket(self, x, y):
        out = zero_vec(self.field, self.dim)
        for i in range(self.dim):
            if not x[i]:
                continue
            for j in range(self.dim):
                cij = x[i] * y[j]
                if cij:
                    out = vec_add(out, vec_scale(cij, self.c[i][j]))
        return out

    def mu(self):
        """The bracket as an arity-2 MultiMap on the algebra itself."""
        m = MultiMap(self.field, 2, self.dim, self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                m.set_((i, j), self.c[i][j])
        return m

    def __eq__(self, other):
        return (isinstance(other, LeibnizAlgebra) and self.field == other.field
                and self.dim == other.dim and self.c == other.c)

    def __repr__(self):
        return "LeibnizAlgebra(dim=%d)" % self.dim


class ActionPair:
    """Left/right action tensors of an algebra g on a carrier space V.

    left[i][a][b]: coefficient of f_b in rho^L(e_i, f_a).
    right[a][i][b]: coefficient of f_b in rho^R(f_a, e_i).
    """

    def __init__(self, field, dim_g, dim_v, left, right):
        self.field = field
        self.dim_g = dim_g
        self.dim_v = dim_v
        self.left = _coerce_tensor3(field, (dim_g, dim_v, dim_v), left)
        self.right = _coerce_tensor3(field, (dim_v, dim_g, dim_v), right)

    @classmethod
    def zero(cls, field, dim_g, dim_v):
        return cls(field, dim_g, dim_v,
                   zero_tensor3(field, dim_g, dim_v, dim_v),
                   zero_tensor3(field, dim_v, dim_g, dim_v))

    def left_basis(self, i, a):
        return list(self.left[i][a])

    def right_basis(self, a, i):
        return list(self.right[a][i])

    def left_act(self, x, v):
        out = zero_vec(self.field, self.dim_v)
        for i in range(self.dim_g):
            if not x[i]:
                continue
            for a in range(self.dim_v):
                c = x[i] * v[a]
                if c:
                    out = vec_add(out, vec_scale(c, self.left[i][a]))
        return out

    def right_act(self, v, x):
        out = zero_vec(self.field, self.dim_v)
        for a in range(self.dim_v):
            if not v[a]:
                continue
            for i in range(self.dim_g):
                c = v[a] * x[i]
                if c:
                    out = vec_add(out, vec_scale(c, self.right[a][i]))
        return out

    def __eq__(self, other):
        return (isinstance(other, ActionPair) and self.field == other.field
                and (self.dim_g, self.dim_v) == (other.dim_g, other.dim_v)
                and self.left == other.left and self.right == other.right)

    def __repr__(self):
        return "ActionPair(dim_g=%d, dim_v=%d)" % (self.dim_g, self.dim_v)


class LeibnizGRep:
    """A Leibniz algebra h that is simultaneously a module over g."""

    def __init__(self, g, h, actions):
        if g.field != h.field or g.field != actions.field:
            raise ShapeMismatch("mixed fields in LeibnizGRep")
        if actions.dim_g != g.dim or actions.dim_v != h.dim:
            raise ShapeMismatch("action tensors do not match algebra dimensions")
        self.g = g
        self.h = h
        self.actions = actions
        self.field = g.field

    def __eq__(self, other):
        return (isinstance(other, LeibnizGRep) and self.g == other.g
                and self.h == other.h and self.actions == other.actions)

    def __repr__(self):
        return "LeibnizGRep(dim_g=%d, dim_h=%d)" % (self.g.dim, self.h.dim)


def basis_vec(field, n, i):
    v = zero_vec(field, n)
    v[i] = field.one
    return v


def adjoint_pair(a):
    """Both actions given by the bracket of a itself."""
    left = a.c
    right = a.c
    return ActionPair(a.field, a.dim, a.dim, left, right)


def adjoint_grep(a):
    return LeibnizGRep(a, a, adjoint_pair(a))


def is_adjoint_grep(d):
    return d.g == d.h and d.actions == adjoint_pair(d.g)


def validate_leibniz(a):
    """Check [x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis triples."""
    rep = ValidationReport("leibniz")
    for i, j, k in product(range(a.dim), repeat=3):
        lhs = a.bracket(basis_vec(a.field, a.dim, i), a.bracket_basis(j, k))
        rhs = vec_add(a.bracket(a.bracket_basis(i, j), basis_vec(a.field, a.dim, k)),
                      a.bracket(basis_vec(a.field, a.dim, j), a.bracket_basis(i, k)))
        if lhs != rhs:
            rep.add("leibniz-identity", (i, j, k), lhs, rhs)
    return rep


def validate_representation(g, actions):
    """Check the three representation axioms on all basis triples."""
    if actions.dim_g != g.dim:
        raise ShapeMismatch("action tensor dim_g != algebra dim")
    rep = ValidationReport("representation")
    f = g.field
    dv = actions.dim_v
    for i, j in product(range(g.dim), repeat=2):
        bij = g.bracket_basis(i, j)
        ei = basis_vec(f, g.dim, i)
        ej = basis_vec(f, g.dim, j)
        for a in range(dv):
            fa = basis_vec(f, dv, a)
            # (2): rhoL(x, rhoL(y,v)) = rhoL([x,y],v) + rhoL(y, rhoL(x,v))
            lhs = actions.left_act(ei, actions.left_basis(j, a))
            rhs = vec_add(actions.left_act(bij, fa),
                          actions.left_act(ej, actions.left_basis(i, a)))
            if lhs != rhs:
                rep.add("rep-axiom-2", (i, j, a), lhs, rhs)
            # (3): rhoL(x, rhoR(v,y)) = rhoR(rhoL(x,v), y) + rhoR(v, [x,y])
            lhs = actions.left_act(ei, actions.right_basis(a, j))
            rhs = vec_add(actions.right_act(actions.left_basis(i, a), ej),
                          actions.right_act(fa, bij))
            if lhs != rhs:
                rep.add("rep-axiom-3", (i, j, a), lhs, rhs)
            # (4): rhoR(v, [x,y]) = rhoR(rhoR(v,x), y) + rhoL(x, rhoR(v,y))
            lhs = actions.right_act(fa, bij)
            rhs = vec_add(actions.right_act(actions.right_basis(a, i), ej),
                          actions.left_act(ei, actions.right_basis(a, j)))
            if lhs != rhs:
                rep.add("rep-axiom-4", (i, j, a), lhs, rhs)
    return rep


def validate_leibniz_g_rep(d):
    """Representation axioms plus the three coupling axioms (5)-(7)."""
    rep = ValidationReport("leibniz-g-rep")
    rep.violations.extend(validate_leibniz(d.g).violations)
    rep.violations.extend(validate_leibniz(d.h).violations)
    rep.violations.extend(validate_representation(d.g, d.actions).violations)
    f = d.field
    h, act = d.h, d.actions
    for a, b in product(range(h.dim), repeat=2):
        fa = basis_vec(f, h.dim, a)
        fb = basis_vec(f, h.dim, b)
        hab = h.bracket_basis(a, b)
        for i in range(d.g.dim):
            ei = basis_vec(f, d.g.dim, i)
            # (5): [u, rhoR(v,x)]_h = rhoR([u,v]_h, x) + [v, rhoR(u,x)]_h
            lhs = h.bracket(fa, act.right_basis(b, i))
            rhs = vec_add(act.right_act(hab, ei),
                          h.bracket(fb, act.right_basis(a, i)))
            if lhs != rhs:
                rep.add("lrep-axiom-5", (a, b, i), lhs, rhs)
            # (6): [u, rhoL(x,v)]_h = [rhoR(u,x), v]_h + rhoL(x, [u,v]_h)
            lhs = h.bracket(fa, act.left_basis(i, b))
            rhs = vec_add(h.bracket(act.right_basis(a, i), fb),
                          act.left_act(ei, hab))
            if lhs != rhs:
                rep.add("lrep-axiom-6", (a, b, i), lhs, rhs)
            # (7): rhoL(x, [u,v]_h) = [rhoL(x,u), v]_h + [u, rhoL(x,v)]_h
            lhs = act.left_act(ei, hab)
            rhs = vec_add(h.bracket(act.left_basis(i, a), fb),
                          h.bracket(fa, act.left_basis(i, b)))
            if lhs != rhs:
                rep.add("lrep-axiom-7", (a, b, i), lhs, rhs)
    return rep


def semidirect_product(d, lam):
    """Weighted semidirect bracket on g + h; validates its input."""
    check = validate_leibniz_g_rep(d)
    if not check.ok:
        raise InvalidInput(check.summary())
    return semidirect_product_unchecked(d, lam)


def semidirect_product_unchecked(d, lam):
    f = d.field
    lam = f.coerce(lam)
    ng, nh = d.g.dim, d.h.dim
    n = ng + nh
    c = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
    for i, j in product(range(ng), repeat=2):
        for k, v in enumerate(d.g.c[i][j]):
            c[i][j][k] = v
    for i in range(ng):
        for b in range(nh):
            # [(x,0),(0,v)] = (0, rhoL(x,v))
            for k, v in enumerate(d.actions.left[i][b]):
                c[i][ng + b][ng + k] = v
    for a in range(nh):
        for j in range(ng):
            # [(0,u),(y,0)] = (0, rhoR(u,y))
            for k, v in enumerate(d.actions.right[a][j]):
                c[ng + a][j][ng + k] = v
    for a, b in product(range(nh), repeat=2):
        for k, v in enumerate(d.h.c[a][b]):
            c[ng + a][ng + b][ng + k] = lam * v
    return LeibnizAlgebra(f, n, c)


def is_algebra_morphism(src, dst, phi):
    """phi: Matrix src -> dst with phi([x,y]) = [phi x, phi y]."""
    if phi.ncols != src.dim or phi.nrows != dst.dim:
        raise ShapeMismatch("morphism matrix has wrong shape")
    f = src.field
    for i, j in product(range(src.dim), repeat=2):
        lhs = phi.mul_vec(src.bracket_basis(i, j))
        rhs = dst.bracket(phi.col(i), phi.col(j))
        if lhs != rhs:
            return False
    return True


def leibniz_differential(g, actions, f):
    """General Leibniz cochain differential, arity n >= 1.

    f is a MultiMap g^{x n} -> V; actions is the (rho^L, rho^R) pair of
    g on V.  Degree 0 is deliberately not exposed here; the specialized
    operator complex pins its own degree-0 formula.
    """
    if f.src_dim != g.dim or f.tgt_dim != actions.dim_v:
        raise ShapeMismatch("cochain does not match algebra/carrier dims")
    if actions.dim_g != g.dim:
        raise ShapeMismatch("actions do not match algebra dim")
    fld = g.field
    n = f.arity
    out = MultiMap(fld, n + 1, g.dim, actions.dim_v)
    for idx in out.tuples():
        acc = zero_vec(fld, actions.dim_v)
        for i in range(1, n + 1):
            rest = idx[:i - 1] + idx[i:]
            val = actions.left_act(basis_vec(fld, g.dim, idx[i - 1]),
                                   f.get(rest))
            acc = vec_add(acc, vec_scale(_sign(fld, i + 1), val))
        val = actions.right_act(f.get(idx[:n]),
                                basis_vec(fld, g.dim, idx[n]))
        acc = vec_add(acc, vec_scale(_sign(fld, n + 1), val))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 2):
                bij = g.bracket_basis(idx[i - 1], idx[j - 1])
                args = (list(idx[:i - 1]) + list(idx[i:j - 1]) + [bij]
                        + list(idx[j:]))
                acc = vec_add(acc, vec_scale(_sign(fld, i), f.apply(args)))
        out.set_(idx, acc)
    return out


def _sign(field, k):
    return field.one if k % 2 == 0 else -field.one


def change_of_basis_algebra(a, s):
    """Structure constants of a in the basis e'_i = sum_j s[j][i] e_j."""
    si = s.inverse()
    c = [[[a.field.zero] * a.dim for _ in range(a.dim)] for _ in range(a.dim)]
    for i, j in product(range(a.dim), repeat=2):
        v = si.mul_vec(a.bracket(s.col(i), s.col(j)))
        for k in range(a.dim):
            c[i][j][k] = v[k]
    return LeibnizAlgebra(a.field, a.dim, c)


def change_of_basis_grep(d, sg, sh):
    """Transport a LeibnizGRep along basis changes of g and h."""
    f = d.field
    g2 = change_of_basis_algebra(d.g, sg)
    h2 = change_of_basis_algebra(d.h, sh)
    shi = sh.inverse()
    left = [[[f.zero] * d.h.dim for _ in range(d.h.dim)] for _ in range(d.g.dim)]
    right = [[[f.zero] * d.h.dim for _ in range(d.g.dim)] for _ in range(d.h.dim)]
    for i in range(d.g.dim):
        for a in range(d.h.dim):
            v = shi.mul_vec(d.actions.left_act(sg.col(i), sh.col(a)))
            for b in range(d.h.dim):
                left[i][a][b] = v[b]
            v = shi.mul_vec(d.actions.right_act(sh.col(a), sg.col(i)))
            for b in range(d.h.dim):
                right[a][i][b] = v[b]
    return LeibnizGRep(g2, h2, ActionPair(f, d.g.dim, d.h.dim, left, right))
