"""Order-N deformations of weighted relative Rota-Baxter operators.

A deformation is a truncated polynomial T_t = T_0 + t T_1 + ... + t^N T_N
whose coefficients satisfy the deformation equations

    sum_{i+j=n} [T_i u, T_j v]
        = sum_{i+j=n} T_i( rho^L(T_j u, v) + rho^R(u, T_j v) )
          + lambda T_n([u, v]_h)           for n = 0..N,

equivalently d_T(T_n) = -1/2 sum_{i+j=n, i,j>=1} [[T_i, T_j]] for n >= 1.
Both forms are computed and compared, so a sign bug in either route is
trapped.  Everything is truncated polynomial arithmetic at a fixed order;
no power-series object exists.
"""

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Optional

from .cohomology import d_T, delta_T, delta_T_0, delta_matrix
from .core import ValidationReport, basis_vec
from .errors import (BaseMismatch, InvalidDeformation, OracleDisagreement,
                     ResourceLimit, ShapeMismatch, WrongField)
from .fields import PrimeField
from .linalg import Matrix, vec_add, vec_scale
from .multimap import MultiMap


class Deformation:
    """Coefficients T_0..T_N of an order-N deformation of a base operator."""

    def __init__(self, base, coeffs):
        if not coeffs:
            raise ShapeMismatch("a deformation needs at least T_0")
        if coeffs[0] != base.t:
            raise BaseMismatch("T_0 must equal the base operator")
        shape = base.t.shape
        for k, m in enumerate(coeffs):
            if m.shape != shape:
                raise ShapeMismatch("T_%d has shape %s, expected %s"
                                    % (k, m.shape, shape))
        self.base = base
        self.coeffs = list(coeffs)
        self.order = len(coeffs) - 1
        self.field = base.field

    @classmethod
    def trivial(cls, base, order):
        fld = base.field
        zero = Matrix.zeros(fld, *base.t.shape)
        return cls(base, [base.t] + [zero] * order)

    def __eq__(self, other):
        return (isinstance(other, Deformation) and self.base == other.base
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return "Deformation(order=%d)" % self.order


def check_deformation(defm, cross_check=True):
    """Verify the deformation equations for n = 0..N on all basis pairs.

    With cross_check the dgLa form of the same equations is evaluated for
    n >= 1 and any verdict split raises OracleDisagreement.
    """
    r = defm.base
    d, fld, lam = r.context, r.field, r.weight
    act, ts = d.actions, defm.coeffs
    rep = ValidationReport("deformation")
    direct_bad = set()
    for n in range(defm.order + 1):
        for a in range(d.h.dim):
            ea = basis_vec(fld, d.h.dim, a)
            for b in range(d.h.dim):
                eb = basis_vec(fld, d.h.dim, b)
                lhs = [fld.zero] * d.g.dim
                rhs = vec_scale(lam, ts[n].mul_vec(d.h.bracket(ea, eb)))
                for i in range(n + 1):
                    j = n - i
                    lhs = vec_add(lhs, d.g.bracket(ts[i].mul_vec(ea),
                                                   ts[j].mul_vec(eb)))
                    inner = vec_add(act.left_act(ts[j].mul_vec(ea), eb),
                                    act.right_act(ea, ts[j].mul_vec(eb)))
                    rhs = vec_add(rhs, ts[i].mul_vec(inner))
                if lhs != rhs:
                    rep.add("deformation-equation", (n, a, b), lhs, rhs)
                    direct_bad.add(n)
    if cross_check:
        for n in range(1, defm.order + 1):
            tn = MultiMap.from_matrix(ts[n])
            resid = d_T(r, tn, cross_check=False).scale(fld.coerce(2))
            for i in range(1, n):
                from .graded import derived_bracket_explicit
                resid = resid + derived_bracket_explicit(
                    d, MultiMap.from_matrix(ts[i]),
                    MultiMap.from_matrix(ts[n - i]))
            if resid.is_zero() == (n in direct_bad):
                raise OracleDisagreement(
                    "deformation equation and dgLa form disagree at order %d"
                    % n)
    return rep


def infinitesimal(defm):
    """T_1 of a valid deformation, with its 1-cocycle verdict."""
    if defm.order < 1:
        raise InvalidDeformation("infinitesimal needs order >= 1")
    if not check_deformation(defm).ok:
        raise InvalidDeformation("deformation equations fail")
    t1 = MultiMap.from_matrix(defm.coeffs[1])
    return t1, delta_T(defm.base, t1).is_zero()


def _poly_compose(field, a, b, order):
    """Coefficients of the truncated composite a(t) . b(t)."""
    out = []
    for n in range(order + 1):
        acc = Matrix.zeros(field, a[0].nrows, b[0].ncols)
        for i in range(n + 1):
            if i < len(a) and n - i < len(b):
                acc = acc + a[i] * b[n - i]
        out.append(acc)
    return out


def _poly_inverse(field, a, order):
    """Inverse of a truncated polynomial of matrices with a_0 invertible."""
    inv0 = a[0].inverse()
    out = [inv0]
    for n in range(1, order + 1):
        acc = Matrix.zeros(field, a[0].nrows, a[0].ncols)
        for i in range(1, n + 1):
            if i < len(a):
                acc = acc + a[i] * out[n - i]
        out.append((inv0 * acc).scale(-field.one))
    return out


def _bracket_matrix(a, x0):
    """Matrix of [x0, -] on a Leibniz algebra."""
    cols = [a.bracket(x0, basis_vec(a.field, a.dim, j)) for j in range(a.dim)]
    return Matrix.from_cols(a.field, cols, a.dim)


def _left_action_matrix(d, x0):
    """Matrix of rho^L(x0, -): h -> h."""
    cols = [d.actions.left_act(x0, basis_vec(d.field, d.h.dim, a))
            for a in range(d.h.dim)]
    return Matrix.from_cols(d.field, cols, d.h.dim)


def equivalence_maps(defm, x0, higher_phi=None, higher_psi=None):
    """Coefficient lists of Phi_t and Psi_t truncated at the order of defm."""
    d, fld, n = defm.base.context, defm.field, defm.order
    phi = [Matrix.identity(fld, d.g.dim), _bracket_matrix(d.g, x0)]
    psi = [Matrix.identity(fld, d.h.dim), _left_action_matrix(d, x0)]
    phi += list(higher_phi or [])
    psi += list(higher_psi or [])
    zero_g = Matrix.zeros(fld, d.g.dim, d.g.dim)
    zero_h = Matrix.zeros(fld, d.h.dim, d.h.dim)
    while len(phi) <= n:
        phi.append(zero_g)
    while len(psi) <= n:
        psi.append(zero_h)
    return phi[:n + 1], psi[:n + 1]


def check_equivalence(defm, defm2, x0, higher_phi=None, higher_psi=None):
    """Is (Phi_t, Psi_t) a morphism of deformed operators from defm to defm2?

    All five morphism conditions are expanded order-by-order in t up to
    the deformation order: Phi and Psi are algebra morphisms, intertwine
    the two truncated operators and both actions.  On success with
    order >= 1, the cohomologous-infinitesimal identity
    T_1 - T_1' = delta(x0) is re-asserted.
    """
    if defm.base != defm2.base or defm.order != defm2.order:
        raise ShapeMismatch("equivalence needs deformations of a common base "
                            "and order")
    d, fld, order = defm.base.context, defm.field, defm.order
    phi, psi = equivalence_maps(defm, x0, higher_phi, higher_psi)
    if _poly_compose(fld, phi, defm.coeffs, order) != \
            _poly_compose(fld, defm2.coeffs, psi, order):
        return False
    act = d.actions
    for n in range(order + 1):
        for i in range(d.g.dim):
            ei = basis_vec(fld, d.g.dim, i)
            for j in range(d.g.dim):
                ej = basis_vec(fld, d.g.dim, j)
                lhs = phi[n].mul_vec(d.g.bracket(ei, ej))
                rhs = [fld.zero] * d.g.dim
                for k in range(n + 1):
                    rhs = vec_add(rhs, d.g.bracket(phi[k].mul_vec(ei),
                                                   phi[n - k].mul_vec(ej)))
                if lhs != rhs:
                    return False
        for a in range(d.h.dim):
            ea = basis_vec(fld, d.h.dim, a)
            for b in range(d.h.dim):
                eb = basis_vec(fld, d.h.dim, b)
                lhs = psi[n].mul_vec(d.h.bracket(ea, eb))
                rhs = [fld.zero] * d.h.dim
                for k in range(n + 1):
                    rhs = vec_add(rhs, d.h.bracket(psi[k].mul_vec(ea),
                                                   psi[n - k].mul_vec(eb)))
                if lhs != rhs:
                    return False
        for i in range(d.g.dim):
            ei = basis_vec(fld, d.g.dim, i)
            for a in range(d.h.dim):
                ea = basis_vec(fld, d.h.dim, a)
                lhs = psi[n].mul_vec(act.left_act(ei, ea))
                rhs = [fld.zero] * d.h.dim
                for k in range(n + 1):
                    rhs = vec_add(rhs, act.left_act(phi[k].mul_vec(ei),
                                                    psi[n - k].mul_vec(ea)))
                if lhs != rhs:
                    return False
                lhs = psi[n].mul_vec(act.right_act(ea, ei))
                rhs = [fld.zero] * d.h.dim
                for k in range(n + 1):
                    rhs = vec_add(rhs, act.right_act(psi[n - k].mul_vec(ea),
                                                     phi[k].mul_vec(ei)))
                if lhs != rhs:
                    return False
    if order >= 1:
        assert defm.coeffs[1] - defm2.coeffs[1] == delta_T_0(defm.base, x0)
    return True


def conjugate_deformation(defm, x0, higher_phi=None, higher_psi=None):
    """The deformation Phi_t . T_t . Psi_t^{-1}, truncated at defm's order."""
    fld, order = defm.field, defm.order
    phi, psi = equivalence_maps(defm, x0, higher_phi, higher_psi)
    inv = _poly_inverse(fld, psi, order)
    coeffs = _poly_compose(fld, _poly_compose(fld, phi, defm.coeffs, order),
                           inv, order)
    return Deformation(defm.base, coeffs)


def check_nijenhuis(r, x0):
    """The four Nijenhuis-element conditions on all basis tuples."""
    d, fld = r.context, r.field
    act = d.actions
    ng, nh = d.g.dim, d.h.dim
    if len(x0) != ng:
        raise ShapeMismatch("x0 must live in g")
    zg, zh = [fld.zero] * ng, [fld.zero] * nh
    bx = [d.g.bracket(x0, basis_vec(fld, ng, i)) for i in range(ng)]
    lu = [act.left_act(x0, basis_vec(fld, nh, a)) for a in range(nh)]
    for i in range(ng):
        for j in range(ng):
            if d.g.bracket(bx[i], bx[j]) != zg:
                return False
    for a in range(nh):
        for b in range(nh):
            if d.h.bracket(lu[a], lu[b]) != zh:
                return False
    for i in range(ng):
        for a in range(nh):
            if act.left_act(bx[i], lu[a]) != zh:
                return False
            if act.right_act(lu[a], bx[i]) != zh:
                return False
    return True


def _enumerate_vectors(field, n, cap):
    total = field.p ** n
    if total > cap:
        raise ResourceLimit("enumeration of %d vectors exceeds cap %d"
                            % (total, cap))
    for digits in iproduct(range(field.p), repeat=n):
        yield [field.coerce(x) for x in digits]


@dataclass
class RigidityCertificate:
    satisfied: bool
    dim_z1: int
    nijenhuis_count: int
    witness: Optional[tuple] = None


def rigidity_certificate(r, cap=10 ** 6):
    """Does Z^1 = delta(Nij(T)) hold, by exhaustive enumeration over GF(p)?

    The criterion implies rigidity; a witness cocycle outside delta(Nij(T))
    is reported when it fails.  Requires GF(p) with p > 3 so that the
    characteristic-0 identities behind the criterion are not degenerate.
    """
    fld = r.field
    if not isinstance(fld, PrimeField) or fld.p <= 3:
        raise WrongField("rigidity certification requires GF(p) with p > 3")
    d = r.context
    m1 = delta_matrix(r, 1)
    zb = m1.kernel_basis()
    if fld.p ** len(zb) > cap:
        raise ResourceLimit("Z^1 enumeration exceeds cap %d" % cap)
    z_set = set()
    for digits in iproduct(range(fld.p), repeat=len(zb)):
        v = [fld.zero] * (d.g.dim * d.h.dim)
        for c, base in zip(digits, zb):
            v = vec_add(v, vec_scale(fld.coerce(c), base))
        z_set.add(tuple(v))
    nij_image = set()
    count = 0
    for x0 in _enumerate_vectors(fld, d.g.dim, cap):
        if check_nijenhuis(r, x0):
            count += 1
            nij_image.add(tuple(MultiMap.from_matrix(
                delta_T_0(r, x0)).flatten()))
    if nij_image == z_set:
        return RigidityCertificate(True, len(zb), count)
    extra = z_set - nij_image
    witness = sorted(extra, key=lambda t: tuple(x.v for x in t))[0] \
        if extra else None
    return RigidityCertificate(False, len(zb), count, witness)


@dataclass
class ObstructionClass:
    ob: MultiMap
    is_coboundary: bool
    witness: Optional[Matrix] = None


def obstruction(defm):
    """Ob = -1/2 sum_{i+j=N+1, i,j>=1} [[T_i, T_j]], with coboundary verdict.

    The coboundary test solves delta(x) = Ob over x in Hom(h, g); the
    2-cocycle identity delta(Ob) = 0 is re-asserted on every call.
    """
    from .graded import derived_bracket

    r, fld = defm.base, defm.field
    d, n = r.context, defm.order
    acc = MultiMap(fld, 2, d.h.dim, d.g.dim)
    for i in range(1, n + 1):
        j = n + 1 - i
        if j < 1 or j > n:
            continue
        acc = acc + derived_bracket(d, MultiMap.from_matrix(defm.coeffs[i]),
                                    MultiMap.from_matrix(defm.coeffs[j]))
    ob = acc.scale(-fld.half())
    if not delta_T(r, ob).is_zero():
        raise OracleDisagreement("obstruction cochain is not a 2-cocycle")
    m1 = delta_matrix(r, 1)
    sol, _ = m1.solve(ob.flatten())
    if sol is None:
        return ObstructionClass(ob, False)
    witness = MultiMap.from_flat(fld, 1, d.h.dim, d.g.dim, sol).to_matrix()
    return ObstructionClass(ob, True, witness)


def extend(defm):
    """One-step extension to order N+1, or None when obstructed.

    The deformation equation at order N+1 reads d_T(T_{N+1}) = Ob; since
    d_T = -delta in degree 1, the witness x of delta(x) = Ob yields
    T_{N+1} = -x.  The extended deformation is re-validated before return.
    """
    cls = obstruction(defm)
    if not cls.is_coboundary:
        return None
    ext = Deformation(defm.base,
                      defm.coeffs + [cls.witness.scale(-defm.field.one)])
    rep = check_deformation(ext)
    if not rep.ok:
        raise OracleDisagreement("extension failed re-validation: %s"
                                 % rep.summary())
    return ext
