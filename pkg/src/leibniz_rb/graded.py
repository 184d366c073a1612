"""Balavoine bracket, derived bracket and the operator differential.

The derived bracket and the differential each have two independent
implementations: an explicit shuffle formula and a route through the
Balavoine bracket on maps of the total space V = g + h.  Public entry
points compare the two and raise OracleDisagreement on any split, which
traps sign-convention bugs without trusting either route alone.
"""

from functools import lru_cache
from itertools import combinations, product

from .core import ValidationReport, basis_vec, validate_leibniz_g_rep
from .errors import (InvalidInput, OracleDisagreement, ShapeMismatch,
                     StructureIncompatible)
from .linalg import Matrix, vec_add, vec_is_zero, vec_scale, zero_vec
from .multimap import MultiMap


def _parity_sign(field, perm):
    inv = 0
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inv += 1
    return field.one if inv % 2 == 0 else -field.one


@lru_cache(maxsize=None)
def shuffles2(field, p, q):
    """(p,q)-shuffles of {0..p+q-1}: increasing on each block, with parity."""
    n = p + q
    all_idx = range(n)
    out = []
    for first in combinations(all_idx, p):
        rest = [i for i in all_idx if i not in first]
        perm = list(first) + rest
        out.append((perm, _parity_sign(field, perm)))
    return out


@lru_cache(maxsize=None)
def shuffles3(field, p, q):
    """(p,1,q)-shuffles of {0..p+q}: blocks of sizes p, 1, q, with parity."""
    n = p + 1 + q
    all_idx = range(n)
    out = []
    for first in combinations(all_idx, p):
        remaining = [i for i in all_idx if i not in first]
        for mid in remaining:
            rest = [i for i in remaining if i != mid]
            perm = list(first) + [mid] + rest
            out.append((perm, _parity_sign(field, perm)))
    return out


def _pow_sign(field, k):
    return field.one if k % 2 == 0 else -field.one


def circ_i(f, g, i):
    """Balavoine partial composition f o_i g, 1 <= i <= arity(f).

    The last argument of g occupies the fixed slot; the earlier
    arguments of g are shuffled with the first i-1 arguments of f.
    """
    if not (f.src_dim == g.src_dim == f.tgt_dim == g.tgt_dim):
        raise ShapeMismatch("partial composition needs maps on one space")
    m = f.arity - 1
    n = g.arity - 1
    if not 1 <= i <= m + 1:
        raise ShapeMismatch("composition slot %d out of range 1..%d" % (i, m + 1))
    fld = f.field
    out = MultiMap(fld, m + n + 1, f.src_dim, f.tgt_dim)
    shs = shuffles2(fld, i - 1, n)
    for idx in out.tuples():
        acc = zero_vec(fld, f.tgt_dim)
        for perm, sign in shs:
            # perm permutes argument positions 0..i+n-2
            gval = g.get(tuple([idx[perm[k]] for k in range(i - 1, i - 1 + n)]
                               + [idx[i + n - 1]]))
            if vec_is_zero(gval):
                continue
            args = [idx[perm[k]] for k in range(i - 1)] + [gval] \
                + list(idx[i + n:])
            fval = f.apply(args)
            for t in range(f.tgt_dim):
                if fval[t]:
                    acc[t] = acc[t] + sign * fval[t]
        out.set_(idx, acc)
    return out


def balavoine_bracket(f, g):
    """Graded Lie bracket on multilinear maps; degree = arity - 1."""
    m = f.arity - 1
    n = g.arity - 1
    fld = f.field
    total = None
    for i in range(1, m + 2):
        term = circ_i(f, g, i).scale(_pow_sign(fld, (i - 1) * n))
        total = term if total is None else total + term
    outer = _pow_sign(fld, m * n)
    for i in range(1, n + 2):
        term = circ_i(g, f, i).scale(outer * _pow_sign(fld, (i - 1) * m))
        total = total - term
    return total


# ---------------------------------------------------------------------------
# Structure elements on V = g + h


def make_theta(d, validate=True):
    """theta = mu_g + rho^L + rho^R as an arity-2 map on V = g + h."""
    if validate:
        check = validate_leibniz_g_rep(d)
        if not check.ok:
            raise InvalidInput(check.summary())
    fld = d.field
    ng, nh = d.g.dim, d.h.dim
    n = ng + nh
    th = MultiMap(fld, 2, n, n)
    for i, j in product(range(ng), repeat=2):
        th.set_((i, j), list(d.g.c[i][j]) + [fld.zero] * nh)
    for i in range(ng):
        for b in range(nh):
            th.set_((i, ng + b),
                    [fld.zero] * ng + list(d.actions.left[i][b]))
    for a in range(nh):
        for j in range(ng):
            th.set_((ng + a, j),
                    [fld.zero] * ng + list(d.actions.right[a][j]))
    if validate:
        if not balavoine_bracket(th, th).is_zero():
            raise StructureIncompatible("[theta, theta]_B != 0")
    return th


def make_theta_prime(d, lam, validate=True):
    """theta' = -lambda mu_h as an arity-2 map on V = g + h."""
    if validate:
        check = validate_leibniz_g_rep(d)
        if not check.ok:
            raise InvalidInput(check.summary())
    fld = d.field
    lam = fld.coerce(lam)
    ng, nh = d.g.dim, d.h.dim
    n = ng + nh
    tp = MultiMap(fld, 2, n, n)
    for a, b in product(range(nh), repeat=2):
        tp.set_((ng + a, ng + b),
                [fld.zero] * ng + [-lam * x for x in d.h.c[a][b]])
    if validate:
        if not balavoine_bracket(tp, tp).is_zero():
            raise StructureIncompatible("[theta', theta']_B != 0")
        if not balavoine_bracket(make_theta(d, validate=False), tp).is_zero():
            raise StructureIncompatible("[theta, theta']_B != 0")
    return tp


def lift(p, ng, nh):
    """Embed P: h^{x m} -> g as P^ on V, zero unless all inputs are in h."""
    if p.src_dim != nh or p.tgt_dim != ng:
        raise ShapeMismatch("lift expects a map h^{x m} -> g")
    n = ng + nh
    out = MultiMap(p.field, p.arity, n, n)
    for idx in p.tuples():
        val = p.get(idx)
        out.set_(tuple(ng + a for a in idx), list(val) + [p.field.zero] * nh)
    return out


def restrict(q, ng, nh):
    """Restrict a map on V to h-inputs and project onto g."""
    out = MultiMap(q.field, q.arity, nh, ng)
    for idx in out.tuples():
        val = q.get(tuple(ng + a for a in idx))
        out.set_(idx, val[:ng])
    return out


# ---------------------------------------------------------------------------
# Derived bracket: explicit shuffle formula and nested-Balavoine route


def derived_bracket_explicit(d, p, q):
    """The six-sum shuffle formula for [[P, Q]] on Hom(h^{x *}, g)."""
    fld = d.field
    m, n = p.arity, q.arity
    out = MultiMap(fld, m + n, d.h.dim, d.g.dim)
    for idx in out.tuples():
        acc = _derived_half(d, p, q, idx)
        acc = vec_add(acc, vec_scale(-_pow_sign(fld, m * n),
                                     _derived_half(d, q, p, idx)))
        out.set_(idx, acc)
    return out


def _derived_half(d, p, q, idx):
    """The three P-outer sums of the explicit formula at one basis tuple."""
    fld = d.field
    act = d.actions
    m, n = p.arity, q.arity
    acc = zero_vec(fld, d.g.dim)

    def accumulate(c, vec):
        for t in range(d.g.dim):
            if vec[t]:
                acc[t] = acc[t] + c * vec[t]

    for i in range(1, m + 1):
        block_sign = _pow_sign(fld, (i - 1) * n)
        # rho^L(Q(...), u_{i+n}) slot
        for perm, sign in shuffles2(fld, i - 1, n):
            qval = q.get(tuple(idx[perm[k]] for k in range(i - 1, i - 1 + n)))
            if vec_is_zero(qval):
                continue
            lval = act.left_act(qval, basis_vec(fld, d.h.dim, idx[i + n - 1]))
            args = [idx[perm[k]] for k in range(i - 1)] + [lval] + list(idx[i + n:])
            accumulate(block_sign * sign, p.apply(args))
        # rho^R(u_{sigma(i)}, Q(...)) slot.  The shuffle sign here is the
        # parity of the permutation with the middle element moved past the
        # inner block (an extra (-1)^{n-1}); this is the unique convention
        # under which the formula agrees with the nested-Balavoine route.
        mid_sign = _pow_sign(fld, n - 1)
        for perm, sign in shuffles3(fld, i - 1, n - 1):
            qval = q.get(tuple([idx[perm[k]] for k in range(i, i + n - 1)]
                               + [idx[i + n - 1]]))
            if vec_is_zero(qval):
                continue
            rval = act.right_act(basis_vec(fld, d.h.dim, idx[perm[i - 1]]), qval)
            args = [idx[perm[k]] for k in range(i - 1)] + [rval] + list(idx[i + n:])
            accumulate(block_sign * sign * mid_sign, p.apply(args))
    # [P(...), Q(...)]_g term
    outer = _pow_sign(fld, m * n)
    for perm, sign in shuffles2(fld, m, n - 1):
        pval = p.get(tuple(idx[perm[k]] for k in range(m)))
        if vec_is_zero(pval):
            continue
        qval = q.get(tuple([idx[perm[k]] for k in range(m, m + n - 1)]
                           + [idx[m + n - 1]]))
        accumulate(outer * sign, d.g.bracket(pval, qval))
    return acc


def derived_bracket_lifted(d, p, q, theta=None):
    """[[P, Q]] via (-1)^{m} [[theta, P^]_B, Q^]_B restricted to h -> g.

    Degree bookkeeping: the prefactor (-1)^m for P of arity m is the one
    under which this route agrees with the explicit formula; the
    agreement itself is asserted by derived_bracket.
    """
    ng, nh = d.g.dim, d.h.dim
    if theta is None:
        theta = make_theta(d, validate=False)
    inner = balavoine_bracket(theta, lift(p, ng, nh))
    nested = balavoine_bracket(inner, lift(q, ng, nh))
    return restrict(nested, ng, nh).scale(_pow_sign(d.field, p.arity))


def derived_bracket(d, p, q, cross_check=True):
    """Graded Lie bracket on Hom(h^{x *}, g); dual-route checked by default."""
    if p.src_dim != d.h.dim or p.tgt_dim != d.g.dim or not (
            q.src_dim == p.src_dim and q.tgt_dim == p.tgt_dim):
        raise ShapeMismatch("derived bracket needs maps h^{x *} -> g")
    explicit = derived_bracket_explicit(d, p, q)
    if cross_check:
        lifted = derived_bracket_lifted(d, p, q)
        if explicit != lifted:
            raise OracleDisagreement(
                "derived bracket: explicit formula != lifted route "
                "(arities %d, %d)" % (p.arity, q.arity))
    return explicit


def differential_d_explicit(d, lam, p):
    """(dP)(u_1..u_{n+1}) with the weight folded into the h bracket."""
    fld = d.field
    lam = fld.coerce(lam)
    n = p.arity
    out = MultiMap(fld, n + 1, d.h.dim, d.g.dim)
    outer = _pow_sign(fld, n)
    for idx in out.tuples():
        acc = zero_vec(fld, d.g.dim)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 2):
                br = vec_scale(lam, d.h.bracket_basis(idx[i - 1], idx[j - 1]))
                args = (list(idx[:i - 1]) + list(idx[i:j - 1]) + [br]
                        + list(idx[j:]))
                acc = vec_add(acc, vec_scale(_pow_sign(fld, i), p.apply(args)))
        out.set_(idx, vec_scale(outer, acc))
    return out


def differential_d_lifted(d, lam, p, theta_prime=None):
    """dP via restriction of [theta', P^]_B; cross-check route."""
    ng, nh = d.g.dim, d.h.dim
    if theta_prime is None:
        theta_prime = make_theta_prime(d, lam, validate=False)
    return restrict(balavoine_bracket(theta_prime, lift(p, ng, nh)), ng, nh)


def differential_d(d, lam, p, cross_check=True):
    """Differential of the operator dgLa; dual-route checked by default."""
    if p.src_dim != d.h.dim or p.tgt_dim != d.g.dim:
        raise ShapeMismatch("differential needs a map h^{x *} -> g")
    explicit = differential_d_explicit(d, lam, p)
    if cross_check:
        lifted = differential_d_lifted(d, lam, p)
        if explicit != lifted:
            raise OracleDisagreement(
                "differential d: explicit formula != lifted route "
                "(arity %d)" % p.arity)
    return explicit


def maurer_cartan_residual(d, lam, t):
    """dT + (1/2)[[T, T]]; over GF(2) the 2-scaled form 2 dT + [[T, T]].

    Zero exactly when T satisfies the weighted operator identity (over
    GF(2) the equivalence holds for the 2-scaled residual).
    """
    if isinstance(t, Matrix):
        t = MultiMap.from_matrix(t)
    fld = d.field
    dt = differential_d_explicit(d, lam, t)
    br = derived_bracket_explicit(d, t, t)
    if fld.characteristic == 2:
        return dt.scale(fld.coerce(2)) + br
    return dt + br.scale(fld.half())


def _degree(p):
    """dgLa degree of an element of the derived bracket algebra."""
    return p.arity


def dgla_samples(d, count=4, max_arity=2, seed=0):
    """Deterministic pseudo-random (P, Q) pairs and (P, Q, R) triples.

    Elements are multilinear maps h^{x k} -> g with small integer
    coefficients; the same (d, count, seed) always yields the same list.
    """
    import random as _random

    rng = _random.Random(seed)
    fld = d.field

    def draw(arity):
        m = MultiMap(fld, arity, d.h.dim, d.g.dim)
        for idx in m.tuples():
            m.set_(idx, [fld.coerce(rng.randrange(-2, 3))
                         for _ in range(d.g.dim)])
        return m

    out = []
    for _ in range(count):
        out.append((draw(rng.randint(1, max_arity)),
                    draw(rng.randint(1, max_arity))))
    for _ in range(count):
        out.append((draw(rng.randint(1, max_arity)),
                    draw(rng.randint(1, max_arity)),
                    draw(rng.randint(1, max_arity))))
    return out


def check_dgla(d, lam, samples, cross_check=False):
    """Verify the dgLa laws on given homogeneous elements.

    samples: list of (P, Q) pairs and (P, Q, R) triples of MultiMaps
    h^{x *} -> g.  Antisymmetry, d^2 = 0 and the graded Leibniz rule are
    checked on pairs; the graded Jacobi identity on triples.
    """
    rep = ValidationReport("dgla")
    br = lambda a, b: derived_bracket(d, a, b, cross_check=cross_check)
    dd = lambda a: differential_d(d, lam, a, cross_check=cross_check)
    fld = d.field
    for k, sample in enumerate(samples):
        if len(sample) == 2:
            p, q = sample
            m, n = _degree(p), _degree(q)
            pq = br(p, q)
            if not (pq + br(q, p).scale(_pow_sign(fld, m * n))).is_zero():
                rep.add("graded-antisymmetry", (k,), pq.flatten(), [])
            lhs = dd(pq)
            rhs = br(dd(p), q) + br(p, dd(q)).scale(_pow_sign(fld, m))
            if lhs != rhs:
                rep.add("graded-leibniz-rule", (k,), lhs.flatten(), rhs.flatten())
            if not dd(dd(p)).is_zero():
                rep.add("d-squared", (k,), dd(dd(p)).flatten(), [])
        else:
            p, q, r = sample
            m, n = _degree(p), _degree(q)
            lhs = br(p, br(q, r))
            rhs = br(br(p, q), r) + br(q, br(p, r)).scale(_pow_sign(fld, m * n))
            if lhs != rhs:
                rep.add("graded-jacobi", (k,), lhs.flatten(), rhs.flatten())
    return rep
