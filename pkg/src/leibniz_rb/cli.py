"""Command-line interface.

Every command reads a .lra manifest, runs one computation and prints a
report; `--format machine` emits stable line-oriented key/value text with
a schema version header so reports can be diffed byte-for-byte.  Exit
codes: 0 pass, 1 mathematical failure (violations found, not extensible,
criterion unsatisfied), 2 usage or resource errors.
"""

import argparse
import sys

from .cohomology import cohomology
from .core import (adjoint_grep, validate_leibniz, validate_leibniz_g_rep)
from .deformations import (Deformation, check_deformation, check_nijenhuis,
                           extend, obstruction, rigidity_certificate)
from .errors import (InvalidDeformation, InvalidInput, InvalidOperator,
                     LrbError, ManifestError, NotInvertible, ResourceLimit,
                     ShapeMismatch, WrongField, WrongWeight)
from .graded import check_dgla, dgla_samples, maurer_cartan_residual
from .linalg import Matrix
from .manifest import parse_manifest

from .operators import (WeightedRBO, graph_check,
                        induced_algebra, search_rbos)
from .postleibniz import from_rbo, total_algebra, validate_post_leibniz

SCHEMA = "leibniz-rb-report 1"


class Report:
    """Accumulates lines for both output formats."""

    def __init__(self, command, fmt):
        self.fmt = fmt
        self.kv = [("schema", SCHEMA), ("command", command)]
        self.text = []

    def add(self, key, value, text=None):
        self.kv.append((key, str(value)))
        self.text.append(text if text is not None else
                         "%s: %s" % (key, value))

    def emit(self, out=sys.stdout):
        if self.fmt == "machine":
            for k, v in self.kv:
                out.write("%s %s\n" % (k, v))
        else:
            for line in self.text:
                out.write(line + "\n")


def _load(args):
    with open(args.manifest, encoding="utf-8") as fh:
        text = fh.read()
    if args.field:
        lines = text.splitlines()
        replaced = False
        for i, line in enumerate(lines):
            if line.split("#", 1)[0].strip().startswith("field"):
                lines[i] = "field %s" % args.field
                replaced = True
                break
        if not replaced:
            lines.insert(0, "field %s" % args.field)
        text = "\n".join(lines) + "\n"
    return parse_manifest(text)


def _context(m, args):
    """The Leibniz g-representation selected by --actions / --algebra."""
    if getattr(args, "actions", None):
        if args.actions not in m.actions:
            raise InvalidInput("no actions named %r in manifest" % args.actions)
        return m.grep(args.actions)
    name = getattr(args, "algebra", None)
    if name is None:
        if len(m.algebras) != 1:
            raise InvalidInput("manifest has %d algebras; pick one with "
                               "--algebra or --actions" % len(m.algebras))
        name = next(iter(m.algebras))
    if name not in m.algebras:
        raise InvalidInput("no algebra named %r in manifest" % name)
    return adjoint_grep(m.algebras[name])


def _operator(m, d, args):
    name = getattr(args, "operator", None)
    if name is None:
        raise InvalidInput("--operator is required")
    if name == "id":
        if d.g.dim != d.h.dim:
            raise ShapeMismatch("--operator id needs matching dimensions")
        return Matrix.identity(m.field, d.g.dim)
    if name == "zero":
        return Matrix.zeros(m.field, d.g.dim, d.h.dim)
    if name not in m.maps:
        raise InvalidInput("no map named %r in manifest" % name)
    return m.maps[name][2]


def _weight(m, args):
    w = getattr(args, "weight", None)
    if w is None:
        if "lambda" in m.scalars:
            return m.scalars["lambda"]
        raise InvalidInput("--weight is required (no scalar 'lambda' in "
                           "manifest)")
    if w in m.scalars:
        return m.scalars[w]
    try:
        return m.field.parse(w)
    except Exception:
        raise InvalidInput("cannot parse weight %r" % w)


def _rbo(m, args):
    d = _context(m, args)
    return WeightedRBO(d, _weight(m, args), _operator(m, d, args))


def _deformation(m, args):
    name = getattr(args, "deformation", None)
    if name is None:
        if len(m.deformations) != 1:
            raise InvalidInput("pick a deformation with --deformation")
        name = next(iter(m.deformations))
    if name not in m.deformations:
        raise InvalidInput("no deformation named %r in manifest" % name)
    base_name, coeff_names = m.deformations[name]
    d = _context(m, args)
    base = WeightedRBO(d, _weight(m, args), m.maps[base_name][2])
    coeffs = [base.t] + [m.maps[nm][2] for nm in coeff_names]
    return Deformation(base, coeffs)


def _post(m, args):
    name = getattr(args, "post", None)
    if name is None:
        if len(m.posts) != 1:
            raise InvalidInput("pick a structure with --post")
        name = next(iter(m.posts))
    if name not in m.posts:
        raise InvalidInput("no post structure named %r in manifest" % name)
    return m.posts[name]


def _report_violations(rep, vrep):
    rep.add("status", "pass" if vrep.ok else "fail",
            vrep.summary())
    rep.add("violations", len(vrep.violations))
    for v in vrep.violations:
        rep.add("violation", "%s %s" % (v.law, ",".join(map(str, v.where))),
                "  %s at %s" % (v.law, v.where))
    return 0 if vrep.ok else 1


def _tensor_report(rep, key, tensor, fld):
    """Sparse `i j -> coeff k` lines for a structure tensor."""
    n = len(tensor)
    for i in range(n):
        for j in range(n):
            for k, c in enumerate(tensor[i][j]):
                if c:
                    rep.add(key, "e%d e%d -> %s e%d"
                            % (i + 1, j + 1, fld.format(c), k + 1))


def _matrix_report(rep, key, mat, fld):
    for a in range(mat.ncols):
        pairs = ["%s e%d" % (fld.format(mat.entry(i, a)), i + 1)
                 for i in range(mat.nrows) if mat.entry(i, a)]
        if pairs:
            rep.add(key, "e%d -> %s" % (a + 1, " ".join(pairs)))


def cmd_validate(m, args, rep):
    worst = 0
    for name, a in m.algebras.items():
        vrep = validate_leibniz(a)
        rep.add("algebra", "%s %s" % (name, "pass" if vrep.ok else "fail"),
                "algebra %s: %s" % (name, vrep.summary()))
        worst = max(worst, 0 if vrep.ok else 1)
    for name in m.actions:
        vrep = validate_leibniz_g_rep(m.grep(name))
        rep.add("actions", "%s %s" % (name, "pass" if vrep.ok else "fail"),
                "actions %s: %s" % (name, vrep.summary()))
        worst = max(worst, 0 if vrep.ok else 1)
    for name, p in m.posts.items():
        vrep = validate_post_leibniz(p)
        rep.add("post", "%s %s" % (name, "pass" if vrep.ok else "fail"),
                "post %s: %s" % (name, vrep.summary()))
        worst = max(worst, 0 if vrep.ok else 1)
    rep.add("status", "pass" if worst == 0 else "fail")
    return worst


def cmd_check_rbo(m, args, rep):
    r = _rbo(m, args)
    return _report_violations(rep, r.validate())


def cmd_graph_check(m, args, rep):
    d = _context(m, args)
    ok = graph_check(d, _weight(m, args), _operator(m, d, args))
    rep.add("status", "pass" if ok else "fail",
            "graph is %sclosed under the semidirect bracket"
            % ("" if ok else "not "))
    return 0 if ok else 1


def cmd_induced(m, args, rep):
    a = induced_algebra(_rbo(m, args))
    rep.add("dim", a.dim)
    _tensor_report(rep, "bracket", a.c, m.field)
    rep.add("status", "pass")
    return 0


def cmd_cohomology(m, args, rep):
    r = _rbo(m, args)
    out = cohomology(r, args.max_degree, cap=args.cap)
    for n in range(args.max_degree + 1):
        dd = out.degrees[n]
        rep.add("degree", "%d c %d z %d b %d h %d"
                % (n, dd.dim_c, dd.dim_z, dd.dim_b, dd.dim_h),
                "degree %d: dim C = %d, dim Z = %d, dim B = %d, dim H = %d"
                % (n, dd.dim_c, dd.dim_z, dd.dim_b, dd.dim_h))
    rep.add("status", "pass")
    return 0


def cmd_mc_residual(m, args, rep):
    d = _context(m, args)
    resid = maurer_cartan_residual(d, _weight(m, args), _operator(m, d, args))
    ok = resid.is_zero()
    rep.add("status", "pass" if ok else "fail",
            "Maurer-Cartan residual is %szero" % ("" if ok else "non"))
    return 0 if ok else 1


def cmd_dgla_check(m, args, rep):
    d = _context(m, args)
    samples = dgla_samples(d, count=args.samples)
    vrep = check_dgla(d, _weight(m, args), samples, cross_check=True)
    rep.add("samples", len(samples))
    return _report_violations(rep, vrep)


def cmd_deform_check(m, args, rep):
    defm = _deformation(m, args)
    rep.add("order", defm.order)
    return _report_violations(rep, check_deformation(defm))


def cmd_obstruct(m, args, rep):
    defm = _deformation(m, args)
    if not check_deformation(defm).ok:
        raise InvalidDeformation("deformation equations fail")
    cls = obstruction(defm)
    rep.add("zero", "yes" if cls.ob.is_zero() else "no",
            "obstruction cochain is %szero"
            % ("" if cls.ob.is_zero() else "non"))
    rep.add("coboundary", "yes" if cls.is_coboundary else "no",
            "obstruction class %s"
            % ("vanishes" if cls.is_coboundary else "does not vanish"))
    if cls.witness is not None:
        _matrix_report(rep, "witness", cls.witness, m.field)
    rep.add("status", "pass" if cls.is_coboundary else "fail")
    return 0 if cls.is_coboundary else 1


def cmd_extend(m, args, rep):
    defm = _deformation(m, args)
    if not check_deformation(defm).ok:
        raise InvalidDeformation("deformation equations fail")
    ext = extend(defm)
    if ext is None:
        rep.add("status", "fail", "not extensible: obstruction class "
                                  "does not vanish")
        return 1
    rep.add("order", ext.order)
    _matrix_report(rep, "next", ext.coeffs[-1], m.field)
    rep.add("status", "pass")
    return 0


def cmd_nijenhuis(m, args, rep):
    r = _rbo(m, args)
    if args.element is None:
        raise InvalidInput("--element is required")
    try:
        x0 = [m.field.parse(t) for t in args.element.split(",")]
    except Exception:
        raise InvalidInput("cannot parse --element %r" % args.element)
    ok = check_nijenhuis(r, x0)
    rep.add("status", "pass" if ok else "fail",
            "element is %sa Nijenhuis element" % ("" if ok else "not "))
    return 0 if ok else 1


def cmd_rigidity(m, args, rep):
    cert = rigidity_certificate(_rbo(m, args), cap=args.cap)
    rep.add("dim-z1", cert.dim_z1)
    rep.add("nijenhuis-count", cert.nijenhuis_count)
    rep.add("status", "pass" if cert.satisfied else "fail",
            "rigidity criterion %s"
            % ("satisfied" if cert.satisfied else "not satisfied"))
    if cert.witness is not None:
        rep.add("witness", " ".join(m.field.format(x) for x in cert.witness))
    return 0 if cert.satisfied else 1


def cmd_post_validate(m, args, rep):
    return _report_violations(rep, validate_post_leibniz(_post(m, args)))


def cmd_post_from_rbo(m, args, rep):
    p = from_rbo(_rbo(m, args))
    rep.add("dim", p.dim)
    _tensor_report(rep, "pleft", p.left, m.field)
    _tensor_report(rep, "pright", p.right, m.field)
    _tensor_report(rep, "pbracket", p.bracket, m.field)
    rep.add("status", "pass")
    return 0


def cmd_total(m, args, rep):
    a = total_algebra(_post(m, args))
    rep.add("dim", a.dim)
    _tensor_report(rep, "bracket", a.c, m.field)
    rep.add("status", "pass")
    return 0


def cmd_search(m, args, rep):
    d = _context(m, args)
    lam = _weight(m, args)
    count = 0
    for t in search_rbos(d, lam, cap=args.cap):
        count += 1
        flat = " ".join(m.field.format(t.entry(i, j))
                        for i in range(t.nrows) for j in range(t.ncols))
        rep.add("operator", flat)
    rep.add("count", count)
    rep.add("status", "pass")
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "check-rbo": cmd_check_rbo,
    "graph-check": cmd_graph_check,
    "induced": cmd_induced,
    "cohomology": cmd_cohomology,
    "mc-residual": cmd_mc_residual,
    "dgla-check": cmd_dgla_check,
    "deform-check": cmd_deform_check,
    "obstruct": cmd_obstruct,
    "extend": cmd_extend,
    "nijenhuis": cmd_nijenhuis,
    "rigidity": cmd_rigidity,
    "post-validate": cmd_post_validate,
    "post-from-rbo": cmd_post_from_rbo,
    "total": cmd_total,
    "search": cmd_search,
}


def build_parser():
    ap = argparse.ArgumentParser(
        prog="leibniz-rb",
        description="Exact computations with Leibniz algebras and weighted "
                    "Rota-Baxter operators.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("manifest", help=".lra manifest file")
    ap.add_argument("--field", help="override the manifest field, e.g. 'gf 5'")
    ap.add_argument("--algebra", help="algebra name (adjoint context)")
    ap.add_argument("--actions", help="action-pair name (relative context)")
    ap.add_argument("--operator", help="map name, or 'id' / 'zero'")
    ap.add_argument("--weight", help="weight scalar (literal or scalar name)")
    ap.add_argument("--deformation", help="deformation name")
    ap.add_argument("--post", help="post-Leibniz structure name")
    ap.add_argument("--element", help="comma-separated coordinates in g")
    ap.add_argument("--max-degree", type=int, default=2)
    ap.add_argument("--cap", type=int, default=20000)
    ap.add_argument("--samples", type=int, default=4)
    ap.add_argument("--format", choices=["text", "machine"], default="text")
    ap.add_argument("--jobs", type=int, default=1,
                    help="worker count; results are identical for any value")
    return ap


def run_command(argv, out=sys.stdout, err=sys.stderr):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = Report(args.command, args.format)
    try:
        m = _load(args)
        code = COMMANDS[args.command](m, args, rep)
    except (InvalidOperator, InvalidDeformation) as exc:
        err.write("error: %s\n" % exc)
        return 1
    except (ManifestError, ResourceLimit, WrongField, WrongWeight,
            NotInvertible, ShapeMismatch, InvalidInput, OSError) as exc:
        err.write("error: %s\n" % exc)
        return 2
    except LrbError as exc:
        err.write("internal error: %s\n" % exc)
        return 2
    rep.emit(out)
    return code


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
