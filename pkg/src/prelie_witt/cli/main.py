"""``prelie-witt`` command line.

Exit codes: 0 success, 1 defects found, 2 invalid parameters,
3 unreadable input file, 4 failed precondition.  Reports go to stdout as
``key=value`` lines; human-readable remarks go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .. import central, classify, families
from ..field import GAUSSIAN, MODES, SYMBOLIC, to_literal
from ..witt import GradedLSA, IndexWindow, sweep_threads, verify_lsa
from . import tablefile
from .literal import LiteralError, parse_scalar

EXIT_OK, EXIT_DEFECTS, EXIT_PARAMS, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3, 4

FAMILIES = ("v-alpha-eps", "v-beta-k", "novikov", "chapoton-a", "chapoton-b", "w1")
MODULE_SPECS = ("feigin-fuchs", "a-prime-01", "a-alpha", "b-beta")


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def out(key, value=None):
    print(key if value is None else f"{key}={value}")


def say(msg):
    print(msg, file=sys.stderr)


# -- argument helpers --------------------------------------------------------


def _scalar(args, name, mode):
    raw = getattr(args, name)
    if raw is None:
        raise CommandError(EXIT_PARAMS, f"--{name} is required here")
    try:
        return parse_scalar(raw, mode)
    except (LiteralError, ArithmeticError) as exc:
        raise CommandError(EXIT_PARAMS, f"--{name}: {exc}") from None


def _window(args) -> IndexWindow:
    try:
        return IndexWindow(args.N)
    except ValueError as exc:
        raise CommandError(EXIT_PARAMS, str(exc)) from None


def family_params(args) -> families.FamilyParams:
    mode = args.field
    fam = args.family
    if fam == "v-alpha-eps":
        p = families.VAlphaEps(_scalar(args, "alpha", mode), _scalar(args, "eps", mode))
    elif fam == "v-beta-k":
        if args.k is None:
            raise CommandError(EXIT_PARAMS, "--k is required for v-beta-k")
        p = families.VBetaK(_scalar(args, "beta", mode), args.k)
    elif fam == "novikov":
        p = families.Novikov(_scalar(args, "alpha", mode))
    elif fam == "chapoton-a":
        p = families.ChapotonA(_scalar(args, "a", mode))
    elif fam == "chapoton-b":
        p = families.ChapotonB(_scalar(args, "b", mode))
    else:
        p = families.W1()
    try:
        p.validate()
    except families.InvalidParameterError as exc:
        raise CommandError(EXIT_PARAMS, str(exc)) from None
    return p


def module_spec(args) -> families.ModuleSpec:
    mode = args.field
    if args.spec == "feigin-fuchs":
        return families.FeiginFuchs(_scalar(args, "alpha", mode), _scalar(args, "beta", mode))
    if args.spec == "a-prime-01":
        return families.APrime01()
    if args.spec == "a-alpha":
        return families.AAlpha(_scalar(args, "alpha", mode))
    return families.BBeta(_scalar(args, "beta", mode))


def _read(path, field=None) -> tablefile.TableFile:
    try:
        return tablefile.read(path, field)
    except tablefile.TableFormatError as exc:
        raise CommandError(EXIT_PARSE, f"{path}: {exc}") from None


def _report(report, limit):
    for line in report.summary_lines(limit):
        out(line)


# -- commands ----------------------------------------------------------------


def cmd_gen(args) -> int:
    p = family_params(args)
    w = _window(args)
    A = families.make_family(p)
    try:
        entries = {(m, n): A.f(m, n) for m, n in w.pairs()}
    except ArithmeticError as exc:
        raise CommandError(EXIT_PARAMS, f"cannot tabulate {p.describe()}: {exc}") from None
    tablefile.write(args.out, "structure", args.field, w, entries)
    say(f"wrote {p.describe()} on N={w.N} to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    tf = _read(args.input, args.field)
    if tf.role == "omega":
        if not args.base:
            raise CommandError(EXIT_PRECONDITION, "verifying an omega table needs --base STRUCTURE_FILE")
        base = _read(args.base, tf.field)
        report = central.verify_cocycle(tf.cocycle(), base.structure(), tf.window)
    else:
        report = verify_lsa(tf.structure(), tf.window)
    out("status", "ok" if report.ok else "defects")
    _report(report, args.witnesses)
    if not report.ok:
        say(f"{len(report.defects)} defects, {len(report.errors)} evaluation errors")
        return EXIT_DEFECTS
    return EXIT_OK


def cmd_classify(args) -> int:
    tf = _read(args.input)
    if tf.role != "structure":
        raise CommandError(EXIT_PRECONDITION, "classify needs a structure table")
    if tf.field != GAUSSIAN or args.field != GAUSSIAN:
        raise CommandError(EXIT_PRECONDITION, "classify works over Q(i) only")
    w = tf.window
    result = classify.fit_family(tf.structure(), w)
    for note in result.notes:
        say(note)
    if result.kind == "nofit":
        out("result", "nofit")
        if result.witness is not None:
            out("witness", "({},{})".format(*result.witness))
        say("no known family matches this table")
        return EXIT_DEFECTS
    orbit = classify.isomorphism_orbit(result.params, w)
    line = classify.describe_orbit(result.params, orbit)
    out("result", "fitted")
    out("family", result.params.describe())
    out("ambiguous", str(result.ambiguous).lower())
    out("classification", line)
    say(line)
    return EXIT_OK


def cmd_cocycle(args) -> int:
    if args.field != GAUSSIAN:
        raise CommandError(EXIT_PRECONDITION, "cocycle solving works over Q(i) only")
    if args.input:
        tf = _read(args.input)
        if tf.role != "structure" or tf.field != GAUSSIAN:
            raise CommandError(EXIT_PRECONDITION, "cocycle needs a Q(i) structure table")
        w = IndexWindow(args.N) if args.N_given else tf.window
        if w.N > tf.window.N:
            raise CommandError(EXIT_PRECONDITION, f"-N {w.N} exceeds the table window {tf.window.N}")
        A = GradedLSA(tf.structure())
        label = "table " + str(args.input)
    elif args.family:
        p = family_params(args)
        w = _window(args)
        A = families.make_family(p)
        label = p.describe()
    else:
        raise CommandError(EXIT_PARAMS, "give a structure table or --family")

    base = verify_lsa(A, w)
    if not base.ok:
        _report(base, 10)
        raise CommandError(EXIT_PRECONDITION, f"base algebra {label} fails verification on N={w.N}")

    result = central.solve_cocycle(A, w)
    out("result", result.kind)
    out("window", w.N)
    if isinstance(result, central.Infeasible):
        out("witness_rows", len(result.witness))
        out("witness_check", "ok" if result.check() else "failed")
        out("residual", to_literal(result.residual))
        for origin, weight in result.witness[: args.witnesses]:
            kind, idx = origin
            out("witness", f"{kind}({','.join(map(str, idx))}) weight={to_literal(weight)}")
        say(f"no central extension of {label}: the listed identities combine to 0 = {result.residual}")
        return EXIT_OK
    if isinstance(result, central.Underdetermined):
        out("free_parameters", len(result.nullspace))
        say(f"the cocycle of {label} is not pinned down on the certified region at N={w.N}")
        return EXIT_OK

    omega = result.omega
    out("region", f"|m|,|n|,|m+n|<={w.N - 2}")
    for n in (1, 2):
        out(f"omega(-{n},{n})", to_literal(omega(-n, n)))
    code = EXIT_OK
    fit = classify.fit_family(A.f if args.input else A.f.tabulate(w), w)
    if fit.kind == "fitted" and isinstance(fit.params, families.VAlphaEps):
        eps = fit.params.eps
        try:
            closed = central.ClosedFormCocycle(eps)
        except central.CocycleError:
            closed = None
        if closed is not None:
            same = all(omega(m, n) == closed(m, n) for m, n in result.region)
            out("closed_form_check", "match" if same else "mismatch")
            if not same:
                code = EXIT_DEFECTS
    if args.out:
        tablefile.write(args.out, "omega", GAUSSIAN, w, omega.entries)
        say(f"wrote omega on the certified region to {args.out}")
    return code


def cmd_modules(args) -> int:
    try:
        s = module_spec(args)
    except families.InvalidParameterError as exc:
        raise CommandError(EXIT_PARAMS, str(exc)) from None
    w = _window(args)
    report = families.verify_module(s, w)
    out("module", s.describe())
    if isinstance(s, families.APrime01):
        out("note", "index 0 excluded")
    out("status", "ok" if report.ok else "defects")
    _report(report, args.witnesses)
    return EXIT_OK if report.ok else EXIT_DEFECTS


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CommandError(EXIT_PARAMS, f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="prelie-witt", description="Graded left-symmetric products on the Witt algebra.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def field_flags(p, default=GAUSSIAN):
        p.add_argument("--field", choices=MODES, default=default, help="scalar field; classify and cocycle are Q(i) only")
        p.add_argument("--witnesses", type=int, default=10, help="how many witnesses to print")

    def common(p, default_n):
        p.add_argument("-N", type=int, default=default_n, help=f"window half-width (default {default_n})")
        field_flags(p)

    def family_flags(p, required):
        p.add_argument("--family", choices=FAMILIES, required=required)
        for name in ("alpha", "eps", "beta", "a", "b"):
            p.add_argument(f"--{name}", help="scalar literal")
        p.add_argument("--k", type=int)

    g = sub.add_parser("gen", help="tabulate a family on [-N, N]^2")
    family_flags(g, True)
    common(g, 6)
    g.add_argument("-o", "--out", default="-", help="output file (default stdout)")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check a structure or omega table")
    v.add_argument("input")
    v.add_argument("--base", help="structure table an omega table refers to")
    field_flags(v, default=None)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="fit a structure table to a family")
    c.add_argument("input")
    field_flags(c)
    c.set_defaults(func=cmd_classify)

    k = sub.add_parser("cocycle", help="solve for a central extension")
    k.add_argument("input", nargs="?")
    family_flags(k, False)
    common(k, 8)
    k.add_argument("-o", "--out", help="write the omega table here")
    k.set_defaults(func=cmd_cocycle)

    m = sub.add_parser("modules", help="check a weight module")
    m.add_argument("--spec", choices=MODULE_SPECS, required=True)
    m.add_argument("--alpha")
    m.add_argument("--beta")
    common(m, 8)
    m.set_defaults(func=cmd_modules)
    return ap


SCALAR_FLAGS = ("--alpha", "--eps", "--beta", "--a", "--b", "--k")


def _glue_scalars(argv: list) -> list:
    """Turn ``--alpha -2/3`` into ``--alpha=-2/3`` so argparse sees a value."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in SCALAR_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = _glue_scalars(list(sys.argv[1:] if argv is None else argv))
    try:
        args = ap.parse_args(argv)
        args.N_given = "-N" in argv or any(a.startswith("-N") and a != "-N" for a in argv)
        try:
            sweep_threads()
        except ValueError as exc:
            raise CommandError(EXIT_PARAMS, str(exc)) from None
        return args.func(args)
    except CommandError as exc:
        say(f"error: {exc}")
        return exc.code
