"""Command-line front end.

Exit status: 0 success, 1 parse/validation error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from .bundle import (
    CharZero,
    Split,
    Strong,
    StrongHNData,
    bundle_lambda,
    dual_split,
    exterior_power_split,
    frobenius_split,
    hn_of_split,
    shift_strong,
)
from .certificate import CoverModel, EffectivityCertificate, build_certificate, verify_certificate
from .cone import pseff_cone
from .documents import dumps, format_rational, loads, parse_input, to_document
from .errors import GrassconeError, ValidationError
from .oracle import verify_theorem_split

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILED = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would call sys.exit(2), which collides with "verification failed"
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _load_bundle(path, stdin):
    value = parse_input(_read(path, stdin))
    if isinstance(value, CoverModel):
        raise ValidationError("expected a bundle document, got kind 'cover'", "kind")
    return value


def _load_split(path, stdin, command):
    value = _load_bundle(path, stdin)
    if not isinstance(value, Split):
        raise ValidationError(f"{command} needs a 'split' document", "kind")
    return value


def _load_cover(path, stdin):
    value = parse_input(_read(path, stdin))
    if not isinstance(value, CoverModel):
        raise ValidationError("expected a 'cover' document", "kind")
    return value


def _strong_data(bundle) -> StrongHNData:
    if isinstance(bundle, Strong):
        return bundle.data
    if isinstance(bundle, Split) and bundle.characteristic != 0:
        # split bundles are already strongly stabilized at delta = 0
        return StrongHNData(bundle.characteristic, 0, hn_of_split(bundle.bundle))
    raise ValidationError(
        "certificates need positive characteristic: give a strong_hn document "
        "or a split document with a prime characteristic",
        "characteristic",
    )


def _bool(b):
    return "true" if b else "false"


def _text_bundle(value):
    if isinstance(value, Split):
        return (f"split characteristic={value.characteristic} exponents: "
                + " ".join(map(str, value.bundle.exponents)))
    if isinstance(value, Strong):
        d = value.data
        head = f"strong_hn characteristic={d.characteristic} delta={d.delta}"
        return head + "\n" + _text_hn(d.hn)
    return "char0_hn\n" + _text_hn(value.hn)


def _text_hn(hn):
    rows = ["rank\tdegree\tslope"]
    rows += [f"{b.rank}\t{b.degree}\t{format_rational(b.slope)}" for b in hn.blocks]
    return "\n".join(rows)


def _text_report(rep):
    return "\n".join([
        f"r: {rep.r}",
        f"lambda_formula: {format_rational(rep.lambda_formula)}",
        f"lambda_oracle: {format_rational(rep.lambda_oracle)}",
        f"h0_at_boundary: {rep.h0_at_boundary}",
        f"h0_beyond_boundary: {rep.h0_beyond_boundary}",
        f"verdict: {_bool(rep.verdict)}",
    ])


def _text_certificate(cert):
    return "\n".join([
        f"r: {cert.r}",
        f"ell: {cert.ell}",
        f"n: {cert.n}",
        "selected_exponents: " + " ".join(map(str, cert.selected_exponents)),
        f"tilde_l_degree: {cert.tilde_l_degree}",
        f"total_map_degree: {cert.total_map_degree}",
        f"summand_ok: {_bool(cert.checks.summand_ok)}",
        f"degree_identity_ok: {_bool(cert.checks.degree_identity_ok)}",
        f"pullback_identity_ok: {_bool(cert.checks.pullback_identity_ok)}",
    ])


def _cmd_hn(args, stdin):
    b = _load_split(args.input, stdin, "hn")
    hn = hn_of_split(b.bundle)
    value = CharZero(hn) if b.characteristic == 0 else Strong(StrongHNData(b.characteristic, 0, hn))
    return EXIT_OK, to_document(value), _text_bundle(value)


def _cmd_lambda(args, stdin):
    b = _load_bundle(args.input, stdin)
    lam = bundle_lambda(b, args.r)
    return EXIT_OK, {"kind": "lambda", "r": args.r, "value": format_rational(lam)}, format_rational(lam)


def _cmd_cone(args, stdin):
    cone = pseff_cone(_load_bundle(args.input, stdin), args.r)
    return EXIT_OK, to_document(cone), f"{cone.ray_a}\n{cone.ray_b}"


def _cmd_frobenius(args, stdin):
    b = _load_split(args.input, stdin, "frobenius")
    if b.characteristic == 0:
        raise ValidationError("frobenius needs a prime characteristic", "characteristic")
    value = Split(frobenius_split(b.bundle, b.characteristic, args.j), b.characteristic)
    return EXIT_OK, to_document(value), _text_bundle(value)


def _cmd_shift(args, stdin):
    b = _load_bundle(args.input, stdin)
    if not isinstance(b, Strong):
        raise ValidationError("shift needs a 'strong_hn' document", "kind")
    value = Strong(shift_strong(b.data, args.j))
    return EXIT_OK, to_document(value), _text_bundle(value)


def _cmd_dual(args, stdin):
    b = _load_split(args.input, stdin, "dual")
    value = Split(dual_split(b.bundle), b.characteristic)
    return EXIT_OK, to_document(value), _text_bundle(value)


def _cmd_wedge(args, stdin):
    b = _load_split(args.input, stdin, "wedge")
    w = exterior_power_split(b.bundle, args.r)
    doc = {"kind": "exterior_power", "r": args.r, "exponents": list(w.exponents)}
    return EXIT_OK, doc, " ".join(map(str, w.exponents))


def _cmd_oracle(args, stdin):
    b = _load_split(args.input, stdin, "oracle")
    rep = verify_theorem_split(b.bundle, args.r)
    return (EXIT_OK if rep.verdict else EXIT_FAILED), to_document(rep), _text_report(rep)


def _cmd_certify(args, stdin):
    d = _strong_data(_load_bundle(args.input, stdin))
    cm = _load_cover(args.cover, stdin)
    cert = build_certificate(d, cm, args.r)
    ok = cert.checks.all()
    extra = {}
    text = _text_certificate(cert)
    if args.cross_check:
        rep = verify_theorem_split(cm.exponents, args.r)
        ok = ok and rep.verdict
        extra["cross_check"] = to_document(rep)
        text += "\ncross_check:\n" + "\n".join("  " + line for line in _text_report(rep).splitlines())
    return (EXIT_OK if ok else EXIT_FAILED), to_document(cert, **extra), text


def _cmd_verify(args, stdin):
    cert = loads(_read(args.certificate, stdin))
    if not isinstance(cert, EffectivityCertificate):
        raise ValidationError("expected a 'certificate' document", "kind")
    d = _strong_data(_load_bundle(args.input, stdin))
    cm = _load_cover(args.cover, stdin)
    ok = verify_certificate(cert, d, cm)
    doc = {"kind": "verification", "valid": ok}
    return (EXIT_OK if ok else EXIT_FAILED), doc, "certificate valid" if ok else "certificate INVALID"


def build_parser():
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                     help="output format (default: text)")

    parser = _Parser(prog="grasscone", parents=[fmt],
                     description="Exact pseudo-effective cones of Grassmann bundles over curves.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, r=False, j=False):
        p = sub.add_parser(name, parents=[fmt], help=help)
        p.add_argument("--input", required=True, help="input JSON document, '-' for stdin")
        if r:
            p.add_argument("-r", type=int, required=True, help="rank of the quotients")
        if j:
            p.add_argument("-j", type=int, required=True, help="number of Frobenius pullbacks")
        p.set_defaults(func=func)
        return p

    add("hn", _cmd_hn, "HN type of a split bundle")
    add("lambda", _cmd_lambda, "lambda invariant", r=True)
    add("cone", _cmd_cone, "pseudo-effective cone generators", r=True)
    add("frobenius", _cmd_frobenius, "Frobenius pullback of a split bundle", j=True)
    add("shift", _cmd_shift, "shift the stabilization exponent of strong HN data", j=True)
    add("dual", _cmd_dual, "dual of a split bundle")
    add("wedge", _cmd_wedge, "exterior power of a split bundle", r=True)
    add("oracle", _cmd_oracle, "brute-force boundary check on a genus-0 split bundle", r=True)
    p = add("certify", _cmd_certify, "effectivity certificate for the boundary ray", r=True)
    p.add_argument("--cover", required=True, help="cover model JSON document")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the genus-0 oracle on the cover exponents")
    p = sub.add_parser("verify", parents=[fmt], help="re-verify a stored certificate")
    p.add_argument("--certificate", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--cover", required=True)
    p.set_defaults(func=_cmd_verify)
    return parser


def run_command(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INVALID
    try:
        status, doc, text = args.func(args, stdin)
    except GrassconeError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    if getattr(args, "format", "text") == "json":
        stdout.write(dumps(doc))
    else:
        stdout.write(text + "\n")
    return status


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))
