"""JSON documents: bundle/cover inputs and computed results.

Rationals travel as strings (``"3/4"``, ``"4"``); ranks, degrees and
exponents as JSON integers.  ``dumps`` is canonical (sorted keys, fixed
separators) so equal values always serialize to identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bundle import (
    CharZero,
    HNType,
    Split,
    SplitBundle,
    Strong,
    StrongHNData,
    _require_int,
)
from .certificate import CertificateChecks, CoverModel, EffectivityCertificate
from .cone import Cone2D, Ray
from .errors import ValidationError
from .oracle import OracleReport

__all__ = [
    "parse_input",
    "loads",
    "dumps",
    "to_document",
    "from_document",
    "format_rational",
    "parse_rational",
]

INPUT_KINDS = ("char0_hn", "split", "strong_hn", "cover")


def format_rational(q) -> str:
    return str(Fraction(q))


def parse_rational(text, field):
    if not isinstance(text, str):
        raise ValidationError(f"expected a rational string like \"3/4\", got {text!r}", field)
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"not a rational: {text!r}", field) from None
    if format_rational(q) != text:
        raise ValidationError(f"rational {text!r} is not in lowest terms p/q form", field)
    return q


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=2) + "\n"


def _decode(text) -> dict:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ValidationError(f"input is not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ValidationError("top-level JSON value must be an object")
    return doc


def _get(doc, key, kind):
    if key not in doc:
        raise ValidationError(f"missing required field for kind {kind!r}", key)
    return doc[key]


def _check_keys(doc, allowed, kind):
    extra = sorted(set(doc) - set(allowed))
    if extra:
        raise ValidationError(f"unknown field for kind {kind!r}", extra[0])


def _int_field(doc, key, kind):
    value = _get(doc, key, kind)
    _require_int(value, key)
    return value


def _int_list(doc, key, kind):
    values = _get(doc, key, kind)
    if not isinstance(values, list):
        raise ValidationError("expected a list of integers", key)
    for i, v in enumerate(values):
        _require_int(v, f"{key}[{i}]")
    return values


def _blocks(doc, kind):
    raw = _get(doc, "blocks", kind)
    if not isinstance(raw, list):
        raise ValidationError("expected a list of [rank, degree] pairs", "blocks")
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValidationError("expected a [rank, degree] pair", f"blocks[{i}]")
        _require_int(pair[0], f"blocks[{i}][0]")
        _require_int(pair[1], f"blocks[{i}][1]")
        if pair[0] < 1:
            raise ValidationError(f"rank must be >= 1, got {pair[0]}", f"blocks[{i}][0]")
    hn = HNType.from_pairs(raw)
    if hn.rank < 2:
        raise ValidationError(f"total rank must be at least two, got {hn.rank}", "blocks")
    return hn


def _split_bundle(doc, kind):
    exps = _int_list(doc, "exponents", kind)
    if len(exps) < 2:
        raise ValidationError(f"rank must be at least two, got {len(exps)} exponents", "exponents")
    return SplitBundle(tuple(exps))


def parse_input(text):
    """Parse a bundle or cover description.

    Returns a :data:`~grasscone.bundle.BundleDescriptor` or a
    :class:`~grasscone.certificate.CoverModel`; raises ValidationError naming
    the first violated invariant and its field.
    """
    doc = _decode(text)
    return _parse_input_doc(doc)


def _parse_input_doc(doc):
    kind = doc.get("kind")
    if kind not in INPUT_KINDS:
        raise ValidationError(f"kind must be one of {', '.join(INPUT_KINDS)}; got {kind!r}", "kind")
    if kind == "char0_hn":
        _check_keys(doc, ("kind", "characteristic", "blocks"), kind)
        if doc.get("characteristic", 0) != 0 or isinstance(doc.get("characteristic"), bool):
            raise ValidationError("char0_hn requires characteristic 0", "characteristic")
        return CharZero(_blocks(doc, kind))
    if kind == "split":
        _check_keys(doc, ("kind", "characteristic", "exponents"), kind)
        p = doc.get("characteristic", 0)
        _require_int(p, "characteristic")
        return Split(_split_bundle(doc, kind), p)
    if kind == "strong_hn":
        _check_keys(doc, ("kind", "characteristic", "delta", "blocks"), kind)
        p = _int_field(doc, "characteristic", kind)
        delta = _int_field(doc, "delta", kind)
        return Strong(StrongHNData(p, delta, _blocks(doc, kind)))
    _check_keys(doc, ("kind", "cover_degree", "l_degree", "exponents"), kind)
    return CoverModel(
        _int_field(doc, "cover_degree", kind),
        _int_field(doc, "l_degree", kind),
        _split_bundle(doc, kind),
    )


def to_document(value, **extra) -> dict:
    """Serialize a domain value (input type or result) to a JSON-ready dict."""
    if isinstance(value, CharZero):
        doc = {"kind": "char0_hn", "characteristic": 0, "blocks": value.hn.pairs()}
    elif isinstance(value, Split):
        doc = {"kind": "split", "characteristic": value.characteristic,
               "exponents": list(value.bundle.exponents)}
    elif isinstance(value, Strong):
        d = value.data
        doc = {"kind": "strong_hn", "characteristic": d.characteristic, "delta": d.delta,
               "blocks": d.hn.pairs()}
    elif isinstance(value, CoverModel):
        doc = {"kind": "cover", "cover_degree": value.cover_degree, "l_degree": value.l_degree,
               "exponents": list(value.exponents.exponents)}
    elif isinstance(value, Cone2D):
        doc = {"kind": "cone", "rays": [[value.ray_a.eta, value.ray_a.fiber],
                                         [value.ray_b.eta, value.ray_b.fiber]]}
    elif isinstance(value, OracleReport):
        doc = {"kind": "oracle_report", "r": value.r,
               "lambda_formula": format_rational(value.lambda_formula),
               "lambda_oracle": format_rational(value.lambda_oracle),
               "h0_at_boundary": value.h0_at_boundary,
               "h0_beyond_boundary": value.h0_beyond_boundary,
               "verdict": value.verdict}
    elif isinstance(value, EffectivityCertificate):
        doc = {"kind": "certificate", "r": value.r, "ell": value.ell, "n": value.n,
               "selected_exponents": list(value.selected_exponents),
               "tilde_l_degree": value.tilde_l_degree,
               "total_map_degree": value.total_map_degree,
               "checks": {"summand_ok": value.checks.summand_ok,
                          "degree_identity_ok": value.checks.degree_identity_ok,
                          "pullback_identity_ok": value.checks.pullback_identity_ok}}
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    doc.update(extra)
    return doc


def _bool_field(doc, key, kind):
    value = _get(doc, key, kind)
    if not isinstance(value, bool):
        raise ValidationError(f"expected true/false, got {value!r}", key)
    return value


def from_document(doc: dict):
    """Inverse of :func:`to_document` for every kind it emits.

    Result kinds other than the four input kinds come back as domain values
    too; ``lambda`` and ``exterior_power`` come back as plain dicts with
    parsed fields.
    """
    kind = doc.get("kind")
    if kind in INPUT_KINDS:
        return _parse_input_doc(doc)
    if kind == "lambda":
        return {"r": _int_field(doc, "r", kind),
                "value": parse_rational(_get(doc, "value", kind), "value")}
    if kind == "exterior_power":
        return {"r": _int_field(doc, "r", kind),
                "bundle": SplitBundle(tuple(_int_list(doc, "exponents", kind)))}
    if kind == "cone":
        rays = _get(doc, "rays", kind)
        if not isinstance(rays, list) or len(rays) != 2:
            raise ValidationError("expected two rays", "rays")
        parsed = []
        for i, ray in enumerate(rays):
            if not isinstance(ray, list) or len(ray) != 2:
                raise ValidationError("expected an [eta, fiber] pair", f"rays[{i}]")
            _require_int(ray[0], f"rays[{i}][0]")
            _require_int(ray[1], f"rays[{i}][1]")
            parsed.append(Ray(ray[0], ray[1]))
        return Cone2D(*parsed)
    if kind == "oracle_report":
        return OracleReport(
            _int_field(doc, "r", kind),
            parse_rational(_get(doc, "lambda_formula", kind), "lambda_formula"),
            parse_rational(_get(doc, "lambda_oracle", kind), "lambda_oracle"),
            _int_field(doc, "h0_at_boundary", kind),
            _int_field(doc, "h0_beyond_boundary", kind),
            _bool_field(doc, "verdict", kind),
        )
    if kind == "certificate":
        checks = _get(doc, "checks", kind)
        if not isinstance(checks, dict):
            raise ValidationError("expected an object", "checks")
        return EffectivityCertificate(
            r=_int_field(doc, "r", kind),
            ell=_int_field(doc, "ell", kind),
            n=_int_field(doc, "n", kind),
            selected_exponents=tuple(_int_list(doc, "selected_exponents", kind)),
            tilde_l_degree=_int_field(doc, "tilde_l_degree", kind),
            total_map_degree=_int_field(doc, "total_map_degree", kind),
            checks=CertificateChecks(
                _bool_field(checks, "summand_ok", kind),
                _bool_field(checks, "degree_identity_ok", kind),
                _bool_field(checks, "pullback_identity_ok", kind),
            ),
        )
    raise ValidationError(f"unknown document kind {kind!r}", "kind")


def loads(text):
    return from_document(_decode(text))
