"""Command-line drivers: constructions, verification, certificates, tables."""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

import numpy as np

from .catalog import TABLE_TEXTS
from .documents import Document, ParseError, dump_document, load_document
from .exoticity import (
    OrderMismatch,
    build_probe,
    exotic_certificate,
    exotic_lower_bounds,
)
from .ffield import NotPrimitive, factor_prime_power
from .grouptools import export_presentation
from .linkgraph import export_edge_list, from_F, metrics, normalized_laplacian
from .oppmodel import BadCongruence, opp_T_kappa, opp_datum, opp_properties
from .singer import quad_T_kappa, quad_datum, singer_T_kappa, singer_datum
from .tripres import (
    classify,
    enumerate_all,
    format_table,
    lambda_orbits,
    project_F,
    verify,
)


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation; everything downstream is deterministic."""

    subcommand: str
    q: int | None = None
    modulus: tuple | None = None
    kappa: str | None = None
    all_kappa: bool = False
    format: str = "table"
    out: str | None = None
    workers: int = 1
    which: int | None = None
    from_json: str | None = None
    lenient: bool = False
    most_constrained: bool = False
    bounds: bool = False
    check: bool = False
    show_metrics: bool = False
    spectrum: bool = False


class KappaSpecError(ValueError):
    """A sign specification that does not match the datum's orbits."""


def parse_kappa_spec(text, keys):
    """'+1' or '-1' for a constant choice, else ';'-joined 'key:sign' items;
    a key is an orbit minimum or a 'rep,min' coset pair.  The parsed keys
    must cover the datum's orbit keys exactly."""
    text = text.strip()
    if text in ("+1", "+", "-1", "-"):
        sign = 1 if text.startswith("+") else -1
        return {k: sign for k in keys}
    kappa = {}
    for item in text.split(";"):
        item = item.strip()
        head, sep, sign_text = item.rpartition(":")
        if not sep:
            raise KappaSpecError(f"item {item!r} is not 'key:sign'")
        if sign_text in ("+1", "+", "1"):
            sign = 1
        elif sign_text in ("-1", "-"):
            sign = -1
        else:
            raise KappaSpecError(f"bad sign {sign_text!r} in {item!r}")
        try:
            nums = tuple(int(x) for x in head.split(","))
        except ValueError:
            raise KappaSpecError(f"bad key {head!r} in {item!r}") from None
        key = nums[0] if len(nums) == 1 else nums
        if key in kappa:
            raise KappaSpecError(f"duplicate key {head!r}")
        kappa[key] = sign
    if set(kappa) != set(keys):
        raise KappaSpecError(
            f"kappa keys {sorted(kappa)} do not match the orbit keys "
            f"{sorted(keys)}"
        )
    return kappa


def kappa_spec_of(kappa):
    """Canonical spec text, keys sorted; inverse of parse_kappa_spec."""
    items = []
    for key in sorted(kappa):
        head = ",".join(str(x) for x in key) if isinstance(key, tuple) else str(key)
        items.append(f"{head}:{'+1' if kappa[key] == 1 else '-1'}")
    return ";".join(items)


def _pool(fn, items, workers):
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def _document_blob(T, meta):
    return json.loads(dump_document(Document(F=project_F(T), T=T, meta=meta)))


def _present_one(T, meta, fmt):
    if fmt == "table":
        return format_table(T)
    if fmt == "gap":
        return export_presentation(T, "gap-like")
    return json.dumps(_document_blob(T, meta), sort_keys=True, indent=2) + "\n"


def _present_family(model, q, entries, fmt):
    # buffered, then emitted in sorted kappa order
    entries = sorted(entries, key=lambda e: e[0])
    if fmt == "json":
        blobs = [
            _document_blob(T, {"model": model, "q": q, "kappa": spec})
            for spec, T in entries
        ]
        return json.dumps(blobs, sort_keys=True, indent=2) + "\n"
    parts = []
    for spec, T in entries:
        head = ("# " if fmt == "gap" else "") + f"kappa {spec}\n"
        parts.append(head + _present_one(T, {}, fmt))
    return "\n".join(parts)


def _family_output(model, q, keys, build, cfg):
    if cfg.all_kappa:
        kappas = [
            dict(zip(keys, signs))
            for signs in product((1, -1), repeat=len(keys))
        ]
        built = _pool(build, kappas, cfg.workers)
        entries = [(kappa_spec_of(k), T) for k, T in zip(kappas, built)]
        return _present_family(model, q, entries, cfg.format)
    if cfg.kappa:
        kappa = parse_kappa_spec(cfg.kappa, keys)
    else:
        kappa = {k: 1 for k in keys}
    meta = {"model": model, "q": q, "kappa": kappa_spec_of(kappa)}
    return _present_one(build(kappa), meta, cfg.format)


def _cmd_tables(cfg):
    return 0, TABLE_TEXTS[cfg.which]


def _cmd_singer(cfg):
    d = singer_datum(cfg.q, cfg.modulus)
    keys = [o[0] for o in d.O]
    return 0, _family_output(
        "singer", d.q, keys, lambda k: singer_T_kappa(d, k), cfg
    )


def _cmd_quad(cfg):
    d = quad_datum(cfg.q, cfg.modulus)
    keys = sorted((rep, o[0]) for rep in d.H.reps for o in d.O_in_H)
    return 0, _family_output(
        "quad", d.q, keys, lambda k: quad_T_kappa(d, k), cfg
    )


def _fmt_value(v):
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def _cmd_opp(cfg):
    if cfg.check or (cfg.kappa is None and not cfg.all_kappa):
        report = opp_properties(cfg.q)
        lines = [f"opposition model q = {report.q}"]
        for name, want, got, ok in report.rows:
            lines.append(
                f"{'pass' if ok else 'FAIL'}  {name}: "
                f"expected {_fmt_value(want)}, got {_fmt_value(got)}"
            )
        lines.append(f"zuk gap > 1/2: {report.zuk}")
        return (0 if report.ok else 1), "\n".join(lines) + "\n"
    d = opp_datum(cfg.q)
    if d.lam is None:
        raise BadCongruence(f"q = {cfg.q} is not 1 mod 3, so there is no folding")
    keys = [o[0] for o in lambda_orbits(d.S, d.lam) if len(o) == 3]
    return 0, _family_output(
        "opp", d.q, keys, lambda k: opp_T_kappa(d, k), cfg
    )


def _cmd_enumerate(cfg):
    doc = load_document(cfg.from_json, strict=not cfg.lenient)
    found = enumerate_all(doc.F, most_constrained=cfg.most_constrained)
    classes = classify(doc.F)
    return 0, f"{len(found)} presentations, {len(classes)} isomorphism classes\n"


def _cmd_classify(cfg):
    doc = load_document(cfg.from_json, strict=not cfg.lenient)
    classes = classify(doc.F)
    lines = []
    total = 0
    for i, c in enumerate(classes, start=1):
        total += c.orbit_size
        lines.append(
            f"class {i}: orbit size {c.orbit_size}, "
            f"stabilizer order {c.aut_order}"
        )
    lines.append(f"total: {total} presentations in {len(classes)} classes")
    return 0, "\n".join(lines) + "\n"


def _cmd_verify(cfg):
    doc = load_document(cfg.from_json, strict=not cfg.lenient)
    violations = verify(doc.F, doc.T)
    if not violations:
        return 0, "ok\n"
    names = {1: "projection", 2: "uniqueness", 3: "rotation"}
    lines = [
        f"axiom {v.axiom} ({names[v.axiom]}) violated at {v.data}"
        for v in violations
    ]
    return 1, "\n".join(lines) + "\n"


def _cmd_exotic(cfg):
    if not (cfg.kappa or cfg.all_kappa or cfg.bounds):
        raise KappaSpecError("pass --kappa, --all-kappa, or --bounds")
    out = {}
    if cfg.bounds:
        _, e = factor_prime_power(cfg.q)
        b = exotic_lower_bounds(cfg.q, e)
        out["bounds"] = {
            "exotic_kappa_lower": b.exotic_kappa_lower,
            "qi_class_lower": str(b.qi_class_lower),
            "vacuous": b.vacuous,
        }
    if cfg.kappa or cfg.all_kappa:
        d = singer_datum(cfg.q, cfg.modulus)
        keys = [o[0] for o in d.O]
        if cfg.all_kappa:
            kappas = [
                dict(zip(keys, signs))
                for signs in product((1, -1), repeat=len(keys))
            ]
        else:
            kappas = [parse_kappa_spec(cfg.kappa, keys)]
        probe = build_probe(d)
        certs = _pool(lambda k: exotic_certificate(probe, k), kappas, cfg.workers)
        blobs = [
            {
                "q": c.q,
                "kappa": kappa_spec_of(dict(c.kappa)),
                "sigma_cycles": c.sigma.cycle_string(one_based=False),
                "member": c.member,
                "verdict": c.verdict,
                "q0_order": probe.q0.order(),
            }
            for c in certs
        ]
        out["certificates"] = sorted(blobs, key=lambda b: b["kappa"])
    return 0, json.dumps(out, sort_keys=True, indent=2) + "\n"


def _cmd_export(cfg):
    doc = load_document(cfg.from_json, strict=not cfg.lenient)
    if cfg.format == "table":
        return 0, format_table(doc.T)
    target = "gap-like" if cfg.format == "gap" else "json"
    return 0, export_presentation(doc.T, target)


def _json_extent(v):
    return "inf" if v == math.inf else v


def _cmd_graph(cfg):
    doc = load_document(cfg.from_json, strict=not cfg.lenient)
    g = from_F(doc.F)
    met = metrics(g) if cfg.show_metrics else None
    eigs = None
    if cfg.spectrum:
        eigs = [round(float(x), 8) for x in np.linalg.eigvalsh(normalized_laplacian(g))]
    if cfg.format == "json":
        blob = {
            "points": g.n,
            "vertices": 2 * g.n,
            "edges": [[v + 1, w + 1] for v, w in g.edges()],
        }
        if met is not None:
            blob["metrics"] = {
                "connected": met.connected,
                "girth": _json_extent(met.girth),
                "diameter": _json_extent(met.diameter),
                "degree_profile": [list(pair) for pair in met.degree_profile],
                "biregular": list(met.biregular) if met.biregular else None,
            }
        if eigs is not None:
            blob["spectrum"] = eigs
        return 0, json.dumps(blob, sort_keys=True, indent=2) + "\n"
    parts = [export_edge_list(g)]
    if met is not None:
        parts.append(
            "connected: {0}\ngirth: {1}\ndiameter: {2}\n"
            "degree profile: {3}\nbiregular: {4}\n".format(
                met.connected, met.girth, met.diameter,
                met.degree_profile, met.biregular,
            )
        )
    if eigs is not None:
        parts.append("spectrum: " + " ".join(str(x) for x in eigs) + "\n")
    return 0, "\n".join(parts)


_HANDLERS = {
    "tables": _cmd_tables,
    "singer": _cmd_singer,
    "quad": _cmd_quad,
    "opp": _cmd_opp,
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "exotic": _cmd_exotic,
    "export": _cmd_export,
    "graph": _cmd_graph,
}


def _modulus_arg(text):
    return tuple(int(x) for x in text.split(","))


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="trigon",
        description="Triangle presentations, their links, and exoticness probes.",
    )
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def common(p, formats=("table", "json", "gap")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("-o", "--out", help="write output to this path")

    def kappa_opts(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--kappa", help="sign spec, e.g. '+1' or '9:+1;15:-1'")
        group.add_argument("--all-kappa", action="store_true")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("singer", help="difference-set presentations on Z/m")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--modulus", type=_modulus_arg)
    kappa_opts(p)
    common(p)

    p = sub.add_parser("quad", help="coset-twisted presentations on Z/(q^4+q^2+1)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--modulus", type=_modulus_arg)
    kappa_opts(p)
    common(p)

    p = sub.add_parser("opp", help="opposition-model checklist and presentations")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="run the property checklist (the default mode)")
    kappa_opts(p)
    common(p)

    p = sub.add_parser("enumerate", help="count presentations and classes")
    p.add_argument("--from-json", required=True)
    p.add_argument("--most-constrained", action="store_true")
    p.add_argument("--lenient", action="store_true")
    p.add_argument("-o", "--out")

    p = sub.add_parser("classify", help="isomorphism classes on a pair set")
    p.add_argument("--from-json", required=True)
    p.add_argument("--lenient", action="store_true")
    p.add_argument("-o", "--out")

    p = sub.add_parser("verify", help="check the three presentation axioms")
    p.add_argument("--from-json", required=True)
    p.add_argument("--lenient", action="store_true")
    p.add_argument("-o", "--out")

    p = sub.add_parser("exotic", help="membership certificates and bounds")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--modulus", type=_modulus_arg)
    p.add_argument("--bounds", action="store_true")
    kappa_opts(p)
    p.add_argument("-o", "--out")

    p = sub.add_parser("tables", help="reproduce a committed table byte-exactly")
    p.add_argument("--which", type=int, choices=sorted(TABLE_TEXTS), required=True)
    p.add_argument("-o", "--out")

    p = sub.add_parser("export", help="presentation text for a document")
    p.add_argument("--from-json", required=True)
    p.add_argument("--lenient", action="store_true")
    common(p, formats=("gap", "json", "table"))

    p = sub.add_parser("graph", help="edge list, metrics, and spectrum")
    p.add_argument("--from-json", required=True)
    p.add_argument("--metrics", dest="show_metrics", action="store_true")
    p.add_argument("--spectrum", action="store_true")
    p.add_argument("--lenient", action="store_true")
    common(p, formats=("table", "json"))

    return ap


def _config_of(args):
    fields = RunConfig.__dataclass_fields__
    picked = {k: v for k, v in vars(args).items() if k in fields}
    return RunConfig(**picked)


def run(argv):
    """Dispatch one invocation; 0 ok, 1 failed check, 2 usage."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)
    cfg = _config_of(args)
    try:
        code, text = _HANDLERS[cfg.subcommand](cfg)
    except (ParseError, KappaSpecError, BadCongruence, NotPrimitive,
            FileNotFoundError, ValueError) as err:
        print(f"trigon {cfg.subcommand}: {err}", file=sys.stderr)
        return 2
    except OrderMismatch as err:
        print(f"trigon {cfg.subcommand}: {err}", file=sys.stderr)
        return 1
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
