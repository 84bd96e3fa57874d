"""Command-line front end.

Exit status: 0 on success, 1 when ``--verify`` finds a mismatch with the
shipped golden data, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import __version__, cache
from .affweyl import WordError, bruhat_leq, format_word
from .eo import QuadrupleError, eo_set, leq_J_sigma, reduce_partial_conjugation
from .rootdata import RootDatumError, get_root_datum

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

SUBCOMMANDS = ("classify", "sweep", "eo", "newton", "strata", "closure", "smoothness",
               "witness", "basic-locus", "reduce", "leq")


class InputError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    family: str | None = None
    rank: int | None = None
    label: str = "omega:1"
    removed: int = 0
    sigma: str = "id"
    fmt: str = "json"
    cache_dir: str | None = None
    max_rank: int = 4
    verify: bool = False
    jobs: int = 1
    words: tuple = ()
    gl: bool = False


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="basiclocus", description="EO strata and basic loci of Coxeter type.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--format", dest="fmt", choices=("json", "tsv"), default="json")
        sp.add_argument("--cache-dir", default=None, help=f"cache directory (default: ${cache.ENV_VAR})")
        sp.add_argument("--verify", action="store_true", help="compare with the shipped golden data")
        if name == "sweep":
            sp.add_argument("--max-rank", type=int, default=4)
            sp.add_argument("--jobs", type=int, default=1)
            continue
        sp.add_argument("--family", required=True, choices=list("ABCDEFG"))
        sp.add_argument("--rank", type=int, required=True)
        sp.add_argument("--gl", action="store_true", help="GL model for family A (the default and only model)")
        sp.add_argument("--lambda", dest="label", default="omega:1")
        sp.add_argument("--removed-vertex", dest="removed", type=int, default=0)
        sp.add_argument("--sigma", default="id")
        if name in ("witness", "reduce"):
            sp.add_argument("--word", dest="words", action="append", default=[])
        if name == "leq":
            sp.add_argument("--word", dest="words", action="append", default=[], help="give exactly two")
    return p


def config_from_args(ns) -> CliConfig:
    return CliConfig(
        subcommand=ns.subcommand, family=getattr(ns, "family", None), rank=getattr(ns, "rank", None),
        label=getattr(ns, "label", "omega:1"), removed=getattr(ns, "removed", 0),
        sigma=getattr(ns, "sigma", "id"), fmt=ns.fmt, cache_dir=ns.cache_dir,
        max_rank=getattr(ns, "max_rank", 4), verify=ns.verify, jobs=getattr(ns, "jobs", 1),
        words=tuple(getattr(ns, "words", ()) or ()), gl=getattr(ns, "gl", False))


def load_golden() -> dict:
    return json.loads(resources.files("basiclocus").joinpath("data/golden.json").read_text())


def _quadruple(cfg: CliConfig):
    from .eo import Quadruple
    if cfg.gl and cfg.family != "A":
        raise InputError("--gl only applies to family A")
    try:
        return Quadruple.build(cfg.family, cfg.rank, cfg.label, cfg.removed, cfg.sigma)
    except (QuadrupleError, RootDatumError, ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc


def _qid(q) -> str:
    return f"{q.datum.family}|{q.datum.rank}|{q.label}|{q.removed}|{q.sigma.tag}"


def _fracs(xs) -> list[str]:
    return [f"{Fraction(x).numerator}/{Fraction(x).denominator}" for x in xs]


# ---------------------------------------------------------------------------
# Subcommands: each returns (document, tsv rows, mismatches)


def cmd_classify(cfg, golden):
    from .classify import canonical_key, check_conditions, expected_positive_keys
    q = _quadruple(cfg)
    vd = check_conditions(q)
    doc = vd.to_json()
    doc["eo_enumerated"] = vd.complete
    rows = [["quadruple", "cc", "csc", "coxeter_type", "witness"],
            [q.name, vd.cc_holds, vd.csc_holds, vd.coxeter_type, vd.witness.word if vd.witness else ""]]
    bad = []
    if golden is not None:
        expected = canonical_key(q) in expected_positive_keys(
            [tuple(r) for r in golden["coxeter_type_rows"] if r[1] == q.datum.rank])
        if expected != vd.coxeter_type:
            bad.append(f"{q.name}: coxeter_type={vd.coxeter_type}, table says {expected}")
    return doc, rows, bad


def cmd_sweep(cfg, golden):
    from .classify import expected_positive_keys, sweep
    if cfg.max_rank < 1:
        raise InputError("--max-rank must be at least 1")
    result = sweep(cfg.max_rank, cfg.jobs)
    doc = {"max_rank": cfg.max_rank, "rows": [r.to_json() for r in result],
           "coxeter_type": [r.name for r in result if r.coxeter_type]}
    rows = [["quadruple", "cc", "csc", "coxeter_type", "coherent", "witness"]]
    rows += [[r.name, r.cc, r.csc, r.coxeter_type, r.coherent, r.witness or ""] for r in result]
    bad = [f"{r.name}: CC and CSC disagree" for r in result if not r.coherent]
    if golden is not None:
        exp = expected_positive_keys([tuple(r) for r in golden["coxeter_type_rows"] if r[1] <= cfg.max_rank])
        got = {r.key for r in result if r.coxeter_type}
        bad += [f"missing Coxeter-type row {k}" for k in sorted(exp - got, key=str)]
        bad += [f"extra Coxeter-type row {k}" for k in sorted(got - exp, key=str)]
    return doc, rows, bad


def _eo_compare(q, data, entry) -> list[str]:
    bad = []
    want_cox = sorted(q.parse(w).key for w in entry["coxeter"])
    got_cox = sorted(r.element.key for r in data.coxeter)
    if want_cox != got_cox:
        bad.append(f"{q.name}: Coxeter EO elements differ from the printed list")
    want_non = {q.parse(e["word"]).key for e in entry["non_coxeter"]}
    got_non = {r.element.key: r.word for r in data.non_coxeter}
    printed = {q.parse(e["word"]).key: e["word"] for e in entry["non_coxeter"]}
    for k in sorted(set(got_non) - want_non):
        bad.append(f"{q.name}: non-Coxeter element {got_non[k]} missing from the printed list")
    for k in sorted(want_non - set(got_non)):
        bad.append(f"{q.name}: printed non-Coxeter element {printed[k]} not in EO")
    return bad


def cmd_eo(cfg, golden):
    q = _quadruple(cfg)
    data = eo_set(q)
    doc = {"quadruple": q.to_json(), "elements": data.to_json(),
           "coxeter": [r.word for r in data.coxeter], "non_coxeter": [r.word for r in data.non_coxeter]}
    rows = [["word", "length", "coxeter", "straight", "nu"]]
    rows += [[r.word, r.length, r.coxeter, r.straight, " ".join(_fracs(r.newton.coords))] for r in data.records]
    bad = []
    if golden is not None and _qid(q) in golden["eo_lists"]:
        entry = golden["eo_lists"][_qid(q)]
        bad += _eo_compare(q, data, entry)
    return doc, rows, bad


def cmd_newton(cfg, golden):
    from .classify import newton_classes, newton_table
    from .newton import newton_order
    q = _quadruple(cfg)
    table = newton_table(q)
    order = newton_order(newton_classes(q))
    doc = {"quadruple": q.to_json(), "straight": table, "order": order.to_json()}
    rows = [["word", "length", "nu"]] + [[t["word"], t["length"], " ".join(t["nu"])] for t in table]
    bad = []
    if not order.almost_linear:
        bad.append(f"{q.name}: Newton order is not almost linear")
    if golden is not None and _qid(q) in golden["eo_lists"]:
        want = {q.parse(e["word"]).key: e["nu"] for e in golden["eo_lists"][_qid(q)]["non_coxeter"]}
        for t in table:
            k = q.parse(t["word"]).key
            if k in want and want[k] != t["nu"]:
                bad.append(f"{q.name}: nu({t['word']}) = {t['nu']}, printed {want[k]}")
    return doc, rows, bad


def cmd_strata(cfg, golden):
    from .classify import strata_index_set
    q = _quadruple(cfg)
    rep = strata_index_set(q)
    doc = {"quadruple": q.to_json(), **rep.to_json()}
    rows = [["sigma", "flat", "sharp", "d", "w", "length", "failures"]]
    rows += [[s.to_json()[k] for k in ("sigma", "flat", "sharp", "d", "w", "length")] + [",".join(s.failures)]
             for s in rep.strata]
    bad = list(rep.failures) if golden is not None else []
    if golden is not None and q.datum.family == "B" and q.removed == q.datum.rank and q.sigma.tag == "tau:1" \
            and q.label == "omega:1" and str(q.datum.rank) in golden["b_tau1_triples"]:
        want = {tuple(tuple(x) for x in t) for t in golden["b_tau1_triples"][str(q.datum.rank)]}
        got = {(tuple(sorted(s.sigma_set)), tuple(sorted(s.flat)), tuple(sorted(s.sharp))) for s in rep.strata}
        if want != got:
            bad.append(f"{q.name}: (Sigma, flat, sharp) triples differ from the printed ones")
    return doc, rows, bad


def cmd_closure(cfg, golden):
    from .classify import closure_poset, j_sigma_order_checks
    q = _quadruple(cfg)
    cl = closure_poset(q)
    checks = j_sigma_order_checks(q)
    doc = {"quadruple": q.to_json(), **cl.to_json(), "coxeter_order": checks}
    names = [str(sorted(n.sigma_set)) for n in cl.nodes]
    rows = [["below", "above"]] + [[names[i], names[j]] for i, j in cl.hasse]
    bad = []
    if golden is not None:
        if not cl.agrees:
            bad.append(f"{q.name}: closure order differs from the transported <=_(J,sigma)")
        if not checks["coincides_with_bruhat"] or not checks["almost_linear"]:
            bad.append(f"{q.name}: <=_(J,sigma) on Coxeter EO elements is not Bruhat / not almost linear")
    return doc, rows, bad


def cmd_smoothness(cfg, golden):
    from .classify import smoothness_report
    q = _quadruple(cfg)
    rep = smoothness_report(q)
    key = _qid(q)
    in_table = golden is not None and key in golden["smooth_marks"]
    all_smooth = all(r["smooth"] for r in rep)
    doc = {"quadruple": q.to_json(), "strata": rep, "all_smooth": all_smooth,
           "in_table": in_table if golden is not None else None}
    if golden is not None and not in_table:
        doc["note"] = "quadruple outside the smoothness table: criterion-only output"
    rows = [["sigma", "w", "length", "label", "longest_element_check"]]
    rows += [[r["sigma"], r["w"], r["length"], r["label"], r["longest_element_check"]] for r in rep]
    bad = []
    if golden is not None:
        bad += [f"{q.name}: longest-element check fails for {r['w']}" for r in rep if not r["longest_element_check"]]
        if in_table and golden["smooth_marks"][key] != all_smooth:
            bad.append(f"{q.name}: all-smooth={all_smooth}, table mark says {golden['smooth_marks'][key]}")
    return doc, rows, bad


def cmd_witness(cfg, golden):
    from .classify import verify_witness
    q = _quadruple(cfg)
    words = list(cfg.words)
    cases = []
    if not words and golden is not None:
        cases = [c for c in golden["witnesses"]
                 if (c["family"], c["rank"], c["label"], c["removed"], c["sigma"])
                 == (q.datum.family, q.datum.rank, q.label, q.removed, q.sigma.tag)]
        for c in cases:
            words += c["words"]
    if not words:
        raise InputError("no --word given and no printed witness for this quadruple")
    reports = [verify_witness(q, w) for w in words]
    for r in reports:
        if cfg.words and not r.parsed:
            raise InputError(r.error)
    doc = {"quadruple": q.to_json(), "reports": [r.to_json() for r in reports],
           "confirmed": any(r.confirmed for r in reports)}
    for c in cases:
        if c.get("corrected"):
            doc["corrected_reading"] = [verify_witness(q, w).to_json() for w in c["corrected"]]
    rows = [["word", "status", "newton"]] + [[r.word, r.status, r.newton] for r in reports]
    bad = [] if doc["confirmed"] or golden is None else [f"{q.name}: no printed witness confirmed"]
    return doc, rows, bad


def cmd_basic_locus(cfg, golden):
    from .classify import basic_locus_eo
    q = _quadruple(cfg)
    labels = basic_locus_eo(q)
    basic = [b for b in labels if b["label"] == "basic"]
    doc = {"quadruple": q.to_json(), "elements": labels, "basic_count": len(basic),
           "basic_dimensions": sorted(b["length"] for b in basic),
           "undecided": sum(1 for b in labels if b["label"] == "undecided")}
    rows = [["word", "length", "label"]] + [[b["word"], b["length"], b["label"]] for b in labels]
    bad = []
    if golden is not None:
        if doc["undecided"]:
            bad.append(f"{q.name}: {doc['undecided']} undecided elements")
        for ex in golden["basic_locus"]:
            if ex["quadruple"] == [q.datum.family, q.datum.rank, q.label, q.removed, q.sigma.tag]:
                if ex["count"] != len(basic) or ex["dims"] != doc["basic_dimensions"]:
                    bad.append(f"{q.name}: {len(basic)} basic strata {doc['basic_dimensions']}, "
                               f"printed {ex['count']} {ex['dims']}")
    return doc, rows, bad


def cmd_reduce(cfg, golden):
    q = _quadruple(cfg)
    if not cfg.words:
        raise InputError("reduce needs --word")
    out = []
    for text in cfg.words:
        w = _parse(q, text)
        best, moves = reduce_partial_conjugation(q.J, w, q.sigma)
        out.append({"word": q.word(w), "length": w.length, "reduced": q.word(best),
                    "reduced_length": best.length, "conjugators": moves})
    rows = [["word", "reduced", "conjugators"]] + [[o["word"], o["reduced"], " ".join(map(str, o["conjugators"]))]
                                                    for o in out]
    return {"quadruple": q.to_json(), "results": out}, rows, []


def cmd_leq(cfg, golden):
    q = _quadruple(cfg)
    if len(cfg.words) != 2:
        raise InputError("leq needs exactly two --word arguments")
    x, w = (_parse(q, t) for t in cfg.words)
    doc = {"quadruple": q.to_json(), "x": q.word(x), "w": q.word(w),
           "leq_J_sigma": leq_J_sigma(q.J, x, w, q.sigma), "bruhat": bruhat_leq(x, w)}
    rows = [["x", "w", "leq_J_sigma", "bruhat"], [doc["x"], doc["w"], doc["leq_J_sigma"], doc["bruhat"]]]
    return doc, rows, []


def _parse(q, text):
    try:
        return q.parse(text)
    except WordError as exc:
        raise InputError(str(exc)) from exc


COMMANDS = {"classify": cmd_classify, "sweep": cmd_sweep, "eo": cmd_eo, "newton": cmd_newton,
            "strata": cmd_strata, "closure": cmd_closure, "smoothness": cmd_smoothness,
            "witness": cmd_witness, "basic-locus": cmd_basic_locus, "reduce": cmd_reduce, "leq": cmd_leq}


# ---------------------------------------------------------------------------


def _tsv(rows) -> str:
    def cell(x):
        if isinstance(x, bool):
            return "true" if x else "false"
        if isinstance(x, (list, tuple)):
            return ",".join(str(y) for y in x)
        return "" if x is None else str(x)
    return "\n".join("\t".join(cell(c) for c in r) for r in rows) + "\n"


def _datum_keys(cfg) -> list[tuple]:
    if cfg.subcommand == "sweep":
        from .classify import sweep_types
        return [get_root_datum(f, r).key for f, r in sweep_types(cfg.max_rank)]
    return [get_root_datum(cfg.family, cfg.rank).key]


def run(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    cache_dir = cfg.cache_dir or cache.default_dir()
    golden = load_golden() if cfg.verify else None
    try:
        keys = _datum_keys(cfg) if cache_dir else []
        for k in keys:
            cache.load(cache_dir, k)
        doc, rows, bad = COMMANDS[cfg.subcommand](cfg, golden)
        for k in keys:
            cache.store(cache_dir, k)
    except (InputError, RootDatumError, QuadrupleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.verify:
        doc["verify"] = {"ok": not bad, "mismatches": bad}
    if cfg.fmt == "json":
        out.write(json.dumps(doc, indent=1, sort_keys=True, default=str) + "\n")
    else:
        out.write(_tsv(rows))
        if cfg.verify:
            out.write(_tsv([["verify", "ok" if not bad else "mismatch"]] + [["mismatch", b] for b in bad]))
    if bad:
        for b in bad:
            print(f"mismatch: {b}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
