"""Command-line interface.

Exit codes: 0 success, 1 computation error, 2 parse error, 3 theorem
assertion failure.  ``corpus`` exits 3 if any entry raised a theorem
violation and 1 on any other mismatch or error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from . import constructions
from .gin import DEFAULT_TRIALS, gin, is_saturated_via_gin
from .growth import (
    PreconditionError,
    TheoremViolation,
    cm_check,
    first_difference_pipeline,
    second_difference_pipeline,
    truncate_ideal,
)
from .hilbert import reduction_number, wlp_test
from .ideals import Ideal
from .parser import ParseError, emit_ideal, emit_report, load_ideal
from .ring import format_monomial

VERBS = ("gin", "hilbert", "invariants", "reduction", "wlp", "truncate", "growth1", "growth2", "points", "corpus")

EXIT_OK, EXIT_COMPUTE, EXIT_PARSE, EXIT_THEOREM = 0, 1, 2, 3


# ---------------------------------------------------------------------------
# loading


def load_input(source: str, field=None, inline: bool = False) -> Ideal:
    """An ideal from a grammar file, a JSON construction file or inline text."""
    if inline:
        return load_ideal(source, field)
    path = Path(source)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        spec = json.loads(text)
        cons = dict(spec.get("construction", spec))
        if field is not None:
            cons["char"] = field
        I = constructions.build(cons)
        I.label = spec.get("label", I.label)
        return I
    I = load_ideal(text, field)
    if not I.label:
        I.label = path.stem
    return I


def _field_name(I: Ideal) -> str:
    return I.ring.field.name


# ---------------------------------------------------------------------------
# reports


def _base(I: Ideal, args) -> dict:
    return {
        "label": I.label,
        "field": _field_name(I),
        "seed": args.seed,
        "trials": args.trials,
    }


def _gin_block(G, names) -> dict:
    return G.as_dict(names) | {"seeds": G.seeds}


def invariants_of(I: Ideal, seed: int = 0, trials: int = DEFAULT_TRIALS) -> tuple[dict, object]:
    G = gin(I, trials=trials, seed=seed)
    hs = I.hilbert_series()
    inv = {"dim": hs.dimension, "degree": hs.degree}
    if G.ideal.is_zero():
        inv |= {"D": None, "M": None, "reg": None, "satdeg": None, "alpha": None}
        extra = {"saturated": True, "spor": [], "cm": True}
    else:
        inv |= {
            "D": G.ideal.D,
            "M": G.ideal.M,
            "reg": G.ideal.regularity(),
            "satdeg": G.ideal.sat_degree(),
            "alpha": I.alpha(),
        }
        extra = {
            "saturated": is_saturated_via_gin(G),
            "spor": [format_monomial(m, I.ring.names) for m in G.ideal.spor_set()],
            "cm": cm_check(G)["cm"],
        }
    return inv | extra, G


def run_verb(verb: str, I: Ideal, args) -> dict:
    names = I.ring.names
    out = _base(I, args)
    if verb == "gin":
        G = gin(I, trials=args.trials, seed=args.seed)
        out["gin"] = _gin_block(G, names)
    elif verb == "hilbert":
        tmax = 10 if args.tmax is None else args.tmax
        table = I.hilbert_table(tmax)
        hs = I.hilbert_series()
        out["invariants"] = {"dim": hs.dimension, "degree": hs.degree}
        out["hilbert"] = table.as_dict()
    elif verb == "invariants":
        inv, G = invariants_of(I, args.seed, args.trials)
        out["invariants"] = inv
        out["gin"] = _gin_block(G, names)
    elif verb == "reduction":
        s = 1 if args.s is None else args.s
        prof = reduction_number(I, s, trials=args.trials, seed=args.seed)
        out["reduction"] = prof.as_dict() | {"crosscheck_seeds": prof.seeds}
    elif verb == "wlp":
        out["wlp"] = wlp_test(I, seed=args.seed).as_dict()
    elif verb == "truncate":
        if args.d is None:
            raise PreconditionError("truncate needs --d")
        T = truncate_ideal(I, args.d)
        out["truncation"] = {"d": args.d, "generators": [g.to_string() for g in T.gens], "text": emit_ideal(T)}
    elif verb == "growth1":
        out["growth"] = first_difference_pipeline(I, args.d, trials=args.trials, seed=args.seed).as_dict()
    elif verb == "growth2":
        if args.d is None:
            raise PreconditionError("growth2 needs --d")
        out["growth"] = second_difference_pipeline(I, args.d, trials=args.trials, seed=args.seed).as_dict()
    elif verb == "points":
        pts = getattr(I, "points", None)
        tmax = 10 if args.tmax is None else args.tmax
        out["points"] = {"count": len(pts) if pts is not None else None, "ideal": emit_ideal(I)}
        out["hilbert"] = I.hilbert_table(tmax).as_dict()
    else:
        raise ValueError(f"unknown verb {verb!r}")
    return out


def emit_text(report: dict) -> str:
    """One ``key: value`` line per top-level key, values as compact JSON."""
    data = json.loads(emit_report(report))
    return "\n".join(f"{k}: {json.dumps(v, separators=(', ', ': '))}" for k, v in data.items())


# ---------------------------------------------------------------------------
# corpus


def _lookup(report: dict, dotted: str):
    cur = report
    for part in dotted.split("."):
        if isinstance(cur, dict) and part in cur:
            cur = cur[part]
        else:
            raise KeyError(dotted)
    return cur


def _entry(path: Path) -> dict:
    """Command, arguments and expectations of a corpus file."""
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        spec = json.loads(text)
    else:
        from .parser import parse_ideal

        spec, _ = parse_ideal(text)
        spec = spec.metadata
    return {
        "command": spec.get("command", "invariants"),
        "args": spec.get("args", {}),
        "expect": spec.get("expect", {}),
        "label": spec.get("label", path.stem),
    }


def run_entry(path: str) -> dict:
    """Run one corpus file; mismatches lists (key, expected, got)."""
    p = Path(path)
    row = {"file": p.name, "label": p.stem, "command": None, "status": "pass", "mismatches": []}
    try:
        entry = _entry(p)
        row["label"], row["command"] = entry["label"], entry["command"]
        ns = argparse.Namespace(seed=0, trials=DEFAULT_TRIALS, tmax=None, d=None, s=None)
        for k, v in entry["args"].items():
            setattr(ns, k, v)
        I = load_input(str(p))
        report = json.loads(emit_report(run_verb(entry["command"], I, ns)))
        for key, want in entry["expect"].items():
            try:
                got = _lookup(report, key)
            except KeyError:
                got = "<missing>"
            if got != want:
                row["mismatches"].append([key, want, got])
        if row["mismatches"]:
            row["status"] = "fail"
    except TheoremViolation as exc:
        row["status"], row["error"] = "violation", str(exc)
    except Exception as exc:  # noqa: BLE001 - reported per entry
        row["status"], row["error"] = "error", f"{type(exc).__name__}: {exc}"
    return row


def corpus_files(directory) -> list:
    d = Path(directory)
    if not d.is_dir():
        raise FileNotFoundError(f"corpus directory {d} not found")
    return sorted(str(p) for p in d.iterdir() if p.suffix in (".ideal", ".json"))


def run_corpus(directory, jobs: int = 1) -> list:
    files = corpus_files(directory)
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_entry, files))
    return [run_entry(f) for f in files]


def default_corpus() -> Path:
    return Path(str(resources.files("gingrowth") / "corpus"))


def format_summary(rows: list) -> str:
    lines = [f"{'file':36} {'command':11} status"]
    for r in rows:
        lines.append(f"{r['file']:36} {str(r['command']):11} {r['status']}")
        for key, want, got in r["mismatches"]:
            lines.append(f"    {key}: expected {json.dumps(want)}, got {json.dumps(got)}")
        if "error" in r:
            lines.append(f"    {r['error']}")
    passed = sum(r["status"] == "pass" for r in rows)
    lines.append(f"{passed}/{len(rows)} passed")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gingrowth", description="Generic initial ideals and Hilbert function growth.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("input", nargs="?", help="ideal file (.ideal grammar or .json construction); corpus directory")
    ap.add_argument("-e", "--ideal", help="inline ideal text instead of a file")
    ap.add_argument("--field", help="prime p, or Q for the rationals (overrides the file)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    ap.add_argument("--tmax", type=int)
    ap.add_argument("--d", type=int)
    ap.add_argument("--s", type=int)
    ap.add_argument("--jobs", type=int, default=1, help="parallel corpus entries")
    ap.add_argument("--json", action="store_true", help="JSON output")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    if args.seed < 0 or args.seed >= 2**64:
        print("error: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return EXIT_COMPUTE
    if args.verb == "corpus":
        try:
            rows = run_corpus(args.input or default_corpus(), args.jobs)
        except FileNotFoundError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_COMPUTE
        print(json.dumps(rows, indent=2) if args.json else format_summary(rows))
        if any(r["status"] == "violation" for r in rows):
            return EXIT_THEOREM
        return EXIT_OK if all(r["status"] == "pass" for r in rows) else EXIT_COMPUTE
    field = None
    if args.field is not None:
        field = "0" if args.field.upper() in ("Q", "QQ") else args.field
    try:
        if args.ideal is not None:
            I = load_input(args.ideal, field, inline=True)
        elif args.input:
            I = load_input(args.input, field)
        else:
            print("error: give an input file or --ideal", file=sys.stderr)
            return EXIT_PARSE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # noqa: BLE001
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    try:
        report = run_verb(args.verb, I, args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except Exception as exc:  # noqa: BLE001
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    print(emit_report(report) if args.json else emit_text(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
