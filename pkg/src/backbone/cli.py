"""Command-line entry point: ``backbone {kappa,backbone,verify,bench}``.

Exit codes: 0 success, 1 honest algorithmic failure (or a certificate that
does not check out), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import oracle
from .certificate import (FailureReport, RunManifest, certificate_violation, format_certificate,
                          format_failure, parse_certificate, parse_sections)
from .connectivity import vertex_connectivity
from .io import ParseError, read_graph
from .pipeline import PipelineConfig, backbone

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CSV_COLUMNS = ("family", "n", "kappa_input", "k", "outcome", "rounds", "millis")


class UsageError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get("BACKBONE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"BACKBONE_SEED must be an integer, got {raw!r}") from None


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def positive_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def make_config(k: int, n: int, seed: int, scale: Fraction | None = None,
                max_rounds: int | None = None) -> PipelineConfig:
    """Desk profile unless an explicit scale asks for the scaled constants."""
    extra = {"seed": seed}
    if max_rounds is not None:
        extra["max_rounds"] = max_rounds
    if scale is None:
        return PipelineConfig.desk(k, n, **extra)
    return PipelineConfig.from_asymptotic(k, n, scale, **extra)


def run_backbone_text(g, k: int, seed: int, input_path: str, scale: Fraction | None = None,
                      max_rounds: int | None = None) -> tuple[int, str]:
    """(exit code, output text) of one backbone run; shared by the command and the tests."""
    overrides = [("k", str(k))]
    if scale is not None:
        overrides.append(("scale", str(scale)))
    if max_rounds is not None:
        overrides.append(("max_rounds", str(max_rounds)))
    cfg = make_config(k, g.n, seed, scale, max_rounds)
    manifest = RunManifest("backbone", input_path, seed, tuple(overrides))
    result = backbone(g, cfg)
    if isinstance(result, FailureReport):
        return EXIT_FAIL, format_failure(result, manifest, cfg.as_dict())
    return EXIT_OK, format_certificate(result, manifest, cfg.as_dict())


def cmd_kappa(args) -> int:
    g = read_graph(args.input)
    kappa, witness = vertex_connectivity(g)
    cut = sorted(witness.cut) if witness is not None else []
    print(f"kappa={kappa}")
    print("cut=" + " ".join(map(str, cut)))
    return EXIT_OK


def cmd_backbone(args) -> int:
    g = read_graph(args.input)
    seed = args.seed if args.seed is not None else default_seed()
    code, text = run_backbone_text(g, args.k, seed, str(args.input), args.scale, args.max_rounds)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    first = "certificate" if code == EXIT_OK else "failure report"
    print(f"{first} written to {args.out or '<stdout>'}", file=sys.stderr)
    return code


def verify_text(g, text: str, k: int | None) -> tuple[int, str]:
    """(exit code, message) for checking certificate ``text`` against host ``g``."""
    if "STAGE" in parse_sections(text):
        return EXIT_FAIL, "NOT_A_CERTIFICATE"
    cert = parse_certificate(text)
    if k is None:
        try:
            k = int(cert.config["k"])
        except (KeyError, ValueError):
            raise UsageError("no --k given and the certificate records none") from None
    problem = certificate_violation(g, cert.subgraph, cert.bipartition, k)
    if problem is not None:
        return EXIT_FAIL, problem
    return EXIT_OK, f"OK k={k}"


def cmd_verify(args) -> int:
    g = read_graph(args.graph_input)
    text = Path(args.certificate_input).read_text()
    try:
        code, message = verify_text(g, text, args.k)
    except ValueError as exc:
        raise UsageError(f"{args.certificate_input}: {exc}") from None
    print(message)
    return code


def parse_params(text: str) -> dict:
    params = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"bad parameter {item!r}; expected key=value")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            try:
                params[key.strip()] = Fraction(value)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad value in {item!r}") from None
    return params


def parse_k_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        ks = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise UsageError(f"bad k-range {text!r}; expected e.g. 2..4") from None
    if not ks:
        raise UsageError(f"k-range {text!r} is empty")
    if ks[0] < 1:
        raise UsageError("k values must be at least 1")
    return ks


def bench_rows(family: str, params: dict, ks: Sequence[int], seeds: int,
               timing: bool = True) -> list[dict]:
    rows = []
    for seed in range(seeds):
        try:
            g = oracle.generate(oracle.GeneratorSpec(family, params, seed))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad generator spec: {exc}") from None
        kappa, _ = vertex_connectivity(g)
        for k in ks:
            start = time.perf_counter()
            result = backbone(g, PipelineConfig.desk(k, g.n, seed=seed))
            millis = round(1000 * (time.perf_counter() - start)) if timing else 0
            outcome = "certificate" if not isinstance(result, FailureReport) else result.stage
            rows.append({"family": family, "n": g.n, "kappa_input": kappa, "k": k,
                         "outcome": outcome, "rounds": result.rounds, "millis": millis,
                         "_seed": seed})
    rows.sort(key=lambda r: (r["family"], r["n"], r["k"], r["_seed"]))
    return rows


def cmd_bench(args) -> int:
    if args.seeds < 1:
        raise UsageError("--seeds must be at least 1")
    rows = bench_rows(args.family, parse_params(args.params), parse_k_range(args.k_range),
                      args.seeds, timing=not args.no_timing)
    out = open(args.out_csv, "w", newline="") if args.out_csv else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="backbone",
                                     description="Spanning bipartite k-connected subgraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", help="vertex connectivity and a minimum separator")
    p.add_argument("input")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("backbone", help="build and certify a spanning bipartite subgraph")
    p.add_argument("input")
    p.add_argument("--k", type=positive_int, required=True)
    p.add_argument("--seed", type=int, default=None, help="defaults to $BACKBONE_SEED or 0")
    p.add_argument("--scale", type=positive_fraction, default=None,
                   help="multiply the asymptotic constants by this (default: desk profile)")
    p.add_argument("--max-rounds", type=positive_int, default=None)
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_backbone)

    p = sub.add_parser("verify", help="re-check a certificate against its host graph")
    p.add_argument("graph_input")
    p.add_argument("certificate_input")
    p.add_argument("--k", type=positive_int, default=None,
                   help="defaults to the k recorded in the certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="CSV of backbone outcomes over generated graphs")
    p.add_argument("--family", required=True, choices=oracle.FAMILIES)
    p.add_argument("--params", default="", help="e.g. n=40,p=1/2")
    p.add_argument("--k-range", required=True, help="e.g. 2..3")
    p.add_argument("--seeds", type=int, default=1, help="run seeds 0..N-1")
    p.add_argument("--out-csv", default=None)
    p.add_argument("--no-timing", action="store_true",
                   help="write millis=0 so reruns are byte-identical")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
