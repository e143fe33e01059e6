"""lieposet command line.

Exit status: 0 success, 1 invalid input, 2 internal inconsistency, 3 when
``verify`` records failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from sympy import isprime

from .enumeration import candidate_count, generate_with_encoding, verify_theorems
from .errors import InconsistencyError, LiePosetError, ValidationError
from .exactla import DEFAULT_PRIME
from .invariants import (DEFAULT_DET_SAMPLES, DEFAULT_SAMPLES, certify_contact, classify,
                         graph_of, index_oracle)
from .poset import FAMILIES, load
from .relgraph import hasse_dot, relation_graph_dot

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT, EXIT_FAILURES = 0, 1, 2, 3


@dataclass(frozen=True)
class CliConfig:
    command: str
    input: Optional[str]
    family: Optional[str]
    n: Optional[int]
    samples: int
    det_samples: int
    prime: int
    seed: int
    output: Optional[str]
    format: Optional[str]
    graph: str = "relation"
    jobs: int = 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                        help="random functionals for the index oracle (default %(default)s)")
    common.add_argument("--det-samples", type=int, default=DEFAULT_DET_SAMPLES,
                        help="random functionals for contact refutation (default %(default)s)")
    common.add_argument("--prime", type=int, default=None,
                        help=f"sampling modulus (default $LIEPOSET_PRIME or {DEFAULT_PRIME})")
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default $LIEPOSET_SEED or 0)")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "jsonl", "text", "dot"))

    parser = argparse.ArgumentParser(prog="lieposet", description="Index and contact structure of "
                                     "type-B, C and D Lie poset algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("analyze", "full classification report"),
                            ("index", "index by formula, M-rank and sampling"),
                            ("contact", "contact verdict with certificate")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", help="poset JSON file ('-' for stdin)")
    for name, help_text in (("enumerate", "JSONL catalog of every height-one poset"),
                            ("verify", "cross-check the theorems on every height-one poset")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--family", required=True, choices=FAMILIES)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT of the poset")
    p.add_argument("input")
    p.add_argument("--graph", choices=("hasse", "relation"), default="relation")
    return parser


def _env_int(env, name: str, default: int) -> int:
    raw = env.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"{name}={raw!r} is not an integer") from None


def config_from_args(args: argparse.Namespace, env=os.environ) -> CliConfig:
    seed = args.seed if args.seed is not None else _env_int(env, "LIEPOSET_SEED", 0)
    prime = args.prime if args.prime is not None else _env_int(env, "LIEPOSET_PRIME", DEFAULT_PRIME)
    if not isprime(prime):
        raise ValidationError(f"--prime {prime} is not prime")
    if args.samples < 1 or args.det_samples < 1:
        raise ValidationError("--samples and --det-samples must be at least 1")
    n = getattr(args, "n", None)
    if n is not None and n < 1:
        raise ValidationError("--n must be at least 1")
    return CliConfig(args.command, getattr(args, "input", None), getattr(args, "family", None), n,
                     args.samples, args.det_samples, prime, seed, args.output, args.format,
                     getattr(args, "graph", "relation"), max(1, getattr(args, "jobs", 1)))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _text(obj: dict) -> str:
    width = max(len(k) for k in obj)
    return "\n".join(f"{k:<{width}}  {_dumps(v) if isinstance(v, (list, dict)) else v}"
                     for k, v in obj.items())


def _render(obj: dict, fmt: Optional[str]) -> str:
    return _text(obj) if fmt == "text" else _dumps(obj)


def run(cfg: CliConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, output text)."""
    if cfg.command in ("analyze", "index", "contact", "export-dot"):
        p = load(_read(cfg.input))
        if cfg.command == "export-dot":
            return EXIT_OK, hasse_dot(p) if cfg.graph == "hasse" else relation_graph_dot(graph_of(p))
        if cfg.command == "analyze":
            report = classify(p, cfg.samples, cfg.det_samples, cfg.seed, cfg.prime)
            return EXIT_OK, _render(report.to_json(), cfg.format)
        if cfg.command == "index":
            return EXIT_OK, _render(index_oracle(p, cfg.samples, cfg.seed, cfg.prime).to_json(), cfg.format)
        cert = certify_contact(p, cfg.det_samples, cfg.seed, cfg.prime, index_samples=cfg.samples)
        return EXIT_OK, _render(cert.to_json(), cfg.format)

    if cfg.command == "enumerate":
        lines = []
        valid = 0
        for encoding, p in generate_with_encoding(cfg.family, cfg.n):
            valid += 1
            report = classify(p, cfg.samples, cfg.det_samples, cfg.seed, cfg.prime).to_json()
            if cfg.format == "text":
                lines.append(f"{encoding}  dim={report['dim']} index={report['index']} "
                             f"frobenius={report['frobenius']} contact={report['contact']}")
            else:
                lines.append(_dumps(report))
        summary = {"summary": {"family": cfg.family, "n": cfg.n,
                               "candidateCount": candidate_count(cfg.family, cfg.n), "validCount": valid}}
        lines.append(_render(summary, cfg.format) if cfg.format != "text" else _text(summary["summary"]))
        return EXIT_OK, "\n".join(lines)

    if cfg.command == "verify":
        s = verify_theorems(cfg.family, cfg.n, cfg.samples, cfg.seed, cfg.det_samples, cfg.prime, cfg.jobs)
        return (EXIT_FAILURES if s.failures else EXIT_OK), _render(s.to_json(), cfg.format)

    raise ValidationError(f"unknown command {cfg.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        status, text = run(cfg)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except LiePosetError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text.rstrip("\n") + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
