"""
Command-line interface.

Subcommands: ``roots``, ``character``, ``verify``, ``region``, ``virtual``
and ``report``.  Exit codes are stable: 0 success, 1 verification failure,
2 usage error, 3 numeric-domain error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .casimir import (ParamContext, phi, virtual_K_scalar, virtual_lowest_point,
                      virtual_weights, weyl_character_oracle)
from .errors import (CapExceededError, CasimirError, ConsistencyError,
                     DegeneratePointError, DimensionBoundError, NumericRangeError)
from .region import (DEFAULT_RANGE, emit, sample_boundaries, sample_boundary,
                     sample_region)
from .rootdata import (RootDatum, bourbaki_labels, build_root_datum,
                       diagram_involution, longest_word, parse_lie_type)
from .verify import BUILTIN_TYPES, AUDIT_ONLY_TYPES, to_json, verify_many
from .weights import fundamental_dims

__all__ = ["main", "build_parser", "CliConfig", "EXIT_OK", "EXIT_VERIFY",
           "EXIT_USAGE", "EXIT_NUMERIC"]

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
CUSP_VIEW_T = 0.25

log = logging.getLogger("poscasimir")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    """Validated inputs shared by the subcommands.

    ``t`` and ``lam`` are mutually exclusive; ``lam`` requires ``b``.
    """
    type: str
    t: tuple[float, ...] | None = None
    lam: tuple[float, ...] | None = None
    b: float | None = None
    steps: int | None = None
    range: tuple[float, float] = DEFAULT_RANGE
    outputs: dict[str, str] = field(default_factory=dict)
    weyl_cap: int | None = None
    verbosity: int = 0

    def __post_init__(self):
        if self.t is not None and self.lam is not None:
            raise UsageError("--t and --lambda are mutually exclusive")
        if self.lam is not None and self.b is None:
            raise UsageError("--lambda requires --b")

    def datum(self) -> RootDatum:
        d = build_root_datum(parse_lie_type(self.type))
        for name, vec in (("--t", self.t), ("--lambda", self.lam)):
            if vec is not None and len(vec) != d.rank:
                raise UsageError(f"{name} needs {d.rank} values for {d.lie_type}, got {len(vec)}")
        return d


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _cnum(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)
        log.info("wrote %s", path)


# -- subcommands -----------------------------------------------------------

def cmd_roots(cfg: CliConfig, as_json: bool) -> int:
    d = cfg.datum()
    sigma = diagram_involution(d)
    data = {
        "type": str(d.lie_type),
        "labels": list(d.labels),
        "bourbaki": {str(k): v for k, v in bourbaki_labels(d.lie_type).items()},
        "cartan": [list(row) for row in d.cartan],
        "d": [str(x) for x in d.dsym],
        "short": [lab for p, lab in enumerate(d.labels) if d.is_short(d.simple_root(p))],
        "positive_roots": [list(r) for r in d.positive_roots],
        "w0": list(longest_word(d)),
        "sigma": {str(d.labels[p]): d.labels[sigma[p]] for p in range(d.rank)},
        "dims": list(fundamental_dims(d)),
    }
    if as_json:
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
        return EXIT_OK
    print(f"type {data['type']}")
    print("labels " + " ".join(map(str, d.labels)))
    print("bourbaki " + " ".join(f"{k}->{v}" for k, v in data["bourbaki"].items()))
    print("cartan")
    for row in d.cartan:
        print("  " + " ".join(f"{x:2d}" for x in row))
    print("d " + " ".join(data["d"]))
    print(f"positive_roots {len(d.positive_roots)}")
    for r in d.positive_roots:
        print("  " + " ".join(map(str, r)))
    print("w0 " + " ".join(map(str, data["w0"])))
    print("sigma " + " ".join(f"{k}->{v}" for k, v in data["sigma"].items()))
    print("dims " + " ".join(map(str, data["dims"])))
    return EXIT_OK


def cmd_character(cfg: CliConfig, oracle: bool) -> int:
    d = cfg.datum()
    c = phi(d, cfg.t).c
    ref = [weyl_character_oracle(d, lab, cfg.t) for lab in d.labels] if oracle else None
    print(" ".join(_num(x) for x in c))
    if ref is not None:
        print(" ".join(_num(x) for x in ref))
        worst = max(abs(a - b) / max(abs(b), 1e-300) for a, b in zip(c, ref))
        print(f"max_rel_diff {worst:.3e}")
    return EXIT_OK


def cmd_verify(target: str, seed: int, output: str | None) -> int:
    if target.lower() == "all":
        names = BUILTIN_TYPES + AUDIT_ONLY_TYPES
    else:
        names = (str(parse_lie_type(target)),)
    report = verify_many(names, seed=seed)
    text = to_json(report).encode()
    _write(output or "-", text)
    return EXIT_OK if report["summary"]["passed"] else EXIT_VERIFY


def _face(value: str | None):
    if value is None or value == "none":
        return None
    if value == "all":
        return "all"
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"--face expects a node label, 'all' or 'none', got {value!r}")


def cmd_region(cfg: CliConfig, face: str | None, log_scale: bool) -> int:
    d = cfg.datum()
    face = _face(face)
    outs = cfg.outputs
    if not outs:
        outs = {"csv": "-"}
    if ("svg" in outs or "figure" in outs) and d.rank != 2:
        raise UsageError(f"--svg and --figure need a rank-2 type, {d.lie_type} has rank {d.rank}")
    if face is not None and face != "all" and face not in d.labels:
        raise UsageError(f"--face {face} is not a node of {d.lie_type}")
    data_sample = None
    if "csv" in outs or "json" in outs:
        if face is None:
            data_sample = sample_region(d, cfg.range, cfg.steps)
        elif face == "all":
            data_sample = sample_boundaries(d, cfg.range, cfg.steps)
        else:
            data_sample = sample_boundary(d, face, cfg.range, cfg.steps)
    boundary = None
    if "svg" in outs or "figure" in outs:
        boundary = sample_boundaries(d, cfg.range, cfg.steps)
    for fmt in ("csv", "json"):
        if fmt in outs:
            _write(outs[fmt], emit(data_sample, fmt))
    if "svg" in outs:
        _write(outs["svg"], emit(boundary, "svg", log=log_scale))
    if "figure" in outs:
        from .plotting import plot_region
        plot_region(boundary, outs["figure"], log=log_scale)
        log.info("wrote %s", outs["figure"])
    return EXIT_OK


def cmd_virtual(cfg: CliConfig, word: Sequence[int] | None) -> int:
    d = cfg.datum()
    ctx = ParamContext.for_datum(d, cfg.b)
    word = tuple(word) if word else longest_word(d)
    vp = virtual_lowest_point(d, word, ctx, cfg.lam)
    print("word " + " ".join(map(str, vp.word)))
    for j, v in enumerate(vp.v, start=1):
        print(f"v_{j} {_cnum(v)}")
    for lab in d.labels:
        print(f"K_{lab} {_cnum(virtual_K_scalar(d, vp, ctx, cfg.lam, lab))}")
    lowest, highest = virtual_weights(ctx, cfg.lam, diagram_involution(d))
    for p, lab in enumerate(d.labels):
        print(f"Lambda_{lab} lowest {_cnum(lowest[p])} highest {_cnum(highest[p])}")
    return EXIT_OK


def cmd_report(cfg: CliConfig, out_dir: str, seed: int, log_scale: bool) -> int:
    """Verification JSON, region CSVs and, for rank 2, an SVG and two matplotlib figures."""
    d = cfg.datum()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    name = str(d.lie_type)
    report = verify_many([name], seed=seed)
    (out / f"{name}_verify.json").write_text(to_json(report))
    region = sample_region(d, cfg.range, cfg.steps)
    (out / f"{name}_region.csv").write_bytes(emit(region, "csv"))
    boundary = sample_boundaries(d, cfg.range, cfg.steps)
    (out / f"{name}_boundary.csv").write_bytes(emit(boundary, "csv"))
    written = [f"{name}_verify.json", f"{name}_region.csv", f"{name}_boundary.csv"]
    if d.rank == 2:
        from .plotting import plot_region
        (out / f"{name}_boundary.svg").write_bytes(emit(boundary, "svg", log=log_scale))
        # characters grow exponentially, so the full view is log-scaled and a
        # linear close-up shows the cusp
        plot_region(boundary, out / f"{name}_region.png", interior=region, log=True)
        near = (cfg.range[0], min(cfg.range[1], CUSP_VIEW_T))
        plot_region(sample_boundaries(d, near, cfg.steps), out / f"{name}_cusp.png",
                    interior=sample_region(d, near, 40))
        written += [f"{name}_boundary.svg", f"{name}_region.png", f"{name}_cusp.png"]
    for w in written:
        print(out / w)
    return EXIT_OK if report["summary"]["passed"] else EXIT_VERIFY


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poscasimir",
        description="Central characters of positive representations and their regions.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--weyl-cap", type=int, default=None,
                        help="Weyl enumeration cap (overrides CASIMIR_WEYL_CAP)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root datum: Cartan matrix, d_i, roots, w_0, sigma")
    p.add_argument("type")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("character", help="evaluate C_1..C_n at t")
    p.add_argument("type")
    p.add_argument("--t", type=float, nargs="+", required=True)
    p.add_argument("--oracle", action="store_true",
                   help="also evaluate the Weyl character formula")

    p = sub.add_parser("verify", help="run the identity suite and print a JSON report")
    p.add_argument("type", help="a type such as B3, or 'all'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default=None, help="file path, '-' for stdout")

    def grid(p):
        p.add_argument("--steps", type=int, default=None)
        p.add_argument("--range", type=float, nargs=2, default=list(DEFAULT_RANGE),
                       metavar=("LO", "HI"))
        p.add_argument("--log", action="store_true", help="log-scaled axes for svg/figure")

    p = sub.add_parser("region", help="sample the region and its boundary faces")
    p.add_argument("type")
    grid(p)
    p.add_argument("--face", default=None,
                   help="node label to hold at zero, 'all' for every face, default full region")
    for fmt in ("csv", "json", "svg"):
        p.add_argument(f"--{fmt}", metavar="PATH", default=None, help="'-' for stdout")
    p.add_argument("--figure", metavar="PATH", default=None,
                   help="matplotlib figure (png, pdf or svg by suffix), rank 2 only")

    p = sub.add_parser("virtual", help="virtual lowest weight point and K scalars")
    p.add_argument("type")
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, nargs="+", required=True)
    p.add_argument("--word", type=int, nargs="+", default=None,
                   help="reduced word of w_0 as node labels (default: a fixed one)")

    p = sub.add_parser("report", help="verification, region data and figures into a directory")
    p.add_argument("type")
    p.add_argument("--out", required=True, metavar="DIR")
    p.add_argument("--seed", type=int, default=0)
    grid(p)
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "verify":
        return cmd_verify(args.type, args.seed, args.output)
    outputs = {}
    if args.command == "region":
        outputs = {k: getattr(args, k) for k in ("csv", "json", "svg", "figure")
                   if getattr(args, k) is not None}
        if list(outputs.values()).count("-") > 1:
            raise UsageError("at most one output may go to stdout")
    cfg = CliConfig(
        type=args.type,
        t=tuple(args.t) if getattr(args, "t", None) is not None else None,
        lam=tuple(args.lam) if getattr(args, "lam", None) is not None else None,
        b=getattr(args, "b", None),
        steps=getattr(args, "steps", None),
        range=tuple(getattr(args, "range", DEFAULT_RANGE)),
        outputs=outputs,
        weyl_cap=args.weyl_cap,
        verbosity=args.verbose,
    )
    if args.command == "roots":
        return cmd_roots(cfg, args.json)
    if args.command == "character":
        return cmd_character(cfg, args.oracle)
    if args.command == "region":
        return cmd_region(cfg, args.face, args.log)
    if args.command == "virtual":
        return cmd_virtual(cfg, args.word)
    return cmd_report(cfg, args.out, args.seed, args.log)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if args.weyl_cap is not None:
        os.environ["CASIMIR_WEYL_CAP"] = str(args.weyl_cap)
    try:
        return _dispatch(args)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (NumericRangeError, DegeneratePointError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (UsageError, CapExceededError, DimensionBoundError, CasimirError,
            ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
