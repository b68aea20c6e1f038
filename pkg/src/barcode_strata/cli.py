"""Command-line interface: ``barcode-strata <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import barcode as bc
from .config import Config
from .coxeter import enumerate_complex
from .errors import BarcodeFormatError, StrataError
from .metrics import distance, distance_matrix
from .strata import compare, stratum_of

EXIT_USAGE = 2
EXIT_INVALID = 3


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _load(path: str) -> bc.Barcode:
    return bc.load(path)


def cmd_analyze(args, cfg: Config) -> str:
    B = _load(args.file)
    return _dump(bc.analyze(B, cfg.tol, args.enumerate_dc, cfg.double_coset_cap))


def cmd_dist(args, cfg: Config) -> str:
    A, B = _load(args.a), _load(args.b)
    res = distance(A, B, args.metric)
    return _dump({"distance": res.distance, "matching": res.matching.to_list()})


def _barcode_files(directory: str) -> list[Path]:
    root = Path(directory)
    if not root.is_dir():
        raise StrataError(f"not a directory: {directory}")
    files = sorted(p for p in root.iterdir() if p.suffix.lower() in (".csv", ".json"))
    if not files:
        raise StrataError(f"no .csv or .json barcode files in {directory}")
    return files


def cmd_dist_matrix(args, cfg: Config) -> str:
    files = _barcode_files(args.directory)
    M = distance_matrix([_load(str(p)) for p in files], args.metric)
    names = [p.name for p in files]
    if cfg.output_format == "json":
        return _dump({"files": names, "matrix": M.tolist()})
    lines = [",".join(["file"] + names)]
    for name, row in zip(names, M.tolist()):
        lines.append(",".join([name] + [repr(v) for v in row]))
    return "\n".join(lines)


def cmd_stratum(args, cfg: Config) -> str:
    return _dump(stratum_of(_load(args.file), cfg.tol).to_json())


def cmd_stratum_compare(args, cfg: Config) -> str:
    A, B = _load(args.a), _load(args.b)
    if A.n != B.n:
        raise StrataError(f"barcodes have different bar counts: {A.n} and {B.n}")
    return compare(stratum_of(A, cfg.tol), stratum_of(B, cfg.tol))


def cmd_complex(args, cfg: Config) -> str:
    return _dump(enumerate_complex(args.n).to_json())


def generate(n: int, seed: int, strict: bool = False) -> bc.Barcode:
    """Births uniform on [0, 1), lengths uniform on (0, 1]; strict mode resamples ties."""
    if n < 1:
        raise StrataError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    while True:
        births = rng.random(n)
        deaths = births + (1.0 - rng.random(n))
        B = bc.Barcode.from_arrays(births.tolist(), deaths.tolist())
        if not strict or bc.is_strict(B):
            return B


def cmd_gen(args, cfg: Config) -> str:
    B = generate(args.n, cfg.seed, args.strict)
    if cfg.output_format == "json":
        return _dump(B.to_json())
    return B.to_csv().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=0.0,
                        help="merge values closer than TOL when detecting ties (default 0: exact)")
    common.add_argument("--format", dest="output_format", choices=("json", "csv"), default=None,
                        help="output format where both are supported")

    parser = argparse.ArgumentParser(
        prog="barcode-strata",
        description="Coxeter coordinates, strata and modified distances for barcodes with n bars.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="invariants and coordinates of a barcode")
    p.add_argument("file")
    p.add_argument("--enumerate-dc", action="store_true",
                   help="list every permutation of the double coset")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dist", parents=[common], help="modified distance between two barcodes")
    p.add_argument("--metric", choices=("bottleneck", "wasserstein"), default="bottleneck")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("dist-matrix", parents=[common],
                       help="pairwise distances between all barcode files of a directory")
    p.add_argument("--metric", choices=("bottleneck", "wasserstein"), default="bottleneck")
    p.add_argument("directory")
    p.set_defaults(func=cmd_dist_matrix, default_format="csv")

    p = sub.add_parser("stratum", parents=[common], help="smallest stratum containing a barcode")
    p.add_argument("file")
    p.set_defaults(func=cmd_stratum)

    p = sub.add_parser("stratum-compare", parents=[common],
                       help="order relation between the strata of two barcodes")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_stratum_compare)

    p = sub.add_parser("complex", parents=[common], help="face poset of the Coxeter complex of S_n")
    p.add_argument("n_pos", nargs="?", type=int, metavar="n")
    p.add_argument("--n", type=int, dest="n_opt")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("gen", parents=[common], help="random barcode")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true", help="resample until births and deaths are distinct")
    p.set_defaults(func=cmd_gen, default_format="csv")
    return parser


def _error(exc: Exception, code: int) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, BarcodeFormatError):
        if exc.line is not None:
            payload["line"] = exc.line
        if exc.index is not None:
            payload["index"] = exc.index
    print(_dump(payload), file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "complex":
        args.n = args.n_opt if args.n_opt is not None else args.n_pos
        if args.n is None:
            parser.error("complex: n is required")
    fmt = args.output_format or getattr(args, "default_format", "json")
    try:
        cfg = Config(tol=args.tol, seed=getattr(args, "seed", 0), output_format=fmt)
        out = args.func(args, cfg)
    except (StrataError, OSError) as exc:
        return _error(exc, EXIT_INVALID)
    sys.stdout.write(out + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
