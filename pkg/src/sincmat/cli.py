"""Command-line entry point.

One subcommand per experiment. Exit codes: 0 success, 2 invalid
configuration (bad JSON, unknown fields, out-of-range values), 3 numerical
or I/O failure during the run. Thread count resolution: --threads flag,
then the SINCMAT_THREADS environment variable, then 1.
"""

from __future__ import annotations

import argparse
import os
import sys

from ._backend import backend_name
from ._version import __version__
from .errors import ConfigError, SincmatError
from .experiments import EXPERIMENTS, config_from_file, make_config, run_experiment

THREADS_ENV = "SINCMAT_THREADS"

_HELP = {
    "table1": "mean Hilbert-Schmidt residual of the low-rank estimator per M",
    "fixed-c-hist": "estimator eigenvalue clustering against eig(T_M) at one bandwidth",
    "hermite": "scaled-Hermite reconstruction of the sinc profile",
    "survey": "normalized kernel-matrix spectra across bandwidths",
    "bounds": "closed-form bound reports with empirical counterparts",
    "pswf": "prolate eigenvalue tables with independent-route deltas",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sincmat",
        description="Kernel random matrix experiments (sinc kernel, "
                    "low-rank spectral estimator).",
        epilog=f"backend: {backend_name()}; thread override env var: {THREADS_ENV}")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="experiment", required=True,
                                 metavar="|".join(EXPERIMENTS))
    for name in EXPERIMENTS:
        sub = subs.add_parser(name, help=_HELP[name])
        sub.add_argument("--config", metavar="PATH",
                         help="JSON config file mirroring ExperimentConfig")
        sub.add_argument("--seed", type=int, metavar="SEED",
                         help="base seed override (64-bit unsigned)")
        sub.add_argument("--out", metavar="DIR",
                         help="output directory override")
        sub.add_argument("--threads", type=int, metavar="K",
                         help=f"worker threads (default: ${THREADS_ENV} or 1)")
    return parser


def _resolve_threads(flag: int | None) -> int:
    if flag is not None:
        if flag < 1:
            raise ConfigError("--threads must be at least 1")
        return flag
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            val = int(env)
        except ValueError:
            raise ConfigError(f"{THREADS_ENV}={env!r} is not an integer") from None
        if val < 1:
            raise ConfigError(f"{THREADS_ENV} must be at least 1")
        return val
    return 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        threads = _resolve_threads(args.threads)
        overrides = {"base_seed": args.seed, "output_dir": args.out}
        if args.config:
            cfg = config_from_file(args.config, args.experiment, **overrides)
        else:
            cfg = make_config(args.experiment, **overrides)
    except ConfigError as exc:
        print(f"sincmat: invalid config: {exc}", file=sys.stderr)
        return 2
    try:
        payload = run_experiment(cfg, threads=threads)
    except SincmatError as exc:
        print(f"sincmat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"sincmat: i/o failure: {exc}", file=sys.stderr)
        return 3
    for path in payload.get("files", []):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
