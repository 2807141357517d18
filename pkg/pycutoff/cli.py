# -*- coding: utf-8 -*-
#
#
# pycutoff software framework for exact and asymptotic character ratios
# of the symmetric group and the mixing behaviour of conjugacy class
# random walks on S_n.
#
# Copyright (C) the pycutoff contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>
"""Command line interface of pycutoff.

Every subcommand prints its result as text (default), CSV or JSON, to stdout or to the file given by `--out`. The exit
code is 2 for invalid arguments (including refused caps), 1 if an invariant suite fails and 0 otherwise.
"""

# external _imports
import argparse
import json
import os
import sys
import warnings
from math import inf
from typing import List

import pandas as pd

# pycutoff internal _imports
from pycutoff import config
from pycutoff.exceptions import PyCutoffException, PyCutoffWarning
from pycutoff.partitions import CycleType, Partition
from pycutoff.utility import format_float, format_rational, write_output

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


##########
# parser #
##########


def _partition(s: str) -> Partition:
    try:
        return Partition.parse(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default="text", help="Output format.")
    common.add_argument("--out", default=None, help="Write output to this file instead of stdout.")
    common.add_argument("--workers", type=int, default=None,
                        help="Number of worker processes (default: $PYCUTOFF_WORKERS or 1).")
    common.add_argument("--unsafe-caps", action="store_true", help="Lift the size caps of the exact engines.")
    common.add_argument("--config", default=None,
                        help="YAML file with `Caps`, `Asymptotics` and/or `Walk` entries overriding the defaults.")
    common.add_argument("--verbose", action="store_true", help="Print progress.")

    parser = argparse.ArgumentParser(prog="pycutoff", description="Character ratios of S_n and the mixing of the "
                                                                  "random k-cycle walk.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("char-ratio", parents=[common], help="Exact character ratio at the k-cycle class.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True, help="Partition, e.g. 4,1.")
    p.add_argument("--method", choices=["residue", "mn", "general", "contour"], default="residue")

    p = sub.add_parser("char-table", parents=[common], help="Full character table of S_n.")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("asym", parents=[common], help="Regime table of the asymptotic estimates.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="lam", type=_partition)
    group.add_argument("--all", action="store_true", help="All partitions of n.")

    p = sub.add_parser("tv", parents=[common], help="Total variation distance and its L2 upper bound.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=["exact", "bounds"], default="exact")

    p = sub.add_parser("cutoff", parents=[common], help="Exact distance and bounds for a range of steps.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t-min", type=int, default=0)
    p.add_argument("--t-max", type=int, required=True)

    p = sub.add_parser("lower-bound", parents=[common], help="Chebyshev lower bound on the distance.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, default=None, help="Number of 2-cycles of the generator (default: k-cycle).")
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo simulation of the walk.")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="Run an invariant suite.")
    p.add_argument("--suite", required=True)
    p.add_argument("--n-max", type=int, default=None)

    return parser


###########
# configs #
###########


def _load_configs(args):
    """Caps, asymptotic and walk configurations from the defaults, `--config` and `--unsafe-caps`."""
    loaded = {"Caps": config.caps(), "Asymptotics": config.asymptotics(), "Walk": config.walk()}
    if args.config:
        if not os.path.isfile(args.config):
            raise ValueError(f"Configuration file '{args.config}' does not exist.")
        base = os.path.splitext(args.config)[0]
        if os.sep not in base and "/" not in base:
            base = os.path.join(".", base)
        for name in loaded:
            try:
                loaded[name] = config.from_yaml(f"{base}/{name}")
            except AttributeError:
                pass
    caps = loaded["Caps"]
    if args.unsafe_caps:
        warnings.warn(PyCutoffWarning("Size caps of the exact engines are lifted; computations may run for a very "
                                      "long time."))
        caps = caps.update_template(unsafe=True)
    workers = args.workers if args.workers is not None else config.default_workers()
    if workers < 1:
        raise ValueError(f"--workers must be positive, received {workers}.")
    return caps, loaded["Asymptotics"], loaded["Walk"], workers


##########
# output #
##########


def _emit(args, payload: dict, frame: pd.DataFrame = None):
    if args.format == "json":
        text = json.dumps(payload, default=_json_default)
    elif args.format == "csv":
        if frame is None:
            frame = pd.DataFrame([{key: val for key, val in payload.items() if not isinstance(val, (list, dict))}])
        text = frame.to_csv(index=False).rstrip("\n")
    else:
        if frame is not None:
            text = frame.to_string(index=False)
        else:
            text = "\n".join(f"{key}: {val}" for key, val in payload.items())
    write_output(text, args.out)


def _json_default(obj):
    if hasattr(obj, "item"):
        return obj.item()
    return str(obj)


def _float(x: float):
    if x in (inf, -inf) or x != x:
        return str(x)
    return float(format_float(x))


def _check_n_k(n: int, k: int, t: int = 0):
    if n < 1:
        raise ValueError(f"--n must be positive, received {n}.")
    if not 2 <= k <= n:
        raise ValueError(f"--k must lie in [2, n], received k = {k} for n = {n}.")
    if t < 0:
        raise ValueError(f"--t must be nonnegative, received {t}.")


###############
# subcommands #
###############


def _char_ratio(args, caps, cfg, walk_cfg, workers) -> int:
    from pycutoff.characters import char_mn_oracle, char_ratio_contour, char_ratio_general, char_ratio_kcycle, \
        dimension
    _check_n_k(args.n, args.k)
    lam = args.lam
    if lam.n != args.n:
        raise ValueError(f"Partition {lam} is a partition of {lam.n}, not of n = {args.n}.")
    rho = CycleType.k_cycle(args.n, args.k)
    if args.method == "residue":
        ratio = char_ratio_kcycle(lam, args.k)
    elif args.method == "mn":
        from fractions import Fraction
        ratio = Fraction(char_mn_oracle(lam, rho), dimension(lam))
    elif args.method == "general":
        ratio = char_ratio_general(lam, rho, caps=caps)
    else:
        ratio = char_ratio_contour(lam, args.k)
    payload = {"n": args.n, "k": args.k, "lambda": str(lam), "method": args.method,
               "ratio": format_rational(ratio), "ratio_float": _float(float(ratio))}
    if args.format == "text":
        write_output(format_rational(ratio), args.out)
    else:
        _emit(args, payload)
    return 0


def _char_table(args, caps, cfg, walk_cfg, workers) -> int:
    from pycutoff.characters import character_table
    table = character_table(args.n, caps=caps, workers=workers, verbose=args.verbose)
    if args.format == "json":
        _emit(args, table.to_dict())
    else:
        write_output(table.to_csv().rstrip("\n"), args.out)
    return 0


def _asym(args, caps, cfg, walk_cfg, workers) -> int:
    from pycutoff.asymptotics import regime_table
    _check_n_k(args.n, args.k)
    if args.lam is not None and args.lam.n != args.n:
        raise ValueError(f"Partition {args.lam} is a partition of {args.lam.n}, not of n = {args.n}.")
    partitions = None if args.all else [args.lam]
    frame = regime_table(args.n, args.k, partitions, cfg=cfg, caps=caps)
    rows = [{key: (_float(val) if isinstance(val, float) else val) for key, val in row.items()}
            for row in frame.to_dict(orient="records")]
    _emit(args, {"n": args.n, "k": args.k, "rows": rows}, frame)
    return 0


def _tv(args, caps, cfg, walk_cfg, workers) -> int:
    from pycutoff.mixing import exact_tv, tv_upper_bound
    _check_n_k(args.n, args.k, args.t)
    mode = "exact_ratios" if args.mode == "exact" else "bound_regimes"
    upper = tv_upper_bound(args.n, args.k, args.t, mode=mode, cfg=cfg, caps=caps)
    payload = {"n": args.n, "k": args.k, "t": args.t, "mode": args.mode, "tv_upper": _float(upper),
               "tv_exact": None, "tv_exact_float": None}
    if caps.allows("table_n_max", args.n):
        tv = exact_tv(args.n, CycleType.k_cycle(args.n, args.k), args.t, caps=caps)
        payload["tv_exact"] = format_rational(tv)
        payload["tv_exact_float"] = _float(float(tv))
    _emit(args, payload)
    return 0


def _cutoff(args, caps, cfg, walk_cfg, workers) -> int:
    from pycutoff.asymptotics import cutoff_time
    from pycutoff.mixing import cutoff_scan
    _check_n_k(args.n, args.k)
    if args.t_min < 0 or args.t_max < args.t_min - 1:
        raise ValueError(f"Invalid step range [{args.t_min}, {args.t_max}].")
    frame = cutoff_scan(args.n, CycleType.k_cycle(args.n, args.k), range(args.t_min, args.t_max + 1), caps=caps,
                        workers=workers, verbose=args.verbose)
    payload = {"n": args.n, "k": args.k, "cutoff_time": _float(cutoff_time(args.n, args.k)),
               "rows": frame.to_dict(orient="records")}
    if args.format == "text":
        frame = frame.drop(columns=["tv_exact"])
    _emit(args, payload, frame)
    return 0


def _lower_bound(args, caps, cfg, walk_cfg, workers) -> int:
    from pycutoff.mixing import moments_fixed_points, tv_lower_bound
    _check_n_k(args.n, args.k, args.t)
    j = (1 if args.k == 2 else 0) if args.j is None else args.j
    report = moments_fixed_points(args.n, args.k, j, args.t)
    bound = tv_lower_bound(args.n, args.k, j, args.t)
    _emit(args, {"n": args.n, "k": args.k, "j": j, "t": args.t, "mean": format_rational(report.mean),
                 "second_moment": format_rational(report.second_moment),
                 "variance": format_rational(report.variance), "tv_lower": _float(bound)})
    return 0


def _simulate(args, caps, cfg, walk_cfg, workers) -> int:
    from pycutoff.mixing import ExactWalk
    from pycutoff.walk import empirical_tv, run_walk
    updates = {key: getattr(args, key) for key in ("n", "k", "t", "samples", "seed")
               if getattr(args, key) is not None}
    walk_cfg = walk_cfg.update_template(workers=workers, **updates)
    hist = run_walk(walk_cfg, verbose=args.verbose)
    payload = {"n": walk_cfg.n, "k": walk_cfg.k, "t": walk_cfg.t, "samples": walk_cfg.samples,
               "seed": walk_cfg.seed, "workers": walk_cfg.workers, "empirical_tv": None,
               "histogram": hist.to_frame().to_dict(orient="records")}
    if caps.allows("table_n_max", walk_cfg.n):
        exact = ExactWalk(walk_cfg.n, CycleType.k_cycle(walk_cfg.n, walk_cfg.k), caps=caps).distribution(walk_cfg.t)
        payload["empirical_tv"] = _float(empirical_tv(hist, exact))
    frame = hist.to_frame()
    if args.format == "text":
        write_output(frame.to_string(index=False) + f"\nempirical_tv: {payload['empirical_tv']}", args.out)
    else:
        _emit(args, payload, frame)
    return 0


def _verify(args, caps, cfg, walk_cfg, workers) -> int:
    from pycutoff.verification import run_suite, suite_parameters
    kwargs = {"caps": caps, "cfg": cfg, "workers": workers}
    if args.n_max is not None:
        if "n_max" not in suite_parameters(args.suite):
            raise ValueError(f"Suite '{args.suite}' does not take --n-max.")
        kwargs["n_max"] = args.n_max
    report = run_suite(args.suite, verbose=args.verbose, **kwargs)
    _emit(args, report.to_dict())
    return 0 if report.ok else 1


commands = {"char-ratio": _char_ratio,
            "char-table": _char_table,
            "asym": _asym,
            "tv": _tv,
            "cutoff": _cutoff,
            "lower-bound": _lower_bound,
            "simulate": _simulate,
            "verify": _verify}


def main(argv: List[str] = None) -> int:
    """Parse `argv`, run the subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        caps, cfg, walk_cfg, workers = _load_configs(args)
        return commands[args.cmd](args, caps, cfg, walk_cfg, workers)
    except (ValueError, PyCutoffException) as e:
        print(f"pycutoff {args.cmd}: error: {e}", file=sys.stderr)
        return 2


def main_entry():
    sys.exit(main())
