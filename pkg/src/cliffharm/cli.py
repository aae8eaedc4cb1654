"""Command-line front end.

Subcommands: verify (run suites), transform (apply operators to field
files), plemelj and commutant (single-experiment shortcuts), info.
Exit codes: 0 all cases passed, 1 at least one failure, 2 usage or I/O
error.  Config precedence is CLI flags > config file > defaults; the
environment variable CLIFFORD_HILBERT_SEED supplies the seed when neither
flag nor file sets one.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import algebra as alg
from . import fields as fl
from . import representations as rep
from . import spin as sp
from . import suites as su
from . import transforms as tr
from ._version import __version__


def _read_config_file(path):
    """Flat key=value lines; '#' starts a comment; tol.<case>=v loosens one case."""
    opts = {}
    tols = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise su.UsageError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if key.startswith("tol."):
                tols[key[4:]] = val
            else:
                opts[key] = val
    return opts, tols


def _build_config(args, suite_override=None) -> su.SuiteConfig:
    file_opts, file_tols = ({}, {})
    if getattr(args, "config", None):
        file_opts, file_tols = _read_config_file(args.config)

    def pick(flag_value, key, cast, default):
        if flag_value is not None:
            return flag_value
        if key in file_opts:
            try:
                return cast(file_opts[key])
            except ValueError as err:
                raise su.UsageError(f"bad config value for {key}: {file_opts[key]!r}") from err
        return default

    seed = pick(getattr(args, "seed", None), "seed", int, None)
    if seed is None:
        env = os.environ.get("CLIFFORD_HILBERT_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError as err:
                raise su.UsageError(f"CLIFFORD_HILBERT_SEED must be an integer, got {env!r}") from err
    if seed is None:
        seed = su.DEFAULT_SEED

    tols = {}
    for k, v in file_tols.items():
        try:
            tols[k] = float(v)
        except ValueError as err:
            raise su.UsageError(f"bad tolerance for {k}: {v!r}") from err
    for item in getattr(args, "tol", None) or []:
        if "=" not in item:
            raise su.UsageError(f"--tol expects CASE=VALUE, got {item!r}")
        k, _, v = item.partition("=")
        try:
            tols[k.strip()] = float(v)
        except ValueError as err:
            raise su.UsageError(f"bad tolerance for {k}: {v!r}") from err

    suite = suite_override or pick(getattr(args, "suite", None), "suite", str, "all")
    return su.SuiteConfig(
        suite=suite,
        n=pick(getattr(args, "n", None), "n", int, None),
        N=pick(getattr(args, "N", None), "N", int, None),
        L=pick(getattr(args, "L", None), "L", float, None),
        seed=seed,
        mode=pick(getattr(args, "mode", None), "mode", str, None),
        tol_overrides=tols,
        parallel=pick(getattr(args, "parallel", None), "parallel", int, 1),
        out=pick(getattr(args, "out", None), "out", str, None),
    )


def _run_verify(args, suite_override=None) -> int:
    cfg = _build_config(args, suite_override)
    results, extras = su.run_suite(cfg)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite}/{r.case} residual={r.residual:.3e} tol={r.tol:g}")
    for label, note in (extras.get("commutant_notes") or {}).items():
        print(f"note {label}: {note}")
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} cases passed")
    if cfg.out:
        su.write_report(cfg.out, results, cfg.seed)
    if getattr(args, "emit_plots", None):
        os.makedirs(args.emit_plots, exist_ok=True)
        for path in su.emit_plots(args.emit_plots, results, extras):
            print(f"wrote {path}")
    return 1 if failed else 0


def _parse_op(opspec: str):
    """Operator spec, split on the first ':' into head and argument."""
    head, _, rest = opspec.partition(":")
    if head == "hilbert":
        return tr.hilbert
    if head == "riesz":
        try:
            j = int(rest)
        except ValueError as err:
            raise su.UsageError(f"riesz needs an integer axis, got {rest!r}") from err
        return lambda f: tr.riesz(j, f)
    if head == "chi":
        if rest not in ("+", "-"):
            raise su.UsageError(f"chi needs + or -, got {rest!r}")
        return lambda f: tr.hardy_project(rest, f)
    if head in ("poisson", "cauchy"):
        try:
            x0 = float(rest)
        except ValueError as err:
            raise su.UsageError(f"{head} needs a height x0, got {rest!r}") from err
        if head == "poisson":
            return lambda f: tr.poisson_extend(f, x0)
        return lambda f: tr.cauchy_extend(f, x0)
    if head == "natrep":
        try:
            g = sp.parse_group_element(rest)
        except (ValueError, IndexError) as err:
            raise su.UsageError(f"natrep needs a serialized group element: {err}") from err
        return lambda f: rep.natural_rep(g, f)
    if head == "project":
        try:
            sid = rep.parse_subspace_id(rest)
        except (KeyError, ValueError):
            sid = None
        if sid is not None:
            return lambda f: rep.subspace_project(sid, f)
        try:
            ideal = alg.IdealId[rest]
        except KeyError as err:
            raise su.UsageError(f"unknown subspace or ideal id {rest!r}") from err
        return lambda f: fl.field_from_values(f.spec, f.value_algebra,
                                              alg.ideal_project(f.data, ideal), f.meta)
    raise su.UsageError(
        f"unknown operation {head!r}; expected hilbert | riesz:j | chi:+|- | "
        f"poisson:x0 | cauchy:x0 | natrep:g | project:id"
    )


def _run_transform(args) -> int:
    op = _parse_op(args.op)
    f = fl.read_field(args.input)
    g = op(f)
    fl.write_field(g, args.output)
    print(f"wrote {args.output}")
    return 0


def _run_info() -> int:
    print(f"cliffharm {__version__}")
    print(f"python {sys.version.split()[0]}, numpy {np.__version__}")
    print(f"default seed {su.DEFAULT_SEED} (override: --seed or CLIFFORD_HILBERT_SEED)")
    print("suites: " + ", ".join(su.SUITE_NAMES) + ", all")
    print("value algebras: " + ", ".join(sorted(alg.ALGEBRAS)))
    print("subspace ids: " + ", ".join(s.value for s in rep.SubspaceId))
    print("ideal ids: " + ", ".join(i.name for i in alg.IdealId))
    print("field files: .json (text) or CLF1 binary (any other extension)")
    return 0


def _add_common(q, with_suite: bool) -> None:
    if with_suite:
        q.add_argument("--suite", default=None, help="suite name or 'all' (default all)")
    q.add_argument("--n", type=int, default=None, help="restrict to dimension 2 or 3")
    q.add_argument("--N", type=int, default=None, help="grid points per axis (power of two)")
    q.add_argument("--L", type=float, default=None, help="period length")
    q.add_argument("--seed", type=int, default=None, help="random seed")
    q.add_argument("--mode", default=None, help="exact | spectral (representation checks)")
    q.add_argument("--out", default=None, help="write JSON-lines report here")
    q.add_argument("--config", default=None, help="flat key=value config file")
    q.add_argument("--tol", action="append", default=None, metavar="CASE=VALUE",
                   help="loosen one case tolerance (repeatable)")
    q.add_argument("--parallel", type=int, default=None, help="run suites concurrently")
    q.add_argument("--emit-plots", dest="emit_plots", default=None, metavar="DIR",
                   help="write CSV companions for plotting")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cliffharm",
        description="Clifford-algebra Hilbert transform toolkit: verification suites and field transforms.",
    )
    p.add_argument("--version", action="version", version=f"cliffharm {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    _add_common(v, with_suite=True)

    t = sub.add_parser("transform", help="apply an operator to a stored field")
    t.add_argument("op", help="hilbert | riesz:j | chi:+|- | poisson:x0 | cauchy:x0 | natrep:g | project:id")
    t.add_argument("input", help="input field file")
    t.add_argument("output", help="output field file")

    pl = sub.add_parser("plemelj", help="boundary-limit experiment (verify --suite plemelj)")
    _add_common(pl, with_suite=False)

    cm = sub.add_parser("commutant", help="commutant-dimension experiment (verify --suite commutant)")
    _add_common(cm, with_suite=False)

    sub.add_parser("info", help="print version and registry information")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "plemelj":
            return _run_verify(args, suite_override="plemelj")
        if args.command == "commutant":
            return _run_verify(args, suite_override="commutant")
        if args.command == "transform":
            return _run_transform(args)
        if args.command == "info":
            return _run_info()
    except su.UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
