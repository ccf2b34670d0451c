"""Command-line interface.

One binary with subcommands: compute entropies and discord on state
files, sweep the Tsallis exponent, run the counterexample search, run
property suites, and generate random objects.  Exit codes: 0 success,
1 suite failure, 2 malformed input or config, 3 invariant violation.
All runs print the resolved seed (stderr) for reproducibility; outputs
are written atomically, so errors never leave partial files.
"""

import argparse
import sys

import numpy as np

from . import checks, serialize
from .entropy import EntropyKind, entropy
from .errors import ConfigError, FirmsaError, SchemaError
from .infotheory import ConditionReport, discord, holevo_measured, mutual_information
from .search import SearchConfig, run_search, sweep_q
from .states import make_rng, random_channel, random_density, random_povm

_KIND_ALIASES = {
    "vn": "von_neumann",
    "von_neumann": "von_neumann",
    "renyi": "renyi",
    "tsallis": "tsallis",
    "quadratic": "quadratic",
}


def _kind_from_args(args) -> EntropyKind:
    family = _KIND_ALIASES[args.kind]
    if family in ("renyi", "tsallis"):
        if args.q is None:
            raise ConfigError(f"--kind {args.kind} requires --q")
        # The CLI is an exploration surface: Renyi outside its concave
        # range is allowed here, the library type records the override.
        return EntropyKind(family, args.q, allow_nonconcave=True)
    if args.q is not None:
        raise ConfigError(f"--kind {args.kind} takes no --q")
    return EntropyKind(family)


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(p) for p in text.lower().split("x"))
    except ValueError as exc:
        raise ConfigError(f"--dims must look like '4' or '2x2', got {text!r}") from exc
    if not dims or any(d < 1 for d in dims):
        raise ConfigError(f"--dims entries must be positive, got {text!r}")
    return dims


def _emit(args, text: str) -> None:
    if args.out:
        serialize.atomic_write_text(args.out, text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _load_state(path: str):
    return serialize.state_from_obj(serialize.load_json_file(path))


def _load_povm(path: str):
    return serialize.povm_from_obj(serialize.load_json_file(path))


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------

def cmd_entropy(args) -> int:
    rho = _load_state(args.state)
    kind = _kind_from_args(args)
    value = entropy(kind, rho)
    _emit(args, f"{value:.15g}\n")
    return 0


def cmd_discord(args) -> int:
    rho = _load_state(args.state)
    povm = _load_povm(args.povm)
    kind = _kind_from_args(args)
    mi = mutual_information(kind, rho)
    chi = holevo_measured(kind, rho, povm)
    report = ConditionReport("Thm2.i", lhs=chi, rhs=mi, tolerance=args.tolerance)
    payload = report.to_json_dict()
    payload.update(
        {
            "kind": kind.family,
            "q": kind.q,
            "mutual_information": mi,
            "holevo_measured": chi,
            "discord": mi - chi,
        }
    )
    _emit(args, serialize.dumps(payload))
    return 0


def cmd_sweep(args) -> int:
    rho = _load_state(args.state)
    povm = _load_povm(args.povm)
    if args.q_steps < 1:
        raise ConfigError("--q-steps must be >= 1")
    grid = np.linspace(args.q_from, args.q_to, args.q_steps)
    result = sweep_q(rho, povm, grid)
    if args.format == "json":
        _emit(args, serialize.dumps(result.to_json_dict()))
    else:
        _emit(args, result.to_csv())
    return 0


def cmd_search(args) -> int:
    kind = _kind_from_args(args)
    q_range = None
    if args.q_from is not None or args.q_to is not None:
        if args.q_from is None or args.q_to is None:
            raise ConfigError("--q-from and --q-to must be given together")
        q_range = (args.q_from, args.q_to)
    dims = _parse_dims(args.dims)
    if len(dims) != 2:
        raise ConfigError(f"search needs bipartite --dims like 2x2, got {args.dims!r}")
    cfg = SearchConfig(
        objective=args.objective,
        kind=kind,
        dims=dims,
        povm_outcomes=args.outcomes,
        q_range=q_range,
        restarts=args.restarts,
        local_steps=args.steps,
        seed=args.seed,
    )
    outcome = run_search(cfg)
    print(
        f"search: objective={cfg.objective} kind={kind.label()} best={outcome.best_value:.6e} "
        f"restarts={cfg.restarts} steps={cfg.local_steps} wall={outcome.wall_time:.2f}s",
        file=sys.stderr,
    )
    if outcome.certificate is not None:
        _emit(args, serialize.dumps(outcome.certificate.to_json_dict()))
    else:
        _emit(
            args,
            serialize.dumps(
                {
                    "found": False,
                    "note": "no violation found at this budget (this is not a non-existence claim)",
                    "objective": cfg.objective,
                    "kind": {"family": kind.family, "q": kind.q},
                    "best_value": outcome.best_value,
                    "budget": {
                        "dims": list(cfg.dims),
                        "povm_outcomes": cfg.povm_outcomes,
                        "restarts": cfg.restarts,
                        "local_steps": cfg.local_steps,
                        "seed": cfg.seed,
                    },
                }
            ),
        )
    return 0


def cmd_check(args) -> int:
    names = checks.SUITE_NAMES if args.suite == "all" else (args.suite,)
    report = checks.run_suites(names, args.trials, args.seed)
    for suite in report["suites"]:
        for c in suite["checks"]:
            flag = "pass" if c["pass"] else "FAIL"
            print(f"[{flag}] {c['label']}: worst gap {c['worst_gap']:.3e} over {c['trials']} trials", file=sys.stderr)
    _emit(args, serialize.dumps(report))
    return 0 if report["pass"] else 1


def cmd_gen(args) -> int:
    rng = make_rng(args.seed)
    dims = _parse_dims(args.dims)
    total = int(np.prod(dims))
    if args.what == "state":
        rank = args.rank if args.rank else total
        obj = random_density(total, rank, rng, dims=dims if len(dims) > 1 else None)
        payload = serialize.state_to_obj(obj)
        summary = f"state dims={list(obj.dims)} rank<={rank} trace={np.trace(obj.mat).real:.12f}"
    elif args.what == "povm":
        if len(dims) != 1:
            raise ConfigError("--what povm takes a single dimension, e.g. --dims 2")
        obj = random_povm(dims[0], args.outcomes, rng, rank1=args.rank1)
        payload = serialize.povm_to_obj(obj)
        dev = float(np.max(np.abs(sum(obj.elements) - np.eye(obj.dim))))
        summary = f"povm dim={obj.dim} outcomes={obj.n_outcomes} sum-to-identity dev={dev:.3e}"
    else:
        if len(dims) != 2:
            raise ConfigError("--what channel takes --dims IN x OUT, e.g. --dims 2x3")
        obj = random_channel(dims[0], dims[1], args.kraus, rng)
        payload = serialize.channel_to_obj(obj)
        total_dev = float(
            np.max(np.abs(sum(k.conj().T @ k for k in obj.kraus) - np.eye(obj.d_in)))
        )
        summary = f"channel {obj.d_in}->{obj.d_out} kraus={len(obj.kraus)} completeness dev={total_dev:.3e}"
    _emit(args, serialize.dumps(payload))
    print(f"ok: {summary}", file=sys.stderr)
    return 0


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="base RNG seed (printed on every run)")
    p.add_argument("--tolerance", type=float, default=1e-9, help="inequality tolerance for reports")
    p.add_argument("--out", type=str, default=None, help="output path (atomic write); default stdout")
    p.add_argument("--format", choices=("json", "csv"), default=None, help="output format where applicable")


def _add_kind(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=sorted(_KIND_ALIASES), default="vn")
    p.add_argument("--q", type=float, default=None, help="exponent for renyi/tsallis")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="firmsa",
        description="Generalized quantum entropies, Holevo quantities, discord, and violation searches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="entropy of a state file")
    p.add_argument("state")
    _add_kind(p)
    _add_common(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("discord", help="mutual information, measured Holevo quantity, discord")
    p.add_argument("state")
    p.add_argument("povm")
    _add_kind(p)
    _add_common(p)
    p.set_defaults(func=cmd_discord)

    p = sub.add_parser("sweep", help="discord versus the Tsallis exponent, as CSV")
    p.add_argument("state")
    p.add_argument("povm")
    p.add_argument("--q-from", type=float, required=True)
    p.add_argument("--q-to", type=float, required=True)
    p.add_argument("--q-steps", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("search", help="randomized search for FSA/SA violations")
    p.add_argument("--objective", choices=("fsa", "sa"), required=True)
    _add_kind(p)
    p.add_argument("--q-from", type=float, default=None, help="scan q inside this window instead of fixing it")
    p.add_argument("--q-to", type=float, default=None)
    p.add_argument("--dims", type=str, default="2x2")
    p.add_argument("--outcomes", type=int, default=2)
    p.add_argument("--restarts", type=int, default=40)
    p.add_argument("--steps", type=int, default=1200)
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check", help="randomized property suites")
    p.add_argument("--suite", choices=("all",) + checks.SUITE_NAMES, default="all")
    p.add_argument("--trials", type=int, default=200)
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a random state/POVM/channel file")
    p.add_argument("--what", choices=("state", "povm", "channel"), required=True)
    p.add_argument("--dims", type=str, required=True)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--outcomes", type=int, default=2)
    p.add_argument("--rank1", action="store_true")
    p.add_argument("--kraus", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    print(f"seed: {args.seed}", file=sys.stderr)
    try:
        return args.func(args)
    except (SchemaError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FirmsaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
