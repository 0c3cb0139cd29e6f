"""Command-line orchestrator.

Subcommands:

  verify     Monte Carlo verification campaign: per rank, draw random
             states, build the X representative and its EPU, and check
             spectrum/concurrence/unitarity/transform residuals.
  sweep      Concurrence-versus-purity scatter data for the general, X
             (both eigenvector orderings), and MEMS families.
  surface    Concurrence landscape over the two spectral-ansatz angles for
             a chosen spectrum, with the predicted closed-form point.
  construct  Build an X state from a spectrum plus a concurrence (or a
             guaranteed-physical eta) and write it as JSON.
  epu        Read a density matrix from JSON, emit the unitary, the X
             state, and residual diagnostics.

Every sample owns seed ``base_seed + sample_index``, so runs are
deterministic and byte-identical for a fixed configuration and backend.
``XEPU_SEED`` provides the base seed when ``--seed`` is absent.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import serialize
from .ansatz import AnsatzParams, Ordering, alpha_star, assemble_rho_x, c_surface
from .concurrence import concurrence_general, concurrence_x, mems_concurrence
from .errors import QNegative, XepuError
from .linalg import backend_name
from .states import (
    DensityMatrix,
    Spectrum,
    SweepFamily,
    SweepRecord,
    _sample_with_rng,
    purity,
    sample_random,
    spectrum_from_hyperspherical,
    spectrum_of,
    validate,
    werner,
    werner_concurrence,
)
from .xfamily import build_epu, build_mems, build_x_state, parameterize, swap_variant

DEFAULT_SAMPLES = 10_000
DEFAULT_GRID = 201
DEFAULT_SEED = 1


@dataclass(frozen=True)
class Tolerances:
    # concurrence_unitary covers |C(U rho U^dag) - C(rho)|. Concurrence has
    # a square-root cusp at rank deficiency, so the unitary image's ~1e-16
    # diagonal dust moves it by up to ~sqrt(1e-16 * lambda) ~ 1.4e-8 at
    # ranks 2-3; the default carries margin over that floor.
    concurrence: float = 1e-9
    concurrence_unitary: float = 2e-8
    spectrum: float = 1e-10
    unitary: float = 1e-10
    transform: float = 1e-8
    xtol: float = 1e-10

    def as_dict(self) -> dict:
        return {
            "concurrence": self.concurrence,
            "concurrence_unitary": self.concurrence_unitary,
            "spectrum": self.spectrum,
            "unitary": self.unitary,
            "transform": self.transform,
            "xtol": self.xtol,
        }


@dataclass(frozen=True)
class RunConfig:
    command: str
    samples: int = DEFAULT_SAMPLES
    base_seed: int = DEFAULT_SEED
    ranks: tuple[int, ...] = (1, 2, 3, 4)
    tolerances: Tolerances = field(default_factory=Tolerances)
    output_path: str | None = None
    format: str = "csv"


# ---------------------------------------------------------------------------
# verify


def _residual_record(rho: DensityMatrix, xtol: float, target_c: float | None = None) -> dict:
    """Residuals of the full construction pipeline for one state.

    The constructed X state and its unitary image are measured with the
    closed form (both are X states within ``xtol``); the input state needs
    the general route. Evaluating near-rank-deficient states through the
    general route would add sqrt-of-dust noise ~1e-8 that says nothing
    about the construction itself.
    """
    spec0 = spectrum_of(rho)
    c0 = concurrence_general(rho).c
    res = build_epu(rho)
    spec_x = spectrum_of(res.rho_x)
    c_x = concurrence_x(res.rho_x, xtol).c
    rp = res.u @ rho.mat @ res.u.conj().T
    transformed = DensityMatrix(0.5 * (rp + rp.conj().T))
    c_u = concurrence_x(transformed, xtol).c
    c_direct = abs(c_x - c0)
    if target_c is not None:
        c_direct = max(c_direct, abs(c0 - target_c))
    return {
        "spectrum": float(np.max(np.abs(spec_x.lam - spec0.lam))),
        "concurrence": c_direct,
        "concurrence_unitary": abs(c_u - c0),
        "unitary": res.unitarity_residual,
        "transform": res.transform_residual,
    }


_VERIFY_CHECKS = ("spectrum", "concurrence", "concurrence_unitary", "unitary", "transform")


def _stats_entry() -> dict:
    return {f"max_{k}": 0.0 for k in _VERIFY_CHECKS} | {
        f"mean_{k}": 0.0 for k in _VERIFY_CHECKS
    } | {"samples": 0, "errors": 0, "first_error": None}


def _fold(stats: dict, rec: dict) -> None:
    stats["samples"] += 1
    for k in _VERIFY_CHECKS:
        stats[f"max_{k}"] = max(stats[f"max_{k}"], rec[k])
        stats[f"mean_{k}"] += rec[k]


def _close_stats(stats: dict, tol: Tolerances) -> bool:
    n = max(stats["samples"], 1)
    for k in _VERIFY_CHECKS:
        stats[f"mean_{k}"] /= n
    ok = stats["errors"] == 0 and all(
        stats[f"max_{k}"] <= getattr(tol, k) for k in _VERIFY_CHECKS
    )
    stats["passed"] = ok
    return ok


def cmd_verify(cfg: RunConfig, werner_p: float | None = None) -> dict:
    """Run the verification campaign; returns the report dict."""
    tol = cfg.tolerances
    report: dict = {
        "command": "verify",
        "backend": backend_name(),
        "base_seed": cfg.base_seed,
        "samples_per_rank": cfg.samples,
        "tolerances": tol.as_dict(),
        "per_rank": {},
    }
    passed = True
    if werner_p is not None:
        stats = _stats_entry()
        rho = werner(werner_p)
        _fold(stats, _residual_record(rho, tol.xtol, target_c=werner_concurrence(werner_p)))
        passed = _close_stats(stats, tol)
        report["per_rank"][f"werner({werner_p!r})"] = stats
    else:
        index = 0
        for rank in cfg.ranks:
            stats = _stats_entry()
            for _ in range(cfg.samples):
                seed = cfg.base_seed + index
                index += 1
                try:
                    _fold(stats, _residual_record(sample_random(rank, seed), tol.xtol))
                except XepuError as exc:
                    stats["errors"] += 1
                    if stats["first_error"] is None:
                        stats["first_error"] = f"seed {seed}: {exc}"
            passed = _close_stats(stats, tol) and passed
            report["per_rank"][str(rank)] = stats
    report["passed"] = passed
    return report


def _print_verify(report: dict, out) -> None:
    for key, s in report["per_rank"].items():
        fields = " ".join(f"max_{k}={s['max_' + k]:.3e}" for k in _VERIFY_CHECKS)
        status = "ok" if s["passed"] else "FAIL"
        print(f"rank {key}: samples={s['samples']} {fields} [{status}]", file=out)
    print(f"verify: {'PASS' if report['passed'] else 'FAIL'}", file=out)


def _verify_csv(report: dict) -> str:
    cols = (
        ["rank", "samples", "errors"]
        + [f"max_{k}" for k in _VERIFY_CHECKS]
        + [f"mean_{k}" for k in _VERIFY_CHECKS]
        + ["passed"]
    )
    lines = [",".join(cols)]
    for key, s in report["per_rank"].items():
        row = [key, s["samples"], s["errors"]]
        row += [s[f"max_{k}"] for k in _VERIFY_CHECKS]
        row += [s[f"mean_{k}"] for k in _VERIFY_CHECKS]
        row += [str(s["passed"]).lower()]
        lines.append(serialize.csv_row(row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# sweep

_FAMILY_ORDER = (
    SweepFamily.GENERAL,
    SweepFamily.X_PAIRED,
    SweepFamily.X_INTERLEAVED,
    SweepFamily.MEMS,
)

_FAMILY_ORDERING = {
    SweepFamily.X_PAIRED: Ordering.PAIRED,
    SweepFamily.X_INTERLEAVED: Ordering.INTERLEAVED,
}


def sweep_sample(family: SweepFamily, rank: int, seed: int, xtol: float) -> SweepRecord:
    """One scatter row. X-family rows reuse the sampled state's spectrum
    and draw the two angles uniformly from the same per-sample stream."""
    rng = np.random.Generator(np.random.PCG64(seed))
    rho = _sample_with_rng(rank, rng)
    if family is SweepFamily.GENERAL:
        p, c = purity(rho), concurrence_general(rho).c
    elif family is SweepFamily.MEMS:
        dm = build_mems(spectrum_of(rho))
        p, c = purity(dm), concurrence_x(dm, xtol).c
    else:
        spec = spectrum_of(rho)
        alpha, beta = rng.uniform(0.0, np.pi / 2, size=2)
        dm = assemble_rho_x(spec, AnsatzParams(alpha, beta, _FAMILY_ORDERING[family]))
        p, c = purity(dm), concurrence_x(dm, xtol).c
    return SweepRecord(family=family, rank=rank, purity=p, concurrence=c, seed=seed)


def cmd_sweep(cfg: RunConfig) -> list[SweepRecord]:
    records = []
    index = 0
    for family in _FAMILY_ORDER:
        for rank in cfg.ranks:
            for _ in range(cfg.samples):
                records.append(
                    sweep_sample(family, rank, cfg.base_seed + index, cfg.tolerances.xtol)
                )
                index += 1
    records.sort(key=lambda r: (r.family.value, r.rank, r.seed))
    return records


def _sweep_csv(records: list[SweepRecord]) -> str:
    lines = ["family,rank,purity,concurrence,seed"]
    for r in records:
        lines.append(
            serialize.csv_row([r.family.value, r.rank, r.purity, r.concurrence, r.seed])
        )
    return "\n".join(lines) + "\n"


def _sweep_json(records: list[SweepRecord], cfg: RunConfig) -> dict:
    return {
        "meta": {
            "command": "sweep",
            "backend": backend_name(),
            "base_seed": cfg.base_seed,
            "samples": cfg.samples,
            "ranks": list(cfg.ranks),
        },
        "records": [
            {
                "family": r.family.value,
                "rank": r.rank,
                "purity": r.purity,
                "concurrence": r.concurrence,
                "seed": r.seed,
            }
            for r in records
        ],
    }


# ---------------------------------------------------------------------------
# surface


def cmd_surface(cfg: RunConfig, spec: Spectrum, target_c: float, grid_n: int,
                source: dict) -> dict:
    alphas = np.linspace(0.0, np.pi / 2, grid_n)
    betas = np.linspace(0.0, np.pi / 2, grid_n)
    grid = [
        [c_surface(spec, float(a), float(b)) for b in betas] for a in alphas
    ]
    meta = {
        "command": "surface",
        "backend": backend_name(),
        "lambda": spec.lam.tolist(),
        "target_c": target_c,
        "grid": grid_n,
    }
    meta.update(source)
    try:
        a_star = alpha_star(spec, target_c)
        meta["predicted"] = {
            "alpha": a_star,
            "beta": 0.0,
            "c": c_surface(spec, a_star, 0.0),
        }
    except QNegative as exc:
        meta["predicted"] = None
        meta["q_negative"] = exc.q
    return {"meta": meta, "alpha": alphas.tolist(), "beta": betas.tolist(), "c": grid}


def _surface_csv(data: dict) -> str:
    lines = []
    for k, v in data["meta"].items():
        lines.append(f"# {k} = {json.dumps(v) if not isinstance(v, float) else serialize.fmt_float(v)}")
    lines.append("alpha,beta,c")
    for i, a in enumerate(data["alpha"]):
        for j, b in enumerate(data["beta"]):
            lines.append(serialize.csv_row([a, b, data["c"][i][j]]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# construct / epu


def cmd_construct(cfg: RunConfig, spec: Spectrum, c: float | None, eta: float | None,
                  swap: bool) -> dict:
    if eta is not None:
        xc = parameterize(spec, eta)
    else:
        xc = build_x_state(spec, c)
    dm = swap_variant(xc) if swap else xc.rho_x
    out = serialize.matrix_to_obj(dm.mat)
    out["meta"] = {
        "command": "construct",
        "lambda": xc.spec.lam.tolist(),
        "c": xc.c,
        "eta": eta,
        "q": xc.q,
        "omega": xc.omega,
        "swap": swap,
        "ceiling": mems_concurrence(spec),
    }
    return out


def cmd_epu(cfg: RunConfig, rho_obj) -> tuple[dict, bool]:
    rho = validate(serialize.obj_to_matrix(rho_obj))
    res = build_epu(rho)
    tol = cfg.tolerances
    ok = (
        res.unitarity_residual <= tol.unitary
        and res.transform_residual <= tol.transform
    )
    bundle = {
        "u": serialize.matrix_to_obj(res.u),
        "rho_x": serialize.matrix_to_obj(res.rho_x.mat),
        "residuals": {
            "unitarity": res.unitarity_residual,
            "transform": res.transform_residual,
        },
        "meta": {
            "command": "epu",
            "backend": backend_name(),
            "tolerances": tol.as_dict(),
            "passed": ok,
        },
    }
    return bundle, ok


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _parse_ranks(text: str) -> tuple[int, ...]:
    try:
        ranks = sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad rank list {text!r}")
    if not ranks or any(r not in (1, 2, 3, 4) for r in ranks):
        raise argparse.ArgumentTypeError("ranks must be a non-empty subset of 1,2,3,4")
    return tuple(ranks)


def _parse_floats(text: str, n: int, what: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad {what} {text!r}")
    if len(vals) != n:
        raise argparse.ArgumentTypeError(f"{what} needs {n} comma-separated values")
    return vals


def _spectrum_from_lambda(vals: list[float]) -> Spectrum:
    lam = np.array(sorted(vals, reverse=True), dtype=np.float64)
    if lam[-1] < 0 or abs(lam.sum() - 1.0) > 1e-10:
        raise XepuError(
            f"lambda values must be nonnegative and sum to 1 (got sum {lam.sum()!r})"
        )
    return Spectrum(lam / lam.sum())


def _default_seed() -> int:
    env = os.environ.get("XEPU_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise XepuError(f"XEPU_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                   help="samples per rank (and per family for sweep)")
    p.add_argument("--seed", type=int, default=None,
                   help="base seed (default: XEPU_SEED env var, else 1)")
    p.add_argument("--ranks", type=_parse_ranks, default=(1, 2, 3, 4),
                   help="comma-separated subset of 1,2,3,4")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--tol-concurrence", type=float, default=1e-9)
    p.add_argument("--tol-spectrum", type=float, default=1e-10)
    p.add_argument("--tol-unitary", type=float, default=1e-10)
    p.add_argument("--tol-transform", type=float, default=1e-8)
    p.add_argument("--xtol", type=float, default=1e-10,
                   help="off-X magnitude tolerance for the X-state check")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="xepu",
        description="Two-qubit X states of any spectrum and concurrence, "
        "their entanglement-preserving unitaries, and Monte Carlo "
        "verification sweeps.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="EPU verification campaign")
    _add_common(v)
    v.add_argument("--werner", type=float, default=None, metavar="P",
                   help="verify the analytic Werner fixture instead of sampling")

    s = sub.add_parser("sweep", help="concurrence-versus-purity scatter data")
    _add_common(s)

    f = sub.add_parser("surface", help="concurrence landscape over the ansatz angles")
    _add_common(f)
    f.add_argument("--grid", type=int, default=DEFAULT_GRID, help="grid points per axis")
    f.add_argument("--lambda", dest="lam", default=None,
                   help="fixture spectrum, e.g. 0.85,0.05,0.05,0.05")
    f.add_argument("--concurrence", type=float, default=None,
                   help="target concurrence (fixture mode)")
    f.add_argument("--rank", type=int, default=4,
                   help="rank of the drawn state in seed mode")

    c = sub.add_parser("construct", help="build an X state from spectrum plus C or eta")
    _add_common(c)
    c.add_argument("--lambda", dest="lam", default=None,
                   help="spectrum values, sorted descending automatically")
    c.add_argument("--angles", default=None,
                   help="three hyperspherical angles in [0, pi/2] instead of --lambda")
    c.add_argument("--concurrence", type=float, default=None)
    c.add_argument("--eta", type=float, default=None,
                   help="guaranteed-physical concurrence fraction in [0, 1]")
    c.add_argument("--swap", action="store_true",
                   help="apply the local corner-to-center swap variant")

    e = sub.add_parser("epu", help="EPU of a density matrix read from JSON")
    _add_common(e)
    e.add_argument("input", help="path to a {\"re\": ..., \"im\": ...} JSON file")

    return p


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _config_from(args) -> RunConfig:
    tol = Tolerances(
        concurrence=args.tol_concurrence,
        concurrence_unitary=20.0 * args.tol_concurrence,
        spectrum=args.tol_spectrum,
        unitary=args.tol_unitary,
        transform=args.tol_transform,
        xtol=args.xtol,
    )
    return RunConfig(
        command=args.command,
        samples=args.samples,
        base_seed=args.seed if args.seed is not None else _default_seed(),
        ranks=args.ranks,
        tolerances=tol,
        output_path=args.out,
        format=args.format or "csv",
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from(args)
        if args.command == "verify":
            report = cmd_verify(cfg, werner_p=args.werner)
            _print_verify(report, sys.stdout)
            if cfg.output_path is not None:
                if (args.format or "json") == "csv":
                    _emit(_verify_csv(report), cfg.output_path)
                else:
                    _emit(serialize.dumps(report) + "\n", cfg.output_path)
            return 0 if report["passed"] else 1

        if args.command == "sweep":
            records = cmd_sweep(cfg)
            if cfg.format == "json":
                _emit(serialize.dumps(_sweep_json(records, cfg)) + "\n", cfg.output_path)
            else:
                _emit(_sweep_csv(records), cfg.output_path)
            return 0

        if args.command == "surface":
            if args.lam is not None:
                if args.concurrence is None:
                    raise XepuError("--lambda requires --concurrence")
                spec = _spectrum_from_lambda(_parse_floats(args.lam, 4, "lambda"))
                target_c = args.concurrence
                source = {"source": "fixture"}
            else:
                rho = sample_random(args.rank, cfg.base_seed)
                spec = spectrum_of(rho)
                target_c = concurrence_general(rho).c
                source = {"source": "seed", "seed": cfg.base_seed, "rank": args.rank}
            data = cmd_surface(cfg, spec, target_c, args.grid, source)
            fmt = args.format or "json"
            if fmt == "json":
                _emit(serialize.dumps(data) + "\n", cfg.output_path)
            else:
                _emit(_surface_csv(data), cfg.output_path)
            return 0

        if args.command == "construct":
            if (args.lam is None) == (args.angles is None):
                raise XepuError("construct needs exactly one of --lambda or --angles")
            if (args.concurrence is None) == (args.eta is None):
                raise XepuError("construct needs exactly one of --concurrence or --eta")
            if args.lam is not None:
                spec = _spectrum_from_lambda(_parse_floats(args.lam, 4, "lambda"))
            else:
                spec = spectrum_from_hyperspherical(_parse_floats(args.angles, 3, "angles"))
            out = cmd_construct(cfg, spec, args.concurrence, args.eta, args.swap)
            _emit(serialize.dumps(out) + "\n", cfg.output_path)
            return 0

        if args.command == "epu":
            with open(args.input) as fh:
                obj = json.load(fh)
            bundle, ok = cmd_epu(cfg, obj)
            _emit(serialize.dumps(bundle) + "\n", cfg.output_path)
            return 0 if ok else 1

        raise AssertionError(f"unhandled command {args.command!r}")
    except XepuError as exc:
        print(f"xepu {args.command}: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"xepu {args.command}: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
