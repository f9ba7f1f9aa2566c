"""Command-line front end: classify tubes, tabulate bands, sweep flux, verify.

Deterministic CSV/JSON output suitable for regression diffing.  Exit codes:
0 success, 1 verification failure, 2 invalid input, 3 numerical or I/O
failure.
"""

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import bands, oracle, tube
from .honeycomb import bond_length_scale, is_site, nearest_neighbors, next_nearest_neighbors, nu

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


@dataclass
class RunConfig:
    gamma: float = 1.0
    epsilon: float = 0.0
    bond_length: float = 1.44
    resolution: int = 4096
    tolerance: float = 1e-8
    format: str = "json"
    out: str = None

    def __post_init__(self):
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.bond_length <= 0:
            raise ValueError("bond-length must be positive")
        if self.resolution < 64:
            raise ValueError("resolution must be >= 64")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")

    @property
    def a(self):
        return bond_length_scale(self.bond_length)


class InputError(ValueError):
    pass


def _parse_triple(text):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc
    if len(parts) != 3:
        raise InputError(f"expected three components, got {text!r}")
    return parts


def _load_config(args):
    values = {}
    if args.config:
        with open(args.config) as fh:
            raw = json.load(fh)
        allowed = set(RunConfig.__dataclass_fields__)
        unknown = set(raw) - allowed
        if unknown:
            raise InputError(f"unknown config keys: {sorted(unknown)}")
        values.update(raw)
    for key in ("gamma", "epsilon", "bond_length", "resolution", "tolerance",
                "format", "out"):
        val = getattr(args, key, None)
        if val is not None:
            values[key] = val
    try:
        return RunConfig(**values)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _emit_json(obj, cfg):
    text = json.dumps(obj, indent=2) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_csv(header, rows, cfg):
    def write(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([f"{x:.12g}" if isinstance(x, float) else x for x in row])

    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            write(fh)
    else:
        write(sys.stdout)


def cmd_classify(args, cfg):
    c = tube.validate_chirality(_parse_triple(args.c))
    sym = tube.tube_symmetry(c)
    _emit_json({
        "c": list(c),
        "class": tube.tube_class(c),
        "n": sym.n,
        "c_prime": list(sym.c_prime),
        "R": sym.R,
        "b": list(sym.b),
        "q": sym.q,
        "q_prime": sym.q_prime,
        "omega": list(sym.omega),
        "delta": sym.line_spacing(cfg.a),
        "diameter_angstrom": tube.diameter(c, cfg.a),
        "metallic": bands.is_metallic(c),
    }, cfg)
    return EXIT_OK


def cmd_bands(args, cfg):
    c = tube.validate_chirality(_parse_triple(args.c))
    sym = tube.tube_symmetry(c)
    p = bands.uniform_params(cfg.gamma, cfg.epsilon, cfg.a)
    rows = []
    for m in range(sym.n):
        t = bands.band_table(c, sym, m, cfg.resolution, p)
        for kappa, emin, eplus in zip(t.kappa, t.E_minus, t.E_plus):
            rows.append((m, float(kappa), float(emin), float(eplus)))
    _emit_csv(("m", "kappa", "E_minus", "E_plus"), rows, cfg)
    return EXIT_OK


def _gap_params(c, cfg, beta):
    if beta:
        return bands.magnetic_params(cfg.gamma, beta, c, cfg.a, epsilon=cfg.epsilon)
    return bands.uniform_params(cfg.gamma, cfg.epsilon, cfg.a)


def cmd_gap(args, cfg):
    c = tube.validate_chirality(_parse_triple(args.c))
    sym = tube.tube_symmetry(c)
    beta = args.beta or 0.0
    res = bands.band_gap(c, sym, _gap_params(c, cfg, beta), resolution=cfg.resolution)
    _emit_json({
        "gap": res.gap,
        "argmin_m": res.argmin_m,
        "argmin_k": list(res.argmin_k),
        "metallic_by_theorem": res.metallic_by_theorem,
        "beta": beta,
    }, cfg)
    return EXIT_OK


def cmd_magsweep(args, cfg):
    c = tube.validate_chirality(_parse_triple(args.c))
    sym = tube.tube_symmetry(c)
    if args.samples < 2:
        raise InputError(f"samples must be >= 2, got {args.samples}")
    if args.periods < 1:
        raise InputError(f"periods must be >= 1, got {args.periods}")
    period = bands.flux_period(c, cfg.a)
    total = args.periods * (args.samples - 1) + 1
    betas = np.linspace(0.0, args.periods * period, total)
    sweep = bands.gap_vs_beta(c, sym, cfg.gamma, cfg.a, betas,
                              resolution=cfg.resolution, epsilon=cfg.epsilon)
    _emit_csv(("beta", "gap"), [(float(b), float(g)) for b, g in sweep], cfg)
    return EXIT_OK


def cmd_graphene_path(args, cfg):
    points = bands.special_points(cfg.a)
    waypoints = {"G": points["Gamma"], "K": points["K"][0], "M": points["M"][0]}
    labels = [s.strip().upper() for s in args.path.split(",")]
    for lab in labels:
        if lab not in waypoints:
            raise InputError(f"unknown path label {lab!r}; use G, K, M")
    if len(labels) < 2:
        raise InputError("path needs at least two labels")
    p = bands.uniform_params(cfg.gamma, cfg.epsilon, cfg.a)
    segs = list(zip(labels[:-1], labels[1:]))
    lengths = [math.dist(waypoints[a], waypoints[b]) for a, b in segs]
    total_len = sum(lengths)
    rows = []
    arc = 0.0
    for (la, lb), seg_len in zip(segs, lengths):
        start = np.array(waypoints[la])
        end = np.array(waypoints[lb])
        count = max(2, round(args.samples * seg_len / total_len))
        ts = np.linspace(0.0, 1.0, count)
        if rows:
            ts = ts[1:]  # segment start already emitted
        for t in ts:
            k = start + t * (end - start)
            emin, eplus = bands.dispersion(k, p)
            rows.append((arc + t * seg_len, float(k[0]), float(k[1]),
                         float(k[2]), emin, eplus))
        arc += seg_len
    _emit_csv(("arclength", "k0", "k1", "k2", "E_minus", "E_plus"), rows, cfg)
    return EXIT_OK


def cmd_verify(args, cfg):
    c = tube.validate_chirality(_parse_triple(args.c))
    sym = tube.tube_symmetry(c)
    if args.periods < 1:
        raise InputError(f"periods must be >= 1, got {args.periods}")
    p = _gap_params(c, cfg, args.beta or 0.0)
    report = oracle.compare_spectra(c, sym, args.periods, p,
                                    tol=cfg.tolerance * cfg.gamma)
    _emit_json({
        "c": list(c),
        "periods": report.periods,
        "dimension": report.dimension,
        "max_deviation": report.max_deviation,
        "tolerance": report.tolerance,
        "passed": report.passed,
    }, cfg)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_neighbors(args, cfg):
    v = _parse_triple(args.v)
    if not is_site(v):
        raise InputError(f"site {v} has coordinate sum {sum(v)}, expected 0 or 1")
    report = {"v": list(v), "nu": nu(v)}
    if args.c:
        c = tube.validate_chirality(_parse_triple(args.c))
        report["c"] = list(c)
        rep = tube.canonical_rep(v, c)
        report["class"] = list(rep)
        report["nearest"] = [list(x) for x in tube.class_neighbors(rep, c)]
        report["next_nearest"] = [list(x) for x in
                                  tube.class_next_nearest_neighbors(rep, c)]
    else:
        report["nearest"] = [list(x) for x in nearest_neighbors(v)]
        report["next_nearest"] = [list(x) for x in next_nearest_neighbors(v)]
    _emit_json(report, cfg)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cntbands",
        description="Tight-binding band structure of graphene and carbon nanotubes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gamma", type=float, help="hopping energy (default 1.0)")
    common.add_argument("--epsilon", type=float, help="onsite energy (default 0.0)")
    common.add_argument("--bond-length", dest="bond_length", type=float,
                        help="C-C bond length in Angstrom (default 1.44)")
    common.add_argument("--resolution", type=int,
                        help="kappa samples per band line (default 4096)")
    common.add_argument("--tol", dest="tolerance", type=float,
                        help="comparison tolerance in units of gamma (default 1e-8)")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "csv"), help="report format")
    common.add_argument("--config", help="JSON config file; flags override it")

    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("classify", parents=[common],
                        help="symmetry data and metallicity of a tube")
    pc.add_argument("--c", required=True, help="chirality c0,c1,c2")
    pc.set_defaults(func=cmd_classify)

    pb = sub.add_parser("bands", parents=[common], help="sampled m-bands as CSV")
    pb.add_argument("--c", required=True)
    pb.set_defaults(func=cmd_bands)

    pg = sub.add_parser("gap", parents=[common], help="band gap report")
    pg.add_argument("--c", required=True)
    pg.add_argument("--beta", type=float, help="axial field parameter")
    pg.set_defaults(func=cmd_gap)

    pm = sub.add_parser("magsweep", parents=[common],
                        help="gap versus axial magnetic field as CSV")
    pm.add_argument("--c", required=True)
    pm.add_argument("--periods", type=int, default=1,
                    help="flux periods to sweep (default 1)")
    pm.add_argument("--samples", type=int, default=201,
                    help="samples per flux period (default 201)")
    pm.set_defaults(func=cmd_magsweep)

    pp = sub.add_parser("graphene-path", parents=[common],
                        help="sheet dispersion along special-point path as CSV")
    pp.add_argument("--path", default="G,K,M,G", help="labels from {G,K,M}")
    pp.add_argument("--samples", type=int, default=300)
    pp.set_defaults(func=cmd_graphene_path)

    pv = sub.add_parser("verify", parents=[common],
                        help="finite-matrix versus zone-folded spectrum")
    pv.add_argument("--c", required=True)
    pv.add_argument("--periods", type=int, default=1)
    pv.add_argument("--beta", type=float, help="axial field parameter")
    pv.set_defaults(func=cmd_verify)

    pn = sub.add_parser("neighbors", parents=[common],
                        help="neighbor sites or neighbor classes")
    pn.add_argument("--v", required=True, help="site v0,v1,v2")
    pn.add_argument("--c", help="optional chirality for class output")
    pn.set_defaults(func=cmd_neighbors)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args)
        return args.func(args, cfg)
    except (InputError, tube.ChiralityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError, RuntimeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
