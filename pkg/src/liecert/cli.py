"""Command-line front end: build triples, run decompositions and certificates,
emit deterministic JSON or markdown reports.

Exit codes: 0 certified (or plain success for decompose/estimate/catalog),
10 violation found, 20 inconclusive, 30 unrealizable family, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import catalog, condition
from .linalg import norm, orthonormalize
from .triple import Decomposition, Triple, classify_all, decompose

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 10
EXIT_INCONCLUSIVE = 20
EXIT_UNREALIZABLE = 30


class ConfigError(ValueError):
    pass


def _sparse_generator(spec: list, n: int, field: str) -> np.ndarray:
    M = np.zeros((n, n))
    for item in spec:
        if not (isinstance(item, (list, tuple)) and len(item) == 3):
            raise ConfigError(f"{field}: each entry must be [row, col, value]")
        r, s, val = item
        if not (0 <= r < n and 0 <= s < n and r != s):
            raise ConfigError(f"{field}: indices ({r}, {s}) out of range for ambient {n}")
        M[s, r] += float(val)
        M[r, s] -= float(val)
    return M


def triple_from_config(cfg: dict) -> tuple[Triple, catalog.CatalogEntry | None]:
    if "entry" in cfg:
        name, p = catalog.parse_entry_id(str(cfg["entry"]))
        if "p" in cfg and cfg["p"] is not None:
            p = int(cfg["p"])
        try:
            e = catalog.entry(name)
        except catalog.UnknownEntryError:
            raise ConfigError(f"entry: unknown catalog id {name!r}")
        return catalog.build(name, p), e
    for field in ("ambient_dim", "g", "k", "h"):
        if field not in cfg:
            raise ConfigError(f"{field}: required field is missing")
    n = int(cfg["ambient_dim"])
    if n < 2:
        raise ConfigError("ambient_dim: must be at least 2")
    subs = {}
    for field in ("g", "k", "h"):
        gens = cfg[field]
        if not isinstance(gens, list) or not gens:
            raise ConfigError(f"{field}: must be a nonempty list of generators")
        subs[field] = orthonormalize(
            [_sparse_generator(g, n, field) for g in gens]
        )
    t = Triple(str(cfg.get("name", "config-triple")), n, subs["g"], subs["k"], subs["h"])
    t.validate()
    return t, None


def _residuals(dec: Decomposition) -> dict:
    t = dec.triple

    def ortho(a, b) -> float:
        if a.dim == 0 or b.dim == 0:
            return 0.0
        return float(np.max(np.abs(a.flat @ b.flat.T)))

    def reconstruct(whole, parts) -> float:
        worst = 0.0
        for B in whole.basis:
            resid = B - sum(p.project(B) for p in parts)
            worst = max(worst, norm(resid))
        return float(worst)

    return {
        "m_perp_h": ortho(dec.m, t.h),
        "s_perp_k": ortho(dec.s, t.k),
        "m1_perp_h1": ortho(dec.m1, dec.h1),
        "k_eq_hprime_plus_k0": reconstruct(t.k, [dec.hprime, dec.k0]),
        "h_eq_hprime_plus_h0": reconstruct(t.h, [dec.hprime, dec.h0]),
    }


def _decomposition_block(dec: Decomposition) -> dict:
    return {
        "dims": dec.dims(),
        "residuals": _residuals(dec),
        "sphere_stabilizer_override": dec.used_sphere_override,
        "components": [
            {
                "dim": c.dim,
                "irreducible_dims": c.irreducible_dims,
                "phi": c.phi,
            }
            for c in dec.components
        ],
    }


def _report(
    command: str,
    cfg: dict,
    triple: Triple | None,
    dec: Decomposition | None,
    verdict: condition.Verdict | None,
    exit_code: int,
) -> dict:
    # wall time is reported only on request so that repeated runs with the
    # same seed stay byte identical
    timing_s = (
        round(time.monotonic() - cfg["_start"], 3) if "_start" in cfg else None
    )
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "entry": cfg.get("entry"),
        "seed": cfg.get("seed", 0),
        "tolerances": {"tol": cfg.get("tol", 1e-8)},
        "triple": None,
        "decomposition": None,
        "verdict": verdict.to_json() if verdict is not None else None,
        "exit_code": exit_code,
        "timing_s": timing_s,
    }
    if triple is not None:
        rep["triple"] = {
            "name": triple.name,
            "ambient_dim": triple.ambient_dim,
            "dims": {"g": triple.g.dim, "k": triple.k.dim, "h": triple.h.dim},
        }
    if dec is not None:
        rep["decomposition"] = _decomposition_block(dec)
    return rep


def _render_markdown(rep: dict) -> str:
    lines = [f"# {rep['command']} report", ""]
    if rep.get("entry"):
        lines.append(f"* entry: `{rep['entry']}`")
    if rep.get("triple"):
        t = rep["triple"]
        lines.append(
            f"* triple `{t['name']}` in so({t['ambient_dim']}): "
            f"dims g/k/h = {t['dims']['g']}/{t['dims']['k']}/{t['dims']['h']}"
        )
    if rep.get("decomposition"):
        d = rep["decomposition"]
        lines.append(f"* decomposition dims: `{json.dumps(d['dims'], sort_keys=True)}`")
        for c in d["components"]:
            lines.append(
                f"  * component of dim {c['dim']} "
                f"(irreducibles {c['irreducible_dims']}): {c['phi'] or 'unclassified'}"
            )
    if rep.get("verdict"):
        v = rep["verdict"]
        lines.append(f"* verdict: **{v['kind']}**")
        for key, val in sorted(v["data"].items()):
            if isinstance(val, (int, float, str, bool)) or val is None:
                lines.append(f"  * {key}: {val}")
    lines.append(f"* exit code: {rep['exit_code']}")
    return "\n".join(lines) + "\n"


def _emit(rep: dict, cfg: dict) -> None:
    if cfg.get("format", "json") == "markdown":
        text = _render_markdown(rep)
    else:
        text = json.dumps(rep, sort_keys=True, indent=2) + "\n"
    out = cfg.get("out")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _prepare(cfg: dict):
    t, entry = triple_from_config(cfg)
    dec = decompose(t, tol=cfg.get("tol", 1e-8), seed=cfg.get("seed", 0))
    return t, entry, dec


def cmd_decompose(cfg: dict) -> int:
    t, entry, dec = _prepare(cfg)
    if dec.m1.dim > 0:
        classify_all(dec, restarts=cfg.get("restarts", 20), seed=cfg.get("seed", 0))
    rep = _report("decompose", cfg, t, dec, None, EXIT_OK)
    _emit(rep, cfg)
    return EXIT_OK


def cmd_certify(cfg: dict) -> int:
    t, entry, dec = _prepare(cfg)
    seed = cfg.get("seed", 0)
    verdict = condition.certify_bracket_intersection(
        dec,
        tol=cfg.get("tol", 1e-8),
        restarts=cfg.get("restarts", 60),
        iters=cfg.get("iters", 150),
        seed=seed,
    )
    if verdict.kind != condition.CERT_BRACKET and entry is not None and entry.curvature_flag:
        verdict = condition.certify_positive_curvature(
            dec, seed=seed, curvature_flag=True
        )
    code = EXIT_OK if verdict.kind.startswith("Certified") else EXIT_INCONCLUSIVE
    rep = _report("certify", cfg, t, dec, verdict, code)
    _emit(rep, cfg)
    return code


def cmd_refute(cfg: dict) -> int:
    t, entry, dec = _prepare(cfg)
    seed = cfg.get("seed", 0)
    verdict = None
    if entry is not None:
        name, p = catalog.parse_entry_id(str(cfg["entry"]))
        try:
            _, X, Y = catalog.build_with_witness(name, p)
            verdict = condition.verify_witness(dec, X, Y, use_m1=entry.use_m1)
        except (catalog.UnrealizableFamilyError, condition.PreconditionError):
            verdict = None
        if verdict is None and entry.expected_verdict == "sequence":
            verdict = condition.verify_sequence(dec, [1, 2, 4, 8, 16])
    if verdict is None or verdict.kind == condition.INCONCLUSIVE:
        use_m1 = entry.use_m1 if entry is not None else cfg.get("use_m1", True)
        est = condition.estimate_inf_rho(
            dec,
            restarts=cfg.get("restarts", 100),
            iters=cfg.get("iters", 300),
            seed=seed,
            use_m1=use_m1,
            stop_below=1e-8,
        )
        verdict = est
    if verdict.kind in (condition.VIOLATION, condition.SEQUENCE):
        code = EXIT_VIOLATION
    elif verdict.kind == condition.ESTIMATE and verdict.data["rho_inf"] < 1e-6:
        code = EXIT_VIOLATION
    else:
        code = EXIT_INCONCLUSIVE
    rep = _report("refute", cfg, t, dec, verdict, code)
    _emit(rep, cfg)
    return code


def cmd_estimate(cfg: dict) -> int:
    t, entry, dec = _prepare(cfg)
    use_m1 = cfg.get("use_m1")
    if use_m1 is None:
        use_m1 = entry.use_m1 if entry is not None else True
    verdict = condition.estimate_inf_rho(
        dec,
        restarts=cfg.get("restarts", 100),
        iters=cfg.get("iters", 150),
        seed=cfg.get("seed", 0),
        use_m1=use_m1,
    )
    rep = _report("estimate", cfg, t, dec, verdict, EXIT_OK)
    _emit(rep, cfg)
    return EXIT_OK


def cmd_catalog(cfg: dict) -> int:
    listing = catalog.to_json()
    rank = cfg.get("rank")
    realizable = cfg.get("realizable")
    if rank is not None:
        listing = [e for e in listing if e["rank"] == rank]
    if realizable is not None:
        listing = [e for e in listing if e["realizable"] == realizable]
    listing = sorted(listing, key=lambda e: e["id"])
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": "catalog",
        "entries": listing,
        "exit_code": EXIT_OK,
    }
    if cfg.get("format", "json") == "markdown":
        lines = ["# catalog", ""]
        for e in listing:
            mark = "x" if e["realizable"] else " "
            lines.append(f"* [{mark}] `{e['id']}` (rank {e['rank']}): {e['description']}")
        text = "\n".join(lines) + "\n"
        out = cfg.get("out")
        if out:
            open(out, "w", encoding="utf-8").write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(rep, cfg)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecert",
        description="Realize compact Lie algebra triples and certify or refute "
        "the wedge-vs-bracket pinching condition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("decompose", "certify", "refute", "estimate", "catalog"):
        p = sub.add_parser(name)
        if name != "catalog":
            p.add_argument("entry", nargs="?", help="catalog entry id, e.g. g2-spin7:p=0")
            p.add_argument("--entry", dest="entry_flag", help="catalog entry id")
            p.add_argument("--config", help="path to a JSON triple config")
        p.add_argument("--tol", type=float, default=1e-8)
        p.add_argument("--restarts", type=int, default=None)
        p.add_argument("--iters", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "markdown"), default="json")
        p.add_argument("--out", default=None)
        p.add_argument("--timing", action="store_true", help="include wall time in the report")
        if name == "estimate":
            p.add_argument(
                "--full-m",
                action="store_true",
                help="optimize over the full sphere tangent space instead of m1",
            )
        if name == "catalog":
            p.add_argument("--rank", type=int, default=None)
            p.add_argument(
                "--realizable",
                choices=("true", "false"),
                default=None,
            )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg: dict = {
        "tol": args.tol,
        "seed": args.seed,
        "format": args.format,
        "out": args.out,
    }
    if args.restarts is not None:
        cfg["restarts"] = args.restarts
    if args.iters is not None:
        cfg["iters"] = args.iters
    start = time.monotonic()

    if args.command == "catalog":
        if args.rank is not None:
            cfg["rank"] = args.rank
        if args.realizable is not None:
            cfg["realizable"] = args.realizable == "true"
        return cmd_catalog(cfg)

    entry_text = args.entry_flag or args.entry
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as ex:
            sys.stderr.write(f"config: cannot read {args.config}: {ex}\n")
            return EXIT_USAGE
        if not isinstance(file_cfg, dict):
            sys.stderr.write("config: top level must be an object\n")
            return EXIT_USAGE
        cfg.update(file_cfg)
    elif entry_text:
        cfg["entry"] = entry_text
    else:
        sys.stderr.write(f"{args.command}: need an entry id or --config\n")
        return EXIT_USAGE

    if args.command == "estimate" and getattr(args, "full_m", False):
        cfg["use_m1"] = False

    handler = {
        "decompose": cmd_decompose,
        "certify": cmd_certify,
        "refute": cmd_refute,
        "estimate": cmd_estimate,
    }[args.command]
    try:
        if args.timing:
            cfg["_start"] = start
        return handler(cfg)
    except catalog.UnrealizableFamilyError as ex:
        rep = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "entry": cfg.get("entry"),
            "verdict": {
                "kind": "UnrealizableFamily",
                "data": {"entry": ex.entry_id, "reason": ex.reason},
            },
            "exit_code": EXIT_UNREALIZABLE,
            "timing_s": time.monotonic() - start if args.timing else None,
        }
        _emit(rep, cfg)
        return EXIT_UNREALIZABLE
    except (ConfigError, ValueError, catalog.UnknownEntryError) as ex:
        sys.stderr.write(f"{args.command}: {ex}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
