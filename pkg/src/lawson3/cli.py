"""Command-line interface.

Subcommands:

* generate: build a surface, write OBJ + raw mesh + JSON report files.
* report:   build a surface and print the JSON report to stdout.
* verify:   check group order, tile orbits and quadrilateral geometry.
* orbifold: print the exact orbifold Euler-number certificate.

Exit codes: 0 success, 2 usage, 3 numerical failure, 4 verification failure.
Reports are deterministic for a given configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import assembly, energy, meshio, orbifold, pipeline, symmetry, tiling
from .config import DEFAULT_TOLS, Tolerances
from .errors import InvalidParams, LawsonError
from .kernels import BACKEND
from .plateau import SolverOptions
from .spheregeom import rotate_points

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_VERIFICATION = 4

MAX_PIPELINE_PARAM = 8
MAX_ARITHMETIC_PARAM = 50


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _error_json(exc: Exception) -> str:
    return _dump({"schema": 1, "error": {"type": type(exc).__name__, "message": str(exc)}})


def _check_params(m: int, k: int, cap: int) -> symmetry.LawsonParams:
    if not (1 <= min(m, k) and max(m, k) <= cap):
        raise InvalidParams(f"need 1 <= k <= m <= {cap}, got m={m} k={k}")
    return symmetry.LawsonParams(m=m, k=k)


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True, help="first surface parameter")
    p.add_argument("--k", type=int, required=True, help="second surface parameter")


def _add_build_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=16, help="initial grid resolution")
    p.add_argument("--refinements", type=int, default=2, help="subdivision passes")
    p.add_argument("--grad-tol", type=float, default=1e-6, help="solver gradient tolerance")
    p.add_argument("--max-iters", type=int, default=50000, help="solver iteration cap")
    p.add_argument("--weld-tol", type=float, default=DEFAULT_TOLS.weld,
                   help="vertex identification distance for welding")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")


def _config_dict(args: argparse.Namespace) -> dict:
    return {
        "m": args.m,
        "k": args.k,
        "n": args.n,
        "refinements": args.refinements,
        "grad_tol": args.grad_tol,
        "max_iters": args.max_iters,
        "weld_tol": args.weld_tol,
        "seed": args.seed,
    }


def _build(args: argparse.Namespace) -> tuple[pipeline.BuildResult, dict]:
    params = _check_params(args.m, args.k, MAX_PIPELINE_PARAM)
    if args.n < 1 or args.refinements < 0:
        raise InvalidParams("need n >= 1 and refinements >= 0")
    opts = SolverOptions(grad_tol=args.grad_tol, max_iters=args.max_iters)
    tols = Tolerances(weld=args.weld_tol)
    result = pipeline.build_surface(
        params, n=args.n, refinements=args.refinements, opts=opts, tols=tols
    )
    return result, pipeline.build_report(result, _config_dict(args))


def cmd_generate(args: argparse.Namespace) -> int:
    result, report = _build(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"lawson_m{result.params.m}_k{result.params.k}"
    obj_path = out_dir / f"{stem}.obj"
    raw_path = out_dir / f"{stem}.raw.txt"
    report_path = out_dir / f"{stem}.report.json"
    meshio.export_obj(result.welded, obj_path)
    meshio.export_raw(result.welded, raw_path)
    report["files"] = {
        "obj": obj_path.name,
        "raw": raw_path.name,
        "report": report_path.name,
    }
    report_path.write_text(_dump(report) + "\n", encoding="utf-8")
    print(_dump(report))
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    _, report = _build(args)
    print(_dump(report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    params = _check_params(args.m, args.k, MAX_PIPELINE_PARAM)
    rng = np.random.default_rng(args.seed)
    checks: list[tuple[str, bool]] = []

    group = symmetry.lawson_group(params)
    checks.append((f"group order {group.order} == {params.group_order}",
                   group.order == params.group_order))

    involutions = all(
        float(np.linalg.norm(g @ g - np.eye(4))) < 1e-10 for g in group.generators
    )
    checks.append(("every generator is an involution", involutions))

    orbits = tiling.tile_orbits(group, params)
    sizes = sorted(len(o) for o in orbits)
    checks.append((f"tile count {sum(sizes)} == {params.tile_count}",
                   sum(sizes) == params.tile_count))
    checks.append(
        (
            f"two tile orbits of size {params.group_order}, got {sizes}",
            sizes == [params.group_order, params.group_order],
        )
    )

    quad = tiling.quadrilateral(params, (0, 0))
    lengths = quad.edge_lengths()
    checks.append(
        (
            "quad edge lengths pi/2 within 1e-12",
            bool(np.max(np.abs(lengths - np.pi / 2)) < 1e-12),
        )
    )
    angles = quad.corner_angles()
    expect = np.array(
        [np.pi / (params.m + 1), np.pi / (params.k + 1)] * 2
    )
    checks.append(
        (
            "quad corner angles pi/(m+1), pi/(k+1) within 1e-10",
            bool(np.max(np.abs(angles - expect)) < 1e-10),
        )
    )

    P, Q = symmetry.canonical_vertices(params)
    ring = np.vstack([P, Q])
    ok_perm = True
    for g in group.elements:
        image = rotate_points(g, ring)
        dists = np.linalg.norm(image[:, None, :] - ring[None, :, :], axis=2)
        ok_perm &= bool(dists.min(axis=1).max() < 1e-9)
    checks.append(("group permutes the canonical vertex rings", ok_perm))

    samples = rng.normal(size=(200, 4))
    samples /= np.linalg.norm(samples, axis=1)[:, None]
    all_tiles = tiling.all_tiles(params)
    cover_ok = True
    for p in samples:
        hits = sum(1 for t in all_tiles if tiling.tile_contains(t, p, DEFAULT_TOLS.wall))
        strict = sum(
            1 for t in all_tiles if tiling.tile_contains(t, p, -DEFAULT_TOLS.interior_margin)
        )
        if hits < 1 or (strict == 1 and hits != 1):
            cover_ok = False
    checks.append(("random points covered by the tiling", cover_ok))

    failed = 0
    for label, ok in checks:
        print(("PASS: " if ok else "FAIL: ") + label)
        failed += 0 if ok else 1

    if args.group_out:
        Path(args.group_out).write_text(_dump(group.to_json()) + "\n", encoding="utf-8")
        print(f"group JSON written to {args.group_out}")

    return EXIT_OK if failed == 0 else EXIT_VERIFICATION


def cmd_orbifold(args: argparse.Namespace) -> int:
    params = _check_params(args.m, args.k, MAX_ARITHMETIC_PARAM)
    cert: dict = {
        "schema": 1,
        "params": {"m": params.m, "k": params.k},
        "genus": params.genus,
        "group_order": params.group_order,
        "chi_o_local": str(orbifold.chi_o_local(orbifold.lawson_quotient_complex(params))),
        "chi_o_global": str(orbifold.chi_o_global(2 - 2 * params.genus, params.group_order)),
        "chi_o": str(orbifold.lawson_chi_o(params)),
    }
    if params.genus >= 2:
        report = orbifold.classify(params)
        cert["lemma_verdicts"] = report.entries
        cert["conclusion"] = report.conclusion
    else:
        cert["lemma_verdicts"] = None
        cert["conclusion"] = "classification refused: needs genus m*k >= 2"
    if args.max_scan:
        bound = min(args.max_scan, MAX_ARITHMETIC_PARAM)
        cases = 0
        consistent = True
        for mm in range(1, bound + 1):
            for kk in range(1, mm + 1):
                p = symmetry.LawsonParams(m=mm, k=kk)
                consistent &= orbifold.lawson_chi_o(p) == orbifold.chi_o_global(
                    2 - 2 * p.genus, p.group_order
                )
                if p.genus >= 2:
                    consistent &= orbifold.exclude_interior_only(p).excluded
                if p.k == 1 and p.m >= 2:
                    consistent &= orbifold.exclude_partial_circles(p).excluded
                cases += 1
        cert["scan"] = {"max": bound, "cases_checked": cases, "all_consistent": consistent}
    print(_dump(cert))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lawson3",
        description="Construct and certify Lawson minimal surfaces in the 3-sphere "
        f"(mesh kernels backend: {BACKEND})",
    )
    parser.add_argument("--verbose", action="store_true", help="log solver progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="build a surface and write mesh + report files")
    _add_params(p_gen)
    _add_build_options(p_gen)
    p_gen.add_argument("--out-dir", default=".", help="output directory")
    p_gen.set_defaults(func=cmd_generate)

    p_rep = sub.add_parser("report", help="build a surface and print the JSON report")
    _add_params(p_rep)
    _add_build_options(p_rep)
    p_rep.set_defaults(func=cmd_report)

    p_ver = sub.add_parser("verify", help="check group, tiling and quadrilateral facts")
    _add_params(p_ver)
    p_ver.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p_ver.add_argument("--group-out", default=None, help="write the group as JSON here")
    p_ver.set_defaults(func=cmd_verify)

    p_orb = sub.add_parser("orbifold", help="print the exact exclusion certificate")
    _add_params(p_orb)
    p_orb.add_argument("--max-scan", type=int, default=0,
                       help="also scan all parameter pairs up to this bound")
    p_orb.set_defaults(func=cmd_orbifold)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                            format="%(name)s %(message)s")
    try:
        return args.func(args)
    except InvalidParams as exc:
        parser.exit(EXIT_USAGE, f"usage error: {exc}\n")
    except LawsonError as exc:
        print(_error_json(exc))
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
