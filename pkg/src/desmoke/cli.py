"""Command-line frontend.

Four subcommands: desmoke (single image), metrics (score a pair),
synth (generate a smoked test image), batch (a directory, in
parallel). Solver flags default to the reference parameterization;
running with no flags and with `--rho 5 --lambda 1` is bit-identical.

Exit codes: 0 success (a run that hits the iteration cap still exits
0 and marks its trace), 2 usage errors, 3 I/O errors, 4 processing
errors.
"""

import argparse
import json
import math
import secrets
import statistics
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .gradients import GradWeights
from .imgio import load_image, save_image
from .metrics import evaluate, restored_edges
from .pipeline import remove_smoke
from .spectral import build_kernel
from .synth import SmokeSpec, apply_smoke, generate_smoke_field
from .tensor import clamp01
from .variational import SolverParams

_IMAGE_SUFFIXES = (".png", ".ppm", ".pnm")


def _add_solver_flags(p):
    p.add_argument("--lambda", dest="lmbda", type=float, default=1.0,
                   help="fidelity weight (default 1)")
    p.add_argument("--beta-x", type=float, default=1.0,
                   help="horizontal difference weight (default 1)")
    p.add_argument("--beta-y", type=float, default=1.0,
                   help="vertical difference weight (default 1)")
    p.add_argument("--beta-c", type=float, default=1.0,
                   help="cross-channel difference weight (default 1)")
    p.add_argument("--rho", type=float, default=5.0,
                   help="splitting penalty (default 5)")
    p.add_argument("--epsilon", type=float, default=1e-8,
                   help="shrinkage guard (default 1e-8)")
    p.add_argument("--max-iter", type=int, default=100,
                   help="iteration cap (default 100)")
    p.add_argument("--tol", type=float, default=1e-4,
                   help="relative residual tolerance (default 1e-4)")


def _params_from(args):
    return SolverParams(
        lmbda=args.lmbda,
        weights=GradWeights(args.beta_x, args.beta_y, args.beta_c),
        rho=args.rho,
        eps=args.epsilon,
        max_iter=args.max_iter,
        tol=args.tol,
    )


def build_parser():
    ap = argparse.ArgumentParser(
        prog="desmoke",
        description="Remove surgical smoke from RGB images by smooth-layer decomposition.")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("desmoke", help="desmoke a single image")
    d.add_argument("--input", required=True, help="smoked input image")
    d.add_argument("--output", required=True, help="enhanced output image")
    d.add_argument("--emit-smoke", metavar="PATH",
                   help="also write the smoke layer (.ppm raw clamped, "
                        "otherwise rescaled with a JSON sidecar)")
    d.add_argument("--trace", metavar="PATH",
                   help="write per-iteration diagnostics as CSV")
    _add_solver_flags(d)

    m = sub.add_parser("metrics", help="score an original/enhanced pair")
    m.add_argument("--input", required=True, help="original image")
    m.add_argument("--output", required=True, help="enhanced image")
    m.add_argument("--truth", metavar="PATH",
                   help="ground-truth clean image, enables PSNR")

    s = sub.add_parser("synth", help="overlay synthetic smoke on a clean image")
    s.add_argument("--input", required=True, help="clean input image")
    s.add_argument("--output", required=True, help="smoked output image")
    s.add_argument("--emit-smoke", metavar="PATH",
                   help="where to write the ground-truth field "
                        "(default: alongside the output)")
    s.add_argument("--seed", type=int, default=None,
                   help="field seed (default: fresh entropy, printed)")
    s.add_argument("--strength", type=float, default=0.3,
                   help="peak smoke intensity (default 0.3)")
    s.add_argument("--smoothness", type=float, default=12.0,
                   help="correlation length in pixels (default 12)")
    s.add_argument("--chroma-jitter", type=float, default=0.02,
                   help="per-channel deviation from neutral (default 0.02)")

    b = sub.add_parser("batch", help="desmoke every image in a directory")
    b.add_argument("--input", required=True, help="input directory")
    b.add_argument("--output", required=True, help="output directory")
    b.add_argument("--jobs", type=int, default=1,
                   help="parallel workers (default 1)")
    _add_solver_flags(b)
    return ap


def _write_trace(path, diag):
    lines = ["iter,energy,primal_res,dual_res"]
    rows = zip(diag.energy_trace, diag.primal_residual_trace,
               diag.dual_residual_trace)
    for it, (en, pr, du) in enumerate(rows, start=1):
        lines.append("%d,%.17e,%.17e,%.17e" % (it, en, pr, du))
    if not diag.converged:
        lines.append("# not converged within %d iterations" % diag.iterations)
    Path(path).write_text("\n".join(lines) + "\n")


def _emit_smoke_layer(path, smoke):
    path = str(path)
    if path.lower().endswith((".ppm", ".pnm")):
        # raw layer, clamped; no rescale so values stay comparable
        save_image(clamp01(smoke), path)
        return
    peak = float(smoke.max())
    scaled = clamp01(smoke / peak) if peak > 0 else clamp01(smoke)
    save_image(scaled, path)
    sidecar = Path(path + ".json")
    sidecar.write_text(json.dumps({"scale": peak}) + "\n")


def cmd_desmoke(args):
    image = load_image(args.input)
    result = remove_smoke(image, _params_from(args))
    save_image(result.enhanced, args.output)
    if args.emit_smoke:
        _emit_smoke_layer(args.emit_smoke, result.smoke)
    if args.trace:
        _write_trace(args.trace, result.diag)
    if not result.diag.converged:
        print("warning: stopped at iteration cap without convergence",
              file=sys.stderr)
    return 0


def _fmt(v):
    if v is None:
        return "n/a"
    if isinstance(v, float) and math.isinf(v):
        return "identical"
    return "%.6g" % v


def cmd_metrics(args):
    original = load_image(args.input)
    enhanced = load_image(args.output)
    if original.shape != enhanced.shape:
        raise ValueError("image dimensions differ: %s vs %s"
                         % (original.shape, enhanced.shape))
    truth = load_image(args.truth) if args.truth else None
    if truth is not None and truth.shape != enhanced.shape:
        raise ValueError("truth dimensions differ: %s vs %s"
                         % (truth.shape, enhanced.shape))
    report = evaluate(original, enhanced, truth)
    print("metric            value")
    print("re                %s" % _fmt(report.re))
    print("psnr_db           %s" % _fmt(report.psnr))
    print("rms_contrast_in   %s" % _fmt(report.rms_contrast_in))
    print("rms_contrast_out  %s" % _fmt(report.rms_contrast_out))
    print(json.dumps(report.as_dict()))
    return 0


def cmd_synth(args):
    clean = load_image(args.input)
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(32)
    spec = SmokeSpec(seed=seed, strength=args.strength,
                     smoothness=args.smoothness,
                     chroma_jitter=args.chroma_jitter)
    field = generate_smoke_field(clean.shape[0], clean.shape[1], spec)
    save_image(apply_smoke(clean, field), args.output)
    out = Path(args.output)
    field_path = args.emit_smoke or str(
        out.with_name(out.stem + "_smoke" + out.suffix))
    save_image(clamp01(field), field_path)
    print("seed: %d" % seed)
    print("field: %s" % field_path)
    return 0


def _batch_one(src, out_dir, params, kernels, lock):
    image = load_image(src)
    key = image.shape[:2]
    with lock:
        kernel = kernels.get(key)
        if kernel is None:
            kernel = build_kernel(key[0], key[1], params)
            kernels[key] = kernel
    t0 = time.perf_counter()
    result = remove_smoke(image, params, kernel)
    wall = time.perf_counter() - t0
    save_image(result.enhanced, out_dir / src.name)
    score = restored_edges(image, result.enhanced)
    return score, result.diag.iterations, wall


def cmd_batch(args):
    in_dir = Path(args.input)
    out_dir = Path(args.output)
    if not in_dir.is_dir():
        raise OSError("%s: not a directory" % in_dir)
    if args.jobs < 1:
        raise ValueError("--jobs must be at least 1")
    out_dir.mkdir(parents=True, exist_ok=True)
    files = sorted(p for p in in_dir.iterdir()
                   if p.suffix.lower() in _IMAGE_SUFFIXES)
    params = _params_from(args)
    kernels = {}
    lock = threading.Lock()

    def run(src):
        try:
            return _batch_one(src, out_dir, params, kernels, lock)
        except Exception as exc:
            print("failed: %s: %s" % (src, exc), file=sys.stderr)
            return None

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        outcomes = list(pool.map(run, files))

    rows = [(src.name, res) for src, res in zip(files, outcomes)
            if res is not None]
    lines = ["file,re,iterations,wall_time"]
    for name, (score, iters, wall) in rows:
        lines.append("%s,%.17e,%d,%.6f" % (name, score, iters, wall))
    if rows:
        scores = [r[1][0] for r in rows]
        iters = [float(r[1][1]) for r in rows]
        walls = [r[1][2] for r in rows]
        lines.append("mean,%.17e,%.6f,%.6f" % (
            statistics.mean(scores), statistics.mean(iters),
            statistics.mean(walls)))
        lines.append("std,%.17e,%.6f,%.6f" % (
            _pstd(scores), _pstd(iters), _pstd(walls)))
    (out_dir / "summary.csv").write_text("\n".join(lines) + "\n")
    print("processed %d of %d files" % (len(rows), len(files)))
    if files and not rows:
        raise ValueError("all %d files failed" % len(files))
    return 0


def _pstd(vals):
    return statistics.pstdev(vals) if len(vals) > 1 else 0.0


_COMMANDS = {
    "desmoke": cmd_desmoke,
    "metrics": cmd_metrics,
    "synth": cmd_synth,
    "batch": cmd_batch,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
