"""Command line front end: compute invariants, run verification suites and
sweeps, emit JSON or CSV.

Subcommands:

  wrt         tau and W of a manifold at (r, s)
  falsetheta  Eichler limits of the periodic bases at s/r or -r/s
  flatconn    flat connection components with Chern-Simons data
  gauss       quadratic Gauss sum, closed form vs brute force
  verify      run verification checks (identity, integrality, geometric,
              decomposition, lemmas, modularity sweep, or all)
  sweep       residual table over a range of r, as CSV

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
The environment variable QMWRT_MAX_COLORS caps the brute-force oracle's
nominal color space (default 10^6 tuples).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import false_theta, gauss_sums, harness, seifert, wrt
from .cyclotomic import CycloNumber
from .number_theory import RootContext, normalize_s

__all__ = ["JobSpec", "UsageError", "parse_args", "run", "main"]

USAGE_ERROR = 2


class UsageError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    manifold: str | None = None
    suite: str | None = None
    r: int | None = None
    r_range: tuple[int, int, int] | None = None
    s: int = 1
    order: int = 2
    output: str = "text"          # text | json | csv
    exact: bool = False
    jobs: int = 1
    slope_tol: float = 0.5
    basis: str = "phi"
    p: tuple[int, ...] | None = None
    a: tuple[int, ...] | None = None
    at_tilde: bool = False
    gauss_s: int | None = None
    out_path: str | None = None


def _parse_int_tuple(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _parse_range(text: str) -> tuple[int, int, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("range must be start:stop:step")
    start, stop, step = (int(x) for x in parts)
    if start % 2 == 0 or step % 2:
        raise ValueError("r-range must start odd with even step (r stays odd)")
    return start, stop, step


def parse_args(argv: list[str]) -> JobSpec:
    parser = argparse.ArgumentParser(
        prog="qmwrt",
        description="exact WRT invariants, false theta functions and "
                    "quantum modularity checks for Seifert fibered spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ctx(sp, need_r=True):
        if need_r:
            sp.add_argument("--r", type=int, required=True, help="odd order of the root")
        sp.add_argument("--s", type=int, default=1,
                        help="numerator class; normalized to 1 mod 4 automatically")

    p_wrt = sub.add_parser("wrt", help="tau and W at a root of unity")
    p_wrt.add_argument("--manifold", required=True)
    add_ctx(p_wrt)
    p_wrt.add_argument("--exact", action="store_true")
    p_wrt.add_argument("--json", action="store_true")
    p_wrt.add_argument("--out")

    p_ft = sub.add_parser("falsetheta", help="Eichler limits of the bases")
    p_ft.add_argument("--basis", choices=["phi", "psi"], default="phi")
    p_ft.add_argument("--p", required=True,
                      help="fiber triple p1,p2,p3 (phi) or the period half P (psi)")
    p_ft.add_argument("--a", required=True,
                      help="rotation triple a1,a2,a3 (phi) or label a (psi)")
    add_ctx(p_ft)
    p_ft.add_argument("--tilde", action="store_true",
                      help="evaluate at -r/s instead of s/r")
    p_ft.add_argument("--exact", action="store_true")
    p_ft.add_argument("--json", action="store_true")
    p_ft.add_argument("--out")

    p_fc = sub.add_parser("flatconn", help="flat connection components")
    p_fc.add_argument("--manifold", required=True)
    p_fc.add_argument("--json", action="store_true")
    p_fc.add_argument("--out")

    p_g = sub.add_parser("gauss", help="quadratic Gauss sum closed form vs brute")
    p_g.add_argument("--s", type=int, required=True)
    p_g.add_argument("--r", type=int, required=True)
    p_g.add_argument("--json", action="store_true")
    p_g.add_argument("--out")

    p_v = sub.add_parser("verify", help="run verification checks")
    p_v.add_argument("suite", choices=["identity", "integrality", "geometric",
                                       "decomposition", "lemmas", "modularity",
                                       "all"])
    p_v.add_argument("--manifold", required=True)
    p_v.add_argument("--r", type=int)
    p_v.add_argument("--r-range")
    p_v.add_argument("--s", type=int, default=1)
    p_v.add_argument("--order", type=int, default=2)
    p_v.add_argument("--slope-tol", type=float, default=0.5)
    p_v.add_argument("--json", action="store_true")
    p_v.add_argument("--out")

    p_sw = sub.add_parser("sweep", help="residual sweep over r, CSV output")
    p_sw.add_argument("--manifold", required=True)
    p_sw.add_argument("--r-range", required=True)
    p_sw.add_argument("--s", type=int, default=1)
    p_sw.add_argument("--order", type=int, default=2)
    p_sw.add_argument("--jobs", type=int, default=1)
    p_sw.add_argument("--json", action="store_true")
    p_sw.add_argument("--out")

    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):   # --help
            raise
        raise UsageError("invalid arguments") from exc

    job = JobSpec(command=ns.command)
    job.output = "json" if getattr(ns, "json", False) else (
        "csv" if ns.command == "sweep" and not getattr(ns, "json", False) else "text")
    job.out_path = getattr(ns, "out", None)
    job.exact = getattr(ns, "exact", False)
    job.s = getattr(ns, "s", 1)
    job.manifold = getattr(ns, "manifold", None)
    job.suite = getattr(ns, "suite", None)
    job.order = getattr(ns, "order", 2)
    job.jobs = getattr(ns, "jobs", 1)
    job.slope_tol = getattr(ns, "slope_tol", 0.5)
    job.at_tilde = getattr(ns, "tilde", False)
    job.basis = getattr(ns, "basis", "phi")

    r = getattr(ns, "r", None)
    if ns.command == "gauss":
        # gauss sums are defined for any positive modulus
        job.gauss_s = ns.s
        job.r = r
        if job.r < 1:
            raise UsageError("r must be positive")
        return job
    if r is not None:
        if r < 1 or r % 2 == 0:
            raise UsageError("r must be odd and positive")
        job.r = r
    rr = getattr(ns, "r_range", None)
    if rr:
        try:
            job.r_range = _parse_range(rr)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if ns.command == "verify" and job.r is None and job.r_range is None:
        if job.suite == "modularity":
            raise UsageError("verify modularity needs --r-range")
        raise UsageError("verify needs --r or --r-range")
    if ns.command == "falsetheta":
        job.p = _parse_int_tuple(ns.p)
        job.a = _parse_int_tuple(ns.a)
    return job


def _ctx(job: JobSpec, r: int | None = None) -> RootContext:
    r = r if r is not None else job.r
    try:
        return RootContext(r, normalize_s(job.s, r))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _serialize_exact(x: CycloNumber) -> dict:
    return {"conductor": x.D,
            "coeffs": [[k, v.numerator, v.denominator]
                       for k, v in sorted(x.c.items())]}


def _fmt(z: complex) -> dict:
    return {"re": float(f"{z.real:.17g}"), "im": float(f"{z.imag:.17g}")}


def _emit(job: JobSpec, payload, exit_code: int) -> int:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2)
    if job.out_path:
        with open(job.out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return exit_code


def _run_wrt(job: JobSpec) -> int:
    ctx = _ctx(job)
    low = job.manifold.strip().lower()
    if low.startswith("lens:"):
        return _run_wrt_lens(job, ctx, int(low.split(":", 1)[1]))
    d = seifert.parse_manifold(job.manifold)
    inv = seifert.invariants(d)
    tau = wrt.tau_seifert_closed(d, ctx, exact=True)
    w = wrt.w_normalized(tau, inv.H, ctx)
    results = [
        {"name": "tau", **_fmt(tau.numeric)},
        {"name": "W", **_fmt(w.numeric)},
        {"name": "invariants", "e": str(inv.e), "chi": str(inv.chi),
         "P": inv.P, "H": inv.H, "phi": str(inv.phi)},
    ]
    if job.exact:
        results[0]["exact"] = _serialize_exact(tau.exact)
        results[1]["exact"] = _serialize_exact(w.exact)
    payload = {"manifold": job.manifold, "ctx": {"r": ctx.r, "s": ctx.s},
               "results": results}
    if job.output == "json":
        return _emit(job, payload, 0)
    lines = [f"{job.manifold} at r={ctx.r} s={ctx.s}",
             f"  tau = {tau.numeric:.12g}",
             f"  W   = {w.numeric:.12g}",
             f"  e={inv.e} chi={inv.chi} P={inv.P} H={inv.H} phi={inv.phi}"]
    return _emit(job, "\n".join(lines), 0)


def _run_wrt_lens(job: JobSpec, ctx: RootContext, p: int) -> int:
    w, sectors = wrt.wrt_lens(p, ctx)
    results = [{"name": "W", **_fmt(w.numeric)}]
    if job.exact:
        results[0]["exact"] = _serialize_exact(w.exact)
    results.extend({"name": f"W_sector_{a}", **_fmt(sec.eval_complex())}
                   for a, sec in enumerate(sectors))
    payload = {"manifold": job.manifold, "ctx": {"r": ctx.r, "s": ctx.s},
               "results": results}
    if job.output == "json":
        return _emit(job, payload, 0)
    lines = [f"L({p},1) at r={ctx.r} s={ctx.s}", f"  W = {w.numeric:.12g}"]
    lines += [f"  W^({a}) = {sec.eval_complex():.12g}"
              for a, sec in enumerate(sectors)]
    return _emit(job, "\n".join(lines), 0)


def _run_falsetheta(job: JobSpec) -> int:
    ctx = _ctx(job)
    alpha = Fraction(-ctx.r, ctx.s) if job.at_tilde else Fraction(ctx.s, ctx.r)
    if job.basis == "phi":
        if len(job.p) != 3 or len(job.a) != 3:
            raise UsageError("phi basis needs --p p1,p2,p3 and --a a1,a2,a3")
        f = false_theta.phi_basis(job.p, job.a)
        big_p = job.p[0] * job.p[1] * job.p[2]
    else:
        big_p = job.p[0]
        f = false_theta.psi_basis(big_p, job.a[0])
    val = false_theta.eichler_limit(f, big_p, alpha)
    num = val.eval_complex()
    payload = {"basis": job.basis, "p": list(job.p), "a": list(job.a),
               "ctx": {"r": ctx.r, "s": ctx.s}, "at": str(alpha),
               "results": [{"name": "eichler_limit", **_fmt(num),
                            **({"exact": _serialize_exact(val)} if job.exact else {})}]}
    if job.output == "json":
        return _emit(job, payload, 0)
    return _emit(job, f"limit at {alpha}: {num:.12g}", 0)


def _run_flatconn(job: JobSpec) -> int:
    rows = []
    low = job.manifold.strip().lower()
    if low.startswith(("lens:", "ex:")):
        for c in seifert.abelian_connections(job.manifold):
            rows.append({"kind": c.kind, "label": c.label,
                         "cs_lift": str(c.cs_lift), "cs": str(c.cs.value)})
    d = None
    if low.startswith("brieskorn:"):
        d = seifert.parse_manifold(job.manifold)
        p = tuple(x for x, _ in d.fibers)
        for c in seifert.nonabelian_connections(p):
            rows.append({"kind": c.kind, "rotation": list(c.rotation),
                         "cs_lift": str(c.cs_lift), "cs": str(c.cs.value)})
        g = seifert.geometric_connection(d)
        rows.append({"kind": "geometric", "rotation": list(g.rotation or ()),
                     "cs_lift": str(g.cs_lift), "cs": str(g.cs.value)})
    if not rows:
        raise UsageError(f"no flat connection data for {job.manifold!r}")
    payload = {"manifold": job.manifold, "results": rows}
    if job.output == "json":
        return _emit(job, payload, 0)
    lines = [f"flat connections of {job.manifold}:"]
    for row in rows:
        lines.append("  " + json.dumps(row))
    return _emit(job, "\n".join(lines), 0)


def _run_gauss(job: JobSpec) -> int:
    brute = gauss_sums.gauss_brute(job.gauss_s, job.r)
    closed = gauss_sums.gauss_closed(job.gauss_s, job.r)
    bn = brute.eval_complex()
    match = abs(bn - closed.numeric) < 1e-10
    payload = {"s": job.gauss_s, "r": job.r,
               "closed": {"multiplier": closed.multiplier,
                          "jacobi": closed.jacobi, "phase": closed.phase,
                          "sqrt_radicand": closed.sqrt_radicand,
                          **_fmt(closed.numeric)},
               "brute_re": float(f"{bn.real:.17g}"),
               "brute_im": float(f"{bn.imag:.17g}"),
               "match": match}
    if job.output == "json":
        return _emit(job, payload, 0 if match else 1)
    return _emit(job, f"G({job.gauss_s}, {job.r}) = {bn:.12g}; closed form "
                      f"{closed.numeric:.12g}; match: {match}", 0 if match else 1)


def _verify_reports(job: JobSpec) -> list[harness.VerificationReport]:
    low = job.manifold.strip().lower()
    is_brieskorn = low.startswith("brieskorn:")
    reports = []
    ctx = _ctx(job) if job.r else None
    if job.suite == "all":
        suites = (["identity", "integrality", "geometric", "lemmas"]
                  if is_brieskorn else ["decomposition", "geometric"])
    else:
        suites = [job.suite]
    for suite in suites:
        if suite == "identity":
            if not is_brieskorn:
                raise UsageError("identity suite needs a Brieskorn manifold")
            p = tuple(int(x) for x in low.split(":", 1)[1].split(","))
            reports.append(harness.brieskorn_identity(p, ctx))
        elif suite == "integrality":
            if not is_brieskorn:
                raise UsageError("integrality suite needs a Brieskorn manifold")
            p = tuple(int(x) for x in low.split(":", 1)[1].split(","))
            rep = harness.VerificationReport(job.manifold,
                                             {"r": ctx.r, "s": ctx.s})
            for a in seifert.rotation_triples(p):
                ok, _ = harness.integrality_check(p, a, ctx)
                rep.add(f"integrality{a}", ok)
            reports.append(rep)
        elif suite == "geometric":
            reports.append(harness.geometric_relation(job.manifold, ctx))
        elif suite == "decomposition":
            reports.append(harness.decomposition_report(job.manifold, ctx))
        elif suite == "lemmas":
            if not is_brieskorn:
                raise UsageError("lemmas suite needs a Brieskorn manifold")
            p = tuple(int(x) for x in low.split(":", 1)[1].split(","))
            reports.append(harness.appendix_b_checks(p, (1, 1, 1), ctx.r))
        elif suite == "modularity":
            if job.r_range is None:
                raise UsageError("modularity suite needs --r-range")
            start, stop, step = job.r_range
            r_list = list(range(start, stop + 1, step))
            rows, slope = harness.residual_scan(job.manifold, job.s, r_list,
                                                job.order)
            expected = -(job.order + 1)
            ok = abs(slope - expected) <= job.slope_tol
            rep = harness.VerificationReport(job.manifold,
                                             {"s": job.s, "r_range": list(job.r_range)})
            rep.add("modularity_slope", ok,
                    f"fitted slope {slope:.3f}, expected {expected} "
                    f"+- {job.slope_tol}", f"+-{job.slope_tol}")
            reports.append(rep)
        else:
            raise UsageError(f"unknown suite {suite!r}")
    return reports


def _run_verify(job: JobSpec) -> int:
    reports = _verify_reports(job)
    all_pass = all(rep.passed for rep in reports)
    merged = {"manifold": job.manifold,
              "ctx": reports[0].ctx if reports else {},
              "results": [c.to_json() for rep in reports for c in rep.checks]}
    for item in merged["results"]:
        item.setdefault("detail", "")
    if job.output == "json":
        return _emit(job, merged, 0 if all_pass else 1)
    lines = []
    for rep in reports:
        for c in rep.checks:
            lines.append(f"[{'pass' if c.passed else 'FAIL'}] {c.name} "
                         f"{('- ' + c.detail) if c.detail else ''}")
    if not all_pass:
        failing = [c.name for rep in reports for c in rep.checks if not c.passed]
        print("failing checks: " + ", ".join(failing), file=sys.stderr)
    return _emit(job, "\n".join(lines), 0 if all_pass else 1)


def _run_sweep(job: JobSpec) -> int:
    start, stop, step = job.r_range
    r_list = list(range(start, stop + 1, step))

    def one(r: int):
        rows, _ = harness.residual_scan(job.manifold, job.s, [r], job.order)
        return rows[0]

    if job.jobs > 1:
        with ThreadPoolExecutor(max_workers=job.jobs) as pool:
            rows = list(pool.map(one, r_list))
    else:
        rows = [one(r) for r in r_list]
    rows.sort(key=lambda row: row[0])
    if job.output == "json":
        payload = {"manifold": job.manifold, "s": job.s, "order": job.order,
                   "results": [{"r": r, "abs_residual": float(f"{v:.17g}")}
                               for r, v in rows]}
        return _emit(job, payload, 0)
    lines = ["r,s,quantity,re,im,exact"]
    for r, v in rows:
        lines.append(f"{r},{job.s},abs_residual,{v:.17g},0,false")
    return _emit(job, "\n".join(lines), 0)


def run(job: JobSpec) -> int:
    handlers = {"wrt": _run_wrt, "falsetheta": _run_falsetheta,
                "flatconn": _run_flatconn, "gauss": _run_gauss,
                "verify": _run_verify, "sweep": _run_sweep}
    return handlers[job.command](job)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        job = parse_args(argv)
        return run(job)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
