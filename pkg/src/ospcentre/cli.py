"""Command-line front end.

    ospcentre compute phi --M 1 --n 1 --m 2 --format json
    ospcentre verify annihilation --M 1 --n 1 --m 3
    ospcentre verify brauer --m 4

Exit status: 0 when every check passes (or a computation succeeds), 1 when a
check fails, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import repcheck, ssv
from .brauer import brauer_symmetriser, identity_suite
from .errors import InvalidArgument, PoleAtEvaluation
from .reports import VerificationReport
from .superspace import Signature, qxq_check, rep_relations_check

TARGETS = ("phi", "brauer", "rep", "annihilation", "commutativity", "psi", "centrality")
COMPUTE_TARGETS = ("phi", "brauer", "psi")


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ospcentre", description="Segal–Sugawara vectors for osp(M|2n).")
    p.add_argument("command", choices=("compute", "verify"))
    p.add_argument("target", choices=TARGETS)
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=None, help="degree (default 2; 4 for brauer)")
    p.add_argument("--k", type=int, default=None, help="psi: k <= m (default m)")
    p.add_argument("--modes", type=_int_list, default=[0, 1])
    p.add_argument("--degrees", type=_int_list, default=[2, 3])
    p.add_argument("--level", type=_rational, default=None, help="annihilation: K (default critical)")
    p.add_argument("--z", type=_rational, default=Fraction(1))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=50)
    p.add_argument("--rational", action="store_true", help="compute phi from the rational form")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--no-timing", action="store_true", help="omit timing_ms (byte-stable output)")
    return p


def _sig(args) -> Signature:
    if args.M < 0 or args.n < 0 or args.M + 2 * args.n < 1:
        raise UsageError(f"bad signature M={args.M}, n={args.n}")
    return Signature(args.M, args.n)


def _degree(args, default=2, lo=2):
    m = default if args.m is None else args.m
    if m < lo:
        raise UsageError(f"--m must be at least {lo}")
    return m


def _merge(campaign, params, reports) -> VerificationReport:
    out = VerificationReport(campaign, params, sort_checks=False)
    for r in reports:
        out.extend(r, prefix=f"{r.campaign}: " if len(reports) > 1 else "")
    out.finish()
    out.timing_ms = sum(r.timing_ms or 0 for r in reports)
    return out


def _verify(args) -> VerificationReport:
    t = args.target
    if t == "brauer":
        m = _degree(args, default=4, lo=1)
        if m > 4:
            raise UsageError("--m must be at most 4 for brauer")
        return identity_suite(m)
    sig = _sig(args)
    if t == "phi":
        m = _degree(args)
        return _merge("phi", {"M": sig.M, "n": sig.n, "m": m},
                      [ssv.integral_rational_check(sig, m), ssv.odd_length_vanishing(sig, m)])
    if t == "annihilation":
        m = _degree(args)
        return ssv.verify_annihilation(sig, m, args.modes, args.level)
    if t == "commutativity":
        return ssv.verify_commutativity(sig, args.degrees)
    if t == "psi":
        m = _degree(args)
        return ssv.psi_relation_check(sig, m, args.k)
    if t == "centrality":
        m = _degree(args)
        return ssv.ev_centrality_check(sig, m, args.z)
    if t == "rep":
        m = _degree(args)
        reports = [rep_relations_check(sig, mm) for mm in range(2, m + 2)]
        reports.append(qxq_check(sig, min(m, 3), seed=args.seed))
        reports.append(repcheck.verify_rep_identities(sig, m, seed=args.seed, instances=args.instances))
        return _merge("rep", {"M": sig.M, "n": sig.n, "m": m, "seed": args.seed,
                              "instances": args.instances}, reports)
    raise UsageError(f"unknown target {t}")


def _compute(args):
    t = args.target
    if t not in COMPUTE_TARGETS:
        raise UsageError(f"compute supports {', '.join(COMPUTE_TARGETS)}; use verify {t}")
    if t == "brauer":
        m = _degree(args, default=2, lo=1)
        x = brauer_symmetriser(m)
        return {"m": m, "symmetriser": x.to_json()}, f"s^({m}) = {x}"
    sig = _sig(args)
    m = _degree(args)
    if t == "psi":
        k = m if args.k is None else args.k
        try:
            tp = ssv.tau_polynomial(sig, k)
        except PoleAtEvaluation as exc:
            return {"M": sig.M, "n": sig.n, "k": k, "status": "skipped: singular parameters",
                    "detail": str(exc)}, f"skipped: singular parameters ({exc})"
        text = "\n".join(f"psi_{k}{j} = {c.to_text()}" for j, c in enumerate(tp.coeffs))
        return {"M": sig.M, "n": sig.n, **tp.to_json()}, text
    if args.rational:
        try:
            vec = ssv.phi_rational(sig, m)
        except PoleAtEvaluation as exc:
            return {"M": sig.M, "n": sig.n, "m": m, "status": "skipped: singular parameters",
                    "detail": str(exc)}, f"skipped: singular parameters ({exc})"
    else:
        vec = ssv.phi_integral(sig, m)
    return vec.to_json(), vec.to_text()


def run(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        if args.command == "verify":
            report = _verify(args)
            status = 0 if report.passed else 1
            payload = report.to_json(timing=not args.no_timing)
            text = report.to_text()
        else:
            payload, text = _compute(args)
            status = 0
    except (UsageError, InvalidArgument) as exc:
        print(f"ospcentre: error: {exc}", file=sys.stderr)
        return 2
    body = json.dumps(payload, indent=2, ensure_ascii=False) if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        stdout.write(body + "\n")
    return status


def main():
    sys.exit(run())
