"""Command-line front end.

Exit codes: 0 when every requested certificate is certified or a report
was produced, 1 when some certificate is uncertified or failed, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence, TextIO

from .certify import (
    TSV_COLUMNS,
    BranchPoint,
    certify_corollary,
    certify_specialization,
    exceptional_set,
)
from .config import FORMATS, RunConfig, load_config
from .family import (
    COROLLARY_F,
    COROLLARY_W,
    RANK0_CUBIC,
    TWIST_43,
    DegenerateParameter,
    NotCoprime,
    WindowEmpty,
    WParam,
    branch_conjugacy,
    check_conditions,
    curve_search,
    family_in_s,
    integral_x_search,
    specialization_plan,
    totally_real_scan,
)
from .local import ScaledReduction
from .perm import (
    centralizer,
    closure,
    cycle,
    order,
    s6_admissible,
    symmetric_group,
    verify_32_generation,
    verify_transposition_generation,
)

RANK0_RANGE = (-(10**3), 10**6)


class UsageError(Exception):
    pass


# -- argument types ------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _w(text: str) -> WParam:
    w = _rational(text)
    return WParam(w.numerator, w.denominator)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _plan(text: str) -> tuple[int, ScaledReduction]:
    """p:alpha:beta:normalizer"""
    parts = text.split(":")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("plan must look like p:alpha:beta:normalizer")
    try:
        p = int(parts[0])
        alpha, beta, norm = (Fraction(x) for x in parts[1:])
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad plan {text!r}")
    if beta == 0 or norm == 0:
        raise argparse.ArgumentTypeError("beta and normalizer must be nonzero")
    return p, ScaledReduction(alpha, beta, norm)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


# -- output --------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if hasattr(x, "to_json"):
        return _jsonable(x.to_json())
    return str(x)


class Emitter:
    def __init__(self, cfg: RunConfig, out: TextIO):
        self.cfg = cfg
        self.out = out
        self._header: tuple[str, ...] | None = None

    def record(self, rec: dict, tsv: Sequence[str] | None = None, columns: Sequence[str] | None = None):
        if self.cfg.format == "json-lines":
            print(json.dumps(_jsonable(rec), sort_keys=False), file=self.out)
            return
        columns = tuple(columns or rec.keys())
        if self._header != columns:
            print("\t".join(columns), file=self.out)
            self._header = columns
        row = tsv if tsv is not None else [_tsv_cell(rec[c]) for c in columns]
        print("\t".join(row), file=self.out)


def _tsv_cell(v) -> str:
    v = _jsonable(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return "" if v is None else str(v).lower() if isinstance(v, bool) else str(v)


# -- subcommands ---------------------------------------------------------

def cmd_check_w(args, cfg: RunConfig, em: Emitter) -> int:
    rep = check_conditions(args.w, cfg.effort)
    rec = rep.to_json()
    rec["plan"] = specialization_plan(args.w).to_json() if rep.c_positive else None
    em.record(rec)
    return 0


def cmd_search_w(args, cfg: RunConfig, em: Emitter) -> int:
    H = args.height
    on_curve = None
    if args.on_curve is not None:
        on_curve = {pt.W for pt in curve_search(args.on_curve, TWIST_43, H)}
    for b in range(1, H + 1):
        for a in range(-H, H + 1):
            if a == 0 or math.gcd(a, b) != 1:
                continue
            w = Fraction(a, b)
            if on_curve is not None and w not in on_curve:
                continue
            rep = check_conditions(w, cfg.effort)
            if rep.a_ok and rep.b_ok:
                em.record(rep.to_json())
    return 0


def _certify_job(job) -> object:
    kind, payload, cfg = job
    kw = dict(effort=cfg.effort, seed=cfg.seed, witness_bound=cfg.witness_bound)
    if kind == "corollary":
        return certify_corollary(payload, **kw)
    w, s, plans = payload
    return certify_specialization(w, s, plans=plans, **kw)


def _run_jobs(jobs: list, cfg: RunConfig) -> list:
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_certify_job, jobs))
    return [_certify_job(j) for j in jobs]


def _emit_certs(certs, em: Emitter) -> int:
    for c in certs:
        rec = c.to_json()
        if "u" in c.extra:
            rec = {"u": str(c.extra["u"]), **rec}
        em.record(rec, c.tsv_row(), TSV_COLUMNS)
    return 0 if all(c.certified for c in certs) else 1


def cmd_certify(args, cfg: RunConfig, em: Emitter) -> int:
    plans: dict[int, list[ScaledReduction]] = {}
    for p, pl in args.plan or ():
        plans.setdefault(p, []).append(pl)
    try:
        certs = _run_jobs([("certify", (args.w, args.s, plans), cfg)], cfg)
    except (BranchPoint, DegenerateParameter) as exc:
        raise UsageError(str(exc))
    return _emit_certs(certs, em)


def cmd_corollary(args, cfg: RunConfig, em: Emitter) -> int:
    if not args.u:
        raise UsageError("no values of u given")
    for u in args.u:
        if math.gcd(u, 30) != 1:
            raise UsageError(f"u = {u} is not coprime to 30")
    try:
        certs = _run_jobs([("corollary", u, cfg) for u in args.u], cfg)
    except NotCoprime as exc:
        raise UsageError(str(exc))
    return _emit_certs(certs, em)


def cmd_exceptional_set(args, cfg: RunConfig, em: Emitter) -> int:
    F = COROLLARY_F if args.w.w == COROLLARY_W else family_in_s(args.w)
    primes = sorted(exceptional_set(F, args.group_order, cfg.effort))
    em.record({"w": str(args.w), "group_order": args.group_order, "exceptional_set": primes})
    return 0


def group_facts() -> dict:
    S5 = symmetric_group(5)
    t = cycle(5, (1, 2))
    C = centralizer(S5, t)
    return {
        "closure_12_12345_order": closure([t, cycle(5, (1, 2, 3, 4, 5))]).order,
        "centralizer_transposition_order": C.order,
        "centralizer_has_order_6_element": any(order(g) == 6 for g in C.elements),
        "verify_32_generation": verify_32_generation(),
        "verify_transposition_generation_5": verify_transposition_generation(5),
        "s6_admissible": [
            s6_admissible([cycle(6, (1, 2))]),
            s6_admissible([cycle(6, (1, 2)), cycle(6, (3, 4, 5))]),
            s6_admissible([cycle(6, (1, 2)), cycle(6, (3, 4))]),
        ],
    }


def cmd_group_facts(args, cfg: RunConfig, em: Emitter) -> int:
    facts = group_facts()
    if args.with_s6:
        facts["verify_transposition_generation_6"] = verify_transposition_generation(6)
    em.record(facts)
    return 0


def cmd_curve_search(args, cfg: RunConfig, em: Emitter) -> int:
    if args.which == "43":
        H = args.height or cfg.curve_height
        pts = curve_search(43, TWIST_43, H)
        rec = {"curve": "43 Y^2 = (-50 W^2 + 27)(10 W^2 + 8 W + 1)", "height": H}
    else:
        lo, hi = RANK0_RANGE
        pts = integral_x_search(RANK0_CUBIC, lo, hi)
        rec = {"curve": "Y^2 = X (X - 15)(X - 24)", "x_range": [lo, hi]}
    rec["points"] = [p.to_json() for p in pts]
    rec["count_points"] = len(pts)
    rec["count_distinct_W"] = len({p.W for p in pts})
    em.record(rec)
    return 0


def cmd_totally_real(args, cfg: RunConfig, em: Emitter) -> int:
    try:
        hits = totally_real_scan(args.w, args.resolution)
    except WindowEmpty as exc:
        em.record({"w": str(args.w), "s0": [], "note": str(exc)})
        return 0
    em.record({"w": str(args.w), "s0": [str(s) for s, _ in hits], "real_roots": 5})
    return 0


def cmd_branch(args, cfg: RunConfig, em: Emitter) -> int:
    em.record({"w": str(args.w), "branch_points_conjugate": branch_conjugacy(args.w)})
    return 0


# -- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quinticcert", description=__doc__.splitlines()[0])
    ap.add_argument("--config", help="JSON config file (default: $QUINTICCERT_CONFIG)")
    ap.add_argument("--format", choices=FORMATS)
    ap.add_argument("--output", "-o", help="write to this file instead of standard output")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--jobs", type=_positive)
    ap.add_argument("--trial-bound", type=_positive)
    ap.add_argument("--rho-iterations", type=_positive)
    ap.add_argument("--time-limit", type=float)
    ap.add_argument("--witness-bound", type=_positive)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-w", help="conditions a), b), b') for one w")
    p.add_argument("--w", type=_w, required=True)
    p.set_defaults(func=cmd_check_w)

    p = sub.add_parser("search-w", help="all w = a/b, |a|, b <= H, passing a) and b)")
    p.add_argument("--height", type=_positive, required=True)
    p.add_argument("--on-curve", type=int, metavar="D",
                   help="keep only W on D Y^2 = (-50W^2+27)(10W^2+8W+1)")
    p.set_defaults(func=cmd_search_w)

    p = sub.add_parser("certify", help="certificate for f_{w,s}")
    p.add_argument("--w", type=_w, required=True)
    p.add_argument("--s", type=_rational, required=True)
    p.add_argument("--plan", type=_plan, action="append", metavar="P:ALPHA:BETA:N",
                   help="extra scaled reduction N^-1 f(ALPHA + BETA X) mod P (repeatable)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("corollary", help="certificates for w = -2/3, sigma = 86 u^3")
    p.add_argument("--u", type=_int_list, required=True)
    p.set_defaults(func=cmd_corollary)

    p = sub.add_parser("exceptional-set", help="exceptional primes of the family at w")
    p.add_argument("--w", type=_w, required=True)
    p.add_argument("--group-order", type=_positive, default=120)
    p.set_defaults(func=cmd_exceptional_set)

    p = sub.add_parser("group-facts", help="exhaustive permutation-group verifications")
    p.add_argument("--with-s6", action="store_true", help="also run the n = 6 transposition check")
    p.set_defaults(func=cmd_group_facts)

    p = sub.add_parser("curve-search", help="naive rational point searches")
    p.add_argument("--which", choices=("43", "rank0"), required=True)
    p.add_argument("--height", type=_positive)
    p.set_defaults(func=cmd_curve_search)

    p = sub.add_parser("totally-real", help="s0 with f_{w,s0} totally real")
    p.add_argument("--w", type=_w, required=True)
    p.add_argument("--resolution", type=_positive, default=3)
    p.set_defaults(func=cmd_totally_real)

    p = sub.add_parser("branch", help="are the finite non-zero branch points conjugate")
    p.add_argument("--w", type=_w, required=True)
    p.set_defaults(func=cmd_branch)
    return ap


VALUE_FLAGS = ("--w", "--s", "--u", "--plan")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--w -2/3`` into ``--w=-2/3``; argparse reads -2/3 as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    argv = _attach_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args.config).updated(
            format=args.format, output=args.output, seed=args.seed, jobs=args.jobs,
            trial_bound=args.trial_bound, rho_iterations=args.rho_iterations,
            time_limit=args.time_limit, witness_bound=args.witness_bound,
        )
    except (ValueError, OSError) as exc:
        print(f"quinticcert: config error: {exc}", file=sys.stderr)
        return 2
    out = open(cfg.output, "w") if cfg.output else sys.stdout
    try:
        return args.func(args, cfg, Emitter(cfg, out))
    except UsageError as exc:
        print(f"quinticcert: {exc}", file=sys.stderr)
        return 2
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
