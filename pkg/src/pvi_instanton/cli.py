"""Command-line front end.

Every subcommand prints a JSON :class:`VerificationReport` on stdout and
exits 0 if all cases pass, 1 on a verification failure and 2 on bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .connection import eigencondition_residual, solve_lambda0, theta_m0
from .monad import generate_coeffs, space_dims, verify_monad
from .okamoto import OkamotoOp, apply_word, hierarchy_check
from .properties import DEFAULT_CASES, DEFAULT_SEED, property_suite
from .pvi import (
    PviSolution,
    NotInCatalog,
    Theta,
    catalog,
    catalog_fg,
    catalog_keys,
    fg_from_lambda,
    pvi_residual,
    solution_from_json,
    solution_json,
)
from .report import PASS, VerificationReport

__all__ = ["run", "main", "solution_record"]

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _sign(text: str) -> str:
    table = {"plus": "+", "+": "+", "minus": "-", "-": "-"}
    if text not in table:
        raise argparse.ArgumentTypeError("sign must be plus or minus")
    return table[text]


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return n


def solution_record(s: PviSolution) -> dict:
    """JSON record of a solution; uses the ``(f, g)`` form when both are even."""
    m, sign = s.label if s.label else (None, None)
    f, g = fg_from_lambda(s.lam)
    if f.is_even() and g.is_even():
        rec = solution_json(m if m is not None else -1, sign or "+", f, g, s.theta)
        if m is None:
            rec["m"], rec["sign"] = None, None
        return rec
    return {
        "m": m,
        "sign": sign,
        "theta": [str(x) for x in s.theta],
        "lambda": {
            "num": [str(c) for c in s.lam.num.coeffs()],
            "den": [str(c) for c in s.lam.den.coeffs()],
        },
    }


def _write_hashed(out: str | None, payload) -> str | None:
    if not out:
        return None
    text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    name = hashlib.sha256(text.encode()).hexdigest()[:16] + ".json"
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    (path / name).write_text(text)
    return name


def _residual_case(rep: VerificationReport, name: str, s: PviSolution) -> None:
    with rep.case(name) as c:
        res = pvi_residual(s)
        ok = res.is_zero()
        c.status = PASS if ok else "fail"
        c.detail = f"theta = {s.theta}; residual " + (
            "0" if ok else f"nonzero (numerator degree {res.num.degree})"
        )


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify_pvi(args) -> VerificationReport:
    sign_word = "plus" if args.sign == "+" else "minus"
    rep = VerificationReport(f"verify pvi --m {args.m} --sign {sign_word}")
    s = catalog(args.m, args.sign)
    _residual_case(rep, f"pvi residual L{args.m}{args.sign}", s)
    written = _write_hashed(args.out, solution_json(args.m, args.sign))
    if written:
        rep.cases[-1].detail += f"; wrote {written}"
    return rep


def cmd_monad_verify(args) -> VerificationReport:
    rep = verify_monad(generate_coeffs(args.m))
    d = space_dims(args.m)
    rep.add("dimW = m(m+1)/2", d.dimW == args.m * (args.m + 1) // 2, f"dimW={d.dimW}")
    rep.add("rank = 2", d.rank == 2, f"dimVhat={d.dimVhat} dimV={d.dimV} rank={d.rank} c2={d.c2}")
    return rep


def cmd_derive_m0(args) -> VerificationReport:
    sign_word = "plus" if args.sign == "+" else "minus"
    rep = VerificationReport(f"derive-m0 --sign {sign_word}")
    lam = None
    with rep.case(f"lambda0{args.sign} from the eigenvector condition") as c:
        lam = solve_lambda0(args.sign)
        ok = lam == catalog(0, args.sign).lam
        c.status, c.detail = (PASS if ok else "fail"), f"lambda = {lam}"
    if lam is not None:
        with rep.case("eigenvector condition at lambda") as c:
            res = eigencondition_residual(args.sign, lam)
            c.status, c.detail = (PASS if not res else "fail"), f"<r,[h,r]> = {res}"
    with rep.case("theta from residue eigenvalues") as c:
        theta = Theta(*theta_m0(1 if args.sign == "+" else -1))
        want = catalog(0, args.sign).theta
        c.status, c.detail = (PASS if theta == want else "fail"), f"theta = {theta}"
    if lam is not None:
        with rep.case("derived solution solves PVI") as c:
            res = pvi_residual(PviSolution(lam, theta))
            c.status, c.detail = (PASS if res.is_zero() else "fail"), "residual " + ("0" if res.is_zero() else "nonzero")
    return rep


def cmd_okamoto_apply(args) -> VerificationReport:
    sign_word = "plus" if args.sign == "+" else "minus"
    try:
        op = OkamotoOp.parse(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = VerificationReport(f'okamoto apply --word "{args.word}" --m {args.m} --sign {sign_word}')
    start = catalog(args.m, args.sign)
    result = None
    with rep.case(f"apply {op} to L{args.m}{args.sign}") as c:
        result = apply_word(op, start)
        hits = [(m, s) for m, s in catalog_keys() if catalog(m, s) == result]
        if hits:
            result = PviSolution(result.lam, result.theta, hits[0])
        c.status = PASS
        c.detail = f"theta = {result.theta}; " + (
            "equals " + ", ".join(f"L{m}{s}" for m, s in hits) if hits else "not a catalog entry"
        )
    if result is not None:
        _residual_case(rep, "image solves PVI", result)
        written = _write_hashed(args.out, solution_record(result))
        if written:
            rep.cases[0].detail += f"; wrote {written}"
    return rep


def cmd_hierarchy(args) -> VerificationReport:
    rep = hierarchy_check(args.max_m)
    if args.out:
        from .okamoto import QINV, Q

        records = []
        for sign, op in (("+", Q), ("-", QINV)):
            cur = catalog(0, sign)
            for m in range(1, args.max_m + 1):
                nxt = apply_word(op, cur)
                cur = PviSolution(nxt.lam, nxt.theta, (m, sign))
                records.append(solution_record(cur))
        written = _write_hashed(args.out, records)
        rep.add("outputs written", True, f"wrote {written}")
    return rep


def cmd_catalog_export(args) -> VerificationReport | list:
    records = [solution_json(m, s) for m, s in catalog_keys()]
    rep = VerificationReport("catalog export")
    for (m, s), rec in zip(catalog_keys(), records):
        f, g = catalog_fg(m, s)
        bound = 2 * m * (m + 1)
        ok = f.is_even() and g.is_even() and max(f.degree, g.degree) <= bound
        rep.add(f"L{m}{s} even of degree <= {bound}", ok, f"deg f = {f.degree}, deg g = {g.degree}")
    if not args.out:
        return records
    rep.add("catalog written", True, f"wrote {_write_hashed(args.out, records)}")
    return rep


def cmd_catalog_import(args) -> VerificationReport:
    try:
        data = json.loads(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    if isinstance(data, dict):
        data = [data]
    rep = VerificationReport(f"catalog import {args.file}")
    for k, rec in enumerate(data):
        try:
            s = solution_from_json(rec)
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"record {k}: malformed solution ({exc})") from None
        _residual_case(rep, f"record {k} (m={rec.get('m')}, sign={rec.get('sign')}) solves PVI", s)
    return rep


def cmd_selftest(args) -> VerificationReport:
    return property_suite(args.seed, args.cases)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pvi-instanton", description="Exact verification of algebraic PVI solutions.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_out(sp):
        sp.add_argument("--out", metavar="DIR", help="write heavy outputs to DIR, named by content hash")
        return sp

    verify = sub.add_parser("verify", help="verify a cataloged solution")
    vsub = verify.add_subparsers(dest="what", required=True)
    vp = with_out(vsub.add_parser("pvi", help="PVI residual of a catalog entry"))
    vp.add_argument("--m", type=_nonneg, required=True)
    vp.add_argument("--sign", type=_sign, required=True)
    vp.set_defaults(func=cmd_verify_pvi)

    monad = sub.add_parser("monad", help="monad coefficient checks")
    msub = monad.add_subparsers(dest="what", required=True)
    mv = msub.add_parser("verify")
    mv.add_argument("--m", type=_nonneg, required=True)
    mv.set_defaults(func=cmd_monad_verify)

    d0 = sub.add_parser("derive-m0", help="derive lambda0 from the trivial-bundle connection")
    d0.add_argument("--sign", type=_sign, required=True)
    d0.set_defaults(func=cmd_derive_m0)

    ok = sub.add_parser("okamoto", help="Okamoto transformations")
    osub = ok.add_subparsers(dest="what", required=True)
    oa = with_out(osub.add_parser("apply"))
    oa.add_argument("--word", required=True, help='e.g. "R5", "B", "Q", "R1 R2 R3"')
    oa.add_argument("--m", type=_nonneg, required=True)
    oa.add_argument("--sign", type=_sign, required=True)
    oa.set_defaults(func=cmd_okamoto_apply)

    hi = with_out(sub.add_parser("hierarchy", help="creation-operator hierarchy against the catalog"))
    hi.add_argument("--max-m", type=_nonneg, required=True)
    hi.set_defaults(func=cmd_hierarchy)

    cat = sub.add_parser("catalog", help="catalog import/export")
    csub = cat.add_subparsers(dest="what", required=True)
    ce = with_out(csub.add_parser("export"))
    ce.set_defaults(func=cmd_catalog_export)
    ci = csub.add_parser("import")
    ci.add_argument("file")
    ci.set_defaults(func=cmd_catalog_import)

    st = sub.add_parser("selftest", help="randomized property suite")
    st.add_argument("--seed", type=int, default=DEFAULT_SEED)
    st.add_argument("--cases", type=_nonneg, default=DEFAULT_CASES)
    st.set_defaults(func=cmd_selftest)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        out = args.func(args)
    except NotInCatalog as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if isinstance(out, VerificationReport):
        print(out.to_json(indent=1), file=stdout)
        return EXIT_PASS if out.passed else EXIT_FAIL
    print(json.dumps(out, indent=1), file=stdout)
    return EXIT_PASS


def main() -> None:
    sys.exit(run())
