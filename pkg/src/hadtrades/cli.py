"""Command-line front end.

Exit codes: 0 success / verified, 1 checked and false (``TRADE no``),
2 usage, parse or size-limit errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from .cyclotomic import RootExp
from .matrix import (
    UnitMatrix,
    dephase,
    first_nonorthogonal_pair,
    format_matrix,
    format_real,
    kronecker,
    parse_matrix,
    verify_hadamard,
    verify_weighing,
)
from .search import (
    SearchReport,
    max_rank_one_area,
    min_support_column_span,
    min_trade_search_real,
    petrescu_paired_trade,
    rank_one_report,
)
from .trades import (
    Trade,
    TradeError,
    apply_switch,
    is_trade,
    lemma1_violations,
    trade_from_json,
    trade_profile,
    trade_space_gf2,
    trade_to_json,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_matrix(path: str) -> UnitMatrix:
    """Read a matrix file and run the matching verification."""
    try:
        M = parse_matrix(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    try:
        if M.has_zeros:
            return verify_weighing(M, int((~M.zeros[0]).sum()))
        return verify_hadamard(M)
    except ValueError as exc:
        raise UsageError(f"{path}: host matrix fails verification ({exc})") from None


def load_trade(path: str, zero_index: bool) -> Trade:
    try:
        return trade_from_json(Path(path).read_text(), zero_index)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _render(M: UnitMatrix, real: bool) -> str:
    return format_real(M) if real else format_matrix(M)


def _verdict(M: UnitMatrix) -> str:
    if M.kind == "weighing":
        return f"weighing: yes (weight {M.weight})"
    return "hadamard: yes" if M.kind == "hadamard" else "hadamard: no"


def _shaded_trade(name: str) -> Trade | None:
    if name == "example-paley8":
        return Trade.negation(8, C.PALEY8_SHADED)
    if name == "petrescu7":
        # one common scalar does not work here; write the conjugate-paired switch
        return petrescu_paired_trade(RootExp(1, 3))
    if name == "w64":
        rows, cols = C.W64_SHADED_BLOCK
        return Trade.negation(6, [(r, c) for r in rows for c in cols])
    return None


def cmd_construct(args) -> int:
    name = args.name
    try:
        if name == "sylvester":
            M = C.sylvester(_need(args.k, "--k"))
        elif name == "fourier":
            M = C.fourier(_need(args.n, "--n"))
        elif name == "paley1":
            M = C.paley_I(_need(args.q, "--q"))
        elif name == "example-paley8":
            M = C.example_paley8()
        elif name == "petrescu7":
            M = C.petrescu7()
        elif name == "w64":
            M = C.weave_w64()
        elif name == "kronecker":
            M = kronecker(load_matrix(_need(args.left, "--left")), load_matrix(_need(args.right, "--right")))
        else:
            raise UsageError(f"unknown construction {name!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    info = f"order: {M.n}\nmodulus: {M.m}\n{_verdict(M)}\n"
    if args.out:
        _write(args.out, _render(M, args.real))
        sys.stdout.write(info)
    else:
        sys.stderr.write(info)
        sys.stdout.write(_render(M, args.real))
    if args.cert:
        T = _shaded_trade(name)
        if T is None:
            raise UsageError(f"{name} has no shaded trade to write")
        Path(args.cert).write_text(trade_to_json(T, zero_index=args.zero_index))
    return EXIT_OK


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"missing required flag {flag}")
    return value


def _pair(i: int, j: int, off: int) -> str:
    return f"{i + off},{j + off}"


def cmd_verify(args) -> int:
    H = load_matrix(args.matrix)
    T = load_trade(args.trade, args.zero_index)
    off = 0 if args.zero_index else 1
    if T.n != H.n:
        raise UsageError(f"certificate order {T.n} does not match matrix order {H.n}")
    try:
        ok = is_trade(H, T)
        switched = apply_switch(H, T)
    except TradeError as exc:
        raise UsageError(str(exc)) from None
    p = trade_profile(T)
    out = [f"TRADE {'yes' if ok else 'no'}", f"size: {T.size} (order {H.n})"]
    out.append(f"profile: d={p.d if p.d is not None else '-'} e={p.e if p.e is not None else '-'}")
    if T.scalar is not None:
        bad = lemma1_violations(H, T)
        if bad:
            out.append(f"lemma1: fail at rows {_pair(*bad[0], off)}")
        else:
            out.append("lemma1: ok")
    if not ok:
        if H.is_real() and not switched.is_real():
            out.append("switched matrix is not real")
        else:
            pair = first_nonorthogonal_pair(switched)
            if pair is not None:
                out.append(f"switched matrix: rows {_pair(*pair, off)} not orthogonal")
            else:
                out.append("switched matrix: row or column weights changed")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_profile(args) -> int:
    T = load_trade(args.trade, args.zero_index)
    p = trade_profile(T)
    sys.stdout.write(
        f"size: {p.size}\n"
        f"rows met: {p.rows_met}\ncols met: {p.cols_met}\n"
        f"row counts: {' '.join(map(str, p.row_counts))}\n"
        f"col counts: {' '.join(map(str, p.col_counts))}\n"
        f"d: {p.d if p.d is not None else '-'}\ne: {p.e if p.e is not None else '-'}\n"
        f"d even or 1: {'yes' if p.d_even_or_one else 'no'}\n"
        f"e even or 1: {'yes' if p.e_even_or_one else 'no'}\n"
    )
    return EXIT_OK


def cmd_dephase(args) -> int:
    H = load_matrix(args.matrix)
    try:
        D = dephase(H)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args.out, _render(D, args.real))
    return EXIT_OK


def cmd_kron(args) -> int:
    M = kronecker(load_matrix(args.left), load_matrix(args.right))
    _write(args.out, _render(M, args.real))
    if args.out:
        sys.stdout.write(f"order: {M.n}\nmodulus: {M.m}\n{_verdict(M)}\n")
    return EXIT_OK


def _parse_cols(text: str, off: int) -> list[int]:
    try:
        cols = [int(t) - off for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad column list {text!r}") from None
    if any(c < 0 for c in cols):
        raise UsageError(f"column indices in {text!r} are below the index base {off}")
    return cols


def cmd_search(args) -> int:
    H = load_matrix(args.input)
    off = 0 if args.zero_index else 1
    host = Path(args.input).name
    try:
        if args.kind == "min-trade":
            rep = min_trade_search_real(H, _need(args.budget, "--budget"), host=host, workers=args.threads)
        elif args.kind == "rank-one":
            rep = rank_one_report(H, _need(args.a, "--a"), _need(args.b, "--b"), host=host)
        elif args.kind == "min-support":
            cols = _parse_cols(_need(args.cols, "--cols"), off)
            rep = min_support_column_span(H, cols, host=host)
        elif args.kind == "max-area":
            rep = max_rank_one_area(H, host=host)
        elif args.kind == "trade-space":
            sp = trade_space_gf2(H)
            rep = SearchReport(
                "trade-space",
                host,
                {},
                value=sp.rank,
                cert=f"gf2-rank {sp.rank}",
                statement=(
                    f"{len(sp.generators)} size-{H.n} rectangular trades span a GF(2) space of rank {sp.rank}; "
                    "membership in the span does not imply being a trade"
                ),
                nodes=len(sp.generators),
            )
            if args.member:
                T = load_trade(args.member, args.zero_index)
                rep.notes.append(f"member: {'yes' if sp.contains(T.cells) else 'no'}")
        else:
            raise UsageError(f"unknown search kind {args.kind!r}")
    except (ValueError, TradeError) as exc:
        raise UsageError(str(exc)) from None
    text = rep.to_text(zero_index=args.zero_index, timing=args.timing)
    if args.out:
        Path(args.out).write_text(text)
        sys.stdout.write(rep.cert_line + "\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hadtrades", description="Trades in complex Hadamard matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--zero-index", action="store_true", help="0-based indices in input and output")

    c = sub.add_parser("construct", help="build a named matrix")
    c.add_argument("name", choices=["sylvester", "fourier", "paley1", "example-paley8", "petrescu7", "w64", "kronecker"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--left")
    c.add_argument("--right")
    c.add_argument("--out")
    c.add_argument("--real", action="store_true", help="write the +/-/0 shorthand")
    c.add_argument("--cert", help="also write the shaded-trade certificate")
    common(c)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a trade certificate against a matrix")
    v.add_argument("matrix")
    v.add_argument("trade")
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="run an exhaustive search")
    s.add_argument("kind", choices=["min-trade", "rank-one", "min-support", "trade-space", "max-area"])
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--budget", type=int)
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--cols")
    s.add_argument("--member", help="trade certificate to test for span membership")
    s.add_argument("--out")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--timing", action="store_true", help="include elapsed time (not deterministic)")
    common(s)
    s.set_defaults(func=cmd_search)

    pr = sub.add_parser("profile", help="row/column profile of a trade certificate")
    pr.add_argument("trade")
    common(pr)
    pr.set_defaults(func=cmd_profile)

    d = sub.add_parser("dephase", help="normalise first row and column to ones")
    d.add_argument("matrix")
    d.add_argument("--out")
    d.add_argument("--real", action="store_true")
    common(d)
    d.set_defaults(func=cmd_dephase)

    k = sub.add_parser("kron", help="Kronecker product of two matrices")
    k.add_argument("left")
    k.add_argument("right")
    k.add_argument("--out")
    k.add_argument("--real", action="store_true")
    common(k)
    k.set_defaults(func=cmd_kron)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        sys.stderr.write(f"error: bad certificate: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
