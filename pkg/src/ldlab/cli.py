"""Command-line front end: verb-noun subcommands over the library.

Exit codes: 0 on success, 1 when a precondition or resource bound is
violated (the message names it), 2 on usage errors.  With --format json
the payload is wrapped as {"schema": "<name>/1", "data": ...}; all output
is deterministic given the flags.
"""

import argparse
import json
import sys

from . import braid as br
from . import conjugacy, games, homology, invariants, laver, magma, order, ybe
from .errors import DomainError, ResourceError


class _UsageError(Exception):
    pass


def _emit(args, name, data, text):
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"schema": f"{name}/1", "data": data}))
    else:
        print(text)


def _word_text(letters) -> str:
    return " ".join(str(l) for l in letters)


def _csv_rows(grid) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in grid)


# ---------------------------------------------------------------- laver

def _cmd_laver_table(args) -> int:
    grid = laver.build_laver_table(args.n).dense()
    _emit(args, "laver-table", grid, _csv_rows(grid))
    return 0


def _cmd_laver_period(args) -> int:
    value = laver.period(laver.build_laver_table(args.n), args.p)
    _emit(args, "laver-period", {"n": args.n, "p": args.p, "period": value},
          str(value))
    return 0


# -------------------------------------------------------------- cocycle

def _cmd_cocycle_rank(args) -> int:
    M = magma.parse_rack_spec(args.rack)
    if args.degree == 2:
        rank = homology.cocycle_space(M, 2)[0]
    else:
        rank = homology.three_cocycle_rank(M)
    _emit(args, "cocycle-rank", {"rack": args.rack, "degree": args.degree,
                                 "rank": rank}, str(rank))
    return 0


def _cmd_cocycle_basis(args) -> int:
    if args.degree != 2:
        raise DomainError("basis output needs --degree 2")
    M = magma.parse_rack_spec(args.rack)
    grids = [[list(row) for row in f.grid()]
             for f in homology.cocycle_space(M, 2)[1]]
    text = "\n\n".join(_csv_rows(g) for g in grids)
    _emit(args, "cocycle-basis", grids, text)
    return 0


def _cmd_cocycle_psi(args) -> int:
    grid = [list(row) for row in homology.psi(args.q, args.n).grid()]
    _emit(args, "cocycle-psi", grid, _csv_rows(grid))
    return 0


# ---------------------------------------------------------------- braid

def _cmd_braid_nf(args) -> int:
    b = br.from_word(br.parse_word(args.word, args.strands))
    perms = " ; ".join(" ".join(str(v) for v in f) for f in b.factors)
    text = f"{b.inf} | {perms}" if perms else f"{b.inf} |"
    _emit(args, "braid-nf", {"strands": b.n, "inf": b.inf,
                             "factors": [list(f) for f in b.factors]}, text)
    return 0


def _cmd_braid_eq(args) -> int:
    left = br.from_word(br.parse_word(args.word, args.strands))
    right = br.from_word(br.parse_word(args.word2, args.strands))
    same = br.equal(left, right)
    _emit(args, "braid-eq", same, "true" if same else "false")
    return 0


# ---------------------------------------------------------------- order

def _cmd_order_compare(args) -> int:
    rel = order.compare_D(br.parse_word(args.word, args.strands),
                          br.parse_word(args.word2, args.strands),
                          args.strands)
    _emit(args, "order-compare", rel, rel)
    return 0


def _cmd_order_rank3(args) -> int:
    text = order.render_ordinal(order.rank_bp3(br.parse_word(args.word, 3)))
    _emit(args, "order-rank3", text, text)
    return 0


def _cmd_order_anf(args) -> int:
    word = order.alternating_normal_form(
        br.parse_word(args.word, args.strands), args.strands)
    _emit(args, "order-anf", list(word.letters), _word_text(word.letters))
    return 0


def _cmd_order_floor(args) -> int:
    value = order.d_floor(br.parse_word(args.word, args.strands), args.strands)
    _emit(args, "order-floor", value, str(value))
    return 0


# ------------------------------------------------------------------ ybe

def _cmd_ybe_matrix(args) -> int:
    rho = ybe.rack_to_solution(magma.parse_rack_spec(args.rack))
    print(ybe.export_matrix(rho, args.format))
    return 0


def _cmd_ybe_check(args) -> int:
    rho = ybe.rack_to_solution(magma.parse_rack_spec(args.rack))
    law = ybe.satisfies_braid_equation(rho)
    invertible = ybe.is_invertible(rho)
    data = {"yang_baxter": bool(law), "invertible": invertible,
            "witness": list(law.witness) if law.witness else None}
    lines = [f"yang_baxter={'true' if law else 'false'}",
             f"invertible={'true' if invertible else 'false'}"]
    if law.witness:
        lines.append("witness=" + " ".join(str(v) for v in law.witness))
    _emit(args, "ybe-check", data, "\n".join(lines))
    return 0


# ---------------------------------------------------------------- color

def _parse_colors(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise DomainError(f"colours must be comma-separated integers, got {text!r}") from None


def _cmd_color_count(args) -> int:
    M = magma.parse_rack_spec(args.rack)
    word = br.parse_word(args.word, args.strands)
    value = invariants.count_closure_colourings(M, word, args.strands)
    _emit(args, "color-count", value, str(value))
    return 0


def _cmd_color_act(args) -> int:
    M = magma.parse_rack_spec(args.rack)
    colours = _parse_colors(args.colors)
    word = br.parse_word(args.word, len(colours))
    if any(l < 0 for l in word.letters):
        out = invariants.act_full(M, colours, word)
    else:
        out = invariants.act_positive(M, colours, word)
    _emit(args, "color-act", list(out), ",".join(str(v) for v in out))
    return 0


def _cmd_color_laver(args) -> int:
    mid = _parse_colors(args.mid)
    word = br.parse_word(args.word, len(mid))
    left, right = invariants.laver_fraction_colouring(
        args.n, word, mid, args.mode)
    text = (",".join(str(v) for v in left) + "\n"
            + ",".join(str(v) for v in right))
    _emit(args, "color-laver", [list(left), list(right)], text)
    return 0


def _cmd_quandle_present(args) -> int:
    word = br.parse_word(args.word, args.strands)
    if args.group:
        text = invariants.wirtinger_group(word, args.strands)
        _emit(args, "quandle-present", text, text)
        return 0
    pres = invariants.fundamental_quandle(word, args.strands)
    text = pres.render()
    _emit(args, "quandle-present", text, text)
    return 0


# ----------------------------------------------------------------- conj

def _cmd_conj_class(args) -> int:
    cls = conjugacy.positive_conjugates(
        br.parse_word(args.word, args.strands), args.strands)
    words = [list(br.to_word(m).letters) for m in cls.members]
    text = "\n".join(_word_text(w) for w in words)
    _emit(args, "conj-class", words, text)
    return 0


def _cmd_conj_mu(args) -> int:
    rep = conjugacy.mu(br.parse_word(args.word, args.strands), args.strands)
    letters = br.to_word(rep).letters
    _emit(args, "conj-mu", list(letters), _word_text(letters))
    return 0


def _table_word(letters) -> str:
    return _word_text(letters) if letters else "-"


def _cmd_conj_sweep(args) -> int:
    rows = conjugacy.sweep_mu_delta(args.maxlen)
    data = [{"word": list(r.word), "mu": list(r.mu_word),
             "agrees": r.agrees} for r in rows]
    text = "\n".join(
        f"{_table_word(r.word)} | {_table_word(r.mu_word)} | "
        f"{'agrees' if r.agrees else 'disagrees'}" for r in rows)
    _emit(args, "conj-sweep", data, text)
    return 0


# ----------------------------------------------------------------- game

def _cmd_game_g3(args) -> int:
    word = br.parse_word(args.word, 3)
    if args.cap < 0:
        raise DomainError(f"step cap must be >= 0, got {args.cap}")
    lines = []
    if args.trace:
        trace = games.g3_trace(word, limit=args.cap + 1)
        lines.extend(_word_text(t.letters) for t in trace)
        done = not trace or trace[-1].letters == ()
        steps = len(trace) - 1 if trace else 0
    else:
        state = games.g3_run(games.g3_start(word), args.cap)
        done, steps = state.is_trivial, state.steps
    lines.append(f"steps={steps}" if done else f"aborted at={steps}")
    if getattr(args, "format", "text") == "json":
        data = {"steps": steps, "finished": done}
        if args.trace:
            data["trace"] = lines[:-1]
        print(json.dumps({"schema": "game-g3/1", "data": data}))
    else:
        print("\n".join(lines))
    return 0


def _cmd_ack(args) -> int:
    if args.diag:
        if len(args.values) != 1:
            raise _UsageError("ack --diag takes exactly one integer")
        value = games.ackermann_diag(args.values[0], bound=args.bound)
    else:
        if len(args.values) != 2:
            raise _UsageError("ack takes two integers: level and argument")
        value = games.ackermann(args.values[0], args.values[1],
                                bound=args.bound)
    _emit(args, "ack", value, str(value))
    return 0


# ------------------------------------------------------------- plumbing

def _add_format(sub, choices=("text", "json"), default="text"):
    sub.add_argument("--format", choices=list(choices), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ldlab",
        description="Laver tables, rack cohomology, Yang-Baxter matrices, "
                    "braid orders, games")
    top = parser.add_subparsers(dest="noun", required=True)

    p = top.add_parser("laver").add_subparsers(dest="verb", required=True)
    s = p.add_parser("table")
    s.add_argument("--n", type=int, required=True)
    _add_format(s, ("csv", "json"), "csv")
    s.set_defaults(fn=_cmd_laver_table)
    s = p.add_parser("period")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    _add_format(s)
    s.set_defaults(fn=_cmd_laver_period)

    p = top.add_parser("cocycle").add_subparsers(dest="verb", required=True)
    s = p.add_parser("rank")
    s.add_argument("--rack", required=True)
    s.add_argument("--degree", type=int, choices=(2, 3), required=True)
    _add_format(s)
    s.set_defaults(fn=_cmd_cocycle_rank)
    s = p.add_parser("basis")
    s.add_argument("--rack", required=True)
    s.add_argument("--degree", type=int, default=2)
    _add_format(s, ("csv", "json"), "csv")
    s.set_defaults(fn=_cmd_cocycle_basis)
    s = p.add_parser("psi")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    _add_format(s, ("csv", "json"), "csv")
    s.set_defaults(fn=_cmd_cocycle_psi)

    p = top.add_parser("braid").add_subparsers(dest="verb", required=True)
    s = p.add_parser("nf")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_braid_nf)
    s = p.add_parser("eq")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("word")
    s.add_argument("word2")
    _add_format(s)
    s.set_defaults(fn=_cmd_braid_eq)

    p = top.add_parser("order").add_subparsers(dest="verb", required=True)
    s = p.add_parser("compare")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("word")
    s.add_argument("word2")
    _add_format(s)
    s.set_defaults(fn=_cmd_order_compare)
    s = p.add_parser("rank3")
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_order_rank3)
    s = p.add_parser("anf")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_order_anf)
    s = p.add_parser("floor")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_order_floor)

    p = top.add_parser("ybe").add_subparsers(dest="verb", required=True)
    s = p.add_parser("matrix")
    s.add_argument("--rack", required=True)
    s.add_argument("--format", choices=("coo", "csv"), default="coo")
    s.set_defaults(fn=_cmd_ybe_matrix)
    s = p.add_parser("check")
    s.add_argument("--rack", required=True)
    _add_format(s)
    s.set_defaults(fn=_cmd_ybe_check)

    p = top.add_parser("color").add_subparsers(dest="verb", required=True)
    s = p.add_parser("count")
    s.add_argument("--rack", required=True)
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_color_count)
    s = p.add_parser("act")
    s.add_argument("--rack", required=True)
    s.add_argument("--colors", required=True)
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_color_act)
    s = p.add_parser("laver")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mid", required=True)
    s.add_argument("--mode", choices=("fraction", "delta"),
                   default="fraction")
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_color_laver)

    p = top.add_parser("quandle").add_subparsers(dest="verb", required=True)
    s = p.add_parser("present")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("--group", action="store_true")
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_quandle_present)

    p = top.add_parser("conj").add_subparsers(dest="verb", required=True)
    s = p.add_parser("class")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_conj_class)
    s = p.add_parser("mu")
    s.add_argument("--strands", type=int, required=True)
    s.add_argument("word")
    _add_format(s)
    s.set_defaults(fn=_cmd_conj_mu)
    s = p.add_parser("sweep-conjecture")
    s.add_argument("--maxlen", type=int, required=True)
    _add_format(s)
    s.set_defaults(fn=_cmd_conj_sweep)

    p = top.add_parser("game").add_subparsers(dest="verb", required=True)
    s = p.add_parser("g3")
    s.add_argument("word")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--cap", type=int, default=games.DEFAULT_STEP_CAP)
    _add_format(s)
    s.set_defaults(fn=_cmd_game_g3)

    s = top.add_parser("ack")
    s.add_argument("values", type=int, nargs="+")
    s.add_argument("--diag", action="store_true")
    s.add_argument("--bound", type=int, default=games.DEFAULT_ACK_BOUND)
    _add_format(s)
    s.set_defaults(fn=_cmd_ack)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
