"""Command-line front end.

Subcommands:
  test            decide sortability of one permutation (exit 0 true, 1 false)
  witness         print a sorting run word, or NOT SORTABLE
  count           emit "n a(n)" lines by tree search, the counting DP, or
                  brute force
  verify-appendix diff DP counts against the shipped reference tables
  dek experiment  compare the two DEK strategies at every substantive choice
  serve           run the HTTP service

Usage errors exit 2, computation failures exit 3.
"""

from __future__ import annotations

import argparse
import itertools
import sys

from . import bfile, epochs, oracle, pile, treecount, webservice
from .perms import NotAPermutation, ParseError, SortClass, parse_permutation

__all__ = ["main"]

_CLASS_BY_NAME = {
    "deque": SortClass.DEQUE,
    "pstacks": SortClass.PARALLEL_STACKS,
    "stack": SortClass.SINGLE_STACK,
}


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dequesort",
        description="Deque/parallel-stack sortability tools and the DEK advisor",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="decide sortability of a permutation")
    p_test.add_argument("--class", dest="cls", required=True, choices=["deque", "pstacks"])
    p_test.add_argument("--variant", choices=["original", "corrected"], default="corrected")
    p_test.add_argument("perm", help='e.g. "2 5 4 1 6 3"')

    p_wit = sub.add_parser("witness", help="print a sorting run word")
    p_wit.add_argument("perm")

    p_replay = sub.add_parser("replay", help="execute a run word against a permutation")
    p_replay.add_argument("perm")
    p_replay.add_argument("word", help="letters a/b/y/z, e.g. abyzay")

    p_count = sub.add_parser("count", help="count sortable permutations per length")
    p_count.add_argument("--class", dest="cls", required=True, choices=["deque", "pstacks", "stack"])
    p_count.add_argument("--method", required=True, choices=["tree", "dp", "oracle"])
    p_count.add_argument("--max-n", type=int, required=True)
    p_count.add_argument("--out", help="write the b-file here instead of stdout")

    p_ver = sub.add_parser("verify-appendix", help="diff DP counts against shipped tables")
    p_ver.add_argument("--class", dest="cls", required=True, choices=["deque", "pstacks"])
    p_ver.add_argument("--max-n", type=int, required=True)

    p_dek = sub.add_parser("dek", help="DEK game experiments")
    dek_sub = p_dek.add_subparsers(dest="dek_command", required=True)
    p_exp = dek_sub.add_parser("experiment", help="compare strategies 1 and 2")
    p_exp.add_argument("--max-n", type=int, required=True)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=webservice.DEFAULT_PORT)
    p_serve.add_argument("--state-file")
    p_serve.add_argument("--ui-dir", help="also serve this directory at /")

    return parser


def _cmd_test(args) -> int:
    perm = parse_permutation(args.perm)
    if args.cls == "deque":
        variant = pile.Variant(args.variant)
        result = pile.deque_sortable(perm, variant)
    else:
        result = pile.pstack_sortable(perm)
    print("true" if result else "false")
    return 0 if result else 1


def _cmd_witness(args) -> int:
    perm = parse_permutation(args.perm)
    try:
        print(pile.extract_witness(perm))
        return 0
    except pile.NotSortable:
        print("NOT SORTABLE")
        return 1


def _cmd_replay(args) -> int:
    perm = parse_permutation(args.perm)
    try:
        word = oracle.parse_op_word(args.word)
        state = oracle.replay_word(perm, word)
    except (oracle.IllegalOperation, oracle.NotSorted, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if state.complete:
        print("sorted")
        return 0
    print(
        f"output 1..{state.output_next - 1} | deque {' '.join(map(str, state.deque))}"
        f" | input {' '.join(map(str, state.input_rest))}"
    )
    return 1


def _oracle_counts(cls: SortClass, max_n: int) -> list[int]:
    predicate = {
        SortClass.DEQUE: oracle.deque_sortable_bruteforce,
        SortClass.PARALLEL_STACKS: oracle.pstack_sortable_bruteforce,
        SortClass.SINGLE_STACK: oracle.single_stack_sortable,
    }[cls]
    return [
        sum(1 for p in itertools.permutations(range(1, n + 1)) if predicate(p))
        for n in range(1, max_n + 1)
    ]


def _cmd_count(args) -> int:
    cls = _CLASS_BY_NAME[args.cls]
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    if args.method == "dp":
        if cls is SortClass.SINGLE_STACK:
            raise UsageError("the counting DP handles deque|pstacks only")
        counts = epochs.count_table(cls, args.max_n)
    elif args.method == "tree":
        counts = list(treecount.count_by_tree(cls, args.max_n).counts)
    else:
        counts = _oracle_counts(cls, args.max_n)
    text = bfile.format_b_file(counts)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    cls = _CLASS_BY_NAME[args.cls]
    reference = bfile.load_reference_counts(cls)
    if args.max_n < 1 or args.max_n > max(reference):
        raise UsageError(f"--max-n must be in 1..{max(reference)} for {args.cls}")
    counts = epochs.count_table(cls, args.max_n)
    bad = 0
    for n, value in enumerate(counts, start=1):
        if value == reference[n]:
            print(f"{n} {value} ok")
        else:
            bad += 1
            print(f"{n} {value} MISMATCH (expected {reference[n]})")
    return 1 if bad else 0


def _cmd_dek(args) -> int:
    from . import dek

    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    report = dek.agreement_experiment(args.max_n)
    print(report.summary())
    return 0 if report.agree else 1


def _cmd_serve(args) -> int:
    webservice.serve(args.port, args.state_file, args.ui_dir)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "test": _cmd_test,
        "witness": _cmd_witness,
        "replay": _cmd_replay,
        "count": _cmd_count,
        "verify-appendix": _cmd_verify,
        "dek": _cmd_dek,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, NotAPermutation, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # computation failure
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
