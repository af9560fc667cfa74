"""OEIS-style b-file reading and writing, plus the shipped reference counts.

A b-file is plain ASCII, one ``n a(n)`` pair per line.  The package ships
reference tables for the number of deque-sortable (lengths 1..21) and
parallel-stack-sortable (lengths 1..22) permutations; ``verify-appendix``
diffs freshly computed values against them.
"""

from __future__ import annotations

from importlib import resources
from typing import Mapping, Sequence

from .perms import SortClass, UnsupportedClass

__all__ = ["format_b_file", "parse_b_file", "load_reference_counts"]

_REFERENCE_FILES = {
    SortClass.DEQUE: "deque_counts.txt",
    SortClass.PARALLEL_STACKS: "pstack_counts.txt",
}


def format_b_file(counts: Sequence[int], start: int = 1) -> str:
    """Lines ``n a(n)`` for counts[0] at index ``start``."""
    return "".join(f"{start + i} {value}\n" for i, value in enumerate(counts))


def parse_b_file(text: str) -> dict[int, int]:
    """Parse ``n a(n)`` lines; blank lines and ``#`` comments are skipped."""
    table: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        n_text, value_text = line.split()
        table[int(n_text)] = int(value_text)
    return table


def load_reference_counts(cls: SortClass) -> Mapping[int, int]:
    """The shipped reference table for a sortability class."""
    try:
        name = _REFERENCE_FILES[cls]
    except KeyError:
        raise UnsupportedClass(f"no reference table for {cls!r}") from None
    text = resources.files("dequesort.data").joinpath(name).read_text("ascii")
    return parse_b_file(text)
