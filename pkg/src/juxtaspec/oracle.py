"""Brute-force ground truth over explicit permutations.

Everything here is deliberately naive: pattern containment by backtracking
over subsequences, juxtaposition membership by trying every cut tuple, and
counting by generating all permutations of a given length.  The point is to
be obviously correct, so the symbolic pipeline can be checked against it.
Counting is feasible up to length 10 (3.6M permutations) on a desk machine.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from typing import Dict, List, Sequence, Tuple, Union

Perm = Tuple[int, ...]

MAX_LENGTH = 10

INC = "inc"
DEC = "dec"


@dataclass(frozen=True)
class Basis:
    patterns: Tuple[Perm, ...]


Cell = Union[str, Basis]


def contains(pattern: Sequence[int], host: Sequence[int]) -> bool:
    """True when some subsequence of host is order-isomorphic to pattern.

    Straightforward backtracking over choices of host positions; both
    arguments may be any sequences of distinct numbers.
    """
    k = len(pattern)
    n = len(host)
    if k == 0:
        return True
    if k > n:
        return False

    def extend(chosen: List[int], start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        for pos in range(start, n - (k - depth) + 1):
            value = host[pos]
            ok = True
            for j, prev in enumerate(chosen):
                if (pattern[j] < pattern[depth]) != (prev < value):
                    ok = False
                    break
            if ok:
                chosen.append(value)
                if extend(chosen, pos + 1):
                    return True
                chosen.pop()
        return False

    return extend([], 0)


_P21 = (2, 1)
_P12 = (1, 2)


def avoids_cell(block: Sequence[int], cell: Cell) -> bool:
    """Does the pattern of this block satisfy the cell?

    inc means the block avoids 21 (it is increasing), dec that it avoids 12,
    and a basis cell that it contains none of the basis patterns.  The empty
    block satisfies every cell.
    """
    if cell == INC:
        return not contains(_P21, block)
    if cell == DEC:
        return not contains(_P12, block)
    if isinstance(cell, Basis):
        return all(not contains(p, block) for p in cell.patterns)
    raise ValueError(f"unknown cell {cell!r}")


def juxt_membership(perm: Sequence[int], cells: Sequence[Cell]) -> bool:
    """Does the permutation split into consecutive blocks matching the cells?

    Exhaustive over all weakly increasing cut tuples; blocks may be empty.
    """
    if not cells:
        raise ValueError("cells must be nonempty")
    n = len(perm)
    k = len(cells)
    for cuts in combinations_with_replacement(range(n + 1), k - 1):
        bounds = (0,) + cuts + (n,)
        if all(
            avoids_cell(perm[bounds[j] : bounds[j + 1]], cells[j])
            for j in range(k)
        ):
            return True
    return False


def count_class(cells: Sequence[Cell], n: int, max_length: int = MAX_LENGTH) -> int:
    """Number of permutations of length n lying in the juxtaposition.

    Same predicate as juxt_membership, with per-cell memoization of block
    verdicts keyed on the raw block so repeated blocks are checked once.
    """
    if n > max_length:
        raise ValueError(f"size {n} exceeds the configured maximum {max_length}")
    if not cells:
        raise ValueError("cells must be nonempty")
    if n == 0:
        return 1  # the empty permutation splits into empty blocks

    memos: List[Dict[Perm, bool]] = [dict() for _ in cells]

    def block_ok(j: int, block: Perm) -> bool:
        cell = cells[j]
        if cell == INC:
            return all(block[i] < block[i + 1] for i in range(len(block) - 1))
        if cell == DEC:
            return all(block[i] > block[i + 1] for i in range(len(block) - 1))
        memo = memos[j]
        verdict = memo.get(block)
        if verdict is None:
            verdict = avoids_cell(block, cell)
            memo[block] = verdict
        return verdict

    k = len(cells)
    count = 0
    cut_tuples = list(combinations_with_replacement(range(n + 1), k - 1))
    for perm in permutations(range(1, n + 1)):
        for cuts in cut_tuples:
            bounds = (0,) + cuts + (n,)
            if all(block_ok(j, perm[bounds[j] : bounds[j + 1]]) for j in range(k)):
                count += 1
                break
    return count


def greedy_cut(perm: Sequence[int]) -> int:
    """Number of entries before the longest increasing suffix."""
    n = len(perm)
    start = n
    while start > 0 and (start == n or perm[start - 1] < perm[start]):
        start -= 1
    return start


def greedy_unique(cells: Sequence[Cell], n: int, max_length: int = MAX_LENGTH) -> bool:
    """Does every member split at the greedy cut?

    For cells [core, inc]: each member of the juxtaposition must have its
    maximal increasing suffix preceded by a core-patterned prefix, i.e. the
    greedy decomposition is itself a witness, so every member has a
    canonical representation.
    """
    if len(cells) != 2 or cells[1] != INC or not isinstance(cells[0], Basis):
        raise ValueError("greedy_unique expects cells [basis, inc]")
    if n > max_length:
        raise ValueError(f"size {n} exceeds the configured maximum {max_length}")
    core = cells[0]
    for perm in permutations(range(1, n + 1)):
        if juxt_membership(perm, cells):
            if not avoids_cell(perm[: greedy_cut(perm)], core):
                return False
    return True


def parse_cells(text: str) -> List[Cell]:
    """Cell list syntax: cells separated by '|', e.g. "basis:321 | inc"."""
    cells: List[Cell] = []
    for part in text.split("|"):
        part = part.strip()
        if part == INC:
            cells.append(INC)
        elif part == DEC:
            cells.append(DEC)
        elif part.startswith("basis:"):
            patterns = []
            for word in part[len("basis:") :].split(","):
                word = word.strip()
                if not word.isdigit():
                    raise ValueError(f"bad basis pattern {word!r}")
                pattern = tuple(int(ch) for ch in word)
                if sorted(pattern) != list(range(1, len(pattern) + 1)):
                    raise ValueError(f"bad basis pattern {word!r}: not a permutation")
                patterns.append(pattern)
            if not patterns:
                raise ValueError("empty basis cell")
            cells.append(Basis(tuple(patterns)))
        else:
            raise ValueError(f"unknown cell {part!r} (expected inc, dec or basis:...)")
    if not cells:
        raise ValueError("no cells given")
    return cells
