"""Insertion maps that add every copy of the largest letter n to a partition.

Each map takes (pi, U, B) where pi has ell blocks and avoids n, U is a set of
block labels and B a multiset of position labels.  The statistic named by
the map grows by exactly sum(U) + sum(B).  When the last block of pi holds a
0 (branch B), an extra 0 is adjoined to B so that the result ends in {n}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .core import Composition, Content, DomainError, OrderedMultisetPartition, enumerate_omps
from .statistics import StarredWord, descent_starred, from_starred

__all__ = [
    "InsertionInput",
    "phi_inv",
    "phi_maj",
    "phi_dinv",
    "enumerate_insertion_domain",
    "MAPS",
]


@dataclass(frozen=True)
class InsertionInput:
    """(pi, U, B).  In branch B, ``B`` holds B' and the 0 is adjoined by the maps."""

    pi: OrderedMultisetPartition
    U: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "U", tuple(sorted(self.U)))
        object.__setattr__(self, "B", tuple(sorted(self.B)))
        if len(set(self.U)) != len(self.U):
            raise DomainError(f"U must be a set, got {self.U}")

    @property
    def ell(self) -> int:
        return self.pi.k

    @property
    def branch(self) -> str:
        return "A" if self.pi.tail_positive else "B"

    @property
    def full_B(self) -> tuple[int, ...]:
        return self.B if self.branch == "A" else (0,) + self.B

    @property
    def weight(self) -> int:
        return sum(self.U) + sum(self.full_B)

    def check(self, beta, k: int) -> int:
        """Validate against (beta, k); return the inserted letter n = len(beta)."""
        beta = beta if isinstance(beta, Composition) else Composition(tuple(beta))
        n = beta.length
        if n == 0:
            raise DomainError("beta must have at least one part")
        ell = self.ell
        letters = self.pi.letters
        if any(x >= n for x in letters):
            raise DomainError(f"pi uses letters >= n = {n}")
        want = Content(beta.drop_last(), Counter(letters)[0])
        if Counter(letters) != want.multiset():
            raise DomainError(f"pi does not have content beta^- = {beta.drop_last().parts}")
        if not 0 <= ell <= k:
            raise DomainError(f"need 0 <= ell <= k, got ell={ell}, k={k}")
        u_size = beta[-1] - k + ell
        if u_size < 0 or len(self.U) != u_size:
            raise DomainError(f"|U| must be beta_n - k + ell = {u_size}, got {len(self.U)}")
        if any(not 0 <= u < ell for u in self.U):
            raise DomainError(f"U must lie in [0, {ell - 1}]")
        b_size = k - ell if self.branch == "A" else k - ell - 1
        if b_size < 0 or len(self.B) != b_size:
            raise DomainError(
                f"branch {self.branch}: B must have size {b_size}, got {len(self.B)}"
            )
        if any(not 0 <= b <= ell for b in self.B):
            raise DomainError(f"B must lie in [0, {ell}]")
        return n


def _merge_order(U, B, prefer: str) -> list[tuple[int, str]]:
    """Largest first; on ties take from ``prefer`` ('U' or 'B') first."""
    items = [(u, "U") for u in U] + [(b, "B") for b in B]
    return sorted(items, key=lambda it: (-it[0], it[1] != prefer))


def phi_inv(inp: InsertionInput, beta, k: int) -> OrderedMultisetPartition:
    """Blocks and the far-left space are labelled 0..ell from right to left.

    u in U appends n to block u; b in B puts a singleton {n} right of label b.
    """
    n = inp.check(beta, k)
    ell = inp.ell
    blocks = [list(b) for b in inp.pi.blocks]
    # slot j holds the singletons placed right after original block j-1 (slot 0 = far left)
    after: list[int] = [0] * (ell + 1)
    for i, src in _merge_order(inp.U, inp.full_B, "U"):
        if src == "U":
            blocks[ell - 1 - i].append(n)
        else:
            after[ell - i] += 1
    out: list[tuple[int, ...]] = [(n,)] * after[0]
    for j, b in enumerate(blocks):
        out.append(tuple(b))
        out.extend([(n,)] * after[j + 1])
    return OrderedMultisetPartition._trusted(out)


def _maj_positions(word, stars) -> list[int]:
    """Gap labels for phi_maj: gap g sits before word[g] (g = 0..len).

    Label order: the rightmost gap, then unstarred descents right to left, then
    the remaining unstarred gaps (including the leftmost) left to right.
    """
    L = len(word)
    desc = [g for g in range(L - 1, 0, -1) if g not in stars and word[g - 1] > word[g]]
    rest = [g for g in range(0, L) if g not in stars and not (g > 0 and word[g - 1] > word[g])]
    return [L] + desc + rest


def phi_maj(inp: InsertionInput, beta, k: int, trace: list | None = None) -> OrderedMultisetPartition:
    """Insert into the descent-starred word, values from U+ = U + 1 and B.

    A star at position s marks w_s > w_{s+1} inside one block; gap g lies
    between w_g and w_{g+1}, so star s and gap s name the same seam.
    """
    n = inp.check(beta, k)
    sw = descent_starred(inp.pi)
    word = list(sw.word)
    stars = set(sw.stars)
    order = _merge_order([u + 1 for u in inp.U], inp.full_B, "B")
    for value, src in order:
        labels = _maj_positions(word, stars)
        g = labels[value]
        word.insert(g, n)
        shifted = {s + 1 if s >= g else s for s in stars}
        desc = [s for s in range(1, len(word)) if word[s - 1] > word[s]]
        new = set()
        for s in shifted:
            if s > g:
                prev = [d for d in desc if d < s]
                if not prev:
                    raise DomainError("no descent to receive a shifted star")
                new.add(prev[-1])
            else:
                new.add(s)
        if src == "U":
            if not desc:
                raise DomainError("no descent to star")
            new.add(desc[-1])
        stars = new
        if trace is not None:
            trace.append((value, src, str(StarredWord(tuple(word), frozenset(stars)))))
    return from_starred(StarredWord(tuple(word), frozenset(stars)))


def _dinv_block_labels(pi: OrderedMultisetPartition) -> list[int]:
    """Block index (left to right) for each block label 0..ell-1."""
    return sorted(range(pi.k), key=lambda j: (-len(pi.blocks[j]), j))


def phi_dinv(inp: InsertionInput, beta, k: int) -> OrderedMultisetPartition:
    """Gaps are labelled 0..ell right to left; blocks by decreasing size, ties left to right."""
    n = inp.check(beta, k)
    ell = inp.ell
    blocks = [list(b) for b in inp.pi.blocks]
    by_label = _dinv_block_labels(inp.pi)
    gap: list[int] = [0] * (ell + 1)  # gap[j] = singletons before original block j
    for i, src in _merge_order(inp.U, inp.full_B, "U"):
        if src == "U":
            blocks[by_label[i]].append(n)
        else:
            gap[ell - i] += 1
    out: list[tuple[int, ...]] = []
    for j in range(ell + 1):
        out.extend([(n,)] * gap[j])
        if j < ell:
            out.append(tuple(blocks[j]))
    return OrderedMultisetPartition._trusted(out)


MAPS = {"inv": phi_inv, "maj": phi_maj, "dinv": phi_dinv}


def enumerate_insertion_domain(beta, r: int, k: int, ell: int) -> Iterator[InsertionInput]:
    """Every branch-A then every branch-B input for fixed (beta, r, k, ell)."""
    beta = beta if isinstance(beta, Composition) else Composition(tuple(beta))
    if beta.length == 0 or not 0 <= ell <= k:
        return
    u_size = beta[-1] - k + ell
    if u_size < 0:
        return
    content = Content(beta.drop_last(), r)
    Us = list(combinations(range(ell), u_size))
    pis = list(enumerate_omps(content, ell, tail_positive=False))
    for branch, b_size in (("A", k - ell), ("B", k - ell - 1)):
        if b_size < 0:
            continue
        Bs = list(combinations_with_replacement(range(ell + 1), b_size))
        for pi in pis:
            if (branch == "A") != pi.tail_positive:
                continue
            for U in Us:
                for B in Bs:
                    yield InsertionInput(pi, U, B)
