"""The four Mahonian statistics on ordered multiset partitions.

inv, dinv and maj act on the blocks directly.  minimaj is the major index of
the miniword, a segmented word obtained by rearranging each block.  All
positions are 1-indexed, matching maj(w) = sum of descent positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Block, Composition, DomainError, OrderedMultisetPartition

__all__ = [
    "StarredWord",
    "SegmentedWord",
    "inv",
    "inv_pairs",
    "dinv",
    "dinv_triples",
    "maj",
    "ind_word",
    "decreasing_word",
    "maj_of_word",
    "miniword",
    "minimaj",
    "descent_starred",
    "from_starred",
    "cyclic_decrement",
    "STATISTICS",
]


def _blocks(x) -> tuple:
    return x.blocks if isinstance(x, OrderedMultisetPartition) else tuple(x)


@dataclass(frozen=True)
class StarredWord:
    """Blocks written decreasingly; a star at i joins w_i and w_{i+1} in one block."""

    word: tuple[int, ...]
    stars: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "stars", frozenset(self.stars))
        for i in self.stars:
            if not 1 <= i < len(self.word) or self.word[i - 1] <= self.word[i]:
                raise DomainError(f"star at {i} is not on a descent of {self.word}")

    def __str__(self):
        out = []
        for i, x in enumerate(self.word, start=1):
            out.append(str(x))
            if i in self.stars:
                out.append("*")
        return "".join(out)


@dataclass(frozen=True)
class SegmentedWord:
    """A word cut into consecutive non-empty segments of lengths ``shape``."""

    word: tuple[int, ...]
    shape: Composition

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        shape = self.shape if isinstance(self.shape, Composition) else Composition(tuple(self.shape))
        object.__setattr__(self, "shape", shape)
        if not shape.is_strong or shape.size != len(self.word):
            raise DomainError(f"shape {shape.parts} does not segment a word of length {len(self.word)}")

    @property
    def segments(self) -> list[tuple[int, ...]]:
        out, p = [], 0
        for s in self.shape:
            out.append(self.word[p : p + s])
            p += s
        return out

    def __str__(self):
        return "|".join("".join(map(str, s)) for s in self.segments)


def inv_pairs(omp) -> list[tuple[int, int]]:
    """Witness list for inv: pairs (a, b) with a > b = min of a later block."""
    blocks = _blocks(omp)
    out = []
    for j, bj in enumerate(blocks):
        b = bj[0]
        for bi in blocks[:j]:
            out.extend((a, b) for a in bi if a > b)
    return out


def inv(omp) -> int:
    blocks = _blocks(omp)
    total = 0
    for j in range(1, len(blocks)):
        b = blocks[j][0]
        for bi in blocks[:j]:
            for a in bi:
                if a > b:
                    total += 1
    return total


def dinv_triples(omp) -> list[tuple[int, int, int, str]]:
    """Witness list for dinv as (h, i, j, kind) with 1-indexed h, i, j.

    Primary: B_i^h > B_j^h.  Secondary: B_i^h < B_j^{h+1}.  Both referenced
    elements must exist.
    """
    blocks = _blocks(omp)
    out = []
    for i, bi in enumerate(blocks):
        for j in range(i + 1, len(blocks)):
            bj = blocks[j]
            for h, x in enumerate(bi):
                if h < len(bj) and x > bj[h]:
                    out.append((h + 1, i + 1, j + 1, "primary"))
                if h + 1 < len(bj) and x < bj[h + 1]:
                    out.append((h + 1, i + 1, j + 1, "secondary"))
    return out


def dinv(omp) -> int:
    blocks = _blocks(omp)
    total = 0
    for i, bi in enumerate(blocks):
        for bj in blocks[i + 1 :]:
            lj = len(bj)
            for h, x in enumerate(bi):
                if h < lj:
                    if x > bj[h]:
                        total += 1
                    if h + 1 < lj and x < bj[h + 1]:
                        total += 1
                else:
                    break
    return total


def decreasing_word(omp) -> tuple[int, ...]:
    return tuple(x for b in _blocks(omp) for x in reversed(b))


def ind_word(omp) -> tuple[int, ...]:
    """0^{|B_1|} 1^{|B_2|} ... (k-1)^{|B_k|}."""
    return tuple(i for i, b in enumerate(_blocks(omp)) for _ in b)


def maj(omp) -> int:
    sigma = decreasing_word(omp)
    ind = ind_word(omp)
    return sum(ind[i + 1] for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def maj_of_word(word: Iterable[int]) -> int:
    w = tuple(word)
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def miniword(omp) -> SegmentedWord:
    """Build segments right to left.

    The last block is written increasingly.  Each earlier block is written as
    its elements larger than the first letter of the following segment, then
    the rest, both parts increasing.
    """
    blocks = _blocks(omp)
    if not blocks:
        return SegmentedWord((), Composition(()))
    segs = [tuple(blocks[-1])]
    for b in reversed(blocks[:-1]):
        x = segs[-1][0]
        segs.append(tuple(e for e in b if e > x) + tuple(e for e in b if e <= x))
    segs.reverse()
    return SegmentedWord(tuple(x for s in segs for x in s), Composition(tuple(len(s) for s in segs)))


def minimaj(omp) -> int:
    blocks = _blocks(omp)
    if not blocks:
        return 0
    # inline miniword: only descents matter
    total = 0
    pos = sum(len(b) for b in blocks) - len(blocks[-1])
    nxt = blocks[-1][0]
    for b in reversed(blocks[:-1]):
        big = [e for e in b if e > nxt]
        small = [e for e in b if e <= nxt]
        seg = big + small
        # descent inside the segment occurs only at the big/small seam
        if big and small:
            total += pos - len(b) + len(big)
        if seg[-1] > nxt:
            total += pos
        pos -= len(b)
        nxt = seg[0]
    return total


def descent_starred(omp) -> StarredWord:
    blocks = _blocks(omp)
    word = []
    stars = set()
    for b in blocks:
        start = len(word)
        word.extend(reversed(b))
        stars.update(range(start + 1, len(word)))
    return StarredWord(tuple(word), frozenset(stars))


def from_starred(sw: StarredWord) -> OrderedMultisetPartition:
    blocks, cur = [], []
    for i, x in enumerate(sw.word, start=1):
        cur.append(x)
        if i not in sw.stars:
            blocks.append(tuple(sorted(cur)))
            cur = []
    if cur:
        blocks.append(tuple(sorted(cur)))
    return OrderedMultisetPartition(tuple(Block(b) for b in blocks))


def cyclic_decrement(x, modulus: int):
    """The action c: every letter y becomes (y - 1) mod ``modulus``.

    Accepts a word (any integer sequence, returns a tuple), a SegmentedWord, or
    an ordered multiset partition (blocks are re-sorted and keep their place).
    """
    def dec(y: int) -> int:
        if not 0 <= y < modulus:
            raise DomainError(f"letter {y} outside [0, {modulus - 1}]")
        return (y - 1) % modulus

    if isinstance(x, OrderedMultisetPartition):
        return OrderedMultisetPartition._trusted(tuple(sorted(dec(y) for y in b)) for b in x.blocks)
    if isinstance(x, SegmentedWord):
        return SegmentedWord(tuple(dec(y) for y in x.word), x.shape)
    return tuple(dec(y) for y in x)


STATISTICS = {"inv": inv, "dinv": dinv, "maj": maj, "minimaj": minimaj}


def statistic(name: str):
    try:
        return STATISTICS[name]
    except KeyError:
        raise DomainError(f"unknown statistic {name!r}; choose from {sorted(STATISTICS)}") from None
