"""Compositions, contents, blocks and (extended) ordered multiset partitions.

A content is the multiset {0^r, 1^b1, ..., m^bm}.  An ordered multiset
partition splits a content into a sequence of blocks, each block a set.  The
"tail-positive" partitions are the ones whose last block avoids the letter 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "ParseError",
    "DomainError",
    "Composition",
    "Content",
    "Block",
    "OrderedMultisetPartition",
    "validate",
    "enumerate_omps",
    "iter_block_sequences",
    "parse",
    "serialize",
    "compositions",
    "weak_compositions",
]


class ParseError(ValueError):
    """Malformed partition text.  ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class DomainError(ValueError):
    """An operation was called outside its domain."""


@dataclass(frozen=True)
class Composition:
    """A weak composition; parts may be zero."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise DomainError(f"negative part in composition {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def is_strong(self) -> bool:
        return all(p > 0 for p in self.parts)

    def drop_last(self) -> "Composition":
        return Composition(self.parts[:-1])

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as exc:
            raise DomainError(f"bad composition {text!r}") from exc


def _as_composition(beta) -> Composition:
    return beta if isinstance(beta, Composition) else Composition(tuple(beta))


@dataclass(frozen=True)
class Content:
    """The multiset {0^r} together with A(beta) = {i^beta_i}."""

    beta: Composition = Composition(())
    r: int = 0

    def __post_init__(self):
        object.__setattr__(self, "beta", _as_composition(self.beta))
        if self.r < 0:
            raise DomainError("r must be non-negative")

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """(r, beta_1, ..., beta_m): multiplicity of each letter 0..m."""
        return (self.r,) + self.beta.parts

    @property
    def size(self) -> int:
        return self.r + self.beta.size

    def multiset(self) -> Counter:
        return Counter({x: c for x, c in enumerate(self.multiplicities) if c})

    @classmethod
    def from_letters(cls, letters: Iterable[int], m: int | None = None) -> "Content":
        counts = Counter(letters)
        top = max(counts, default=0)
        if m is None:
            m = top
        if top > m:
            raise DomainError(f"letter {top} exceeds m={m}")
        return cls(Composition(tuple(counts[i] for i in range(1, m + 1))), counts[0])

    def __str__(self):
        return f"r={self.r};beta=({self.beta})"


class Block(tuple):
    """A non-empty, strictly increasing tuple of non-negative integers."""

    __slots__ = ()

    def __new__(cls, elements: Iterable[int] = ()):
        elems = tuple(int(e) for e in elements)
        if not elems:
            raise DomainError("empty block")
        if any(e < 0 for e in elems):
            raise DomainError(f"negative letter in block {elems}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise DomainError(f"block {elems} is not strictly increasing")
        return super().__new__(cls, elems)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def min(self) -> int:
        return self[0]

    @property
    def max(self) -> int:
        return self[-1]

    def __repr__(self):
        return f"Block({tuple(self)})"


def _trusted_block(elems: tuple) -> Block:
    return tuple.__new__(Block, elems)


@dataclass(frozen=True)
class OrderedMultisetPartition:
    """A sequence of blocks.  The empty partition (no blocks) is allowed."""

    blocks: tuple[Block, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(b if isinstance(b, Block) else Block(b) for b in self.blocks)
        )

    @classmethod
    def _trusted(cls, blocks: Sequence[tuple]) -> "OrderedMultisetPartition":
        # skips validation; used by enumerators and maps that build valid blocks
        obj = object.__new__(cls)
        object.__setattr__(obj, "blocks", tuple(_trusted_block(tuple(b)) for b in blocks))
        return obj

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "OrderedMultisetPartition":
        return cls(tuple(Block(sorted(b)) for b in blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def shape(self) -> Composition:
        return Composition(tuple(len(b) for b in self.blocks))

    @property
    def letters(self) -> list[int]:
        return [x for b in self.blocks for x in b]

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def content(self, m: int | None = None) -> Content:
        return Content.from_letters(self.letters, m)

    @property
    def tail_positive(self) -> bool:
        return not self.blocks or self.blocks[-1][0] != 0

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]

    def __str__(self):
        return serialize(self)


OMP = OrderedMultisetPartition


def validate(omp: OrderedMultisetPartition, content: Content, k: int, tail_positive: bool = True) -> bool:
    """Membership test for the (tail-positive or unrestricted) partition sets."""
    if omp.k != k:
        return False
    for b in omp.blocks:
        if not b or any(x >= y for x, y in zip(b, b[1:])):
            return False
    want = content.multiset()
    if Counter(omp.letters) != want:
        return False
    return not (tail_positive and not omp.tail_positive)


# --- enumeration -----------------------------------------------------------


def iter_block_sequences(
    mult: Sequence[int],
    k: int | None = None,
    sizes: Sequence[int] | None = None,
    zero_free: Iterable[int] = (),
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Raw stream of block sequences using letter ``x`` exactly ``mult[x]`` times.

    Either ``k`` (block count) or ``sizes`` (block sizes) fixes the number of
    blocks.  Blocks whose index is in ``zero_free`` never contain the letter 0.
    Output order is not sorted.
    """
    if sizes is not None:
        sizes = tuple(sizes)
        k = len(sizes)
        if sum(sizes) != sum(mult):
            return iter(())
    if k is None:
        raise DomainError("need k or sizes")
    zero_free = frozenset(i if i >= 0 else k + i for i in zero_free)
    mult = list(mult)
    letters = [x for x, c in enumerate(mult) if c]
    out: list[tuple[tuple[int, ...], ...]] = []
    prefix: list[tuple[int, ...]] = []

    # recursion collects into a list; chained generators are several times slower here
    def rec(i: int, total: int):
        left = k - i
        if left == 0:
            if total == 0:
                out.append(tuple(prefix))
            return
        if total < left:
            return
        avail = [x for x in letters if mult[x]]
        if max((mult[x] for x in avail), default=0) > left:
            return
        if i in zero_free and avail and avail[0] == 0:
            if mult[0] == left:
                return
            avail = avail[1:]
        forced = [x for x in avail if mult[x] == left]
        optional = [x for x in avail if mult[x] < left]
        if sizes is not None:
            need = sizes[i] - len(forced)
            size_range = [need] if 0 <= need <= len(optional) else []
        else:
            size_range = range(max(0, 1 - len(forced)), len(optional) + 1)
        for s in size_range:
            for extra in combinations(optional, s):
                block = tuple(sorted(forced + list(extra))) if forced else extra
                for x in block:
                    mult[x] -= 1
                prefix.append(block)
                rec(i + 1, total - len(block))
                prefix.pop()
                for x in block:
                    mult[x] += 1

    rec(0, sum(mult))
    return iter(out)


def enumerate_omps(
    content: Content, k: int, tail_positive: bool = True, ordered: bool = True
) -> Iterator[OrderedMultisetPartition]:
    """Every partition of ``content`` into ``k`` blocks, each exactly once.

    With ``ordered`` (the default) the stream is sorted lexicographically on
    the serialized text; ``ordered=False`` skips the sort for bulk sweeps.
    """
    if k < 0:
        return iter(())
    zero_free = (k - 1,) if tail_positive and k > 0 else ()
    raw = iter_block_sequences(content.multiplicities, k=k, zero_free=zero_free)
    objs = (OrderedMultisetPartition._trusted(b) for b in raw)
    if ordered:
        return iter(sorted(objs, key=serialize))
    return objs


# --- text form -------------------------------------------------------------


def serialize(omp: OrderedMultisetPartition) -> str:
    """Canonical text: comma-separated increasing blocks joined by '/'."""
    text = "/".join(",".join(map(str, b)) for b in omp.blocks)
    if "," not in text and any(x >= 10 for b in omp.blocks for x in b):
        # all blocks are singletons; a trailing comma keeps multi-digit letters intact
        text += ","
    return text


def parse(text: str) -> OrderedMultisetPartition:
    """Parse partition text.

    Comma mode applies whenever a comma occurs (one trailing comma allowed);
    otherwise every character of a block is one digit letter, as in "134/268/57".
    Elements inside a block may come in any order; duplicates are rejected.
    """
    raw = text
    text = text.strip()
    offset = raw.find(text) if text else 0
    if text in ("", "∅"):
        return OrderedMultisetPartition(())
    comma_mode = "," in text
    if comma_mode and text.endswith(","):
        text = text[:-1]
    blocks = []
    pos = 0
    for chunk in text.split("/"):
        start = offset + pos
        if not chunk.strip():
            raise ParseError("empty block", start, raw)
        if comma_mode:
            elems = []
            p = start
            for tok in chunk.split(","):
                t = tok.strip()
                if not t.isdigit():
                    raise ParseError(f"bad element {tok!r}", p, raw)
                elems.append((int(t), p))
                p += len(tok) + 1
        else:
            elems = []
            for j, ch in enumerate(chunk):
                if ch.isspace():
                    continue
                if not ch.isdigit():
                    raise ParseError(f"unexpected character {ch!r}", start + j, raw)
                elems.append((int(ch), start + j))
        seen = {}
        for v, p in elems:
            if v in seen:
                raise ParseError(f"repeated element {v} in block", p, raw)
            seen[v] = p
        blocks.append(tuple(sorted(seen)))
        pos += len(chunk) + 1
    return OrderedMultisetPartition._trusted(blocks)


# --- compositions ----------------------------------------------------------


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Strong compositions of n in lexicographic order (n=0 gives the empty one)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def weak_compositions(n: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, length - 1):
            yield (first,) + rest
