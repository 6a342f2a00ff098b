"""Extended word parking functions, their statistics and decorated versions.

A path is stored as its column sequence c_1..c_N (rows bottom to top) and the
area vector is a_i = (i-1) - c_i.  Labels are cars; a 0 label is a blank
valley.  Row indices exposed by this module are 1-indexed.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .core import Composition, DomainError, iter_block_sequences, weak_compositions
from .qpoly import QTPolynomial, ZERO

__all__ = [
    "DyckPath",
    "ExtendedParkingFunction",
    "DecoratedParkingFunction",
    "dyck_paths",
    "area_vector",
    "area",
    "dinv_vector",
    "dinv",
    "rise_set",
    "val_set",
    "valley_set",
    "area_minus",
    "dinv_minus",
    "enumerate_pfs",
    "enumerate_decorations",
    "decorated_gfs",
    "decorated_gfs_naive",
    "rise_gf",
    "val_gf",
]


@dataclass(frozen=True)
class DyckPath:
    cols: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.cols)
        object.__setattr__(self, "cols", cols)
        if cols and cols[0] != 0:
            raise DomainError("a Dyck path starts in column 0")
        for i, c in enumerate(cols):
            if c > i:
                raise DomainError(f"row {i + 1} lies below the diagonal")
            if i and c < cols[i - 1]:
                raise DomainError("columns must weakly increase")

    @classmethod
    def from_area(cls, a: Sequence[int]) -> "DyckPath":
        return cls(tuple(i - x for i, x in enumerate(a)))

    @property
    def size(self) -> int:
        return len(self.cols)

    @property
    def area_vector(self) -> tuple[int, ...]:
        return tuple(i - c for i, c in enumerate(self.cols))

    @property
    def runs(self) -> tuple[int, ...]:
        """Lengths of the vertical runs (maximal groups of rows in one column)."""
        return _runs_of(self.cols)

    def steps(self) -> str:
        """The N/E step word, ending at (N, N)."""
        out, x = [], 0
        for c in self.cols:
            out.append("E" * (c - x) + "N")
            x = c
        out.append("E" * (len(self.cols) - x))
        return "".join(out)


def _blank_rows(a: Sequence[int], strict: bool) -> set[int]:
    """Rows (1-indexed, i >= 2) where a blank valley may sit."""
    if strict:
        return {i + 1 for i in range(1, len(a)) if a[i] < a[i - 1]}
    return {i + 1 for i in range(1, len(a)) if a[i] <= a[i - 1]}


@dataclass(frozen=True)
class ExtendedParkingFunction:
    """Labelled Dyck path; label 0 marks a blank valley.

    ``allow_zero_first`` admits a 0 in row 1 (the unrestricted "+" family).
    ``strict_blanks`` switches blank placement from a_i <= a_{i-1} to the
    strict a_i < a_{i-1}.
    """

    path: DyckPath
    labels: tuple[int, ...]
    allow_zero_first: bool = False
    strict_blanks: bool = False

    def __post_init__(self):
        path = self.path if isinstance(self.path, DyckPath) else DyckPath(tuple(self.path))
        object.__setattr__(self, "path", path)
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        cols = path.cols
        if len(labels) != len(cols):
            raise DomainError("one label per row is required")
        if any(x < 0 for x in labels):
            raise DomainError("labels are non-negative")
        for i in range(1, len(cols)):
            if cols[i] == cols[i - 1] and labels[i] <= labels[i - 1]:
                raise DomainError(f"labels must increase up the column at row {i + 1}")
        if not labels:
            return
        allowed = _blank_rows(path.area_vector, self.strict_blanks)
        if self.allow_zero_first:
            allowed.add(1)
        for i, x in enumerate(labels, start=1):
            if x == 0 and i not in allowed:
                raise DomainError(f"blank valley not allowed in row {i}")

    @classmethod
    def _trusted(cls, cols, labels, allow_zero_first=False, strict_blanks=False):
        obj = object.__new__(cls)
        path = object.__new__(DyckPath)
        object.__setattr__(path, "cols", tuple(cols))
        object.__setattr__(obj, "path", path)
        object.__setattr__(obj, "labels", tuple(labels))
        object.__setattr__(obj, "allow_zero_first", allow_zero_first)
        object.__setattr__(obj, "strict_blanks", strict_blanks)
        return obj

    @classmethod
    def of(cls, cols, labels, **kw) -> "ExtendedParkingFunction":
        return cls(DyckPath(tuple(cols)), tuple(labels), **kw)

    @property
    def cols(self) -> tuple[int, ...]:
        return self.path.cols

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def r(self) -> int:
        return sum(1 for x in self.labels if x == 0)

    def content(self, m: int | None = None):
        from .core import Content

        return Content.from_letters(self.labels, m)


@dataclass(frozen=True)
class DecoratedParkingFunction:
    pf: ExtendedParkingFunction
    kind: str
    marks: frozenset[int]

    def __post_init__(self):
        if self.kind not in ("rise", "valley"):
            raise DomainError(f"kind must be 'rise' or 'valley', not {self.kind!r}")
        marks = frozenset(int(m) for m in self.marks)
        object.__setattr__(self, "marks", marks)
        allowed = rise_set(self.pf) if self.kind == "rise" else val_set(self.pf)
        if not marks <= allowed:
            raise DomainError(f"marks {sorted(marks - allowed)} are not {self.kind} rows")

    @property
    def residual(self) -> int:
        """area^- for rise decorations, dinv^- for valley decorations."""
        if self.kind == "rise":
            return area_minus(self.pf, self.marks)
        return dinv_minus(self.pf, self.marks)

    def to_dict(self) -> dict:
        return {
            "cols": list(self.pf.cols),
            "labels": list(self.pf.labels),
            "marks": sorted(self.marks),
            "kind": self.kind,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict, allow_zero_first: bool = False) -> "DecoratedParkingFunction":
        pf = ExtendedParkingFunction.of(d["cols"], d["labels"], allow_zero_first=allow_zero_first)
        return cls(pf, d["kind"], frozenset(d["marks"]))


# --- statistics --------------------------------------------------------------


def area_vector(pf) -> tuple[int, ...]:
    return pf.path.area_vector


def area(pf) -> int:
    return sum(pf.path.area_vector)


def dinv_vector(pf) -> tuple[int, ...]:
    a = pf.path.area_vector
    lab = pf.labels
    n = len(a)
    d = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] == a[j]:
                if lab[i] < lab[j]:
                    d[i] += 1
            elif a[i] == a[j] + 1 and lab[i] > lab[j]:
                d[i] += 1
    return tuple(d)


def dinv(pf) -> int:
    return sum(dinv_vector(pf))


def rise_set(pf) -> frozenset[int]:
    a = pf.path.area_vector
    return frozenset(i + 1 for i in range(1, len(a)) if a[i] == a[i - 1] + 1)


def val_set(pf) -> frozenset[int]:
    a = pf.path.area_vector
    lab = pf.labels
    return frozenset(
        i + 1
        for i in range(1, len(a))
        if a[i] < a[i - 1] or (a[i] == a[i - 1] and lab[i] > lab[i - 1])
    )


def valley_set(pf, strict: bool = True) -> frozenset[int]:
    """Path valleys.  strict: a_i < a_{i-1}; otherwise a_i <= a_{i-1} (blank-eligible rows)."""
    path = pf.path if hasattr(pf, "path") else pf
    return frozenset(_blank_rows(path.area_vector, strict))


def area_minus(pf, R) -> int:
    R = frozenset(R)
    if not R <= rise_set(pf):
        raise DomainError(f"rows {sorted(R - rise_set(pf))} are not double rises")
    a = pf.path.area_vector
    return sum(x for i, x in enumerate(a, start=1) if i not in R)


def dinv_minus(pf, V) -> int:
    V = frozenset(V)
    if not V <= val_set(pf):
        raise DomainError(f"rows {sorted(V - val_set(pf))} are not contractible valleys")
    d = dinv_vector(pf)
    return sum(x for i, x in enumerate(d, start=1) if i not in V) - len(V)


# --- enumeration -------------------------------------------------------------


def dyck_paths(n: int) -> Iterator[tuple[int, ...]]:
    """Column sequences of Dyck paths with n north steps, lexicographically."""
    if n == 0:
        yield ()
        return
    cols = [0] * n

    def rec(i: int):
        if i == n:
            yield tuple(cols)
            return
        for c in range(cols[i - 1], i + 1):
            cols[i] = c
            yield from rec(i + 1)

    yield from rec(1)


def _zero_free_runs(cols: Sequence[int], allow_zero_first: bool, strict_blanks: bool) -> list[int]:
    # a zero can only be the bottom label of a run; the bottom row of run 0 is row 1
    out, run, starts = [], -1, []
    for i, c in enumerate(cols):
        if i == 0 or c != cols[i - 1]:
            run += 1
            starts.append(i)
    for j, i in enumerate(starts):
        if i == 0:
            if not allow_zero_first:
                out.append(j)
        elif strict_blanks and cols[i] - cols[i - 1] < 2:
            out.append(j)
    return out


def _labelings(cols, mult, allow_zero_first=False, strict_blanks=False):
    runs = _runs_of(cols)
    zf = _zero_free_runs(cols, allow_zero_first, strict_blanks)
    for blocks in iter_block_sequences(mult, sizes=runs, zero_free=zf):
        yield tuple(x for b in blocks for x in b)


def _runs_of(cols) -> tuple[int, ...]:
    out: list[int] = []
    for i, c in enumerate(cols):
        if i and c == cols[i - 1]:
            out[-1] += 1
        else:
            out.append(1)
    return tuple(out)


def enumerate_pfs(
    n_cars: int,
    r: int = 0,
    beta=None,
    allow_zero_first: bool = False,
    strict_blanks: bool = False,
) -> Iterator[ExtendedParkingFunction]:
    """Every extended parking function with ``n_cars`` nonzero cars and ``r`` blanks.

    With ``beta`` the car content is fixed to {i^beta_i}; otherwise cars range
    over 1..n_cars with any multiplicities.  Order: paths lexicographically by
    columns, then labels lexicographically.
    """
    if beta is None:
        contents = [tuple(c) for c in weak_compositions(n_cars, n_cars)]
    else:
        beta = tuple(beta)
        if sum(beta) != n_cars:
            raise DomainError(f"content {beta} does not have {n_cars} cars")
        contents = [beta]
    N = n_cars + r
    for cols in dyck_paths(N):
        labelings = []
        for b in contents:
            labelings.extend(_labelings(cols, (r,) + b, allow_zero_first, strict_blanks))
        for lab in sorted(labelings):
            yield ExtendedParkingFunction._trusted(cols, lab, allow_zero_first, strict_blanks)


def enumerate_decorations(pf, kind: str, count: int) -> Iterator[DecoratedParkingFunction]:
    if kind not in ("rise", "valley"):
        raise DomainError(f"kind must be 'rise' or 'valley', not {kind!r}")
    rows = sorted(rise_set(pf) if kind == "rise" else val_set(pf))
    for marks in combinations(rows, count):
        yield DecoratedParkingFunction(pf, kind, frozenset(marks))


# --- generating functions ----------------------------------------------------


def _elementary(weights: Sequence[int]) -> list[Counter]:
    """e_m of the monomials x^{w}: list indexed by m of Counter{sum of chosen w: count}."""
    polys = [Counter({0: 1})]
    for w in weights:
        nxt = [Counter(p) for p in polys] + [Counter()]
        for m, p in enumerate(polys):
            for e, c in p.items():
                nxt[m + 1][e + w] += c
        polys = nxt
    return polys


@lru_cache(maxsize=None)
def _path_data(cols: tuple[int, ...]):
    a = tuple(i - c for i, c in enumerate(cols))
    n = len(a)
    same = tuple((i, j) for i in range(n) for j in range(i + 1, n) if a[i] == a[j])
    off = tuple((i, j) for i in range(n) for j in range(i + 1, n) if a[i] == a[j] + 1)
    rises = tuple(i for i in range(1, n) if a[i] == a[i - 1] + 1)
    return a, same, off, rises


@lru_cache(maxsize=None)
def decorated_gfs(
    kind: str,
    r: int,
    beta: tuple[int, ...],
    allow_zero_first: bool = False,
    strict_blanks: bool = False,
) -> dict[int, QTPolynomial]:
    """All decoration-count slices at once for a fixed content.

    kind="rise": sum of t^{area^-} q^{dinv} over (PF, R), R subset of Rise.
    kind="valley": sum of t^{area} q^{dinv^-} over (PF, V), V subset of Val.
    Returns {number of marks: polynomial}.
    """
    if kind not in ("rise", "valley"):
        raise DomainError(f"kind must be 'rise' or 'valley', not {kind!r}")
    beta = tuple(beta)
    mult = (r,) + beta
    N = sum(mult)
    acc: dict[int, Counter] = defaultdict(Counter)
    for cols in dyck_paths(N):
        a, same, off, rises = _path_data(cols)
        tot_area = sum(a)
        if kind == "rise":
            dcount: Counter = Counter()
            for lab in _labelings(cols, mult, allow_zero_first, strict_blanks):
                dv = 0
                for i, j in same:
                    if lab[i] < lab[j]:
                        dv += 1
                for i, j in off:
                    if lab[i] > lab[j]:
                        dv += 1
                dcount[dv] += 1
            if not dcount:
                continue
            # marking row i removes a_i from the area
            for m, p in enumerate(_elementary([a[i] for i in rises])):
                slot = acc[m]
                for removed, c in p.items():
                    et = tot_area - removed
                    for dv, cnt in dcount.items():
                        slot[(dv, et)] += c * cnt
        else:
            vcount: Counter = Counter()
            n = len(a)
            for lab in _labelings(cols, mult, allow_zero_first, strict_blanks):
                d = [0] * n
                for i, j in same:
                    if lab[i] < lab[j]:
                        d[i] += 1
                for i, j in off:
                    if lab[i] > lab[j]:
                        d[i] += 1
                ws = tuple(
                    sorted(
                        d[i] + 1
                        for i in range(1, n)
                        if a[i] < a[i - 1] or (a[i] == a[i - 1] and lab[i] > lab[i - 1])
                    )
                )
                vcount[(sum(d), ws)] += 1
            for (dv, ws), cnt in vcount.items():
                for m, p in enumerate(_elementary(ws)):
                    slot = acc[m]
                    for removed, c in p.items():
                        slot[(dv - removed, tot_area)] += c * cnt
    return {m: QTPolynomial(c) for m, c in sorted(acc.items()) if any(c.values())}


def decorated_gfs_naive(kind: str, r: int, beta, allow_zero_first: bool = False) -> dict[int, QTPolynomial]:
    """Reference version of decorated_gfs built from the public object API."""
    acc: dict[int, Counter] = defaultdict(Counter)
    for pf in enumerate_pfs(sum(beta), r, tuple(beta), allow_zero_first=allow_zero_first):
        rows = rise_set(pf) if kind == "rise" else val_set(pf)
        for m in range(len(rows) + 1):
            for dec in enumerate_decorations(pf, kind, m):
                if kind == "rise":
                    acc[m][(dinv(pf), area_minus(pf, dec.marks))] += 1
                else:
                    acc[m][(dinv_minus(pf, dec.marks), area(pf))] += 1
    return {m: QTPolynomial(c) for m, c in sorted(acc.items())}


def _check_gf_args(n: int, k: int, r: int, beta) -> tuple[int, ...]:
    beta = tuple(Composition(tuple(beta)).parts)
    if not 0 <= k < n:
        raise DomainError(f"need 0 <= k < n, got n={n}, k={k}")
    if r < 0:
        raise DomainError("r must be non-negative")
    if sum(beta) != n:
        raise DomainError(f"|beta| = {sum(beta)} differs from n = {n}")
    return beta


def rise_gf(n: int, k: int, r: int, beta, **kw) -> QTPolynomial:
    """Rise_{r;n,k} restricted to content beta: exactly n-k-1 double rises marked."""
    beta = _check_gf_args(n, k, r, beta)
    return decorated_gfs("rise", r, beta, **kw).get(n - k - 1, ZERO)


def val_gf(n: int, k: int, r: int, beta, **kw) -> QTPolynomial:
    """Val_{r;n,k} restricted to content beta: exactly n-k-1 contractible valleys marked."""
    beta = _check_gf_args(n, k, r, beta)
    return decorated_gfs("valley", r, beta, **kw).get(n - k - 1, ZERO)
