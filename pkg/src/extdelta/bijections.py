"""Four maps from ordered multiset partitions to decorated parking functions.

For pi with k+1 blocks the image has |pi| rows and |pi| - (k+1) marks.

* gamma_dinv:    dinv(pi)    = dinv(PF),       area^- = 0  (rise marks)
* gamma_maj:     maj(pi)     = area^-(PF, R),  dinv = 0    (rise marks)
* gamma_inv:     inv(pi)     = dinv^-(PF, V),  area = 0    (valley marks)
* gamma_minimaj: minimaj(pi) = area(PF),       dinv^- = 0  (valley marks)

Letter 0 is treated as the smallest car; the image has a blank in row 1
exactly when the last block of pi contains 0.
"""

from __future__ import annotations

from .core import DomainError, OrderedMultisetPartition
from .parking import DecoratedParkingFunction, DyckPath, ExtendedParkingFunction
from .statistics import descent_starred, miniword

__all__ = [
    "gamma_dinv",
    "gamma_maj",
    "gamma_inv",
    "gamma_minimaj",
    "gamma_minimaj_stages",
    "GAMMAS",
]


def _blocks(pi) -> tuple:
    if not isinstance(pi, OrderedMultisetPartition):
        pi = OrderedMultisetPartition(tuple(pi))
    if pi.k == 0:
        raise DomainError("the empty partition has no image")
    return pi.blocks


def _decorated(cols, labels, kind, marks) -> DecoratedParkingFunction:
    pf = ExtendedParkingFunction(DyckPath(tuple(cols)), tuple(labels), allow_zero_first=True)
    return DecoratedParkingFunction(pf, kind, frozenset(marks))


def gamma_dinv(pi) -> DecoratedParkingFunction:
    """Stack the blocks, last block lowest, each as one vertical run; mark all double rises."""
    blocks = _blocks(pi)
    cols, labels, marks = [], [], []
    x = 0
    for b in reversed(blocks):
        for h, e in enumerate(b):
            cols.append(x)
            labels.append(e)
            if h:
                marks.append(len(cols))
        x += len(b)
    return _decorated(cols, labels, "rise", marks)


def gamma_maj(pi) -> DecoratedParkingFunction:
    """Read the descent-starred word right to left.

    A weak ascent opens a new column (steps EN); a descent continues the column
    (a double rise), marked when the descent is starred.
    """
    blocks = _blocks(pi)
    sw = descent_starred(blocks)
    w = sw.word
    L = len(w)
    cols, labels, marks = [0], [w[-1]], []
    x = 0
    for p in range(L - 1, 0, -1):  # compare w_p with w_{p+1}, 1-indexed
        if w[p - 1] > w[p]:
            cols.append(x)
            labels.append(w[p - 1])
            if p in sw.stars:
                marks.append(len(cols))
        else:
            x += 1
            cols.append(x)
            labels.append(w[p - 1])
    return _decorated(cols, labels, "rise", marks)


def gamma_inv(pi) -> DecoratedParkingFunction:
    """Diagonal path; blocks fill rows from the last block up, marks on non-leading rows."""
    blocks = _blocks(pi)
    labels, marks = [], []
    for b in reversed(blocks):
        for h, e in enumerate(b):
            labels.append(e)
            if h:
                marks.append(len(labels))
    return _decorated(range(len(labels)), labels, "valley", marks)


def _minimaj_rows(blocks, stages: list | None = None):
    """Build the rows of gamma_minimaj as [position in tau, area, marked].

    tau = miniword(pi) has runs 0..s-1 numbered from the right; rows of run i
    get area i.  Step i first lays the unread blocks of run i that lie wholly
    in the run, then inserts the rest of run i+1's boundary block (tau_c ..
    tau_{a-1}, area i+1) and the leftover of run i (tau_a .. tau_{b-1}).

    Two choices are not pinned down by the prose and are fixed here so that
    the construction is injective with the stated statistics:
      pivot  tau_d: largest letter below tau_c among the run-i letters of the
             block immediately right of tau_c's block;
      anchor: the next step's new rows go right above the largest row of the
             previous tau_a .. tau_{b-1} stretch whose label is below the first
             new label, or above the top row of tau_c .. tau_{a-1} if none is.
    """
    seg = miniword(blocks)
    tau = seg.word
    n = len(tau)
    owner = [bi for bi, s in enumerate(seg.shape) for _ in range(s)]
    run = [0] * n
    cur = 0
    for p in range(n - 1, -1, -1):
        if p < n - 1 and tau[p] > tau[p + 1]:
            cur += 1
        run[p] = cur
    nruns = cur + 1
    start: dict[int, int] = {}
    for p in range(n):
        start.setdefault(owner[p], p)

    def snap():
        if stages is not None:
            stages.append([list(r) for r in rows])

    rows: list[list] = []
    hi = n - 1
    prev = None
    for i in range(nruns):
        a = min(p for p in range(n) if run[p] == i)
        b = hi + 1
        while b - 1 >= a and start[owner[b - 1]] >= a:
            b = start[owner[b - 1]]
        # blocks wholly inside run i, rightmost block lowest, each increasing upward
        pieces = []
        p = b
        while p <= hi:
            q = p
            while q + 1 <= hi and owner[q + 1] == owner[p]:
                q += 1
            pieces.append((p, q))
            p = q + 1
        new = [[t, i, t > p0] for (p0, q0) in reversed(pieces) for t in range(p0, q0 + 1)]
        if prev is None:
            at = 0
        else:
            pc, pa, pb = prev
            order = [row[0] for row in rows]
            anchor = pa - 1
            if new:
                x = tau[new[0][0]]
                below = [t for t in range(pa, pb) if tau[t] < x]
                if below:
                    anchor = max(below, key=lambda t: (tau[t], t))
            at = order.index(anchor) + 1
        rows[at:at] = new
        if new:
            snap()
        if i == nruns - 1:
            break
        c = start[owner[b - 1]]
        nb = owner[b]
        cands = [t for t in range(n) if owner[t] == nb and run[t] == i and tau[t] < tau[c]]
        if not cands:
            raise DomainError("no pivot below tau_c; not a miniword")
        d = max(cands, key=lambda t: (tau[t], t))
        pos = [row[0] for row in rows].index(d)
        rows[pos + 1 : pos + 1] = [[t, i + 1, t > c] for t in range(c, a)] + [
            [t, i, True] for t in range(a, b)
        ]
        snap()
        prev = (c, a, b)
        hi = c - 1
    return tau, rows


def _rows_to_object(tau, rows) -> dict:
    area = [row[1] for row in rows]
    return {
        "cols": [i - x for i, x in enumerate(area)],
        "labels": [tau[row[0]] for row in rows],
        "marks": [j + 1 for j, row in enumerate(rows) if row[2]],
        "kind": "valley",
    }


def gamma_minimaj(pi) -> DecoratedParkingFunction:
    """Rows of run i of the miniword get area i; see ``_minimaj_rows``."""
    blocks = _blocks(pi)
    tau, rows = _minimaj_rows(blocks)
    obj = _rows_to_object(tau, rows)
    return _decorated(obj["cols"], obj["labels"], "valley", obj["marks"])


def gamma_minimaj_stages(pi) -> list[dict]:
    """Intermediate objects (cols, labels, marks) after each insertion of gamma_minimaj."""
    blocks = _blocks(pi)
    stages: list = []
    tau, _ = _minimaj_rows(blocks, stages)
    return [_rows_to_object(tau, rows) for rows in stages]


GAMMAS = {"dinv": gamma_dinv, "maj": gamma_maj, "inv": gamma_inv, "minimaj": gamma_minimaj}
