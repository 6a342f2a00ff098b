"""Identity suites behind ``extdelta verify``.

A suite expands its bounds into tasks, runs a worker per task (optionally in
a process pool) and collects case records in task order.  Every case carries
the exact expected and actual values, so reports are reproducible byte for
byte apart from the top-level timing field.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Callable, Iterable

from . import __version__
from .bijections import GAMMAS
from .core import Content, compositions, enumerate_omps, validate
from .insertion import MAPS, enumerate_insertion_domain
from .parking import area, area_minus, decorated_gfs, dinv, dinv_minus, rise_gf, val_gf
from .qpoly import ZERO, QTPolynomial
from .qseries import (
    D_mahonian_recursive,
    DistributionKey,
    I_recursive,
    I_shape_recursive,
    M_recursive,
    brute_force_D,
    lemma_l36_sides,
    lemma_l36_cyclic_sides,
    q_factorial,
    q_stirling,
)
from .statistics import STATISTICS, cyclic_decrement, maj_of_word, miniword

__all__ = ["Case", "SuiteReport", "SUITES", "run_suite", "multiset_words"]

STATS = ("inv", "maj", "dinv", "minimaj")


@dataclass
class Case:
    key: str
    inputs: dict
    expected: Any
    actual: Any
    group: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "group": self.group,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class SuiteReport:
    suite: str
    params: dict
    assertive: bool
    cases: list[Case] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    elapsed_ms: int | None = None
    version: str = __version__

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok or not self.assertive else 1

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "assertive": self.assertive,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary,
            "passed": self.passed,
            "failed": self.failed,
            "elapsed_ms": self.elapsed_ms,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=False) + "\n"


def _fmt_beta(beta) -> str:
    return "(" + ",".join(map(str, beta)) + ")"


def _p(poly: QTPolynomial) -> str:
    return poly.serialize()


def _contents(max_size: int, max_r: int, min_size: int = 0, need_beta: bool = False):
    """(size, r, beta) with beta a strong composition of size - r, in a fixed order."""
    for size in range(min_size, max_size + 1):
        for r in range(0, min(max_r, size) + 1):
            if need_beta and size - r == 0:
                continue
            for beta in compositions(size - r):
                yield size, r, beta


# --- equidistribution ------------------------------------------------------------


def _equi_tasks(max_size, max_r):
    for size, r, beta in _contents(max_size, max_r):
        for variant in ("tail_positive", "all"):
            yield (size, r, beta, variant)


def _equi_worker(task):
    size, r, beta, variant = task
    out = []
    for k in range(0, size + 1):
        polys = {s: brute_force_D(DistributionKey(r, beta, k, variant, s)) for s in STATS}
        for s in STATS[1:]:
            out.append(
                Case(
                    f"{variant};r={r};beta={_fmt_beta(beta)};k={k};inv~{s}",
                    {"r": r, "beta": list(beta), "k": k, "variant": variant, "stat": s},
                    _p(polys["inv"]),
                    _p(polys[s]),
                    group=f"inv~{s}",
                )
            )
    return out


# --- insertion --------------------------------------------------------------------


def _insertion_tasks(max_size, max_r):
    for size, r, beta in _contents(max_size, max_r, 1, need_beta=True):
        yield (size, r, beta)


def _insertion_worker(task):
    size, r, beta = task
    content = Content(beta, r)
    out = []
    for k in range(1, size + 1):
        target = sum(1 for _ in enumerate_omps(content, k, ordered=False))
        for name, phi in MAPS.items():
            stat = STATISTICS[name]
            seen = set()
            n = inc = invalid = 0
            for ell in range(0, k + 1):
                for inp in enumerate_insertion_domain(beta, r, k, ell):
                    img = phi(inp, beta, k)
                    n += 1
                    if stat(img) - stat(inp.pi) != inp.weight:
                        inc += 1
                    if not validate(img, content, k, tail_positive=True):
                        invalid += 1
                    seen.add(img.blocks)
            out.append(
                Case(
                    f"r={r};beta={_fmt_beta(beta)};k={k};phi_{name}",
                    {"r": r, "beta": list(beta), "k": k, "map": f"phi_{name}"},
                    {"domain": target, "image": target, "increment_failures": 0, "invalid": 0},
                    {"domain": n, "image": len(seen), "increment_failures": inc, "invalid": invalid},
                    group=f"phi_{name}",
                )
            )
    return out


# --- bijections -------------------------------------------------------------------


def _bij_tasks(max_size, max_r):
    for size, r, beta in _contents(max_size, max_r, 1):
        yield (size, r, beta)


def _contract(name, d, pi) -> bool:
    pf, marks = d.pf, d.marks
    value = STATISTICS[name](pi)
    if name == "dinv":
        return area_minus(pf, marks) == 0 and dinv(pf) == value
    if name == "maj":
        return dinv(pf) == 0 and area_minus(pf, marks) == value
    if name == "inv":
        return area(pf) == 0 and dinv_minus(pf, marks) == value
    return dinv_minus(pf, marks) == 0 and area(pf) == value


def _bij_worker(task):
    N, r, beta = task
    content = Content(beta, r)
    gfs = {
        (kind, plus): decorated_gfs(kind, r, beta, allow_zero_first=plus)
        for kind in ("rise", "valley")
        for plus in (True, False)
    }
    out = []
    for blocks in range(1, N + 1):
        omps = list(enumerate_omps(content, blocks, tail_positive=False))
        n_tail = sum(1 for pi in omps if pi.tail_positive)
        for name, gamma in GAMMAS.items():
            kind = "rise" if name in ("dinv", "maj") else "valley"
            # residual-zero slice: t=0 for the dinv/inv maps, q=0 for maj/minimaj
            zero_t = name in ("dinv", "inv")
            bad = Counter()
            seen = set()
            for pi in omps:
                d = gamma(pi)
                pf = d.pf
                if not _contract(name, d, pi):
                    bad["contract"] += 1
                if sorted(pf.labels) != sorted(pi.letters):
                    bad["content"] += 1
                if pf.labels[0] != pi.blocks[-1][0]:
                    bad["first_row"] += 1
                if len(d.marks) != N - blocks:
                    bad["mark_count"] += 1
                if pi.tail_positive != (pf.labels[0] != 0):
                    bad["tail"] += 1
                seen.add((pf.cols, pf.labels, d.marks))

            def target(plus):
                poly = gfs[kind, plus].get(N - blocks, ZERO)
                poly = poly.specialize(t=0) if zero_t else poly.specialize(q=0)
                return poly.eval_at(1, 1)

            expected = {
                "objects": len(omps),
                "distinct_images": len(omps),
                "target_all": len(omps),
                "target_tail_positive": n_tail,
                "failures": {},
            }
            actual = {
                "objects": len(omps),
                "distinct_images": len(seen),
                "target_all": target(True),
                "target_tail_positive": target(False),
                "failures": dict(sorted(bad.items())),
            }
            out.append(
                Case(
                    f"r={r};beta={_fmt_beta(beta)};blocks={blocks};gamma_{name}",
                    {"r": r, "beta": list(beta), "blocks": blocks, "map": f"gamma_{name}"},
                    expected,
                    actual,
                    group=f"gamma_{name}",
                )
            )
    return out


# --- coefficient extraction: Rise/Val against D^stat -----------------------------


def _combor_tasks(max_size, max_r):
    for N, r, beta in _contents(max_size, max_r, 1, need_beta=True):
        yield (N, r, beta)


IDENTITIES = (
    ("rise", "t=0", "dinv"),
    ("rise", "q=0", "maj"),
    ("valley", "t=0", "inv"),
    ("valley", "q=0", "minimaj"),
)


def _combor_worker(task):
    N, r, beta = task
    n = N - r
    gfs = {kind: decorated_gfs(kind, r, beta) for kind in ("rise", "valley")}
    out = []
    for marks in range(0, N):
        blocks = N - marks
        k = blocks - r - 1  # z^{n-k-1} extraction; k < 0 lies outside the stated range
        for kind, at, stat in IDENTITIES:
            poly = gfs[kind].get(marks, ZERO)
            lhs = poly.specialize(t=0) if at == "t=0" else poly.specialize(q=0).swap_qt()
            rhs = brute_force_D(DistributionKey(r, beta, blocks, "tail_positive", stat))
            name = f"{'Rise' if kind == 'rise' else 'Val'}@{at}~D^{stat}"
            out.append(
                Case(
                    f"n={n};r={r};beta={_fmt_beta(beta)};blocks={blocks};{name}",
                    {"n": n, "k": k if k >= 0 else None, "r": r, "beta": list(beta), "blocks": blocks},
                    _p(rhs),
                    _p(lhs),
                    group=name if k >= 0 else name + " (blocks<=r)",
                )
            )
    return out


# --- recursions ---------------------------------------------------------------------


def _rec_tasks(max_size, max_r):
    for size, r, beta in _contents(max_size, max_r):
        yield (size, r, beta)


def _rec_inv_worker(task):
    size, r, beta = task
    out = []
    for k in range(0, size + 1):
        bf = brute_force_D(DistributionKey(r, beta, k))
        for inner in ("recursive", "oracle"):
            out.append(
                Case(
                    f"r={r};beta={_fmt_beta(beta)};k={k};inner={inner}",
                    {"r": r, "beta": list(beta), "k": k, "inner": inner},
                    _p(bf),
                    _p(I_recursive(r, beta, k, inner)),
                    group=f"I_recursive[{inner}]",
                )
            )
    return out


def _rec_minimaj_worker(task):
    size, r, beta = task
    out = []
    for k in range(0, size + 1):
        bf = brute_force_D(DistributionKey(r, beta, k, stat="minimaj"))
        for inner in ("oracle", "recursive"):
            out.append(
                Case(
                    f"r={r};beta={_fmt_beta(beta)};k={k};inner={inner}",
                    {"r": r, "beta": list(beta), "k": k, "inner": inner},
                    _p(bf),
                    _p(M_recursive(r, beta, k, inner)),
                    group=f"M_recursive[{inner}]",
                )
            )
    return out


def _rec_shape_worker(task):
    size, r, beta = task
    out = []
    for alpha in compositions(size):
        bf = brute_force_D(DistributionKey(r, beta, len(alpha), shape=alpha))
        out.append(
            Case(
                f"r={r};beta={_fmt_beta(beta)};alpha={_fmt_beta(alpha)}",
                {"r": r, "beta": list(beta), "alpha": list(alpha)},
                _p(bf),
                _p(I_shape_recursive(r, beta, alpha)),
                group="I_shape_recursive",
            )
        )
    return out


def _mahonian_worker(task):
    size, r, beta = task
    out = []
    for k in range(0, size + 1):
        bf = brute_force_D(DistributionKey(r, beta, k))
        out.append(
            Case(
                f"r={r};beta={_fmt_beta(beta)};k={k}",
                {"r": r, "beta": list(beta), "k": k},
                _p(bf),
                _p(D_mahonian_recursive(r, beta, k)),
                group="D_mahonian_recursive",
            )
        )
    return out


# --- q-Stirling report ----------------------------------------------------------------


def _qstirling_tasks(max_size, max_r):
    for n in range(0, max_size + 1):
        yield (n,)


def _qstirling_worker(task):
    (n,) = task
    out = []
    for k in range(0, n + 1):
        bf = brute_force_D(DistributionKey(0, (1,) * n, k))
        s = q_stirling(n, k)
        for form, value in (("S", s), ("[k]!S", q_factorial(k) * s)):
            out.append(
                Case(
                    f"n={n};k={k};D~{form}",
                    {"n": n, "k": k, "form": form},
                    _p(bf),
                    _p(value),
                    group=f"D(0,1^n,k)~{form}",
                )
            )
    return out


# --- lemmas -------------------------------------------------------------------------------


def multiset_words(mult) -> Iterable[tuple[int, ...]]:
    """All distinct words using letter x exactly mult[x] times, lexicographically."""
    mult = list(mult)
    total = sum(mult)
    word: list[int] = []
    out = []

    def rec():
        if len(word) == total:
            out.append(tuple(word))
            return
        for x, c in enumerate(mult):
            if c:
                mult[x] -= 1
                word.append(x)
                rec()
                word.pop()
                mult[x] += 1

    rec()
    return out


def _lemma_tasks(max_size, max_r):
    for size, r, beta in _contents(max_size, max_r, 1):
        yield (size, r, beta)


def _lemma_worker(task):
    size, r, beta = task
    m = len(beta)
    modulus = m + 1
    content = Content(beta, r)
    key = f"r={r};beta={_fmt_beta(beta)}"
    inputs = {"r": r, "beta": list(beta)}
    out = []

    # c commutes with the miniword when the last block is a singleton
    bad = total = 0
    for k in range(1, size + 1):
        for mu in enumerate_omps(content, k, tail_positive=False, ordered=False):
            if len(mu.blocks[-1]) != 1:
                continue
            total += 1
            if miniword(cyclic_decrement(mu, modulus)) != cyclic_decrement(miniword(mu), modulus):
                bad += 1
    out.append(Case(key + ";c-miniword", inputs, {"checked": total, "failures": 0},
                    {"checked": total, "failures": bad}, group="c commutes with miniword"))

    # maj(c.w) = maj(w) + r for words not ending in 0
    bad = total = 0
    for w in multiset_words((r,) + tuple(beta)):
        if w[-1] == 0:
            continue
        total += 1
        if maj_of_word(cyclic_decrement(w, modulus)) != maj_of_word(w) + r:
            bad += 1
    out.append(Case(key + ";maj(c.w)", inputs, {"checked": total, "failures": 0},
                    {"checked": total, "failures": bad}, group="maj(c.w)=maj(w)+r"))

    # singleton last block: printed form and the cyclic form, per shape; printed form per k
    per_k: dict[int, list] = {}
    for alpha in compositions(size):
        if alpha[-1] != 1:
            continue
        lhs, rhs = lemma_l36_sides(r, beta, alpha)
        _, cyc = lemma_l36_cyclic_sides(r, beta, alpha)
        a = _fmt_beta(alpha)
        ins = dict(inputs, alpha=list(alpha))
        out.append(Case(f"{key};alpha={a};printed", ins, _p(lhs), _p(rhs), group="singleton last block, printed rotation, per shape"))
        out.append(Case(f"{key};alpha={a};cyclic", ins, _p(lhs), _p(cyc), group="singleton last block, rotation through 0, per shape"))
        acc = per_k.setdefault(len(alpha), [ZERO, ZERO])
        acc[0] = acc[0] + lhs
        acc[1] = acc[1] + rhs
    for k, (lhs, rhs) in sorted(per_k.items()):
        out.append(Case(f"{key};k={k};printed-summed", dict(inputs, k=k), _p(lhs), _p(rhs),
                        group="singleton last block, printed rotation, summed over shapes"))

    # minimaj distribution on the all-variant is symmetric in (r, beta)
    seq = (r,) + tuple(beta)
    arrangements = sorted(set(permutations(seq)))
    for k in range(1, size + 1):
        base = brute_force_D(DistributionKey(r, beta, k, "all", "minimaj"))
        for g in arrangements:
            if g == seq:
                continue
            other = brute_force_D(DistributionKey(g[0], g[1:], k, "all", "minimaj"))
            out.append(Case(f"{key};k={k};as={_fmt_beta(g)}", dict(inputs, k=k, rearranged=list(g)),
                            _p(base), _p(other), group="minimaj symmetry"))
    return out


# --- Rise = Val report -------------------------------------------------------------------


def _risevalsym_tasks(max_size, max_r):
    for N, r, beta in _contents(max_size, max_r, 1, need_beta=True):
        yield (N, r, beta)


def _risevalsym_worker(task):
    N, r, beta = task
    n = N - r
    out = []
    for k in range(0, n):
        rise = rise_gf(n, k, r, beta)
        val = val_gf(n, k, r, beta)
        base = f"n={n};k={k};r={r};beta={_fmt_beta(beta)}"
        inputs = {"n": n, "k": k, "r": r, "beta": list(beta)}
        out.append(Case(base + ";rise=val", inputs, _p(rise), _p(val), group="Rise=Val"))
        out.append(Case(base + ";rise q<->t", inputs, _p(rise), _p(rise.swap_qt()), group="Rise symmetric in q,t"))
        out.append(Case(base + ";val q<->t", inputs, _p(val), _p(val.swap_qt()), group="Val symmetric in q,t"))
    return out


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    tasks: Callable
    worker: Callable
    assertive: bool
    description: str


SUITES: dict[str, SuiteSpec] = {
    s.name: s
    for s in (
        SuiteSpec("equidistribution", _equi_tasks, _equi_worker, True,
                  "inv, maj, dinv and minimaj share one distribution (both variants)"),
        SuiteSpec("insertion", _insertion_tasks, _insertion_worker, True,
                  "phi maps: increment law, tail-positive image, bijectivity"),
        SuiteSpec("bijections", _bij_tasks, _bij_worker, True,
                  "gamma maps: statistic contracts, injectivity, image equals target set"),
        SuiteSpec("combor", _combor_tasks, _combor_worker, True,
                  "Rise/Val at t=0 or q=0 equal the D^stat distributions"),
        SuiteSpec("recursion-inv", _rec_tasks, _rec_inv_worker, True,
                  "last-block recursion for inv"),
        SuiteSpec("recursion-minimaj", _rec_tasks, _rec_minimaj_worker, True,
                  "last-block recursion for minimaj"),
        SuiteSpec("recursion-shape", _rec_tasks, _rec_shape_worker, True,
                  "fixed-shape last-block recursion for inv"),
        SuiteSpec("mahonian", _rec_tasks, _mahonian_worker, True,
                  "recursion on the largest letter for D_{r;beta,k}"),
        SuiteSpec("qstirling", _qstirling_tasks, _qstirling_worker, False,
                  "D_{0;1^n,k} against S_{n,k} and [k]_q! S_{n,k} (report only)"),
        SuiteSpec("lemmas", _lemma_tasks, _lemma_worker, True,
                  "cyclic action lemmas, singleton-last-block identity, minimaj symmetry"),
        SuiteSpec("rise-val-symmetry", _risevalsym_tasks, _risevalsym_worker, False,
                  "Rise = Val and q,t-symmetry (report only)"),
    )
}


def _summarize(cases: list[Case]) -> dict:
    groups: dict[str, list[int]] = {}
    for c in cases:
        g = groups.setdefault(c.group, [0, 0])
        g[0 if c.passed else 1] += 1
    return {g: {"passed": p, "failed": f} for g, (p, f) in groups.items()}


def run_suite(name: str, max_size: int = 6, max_r: int = 2, jobs: int = 1, timing: bool = True) -> SuiteReport:
    spec = SUITES[name]
    if max_size < 0 or max_r < 0:
        raise ValueError("max_size and max_r must be non-negative")
    start = time.perf_counter()
    tasks = list(spec.tasks(max_size, max_r))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(spec.worker, tasks, chunksize=1))
    else:
        results = [spec.worker(t) for t in tasks]
    cases = [c for res in results for c in res]
    report = SuiteReport(
        suite=name,
        params={"max_size": max_size, "max_r": max_r},
        assertive=spec.assertive,
        cases=cases,
        summary=_summarize(cases),
    )
    if timing:
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report
