"""q-analogues, distribution polynomials D^stat and their recursions.

D^stat_{r;beta,k}(q) sums q^stat over the tail-positive partitions of
{0^r} + A(beta) with k blocks; the "all" variant drops tail-positivity.
I and M abbreviate D^inv and D^minimaj.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .core import Composition, Content, DomainError, iter_block_sequences
from .qpoly import ONE, QTPolynomial, ZERO
from .statistics import STATISTICS, maj_of_word, miniword, cyclic_decrement

__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_stirling",
    "DistributionKey",
    "brute_force_D",
    "D_plus",
    "I_shape_recursive",
    "I_recursive",
    "M_recursive",
    "D_mahonian_recursive",
    "D_mahonian_simplified",
    "lemma_l36_check",
    "lemma_l36_sides",
    "lemma_l36_cyclic_sides",
]


# --- q-analogues -------------------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int) -> QTPolynomial:
    if n < 0:
        raise DomainError("q_int needs n >= 0")
    return QTPolynomial.from_q_coeffs([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QTPolynomial:
    if n < 0:
        raise DomainError("q_factorial needs n >= 0")
    return ONE if n == 0 else q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QTPolynomial:
    """Gaussian binomial by q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if n < 0:
        raise DomainError("q_binomial needs n >= 0")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(eq=k)


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> QTPolynomial:
    """S_{n,k} = S_{n-1,k-1} + [k]_q S_{n-1,k}, S_{0,0} = 1."""
    if n < 0 or k < 0:
        raise DomainError("q_stirling needs n, k >= 0")
    if n == 0:
        return ONE if k == 0 else ZERO
    if k == 0 or k > n:
        return ZERO
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)


# --- brute force -------------------------------------------------------------


@dataclass(frozen=True)
class DistributionKey:
    r: int
    beta: tuple[int, ...]
    k: int
    variant: str = "tail_positive"  # or "all"
    stat: str = "inv"
    shape: tuple[int, ...] | None = None

    def __post_init__(self):
        beta = self.beta.parts if isinstance(self.beta, Composition) else tuple(self.beta)
        object.__setattr__(self, "beta", tuple(Composition(beta).parts))
        if self.r < 0 or self.k < 0:
            raise DomainError("r and k must be non-negative")
        if self.variant not in ("tail_positive", "all"):
            raise DomainError(f"unknown variant {self.variant!r}")
        if self.stat not in STATISTICS:
            raise DomainError(f"unknown statistic {self.stat!r}")
        if self.shape is not None:
            shape = tuple(self.shape)
            object.__setattr__(self, "shape", shape)
            if len(shape) != self.k or any(s <= 0 for s in shape):
                raise DomainError(f"shape {shape} is not a strong composition with {self.k} parts")
            if sum(shape) != self.r + sum(self.beta):
                raise DomainError(f"shape {shape} does not sum to |beta| + r")

    @property
    def content(self) -> Content:
        return Content(Composition(self.beta), self.r)

    def __str__(self):
        s = f"{self.stat}:{self.variant}:r={self.r}:beta=({','.join(map(str, self.beta))}):k={self.k}"
        if self.shape is not None:
            s += f":shape=({','.join(map(str, self.shape))})"
        return s


@lru_cache(maxsize=None)
def _brute_all(r: int, beta: tuple, k: int, variant: str, shape) -> dict[str, QTPolynomial]:
    # one enumeration pass feeds all four statistics
    tail = variant == "tail_positive"
    mult = (r,) + beta
    zf = (k - 1,) if tail and k else ()
    if shape is None:
        stream = iter_block_sequences(mult, k=k, zero_free=zf)
    else:
        stream = iter_block_sequences(mult, sizes=shape, zero_free=zf)
    fns = list(STATISTICS.items())
    counts = {name: Counter() for name, _ in fns}
    for blocks in stream:
        for name, fn in fns:
            counts[name][fn(blocks)] += 1
    return {name: QTPolynomial.from_counts(c) for name, c in counts.items()}


def _brute(key: DistributionKey) -> QTPolynomial:
    return _brute_all(key.r, key.beta, key.k, key.variant, key.shape)[key.stat]


def brute_force_D(key: DistributionKey) -> QTPolynomial:
    """The enumeration oracle: sum of q^stat over the selected set."""
    return _brute(key)


def D_plus(key: DistributionKey) -> QTPolynomial:
    """All-variant distribution via the content (r, beta) with no zeros (letters shifted up)."""
    if key.variant != "all":
        raise DomainError("D_plus is defined for variant='all'")
    shifted = DistributionKey(0, (key.r,) + key.beta, key.k, "tail_positive", key.stat, key.shape)
    return _brute(shifted)


# --- last-block recursions (inv and minimaj) ------------------------------------


def _strip(r: int, beta: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # with no zeros, leading zero parts only relabel letters and change no statistic
    if r == 0:
        i = 0
        while i < len(beta) and beta[i] == 0:
            i += 1
        beta = beta[i:]
    return r, beta


def _last_blocks(beta: tuple[int, ...], size: int | None):
    """Non-empty S subset of [m] with chi_S <= beta, with the q-weight exponent."""
    support = [i for i, b in enumerate(beta, start=1) if b > 0]
    sizes = [size] if size is not None else range(1, len(support) + 1)
    for s in sizes:
        if s < 1 or s > len(support):
            continue
        for S in combinations(support, s):
            rest = list(beta)
            for i in S:
                rest[i - 1] -= 1
            lo = S[0]
            exp = sum(rest[i - 1] for i in range(lo + 1, len(beta) + 1))
            yield S, exp, tuple(rest)


@lru_cache(maxsize=None)
def I_shape_recursive(r: int, beta: tuple[int, ...], alpha: tuple[int, ...]) -> QTPolynomial:
    """I_{r;beta,alpha} by removing the last block S, at fixed shape.

    The inner all-variant value I^all_{r;beta',alpha^-} is I_{0;(r,beta'),alpha^-}.
    """
    beta, alpha = tuple(beta), tuple(alpha)
    if any(a <= 0 for a in alpha) or sum(alpha) != r + sum(beta):
        raise DomainError(f"shape {alpha} does not fit content r={r}, beta={beta}")
    r, beta = _strip(r, beta)
    if not alpha:
        return ONE if r == 0 and not any(beta) else ZERO
    total = ZERO
    for _, exp, rest in _last_blocks(beta, alpha[-1]):
        total = total + I_shape_recursive(0, (r,) + rest, alpha[:-1]).shift(eq=exp)
    return total


def _recursive_last_block(r, beta, k, inner) -> QTPolynomial:
    if k == 0:
        return ONE if r == 0 and not any(beta) else ZERO
    total = ZERO
    for _, exp, rest in _last_blocks(beta, None):
        total = total + inner(r, rest, k - 1).shift(eq=exp)
    return total


@lru_cache(maxsize=None)
def _I_all_recursive(r, beta, k):
    r2, b2 = _strip(0, (r,) + tuple(beta))
    return I_recursive(r2, b2, k)


@lru_cache(maxsize=None)
def I_recursive(r: int, beta: tuple[int, ...], k: int, inner: str = "recursive") -> QTPolynomial:
    """I_{r;beta,k} = sum over last blocks S of q^{...} I^all_{r;beta-chi_S,k-1}.

    inner="recursive" expands I^all by the same rule; inner="oracle" takes it
    from brute force.
    """
    r, beta = _strip(r, tuple(beta))
    if inner == "recursive":
        fn = _I_all_recursive
    elif inner == "oracle":
        def fn(rr, bb, kk):
            return _brute(DistributionKey(rr, bb, kk, "all", "inv"))
    else:
        raise DomainError(f"inner must be 'recursive' or 'oracle', not {inner!r}")
    return _recursive_last_block(r, beta, k, fn)


@lru_cache(maxsize=None)
def _M_all_recursive(r, beta, k):
    r2, b2 = _strip(0, (r,) + tuple(beta))
    return M_recursive(r2, b2, k, "recursive")


@lru_cache(maxsize=None)
def M_recursive(r: int, beta: tuple[int, ...], k: int, inner: str = "oracle") -> QTPolynomial:
    """M_{r;beta,k} = sum over last blocks S of q^{...} M^all_{r;beta-chi_S,k-1}.

    The default takes M^all from the minimaj brute force, so the identity is
    checked one level at a time; inner="recursive" expands it fully (which
    coincides with the inv recursion).
    """
    r, beta = _strip(r, tuple(beta))
    if inner == "recursive":
        fn = _M_all_recursive
    elif inner == "oracle":
        def fn(rr, bb, kk):
            return _brute(DistributionKey(rr, bb, kk, "all", "minimaj"))
    else:
        raise DomainError(f"inner must be 'recursive' or 'oracle', not {inner!r}")
    return _recursive_last_block(r, beta, k, fn)


# --- the Mahonian recursion ----------------------------------------------------


@lru_cache(maxsize=None)
def D_mahonian_recursive(r: int, beta: tuple[int, ...], k: int) -> QTPolynomial:
    """Recursion on the last letter n, following the insertion maps.

    D_{r;beta,k} = sum_l q^{C(u,2)} [l, u] ([k, l] D_{r;beta^-,l}
                   + [k-1, l] (D^+_{r;beta^-,l} - D_{r;beta^-,l})),  u = beta_n - k + l.
    """
    beta = tuple(beta)
    if k < 0:
        return ZERO
    if not beta:
        return ONE if r == 0 and k == 0 else ZERO
    head, bn = beta[:-1], beta[-1]
    total = ZERO
    for ell in range(0, k + 1):
        u = bn - k + ell
        if u < 0 or u > ell:
            continue
        weight = q_binomial(ell, u).shift(eq=comb(u, 2))
        d = D_mahonian_recursive(r, head, ell)
        # with no zeros every partition is tail-positive, so D^+ = D
        d_all = D_mahonian_recursive(0, (r,) + head, ell) if r else d
        inner = q_binomial(k, ell) * d
        if k >= 1:
            inner = inner + q_binomial(k - 1, ell) * (d_all - d)
        total = total + weight * inner
    return total


@lru_cache(maxsize=None)
def D_mahonian_simplified(r: int, beta: tuple[int, ...], k: int) -> QTPolynomial:
    """The second, "simplified" line of the recursion as printed (known to be wrong).

    [k, l] D + [k-1, l] (D^+ - D) is replaced by [k-1, l-1] D + [k-1, l] D^+,
    which drops the q^{...} factor of the q-Pascal identity.  Kept for reporting.
    """
    beta = tuple(beta)
    if not beta:
        return ONE if r == 0 and k == 0 else ZERO
    head, bn = beta[:-1], beta[-1]
    total = ZERO
    for ell in range(0, k + 1):
        u = bn - k + ell
        if u < 0 or u > ell:
            continue
        weight = q_binomial(ell, u).shift(eq=comb(u, 2))
        d = D_mahonian_simplified(r, head, ell)
        d_all = D_mahonian_simplified(0, (r,) + head, ell) if r else d
        kb = q_binomial(k - 1, ell - 1) if k >= 1 and ell >= 1 else ZERO
        kp = q_binomial(k - 1, ell) if k >= 1 else ZERO
        total = total + weight * (kb * d + kp * d_all)
    return total


# --- Lemma on singleton last blocks for minimaj -----------------------------------


def lemma_l36_sides(r: int, beta: tuple[int, ...], alpha: tuple[int, ...]):
    """Both sides of the singleton-last-block identity for minimaj, by brute force.

    M_{r;beta,alpha} = sum_{beta_i > 0} q^{beta_{i+1}+...+beta_m}
                       M^all_{r;(beta_{i+1},...,beta_m,beta_1,...,beta_i - 1),alpha^-}
    """
    beta, alpha = tuple(beta), tuple(alpha)
    if not alpha or alpha[-1] != 1:
        raise DomainError("the lemma needs a last part equal to 1")
    lhs = _brute(DistributionKey(r, beta, len(alpha), "tail_positive", "minimaj", alpha))
    rhs = ZERO
    m = len(beta)
    for i in range(1, m + 1):
        if beta[i - 1] == 0:
            continue
        rot = beta[i:] + beta[: i - 1] + (beta[i - 1] - 1,)
        inner = _brute(DistributionKey(r, rot, len(alpha) - 1, "all", "minimaj", alpha[:-1]))
        rhs = rhs + inner.shift(eq=sum(beta[i:]))
    return lhs, rhs


def lemma_l36_cyclic_sides(r: int, beta: tuple[int, ...], alpha: tuple[int, ...]):
    """Same left side; the right side keeps the zeros inside the rotation.

    With s = (r, beta_1, ..., beta_m) and s_j lowered by one, the inner content
    is the cyclic rotation (s_{j+1}, ..., s_m, s_0, ..., s_j): after c^j the
    letters j+1..m become 0..m-j-1 and the old zeros become m-j.  This is what
    the cyclic-decrement argument gives at fixed shape; moving r back to the
    front is only valid after summing over shapes.
    """
    beta, alpha = tuple(beta), tuple(alpha)
    if not alpha or alpha[-1] != 1:
        raise DomainError("the lemma needs a last part equal to 1")
    lhs = _brute(DistributionKey(r, beta, len(alpha), "tail_positive", "minimaj", alpha))
    s = (r,) + beta
    rhs = ZERO
    for j in range(1, len(s)):
        if s[j] == 0:
            continue
        low = s[:j] + (s[j] - 1,) + s[j + 1 :]
        rot = low[j + 1 :] + low[: j + 1]
        inner = _brute(DistributionKey(rot[0], rot[1:], len(alpha) - 1, "all", "minimaj", alpha[:-1]))
        rhs = rhs + inner.shift(eq=sum(beta[j:]))
    return lhs, rhs


def lemma_l36_check(r: int, beta: tuple[int, ...], alpha: tuple[int, ...], form: str = "printed") -> bool:
    """form='printed' checks the stated rotation; form='cyclic' the rotation through 0."""
    if r + sum(beta) == 0:
        return True
    if form == "printed":
        lhs, rhs = lemma_l36_sides(r, beta, alpha)
    elif form == "cyclic":
        lhs, rhs = lemma_l36_cyclic_sides(r, beta, alpha)
    else:
        raise DomainError(f"form must be 'printed' or 'cyclic', not {form!r}")
    return lhs == rhs


# --- word-level lemma helpers ----------------------------------------------------


def cyclic_shift_maj_gap(word, modulus: int) -> int:
    """maj(c.w) - maj(w); equals the number of zeros when w does not end in 0."""
    return maj_of_word(cyclic_decrement(word, modulus)) - maj_of_word(word)


def miniword_commutes(omp, modulus: int) -> bool:
    """Whether miniword(c.mu) = c.miniword(mu) as segmented words."""
    return miniword(cyclic_decrement(omp, modulus)) == cyclic_decrement(miniword(omp), modulus)
