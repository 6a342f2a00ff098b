"""Sparse polynomials in q and t with exact integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = ["QTPolynomial", "Q", "T", "ONE", "ZERO"]

_TERM = re.compile(r"^(\d+)?(?:\*?q(?:\^(\d+))?)?(?:\*?t(?:\^(\d+))?)?$")


class QTPolynomial:
    """Immutable mapping (e_q, e_t) -> nonzero int.

    Equality is term-set equality; plain ints compare as constants.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable | None = None):
        if terms is None:
            terms = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for (eq, et), c in items:
            if eq < 0 or et < 0:
                raise ValueError(f"negative exponent ({eq},{et})")
            if c:
                key = (int(eq), int(et))
                v = clean.get(key, 0) + int(c)
                if v:
                    clean[key] = v
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def monomial(cls, coeff: int = 1, eq: int = 0, et: int = 0) -> "QTPolynomial":
        return cls({(eq, et): coeff})

    @classmethod
    def constant(cls, c: int) -> "QTPolynomial":
        return cls({(0, 0): c})

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable[int]) -> "QTPolynomial":
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_counts(cls, counts: Mapping, var: str = "q") -> "QTPolynomial":
        """Univariate polynomial from {exponent: coefficient}."""
        if var == "q":
            return cls({(e, 0): c for e, c in counts.items()})
        return cls({(0, e): c for e, c in counts.items()})

    # access
    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, eq: int, et: int = 0) -> int:
        return self._terms.get((eq, et), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def degree_q(self) -> int:
        return max((e for e, _ in self._terms), default=-1)

    @property
    def degree_t(self) -> int:
        return max((e for _, e in self._terms), default=-1)

    def q_coeffs(self) -> list[int]:
        """Coefficient list in q (requires no t)."""
        if any(et for _, et in self._terms):
            raise ValueError("polynomial involves t")
        out = [0] * (self.degree_q + 1)
        for (eq, _), c in self._terms.items():
            out[eq] = c
        return out

    # arithmetic
    @staticmethod
    def _coerce(other) -> "QTPolynomial | None":
        if isinstance(other, QTPolynomial):
            return other
        if isinstance(other, int):
            return QTPolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            out[k] = out.get(k, 0) + c
        return QTPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QTPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self._terms.items():
            for (x, y), d in o._terms.items():
                key = (a + x, b + y)
                out[key] = out.get(key, 0) + c * d
        return QTPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, eq: int = 0, et: int = 0) -> "QTPolynomial":
        """Multiply by q^eq t^et."""
        return QTPolynomial({(a + eq, b + et): c for (a, b), c in self._terms.items()})

    # evaluation and specialization
    def eval_at(self, q0=1, t0=1):
        return sum(c * q0**a * t0**b for (a, b), c in self._terms.items())

    def specialize(self, *, t: int | None = None, q: int | None = None) -> "QTPolynomial":
        """Set t:=0 or q:=0 (the only specializations used here) by filtering terms."""
        if (t, q) == (0, None):
            return QTPolynomial({k: c for k, c in self._terms.items() if k[1] == 0})
        if (t, q) == (None, 0):
            return QTPolynomial({k: c for k, c in self._terms.items() if k[0] == 0})
        raise ValueError("specialize supports exactly one of t=0 or q=0")

    def swap_qt(self) -> "QTPolynomial":
        return QTPolynomial({(b, a): c for (a, b), c in self._terms.items()})

    # comparison
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # text
    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        """Canonical order: e_t major, e_q minor, ascending."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def serialize(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for (eq, et), c in self.sorted_terms():
            factors = []
            if abs(c) != 1 or (eq == 0 and et == 0):
                factors.append(str(abs(c)))
            if eq:
                factors.append("q" if eq == 1 else f"q^{eq}")
            if et:
                factors.append("t" if et == 1 else f"t^{et}")
            term = "*".join(factors)
            if c < 0:
                out.append("-" + term)
            else:
                out.append(("+" if out else "") + term)
        return "".join(out)

    @classmethod
    def parse(cls, text: str) -> "QTPolynomial":
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        terms: dict[tuple[int, int], int] = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
            m = _TERM.match(body)
            if not m or not body:
                raise ValueError(f"bad term {body!r}")
            c = int(m.group(1)) if m.group(1) else 1
            has_q = "q" in body
            has_t = "t" in body
            eq = int(m.group(2)) if m.group(2) else (1 if has_q else 0)
            et = int(m.group(3)) if m.group(3) else (1 if has_t else 0)
            c = -c if sign == "-" else c
            terms[(eq, et)] = terms.get((eq, et), 0) + c
        return cls(terms)

    def __str__(self):
        return self.serialize()

    def __repr__(self):
        return f"QTPolynomial({self.serialize()!r})"


ONE = QTPolynomial.constant(1)
ZERO = QTPolynomial()
Q = QTPolynomial.monomial(1, 1, 0)
T = QTPolynomial.monomial(1, 0, 1)
