"""Exact arithmetic in Z[q^{+-1}, t^{+-1}].

Polynomials are stored sparsely as a map (deg_q, deg_t) -> integer
coefficient, with no zero coefficients kept.  Coefficients are Python
ints, so products of long generator words cannot overflow.  The whole
point of this module is that representation identities downstream are
checked as exact polynomial identities, never in floating point.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class LaurentPoly2:
    """An element of Z[q^{+-1}, t^{+-1}], immutable after construction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        if terms:
            self._terms = {k: c for k, c in terms.items() if c != 0}
        else:
            self._terms = {}
        self._hash: int | None = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return _ONE

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, deg_q: int, deg_t: int) -> "LaurentPoly2":
        return cls({(deg_q, deg_t): c})

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[int, int, int]]) -> "LaurentPoly2":
        terms: dict[tuple[int, int], int] = {}
        for dq, dt, c in triples:
            key = (dq, dt)
            terms[key] = terms.get(key, 0) + c
        return cls(terms)

    def to_triples(self) -> list[list[int]]:
        """Serialize as sorted [deg_q, deg_t, coefficient] triples."""
        return [[dq, dt, c] for (dq, dt), c in sorted(self._terms.items())]

    # -- predicates -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_t_free(self) -> bool:
        return all(dt == 0 for (_, dt) in self._terms)

    def is_unit_monomial(self) -> bool:
        """True iff this is a single term with coefficient +-1 (a ring unit)."""
        if len(self._terms) != 1:
            return False
        return abs(next(iter(self._terms.values()))) == 1

    def unit_inverse(self) -> "LaurentPoly2":
        """Inverse of a unit monomial; raises on anything else."""
        if not self.is_unit_monomial():
            raise ValueError(f"not a unit monomial: {self}")
        ((dq, dt), c), = self._terms.items()
        return LaurentPoly2({(-dq, -dt): c})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not self._terms:
            return other
        if not other._terms:
            return self
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = terms
        out._hash = None
        return out

    def __neg__(self) -> "LaurentPoly2":
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = {k: -c for k, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not other._terms:
            return self
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(a) == 1:
            ((dq, dt), c), = a.items()
            if dq == 0 and dt == 0 and c == 1:
                return other
            out = LaurentPoly2.__new__(LaurentPoly2)
            out._terms = {(dq + eq, dt + et): c * d for (eq, et), d in b.items()}
            out._hash = None
            return out
        if len(b) == 1:
            return other.__mul__(self)
        terms: dict[tuple[int, int], int] = {}
        get = terms.get
        for (aq, at), ac in a.items():
            for (bq, bt), bc in b.items():
                key = (aq + bq, at + bt)
                s = get(key, 0) + ac * bc
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = terms
        out._hash = None
        return out

    def scale(self, c: int) -> "LaurentPoly2":
        if c == 0:
            return _ZERO
        if c == 1:
            return self
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = {k: c * v for k, v in self._terms.items()}
        out._hash = None
        return out

    def __pow__(self, k: int) -> "LaurentPoly2":
        if k < 0:
            return self.unit_inverse() ** (-k)
        acc = _ONE
        for _ in range(k):
            acc = acc * self
        return acc

    def div_int(self, k: int) -> "LaurentPoly2":
        """Exact division by a nonzero integer; raises if not divisible."""
        terms = {}
        for key, c in self._terms.items():
            d, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"coefficient {c} not divisible by {k}")
            terms[key] = d
        return LaurentPoly2(terms)

    # -- specialization ----------------------------------------------------

    def evaluate(self, q: complex, t: complex) -> complex:
        """Numeric value at (q, t); Horner grouping per variable.

        Both substitution points must be nonzero since negative exponents
        occur.
        """
        if q == 0 or t == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        if not self._terms:
            return 0j
        by_t: dict[int, list[tuple[int, int]]] = {}
        for (dq, dt), c in self._terms.items():
            by_t.setdefault(dt, []).append((dq, c))
        outer = [(dt, _horner(pairs, q)) for dt, pairs in by_t.items()]
        return _horner(outer, t)

    def substitute_t(self, t_value: int) -> "LaurentPoly2":
        """Exact specialization of t to +1 or -1; the result is t-free."""
        if t_value not in (1, -1):
            raise ValueError("exact t substitution supports only +1 and -1")
        terms: dict[tuple[int, int], int] = {}
        for (dq, dt), c in self._terms.items():
            if t_value == -1 and (dt & 1):
                c = -c
            key = (dq, 0)
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = terms
        out._hash = None
        return out

    # -- comparison / representation ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._terms.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (dq, dt), c in sorted(self._terms.items()):
            body = "".join(
                f"*{v}^{d}" if d != 1 else f"*{v}"
                for v, d in (("q", dq), ("t", dt))
                if d != 0
            )
            parts.append(f"{c:+d}{body}")
        return "".join(parts)


def _horner(pairs: list[tuple[int, complex]], x: complex) -> complex:
    """Evaluate sum(c * x^deg) by Horner steps over the present degrees."""
    pairs = sorted(pairs, reverse=True)
    acc = 0j
    prev: int | None = None
    for deg, c in pairs:
        if prev is None:
            acc = complex(c)
        else:
            acc = acc * x ** (prev - deg) + c
        prev = deg
    return acc * x ** prev


_ZERO = LaurentPoly2()
_ONE = LaurentPoly2({(0, 0): 1})

ZERO = _ZERO
ONE = _ONE
Q = LaurentPoly2({(1, 0): 1})
T = LaurentPoly2({(0, 1): 1})
