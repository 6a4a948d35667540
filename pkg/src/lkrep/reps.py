"""The Lawrence-Krammer, reduced Burau, and permutation representations.

All generator matrices are exact, with entries in Z[q^{+-1}, t^{+-1}].

Conventions, fixed once here and relied on everywhere:

* Matrices act on column vectors; column j is the image of the j-th basis
  vector.
* The Lawrence-Krammer space has basis {v_{i,j} : 1 <= i < j <= n},
  ordered by (j, i) lexicographically, so that for every k <= n the first
  k(k-1)/2 vectors are exactly the pairs with both indices <= k.  With the
  column convention the matrices of braids on the first k strands are then
  block *upper* triangular, the top-left block being the k-strand
  representation.
* The reduced Burau matrices are the classical ones: -q at (i, i), -q at
  (i-1, i) and -1 at (i+1, i) where those rows exist, 1 elsewhere on the
  diagonal.  For braids on the first k strands these are block *lower*
  triangular with top-left block the k-strand Burau matrix.
* The sign convention for t is Bigelow-Budney's (Krammer's t is the
  negative of ours).

Generator inverses are obtained once by an exact linear solve against the
identity, verified by multiplication, and cached.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal, Sequence

import numpy as np

from .braids import BraidWord
from .laurent import ONE, Q, T, ZERO, LaurentPoly2

RepKind = Literal["lk", "burau", "perm"]

ExactMatrix = tuple[tuple[LaurentPoly2, ...], ...]

_MINUS_ONE = LaurentPoly2.const(-1)
_MINUS_Q = -Q
_Q2_MINUS_Q = Q * Q - Q  # q^2 - q
_ONE_MINUS_Q = ONE - Q
_MINUS_T_Q2 = -(T * Q * Q)  # -t q^2


# ---------------------------------------------------------------------------
# bases


@dataclass(frozen=True)
class PairBasis:
    """Ordered basis {v_{i,j} : 1 <= i < j <= n} sorted by (j, i).

    The ordering gives the nested-prefix property: the first k(k-1)/2
    entries are exactly the pairs with j <= k.
    """

    n: int
    pairs: tuple[tuple[int, int], ...] = field(init=False)

    def __post_init__(self):
        pairs = tuple((i, j) for j in range(2, self.n + 1) for i in range(1, j))
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def index(self, i: int, j: int) -> int:
        if not 1 <= i < j <= self.n:
            raise ValueError(f"invalid pair ({i}, {j}) for n={self.n}")
        return (j - 1) * (j - 2) // 2 + (i - 1)

    @staticmethod
    def prefix_size(k: int) -> int:
        """Number of basis vectors with both indices <= k."""
        return k * (k - 1) // 2


def square_basis_pairs(d: int, diagonal: bool) -> tuple[tuple[int, int], ...]:
    """Index pairs over 1..d for the symmetric (i <= j) or antisymmetric
    (i < j) square, in the same (j, i) order as PairBasis."""
    lo = 1 if diagonal else 2
    return tuple((i, j) for j in range(lo, d + 1) for i in range(1, j + (1 if diagonal else 0)))


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True, eq=False)
class RepMatrix:
    """A square matrix over Z[q^{+-1}, t^{+-1}] (exact) or C (numeric).

    `basis` records what the rows/columns index: a PairBasis for the
    Lawrence-Krammer space, or a string tag for standard bases.
    """

    entries: ExactMatrix | np.ndarray
    basis: PairBasis | str

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.entries, np.ndarray)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if self.is_exact != other.is_exact:
            return False
        if self.is_exact:
            return self.entries == other.entries
        return np.array_equal(self.entries, other.entries)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if self.is_exact and other.is_exact:
            return RepMatrix(exact_matmul(self.entries, other.entries), self.basis)
        if not self.is_exact and not other.is_exact:
            return RepMatrix(self.entries @ other.entries, self.basis)
        raise TypeError("cannot mix exact and numeric matrices")

    def evaluate(self, q: complex, t: complex) -> "RepMatrix":
        """Numeric specialization at (q, t)."""
        if not self.is_exact:
            raise TypeError("matrix is already numeric")
        arr = np.array(
            [[cell.evaluate(q, t) for cell in row] for row in self.entries],
            dtype=complex,
        )
        return RepMatrix(arr, self.basis)

    def substitute_t(self, t_value: int) -> "RepMatrix":
        if not self.is_exact:
            raise TypeError("t substitution needs an exact matrix")
        return RepMatrix(
            tuple(tuple(cell.substitute_t(t_value) for cell in row) for row in self.entries),
            self.basis,
        )

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> ExactMatrix | np.ndarray:
        if self.is_exact:
            return tuple(tuple(self.entries[r][c] for c in cols) for r in rows)
        return self.entries[np.ix_(list(rows), list(cols))]

    def to_json_dict(self, kind: str, n: int) -> dict:
        basis = (
            [list(p) for p in self.basis.pairs]
            if isinstance(self.basis, PairBasis)
            else self.basis
        )
        if self.is_exact:
            cells = [[cell.to_triples() for cell in row] for row in self.entries]
            mode = "exact"
        else:
            cells = [[[z.real, z.imag] for z in row] for row in self.entries]
            mode = "numeric"
        return {"kind": kind, "n": n, "mode": mode, "basis": basis, "entries": cells}


def exact_identity(d: int, basis) -> RepMatrix:
    ent = tuple(tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d))
    return RepMatrix(ent, basis)


def exact_matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Product of exact matrices, skipping zero entries.

    Iterates over the nonzero entries of b per column, so multiplying by a
    sparse generator matrix costs O(dim^2) polynomial operations.
    """
    d = len(a)
    cols: list[list[tuple[int, LaurentPoly2]]] = [[] for _ in range(d)]
    for k in range(d):
        row = b[k]
        for j in range(d):
            if row[j]:
                cols[j].append((k, row[j]))
    out = []
    for i in range(d):
        arow = a[i]
        orow = []
        for j in range(d):
            acc = ZERO
            for k, bkj in cols[j]:
                aik = arow[k]
                if aik:
                    acc = acc + aik * bkj
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def exact_trace(a: ExactMatrix) -> LaurentPoly2:
    acc = ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def charpoly(m: RepMatrix) -> tuple[LaurentPoly2, ...]:
    """Characteristic polynomial det(x I - M) of an exact matrix.

    Faddeev-LeVerrier recursion; the only divisions are by integers and
    are checked exact.  Returns coefficients (c_d, ..., c_0) with c_d = 1,
    so p(x) = sum c_{d-k} x^{d-k}.
    """
    if not m.is_exact:
        raise TypeError("charpoly needs an exact matrix")
    d = m.dim
    a = m.entries
    coeffs = [ONE]
    work = tuple(tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d))
    for k in range(1, d + 1):
        work = exact_matmul(a, work)
        ck = (-exact_trace(work)).div_int(k)
        coeffs.append(ck)
        if k < d:
            work = tuple(
                tuple(work[i][j] + ck if i == j else work[i][j] for j in range(d))
                for i in range(d)
            )
    return tuple(coeffs)


def exact_det(m: RepMatrix) -> LaurentPoly2:
    """Exact determinant, read off the characteristic polynomial."""
    d = m.dim
    c0 = charpoly(m)[-1]
    return c0 if d % 2 == 0 else -c0


def exact_inverse(m: RepMatrix) -> RepMatrix:
    """Invert an exact matrix by Gauss-Jordan elimination.

    Pivots must be unit monomials (single term, coefficient +-1), which is
    always the case for the generator matrices here; the result is
    verified by multiplication.
    """
    d = m.dim
    aug = [list(m.entries[i]) + [ONE if j == i else ZERO for j in range(d)] for i in range(d)]
    pivot_row_of_col: dict[int, int] = {}
    used_rows: set[int] = set()
    for col in range(d):
        pivot = None
        for r in range(d):
            if r not in used_rows and aug[r][col].is_unit_monomial():
                pivot = r
                break
        if pivot is None:
            raise ArithmeticError(f"no unit-monomial pivot in column {col}")
        inv = aug[pivot][col].unit_inverse()
        aug[pivot] = [inv * cell for cell in aug[pivot]]
        for r in range(d):
            if r != pivot and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [cell - factor * pc for cell, pc in zip(aug[r], aug[pivot])]
        used_rows.add(pivot)
        pivot_row_of_col[col] = pivot
    rows = [pivot_row_of_col[col] for col in range(d)]
    inv_entries = tuple(tuple(aug[rows[i]][d + j] for j in range(d)) for i in range(d))
    result = RepMatrix(inv_entries, m.basis)
    if exact_matmul(m.entries, inv_entries) != exact_identity(d, m.basis).entries:
        raise ArithmeticError("inverse verification failed")
    return result


# ---------------------------------------------------------------------------
# generator matrices


@lru_cache(maxsize=None)
def burau_gen(n: int, i: int) -> RepMatrix:
    """Reduced Burau matrix of sigma_i on C^{n-1}, exact in q."""
    if n < 2:
        raise ValueError("Burau needs n >= 2")
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    d = n - 1
    rows = [[ONE if r == c else ZERO for c in range(d)] for r in range(d)]
    rows[i - 1][i - 1] = _MINUS_Q
    if i - 2 >= 0:
        rows[i - 2][i - 1] = _MINUS_Q
    if i <= d - 1:
        rows[i][i - 1] = _MINUS_ONE
    return RepMatrix(tuple(tuple(r) for r in rows), "standard")


@lru_cache(maxsize=None)
def lk_gen(n: int, i: int) -> RepMatrix:
    """Lawrence-Krammer matrix of sigma_i on the pair basis, exact in q, t.

    Column for v_{j,k} according to the case of i relative to (j, k):
    untouched indices fix the vector; i = j-1 and i = k-1 mix in the
    neighbouring pairs (the latter with the t-twisted term); i = j or
    i = k shifts an index; i = j = k-1 scales by -t q^2.
    """
    if n < 2:
        raise ValueError("Lawrence-Krammer needs n >= 2")
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    basis = PairBasis(n)
    p = len(basis)
    rows = [[ZERO] * p for _ in range(p)]

    def add(ri: int, rj: int, col: int, poly: LaurentPoly2) -> None:
        rows[basis.index(ri, rj)][col] = rows[basis.index(ri, rj)][col] + poly

    for col, (j, k) in enumerate(basis.pairs):
        if i == j - 1 and i != k:  # i = j-1 (k cannot collide)
            add(i, k, col, Q)
            add(i, j, col, _Q2_MINUS_Q)
            add(j, k, col, _ONE_MINUS_Q)
        elif i == j and i == k - 1:
            add(j, k, col, _MINUS_T_Q2)
        elif i == j:  # i = j != k-1
            add(j + 1, k, col, ONE)
        elif i == k - 1:  # i = k-1 != j
            add(j, i, col, Q)
            add(j, k, col, _ONE_MINUS_Q)
            add(i, k, col, -(_Q2_MINUS_Q * T))
        elif i == k:
            add(j, k + 1, col, ONE)
        else:
            add(j, k, col, ONE)
    return RepMatrix(tuple(tuple(r) for r in rows), basis)


@lru_cache(maxsize=None)
def _gen_inverse(kind: str, n: int, i: int) -> RepMatrix:
    gen = lk_gen(n, i) if kind == "lk" else burau_gen(n, i)
    return exact_inverse(gen)


def _perm_matrix(word: BraidWord) -> ExactMatrix:
    """Matrix of the word's permutation on the basis f_i = e_i - e_{i+1}.

    p . f_i = e_{p(i)} - e_{p(i+1)}, and e_a - e_b expands as the signed
    sum of consecutive f's between a and b.
    """
    from .braids import permutation_of

    n = word.strands
    p = permutation_of(word)
    d = n - 1
    cols = []
    for i in range(1, n):
        a, b = p(i), p(i + 1)
        coeffs = [0] * d
        if a < b:
            for l in range(a, b):
                coeffs[l - 1] += 1
        elif a > b:
            for l in range(b, a):
                coeffs[l - 1] -= 1
        cols.append(coeffs)
    return tuple(
        tuple(LaurentPoly2.const(cols[j][r]) for j in range(d)) for r in range(d)
    )


def perm_rep(word: BraidWord) -> RepMatrix:
    """The (n-1)-dimensional representation of the underlying permutation.

    This is the action of S_n on C^n / span(1,...,1), written in the basis
    e_i - e_{i+1}; its trace on a permutation is (fixed points) - 1.
    """
    return RepMatrix(_perm_matrix(word), "standard")


def rep_of_word(kind: RepKind, word: BraidWord, start: RepMatrix | None = None) -> RepMatrix:
    """Exact matrix of a braid word: ordered product of generator matrices.

    Inverse letters use the cached exact generator inverses.  The product
    is accumulated by right-multiplications, which stay cheap because each
    generator matrix is sparse.  An already-computed `start` matrix may be
    supplied to be extended on the right by the word.
    """
    n = word.strands
    if kind == "perm":
        if start is not None:
            raise ValueError("start is not supported for the permutation kind")
        return perm_rep(word)
    if kind == "lk":
        basis: PairBasis | str = PairBasis(n)
        gen = lk_gen
    elif kind == "burau":
        basis = "standard"
        gen = burau_gen
    else:
        raise ValueError(f"unknown representation kind {kind!r}")
    d = len(basis) if isinstance(basis, PairBasis) else n - 1
    if start is None:
        acc = exact_identity(d, basis)
    else:
        if start.dim != d:
            raise ValueError("start matrix has the wrong dimension")
        acc = start
    for idx, sign in word.letters:
        step = gen(n, idx) if sign > 0 else _gen_inverse(kind, n, idx)
        acc = RepMatrix(exact_matmul(acc.entries, step.entries), basis)
    return acc


@lru_cache(maxsize=None)
def _numeric_gen(kind: str, n: int, i: int, sign: int, q: complex, t: complex) -> np.ndarray:
    mat = (lk_gen(n, i) if kind == "lk" else burau_gen(n, i)) if sign > 0 else _gen_inverse(kind, n, i)
    arr = mat.evaluate(q, t).entries
    arr.setflags(write=False)
    return arr


def rep_of_word_numeric(kind: RepKind, word: BraidWord, q: complex, t: complex = 1.0) -> np.ndarray:
    """Numeric matrix of a word at (q, t), with cached generator matrices."""
    n = word.strands
    if kind == "perm":
        return perm_rep(word).evaluate(q, t).entries
    d = n * (n - 1) // 2 if kind == "lk" else n - 1
    acc = np.eye(d, dtype=complex)
    q = complex(q)
    t = complex(t)
    for idx, sign in word.letters:
        acc = acc @ _numeric_gen(kind, n, idx, sign, q, t)
    return acc


# ---------------------------------------------------------------------------
# squares


def _square(m: RepMatrix, diagonal: bool) -> RepMatrix:
    d = m.dim
    pairs = square_basis_pairs(d, diagonal)
    tag = "sym2" if diagonal else "alt2"
    if m.is_exact:
        f = m.entries
        out = []
        for (a, b) in pairs:
            row = []
            for (i, j) in pairs:
                if diagonal:
                    val = f[a - 1][i - 1] * f[b - 1][j - 1]
                    if a != b:
                        val = val + f[b - 1][i - 1] * f[a - 1][j - 1]
                else:
                    val = f[a - 1][i - 1] * f[b - 1][j - 1] - f[b - 1][i - 1] * f[a - 1][j - 1]
                row.append(val)
            out.append(tuple(row))
        return RepMatrix(tuple(out), tag)
    f = m.entries
    size = len(pairs)
    arr = np.empty((size, size), dtype=complex)
    for r, (a, b) in enumerate(pairs):
        for c, (i, j) in enumerate(pairs):
            if diagonal:
                val = f[a - 1, i - 1] * f[b - 1, j - 1]
                if a != b:
                    val += f[b - 1, i - 1] * f[a - 1, j - 1]
            else:
                val = f[a - 1, i - 1] * f[b - 1, j - 1] - f[b - 1, i - 1] * f[a - 1, j - 1]
            arr[r, c] = val
    return RepMatrix(arr, tag)


def sym_square(m: RepMatrix) -> RepMatrix:
    """Induced operator on the symmetric square, basis e_i . e_j (i <= j),
    ordered by (j, i) to match PairBasis."""
    return _square(m, diagonal=True)


def alt_square(m: RepMatrix) -> RepMatrix:
    """Induced operator on the antisymmetric square, basis e_i ^ e_j (i < j).

    For a 1x1 input this is the (legitimate) 0-dimensional matrix.
    """
    return _square(m, diagonal=False)


# ---------------------------------------------------------------------------
# SU normalization


def lk_generator_det(n: int, q: complex, t: complex) -> complex:
    """det of any Lawrence-Krammer generator matrix: -t(-q)^n."""
    return -t * (-q) ** n


def mu_factor(n: int, q: complex, t: complex) -> complex:
    """The scalar det(rho_n(sigma_1))^{-2/n(n-1)}, principal branch."""
    d = lk_generator_det(n, q, t)
    return cmath.exp(-2.0 * cmath.log(d) / (n * (n - 1)))


def normalize_su(m: np.ndarray, word_exponent: int, n: int, q: complex, t: complex) -> np.ndarray:
    """Rescale a numeric Lawrence-Krammer image into SU(p).

    Multiplies by mu^{[beta]} where [beta] is the exponent sum, after which
    the determinant is 1 up to roundoff.
    """
    return mu_factor(n, q, t) ** word_exponent * m


# ---------------------------------------------------------------------------
# symmetric-square comparison at t = -1


@dataclass(frozen=True)
class SymSquareComparison:
    """Result of comparing rho_n(w) at t=-1 with Sym^2 of the Burau image.

    `diagonal_rescaling` holds d with D^{-1} S D = R when such a diagonal
    change of basis exists and the matrices are not already equal; None
    when the two sides agree only spectrally.
    """

    n: int
    word: BraidWord
    charpoly_equal: bool
    on_the_nose: bool
    diagonal_rescaling: tuple[LaurentPoly2, ...] | None


def _diagonal_conjugator(s: ExactMatrix, r: ExactMatrix) -> tuple[LaurentPoly2, ...] | None:
    """Search for monomial d_i with d_i^{-1} s_ij d_j = r_ij.

    Requires matching zero patterns and unit-monomial entry ratios; returns
    None if no such diagonal exists.  Solved as multiplicative potentials
    on the nonzero-pattern graph, one BFS per connected component (free
    components are pinned to 1).
    """
    d = len(s)
    for i in range(d):
        for j in range(d):
            if bool(s[i][j]) != bool(r[i][j]):
                return None

    def ratio(a: int, b: int) -> LaurentPoly2 | None:
        # d_b / d_a = r_ab / s_ab, defined when the (a, b) entries are units
        if not (s[a][b].is_unit_monomial() and r[a][b].is_unit_monomial()):
            return None
        return r[a][b] * s[a][b].unit_inverse()

    ratios: dict[int, LaurentPoly2] = {}
    for start in range(d):
        if start in ratios:
            continue
        ratios[start] = ONE
        frontier = [start]
        while frontier:
            nxt = []
            for i in frontier:
                for j in range(d):
                    if j in ratios or i == j:
                        continue
                    if s[i][j]:
                        quot = ratio(i, j)
                        if quot is None:
                            return None
                        ratios[j] = ratios[i] * quot
                        nxt.append(j)
                    elif s[j][i]:
                        quot = ratio(j, i)
                        if quot is None:
                            return None
                        ratios[j] = ratios[i] * quot.unit_inverse()
                        nxt.append(j)
            frontier = nxt
    diag = tuple(ratios[i] for i in range(d))
    for i in range(d):
        for j in range(d):
            if s[i][j] and diag[i].unit_inverse() * s[i][j] * diag[j] != r[i][j]:
                return None
    return diag


def lk_vs_sym2_burau(n: int, word: BraidWord) -> SymSquareComparison:
    """Compare rho_n(word)|_{t=-1} against Sym^2 psi_n(word), both exact in q.

    Reports characteristic-polynomial equality, whether the positional
    correspondence v_{i,j} <-> e_i . e_{j-1} already identifies the two
    matrices, and a diagonal rescaling doing so when one exists.
    """
    if word.strands != n:
        raise ValueError("word strand count must equal n")
    lk_at = rep_of_word("lk", word).substitute_t(-1)
    sym2 = sym_square(rep_of_word("burau", word))
    cp_equal = charpoly(lk_at) == charpoly(sym2)
    on_the_nose = lk_at.entries == sym2.entries
    diag = None
    if not on_the_nose:
        diag = _diagonal_conjugator(sym2.entries, lk_at.entries)
    return SymSquareComparison(n, word, cp_equal, on_the_nose, diag)
