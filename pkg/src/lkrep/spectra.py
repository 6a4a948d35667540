"""Eigenvalue multisets: closed forms, the restriction recursion, and the
factorization searches that rule out symmetric, Kronecker-product, and
reducible images.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import constants
from .braids import BraidWord, full_twist, include
from .reps import RepMatrix, rep_of_word_numeric

Complex = complex


@dataclass(frozen=True)
class EigMultiset:
    """A multiset of complex values with tolerance-aware equality.

    Values are pairwise distinct beyond `tol` and stored sorted by
    (re, im); multiplicities are positive.
    """

    values: tuple[tuple[Complex, int], ...]
    tol: float = constants.EIG_TOL

    @classmethod
    def from_values(cls, values, tol: float = constants.EIG_TOL) -> "EigMultiset":
        """Cluster raw values at the tolerance and sum multiplicities."""
        flat: list[Complex] = []
        for v in values:
            if isinstance(v, tuple):
                val, mult = v
                flat.extend([complex(val)] * mult)
            else:
                flat.append(complex(v))
        flat.sort(key=lambda z: (z.real, z.imag))
        reps: list[Complex] = []
        mults: list[int] = []
        for z in flat:
            placed = False
            for i, r in enumerate(reps):
                if abs(z - r) <= tol:
                    mults[i] += 1
                    placed = True
                    break
            if not placed:
                reps.append(z)
                mults.append(1)
        pairs = sorted(zip(reps, mults), key=lambda p: (p[0].real, p[0].imag))
        return cls(tuple((z, m) for z, m in pairs), tol)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.values)

    def expand(self) -> list[Complex]:
        out: list[Complex] = []
        for z, m in self.values:
            out.extend([z] * m)
        return out

    def equals(self, other: "EigMultiset", tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        if self.total != other.total:
            return False
        return _greedy_match(self.expand(), other.expand(), tol) is not None

    def difference(self, other: "EigMultiset", tol: float | None = None) -> "EigMultiset":
        """Multiset difference; raises if `other` is not contained."""
        tol = self.tol if tol is None else tol
        remaining = self.expand()
        for z in other.expand():
            best, best_d = None, None
            for i, w in enumerate(remaining):
                d = abs(z - w)
                if best_d is None or d < best_d:
                    best, best_d = i, d
            if best is None or best_d > tol:
                raise ValueError(
                    f"multiset difference not contained: no match for {z} "
                    f"(closest at distance {best_d})"
                )
            remaining.pop(best)
        return EigMultiset.from_values(remaining, self.tol)

    def union(self, other: "EigMultiset") -> "EigMultiset":
        return EigMultiset.from_values(self.expand() + other.expand(), self.tol)

    def scale(self, c: Complex) -> "EigMultiset":
        return EigMultiset.from_values([z * c for z in self.expand()], self.tol)

    def __str__(self) -> str:
        return " ".join(
            f"({z.real:.6g}{z.imag:+.6g}j)^{m}" for z, m in self.values
        )


def _greedy_match(a: list[Complex], b: list[Complex], tol: float) -> list[int] | None:
    """Match each element of a to a distinct element of b within tol.

    Both lists are sorted lexicographically, so greedy nearest matching is
    stable; returns the matching or None.
    """
    if len(a) != len(b):
        return None
    b = list(b)
    used = [False] * len(b)
    out = []
    for z in a:
        best, best_d = None, None
        for i, w in enumerate(b):
            if used[i]:
                continue
            d = abs(z - w)
            if best_d is None or d < best_d:
                best, best_d = i, d
        if best is None or best_d > tol:
            return None
        used[best] = True
        out.append(best)
    return out


def eigen_multiset(m: RepMatrix | np.ndarray, tol: float = constants.EIG_TOL) -> EigMultiset:
    """Eigenvalues of a numeric matrix, clustered at the tolerance."""
    arr = m.entries if isinstance(m, RepMatrix) else m
    if isinstance(arr, tuple):
        raise TypeError("eigen_multiset needs a numeric matrix")
    if arr.shape[0] == 0:
        return EigMultiset((), tol)
    return EigMultiset.from_values(np.linalg.eigvals(arr), tol)


def lk_generator_spectrum(n: int, q: complex, t: complex, tol: float = constants.EIG_TOL) -> EigMultiset:
    """Closed-form spectrum of any Lawrence-Krammer generator:
    {-t q^2} {-q}^{n-2} {1}^{(n-1)(n-2)/2}."""
    if n < 2:
        raise ValueError("need n >= 2")
    vals = [-t * q * q] + [-q] * (n - 2) + [1.0 + 0j] * ((n - 1) * (n - 2) // 2)
    return EigMultiset.from_values(vals, tol)


def sym2_multiset(e: EigMultiset) -> EigMultiset:
    """Pairwise products over unordered pairs with repetition allowed."""
    vals: list[tuple[Complex, int]] = []
    items = e.values
    for a in range(len(items)):
        za, ma = items[a]
        vals.append((za * za, ma * (ma + 1) // 2))
        for b in range(a + 1, len(items)):
            zb, mb = items[b]
            vals.append((za * zb, ma * mb))
    return EigMultiset.from_values(vals, e.tol)


def alt2_multiset(e: EigMultiset) -> EigMultiset:
    """Pairwise products over strictly unordered pairs."""
    vals: list[tuple[Complex, int]] = []
    items = e.values
    for a in range(len(items)):
        za, ma = items[a]
        if ma >= 2:
            vals.append((za * za, ma * (ma - 1) // 2))
        for b in range(a + 1, len(items)):
            zb, mb = items[b]
            vals.append((za * zb, ma * mb))
    return EigMultiset.from_values(vals, e.tol)


def lk_spectrum_via_recursion(
    n: int,
    k: int,
    word: BraidWord,
    q: complex,
    t: complex,
    tol: float = constants.RECURSION_TOL,
) -> EigMultiset:
    """Spectrum of the n-strand Lawrence-Krammer image of a braid on the
    first k strands, computed without forming the n-strand matrix:

        (Sym^2 Ev Burau_n \\ Sym^2 Ev Burau_k) + Ev LK_k.

    The multiset difference must be exact containment; a failure indicates
    a tolerance or convention bug and is raised as such.
    """
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    if word.strands != k:
        raise ValueError("word must live on k strands")
    big = eigen_multiset(rep_of_word_numeric("burau", include(word, n), q, t), tol)
    small = eigen_multiset(rep_of_word_numeric("burau", word, q, t), tol)
    lk_small = eigen_multiset(rep_of_word_numeric("lk", word, q, t), tol)
    if k == n:
        return lk_small
    diff = sym2_multiset(big).difference(sym2_multiset(small), tol)
    return diff.union(lk_small)


def conjugation_closed(e: EigMultiset, tol: float | None = None) -> bool:
    """True iff the multiset is invariant under complex conjugation."""
    conj = EigMultiset.from_values([z.conjugate() for z in e.expand()], e.tol)
    return e.equals(conj, tol)


# ---------------------------------------------------------------------------
# factorization searches


def _distinct_values(e: EigMultiset) -> list[Complex]:
    return [z for z, _ in e.values]


def _product_multiset(m1: list[Complex], m2: list[Complex], tol: float) -> EigMultiset:
    return EigMultiset.from_values([a * b for a in m1 for b in m2], tol)


def _canonical_gauge(m1: list[Complex], m2: list[Complex], anchor: Complex) -> tuple[tuple[Complex, ...], tuple[Complex, ...]]:
    """Rescale (M1, M2) -> (s M1, M2 / s) so max-modulus element of M1 hits
    the anchor; factorizations are only defined up to this gauge."""
    lead = max(m1, key=lambda z: (abs(z), z.real, z.imag))
    s = anchor / lead
    key = lambda z: (z.real, z.imag)
    return tuple(sorted((s * z for z in m1), key=key)), tuple(
        sorted((z / s for z in m2), key=key)
    )


def kronecker_factorizations(
    e: EigMultiset, n1: int, n2: int
) -> list[tuple[tuple[Complex, ...], tuple[Complex, ...]]]:
    """All ways to write the multiset as pairwise products of an n1- and an
    n2-multiset, up to the reciprocal-scalar gauge.

    Exhaustive: the gauge is fixed by demanding 1 in the second factor, so
    the first factor is a sub-multiset of e and the second is drawn from
    elementwise quotients.  Solutions are re-gauged so the largest-modulus
    element of the first factor equals the largest-modulus element of e.
    """
    if n1 < 2 or n2 < 2:
        raise ValueError("factor sizes must be at least 2")
    if n1 * n2 != e.total:
        raise ValueError(f"sizes {n1}*{n2} do not match multiset of size {e.total}")
    if e.total > 21:
        raise ValueError("search bounded to ambient dimension <= 21")
    tol = e.tol
    pool = e.expand()
    anchor = max(pool, key=lambda z: (abs(z), z.real, z.imag))
    distinct = _distinct_values(e)
    found: list[tuple[tuple[Complex, ...], tuple[Complex, ...]]] = []
    seen: set[tuple] = set()
    # candidates for M1 (with 1 in M2, each element of M1 is a product
    # element): multisets of size n1 drawn from the distinct values
    for m1 in itertools.combinations_with_replacement(distinct, n1):
        lead = max(m1, key=abs)
        quot_candidates = sorted(
            {(round((z / lead).real, 12), round((z / lead).imag, 12)) for z in distinct}
        )
        quots = [complex(a, b) for a, b in quot_candidates]
        for m2 in itertools.combinations_with_replacement(quots, n2):
            if not any(abs(z - 1) <= tol for z in m2):
                continue  # gauge: 1 must appear in M2
            if _product_multiset(list(m1), list(m2), tol).equals(e):
                sol = _canonical_gauge(list(m1), list(m2), anchor)
                key = tuple(
                    (round(z.real, 9), round(z.imag, 9)) for part in sol for z in part
                )
                if key not in seen:
                    seen.add(key)
                    found.append(sol)
    return found


def square_root_multisets(e: EigMultiset, mode: str) -> list[tuple[Complex, ...]]:
    """All multisets whose symmetric (or antisymmetric) square of pairwise
    products equals e.

    Symmetric mode: every root's square lies in e, so candidates are the
    +-square roots of the distinct values.  Antisymmetric mode: a root's
    square is a quotient of a product of two values by a third, which
    anchors the first root; the rest are elementwise quotients.
    """
    if mode not in ("sym", "alt"):
        raise ValueError("mode must be 'sym' or 'alt'")
    total = e.total
    m = _inverse_triangular(total, diagonal=(mode == "sym"))
    if m is None:
        raise ValueError(f"multiset size {total} is not of the required triangular form")
    if total > 21:
        raise ValueError("search bounded to ambient dimension <= 21")
    tol = e.tol
    distinct = _distinct_values(e)
    results: list[tuple[Complex, ...]] = []
    seen: set[tuple] = set()

    def record(candidate: tuple[Complex, ...]) -> None:
        prod = sym2_multiset if mode == "sym" else alt2_multiset
        got = prod(EigMultiset.from_values(candidate, tol))
        if got.equals(e):
            key = tuple(
                (round(z.real, 9), round(z.imag, 9))
                for z in sorted(candidate, key=lambda w: (w.real, w.imag))
            )
            if key not in seen:
                seen.add(key)
                results.append(tuple(sorted(candidate, key=lambda w: (w.real, w.imag))))

    if mode == "sym":
        roots: list[Complex] = []
        for z in distinct:
            r = np.sqrt(complex(z))
            roots.extend([r, -r])
        for cand in itertools.combinations_with_replacement(roots, m):
            record(cand)
        return results

    if m < 3:
        raise ValueError("antisymmetric square roots need at least 3 elements")
    first_candidates: list[Complex] = []
    for va, vb, vc in itertools.product(distinct, repeat=3):
        r = np.sqrt(complex(va) * complex(vb) / complex(vc))
        first_candidates.extend([r, -r])
    # dedup anchors
    anchors: list[Complex] = []
    for r in first_candidates:
        if not any(abs(r - s) <= tol for s in anchors):
            anchors.append(r)
    for lam1 in anchors:
        rest_candidates = sorted(
            {(round((z / lam1).real, 12), round((z / lam1).imag, 12)) for z in distinct}
        )
        rest = [complex(a, b) for a, b in rest_candidates]
        for tail in itertools.combinations_with_replacement(rest, m - 1):
            record((lam1, *tail))
    return results


def _inverse_triangular(total: int, diagonal: bool) -> int | None:
    """Solve m(m+1)/2 = total (diagonal) or m(m-1)/2 = total; None if no
    integer solution."""
    for m in range(1, 2 * total + 3):
        size = m * (m + 1) // 2 if diagonal else m * (m - 1) // 2
        if size == total:
            return m
        if size > total:
            return None
    return None


# ---------------------------------------------------------------------------
# commutant


def commutant_dimension(generators: list[np.ndarray], rtol: float = constants.NULLSPACE_RTOL) -> int:
    """Complex dimension of {X : X A_i = A_i X for all i}.

    Dimension 1 is Schur's criterion for irreducibility of the generated
    algebra.  Computed as the numerical nullspace of the stacked Sylvester
    operators.
    """
    if not generators:
        raise ValueError("need at least one generator")
    d = generators[0].shape[0]
    eye = np.eye(d)
    blocks = []
    for a in generators:
        if a.shape != (d, d):
            raise ValueError("generators must share one dimension")
        blocks.append(np.kron(eye, a) - np.kron(a.T, eye))
    stacked = np.vstack(blocks)
    svals = np.linalg.svd(stacked, compute_uv=False)
    if svals.size == 0 or svals[0] < 1e-14:
        return d * d
    return int(np.sum(svals < rtol * svals[0]))


# ---------------------------------------------------------------------------
# the full-twist torus


def full_twist_images(n: int, q: complex, t: complex, upto: int | None = None) -> list[np.ndarray]:
    """Numeric Lawrence-Krammer images of the partial full twists
    beta_{n,k} for k = 2 .. upto (default n-1)."""
    upto = n - 1 if upto is None else upto
    return [rep_of_word_numeric("lk", full_twist(n, k), q, t) for k in range(2, upto + 1)]


def _joint_diagonal(mats: list[np.ndarray]) -> list[np.ndarray]:
    """Simultaneously diagonalize commuting diagonalizable matrices.

    Eigendecomposes a generic linear combination and verifies that it
    diagonalizes every input; retries with fresh weights on degeneracy.
    """
    rng = np.random.default_rng(0)
    for _ in range(8):
        w = rng.normal(size=len(mats)) + 1j * rng.normal(size=len(mats))
        combo = sum(c * m for c, m in zip(w, mats))
        _, vecs = np.linalg.eig(combo)
        if np.linalg.cond(vecs) > 1e8:
            continue
        vinv = np.linalg.inv(vecs)
        conj = [vinv @ m @ vecs for m in mats]
        ok = all(
            np.max(np.abs(c - np.diag(np.diag(c)))) <= 1e-8 * max(1.0, np.max(np.abs(c)))
            for c in conj
        )
        if ok:
            return [np.diag(c) for c in conj]
    raise ArithmeticError("failed to simultaneously diagonalize commuting images")


def full_twist_torus_independent(
    n: int, q: complex, t: complex, height: int = 20, tol: float = 1e-6
) -> bool:
    """Test that the commuting full-twist images generate a torus of the
    full expected dimension n-2.

    The images are simultaneously diagonalized; an integer vector m (all
    |m_k| <= height) is a relation when sum_k m_k * arg(lambda_{c,k}) is a
    multiple of 2 pi for every joint eigenvalue class c, relative to a base
    class.  Returns True iff the only such relation is m = 0.
    """
    mats = full_twist_images(n, q, t)
    r = len(mats)  # n - 2
    diags = _joint_diagonal(mats)
    args = [np.angle(d) for d in diags]
    phi = np.array(args).T  # (p, r): per-class argument of each twist
    rel = phi - phi[0]  # relative to the first class
    rel = rel[1:]
    if rel.size == 0:
        return True
    # relation: rel @ m == 0 mod 2pi componentwise, |m_k| <= height
    rng = np.arange(-height, height + 1)
    grids = np.meshgrid(*([rng] * r), indexing="ij")
    ms = np.stack([g.ravel() for g in grids], axis=1)
    ms = ms[np.any(ms != 0, axis=1)]
    # filter on the first coordinate, then confirm on the rest
    twopi = 2 * np.pi
    first = ms @ rel[0]
    resid = np.abs(first - twopi * np.round(first / twopi))
    survivors = ms[resid <= tol]
    for mvec in survivors:
        vals = rel @ mvec
        res = np.abs(vals - twopi * np.round(vals / twopi))
        if np.all(res <= tol):
            return False
    return True
