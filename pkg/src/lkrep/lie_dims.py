"""Root systems for A_n, D_n, E6, Weyl's dimension formula, a direct E6
evaluation, diagram-symmetry classification, and bounded enumeration of
irreducible representations.

All arithmetic is over exact rationals.  Roots are stored as integer
coordinate vectors in the simple-root basis; the inner product is the
symmetrized Cartan form normalized so every simple root has length 1
(simply-laced diagrams only), under which connected nodes pair to -1/2.
Any global scale cancels in the dimension formula.

Node order conventions (frozen):

* A_r: the chain 1 - 2 - ... - r.
* D_r: the chain 1 - ... - (r-2), with both fork nodes r-1 and r attached
  to node r-2 ("spinor nodes" last).
* E6: the chain 1 - 2 - 3 - 4 - 5 with node 6 attached to the middle
  node 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class Diagram:
    A = "A"
    D = "D"
    E6 = "E6"


SUPPORTED = (Diagram.A, Diagram.D, Diagram.E6)


@dataclass(frozen=True)
class DynkinLabeling:
    """A diagram plus non-negative integer node labels a_i (highest weight)."""

    diagram: str
    rank: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.diagram not in SUPPORTED:
            raise ValueError(f"unsupported diagram {self.diagram!r}")
        if self.diagram == Diagram.E6 and self.rank != 6:
            raise ValueError("E6 has rank 6")
        if self.diagram == Diagram.A and self.rank < 1:
            raise ValueError("A needs rank >= 1")
        if self.diagram == Diagram.D and self.rank < 3:
            raise ValueError("D needs rank >= 3")
        if len(self.labels) != self.rank:
            raise ValueError(f"need {self.rank} labels, got {len(self.labels)}")
        if any(a < 0 for a in self.labels):
            raise ValueError("labels must be non-negative")


def parse_diagram(text: str) -> tuple[str, int]:
    """Parse 'A5', 'D5', 'E6' into (diagram, rank)."""
    text = text.strip().upper()
    if text == "E6":
        return Diagram.E6, 6
    if text and text[0] in ("A", "D") and text[1:].isdigit():
        return text[0], int(text[1:])
    raise ValueError(f"unsupported diagram {text!r} (expected A<r>, D<r>, or E6)")


def cartan_matrix(diagram: str, rank: int) -> tuple[tuple[int, ...], ...]:
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def connect(i: int, j: int) -> None:
        m[i][j] = -1
        m[j][i] = -1

    if diagram == Diagram.A:
        for i in range(rank - 1):
            connect(i, i + 1)
    elif diagram == Diagram.D:
        for i in range(rank - 3):
            connect(i, i + 1)
        connect(rank - 3, rank - 2)
        connect(rank - 3, rank - 1)
    elif diagram == Diagram.E6:
        for i in range(4):
            connect(i, i + 1)
        connect(2, 5)
    else:
        raise ValueError(f"unsupported diagram {diagram!r}")
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class RootSystem:
    diagram: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive: tuple[tuple[int, ...], ...]
    half_sum: tuple[Fraction, ...]

    def inner(self, x, y) -> Fraction:
        """Inner product with all simple roots of length 1."""
        acc = Fraction(0)
        c = self.cartan
        r = self.rank
        for i in range(r):
            xi = x[i]
            if xi == 0:
                continue
            for j in range(r):
                yj = y[j]
                if yj:
                    acc += Fraction(xi) * yj * c[i][j]
        return acc / 2


def _expected_count(diagram: str, rank: int) -> int:
    if diagram == Diagram.A:
        return rank * (rank + 1) // 2
    if diagram == Diagram.D:
        return rank * (rank - 1)
    return 36


@lru_cache(maxsize=None)
def positive_roots(diagram: str, rank: int | None = None) -> RootSystem:
    """Generate all positive roots by closure from the simple roots.

    Standard root-string construction: beta + alpha_i is a root iff the
    alpha_i-string through beta extends, i.e. p - <beta, alpha_i^v> > 0
    where p is the largest k with beta - k alpha_i a root.  The count is
    verified against the closed form for the diagram.
    """
    if diagram == Diagram.E6:
        rank = 6
    if rank is None:
        raise ValueError("rank required")
    cartan = cartan_matrix(diagram, rank)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots: set[tuple[int, ...]] = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                # <beta, alpha_i^v> = sum_j beta_j * cartan[i][j]
                pairing = sum(beta[j] * cartan[i][j] for j in range(rank))
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    tp = tuple(probe)
                    if tp in roots or (sum(abs(x) for x in tp) == 0):
                        if all(x == 0 for x in tp):
                            break
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    tu = tuple(up)
                    if tu not in roots:
                        roots.add(tu)
                        nxt.append(tu)
        layer = nxt
    expected = _expected_count(diagram, rank)
    if len(roots) != expected:
        raise ArithmeticError(
            f"{diagram}{rank}: generated {len(roots)} positive roots, expected {expected}"
        )
    ordered = tuple(sorted(roots, key=lambda r: (sum(r), r)))
    half = tuple(
        Fraction(sum(r[i] for r in ordered), 2) for i in range(rank)
    )
    rs = RootSystem(diagram, rank, cartan, ordered, half)
    for i in range(rank):
        if 2 * rs.inner(half, simple[i]) != 1:
            raise ArithmeticError("half-sum sanity check failed")
    return rs


def _solve_rational(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Dense exact Gaussian elimination (small systems only)."""
    n = len(b)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def _highest_weight_coords(rs: RootSystem, labels: tuple[int, ...]) -> list[Fraction]:
    """Coordinates of the highest weight in the simple-root basis, from
    <Lambda, alpha_i^v> = a_i."""
    a = [[Fraction(rs.cartan[i][j]) for j in range(rs.rank)] for i in range(rs.rank)]
    return _solve_rational(a, [Fraction(x) for x in labels])


def weyl_dimension(l: DynkinLabeling) -> int:
    """Dimension of the irreducible representation with highest weight l:
    the product over positive roots of (L + g, a) / (g, a)."""
    rs = positive_roots(l.diagram, l.rank)
    lam = _highest_weight_coords(rs, l.labels)
    top = [lam[i] + rs.half_sum[i] for i in range(rs.rank)]
    acc = Fraction(1)
    for alpha in rs.positive:
        acc *= rs.inner(top, alpha) / rs.inner(rs.half_sum, alpha)
    if acc.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {acc} for {l}")
    return int(acc)


def e6_dimension_direct(labels: tuple[int, ...] | list[int]) -> int:
    """Direct E6 dimension evaluation, bypassing the root system.

    Uses the corrected closed form in the lambda-coordinates: with
    l_6 = -(1/6) sum i*a_i, l_k = l_6 + sum_{i=k..5} a_i, g_k = (7-2k)/2
    for k <= 5, g_6 = -5/2, g_0 = 11, l = a_1+2a_2+3a_3+2a_4+a_5+2a_6,
    m_k = l_k + g_k and m = l + g_0:

        N = (m/g_0) * prod_{p<q} (m_p-m_q)/(g_p-g_q)
                    * prod_{p<q<r} (m_p+m_q+m_r+m/2)/(g_p+g_q+g_r+g_0/2)
    """
    labels = tuple(int(x) for x in labels)
    if len(labels) != 6 or any(a < 0 for a in labels):
        raise ValueError("need 6 non-negative labels")
    a = labels
    l6 = -Fraction(sum((i + 1) * a[i] for i in range(5)), 6)
    lvec = [l6 + sum(a[i] for i in range(k - 1, 5)) for k in range(1, 6)] + [l6]
    g0 = Fraction(11)
    gvec = [Fraction(7 - 2 * k, 2) for k in range(1, 6)] + [Fraction(-5, 2)]
    l_scalar = a[0] + 2 * a[1] + 3 * a[2] + 2 * a[3] + a[4] + 2 * a[5]
    m_scalar = l_scalar + g0
    mvec = [lvec[i] + gvec[i] for i in range(6)]
    acc = m_scalar / g0
    for p, q in itertools.combinations(range(6), 2):
        acc *= (mvec[p] - mvec[q]) / (gvec[p] - gvec[q])
    for p, q, r in itertools.combinations(range(6), 3):
        acc *= (mvec[p] + mvec[q] + mvec[r] + m_scalar / 2) / (
            gvec[p] + gvec[q] + gvec[r] + g0 / 2
        )
    if acc.denominator != 1:
        raise ArithmeticError(f"non-integral E6 dimension {acc} for labels {labels}")
    return int(acc)


def is_asymmetric(l: DynkinLabeling) -> bool:
    """Whether the labeling breaks the diagram symmetry that would force an
    invariant (anti)symmetric form.

    Only A_r, D_odd and E6 can be asymmetric: A when the labels are not
    palindromic, D of odd rank when the two fork labels differ, E6 when the
    labeling is not invariant under the chain flip.  Everything else is
    symmetric.
    """
    a = l.labels
    if l.diagram == Diagram.A:
        return a != a[::-1]
    if l.diagram == Diagram.D:
        if l.rank % 2 == 0:
            return False
        return a[-2] != a[-1]
    if l.diagram == Diagram.E6:
        return a != (a[4], a[3], a[2], a[1], a[0], a[5])
    return False


def enumerate_irreps_below(
    diagram: str, rank: int, dim_bound: int, asymmetric_only: bool = False
) -> list[tuple[DynkinLabeling, int]]:
    """All labelings of dimension <= dim_bound, in lexicographic order.

    Pruned by monotonicity: raising any label never decreases the
    dimension, so a prefix already over the bound cannot be completed.
    """
    if dim_bound < 1:
        raise ValueError("dim_bound must be >= 1")
    if diagram == Diagram.E6:
        rank = 6
    out: list[tuple[DynkinLabeling, int]] = []
    labels = [0] * rank

    def dim_current() -> int:
        return weyl_dimension(DynkinLabeling(diagram, rank, tuple(labels)))

    def rec(pos: int) -> None:
        if pos == rank:
            if any(labels):
                d = dim_current()
                if d <= dim_bound:
                    lab = DynkinLabeling(diagram, rank, tuple(labels))
                    if not asymmetric_only or is_asymmetric(lab):
                        out.append((lab, d))
            return
        v = 0
        while True:
            labels[pos] = v
            if dim_current() > dim_bound:
                labels[pos] = 0
                return
            rec(pos + 1)
            labels[pos] = 0
            v += 1

    rec(0)
    return out
