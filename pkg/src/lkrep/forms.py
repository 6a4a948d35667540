"""The invariant Hermitian (Budney) form at numeric parameters on the unit
torus: solve for it, certify definiteness, unitarize, and scan the regime
where it is definite.

The form is not written down in closed form anywhere here; it is computed
as the Hermitian solution of the invariance equations
A_i^* H A_i = H for all generators, which determines it up to real scale
whenever the representation is irreducible.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import constants
from .reps import lk_gen

__all__ = [
    "HermitianForm",
    "FormNotFoundError",
    "invariant_form",
    "is_definite",
    "definiteness_scan",
    "scan_point",
    "default_definite_point",
    "unitarize",
    "write_scan_csv",
    "SCAN_CSV_COLUMNS",
]


class FormNotFoundError(RuntimeError):
    """No invariant Hermitian form within the residual tolerance."""

    def __init__(self, residual: float):
        super().__init__(f"no invariant form found (best residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class HermitianForm:
    """Candidate unitarizing Gram matrix at fixed (q, t).

    The gram matrix is normalized to unit Frobenius norm with positive
    trace; `residual` is the worst invariance defect over the generators
    and is recorded, never assumed zero.
    """

    n: int
    q: complex
    t: complex
    gram: np.ndarray
    residual: float
    nullspace_dim: int


def _hermitian_basis(p: int) -> list[np.ndarray]:
    """Real basis of the p^2-dimensional space of Hermitian p x p matrices."""
    out = []
    for i in range(p):
        m = np.zeros((p, p), dtype=complex)
        m[i, i] = 1.0
        out.append(m)
    for i in range(p):
        for j in range(i + 1, p):
            m = np.zeros((p, p), dtype=complex)
            m[i, j] = 1.0
            m[j, i] = 1.0
            out.append(m)
            m = np.zeros((p, p), dtype=complex)
            m[i, j] = 1.0j
            m[j, i] = -1.0j
            out.append(m)
    return out


@lru_cache(maxsize=None)
def _generators_at(n: int, q: complex, t: complex) -> tuple[np.ndarray, ...]:
    gens = tuple(lk_gen(n, i).evaluate(q, t).entries for i in range(1, n))
    for g in gens:
        g.setflags(write=False)
    return gens


@lru_cache(maxsize=None)
def invariant_form(n: int, q: complex, t: complex) -> HermitianForm:
    """Solve A_i^* H A_i = H over Hermitian H for all generators A_i.

    The stacked real-linear system is analyzed by SVD: the least singular
    vector is the returned candidate, and the count of relative singular
    values below the nullspace cutoff is reported as the solution-space
    dimension.  Requires |q| = |t| = 1.
    """
    q, t = complex(q), complex(t)
    for name, z in (("q", q), ("t", t)):
        if abs(abs(z) - 1.0) > 1e-12:
            raise ValueError(f"|{name}| must be 1, got {abs(z)}")
    gens = _generators_at(n, q, t)
    p = n * (n - 1) // 2
    basis = _hermitian_basis(p)
    cols = []
    for b in basis:
        defects = [a.conj().T @ b @ a - b for a in gens]
        cols.append(np.concatenate([np.concatenate([d.real.ravel(), d.imag.ravel()]) for d in defects]))
    system = np.stack(cols, axis=1)
    u, svals, vh = np.linalg.svd(system, full_matrices=False)
    if svals[0] < 1e-14:
        # every Hermitian matrix is invariant (happens only at p = 1)
        h = np.eye(p, dtype=complex) / math.sqrt(p)
        h.setflags(write=False)
        return HermitianForm(n=n, q=q, t=t, gram=h, residual=0.0, nullspace_dim=p * p)
    nullspace_dim = int(np.sum(svals < constants.NULLSPACE_RTOL * svals[0]))
    coeffs = vh[-1]
    h = sum(c * b for c, b in zip(coeffs, basis))
    h = h / np.linalg.norm(h)
    if h.trace().real < 0:
        h = -h
    residual = max(np.linalg.norm(a.conj().T @ h @ a - h) for a in gens)
    if residual > constants.FORM_RESIDUAL_FAIL:
        raise FormNotFoundError(residual)
    h.setflags(write=False)
    return HermitianForm(n=n, q=q, t=t, gram=h, residual=float(residual), nullspace_dim=nullspace_dim)


def is_definite(h: HermitianForm) -> tuple[bool, float]:
    """Positive-definiteness check of the unit-norm Gram matrix.

    The sign is normalized by the trace first, so "definite" always means
    positive definite.
    """
    gram = h.gram if h.gram.trace().real >= 0 else -h.gram
    eigs = np.linalg.eigvalsh(gram)
    min_eig = float(eigs[0])
    return min_eig > constants.DEFINITE_MIN_EIG, min_eig


def scan_point(theta_t: float, ratio: float) -> tuple[complex, complex]:
    """The parametrized point t = -e^{i theta}, q = e^{i ratio theta}."""
    t = -cmath.exp(1j * theta_t)
    q = cmath.exp(1j * ratio * theta_t)
    return q, t


def default_definite_point() -> tuple[complex, complex]:
    """A fixed point well inside the measured definite region."""
    return scan_point(constants.SCAN_THETA_T, constants.SCAN_RATIO)


SCAN_CSV_COLUMNS = [
    "n",
    "theta_t",
    "ratio",
    "q_re",
    "q_im",
    "t_re",
    "t_im",
    "residual",
    "nullspace_dim",
    "definite",
    "min_eig",
]


def definiteness_scan(n: int, theta_t: list[float], ratio: list[float]) -> list[dict]:
    """Solve the form on the (theta_t, ratio) grid and record definiteness.

    Grid order is preserved row-major (theta outer, ratio inner) so runs
    are deterministic and mergeable.
    """
    rows = []
    for th in theta_t:
        if not 0 < th < math.pi:
            raise ValueError(f"theta_t must lie in (0, pi), got {th}")
        for r in ratio:
            if r <= 0:
                raise ValueError(f"ratio must be positive, got {r}")
            q, t = scan_point(th, r)
            try:
                form = invariant_form(n, q, t)
                definite, min_eig = is_definite(form)
                rows.append(
                    {
                        "n": n,
                        "theta_t": th,
                        "ratio": r,
                        "q_re": q.real,
                        "q_im": q.imag,
                        "t_re": t.real,
                        "t_im": t.imag,
                        "residual": form.residual,
                        "nullspace_dim": form.nullspace_dim,
                        "definite": definite,
                        "min_eig": min_eig,
                    }
                )
            except FormNotFoundError as exc:
                rows.append(
                    {
                        "n": n,
                        "theta_t": th,
                        "ratio": r,
                        "q_re": q.real,
                        "q_im": q.imag,
                        "t_re": t.real,
                        "t_im": t.imag,
                        "residual": exc.residual,
                        "nullspace_dim": 0,
                        "definite": False,
                        "min_eig": float("nan"),
                    }
                )
    return rows


def write_scan_csv(rows: list[dict], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SCAN_CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _fmt(row[k]) for k in SCAN_CSV_COLUMNS})


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, float):
        return repr(v)
    return str(v)


def unitarize(m: np.ndarray, h: HermitianForm) -> np.ndarray:
    """Conjugate by the positive square root of the Gram matrix.

    If A^* H A = H and H = S^2 with S Hermitian positive, then
    S A S^{-1} is unitary (up to the form's residual).
    """
    definite, min_eig = is_definite(h)
    if not definite:
        raise ValueError(f"form is not positive definite (min eigenvalue {min_eig:.3e})")
    gram = h.gram if h.gram.trace().real >= 0 else -h.gram
    w, v = np.linalg.eigh(gram)
    root = v @ np.diag(np.sqrt(w)) @ v.conj().T
    root_inv = v @ np.diag(1.0 / np.sqrt(w)) @ v.conj().T
    return root @ m @ root_inv
