"""Conjugacy-class trace experiments and subgroup probes.

The central experiment: fix a base braid beta on n-1 strands, sample
random conjugates beta' = alpha beta alpha^{-1} over B_{n-1}, and record
the stabilized trace tr LK_n(beta' sigma_{n-1}).  The trace is a conjugacy
invariant of B_n, so distinct values certify distinct n-strand conjugacy
classes among braids closing to the same link.  Scalar images (powers of
the full twist) are the degenerate case: they give a single value.
"""

from __future__ import annotations

import cmath
import csv
import json
import random
from dataclasses import dataclass, field

import numpy as np

from . import constants
from .braids import BraidWord, compose, exponent_sum, include, invert, parse_braid, random_word
from .forms import HermitianForm, invariant_form, is_definite
from .reps import rep_of_word_numeric
from .spectra import EigMultiset, commutant_dimension, eigen_multiset

CSV_COLUMNS = ["sample_index", "conjugator_word", "trace_re", "trace_im", "modulus", "argument"]


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one trace-sampling run.

    The base braid lives on n-1 strands; (q, t) must make the invariant
    form definite or the run is refused.
    """

    base_braid: BraidWord
    n: int
    q: complex
    t: complex
    samples: int
    conjugator_length: int
    rng_seed: int
    output_path: str

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.conjugator_length < 1:
            raise ValueError("conjugator_length must be >= 1")
        if self.base_braid.strands != self.n - 1:
            raise ValueError(
                f"base braid has {self.base_braid.strands} strands, expected n-1 = {self.n - 1}"
            )

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        version = data.get("version", 1)
        if version != 1:
            raise ValueError(f"unsupported config version {version}")
        n = int(data["n"])
        return cls(
            base_braid=parse_braid(data["base_braid"], n - 1),
            n=n,
            q=complex(data["q"][0], data["q"][1]),
            t=complex(data["t"][0], data["t"][1]),
            samples=int(data["samples"]),
            conjugator_length=int(data["conjugator_length"]),
            rng_seed=int(data["rng_seed"]),
            output_path=str(data["output_path"]),
        )

    @classmethod
    def from_json_file(cls, path: str) -> "ExperimentConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "version": 1,
            "n": self.n,
            "base_braid": str(self.base_braid),
            "q": [self.q.real, self.q.imag],
            "t": [self.t.real, self.t.imag],
            "samples": self.samples,
            "conjugator_length": self.conjugator_length,
            "rng_seed": self.rng_seed,
            "output_path": self.output_path,
        }


@dataclass(frozen=True)
class TraceSample:
    conjugator: BraidWord
    trace: complex
    modulus: float = field(init=False)
    argument: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "modulus", abs(self.trace))
        object.__setattr__(self, "argument", cmath.phase(self.trace))


def random_conjugate(base: BraidWord, length: int, rng: random.Random) -> BraidWord:
    """alpha * base * alpha^{-1} for alpha uniform over words of the given
    length in the signed generators of the base's braid group."""
    if length < 1:
        raise ValueError("conjugator length must be >= 1")
    alpha = random_word(base.strands, length, rng)
    return compose(compose(alpha, base), invert(alpha))


def stabilized_trace(conj: BraidWord, n: int, q: complex, t: complex) -> complex:
    """tr LK_n(conj * sigma_{n-1}) for a braid on the first n-1 strands."""
    if conj.strands != n - 1:
        raise ValueError(f"braid has {conj.strands} strands, expected {n - 1}")
    word = compose(include(conj, n), BraidWord(n, ((n - 1, 1),)))
    return complex(np.trace(rep_of_word_numeric("lk", word, q, t)))


def run_experiment(cfg: ExperimentConfig) -> dict:
    """Sample conjugates, write the trace CSV, and summarize.

    Refuses to run unless the invariant form at (q, t) is definite.  The
    distinct-value count at the trace tolerance is a lower bound on the
    number of n-strand conjugacy classes met.
    """
    form = invariant_form(cfg.n, cfg.q, cfg.t)
    definite, min_eig = is_definite(form)
    if not definite:
        raise ValueError(
            f"invariant form is not definite at (q={cfg.q}, t={cfg.t}) "
            f"(min eigenvalue {min_eig:.3e}); the experiment requires a definite form"
        )
    rng = random.Random(cfg.rng_seed)
    samples: list[TraceSample] = []
    for _ in range(cfg.samples):
        alpha = random_word(cfg.n - 1, cfg.conjugator_length, rng)
        conj = compose(compose(alpha, cfg.base_braid), invert(alpha))
        tr = stabilized_trace(conj, cfg.n, cfg.q, cfg.t)
        samples.append(TraceSample(conjugator=alpha, trace=tr))
    with open(cfg.output_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for idx, s in enumerate(samples):
            writer.writerow(
                [idx, str(s.conjugator), repr(s.trace.real), repr(s.trace.imag),
                 repr(s.modulus), repr(s.argument)]
            )
    distinct = EigMultiset.from_values([s.trace for s in samples], constants.TRACE_TOL)
    report = {
        "distinct_count": len(distinct.values),
        "tol": constants.TRACE_TOL,
        "min_mod": min(s.modulus for s in samples),
        "max_mod": max(s.modulus for s in samples),
        "min_arg": min(s.argument for s in samples),
        "max_arg": max(s.argument for s in samples),
        "config": cfg.to_dict(),
    }
    return report


def scalar_burau_check(b: BraidWord, q: complex) -> bool:
    """True iff the Burau image of b is (numerically) a scalar matrix."""
    m = rep_of_word_numeric("burau", b, q, 1.0)
    scalar = np.trace(m) / m.shape[0]
    return bool(np.max(np.abs(m - scalar * np.eye(m.shape[0]))) <= 1e-9)


def _form_complement_basis(form: HermitianForm, k: int) -> np.ndarray:
    """Orthonormal basis (columns) of the orthogonal complement of the span
    of the first k(k-1)/2 basis vectors with respect to the form."""
    pk = k * (k - 1) // 2
    rows = form.gram[:pk, :]
    _, _, vh = np.linalg.svd(rows)
    return vh[pk:, :].conj().T


def restricted_rep_check(n: int, word: BraidWord, q: complex, t1: complex, t2: complex) -> dict:
    """Restrict LK_n of a braid on the first n-1 strands to the complement
    of the (n-1)-strand subspace, orthogonal w.r.t. the invariant form.

    Reports whether the complement spectrum equals the (n-1)-strand Burau
    spectrum plus a trivial eigenvalue, and whether it is independent of t.
    """
    if word.strands != n - 1:
        raise ValueError(f"word has {word.strands} strands, expected {n - 1}")
    tol = constants.RECURSION_TOL
    spectra_at = {}
    for t in (t1, t2):
        form = invariant_form(n, q, t)
        definite, min_eig = is_definite(form)
        if not definite:
            raise ValueError(f"form not definite at t={t} (min eig {min_eig:.3e})")
        w = _form_complement_basis(form, n - 1)
        big = rep_of_word_numeric("lk", include(word, n), q, t)
        block = w.conj().T @ big @ w
        leak = np.linalg.norm(big @ w - w @ block)
        spectra_at[t] = (eigen_multiset(block, tol), float(leak))
    burau_spec = eigen_multiset(rep_of_word_numeric("burau", word, q, 1.0), tol)
    expected = burau_spec.union(EigMultiset.from_values([1.0 + 0j], tol))
    s1, leak1 = spectra_at[t1]
    s2, leak2 = spectra_at[t2]
    return {
        "complement_spectrum_t1": s1,
        "complement_spectrum_t2": s2,
        "expected": expected,
        "matches_burau_plus_trivial": s1.equals(expected, tol) and s2.equals(expected, tol),
        "t_independent": s1.equals(s2, tol),
        "invariance_leak": max(leak1, leak2),
    }


def subgroup_words(n: int, family: str, m: int = 1, a: int = 2, l: int = 0) -> list[BraidWord]:
    """Generating words for the probed subgroups.

    squared_generators: sigma_k^{2m} for all k.  hilden (n even): the
    plat-stabilizer generators -- the cap twists sigma_{2i-1} together
    with, for each adjacent pair of caps, the cap exchange
    sigma_{2i} sigma_{2i-1} sigma_{2i+1} sigma_{2i} and the threading
    sigma_{2i} sigma_{2i-1}^{-1} sigma_{2i+1} sigma_{2i}^{-1} (the pair
    passes between the neighbour cap's strands, over one and under the
    other).  The twists alone generate a commutative group and can never
    have trivial commutant; the threading is what moves span{v_{2i-1,2i}}
    once q != 1.  odd_generators: sigma_{ak+l}^{2m} over all valid k.
    """
    if family == "squared_generators":
        if m == 0:
            raise ValueError("m must be nonzero")
        return [
            BraidWord(n, ((k, 1 if m > 0 else -1),) * (2 * abs(m))) for k in range(1, n)
        ]
    if family == "hilden":
        if n % 2 != 0:
            raise ValueError("the Hilden subgroup needs an even strand count")
        words = [BraidWord(n, ((2 * i - 1, 1),)) for i in range(1, n // 2 + 1)]
        for i in range(1, n // 2):
            k = 2 * i
            words.append(BraidWord(n, ((k, 1), (k - 1, 1), (k + 1, 1), (k, 1))))
            words.append(BraidWord(n, ((k, 1), (k - 1, -1), (k + 1, 1), (k, -1))))
        return words
    if family == "odd_generators":
        if m == 0:
            raise ValueError("m must be nonzero")
        if a < 2:
            raise ValueError("a must be >= 2")
        indices = sorted(
            {a * k + l for k in range(-n, n + 1) if 1 <= a * k + l <= n - 1}
        )
        if not indices:
            raise ValueError(f"no generator indices of the form {a}k+{l} in 1..{n - 1}")
        return [BraidWord(n, ((idx, 1 if m > 0 else -1),) * (2 * abs(m))) for idx in indices]
    raise ValueError(f"unknown subgroup family {family!r}")


def subgroup_irreducibility(
    n: int, family: str, q: complex, t: complex, m: int = 1, a: int = 2, l: int = 0
) -> int:
    """Commutant dimension of the subgroup's Lawrence-Krammer image;
    1 means the restriction is irreducible."""
    words = subgroup_words(n, family, m=m, a=a, l=l)
    mats = [rep_of_word_numeric("lk", w, q, t) for w in words]
    return commutant_dimension(mats)
