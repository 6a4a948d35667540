import hashlib
import json
import random

import numpy as np
import pytest

from lkrep.braids import BraidWord, exponent_sum, full_twist, parse_braid
from lkrep.density import (
    ExperimentConfig,
    TraceSample,
    random_conjugate,
    restricted_rep_check,
    run_experiment,
    scalar_burau_check,
    stabilized_trace,
    subgroup_irreducibility,
    subgroup_words,
)
from lkrep.forms import default_definite_point
from lkrep.reps import PairBasis, rep_of_word_numeric

Q0, T0 = default_definite_point()


def _cfg(tmp_path, **overrides):
    base = dict(
        base_braid=parse_braid("1 2 3", 4),
        n=5,
        q=Q0,
        t=T0,
        samples=20,
        conjugator_length=8,
        rng_seed=11,
        output_path=str(tmp_path / "traces.csv"),
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def test_random_conjugate_properties():
    rng = random.Random(3)
    base = parse_braid("1 2", 3)
    conj = random_conjugate(base, 6, rng)
    assert exponent_sum(conj) == exponent_sum(base)
    assert conj.strands == base.strands


def test_conjugates_of_central_braid_are_matrix_equal():
    rng = random.Random(5)
    delta2 = full_twist(3, 3)
    ref = rep_of_word_numeric("lk", delta2, Q0, T0)
    for _ in range(3):
        conj = random_conjugate(delta2, 7, rng)
        assert np.max(np.abs(rep_of_word_numeric("lk", conj, Q0, T0) - ref)) < 1e-10


def test_stabilized_trace_identity_base():
    for n in (4, 5):
        tr = stabilized_trace(BraidWord(n - 1), n, Q0, T0)
        expected = (-T0 * Q0 * Q0) + (n - 2) * (-Q0) + (n - 1) * (n - 2) / 2
        assert abs(tr - expected) < 1e-9


def test_stabilized_trace_central_conjugator_invariance():
    base = parse_braid("1 2", 3)
    from lkrep.braids import compose, invert

    delta2 = full_twist(3, 3)
    conj = compose(compose(delta2, base), invert(delta2))
    assert abs(stabilized_trace(conj, 4, Q0, T0) - stabilized_trace(base, 4, Q0, T0)) < 1e-9


def test_trace_is_full_group_conjugacy_invariant():
    rng = random.Random(9)
    from lkrep.braids import compose, invert, random_word

    w = parse_braid("1 2 3 -2 4", 5)
    base_tr = np.trace(rep_of_word_numeric("lk", w, Q0, T0))
    for _ in range(4):
        g = random_word(5, 7, rng)
        conj = compose(compose(g, w), invert(g))
        assert abs(np.trace(rep_of_word_numeric("lk", conj, Q0, T0)) - base_tr) < 1e-9


def test_run_experiment_single_sample(tmp_path):
    report = run_experiment(_cfg(tmp_path, samples=1))
    assert report["distinct_count"] == 1


def test_run_experiment_central_base(tmp_path):
    report = run_experiment(_cfg(tmp_path, base_braid=full_twist(4, 4), samples=15))
    assert report["distinct_count"] == 1


def test_run_experiment_generic_base(tmp_path):
    report = run_experiment(_cfg(tmp_path, samples=60))
    # distinct conjugates can share a trace (conjugation by the sub-braid-
    # group commuting with the stabilizing letter), but many values survive
    assert report["distinct_count"] >= 15
    assert report["tol"] == 1e-9
    assert report["min_mod"] <= report["max_mod"]


def test_run_experiment_reproducible(tmp_path):
    digests = []
    for name in ("a.csv", "b.csv"):
        cfg = _cfg(tmp_path, output_path=str(tmp_path / name))
        run_experiment(cfg)
        digests.append(hashlib.sha256((tmp_path / name).read_bytes()).hexdigest())
    assert digests[0] == digests[1]


def test_run_experiment_refuses_indefinite_point(tmp_path):
    # far from the definite regime: theta_t large, q far from 1
    q = complex(np.exp(2.5j))
    t = complex(-np.exp(3.0j))
    from lkrep.forms import invariant_form, is_definite, FormNotFoundError

    cfg_kwargs = dict(
        base_braid=parse_braid("1 2 3", 4),
        n=5,
        q=q,
        t=t,
        samples=2,
        conjugator_length=3,
        rng_seed=1,
        output_path=str(tmp_path / "x.csv"),
    )
    try:
        form = invariant_form(5, q, t)
        definite, _ = is_definite(form)
    except FormNotFoundError:
        definite = False
    if definite:
        pytest.skip("chosen far point happens to be definite")
    with pytest.raises((ValueError, FormNotFoundError), match="definite|invariant"):
        run_experiment(ExperimentConfig(**cfg_kwargs))


def test_config_json_roundtrip(tmp_path):
    cfg = _cfg(tmp_path)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg.to_dict()))
    loaded = ExperimentConfig.from_json_file(str(path))
    assert loaded == cfg
    bad = cfg.to_dict() | {"version": 99}
    with pytest.raises(ValueError, match="version"):
        ExperimentConfig.from_dict(bad)


def test_config_validation():
    with pytest.raises(ValueError, match="strands"):
        ExperimentConfig(
            base_braid=parse_braid("1", 3),
            n=5,
            q=Q0,
            t=T0,
            samples=1,
            conjugator_length=1,
            rng_seed=0,
            output_path="x.csv",
        )


def test_trace_sample_fields():
    s = TraceSample(conjugator=parse_braid("1", 2), trace=3 + 4j)
    assert s.modulus == pytest.approx(5.0)


def test_scalar_burau_check():
    assert scalar_burau_check(full_twist(4, 4), Q0)
    assert scalar_burau_check(full_twist(3, 3), Q0)
    assert not scalar_burau_check(parse_braid("1", 3), Q0)
    assert scalar_burau_check(BraidWord(3), Q0)


def test_restricted_rep_identity_word():
    # identity word: complement block is the identity
    rep = restricted_rep_check(4, BraidWord(3), Q0, T0, complex(-np.exp(0.13j)))
    assert rep["matches_burau_plus_trivial"]
    assert rep["complement_spectrum_t1"].values == ((1 + 0j, 3),)


def test_restricted_rep_generator():
    t2 = complex(-np.exp(0.13j))
    rep = restricted_rep_check(4, parse_braid("1", 3), Q0, T0, t2)
    assert rep["matches_burau_plus_trivial"]
    assert rep["t_independent"]
    # spectrum is {-q, 1, 1}
    assert rep["complement_spectrum_t1"].total == 3
    assert any(abs(z + Q0) < 1e-8 for z, _ in rep["complement_spectrum_t1"].values)


def test_restricted_rep_random_words():
    rng = random.Random(17)
    t2 = complex(-np.exp(0.08j))
    from lkrep.braids import random_word

    for n in (4, 5):
        for _ in range(2):
            w = random_word(n - 1, 5, rng)
            rep = restricted_rep_check(n, w, Q0, T0, t2)
            assert rep["matches_burau_plus_trivial"]
            assert rep["t_independent"]
            assert rep["invariance_leak"] < 1e-10


def test_subgroup_words_validation():
    with pytest.raises(ValueError, match="even"):
        subgroup_words(5, "hilden")
    with pytest.raises(ValueError, match="family"):
        subgroup_words(4, "nonsense")
    with pytest.raises(ValueError):
        subgroup_words(4, "squared_generators", m=0)
    assert [str(w) for w in subgroup_words(4, "squared_generators", m=1)] == [
        "1 1",
        "2 2",
        "3 3",
    ]
    odd = subgroup_words(5, "odd_generators", m=1, a=2, l=1)
    assert [str(w) for w in odd] == ["1 1", "3 3"]


def test_subgroup_irreducibility():
    assert subgroup_irreducibility(4, "squared_generators", Q0, T0, m=1) == 1
    assert subgroup_irreducibility(4, "hilden", 1.0, T0) >= 2
    assert subgroup_irreducibility(4, "hilden", Q0, T0) == 1


def test_hilden_invariant_subspace_at_q_one():
    basis = PairBasis(4)
    keep = {basis.index(1, 2), basis.index(3, 4)}
    for w in subgroup_words(4, "hilden"):
        mat = rep_of_word_numeric("lk", w, 1.0, T0)
        for c in keep:
            for r in range(6):
                if r not in keep:
                    assert abs(mat[r, c]) < 1e-12
