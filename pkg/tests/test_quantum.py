import math
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from infobound.errors import (
    BasisIndexOutOfRange,
    InvalidTargets,
    NonPositiveArea,
    NonUnitaryMatrix,
    PrecisionOutOfRange,
    QubitCountOutOfRange,
)
from infobound.quantum import (
    COMPRESSOR_ID,
    CSV_COLUMNS,
    ComplexityEstimate,
    NoiseModel,
    QubitRegister,
    apply_gate,
    check_specifiability,
    complexity_upper_bound,
    deserialize,
    init_state,
    inject_error,
    pi_digits,
    run_degradation_experiment,
    serialize,
    simple_layer,
)
from infobound.units import planck_length

# independent source: the first 32 digits of pi, typed in
PI_32 = "31415926535897932384626433832795"
S2 = 1 / math.sqrt(2)


def test_pi_digits_independent():
    assert pi_digits(32) == [int(c) for c in PI_32]


def test_init_examples():
    assert np.array_equal(init_state(1, "basis", k=0).amplitudes, [1, 0])
    assert np.allclose(init_state(2, "uniform").amplitudes, 0.5, atol=1e-15)
    amps = init_state(3, "pi-digit").amplitudes
    digits = np.array([int(c) for c in PI_32[:8]], dtype=float)
    assert np.allclose(amps.real, digits / np.linalg.norm(digits), atol=1e-15)
    assert np.all(amps.imag == 0)


def test_seeded_random_is_reproducible():
    assert init_state(6, "seeded-random", seed=3) == init_state(6, "seeded-random", seed=3)
    assert init_state(6, "seeded-random", seed=3) != init_state(6, "seeded-random", seed=4)


def test_init_errors():
    with pytest.raises(QubitCountOutOfRange):
        init_state(0)
    with pytest.raises(QubitCountOutOfRange):
        init_state(15)
    with pytest.raises(BasisIndexOutOfRange):
        init_state(2, "basis", k=4)
    assert init_state(15, cap=16).n == 15


def test_register_invariants():
    with pytest.raises(ValueError):
        QubitRegister(1, [1.0, 1.0])
    with pytest.raises(ValueError):
        QubitRegister(2, [1.0, 0.0])
    r = init_state(2)
    with pytest.raises(ValueError):
        r.amplitudes[0] = 0


def test_gate_examples():
    one = apply_gate(init_state(1), "X", 0)
    assert np.array_equal(one.amplitudes, [0, 1])
    plus = apply_gate(init_state(1), "H", 0)
    assert np.allclose(plus.amplitudes, [S2, S2], atol=1e-15)
    bell = apply_gate(apply_gate(init_state(2), "H", 0), "CNOT", (0, 1))
    assert np.allclose(bell.amplitudes, [S2, 0, 0, S2], atol=1e-15)


def test_qubit_zero_is_most_significant():
    r = apply_gate(init_state(3), "X", 0)
    assert r.amplitudes[0b100] == 1


def test_general_unitary_and_errors():
    th = 0.3
    u = np.array([[math.cos(th), -math.sin(th)], [math.sin(th), math.cos(th)]])
    r = apply_gate(init_state(1), "U", 0, matrix=u)
    assert np.allclose(r.amplitudes, [math.cos(th), math.sin(th)], atol=1e-15)
    with pytest.raises(NonUnitaryMatrix):
        apply_gate(init_state(1), "U", 0, matrix=np.array([[1, 1], [0, 1]]))
    with pytest.raises(InvalidTargets):
        apply_gate(init_state(2), "CNOT", (1, 1))
    with pytest.raises(InvalidTargets):
        apply_gate(init_state(2), "X", 2)
    with pytest.raises(InvalidTargets):
        apply_gate(init_state(2), "CNOT", 0)


@settings(max_examples=30, deadline=None)
@given(
    st.integers(1, 8),
    st.lists(st.tuples(st.sampled_from(["X", "H", "T", "CNOT"]), st.integers(0, 7), st.integers(0, 7)), max_size=40),
    st.integers(0, 2**32),
)
def test_norm_preserved(n, ops, seed):
    reg = init_state(n, "seeded-random", seed=seed)
    depth = 0
    for gate, a, b in ops:
        a %= n
        if gate == "CNOT":
            if n < 2:
                continue
            b = (a + 1 + b % (n - 1)) % n
            reg = apply_gate(reg, gate, (a, b))
        else:
            reg = apply_gate(reg, gate, a)
        depth += 1
    assert reg.norm_error < max(depth, 1) * 1e-12


def test_inject_error_rate_zero_is_identity():
    reg = init_state(6, "seeded-random", seed=1)
    out = inject_error(reg, NoiseModel(rate=0.0, seed=9))
    assert out == reg


def test_inject_error_small_sigma():
    reg = init_state(5, "pi-digit")
    out = inject_error(reg, NoiseModel(rate=1.0, sigma=1e-12, seed=2))
    assert np.linalg.norm(out.amplitudes - reg.amplitudes) < 1e-9


@pytest.mark.parametrize("kind", ["phase-jitter", "small-rotation", "depolarizing-approx"])
def test_inject_error_deterministic(kind):
    reg = init_state(8, "pi-digit")
    m = NoiseModel(kind=kind, rate=0.1, sigma=0.05, seed=42)
    a, b = inject_error(reg, m), inject_error(reg, m)
    assert a == b
    big = NoiseModel(kind=kind, rate=1.0, sigma=0.5, seed=42)
    assert inject_error(reg, big) != reg


def test_noise_model_validation():
    with pytest.raises(ValueError):
        NoiseModel(rate=1.5)
    with pytest.raises(ValueError):
        NoiseModel(sigma=0.0)
    with pytest.raises(ValueError):
        NoiseModel(kind="bitflip")


def test_compression_ratios():
    basis = complexity_upper_bound(init_state(10, "basis"), 16)
    rand = complexity_upper_bound(init_state(10, "seeded-random", seed=0), 16)
    assert basis.ratio < 0.1
    assert rand.ratio > 0.9
    assert basis.compressor_id == COMPRESSOR_ID


@given(st.integers(1, 10), st.integers(4, 64))
def test_raw_bits_linear(n, p):
    est = complexity_upper_bound(init_state(n, "uniform"), p)
    assert est.raw_bits == 2 * 2**n * p


def test_precision_range():
    with pytest.raises(PrecisionOutOfRange):
        complexity_upper_bound(init_state(2), 3)
    with pytest.raises(PrecisionOutOfRange):
        complexity_upper_bound(init_state(2), 65)


def test_compressed_within_raw_plus_overhead():
    for p in (4, 16, 52, 64):
        est = complexity_upper_bound(init_state(8, "seeded-random", seed=5), p)
        # 64-bit block-scale header plus deflate framing
        assert est.compressed_bits <= est.raw_bits + 64 + 8 * 64


def test_serialize_length():
    reg = init_state(3, "pi-digit")
    assert len(serialize(reg, 12)) == 8 + (2 * 8 * 12 + 7) // 8


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(4, 64), st.integers(0, 2**32))
def test_serialize_round_trip(n, p, seed):
    reg = init_state(n, "seeded-random", seed=seed)
    back = deserialize(serialize(reg, p), n, p)
    comps = np.abs(np.concatenate([(back - reg.amplitudes).real, (back - reg.amplitudes).imag]))
    block = max(np.abs(reg.amplitudes.real).max(), np.abs(reg.amplitudes.imag).max())
    # float64 amplitudes cannot resolve below ~2^-53 of the block scale
    fp = 2.0**-52 * block
    if block <= 1 - 2.0 ** (1 - p):
        assert comps.max() <= 2.0**-p + fp
    else:
        assert comps.max() <= 1.0 / (2.0**p - 2) + fp


@pytest.mark.parametrize("p", [4, 8, 16, 53, 64])
def test_serialize_round_trip_near_basis(p):
    # a p-bit symmetric code cannot place 2^p levels within 2^-p of all of
    # [-1, 1]; with the largest component near 1 the bound is half a step
    vec = np.zeros(4, dtype=complex)
    vec[0], vec[3] = 1.0, 1e-3
    reg = QubitRegister(2, vec / np.linalg.norm(vec))
    back = deserialize(serialize(reg, p), 2, p)
    assert np.max(np.abs(back - reg.amplitudes)) <= 1.0 / (2.0**p - 2) + 2.0**-52
    assert back[0] == reg.amplitudes[0]
    basis = init_state(3, "basis", k=5)
    assert np.array_equal(deserialize(serialize(basis, p), 3, p), basis.amplitudes)


def _corpus():
    out = []
    for spec in ("basis", "uniform", "seeded-random", "pi-digit"):
        for n in (3, 6, 9):
            for s in range(3):
                out.append(init_state(n, spec, k=s, seed=s))
    return out


def test_compressed_bits_monotone_in_precision_over_corpus():
    corpus = _corpus()
    ps = range(4, 65, 4)
    totals = [sum(complexity_upper_bound(r, p).compressed_bits for r in corpus) for p in ps]
    assert all(b >= a for a, b in zip(totals, totals[1:]))
    for seed in range(3):
        r = init_state(6, "seeded-random", seed=seed)
        bits = [complexity_upper_bound(r, p).compressed_bits for p in ps]
        assert all(b > a for a, b in zip(bits, bits[1:]))


def test_specifiability_cosmological_area():
    est = complexity_upper_bound(init_state(10, "seeded-random"), 16)
    v = check_specifiability(est, 3.0256e53)
    assert v.verdict == "within-bound" and v.verdict_quarter == "within-bound"
    assert v.log10_margin == pytest.approx(math.log10(3.0256e53 / planck_length().value ** 2 / est.compressed_bits))
    assert 115 < v.log10_margin_quarter < 120


def test_specifiability_tiny_area_and_boundary():
    lp2 = planck_length().value ** 2
    v = check_specifiability(ComplexityEstimate(64, 2, 16), lp2)
    assert v.exceeds_bound and v.verdict == "exceeds-bound"
    v = check_specifiability(ComplexityEstimate(64, 4, 16), 4 * lp2)
    assert not v.exceeds_bound
    assert v.bound_bits == pytest.approx(4.0, rel=1e-15)
    assert v.bound_bits_quarter == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(NonPositiveArea):
        check_specifiability(ComplexityEstimate(64, 4, 16), 0.0)


def test_simple_layer_is_permutation():
    reg = init_state(5, "pi-digit")
    out = simple_layer(reg)
    assert sorted(out.amplitudes.real) == sorted(reg.amplitudes.real)
    assert out != reg


@pytest.fixture(scope="module")
def experiment():
    t0 = time.perf_counter()
    res = run_degradation_experiment(10, 50, NoiseModel(rate=0.1, sigma=0.05, seed=7), trials=30)
    return res, time.perf_counter() - t0


def test_experiment_control_flat(experiment):
    res, _ = experiment
    first = res.control[0].compressed_bits
    for est in res.control:
        assert abs(est.compressed_bits - first) <= 0.1 * first
    assert max(res.control_norm_error) < 50 * 1e-12


def test_experiment_noise_raises_complexity(experiment):
    res, elapsed = experiment
    assert res.mean_bits(50) > res.control[50].compressed_bits
    assert elapsed < 30


def test_experiment_csv(experiment):
    res, _ = experiment
    text = res.to_csv()
    lines = text.split("\r\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 4 * 51 + 1
    again = run_degradation_experiment(10, 50, NoiseModel(rate=0.1, sigma=0.05, seed=7), trials=30)
    assert again.to_csv() == text
