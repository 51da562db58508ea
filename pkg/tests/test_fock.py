import math

import numpy as np
import pytest

import isosqueeze as iq
from isosqueeze import fock
from conftest import nonlinear_log_norm_sq, nonlinear_probability, unitary_probability


class TestFockVector:
    def test_base_index_enforced(self):
        with pytest.raises(ValueError):
            fock.FockVector(np.array([1.0 + 0j]), base_index=0)

    def test_immutable(self):
        v = iq.basis_vector(3, 4)
        with pytest.raises(ValueError):
            v.amps[0] = 2.0

    def test_levels(self):
        v = iq.basis_vector(5, 6)
        assert list(v.levels) == [3, 4, 5, 6, 7, 8]
        assert v.amps[2] == 1.0


class TestNormalize:
    def test_scaling(self):
        v = fock.FockVector(np.array([2.0, 0.0, 0.0], dtype=complex))
        out = fock.normalize(v)
        assert np.allclose(out.amps, [1.0, 0.0, 0.0])

    def test_symmetry(self):
        v = fock.FockVector(np.array([1.0, 1j], dtype=complex))
        out = fock.normalize(v)
        assert np.allclose(out.amps, [1 / math.sqrt(2), 1j / math.sqrt(2)])

    def test_random_unit_norm(self):
        rng = np.random.default_rng(7)
        amps = rng.normal(size=60) + 1j * rng.normal(size=60)
        out = fock.normalize(fock.FockVector(amps))
        assert abs(np.linalg.norm(out.amps) - 1.0) < 1e-12

    def test_zero_vector_raises(self):
        with pytest.raises(fock.ZeroVector):
            fock.normalize(fock.FockVector(np.zeros(4, dtype=complex)))


class TestInnerProduct:
    def test_orthonormal_basis(self):
        three = iq.basis_vector(3, 5)
        four = iq.basis_vector(4, 5)
        assert fock.inner_product(three, three) == 1.0
        assert fock.inner_product(three, four) == 0.0

    def test_self_normalized(self):
        rng = np.random.default_rng(11)
        v = fock.normalize(fock.FockVector(rng.normal(size=30) + 1j * rng.normal(size=30)))
        assert abs(fock.inner_product(v, v) - 1.0) < 1e-12

    def test_conjugate_symmetry(self):
        rng = np.random.default_rng(13)
        u = fock.FockVector(rng.normal(size=20) + 1j * rng.normal(size=20))
        v = fock.FockVector(rng.normal(size=20) + 1j * rng.normal(size=20))
        assert abs(fock.inner_product(u, v) - np.conj(fock.inner_product(v, u))) < 1e-15

    def test_length_mismatch_zero_pads(self):
        u = iq.basis_vector(3, 3)
        v = iq.basis_vector(3, 9)
        assert fock.inner_product(u, v) == 1.0


class TestTailDiagnostics:
    def test_vacuum_has_no_tail(self):
        assert fock.tail_mass(iq.SqueezeParams(kind="i", r=0.0)) <= 1e-300

    def test_unitary_tail_small(self):
        params = iq.SqueezeParams(kind="iii", r=0.4, n_max=70)
        tail = fock.tail_mass(params)
        assert tail < 1e-12
        # direct series oracle over the top retained half-indices
        oracle = sum(unitary_probability(n, 0.4) for n in (68, 69, 70))
        assert tail == pytest.approx(oracle, rel=1e-6, abs=1e-30)

    def test_nonlinear_tail_small(self):
        params = iq.SqueezeParams(kind="i", r=20.0, n_max=70)
        tail = fock.tail_mass(params)
        assert tail < 1e-8
        log_norm_sq = nonlinear_log_norm_sq(20.0)
        oracle = sum(nonlinear_probability(n, 20.0, log_norm_sq) for n in (68, 69, 70))
        assert tail == pytest.approx(oracle, rel=1e-6)

    def test_parseval(self, nonlinear_r20):
        total = fock.probabilities(nonlinear_r20).sum()
        assert total >= 1.0 - nonlinear_r20.tail_bound - 1e-12
        assert total == pytest.approx(1.0, abs=1e-12)


class TestSerialization:
    def test_round_trip(self):
        rng = np.random.default_rng(5)
        v = fock.FockVector(rng.normal(size=8) + 1j * rng.normal(size=8), tail_bound=1e-9)
        back = fock.from_json(fock.to_json(v))
        assert back.base_index == v.base_index
        assert back.tail_bound == v.tail_bound
        assert np.array_equal(back.amps, v.amps)

    def test_schema_fields(self):
        import json

        payload = json.loads(fock.to_json(iq.basis_vector(4, 3)))
        assert set(payload) == {"base_index", "amps", "tail_bound"}
        assert payload["amps"][1] == [1.0, 0.0]
