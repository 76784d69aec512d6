import numpy as np
import pytest

from gatesynth.compiler import (efficient_as_cnot, merge_locals, synthesize,
                                upper_bound)
from gatesynth.gates import CNOT, SQRT_SWAP, cphase, phase_gate
from gatesynth.kak import kak_decompose
from gatesynth.matcore import (Circuit, EntanglerApp, LocalPair, SIGMA_X,
                               evaluate, interaction, phase_distance, tensor,
                               zz_interaction)

from conftest import dress, haar_unitary, random_local


class TestSynthesize:
    def test_cnot_from_zz_pi3(self):
        circuit, report = synthesize(CNOT, zz_interaction(np.pi / 3))
        assert report.entangler_count == 2
        assert report.residual < 1e-10

    def test_cnot_from_zz_pi5(self):
        circuit, report = synthesize(CNOT, zz_interaction(np.pi / 5))
        assert report.entangler_count == 4
        assert report.n == 2

    def test_local_target_zero_entanglers(self, rng):
        circuit, report = synthesize(random_local(rng), CNOT)
        assert report.entangler_count == 0
        assert report.local_count == 1
        assert len(circuit.elements) == 1

    def test_sqrt_swap_from_cphase(self):
        circuit, report = synthesize(SQRT_SWAP, cphase(2 * np.pi / 3))
        assert report.entangler_count == 6
        assert report.local_count == 7
        assert report.residual < 1e-10

    def test_verifies_against_entangler(self, rng):
        target = haar_unitary(rng)
        ent = dress(interaction(1.0, 0.6, 0.3), rng)
        circuit, report = synthesize(target, ent)
        assert phase_distance(evaluate(circuit, ent), target) == pytest.approx(report.residual)
        assert report.entangler_count <= report.bound

    def test_report_arithmetic(self, rng):
        ent = cphase(np.pi / 5)
        _, report = synthesize(haar_unitary(rng), ent)
        assert report.bound == 6 * report.n * report.apps_per_unit
        assert report.entangler_count == 6 * report.n * report.apps_per_unit

    def test_rejects_local_resource(self, rng):
        with pytest.raises(ValueError):
            synthesize(haar_unitary(rng), random_local(rng))

    def test_swap_class_target_ok(self):
        # SWAP is a valid *target*, only the resource must be entangling
        from gatesynth.gates import SWAP
        circuit, report = synthesize(SWAP, CNOT)
        assert report.entangler_count == 6
        assert report.residual < 1e-10


class TestUpperBound:
    def test_cnot(self):
        assert upper_bound(CNOT).bound == 6

    @pytest.mark.parametrize("phi", [np.pi / 2, 2 * np.pi / 3, np.pi])
    def test_cphase_upper_range(self, phi):
        report = upper_bound(cphase(phi))
        assert report.bound == 6
        assert report.n == 1

    def test_cphase_small_angle(self):
        report = upper_bound(cphase(np.pi / 5))
        assert (report.n, report.bound) == (3, 18)

    def test_depends_only_on_nonlocal_part(self, rng):
        base = interaction(1.1, 0.7, 0.2)
        b0 = upper_bound(base)
        for _ in range(5):
            b1 = upper_bound(dress(base, rng))
            assert (b1.bound, b1.n, b1.apps_per_unit) == (b0.bound, b0.n, b0.apps_per_unit)
            assert b1.gamma == pytest.approx(b0.gamma, abs=1e-9)

    def test_partial_report_fields(self):
        report = upper_bound(CNOT)
        assert report.entangler_count is None
        assert report.local_count is None
        assert report.residual is None


class TestMergeLocals:
    def test_two_locals_merge(self, rng):
        l1 = LocalPair(haar_unitary(rng, 2), haar_unitary(rng, 2))
        l2 = LocalPair(haar_unitary(rng, 2), haar_unitary(rng, 2))
        circ = Circuit([l1, l2])
        merged = merge_locals(circ)
        assert merged.local_count == 1
        np.testing.assert_allclose(evaluate(merged, CNOT), evaluate(circ, CNOT), atol=1e-12)

    def test_merge_between_entanglers_only(self, rng):
        mk = lambda: LocalPair(haar_unitary(rng, 2), haar_unitary(rng, 2))
        circ = Circuit([mk(), EntanglerApp(), mk(), mk(), EntanglerApp()])
        merged = merge_locals(circ)
        kinds = [type(e).__name__ for e in merged.elements]
        assert kinds == ["LocalPair", "EntanglerApp", "LocalPair", "EntanglerApp"]
        np.testing.assert_allclose(evaluate(merged, CNOT), evaluate(circ, CNOT), atol=1e-12)

    def test_no_adjacent_locals_and_det_one(self, rng):
        circ = Circuit([LocalPair(haar_unitary(rng, 2), haar_unitary(rng, 2))
                        for _ in range(5)], phase=1j)
        merged = merge_locals(circ)
        assert merged.local_count == 1
        layer = merged.elements[0]
        assert abs(np.linalg.det(layer.a) - 1) < 1e-12
        assert abs(np.linalg.det(layer.b) - 1) < 1e-12
        np.testing.assert_allclose(evaluate(merged, CNOT), evaluate(circ, CNOT), atol=1e-12)

    def test_preserves_entangler_count(self, rng):
        circ, _ = synthesize(haar_unitary(rng), CNOT)
        assert merge_locals(circ).entangler_count == circ.entangler_count


class TestEfficientAsCnot:
    def test_sigma_x(self):
        assert efficient_as_cnot(SIGMA_X)

    def test_phase_quarter_pi(self):
        # coordinate pi/8 < pi/4
        assert not efficient_as_cnot(phase_gate(np.pi / 4))

    def test_phase_pi(self):
        # coordinate pi/2
        assert efficient_as_cnot(phase_gate(np.pi))

    def test_boundary(self):
        # PHASE(pi/2) sits exactly at coordinate pi/4
        assert efficient_as_cnot(phase_gate(np.pi / 2))


def test_end_to_end_batch(rng):
    triples = [(np.pi / 2, 0, 0), (np.pi / 2, np.pi / 2, 0), (np.pi / 3, np.pi / 4, 0),
               (np.pi / 2, np.pi / 4, 0), (np.pi / 3, np.pi / 4, np.pi / 6)]
    for k in range(40):
        target = haar_unitary(rng)
        ent = dress(interaction(*triples[k % len(triples)]), rng)
        circuit, report = synthesize(target, ent)
        assert report.residual < 1e-8
        assert report.entangler_count <= report.bound
