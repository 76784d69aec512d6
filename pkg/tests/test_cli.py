import json

import numpy as np
import pytest

from gatesynth.cli import EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main
from gatesynth.gates import CNOT
from gatesynth.serialize import format_matrix


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSynth:
    def test_cnot_from_zz(self, capsys):
        code, out, _ = run(capsys, "synth", "--target", "CNOT", "--entangler", "ZZ(pi/3)")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["report"]["entangler_count"] == 2

    def test_sqrt_swap_counts(self, capsys, tmp_path):
        out_path = tmp_path / "circ.json"
        code, out, _ = run(capsys, "synth", "--target", "SQRT_SWAP",
                           "--entangler", "CPHASE(2pi/3)", "--out", str(out_path))
        assert code == EXIT_OK
        doc = json.loads(out_path.read_text())
        assert doc["report"]["entangler_count"] == 6
        assert doc["report"]["local_count"] == 7

    def test_identity_matrix_target(self, capsys, tmp_path):
        path = tmp_path / "id.json"
        path.write_text(format_matrix(np.eye(4)))
        code, out, _ = run(capsys, "synth", "--target", f"MATRIX({path})",
                           "--entangler", "CNOT")
        assert code == EXIT_OK
        assert json.loads(out)["report"]["entangler_count"] == 0

    def test_rejects_unknown_target(self, capsys):
        code, _, err = run(capsys, "synth", "--target", "NOPE", "--entangler", "CNOT")
        assert code == EXIT_INPUT
        assert "unknown gate" in err

    def test_rejects_nonunitary_matrix(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(format_matrix(np.ones((4, 4))))
        code, _, err = run(capsys, "synth", "--target", f"MATRIX({path})",
                           "--entangler", "CNOT")
        assert code == EXIT_INPUT
        assert "unitary" in err

    def test_rejects_local_entangler(self, capsys, tmp_path):
        path = tmp_path / "local.json"
        path.write_text(format_matrix(np.diag([1, 1j, 1, 1j])))
        code, _, err = run(capsys, "synth", "--target", "CNOT",
                           "--entangler", f"MATRIX({path})")
        assert code == EXIT_INPUT
        assert "not entangling" in err


class TestClassify:
    def test_cnot(self, capsys):
        code, out, _ = run(capsys, "classify", "--gate", "CNOT")
        assert code == EXIT_OK
        assert "class: entangling" in out
        assert "bound: 6" in out
        assert format(np.pi / 2, ".17g") in out

    def test_swap(self, capsys):
        code, out, _ = run(capsys, "classify", "--gate", "SWAP")
        assert code == EXIT_OK
        assert "class: swap" in out
        assert "bound" not in out

    def test_cphase_small(self, capsys):
        code, out, _ = run(capsys, "classify", "--gate", "CPHASE(pi/5)")
        assert code == EXIT_OK
        assert "bound: 18" in out
        assert format(np.pi / 10, ".17g") in out


class TestVerify:
    @pytest.fixture
    def emitted(self, capsys, tmp_path):
        path = tmp_path / "circ.json"
        code, _, _ = run(capsys, "synth", "--target", "SQRT_SWAP",
                         "--entangler", "CPHASE(2pi/3)", "--out", str(path))
        assert code == EXIT_OK
        return path

    def test_self_consistent(self, capsys, emitted):
        code, out, _ = run(capsys, "verify", "--circuit", str(emitted),
                           "--target", "SQRT_SWAP")
        assert code == EXIT_OK
        assert "PASS" in out

    def test_wrong_target_fails(self, capsys, emitted):
        code, out, _ = run(capsys, "verify", "--circuit", str(emitted),
                           "--target", "SWAP")
        assert code == EXIT_VERIFY
        assert "FAIL" in out

    def test_malformed_document(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{broken")
        code, _, err = run(capsys, "verify", "--circuit", str(path),
                           "--target", "CNOT")
        assert code == EXIT_INPUT
        assert "malformed" in err

    def test_missing_document(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "--circuit", str(tmp_path / "nope.json"),
                           "--target", "CNOT")
        assert code == EXIT_INPUT


def test_exit_codes_distinct():
    assert len({EXIT_OK, EXIT_INPUT, EXIT_VERIFY}) == 3
