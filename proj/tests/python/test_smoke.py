"""Smoke tests for the python module against the CMake-built extension."""

import math

import pytest

import holoqec as hq


def test_parse_validate_expand():
    circ = hq.parse_circuit("dims 1 1 4\nop hlayer\nop czlayer oe\nop czlayer eo\n")
    assert circ.dims.nz == 4
    report = hq.validate(circ)
    assert report.ok
    pc = hq.expand(circ)
    assert pc.n_qubits == 4
    kinds = [g.kind for g in pc.gates]
    assert kinds.count("h") == 4
    assert kinds.count("cz") == 3


def test_validator_rejects_bulk_measurement():
    circ = hq.parse_circuit("dims 1 1 4\nop boundary mz 1 1 2\n")
    report = hq.validate(circ)
    assert not report.ok
    assert report.violations[0].rule == "R3"


def test_parse_error_carries_line():
    with pytest.raises(hq.HoloqecError, match="line 2"):
        hq.parse_circuit("dims 1 1 4\nop czlayer diagonal\n")


def test_tableau_bell_pair():
    t = hq.Tableau(2)
    t.apply("h", [0])
    t.apply("cnot", [0, 1])
    assert t.expectation(hq.PauliString("+XX")) == 1
    assert t.expectation(hq.PauliString("+ZZ")) == 1
    assert t.expectation(hq.PauliString("+ZI")) == 0


def test_mirror_table_is_a_reflection():
    table = hq.mirror_byproducts(4)
    assert table.plain_reflection
    for entry in table.entries:
        assert entry.to_z == 4 + 1 - entry.from_z
        assert entry.sign == 1


def test_readout_reaches_a_boundary():
    plan = hq.build_readout_sequence(hq.LatticeDims(1, 1, 3), 2)
    assert plan.boundary_z in (1, 3)
    assert plan.t_pulses > 0


def test_codes_and_corrector_shape():
    code = hq.code_bs9(hq.BsOrientation.Standard)
    assert code.n == 9
    assert len(code.stabilizers) == 4
    ec = hq.bs_ec(1)
    assert ec.circuit.n_qubits == 33
    assert ec.num_ancillas() == 24


def test_statevector_magic_phase():
    sv = hq.StateVector(1)
    sv.apply("h", [0])
    sv.apply("zquarter", [0])
    amps = sv.amplitudes()
    phase = amps[1] / amps[0]
    assert math.isclose(phase.real, math.cos(math.pi / 4), abs_tol=1e-12)
    assert math.isclose(phase.imag, math.sin(math.pi / 4), abs_tol=1e-12)


def test_memory_experiment_small():
    noise = hq.NoiseModel()
    result = hq.run_memory_exrec(hq.CodeChoice.BS9, 1, noise, [0.0, 5e-3], 500, 1)
    assert result.engine_fallbacks == 0
    assert result.estimates[0].failures == 0
    csv = hq.estimates_csv("memory", "bs9", 1, result.estimates)
    assert csv.startswith("experiment,code,level,p,trials,failures,p_logical,stderr,seed")


def test_fault_paths_contained():
    rep = hq.run_t_fault_paths(hq.LatticeDims(1, 1, 4))
    assert rep.violations == 0
    assert rep.max_weight_per_plane <= 1


def test_resources_shor_768():
    report = hq.resource_report(hq.shor_params(768))
    assert report.n_sg == 19845
    assert report.k_uadd == 3
    assert report.k_sg == 4
    assert report.cap_delta_k == 1
    assert abs(report.k_uadd_real - 2.599) < 5e-3
    assert len(report.warnings) >= 1


def test_threshold_constants():
    c = hq.ThresholdConstants()
    assert c.p_thresh_toffoli == 3.76e-5
    assert abs(c.p_h_anc_thresh - math.sin(math.pi / 8) ** 2) < 1e-15
