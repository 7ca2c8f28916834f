#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holoqec/error.hpp"
#include "holoqec/executor.hpp"
#include "holoqec/experiments.hpp"
#include "holoqec/gadgets.hpp"
#include "holoqec/resources.hpp"
#include "holoqec/semiglobal.hpp"
#include "holoqec/textio.hpp"

namespace py = pybind11;
using namespace holoqec;

namespace {

GateKind kind_from(const std::string& name) {
  auto k = gate_from_name(name);
  if (!k) throw Error("BAD_SITES", "unknown gate kind " + name);
  return *k;
}

}  // namespace

PYBIND11_MODULE(_holoqec, m) {
  m.doc() = "semi-global fault-tolerance toolkit: stabilizer and dense engines, "
            "columnar circuit representation, measurement-free correctors, "
            "noise experiments and control-count scaling";

  py::register_exception<Error>(m, "HoloqecError");

  // --- circuit representation -----------------------------------------
  py::class_<LatticeDims>(m, "LatticeDims")
      .def(py::init<int, int, int>(), py::arg("nx"), py::arg("ny"), py::arg("nz"))
      .def_readonly("nx", &LatticeDims::nx)
      .def_readonly("ny", &LatticeDims::ny)
      .def_readonly("nz", &LatticeDims::nz)
      .def("qubits", &LatticeDims::qubits);

  py::class_<Violation>(m, "Violation")
      .def_readonly("op_index", &Violation::op_index)
      .def_readonly("rule", &Violation::rule)
      .def_readonly("message", &Violation::message);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("ok", &ValidationReport::ok)
      .def_readonly("violations", &ValidationReport::violations);

  py::class_<PhysGate>(m, "PhysGate")
      .def_property_readonly("kind", [](const PhysGate& g) { return std::string(gate_name(g.kind)); })
      .def_readonly("sites", &PhysGate::sites)
      .def_readonly("timestep", &PhysGate::timestep)
      .def_readonly("location", &PhysGate::location);

  py::class_<PhysicalCircuit>(m, "PhysicalCircuit")
      .def_readonly("n_qubits", &PhysicalCircuit::n_qubits)
      .def_readonly("gates", &PhysicalCircuit::gates)
      .def("num_locations", [](const PhysicalCircuit& pc) { return pc.locations.size(); })
      .def("__len__", [](const PhysicalCircuit& pc) { return pc.gates.size(); });

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("dims", &Circuit::dims)
      .def_readonly("name", &Circuit::name)
      .def("num_ops", [](const Circuit& c) { return c.ops.size(); });

  m.def("parse_circuit", &parse_circuit);
  m.def("serialize_circuit", &serialize_circuit);
  m.def("serialize_physical", &serialize_physical);
  m.def("validate", &validate);
  m.def("expand", &expand);
  m.def("build_t_tilde", &build_T_tilde);
  m.def("build_t_pulse", &build_T_pulse);
  m.def("build_mirror_sequence", &build_mirror_sequence);
  m.def("build_memory_experiment", &build_memory_experiment);

  py::class_<MirrorEntry>(m, "MirrorEntry")
      .def_readonly("from_z", &MirrorEntry::from_z)
      .def_readonly("to_z", &MirrorEntry::to_z)
      .def_readonly("from_pauli", &MirrorEntry::from_pauli)
      .def_readonly("to_pauli", &MirrorEntry::to_pauli)
      .def_readonly("sign", &MirrorEntry::sign);
  py::class_<MirrorTable>(m, "MirrorTable")
      .def_readonly("nz", &MirrorTable::nz)
      .def_readonly("entries", &MirrorTable::entries)
      .def_readonly("plain_reflection", &MirrorTable::plain_reflection);
  m.def("mirror_byproducts", &mirror_byproducts);

  py::class_<ReadoutPlan>(m, "ReadoutPlan")
      .def_readonly("circuit", &ReadoutPlan::circuit)
      .def_readonly("t_pulses", &ReadoutPlan::t_pulses)
      .def_readonly("boundary_z", &ReadoutPlan::boundary_z);
  m.def("build_readout_sequence", &build_readout_sequence);

  py::class_<Layout2D>(m, "Layout2D")
      .def_static("interleaved", &Layout2D::interleaved)
      .def_readonly("line_length", &Layout2D::line_length);
  m.def("lower_to_2d", &lower_to_2d);

  // --- engines -----------------------------------------------------------
  py::class_<PauliString>(m, "PauliString")
      .def(py::init(&PauliString::from_label))
      .def("label", &PauliString::label)
      .def("weight", &PauliString::weight)
      .def("commutes_with", &PauliString::commutes_with);

  py::class_<Tableau>(m, "Tableau")
      .def(py::init<int>())
      .def("num_qubits", &Tableau::num_qubits)
      .def("apply",
           [](Tableau& t, const std::string& kind, const std::vector<int>& sites) {
             t.apply_clifford(kind_from(kind), sites);
           })
      .def("apply_pauli", &Tableau::apply_pauli)
      .def("measure_z",
           [](Tableau& t, int site, std::uint64_t seed) {
             Rng rng(seed);
             MeasureOutcome mo = t.measure_z(site, rng);
             return py::make_tuple(mo.bit, mo.deterministic);
           },
           py::arg("site"), py::arg("seed") = 0)
      .def("reset_z",
           [](Tableau& t, int site, std::uint64_t seed) {
             Rng rng(seed);
             t.reset_z(site, rng);
           },
           py::arg("site"), py::arg("seed") = 0)
      .def("expectation", &Tableau::expectation)
      .def("stabilizer", [](const Tableau& t, int i) { return t.stabilizer(i).label(); })
      .def_static("states_equal", &Tableau::states_equal);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<int, int>(), py::arg("n"), py::arg("cap") = StateVector::kDefaultCap)
      .def("num_qubits", &StateVector::num_qubits)
      .def("apply",
           [](StateVector& sv, const std::string& kind, const std::vector<int>& sites,
              double param) { sv.apply_gate(kind_from(kind), sites, param); },
           py::arg("kind"), py::arg("sites"), py::arg("param") = 0.0)
      .def("amplitudes", [](const StateVector& sv) { return sv.amplitudes(); })
      .def("expectation", &StateVector::expectation)
      .def_static("fidelity", &StateVector::fidelity);

  m.def("run_on_tableau", [](const PhysicalCircuit& pc, Tableau& t, std::uint64_t seed) {
    Rng rng(seed);
    RunRecord rec = run_on_tableau(pc, t, rng);
    return rec.outcomes;
  });
  m.def("conjugate_pauli",
        [](const PhysicalCircuit& pc, const PauliString& p) { return conjugate_pauli(pc, p); });

  // --- codes and gadgets ---------------------------------------------------
  py::enum_<QrBasis>(m, "QrBasis").value("BitFlip", QrBasis::BitFlip).value("PhaseFlip", QrBasis::PhaseFlip);
  py::enum_<BsOrientation>(m, "BsOrientation")
      .value("Standard", BsOrientation::Standard)
      .value("Rotated", BsOrientation::Rotated);
  py::enum_<MBasis>(m, "MBasis").value("X", MBasis::X).value("Z", MBasis::Z);
  py::enum_<LogicalBasis>(m, "LogicalBasis")
      .value("Zero", LogicalBasis::Zero)
      .value("Plus", LogicalBasis::Plus);
  py::enum_<StageOrder>(m, "StageOrder")
      .value("XThenZ", StageOrder::XThenZ)
      .value("ZThenX", StageOrder::ZThenX);

  py::class_<CodeSpec>(m, "CodeSpec")
      .def_readonly("name", &CodeSpec::name)
      .def_readonly("n", &CodeSpec::n)
      .def_readonly("distance", &CodeSpec::distance)
      .def_property_readonly("stabilizers",
                             [](const CodeSpec& c) {
                               std::vector<std::string> out;
                               for (const auto& s : c.stabilizers) out.push_back(s.label());
                               return out;
                             })
      .def_property_readonly("logical_x", [](const CodeSpec& c) { return c.logical_x.label(); })
      .def_property_readonly("logical_z", [](const CodeSpec& c) { return c.logical_z.label(); });
  m.def("code_qr3", &code_qr3);
  m.def("code_bs9", &code_bs9);

  py::class_<GadgetCircuit>(m, "GadgetCircuit")
      .def_readonly("circuit", &GadgetCircuit::circuit)
      .def_readonly("data_sites", &GadgetCircuit::data_sites)
      .def_readonly("level", &GadgetCircuit::level)
      .def_readonly("label", &GadgetCircuit::label)
      .def("num_ancillas", [](const GadgetCircuit& g) { return g.ancillas.size(); });

  m.def("m_gate", &m_gate);
  m.def("vn_routine", &vn_routine);
  m.def("vote_syndromes", [](const std::vector<int>& s1, const std::vector<int>& s2,
                             const std::vector<int>& s3) {
    return vote_syndromes({s1, s2, s3});
  });
  m.def("bs_ec", &bs_ec, py::arg("level") = 1, py::arg("orientation") = BsOrientation::Standard,
        py::arg("order") = StageOrder::XThenZ);
  m.def("prepare_qr", &prepare_qr);
  m.def("prepare_logical", &prepare_logical, py::arg("state"), py::arg("level") = 1,
        py::arg("orientation") = BsOrientation::Standard);
  m.def("encode_arbitrary", &encode_arbitrary);
  m.def("zhalf_circuit", [](const CodeSpec* code) { return zhalf_circuit(code); },
        py::arg("code") = nullptr);
  m.def("zquarter_circuit", [](const CodeSpec* code) { return zquarter_circuit(code); },
        py::arg("code") = nullptr);
  m.def("toffoli_decomposition", &toffoli_decomposition);
  m.def("ft_swap_routine", [](int p1, int p2, int p3) {
    return ft_swap_routine(p1, p2, p3, {LineRole::Info, LineRole::Placeholder, LineRole::Info});
  });

  // --- experiments ------------------------------------------------------------
  py::enum_<CodeChoice>(m, "CodeChoice").value("QR3", CodeChoice::QR3).value("BS9", CodeChoice::BS9);

  py::class_<NoiseModel>(m, "NoiseModel")
      .def(py::init<>())
      .def_readwrite("p_gate", &NoiseModel::p_gate)
      .def_readwrite("p_prep", &NoiseModel::p_prep)
      .def_readwrite("p_meas", &NoiseModel::p_meas)
      .def_readwrite("columnar_correlated", &NoiseModel::columnar_correlated);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("p", &McEstimate::p)
      .def_readonly("trials", &McEstimate::trials)
      .def_readonly("failures", &McEstimate::failures)
      .def_readonly("p_logical", &McEstimate::p_logical)
      .def_readonly("stderr", &McEstimate::stderr_)
      .def_readonly("seed", &McEstimate::seed);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("exponent", &FitResult::exponent)
      .def_readonly("coefficient_a", &FitResult::coefficient_a)
      .def_readonly("r_squared", &FitResult::r_squared);

  py::class_<PseudoThreshold>(m, "PseudoThreshold")
      .def_readonly("value", &PseudoThreshold::value)
      .def_readonly("lo", &PseudoThreshold::lo)
      .def_readonly("hi", &PseudoThreshold::hi);

  py::class_<MemoryResult>(m, "MemoryResult")
      .def_readonly("estimates", &MemoryResult::estimates)
      .def_readonly("engine_fallbacks", &MemoryResult::engine_fallbacks);

  m.def("run_memory_exrec", &run_memory_exrec, py::arg("code"), py::arg("level"),
        py::arg("noise"), py::arg("p_sweep"), py::arg("trials"), py::arg("seed"),
        py::arg("jobs") = 1);
  m.def("fit_suppression", &fit_suppression);
  m.def("pseudo_threshold", &pseudo_threshold);

  py::class_<ContainmentReport>(m, "ContainmentReport")
      .def_readonly("planes", &ContainmentReport::planes)
      .def_readonly("runs", &ContainmentReport::runs)
      .def_readonly("plane_failures", &ContainmentReport::plane_failures)
      .def_readonly("total_failures", &ContainmentReport::total_failures);
  m.def("run_column_containment", &run_column_containment);

  py::class_<FaultPathReport>(m, "FaultPathReport")
      .def_readonly("locations", &FaultPathReport::locations)
      .def_readonly("cases_checked", &FaultPathReport::cases_checked)
      .def_readonly("max_weight_per_plane", &FaultPathReport::max_weight_per_plane)
      .def_readonly("violations", &FaultPathReport::violations);
  m.def("run_t_fault_paths", &run_t_fault_paths);

  m.def("estimates_csv", &estimates_csv);

  // --- resource scaling ----------------------------------------------------------
  py::class_<ThresholdConstants>(m, "ThresholdConstants")
      .def(py::init<>())
      .def_readonly("p_thresh_toffoli", &ThresholdConstants::p_thresh_toffoli)
      .def_readonly("p_thresh_two_qubit", &ThresholdConstants::p_thresh_two_qubit)
      .def_readonly("p_meas_thresh", &ThresholdConstants::p_meas_thresh)
      .def_readonly("p_h_anc_thresh", &ThresholdConstants::p_h_anc_thresh)
      .def_readonly("p_i_anc_thresh", &ThresholdConstants::p_i_anc_thresh)
      .def_readonly("p_thresh_measured", &ThresholdConstants::p_thresh_measured);

  py::class_<ResourceParams>(m, "ResourceParams")
      .def(py::init<>())
      .def_readwrite("n_c", &ResourceParams::n_c)
      .def_readwrite("epsilon", &ResourceParams::epsilon)
      .def_readwrite("p0", &ResourceParams::p0)
      .def_readwrite("beta", &ResourceParams::beta)
      .def_readwrite("t_power", &ResourceParams::t_power)
      .def_readwrite("pulse_factor", &ResourceParams::pulse_factor);

  py::class_<ResourceReport>(m, "ResourceReport")
      .def_readonly("k_uadd_real", &ResourceReport::k_uadd_real)
      .def_readonly("k_sg_real", &ResourceReport::k_sg_real)
      .def_readonly("k_uadd", &ResourceReport::k_uadd)
      .def_readonly("k_sg", &ResourceReport::k_sg)
      .def_readonly("k_prime", &ResourceReport::k_prime)
      .def_readonly("cap_delta_k", &ResourceReport::cap_delta_k)
      .def_readonly("n_sg", &ResourceReport::n_sg)
      .def_readonly("n_uadd", &ResourceReport::n_uadd)
      .def_readonly("n_madd", &ResourceReport::n_madd)
      .def_readonly("ratio_uadd_direct", &ResourceReport::ratio_uadd_direct)
      .def_readonly("warnings", &ResourceReport::warnings)
      .def("to_text", &ResourceReport::to_text)
      .def("to_csv", &ResourceReport::to_csv);

  m.def("concat_level", &concat_level);
  m.def("recursion_check", &recursion_check);
  m.def("controls_semiglobal", &controls_semiglobal);
  m.def("controls_uadd", &controls_uadd);
  m.def("controls_madd", &controls_madd);
  m.def("delta_k", &delta_k);
  m.def("resource_report", &resource_report, py::arg("params"),
        py::arg("consts") = ThresholdConstants());
  m.def("shor_params", &shor_params);
}
