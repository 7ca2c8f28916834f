#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "holoqec/error.hpp"
#include "holoqec/experiments.hpp"
#include "holoqec/gadgets.hpp"
#include "holoqec/resources.hpp"
#include "holoqec/semiglobal.hpp"
#include "holoqec/textio.hpp"

using namespace holoqec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IO_ERROR", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("IO_ERROR", "cannot write " + out_path);
  out << text;
}

// comma list or log-spaced range a:b:n
std::vector<double> parse_sweep(const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    double a, b;
    int n;
    char c1, c2;
    std::istringstream ss(text);
    if (!(ss >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 || a <= 0 || b <= 0)
      throw Error("PARSE_ERROR", "range must be a:b:n with positive endpoints");
    if (n == 1) return {a};
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i) values.push_back(std::exp(la + (lb - la) * i / (n - 1)));
    return values;
  }
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    values.push_back(std::stod(tok));
  }
  if (values.empty()) throw Error("PARSE_ERROR", "empty sweep");
  return values;
}

int cmd_validate(const std::string& file) {
  Circuit c = parse_circuit(read_file(file));
  ValidationReport rep = validate(c);
  if (rep.ok) {
    std::cout << "ok: " << c.ops.size() << " ops on " << c.dims.nx << "x" << c.dims.ny << "x"
              << c.dims.nz << "\n";
    return kExitOk;
  }
  for (const auto& v : rep.violations)
    std::cout << v.rule << " op " << v.op_index << ": " << v.message << "\n";
  return kExitDomain;
}

int cmd_lower(const std::string& file, const std::string& target, const std::string& out) {
  Circuit c = parse_circuit(read_file(file));
  PhysicalCircuit pc = expand(c);
  std::ostringstream text;
  if (target == "physical") {
    text << serialize_physical(pc);
  } else {
    Layout2D layout = Layout2D::interleaved(c.dims.nx * c.dims.ny);
    PhysicalCircuit low = lower_to_2d(pc, c.dims, layout);
    text << serialize_layout(layout, c.dims.nz);
    text << serialize_physical(low);
  }
  write_output(out, text.str());
  return kExitOk;
}

struct SimArgs {
  std::string experiment;
  std::string code = "bs9";
  std::string p_list = "1e-3,2e-3,5e-3,1e-2";
  long trials = 100000;
  int nz = 4;
  int planes = 2;
  bool exhaustive = false;
  std::string theta_list = "0.01,0.02,0.04";
  std::string axis = "x";
};

int cmd_sim(const SimArgs& args, std::uint64_t seed, int jobs, const std::string& out) {
  std::ostringstream text;
  bool failed = false;
  if (args.experiment == "mirror") {
    MirrorTable table = mirror_byproducts(args.nz);
    text << "mirror nz=" << args.nz << "\n";
    for (const auto& e : table.entries)
      text << e.from_pauli << " z=" << e.from_z << " -> " << (e.sign < 0 ? "-" : "+")
           << e.to_pauli << " z=" << e.to_z << "\n";
    bool ok = true;
    for (const auto& e : table.entries) ok = ok && e.to_z == args.nz + 1 - e.from_z;
    text << (ok ? "PASS" : "FAIL") << " reflection"
         << (table.plain_reflection ? " (no byproducts)" : " (byproducts recorded)") << "\n";
    failed = !ok;
  } else if (args.experiment == "memory") {
    CodeChoice code = args.code == "qr3" ? CodeChoice::QR3 : CodeChoice::BS9;
    NoiseModel noise;
    MemoryResult mc =
        run_memory_exrec(code, 1, noise, parse_sweep(args.p_list), args.trials, seed, jobs);
    text << estimates_csv("memory", args.code, 1, mc.estimates);
    try {
      FitResult fit = fit_suppression(mc.estimates);
      text << "# fit exponent=" << fit.exponent << " A=" << fit.coefficient_a
           << " r2=" << fit.r_squared << "\n";
      PseudoThreshold pt = pseudo_threshold(mc.estimates);
      text << "# pseudo-threshold=" << pt.value << " ci95=[" << pt.lo << "," << pt.hi << "]\n";
    } catch (const Error& e) {
      text << "# fit unavailable: " << e.what() << "\n";
    }
    text << "# engine fallbacks=" << mc.engine_fallbacks << "\n";
  } else if (args.experiment == "containment") {
    ContainmentReport rep = run_column_containment(args.planes, args.exhaustive, args.trials, seed);
    text << "containment planes=" << rep.planes << " runs=" << rep.runs
         << " exhaustive=" << (rep.exhaustive ? 1 : 0) << "\n";
    for (std::size_t z = 0; z < rep.plane_failures.size(); ++z)
      text << "plane " << z + 1 << " failures=" << rep.plane_failures[z] << "\n";
    text << (rep.total_failures == 0 ? "PASS" : "FAIL") << " total failures="
         << rep.total_failures << "\n";
    failed = rep.total_failures != 0;
  } else if (args.experiment == "faultpaths") {
    FaultPathReport rep = run_t_fault_paths({1, 1, args.nz});
    text << "faultpaths nz=" << args.nz << " locations=" << rep.locations
         << " cases=" << rep.cases_checked << " max-per-plane=" << rep.max_weight_per_plane
         << "\n";
    text << (rep.violations == 0 ? "PASS" : "FAIL") << " violations=" << rep.violations << "\n";
    failed = rep.violations != 0;
  } else {
    InhomogeneityModel model;
    model.generator = args.axis == "x"   ? RotationAxis::X
                      : args.axis == "y" ? RotationAxis::Y
                                         : RotationAxis::Z;
    auto pts = run_inhomogeneity(args.planes, model, parse_sweep(args.theta_list), seed);
    text << "theta0,pre_ec_infidelity,post_ec_infidelity\n";
    text.setf(std::ios::scientific);
    text.precision(6);
    for (const auto& p : pts)
      text << p.theta0 << "," << p.pre_ec_infidelity << "," << p.post_ec_infidelity << "\n";
  }
  write_output(out, text.str());
  return failed ? kExitDomain : kExitOk;
}

int cmd_resources(long shor_bits, const std::string& params_file, const std::string& format,
                  const std::string& out) {
  ResourceParams params;
  if (shor_bits > 0) {
    params = shor_params(shor_bits);
  } else {
    std::istringstream in(read_file(params_file));
    std::string line;
    while (std::getline(in, line)) {
      auto eq = line.find('=');
      if (eq == std::string::npos || line.empty() || line[0] == '#') continue;
      std::string key = line.substr(0, eq);
      double value = std::stod(line.substr(eq + 1));
      if (key == "n_c") params.n_c = static_cast<long>(value);
      else if (key == "epsilon") params.epsilon = value;
      else if (key == "p0") params.p0 = value;
      else if (key == "beta") params.beta = value;
      else if (key == "t") params.t_power = value;
      else if (key == "pulse_factor") params.pulse_factor = value;
      else throw Error("PARSE_ERROR", "unknown parameter " + key);
    }
  }
  ResourceReport report = resource_report(params);
  write_output(out, format == "csv" ? report.to_csv() : report.to_text());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-global fault-tolerance toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "text";
  std::string out;
  app.add_option("--seed", seed, "rng seed (default 0 for reproducible runs)");
  app.add_option("--jobs", jobs, "worker threads for trial sweeps");
  app.add_option("--format", format, "output format: text|csv")
      ->check(CLI::IsMember({"text", "csv"}));
  app.add_option("--out", out, "output file (default stdout)");

  std::string circuit_file;
  auto* validate_cmd = app.add_subcommand("validate", "check a circuit against the addressing rules");
  validate_cmd->add_option("circuit", circuit_file, "circuit file")->required();

  std::string lower_target = "physical";
  auto* lower_cmd = app.add_subcommand("lower", "flatten a circuit to gates");
  lower_cmd->add_option("circuit", circuit_file, "circuit file")->required();
  lower_cmd->add_option("--target", lower_target, "physical|2d")
      ->check(CLI::IsMember({"physical", "2d"}));

  SimArgs sim;
  auto* sim_cmd = app.add_subcommand("sim", "run a simulation experiment");
  sim_cmd->add_option("experiment", sim.experiment,
                      "mirror|memory|containment|faultpaths|inhomogeneity")
      ->required()
      ->check(CLI::IsMember({"mirror", "memory", "containment", "faultpaths", "inhomogeneity"}));
  sim_cmd->add_option("--code", sim.code, "bs9|qr3")->check(CLI::IsMember({"bs9", "qr3"}));
  sim_cmd->add_option("--p", sim.p_list, "physical rates: comma list or a:b:n log range");
  sim_cmd->add_option("--trials", sim.trials, "trials per sweep point");
  sim_cmd->add_option("--nz", sim.nz, "planes along z");
  sim_cmd->add_option("--planes", sim.planes, "encoded planes in the stack");
  sim_cmd->add_flag("--exhaustive", sim.exhaustive, "scan every column pauli");
  sim_cmd->add_option("--theta", sim.theta_list, "over-rotation sweep");
  sim_cmd->add_option("--axis", sim.axis, "rotation generator: x|y|z")
      ->check(CLI::IsMember({"x", "y", "z"}));

  long shor_bits = 0;
  std::string params_file;
  auto* res_cmd = app.add_subcommand("resources", "control-count scaling report");
  res_cmd->add_option("--shor-bits", shor_bits, "factoring instance size in bits");
  res_cmd->add_option("--params", params_file, "key=value parameter file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(circuit_file);
    if (lower_cmd->parsed()) return cmd_lower(circuit_file, lower_target, out);
    if (sim_cmd->parsed()) return cmd_sim(sim, seed, jobs, out);
    if (res_cmd->parsed()) {
      if (shor_bits <= 0 && params_file.empty()) {
        std::cerr << "resources needs --shor-bits or --params\n";
        return kExitUsage;
      }
      return cmd_resources(shor_bits, params_file, format, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == "PARSE_ERROR" || e.code() == "IO_ERROR" || e.code() == "USAGE")
      return kExitUsage;
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
