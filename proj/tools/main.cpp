#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <clusterforge/clusterforge.hpp>

using namespace clusterforge;

namespace {

std::string read_file(const std::string& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Cluster and kappa arguments accept a file path or inline JSON text.
std::string load_text(const std::string& path_or_json) {
  if (!path_or_json.empty() && (path_or_json[0] == '{' || path_or_json[0] == '['))
    return path_or_json;
  return read_file(path_or_json, false);
}

void write_file(const std::string& path, const std::string& content, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw ValidationError("cannot write file '" + path + "'");
  out << content;
  if (!out) throw ValidationError("failed writing file '" + path + "'");
}

// CLUSTERFORGE_MAX_QUBITS raises or lowers the register cap; memory is the
// caller's problem beyond the default.
int max_qubits_from_env() {
  const char* env = std::getenv("CLUSTERFORGE_MAX_QUBITS");
  if (!env || !*env) return kDefaultMaxQubits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 34)
    throw ValidationError(
        "CLUSTERFORGE_MAX_QUBITS must be an integer between 1 and 34");
  return static_cast<int>(v);
}

struct Options {
  std::string cluster_path;
  std::string state_path;
  std::string kappa_path;
  std::string out_path;
  std::string model = "ising";
  bool binary_state = false;
  double jxx = 0.0, jyy = 0.0, jzz = 0.0;
};

std::optional<PulseSpec> pulse_from_flags(const CLI::App* cmd, const Options& opt,
                                          bool required) {
  const int given = static_cast<int>(cmd->count("--jxx")) +
                    static_cast<int>(cmd->count("--jyy")) +
                    static_cast<int>(cmd->count("--jzz"));
  if (given == 0 && !required) return std::nullopt;
  if (given != 3)
    throw ValidationError("--jxx, --jyy and --jzz must be given together");
  return PulseSpec{opt.jxx, opt.jyy, opt.jzz};
}

int run_build(const Options& opt, double tol, int max_qubits,
              const CLI::App* cmd) {
  const ParsedCluster parsed = parse_cluster_json(load_text(opt.cluster_path));
  const Model model = model_from_name(opt.model);
  const std::optional<PulseSpec> pulse =
      pulse_from_flags(cmd, opt, model == Model::sah);
  const BuildResult result =
      build_cluster_state(parsed.cluster, model, pulse, tol, max_qubits);
  std::optional<std::string> state_file;
  if (!opt.out_path.empty()) {
    write_file(opt.out_path,
               opt.binary_state ? write_state_binary(result.state)
                                : write_state_json(result.state),
               opt.binary_state);
    state_file = opt.out_path;
  }
  std::cout << write_build_json(result, state_file) << "\n";
  return 0;
}

int run_verify(const Options& opt, double tol, int max_qubits) {
  const ParsedCluster parsed = parse_cluster_json(load_text(opt.cluster_path));
  const std::string raw = read_file(opt.state_path, opt.binary_state);
  // The check is projective, so the input state is normalized on entry.
  const StateVector sv = opt.binary_state
                             ? parse_state_binary(raw, true, max_qubits)
                             : parse_state_json(raw, true, max_qubits);
  std::vector<int> kappa = parsed.kappa;
  if (!opt.kappa_path.empty())
    kappa = parse_kappa_json(load_text(opt.kappa_path));
  const VerificationReport report =
      verify_cluster_state(sv, parsed.cluster, kappa, tol);
  const std::string text = write_verification_json(report);
  if (!opt.out_path.empty()) write_file(opt.out_path, text + "\n", false);
  std::cout << text << "\n";
  return report.pass ? 0 : 1;
}

int run_schedule(const Options& opt) {
  const ParsedCluster parsed = parse_cluster_json(load_text(opt.cluster_path));
  const std::string text = write_schedule_json(generate_schedule(parsed.cluster));
  if (!opt.out_path.empty()) write_file(opt.out_path, text + "\n", false);
  std::cout << text << "\n";
  return 0;
}

int run_compare(const Options& opt, double tol, int max_qubits,
                const CLI::App* cmd) {
  const ParsedCluster parsed = parse_cluster_json(load_text(opt.cluster_path));
  const std::optional<PulseSpec> pulse = pulse_from_flags(cmd, opt, false);
  const CompareReport report =
      compare_builds(parsed.cluster, pulse, tol, max_qubits);
  const std::string text = write_compare_json(report);
  if (!opt.out_path.empty()) write_file(opt.out_path, text + "\n", false);
  std::cout << text << "\n";
  return report.pass ? 0 : 1;
}

int run_gate_check(const Options& opt, double tol) {
  std::string text;
  bool all_pass = true;
  for (const auto& check : gate_identity_checks(tol)) {
    text += write_identity_check_json(check);
    text += "\n";
    all_pass = all_pass && check.pass;
  }
  if (!opt.out_path.empty()) write_file(opt.out_path, text, false);
  std::cout << text;
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster-state construction and verification on cubic lattices"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* build = app.add_subcommand(
      "build", "build a cluster state and print build metadata");
  build->add_option("--cluster", opt.cluster_path, "cluster JSON file")->required();
  build->add_option("--model", opt.model, "ising, heisenberg or sah");
  build->add_option("--jxx", opt.jxx, "integrated xx coupling (radians)");
  build->add_option("--jyy", opt.jyy, "integrated yy coupling (radians)");
  build->add_option("--jzz", opt.jzz, "integrated zz coupling (radians)");
  build->add_option("--out", opt.out_path, "write the state to this file");
  build->add_flag("--binary-state", opt.binary_state,
                  "state export as raw doubles instead of JSON");
  double build_tol = kConditionTolerance;
  build->add_option("--tol", build_tol, "coupling condition tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand(
      "verify", "check stabilizer eigenvalues of a state against a cluster");
  verify->add_option("--cluster", opt.cluster_path, "cluster JSON file")->required();
  verify->add_option("--state", opt.state_path, "state file to verify")->required();
  verify->add_option("--kappa", opt.kappa_path,
                     "JSON list of target eigenvalue indices (qubit order)");
  verify->add_flag("--binary-state", opt.binary_state,
                   "state file holds raw doubles instead of JSON");
  verify->add_option("--out", opt.out_path, "also write the report to this file");
  double verify_tol = kVerifyTolerance;
  verify->add_option("--tol", verify_tol, "eigenvalue deviation tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App* schedule = app.add_subcommand(
      "schedule", "print the interaction schedule for a cluster");
  schedule->add_option("--cluster", opt.cluster_path, "cluster JSON file")->required();
  schedule->add_option("--out", opt.out_path, "also write the schedule to this file");

  CLI::App* compare = app.add_subcommand(
      "compare", "build with every model and cross-check the results");
  compare->add_option("--cluster", opt.cluster_path, "cluster JSON file")->required();
  compare->add_option("--jxx", opt.jxx, "integrated xx coupling (radians)");
  compare->add_option("--jyy", opt.jyy, "integrated yy coupling (radians)");
  compare->add_option("--jzz", opt.jzz, "integrated zz coupling (radians)");
  compare->add_option("--out", opt.out_path, "also write the report to this file");
  double compare_tol = kOverlapTolerance;
  compare->add_option("--tol", compare_tol, "overlap shortfall tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App* gate_check = app.add_subcommand(
      "gate-check", "print gate identity distances, one JSON object per line");
  gate_check->add_option("--out", opt.out_path, "also write the table to this file");
  double gate_tol = kIdentityTolerance;
  gate_check->add_option("--tol", gate_tol, "identity distance tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    const int max_qubits = max_qubits_from_env();
    if (app.got_subcommand(build)) return run_build(opt, build_tol, max_qubits, build);
    if (app.got_subcommand(verify)) return run_verify(opt, verify_tol, max_qubits);
    if (app.got_subcommand(schedule)) return run_schedule(opt);
    if (app.got_subcommand(compare))
      return run_compare(opt, compare_tol, max_qubits, compare);
    if (app.got_subcommand(gate_check)) return run_gate_check(opt, gate_tol);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
