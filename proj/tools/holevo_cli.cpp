// Command-line front end: measure reports (JSON), Werner/GAD sweeps (CSV)
// and the self-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "holevo/channels.hpp"
#include "holevo/correlations.hpp"
#include "holevo/qstate.hpp"
#include "holevo/sweep.hpp"
#include "holevo/verify.hpp"

namespace {

using nlohmann::json;

constexpr double kCliWeakStrengthCap = 50.0;

int thread_cap_from_env() {
  const char* env = std::getenv("HOLEVO_THREADS");
  if (env == nullptr) return 0;
  try {
    const int n = std::stoi(env);
    if (n >= 1) return n;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid HOLEVO_THREADS='" << env << "'\n";
  return 0;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

json to_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;  // NaN also serializes as null
}

struct MeasuresArgs {
  std::vector<double> c;
  std::optional<double> werner_z;
  std::optional<double> werner_alpha;
  std::optional<double> x;
  std::string channel;
  std::optional<double> p;
  std::optional<double> gamma;
  bool allow_unphysical = false;
  std::string out;
};

holevo::ChannelSpec parse_channel(const MeasuresArgs& args) {
  using holevo::ChannelSpec;
  if (args.channel == "gad") {
    if (!args.gamma) throw std::invalid_argument("--channel gad needs --gamma");
    return ChannelSpec::gad(*args.gamma, args.p.value_or(0.5));
  }
  if (!args.p) {
    throw std::invalid_argument("--channel " + args.channel + " needs --p");
  }
  if (args.channel == "bf") return ChannelSpec::bit_flip(*args.p);
  if (args.channel == "pf") return ChannelSpec::phase_flip(*args.p);
  if (args.channel == "bpf") return ChannelSpec::bit_phase_flip(*args.p);
  if (args.channel == "depol1") return ChannelSpec::depolarizing1(*args.p);
  throw std::invalid_argument("unknown channel '" + args.channel + "'");
}

std::optional<holevo::WeakStrength> effective_strength(
    std::optional<double> x) {
  if (!x) return std::nullopt;
  double v = *x;
  if (v > kCliWeakStrengthCap) {
    std::cerr << "note: capping x at " << kCliWeakStrengthCap
              << " (tanh is saturated far earlier)\n";
    v = kCliWeakStrengthCap;
  }
  return holevo::WeakStrength(v);
}

int run_measures(const MeasuresArgs& args) {
  const int sources = (!args.c.empty() ? 1 : 0) + (args.werner_z ? 1 : 0) +
                      (args.werner_alpha ? 1 : 0);
  if (sources != 1) {
    throw std::invalid_argument(
        "provide exactly one of --c, --werner-z, --werner-alpha");
  }

  std::optional<holevo::WernerParams> werner;
  holevo::CorrelationTriple triple;
  if (!args.c.empty()) {
    if (args.c.size() != 3) {
      throw std::invalid_argument("--c expects three comma-separated values");
    }
    triple = {args.c[0], args.c[1], args.c[2]};
  } else {
    werner = args.werner_z ? holevo::WernerParams::from_z(*args.werner_z)
                           : holevo::WernerParams::from_alpha(*args.werner_alpha);
    triple = werner->triple();
  }

  const std::optional<holevo::WeakStrength> x = effective_strength(args.x);

  json input;
  input["c"] = {triple.c1, triple.c2, triple.c3};
  input["werner_z"] = werner ? json(werner->z()) : json(nullptr);
  input["werner_alpha"] = werner ? json(werner->alpha()) : json(nullptr);
  input["x"] = x ? json(x->x()) : json(nullptr);
  input["channel"] = args.channel.empty() ? json(nullptr) : json(args.channel);
  input["p"] = to_json(args.p);
  input["gamma"] = to_json(args.gamma);

  holevo::MeasureReport report;
  if (!args.channel.empty()) {
    const holevo::ChannelSpec spec = parse_channel(args);
    const holevo::CorrelationTriple moved = holevo::transformed_c(triple, spec);
    report = args.allow_unphysical ? holevo::measure_report_unchecked(moved, x)
                                   : holevo::measure_report(moved, x);
    input["transformed_c"] = {moved.c1, moved.c2, moved.c3};
  } else if (werner && !args.allow_unphysical) {
    report = holevo::measure_report(*werner, x);
  } else {
    report = args.allow_unphysical ? holevo::measure_report_unchecked(triple, x)
                                   : holevo::measure_report(triple, x);
  }

  json doc;
  doc["input"] = input;
  doc["mutual_information"] = report.mutual_information;
  doc["maximal_holevo"] = report.maximal_holevo;
  doc["classical_correlation"] = report.classical_correlation;
  doc["weak_maximal_holevo"] = to_json(report.weak_maximal_holevo);
  doc["super_classical_correlation"] =
      to_json(report.super_classical_correlation);
  doc["discord"] = report.discord;
  doc["super_discord"] = to_json(report.super_discord);
  doc["eof"] = to_json(report.eof);

  emit(doc.dump(2) + "\n", args.out);
  return 0;
}

struct SweepArgs {
  std::string z_grid = "0:1:0.01";
  std::string gamma_grid = "0.01:0.99:0.0196";
  std::vector<double> x_list;
  std::string out;
};

int run_sweep_werner(const SweepArgs& args) {
  const std::vector<double> z = holevo::parse_grid(args.z_grid);
  std::vector<double> xs = args.x_list;
  if (xs.empty()) xs = {0.25, 2.5};
  for (double& v : xs) v = std::min(v, kCliWeakStrengthCap);

  const auto rows = holevo::werner_sweep(z, xs);
  std::ostringstream os;
  holevo::write_csv(os, rows);
  emit(os.str(), args.out);
  return 0;
}

int run_gad_surface(const SweepArgs& args) {
  const std::vector<double> z = holevo::parse_grid(args.z_grid);
  const std::vector<double> gamma = holevo::parse_grid(args.gamma_grid);
  std::vector<double> xs = args.x_list;
  if (xs.empty()) xs = {0.5, 1.0};
  for (double& v : xs) v = std::min(v, kCliWeakStrengthCap);

  const auto rows = holevo::gad_surface(z, gamma, xs);
  std::ostringstream os;
  holevo::write_csv(os, rows);
  emit(os.str(), args.out);
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 20160331;
  int samples = 200;
  int grid_points = 20000;
  bool inject_fault = false;
  std::string out;
};

int run_verify(const VerifyArgs& args) {
  holevo::VerifyOptions opts;
  opts.seed = args.seed;
  opts.samples = args.samples;
  opts.grid_points = args.grid_points;
  opts.threads = thread_cap_from_env();
  if (args.inject_fault) opts.fault_scale_c = 1.001;

  const holevo::VerifyReport report = holevo::run_verification(opts);

  json doc;
  doc["seed"] = report.seed;
  doc["samples"] = report.samples;
  doc["all_passed"] = report.all_passed();
  json suites = json::array();
  for (const holevo::SuiteResult& s : report.suites) {
    json js;
    js["name"] = s.name;
    js["passed"] = s.passed;
    js["cases"] = s.cases;
    js["first_failure"] = s.passed ? json(nullptr) : json(s.first_failure);
    suites.push_back(js);
  }
  doc["suites"] = suites;

  emit(doc.dump(2) + "\n", args.out);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classical and quantum correlation measures of two-qubit "
      "Bell-diagonal states under projective and weak measurements"};
  app.require_subcommand(1);

  MeasuresArgs margs;
  CLI::App* measures =
      app.add_subcommand("measures", "Report every measure of one state (JSON)");
  measures->add_option("--c", margs.c,
                       "Correlation triple c1,c2,c3")->delimiter(',');
  measures->add_option("--werner-z", margs.werner_z, "Werner parameter z");
  measures->add_option("--werner-alpha", margs.werner_alpha,
                       "Werner parameter alpha");
  measures->add_option("--x", margs.x, "Weak measurement strength");
  measures->add_option("--channel", margs.channel,
                       "Decoherence channel: bf|pf|bpf|gad|depol1");
  measures->add_option("--p", margs.p, "Channel probability");
  measures->add_option("--gamma", margs.gamma, "GAD damping rate");
  measures->add_flag("--allow-unphysical", margs.allow_unphysical,
                     "Evaluate closed forms for non-physical triples");
  measures->add_option("--out", margs.out, "Output path (default stdout)");

  SweepArgs wargs;
  CLI::App* sweep = app.add_subcommand(
      "sweep-werner", "Werner-state measures over a z grid (CSV)");
  sweep->add_option("--z-grid", wargs.z_grid, "Grid start:stop:step");
  sweep->add_option("--x-list", wargs.x_list,
                    "Weak strengths (default 0.25,2.5)")->delimiter(',');
  sweep->add_option("--out", wargs.out, "Output path (default stdout)");

  SweepArgs gargs;
  gargs.z_grid = "0:1:0.02";
  CLI::App* gad = app.add_subcommand(
      "gad-surface", "Werner measures under GAD over (z, gamma) grids (CSV)");
  gad->add_option("--z-grid", gargs.z_grid, "Grid start:stop:step");
  gad->add_option("--gamma-grid", gargs.gamma_grid, "Grid start:stop:step");
  gad->add_option("--x-list", gargs.x_list,
                  "Weak strengths (default 0.5,1)")->delimiter(',');
  gad->add_option("--out", gargs.out, "Output path (default stdout)");

  VerifyArgs vargs;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the self-verification suites (JSON)");
  verify->add_option("--seed", vargs.seed, "Random seed");
  verify->add_option("--samples", vargs.samples, "Samples per random suite");
  verify->add_option("--grid-points", vargs.grid_points,
                     "Sphere grid size for the numeric oracle");
  verify->add_option("--out", vargs.out, "Output path (default stdout)");
  verify->add_flag("--inject-fault", vargs.inject_fault,
                   "Scale C by 1.001 in the closed forms (harness check)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*measures) return run_measures(margs);
    if (*sweep) return run_sweep_werner(wargs);
    if (*gad) return run_gad_surface(gargs);
    if (*verify) return run_verify(vargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
