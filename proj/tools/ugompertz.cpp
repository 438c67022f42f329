// Command-line front end: eval, sample, fit, lmom, entropy, gof,
// reconstruct and verify.
//
// Exit status: 0 success, 1 domain or usage error, 2 numerical failure
// (convergence, estimation, disagreeing verification), 3 I/O error.

#include "ugompertz/ugompertz.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
namespace ug = ugompertz;

enum ExitCode { kOk = 0, kUsage = 1, kNumerical = 2, kIo = 3 };

// Thrown after a result has been written but the run still failed.
struct ExitWith {
  int code;
};

struct Options {
  double alpha = 0.0;
  double beta = 0.0;
  std::string input;
  std::string out;
  std::string format;
  std::uint64_t seed = 1;
};

// Writes `text` to `path`, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw ug::IoError("write to standard output failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ug::IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw ug::IoError("write to '" + path + "' failed");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha,-a", o.alpha, "Shape alpha > 0")->required();
  cmd->add_option("--beta,-b", o.beta, "Shape beta > 0")->required();
}

void add_out(CLI::App* cmd, Options& o) {
  cmd->add_option("--out,-o", o.out, "Output file (default: stdout)");
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> choices) {
  o.format = choices.front();
  cmd->add_option("--format,-f", o.format, "Output format")
      ->check(CLI::IsMember(std::move(choices)))
      ->capture_default_str();
}

// ---------------------------------------------------------------- eval

using Evaluator = std::function<double(const ug::UnitGompertz&, double)>;

const std::map<std::string, Evaluator>& evaluators() {
  static const std::map<std::string, Evaluator> table{
      {"pdf", [](const auto& d, double x) { return d.pdf(x); }},
      {"log-pdf", [](const auto& d, double x) { return d.log_pdf(x); }},
      {"cdf", [](const auto& d, double x) { return d.cdf(x); }},
      {"survival", [](const auto& d, double x) { return d.survival(x); }},
      {"quantile", [](const auto& d, double u) { return d.quantile(u); }},
      {"hazard", [](const auto& d, double x) { return ug::hazard(d, x); }},
      {"reversed-hazard",
       [](const auto& d, double x) { return ug::reversed_hazard(d, x); }},
      {"g", [](const auto& d, double x) { return ug::g_factor(d, x); }},
      {"h", [](const auto& d, double x) { return ug::h_factor(d, x); }},
      {"trunc-below",
       [](const auto& d, double x) { return ug::truncated_mean_below(d, x); }},
      {"trunc-above",
       [](const auto& d, double x) { return ug::truncated_mean_above(d, x); }},
  };
  return table;
}

std::vector<std::string> evaluator_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : evaluators()) names.push_back(name);
  return names;
}

// --x tokens go through the file reader so that errors name the position.
std::vector<double> parse_tokens(const std::vector<std::string>& tokens) {
  std::ostringstream joined;
  for (const auto& t : tokens) joined << t << '\n';
  std::istringstream in(joined.str());
  return ug::read_values(in, "--x");
}

struct EvalArgs {
  Options o;
  std::string which = "pdf";
  std::vector<std::string> x;
};

int run_eval(const EvalArgs& a) {
  const ug::UnitGompertz d(a.o.alpha, a.o.beta);
  const std::vector<double> xs =
      a.o.input.empty() ? parse_tokens(a.x) : ug::read_values_file(a.o.input);
  if (xs.empty()) throw ug::ArgumentError("eval: no input values");
  const Evaluator& fn = evaluators().at(a.which);
  std::vector<double> values;
  values.reserve(xs.size());
  for (const double x : xs) values.push_back(fn(d, x));

  if (a.o.format == "json") {
    json pairs = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      pairs.push_back({xs[i], values[i]});
    }
    json params = ug::params_json(d);
    params["which"] = a.which;
    emit(a.o.out, dump(ug::json_document(params, pairs)));
  } else {
    std::string text = "x,value\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      text += ug::format_real(xs[i]) + ',' + ug::format_real(values[i]) + '\n';
    }
    emit(a.o.out, text);
  }
  return kOk;
}

// -------------------------------------------------------------- sample

struct SampleArgs {
  Options o;
  std::size_t n = 0;
};

int run_sample(const SampleArgs& a) {
  const ug::UnitGompertz d(a.o.alpha, a.o.beta);
  if (a.n == 0) throw ug::ArgumentError("sample: --n must be at least 1");
  const auto values = ug::draw(d, a.n, a.o.seed);
  std::ostringstream os;
  ug::write_values(os, values);
  emit(a.o.out, os.str());
  return kOk;
}

// ----------------------------------------------------------- fit, lmom

int run_fit(const Options& o) {
  const ug::DataSample data = ug::read_sample_file(o.input);
  const ug::LMomentSet lm = ug::sample_lmoments(data);
  const json params{{"input", o.input}, {"n", data.size()}};
  json results;
  int code = kOk;
  std::string message;
  try {
    results = ug::fit_by_lmoments(lm);
  } catch (const ug::EstimationError& e) {
    results = {{"alpha", e.alpha()},
               {"beta", e.beta()},
               {"residual", e.residual()},
               {"converged", false},
               {"error", e.what()}};
    code = kNumerical;
    message = e.what();
  }
  results["sample_lmoments"] = lm;
  emit(o.out, dump(ug::json_document(params, results)));
  if (code != kOk) {
    std::cerr << "ugompertz: " << message << '\n';
    throw ExitWith{code};
  }
  return kOk;
}

struct LmomArgs {
  Options o;
  std::optional<double> alpha;
  std::optional<double> beta;
};

int run_lmom(const LmomArgs& a) {
  ug::LMomentSet lm;
  json params;
  if (!a.o.input.empty()) {
    if (a.alpha || a.beta) {
      throw ug::ArgumentError("lmom: give either --input or --alpha/--beta");
    }
    const ug::DataSample data = ug::read_sample_file(a.o.input);
    lm = ug::sample_lmoments(data);
    params = {{"input", a.o.input}, {"n", data.size()}};
  } else {
    if (!a.alpha || !a.beta) {
      throw ug::ArgumentError("lmom: need --input, or both --alpha and --beta");
    }
    const ug::UnitGompertz d(*a.alpha, *a.beta);
    lm = ug::population_lmoments(d);
    params = ug::params_json(d);
  }
  if (a.o.format == "csv") {
    std::string text = "quantity,value\n";
    const std::pair<const char*, double> rows[] = {
        {"lambda1", lm.lambda1}, {"lambda2", lm.lambda2},
        {"lambda3", lm.lambda3}, {"lambda4", lm.lambda4},
        {"tau2", lm.tau2},       {"tau3", lm.tau3},
        {"tau4", lm.tau4}};
    for (const auto& [name, v] : rows) {
      text += std::string(name) + ',' + ug::format_real(v) + '\n';
    }
    emit(a.o.out, text);
  } else {
    emit(a.o.out, dump(ug::json_document(params, lm)));
  }
  return kOk;
}

// ------------------------------------------------------------- entropy

struct EntropyArgs {
  Options o;
  std::string family = "tsallis";
  std::vector<double> gammas;
  std::string method = "closed-form";
  std::string mh_formula = "derived";
};

int run_entropy(const EntropyArgs& a) {
  const ug::UnitGompertz d(a.o.alpha, a.o.beta);
  std::vector<ug::EntropyMethod> methods;
  if (a.method != "quadrature")
    methods.push_back(ug::EntropyMethod::closed_form);
  if (a.method != "closed-form")
    methods.push_back(ug::EntropyMethod::quadrature);
  const auto formula = a.mh_formula == "published"
                           ? ug::MhFormula::published_formula
                           : ug::MhFormula::derived;
  std::vector<ug::EntropyValue> values;
  for (const double g : a.gammas) {
    for (const auto m : methods) {
      values.push_back(a.family == "tsallis"
                           ? ug::tsallis(d, g, m)
                           : ug::mathai_haubold(d, g, m, formula));
    }
  }
  if (a.o.format == "json") {
    json params = ug::params_json(d);
    if (a.family == "mh") params["mh_formula"] = a.mh_formula;
    emit(a.o.out, dump(ug::json_document(params, values)));
  } else {
    std::string text = "family,gamma,method,value,error_estimate\n";
    for (const auto& v : values) {
      text += std::string(ug::to_string(v.family)) + ',' +
              ug::format_real(v.gamma) + ',' +
              std::string(ug::to_string(v.method)) + ',' +
              ug::format_real(v.value) + ',' +
              ug::format_real(v.error_estimate) + '\n';
    }
    emit(a.o.out, text);
  }
  return kOk;
}

// ----------------------------------------------------------------- gof

struct GofArgs {
  Options o;
  int n_eval = 9;
};

int run_gof(const GofArgs& a) {
  const ug::DataSample data = ug::read_sample_file(a.o.input);
  if (data.size() < ug::kMinGofSample) {
    throw ug::ArgumentError(
        "gof: need at least " + std::to_string(ug::kMinGofSample) +
        " observations, got " + std::to_string(data.size()));
  }
  // Data the family cannot match still gets a statistic, computed at the
  // best parameters the fit found.
  json fit_json;
  std::optional<ug::UnitGompertz> fitted;
  try {
    const ug::FitResult fit = ug::fit_by_lmoments(data);
    fitted = fit.distribution;
    fit_json = fit;
  } catch (const ug::EstimationError& e) {
    fitted.emplace(e.alpha(), e.beta());
    fit_json = {{"alpha", e.alpha()},
                {"beta", e.beta()},
                {"residual", e.residual()},
                {"converged", false},
                {"error", e.what()}};
  }
  const ug::GofReport report =
      ug::characterization_gof(data, *fitted, a.n_eval);
  const json params{
      {"input", a.o.input}, {"n", data.size()}, {"n_eval", a.n_eval}};
  const json results{{"fit", fit_json}, {"gof", report}};
  emit(a.o.out, dump(ug::json_document(params, results)));
  return kOk;
}

// --------------------------------------------------------- reconstruct

struct ReconstructArgs {
  Options o;
  std::string from = "g";
  int grid = 99;
  double quad_tol = 1e-6;
};

int run_reconstruct(const ReconstructArgs& a) {
  const ug::UnitGompertz d(a.o.alpha, a.o.beta);
  const auto result = a.from == "g"
                          ? ug::reconstruct_density_from_g(
                                [&](double x) { return ug::g_factor(d, x); },
                                a.grid, a.quad_tol, d)
                          : ug::reconstruct_density_from_h(
                                [&](double x) { return ug::h_factor(d, x); },
                                a.grid, a.quad_tol, d);
  if (a.o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < result.grid.size(); ++i) {
      rows.push_back(
          {result.grid[i], result.density_values[i], d.pdf(result.grid[i])});
    }
    json params = ug::params_json(d);
    params["from"] = a.from;
    params["grid"] = a.grid;
    params["quad_tol"] = a.quad_tol;
    const json results{
        {"normalization_constant", result.normalization_constant},
        {"max_rel_error_vs_closed_form",
         result.max_rel_error_vs_closed_form.value_or(0.0)},
        {"rows", rows}};
    emit(a.o.out, dump(ug::json_document(params, results)));
  } else {
    std::string text = "x,reconstructed,closed_form\n";
    for (std::size_t i = 0; i < result.grid.size(); ++i) {
      text += ug::format_real(result.grid[i]) + ',' +
              ug::format_real(result.density_values[i]) + ',' +
              ug::format_real(d.pdf(result.grid[i])) + '\n';
    }
    emit(a.o.out, text);
  }
  return kOk;
}

// -------------------------------------------------------------- verify

struct VerifyArgs {
  Options o;
  std::size_t mc_draws = ug::VerifyConfig{}.mc_draws;
  bool no_published = false;
};

int run_verify(const VerifyArgs& a) {
  const ug::UnitGompertz d(a.o.alpha, a.o.beta);
  ug::VerifyConfig config;
  config.mc_draws = a.mc_draws;
  config.seed = a.o.seed;
  config.mh_published_comparison = !a.no_published;
  const auto reports = ug::verify_all(d, config);
  const bool ok = ug::all_agree(reports);
  if (a.o.format == "json") {
    json params = ug::params_json(d);
    params["mc_draws"] = a.mc_draws;
    params["seed"] = a.o.seed;
    const json results{{"all_agree", ok}, {"reports", reports}};
    emit(a.o.out, dump(ug::json_document(params, results)));
  } else {
    std::ostringstream os;
    ug::print_report_table(os, reports);
    os << (ok ? "all checks agree\n" : "some checks do not agree\n");
    emit(a.o.out, os.str());
  }
  if (!ok) throw ExitWith{kNumerical};
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit-Gompertz distribution toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ugompertz 0.1.0");

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Evaluate a function at points");
  add_params(c_eval, eval.o);
  c_eval->add_option("--which,-w", eval.which, "Function to evaluate")
      ->check(CLI::IsMember(evaluator_names()))
      ->capture_default_str();
  auto* x_opt = c_eval->add_option("--x,-x", eval.x, "Points (or levels)")
                    ->delimiter(',');
  auto* in_opt = c_eval->add_option("--input,-i", eval.o.input,
                                    "File of points, one per line");
  x_opt->excludes(in_opt);
  add_out(c_eval, eval.o);
  add_format(c_eval, eval.o, {"csv", "json"});

  SampleArgs sample;
  auto* c_sample = app.add_subcommand("sample", "Draw a seeded sample");
  add_params(c_sample, sample.o);
  c_sample->add_option("--n,-n", sample.n, "Number of draws")->required();
  c_sample->add_option("--seed,-s", sample.o.seed, "Random seed")
      ->capture_default_str();
  add_out(c_sample, sample.o);

  Options fit;
  auto* c_fit = app.add_subcommand("fit", "Fit (alpha, beta) by L-moments");
  c_fit->add_option("--input,-i", fit.input, "Sample file")->required();
  add_out(c_fit, fit);

  LmomArgs lmom;
  auto* c_lmom = app.add_subcommand(
      "lmom", "L-moments of a sample file or of the distribution");
  c_lmom->add_option("--alpha,-a", lmom.alpha, "Shape alpha > 0");
  c_lmom->add_option("--beta,-b", lmom.beta, "Shape beta > 0");
  c_lmom->add_option("--input,-i", lmom.o.input, "Sample file");
  add_out(c_lmom, lmom.o);
  add_format(c_lmom, lmom.o, {"json", "csv"});

  EntropyArgs entropy;
  auto* c_entropy =
      app.add_subcommand("entropy", "Tsallis or Mathai-Haubold entropy");
  add_params(c_entropy, entropy.o);
  c_entropy->add_option("--family", entropy.family)
      ->check(CLI::IsMember({"tsallis", "mh"}))
      ->capture_default_str();
  c_entropy->add_option("--gamma,-g", entropy.gammas, "Orders")
      ->required()
      ->delimiter(',');
  c_entropy->add_option("--method", entropy.method)
      ->check(CLI::IsMember({"closed-form", "quadrature", "both"}))
      ->capture_default_str();
  c_entropy
      ->add_option("--mh-formula", entropy.mh_formula,
                   "Mathai-Haubold closed form: derived, or the published "
                   "display")
      ->check(CLI::IsMember({"derived", "published"}))
      ->capture_default_str();
  add_out(c_entropy, entropy.o);
  add_format(c_entropy, entropy.o, {"csv", "json"});

  GofArgs gof;
  auto* c_gof = app.add_subcommand(
      "gof", "Fit, then compare empirical and fitted truncated means");
  c_gof->add_option("--input,-i", gof.o.input, "Sample file")->required();
  c_gof->add_option("--n-eval", gof.n_eval, "Evaluation points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_out(c_gof, gof.o);

  ReconstructArgs rec;
  auto* c_rec = app.add_subcommand(
      "reconstruct", "Rebuild the density from the g or h factor");
  add_params(c_rec, rec.o);
  c_rec->add_option("--from", rec.from)
      ->check(CLI::IsMember({"g", "h"}))
      ->capture_default_str();
  c_rec->add_option("--grid", rec.grid, "Number of grid midpoints")
      ->capture_default_str();
  c_rec->add_option("--quad-tol", rec.quad_tol, "Quadrature tolerance")
      ->capture_default_str();
  add_out(c_rec, rec.o);
  add_format(c_rec, rec.o, {"csv", "json"});

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand(
      "verify", "Check closed forms against quadrature and Monte Carlo");
  add_params(c_verify, verify.o);
  c_verify->add_option("--mc-draws", verify.mc_draws, "0 disables")
      ->capture_default_str();
  c_verify->add_option("--seed,-s", verify.o.seed)->capture_default_str();
  verify.o.seed = ug::VerifyConfig{}.seed;
  c_verify->add_flag("--no-published-comparison", verify.no_published,
                     "Skip the published MH formula comparison");
  add_out(c_verify, verify.o);
  add_format(c_verify, verify.o, {"table", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c_eval) return run_eval(eval);
    if (*c_sample) return run_sample(sample);
    if (*c_fit) return run_fit(fit);
    if (*c_lmom) return run_lmom(lmom);
    if (*c_entropy) return run_entropy(entropy);
    if (*c_gof) return run_gof(gof);
    if (*c_rec) return run_reconstruct(rec);
    if (*c_verify) return run_verify(verify);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const ug::IoError& e) {
    std::cerr << "ugompertz: " << e.what() << '\n';
    return kIo;
  } catch (const ug::DomainError& e) {
    std::cerr << "ugompertz: " << e.what() << '\n';
    return kUsage;
  } catch (const ug::ArgumentError& e) {
    std::cerr << "ugompertz: " << e.what() << '\n';
    return kUsage;
  } catch (const ug::Error& e) {
    std::cerr << "ugompertz: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
