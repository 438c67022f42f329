#include "ugompertz/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ugompertz/errors.hpp"

namespace ugompertz {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_line(std::string_view source, std::size_t line,
                           std::string_view token, std::string_view why) {
  std::ostringstream os;
  os << source << ':' << line << ": " << why << " '" << token << "'";
  throw DomainError(os.str());
}

}  // namespace

std::vector<double> read_values(std::istream& in, std::string_view source,
                                bool unit_interval) {
  std::vector<double> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view token = trim(raw);
    if (token.empty() || token.front() == '#') continue;
    double v = 0.0;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
      bad_line(source, line, token, "not a real number:");
    }
    if (!std::isfinite(v)) bad_line(source, line, token, "not finite:");
    if (unit_interval && !(v > 0.0 && v < 1.0)) {
      bad_line(source, line, token, "value outside (0,1):");
    }
    out.push_back(v);
  }
  if (in.bad()) {
    throw IoError(std::string(source) + ": read failed");
  }
  return out;
}

std::vector<double> read_values_file(const std::string& path,
                                     bool unit_interval) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_values(in, path, unit_interval);
}

DataSample read_sample_file(const std::string& path) {
  auto values = read_values_file(path, true);
  if (values.empty()) {
    throw ArgumentError("'" + path + "' contains no observations");
  }
  return DataSample(std::move(values));
}

std::string format_real(double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_values(std::ostream& out, std::span<const double> values) {
  for (const double v : values) out << format_real(v) << '\n';
}

void write_values_file(const std::string& path,
                       std::span<const double> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_values(out, values);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

nlohmann::json json_document(nlohmann::json params, nlohmann::json results) {
  return {{"schema", kJsonSchemaVersion},
          {"params", std::move(params)},
          {"results", std::move(results)}};
}

nlohmann::json params_json(const UnitGompertz& d) {
  return {{"alpha", d.alpha()}, {"beta", d.beta()}};
}

void to_json(nlohmann::json& j, const LMomentSet& lm) {
  j = {{"lambda1", lm.lambda1}, {"lambda2", lm.lambda2},
       {"lambda3", lm.lambda3}, {"lambda4", lm.lambda4},
       {"tau2", lm.tau2},       {"tau3", lm.tau3},
       {"tau4", lm.tau4}};
  if (const auto* p = std::get_if<PopulationSource>(&lm.source)) {
    j["source"] = {
        {"kind", "population"}, {"alpha", p->alpha}, {"beta", p->beta}};
  } else {
    j["source"] = {{"kind", "sample"},
                   {"n", std::get<SampleSource>(lm.source).n}};
  }
}

void to_json(nlohmann::json& j, const FitResult& fit) {
  j = {{"alpha", fit.distribution.alpha()},
       {"beta", fit.distribution.beta()},
       {"residual", fit.diagnostics.residual},
       {"iterations", fit.diagnostics.iterations},
       {"starts", fit.diagnostics.starts},
       {"converged", fit.diagnostics.converged}};
}

void to_json(nlohmann::json& j, const GofReport& report) {
  nlohmann::json curve = nlohmann::json::array();
  for (const auto& p : report.curve) {
    curve.push_back({{"level", p.level},
                     {"x", p.x},
                     {"empirical", p.empirical},
                     {"theoretical", p.theoretical},
                     {"deviation", p.deviation}});
  }
  j = {{"statistic", report.statistic}, {"n", report.n}, {"curve", curve}};
}

void to_json(nlohmann::json& j, const EntropyValue& e) {
  j = {{"family", to_string(e.family)},
       {"gamma", e.gamma},
       {"method", to_string(e.method)},
       {"value", e.value},
       {"error_estimate", e.error_estimate}};
}

void to_json(nlohmann::json& j, const MonteCarloEstimate& mc) {
  j = {{"mean", mc.mean},
       {"std_error", mc.std_error},
       {"n", mc.n},
       {"seed", mc.seed}};
}

void to_json(nlohmann::json& j, const OracleReport& r) {
  j = {{"quantity", r.quantity},
       {"closed_form", r.closed_form},
       {"quadrature", r.quadrature},
       {"quadrature_error", r.quadrature_error},
       {"monte_carlo", nullptr},
       {"abs_diff", r.abs_diff},
       {"rel_diff", r.rel_diff},
       {"tolerance", r.tolerance},
       {"verdict", to_string(r.verdict)},
       {"informational", r.informational}};
  if (r.monte_carlo) j["monte_carlo"] = *r.monte_carlo;
  if (r.derived_closed_form) j["derived_closed_form"] = *r.derived_closed_form;
  if (!r.note.empty()) j["note"] = r.note;
}

void print_report_table(std::ostream& out,
                        const std::vector<OracleReport>& reports) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::left << std::setw(40) << "quantity" << std::right << std::setw(22)
      << "closed_form" << std::setw(22) << "quadrature" << std::setw(12)
      << "rel_diff" << "  verdict\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(40) << r.quantity << std::right
        << std::setprecision(15) << std::setw(22) << r.closed_form
        << std::setw(22) << r.quadrature << std::setprecision(3)
        << std::setw(12) << r.rel_diff << "  " << to_string(r.verdict);
    if (r.informational) out << " (informational)";
    out << '\n';
    if (r.derived_closed_form) {
      out << std::left << std::setw(40) << "  derived closed form" << std::right
          << std::setprecision(15) << std::setw(22) << *r.derived_closed_form
          << '\n';
    }
    if (r.monte_carlo) {
      out << std::left << std::setw(40) << "  monte carlo (mean, stderr)"
          << std::right << std::setprecision(15) << std::setw(22)
          << r.monte_carlo->mean << std::setw(22) << r.monte_carlo->std_error
          << '\n';
    }
    if (!r.note.empty()) out << "  note: " << r.note << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace ugompertz
