#ifndef UGOMPERTZ_IO_HPP_
#define UGOMPERTZ_IO_HPP_

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ugompertz/data_sample.hpp"
#include "ugompertz/entropy.hpp"
#include "ugompertz/lmoments.hpp"
#include "ugompertz/truncated.hpp"
#include "ugompertz/unit_gompertz.hpp"
#include "ugompertz/verify.hpp"

namespace ugompertz {

// Version stamped into every JSON document as the top-level "schema".
inline constexpr int kJsonSchemaVersion = 1;

// Text format: one real per line. Blank lines and lines whose first
// non-blank character is '#' are ignored. Malformed lines raise DomainError
// naming `source`, the line number and the offending token. With
// `unit_interval` set, values outside (0,1) are rejected the same way.
std::vector<double> read_values(std::istream& in, std::string_view source,
                                bool unit_interval = false);

// Throws IoError if the file cannot be opened.
std::vector<double> read_values_file(const std::string& path,
                                     bool unit_interval = false);

DataSample read_sample_file(const std::string& path);

// Shortest form that still carries 17 significant digits.
std::string format_real(double v);

// One value per line at full precision.
void write_values(std::ostream& out, std::span<const double> values);

// Throws IoError if the file cannot be written.
void write_values_file(const std::string& path, std::span<const double> values);

// {"schema": 1, "params": params, "results": results}
nlohmann::json json_document(nlohmann::json params, nlohmann::json results);

nlohmann::json params_json(const UnitGompertz& d);

void to_json(nlohmann::json& j, const LMomentSet& lm);
void to_json(nlohmann::json& j, const FitResult& fit);
void to_json(nlohmann::json& j, const GofReport& report);
void to_json(nlohmann::json& j, const EntropyValue& e);
void to_json(nlohmann::json& j, const MonteCarloEstimate& mc);
void to_json(nlohmann::json& j, const OracleReport& r);

// Fixed-width human-readable table of a report battery.
void print_report_table(std::ostream& out,
                        const std::vector<OracleReport>& reports);

}  // namespace ugompertz

#endif  // UGOMPERTZ_IO_HPP_
