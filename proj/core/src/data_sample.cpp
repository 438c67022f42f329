#include "ugompertz/data_sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ugompertz/errors.hpp"

namespace ugompertz {

DataSample::DataSample(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw ArgumentError("DataSample: at least one observation is required");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v <= 0.0 || v >= 1.0) {
      std::ostringstream os;
      os.precision(17);
      os << "DataSample: observation " << i << " (" << v
         << ") is outside the open interval (0,1)";
      throw DomainError(os.str());
    }
  }
  std::sort(values_.begin(), values_.end());
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == values_[i - 1]) ++ties_;
  }
}

double DataSample::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

double DataSample::quantile(double level) const {
  if (!(level >= 0.0 && level <= 1.0)) {
    throw DomainError("DataSample::quantile: level must lie in [0,1]");
  }
  const double pos = level * static_cast<double>(values_.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values_.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values_[lo] + frac * (values_[hi] - values_[lo]);
}

}  // namespace ugompertz
