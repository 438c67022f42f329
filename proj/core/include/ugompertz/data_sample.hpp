#ifndef UGOMPERTZ_DATA_SAMPLE_HPP_
#define UGOMPERTZ_DATA_SAMPLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace ugompertz {

// Observations on (0,1), sorted ascending. Ties are kept; `ties()` counts
// values equal to their predecessor after sorting.
class DataSample {
 public:
  // Throws ArgumentError if empty, DomainError (naming the offending index)
  // if any value is non-finite or outside (0,1).
  explicit DataSample(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t ties() const noexcept { return ties_; }
  double operator[](std::size_t i) const { return values_[i]; }

  double mean() const;

  // Linear interpolation between order statistics at position
  // level * (n - 1) (the "type 7" sample quantile). level in [0,1].
  double quantile(double level) const;

 private:
  std::vector<double> values_;
  std::size_t ties_ = 0;
};

}  // namespace ugompertz

#endif  // UGOMPERTZ_DATA_SAMPLE_HPP_
