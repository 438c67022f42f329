#include "ugompertz/lmoments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ugompertz/errors.hpp"
#include "ugompertz/special.hpp"

namespace ugompertz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Point = std::array<double, 2>;  // (log alpha, log beta)

struct Residuals {
  double r1;
  double r2;
  double norm() const { return std::hypot(r1, r2); }
};

class Objective {
 public:
  Objective(double lambda1, double lambda2) : l1_(lambda1), l2_(lambda2) {}

  bool in_bounds(const Point& u) const {
    const double a = std::exp(u[0]);
    const double b = std::exp(u[1]);
    return a >= kFitLowerBound && a <= kFitUpperBound && b >= kFitLowerBound &&
           b <= kFitUpperBound;
  }

  Residuals residuals(const Point& u) const {
    const UnitGompertz d(std::exp(u[0]), std::exp(u[1]));
    const double b0 = pwm(d, 0);
    const double b1 = pwm(d, 1);
    return {b0 / l1_ - 1.0, (2.0 * b1 - b0) / l2_ - 1.0};
  }

  double operator()(const Point& u) const {
    ++evaluations_;
    if (!in_bounds(u)) return kInf;
    try {
      const Residuals r = residuals(u);
      return r.r1 * r.r1 + r.r2 * r.r2;
    } catch (const Error&) {
      return kInf;
    }
  }

  int evaluations() const { return evaluations_; }

 private:
  double l1_;
  double l2_;
  mutable int evaluations_ = 0;
};

struct Vertex {
  Point u;
  double f;
};

// Plain Nelder-Mead; returns the best vertex and adds iterations to `iters`.
Vertex nelder_mead(const Objective& fn, Point start, double step, int max_iter,
                   int& iters) {
  std::array<Vertex, 3> s{{{start, fn(start)},
                           {{start[0] + step, start[1]}, 0.0},
                           {{start[0], start[1] + step}, 0.0}}};
  s[1].f = fn(s[1].u);
  s[2].f = fn(s[2].u);
  auto lerp = [](const Point& a, const Point& b, double t) {
    return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };
  for (int it = 0; it < max_iter; ++it) {
    ++iters;
    std::sort(s.begin(), s.end(),
              [](const Vertex& x, const Vertex& y) { return x.f < y.f; });
    if (s[0].f < 1e-30) break;
    if (std::isfinite(s[2].f) && s[2].f - s[0].f <= 1e-14 * s[0].f) break;
    const Point centroid{0.5 * (s[0].u[0] + s[1].u[0]),
                         0.5 * (s[0].u[1] + s[1].u[1])};
    const Point reflected = lerp(centroid, s[2].u, -1.0);
    const double fr = fn(reflected);
    if (fr < s[0].f) {
      const Point expanded = lerp(centroid, s[2].u, -2.0);
      const double fe = fn(expanded);
      s[2] = fe < fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
      continue;
    }
    if (fr < s[1].f) {
      s[2] = {reflected, fr};
      continue;
    }
    const bool outside = fr < s[2].f;
    const Point contracted =
        outside ? lerp(centroid, reflected, 0.5) : lerp(centroid, s[2].u, 0.5);
    const double fc = fn(contracted);
    if (fc < std::min(fr, s[2].f)) {
      s[2] = {contracted, fc};
      continue;
    }
    for (int k = 1; k < 3; ++k) {
      s[k].u = lerp(s[0].u, s[k].u, 0.5);
      s[k].f = fn(s[k].u);
    }
  }
  return *std::min_element(
      s.begin(), s.end(),
      [](const Vertex& x, const Vertex& y) { return x.f < y.f; });
}

// Newton on the 2x2 residual system with a forward-difference Jacobian and
// step halving. Returns the final point.
Point newton_polish(const Objective& fn, Point u, int& iters) {
  constexpr double kStep = 1e-7;
  Residuals r = fn.residuals(u);
  for (int it = 0; it < 50 && r.norm() > 1e-15; ++it) {
    ++iters;
    const Residuals ra = fn.residuals({u[0] + kStep, u[1]});
    const Residuals rb = fn.residuals({u[0], u[1] + kStep});
    const double j11 = (ra.r1 - r.r1) / kStep;
    const double j21 = (ra.r2 - r.r2) / kStep;
    const double j12 = (rb.r1 - r.r1) / kStep;
    const double j22 = (rb.r2 - r.r2) / kStep;
    const double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(det) || det == 0.0) break;
    const double du0 = -(j22 * r.r1 - j12 * r.r2) / det;
    const double du1 = -(-j21 * r.r1 + j11 * r.r2) / det;
    bool improved = false;
    for (double t = 1.0; t > 1e-6; t *= 0.5) {
      const Point trial{u[0] + t * du0, u[1] + t * du1};
      if (!fn.in_bounds(trial)) continue;
      Residuals rt;
      try {
        rt = fn.residuals(trial);
      } catch (const Error&) {
        continue;
      }
      if (rt.norm() < r.norm()) {
        u = trial;
        r = rt;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return u;
}

}  // namespace

LMomentSet LMomentSet::from_pwms(
    const std::array<double, 4>& b,
    std::variant<PopulationSource, SampleSource> src) {
  LMomentSet out;
  out.lambda1 = b[0];
  out.lambda2 = 2.0 * b[1] - b[0];
  out.lambda3 = 6.0 * b[2] - 6.0 * b[1] + b[0];
  out.lambda4 = 20.0 * b[3] - 30.0 * b[2] + 12.0 * b[1] - b[0];
  out.tau2 = out.lambda2 / out.lambda1;
  out.tau3 = out.lambda3 / out.lambda2;
  out.tau4 = out.lambda4 / out.lambda2;
  out.source = src;
  return out;
}

double pwm(const UnitGompertz& d, int r) {
  if (r < 0) throw ArgumentError("pwm: order r must be non-negative");
  const double k = r + 1.0;
  const double inv_b = 1.0 / d.beta();
  return std::exp(inv_b * d.log_alpha() + (inv_b - 1.0) * std::log(k) +
                  log_scaled_upper_inc_gamma(1.0 - inv_b, k * d.alpha()));
}

LMomentSet population_lmoments(const UnitGompertz& d) {
  return LMomentSet::from_pwms({pwm(d, 0), pwm(d, 1), pwm(d, 2), pwm(d, 3)},
                               PopulationSource{d.alpha(), d.beta()});
}

LMomentSet sample_lmoments(const DataSample& data) {
  const std::size_t n = data.size();
  if (n < 4) {
    std::ostringstream os;
    os << "sample_lmoments: need at least 4 observations, got " << n;
    throw ArgumentError(os.str());
  }
  const double nn = static_cast<double>(n);
  std::array<double, 4> b{};
  for (std::size_t idx = 0; idx < n; ++idx) {
    const double i = static_cast<double>(idx);  // (i+1) - 1 in 1-based terms
    const double x = data[idx];
    double w = 1.0;
    b[0] += x;
    w *= i / (nn - 1.0);
    b[1] += w * x;
    w *= (i - 1.0) / (nn - 2.0);
    b[2] += w * x;
    w *= (i - 2.0) / (nn - 3.0);
    b[3] += w * x;
  }
  for (auto& v : b) v /= nn;
  return LMomentSet::from_pwms(b, SampleSource{n});
}

FitResult fit_by_lmoments(const LMomentSet& target) {
  if (!(target.lambda1 > 0.0 && target.lambda1 < 1.0)) {
    throw ArgumentError("fit_by_lmoments: lambda1 must lie in (0,1)");
  }
  if (!(target.lambda2 > 0.0)) {
    throw ArgumentError("fit_by_lmoments: lambda2 must be positive");
  }
  const Objective fn(target.lambda1, target.lambda2);

  constexpr int kGrid = 5;
  const double lo = std::log(0.08);
  const double hi = std::log(12.0);
  std::vector<Vertex> candidates;
  int iterations = 0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const Point start{lo + (hi - lo) * i / (kGrid - 1),
                        lo + (hi - lo) * j / (kGrid - 1)};
      candidates.push_back(nelder_mead(fn, start, 0.3, 400, iterations));
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Vertex& x, const Vertex& y) { return x.f < y.f; });

  Point best = candidates.front().u;
  double best_residual = kInf;
  int starts = 0;
  for (const auto& c : candidates) {
    if (!std::isfinite(c.f) || starts == 5) break;
    ++starts;
    const Point u = newton_polish(fn, c.u, iterations);
    const double res = fn.residuals(u).norm();
    if (res < best_residual) {
      best_residual = res;
      best = u;
    }
    if (best_residual <= kFitTolerance) break;
  }

  const double alpha = std::exp(best[0]);
  const double beta = std::exp(best[1]);
  if (!(best_residual <= kFitTolerance) || !fn.in_bounds(best)) {
    std::ostringstream os;
    os << "fit_by_lmoments: no start reached residual " << kFitTolerance
       << " inside [" << kFitLowerBound << ", " << kFitUpperBound
       << "]^2; best residual " << best_residual;
    throw EstimationError(os.str(), alpha, beta, best_residual);
  }
  FitDiagnostics diag;
  diag.residual = best_residual;
  diag.iterations = iterations;
  diag.starts = starts;
  diag.converged = true;
  return {UnitGompertz(alpha, beta), diag};
}

FitResult fit_by_lmoments(const DataSample& data) {
  return fit_by_lmoments(sample_lmoments(data));
}

}  // namespace ugompertz
