#include "ugompertz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "ugompertz/errors.hpp"

namespace ugompertz {
namespace {

constexpr double kEpmach = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

double checked_eval(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrate: integrand is not finite at x = " << x;
    throw DomainError(os.str());
  }
  return y;
}

// QUADPACK qk15 with its error heuristic.
Panel gauss_kronrod15(const std::function<double(double)>& f, double a,
                      double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double fc = checked_eval(f, centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> fv1{};
  std::array<double, 7> fv2{};
  for (int j = 0; j < 7; ++j) {
    const double absc = hlgth * kXgk[j];
    const double f1 = checked_eval(f, centr - absc);
    const double f2 = checked_eval(f, centr + absc);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  const double width = std::abs(hlgth);
  resabs *= width;
  resasc *= width;
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  if (resabs > kUflow / (50.0 * kEpmach)) {
    abserr = std::max(kEpmach * 50.0 * resabs, abserr);
  }
  return {a, b, resk * hlgth, abserr};
}

std::vector<double> initial_breakpoints(double a, double b, int levels) {
  std::vector<double> pts{a};
  if (levels > 0) {
    const double m = 0.5 * (a + b);
    for (int k = levels; k >= 1; --k) {
      const double p = a + std::ldexp(m - a, -k);
      if (p > pts.back()) pts.push_back(p);
    }
    if (m > pts.back()) pts.push_back(m);
    for (int k = 1; k <= levels; ++k) {
      const double p = b - std::ldexp(b - m, -k);
      if (p > pts.back() && p < b) pts.push_back(p);
    }
  }
  pts.push_back(b);
  return pts;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ArgumentError("integrate: requires finite a < b");
  }
  std::priority_queue<Panel> active;
  double frozen_value = 0.0;
  double frozen_error = 0.0;
  int evaluations = 0;

  const auto pts = initial_breakpoints(a, b, options.endpoint_levels);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    active.push(gauss_kronrod15(f, pts[i], pts[i + 1]));
    evaluations += 15;
  }
  int panels = static_cast<int>(active.size());

  auto totals = [&] {
    double value = frozen_value;
    double error = frozen_error;
    auto copy = active;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  // Running sums, resynchronised from scratch every so often.
  auto [value, error] = totals();
  int since_resync = 0;
  while (true) {
    const double target =
        std::max(options.abs_tol, options.rel_tol * std::abs(value));
    if (error <= target) break;
    if (++since_resync == 64) {
      std::tie(value, error) = totals();
      since_resync = 0;
      if (error <= target) break;
    }
    if (active.empty() || panels >= options.max_panels) {
      std::ostringstream os;
      os << "integrate: error estimate " << error << " above tolerance "
         << target << " after " << panels << " panels";
      throw ConvergenceError(os.str(), value, error, panels);
    }
    const Panel worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) <
            100.0 * kEpmach * std::max(std::abs(worst.a), std::abs(worst.b))) {
      frozen_value += worst.value;
      frozen_error += worst.error;
      continue;
    }
    const Panel left = gauss_kronrod15(f, worst.a, mid);
    const Panel right = gauss_kronrod15(f, mid, worst.b);
    evaluations += 30;
    ++panels;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
  }
  std::tie(value, error) = totals();
  return {value, error, panels, evaluations};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol) {
  QuadratureOptions options;
  options.abs_tol = tol;
  return integrate(f, a, b, options);
}

}  // namespace ugompertz
