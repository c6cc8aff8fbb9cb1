#include "stabring/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stabring {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEulerGamma = 0.577215664901532860606512090082;

struct Kahan {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

struct GaussLegendre {
  std::vector<double> node;
  std::vector<double> weight;
};

// Order-64 Gauss-Legendre rule on [-1,1], nodes from Newton's method on the
// Legendre recurrence.  Computed once, reused by every quadrature call.
const GaussLegendre& gl64() {
  static const GaussLegendre rule = [] {
    constexpr int n = 64;
    GaussLegendre r;
    r.node.resize(n);
    r.weight.resize(n);
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int pass = 0; pass < 64; ++pass) {
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.node[i] = x;
      r.weight[i] = w;
      r.node[n - 1 - i] = -x;
      r.weight[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

// Tail of sum_{m > cut} ln m / (4m^2-1) as a midpoint-rule integral from
// x = cut + 1/2, expanding 1/(4t^2-1) = sum_{j>=1} (4t^2)^{-j} and using
// int_x^inf t^{-2j} ln t dt = x^{1-2j} (ln x/(2j-1) + 1/(2j-1)^2).
// Returns the integral; *err_bound receives midpoint + truncation error.
double log_term_tail(double cut, double* err_bound) {
  const double x = cut + 0.5;
  const double lx = std::log(x);
  double pw = 1.0 / (4.0 * x);  // 4^{-j} x^{1-2j} at j = 1
  double integral = 0.0;
  double term = 0.0;
  for (int j = 1; j <= 30; ++j) {
    const double odd = 2.0 * j - 1.0;
    term = pw * (lx / odd + 1.0 / (odd * odd));
    integral += term;
    pw /= 4.0 * x * x;
    if (term < 1e-30) break;
  }
  // |f''(t)| <= 3 ln t / t^4 for t >= 14, so the midpoint error is at most
  // (1/24) int_x^inf 3 ln t / t^4 dt = (3 ln x + 1) / (72 x^3).
  *err_bound = (3.0 * lx + 1.0) / (72.0 * x * x * x) + term;
  return integral;
}

}  // namespace

NormReport bg_norm(const GroupSubset& a) {
  std::vector<double> mags = dft_magnitudes(a);
  Kahan total;
  for (double m : mags) total.add(m);
  const double n = static_cast<double>(a.group().order());
  return NormReport{a, total.s / n, std::move(mags)};
}

double interval_norm_quadrature(int k) {
  if (k < 1) throw std::invalid_argument("interval_norm_quadrature: k must be >= 1");
  const GaussLegendre& rule = gl64();
  Kahan total;
  for (int arch = 0; arch < k; ++arch) {
    for (std::size_t i = 0; i < rule.node.size(); ++i) {
      const double theta = (arch + 0.5 * (rule.node[i] + 1.0)) / k;
      const double value =
          std::abs(std::sin(kPi * k * theta)) / std::sin(kPi * theta);
      total.add(rule.weight[i] * value);
    }
  }
  return total.s / (2.0 * k);
}

double szego_series(int k, double tol) {
  if (k < 1) throw std::invalid_argument("szego_series: k must be >= 1");
  if (!(tol >= 1e-11))
    throw std::invalid_argument("szego_series: tol must be >= 1e-11");

  const double scale = 16.0 / (kPi * kPi);
  const double float_margin = 1e-12;  // compensated-summation roundoff budget
  const double raw_tol = (tol - float_margin) / scale;

  // Exact leading terms: compute H_{mk} and H_{2mk} incrementally while the
  // harmonic index stays small enough to sum directly.
  const std::int64_t kk = k;
  const std::int64_t m0 = std::min<std::int64_t>(500000 / kk, 500000);
  Kahan head;
  {
    Kahan h1;  // H_{m k}
    Kahan h2;  // H_{2 m k}
    std::int64_t p1 = 0;
    std::int64_t p2 = 0;
    for (std::int64_t m = 1; m <= m0; ++m) {
      const std::int64_t n1 = m * kk;
      const std::int64_t n2 = 2 * n1;
      while (p1 < n1) h1.add(1.0 / static_cast<double>(++p1));
      while (p2 < n2) h2.add(1.0 / static_cast<double>(++p2));
      const double num = h2.s - 0.5 * h1.s;
      head.add(num / ((4.0 * m) * m - 1.0));
    }
  }

  // Remaining terms use H_{2n} - H_n/2 = (ln 4n + gamma)/2 + delta_n with
  // 0 < delta_n < 1/(32 n^2); take the midpoint 1/(64 n^2) and certify the
  // half-width.  The far tail splits into an exact telescoping constant part
  // and an integral-comparison logarithmic part.
  for (std::int64_t m1 = std::max<std::int64_t>(4096, m0); m1 <= (1 << 26);
       m1 *= 4) {
    Kahan mid;
    double err = 0.0;
    for (std::int64_t m = m0 + 1; m <= m1; ++m) {
      const double n = static_cast<double>(m) * k;
      const double denom = (4.0 * m) * m - 1.0;
      mid.add((0.5 * (std::log(4.0 * n) + kEulerGamma) + 1.0 / (64.0 * n * n)) /
              denom);
      err += 1.0 / (64.0 * n * n * denom);
    }
    const double fm1 = static_cast<double>(m1);
    const double s_const = 1.0 / (2.0 * (2.0 * fm1 + 1.0));
    double log_err = 0.0;
    const double s_log = log_term_tail(fm1, &log_err);
    // delta contribution past m1: in (0, B) with B <= 1/(288 k^2 m1^3).
    const double delta_cap =
        1.0 / (288.0 * static_cast<double>(k) * k * fm1 * fm1 * fm1);
    const double total_err = err + 0.5 * log_err + 0.5 * delta_cap;
    if (total_err <= raw_tol) {
      double total = head.s + mid.s;
      total += 0.5 * (std::log(4.0 * k) + kEulerGamma) * s_const;
      total += 0.5 * s_log;
      total += 0.5 * delta_cap;
      return scale * total;
    }
  }
  throw std::runtime_error("szego_series: could not certify requested tolerance");
}

double harmonic(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("harmonic: n must be >= 0");
  Kahan s;
  for (std::int64_t i = 1; i <= n; ++i) s.add(1.0 / static_cast<double>(i));
  return s.s;
}

std::pair<double, double> toth_bounds(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("toth_bounds: n must be >= 1");
  const double fn = static_cast<double>(n);
  return {1.0 / (2.0 * fn + 0.4), 1.0 / (2.0 * fn + 1.0 / 3.0)};
}

double singer_norm_closed_form(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("singer_norm_closed_form: q must be >= 2");
  const double n = static_cast<double>(q * q + q + 1);
  return static_cast<double>(q + 1) / n +
         static_cast<double>(q * q + q) / n * std::sqrt(static_cast<double>(q));
}

double stability_upper_bound(double m_norm) {
  if (!(m_norm >= 0.0))
    throw std::invalid_argument("stability_upper_bound: norm must be >= 0");
  return constants().c0 * std::exp(kPi * m_norm) + 1.0;
}

double log_weight_sum() {
  static const double value = [] {
    constexpr std::int64_t cut = 1000000;
    Kahan s;
    for (std::int64_t m = 2; m <= cut; ++m)
      s.add(std::log(static_cast<double>(m)) / ((4.0 * m) * m - 1.0));
    double err = 0.0;
    s.add(log_term_tail(static_cast<double>(cut), &err));
    // err ~ 6e-18 here, far below the double ulp of the ~0.24 result.
    return s.s;
  }();
  return value;
}

const ConstantsTable& constants() {
  static const ConstantsTable table = [] {
    ConstantsTable t;
    t.euler_gamma = kEulerGamma;
    t.c0 = std::exp(-kEulerGamma) * kPi / 16.0;
    const double s = log_weight_sum();
    t.c1 = 0.25 * std::exp(-kEulerGamma) * std::exp(-2.0 * s);
    t.c1_over_c0 = 4.0 / kPi * std::exp(-2.0 * s);
    return t;
  }();
  return table;
}

}  // namespace stabring
