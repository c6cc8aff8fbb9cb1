#include "stabring/halfgraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stabring/fourier.hpp"
#include "stabring/stability.hpp"

namespace stabring {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr int kDenseCap = 2048;  // dense builders are for exact small cases

void check_dense_size(int k) {
  if (k < 1) throw std::invalid_argument("half-graph: k must be >= 1");
  if (k > kDenseCap)
    throw std::invalid_argument("half-graph: dense matrix capped at k = 2048");
}

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

}  // namespace

IntMatrix half_graph_matrix(int k) {
  check_dense_size(k);
  IntMatrix m{k, std::vector<std::int64_t>(static_cast<std::size_t>(k) * k, 0)};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) m.at(i, j) = 1;
  return m;
}

IntMatrix half_graph_inverse(int k) {
  check_dense_size(k);
  IntMatrix m{k, std::vector<std::int64_t>(static_cast<std::size_t>(k) * k, 0)};
  for (int i = 0; i < k; ++i) {
    m.at(i, i) = 1;
    if (i > 0) m.at(i, i - 1) = -1;
  }
  return m;
}

IntMatrix int_matrix_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("int_matrix_product: size mismatch");
  const int n = a.n;
  IntMatrix out{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const std::int64_t v = a.at(i, l);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += v * b.at(l, j);
    }
  return out;
}

bool is_identity_matrix(const IntMatrix& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& sub) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  if (sub.size() + 1 != diag.size())
    throw std::invalid_argument("tridiagonal_eigenvalues: need n-1 off-diagonal entries");

  double lo = diag[0];
  double hi = diag[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(sub[i - 1]);
    if (i < n - 1) r += std::abs(sub[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double pad = 1e-12 * std::max(1.0, hi - lo);
  lo -= pad;
  hi += pad;

  constexpr double pivmin = 1e-290;
  const auto count_below = [&](double x) {
    int cnt = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++cnt;
    for (int i = 1; i < n; ++i) {
      if (std::abs(q) < pivmin) q = (q < 0.0 ? -pivmin : pivmin);
      q = diag[i] - x - sub[i - 1] * sub[i - 1] / q;
      if (q < 0.0) ++cnt;
    }
    return cnt;
  };

  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) {
    double a = lo;
    double b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (!(mid > a && mid < b)) break;
      if (count_below(mid) >= j + 1)
        b = mid;
      else
        a = mid;
      if (b - a <= 1e-15 * std::max(std::abs(a), std::abs(b))) break;
    }
    out[j] = 0.5 * (a + b);
  }
  return out;
}

HalfGraphSpectrum half_graph_spectrum(int k) {
  if (k < 1) throw std::invalid_argument("half_graph_spectrum: k must be >= 1");
  HalfGraphSpectrum s;
  s.k = k;
  s.closed_form.reserve(k);
  for (int j = k; j >= 1; --j)
    s.closed_form.push_back(1.0 / (2.0 * std::cos(kPi * j / (2.0 * k + 1.0))));

  std::vector<double> diag(static_cast<std::size_t>(k), 2.0);
  diag[0] = 1.0;
  std::vector<double> sub(static_cast<std::size_t>(k) - 1, -1.0);
  const std::vector<double> eig = tridiagonal_eigenvalues(diag, sub);
  s.numeric.reserve(k);
  for (double lambda : eig) s.numeric.push_back(1.0 / std::sqrt(lambda));

  s.trace_norm = half_graph_trace_norm(k);
  s.lower_bound = trace_norm_lower_bound(k);
  return s;
}

double half_graph_trace_norm(int k) {
  if (k < 1) throw std::invalid_argument("half_graph_trace_norm: k must be >= 1");
  Kahan total;
  for (int j = 1; j <= k; ++j)
    total.add(1.0 / (2.0 * std::cos(kPi * j / (2.0 * k + 1.0))));
  return total.s;
}

double trace_norm_lower_bound(int k) {
  if (k < 1) throw std::invalid_argument("trace_norm_lower_bound: k must be >= 1");
  const double fk = static_cast<double>(k);
  return fk / kPi * (std::log(fk / constants().c0) - 1.0 / fk);
}

TheoremCheck theorem_inequality_check(const GroupSubset& a) {
  TheoremCheck r;
  const NormReport nr = bg_norm(a);
  r.norm = nr.norm;
  const StabilityReport sr = stability_index(a);
  r.stability_index = sr.stability_index;
  r.max_order = sr.max_order;
  r.index_bound = stability_upper_bound(nr.norm);

  constexpr double slack = 1e-9;
  r.index_ok =
      static_cast<double>(r.stability_index) <= r.index_bound * (1.0 + slack);
  if (r.max_order >= 1) {
    r.witness_trace_norm = half_graph_trace_norm(r.max_order);
    r.trace_cap = r.max_order * nr.norm;
    r.trace_ok = r.witness_trace_norm <= r.trace_cap * (1.0 + slack) + slack;
  } else {
    r.trace_ok = true;
  }
  return r;
}

}  // namespace stabring
