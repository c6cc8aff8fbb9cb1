#pragma once

#include <cstdint>
#include <vector>

#include "stabring/group.hpp"

namespace stabring {

/** Dense square integer matrix, row-major. */
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> data;

  std::int64_t& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

/** k x k half-graph adjacency: ones on and below the diagonal. */
IntMatrix half_graph_matrix(int k);

/** Its exact inverse: ones on the diagonal, -1 on the first subdiagonal. */
IntMatrix half_graph_inverse(int k);

IntMatrix int_matrix_product(const IntMatrix& a, const IntMatrix& b);
bool is_identity_matrix(const IntMatrix& m);

/**
 * Eigenvalues (ascending) of a symmetric tridiagonal matrix via Sturm-count
 * bisection.  `sub` holds the n-1 off-diagonal entries.  Deterministic, with
 * relative-width termination so small eigenvalues keep relative accuracy.
 */
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& sub);

struct HalfGraphSpectrum {
  int k = 0;
  std::vector<double> closed_form;  // descending singular values
  std::vector<double> numeric;      // same, from the tridiagonal eigensolver
  double trace_norm = 0.0;          // sum of singular values (closed form)
  double lower_bound = 0.0;         // (k/pi)(ln(k/c0) - 1/k)
};

/**
 * Singular values of the half-graph matrix.  Q^{-1} Q^{-T} is tridiagonal
 * with diagonal (1, 2, ..., 2) and off-diagonal -1, whose eigenvalues are
 * 4 cos^2(pi j / (2k+1)) for j = 1..k; hence sigma_j = 1/(2 cos(pi j/(2k+1))).
 * The numeric column recomputes the same values through the eigensolver and
 * serves as a cross-check (cost O(k^2); keep k modest when you need it).
 */
HalfGraphSpectrum half_graph_spectrum(int k);

/** Sum of the k closed-form singular values; O(k). */
double half_graph_trace_norm(int k);

/** Lower bound (k/pi)(ln(k/c0) - 1/k) on the trace norm; grows like k ln k. */
double trace_norm_lower_bound(int k);

/**
 * End-to-end inequality check for one subset: the stability index must stay
 * below c0*exp(pi*norm)+1, and the trace norm of the half-graph at the
 * maximal witnessed order must stay below order*norm.
 */
struct TheoremCheck {
  double norm = 0.0;
  int stability_index = 0;
  int max_order = 0;
  double index_bound = 0.0;         // c0 * exp(pi * norm) + 1
  bool index_ok = false;
  double witness_trace_norm = 0.0;  // trace norm at max_order (0 if order 0)
  double trace_cap = 0.0;           // max_order * norm
  bool trace_ok = false;
};

TheoremCheck theorem_inequality_check(const GroupSubset& a);

}  // namespace stabring
