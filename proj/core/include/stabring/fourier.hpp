#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stabring/group.hpp"

namespace stabring {

/**
 * Norm of an indicator function in the Fourier algebra of a finite abelian
 * group.  The representing measure on the dual is atomic and unique, so the
 * norm is exactly (1/|G|) * sum over characters of |sum_{x in A} chi(x)|.
 */
struct NormReport {
  GroupSubset subset;
  double norm;
  std::vector<double> per_character;  // |character_sum|, character-index order
};

NormReport bg_norm(const GroupSubset& a);

/**
 * Exact norm of the length-k integer interval {1, ..., k}:
 * integral over [0,1] of |sin(pi k t)| / sin(pi t) dt.  Evaluated with
 * fixed-order Gauss-Legendre on each of the k arches between consecutive
 * zeros of the numerator; interior nodes never touch the endpoint
 * singularities of the quotient.  Absolute accuracy ~1e-12 over desk scale.
 */
double interval_norm_quadrature(int k);

/**
 * The same quantity via the series
 *   (16/pi^2) * sum_{m>=1} (H_{2mk} - H_{mk}/2) / (4m^2 - 1),
 * evaluated to certified absolute error < tol (tol >= 1e-11).  Leading terms
 * are summed with exact compensated harmonic numbers; the remainder uses the
 * bracket 0 < H_{2n} - H_n/2 - (ln 4n + gamma)/2 < 1/(32 n^2) and an
 * integral-comparison tail, with every estimation error accumulated into a
 * certified bound that is required to stay below tol.
 */
double szego_series(int k, double tol);

/** Compensated (Kahan) partial sum of the harmonic series. */
double harmonic(std::int64_t n);

/**
 * Enclosure of H_n - ln n - gamma: returns {1/(2n + 2/5), 1/(2n + 1/3)},
 * a strict lower/upper bound pair for every n >= 1.
 */
std::pair<double, double> toth_bounds(std::int64_t n);

/**
 * Norm of the Singer difference set inside Z/(q^2+q+1):
 * (q+1)/n + ((q^2+q)/n) * sqrt(q) with n = q^2+q+1, exact because every
 * nontrivial character sum of a perfect difference set has |.|^2 = q.
 */
double singer_norm_closed_form(std::int64_t q);

/**
 * Norm-to-stability bound: any set with norm at most M is k-stable for
 * k = c0 * exp(pi * M) + 1.  Requires M >= 0.
 */
double stability_upper_bound(double m_norm);

struct ConstantsTable {
  double euler_gamma;  // 30-digit literal
  double c0;           // 2^-4 * exp(-gamma) * pi         = 0.110...
  double c1;           // 2^-2 * exp(-gamma) * prod m^(-2/(4m^2-1)) = 0.087...
  double c1_over_c0;   // (4/pi) * prod m^(-2/(4m^2-1))   = 0.789...
};

/** Computed once; c1 carries a certified truncation error below 1e-9. */
const ConstantsTable& constants();

/** sum_{m>=1} ln m / (4m^2 - 1), the log of the c1 product up to scale. */
double log_weight_sum();

}  // namespace stabring
