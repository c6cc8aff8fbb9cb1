#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabring {

using BigInt = mpz_class;

/** Exact integer bound plus an arithmetic expression that reproduces it. */
struct BigBound {
  BigInt value;
  std::string expression;
};

/** Exact n! (GMP's factorial under the hood). */
BigInt big_factorial(std::int64_t n);

/**
 * Thrown when inputs are valid but the exact value would blow past desk
 * scale; carries the symbolic expression that was refused.
 */
class BoundTooLarge : public std::runtime_error {
 public:
  BoundTooLarge(const std::string& what, std::string expr)
      : std::runtime_error(what), expression(std::move(expr)) {}

  std::string expression;
};

/**
 * Ramsey-type bound (k1+...+km)!/(k1!*...*km!) with every colour written
 * out in the expression.  A single colour uses the k+1 convention instead.
 * The total k1+...+km is capped at 2e6 (BoundTooLarge beyond).
 */
BigBound multinomial_ramsey_bound(const std::vector<std::int64_t>& ks);

struct RepresentationBound {
  BigBound exact_chain;    // outer multinomial chain + 2, materialized
  BigBound simplified;     // 2^(k^(7ks)); value set only when materialized
  BigInt simplified_log2;  // the exponent k^(7ks), always exact
  bool simplified_materialized = false;
  bool k1_flagged = false;  // k = 1 degenerates; comparison not meaningful
};

/**
 * Two-step representation bound.  inner = M(s+2,...,s+2) over k colours + 2;
 * outer = M(inner-1,...,inner-1) over (s+1)^k colours + 2; compared against
 * the closed form 2^(k^(7ks)).  Requires (s+1)^k <= 2^16 and an outer
 * factorial argument within desk scale; otherwise BoundTooLarge with the
 * expression intact.  The simplified value is materialized only when its
 * exponent is at most 2^20; the exponent itself is always exact.
 */
RepresentationBound representation_stability_bound(int k, int s);

/** Exact decision of v <= 2^e via bit length; e may be astronomically large. */
bool fits_below_power_of_two(const BigInt& v, const BigInt& exponent);

/** exact_chain <= 2^(k^(7ks)), decided exactly. */
bool exact_chain_below_simplified(const RepresentationBound& rb);

}  // namespace stabring
