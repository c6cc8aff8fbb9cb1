#include "stabring/bounds.hpp"

#include <algorithm>
#include <map>

namespace stabring {
namespace {

constexpr std::int64_t kFactorialCap = 2000000;

std::string join_sum(const std::vector<std::int64_t>& ks) {
  std::string s = "(";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(ks[i]);
  }
  s += ")!";
  return s;
}

std::string join_factorials(const std::vector<std::int64_t>& ks) {
  std::string s = "(";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += '*';
    s += std::to_string(ks[i]);
    s += '!';
  }
  s += ')';
  return s;
}

}  // namespace

BigInt big_factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("big_factorial: n must be >= 0");
  if (n > kFactorialCap)
    throw BoundTooLarge("big_factorial: argument beyond desk scale",
                        std::to_string(n) + "!");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigBound multinomial_ramsey_bound(const std::vector<std::int64_t>& ks) {
  if (ks.empty())
    throw std::invalid_argument("multinomial_ramsey_bound: need at least one colour");
  for (std::int64_t k : ks)
    if (k < 0)
      throw std::invalid_argument("multinomial_ramsey_bound: colour sizes must be >= 0");

  if (ks.size() == 1) {
    BigBound b;
    b.value = ks[0] + 1;
    b.expression = std::to_string(ks[0]) + "+1";
    return b;
  }

  std::int64_t total = 0;
  for (std::int64_t k : ks) total += k;
  const std::string expr = join_sum(ks) + "/" + join_factorials(ks);
  if (total > kFactorialCap)
    throw BoundTooLarge("multinomial_ramsey_bound: total beyond desk scale", expr);

  BigInt num = big_factorial(total);
  // Group repeated colour sizes so each factorial is computed once.
  std::map<std::int64_t, unsigned long> groups;
  for (std::int64_t k : ks) ++groups[k];
  BigInt den = 1;
  for (const auto& [k, count] : groups) {
    BigInt f = big_factorial(k);
    if (count > 1) mpz_pow_ui(f.get_mpz_t(), f.get_mpz_t(), count);
    den *= f;
  }
  BigBound b;
  mpz_divexact(b.value.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  b.expression = expr;
  return b;
}

RepresentationBound representation_stability_bound(int k, int s) {
  if (k < 1 || s < 1)
    throw std::invalid_argument("representation_stability_bound: need k >= 1, s >= 1");

  const std::string colours_expr =
      "(" + std::to_string(s) + "+1)^" + std::to_string(k);
  BigInt colours_big;
  mpz_ui_pow_ui(colours_big.get_mpz_t(), static_cast<unsigned long>(s + 1),
                static_cast<unsigned long>(k));
  if (colours_big > 65536)
    throw BoundTooLarge("representation_stability_bound: colour count above 2^16",
                        colours_expr);
  const std::int64_t colours = colours_big.get_si();

  const std::vector<std::int64_t> inner_ks(static_cast<std::size_t>(k), s + 2);
  const BigBound inner = multinomial_ramsey_bound(inner_ks);
  const BigInt cells = inner.value + 2;

  if (cells - 1 > kFactorialCap / colours)
    throw BoundTooLarge("representation_stability_bound: outer chain beyond desk scale",
                        "(" + inner.expression + "+2) cells over " + colours_expr +
                            " colours");
  const std::int64_t cell_arg = BigInt(cells - 1).get_si();

  const std::vector<std::int64_t> outer_ks(static_cast<std::size_t>(colours),
                                           cell_arg);
  const BigBound outer = multinomial_ramsey_bound(outer_ks);

  RepresentationBound rb;
  rb.exact_chain.value = outer.value + 2;
  rb.exact_chain.expression = outer.expression + "+2";

  const unsigned long exp = 7UL * static_cast<unsigned long>(k) *
                            static_cast<unsigned long>(s);
  mpz_ui_pow_ui(rb.simplified_log2.get_mpz_t(), static_cast<unsigned long>(k), exp);
  rb.simplified.expression = "2^(" + std::to_string(k) + "^(7*" +
                             std::to_string(k) + "*" + std::to_string(s) + "))";
  if (rb.simplified_log2 <= (1 << 20)) {
    rb.simplified.value = 1;
    mpz_mul_2exp(rb.simplified.value.get_mpz_t(), rb.simplified.value.get_mpz_t(),
                 rb.simplified_log2.get_ui());
    rb.simplified_materialized = true;
  }
  rb.k1_flagged = (k == 1);
  return rb;
}

bool fits_below_power_of_two(const BigInt& v, const BigInt& exponent) {
  if (v <= 0) return true;
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  const BigInt msb = static_cast<unsigned long>(bits - 1);
  if (msb < exponent) return true;
  if (msb > exponent) return false;
  return mpz_popcount(v.get_mpz_t()) == 1;  // equality case: exact power of two
}

bool exact_chain_below_simplified(const RepresentationBound& rb) {
  return fits_below_power_of_two(rb.exact_chain.value, rb.simplified_log2);
}

}  // namespace stabring
