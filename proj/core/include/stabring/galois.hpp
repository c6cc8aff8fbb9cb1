#pragma once

#include <cstdint>
#include <vector>

namespace stabring {

/**
 * GF(p^m) as GF(p)[x]/(f) for the lexicographically least monic primitive f
 * of degree m (irreducible alone is not enough here: primitivity keeps the
 * generator search short and canonical).  Elements are integer codes in
 * [0, p^m): the base-p digits of a code are the polynomial coefficients,
 * least significant digit = constant term.
 */
class GaloisField {
 public:
  using Elem = std::int64_t;

  GaloisField(std::int64_t p, int m);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return m_; }
  std::int64_t size() const { return size_; }
  const std::vector<std::int64_t>& modulus_poly() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem negate(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t e) const;

  /** Base-p digits of the element code, i.e. its coefficient vector. */
  std::vector<std::int64_t> coefficients(Elem a) const;

  /** Multiplicative order equals size-1, checked via the factors of size-1. */
  bool is_primitive_element(Elem a) const;

  /** Least element code (>= 2) generating the multiplicative group. */
  Elem find_generator() const;

 private:
  std::int64_t p_;
  int m_;
  std::int64_t size_;
  std::vector<std::int64_t> modulus_;  // full coefficient vector of f, monic
  std::vector<std::int64_t> group_prime_factors_;
};

/** Distinct prime factors by trial division; n >= 1. */
std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace stabring
