#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabring/group.hpp"

namespace stabring {

/**
 * Certificate that a set is not Sidon: x - y = z - w with x != y and x != z,
 * all four values members of the set.
 */
struct SidonViolation {
  std::int64_t x, y, z, w;
};

struct SidonVerdict {
  bool is_sidon;
  std::optional<SidonViolation> violation;
};

/**
 * Sidon test: whenever x - y = z - w with all of x, y, z, w in the set, either
 * x = y or x = z.  Equivalently every nonzero difference arises from at most
 * one ordered pair.  In groups with 2-torsion this is stricter than the
 * "distinct pairwise sums" phrasing; the difference form is the one used
 * throughout.  Violation entries are element indices (group form) or the
 * integers themselves (integer form).
 */
SidonVerdict is_sidon(const GroupSubset& a);
SidonVerdict is_sidon(const std::vector<long long>& integers);

/**
 * Perfect difference set check: the residues are distinct mod n and every
 * nonzero residue mod n arises exactly once as an ordered difference.
 */
bool is_perfect_difference_set(const std::vector<std::int64_t>& set, std::int64_t n);

struct DifferenceSetReport {
  std::int64_t q;
  std::int64_t modulus;  // q*q + q + 1
  std::vector<std::int64_t> set;
  bool lambda_check;
};

/**
 * Singer construction over GF(q^3): with g a generator of the multiplicative
 * group and V the 2-dimensional GF(q)-subspace spanned by {1, g}, the set
 * { i mod (q^2+q+1) : g^i in V } is a perfect difference set of size q + 1.
 * Supported q: {2, 3, 4, 5, 7, 8, 9, 11, 13}.  The result is re-verified with
 * is_perfect_difference_set before being returned.
 */
DifferenceSetReport singer_difference_set(std::int64_t q);

}  // namespace stabring
