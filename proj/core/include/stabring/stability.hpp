#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabring/group.hpp"

namespace stabring {

/**
 * Witness for the k-order property of a subset A: index vectors a, b of
 * length k with a_i + b_j in A exactly when i <= j.  Distinctness of the a_i
 * and of the b_j is forced by the biconditional, never assumed.
 */
struct OrderWitness {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  int k() const { return static_cast<int>(a.size()); }
};

/** Checks all k*k membership constraints of w against a. */
bool verify_witness(const GroupSubset& a, const OrderWitness& w);

/**
 * Hard cap on witness order: a witness of order k forces k distinct members
 * (row a_i + b_k) and k-1 distinct non-members (row a_k + b_j), so
 * k <= min(|A|, |G| - |A| + 1).
 */
std::int64_t order_search_cap(const GroupSubset& a);

/**
 * Complete backtracking search for a k-order witness.  b_1 is pinned to the
 * identity (translating any witness by -b_1 gives one of this shape), the
 * remaining variables are assigned in the order a_1, b_2, a_2, b_3, ... with
 * candidates tried in ascending element-index order, every constraint checked
 * as soon as both endpoints exist.  Returns the lexicographically first
 * witness under that order, or nullopt when none exists (the search never
 * misses: it is a decision procedure, not a heuristic).
 */
std::optional<OrderWitness> find_order_witness(const GroupSubset& a, int k);

struct StabilityReport {
  GroupSubset subset;
  int max_order;        // largest k with a k-order witness, 0 for the empty set
  int stability_index;  // max_order + 1: least k such that A is k-stable
  std::optional<OrderWitness> witness;  // witness at k = max_order, if any
};

/**
 * Exact stability index by searching k = 1, 2, ... upward until the first k
 * with no witness.  If max_k is given the search is truncated there and the
 * reported values are lower bounds.
 */
StabilityReport stability_index(const GroupSubset& a,
                                std::optional<int> max_k = std::nullopt);

/** Witness over the ambient integers; searchless constructions only. */
struct IntegerWitness {
  std::vector<long long> a;
  std::vector<long long> b;
};

/**
 * The arithmetic progression {x, x+d, ..., x+(r-1)d} in Z has the r-order
 * property via a_i = x - i*d, b_j = j*d.  Requires d != 0 and r >= 1.
 */
IntegerWitness ap_witness(long long x, long long d, int r);

/** Reduces an integer witness mod N into a cyclic group (rank 1 only). */
OrderWitness embed_witness(const FiniteAbelianGroup& cyclic_group,
                           const IntegerWitness& w);

struct SubwitnessExtraction {
  std::size_t part_index;
  OrderWitness witness;
};

/**
 * Multicolour extraction: given parts A_1..A_m, a valid (N+1)-order witness w
 * for their union and clique targets k_1..k_m, colours the edge {i, j} (i < j)
 * of the complete graph on {1..N} by the least q with a_{i+1} + b_j in A_q,
 * finds a monochromatic clique of size k_q + 1 for some q, and reads off a
 * k_q-order witness for A_q (a'_i = a_{s_i + 1}, b'_i = b_{s_{i+1}} for clique
 * vertices s_1 < ... < s_{k_q+1}).  The returned witness is re-verified.
 *
 * Throws std::invalid_argument when w is not a valid witness for the union,
 * and std::domain_error when no colour class contains the required clique
 * (possible only when N is below the m-colour Ramsey number of the targets).
 */
SubwitnessExtraction extract_subwitness(const std::vector<GroupSubset>& parts,
                                        const OrderWitness& w,
                                        const std::vector<int>& targets);

}  // namespace stabring
