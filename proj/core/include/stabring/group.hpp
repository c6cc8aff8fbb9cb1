#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stabring {

struct GroupElement {
  std::vector<std::int64_t> residues;

  bool operator==(const GroupElement&) const = default;
};

/**
 * Finite abelian group presented as Z/n1 x ... x Z/nr, every ni >= 2.
 *
 * Elements are addressed either as residue vectors or as flat indices in
 * [0, order).  The index encoding is mixed radix with the FIRST factor most
 * significant, i.e. index(r1,...,rk) = ((r1*n2 + r2)*n3 + r3)...  Instances
 * are immutable and safe to share across threads.
 */
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

  static FiniteAbelianGroup cyclic(std::int64_t n);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t order() const { return order_; }
  std::size_t rank() const { return moduli_.size(); }

  GroupElement element(std::int64_t index) const;
  std::int64_t index_of(const GroupElement& x) const;
  GroupElement identity() const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;

  std::int64_t add_indices(std::int64_t i, std::int64_t j) const;
  std::int64_t negate_index(std::int64_t i) const;
  std::int64_t sub_indices(std::int64_t i, std::int64_t j) const;

  /** Canonical spelling, e.g. "Z/12" or "Z/2xZ/3xZ/4". */
  std::string spec_string() const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return moduli_ == other.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_;
};

/**
 * Subset of a finite abelian group.  Members are stored as sorted, de-duplicated
 * flat indices; a bitmap gives O(1) membership tests.
 */
class GroupSubset {
 public:
  GroupSubset(FiniteAbelianGroup group, std::vector<std::int64_t> members);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::int64_t>& members() const { return members_; }
  std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool contains(std::int64_t index) const {
    return bitmap_[static_cast<std::size_t>(index)] != 0;
  }
  const std::vector<std::uint8_t>& bitmap() const { return bitmap_; }

 private:
  FiniteAbelianGroup group_;
  std::vector<std::int64_t> members_;
  std::vector<std::uint8_t> bitmap_;
};

GroupSubset subset_translate(const GroupSubset& a, std::int64_t t);
GroupSubset subset_union(const GroupSubset& a, const GroupSubset& b);
GroupSubset subset_complement(const GroupSubset& a);

/**
 * Character of the group, chi_c(x) = exp(2*pi*i * sum_j c_j x_j / n_j).
 * The dual group is identified with the group itself: exponent vectors live
 * on the same lattice and are addressed by the same flat indices.
 */
struct Character {
  std::vector<std::int64_t> exponents;
};

Character character_from_index(const FiniteAbelianGroup& g, std::int64_t index);
std::complex<double> character_value(const FiniteAbelianGroup& g,
                                     const Character& chi,
                                     const GroupElement& x);

/** Sum of chi over the members of a. */
std::complex<double> character_sum(const GroupSubset& a, const Character& chi);

/** |character_sum| for every character, in character-index order (length |G|). */
std::vector<double> dft_magnitudes(const GroupSubset& a);

/**
 * Coset decomposition of a subset, when one exists: a = representative + subgroup.
 * The representative is the least member.
 */
struct CosetStructure {
  GroupSubset subgroup;
  GroupElement representative;
};

/**
 * Decides whether a is a coset of a subgroup, i.e. a is nonempty and
 * a + a - a is contained in a.  Returns the decomposition or nullopt.
 */
std::optional<CosetStructure> coset_test(const GroupSubset& a);

}  // namespace stabring
