#include "stabring/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stabring {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) {
    throw std::invalid_argument("group needs at least one factor");
  }
  order_ = 1;
  for (std::int64_t n : moduli_) {
    if (n < 2) {
      throw std::invalid_argument("every factor must have modulus >= 2");
    }
    if (order_ > (std::int64_t{1} << 40) / n) {
      throw std::invalid_argument("group order exceeds supported desk scale");
    }
    order_ *= n;
  }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t n) {
  return FiniteAbelianGroup({n});
}

GroupElement FiniteAbelianGroup::element(std::int64_t index) const {
  if (index < 0 || index >= order_) {
    throw std::out_of_range("element index out of range");
  }
  std::vector<std::int64_t> r(moduli_.size());
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    r[j] = index % moduli_[j];
    index /= moduli_[j];
  }
  return GroupElement{std::move(r)};
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
  if (x.residues.size() != moduli_.size()) {
    throw std::invalid_argument("residue vector rank mismatch");
  }
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    std::int64_t r = x.residues[j] % moduli_[j];
    if (r < 0) r += moduli_[j];
    idx = idx * moduli_[j] + r;
  }
  return idx;
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  if (x.residues.size() != moduli_.size() || y.residues.size() != moduli_.size()) {
    throw std::invalid_argument("residue vector rank mismatch");
  }
  GroupElement out = identity();
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    out.residues[j] = (x.residues[j] + y.residues[j]) % moduli_[j];
    if (out.residues[j] < 0) out.residues[j] += moduli_[j];
  }
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& x) const {
  if (x.residues.size() != moduli_.size()) {
    throw std::invalid_argument("residue vector rank mismatch");
  }
  GroupElement out = identity();
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    std::int64_t r = x.residues[j] % moduli_[j];
    if (r < 0) r += moduli_[j];
    out.residues[j] = r == 0 ? 0 : moduli_[j] - r;
  }
  return out;
}

std::int64_t FiniteAbelianGroup::add_indices(std::int64_t i, std::int64_t j) const {
  if (moduli_.size() == 1) {
    std::int64_t s = i + j;
    if (s >= order_) s -= order_;
    return s;
  }
  return index_of(add(element(i), element(j)));
}

std::int64_t FiniteAbelianGroup::negate_index(std::int64_t i) const {
  if (moduli_.size() == 1) {
    return i == 0 ? 0 : order_ - i;
  }
  return index_of(negate(element(i)));
}

std::int64_t FiniteAbelianGroup::sub_indices(std::int64_t i, std::int64_t j) const {
  return add_indices(i, negate_index(j));
}

std::string FiniteAbelianGroup::spec_string() const {
  std::string s;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (j) s += 'x';
    s += "Z/" + std::to_string(moduli_[j]);
  }
  return s;
}

GroupSubset::GroupSubset(FiniteAbelianGroup group, std::vector<std::int64_t> members)
    : group_(std::move(group)), members_(std::move(members)) {
  for (std::int64_t m : members_) {
    if (m < 0 || m >= group_.order()) {
      throw std::out_of_range("subset member out of range");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  bitmap_.assign(static_cast<std::size_t>(group_.order()), 0);
  for (std::int64_t m : members_) bitmap_[static_cast<std::size_t>(m)] = 1;
}

GroupSubset subset_translate(const GroupSubset& a, std::int64_t t) {
  std::vector<std::int64_t> shifted;
  shifted.reserve(a.members().size());
  for (std::int64_t m : a.members()) {
    shifted.push_back(a.group().add_indices(m, t));
  }
  return GroupSubset(a.group(), std::move(shifted));
}

GroupSubset subset_union(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.group() == b.group())) {
    throw std::invalid_argument("union of subsets of different groups");
  }
  std::vector<std::int64_t> all = a.members();
  all.insert(all.end(), b.members().begin(), b.members().end());
  return GroupSubset(a.group(), std::move(all));
}

GroupSubset subset_complement(const GroupSubset& a) {
  std::vector<std::int64_t> rest;
  rest.reserve(static_cast<std::size_t>(a.group().order() - a.size()));
  for (std::int64_t i = 0; i < a.group().order(); ++i) {
    if (!a.contains(i)) rest.push_back(i);
  }
  return GroupSubset(a.group(), std::move(rest));
}

Character character_from_index(const FiniteAbelianGroup& g, std::int64_t index) {
  return Character{g.element(index).residues};
}

std::complex<double> character_value(const FiniteAbelianGroup& g,
                                     const Character& chi,
                                     const GroupElement& x) {
  if (chi.exponents.size() != g.rank() || x.residues.size() != g.rank()) {
    throw std::invalid_argument("character/element rank mismatch");
  }
  // Phase accumulated as an integer multiple of 2*pi/order: exact mod order.
  std::int64_t num = 0;
  const std::int64_t ord = g.order();
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const std::int64_t nj = g.moduli()[j];
    std::int64_t cj = chi.exponents[j] % nj;
    if (cj < 0) cj += nj;
    std::int64_t xj = x.residues[j] % nj;
    if (xj < 0) xj += nj;
    num = (num + (cj * xj % nj) * (ord / nj)) % ord;
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) /
                       static_cast<double>(ord);
  return {std::cos(theta), std::sin(theta)};
}

std::complex<double> character_sum(const GroupSubset& a, const Character& chi) {
  std::complex<double> s = 0.0;
  for (std::int64_t m : a.members()) {
    s += character_value(a.group(), chi, a.group().element(m));
  }
  return s;
}

std::vector<double> dft_magnitudes(const GroupSubset& a) {
  const std::int64_t n = a.group().order();
  std::vector<double> mags(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) {
    mags[static_cast<std::size_t>(c)] =
        std::abs(character_sum(a, character_from_index(a.group(), c)));
  }
  return mags;
}

std::optional<CosetStructure> coset_test(const GroupSubset& a) {
  if (a.empty()) return std::nullopt;
  const auto& g = a.group();
  const std::int64_t rep = a.members().front();

  // h = a - rep must be a subgroup; for finite sets closure under addition
  // suffices, negation closure follows but is checked anyway.
  std::vector<std::int64_t> h;
  h.reserve(a.members().size());
  for (std::int64_t m : a.members()) h.push_back(g.sub_indices(m, rep));
  GroupSubset sub(g, h);

  for (std::int64_t x : sub.members()) {
    if (!sub.contains(g.negate_index(x))) return std::nullopt;
    for (std::int64_t y : sub.members()) {
      if (!sub.contains(g.add_indices(x, y))) return std::nullopt;
    }
  }
  return CosetStructure{std::move(sub), g.element(rep)};
}

}  // namespace stabring
