#include "stabring/sidon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "stabring/galois.hpp"

namespace stabring {

namespace {

// Shared difference-multiset scan.  Pairs are visited in sorted member order,
// so the reported violation is deterministic.  If (x, y) and (z, w) are
// distinct ordered pairs with the same nonzero difference then x != y by
// nonzeroness and x != z (x = z would force y = w).
template <typename Value, typename Diff, typename SubFn>
SidonVerdict scan_differences(const std::vector<Value>& members, SubFn sub) {
  std::map<Diff, std::pair<Value, Value>> first_pair;
  for (const Value& x : members) {
    for (const Value& y : members) {
      if (x == y) continue;
      const Diff d = sub(x, y);
      auto [it, inserted] = first_pair.try_emplace(d, x, y);
      if (!inserted) {
        const auto& [z, w] = it->second;
        return SidonVerdict{false, SidonViolation{static_cast<std::int64_t>(x),
                                                  static_cast<std::int64_t>(y),
                                                  static_cast<std::int64_t>(z),
                                                  static_cast<std::int64_t>(w)}};
      }
    }
  }
  return SidonVerdict{true, std::nullopt};
}

}  // namespace

SidonVerdict is_sidon(const GroupSubset& a) {
  const auto& g = a.group();
  return scan_differences<std::int64_t, std::int64_t>(
      a.members(), [&g](std::int64_t x, std::int64_t y) { return g.sub_indices(x, y); });
}

SidonVerdict is_sidon(const std::vector<long long>& integers) {
  std::vector<long long> sorted = integers;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return scan_differences<long long, long long>(
      sorted, [](long long x, long long y) { return x - y; });
}

bool is_perfect_difference_set(const std::vector<std::int64_t>& set, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<std::int64_t> reduced;
  reduced.reserve(set.size());
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (std::int64_t v : set) {
    std::int64_t r = v % n;
    if (r < 0) r += n;
    if (seen[static_cast<std::size_t>(r)]) {
      throw std::invalid_argument("residues must be distinct mod n");
    }
    seen[static_cast<std::size_t>(r)] = 1;
    reduced.push_back(r);
  }
  std::vector<std::int64_t> count(static_cast<std::size_t>(n), 0);
  for (std::int64_t x : reduced) {
    for (std::int64_t y : reduced) {
      if (x == y) continue;
      std::int64_t d = (x - y) % n;
      if (d < 0) d += n;
      ++count[static_cast<std::size_t>(d)];
    }
  }
  for (std::int64_t d = 1; d < n; ++d) {
    if (count[static_cast<std::size_t>(d)] != 1) return false;
  }
  return true;
}

DifferenceSetReport singer_difference_set(std::int64_t q) {
  // q = p^e; the supported range keeps GF(q^3) enumerable.
  static const std::int64_t supported[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};
  if (std::find(std::begin(supported), std::end(supported), q) ==
      std::end(supported)) {
    throw std::invalid_argument("q must be a prime power in {2,3,4,5,7,8,9,11,13}");
  }
  std::int64_t p = prime_factors(q).front();
  int e = 0;
  for (std::int64_t t = q; t > 1; t /= p) ++e;

  const GaloisField field(p, 3 * e);
  const std::int64_t field_size = field.size();  // q^3
  const std::int64_t n = q * q + q + 1;
  const GaloisField::Elem g = field.find_generator();

  // Subfield GF(q) = fixed points of the q-power map.
  std::vector<GaloisField::Elem> subfield;
  for (GaloisField::Elem z = 0; z < field_size; ++z) {
    if (field.pow(z, q) == z) subfield.push_back(z);
  }
  if (static_cast<std::int64_t>(subfield.size()) != q) {
    throw std::logic_error("subfield extraction failed");
  }

  // V = { alpha + beta * g : alpha, beta in GF(q) }, marked by element code.
  std::vector<std::uint8_t> in_v(static_cast<std::size_t>(field_size), 0);
  for (GaloisField::Elem alpha : subfield) {
    for (GaloisField::Elem beta : subfield) {
      in_v[static_cast<std::size_t>(field.add(alpha, field.mul(beta, g)))] = 1;
    }
  }

  std::vector<std::uint8_t> hit(static_cast<std::size_t>(n), 0);
  GaloisField::Elem power = field.one();
  for (std::int64_t i = 0; i < field_size - 1; ++i) {
    if (in_v[static_cast<std::size_t>(power)]) {
      hit[static_cast<std::size_t>(i % n)] = 1;
    }
    power = field.mul(power, g);
  }
  std::vector<std::int64_t> set;
  for (std::int64_t i = 0; i < n; ++i) {
    if (hit[static_cast<std::size_t>(i)]) set.push_back(i);
  }

  DifferenceSetReport report{q, n, std::move(set), false};
  if (static_cast<std::int64_t>(report.set.size()) != q + 1) {
    throw std::logic_error("Singer set has the wrong size");
  }
  report.lambda_check = is_perfect_difference_set(report.set, n);
  if (!report.lambda_check) {
    throw std::logic_error("Singer set failed the difference-set verification");
  }
  return report;
}

}  // namespace stabring
