#include "stabring/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabring {

namespace {

// Flat addition table for small groups; the witness search is the only hot
// loop in the library and benefits from avoiding repeated mixed-radix
// decompositions on multi-factor groups.
class AddTable {
 public:
  explicit AddTable(const FiniteAbelianGroup& g) : g_(g), n_(g.order()) {
    if (g.rank() > 1 && n_ <= 1024) {
      table_.resize(static_cast<std::size_t>(n_ * n_));
      for (std::int64_t i = 0; i < n_; ++i) {
        for (std::int64_t j = 0; j < n_; ++j) {
          table_[static_cast<std::size_t>(i * n_ + j)] =
              static_cast<std::int32_t>(g.add_indices(i, j));
        }
      }
    }
  }

  std::int64_t add(std::int64_t i, std::int64_t j) const {
    if (!table_.empty()) {
      return table_[static_cast<std::size_t>(i * n_ + j)];
    }
    if (g_.rank() == 1) {
      std::int64_t s = i + j;
      if (s >= n_) s -= n_;
      return s;
    }
    return g_.add_indices(i, j);
  }

 private:
  const FiniteAbelianGroup& g_;
  std::int64_t n_;
  std::vector<std::int32_t> table_;
};

struct Search {
  const std::vector<std::uint8_t>& in_a;
  const AddTable& add;
  std::int64_t n;
  int k;
  std::vector<std::int64_t> a, b;

  bool place_a(int i);
  bool place_b(int j);

  // Assignment order: a_0 (b_0 is the pinned identity), then b_j, a_j for
  // j = 1..k-1.  Every pair (a_i, b_j) is checked at whichever endpoint is
  // assigned later, so a full assignment satisfies all k*k constraints.
  bool run() {
    b[0] = 0;
    return place_a(0);
  }
};

bool Search::place_a(int i) {
  for (std::int64_t cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int t = 0; t < i; ++t) {
      if (a[t] == cand) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // a_i + b_j must avoid A for j < i and land in A for j == i.
    for (int j = 0; j < i && ok; ++j) {
      if (in_a[static_cast<std::size_t>(add.add(cand, b[j]))]) ok = false;
    }
    if (!ok) continue;
    if (!in_a[static_cast<std::size_t>(add.add(cand, b[i]))]) continue;
    a[i] = cand;
    if (i + 1 == k) return true;
    if (place_b(i + 1)) return true;
  }
  return false;
}

bool Search::place_b(int j) {
  for (std::int64_t cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int t = 0; t < j; ++t) {
      if (b[t] == cand) {
        ok = false;
        break;
      }
    }
    // All assigned a_i have i < j, so a_i + b_j must be a member.
    for (int i = 0; i < j && ok; ++i) {
      if (!in_a[static_cast<std::size_t>(add.add(a[i], cand))]) ok = false;
    }
    if (!ok) continue;
    b[j] = cand;
    if (place_a(j)) return true;
  }
  return false;
}

}  // namespace

bool verify_witness(const GroupSubset& a, const OrderWitness& w) {
  const int k = w.k();
  if (k < 1 || static_cast<int>(w.b.size()) != k) return false;
  const auto& g = a.group();
  for (std::int64_t idx : w.a) {
    if (idx < 0 || idx >= g.order()) return false;
  }
  for (std::int64_t idx : w.b) {
    if (idx < 0 || idx >= g.order()) return false;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const bool member = a.contains(g.add_indices(w.a[i], w.b[j]));
      if (member != (i <= j)) return false;
    }
  }
  return true;
}

std::int64_t order_search_cap(const GroupSubset& a) {
  return std::min(a.size(), a.group().order() - a.size() + 1);
}

std::optional<OrderWitness> find_order_witness(const GroupSubset& a, int k) {
  if (k < 1) {
    throw std::invalid_argument("witness order must be >= 1");
  }
  if (k > order_search_cap(a)) return std::nullopt;
  AddTable add(a.group());
  Search s{a.bitmap(), add, a.group().order(), k,
           std::vector<std::int64_t>(static_cast<std::size_t>(k)),
           std::vector<std::int64_t>(static_cast<std::size_t>(k))};
  if (s.run()) {
    return OrderWitness{std::move(s.a), std::move(s.b)};
  }
  return std::nullopt;
}

StabilityReport stability_index(const GroupSubset& a, std::optional<int> max_k) {
  StabilityReport rep{a, 0, 1, std::nullopt};
  const std::int64_t cap = order_search_cap(a);
  for (int k = 1; k <= cap; ++k) {
    if (max_k && k > *max_k) break;
    auto w = find_order_witness(a, k);
    if (!w) break;
    rep.max_order = k;
    rep.witness = std::move(w);
  }
  rep.stability_index = rep.max_order + 1;
  return rep;
}

IntegerWitness ap_witness(long long x, long long d, int r) {
  if (d == 0) throw std::invalid_argument("progression gap must be nonzero");
  if (r < 1) throw std::invalid_argument("progression length must be >= 1");
  IntegerWitness w;
  w.a.reserve(static_cast<std::size_t>(r));
  w.b.reserve(static_cast<std::size_t>(r));
  for (long long i = 1; i <= r; ++i) {
    w.a.push_back(x - i * d);
    w.b.push_back(i * d);
  }
  return w;
}

OrderWitness embed_witness(const FiniteAbelianGroup& cyclic_group,
                           const IntegerWitness& w) {
  if (cyclic_group.rank() != 1) {
    throw std::invalid_argument("integer witnesses embed into cyclic groups only");
  }
  const std::int64_t n = cyclic_group.order();
  auto reduce = [n](long long v) {
    std::int64_t r = static_cast<std::int64_t>(v % n);
    if (r < 0) r += n;
    return r;
  };
  OrderWitness out;
  out.a.reserve(w.a.size());
  out.b.reserve(w.b.size());
  for (long long v : w.a) out.a.push_back(reduce(v));
  for (long long v : w.b) out.b.push_back(reduce(v));
  return out;
}

namespace {

// Exhaustive search for a clique of size `want` inside one colour class.
bool grow_clique(const std::vector<std::vector<int>>& colour, int colour_q,
                 int n_vertices, std::vector<int>& clique, int want, int from) {
  if (static_cast<int>(clique.size()) == want) return true;
  for (int v = from; v <= n_vertices; ++v) {
    bool ok = true;
    for (int u : clique) {
      if (colour[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
          colour_q) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    clique.push_back(v);
    if (grow_clique(colour, colour_q, n_vertices, clique, want, v + 1)) {
      return true;
    }
    clique.pop_back();
  }
  return false;
}

}  // namespace

SubwitnessExtraction extract_subwitness(const std::vector<GroupSubset>& parts,
                                        const OrderWitness& w,
                                        const std::vector<int>& targets) {
  if (parts.empty() || parts.size() != targets.size()) {
    throw std::invalid_argument("need one clique target per part");
  }
  for (int t : targets) {
    if (t < 1) throw std::invalid_argument("clique targets must be >= 1");
  }
  GroupSubset whole = parts.front();
  for (std::size_t q = 1; q < parts.size(); ++q) {
    whole = subset_union(whole, parts[q]);
  }
  if (!verify_witness(whole, w)) {
    throw std::invalid_argument("witness is not valid for the union of the parts");
  }
  const int n_vertices = w.k() - 1;
  const auto& g = whole.group();
  const int m = static_cast<int>(parts.size());

  // colour[i][j] for 1 <= i < j <= n_vertices; vertices are 1-based as in the
  // extraction formulas, arrays hold 1-based witness entries at 0-based slots.
  std::vector<std::vector<int>> colour(
      static_cast<std::size_t>(n_vertices + 1),
      std::vector<int>(static_cast<std::size_t>(n_vertices + 1), -1));
  for (int i = 1; i < n_vertices; ++i) {
    for (int j = i + 1; j <= n_vertices; ++j) {
      const std::int64_t x =
          g.add_indices(w.a[static_cast<std::size_t>(i)],
                        w.b[static_cast<std::size_t>(j - 1)]);
      for (int q = 0; q < m; ++q) {
        if (parts[static_cast<std::size_t>(q)].contains(x)) {
          colour[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q;
          colour[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = q;
          break;
        }
      }
    }
  }

  for (int q = 0; q < m; ++q) {
    const int want = targets[static_cast<std::size_t>(q)] + 1;
    if (want > n_vertices) continue;
    std::vector<int> clique;
    if (!grow_clique(colour, q, n_vertices, clique, want, 1)) continue;

    OrderWitness out;
    const int kq = targets[static_cast<std::size_t>(q)];
    for (int i = 0; i < kq; ++i) {
      out.a.push_back(w.a[static_cast<std::size_t>(clique[static_cast<std::size_t>(i)])]);
      out.b.push_back(w.b[static_cast<std::size_t>(clique[static_cast<std::size_t>(i + 1)] - 1)]);
    }
    if (!verify_witness(parts[static_cast<std::size_t>(q)], out)) {
      throw std::logic_error("extracted witness failed re-verification");
    }
    return SubwitnessExtraction{static_cast<std::size_t>(q), std::move(out)};
  }
  throw std::domain_error(
      "no colour class contains the required clique: witness order is too "
      "small for the requested targets");
}

}  // namespace stabring
