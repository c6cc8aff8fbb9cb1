#include "stabring/galois.hpp"

#include <stdexcept>

namespace stabring {

namespace {

std::vector<std::int64_t> decode(std::int64_t code, std::int64_t p, int len) {
  std::vector<std::int64_t> digits(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    digits[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  return digits;
}

std::int64_t encode(const std::vector<std::int64_t>& digits, std::int64_t p) {
  std::int64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    code = code * p + digits[i];
  }
  return code;
}

// Remainder of a (degree < 2m-1) modulo the monic f, coefficients mod p.
void reduce(std::vector<std::int64_t>& poly, const std::vector<std::int64_t>& f,
            std::int64_t p) {
  const int dm = static_cast<int>(f.size()) - 1;
  for (int d = static_cast<int>(poly.size()) - 1; d >= dm; --d) {
    const std::int64_t c = poly[static_cast<std::size_t>(d)] % p;
    if (c == 0) continue;
    for (int i = 0; i <= dm; ++i) {
      auto& slot = poly[static_cast<std::size_t>(d - dm + i)];
      slot = (slot - c * f[static_cast<std::size_t>(i)]) % p;
      if (slot < 0) slot += p;
    }
  }
  poly.resize(static_cast<std::size_t>(dm));
}

std::vector<std::int64_t> poly_mul_mod(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b,
                                       const std::vector<std::int64_t>& f,
                                       std::int64_t p) {
  std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  reduce(prod, f, p);
  return prod;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Trial division of the candidate by every monic divisor of degree <= deg/2.
bool poly_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> div = decode(code, p, d + 1);
      div[static_cast<std::size_t>(d)] = 1;
      // long division remainder check
      std::vector<std::int64_t> rem = f;
      for (int t = deg; t >= d; --t) {
        const std::int64_t c = rem[static_cast<std::size_t>(t)] % p;
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) {
          auto& slot = rem[static_cast<std::size_t>(t - d + i)];
          slot = (slot - c * div[static_cast<std::size_t>(i)]) % p;
          if (slot < 0) slot += p;
        }
      }
      bool zero = true;
      for (std::int64_t c : rem) {
        if (c % p != 0) {
          zero = false;
          break;
        }
      }
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("prime_factors expects n >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

GaloisField::GaloisField(std::int64_t p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1 || m > 12) throw std::invalid_argument("unsupported extension degree");
  size_ = 1;
  for (int i = 0; i < m; ++i) {
    if (size_ > (std::int64_t{1} << 30) / p) {
      throw std::invalid_argument("field too large for desk scale");
    }
    size_ *= p;
  }
  group_prime_factors_ = prime_factors(size_ - 1);

  // Least monic primitive polynomial: candidates ordered by the integer code
  // of their low coefficient vector (c_0 least significant).
  bool found = false;
  for (std::int64_t code = 0; code < size_ && !found; ++code) {
    std::vector<std::int64_t> f = decode(code, p, m + 1);
    f[static_cast<std::size_t>(m)] = 1;
    if (!poly_irreducible(f, p)) continue;
    modulus_ = f;
    if (m == 1 || is_primitive_element(p_ /* the polynomial x */)) {
      found = true;
    }
  }
  if (!found) throw std::logic_error("no primitive polynomial found");
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  std::vector<std::int64_t> da = decode(a, p_, m_);
  const std::vector<std::int64_t> db = decode(b, p_, m_);
  for (int i = 0; i < m_; ++i) {
    da[static_cast<std::size_t>(i)] =
        (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
  }
  return encode(da, p_);
}

GaloisField::Elem GaloisField::negate(Elem a) const {
  std::vector<std::int64_t> da = decode(a, p_, m_);
  for (auto& c : da) c = c == 0 ? 0 : p_ - c;
  return encode(da, p_);
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const std::vector<std::int64_t> da = decode(a, p_, m_);
  const std::vector<std::int64_t> db = decode(b, p_, m_);
  return encode(poly_mul_mod(da, db, modulus_, p_), p_);
}

GaloisField::Elem GaloisField::pow(Elem a, std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Elem acc = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<std::int64_t> GaloisField::coefficients(Elem a) const {
  return decode(a, p_, m_);
}

bool GaloisField::is_primitive_element(Elem a) const {
  if (a == 0) return false;
  const std::int64_t n = size_ - 1;
  if (pow(a, n) != 1) return false;
  for (std::int64_t r : group_prime_factors_) {
    if (pow(a, n / r) == 1) return false;
  }
  return true;
}

GaloisField::Elem GaloisField::find_generator() const {
  for (Elem cand = 2; cand < size_; ++cand) {
    if (is_primitive_element(cand)) return cand;
  }
  throw std::logic_error("no generator found");
}

}  // namespace stabring
