#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfw/error.hpp"

namespace hfw {

struct PrimePower {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;
};

inline std::optional<PrimePower> as_prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, k};
}

/// GF(q), q = p^k <= 16. Element x encodes the polynomial sum d_i X^i where
/// d_i are the base-p digits of x; arithmetic is modulo the first monic
/// irreducible of degree k in the order of their base-p encoding.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 16;

  explicit FiniteField(std::uint32_t q) : q_(q) {
    const auto pp = as_prime_power(q);
    require(pp.has_value() && q <= kMaxOrder, ErrorKind::unsupported_order,
            "no supported field of order " + std::to_string(q));
    p_ = pp->prime;
    k_ = pp->exponent;
    modulus_ = find_modulus();
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<std::uint8_t>(encode(poly_add(decode(a), decode(b))));
        mul_[a * q + b] = static_cast<std::uint8_t>(encode(poly_mulmod(decode(a), decode(b))));
      }
    }
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        if (add_[a * q + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
        if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
      }
    }
  }

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  /// Coefficients of the modulus, constant term first, leading 1 last.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t inv(std::uint32_t a) const {
    require(a != 0, ErrorKind::invalid_argument, "zero has no inverse");
    return inv_[a];
  }

 private:
  using Poly = std::vector<std::uint32_t>;  // constant term first

  Poly decode(std::uint32_t x) const {
    Poly out(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      out[i] = x % p_;
      x /= p_;
    }
    return out;
  }

  std::uint32_t encode(const Poly& poly) const {
    std::uint32_t x = 0;
    for (std::uint32_t i = k_; i-- > 0;) x = x * p_ + poly[i];
    return x;
  }

  Poly poly_add(const Poly& a, const Poly& b) const {
    Poly out(k_);
    for (std::uint32_t i = 0; i < k_; ++i) out[i] = (a[i] + b[i]) % p_;
    return out;
  }

  static Poly multiply(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
  }

  // Remainder of `a` modulo the monic `m`.
  static Poly remainder(Poly a, const Poly& m, std::uint32_t p) {
    const std::size_t deg = m.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
      const std::uint32_t lead = a[i];
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= deg; ++j) {
        a[i - deg + j] = (a[i - deg + j] + (p - lead) * m[j]) % p;
      }
    }
    a.resize(deg);
    return a;
  }

  Poly poly_mulmod(const Poly& a, const Poly& b) const {
    if (k_ == 1) return Poly{(a[0] * b[0]) % p_};
    return remainder(multiply(a, b, p_), modulus_, p_);
  }

  // Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `index`.
  static Poly monic(std::uint32_t deg, std::uint32_t index, std::uint32_t p) {
    Poly out(deg + 1, 0);
    for (std::uint32_t i = 0; i < deg; ++i) {
      out[i] = index % p;
      index /= p;
    }
    out[deg] = 1;
    return out;
  }

  static bool divides(const Poly& d, const Poly& a, std::uint32_t p) {
    const Poly rem = remainder(a, d, p);
    for (auto c : rem) {
      if (c != 0) return false;
    }
    return true;
  }

  Poly find_modulus() const {
    if (k_ == 1) return Poly{0, 1};
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < k_; ++i) count *= p_;
    for (std::uint32_t index = 0; index < count; ++index) {
      const Poly candidate = monic(k_, index, p_);
      bool irreducible = true;
      for (std::uint32_t d = 1; d <= k_ / 2 && irreducible; ++d) {
        std::uint32_t factors = 1;
        for (std::uint32_t i = 0; i < d; ++i) factors *= p_;
        for (std::uint32_t f = 0; f < factors && irreducible; ++f) {
          if (divides(monic(d, f, p_), candidate, p_)) irreducible = false;
        }
      }
      if (irreducible) return candidate;
    }
    fail(ErrorKind::construction_invariant_violated, "no irreducible polynomial found");
  }

  std::uint32_t q_;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  Poly modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace hfw
