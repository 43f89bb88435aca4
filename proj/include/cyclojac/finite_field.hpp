#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclojac/modpoly.hpp"

namespace cyclojac {

/// The field F_{ell^r}, represented as F_ell[x] modulo the lexicographically
/// smallest monic irreducible of degree r (for r = 1 the modulus is x).
/// Elements are indexed 0..ell^r-1 by their coefficient digits:
/// c_0 + c_1 x + ... + c_{r-1} x^{r-1}  <->  c_0 + c_1*ell + ... ("coefficient lex").
class FiniteField {
 public:
  static FiniteField make(std::int64_t ell, int r) {
    if (!is_prime(ell)) throw std::invalid_argument("characteristic must be prime");
    if (r < 1) throw std::invalid_argument("extension degree must be positive");
    return FiniteField(ell, r, find_modulus(ell, r));
  }

  std::int64_t characteristic() const { return ell_; }
  int extension_degree() const { return r_; }
  std::int64_t size() const { return size_; }
  const ModPoly& modulus() const { return modulus_; }

  std::int64_t zero() const { return 0; }
  std::int64_t one() const { return to_index(ModPoly::one(ell_)); }

  std::int64_t add(std::int64_t a, std::int64_t b) const { return add_[idx(a, b)]; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return mul_[idx(a, b)]; }
  std::int64_t neg(std::int64_t a) const { return neg_[check(a)]; }

  std::int64_t inv(std::int64_t a) const {
    const std::int64_t v = inv_[check(a)];
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return v;
  }

  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

  /// Element from an integer scalar (image of the prime field).
  std::int64_t from_int(std::int64_t v) const {
    v = ((v % ell_) + ell_) % ell_;
    return v;  // degree-0 digit
  }

  ModPoly representative(std::int64_t a) const {
    check(a);
    std::vector<std::int64_t> digits;
    for (int i = 0; i < r_; ++i) {
      digits.push_back(a % ell_);
      a /= ell_;
    }
    return ModPoly(ell_, std::move(digits));
  }

  std::int64_t to_index(const ModPoly& p) const {
    const ModPoly red = p.divmod(modulus_).second;
    std::int64_t v = 0;
    for (int i = r_ - 1; i >= 0; --i) v = v * ell_ + red.coeff(i);
    return v;
  }

  std::string element_str(std::int64_t a) const { return representative(a).to_string(); }

  bool operator==(const FiniteField& o) const {
    return ell_ == o.ell_ && r_ == o.r_ && modulus_ == o.modulus_;
  }

 private:
  FiniteField(std::int64_t ell, int r, ModPoly modulus)
      : ell_(ell), r_(r), size_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < r_; ++i) size_ *= ell_;
    build_tables();
  }

  static ModPoly find_modulus(std::int64_t ell, int r) {
    if (r == 1) return ModPoly::variable(ell);
    // Scan monic degree-r polynomials in ascending coefficient-lex order.
    std::int64_t total = 1;
    for (int i = 0; i < r; ++i) total *= ell;
    for (std::int64_t code = 0; code < total; ++code) {
      std::vector<std::int64_t> c;
      std::int64_t v = code;
      for (int i = 0; i < r; ++i) {
        c.push_back(v % ell);
        v /= ell;
      }
      c.push_back(1);
      ModPoly cand(ell, std::move(c));
      if (cand.is_irreducible()) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  void build_tables() {
    const std::size_t s = static_cast<std::size_t>(size_);
    add_.resize(s * s);
    mul_.resize(s * s);
    neg_.resize(s);
    inv_.assign(s, 0);
    for (std::int64_t a = 0; a < size_; ++a) {
      const ModPoly pa = representative(a);
      neg_[static_cast<std::size_t>(a)] = to_index(ModPoly::zero(ell_) - pa);
      for (std::int64_t b = 0; b < size_; ++b) {
        const ModPoly pb = representative(b);
        add_[idx(a, b)] = to_index(pa + pb);
        mul_[idx(a, b)] = to_index((pa * pb).divmod(modulus_).second);
      }
    }
    for (std::int64_t a = 1; a < size_; ++a)
      for (std::int64_t b = 1; b < size_; ++b)
        if (mul_[idx(a, b)] == one()) inv_[static_cast<std::size_t>(a)] = b;
  }

  std::size_t idx(std::int64_t a, std::int64_t b) const {
    return static_cast<std::size_t>(check(a)) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(check(b));
  }

  std::int64_t check(std::int64_t a) const {
    if (a < 0 || a >= size_) throw std::out_of_range("field element index");
    return a;
  }

  std::int64_t ell_;
  int r_;
  std::int64_t size_;
  ModPoly modulus_;
  std::vector<std::int64_t> add_, mul_, neg_, inv_;
};

}  // namespace cyclojac
