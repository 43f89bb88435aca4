#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cyclojac/poly.hpp"

namespace cyclojac {

/// Raised by reduce_mod when a prime divides a coefficient denominator or the
/// leading numerator; callers treat it as "skip this prime".
class BadPrime : public std::runtime_error {
 public:
  explicit BadPrime(std::int64_t ell)
      : std::runtime_error("bad prime " + std::to_string(ell)), ell_(ell) {}
  std::int64_t prime() const { return ell_; }

 private:
  std::int64_t ell_;
};

class NotSquarefree : public std::runtime_error {
 public:
  NotSquarefree() : std::runtime_error("polynomial is not squarefree") {}
};

/// Polynomial over the prime field F_ell, coefficients reduced to [0, ell).
class ModPoly {
 public:
  ModPoly() : ell_(2) {}
  ModPoly(std::int64_t ell, std::vector<std::int64_t> coeffs) : ell_(ell), c_(std::move(coeffs)) {
    if (ell_ < 2) throw std::invalid_argument("modulus must be >= 2");
    for (auto& v : c_) v = mod(v);
    trim();
  }

  static ModPoly zero(std::int64_t ell) { return ModPoly(ell, {}); }
  static ModPoly one(std::int64_t ell) { return ModPoly(ell, {1}); }
  static ModPoly variable(std::int64_t ell) { return ModPoly(ell, {0, 1}); }

  std::int64_t modulus() const { return ell_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  std::int64_t coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t leading() const { return is_zero() ? 0 : c_.back(); }

  bool operator==(const ModPoly& o) const { return ell_ == o.ell_ && c_ == o.c_; }
  bool operator!=(const ModPoly& o) const { return !(*this == o); }

  ModPoly operator+(const ModPoly& o) const {
    check(o);
    std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + o.c_[i]) % ell_;
    return ModPoly(ell_, std::move(r));
  }

  ModPoly operator-(const ModPoly& o) const {
    check(o);
    std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = ((r[i] - o.c_[i]) % ell_ + ell_) % ell_;
    return ModPoly(ell_, std::move(r));
  }

  ModPoly operator*(const ModPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return zero(ell_);
    std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % ell_;
    return ModPoly(ell_, std::move(r));
  }

  ModPoly scaled(std::int64_t s) const {
    std::vector<std::int64_t> r = c_;
    s = ((s % ell_) + ell_) % ell_;
    for (auto& v : r) v = v * s % ell_;
    return ModPoly(ell_, std::move(r));
  }

  std::pair<ModPoly, ModPoly> divmod(const ModPoly& d) const {
    check(d);
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<std::int64_t> rem = c_;
    std::vector<std::int64_t> q(
        degree() >= d.degree() ? static_cast<std::size_t>(degree() - d.degree() + 1) : 0, 0);
    const std::int64_t inv_lead = inv_mod(d.leading());
    int rdeg = degree();
    while (rdeg >= d.degree()) {
      while (rdeg >= 0 && rem[static_cast<std::size_t>(rdeg)] == 0) --rdeg;
      if (rdeg < d.degree()) break;
      const std::int64_t factor = rem[static_cast<std::size_t>(rdeg)] * inv_lead % ell_;
      const int shift = rdeg - d.degree();
      q[static_cast<std::size_t>(shift)] = factor;
      for (int i = 0; i <= d.degree(); ++i) {
        auto& slot = rem[static_cast<std::size_t>(i + shift)];
        slot = ((slot - factor * d.coeff(i)) % ell_ + ell_) % ell_;
      }
    }
    return {ModPoly(ell_, std::move(q)), ModPoly(ell_, std::move(rem))};
  }

  ModPoly monic() const {
    if (is_zero()) return *this;
    return scaled(inv_mod(leading()));
  }

  ModPoly derivative() const {
    if (degree() < 1) return zero(ell_);
    std::vector<std::int64_t> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.push_back(c_[i] * (static_cast<std::int64_t>(i) % ell_) % ell_);
    return ModPoly(ell_, std::move(r));
  }

  static ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
      ModPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  bool is_squarefree() const {
    if (degree() < 1) throw std::invalid_argument("squarefreeness of a constant polynomial");
    return gcd(*this, derivative()).degree() == 0;
  }

  /// this^e mod m by square-and-multiply.
  ModPoly powmod(std::int64_t e, const ModPoly& m) const {
    ModPoly r = one(ell_);
    ModPoly b = divmod(m).second;
    while (e > 0) {
      if (e & 1) r = (r * b).divmod(m).second;
      b = (b * b).divmod(m).second;
      e >>= 1;
    }
    return r;
  }

  std::int64_t eval(std::int64_t x) const {
    x = ((x % ell_) + ell_) % ell_;
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % ell_;
    return acc;
  }

  /// Irreducibility over F_ell by trial division with all monic polynomials of
  /// degree up to deg/2.  Adequate at desk scale.
  bool is_irreducible() const {
    const int n = degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
      std::vector<std::int64_t> cand(static_cast<std::size_t>(d) + 1, 0);
      cand.back() = 1;
      for (;;) {
        if (divmod(ModPoly(ell_, cand)).second.is_zero()) return false;
        int i = 0;
        while (i < d && cand[static_cast<std::size_t>(i)] == ell_ - 1) {
          cand[static_cast<std::size_t>(i)] = 0;
          ++i;
        }
        if (i == d) break;
        ++cand[static_cast<std::size_t>(i)];
      }
    }
    return true;
  }

  /// Degrees of the monic irreducible factors (with multiplicity of appearance,
  /// sorted ascending), by distinct-degree factorization.  Requires squarefree input.
  std::vector<int> factor_degree_profile() const {
    if (degree() < 1) throw std::invalid_argument("profile of a constant polynomial");
    if (!is_squarefree()) throw NotSquarefree();
    std::vector<int> profile;
    ModPoly g = monic();
    ModPoly h = variable(ell_);  // x^(ell^k) mod g, iterated Frobenius
    const ModPoly x = variable(ell_);
    int k = 0;
    while (g.degree() > 0) {
      ++k;
      if (2 * k > g.degree()) {
        profile.push_back(g.degree());
        break;
      }
      h = h.powmod(ell_, g);
      const ModPoly d = gcd(g, h - x);
      if (d.degree() > 0) {
        for (int i = 0; i < d.degree() / k; ++i) profile.push_back(k);
        g = g.divmod(d).first.monic();
        h = h.divmod(g).second;
      }
    }
    std::sort(profile.begin(), profile.end());
    return profile;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const std::int64_t v = coeff(i);
      if (v == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || v != 1) os << v;
      if (i > 0) {
        if (v != 1) os << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

  std::int64_t inv_mod(std::int64_t a) const {
    a = ((a % ell_) + ell_) % ell_;
    if (a == 0) throw std::invalid_argument("inverse of zero");
    std::int64_t t = 0, new_t = 1, r = ell_, new_r = a;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return ((t % ell_) + ell_) % ell_;
  }

 private:
  std::int64_t mod(std::int64_t v) const { return ((v % ell_) + ell_) % ell_; }

  void check(const ModPoly& o) const {
    if (ell_ != o.ell_) throw std::invalid_argument("modulus mismatch");
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::int64_t ell_;
  std::vector<std::int64_t> c_;
};

/// Modular inverse of a in F_ell by the extended Euclidean algorithm.
inline std::int64_t inv_mod_prime(std::int64_t a, std::int64_t ell) {
  a = ((a % ell) + ell) % ell;
  if (a == 0) throw std::invalid_argument("inverse of zero");
  std::int64_t t = 0, new_t = 1, r = ell, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return ((t % ell) + ell) % ell;
}

/// Coefficientwise reduction of f modulo ell.  Throws BadPrime when ell divides
/// a coefficient denominator or the leading numerator (degree would drop).
inline ModPoly reduce_mod(const RationalPoly& f, std::int64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("modulus must be prime");
  if (f.is_zero()) return ModPoly::zero(ell);
  const Integer l(static_cast<long>(ell));
  std::vector<std::int64_t> c;
  c.reserve(static_cast<std::size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    const Rational& v = f.coeff(i);
    Integer den_mod = Integer(v.get_den()) % l;
    if (den_mod == 0) throw BadPrime(ell);
    Integer num_mod = Integer(v.get_num()) % l;
    Integer r = num_mod * inv_mod_prime(den_mod.get_si(), ell) % l;
    r = (r + l) % l;
    c.push_back(r.get_si());
  }
  if (c.back() == 0) throw BadPrime(ell);
  return ModPoly(ell, std::move(c));
}

}  // namespace cyclojac
