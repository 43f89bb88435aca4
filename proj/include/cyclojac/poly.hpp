#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclojac/integer.hpp"

namespace cyclojac {

/// Univariate polynomial with exact rational coefficients.
/// coeff(i) is the coefficient of x^i; the zero polynomial has degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RationalPoly constant(const Rational& v) { return RationalPoly({v}); }

  static RationalPoly variable() { return RationalPoly({Rational(0), Rational(1)}); }

  static RationalPoly from_int_coeffs(const std::vector<long>& a) {
    std::vector<Rational> c;
    c.reserve(a.size());
    for (long v : a) c.emplace_back(v);
    return RationalPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<Rational>& coeffs() const { return c_; }

  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RationalPoly& o) const { return !(*this == o); }

  RationalPoly operator+(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RationalPoly(std::move(r));
  }

  RationalPoly operator-() const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v = -v;
    return RationalPoly(std::move(r));
  }

  RationalPoly operator-(const RationalPoly& o) const { return *this + (-o); }

  RationalPoly operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return RationalPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(r));
  }

  RationalPoly operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    return RationalPoly(std::move(r));
  }

  RationalPoly pow(unsigned e) const {
    RationalPoly r = constant(Rational(1));
    RationalPoly b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  RationalPoly derivative() const {
    if (degree() < 1) return RationalPoly();
    std::vector<Rational> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
    return RationalPoly(std::move(r));
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    RationalPoly rem = *this;
    std::vector<Rational> q(degree() >= d.degree() ? static_cast<std::size_t>(degree() - d.degree() + 1) : 0,
                            Rational(0));
    const Rational lead = d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      const int shift = rem.degree() - d.degree();
      const Rational factor = rem.leading() / lead;
      q[static_cast<std::size_t>(shift)] = factor;
      std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
      for (const auto& v : d.c_) sub.push_back(v * factor);
      rem = rem - RationalPoly(std::move(sub));
    }
    return {RationalPoly(std::move(q)), rem};
  }

  RationalPoly monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
  }

  /// Monic gcd via the Euclidean algorithm.
  static RationalPoly gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
      RationalPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Resultant via the Euclidean remainder sequence.
  static Rational resultant(const RationalPoly& f, const RationalPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    if (f.degree() == 0) return pow_rat(f.leading(), g.degree());
    if (g.degree() == 0) return pow_rat(g.leading(), f.degree());
    if (f.degree() < g.degree()) {
      Rational sign((f.degree() * g.degree()) % 2 == 0 ? 1 : -1);
      return sign * resultant(g, f);
    }
    RationalPoly r = f.divmod(g).second;
    if (r.is_zero()) return Rational(0);
    Rational sign((f.degree() * g.degree()) % 2 == 0 ? 1 : -1);
    return sign * pow_rat(g.leading(), f.degree() - r.degree()) * resultant(g, r);
  }

  /// Discriminant with the sign convention (-1)^{n(n-1)/2} res(f, f') / lc(f).
  static Rational discriminant(const RationalPoly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant of a constant polynomial");
    Rational res = resultant(f, f.derivative());
    Rational sign((n * (n - 1) / 2) % 2 == 0 ? 1 : -1);
    return sign * res / f.leading();
  }

  bool is_squarefree() const {
    if (degree() < 1) throw std::invalid_argument("squarefreeness of a constant polynomial");
    return gcd(*this, derivative()).degree() == 0;
  }

  /// Least common multiple of coefficient denominators.
  Integer denominator_lcm() const {
    Integer l(1);
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
  }

  /// Integer coefficient vector of denominator_lcm() * f divided by its content,
  /// sign-normalized to a positive leading coefficient.
  std::vector<Integer> primitive_integer_coeffs() const {
    if (is_zero()) return {};
    const Integer l = denominator_lcm();
    std::vector<Integer> out;
    out.reserve(c_.size());
    Integer content(0);
    for (const auto& v : c_) {
      Integer num = Integer(v.get_num()) * (l / Integer(v.get_den()));
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
      out.push_back(std::move(num));
    }
    if (content == 0) content = 1;
    for (auto& v : out) v /= content;
    if (out.back() < 0)
      for (auto& v : out) v = -v;
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      Rational a = v;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      const bool unit = (a == 1);
      if (i == 0) {
        os << a.get_str();
      } else {
        if (!unit) os << a.get_str() << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  static Rational pow_rat(const Rational& b, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace cyclojac
