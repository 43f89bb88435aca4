// Independent brute-force oracles used to freeze expected values.  These stay
// deliberately naive and separate from the library implementations they check.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cyclojac/integer.hpp"
#include "cyclojac/modpoly.hpp"
#include "cyclojac/perm.hpp"
#include "cyclojac/poly.hpp"

namespace oracles {

/// Resultant as the determinant of the Sylvester matrix, by exact Gaussian
/// elimination over the rationals.
inline cyclojac::Rational sylvester_resultant(const cyclojac::RationalPoly& f,
                                              const cyclojac::RationalPoly& g) {
  using cyclojac::Rational;
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return Rational(0);
  if (m == 0 && n == 0) return Rational(1);
  const int size = m + n;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size),
                                       std::vector<Rational>(static_cast<std::size_t>(size), Rational(0)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) a[row][row + k] = f.coeff(m - k);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) a[n + row][row + k] = g.coeff(n - k);
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int row = col; row < size; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < size; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (int k = col; k < size; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  return det;
}

/// Closure of a generating set by repeated multiplication.
inline std::set<cyclojac::Perm> brute_closure(int degree, const std::vector<cyclojac::Perm>& gens,
                                              std::size_t cap = 2000000) {
  std::set<cyclojac::Perm> elems{cyclojac::Perm(degree)};
  std::vector<cyclojac::Perm> frontier{cyclojac::Perm(degree)};
  while (!frontier.empty()) {
    std::vector<cyclojac::Perm> next;
    for (const cyclojac::Perm& e : frontier)
      for (const cyclojac::Perm& g : gens) {
        const cyclojac::Perm p = g * e;
        if (elems.insert(p).second) {
          next.push_back(p);
          if (elems.size() > cap) throw std::runtime_error("brute closure cap exceeded");
        }
      }
    frontier = std::move(next);
  }
  return elems;
}

/// Factor degree profile by trial division with monic polynomials in ascending
/// degree and coefficient order.
inline std::vector<int> brute_factor_profile(cyclojac::ModPoly g) {
  const std::int64_t ell = g.modulus();
  std::vector<int> profile;
  g = g.monic();
  for (int d = 1; g.degree() > 0 && d <= g.degree();) {
    bool divided = false;
    std::vector<std::int64_t> cand(static_cast<std::size_t>(d) + 1, 0);
    cand.back() = 1;
    for (;;) {
      const cyclojac::ModPoly divisor(ell, cand);
      if (divisor.is_irreducible()) {
        auto [quot, rem] = g.divmod(divisor);
        if (rem.is_zero()) {
          profile.push_back(d);
          g = quot.monic();
          divided = true;
          break;
        }
      }
      int i = 0;
      while (i < d && cand[static_cast<std::size_t>(i)] == ell - 1) {
        cand[static_cast<std::size_t>(i)] = 0;
        ++i;
      }
      if (i == d) break;
      ++cand[static_cast<std::size_t>(i)];
    }
    if (!divided) ++d;
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace oracles
