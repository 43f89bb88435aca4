#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclojac/criteria.hpp"
#include "cyclojac/modpoly.hpp"
#include "cyclojac/parse.hpp"
#include "cyclojac/perm_group.hpp"
#include "cyclojac/poly.hpp"

namespace cyclojac {

enum class QuarticClass { S4, A4, D4, C4, V4 };

inline const char* quartic_class_name(QuarticClass c) {
  switch (c) {
    case QuarticClass::S4: return "S4";
    case QuarticClass::A4: return "A4";
    case QuarticClass::D4: return "D4";
    case QuarticClass::C4: return "C4";
    case QuarticClass::V4: return "V4";
  }
  return "?";
}

enum class TransitivityTier { unknown, transitive, two_transitive };

inline const char* tier_name(TransitivityTier t) {
  switch (t) {
    case TransitivityTier::transitive: return "transitive";
    case TransitivityTier::two_transitive: return "2-transitive";
    default: return "unknown";
  }
}

struct IrreducibilityEvidence {
  Tri value = Tri::unknown;
  std::optional<RationalPoly> witness_factor;  // a proper factor, when value == no
  std::string method;
};

/// Certified facts about the Galois group of f over the rationals.
struct GaloisEvidence {
  int degree = 0;
  IrreducibilityEvidence irreducible;
  TransitivityTier tier = TransitivityTier::unknown;
  std::vector<std::pair<std::int64_t, std::vector<int>>> cycle_types;  // (prime, degree profile)
  std::optional<QuarticClass> exact_class;
  bool contains_An = false;
  bool contains_Sn = false;
  std::vector<std::string> rules;  // ids of the containment rules that fired
  std::optional<PermGroup> asserted_group;
  std::vector<std::string> assumptions;
};

struct ContainmentResult {
  Tri value = Tri::unknown;
  std::vector<std::string> rules;
  std::string reason;
};

/// Rational roots of a polynomial with multiplicity-free output, by the
/// rational root theorem on the primitive integer form.
inline std::vector<Rational> rational_roots(const RationalPoly& f) {
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  std::vector<Integer> c = f.primitive_integer_coeffs();
  // Factor out x while the constant term vanishes.
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  std::vector<Integer> cc(c.begin() + static_cast<std::ptrdiff_t>(shift), c.end());
  if (cc.size() < 2) return roots;
  const auto divisors_of = [](Integer v) {
    std::vector<Integer> divs;
    v = abs(v);
    for (Integer d(1); d * d <= v; ++d)
      if (v % d == 0) {
        divs.push_back(d);
        if (d * d != v) divs.push_back(v / d);
      }
    std::sort(divs.begin(), divs.end());
    return divs;
  };
  std::vector<Rational> probe;
  for (const Integer& p : divisors_of(cc.front()))
    for (const Integer& q : divisors_of(cc.back())) {
      Rational cand(p, q);
      cand.canonicalize();
      probe.push_back(cand);
      probe.push_back(-cand);
    }
  std::sort(probe.begin(), probe.end());
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
  std::vector<Rational> rc;
  rc.reserve(cc.size());
  for (const Integer& v : cc) rc.emplace_back(v);
  const RationalPoly g{std::vector<Rational>(rc)};
  for (const Rational& cand : probe)
    if (g.eval(cand) == 0) roots.push_back(cand);
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Degree profiles of f mod ell for good primes ell <= budget.  Each profile is
/// a cycle type occurring in the Galois group of f.
inline std::vector<std::pair<std::int64_t, std::vector<int>>> cycle_type_sample(
    const RationalPoly& f, std::int64_t prime_budget) {
  if (f.degree() < 1 || !f.is_squarefree())
    throw std::invalid_argument("cycle types need a squarefree nonconstant polynomial");
  std::vector<Rational> rc;
  for (const Integer& v : f.primitive_integer_coeffs()) rc.emplace_back(v);
  const RationalPoly fi{std::move(rc)};
  std::vector<std::pair<std::int64_t, std::vector<int>>> out;
  for (std::int64_t ell : primes_up_to(prime_budget)) {
    try {
      const ModPoly g = reduce_mod(fi, ell);
      out.emplace_back(ell, g.factor_degree_profile());
    } catch (const BadPrime&) {
    } catch (const NotSquarefree&) {
      // ell divides the discriminant; skip.
    }
  }
  return out;
}

namespace detail {

// Cycle types of all powers of an element with the given cycle type.  The type
// of the e-th power depends only on gcd(e, lcm), so divisors of the lcm suffice.
inline std::set<std::vector<int>> power_cycle_types(const std::vector<int>& type) {
  std::int64_t l = 1;
  for (int d : type) l = std::lcm<std::int64_t>(l, d);
  std::set<std::vector<int>> out;
  for (std::int64_t e : sorted_divisors(l)) {
    std::vector<int> t;
    for (int d : type) {
      const int g = static_cast<int>(std::gcd<std::int64_t>(d, e));
      for (int i = 0; i < g; ++i) t.push_back(d / g);
    }
    std::sort(t.begin(), t.end());
    out.insert(std::move(t));
  }
  return out;
}

inline bool is_transposition_type(const std::vector<int>& t, int n) {
  if (static_cast<int>(t.size()) != n - 1) return false;
  return t.back() == 2;
}

// One p'-cycle and fixed points, with n/2 < p' < n-2 prime.
inline bool is_window_prime_cycle(const std::vector<int>& t, int n) {
  int big = 0, count = 0;
  for (int d : t)
    if (d > 1) {
      big = d;
      ++count;
    }
  if (count != 1) return false;
  return is_prime(static_cast<std::int64_t>(big)) && 2 * big > n && big < n - 2;
}

}  // namespace detail

/// Proof-or-unknown irreducibility evidence over the rationals.
inline IrreducibilityEvidence is_irreducible_evidence(const RationalPoly& f,
                                                      std::int64_t prime_budget = 200) {
  if (f.degree() < 1 || !f.is_squarefree())
    throw std::invalid_argument("irreducibility evidence needs a squarefree nonconstant polynomial");
  IrreducibilityEvidence ev;
  const int n = f.degree();
  if (n == 1) {
    ev.value = Tri::yes;
    ev.method = "degree one";
    return ev;
  }
  const std::vector<Rational> roots = rational_roots(f);
  if (!roots.empty()) {
    ev.value = Tri::no;
    ev.witness_factor = RationalPoly({-roots.front(), Rational(1)});
    ev.method = "rational root";
    return ev;
  }
  if (n <= 3) {
    ev.value = Tri::yes;
    ev.method = "no rational root";
    return ev;
  }
  if (n == 4) {
    // Monic transform y = L x; search integer quadratic factorizations.
    const std::vector<Integer> pc = f.primitive_integer_coeffs();
    const Integer& L = pc[4];
    const Integer A = pc[3], B = pc[2] * L, C = pc[1] * L * L, D = pc[0] * L * L * L;
    std::vector<Integer> bdivs;
    {
      Integer v = abs(D);
      for (Integer d(1); d * d <= v; ++d)
        if (v % d == 0) {
          bdivs.push_back(d);
          if (d * d != v) bdivs.push_back(v / d);
        }
      std::sort(bdivs.begin(), bdivs.end());
    }
    for (const Integer& babs : bdivs)
      for (int sign = 0; sign < 2; ++sign) {
        const Integer b = sign ? -babs : babs;
        if (b == 0) continue;
        const Integer d = D / b;
        const Integer disc = A * A - 4 * (B - b - d);
        if (!is_perfect_square(disc)) continue;
        Integer s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        for (int ssign = 0; ssign < 2; ++ssign) {
          const Integer sv = ssign ? -s : s;
          if ((A + sv) % 2 != 0) continue;
          const Integer a = (A + sv) / 2;
          const Integer cq = A - a;
          if (a * d + b * cq != C) continue;
          // (y^2 + a y + b) back through y = L x, normalized monic in x.
          std::vector<Rational> w{Rational(b) / Rational(L * L), Rational(a) / Rational(L),
                                  Rational(1)};
          ev.value = Tri::no;
          ev.witness_factor = RationalPoly(std::move(w));
          ev.method = "integer quadratic factorization";
          return ev;
        }
      }
    ev.value = Tri::yes;
    ev.method = "no rational root or quadratic factor";
    return ev;
  }
  // Degree >= 5: modular evidence.
  const auto samples = cycle_type_sample(f, prime_budget);
  for (const auto& [ell, profile] : samples)
    if (profile.size() == 1) {
      ev.value = Tri::yes;
      ev.method = "irreducible modulo " + std::to_string(ell);
      return ev;
    }
  // Subset-sum obstruction: a degree-a factor needs a sub-multiset of every
  // modular profile summing to a.
  bool all_blocked = !samples.empty();
  for (int a = 1; all_blocked && 2 * a <= n; ++a) {
    bool blocked = false;
    for (const auto& [ell, profile] : samples) {
      std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
      reach[0] = true;
      for (int d : profile)
        for (int s = n - d; s >= 0; --s)
          if (reach[static_cast<std::size_t>(s)]) reach[static_cast<std::size_t>(s + d)] = true;
      if (!reach[static_cast<std::size_t>(a)]) {
        blocked = true;
        break;
      }
    }
    if (!blocked) all_blocked = false;
  }
  if (all_blocked) {
    ev.value = Tri::yes;
    ev.method = "modular profiles exclude every factor degree";
    return ev;
  }
  ev.value = Tri::unknown;
  ev.method = "no modular certificate within prime budget " + std::to_string(prime_budget);
  return ev;
}

/// Exact Galois class of an irreducible quartic, by the resolvent cubic, the
/// discriminant square test and the quadratic-splitting disambiguation of the
/// one-rational-root case.
inline QuarticClass quartic_galois(const RationalPoly& f, std::int64_t prime_budget = 200) {
  if (f.degree() != 4) throw std::invalid_argument("quartic classification needs degree 4");
  if (is_irreducible_evidence(f, prime_budget).value != Tri::yes)
    throw std::invalid_argument("quartic classification needs an irreducible polynomial");
  const RationalPoly g = f.monic();
  const Rational a = g.coeff(3), b = g.coeff(2), c = g.coeff(1), d = g.coeff(0);
  const RationalPoly resolvent({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rational(1)});
  const std::vector<Rational> roots = rational_roots(resolvent);
  const Rational disc = RationalPoly::discriminant(f);
  if (roots.empty()) return is_rational_square(disc) ? QuarticClass::A4 : QuarticClass::S4;
  if (roots.size() == 3) return QuarticClass::V4;
  // One rational resolvent root: C4 when both attached quadratics split over
  // the discriminant field, D4 otherwise.
  const Rational y0 = roots.front();
  const auto splits_over_disc_field = [&](const Rational& t) {
    return t == 0 || is_rational_square(t) || is_rational_square(t * disc);
  };
  const Rational d1 = y0 * y0 - 4 * d;
  const Rational d2 = a * a - 4 * b + 4 * y0;
  return splits_over_disc_field(d1) && splits_over_disc_field(d2) ? QuarticClass::C4
                                                                  : QuarticClass::D4;
}

/// Does the S4 splitting field stay linearly disjoint from Q(zeta_{p^r})?
/// True iff disc * p^* is not a rational square, p^* = (-1)^((p-1)/2) p; the
/// answer does not depend on r since Q(zeta_{p^r}) has a unique quadratic
/// subfield Q(sqrt(p^*)) for odd p.
inline bool s4_persists_over_cyclotomic(const Rational& disc, std::int64_t p, int r) {
  if (p == 2) throw std::invalid_argument("p = 2 is unsupported");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (disc == 0 || is_rational_square(disc))
    throw std::invalid_argument("discriminant must be a nonzero nonsquare");
  const long p_star = (p % 4 == 1) ? static_cast<long>(p) : -static_cast<long>(p);
  return !is_rational_square(disc * Rational(p_star));
}

/// Collects all evidence about Gal(f) in one pass.
inline GaloisEvidence gather_galois_evidence(const RationalPoly& f, std::int64_t prime_budget = 200,
                                             std::optional<PermGroup> asserted = std::nullopt) {
  GaloisEvidence ev;
  ev.degree = f.degree();
  ev.irreducible = is_irreducible_evidence(f, prime_budget);
  ev.cycle_types = cycle_type_sample(f, prime_budget);
  if (ev.degree == 4 && ev.irreducible.value == Tri::yes)
    ev.exact_class = quartic_galois(f, prime_budget);
  if (asserted) {
    if (asserted->degree() != ev.degree)
      throw std::invalid_argument("asserted group degree must match the polynomial degree");
    ev.asserted_group = std::move(asserted);
    ev.assumptions.push_back("user-asserted Galois group of order " +
                             ev.asserted_group->order().get_str());
  }
  const int n = ev.degree;
  if (ev.irreducible.value == Tri::yes) ev.tier = TransitivityTier::transitive;
  // Containment rules from witnessed cycle types.
  bool n_cycle = false, transposition = false, window_cycle = false;
  for (const auto& [ell, profile] : ev.cycle_types) {
    for (const auto& t : detail::power_cycle_types(profile)) {
      if (static_cast<int>(t.size()) == 1) n_cycle = true;
      if (detail::is_transposition_type(t, n)) transposition = true;
      if (detail::is_window_prime_cycle(t, n)) window_cycle = true;
    }
  }
  const bool transitive = ev.tier != TransitivityTier::unknown;
  if (transitive && n_cycle && window_cycle) {
    ev.contains_An = true;
    ev.rules.push_back("an-jordan-prime-window");
    if (transposition) {
      ev.contains_Sn = true;
      ev.rules.push_back("sn-transposition-upgrade");
    }
  }
  // Prime degree: transitive is primitive, and a primitive group with a
  // transposition is the full symmetric group.
  if (!ev.contains_Sn && transitive && transposition && is_prime(static_cast<std::int64_t>(n))) {
    ev.contains_Sn = true;
    ev.contains_An = true;
    ev.rules.push_back("sn-prime-degree-transposition");
  }
  return ev;
}

/// Certifies that Gal(f) contains a doubly transitive subgroup:
/// yes from the exact quartic class, the cycle-type containment rules, or a
/// passing asserted group; no from a non-2-transitive exact class or a failing
/// asserted group; unknown otherwise.
inline ContainmentResult certify_contains_2transitive(const GaloisEvidence& ev) {
  ContainmentResult res;
  if (ev.exact_class) {
    if (*ev.exact_class == QuarticClass::S4 || *ev.exact_class == QuarticClass::A4) {
      res.value = Tri::yes;
      res.rules.push_back("quartic-exact-class");
      res.reason = std::string("exact class ") + quartic_class_name(*ev.exact_class);
      return res;
    }
    res.value = Tri::no;
    res.reason = std::string("exact class ") + quartic_class_name(*ev.exact_class) +
                 " is not doubly transitive";
    return res;
  }
  if (ev.contains_Sn && ev.degree >= 2) {
    res.value = Tri::yes;
    res.rules = ev.rules;
    res.reason = "contains the full symmetric group";
    return res;
  }
  if (ev.contains_An && ev.degree >= 4) {
    res.value = Tri::yes;
    res.rules = ev.rules;
    res.reason = "contains the alternating group";
    return res;
  }
  if (ev.asserted_group) {
    if (ev.asserted_group->is_2transitive()) {
      res.value = Tri::yes;
      res.rules.push_back("asserted-group-2transitive");
      res.reason = "asserted group is doubly transitive";
    } else {
      res.value = Tri::no;
      res.reason = "asserted group is not doubly transitive";
    }
    return res;
  }
  res.value = Tri::unknown;
  res.reason = "no containment certificate within the prime budget";
  return res;
}

inline ContainmentResult certify_contains_2transitive(const RationalPoly& f,
                                                      const GaloisEvidence& ev) {
  if (f.degree() != ev.degree) throw std::invalid_argument("evidence does not match polynomial");
  return certify_contains_2transitive(ev);
}

}  // namespace cyclojac
