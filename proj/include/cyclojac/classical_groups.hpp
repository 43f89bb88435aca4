#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclojac/finite_field.hpp"
#include "cyclojac/perm_group.hpp"

namespace cyclojac {

/// Bijection between F^d and {0,...,|F|^d - 1}: coordinates read big-endian,
/// v_0 most significant, so index 0 is the zero vector.
class AffinePointIndex {
 public:
  AffinePointIndex(const FiniteField& field, int dimension)
      : field_(&field), dim_(dimension), points_(1) {
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    for (int i = 0; i < dimension; ++i) points_ *= field.size();
  }

  const FiniteField& field() const { return *field_; }
  int dimension() const { return dim_; }
  std::int64_t point_count() const { return points_; }

  std::vector<std::int64_t> decode(std::int64_t index) const {
    if (index < 0 || index >= points_) throw std::out_of_range("point index");
    std::vector<std::int64_t> v(static_cast<std::size_t>(dim_));
    for (int i = dim_ - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = index % field_->size();
      index /= field_->size();
    }
    return v;
  }

  std::int64_t encode(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("coordinate count");
    std::int64_t idx = 0;
    for (std::int64_t c : v) idx = idx * field_->size() + c;
    return idx;
  }

  /// Permutation of the point set induced by a coordinate map.
  template <class Fn>
  Perm permutation(Fn&& map) const {
    std::vector<int> images(static_cast<std::size_t>(points_));
    for (std::int64_t p = 0; p < points_; ++p)
      images[static_cast<std::size_t>(p)] = static_cast<int>(encode(map(decode(p))));
    return Perm::from_images(std::move(images));
  }

 private:
  const FiniteField* field_;
  int dim_;
  std::int64_t points_;
};

/// |SL_d(F_s)| = s^{d(d-1)/2} * prod_{k=2..d} (s^k - 1).
inline Integer special_linear_order(int d, std::int64_t s) {
  Integer out = int_pow(Integer(static_cast<long>(s)), static_cast<unsigned long>(d * (d - 1) / 2));
  for (int k = 2; k <= d; ++k)
    out *= int_pow(Integer(static_cast<long>(s)), static_cast<unsigned long>(k)) - 1;
  return out;
}

/// |Sp_{2d}(F_s)| = s^{d^2} * prod_{k=1..d} (s^{2k} - 1).
inline Integer symplectic_order(int two_d, std::int64_t s) {
  if (two_d % 2 != 0) throw std::invalid_argument("symplectic dimension must be even");
  const int d = two_d / 2;
  Integer out = int_pow(Integer(static_cast<long>(s)), static_cast<unsigned long>(d * d));
  for (int k = 1; k <= d; ++k)
    out *= int_pow(Integer(static_cast<long>(s)), static_cast<unsigned long>(2 * k)) - 1;
  return out;
}

inline std::vector<Perm> translation_generators(const AffinePointIndex& idx) {
  const FiniteField& f = idx.field();
  std::vector<Perm> gens;
  for (int i = 0; i < idx.dimension(); ++i)
    gens.push_back(idx.permutation([&](std::vector<std::int64_t> v) {
      v[static_cast<std::size_t>(i)] = f.add(v[static_cast<std::size_t>(i)], f.one());
      return v;
    }));
  return gens;
}

/// Elementary matrices E_{ij}(1), i != j: v_i += v_j.
inline std::vector<Perm> elementary_matrix_generators(const AffinePointIndex& idx) {
  const FiniteField& f = idx.field();
  std::vector<Perm> gens;
  for (int i = 0; i < idx.dimension(); ++i)
    for (int j = 0; j < idx.dimension(); ++j) {
      if (i == j) continue;
      gens.push_back(idx.permutation([&](std::vector<std::int64_t> v) {
        v[static_cast<std::size_t>(i)] =
            f.add(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        return v;
      }));
    }
  return gens;
}

/// Standard symplectic form with antidiagonal +-1 blocks:
/// <x, y> = sum_{i<d} (x_i y_{2d-1-i} - x_{2d-1-i} y_i).
inline std::int64_t symplectic_form(const AffinePointIndex& idx,
                                    const std::vector<std::int64_t>& x,
                                    const std::vector<std::int64_t>& y) {
  const FiniteField& f = idx.field();
  const int n = idx.dimension();
  std::int64_t acc = f.zero();
  for (int i = 0; i < n / 2; ++i) {
    const std::size_t a = static_cast<std::size_t>(i);
    const std::size_t b = static_cast<std::size_t>(n - 1 - i);
    acc = f.add(acc, f.mul(x[a], y[b]));
    acc = f.sub(acc, f.mul(x[b], y[a]));
  }
  return acc;
}

/// Transvections x -> x + <x, v> v for every nonzero v.
inline std::vector<Perm> symplectic_transvection_generators(const AffinePointIndex& idx) {
  const FiniteField& f = idx.field();
  std::vector<Perm> gens;
  for (std::int64_t vi = 1; vi < idx.point_count(); ++vi) {
    const std::vector<std::int64_t> v = idx.decode(vi);
    gens.push_back(idx.permutation([&](std::vector<std::int64_t> x) {
      const std::int64_t s = symplectic_form(idx, x, v);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.add(x[i], f.mul(s, v[i]));
      return x;
    }));
  }
  return gens;
}

/// SA(d, F): all v -> A v + t with A in SL_d(F), as a permutation group on F^d.
inline PermGroup build_special_affine(const FiniteField& field, int d) {
  if (d <= 1) throw std::invalid_argument("special affine groups need dimension d > 1");
  const AffinePointIndex idx(field, d);
  std::vector<Perm> gens = translation_generators(idx);
  for (Perm& p : elementary_matrix_generators(idx)) gens.push_back(std::move(p));
  return PermGroup(static_cast<int>(idx.point_count()), std::move(gens));
}

/// ASP(2d, F): all v -> A v + t with A in Sp_{2d}(F), on F^{2d}.
inline PermGroup build_affine_symplectic(const FiniteField& field, int two_d) {
  if (two_d < 2 || two_d % 2 != 0)
    throw std::invalid_argument("affine symplectic groups need even dimension >= 2");
  const AffinePointIndex idx(field, two_d);
  std::vector<Perm> gens = translation_generators(idx);
  for (Perm& p : symplectic_transvection_generators(idx)) gens.push_back(std::move(p));
  return PermGroup(static_cast<int>(idx.point_count()), std::move(gens));
}

/// <elementary matrices> has the full SL order.
inline bool verify_generation_by_elementary(const FiniteField& field, int d) {
  if (d <= 1) throw std::invalid_argument("dimension must exceed 1");
  const AffinePointIndex idx(field, d);
  const PermGroup linear(static_cast<int>(idx.point_count()), elementary_matrix_generators(idx));
  return linear.order() == special_linear_order(d, field.size());
}

/// <symplectic transvections> has the full Sp order.
inline bool verify_generation_by_transvections(const FiniteField& field, int two_d) {
  if (two_d < 2 || two_d % 2 != 0) throw std::invalid_argument("even dimension required");
  const AffinePointIndex idx(field, two_d);
  const PermGroup linear(static_cast<int>(idx.point_count()),
                         symplectic_transvection_generators(idx));
  return linear.order() == symplectic_order(two_d, field.size());
}

struct AffineGroupReport {
  Integer order;
  bool two_transitive = false;
  std::optional<bool> ell_closure_is_whole;           // empty when beyond bounds
  Tri normal_index_condition = Tri::unknown;          // yes: no proper normal subgroup of index | n-1
  std::string normal_condition_method;                // "direct-lattice" or "inferred-from-closure"
  std::optional<GroupWitness> violating_subgroup;     // when the condition fails
  std::string note;
};

/// Checks the group-theoretic facts the affine constructions rely on:
/// 2-transitivity, that ell-power elements generate everything, and the
/// absence of proper normal subgroups of index dividing n-1.
inline AffineGroupReport verify_affine_theorem_hypotheses(const PermGroup& g, std::int64_t ell,
                                                          const SearchLimits& limits = {}) {
  AffineGroupReport rep;
  rep.order = g.order();
  rep.two_transitive = g.is_2transitive();
  const std::int64_t m = g.degree() - 1;
  try {
    rep.ell_closure_is_whole = g.ell_power_closure(ell, limits).order() == g.order();
  } catch (const BoundExceeded&) {
    rep.ell_closure_is_whole = std::nullopt;
  }
  TriGroup normal = g.proper_normal_subgroup_index_dividing(m, limits);
  if (normal.value == Tri::no) {
    rep.normal_index_condition = Tri::yes;
    rep.normal_condition_method = "direct-lattice";
  } else if (normal.value == Tri::yes) {
    rep.normal_index_condition = Tri::no;
    rep.normal_condition_method = "direct-lattice";
    rep.violating_subgroup = normal.witness;
  } else if (rep.ell_closure_is_whole.value_or(false)) {
    // A proper normal subgroup of index dividing ell^{rd} - 1 would contain
    // every ell-power element, hence the whole group.
    rep.normal_index_condition = Tri::yes;
    rep.normal_condition_method = "inferred-from-closure";
  } else {
    rep.normal_index_condition = Tri::unknown;
    rep.normal_condition_method = "search bounds exceeded";
    rep.note = normal.note;
  }
  return rep;
}

struct GroupSpec {
  bool symplectic = false;
  int dimension = 0;     // d for SA, 2d for ASP
  std::int64_t ell = 0;  // field characteristic
  int r = 1;             // field extension degree
};

/// Parses "SA(d,q)" / "ASP(2d,q)" with q a prime power, also written "l^r".
inline GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec spec;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("group spec: expected '" + std::string(1, c) + "'");
    ++pos;
  };
  const auto number = [&]() -> std::int64_t {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("group spec: expected a number");
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  };
  skip_ws();
  if (text.compare(pos, 3, "ASP") == 0) {
    spec.symplectic = true;
    pos += 3;
  } else if (text.compare(pos, 2, "SA") == 0) {
    pos += 2;
  } else {
    throw std::invalid_argument("group spec must start with SA or ASP");
  }
  expect('(');
  spec.dimension = static_cast<int>(number());
  expect(',');
  std::int64_t base = number();
  skip_ws();
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    spec.ell = base;
    spec.r = static_cast<int>(number());
    if (!is_prime(spec.ell)) throw std::invalid_argument("group spec: field characteristic must be prime");
  } else {
    int r = 0;
    std::int64_t p = 0;
    if (!factor_prime_power(base, p, r))
      throw std::invalid_argument("group spec: field size must be a prime power");
    spec.ell = p;
    spec.r = r;
  }
  expect(')');
  skip_ws();
  if (pos != text.size()) throw std::invalid_argument("group spec: trailing characters");
  return spec;
}

}  // namespace cyclojac
