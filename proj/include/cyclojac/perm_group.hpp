#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclojac/integer.hpp"
#include "cyclojac/perm.hpp"

namespace cyclojac {

class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Limits for exhaustive operations.  Search routines answer "unknown" instead
/// of exceeding them.
struct SearchLimits {
  std::int64_t element_bound = 200000;   // element enumeration
  std::int64_t lattice_bound = 20000;    // full subgroup-lattice search
  std::int64_t join_budget = 5000000;    // elements touched across subgroup joins
};

enum class Tri { yes, no, unknown };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

class PermGroup;

/// Concrete subgroup witness attached to yes/no answers.
struct GroupWitness {
  std::vector<Perm> generators;
  Integer order;
  Integer index;
};

struct TriGroup {
  Tri value = Tri::unknown;
  std::optional<GroupWitness> witness;
  std::string note;
};

struct SimplicityReport {
  Tri value = Tri::unknown;
  bool abelian = false;
  std::optional<GroupWitness> witness;  // a proper nontrivial normal subgroup, when value == no
  std::string note;
};

/// Finite permutation group with a base/strong-generating-set structure.
/// Immutable after construction; all queries are const.
class PermGroup {
 public:
  PermGroup() : degree_(1), order_(1) {}

  PermGroup(int degree, std::vector<Perm> generators, std::vector<int> base_hint = {})
      : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    for (const Perm& g : generators)
      if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    normalize_generators(std::move(generators));
    for (int b : base_hint) {
      if (b < 0 || b >= degree_) throw std::invalid_argument("base point out of range");
      if (std::find(base_.begin(), base_.end(), b) == base_.end()) base_.push_back(b);
    }
    schreier_sims();
  }

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  static PermGroup symmetric(int n) {
    if (n <= 1) return trivial(std::max(n, 1));
    std::vector<Perm> gens{Perm::cycle(n, {0, 1})};
    if (n > 2) {
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
      gens.push_back(Perm::cycle(n, all));
    }
    return PermGroup(n, std::move(gens));
  }

  static PermGroup alternating(int n) {
    if (n <= 2) return trivial(std::max(n, 1));
    std::vector<Perm> gens{Perm::cycle(n, {0, 1, 2})};
    if (n > 3) {
      std::vector<int> pts;
      for (int i = n % 2 == 1 ? 0 : 1; i < n; ++i) pts.push_back(i);
      gens.push_back(Perm::cycle(n, pts));
    }
    return PermGroup(n, std::move(gens));
  }

  int degree() const { return degree_; }
  const Integer& order() const { return order_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    auto [residue, level] = strip(g, 0);
    (void)level;
    return residue.is_identity();
  }

  std::vector<int> orbit_of(int pt) const {
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    std::vector<int> orbit{pt};
    seen[static_cast<std::size_t>(pt)] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const Perm& g : gens_) {
        const int y = g(orbit[head]);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
  }

  bool is_transitive() const {
    return static_cast<int>(orbit_of(0).size()) == degree_;
  }

  bool is_2transitive() const {
    if (degree_ < 2) throw std::invalid_argument("2-transitivity needs degree >= 2");
    if (!is_transitive()) return false;
    const PermGroup stab = point_stabilizer(0);
    return static_cast<int>(stab.orbit_of(1).size()) == degree_ - 1;
  }

  /// Full stabilizer of a point, via a base change.
  PermGroup point_stabilizer(int pt) const {
    if (pt < 0 || pt >= degree_) throw std::invalid_argument("point out of range");
    const PermGroup rebased(degree_, gens_, {pt});
    std::vector<Perm> stab_gens;
    for (const auto& level : rebased.strong_levels_after_first()) stab_gens.push_back(level);
    return PermGroup(degree_, std::move(stab_gens));
  }

  /// Elements in ascending image order; throws BoundExceeded above max_count.
  std::vector<Perm> elements(std::int64_t max_count) const {
    if (order_ > max_count) throw BoundExceeded("group order exceeds enumeration bound");
    std::vector<Perm> out{Perm(degree_)};
    for (std::size_t l = trans_.size(); l-- > 0;) {
      std::vector<Perm> next;
      next.reserve(out.size() * trans_[l].size());
      for (const auto& [pt, u] : trans_[l])
        for (const Perm& e : out) next.push_back(u * e);
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Smallest subgroup containing `seed` closed under conjugation by this group.
  PermGroup normal_closure(const std::vector<Perm>& seed) const {
    for (const Perm& s : seed)
      if (!contains(s)) throw std::invalid_argument("seed element is not a group member");
    PermGroup n = span(degree_, seed);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Perm& g : gens_)
        for (const Perm& s : std::vector<Perm>(n.gens_)) {
          const Perm c = s.conjugated_by(g);
          if (!n.contains(c)) {
            n = n.extended_by(c);
            changed = true;
          }
        }
    }
    return n;
  }

  PermGroup derived_subgroup() const {
    std::vector<Perm> comms;
    for (const Perm& a : gens_)
      for (const Perm& b : gens_) {
        const Perm c = a.inverse() * b.inverse() * a * b;
        if (!c.is_identity()) comms.push_back(c);
      }
    return normal_closure(comms);
  }

  bool is_abelian() const {
    for (const Perm& a : gens_)
      for (const Perm& b : gens_)
        if (a * b != b * a) return false;
    return true;
  }

  /// The subgroup generated by all squares and all commutators; the quotient by
  /// it is the largest elementary abelian 2-quotient.
  PermGroup squares_and_commutators_subgroup() const {
    std::vector<Perm> seed;
    for (const Perm& a : gens_)
      for (const Perm& b : gens_) {
        const Perm c = a.inverse() * b.inverse() * a * b;
        if (!c.is_identity()) seed.push_back(c);
      }
    for (const Perm& g : gens_) {
      const Perm s = g * g;
      if (!s.is_identity()) seed.push_back(s);
    }
    return normal_closure(seed);
  }

  bool has_index2_subgroup() const { return squares_and_commutators_subgroup().order() < order_; }

  /// A concrete index-2 subgroup, when one exists.
  std::optional<PermGroup> index2_subgroup() const {
    const PermGroup m = squares_and_commutators_subgroup();
    if (m.order() == order_) return std::nullopt;
    // Greedy basis of the elementary abelian 2-quotient; drop the first basis
    // vector to get a hyperplane.
    std::vector<Perm> basis;
    PermGroup cur = m;
    for (const Perm& g : gens_)
      if (!cur.contains(g)) {
        basis.push_back(g);
        cur = cur.extended_by(g);
      }
    std::vector<Perm> hgens = m.generators();
    for (std::size_t i = 1; i < basis.size(); ++i) hgens.push_back(basis[i]);
    return span(degree_, hgens);
  }

  /// Subgroup generated by every element of ell-power order (normal by construction).
  PermGroup ell_power_closure(std::int64_t ell, const SearchLimits& limits = {}) const {
    if (ell < 2) throw std::invalid_argument("ell must be at least 2");
    PermGroup cur = trivial(degree_);
    for (const Perm& e : elements(limits.element_bound)) {
      std::int64_t o = e.order();
      while (o % ell == 0) o /= ell;
      if (o != 1) continue;
      if (!cur.contains(e)) cur = cur.extended_by(e);
    }
    return cur;
  }

  std::vector<std::vector<Perm>> conjugacy_classes(const SearchLimits& limits = {}) const {
    const std::vector<Perm> elems = elements(limits.element_bound);
    std::set<Perm> unvisited(elems.begin(), elems.end());
    std::vector<std::vector<Perm>> classes;
    while (!unvisited.empty()) {
      const Perm rep = *unvisited.begin();
      std::vector<Perm> cls;
      std::deque<Perm> queue{rep};
      unvisited.erase(rep);
      std::set<Perm> in_class{rep};
      while (!queue.empty()) {
        const Perm x = queue.front();
        queue.pop_front();
        cls.push_back(x);
        for (const Perm& g : gens_) {
          const Perm y = x.conjugated_by(g);
          if (in_class.insert(y).second) {
            unvisited.erase(y);
            queue.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  /// All normal subgroups (including the trivial one and the whole group),
  /// as joins of normal closures of conjugacy classes.
  std::vector<PermGroup> normal_subgroups(const SearchLimits& limits = {}) const {
    const auto classes = conjugacy_classes(limits);
    std::vector<PermGroup> closures;
    for (const auto& cls : classes) {
      if (cls.front().is_identity() && cls.size() == 1) continue;
      closures.push_back(normal_closure({cls.front()}));
    }
    std::vector<PermGroup> lattice{trivial(degree_)};
    std::set<std::string> seen{subgroup_key(lattice.front())};
    for (std::size_t head = 0; head < lattice.size(); ++head) {
      const PermGroup base = lattice[head];
      for (const PermGroup& c : closures) {
        std::vector<Perm> jgens = base.generators();
        jgens.insert(jgens.end(), c.generators().begin(), c.generators().end());
        PermGroup j = span(degree_, jgens);
        if (seen.insert(subgroup_key(j)).second) lattice.push_back(std::move(j));
      }
    }
    sort_by_order_then_key(lattice);
    return lattice;
  }

  SimplicityReport is_simple(const SearchLimits& limits = {}) const {
    SimplicityReport rep;
    rep.abelian = is_abelian();
    if (order_ == 1) {
      rep.value = Tri::no;
      rep.note = "trivial group";
      return rep;
    }
    if (is_prime(order_)) {
      rep.value = Tri::yes;
      rep.abelian = true;
      rep.note = "prime order";
      return rep;
    }
    if (order_ > limits.element_bound) {
      rep.value = Tri::unknown;
      rep.note = "order " + order_.get_str() + " exceeds element enumeration bound " +
                 std::to_string(limits.element_bound);
      return rep;
    }
    for (const PermGroup& n : normal_subgroups(limits)) {
      if (n.order() == 1 || n.order() == order_) continue;
      rep.value = Tri::no;
      rep.witness = GroupWitness{n.generators(), n.order(), order_ / n.order()};
      rep.note = "proper nontrivial normal subgroup of order " + n.order().get_str();
      return rep;
    }
    rep.value = Tri::yes;
    return rep;
  }

  /// Is there a proper subgroup whose index divides m?
  /// yes carries a witness subgroup; no is proven; unknown reports the bound hit.
  TriGroup proper_subgroup_index_dividing(std::int64_t m, const SearchLimits& limits = {}) const {
    TriGroup out;
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (m == 1 || order_ == 1) {
      out.value = Tri::no;
      out.note = m == 1 ? "only the whole group has index dividing 1" : "trivial group";
      return out;
    }
    // The trivial subgroup itself, when |G| divides m.
    if (order_ <= m && m % order_.get_si() == 0) {
      out.value = Tri::yes;
      out.witness = GroupWitness{{}, Integer(1), order_};
      out.note = "trivial subgroup";
      return out;
    }
    std::vector<std::int64_t> divs = sorted_divisors(m);
    divs.erase(divs.begin());  // drop 1
    // Index 2 is decidable without enumeration: such subgroups are exactly the
    // index-2 kernels over the squares-and-commutators subgroup.
    const bool two_divides = m % 2 == 0;
    if (two_divides) {
      if (auto h = index2_subgroup()) {
        out.value = Tri::yes;
        out.witness = GroupWitness{h->generators(), h->order(), Integer(2)};
        out.note = "index-2 subgroup from the elementary abelian 2-quotient";
        return out;
      }
      if (divs.size() == 1) {
        out.value = Tri::no;
        out.note = "no index-2 subgroup (squares and commutators generate the group)";
        return out;
      }
    }
    // Simple groups act faithfully on cosets, so an index-k subgroup forces
    // |G| to divide k!.
    const SimplicityReport simp = is_simple(limits);
    if (simp.value == Tri::yes) {
      bool all_excluded = true;
      for (std::int64_t k : divs) {
        if (k > 10000) {
          all_excluded = false;
          break;
        }
        if (mpz_divisible_p(factorial(static_cast<int>(k)).get_mpz_t(), order_.get_mpz_t())) {
          all_excluded = false;
          break;
        }
      }
      if (all_excluded) {
        out.value = Tri::no;
        out.note = "simple group: |G| divides no k! for k | m";
        return out;
      }
    }
    if (order_ > limits.element_bound) {
      out.value = Tri::unknown;
      out.note = "order " + order_.get_str() + " exceeds element enumeration bound " +
                 std::to_string(limits.element_bound);
      return out;
    }
    // Complete search: every subgroup is a join of cyclic subgroups, and every
    // partial join inside a target subgroup has order dividing the target.
    std::vector<Integer> targets;
    for (std::int64_t k : divs)
      if (mpz_divisible_ui_p(order_.get_mpz_t(), static_cast<unsigned long>(k)))
        targets.push_back(order_ / static_cast<long>(k));
    if (targets.empty()) {
      out.value = Tri::no;
      out.note = "no divisor of m divides |G|";
      return out;
    }
    const auto divides_some_target = [&](const Integer& o) {
      for (const Integer& t : targets)
        if (mpz_divisible_p(t.get_mpz_t(), o.get_mpz_t())) return true;
      return false;
    };
    const auto is_target = [&](const Integer& o) {
      return std::find(targets.begin(), targets.end(), o) != targets.end();
    };
    std::vector<PermGroup> cyclics;
    {
      std::set<std::string> seen;
      for (const Perm& e : elements(limits.element_bound)) {
        if (e.is_identity()) continue;
        PermGroup c = span(degree_, {e});
        if (!divides_some_target(c.order())) continue;
        if (seen.insert(subgroup_key(c)).second) cyclics.push_back(std::move(c));
      }
    }
    std::int64_t budget = limits.join_budget;
    std::vector<PermGroup> pool{trivial(degree_)};
    std::set<std::string> seen{subgroup_key(pool.front())};
    for (const PermGroup& c : cyclics) {
      if (is_target(c.order())) {
        out.value = Tri::yes;
        out.witness = GroupWitness{c.generators(), c.order(), order_ / c.order()};
        return out;
      }
      if (seen.insert(subgroup_key(c)).second) pool.push_back(c);
    }
    for (std::size_t head = 0; head < pool.size(); ++head) {
      const PermGroup base = pool[head];
      for (const PermGroup& c : cyclics) {
        if (base.contains(c.generators().front())) continue;
        std::vector<Perm> jgens = base.generators();
        jgens.insert(jgens.end(), c.generators().begin(), c.generators().end());
        PermGroup j = span(degree_, jgens);
        budget -= j.order().get_si();
        if (budget < 0) {
          out.value = Tri::unknown;
          out.note = "subgroup search budget exceeded";
          return out;
        }
        if (!divides_some_target(j.order())) continue;
        if (is_target(j.order())) {
          out.value = Tri::yes;
          out.witness = GroupWitness{j.generators(), j.order(), order_ / j.order()};
          return out;
        }
        if (seen.insert(subgroup_key(j)).second) pool.push_back(std::move(j));
      }
    }
    out.value = Tri::no;
    out.note = "exhaustive join search over cyclic subgroups";
    return out;
  }

  /// Is there a proper normal subgroup whose index divides m?
  TriGroup proper_normal_subgroup_index_dividing(std::int64_t m,
                                                 const SearchLimits& limits = {}) const {
    TriGroup out;
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (m == 1 || order_ == 1) {
      out.value = Tri::no;
      out.note = m == 1 ? "only the whole group has index dividing 1" : "trivial group";
      return out;
    }
    if (order_ <= m && m % order_.get_si() == 0) {
      out.value = Tri::yes;
      out.witness = GroupWitness{{}, Integer(1), order_};
      out.note = "trivial subgroup";
      return out;
    }
    std::vector<std::int64_t> divs = sorted_divisors(m);
    divs.erase(divs.begin());
    if (m % 2 == 0) {
      // Index-2 subgroups are automatically normal.
      if (auto h = index2_subgroup()) {
        out.value = Tri::yes;
        out.witness = GroupWitness{h->generators(), h->order(), Integer(2)};
        out.note = "index-2 subgroup (normal)";
        return out;
      }
      if (divs.size() == 1) {
        out.value = Tri::no;
        out.note = "no index-2 subgroup";
        return out;
      }
    }
    if (is_prime(order_)) {
      out.value = Tri::no;  // the trivial-subgroup case was handled above
      out.note = "prime order";
      return out;
    }
    if (order_ > limits.element_bound) {
      out.value = Tri::unknown;
      out.note = "order " + order_.get_str() + " exceeds element enumeration bound " +
                 std::to_string(limits.element_bound);
      return out;
    }
    for (const PermGroup& n : normal_subgroups(limits)) {
      if (n.order() == order_) continue;
      const Integer index = order_ / n.order();
      if (index <= m && m % index.get_si() == 0) {
        out.value = Tri::yes;
        out.witness = GroupWitness{n.generators(), n.order(), index};
        return out;
      }
    }
    out.value = Tri::no;
    out.note = "normal subgroup lattice enumerated";
    return out;
  }

  /// Every subgroup, by join closure of the cyclic subgroups.
  /// Only available below the lattice bound.
  std::optional<std::vector<PermGroup>> all_subgroups(const SearchLimits& limits = {}) const {
    if (order_ > limits.lattice_bound) return std::nullopt;
    std::vector<PermGroup> cyclics;
    std::set<std::string> seen_c;
    for (const Perm& e : elements(limits.lattice_bound)) {
      if (e.is_identity()) continue;
      PermGroup c = span(degree_, {e});
      if (seen_c.insert(subgroup_key(c)).second) cyclics.push_back(std::move(c));
    }
    std::vector<PermGroup> pool{trivial(degree_)};
    std::set<std::string> seen{subgroup_key(pool.front())};
    for (const PermGroup& c : cyclics)
      if (seen.insert(subgroup_key(c)).second) pool.push_back(c);
    std::int64_t budget = limits.join_budget;
    for (std::size_t head = 0; head < pool.size(); ++head) {
      const PermGroup base = pool[head];
      for (const PermGroup& c : cyclics) {
        if (base.contains(c.generators().front())) continue;
        std::vector<Perm> jgens = base.generators();
        jgens.insert(jgens.end(), c.generators().begin(), c.generators().end());
        PermGroup j = span(degree_, jgens);
        budget -= j.order().get_si();
        if (budget < 0) return std::nullopt;
        if (seen.insert(subgroup_key(j)).second) pool.push_back(std::move(j));
      }
    }
    sort_by_order_then_key(pool);
    return pool;
  }

  /// Incremental span: adds candidates only when they enlarge the group.
  static PermGroup span(int degree, const std::vector<Perm>& candidates) {
    PermGroup cur = trivial(degree);
    for (const Perm& p : candidates)
      if (!cur.contains(p)) cur = cur.extended_by(p);
    return cur;
  }

  PermGroup extended_by(const Perm& p) const {
    std::vector<Perm> g = gens_;
    g.push_back(p);
    return PermGroup(degree_, std::move(g));
  }

  /// Canonical key: sorted element images.  Only for small subgroups.
  static std::string subgroup_key(const PermGroup& g) {
    std::vector<Perm> elems = g.elements(1 << 22);
    std::string key;
    key.reserve(elems.size() * static_cast<std::size_t>(g.degree()));
    for (const Perm& e : elems)
      for (int v : e.images()) key.push_back(static_cast<char>(v & 0xff));
    return key;
  }

  bool same_group_as(const PermGroup& o) const {
    if (degree_ != o.degree_ || order_ != o.order_) return false;
    for (const Perm& g : o.gens_)
      if (!contains(g)) return false;
    return true;
  }

  static void sort_by_order_then_key(std::vector<PermGroup>& groups) {
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) keyed.emplace_back(subgroup_key(groups[i]), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
      const Integer& oa = groups[a.second].order();
      const Integer& ob = groups[b.second].order();
      if (oa != ob) return oa < ob;
      return a.first < b.first;
    });
    std::vector<PermGroup> out;
    out.reserve(groups.size());
    for (const auto& [key, idx] : keyed) out.push_back(std::move(groups[idx]));
    groups = std::move(out);
  }

 private:
  void normalize_generators(std::vector<Perm> generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    generators.erase(std::remove_if(generators.begin(), generators.end(),
                                    [](const Perm& p) { return p.is_identity(); }),
                     generators.end());
    gens_ = std::move(generators);
  }

  const std::vector<Perm> strong_levels_after_first() const {
    if (strong_.size() < 2) return {};
    return strong_[1];
  }

  void schreier_sims() {
    strong_.assign(base_.size(), {});
    trans_.assign(base_.size(), {});
    for (const Perm& g : gens_) place_generator(g);
    if (!base_.empty()) {
      for (std::size_t l = 0; l < base_.size(); ++l) rebuild_orbit(l);
      std::size_t i = base_.size();
      while (i-- > 0) {
        const auto failure = process_level(i);
        if (failure) {
          const auto& [h, j] = *failure;
          if (j == base_.size()) {
            base_.push_back(h.first_moved());
            strong_.push_back({});
            trans_.push_back({});
          }
          for (std::size_t l = i + 1; l <= j; ++l) {
            strong_[l].push_back(h);
            rebuild_orbit(l);
          }
          i = j + 1;  // reprocess upward from the deepest dirty level
        }
      }
    }
    order_ = 1;
    for (const auto& t : trans_) order_ *= static_cast<long>(t.size());
  }

  // Inserts g into every level it fixes the prefix of, extending the base if
  // g fixes all current base points.
  void place_generator(const Perm& g) {
    std::size_t l = 0;
    while (true) {
      if (l == base_.size()) {
        const int moved = g.first_moved();
        if (moved < 0) return;
        base_.push_back(moved);
        strong_.push_back({});
        trans_.push_back({});
      }
      strong_[l].push_back(g);
      if (g(base_[l]) != base_[l]) return;
      ++l;
    }
  }

  void rebuild_orbit(std::size_t l) {
    trans_[l].clear();
    const int b = base_[l];
    trans_[l].emplace(b, Perm(degree_));
    std::deque<int> queue{b};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      const Perm ux = trans_[l].at(x);
      for (const Perm& g : strong_[l]) {
        const int y = g(x);
        if (!trans_[l].count(y)) {
          trans_[l].emplace(y, g * ux);
          queue.push_back(y);
        }
      }
    }
  }

  // Scans the Schreier generators of level i; returns a non-sifting residue
  // and the level it got stuck at, or nullopt when the level is consistent.
  std::optional<std::pair<Perm, std::size_t>> process_level(std::size_t i) {
    rebuild_orbit(i);
    for (const auto& [pt, u1] : trans_[i]) {
      for (const Perm& g : strong_[i]) {
        const Perm u2 = trans_[i].at(g(pt));
        const Perm schreier = u2.inverse() * g * u1;
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(schreier, i + 1);
        if (!h.is_identity()) return std::make_pair(h, j);
      }
    }
    return std::nullopt;
  }

  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < base_.size(); ++l) {
      const int x = g(base_[l]);
      const auto it = trans_[l].find(x);
      if (it == trans_[l].end()) return {g, l};
      g = it->second.inverse() * g;
    }
    return {g, base_.size()};
  }

  int degree_;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<std::vector<Perm>> strong_;
  std::vector<std::map<int, Perm>> trans_;
  Integer order_;
};

/// Group description file: first line "degree n", one permutation in cycle
/// notation per line; '#' starts a comment.
inline PermGroup read_group_file(std::istream& in) {
  std::string line;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (degree < 0) {
      int n;
      if (first != "degree" || !(ls >> n) || n < 1)
        throw std::invalid_argument("group file must start with 'degree n'");
      degree = n;
      continue;
    }
    std::string rest;
    std::getline(ls, rest);
    gens.push_back(Perm::parse_cycles(first + rest, degree));
  }
  if (degree < 0) throw std::invalid_argument("group file must start with 'degree n'");
  return PermGroup(degree, std::move(gens));
}

inline void write_group_file(std::ostream& out, const PermGroup& g) {
  out << "degree " << g.degree() << "\n";
  for (const Perm& p : g.generators()) out << p.to_cycle_string() << "\n";
}

}  // namespace cyclojac
