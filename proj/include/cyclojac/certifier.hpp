#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclojac/classical_groups.hpp"
#include "cyclojac/criteria.hpp"
#include "cyclojac/galois.hpp"
#include "cyclojac/perm_group.hpp"

namespace cyclojac {

using nlohmann::json;

/// Conclusion tiers, strongest last; each tier implies the ones below it.
enum class ConclusionTier {
  inconclusive = 0,
  simple_q_algebra = 1,
  central_simple_over_cyclotomic = 2,
  end_is_cyclotomic_ring = 3,
};

inline const char* tier_id(ConclusionTier t) {
  switch (t) {
    case ConclusionTier::end_is_cyclotomic_ring: return "end_is_cyclotomic_ring";
    case ConclusionTier::central_simple_over_cyclotomic: return "central_simple_over_cyclotomic";
    case ConclusionTier::simple_q_algebra: return "simple_q_algebra";
    default: return "inconclusive";
  }
}

inline ConclusionTier tier_from_id(const std::string& id) {
  if (id == "end_is_cyclotomic_ring") return ConclusionTier::end_is_cyclotomic_ring;
  if (id == "central_simple_over_cyclotomic") return ConclusionTier::central_simple_over_cyclotomic;
  if (id == "simple_q_algebra") return ConclusionTier::simple_q_algebra;
  if (id == "inconclusive") return ConclusionTier::inconclusive;
  throw std::invalid_argument("unknown tier id: " + id);
}

enum class FieldAssumptionStatus {
  user_asserted,
  derived_simple_group,
  derived_s4_discriminant,
  trivial_rational,  // q = 2: zeta_2 = -1 lies in the rationals
  unresolved,
};

inline const char* field_status_id(FieldAssumptionStatus s) {
  switch (s) {
    case FieldAssumptionStatus::user_asserted: return "user-asserted";
    case FieldAssumptionStatus::derived_simple_group: return "derived-simple-group";
    case FieldAssumptionStatus::derived_s4_discriminant: return "derived-s4-discriminant";
    case FieldAssumptionStatus::trivial_rational: return "trivial-rational";
    default: return "unresolved";
  }
}

inline FieldAssumptionStatus field_status_from_id(const std::string& id) {
  if (id == "user-asserted") return FieldAssumptionStatus::user_asserted;
  if (id == "derived-simple-group") return FieldAssumptionStatus::derived_simple_group;
  if (id == "derived-s4-discriminant") return FieldAssumptionStatus::derived_s4_discriminant;
  if (id == "trivial-rational") return FieldAssumptionStatus::trivial_rational;
  if (id == "unresolved") return FieldAssumptionStatus::unresolved;
  throw std::invalid_argument("unknown field assumption status: " + id);
}

/// The base field the theorems run over: the rationals extended by zeta_q.
struct FieldAssumption {
  FieldAssumptionStatus status = FieldAssumptionStatus::unresolved;
  std::string justification;
  std::optional<bool> persistence;  // set by the S4 discriminant route
};

struct Hypothesis {
  std::string name;
  Tri result = Tri::unknown;
  std::string note;
  std::int64_t index_divisor_bound = 0;  // m for index-dividing searches, 0 otherwise
  bool requires_normal = false;
  std::optional<GroupWitness> witness;  // the violating subgroup, for failed searches
};

struct RuleApplication {
  std::string id;
  std::string candidate;
  std::vector<Perm> candidate_generators;
  int candidate_degree = 0;
  bool applicable = true;
  std::string inapplicable_reason;
  std::vector<Hypothesis> hypotheses;
  ConclusionTier tier_granted = ConclusionTier::inconclusive;
  bool derives_field_assumption = false;
};

struct CertificateInput {
  std::string poly;
  std::int64_t n = 0;
  std::int64_t p = 0;
  int r = 1;
  std::int64_t q = 0;
};

struct CertificateInvariants {
  std::int64_t genus = 0;
  std::int64_t dim_new_part = 0;
  CMProfile profile;
  std::int64_t d_nq = 0;
  std::string d_nq_branch;
  std::string discriminant;
};

struct Certificate {
  CertificateInput input;
  std::optional<CertificateInvariants> invariants;
  std::optional<GaloisEvidence> galois;
  std::optional<ContainmentResult> containment;
  FieldAssumption field_assumption;
  std::vector<RuleApplication> rules;
  ConclusionTier conclusion = ConclusionTier::inconclusive;
  std::vector<std::string> unresolved;
};

class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline Hypothesis from_search(std::string name, const TriGroup& found, std::int64_t m,
                              bool requires_normal) {
  // The hypothesis asserts *absence*, so a found subgroup falsifies it.
  Hypothesis h;
  h.name = std::move(name);
  h.index_divisor_bound = m;
  h.requires_normal = requires_normal;
  switch (found.value) {
    case Tri::yes:
      h.result = Tri::no;
      h.witness = found.witness;
      h.note = found.note;
      break;
    case Tri::no:
      h.result = Tri::yes;
      h.note = found.note;
      break;
    default:
      h.result = Tri::unknown;
      h.note = found.note;
      break;
  }
  return h;
}

inline bool all_yes(const std::vector<Hypothesis>& hyps) {
  return std::all_of(hyps.begin(), hyps.end(),
                     [](const Hypothesis& h) { return h.result == Tri::yes; });
}

inline RuleApplication inapplicable(std::string id, std::string candidate, std::string reason) {
  RuleApplication app;
  app.id = std::move(id);
  app.candidate = std::move(candidate);
  app.applicable = false;
  app.inapplicable_reason = std::move(reason);
  return app;
}

}  // namespace detail

/// Theorem rule for odd p, r = 1: grants the simple-algebra tier from double
/// transitivity plus the (n-1)/p subgroup condition, the central tier from the
/// n-1 normal-subgroup condition, and the full cyclotomic-ring tier when
/// additionally n = p+1 or p does not divide n-1.
inline RuleApplication evaluate_theorem_main(std::int64_t n, std::int64_t p, const PermGroup& g,
                                             const FieldAssumption& field,
                                             const std::string& candidate = "G",
                                             const SearchLimits& limits = {}) {
  const std::string id = "theorem-main";
  if (!is_prime(p) || p == 2) return detail::inapplicable(id, candidate, "p must be an odd prime");
  if (n < 4) return detail::inapplicable(id, candidate, "degree must be at least 4");
  if (n % p == 0) return detail::inapplicable(id, candidate, "p divides n");
  if (g.degree() != n) return detail::inapplicable(id, candidate, "group degree differs from n");

  RuleApplication app;
  app.id = id;
  app.candidate = candidate;
  app.candidate_generators = g.generators();
  app.candidate_degree = g.degree();

  Hypothesis h0{"field-contains-zeta", Tri::unknown, "", 0, false, std::nullopt};
  if (field.status != FieldAssumptionStatus::unresolved) {
    h0.result = Tri::yes;
    h0.note = field.justification;
  } else {
    h0.note = "no justification that the base field contains a primitive p-th root of unity";
  }
  app.hypotheses.push_back(h0);

  Hypothesis h1{"doubly-transitive", g.is_2transitive() ? Tri::yes : Tri::no, "", 0, false,
                std::nullopt};
  app.hypotheses.push_back(h1);

  if ((n - 1) % p != 0) {
    app.hypotheses.push_back(
        {"no-proper-subgroup-index-dividing-(n-1)/p", Tri::yes,
         "vacuous: p does not divide n-1", 0, false, std::nullopt});
  } else if (n == p + 1) {
    app.hypotheses.push_back({"no-proper-subgroup-index-dividing-(n-1)/p", Tri::yes,
                              "vacuous: n = p+1", 0, false, std::nullopt});
  } else {
    const std::int64_t m = (n - 1) / p;
    app.hypotheses.push_back(detail::from_search("no-proper-subgroup-index-dividing-(n-1)/p",
                                                 g.proper_subgroup_index_dividing(m, limits), m,
                                                 false));
  }
  if (detail::all_yes(app.hypotheses)) app.tier_granted = ConclusionTier::simple_q_algebra;

  app.hypotheses.push_back(detail::from_search(
      "no-proper-normal-subgroup-index-dividing-(n-1)",
      g.proper_normal_subgroup_index_dividing(n - 1, limits), n - 1, true));
  if (detail::all_yes(app.hypotheses))
    app.tier_granted = ConclusionTier::central_simple_over_cyclotomic;

  Hypothesis h4{"n-equals-p-plus-1-or-p-does-not-divide-n-minus-1", Tri::no, "", 0, false,
                std::nullopt};
  if (n == p + 1) {
    h4.result = Tri::yes;
    h4.note = "n = p+1";
  } else if ((n - 1) % p != 0) {
    h4.result = Tri::yes;
    h4.note = "p does not divide n-1";
  } else {
    h4.note = "p divides n-1 and n differs from p+1";
  }
  app.hypotheses.push_back(h4);
  if (detail::all_yes(app.hypotheses)) app.tier_granted = ConclusionTier::end_is_cyclotomic_ring;
  return app;
}

/// p = 2, r = 1 (hyperelliptic): odd n >= 5 with the (n-1)/2 subgroup
/// condition gives the simple tier; no index-2 subgroup upgrades to the
/// central tier over the rationals (q = 2, so the cyclotomic field is Q).
inline RuleApplication evaluate_theorem_main2(std::int64_t n, const PermGroup& g,
                                              const std::string& candidate = "G",
                                              const SearchLimits& limits = {}) {
  const std::string id = "theorem-main2";
  if (n % 2 == 0) return detail::inapplicable(id, candidate, "n must be odd");
  if (n < 5) return detail::inapplicable(id, candidate, "degree must be at least 5");
  if (g.degree() != n) return detail::inapplicable(id, candidate, "group degree differs from n");

  RuleApplication app;
  app.id = id;
  app.candidate = candidate;
  app.candidate_generators = g.generators();
  app.candidate_degree = g.degree();
  app.hypotheses.push_back({"field-contains-zeta", Tri::yes, "zeta_2 = -1 lies in the rationals",
                            0, false, std::nullopt});
  app.hypotheses.push_back({"doubly-transitive", g.is_2transitive() ? Tri::yes : Tri::no, "", 0,
                            false, std::nullopt});
  const std::int64_t m = (n - 1) / 2;
  app.hypotheses.push_back(detail::from_search("no-proper-subgroup-index-dividing-(n-1)/2",
                                               g.proper_subgroup_index_dividing(m, limits), m,
                                               false));
  if (detail::all_yes(app.hypotheses)) app.tier_granted = ConclusionTier::simple_q_algebra;

  Hypothesis h3{"no-index-2-subgroup", Tri::yes, "", 2, false, std::nullopt};
  if (auto h = g.index2_subgroup()) {
    h3.result = Tri::no;
    h3.witness = GroupWitness{h->generators(), h->order(), Integer(2)};
  }
  app.hypotheses.push_back(h3);
  if (detail::all_yes(app.hypotheses))
    app.tier_granted = ConclusionTier::central_simple_over_cyclotomic;
  return app;
}

/// Prime-power rule, r > 1: mirrors the main rule with q in place of p, for
/// the new part of the jacobian of y^q = f(x); p = 2 additionally requires no
/// index-2 subgroup, and the top tier needs k odd or c < q/2.
inline RuleApplication evaluate_theorem_mainq(std::int64_t n, std::int64_t p, int r,
                                              const PermGroup& g, const FieldAssumption& field,
                                              const std::string& candidate = "G",
                                              const SearchLimits& limits = {}) {
  const std::string id = "theorem-mainq";
  if (!is_prime(p)) return detail::inapplicable(id, candidate, "p must be prime");
  if (r <= 1) return detail::inapplicable(id, candidate, "r must exceed 1");
  if (n < 4) return detail::inapplicable(id, candidate, "degree must be at least 4");
  if (n % p == 0) return detail::inapplicable(id, candidate, "p divides n");
  if (g.degree() != n) return detail::inapplicable(id, candidate, "group degree differs from n");
  const std::int64_t q = ipow64(p, r);

  RuleApplication app;
  app.id = id;
  app.candidate = candidate;
  app.candidate_generators = g.generators();
  app.candidate_degree = g.degree();

  Hypothesis h0{"field-contains-zeta", Tri::unknown, "", 0, false, std::nullopt};
  if (field.status != FieldAssumptionStatus::unresolved) {
    h0.result = Tri::yes;
    h0.note = field.justification;
  } else {
    h0.note = "no justification that the base field contains a primitive q-th root of unity";
  }
  app.hypotheses.push_back(h0);
  app.hypotheses.push_back({"doubly-transitive", g.is_2transitive() ? Tri::yes : Tri::no, "", 0,
                            false, std::nullopt});
  if ((n - 1) % q != 0) {
    app.hypotheses.push_back({"no-proper-subgroup-index-dividing-(n-1)/q", Tri::yes,
                              "vacuous: q does not divide n-1", 0, false, std::nullopt});
  } else if (n == q + 1) {
    app.hypotheses.push_back({"no-proper-subgroup-index-dividing-(n-1)/q", Tri::yes,
                              "vacuous: n = q+1", 0, false, std::nullopt});
  } else {
    const std::int64_t m = (n - 1) / q;
    app.hypotheses.push_back(detail::from_search("no-proper-subgroup-index-dividing-(n-1)/q",
                                                 g.proper_subgroup_index_dividing(m, limits), m,
                                                 false));
  }
  if (p == 2) {
    Hypothesis h2b{"no-index-2-subgroup", Tri::yes, "", 2, false, std::nullopt};
    if (auto h = g.index2_subgroup()) {
      h2b.result = Tri::no;
      h2b.witness = GroupWitness{h->generators(), h->order(), Integer(2)};
    }
    app.hypotheses.push_back(h2b);
  }
  if (detail::all_yes(app.hypotheses)) app.tier_granted = ConclusionTier::simple_q_algebra;

  app.hypotheses.push_back(detail::from_search(
      "no-proper-normal-subgroup-index-dividing-(n-1)",
      g.proper_normal_subgroup_index_dividing(n - 1, limits), n - 1, true));
  if (detail::all_yes(app.hypotheses))
    app.tier_granted = ConclusionTier::central_simple_over_cyclotomic;

  Hypothesis h4{"n-equals-q-plus-1-or-q-does-not-divide-n-minus-1", Tri::no, "", 0, false,
                std::nullopt};
  if (n == q + 1) {
    h4.result = Tri::yes;
    h4.note = "n = q+1";
  } else if ((n - 1) % q != 0) {
    h4.result = Tri::yes;
    h4.note = "q does not divide n-1";
  } else {
    h4.note = "q divides n-1 and n differs from q+1";
  }
  app.hypotheses.push_back(h4);
  if (p == 2) {
    const std::int64_t k = n / q, c = n % q;
    Hypothesis h5{"k-odd-or-c-below-q/2", (k % 2 == 1 || 2 * c < q) ? Tri::yes : Tri::no,
                  "n = " + std::to_string(k) + "*q + " + std::to_string(c), 0, false,
                  std::nullopt};
    app.hypotheses.push_back(h5);
  }
  if (detail::all_yes(app.hypotheses)) app.tier_granted = ConclusionTier::end_is_cyclotomic_ring;
  return app;
}

/// Simple-group corollary (r = 1 with odd p, or r > 1): a doubly transitive
/// simple non-abelian subgroup gives the full cyclotomic-ring tier, and the
/// field assumption is derived because abelian base extensions cannot shrink
/// such a Galois group.
inline RuleApplication evaluate_corollary_simple(std::int64_t n, std::int64_t p, int r,
                                                 const PermGroup& g,
                                                 const std::string& candidate = "G",
                                                 const SearchLimits& limits = {}) {
  const std::string id = r > 1 ? "corollary-simpleq" : "corollary-simple";
  if (!is_prime(p)) return detail::inapplicable(id, candidate, "p must be prime");
  if (r == 1 && p == 2) return detail::inapplicable(id, candidate, "p must be odd when r = 1");
  if (n < 5) return detail::inapplicable(id, candidate, "degree must be at least 5");
  if (n % p == 0) return detail::inapplicable(id, candidate, "p divides n");
  const std::int64_t q = ipow64(p, r);
  if ((n - 1) % q == 0 && n != q + 1)
    return detail::inapplicable(id, candidate, "q divides n-1 and n differs from q+1");
  if (r > 1 && p == 2) {
    const std::int64_t k = n / q, c = n % q;
    if (k % 2 == 0 && 2 * c >= q)
      return detail::inapplicable(id, candidate, "p = 2 needs k odd or c < q/2");
  }
  if (g.degree() != n) return detail::inapplicable(id, candidate, "group degree differs from n");

  RuleApplication app;
  app.id = id;
  app.candidate = candidate;
  app.candidate_generators = g.generators();
  app.candidate_degree = g.degree();

  const SimplicityReport simp = g.is_simple(limits);
  Hypothesis h1{"simple-non-abelian", Tri::unknown, simp.note, 0, false, std::nullopt};
  if (simp.value == Tri::yes) {
    h1.result = simp.abelian ? Tri::no : Tri::yes;
    if (simp.abelian) h1.note = "group is abelian";
  } else if (simp.value == Tri::no) {
    h1.result = Tri::no;
    h1.witness = simp.witness;
  }
  app.hypotheses.push_back(h1);
  app.hypotheses.push_back({"doubly-transitive", g.is_2transitive() ? Tri::yes : Tri::no, "", 0,
                            false, std::nullopt});
  app.hypotheses.push_back(
      {"field-contains-zeta", Tri::yes,
       "derived: abelian base extensions cannot shrink a simple non-abelian Galois group", 0,
       false, std::nullopt});
  if (detail::all_yes(app.hypotheses)) {
    app.tier_granted = ConclusionTier::end_is_cyclotomic_ring;
    app.derives_field_assumption = true;
  }
  return app;
}

struct AnalyzeOptions {
  std::int64_t prime_budget = 200;
  SearchLimits limits;
  std::optional<PermGroup> asserted_group;
  bool assert_field = false;
};

/// Full pipeline: validation, invariants, Galois evidence, field-assumption
/// resolution, and every applicable rule; the conclusion is the strongest tier
/// granted by a rule with an all-yes hypothesis checklist.
inline Certificate analyze(const RationalPoly& f, std::int64_t p, int r,
                           const AnalyzeOptions& options = {}) {
  Certificate cert;
  const int n = f.degree();
  if (n < 3) throw InputError("polynomial degree must be at least 3");
  if (!is_prime(p)) throw InputError("p must be prime");
  if (r < 1) throw InputError("r must be positive");
  if (n % p == 0) throw InputError("p divides the degree: the curve model needs p coprime to n");
  if (!f.is_squarefree()) throw InputError("polynomial must be squarefree");
  const std::int64_t q = ipow64(p, r);

  cert.input = {f.to_string(), n, p, r, q};

  CertificateInvariants inv;
  inv.genus = static_cast<std::int64_t>(n - 1) * (q - 1) / 2;
  inv.dim_new_part = dim_new_part(n, q, p);
  inv.profile = cm_profile(n, q, p);
  inv.d_nq = d_nq(n, q, p);
  inv.d_nq_branch = dnq_branch_name(d_nq_predicted(n, q, p).branch);
  const Rational disc = RationalPoly::discriminant(f);
  inv.discriminant = Rational(disc).get_str();
  cert.invariants = inv;

  cert.galois = gather_galois_evidence(f, options.prime_budget, options.asserted_group);
  if (cert.galois->irreducible.value == Tri::no) {
    std::string msg = "polynomial is reducible";
    if (cert.galois->irreducible.witness_factor)
      msg += " (factor " + cert.galois->irreducible.witness_factor->to_string() + ")";
    throw InputError(msg);
  }
  cert.containment = certify_contains_2transitive(*cert.galois);
  if (cert.containment->value == Tri::yes)
    cert.galois->tier = TransitivityTier::two_transitive;

  // Candidate subgroups for the rules.
  std::vector<std::pair<std::string, PermGroup>> candidates;
  const auto add_candidate = [&](const std::string& name, PermGroup g) {
    for (const auto& [nm, cg] : candidates)
      if (cg.same_group_as(g)) return;
    candidates.emplace_back(name, std::move(g));
  };
  if (cert.galois->asserted_group) add_candidate("asserted", *cert.galois->asserted_group);
  if (cert.galois->exact_class == QuarticClass::S4) add_candidate("S4", PermGroup::symmetric(4));
  if (cert.galois->exact_class == QuarticClass::A4) add_candidate("A4", PermGroup::alternating(4));
  if (cert.galois->contains_An && n >= 4)
    add_candidate("A" + std::to_string(n), PermGroup::alternating(n));
  if (cert.galois->contains_Sn) add_candidate("S" + std::to_string(n), PermGroup::symmetric(n));

  // Field assumption, before the rules run.
  FieldAssumption fa;
  if (options.assert_field) {
    fa.status = FieldAssumptionStatus::user_asserted;
    fa.justification =
        "user asserted that the base field contains a primitive q-th root of unity "
        "without shrinking the Galois group";
  } else if (p == 2 && r == 1) {
    fa.status = FieldAssumptionStatus::trivial_rational;
    fa.justification = "zeta_2 = -1 lies in the rationals";
  } else if (cert.galois->exact_class == QuarticClass::S4 && !is_rational_square(disc)) {
    const bool persists = s4_persists_over_cyclotomic(disc, p, r);
    fa.persistence = persists;
    if (persists) {
      fa.status = FieldAssumptionStatus::derived_s4_discriminant;
      fa.justification = "discriminant " + inv.discriminant +
                         " stays a nonsquare over the cyclotomic field: the splitting field and "
                         "the cyclotomic field are linearly disjoint, so the Galois group stays S4";
    } else {
      fa.status = FieldAssumptionStatus::unresolved;
      fa.justification =
          "the quadratic subfield of the cyclotomic field lies in the splitting field; the "
          "Galois group over it shrinks to A4";
    }
  } else {
    fa.status = FieldAssumptionStatus::unresolved;
    fa.justification = "no assertion or derivation for the cyclotomic base extension";
  }

  // The simple-group base-change argument only covers the simple candidate
  // itself, so the assumption is resolved per candidate.
  std::vector<std::pair<RuleApplication, FieldAssumption>> applications;
  for (const auto& [name, g] : candidates) {
    FieldAssumption local = fa;
    if (local.status == FieldAssumptionStatus::unresolved) {
      const SimplicityReport simp = g.is_simple(options.limits);
      if (simp.value == Tri::yes && !simp.abelian) {
        local.status = FieldAssumptionStatus::derived_simple_group;
        local.justification =
            "candidate " + name +
            " is simple non-abelian: abelian base extensions cannot shrink it";
      }
    }
    if (r == 1 && p != 2)
      applications.emplace_back(evaluate_theorem_main(n, p, g, local, name, options.limits),
                                local);
    if (r == 1 && p == 2)
      applications.emplace_back(evaluate_theorem_main2(n, g, name, options.limits), local);
    if (r > 1)
      applications.emplace_back(evaluate_theorem_mainq(n, p, r, g, local, name, options.limits),
                                local);
    applications.emplace_back(evaluate_corollary_simple(n, p, r, g, name, options.limits), local);
  }
  std::sort(applications.begin(), applications.end(),
            [](const auto& a, const auto& b) {
              if (a.first.id != b.first.id) return a.first.id < b.first.id;
              return a.first.candidate < b.first.candidate;
            });
  cert.field_assumption = fa;
  for (const auto& [rule, local] : applications) {
    if (rule.tier_granted > cert.conclusion) {
      cert.conclusion = rule.tier_granted;
      cert.field_assumption = local;
    }
    cert.rules.push_back(rule);
  }

  if (cert.containment->value != Tri::yes)
    cert.unresolved.push_back("2-transitive containment: " + cert.containment->reason);
  if (cert.field_assumption.status == FieldAssumptionStatus::unresolved)
    cert.unresolved.push_back("field assumption: " + cert.field_assumption.justification);
  for (const RuleApplication& rule : cert.rules)
    for (const Hypothesis& h : rule.hypotheses)
      if (h.result == Tri::unknown)
        cert.unresolved.push_back("rule " + rule.id + " [" + rule.candidate + "] hypothesis " +
                                  h.name + ": " + h.note);
  return cert;
}

// ---------------------------------------------------------------------------
// JSON serialization (canonical: nlohmann objects keep keys sorted)
// ---------------------------------------------------------------------------

namespace detail {

inline json witness_to_json(const GroupWitness& w) {
  json gens = json::array();
  for (const Perm& g : w.generators) gens.push_back(g.to_cycle_string());
  return json{{"generators", gens}, {"order", w.order.get_str()}, {"index", w.index.get_str()}};
}

inline GroupWitness witness_from_json(const json& j, int degree) {
  GroupWitness w;
  for (const auto& s : j.at("generators"))
    w.generators.push_back(Perm::parse_cycles(s.get<std::string>(), degree));
  w.order = Integer(j.at("order").get<std::string>());
  w.index = Integer(j.at("index").get<std::string>());
  return w;
}

inline json hypothesis_to_json(const Hypothesis& h) {
  json out{{"name", h.name}, {"result", tri_name(h.result)}};
  if (!h.note.empty()) out["note"] = h.note;
  if (h.index_divisor_bound != 0) out["index_divisor_bound"] = h.index_divisor_bound;
  if (h.requires_normal) out["requires_normal"] = true;
  if (h.witness) out["witness"] = witness_to_json(*h.witness);
  return out;
}

inline Tri tri_from_name(const std::string& s) {
  if (s == "yes") return Tri::yes;
  if (s == "no") return Tri::no;
  if (s == "unknown") return Tri::unknown;
  throw std::invalid_argument("unknown tri-state: " + s);
}

inline Hypothesis hypothesis_from_json(const json& j, int degree) {
  Hypothesis h;
  h.name = j.at("name").get<std::string>();
  h.result = tri_from_name(j.at("result").get<std::string>());
  if (j.contains("note")) h.note = j.at("note").get<std::string>();
  if (j.contains("index_divisor_bound"))
    h.index_divisor_bound = j.at("index_divisor_bound").get<std::int64_t>();
  if (j.contains("requires_normal")) h.requires_normal = j.at("requires_normal").get<bool>();
  if (j.contains("witness")) h.witness = witness_from_json(j.at("witness"), degree);
  return h;
}

inline json rule_to_json(const RuleApplication& r) {
  json out{{"id", r.id}, {"candidate", r.candidate}, {"applicable", r.applicable},
           {"tier_granted", tier_id(r.tier_granted)}};
  json gens = json::array();
  for (const Perm& g : r.candidate_generators) gens.push_back(g.to_cycle_string());
  out["candidate_generators"] = gens;
  out["candidate_degree"] = r.candidate_degree;
  if (!r.applicable) out["inapplicable_reason"] = r.inapplicable_reason;
  json hyps = json::array();
  for (const Hypothesis& h : r.hypotheses) hyps.push_back(hypothesis_to_json(h));
  out["hypotheses"] = hyps;
  if (r.derives_field_assumption) out["derives_field_assumption"] = true;
  return out;
}

inline RuleApplication rule_from_json(const json& j) {
  RuleApplication r;
  r.id = j.at("id").get<std::string>();
  r.candidate = j.at("candidate").get<std::string>();
  r.applicable = j.at("applicable").get<bool>();
  r.tier_granted = tier_from_id(j.at("tier_granted").get<std::string>());
  r.candidate_degree = j.at("candidate_degree").get<int>();
  for (const auto& s : j.at("candidate_generators"))
    r.candidate_generators.push_back(
        Perm::parse_cycles(s.get<std::string>(), r.candidate_degree));
  if (j.contains("inapplicable_reason"))
    r.inapplicable_reason = j.at("inapplicable_reason").get<std::string>();
  for (const auto& hj : j.at("hypotheses"))
    r.hypotheses.push_back(hypothesis_from_json(hj, r.candidate_degree));
  if (j.contains("derives_field_assumption"))
    r.derives_field_assumption = j.at("derives_field_assumption").get<bool>();
  return r;
}

inline json evidence_to_json(const GaloisEvidence& ev) {
  json out;
  out["degree"] = ev.degree;
  out["irreducible"] = tri_name(ev.irreducible.value);
  out["irreducible_method"] = ev.irreducible.method;
  if (ev.irreducible.witness_factor)
    out["irreducible_witness_factor"] = ev.irreducible.witness_factor->to_string();
  out["tier"] = tier_name(ev.tier);
  json types = json::array();
  for (const auto& [ell, profile] : ev.cycle_types) types.push_back(json::array({ell, profile}));
  out["cycle_types"] = types;
  if (ev.exact_class) out["exact_class"] = quartic_class_name(*ev.exact_class);
  out["contains_An"] = ev.contains_An;
  out["contains_Sn"] = ev.contains_Sn;
  out["rules"] = ev.rules;
  out["assumptions"] = ev.assumptions;
  if (ev.asserted_group) {
    json gens = json::array();
    for (const Perm& g : ev.asserted_group->generators()) gens.push_back(g.to_cycle_string());
    out["asserted_group"] = json{{"degree", ev.asserted_group->degree()}, {"generators", gens}};
  }
  return out;
}

inline GaloisEvidence evidence_from_json(const json& j) {
  GaloisEvidence ev;
  ev.degree = j.at("degree").get<int>();
  ev.irreducible.value = tri_from_name(j.at("irreducible").get<std::string>());
  ev.irreducible.method = j.at("irreducible_method").get<std::string>();
  if (j.contains("irreducible_witness_factor"))
    ev.irreducible.witness_factor =
        parse_polynomial(j.at("irreducible_witness_factor").get<std::string>());
  const std::string tier = j.at("tier").get<std::string>();
  ev.tier = tier == "2-transitive" ? TransitivityTier::two_transitive
            : tier == "transitive" ? TransitivityTier::transitive
                                   : TransitivityTier::unknown;
  for (const auto& t : j.at("cycle_types"))
    ev.cycle_types.emplace_back(t.at(0).get<std::int64_t>(), t.at(1).get<std::vector<int>>());
  if (j.contains("exact_class")) {
    const std::string c = j.at("exact_class").get<std::string>();
    if (c == "S4") ev.exact_class = QuarticClass::S4;
    else if (c == "A4") ev.exact_class = QuarticClass::A4;
    else if (c == "D4") ev.exact_class = QuarticClass::D4;
    else if (c == "C4") ev.exact_class = QuarticClass::C4;
    else if (c == "V4") ev.exact_class = QuarticClass::V4;
    else throw std::invalid_argument("unknown quartic class: " + c);
  }
  ev.contains_An = j.at("contains_An").get<bool>();
  ev.contains_Sn = j.at("contains_Sn").get<bool>();
  ev.rules = j.at("rules").get<std::vector<std::string>>();
  ev.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  if (j.contains("asserted_group")) {
    const json& g = j.at("asserted_group");
    const int degree = g.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& s : g.at("generators"))
      gens.push_back(Perm::parse_cycles(s.get<std::string>(), degree));
    ev.asserted_group = PermGroup(degree, std::move(gens));
  }
  return ev;
}

}  // namespace detail

inline json certificate_to_json_value(const Certificate& c) {
  json out;
  out["input"] = json{{"poly", c.input.poly}, {"n", c.input.n}, {"p", c.input.p},
                      {"r", c.input.r},       {"q", c.input.q}};
  if (c.invariants) {
    json prof = json::array();
    for (const auto& [i, v] : c.invariants->profile.entries) prof.push_back(json::array({i, v}));
    out["invariants"] = json{{"genus", c.invariants->genus},
                             {"dim_new_part", c.invariants->dim_new_part},
                             {"cm_profile", prof},
                             {"cm_total", c.invariants->profile.total},
                             {"d_nq", c.invariants->d_nq},
                             {"d_nq_branch", c.invariants->d_nq_branch},
                             {"discriminant", c.invariants->discriminant}};
  }
  if (c.galois) out["galois"] = detail::evidence_to_json(*c.galois);
  if (c.containment) {
    json cont{{"value", tri_name(c.containment->value)}, {"reason", c.containment->reason}};
    cont["rules"] = c.containment->rules;
    out["containment"] = cont;
  }
  json fa{{"status", field_status_id(c.field_assumption.status)},
          {"justification", c.field_assumption.justification}};
  if (c.field_assumption.persistence) fa["persistence"] = *c.field_assumption.persistence;
  out["field_assumption"] = fa;
  json rules = json::array();
  for (const RuleApplication& r : c.rules) rules.push_back(detail::rule_to_json(r));
  out["rules"] = rules;
  out["conclusion"] = tier_id(c.conclusion);
  if (c.conclusion == ConclusionTier::end_is_cyclotomic_ring)
    out["ring"] = "Z[zeta_" + std::to_string(c.input.q) + "]";
  out["unresolved"] = c.unresolved;
  return out;
}

inline std::string certificate_to_json(const Certificate& c) {
  return certificate_to_json_value(c).dump(2) + "\n";
}

inline Certificate certificate_from_json(const std::string& text) {
  const json j = json::parse(text);
  Certificate c;
  const json& in = j.at("input");
  c.input = {in.at("poly").get<std::string>(), in.at("n").get<std::int64_t>(),
             in.at("p").get<std::int64_t>(), in.at("r").get<int>(),
             in.at("q").get<std::int64_t>()};
  if (j.contains("invariants")) {
    CertificateInvariants inv;
    const json& ji = j.at("invariants");
    inv.genus = ji.at("genus").get<std::int64_t>();
    inv.dim_new_part = ji.at("dim_new_part").get<std::int64_t>();
    for (const auto& e : ji.at("cm_profile")) {
      const std::int64_t i = e.at(0).get<std::int64_t>();
      const std::int64_t v = e.at(1).get<std::int64_t>();
      inv.profile.entries.emplace(i, v);
      inv.profile.gcd = std::gcd(inv.profile.gcd, v);
    }
    inv.profile.total = ji.at("cm_total").get<std::int64_t>();
    inv.d_nq = ji.at("d_nq").get<std::int64_t>();
    inv.d_nq_branch = ji.at("d_nq_branch").get<std::string>();
    inv.discriminant = ji.at("discriminant").get<std::string>();
    c.invariants = inv;
  }
  if (j.contains("galois")) c.galois = detail::evidence_from_json(j.at("galois"));
  if (j.contains("containment")) {
    ContainmentResult cont;
    cont.value = detail::tri_from_name(j.at("containment").at("value").get<std::string>());
    cont.reason = j.at("containment").at("reason").get<std::string>();
    cont.rules = j.at("containment").at("rules").get<std::vector<std::string>>();
    c.containment = cont;
  }
  c.field_assumption.status =
      field_status_from_id(j.at("field_assumption").at("status").get<std::string>());
  c.field_assumption.justification =
      j.at("field_assumption").at("justification").get<std::string>();
  if (j.at("field_assumption").contains("persistence"))
    c.field_assumption.persistence = j.at("field_assumption").at("persistence").get<bool>();
  for (const auto& rj : j.at("rules")) c.rules.push_back(detail::rule_from_json(rj));
  c.conclusion = tier_from_id(j.at("conclusion").get<std::string>());
  c.unresolved = j.at("unresolved").get<std::vector<std::string>>();
  return c;
}

/// Re-checks a certificate from its recorded witnesses without re-running any
/// search: tier consistency, arithmetic invariants, and witness validity.
/// Returns human-readable violations; empty means the audit passed.
inline std::vector<std::string> audit_certificate(const Certificate& c) {
  std::vector<std::string> issues;
  ConclusionTier best = ConclusionTier::inconclusive;
  for (const RuleApplication& rule : c.rules) {
    if (rule.tier_granted != ConclusionTier::inconclusive) {
      if (!rule.applicable)
        issues.push_back("rule " + rule.id + " granted a tier while inapplicable");
      if (!detail::all_yes(rule.hypotheses))
        issues.push_back("rule " + rule.id + " granted a tier without an all-yes checklist");
    }
    best = std::max(best, rule.tier_granted);
    if (!rule.applicable) continue;
    PermGroup candidate(rule.candidate_degree, rule.candidate_generators);
    for (const Hypothesis& h : rule.hypotheses) {
      if (!h.witness) continue;
      const GroupWitness& w = *h.witness;
      PermGroup sub(rule.candidate_degree, w.generators);
      if (sub.order() != w.order) {
        issues.push_back("witness order mismatch in " + rule.id + "/" + h.name);
        continue;
      }
      for (const Perm& g : w.generators)
        if (!candidate.contains(g)) {
          issues.push_back("witness generator outside the candidate group in " + rule.id + "/" +
                           h.name);
          break;
        }
      if (sub.order() * w.index != candidate.order())
        issues.push_back("witness index mismatch in " + rule.id + "/" + h.name);
      if (sub.order() == candidate.order())
        issues.push_back("witness subgroup is not proper in " + rule.id + "/" + h.name);
      if (h.index_divisor_bound > 0 && h.result == Tri::no) {
        if (w.index > h.index_divisor_bound ||
            h.index_divisor_bound % w.index.get_si() != 0)
          issues.push_back("witness index does not divide the bound in " + rule.id + "/" + h.name);
      }
      if (h.requires_normal) {
        for (const Perm& g : candidate.generators())
          for (const Perm& s : sub.generators())
            if (!sub.contains(s.conjugated_by(g))) {
              issues.push_back("witness subgroup is not normal in " + rule.id + "/" + h.name);
              goto normal_done;
            }
      normal_done:;
      }
    }
  }
  if (best != c.conclusion)
    issues.push_back("conclusion tier differs from the strongest granted rule tier");
  if (c.invariants) {
    const auto& inv = *c.invariants;
    const std::int64_t n = c.input.n, p = c.input.p, q = c.input.q;
    if (inv.genus != (n - 1) * (q - 1) / 2) issues.push_back("genus formula mismatch");
    const std::int64_t phi_q = q - q / p;
    if (inv.dim_new_part != phi_q * (n - 1) / 2) issues.push_back("new-part dimension mismatch");
    std::int64_t total = 0, g = 0;
    for (const auto& [i, v] : inv.profile.entries) {
      if (v != n * i / q) issues.push_back("cm multiplicity mismatch at i=" + std::to_string(i));
      total += v;
      g = std::gcd(g, v);
    }
    if (total != inv.profile.total || total != inv.dim_new_part)
      issues.push_back("cm profile total mismatch");
    if (g != inv.d_nq) issues.push_back("d(n,q) gcd mismatch");
  }
  return issues;
}

/// Short human-readable rendering.
inline std::string certificate_to_text(const Certificate& c) {
  std::ostringstream os;
  os << "input: " << c.input.poly << "  (n=" << c.input.n << ", p=" << c.input.p
     << ", r=" << c.input.r << ", q=" << c.input.q << ")\n";
  if (c.invariants) {
    os << "invariants: genus=" << c.invariants->genus
       << " dim_new_part=" << c.invariants->dim_new_part << " d(n,q)=" << c.invariants->d_nq
       << " [branch " << c.invariants->d_nq_branch << "]"
       << " discriminant=" << c.invariants->discriminant << "\n";
  }
  if (c.galois) {
    os << "galois: irreducible=" << tri_name(c.galois->irreducible.value);
    if (c.galois->exact_class) os << " exact_class=" << quartic_class_name(*c.galois->exact_class);
    os << " tier=" << tier_name(c.galois->tier) << "\n";
  }
  os << "field assumption: " << field_status_id(c.field_assumption.status) << " ("
     << c.field_assumption.justification << ")\n";
  for (const RuleApplication& r : c.rules) {
    os << "rule " << r.id << " [" << r.candidate << "]: ";
    if (!r.applicable) {
      os << "inapplicable (" << r.inapplicable_reason << ")\n";
      continue;
    }
    os << tier_id(r.tier_granted) << "\n";
    for (const Hypothesis& h : r.hypotheses) {
      os << "  - " << h.name << ": " << tri_name(h.result);
      if (!h.note.empty()) os << " (" << h.note << ")";
      if (h.witness) os << " witness order " << h.witness->order.get_str();
      os << "\n";
    }
  }
  os << "conclusion: " << tier_id(c.conclusion);
  if (c.conclusion == ConclusionTier::end_is_cyclotomic_ring)
    os << "  End = Z[zeta_" << c.input.q << "]";
  os << "\n";
  for (const std::string& u : c.unresolved) os << "unresolved: " << u << "\n";
  return os.str();
}

}  // namespace cyclojac
