#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autz/abelian.hpp"
#include "autz/error.hpp"
#include "autz/group.hpp"
#include "autz/structure.hpp"

namespace autz {

enum class Decision { Minimal, NotMinimal, Undecided };

// Which characterization decided a group. CyclicCenter is the general
// invariant criterion for groups whose center is cyclic.
enum class Rule {
  Class2,
  MaximalClass,
  Coclass2,
  Coclass3,
  Coclass4,
  CyclicCenter,
  OrderP5,
  OrderP6,
  OrderP7,
  None,
};

inline std::string_view decision_name(Decision d) {
  switch (d) {
    case Decision::Minimal: return "Minimal";
    case Decision::NotMinimal: return "NotMinimal";
    case Decision::Undecided: return "Undecided";
  }
  return "?";
}

inline std::optional<Decision> parse_decision(std::string_view s) {
  for (Decision d : {Decision::Minimal, Decision::NotMinimal, Decision::Undecided})
    if (decision_name(d) == s) return d;
  return std::nullopt;
}

inline std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Class2: return "Class2";
    case Rule::MaximalClass: return "MaximalClass";
    case Rule::Coclass2: return "Coclass2";
    case Rule::Coclass3: return "Coclass3";
    case Rule::Coclass4: return "Coclass4";
    case Rule::CyclicCenter: return "CyclicCenter";
    case Rule::OrderP5: return "OrderP5";
    case Rule::OrderP6: return "OrderP6";
    case Rule::OrderP7: return "OrderP7";
    case Rule::None: return "None";
  }
  return "?";
}

struct RuleCheck {
  Rule rule = Rule::None;
  Decision decision = Decision::Undecided;
  std::string detail;
};

/// Decision plus the rule that produced it. `cross_checks` holds the
/// verdicts of every other rule whose hypotheses the group also meets.
struct Verdict {
  Decision decision = Decision::Undecided;
  Rule rule = Rule::None;
  std::string details;
  std::optional<bool> brute_force_agrees;
  std::vector<RuleCheck> cross_checks;

  /// False when some other applicable rule reached a different decision.
  bool coherent() const {
    for (const auto& c : cross_checks)
      if (c.decision != decision) return false;
    return true;
  }
};

namespace detail {

inline Decision to_decision(bool minimal) {
  return minimal ? Decision::Minimal : Decision::NotMinimal;
}

inline bool center_is(const StructureReport& r, unsigned gamma1) {
  return r.center.exponents == std::vector<unsigned>{gamma1};
}

// Z(G) ≅ C_p and d(G) = d(Z_2/Z) = k for some k in `ranks`.
inline bool cp_center_rank_in(const StructureReport& r, std::initializer_list<unsigned> ranks) {
  if (!center_is(r, 1) || r.d != r.d_z2_mod_z) return false;
  for (unsigned k : ranks)
    if (r.d == k) return true;
  return false;
}

inline bool sections_match(const StructureReport& r) { return r.z2_mod_center == r.abelianization; }

}  // namespace detail

/// Criterion for a p-group with cyclic center C_{p^γ1}: minimal iff
/// G/G' ≅ Z_2/Z, or both have the same rank and β_i = min(α_i, γ1)
/// (β_i = γ1 up to the last α_r >= γ1, β_i = α_i after it).
inline bool cyclic_center_predicate(const AbelianInvariants& alpha, const AbelianInvariants& beta,
                                    unsigned gamma1) {
  if (alpha.exponents.empty()) throw Error(Errc::EmptyAlpha, "G/G' must be nontrivial");
  if (alpha.p != beta.p)
    throw Error(Errc::PrimeMismatch, alpha.to_string() + " vs " + beta.to_string());
  if (gamma1 == 0) throw Error(Errc::BadParameters, "gamma1 must be positive");
  if (alpha == beta) return true;
  if (alpha.rank() != beta.rank()) return false;
  for (std::size_t i = 0; i < alpha.rank(); ++i)
    if (beta.exponents[i] != std::min(alpha.exponents[i], gamma1)) return false;
  return true;
}

inline Verdict coclass_predicate(const StructureReport& r) {
  if (r.coclass < 2 || r.coclass > 4)
    throw Error(Errc::CoclassOutOfRange, "coclass " + std::to_string(r.coclass));
  if (r.nilpotency_class < 3)
    throw Error(Errc::ClassTooSmall, "class " + std::to_string(r.nilpotency_class));
  Verdict v;
  std::string why;
  bool minimal = false;
  if (r.coclass == 2) {
    v.rule = Rule::Coclass2;
    minimal = detail::cp_center_rank_in(r, {2});
    why = "Z=C_p and d(G)=d(Z2/Z)=2";
  } else if (r.coclass == 3) {
    v.rule = Rule::Coclass3;
    if (detail::cp_center_rank_in(r, {2, 3})) {
      minimal = true;
      why = "Z=C_p and d(G)=d(Z2/Z) in {2,3}";
    } else if (detail::center_is(r, 2) && detail::sections_match(r)) {
      minimal = true;
      why = "Z=C_{p^2} and Z2/Z=G/G'";
    } else {
      why = "neither Z=C_p with d(G)=d(Z2/Z) in {2,3} nor Z=C_{p^2} with Z2/Z=G/G'";
    }
  } else {
    v.rule = Rule::Coclass4;
    const std::vector<unsigned> b21{2, 1};
    if (detail::cp_center_rank_in(r, {2, 3, 4})) {
      minimal = true;
      why = "case (a): Z=C_p and d(G)=d(Z2/Z) in {2,3,4}";
    } else if (detail::center_is(r, 2) && detail::sections_match(r)) {
      minimal = true;
      why = "case (b)(i): Z=C_{p^2} and Z2/Z=G/G'";
    } else if (detail::center_is(r, 2) && r.z2_mod_center.exponents == b21 &&
               r.abelianization.exponents == std::vector<unsigned>{3, 1}) {
      minimal = true;
      why = "case (b)(ii): Z=C_{p^2}, Z2/Z=C_{p^2}xC_p, G/G'=C_{p^3}xC_p";
    } else if (detail::center_is(r, 2) && r.z2_mod_center.exponents == b21 &&
               r.abelianization.exponents == std::vector<unsigned>{4, 1}) {
      minimal = true;
      why = "case (b)(iii): Z=C_{p^2}, Z2/Z=C_{p^2}xC_p, G/G'=C_{p^4}xC_p";
    } else if (detail::center_is(r, 3) && detail::sections_match(r)) {
      minimal = true;
      why = "case (c): Z=C_{p^3} and Z2/Z=G/G'";
    } else {
      why = "none of cases (a), (b), (c)";
    }
  }
  v.decision = detail::to_decision(minimal);
  v.details = why;
  return v;
}

inline Verdict order_predicate(const StructureReport& r) {
  if (r.n < 5 || r.n > 7) throw Error(Errc::OrderOutOfRange, "order p^" + std::to_string(r.n));
  if (r.nilpotency_class < 3)
    throw Error(Errc::ClassTooSmall, "class " + std::to_string(r.nilpotency_class));
  const unsigned c = r.nilpotency_class;
  Verdict v;
  auto decide = [&](Rule rule, bool minimal, std::string why) {
    v.rule = rule;
    v.decision = detail::to_decision(minimal);
    v.details = std::move(why);
  };
  if (r.n == 5 && c == 3) {
    decide(Rule::OrderP5, detail::cp_center_rank_in(r, {2}), "class 3: Z=C_p and d(G)=d(Z2/Z)=2");
  } else if (r.n == 6 && (c == 3 || c == 4)) {
    decide(Rule::OrderP6, detail::cp_center_rank_in(r, {2}),
           "class " + std::to_string(c) + ": Z=C_p and d(G)=d(Z2/Z)=2");
  } else if (r.n == 7 && c == 3) {
    decide(Rule::OrderP7, detail::cp_center_rank_in(r, {2, 3, 4}),
           "case (i): class 3, Z=C_p and d(G)=d(Z2/Z) in {2,3,4}");
  } else if (r.n == 7 && c == 4) {
    bool a = detail::cp_center_rank_in(r, {2, 3});
    bool b = detail::center_is(r, 2) && detail::sections_match(r);
    decide(Rule::OrderP7, a || b,
           "case (ii): class 4, Z=C_p with d(G)=d(Z2/Z) in {2,3}, or Z=C_{p^2} with Z2/Z=G/G'");
  } else if (r.n == 7 && c == 5) {
    decide(Rule::OrderP7, detail::cp_center_rank_in(r, {2}),
           "case (iii): class 5, Z=C_p and d(G)=d(Z2/Z)=2");
  } else {
    v.details = "order p^" + std::to_string(r.n) + " with class " + std::to_string(c) +
                " is not covered";
  }
  return v;
}

/// Rule dispatch on a structure report. Precedence: class 2, maximal class,
/// order p^5..p^7, coclass 2..4, cyclic center. Rules after the one that
/// fires are still evaluated and kept as cross-checks.
inline Verdict classify_report(const StructureReport& r) {
  if (r.nilpotency_class < 2) throw Error(Errc::AbelianGroup, "the group is abelian");
  std::vector<Verdict> applicable;

  if (r.nilpotency_class == 2) {
    Verdict v;
    v.rule = Rule::Class2;
    bool minimal = r.derived_equals_center && r.center.is_cyclic();
    v.decision = detail::to_decision(minimal);
    v.details = minimal ? "G'=Z(G) and Z(G) cyclic"
                        : (r.derived_equals_center ? "Z(G) not cyclic" : "G' differs from Z(G)");
    applicable.push_back(std::move(v));
  }
  if (r.coclass == 1 && r.nilpotency_class >= 3) {
    Verdict v;
    v.rule = Rule::MaximalClass;
    v.decision = Decision::NotMinimal;
    v.details = "maximal class: Z(Inn(G)) is cyclic";
    applicable.push_back(std::move(v));
  }
  if (r.n >= 5 && r.n <= 7 && r.nilpotency_class >= 3) {
    Verdict v = order_predicate(r);
    if (v.rule != Rule::None) applicable.push_back(std::move(v));
  }
  if (r.coclass >= 2 && r.coclass <= 4 && r.nilpotency_class >= 3)
    applicable.push_back(coclass_predicate(r));
  if (r.center.rank() == 1) {
    Verdict v;
    v.rule = Rule::CyclicCenter;
    bool minimal =
        cyclic_center_predicate(r.abelianization, r.z2_mod_center, r.center.exponents.front());
    v.decision = detail::to_decision(minimal);
    v.details = "alpha=" + r.abelianization.to_string() + " beta=" + r.z2_mod_center.to_string() +
                " gamma1=" + std::to_string(r.center.exponents.front());
    applicable.push_back(std::move(v));
  }

  if (applicable.empty()) {
    Verdict v;
    v.details = "outside every characterized case";
    return v;
  }
  Verdict out = applicable.front();
  for (std::size_t i = 1; i < applicable.size(); ++i)
    out.cross_checks.push_back({applicable[i].rule, applicable[i].decision, applicable[i].details});
  return out;
}

inline Verdict classify(const Group& g) {
  if (!g.prime()) throw Error(Errc::NotPrimePower, "order " + std::to_string(g.order()));
  if (g.is_abelian()) throw Error(Errc::AbelianGroup, "the group is abelian");
  return classify_report(structure_report(g));
}

struct NecessaryConditions {
  bool center_in_derived = false;   // Z(G) <= G'
  bool z_inn_noncyclic = false;     // Z_2/Z not cyclic
  bool rank_identity = false;       // d(G) d(Z(G)) = d(Z_2/Z)

  bool all() const { return center_in_derived && z_inn_noncyclic && rank_identity; }
};

inline NecessaryConditions necessary_conditions_report(const StructureReport& r) {
  if (r.nilpotency_class < 2) throw Error(Errc::AbelianGroup, "the group is abelian");
  return {r.center_in_derived, r.z2_mod_center.rank() >= 2, r.d * r.d_center == r.d_z2_mod_z};
}

inline NecessaryConditions necessary_conditions_report(const Group& g) {
  if (g.is_abelian()) throw Error(Errc::AbelianGroup, "the group is abelian");
  return necessary_conditions_report(structure_report(g));
}

}  // namespace autz
