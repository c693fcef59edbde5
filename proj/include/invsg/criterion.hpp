#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "exception.hpp"
#include "order.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace invsg {

  //! Verdict of the finite-cover criterion: is there a finite \f$F
  //! \subseteq J_s\f$ with \f$J_s = F^\geqslant\f$?
  enum class Verdict { hausdorff_witness, refuted, inconclusive };

  inline char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::hausdorff_witness: return "HAUSDORFF_WITNESS";
      case Verdict::refuted: return "REFUTED";
      case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "";
  }

  struct CriterionVerdict {
    index_type subject = 0;
    index_set  j_set;
    //! Sorted by index; present for Verdict::hausdorff_witness.
    std::optional<index_set> witness;
    Verdict                  verdict = Verdict::inconclusive;
    //! \f$\bigcup_{f \in F} fS = \bigcup_{e \in J_s} eS\f$ for the witness.
    bool        union_condition = false;
    std::size_t budget          = 0;
  };

  //! Takes \f$F\f$ to be the maximal elements of \f$J_s\f$ and checks
  //! \f$F^\geqslant = J_s\f$ together with the right-ideal union condition.
  //!
  //! On a finite semigroup both always hold.
  //!
  //! \throws InvariantError if either check fails, since that means the
  //! stored order or table is inconsistent.
  inline CriterionVerdict hausdorff_criterion(FiniteInverseSemigroup const& S, index_type s) {
    if (s >= S.size()) {
      throw ContractError("element index " + std::to_string(s) + " out of range");
    }
    CriterionVerdict v;
    v.subject = s;
    v.j_set   = j_set(S, s);
    auto F    = maximal_elements(S, v.j_set);
    if (up_set(S, F, Relation::geq) != v.j_set) {
      throw InvariantError("downward closure of the maximal elements of J_"
                           + std::to_string(s) + " differs from J_" + std::to_string(s));
    }
    v.union_condition = right_ideal_union(S, F) == right_ideal_union(S, v.j_set);
    if (!v.union_condition) {
      throw InvariantError("right-ideal unions disagree for element " + std::to_string(s));
    }
    v.witness = std::move(F);
    v.verdict = Verdict::hausdorff_witness;
    return v;
  }

  //! Independent evaluations of the two algebraic forms of the criterion
  //! for one element.
  struct ConditionComparison {
    //! Some \f$F \subseteq J_s\f$ has \f$\bigcup_F fS = \bigcup_{J_s} eS\f$
    //! (found by exhaustive subset search).
    bool union_form = false;
    //! The maximal elements of \f$J_s\f$ generate \f$J_s\f$ downwards.
    bool downward_form = false;
    //! For every subset \f$F \subseteq J_s\f$ the two forms agree.
    bool        per_subset_agree = true;
    std::size_t subsets_checked  = 0;

    bool agree() const noexcept {
      return union_form == downward_form && per_subset_agree;
    }
  };

  inline constexpr std::size_t max_j_set_for_subset_search = 24;

  //! \throws BudgetExceeded if \f$|J_s|\f$ exceeds #max_j_set_for_subset_search.
  inline ConditionComparison compare_criterion_conditions(FiniteInverseSemigroup const& S,
                                                          index_type                    s) {
    auto const J = j_set(S, s);
    if (J.size() > max_j_set_for_subset_search) {
      throw BudgetExceeded("J_s subset search", max_j_set_for_subset_search);
    }
    ConditionComparison out;
    auto const          target = right_ideal_union(S, J);
    std::uint64_t const count  = std::uint64_t(1) << J.size();
    index_set           F;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      F.clear();
      for (std::size_t i = 0; i < J.size(); ++i) {
        if (mask >> i & 1) {
          F.push_back(J[i]);
        }
      }
      bool const by_union    = right_ideal_union(S, F) == target;
      bool const by_downward = up_set(S, F, Relation::geq) == J;
      out.union_form         = out.union_form || by_union;
      out.per_subset_agree   = out.per_subset_agree && by_union == by_downward;
      ++out.subsets_checked;
    }
    out.downward_form = up_set(S, maximal_elements(S, J), Relation::geq) == J;
    return out;
  }

  inline bool union_and_downward_forms_agree(FiniteInverseSemigroup const& S,
                                                     index_type                    s) {
    return compare_criterion_conditions(S, s).agree();
  }

}  // namespace invsg
