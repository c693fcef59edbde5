#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exception.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace invsg {

  //! \f$s \leqslant t\f$ iff \f$ts^*s = s\f$.
  inline bool natural_leq(FiniteInverseSemigroup const& S, index_type s, index_type t) {
    return S.mul(t, S.mul(S.inv(s), s)) == s;
  }

  //! Which relation an up-set is taken with respect to.
  enum class Relation {
    leq,  //!< \f$A^\leqslant = \{b : a \leqslant b\}\f$, elements above \f$A\f$
    geq   //!< \f$A^\geqslant = \{b : a \geqslant b\}\f$, elements below \f$A\f$
  };

  //! \f$\{b : a \prec b \text{ for some } a \in A\}\f$.
  inline index_set up_set(FiniteInverseSemigroup const& S, index_set const& A, Relation rel) {
    index_set  out;
    auto const n = static_cast<index_type>(S.size());
    for (index_type b = 0; b < n; ++b) {
      for (auto a : A) {
        if (rel == Relation::leq ? S.leq(a, b) : S.leq(b, a)) {
          out.push_back(b);
          break;
        }
      }
    }
    return out;
  }

  //! Elements of \p A not strictly below another element of \p A.
  inline index_set maximal_elements(FiniteInverseSemigroup const& S, index_set const& A) {
    index_set out;
    for (auto a : A) {
      bool maximal = true;
      for (auto b : A) {
        if (b != a && S.leq(a, b)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(a);
      }
    }
    return out;
  }

  //! \f$J_s = \{e \in E_S : se = e\}\f$.
  inline index_set j_set(FiniteInverseSemigroup const& S, index_type s) {
    index_set out;
    for (auto e : S.idempotents()) {
      if (S.mul(s, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  //! \f$\bigcup_{f \in F} fS\f$.
  inline index_set right_ideal_union(FiniteInverseSemigroup const& S, index_set const& F) {
    std::vector<bool> hit(S.size(), false);
    for (auto f : F) {
      for (index_type x = 0; x < S.size(); ++x) {
        hit[S.mul(f, x)] = true;
      }
    }
    index_set out;
    for (index_type x = 0; x < S.size(); ++x) {
      if (hit[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! Both \f$s^*t\f$ and \f$st^*\f$ are idempotent.
  inline bool compatible(FiniteInverseSemigroup const& S, index_type s, index_type t) {
    return S.is_idempotent(S.mul(S.inv(s), t)) && S.is_idempotent(S.mul(s, S.inv(t)));
  }

  inline bool pairwise_compatible(FiniteInverseSemigroup const& S, index_set const& A) {
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = i + 1; j < A.size(); ++j) {
        if (!compatible(S, A[i], A[j])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Least upper bound of \p A in the natural partial order, if any. No
  //! compatibility requirement; the empty set has the minimum (if any) as
  //! its least upper bound.
  inline std::optional<index_type> least_upper_bound(FiniteInverseSemigroup const& S,
                                                     index_set const&              A) {
    index_set  upper;
    auto const n = static_cast<index_type>(S.size());
    for (index_type u = 0; u < n; ++u) {
      bool ok = true;
      for (auto a : A) {
        if (!S.leq(a, u)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        upper.push_back(u);
      }
    }
    for (auto u : upper) {
      bool least = true;
      for (auto v : upper) {
        if (!S.leq(u, v)) {
          least = false;
          break;
        }
      }
      if (least) {
        return u;
      }
    }
    return std::nullopt;
  }

  //! The join of a pairwise compatible set.
  //!
  //! \throws ContractError if two members of \p A are not compatible.
  inline std::optional<index_type> join(FiniteInverseSemigroup const& S, index_set const& A) {
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = i + 1; j < A.size(); ++j) {
        if (!compatible(S, A[i], A[j])) {
          throw ContractError("join of incompatible elements " + std::to_string(A[i])
                              + " and " + std::to_string(A[j]));
        }
      }
    }
    return least_upper_bound(S, A);
  }

  //! Outcome of a check that may run out of budget.
  enum class CheckStatus { holds, fails, inconclusive };

  inline char const* to_string(CheckStatus c) noexcept {
    switch (c) {
      case CheckStatus::holds: return "holds";
      case CheckStatus::fails: return "fails";
      case CheckStatus::inconclusive: return "inconclusive";
    }
    return "";
  }

  struct CompletenessResult {
    enum class Failure { none, missing_join, left_distributivity, right_distributivity };

    CheckStatus status = CheckStatus::holds;
    Failure     failure = Failure::none;
    //! The offending set \f$A\f$.
    index_set A;
    //! The multiplier \f$s\f$ for a distributivity failure.
    std::optional<index_type> s;
    //! Pairwise compatible subsets examined.
    std::size_t subsets_checked = 0;
    std::size_t budget          = 0;

    bool holds() const noexcept {
      return status == CheckStatus::holds;
    }
  };

  inline constexpr std::size_t default_subset_budget = std::size_t(1) << 22;

  //! Checks that every pairwise compatible subset \f$A\f$ has a join and
  //! that \f$s(\bigvee A) = \bigvee sA\f$ and \f$(\bigvee A)s = \bigvee As\f$
  //! for every \f$s\f$.
  //!
  //! Subsets are enumerated as cliques of the compatibility graph, the
  //! empty set included. Stops with CheckStatus::inconclusive after \p budget
  //! subsets.
  inline CompletenessResult is_complete_and_distributive(FiniteInverseSemigroup const& S,
                                                         std::size_t budget = default_subset_budget) {
    using Failure = CompletenessResult::Failure;
    auto const n  = static_cast<index_type>(S.size());

    std::vector<bool> compat(static_cast<std::size_t>(n) * n);
    for (index_type a = 0; a < n; ++a) {
      for (index_type b = 0; b < n; ++b) {
        compat[a * n + b] = compatible(S, a, b);
      }
    }

    CompletenessResult result;
    result.budget = budget;
    index_set current;
    index_set image;

    auto check = [&](index_set const& A) -> bool {
      auto j = least_upper_bound(S, A);
      if (!j) {
        result = {CheckStatus::fails, Failure::missing_join, A, std::nullopt,
                  result.subsets_checked, budget};
        return false;
      }
      for (index_type s = 0; s < n; ++s) {
        for (int side = 0; side < 2; ++side) {
          image.clear();
          for (auto a : A) {
            image.push_back(side == 0 ? S.mul(s, a) : S.mul(a, s));
          }
          detail::normalize(image);
          auto rhs = least_upper_bound(S, image);
          auto lhs = side == 0 ? S.mul(s, *j) : S.mul(*j, s);
          if (!rhs || *rhs != lhs) {
            result = {CheckStatus::fails,
                      side == 0 ? Failure::left_distributivity : Failure::right_distributivity,
                      A, s, result.subsets_checked, budget};
            return false;
          }
        }
      }
      return true;
    };

    // Depth-first over cliques, extending only by larger indices.
    std::function<bool(index_type)> extend = [&](index_type from) -> bool {
      if (result.subsets_checked >= budget) {
        result.status = CheckStatus::inconclusive;
        return false;
      }
      ++result.subsets_checked;
      if (!check(current)) {
        return false;
      }
      for (index_type c = from; c < n; ++c) {
        bool ok = true;
        for (auto a : current) {
          if (!compat[a * n + c]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          current.push_back(c);
          if (!extend(c + 1)) {
            return false;
          }
          current.pop_back();
        }
      }
      return true;
    };
    extend(0);
    return result;
  }

  //! A complete, infinitely distributive inverse monoid.
  inline CompletenessResult is_abstract_pseudogroup(FiniteInverseSemigroup const& S,
                                                    std::size_t budget = default_subset_budget) {
    if (!S.is_monoid()) {
      CompletenessResult r;
      r.status = CheckStatus::fails;
      return r;
    }
    return is_complete_and_distributive(S, budget);
  }

  struct UnitaryResult {
    //! True when the semigroup has a zero and the E*-unitary condition was
    //! checked; false when the E-unitary fallback ran.
    bool                      with_zero = false;
    bool                      holds     = true;
    std::optional<index_type> witness;

    explicit operator bool() const noexcept {
      return holds;
    }

    char const* variant() const noexcept {
      return with_zero ? "E*-unitary" : "E-unitary";
    }
  };

  //! \f$J_s \neq \emptyset\f$ implies \f$s \in E_S\f$. Returns the first
  //! offending element. With a zero this fails as soon as some element is
  //! not idempotent.
  inline std::optional<index_type> e_unitary_violation(FiniteInverseSemigroup const& S) {
    for (index_type s = 0; s < S.size(); ++s) {
      if (!S.is_idempotent(s) && !j_set(S, s).empty()) {
        return s;
      }
    }
    return std::nullopt;
  }

  inline bool is_e_unitary(FiniteInverseSemigroup const& S) {
    return !e_unitary_violation(S).has_value();
  }

  //! With a zero: \f$J_s \neq \{0\}\f$ implies \f$s \in E_S\f$. Without one
  //! the E-unitary condition \f$J_s \neq \emptyset \implies s \in E_S\f$ is
  //! checked instead and UnitaryResult::with_zero is false.
  inline UnitaryResult is_e_star_unitary(FiniteInverseSemigroup const& S) {
    UnitaryResult r;
    r.with_zero = S.zero().has_value();
    for (index_type s = 0; s < S.size(); ++s) {
      if (S.is_idempotent(s)) {
        continue;
      }
      auto J       = j_set(S, s);
      bool trivial = r.with_zero ? (J.size() == 1 && J.front() == *S.zero()) : J.empty();
      if (!trivial) {
        r.holds   = false;
        r.witness = s;
        return r;
      }
    }
    return r;
  }

}  // namespace invsg
