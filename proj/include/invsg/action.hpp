#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "exception.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace invsg {

  //! An action of a finite inverse semigroup by partial bijections of a
  //! finite discrete space \f$X = \{0, ..., n - 1\}\f$.
  //!
  //! Every subset of a finite discrete space is clopen, so every
  //! FiniteAction is a clopen action.
  class FiniteAction {
   public:
    using point_type = index_type;

    static constexpr std::int32_t undefined = -1;

    //! \p domains maps each idempotent to \f$D_e\f$ (missing idempotents get
    //! the empty domain); \p triples lists \f$(s, x, \alpha_s(x))\f$.
    //!
    //! \throws StructuralError unless every \f$\alpha_s\f$ is a bijection
    //! \f$D_{s^*s} \to D_{ss^*}\f$ and \f$s \mapsto \alpha_s\f$ is a
    //! homomorphism.
    FiniteAction(std::shared_ptr<FiniteInverseSemigroup const>      semigroup,
                 std::size_t                                        space_size,
                 std::map<index_type, std::vector<point_type>> const& domains,
                 std::vector<std::tuple<index_type, point_type, point_type>> const& triples)
        : _S(std::move(semigroup)), _space_size(space_size) {
      if (!_S) {
        throw ContractError("action needs a semigroup");
      }
      auto const m = _S->size();
      _act.assign(m * space_size, undefined);
      _domain.assign(m, {});
      for (auto const& [e, pts] : domains) {
        if (e >= m || !_S->is_idempotent(e)) {
          throw StructuralError("domain given for " + std::to_string(e)
                                + ", which is not an idempotent");
        }
        for (auto x : pts) {
          if (x >= space_size) {
            throw StructuralError("domain point " + std::to_string(x) + " out of range");
          }
        }
        _domain[e] = pts;
        detail::normalize(_domain[e]);
      }
      for (auto const& [s, x, y] : triples) {
        if (s >= m || x >= space_size || y >= space_size) {
          throw StructuralError("action triple out of range");
        }
        auto& slot = _act[s * space_size + x];
        if (slot != undefined && slot != static_cast<std::int32_t>(y)) {
          throw StructuralError("element " + std::to_string(s) + " sends point "
                                + std::to_string(x) + " to two points");
        }
        slot = static_cast<std::int32_t>(y);
      }
      validate();
    }

    std::shared_ptr<FiniteInverseSemigroup const> const& semigroup_ptr() const noexcept {
      return _S;
    }

    FiniteInverseSemigroup const& semigroup() const noexcept {
      return *_S;
    }

    std::size_t space_size() const noexcept {
      return _space_size;
    }

    //! \f$D_e\f$ for an idempotent \p e.
    index_set const& domain(index_type e) const {
      if (e >= _S->size() || !_S->is_idempotent(e)) {
        throw ContractError(std::to_string(e) + " is not an idempotent");
      }
      return _domain[e];
    }

    //! \f$D_{s^*s}\f$, the domain of \f$\alpha_s\f$.
    index_set const& source_domain(index_type s) const {
      return _domain[_S->mul(_S->inv(s), s)];
    }

    bool in_domain(index_type e, point_type x) const {
      return detail::contains(domain(e), x);
    }

    bool defined(index_type s, point_type x) const noexcept {
      return _act[s * _space_size + x] != undefined;
    }

    std::optional<point_type> act(index_type s, point_type x) const noexcept {
      auto y = _act[s * _space_size + x];
      if (y == undefined) {
        return std::nullopt;
      }
      return static_cast<point_type>(y);
    }

   private:
    void validate() const {
      auto const& S = *_S;
      auto const  m = static_cast<index_type>(S.size());
      auto const  n = static_cast<point_type>(_space_size);
      for (index_type s = 0; s < m; ++s) {
        auto const& src = source_domain(s);
        auto const& tgt = _domain[S.mul(s, S.inv(s))];
        index_set   image;
        for (point_type x = 0; x < n; ++x) {
          bool const in = detail::contains(src, x);
          if (in != defined(s, x)) {
            throw StructuralError("element " + std::to_string(s)
                                  + " is not defined exactly on D_{s*s} (point "
                                  + std::to_string(x) + ")");
          }
          if (in) {
            image.push_back(*act(s, x));
          }
        }
        auto const before = image.size();
        detail::normalize(image);
        if (image.size() != before || image != tgt) {
          throw StructuralError("element " + std::to_string(s)
                                + " does not act bijectively onto D_{ss*}");
        }
      }
      for (index_type s = 0; s < m; ++s) {
        for (index_type t = 0; t < m; ++t) {
          auto const st = S.mul(s, t);
          for (point_type x = 0; x < n; ++x) {
            std::optional<point_type> composite;
            if (auto y = act(t, x)) {
              composite = act(s, *y);
            }
            if (composite != act(st, x)) {
              throw StructuralError("action is not a homomorphism at ("
                                    + std::to_string(s) + ", " + std::to_string(t)
                                    + ", " + std::to_string(x) + ")");
            }
          }
        }
      }
    }

    std::shared_ptr<FiniteInverseSemigroup const> _S;
    std::size_t                                   _space_size;
    std::vector<std::int32_t>                     _act;
    std::vector<index_set>                        _domain;
  };

  //! The left-translation action of \f$S\f$ on itself: \f$X = S\f$,
  //! \f$D_e = eS\f$ and \f$\lambda_s t = st\f$ for \f$t \in s^*S\f$.
  inline FiniteAction left_translation_action(std::shared_ptr<FiniteInverseSemigroup const> S) {
    if (!S) {
      throw ContractError("action needs a semigroup");
    }
    std::map<index_type, std::vector<index_type>>                domains;
    std::vector<std::tuple<index_type, index_type, index_type>> triples;
    for (auto e : S->idempotents()) {
      domains.emplace(e, S->right_ideal(e));
    }
    for (index_type s = 0; s < S->size(); ++s) {
      for (auto t : domains.at(S->mul(S->inv(s), s))) {
        triples.emplace_back(s, t, S->mul(s, t));
      }
    }
    auto const n = S->size();
    return FiniteAction(std::move(S), n, domains, triples);
  }

  inline FiniteAction left_translation_action(FiniteInverseSemigroup const& S) {
    return left_translation_action(std::make_shared<FiniteInverseSemigroup const>(S));
  }

}  // namespace invsg
