#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "exception.hpp"
#include "order.hpp"
#include "semigroup.hpp"
#include "types.hpp"

namespace invsg {

  //! A pair \f$(s, x)\f$ with \f$x \in D_{s^*s}\f$ and the germ class it
  //! belongs to.
  struct Germ {
    index_type element;
    index_type point;
    index_type class_id;

    friend bool operator==(Germ const&, Germ const&) = default;
  };

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // The smaller root survives, so roots are class minima.
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace detail

  //! The groupoid of germs \f$S \ltimes X\f$ of a FiniteAction.
  //!
  //! Classes are numbered in increasing order of their least
  //! \f$(s, x)\f$ representative (lexicographic). Composition is stored
  //! sparsely on composable pairs only.
  class GermGroupoid {
   public:
    using class_id = index_type;

    //! Number of germ classes (arrows).
    std::size_t size() const noexcept {
      return _rep.size();
    }

    //! Every \f$(s, x) \in \Omega\f$ in lexicographic order.
    std::vector<Germ> const& omega() const noexcept {
      return _omega;
    }

    //! Least representative of class \p g.
    std::pair<index_type, index_type> representative(class_id g) const {
      return _rep.at(g);
    }

    std::optional<class_id> class_of(index_type s, index_type x) const {
      if (s >= _elements || x >= _points) {
        return std::nullopt;
      }
      auto c = _class_of[s * _points + x];
      if (c == undefined) {
        return std::nullopt;
      }
      return static_cast<class_id>(c);
    }

    //! \f$\mathbf{d}([s, x])\f$, as a unit class.
    class_id source(class_id g) const {
      return _source.at(g);
    }

    //! \f$\mathbf{r}([s, x])\f$, as a unit class.
    class_id range(class_id g) const {
      return _range.at(g);
    }

    class_id inverse(class_id g) const {
      return _inverse.at(g);
    }

    index_set const& units() const noexcept {
      return _units;
    }

    bool is_unit(class_id g) const {
      return detail::contains(_units, g);
    }

    //! The point \f$x\f$ of every representative of \p g.
    index_type point(class_id g) const {
      return _rep.at(g).second;
    }

    //! The unit class over \p x, if \p x lies in some \f$D_e\f$.
    std::optional<class_id> unit_at(index_type x) const {
      if (x >= _points || _unit_at[x] == undefined) {
        return std::nullopt;
      }
      return static_cast<class_id>(_unit_at[x]);
    }

    //! \p a \p b when \f$\mathbf{d}(a) = \mathbf{r}(b)\f$.
    std::optional<class_id> compose(class_id a, class_id b) const {
      auto it = _composition.find({a, b});
      if (it == _composition.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::map<std::pair<class_id, class_id>, class_id> const& composition() const noexcept {
      return _composition;
    }

   private:
    static constexpr std::int64_t undefined = -1;

    friend GermGroupoid build_germs(FiniteAction const& action);

    std::size_t                                       _elements = 0;
    std::size_t                                       _points   = 0;
    std::vector<Germ>                                 _omega;
    std::vector<std::int64_t>                         _class_of;
    std::vector<std::pair<index_type, index_type>>    _rep;
    std::vector<class_id>                             _source;
    std::vector<class_id>                             _range;
    std::vector<class_id>                             _inverse;
    index_set                                         _units;
    std::vector<std::int64_t>                         _unit_at;
    std::map<std::pair<class_id, class_id>, class_id> _composition;
  };

  //! Builds \f$\Omega/{\sim}\f$ where \f$(s, x) \sim (t, x)\f$ iff some
  //! idempotent \f$e\f$ has \f$x \in D_e\f$ and \f$se = te\f$.
  //!
  //! \throws InvariantError if the structure maps turn out ill-defined.
  inline GermGroupoid build_germs(FiniteAction const& action) {
    auto const& S = action.semigroup();
    auto const  m = static_cast<index_type>(S.size());
    auto const  n = static_cast<index_type>(action.space_size());

    GermGroupoid G;
    G._elements = m;
    G._points   = n;
    G._class_of.assign(static_cast<std::size_t>(m) * n, GermGroupoid::undefined);

    std::vector<std::int64_t> slot(static_cast<std::size_t>(m) * n, GermGroupoid::undefined);
    std::size_t               count = 0;
    for (index_type s = 0; s < m; ++s) {
      for (index_type x = 0; x < n; ++x) {
        if (action.defined(s, x)) {
          slot[s * n + x] = static_cast<std::int64_t>(count++);
          G._omega.push_back({s, x, 0});
        }
      }
    }

    // For each point x and idempotent e with x in D_e, all s with the same
    // value se are equivalent at x.
    detail::UnionFind         uf(count);
    std::vector<std::int64_t> bucket(m);
    for (index_type x = 0; x < n; ++x) {
      for (auto e : S.idempotents()) {
        if (!action.in_domain(e, x)) {
          continue;
        }
        std::fill(bucket.begin(), bucket.end(), GermGroupoid::undefined);
        for (index_type s = 0; s < m; ++s) {
          auto const k = slot[s * n + x];
          if (k == GermGroupoid::undefined) {
            continue;
          }
          auto& b = bucket[S.mul(s, e)];
          if (b == GermGroupoid::undefined) {
            b = k;
          } else {
            uf.unite(static_cast<std::size_t>(b), static_cast<std::size_t>(k));
          }
        }
      }
    }

    // Roots are minimal omega positions, and omega is in lexicographic
    // order, so numbering roots in order gives the canonical class order.
    std::vector<std::int64_t> class_of_root(count, GermGroupoid::undefined);
    for (std::size_t k = 0; k < count; ++k) {
      auto const r = uf.find(k);
      if (class_of_root[r] == GermGroupoid::undefined) {
        class_of_root[r] = static_cast<std::int64_t>(G._rep.size());
        G._rep.emplace_back(G._omega[k].element, G._omega[k].point);
      }
      auto const c         = class_of_root[r];
      G._omega[k].class_id = static_cast<index_type>(c);
      G._class_of[G._omega[k].element * n + G._omega[k].point] = c;
    }

    auto const classes = G._rep.size();
    G._unit_at.assign(n, GermGroupoid::undefined);
    for (auto e : S.idempotents()) {
      for (auto x : action.domain(e)) {
        auto const c = G._class_of[e * n + x];
        if (G._unit_at[x] == GermGroupoid::undefined) {
          G._unit_at[x] = c;
        } else if (G._unit_at[x] != c) {
          throw InvariantError("two unit classes over point " + std::to_string(x));
        }
      }
    }
    for (index_type x = 0; x < n; ++x) {
      if (G._unit_at[x] != GermGroupoid::undefined) {
        G._units.push_back(static_cast<index_type>(G._unit_at[x]));
      }
    }
    detail::normalize(G._units);

    constexpr auto unset = static_cast<index_type>(-1);
    G._source.assign(classes, unset);
    G._range.assign(classes, unset);
    G._inverse.assign(classes, unset);
    auto assign = [](std::vector<index_type>& v, std::size_t i, index_type value, char const* what) {
      if (v[i] != unset && v[i] != value) {
        throw InvariantError(std::string(what) + " is not well defined on germ classes");
      }
      v[i] = value;
    };
    for (auto const& g : G._omega) {
      auto const y = *action.act(g.element, g.point);
      assign(G._source, g.class_id, static_cast<index_type>(G._unit_at[g.point]), "source");
      assign(G._range, g.class_id, static_cast<index_type>(G._unit_at[y]), "range");
      assign(G._inverse,
             g.class_id,
             static_cast<index_type>(G._class_of[S.inv(g.element) * n + y]),
             "inverse");
    }

    // [s, t.x][t, x] = [st, x]
    for (auto const& right : G._omega) {
      auto const y = *action.act(right.element, right.point);
      for (index_type s = 0; s < m; ++s) {
        auto const left = G._class_of[s * n + y];
        if (left == GermGroupoid::undefined) {
          continue;
        }
        auto const product = static_cast<index_type>(
            G._class_of[S.mul(s, right.element) * n + right.point]);
        auto [it, inserted] = G._composition.try_emplace(
            {static_cast<index_type>(left), right.class_id}, product);
        if (!inserted && it->second != product) {
          throw InvariantError("composition is not well defined on germ classes");
        }
      }
    }
    return G;
  }

  //! Exhaustive test of \f$(s, x) \sim (t, x)\f$ over all idempotents.
  //!
  //! \throws ContractError unless \f$x \in D_{s^*s} \cap D_{t^*t}\f$.
  inline bool germ_equiv_oracle(FiniteAction const& action,
                                index_type          s,
                                index_type          t,
                                index_type          x) {
    auto const& S = action.semigroup();
    if (s >= S.size() || t >= S.size() || x >= action.space_size() || !action.defined(s, x)
        || !action.defined(t, x)) {
      throw ContractError("germ_equiv_oracle needs x in the domains of both elements");
    }
    for (index_type e = 0; e < S.size(); ++e) {
      if (S.mul(e, e) == e && action.in_domain(e, x) && S.mul(s, e) == S.mul(t, e)) {
        return true;
      }
    }
    return false;
  }

  //! \f$\mathrm{Iso}(G) = \{\gamma : \mathbf{r}(\gamma) = \mathbf{d}(\gamma)\}\f$.
  inline index_set isotropy(GermGroupoid const& G) {
    index_set out;
    for (index_type g = 0; g < G.size(); ++g) {
      if (G.source(g) == G.range(g)) {
        out.push_back(g);
      }
    }
    return out;
  }

  struct FixedSets {
    index_set fixed;            //!< \f$F_s\f$
    index_set trivially_fixed;  //!< \f$TF_s = \bigcup_{e \in J_s} D_e\f$
  };

  inline FixedSets fixed_sets(FiniteAction const& action, index_type s) {
    auto const& S = action.semigroup();
    if (s >= S.size()) {
      throw ContractError("element index out of range");
    }
    FixedSets out;
    for (auto x : action.source_domain(s)) {
      if (*action.act(s, x) == x) {
        out.fixed.push_back(x);
      }
    }
    for (auto e : j_set(S, s)) {
      out.trivially_fixed = detail::set_union(out.trivially_fixed, action.domain(e));
    }
    return out;
  }

  //! Certificate for #check_fixed_sets: the first \f$(s, x) \in \Omega\f$
  //! where one of the three statements fails.
  struct FixedPointCheck {
    enum class Item {
      none,
      fixed_iff_isotropy,
      trivially_fixed_iff_unit,
      trivially_fixed_subset_fixed
    };

    Item       item    = Item::none;
    index_type element = 0;
    index_type point   = 0;

    bool ok() const noexcept {
      return item == Item::none;
    }
    explicit operator bool() const noexcept {
      return ok();
    }
  };

  //! For every \f$(s, x) \in \Omega\f$: \f$x \in F_s\f$ iff \f$[s, x]\f$ is
  //! isotropy, \f$x \in TF_s\f$ iff \f$[s, x]\f$ is a unit, and \f$TF_s
  //! \subseteq F_s\f$.
  inline FixedPointCheck check_fixed_sets(FiniteAction const& action, GermGroupoid const& G) {
    using Item    = FixedPointCheck::Item;
    auto const& S = action.semigroup();
    auto const  iso = isotropy(G);
    for (index_type s = 0; s < S.size(); ++s) {
      auto const fs = fixed_sets(action, s);
      for (auto x : action.source_domain(s)) {
        auto const g = *G.class_of(s, x);
        if (detail::contains(fs.fixed, x) != detail::contains(iso, g)) {
          return {Item::fixed_iff_isotropy, s, x};
        }
        if (detail::contains(fs.trivially_fixed, x) != G.is_unit(g)) {
          return {Item::trivially_fixed_iff_unit, s, x};
        }
        if (detail::contains(fs.trivially_fixed, x) && !detail::contains(fs.fixed, x)) {
          return {Item::trivially_fixed_subset_fixed, s, x};
        }
      }
      if (!detail::is_subset(fs.trivially_fixed, fs.fixed)) {
        return {Item::trivially_fixed_subset_fixed, s, fs.trivially_fixed.front()};
      }
    }
    return {};
  }

  inline FixedPointCheck check_fixed_sets(FiniteAction const& action) {
    return check_fixed_sets(action, build_germs(action));
  }

  //! Under left translation, \f$F_s = \bigcup_{e \in J_s} eS\f$ for every
  //! \f$s\f$.
  inline bool check_fs_form(FiniteInverseSemigroup const& S) {
    auto const action = left_translation_action(S);
    for (index_type s = 0; s < S.size(); ++s) {
      if (fixed_sets(action, s).fixed != right_ideal_union(S, j_set(S, s))) {
        return false;
      }
    }
    return true;
  }

  //! Isotropy equals the unit space.
  inline bool is_principal(GermGroupoid const& G) {
    return isotropy(G) == G.units();
  }

  //! The interior of the isotropy equals the unit space. On a finite
  //! discrete action every set of germs is open, so the interior is the
  //! isotropy itself and this agrees with #is_principal.
  inline bool is_effective(GermGroupoid const& G) {
    auto const interior = isotropy(G);
    return interior == G.units();
  }

  //! The units \f$x\f$ with trivial isotropy group \f$G_x^x = \{x\}\f$ are
  //! dense in the unit space. In a finite discrete space dense means
  //! everything, so this agrees with #is_principal.
  inline bool is_essentially_principal(GermGroupoid const& G) {
    std::vector<std::size_t> group_size(G.size(), 0);
    for (index_type g = 0; g < G.size(); ++g) {
      if (G.source(g) == G.range(g)) {
        ++group_size[G.source(g)];
      }
    }
    for (auto u : G.units()) {
      if (group_size[u] != 1) {
        return false;
      }
    }
    return true;
  }

  //! \f$\Theta(s, U) = \{[s, x] : x \in U\}\f$.
  //!
  //! \throws ContractError unless \f$U \subseteq D_{s^*s}\f$.
  inline index_set slice(GermGroupoid const& G, index_type s, index_set const& U) {
    index_set out;
    for (auto x : U) {
      auto g = G.class_of(s, x);
      if (!g) {
        throw ContractError("slice point " + std::to_string(x)
                            + " is outside the domain of element " + std::to_string(s));
      }
      out.push_back(*g);
    }
    detail::normalize(out);
    return out;
  }

  //! The germ groupoid is Hausdorff iff \f$TF_s\f$ is closed relative to
  //! the closure of \f$D_{s^*s}\f$. In a finite discrete space every set is
  //! closed; what remains is the chain \f$TF_s \subseteq F_s \subseteq
  //! D_{s^*s}\f$, which this checks.
  inline bool check_hausdorff_closedness(FiniteAction const& action, index_type s) {
    auto const fs        = fixed_sets(action, s);
    bool const closed    = true;
    bool const inclusion = detail::is_subset(fs.trivially_fixed, fs.fixed)
                           && detail::is_subset(fs.fixed, action.source_domain(s));
    return closed && inclusion;
  }

  //! Certificate for #check_groupoid_axioms.
  struct GroupoidAxiomCheck {
    std::string failure;

    bool ok() const noexcept {
      return failure.empty();
    }
    explicit operator bool() const noexcept {
      return ok();
    }
  };

  //! Associativity on composable triples, unit laws and inverse laws.
  inline GroupoidAxiomCheck check_groupoid_axioms(GermGroupoid const& G) {
    auto fail = [](std::string msg) { return GroupoidAxiomCheck{std::move(msg)}; };
    for (index_type g = 0; g < G.size(); ++g) {
      auto const gi = G.inverse(g);
      if (G.inverse(gi) != g) {
        return fail("inverse is not an involution at " + std::to_string(g));
      }
      if (G.compose(g, gi) != G.range(g) || G.compose(gi, g) != G.source(g)) {
        return fail("inverse law fails at " + std::to_string(g));
      }
      if (G.compose(G.range(g), g) != g || G.compose(g, G.source(g)) != g) {
        return fail("unit law fails at " + std::to_string(g));
      }
    }
    std::vector<std::vector<index_type>> by_range(G.size());
    for (index_type g = 0; g < G.size(); ++g) {
      by_range[G.range(g)].push_back(g);
    }
    for (auto const& [ab, prod] : G.composition()) {
      auto const [a, b] = ab;
      if (G.source(a) != G.range(b)) {
        return fail("composition defined on a non-composable pair");
      }
      if (G.source(prod) != G.source(b) || G.range(prod) != G.range(a)) {
        return fail("composition has the wrong source or range");
      }
      for (auto c : by_range[G.source(b)]) {
        auto left  = G.compose(prod, c);
        auto bc    = G.compose(b, c);
        auto right = bc ? G.compose(a, *bc) : std::nullopt;
        if (!left || left != right) {
          return fail("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b)
                      + ", " + std::to_string(c) + ")");
        }
      }
    }
    for (index_type a = 0; a < G.size(); ++a) {
      for (auto b : by_range[G.source(a)]) {
        if (!G.compose(a, b)) {
          return fail("composable pair without a product");
        }
      }
    }
    return {};
  }

}  // namespace invsg
