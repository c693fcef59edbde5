#pragma once

// Reference computations used to check the library. Each one is written
// from the definitions and shares no code with the routine it checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <invsg/invsg.hpp>

namespace oracle {

  using invsg::index_type;

  inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  //! \f$\sum_k \binom{n}{k}^2 k!\f$, the order of the symmetric inverse
  //! monoid on n points.
  inline std::uint64_t symmetric_inverse_monoid_order(std::uint64_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
      std::uint64_t fact = 1;
      for (std::uint64_t i = 2; i <= k; ++i) {
        fact *= i;
      }
      total += binomial(n, k) * binomial(n, k) * fact;
    }
    return total;
  }

  //! Partial maps as std::map, composed right to left.
  using Map = std::map<index_type, index_type>;

  inline Map to_map(invsg::PartialBijection const& f) {
    Map m;
    for (auto const& [x, y] : f.pairs()) {
      m[x] = y;
    }
    return m;
  }

  inline Map compose(Map const& f, Map const& g) {
    Map out;
    for (auto const& [x, y] : g) {
      if (auto it = f.find(y); it != f.end()) {
        out[x] = it->second;
      }
    }
    return out;
  }

  //! \f$s \leqslant t\f$ iff \f$s = te\f$ for some idempotent \f$e\f$.
  inline bool leq(invsg::FiniteInverseSemigroup const& S, index_type s, index_type t) {
    for (index_type e = 0; e < S.size(); ++e) {
      if (S.mul(e, e) == e && S.mul(t, e) == s) {
        return true;
      }
    }
    return false;
  }

  inline std::vector<index_type> j_set(invsg::FiniteInverseSemigroup const& S, index_type s) {
    std::vector<index_type> out;
    for (index_type e = 0; e < S.size(); ++e) {
      if (S.mul(e, e) == e && S.mul(s, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  //! The solutions t of sts = s and tst = t, by scanning the table.
  inline std::vector<index_type> inverses(invsg::CayleyTable const& m, index_type s) {
    std::vector<index_type> out;
    for (index_type t = 0; t < m.size(); ++t) {
      if (m(m(s, t), s) == s && m(m(t, s), t) == t) {
        out.push_back(t);
      }
    }
    return out;
  }

  //! Germ equivalence from the definition: some idempotent e with x in
  //! D_e and se = te.
  inline bool germ_equivalent(invsg::FiniteAction const& a, index_type s, index_type t,
                              index_type x) {
    auto const& S = a.semigroup();
    for (index_type e = 0; e < S.size(); ++e) {
      if (S.mul(e, e) != e) {
        continue;
      }
      auto const& D = a.domain(e);
      if (std::find(D.begin(), D.end(), x) != D.end() && S.mul(s, e) == S.mul(t, e)) {
        return true;
      }
    }
    return false;
  }

  //! Munn tree of a word obtained by reading the whole word from the
  //! root: vertices are the reduced prefixes, the endpoint the reduced
  //! word. Used to check that gluing trees agrees with concatenating words.
  struct Traced {
    std::set<invsg::munn::Word> vertices;
    invsg::munn::Word           endpoint;
    bool                        operator==(Traced const&) const = default;
  };

  inline Traced trace(invsg::munn::Word const& w) {
    Traced            t;
    invsg::munn::Word here;
    t.vertices.insert(here);
    for (auto l : w) {
      if (!here.empty() && here.back() == invsg::munn::inverse_letter(l)) {
        here.pop_back();
      } else {
        here.push_back(l);
      }
      t.vertices.insert(here);
    }
    t.endpoint = here;
    return t;
  }

  inline Traced traced(invsg::munn::MunnTree const& a) {
    return {std::set<invsg::munn::Word>(a.vertices().begin(), a.vertices().end()), a.endpoint()};
  }

  //! A word reading the tree of \p a: a depth-first walk returning to the
  //! root, followed by the path to the endpoint.
  inline invsg::munn::Word word_of(invsg::munn::MunnTree const& a) {
    using invsg::munn::Word;
    Word out;
    for (auto const& v : a.vertices()) {
      if (v.empty()) {
        continue;
      }
      // Walk out to v and back.
      out.insert(out.end(), v.begin(), v.end());
      auto back = invsg::munn::inverse_word(v);
      out.insert(out.end(), back.begin(), back.end());
    }
    out.insert(out.end(), a.endpoint().begin(), a.endpoint().end());
    return out;
  }

  //! pq* acting on paths: \f$q w \mapsto p w\f$.
  inline std::optional<invsg::graph::Path> act(invsg::graph::PathPair const& a,
                                               invsg::graph::Path const&     x) {
    if (a.is_zero() || x.start != a.q().start || x.edges.size() < a.q().edges.size()
        || !std::equal(a.q().edges.begin(), a.q().edges.end(), x.edges.begin())) {
      return std::nullopt;
    }
    invsg::graph::Path out = a.p();
    out.edges.insert(out.edges.end(), x.edges.begin() + a.q().edges.size(), x.edges.end());
    return out;
  }

  inline invsg::PartialBijection random_partial_bijection(std::mt19937& rng, std::size_t n) {
    std::vector<index_type> targets(n);
    for (index_type i = 0; i < n; ++i) {
      targets[i] = i;
    }
    std::shuffle(targets.begin(), targets.end(), rng);
    std::bernoulli_distribution                    keep(0.7);
    std::vector<std::pair<index_type, index_type>> pairs;
    for (index_type x = 0; x < n; ++x) {
      if (keep(rng)) {
        pairs.emplace_back(x, targets[x]);
      }
    }
    return invsg::PartialBijection(n, pairs);
  }

  inline std::vector<invsg::PartialBijection> random_generators(std::mt19937& rng,
                                                                std::size_t   n,
                                                                std::size_t   count) {
    std::vector<invsg::PartialBijection> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(random_partial_bijection(rng, n));
    }
    return out;
  }

}  // namespace oracle
