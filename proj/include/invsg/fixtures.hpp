#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "partial_bijection.hpp"
#include "semigroup.hpp"
#include "symbolic/atom_flip.hpp"

//! Small named inverse semigroups used throughout the tests and the
//! acceptance suite.
namespace invsg::fixtures {

  //! The symmetric inverse monoid on \p n points, closed from all of its
  //! elements.
  inline FiniteInverseSemigroup symmetric_inverse_monoid(std::size_t n) {
    return close(all_partial_bijections(n)).semigroup;
  }

  //! \f$\mathbb{Z}/n\f$ generated by the rotation \f$x \mapsto x + 1\f$.
  inline FiniteInverseSemigroup cyclic_group(std::size_t n) {
    std::vector<PartialBijection::pair_type> pairs;
    for (index_type x = 0; x < n; ++x) {
      pairs.emplace_back(x, static_cast<index_type>((x + 1) % n));
    }
    return close(std::vector<PartialBijection>{PartialBijection(n, pairs)}).semigroup;
  }

  //! A chain of \p length idempotents \f$e_1 > e_2 > \cdots\f$, realised as
  //! identities on \f$\{0\}, \{0, 1\}, ...\f$.
  inline FiniteInverseSemigroup chain_semilattice(std::size_t length) {
    std::vector<PartialBijection> gens;
    for (std::size_t k = length; k >= 1; --k) {
      std::vector<index_type> dom;
      for (index_type x = 0; x < k; ++x) {
        dom.push_back(x);
      }
      gens.push_back(PartialBijection::identity_on(length, dom));
    }
    return close(gens).semigroup;
  }

  //! Identities on {0} and {1} in \f$I_2\f$: closes to {id_0, id_1, empty}
  //! with no join for the two atoms.
  inline FiniteInverseSemigroup two_atoms_without_top() {
    return close(std::vector<PartialBijection>{PartialBijection::identity_on(2, {0}),
                                               PartialBijection::identity_on(2, {1})})
        .semigroup;
  }

  //! The two-element left-zero table \f$xy = x\f$: a semigroup but not an
  //! inverse one.
  inline CayleyTable left_zero_table() {
    return CayleyTable::from_rows({{0, 0}, {1, 1}});
  }

  struct NamedSemigroup {
    std::string            name;
    FiniteInverseSemigroup semigroup;
  };

  //! I_1..I_3, Z/2, Z/3, chains of length 1..4 and F_0..F_6.
  inline std::vector<NamedSemigroup> standard() {
    std::vector<NamedSemigroup> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      out.push_back({"I_" + std::to_string(n), symmetric_inverse_monoid(n)});
    }
    out.push_back({"Z/2", cyclic_group(2)});
    out.push_back({"Z/3", cyclic_group(3)});
    for (std::size_t k = 1; k <= 4; ++k) {
      out.push_back({"chain_" + std::to_string(k), chain_semilattice(k)});
    }
    for (std::size_t n = 0; n <= 6; ++n) {
      out.push_back({"F_" + std::to_string(n), atomflip::truncate(n)});
    }
    return out;
  }

}  // namespace invsg::fixtures
