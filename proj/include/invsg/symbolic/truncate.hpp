#pragma once

#include <cstddef>
#include <string>

#include "../exception.hpp"
#include "../semigroup.hpp"
#include "atom_flip.hpp"
#include "report.hpp"

namespace invsg {

  //! A finite inverse semigroup from a family. Only the atom-flip family
  //! has closed truncations; the Munn and graph families provide element
  //! pools instead (munn::pool, graph::pool), which are not closed.
  //!
  //! \throws ContractError for Family::munn and Family::graph.
  inline FiniteInverseSemigroup truncate(Family family, std::size_t n) {
    if (family != Family::atom_flip) {
      throw ContractError(std::string("the ") + to_string(family)
                          + " family has no finite truncation closed under multiplication;"
                            " use its element pool");
    }
    return atomflip::truncate(n);
  }

}  // namespace invsg
