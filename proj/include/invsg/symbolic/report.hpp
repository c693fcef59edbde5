#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../criterion.hpp"

namespace invsg {

  enum class Family { munn, graph, atom_flip };

  inline char const* to_string(Family f) noexcept {
    switch (f) {
      case Family::munn: return "munn";
      case Family::graph: return "graph";
      case Family::atom_flip: return "atomflip";
    }
    return "";
  }

  //! Criterion outcome for an element of a countable family, with
  //! \f$J_s\f$ described in closed form.
  struct SymbolicCriterionReport {
    Family      family = Family::munn;
    std::string element;
    std::string j_set_description;
    Verdict     verdict = Verdict::inconclusive;
    //! The finite set \f$F\f$, for Verdict::hausdorff_witness.
    std::vector<std::string> witness;
    //! Generator of an infinite antichain in \f$J_s\f$, for Verdict::refuted.
    std::optional<std::string> antichain;
  };

}  // namespace invsg
