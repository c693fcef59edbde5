#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace invsg {

  //! Index of an element of a finite semigroup, or of a point of a finite
  //! space.
  using index_type = std::uint32_t;

  //! A set of indices, always kept sorted and duplicate free.
  using index_set = std::vector<index_type>;

  namespace detail {
    inline void normalize(index_set& s) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    inline bool contains(index_set const& s, index_type x) {
      return std::binary_search(s.begin(), s.end(), x);
    }

    inline bool is_subset(index_set const& a, index_set const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    inline index_set set_union(index_set const& a, index_set const& b) {
      index_set out;
      out.reserve(a.size() + b.size());
      std::set_union(
          a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      return out;
    }
  }  // namespace detail

}  // namespace invsg
