#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exception.hpp"
#include "types.hpp"

namespace invsg {

  //! An injective partial map on the ground set \f$\{0, ..., n - 1\}\f$.
  //!
  //! Elements of the symmetric inverse monoid. Products compose right to
  //! left, so `f * g` is \f$x \mapsto f(g(x))\f$, matching the convention
  //! that the product \f$st\f$ in a semigroup acting on the left applies
  //! \f$t\f$ first.
  class PartialBijection {
   public:
    using point_type = index_type;
    using pair_type  = std::pair<point_type, point_type>;

    static constexpr std::int32_t undefined = -1;

    //! The empty map on \p ground_size points.
    explicit PartialBijection(std::size_t ground_size)
        : _image(check_ground(ground_size), undefined) {}

    PartialBijection(std::size_t ground_size, std::vector<pair_type> const& pairs)
        : PartialBijection(ground_size) {
      std::vector<bool> hit(ground_size, false);
      for (auto const& [x, y] : pairs) {
        if (x >= ground_size || y >= ground_size) {
          throw StructuralError("point out of range in pair ("
                                + std::to_string(x) + ", " + std::to_string(y)
                                + ") on ground size "
                                + std::to_string(ground_size));
        }
        if (_image[x] != undefined) {
          throw StructuralError("source point " + std::to_string(x)
                                + " mapped twice");
        }
        if (hit[y]) {
          throw StructuralError("target point " + std::to_string(y)
                                + " hit twice");
        }
        hit[y]    = true;
        _image[x] = static_cast<std::int32_t>(y);
      }
    }

    //! The identity map restricted to \p domain.
    static PartialBijection identity_on(std::size_t                    ground_size,
                                        std::vector<point_type> const& domain) {
      std::vector<pair_type> pairs;
      pairs.reserve(domain.size());
      for (auto x : domain) {
        pairs.emplace_back(x, x);
      }
      return PartialBijection(ground_size, pairs);
    }

    static PartialBijection identity(std::size_t ground_size) {
      PartialBijection out(ground_size);
      for (std::size_t x = 0; x < ground_size; ++x) {
        out._image[x] = static_cast<std::int32_t>(x);
      }
      return out;
    }

    std::size_t ground_size() const noexcept {
      return _image.size();
    }

    bool defined_at(point_type x) const noexcept {
      return x < _image.size() && _image[x] != undefined;
    }

    std::optional<point_type> operator()(point_type x) const noexcept {
      if (!defined_at(x)) {
        return std::nullopt;
      }
      return static_cast<point_type>(_image[x]);
    }

    //! Image array: entry `x` is the image of `x` or #undefined.
    std::vector<std::int32_t> const& images() const noexcept {
      return _image;
    }

    std::vector<point_type> domain() const {
      std::vector<point_type> out;
      for (std::size_t x = 0; x < _image.size(); ++x) {
        if (_image[x] != undefined) {
          out.push_back(static_cast<point_type>(x));
        }
      }
      return out;
    }

    std::vector<point_type> range() const {
      std::vector<point_type> out;
      for (auto y : _image) {
        if (y != undefined) {
          out.push_back(static_cast<point_type>(y));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    //! The (source, target) pairs ordered by source.
    std::vector<pair_type> pairs() const {
      std::vector<pair_type> out;
      for (std::size_t x = 0; x < _image.size(); ++x) {
        if (_image[x] != undefined) {
          out.emplace_back(static_cast<point_type>(x),
                           static_cast<point_type>(_image[x]));
        }
      }
      return out;
    }

    //! Size of the domain.
    std::size_t rank() const noexcept {
      return static_cast<std::size_t>(
          std::count_if(_image.begin(), _image.end(), [](std::int32_t y) {
            return y != undefined;
          }));
    }

    bool is_idempotent() const noexcept {
      for (std::size_t x = 0; x < _image.size(); ++x) {
        if (_image[x] != undefined && _image[x] != static_cast<std::int32_t>(x)) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(PartialBijection const&, PartialBijection const&)
        = default;
    friend auto operator<=>(PartialBijection const&, PartialBijection const&)
        = default;

   private:
    static std::size_t check_ground(std::size_t n) {
      if (n == 0) {
        throw StructuralError("ground size must be positive");
      }
      return n;
    }

    friend PartialBijection compose(PartialBijection const&,
                                    PartialBijection const&);
    friend PartialBijection invert(PartialBijection const&);

    std::vector<std::int32_t> _image;
  };

  //! The map \f$x \mapsto f(g(x))\f$ on \f$\{x \in dom(g) : g(x) \in dom(f)\}\f$.
  inline PartialBijection compose(PartialBijection const& f,
                                  PartialBijection const& g) {
    if (f.ground_size() != g.ground_size()) {
      throw StructuralError("cannot compose partial bijections on ground sizes "
                            + std::to_string(f.ground_size()) + " and "
                            + std::to_string(g.ground_size()));
    }
    PartialBijection out(f.ground_size());
    for (std::size_t x = 0; x < g._image.size(); ++x) {
      auto y = g._image[x];
      if (y != PartialBijection::undefined) {
        out._image[x] = f._image[static_cast<std::size_t>(y)];
      }
    }
    return out;
  }

  inline PartialBijection invert(PartialBijection const& f) {
    PartialBijection out(f.ground_size());
    for (std::size_t x = 0; x < f._image.size(); ++x) {
      auto y = f._image[x];
      if (y != PartialBijection::undefined) {
        out._image[static_cast<std::size_t>(y)] = static_cast<std::int32_t>(x);
      }
    }
    return out;
  }

  inline PartialBijection operator*(PartialBijection const& f,
                                    PartialBijection const& g) {
    return compose(f, g);
  }

  inline PartialBijection inverse(PartialBijection const& f) {
    return invert(f);
  }

  //! Writes `{0->1, 1->0}`; the empty map is `{}`.
  inline std::ostream& operator<<(std::ostream& os, PartialBijection const& f) {
    os << '{';
    bool first = true;
    for (auto const& [x, y] : f.pairs()) {
      if (!first) {
        os << ", ";
      }
      first = false;
      os << x << "->" << y;
    }
    return os << '}';
  }

  inline std::string to_string(PartialBijection const& f) {
    std::ostringstream os;
    os << f;
    return os.str();
  }

  //! Every partial bijection on \p n points, ordered by image array.
  inline std::vector<PartialBijection> all_partial_bijections(std::size_t n) {
    std::vector<PartialBijection> out;
    std::vector<std::pair<index_type, index_type>> pairs;
    std::vector<bool> used(n, false);
    std::function<void(index_type)> rec = [&](index_type x) {
      if (x == n) {
        out.emplace_back(n, pairs);
        return;
      }
      rec(x + 1);
      for (index_type y = 0; y < n; ++y) {
        if (!used[y]) {
          used[y] = true;
          pairs.emplace_back(x, y);
          rec(x + 1);
          pairs.pop_back();
          used[y] = false;
        }
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace invsg

template <>
struct std::hash<invsg::PartialBijection> {
  std::size_t operator()(invsg::PartialBijection const& f) const noexcept {
    std::size_t h = f.ground_size();
    for (auto y : f.images()) {
      h = h * 1000003u ^ static_cast<std::size_t>(y + 1);
    }
    return h;
  }
};
