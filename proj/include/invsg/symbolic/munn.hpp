#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../exception.hpp"
#include "report.hpp"

//! Free inverse monoids via Munn trees.
//!
//! An element is a finite subtree of the Cayley graph of the free group
//! containing the empty word, with a marked endpoint. Letters are encoded
//! so that the natural integer order is x1 < x1^-1 < x2 < x2^-1 < ...
namespace invsg::munn {

  using Letter = std::uint16_t;
  using Word   = std::vector<Letter>;

  constexpr Letter generator(std::size_t g) noexcept {
    return static_cast<Letter>(2 * g);
  }

  constexpr Letter generator_inverse(std::size_t g) noexcept {
    return static_cast<Letter>(2 * g + 1);
  }

  constexpr Letter inverse_letter(Letter l) noexcept {
    return static_cast<Letter>(l ^ 1u);
  }

  constexpr std::size_t generator_of(Letter l) noexcept {
    return l / 2;
  }

  //! Free reduction.
  inline Word reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto l : w) {
      if (!out.empty() && out.back() == inverse_letter(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  //! Reduced form of the free-group product \p a \p b, for reduced inputs.
  inline Word product(Word const& a, Word const& b) {
    Word out = a;
    for (auto l : b) {
      if (!out.empty() && out.back() == inverse_letter(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  inline Word inverse_word(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) {
      l = inverse_letter(l);
    }
    return out;
  }

  //! Name of generator \p g: x, y, z for the first three, then x4, x5, ...
  inline std::string generator_name(std::size_t g) {
    static char const* const names[] = {"x", "y", "z"};
    return g < 3 ? names[g] : "x" + std::to_string(g + 1);
  }

  //! Space separated letters, `1` for the empty word.
  inline std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += generator_name(generator_of(l));
      if (l & 1u) {
        out += "^-1";
      }
    }
    return out;
  }

  class MunnTree {
   public:
    //! The identity: a single vertex.
    explicit MunnTree(std::size_t rank) : _rank(rank), _vertices{Word{}} {}

    //! \throws StructuralError unless \p vertices is prefix closed, consists
    //! of reduced words over \p rank generators, and contains \p endpoint.
    MunnTree(std::size_t rank, std::vector<Word> vertices, Word endpoint)
        : _rank(rank), _vertices(std::move(vertices)), _endpoint(std::move(endpoint)) {
      std::sort(_vertices.begin(), _vertices.end());
      _vertices.erase(std::unique(_vertices.begin(), _vertices.end()), _vertices.end());
      for (auto const& v : _vertices) {
        for (auto l : v) {
          if (generator_of(l) >= rank) {
            throw StructuralError("letter outside the alphabet of rank " + std::to_string(rank));
          }
        }
        if (reduce(v) != v) {
          throw StructuralError("vertex " + munn::to_string(v) + " is not reduced");
        }
        if (!v.empty() && !has_vertex(Word(v.begin(), v.end() - 1))) {
          throw StructuralError("vertex " + munn::to_string(v) + " has no parent in the tree");
        }
      }
      if (!has_vertex(Word{})) {
        throw StructuralError("a Munn tree contains the empty word");
      }
      if (!has_vertex(_endpoint)) {
        throw StructuralError("endpoint is not a vertex");
      }
    }

    //! The tree traced by reading \p w letter by letter from the root.
    static MunnTree from_word(std::size_t rank, Word const& w) {
      std::vector<Word> vertices{Word{}};
      Word              here;
      for (auto l : w) {
        here = product(here, Word{l});
        vertices.push_back(here);
      }
      return MunnTree(rank, std::move(vertices), here);
    }

    std::size_t rank() const noexcept {
      return _rank;
    }

    //! Sorted.
    std::vector<Word> const& vertices() const noexcept {
      return _vertices;
    }

    Word const& endpoint() const noexcept {
      return _endpoint;
    }

    bool has_vertex(Word const& w) const {
      return std::binary_search(_vertices.begin(), _vertices.end(), w);
    }

    bool is_idempotent() const noexcept {
      return _endpoint.empty();
    }

    friend bool operator==(MunnTree const&, MunnTree const&) = default;

    friend auto operator<=>(MunnTree const& a, MunnTree const& b) {
      if (auto c = a._rank <=> b._rank; c != 0) {
        return c;
      }
      if (auto c = a._vertices.size() <=> b._vertices.size(); c != 0) {
        return c;
      }
      if (auto c = a._vertices <=> b._vertices; c != 0) {
        return c;
      }
      return a._endpoint <=> b._endpoint;
    }

   private:
    struct trusted {};
    MunnTree(trusted, std::size_t rank, std::vector<Word> vertices, Word endpoint)
        : _rank(rank), _vertices(std::move(vertices)), _endpoint(std::move(endpoint)) {}

    friend MunnTree munn_multiply(MunnTree const&, MunnTree const&);
    friend MunnTree inverse(MunnTree const&);

    std::size_t       _rank;
    std::vector<Word> _vertices;
    Word              _endpoint;
  };

  //! Glue the tree of \p b at the endpoint of \p a.
  inline MunnTree munn_multiply(MunnTree const& a, MunnTree const& b) {
    if (a.rank() != b.rank()) {
      throw ContractError("Munn trees of different rank");
    }
    std::vector<Word> vertices;
    vertices.reserve(a.vertices().size() + b.vertices().size());
    vertices = a.vertices();
    for (auto const& w : b.vertices()) {
      vertices.push_back(product(a.endpoint(), w));
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return MunnTree(MunnTree::trusted{}, a.rank(), std::move(vertices),
                    product(a.endpoint(), b.endpoint()));
  }

  inline MunnTree operator*(MunnTree const& a, MunnTree const& b) {
    return munn_multiply(a, b);
  }

  //! Re-root at the endpoint.
  inline MunnTree inverse(MunnTree const& a) {
    auto const        back = inverse_word(a.endpoint());
    std::vector<Word> vertices;
    vertices.reserve(a.vertices().size());
    for (auto const& w : a.vertices()) {
      vertices.push_back(product(back, w));
    }
    std::sort(vertices.begin(), vertices.end());
    return MunnTree(MunnTree::trusted{}, a.rank(), std::move(vertices), back);
  }

  //! \f$s \leqslant t\f$ iff \f$ts^*s = s\f$.
  inline bool natural_leq(MunnTree const& s, MunnTree const& t) {
    return t * (inverse(s) * s) == s;
  }

  inline std::string to_string(MunnTree const& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.vertices().size(); ++i) {
      if (i != 0) {
        out += "; ";
      }
      out += munn::to_string(a.vertices()[i]);
    }
    return out + "} @ " + munn::to_string(a.endpoint());
  }

  inline std::ostream& operator<<(std::ostream& os, MunnTree const& a) {
    return os << munn::to_string(a);
  }

  //! Parses space separated letters such as `x y x^-1`. Generators are
  //! `x`, `y`, `z` or `x1`, `x2`, ...; a trailing `^-1` or `*` inverts;
  //! `1` is the identity. Returns the unreduced word.
  //!
  //! \throws ParseError on unknown tokens.
  inline Word parse_word(std::string const& text) {
    Word               out;
    std::istringstream in(text);
    std::string        token;
    while (in >> token) {
      if (token == "1") {
        continue;
      }
      bool inv = false;
      if (token.size() > 3 && token.ends_with("^-1")) {
        inv = true;
        token.resize(token.size() - 3);
      } else if (token.size() > 1 && token.ends_with("*")) {
        inv = true;
        token.resize(token.size() - 1);
      }
      std::size_t g;
      if (token == "x") {
        g = 0;
      } else if (token == "y") {
        g = 1;
      } else if (token == "z") {
        g = 2;
      } else if (token.size() > 1 && token[0] == 'x'
                 && std::all_of(token.begin() + 1, token.end(), [](unsigned char c) {
                      return std::isdigit(c);
                    })
                 && token.size() < 6) {
        g = std::stoul(token.substr(1));
        if (g == 0) {
          throw ParseError("generators are numbered from x1");
        }
        --g;
      } else {
        throw ParseError("unknown letter '" + token + "' in Munn word");
      }
      out.push_back(inv ? generator_inverse(g) : generator(g));
    }
    return out;
  }

  //! Smallest rank whose alphabet contains every letter of \p w (at least 1).
  inline std::size_t rank_of(Word const& w) {
    std::size_t r = 1;
    for (auto l : w) {
      r = std::max(r, generator_of(l) + 1);
    }
    return r;
  }

  //! Every Munn tree of rank \p rank with at most \p max_vertices vertices,
  //! each with every possible endpoint, sorted. This is a pool of elements,
  //! not a subsemigroup.
  inline std::vector<MunnTree> pool(std::size_t rank, std::size_t max_vertices) {
    std::set<std::vector<Word>> trees;
    std::function<void(std::vector<Word> const&)> grow = [&](std::vector<Word> const& tree) {
      if (!trees.insert(tree).second || tree.size() >= max_vertices) {
        return;
      }
      for (auto const& v : tree) {
        for (std::size_t l = 0; l < 2 * rank; ++l) {
          auto const letter = static_cast<Letter>(l);
          if (!v.empty() && v.back() == inverse_letter(letter)) {
            continue;
          }
          Word w = v;
          w.push_back(letter);
          if (std::binary_search(tree.begin(), tree.end(), w)) {
            continue;
          }
          auto next = tree;
          next.insert(std::upper_bound(next.begin(), next.end(), w), w);
          grow(next);
        }
      }
    };
    if (max_vertices > 0) {
      grow({Word{}});
    }
    std::vector<MunnTree> out;
    for (auto const& t : trees) {
      for (auto const& end : t) {
        out.emplace_back(rank, t, end);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! In a free inverse monoid \f$e \leqslant s\f$ with \f$e\f$ idempotent
  //! forces \f$s\f$ idempotent, so \f$J_s = \emptyset\f$ for non-idempotent
  //! \f$s\f$ and \f$J_s = \{s\}^\geqslant\f$ otherwise.
  inline SymbolicCriterionReport munn_criterion(MunnTree const& s) {
    SymbolicCriterionReport r;
    r.family  = Family::munn;
    r.element = to_string(s);
    r.verdict = Verdict::hausdorff_witness;
    if (s.is_idempotent()) {
      r.j_set_description = "all idempotents e <= s (trees containing the tree of s, endpoint 1)";
      r.witness           = {to_string(s)};
    } else {
      r.j_set_description = "empty (free inverse monoids are E-unitary)";
    }
    return r;
  }

}  // namespace invsg::munn

template <>
struct std::hash<invsg::munn::MunnTree> {
  std::size_t operator()(invsg::munn::MunnTree const& a) const noexcept {
    std::size_t h = a.rank();
    for (auto const& v : a.vertices()) {
      for (auto l : v) {
        h = h * 31 + l + 1;
      }
      h = h * 1000003u + 7;
    }
    for (auto l : a.endpoint()) {
      h = h * 131 + l + 1;
    }
    return h;
  }
};
