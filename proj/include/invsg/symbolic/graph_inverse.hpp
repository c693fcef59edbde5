#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "../exception.hpp"
#include "../types.hpp"
#include "report.hpp"

//! Graph inverse semigroups in the path-pair calculus.
//!
//! A nonzero element is \f$pq^*\f$ for directed paths \f$p, q\f$ with the
//! same range. Paths are read left to right: an edge sequence
//! \f$e_1 e_2 \cdots\f$ with \f$r(e_i) = s(e_{i+1})\f$. Each vertex is a
//! path of length zero, so vertex idempotents \f$vv^*\f$ exist.
namespace invsg::graph {

  struct Edge {
    index_type source;
    index_type target;

    friend bool operator==(Edge const&, Edge const&) = default;
  };

  class DirectedGraph {
   public:
    DirectedGraph(std::size_t vertex_count, std::vector<Edge> edges)
        : _vertices(vertex_count), _edges(std::move(edges)) {
      for (auto const& e : _edges) {
        if (e.source >= vertex_count || e.target >= vertex_count) {
          throw StructuralError("edge endpoint out of range");
        }
      }
    }

    //! Two vertices, three edges: a loop e0 at v0, e1: v0 -> v1 and
    //! e2: v1 -> v0.
    static DirectedGraph standard() {
      return DirectedGraph(2, {{0, 0}, {0, 1}, {1, 0}});
    }

    //! Parses `0>0, 0>1, 1>0`; the vertex count is one more than the
    //! largest vertex mentioned.
    static DirectedGraph parse(std::string const& text) {
      std::vector<Edge> edges;
      std::size_t       n = 0;
      std::string       item;
      std::istringstream in(text);
      while (std::getline(in, item, ',')) {
        auto const gt = item.find('>');
        if (gt == std::string::npos) {
          throw ParseError("edge '" + item + "' is not of the form a>b");
        }
        try {
          auto a = std::stoul(item.substr(0, gt));
          auto b = std::stoul(item.substr(gt + 1));
          edges.push_back({static_cast<index_type>(a), static_cast<index_type>(b)});
          n = std::max<std::size_t>(n, std::max(a, b) + 1);
        } catch (std::logic_error const&) {
          throw ParseError("edge '" + item + "' is not of the form a>b");
        }
      }
      if (edges.empty()) {
        throw ParseError("graph needs at least one edge");
      }
      return DirectedGraph(n, std::move(edges));
    }

    std::size_t vertex_count() const noexcept {
      return _vertices;
    }

    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    Edge const& edge(index_type e) const {
      return _edges.at(e);
    }

    friend bool operator==(DirectedGraph const&, DirectedGraph const&) = default;

   private:
    std::size_t       _vertices;
    std::vector<Edge> _edges;
  };

  //! A path given by its start vertex and edge sequence.
  struct Path {
    index_type              start = 0;
    std::vector<index_type> edges;

    std::size_t length() const noexcept {
      return edges.size();
    }

    friend bool operator==(Path const&, Path const&) = default;
    friend auto operator<=>(Path const&, Path const&) = default;
  };

  inline index_type range(DirectedGraph const& g, Path const& p) {
    return p.edges.empty() ? p.start : g.edge(p.edges.back()).target;
  }

  inline void check_path(DirectedGraph const& g, Path const& p) {
    if (p.start >= g.vertex_count()) {
      throw StructuralError("path starts at a vertex outside the graph");
    }
    index_type here = p.start;
    for (auto e : p.edges) {
      if (e >= g.edges().size()) {
        throw StructuralError("edge e" + std::to_string(e) + " is not in the graph");
      }
      if (g.edge(e).source != here) {
        throw StructuralError("edge e" + std::to_string(e) + " does not continue the path");
      }
      here = g.edge(e).target;
    }
  }

  //! Whether \p prefix is an initial segment of \p p; then \p rest holds
  //! the remainder, starting at the range of \p prefix.
  inline bool strip_prefix(DirectedGraph const& g, Path const& prefix, Path const& p, Path& rest) {
    if (prefix.start != p.start || prefix.edges.size() > p.edges.size()
        || !std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin())) {
      return false;
    }
    rest.start = range(g, prefix);
    rest.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(prefix.edges.size()),
                      p.edges.end());
    return true;
  }

  inline Path concatenate(Path const& a, Path const& b) {
    Path out = a;
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    return out;
  }

  inline std::string to_string(Path const& p) {
    if (p.edges.empty()) {
      return "v" + std::to_string(p.start);
    }
    std::string out;
    for (auto e : p.edges) {
      if (!out.empty()) {
        out += '.';
      }
      out += "e" + std::to_string(e);
    }
    return out;
  }

  class PathPair {
   public:
    //! The zero of the semigroup over \p g.
    static PathPair zero(std::shared_ptr<DirectedGraph const> g) {
      return PathPair(std::move(g));
    }

    //! \f$pq^*\f$.
    //!
    //! \throws StructuralError if either is not a path or their ranges
    //! differ.
    PathPair(std::shared_ptr<DirectedGraph const> g, Path p, Path q)
        : _graph(std::move(g)), _zero(false), _p(std::move(p)), _q(std::move(q)) {
      check_path(*_graph, _p);
      check_path(*_graph, _q);
      if (range(*_graph, _p) != range(*_graph, _q)) {
        throw StructuralError("pq* needs p and q with the same range");
      }
    }

    std::shared_ptr<DirectedGraph const> const& graph_ptr() const noexcept {
      return _graph;
    }

    DirectedGraph const& graph() const noexcept {
      return *_graph;
    }

    bool is_zero() const noexcept {
      return _zero;
    }

    Path const& p() const noexcept {
      return _p;
    }

    Path const& q() const noexcept {
      return _q;
    }

    bool is_idempotent() const noexcept {
      return _zero || _p == _q;
    }

    friend bool operator==(PathPair const& a, PathPair const& b) {
      return a._zero == b._zero && (a._zero || (a._p == b._p && a._q == b._q));
    }

    friend auto operator<=>(PathPair const& a, PathPair const& b) {
      if (a._zero || b._zero) {
        return b._zero <=> a._zero;
      }
      auto len = [](PathPair const& x) { return x._p.length() + x._q.length(); };
      if (auto c = len(a) <=> len(b); c != 0) {
        return c;
      }
      if (auto c = a._p <=> b._p; c != 0) {
        return c;
      }
      return a._q <=> b._q;
    }

   private:
    explicit PathPair(std::shared_ptr<DirectedGraph const> g)
        : _graph(std::move(g)), _zero(true) {}

    struct trusted {};
    PathPair(trusted, std::shared_ptr<DirectedGraph const> g, Path p, Path q)
        : _graph(std::move(g)), _zero(false), _p(std::move(p)), _q(std::move(q)) {}

    friend PathPair graph_multiply(PathPair const&, PathPair const&);
    friend PathPair inverse(PathPair const&);

    std::shared_ptr<DirectedGraph const> _graph;
    bool                                 _zero;
    Path                                 _p;
    Path                                 _q;
  };

  //! \f$(pq^*)(rt^*) = pr't^*\f$ if \f$r = qr'\f$, \f$p(tq')^*\f$ if
  //! \f$q = rq'\f$, and zero otherwise.
  inline PathPair graph_multiply(PathPair const& a, PathPair const& b) {
    if (a._graph != b._graph && !(*a._graph == *b._graph)) {
      throw ContractError("path pairs over different graphs");
    }
    if (a._zero || b._zero) {
      return PathPair::zero(a._graph);
    }
    auto const& g = *a._graph;
    Path        rest;
    if (strip_prefix(g, a._q, b._p, rest)) {
      return PathPair(PathPair::trusted{}, a._graph, concatenate(a._p, rest), b._q);
    }
    if (strip_prefix(g, b._p, a._q, rest)) {
      return PathPair(PathPair::trusted{}, a._graph, a._p, concatenate(b._q, rest));
    }
    return PathPair::zero(a._graph);
  }

  inline PathPair operator*(PathPair const& a, PathPair const& b) {
    return graph_multiply(a, b);
  }

  inline PathPair inverse(PathPair const& a) {
    if (a._zero) {
      return a;
    }
    return PathPair(PathPair::trusted{}, a._graph, a._q, a._p);
  }

  inline bool natural_leq(PathPair const& s, PathPair const& t) {
    return t * (inverse(s) * s) == s;
  }

  inline std::string to_string(PathPair const& a) {
    if (a.is_zero()) {
      return "0";
    }
    return "p=" + to_string(a.p()) + " , q=" + to_string(a.q());
  }

  inline std::ostream& operator<<(std::ostream& os, PathPair const& a) {
    return os << to_string(a);
  }

  //! Parses `e1.e2` (edges) or `v0` (a vertex path).
  inline Path parse_path(DirectedGraph const& g, std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) {
                 return std::isspace(c);
               }),
               text.end());
    auto number = [&](std::string const& tok, char tag) -> index_type {
      if (tok.size() < 2 || tok[0] != tag
          || !std::all_of(tok.begin() + 1, tok.end(), [](unsigned char c) {
               return std::isdigit(c);
             })
          || tok.size() > 9) {
        throw ParseError("bad path token '" + tok + "'");
      }
      return static_cast<index_type>(std::stoul(tok.substr(1)));
    };
    Path p;
    if (!text.empty() && text[0] == 'v') {
      p.start = number(text, 'v');
    } else {
      std::istringstream in(text);
      std::string        tok;
      while (std::getline(in, tok, '.')) {
        p.edges.push_back(number(tok, 'e'));
      }
      if (p.edges.empty()) {
        throw ParseError("empty path");
      }
      if (p.edges.front() >= g.edges().size()) {
        throw ParseError("edge e" + std::to_string(p.edges.front()) + " is not in the graph");
      }
      p.start = g.edge(p.edges.front()).source;
    }
    try {
      check_path(g, p);
    } catch (StructuralError const& e) {
      throw ParseError(e.what());
    }
    return p;
  }

  //! Parses `p=e1.e2 , q=e3` or `0`.
  inline PathPair parse_path_pair(std::shared_ptr<DirectedGraph const> g, std::string const& text) {
    std::string compact;
    for (unsigned char c : text) {
      if (!std::isspace(c)) {
        compact += static_cast<char>(c);
      }
    }
    if (compact == "0" || compact == "ZERO") {
      return PathPair::zero(std::move(g));
    }
    auto const comma = compact.find(',');
    if (comma == std::string::npos || !compact.starts_with("p=")
        || compact.compare(comma + 1, 2, "q=") != 0) {
      throw ParseError("expected 'p=<path> , q=<path>' or '0'");
    }
    auto p = parse_path(*g, compact.substr(2, comma - 2));
    auto q = parse_path(*g, compact.substr(comma + 3));
    try {
      return PathPair(std::move(g), std::move(p), std::move(q));
    } catch (StructuralError const& e) {
      throw ParseError(e.what());
    }
  }

  //! All paths of length at most \p max_length, vertices included, sorted
  //! by length then lexicographically.
  inline std::vector<Path> paths(DirectedGraph const& g, std::size_t max_length) {
    std::vector<Path> out;
    for (index_type v = 0; v < g.vertex_count(); ++v) {
      out.push_back({v, {}});
    }
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t const layer_end = out.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        auto const end = range(g, out[i]);
        for (index_type e = 0; e < g.edges().size(); ++e) {
          if (g.edge(e).source == end) {
            Path next = out[i];
            next.edges.push_back(e);
            out.push_back(std::move(next));
          }
        }
      }
      layer_begin = layer_end;
    }
    std::stable_sort(out.begin(), out.end(), [](Path const& a, Path const& b) {
      return a.length() != b.length() ? a.length() < b.length() : a < b;
    });
    return out;
  }

  //! Zero and every \f$pq^*\f$ with \f$|p|, |q| \leqslant\f$ \p max_length.
  //! A pool of elements, not closed under multiplication.
  inline std::vector<PathPair> pool(std::shared_ptr<DirectedGraph const> g, std::size_t max_length) {
    std::vector<PathPair> out{PathPair::zero(g)};
    auto const            ps = paths(*g, max_length);
    for (auto const& p : ps) {
      for (auto const& q : ps) {
        if (range(*g, p) == range(*g, q)) {
          out.emplace_back(g, p, q);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! Graph inverse semigroups are E*-unitary, so \f$J_s = \{s\}^\geqslant\f$
  //! for idempotent \f$s\f$ and \f$J_s = \{0\}\f$ otherwise.
  inline SymbolicCriterionReport graph_criterion(PathPair const& s) {
    SymbolicCriterionReport r;
    r.family  = Family::graph;
    r.element = to_string(s);
    r.verdict = Verdict::hausdorff_witness;
    if (s.is_zero()) {
      r.j_set_description = "{0}";
      r.witness           = {"0"};
    } else if (s.is_idempotent()) {
      r.j_set_description = "0 and all rr* with r extending p";
      r.witness           = {to_string(s)};
    } else {
      r.j_set_description = "{0} (graph inverse semigroups are E*-unitary)";
      r.witness           = {"0"};
    }
    return r;
  }

}  // namespace invsg::graph

template <>
struct std::hash<invsg::graph::PathPair> {
  std::size_t operator()(invsg::graph::PathPair const& a) const noexcept {
    if (a.is_zero()) {
      return 0x9e3779b9u;
    }
    std::size_t h = a.p().start * 7919u + a.q().start;
    for (auto e : a.p().edges) {
      h = h * 31 + e + 1;
    }
    h = h * 1000003u;
    for (auto e : a.q().edges) {
      h = h * 37 + e + 1;
    }
    return h;
  }
};
