#include <memory>
#include <random>
#include <unordered_map>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

namespace munn     = invsg::munn;
namespace graph    = invsg::graph;
namespace atomflip = invsg::atomflip;
using invsg::Verdict;

////////////////////////////////////////////////////////////////////////
// Munn trees
////////////////////////////////////////////////////////////////////////

namespace {

  munn::MunnTree tree(std::string const& w, std::size_t rank = 2) {
    return munn::MunnTree::from_word(rank, munn::parse_word(w));
  }

}  // namespace

TEST_CASE("Munn words parse and print", "[munn]") {
  CHECK(munn::parse_word("x y^-1 z* x4") == munn::Word{0, 3, 5, 6});
  CHECK(munn::parse_word("1").empty());
  CHECK(munn::to_string(munn::Word{0, 3}) == "x y^-1");
  CHECK(munn::to_string(munn::Word{}) == "1");
  CHECK(munn::generator_name(4) == "x5");
  CHECK_THROWS_AS(munn::parse_word("w"), invsg::ParseError);
  CHECK_THROWS_AS(munn::parse_word("x0"), invsg::ParseError);
  CHECK(munn::reduce(munn::parse_word("x y y^-1 x^-1 x")) == munn::Word{0});
  CHECK(munn::rank_of(munn::parse_word("z")) == 3);
}

TEST_CASE("Munn products", "[munn]") {
  auto x  = tree("x", 1);
  auto xx = x * x;
  CHECK(xx.vertices() == std::vector<munn::Word>{{}, {0}, {0, 0}});
  CHECK(xx.endpoint() == munn::Word{0, 0});

  auto e = x * inverse(x);
  CHECK(e.vertices() == std::vector<munn::Word>{{}, {0}});
  CHECK(e.endpoint().empty());
  CHECK(e.is_idempotent());
  CHECK(e * e == e);

  CHECK(munn::to_string(x * inverse(x)) == "{1; x} @ 1");
  CHECK_THROWS_AS(tree("x", 1) * tree("x", 2), invsg::ContractError);
  CHECK_THROWS_AS(munn::MunnTree(1, {{}, {0, 0}}, {}), invsg::StructuralError);
  CHECK_THROWS_AS(munn::MunnTree(1, {{0}}, {0}), invsg::StructuralError);
  CHECK_THROWS_AS(munn::MunnTree(1, {{}, {2}}, {}), invsg::StructuralError);
}

TEST_CASE("Munn trees satisfy the defining relations", "[munn][property]") {
  std::mt19937                       rng(1234);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> length(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    munn::Word u, v;
    for (int i = length(rng); i > 0; --i) {
      u.push_back(static_cast<munn::Letter>(letter(rng)));
    }
    for (int i = length(rng); i > 0; --i) {
      v.push_back(static_cast<munn::Letter>(letter(rng)));
    }
    auto a = munn::MunnTree::from_word(2, u);
    auto b = munn::MunnTree::from_word(2, v);
    // Gluing agrees with tracing the concatenated word.
    munn::Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(oracle::traced(a * b) == oracle::trace(uv));
    // a a^-1 a = a, and idempotents commute.
    CHECK(a * inverse(a) * a == a);
    CHECK(inverse(inverse(a)) == a);
    auto ea = inverse(a) * a;
    auto eb = b * inverse(b);
    CHECK(ea * eb == eb * ea);
    // The tree is recovered from a word that reads it.
    CHECK(munn::MunnTree::from_word(2, oracle::word_of(a)) == a);
  }
}

TEST_CASE("Munn pools", "[munn]") {
  CHECK(munn::pool(1, 1).size() == 1);
  CHECK(munn::pool(1, 1).front() == munn::MunnTree(1));
  // Rank 1 trees with at most 2 vertices: {1}, {1,x}, {1,x^-1}; endpoints
  // give 1 + 2 + 2 elements.
  CHECK(munn::pool(1, 2).size() == 5);
  auto p = munn::pool(2, 3);
  CHECK(std::is_sorted(p.begin(), p.end()));
  for (auto const& t : p) {
    CHECK(t.vertices().size() <= 3);
  }
}

TEST_CASE("Munn products are associative on bounded pools", "[munn][property]") {
  SECTION("rank 1, at most 4 vertices, exhaustive") {
    auto p = munn::pool(1, 4);
    for (auto const& a : p) {
      for (auto const& b : p) {
        for (auto const& c : p) {
          REQUIRE((a * b) * c == a * (b * c));
        }
      }
    }
  }
  SECTION("rank 2, at most 3 vertices, exhaustive") {
    auto p = munn::pool(2, 3);
    for (auto const& a : p) {
      for (auto const& b : p) {
        for (auto const& c : p) {
          REQUIRE((a * b) * c == a * (b * c));
        }
      }
    }
  }
  SECTION("rank 2, at most 4 vertices, sampled") {
    auto                                       p = munn::pool(2, 4);
    std::mt19937                               rng(555);
    std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
    for (int i = 0; i < 20000; ++i) {
      auto const& a = p[pick(rng)];
      auto const& b = p[pick(rng)];
      auto const& c = p[pick(rng)];
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("free inverse monoids are E-unitary on bounded pools", "[munn][property]") {
  for (std::size_t rank = 1; rank <= 2; ++rank) {
    auto p = munn::pool(rank, 4);
    for (auto const& s : p) {
      auto report = munn::munn_criterion(s);
      CHECK(report.verdict == Verdict::hausdorff_witness);
      CHECK(report.witness.size() <= 1);
      for (auto const& e : p) {
        if (e.is_idempotent() && s * e == e) {
          REQUIRE(s.is_idempotent());
          CHECK(munn::natural_leq(e, s));
        }
      }
    }
  }
}

TEST_CASE("Munn criterion reports", "[munn]") {
  auto x = munn::munn_criterion(tree("x"));
  CHECK(x.witness.empty());
  auto xx = tree("x x^-1");
  CHECK(munn::munn_criterion(xx).witness == std::vector<std::string>{munn::to_string(xx)});
  auto xxyy = tree("x x^-1 y y^-1");
  CHECK(xxyy.is_idempotent());
  CHECK(munn::munn_criterion(xxyy).witness.size() == 1);
}

TEST_CASE("Munn operations agree with a closed table", "[munn][property]") {
  // The inverse monoid generated by the idempotents 1, xx^-1, x^-1x is
  // finite; compare its table with the tree operations.
  std::vector<munn::MunnTree> gens{tree("x x^-1", 1), tree("x^-1 x", 1), munn::MunnTree(1)};
  auto                        c = invsg::close(gens);
  CHECK(invsg::verify_inverse_semigroup(c.semigroup).ok());
  auto const& S = c.semigroup;
  for (invsg::index_type a = 0; a < S.size(); ++a) {
    CHECK(S.is_idempotent(a) == c.elements[a].is_idempotent());
    for (invsg::index_type b = 0; b < S.size(); ++b) {
      CHECK(S.leq(a, b) == munn::natural_leq(c.elements[a], c.elements[b]));
    }
  }
}

////////////////////////////////////////////////////////////////////////
// Graph inverse semigroups
////////////////////////////////////////////////////////////////////////

namespace {

  std::shared_ptr<graph::DirectedGraph const> standard_graph() {
    return std::make_shared<graph::DirectedGraph const>(graph::DirectedGraph::standard());
  }

}  // namespace

TEST_CASE("graph paths and parsing", "[graph]") {
  auto g = standard_graph();
  auto p = graph::parse_path(*g, "e1.e2");
  CHECK(p.start == 0);
  CHECK(graph::range(*g, p) == 0);
  CHECK(graph::to_string(p) == "e1.e2");
  CHECK(graph::to_string(graph::parse_path(*g, "v1")) == "v1");
  CHECK_THROWS_AS(graph::parse_path(*g, "e1.e1"), invsg::ParseError);
  CHECK_THROWS_AS(graph::parse_path(*g, "e9"), invsg::ParseError);
  CHECK_THROWS_AS(graph::parse_path_pair(g, "p=e1 , q=e0"), invsg::ParseError);
  CHECK(graph::parse_path_pair(g, "ZERO").is_zero());
  auto a = graph::parse_path_pair(g, "p=e1.e2 , q=e0");
  CHECK(graph::to_string(a) == "p=e1.e2 , q=e0");
  CHECK(graph::parse_path_pair(g, graph::to_string(a)) == a);
  // v0 has paths e0 (loop) and e1 out; v1 has e2 out.
  CHECK(graph::paths(*g, 1).size() == 5);
  CHECK(graph::DirectedGraph::parse("0>0, 0>1, 1>0") == *g);
  CHECK_THROWS_AS(graph::DirectedGraph::parse("0-1"), invsg::ParseError);
}

TEST_CASE("graph products", "[graph]") {
  auto g  = standard_graph();
  auto pp = [&](std::string const& s) { return graph::parse_path_pair(g, s); };
  auto a  = pp("p=e1 , q=e1");
  CHECK(a * a == a);
  // (aa*)(ab(ab)*) = ab(ab)*
  auto ab = pp("p=e1.e2 , q=e1.e2");
  CHECK(a * ab == ab);
  CHECK(ab * a == ab);
  // Disjoint branches.
  CHECK((pp("p=e0 , q=e0") * pp("p=e1.e2 , q=e1.e2")).is_zero());
  CHECK((pp("0") * a).is_zero());
  // (e1 e2 (e0)*)(e0 e0*) = e1 e2 e0*
  CHECK(pp("p=e1.e2 , q=e0") * pp("p=e0 , q=e0") == pp("p=e1.e2 , q=e0"));
  // q extends r: (v0 e0*)... p (t q')*.
  CHECK(pp("p=v0 , q=e0.e0") * pp("p=e0 , q=e1.e2") == pp("p=v0 , q=e1.e2.e0"));
  auto other = std::make_shared<graph::DirectedGraph const>(graph::DirectedGraph(1, {{0, 0}}));
  CHECK_THROWS_AS(a * graph::PathPair::zero(other), invsg::ContractError);
}

TEST_CASE("graph products agree with the action on paths", "[graph][property]") {
  auto       g    = standard_graph();
  auto const pool = graph::pool(g, 2);
  auto const xs   = graph::paths(*g, 5);
  for (auto const& a : pool) {
    for (auto const& b : pool) {
      auto const ab = a * b;
      for (auto const& x : xs) {
        auto bx  = oracle::act(b, x);
        auto abx = bx ? oracle::act(a, *bx) : std::nullopt;
        REQUIRE(oracle::act(ab, x) == abx);
      }
    }
  }
}

TEST_CASE("graph semigroup laws on bounded pools", "[graph][property]") {
  auto       g    = standard_graph();
  auto const pool = graph::pool(g, 2);
  for (auto const& a : pool) {
    CHECK(a * inverse(a) * a == a);
    CHECK(inverse(inverse(a)) == a);
    for (auto const& b : pool) {
      if (a.is_idempotent() && b.is_idempotent()) {
        CHECK(a * b == b * a);
      }
      for (auto const& c : pool) {
        REQUIRE((a * b) * c == a * (b * c));
      }
    }
  }
}

TEST_CASE("graph inverse semigroups are E*-unitary on bounded pools", "[graph][property]") {
  auto       g    = standard_graph();
  auto const pool = graph::pool(g, 3);
  for (auto const& s : pool) {
    auto r = graph::graph_criterion(s);
    CHECK(r.verdict == Verdict::hausdorff_witness);
    CHECK(r.witness.size() == 1);
    for (auto const& e : pool) {
      if (e.is_idempotent() && !e.is_zero() && s * e == e) {
        REQUIRE(s.is_idempotent());
        CHECK(graph::natural_leq(e, s));
      }
    }
  }
  CHECK(graph::graph_criterion(graph::parse_path_pair(g, "p=e1 , q=e1")).witness
        == std::vector<std::string>{"p=e1 , q=e1"});
  CHECK(graph::graph_criterion(graph::parse_path_pair(g, "p=e1.e2 , q=e0")).witness
        == std::vector<std::string>{"0"});
  CHECK(graph::graph_criterion(graph::PathPair::zero(g)).witness
        == std::vector<std::string>{"0"});
}

////////////////////////////////////////////////////////////////////////
// Atom-flip
////////////////////////////////////////////////////////////////////////

TEST_CASE("atom-flip parsing and printing", "[atomflip]") {
  CHECK(atomflip::parse("flip") == atomflip::AtomFlip::flip());
  CHECK(atomflip::parse("ATOM(12)") == atomflip::AtomFlip::atom(12));
  CHECK(atomflip::parse("atom3") == atomflip::AtomFlip::atom(3));
  CHECK(atomflip::parse("0") == atomflip::AtomFlip::zero());
  CHECK(atomflip::to_string(atomflip::AtomFlip::atom(7)) == "ATOM(7)");
  CHECK_THROWS_AS(atomflip::parse("ATOM(0)"), invsg::ParseError);
  CHECK_THROWS_AS(atomflip::parse("FLOP"), invsg::ParseError);
  CHECK_THROWS_AS(atomflip::AtomFlip::atom(0), invsg::ContractError);
}

TEST_CASE("atom-flip truncations are inverse semigroups", "[atomflip]") {
  for (std::size_t n = 0; n <= 10; ++n) {
    auto S = atomflip::truncate(n);
    CHECK(S.size() == n + 3);
    CHECK(invsg::verify_inverse_semigroup(S.table()).ok());
    CHECK(invsg::verify_inverse_semigroup(S).ok());
    CHECK(S.zero() == 0u);
    CHECK(S.label(1) == "FLIP");
  }
  // F_0 is Z/2 with a zero adjoined.
  auto F0 = atomflip::truncate(0);
  CHECK(F0.mul(1, 1) == 2);
  CHECK(F0.identity() == 2u);
  CHECK(invsg::truncate(invsg::Family::atom_flip, 2).size() == 5);
  CHECK_THROWS_AS(invsg::truncate(invsg::Family::munn, 2), invsg::ContractError);
  CHECK_THROWS_AS(invsg::truncate(invsg::Family::graph, 2), invsg::ContractError);
}

TEST_CASE("atom-flip operations agree with truncation tables", "[atomflip][property]") {
  std::size_t const n     = 6;
  auto const        S     = atomflip::truncate(n);
  auto const        elems = atomflip::truncation_elements(n);
  for (invsg::index_type a = 0; a < S.size(); ++a) {
    CHECK(S.is_idempotent(a) == elems[a].is_idempotent());
    CHECK(elems[S.inv(a)] == inverse(elems[a]));
    for (invsg::index_type b = 0; b < S.size(); ++b) {
      CHECK(elems[S.mul(a, b)] == elems[a] * elems[b]);
      CHECK(S.leq(a, b) == atomflip::natural_leq(elems[a], elems[b]));
    }
  }
}

TEST_CASE("atom-flip criterion", "[atomflip]") {
  auto flip = atomflip::AtomFlip::flip();
  SECTION("infinite family refutes FLIP") {
    auto r = atomflip::atomflip_criterion(flip);
    CHECK(r.verdict == Verdict::refuted);
    CHECK(r.antichain.has_value());
    CHECK(r.witness.empty());
    CHECK(atomflip::verify_antichain(64).ok);
  }
  SECTION("truncations give the atoms") {
    for (std::size_t n = 1; n <= 64; ++n) {
      auto r = atomflip::atomflip_criterion(flip, n);
      CHECK(r.verdict == Verdict::hausdorff_witness);
      CHECK(r.witness.size() == n);
    }
    CHECK(atomflip::atomflip_criterion(flip, 0).witness == std::vector<std::string>{"ZERO"});
    CHECK(atomflip::atomflip_criterion(flip, 3).witness
          == std::vector<std::string>{"ATOM(1)", "ATOM(2)", "ATOM(3)"});
  }
  SECTION("idempotents") {
    CHECK(atomflip::atomflip_criterion(atomflip::AtomFlip::square()).witness
          == std::vector<std::string>{"SQUARE"});
    CHECK(atomflip::atomflip_criterion(atomflip::AtomFlip::atom(5)).verdict
          == Verdict::hausdorff_witness);
    CHECK_THROWS_AS(atomflip::atomflip_criterion(atomflip::AtomFlip::atom(5), 2),
                    invsg::ContractError);
  }
  SECTION("the symbolic witness matches the finite criterion") {
    for (std::size_t n = 0; n <= 16; ++n) {
      auto const S = atomflip::truncate(n);
      for (auto const& s : atomflip::truncation_elements(n)) {
        auto const idx  = *atomflip::index_in_truncation(s, n);
        auto const core = invsg::hausdorff_criterion(S, idx);
        std::vector<std::string> labels;
        for (auto f : *core.witness) {
          labels.push_back(S.label(f));
        }
        CHECK(labels == atomflip::atomflip_criterion(s, n).witness);
      }
    }
  }
}
