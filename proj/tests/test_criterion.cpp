#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using invsg::index_set;
using invsg::index_type;
using invsg::Verdict;

TEST_CASE("criterion on atom-flip truncations", "[criterion]") {
  for (std::size_t n = 0; n <= 12; ++n) {
    auto S = invsg::atomflip::truncate(n);
    auto v = invsg::hausdorff_criterion(S, 1);  // FLIP
    CHECK(v.verdict == Verdict::hausdorff_witness);
    REQUIRE(v.witness);
    if (n == 0) {
      CHECK(*v.witness == index_set{0});
    } else {
      index_set atoms;
      for (std::size_t i = 1; i <= n; ++i) {
        atoms.push_back(static_cast<index_type>(2 + i));
      }
      CHECK(*v.witness == atoms);
    }
    CHECK(v.union_condition);
    CHECK(v.j_set.size() == n + 1);
  }
}

TEST_CASE("idempotents are their own witness", "[criterion]") {
  for (auto const& f : invsg::fixtures::standard()) {
    auto const& S = f.semigroup;
    for (auto e : S.idempotents()) {
      auto v = invsg::hausdorff_criterion(S, e);
      CHECK(*v.witness == index_set{e});
    }
  }
}

TEST_CASE("criterion contract", "[criterion]") {
  auto S = invsg::atomflip::truncate(2);
  CHECK_THROWS_AS(invsg::hausdorff_criterion(S, 99), invsg::ContractError);
  CHECK(std::string(invsg::to_string(Verdict::refuted)) == "REFUTED");
}

TEST_CASE("the union form and the downward form agree", "[criterion][property]") {
  std::vector<invsg::FiniteInverseSemigroup> subjects;
  for (auto& f : invsg::fixtures::standard()) {
    subjects.push_back(std::move(f.semigroup));
  }
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    subjects.push_back(invsg::close(oracle::random_generators(rng, 3, 1 + trial % 3)).semigroup);
  }
  for (auto const& S : subjects) {
    for (index_type s = 0; s < S.size(); ++s) {
      auto c = invsg::compare_criterion_conditions(S, s);
      CHECK(c.agree());
      CHECK(c.union_form);
      CHECK(c.downward_form);
      CHECK(c.subsets_checked == (std::size_t(1) << invsg::j_set(S, s).size()));
      CHECK(invsg::union_and_downward_forms_agree(S, s));
      // The witness lies in J_s and is an antichain.
      auto v = invsg::hausdorff_criterion(S, s);
      for (auto f : *v.witness) {
        CHECK(std::binary_search(v.j_set.begin(), v.j_set.end(), f));
        for (auto g : *v.witness) {
          CHECK((f == g || !S.leq(f, g)));
        }
      }
    }
  }
}

TEST_CASE("joins of J_s in symmetric inverse monoids", "[criterion][pseudogroup]") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto S = invsg::fixtures::symmetric_inverse_monoid(n);
    for (index_type s = 0; s < S.size(); ++s) {
      auto J = invsg::j_set(S, s);
      REQUIRE(invsg::pairwise_compatible(S, J));
      auto top = invsg::join(S, J);
      REQUIRE(top);
      CHECK(std::binary_search(J.begin(), J.end(), *top));
      CHECK(invsg::up_set(S, {*top}, invsg::Relation::geq) == J);
      CHECK(*invsg::hausdorff_criterion(S, s).witness == index_set{*top});
    }
  }
}

TEST_CASE("subset search has a size limit", "[criterion]") {
  // A chain of 25 idempotents gives J of size 25 for the top element.
  auto S = invsg::fixtures::chain_semilattice(25);
  CHECK_THROWS_AS(invsg::compare_criterion_conditions(S, 0), invsg::BudgetExceeded);
  CHECK_NOTHROW(invsg::hausdorff_criterion(S, 0));
}
