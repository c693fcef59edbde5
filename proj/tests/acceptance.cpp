// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Usage: acceptance <path-to-invsg-cli> <data-dir>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace {

  using invsg::index_set;
  using invsg::index_type;
  using Clock = std::chrono::steady_clock;

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }

  std::string fmt_ms(double ms) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << ms << " ms";
    return os.str();
  }

  int failures = 0;

  void report(int id, std::string const& title, Outcome const& o) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << ": "
              << o.detail << std::endl;
    failures += o.pass ? 0 : 1;
  }

  // Runs a criterion body, turning exceptions into failures.
  void run(int id, std::string const& title, std::function<Outcome()> const& body) {
    try {
      report(id, title, body());
    } catch (std::exception const& e) {
      report(id, title, {false, std::string("exception: ") + e.what()});
    }
  }

  std::vector<invsg::fixtures::NamedSemigroup> const& fixtures() {
    static auto const all = invsg::fixtures::standard();
    return all;
  }

  // Criterion 1: closure of all partial bijections on 2 and 3 points.
  Outcome closure_correctness() {
    Outcome     o;
    std::string orders;
    for (std::size_t n : {2, 3}) {
      auto const start  = Clock::now();
      auto const S      = invsg::close(invsg::all_partial_bijections(n)).semigroup;
      bool const ok     = invsg::verify_inverse_semigroup(S).ok();
      double const took = ms_since(start);
      auto const expect = oracle::symmetric_inverse_monoid_order(n);
      o.pass            = o.pass && ok && S.size() == expect && took < 1000.0;
      orders += (orders.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " order "
                + std::to_string(S.size()) + " (oracle " + std::to_string(expect) + ", verifier "
                + (ok ? "ok" : "FAILED") + ", " + fmt_ms(took) + ")";
    }
    o.detail = orders + "; limit 1000 ms each";
    return o;
  }

  // Criterion 2: the verifier accepts every fixture and rejects left zero.
  Outcome inverse_semigroup_axioms() {
    Outcome     o;
    double      slowest = 0;
    std::string bad;
    for (auto const& f : fixtures()) {
      auto const start = Clock::now();
      bool const ok    = invsg::verify_inverse_semigroup(f.semigroup.table()).ok()
                      && invsg::verify_inverse_semigroup(f.semigroup).ok();
      double const took = ms_since(start);
      slowest           = std::max(slowest, took);
      if (!ok || took >= 1000.0) {
        o.pass = false;
        bad += " " + f.name;
      }
    }
    auto const start    = Clock::now();
    auto const cert     = invsg::verify_inverse_semigroup(invsg::fixtures::left_zero_table());
    double const took   = ms_since(start);
    bool const rejected = !cert.ok() && took < 1000.0;
    o.pass              = o.pass && rejected;
    o.detail = std::to_string(fixtures().size()) + " fixtures accepted"
               + (bad.empty() ? "" : " except" + bad) + " (slowest " + fmt_ms(slowest)
               + "), left-zero table " + (rejected ? "rejected: " + cert.describe() : "ACCEPTED")
               + "; limit 1000 ms each";
    return o;
  }

  // Criterion 3: union form and downward form agree on every element.
  Outcome condition_equivalence() {
    std::size_t elements = 0, disagreements = 0, subsets = 0;
    for (auto const& f : fixtures()) {
      for (index_type s = 0; s < f.semigroup.size(); ++s) {
        auto const c = invsg::compare_criterion_conditions(f.semigroup, s);
        ++elements;
        subsets += c.subsets_checked;
        disagreements += c.agree() ? 0 : 1;
      }
    }
    return {disagreements == 0, std::to_string(elements) + " elements, " + std::to_string(subsets)
                                    + " subsets of J_s searched, "
                                    + std::to_string(disagreements) + " disagreements"};
  }

  // Criterion 4: left translation germ groupoids are principal, effective
  // and essentially principal; fixed points behave as isotropy and units.
  Outcome principal_shadow() {
    std::size_t violations = 0, pairs = 0;
    for (auto const& f : fixtures()) {
      auto const a = invsg::left_translation_action(f.semigroup);
      auto const G = invsg::build_germs(a);
      pairs += G.omega().size();
      violations += invsg::is_principal(G) ? 0 : 1;
      violations += invsg::is_effective(G) ? 0 : 1;
      violations += invsg::is_essentially_principal(G) ? 0 : 1;
      violations += invsg::check_fixed_sets(a, G).ok() ? 0 : 1;
      for (index_type s = 0; s < f.semigroup.size(); ++s) {
        auto const fs = invsg::fixed_sets(a, s);
        violations += fs.fixed == fs.trivially_fixed ? 0 : 1;
      }
    }
    return {violations == 0, std::to_string(fixtures().size()) + " fixtures, "
                                 + std::to_string(pairs) + " (s, x) pairs, "
                                 + std::to_string(violations) + " violations"};
  }

  // Criterion 5: F_s is the union of eS over J_s.
  Outcome fixed_set_form() {
    std::size_t checked = 0, violations = 0;
    for (auto const& f : fixtures()) {
      auto const& S = f.semigroup;
      violations += invsg::check_fs_form(S) ? 0 : 1;
      // Direct evaluation from the table as a second opinion.
      for (index_type s = 0; s < S.size(); ++s) {
        std::set<index_type> fixed, ideal;
        auto const           d = S.mul(S.inv(s), s);
        for (index_type t = 0; t < S.size(); ++t) {
          if (S.mul(d, t) == t && S.mul(s, t) == t) {
            fixed.insert(t);
          }
        }
        for (auto e : oracle::j_set(S, s)) {
          for (index_type t = 0; t < S.size(); ++t) {
            ideal.insert(S.mul(e, t));
          }
        }
        ++checked;
        violations += fixed == ideal ? 0 : 1;
      }
    }
    return {violations == 0,
            std::to_string(checked) + " elements, " + std::to_string(violations) + " violations"};
  }

  // Criterion 6: in I_2 and I_3 the join of J_s is a one-element witness.
  Outcome pseudogroup_branch() {
    std::size_t checked = 0, violations = 0;
    for (std::size_t n : {2, 3}) {
      auto const S = invsg::fixtures::symmetric_inverse_monoid(n);
      violations += invsg::is_abstract_pseudogroup(S).holds() ? 0 : 1;
      for (index_type s = 0; s < S.size(); ++s) {
        auto const J   = invsg::j_set(S, s);
        auto const top = invsg::join(S, J);
        ++checked;
        if (!top || !std::binary_search(J.begin(), J.end(), *top)) {
          ++violations;
          continue;
        }
        index_set const F{*top};
        bool const      downward = invsg::up_set(S, F, invsg::Relation::geq) == J;
        bool const union_ok = invsg::right_ideal_union(S, F) == invsg::right_ideal_union(S, J);
        violations += downward && union_ok ? 0 : 1;
      }
    }
    return {violations == 0, std::to_string(checked) + " elements of I_2 and I_3, "
                                 + std::to_string(violations) + " violations"};
  }

  // Criterion 7: bounded scans of graph inverse semigroups and free
  // inverse monoids.
  Outcome e_star_unitary_branch() {
    std::size_t violations = 0, elements = 0, verdicts = 0;
    auto const  g  = std::make_shared<invsg::graph::DirectedGraph const>(
        invsg::graph::DirectedGraph::standard());
    auto const gp = invsg::graph::pool(g, 3);
    std::vector<invsg::graph::PathPair> gidem;
    for (auto const& e : gp) {
      if (e.is_idempotent() && !e.is_zero()) {
        gidem.push_back(e);
      }
    }
    for (auto const& s : gp) {
      ++elements;
      if (!s.is_idempotent()) {
        for (auto const& e : gidem) {
          violations += s * e == e ? 1 : 0;
        }
      }
      auto const r = invsg::graph::graph_criterion(s);
      verdicts += 1;
      violations += r.verdict == invsg::Verdict::hausdorff_witness && r.witness.size() <= 1 ? 0 : 1;
    }
    std::size_t const graph_elements = elements;
    for (std::size_t rank : {1, 2}) {
      auto const                  mp = invsg::munn::pool(rank, 4);
      std::vector<invsg::munn::MunnTree> midem;
      for (auto const& e : mp) {
        if (e.is_idempotent()) {
          midem.push_back(e);
        }
      }
      for (auto const& s : mp) {
        ++elements;
        if (!s.is_idempotent()) {
          for (auto const& e : midem) {
            violations += s * e == e ? 1 : 0;
          }
        }
        auto const r = invsg::munn::munn_criterion(s);
        verdicts += 1;
        violations +=
            r.verdict == invsg::Verdict::hausdorff_witness && r.witness.size() <= 1 ? 0 : 1;
      }
    }
    return {violations == 0,
            std::to_string(graph_elements) + " graph elements (paths <= 3), "
                + std::to_string(elements - graph_elements)
                + " Munn elements (<= 4 vertices, ranks 1 and 2), " + std::to_string(verdicts)
                + " verdicts, " + std::to_string(violations) + " violations"};
  }

  // Criterion 8: the infinite family refutes FLIP; truncations need n atoms.
  Outcome refutation() {
    auto const start = Clock::now();
    auto const r     = invsg::atomflip::atomflip_criterion(invsg::atomflip::AtomFlip::flip());
    auto const anti  = invsg::atomflip::verify_antichain(64);
    bool       ok    = r.verdict == invsg::Verdict::refuted && r.antichain && anti.ok;
    std::size_t wrong = 0;
    for (std::size_t n = 1; n <= 64; ++n) {
      auto const sym  = invsg::atomflip::atomflip_criterion(invsg::atomflip::AtomFlip::flip(), n);
      auto const core = invsg::hausdorff_criterion(invsg::atomflip::truncate(n), 1);
      if (sym.verdict != invsg::Verdict::hausdorff_witness || sym.witness.size() != n
          || core.witness->size() != n) {
        ++wrong;
      }
    }
    double const took = ms_since(start);
    ok                = ok && wrong == 0 && took < 1000.0;
    return {ok, std::string("FLIP ") + invsg::to_string(r.verdict) + ", antichain probed to "
                    + std::to_string(anti.probed) + (anti.ok ? " ok" : " FAILED: " + anti.failure)
                    + ", truncations n=1..64 with wrong witness size: " + std::to_string(wrong)
                    + ", " + fmt_ms(took) + "; limit 1000 ms"};
  }

  // Criterion 9: union-find germ classes equal the pairwise oracle.
  Outcome oracle_equivalence() {
    auto const  start      = Clock::now();
    std::size_t pairs      = 0, mismatches = 0, largest = 0;
    std::string largest_name;
    for (auto const& f : fixtures()) {
      auto const a = invsg::left_translation_action(f.semigroup);
      auto const G = invsg::build_germs(a);
      if (G.omega().size() > largest) {
        largest      = G.omega().size();
        largest_name = f.name;
      }
      for (auto const& x : G.omega()) {
        for (auto const& y : G.omega()) {
          if (x.point != y.point) {
            continue;
          }
          ++pairs;
          bool const same = x.class_id == y.class_id;
          mismatches += same == invsg::germ_equiv_oracle(a, x.element, y.element, x.point) ? 0 : 1;
        }
      }
    }
    double const took = ms_since(start);
    return {mismatches == 0 && took < 10000.0,
            std::to_string(pairs) + " same-point pairs, largest |Omega| = " + std::to_string(largest)
                + " (" + largest_name + "), " + std::to_string(mismatches) + " mismatches, "
                + fmt_ms(took) + "; limit 10000 ms"};
  }

  std::string capture(std::string const& command, int& status) {
    std::string out;
    FILE*       pipe = popen(command.c_str(), "r");
    if (!pipe) {
      status = -1;
      return out;
    }
    std::array<char, 4096> buf;
    std::size_t            got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      out.append(buf.data(), got);
    }
    status = pclose(pipe);
    return out;
  }

  // Criterion 10: identical bytes across two runs.
  Outcome determinism(std::string const& cli, std::filesystem::path const& data) {
    auto q = [](std::filesystem::path const& p) { return "'" + p.string() + "'"; };
    std::vector<std::string> commands{
        "close " + q(data / "i3.json"),
        "props " + q(data / "i2.json"),
        "germs --self " + q(data / "i3.json"),
        "germs --action " + q(data / "z2_swap_action.json"),
        "criterion " + q(data / "f3.json"),
        "criterion --family atomflip --element FLIP",
        "symbolic munn 'x x^-1 y'",
        "symbolic graph 'p=e1.e2 , q=e0'",
    };
    std::size_t identical = 0, runs = 0;
    std::string problems;
    for (auto const& c : commands) {
      for (std::string const fmt : {"text", "structured"}) {
        auto const cmd = "'" + cli + "' --format " + fmt + " --verify " + c + " 2>&1";
        int        s1 = 0, s2 = 0;
        auto const a = capture(cmd, s1);
        auto const b = capture(cmd, s2);
        ++runs;
        if (a == b && s1 == s2 && !a.empty()) {
          ++identical;
        } else {
          problems += " [" + c + " " + fmt + "]";
        }
      }
    }
    // The same check in process: fixtures rebuilt from scratch give the
    // same report bytes.
    bool       in_process = true;
    auto const again      = invsg::fixtures::standard();
    for (std::size_t i = 0; i < fixtures().size(); ++i) {
      auto render = [](invsg::FiniteInverseSemigroup const& S) {
        return invsg::report::to_structured(
            invsg::report::criterion_report(S, "", std::nullopt, false));
      };
      in_process = in_process && render(fixtures()[i].semigroup) == render(again[i].semigroup);
    }
    return {identical == runs && in_process,
            std::to_string(identical) + "/" + std::to_string(runs)
                + " command lines byte-identical across two runs, in-process reports "
                + (in_process ? "identical" : "DIFFER") + problems};
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <invsg-cli> <data-dir>\n";
    return 2;
  }
  std::string const           cli  = argv[1];
  std::filesystem::path const data = argv[2];

  run(1, "closure correctness", closure_correctness);
  run(2, "inverse-semigroup axioms", inverse_semigroup_axioms);
  run(3, "union form equals downward form", condition_equivalence);
  run(4, "left translation groupoids principal and effective", principal_shadow);
  run(5, "fixed sets are unions of eS over J_s", fixed_set_form);
  run(6, "pseudogroup joins are witnesses", pseudogroup_branch);
  run(7, "E*-unitary families have small witnesses", e_star_unitary_branch);
  run(8, "atom-flip refutation and truncations", refutation);
  run(9, "germ classes equal the pairwise oracle", oracle_equivalence);
  run(10, "deterministic reports", [&] { return determinism(cli, data); });

  std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
