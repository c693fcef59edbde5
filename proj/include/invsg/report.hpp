#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "action.hpp"
#include "criterion.hpp"
#include "germ_groupoid.hpp"
#include "io.hpp"
#include "order.hpp"
#include "semigroup.hpp"
#include "symbolic.hpp"

//! Reports produced by the command line tool, and the builders that run
//! the library operations behind each subcommand.
namespace invsg::report {

  using ojson = nlohmann::ordered_json;

  struct SemigroupStats {
    std::size_t               order       = 0;
    std::size_t               idempotents = 0;
    std::optional<index_type> zero;
    std::optional<index_type> identity;
    bool                      group       = false;
    bool                      semilattice = false;
  };

  inline SemigroupStats stats_of(FiniteInverseSemigroup const& S) {
    return {S.size(), S.idempotents().size(), S.zero(), S.identity(), S.is_group(),
            S.is_semilattice()};
  }

  struct PropertyFlags {
    bool                      e_unitary = false;
    std::optional<index_type> e_unitary_witness;
    //! Only meaningful with a zero.
    std::optional<bool>       e_star_unitary;
    std::optional<index_type> e_star_unitary_witness;
    CompletenessResult        completeness;
    bool                      pseudogroup = false;
    std::vector<std::string>  notes;
  };

  struct ElementVerdict {
    index_type       element = 0;
    std::string      label;
    CriterionVerdict verdict;
  };

  struct GroupoidStats {
    std::size_t space_size            = 0;
    std::size_t omega                 = 0;
    std::size_t germs                 = 0;
    std::size_t units                 = 0;
    std::size_t isotropy              = 0;
    std::size_t composable_pairs      = 0;
    bool        principal             = false;
    bool        effective             = false;
    bool        essentially_principal = false;
  };

  //! Outcomes of the independent re-checks run under `--verify`.
  struct Verification {
    std::vector<std::pair<std::string, bool>> checks;

    void add(std::string name, bool ok) {
      checks.emplace_back(std::move(name), ok);
    }

    bool all_agree() const noexcept {
      for (auto const& [name, ok] : checks) {
        if (!ok) {
          return false;
        }
      }
      return true;
    }
  };

  struct RunReport {
    std::string                            command;
    std::string                            input_digest;
    std::optional<SemigroupStats>          semigroup;
    std::optional<std::string>             certificate;
    std::optional<PropertyFlags>           properties;
    std::vector<ElementVerdict>            elements;
    std::optional<GroupoidStats>           groupoid;
    std::optional<SymbolicCriterionReport> symbolic;
    std::optional<Verification>            verification;
    //! Wall time in milliseconds, only when requested.
    std::optional<double> milliseconds;

    bool inconclusive() const noexcept {
      if (properties && properties->completeness.status == CheckStatus::inconclusive) {
        return true;
      }
      for (auto const& e : elements) {
        if (e.verdict.verdict == Verdict::inconclusive) {
          return true;
        }
      }
      return symbolic && symbolic->verdict == Verdict::inconclusive;
    }

    //! 0 when everything holds, 3 when a check ran out of budget, 4 when
    //! a verification disagreed.
    int exit_code() const noexcept {
      if (verification && !verification->all_agree()) {
        return 4;
      }
      return inconclusive() ? 3 : 0;
    }
  };

  namespace detail {
    inline ojson optional_index(std::optional<index_type> const& i) {
      return i ? ojson(*i) : ojson(nullptr);
    }

    inline char const* to_string(CompletenessResult::Failure f) noexcept {
      using F = CompletenessResult::Failure;
      switch (f) {
        case F::none: return "none";
        case F::missing_join: return "missing join";
        case F::left_distributivity: return "left distributivity";
        case F::right_distributivity: return "right distributivity";
      }
      return "";
    }
  }  // namespace detail

  inline ojson to_json(RunReport const& r) {
    ojson j;
    j["command"] = r.command;
    if (!r.input_digest.empty()) {
      j["input_digest"] = r.input_digest;
    }
    if (r.semigroup) {
      auto const& s    = *r.semigroup;
      ojson       o;
      o["order"]       = s.order;
      o["idempotents"] = s.idempotents;
      o["zero"]        = detail::optional_index(s.zero);
      o["identity"]    = detail::optional_index(s.identity);
      o["group"]       = s.group;
      o["semilattice"] = s.semilattice;
      j["semigroup"]   = std::move(o);
    }
    if (r.certificate) {
      j["certificate"] = *r.certificate;
    }
    if (r.properties) {
      auto const& p = *r.properties;
      ojson       o;
      o["e_unitary"] = p.e_unitary;
      if (p.e_unitary_witness) {
        o["e_unitary_witness"] = *p.e_unitary_witness;
      }
      o["e_star_unitary"] = p.e_star_unitary ? ojson(*p.e_star_unitary) : ojson(nullptr);
      if (p.e_star_unitary_witness) {
        o["e_star_unitary_witness"] = *p.e_star_unitary_witness;
      }
      ojson c;
      c["status"]          = to_string(p.completeness.status);
      c["subsets_checked"] = p.completeness.subsets_checked;
      c["budget"]          = p.completeness.budget;
      if (p.completeness.status == CheckStatus::fails) {
        c["failure"] = detail::to_string(p.completeness.failure);
        c["set"]     = p.completeness.A;
        if (p.completeness.s) {
          c["multiplier"] = *p.completeness.s;
        }
      }
      o["complete_and_distributive"] = std::move(c);
      o["abstract_pseudogroup"]      = p.pseudogroup;
      if (!p.notes.empty()) {
        o["notes"] = p.notes;
      }
      j["properties"] = std::move(o);
    }
    if (!r.elements.empty()) {
      auto arr = ojson::array();
      for (auto const& e : r.elements) {
        ojson o;
        o["element"] = e.element;
        o["label"]   = e.label;
        o["j_set"]   = e.verdict.j_set;
        o["verdict"] = to_string(e.verdict.verdict);
        if (e.verdict.witness) {
          o["witness"] = *e.verdict.witness;
        }
        o["union_condition"] = e.verdict.union_condition;
        arr.push_back(std::move(o));
      }
      j["criterion"] = std::move(arr);
    }
    if (r.groupoid) {
      auto const& g                = *r.groupoid;
      ojson       o;
      o["space_size"]            = g.space_size;
      o["omega"]                 = g.omega;
      o["germs"]                 = g.germs;
      o["units"]                 = g.units;
      o["isotropy"]              = g.isotropy;
      o["composable_pairs"]      = g.composable_pairs;
      o["principal"]             = g.principal;
      o["effective"]             = g.effective;
      o["essentially_principal"] = g.essentially_principal;
      j["groupoid"]              = std::move(o);
    }
    if (r.symbolic) {
      auto const& s          = *r.symbolic;
      ojson       o;
      o["family"]  = to_string(s.family);
      o["element"] = s.element;
      o["j_set"]   = s.j_set_description;
      o["verdict"] = to_string(s.verdict);
      o["witness"] = s.witness;
      if (s.antichain) {
        o["antichain"] = *s.antichain;
      }
      j["symbolic"] = std::move(o);
    }
    if (r.verification) {
      ojson o;
      auto  checks = ojson::array();
      for (auto const& [name, ok] : r.verification->checks) {
        checks.push_back(ojson{{"check", name}, {"agrees", ok}});
      }
      o["checks"]      = std::move(checks);
      o["all_agree"]   = r.verification->all_agree();
      j["verification"] = std::move(o);
    }
    if (r.milliseconds) {
      j["milliseconds"] = *r.milliseconds;
    }
    return j;
  }

  namespace detail {
    inline bool is_scalar(ojson const& v) {
      return !v.is_object() && !v.is_array();
    }

    inline std::string scalar_text(ojson const& v) {
      if (v.is_null()) {
        return "none";
      }
      if (v.is_string()) {
        return v.get<std::string>();
      }
      return v.dump();
    }

    inline void render(std::ostream& os, ojson const& obj, std::size_t indent);

    inline void render_value(std::ostream& os, ojson const& v, std::size_t indent) {
      if (is_scalar(v)) {
        os << ' ' << scalar_text(v) << '\n';
      } else if (v.is_array()) {
        bool flat = true;
        for (auto const& x : v) {
          flat = flat && is_scalar(x);
        }
        if (flat) {
          os << " [";
          bool first = true;
          for (auto const& x : v) {
            os << (first ? "" : ", ") << scalar_text(x);
            first = false;
          }
          os << "]\n";
        } else {
          os << '\n';
          for (auto const& x : v) {
            os << std::string(indent + 2, ' ') << "-";
            if (x.is_object()) {
              std::ostringstream inner;
              render(inner, x, indent + 4);
              auto text = inner.str();
              // First entry goes on the dash line.
              os << ' ' << text.substr(indent + 4);
            } else {
              render_value(os, x, indent + 2);
            }
          }
        }
      } else {
        os << '\n';
        render(os, v, indent + 2);
      }
    }

    inline void render(std::ostream& os, ojson const& obj, std::size_t indent) {
      for (auto const& [key, value] : obj.items()) {
        os << std::string(indent, ' ') << key << ':';
        render_value(os, value, indent);
      }
    }
  }  // namespace detail

  //! Indented `key: value` text with the same content and ordering as
  //! #to_json.
  inline std::string to_text(RunReport const& r) {
    std::ostringstream os;
    detail::render(os, to_json(r), 0);
    return os.str();
  }

  inline std::string to_structured(RunReport const& r) {
    return to_json(r).dump(2) + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  inline RunReport close_report(io::LoadedSemigroup const& in, bool verify,
                                std::size_t budget = default_closure_budget) {
    RunReport r;
    r.command      = "close";
    r.input_digest = in.digest;
    r.semigroup    = stats_of(in.semigroup);
    auto cert      = verify_inverse_semigroup(in.semigroup.table());
    r.certificate  = cert.ok() ? "inverse semigroup" : cert.describe();
    if (!cert.ok()) {
      throw InvariantError("closure failed verification: " + cert.describe());
    }
    if (verify) {
      Verification v;
      v.add("stored inverses, idempotents, order and zero", verify_inverse_semigroup(in.semigroup).ok());
      if (!in.generators.empty()) {
        auto again = close(in.generators, budget);
        v.add("closure is reproducible", again.semigroup == in.semigroup);
      }
      std::size_t commuting = 0;
      auto const& E         = in.semigroup.idempotents();
      for (auto e : E) {
        for (auto f : E) {
          commuting += in.semigroup.mul(e, f) == in.semigroup.mul(f, e);
        }
      }
      v.add("idempotents commute", commuting == E.size() * E.size());
      r.verification = std::move(v);
    }
    return r;
  }

  inline RunReport props_report(io::LoadedSemigroup const& in, std::size_t subset_budget,
                                bool verify) {
    auto const& S = in.semigroup;
    RunReport   r;
    r.command      = "props";
    r.input_digest = in.digest;
    r.semigroup    = stats_of(S);

    PropertyFlags p;
    p.e_unitary_witness = e_unitary_violation(S);
    p.e_unitary         = !p.e_unitary_witness;
    if (S.zero()) {
      auto u                   = is_e_star_unitary(S);
      p.e_star_unitary         = u.holds;
      p.e_star_unitary_witness = u.witness;
    }
    p.completeness = is_complete_and_distributive(S, subset_budget);
    p.pseudogroup  = S.is_monoid() && p.completeness.holds();
    if (S.is_semilattice()) {
      p.notes.push_back("every element is idempotent, so both unitary conditions hold trivially");
    }
    if (!S.is_monoid()) {
      p.notes.push_back("no identity element, so not an abstract pseudogroup");
    }
    if (verify) {
      Verification v;
      // Direct scans over the table, independent of j_set and the stored order.
      std::optional<index_type> eu;
      std::optional<index_type> esu;
      for (index_type s = 0; s < S.size() && !(eu && esu); ++s) {
        if (S.mul(s, s) == s) {
          continue;
        }
        for (index_type e = 0; e < S.size(); ++e) {
          if (S.mul(e, e) == e && S.mul(s, e) == e) {
            eu = eu ? eu : std::optional<index_type>(s);
            if (S.zero() && e != *S.zero()) {
              esu = esu ? esu : std::optional<index_type>(s);
            }
          }
        }
      }
      v.add("E-unitary by direct scan", eu.has_value() != p.e_unitary);
      if (S.zero()) {
        v.add("E*-unitary by direct scan", esu.has_value() != *p.e_star_unitary);
      }
      bool order_ok = true;
      for (index_type s = 0; s < S.size(); ++s) {
        for (index_type t = 0; t < S.size(); ++t) {
          bool exists = false;
          for (auto e : S.idempotents()) {
            exists = exists || S.mul(t, e) == s;
          }
          order_ok = order_ok && exists == S.leq(s, t);
        }
      }
      v.add("natural order equals s = te for some idempotent e", order_ok);
      if (p.completeness.status != CheckStatus::inconclusive) {
        v.add("completeness check is reproducible",
              is_complete_and_distributive(S, subset_budget).status == p.completeness.status);
      }
      r.verification = std::move(v);
    }
    r.properties = std::move(p);
    return r;
  }

  inline GroupoidStats groupoid_stats(FiniteAction const& action, GermGroupoid const& G) {
    GroupoidStats g;
    g.space_size            = action.space_size();
    g.omega                 = G.omega().size();
    g.germs                 = G.size();
    g.units                 = G.units().size();
    g.isotropy              = isotropy(G).size();
    g.composable_pairs      = G.composition().size();
    g.principal             = is_principal(G);
    g.effective             = is_effective(G);
    g.essentially_principal = is_essentially_principal(G);
    return g;
  }

  //! \p self_action marks the left translation action, where the fixed
  //! set form \f$F_s = \bigcup_{e \in J_s} eS\f$ is also re-checked.
  inline RunReport germs_report(FiniteAction const& action, std::string digest, bool self_action,
                                bool verify) {
    RunReport r;
    r.command      = "germs";
    r.input_digest = std::move(digest);
    r.semigroup    = stats_of(action.semigroup());
    auto const G   = build_germs(action);
    r.groupoid     = groupoid_stats(action, G);
    if (verify) {
      Verification v;
      v.add("groupoid axioms", check_groupoid_axioms(G).ok());
      bool same = true;
      for (auto const& a : G.omega()) {
        for (auto const& b : G.omega()) {
          if (a.point == b.point) {
            same = same
                   && (a.class_id == b.class_id)
                          == germ_equiv_oracle(action, a.element, b.element, a.point);
          }
        }
      }
      v.add("germ classes equal the pairwise oracle", same);
      v.add("fixed points are isotropy, trivially fixed points are units",
            check_fixed_sets(action, G).ok());
      if (self_action) {
        v.add("fixed sets are unions of eS over J_s", check_fs_form(action.semigroup()));
      }
      r.verification = std::move(v);
    }
    return r;
  }

  //! Every element when \p element is empty.
  inline RunReport criterion_report(FiniteInverseSemigroup const& S, std::string digest,
                                    std::optional<index_type> element, bool verify) {
    RunReport r;
    r.command      = "criterion";
    r.input_digest = std::move(digest);
    r.semigroup    = stats_of(S);
    std::vector<index_type> subjects;
    if (element) {
      subjects.push_back(*element);
    } else {
      for (index_type s = 0; s < S.size(); ++s) {
        subjects.push_back(s);
      }
    }
    for (auto s : subjects) {
      r.elements.push_back({s, S.label(s), hausdorff_criterion(S, s)});
    }
    if (verify) {
      Verification v;
      bool        agree   = true;
      std::size_t skipped = 0;
      for (auto s : subjects) {
        if (j_set(S, s).size() > max_j_set_for_subset_search) {
          ++skipped;
          continue;
        }
        auto c = compare_criterion_conditions(S, s);
        agree  = agree && c.agree() && c.union_form;
      }
      v.add("union form agrees with downward form", agree);
      if (skipped != 0) {
        v.add(std::to_string(skipped) + " elements with large J_s skipped by subset search", true);
      }
      r.verification = std::move(v);
    }
    return r;
  }

  namespace detail {
    inline bool same_strings(std::vector<std::string> a, std::vector<std::string> b) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }

    //! The witness labels the finite core criterion gives on a table.
    inline std::vector<std::string> core_witness(FiniteInverseSemigroup const& S, index_type s) {
      std::vector<std::string> out;
      auto const v = hausdorff_criterion(S, s);
      for (auto f : *v.witness) {
        out.push_back(S.label(f));
      }
      return out;
    }

    //! Bounded-pool check of a witness \f$F\f$ given as elements of a
    //! symbolic family: every idempotent \f$e\f$ of the pool with
    //! \f$se = e\f$ lies below some member of \f$F\f$.
    template <typename Element>
    bool pool_covers(Element const& s, std::vector<Element> const& pool,
                     std::vector<Element> const& F) {
      for (auto const& e : pool) {
        if (!(e * e == e) || !(s * e == e)) {
          continue;
        }
        bool covered = false;
        for (auto const& f : F) {
          covered = covered || f * e == e;
        }
        if (!covered) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  struct SymbolicRequest {
    Family                     family = Family::atom_flip;
    std::string                expression;
    std::optional<std::size_t> truncation;
    //! Edge list for the graph family; the standard graph when empty.
    std::optional<std::string> graph;
  };

  inline RunReport symbolic_report(SymbolicRequest const& req, bool verify) {
    RunReport r;
    r.command = "symbolic";
    Verification v;
    switch (req.family) {
      case Family::munn: {
        if (req.truncation) {
          throw ContractError("the munn family has no closed truncation");
        }
        auto const word = munn::parse_word(req.expression);
        auto const s    = munn::MunnTree::from_word(munn::rank_of(word), word);
        r.symbolic      = munn::munn_criterion(s);
        if (verify) {
          std::vector<munn::MunnTree> F;
          if (s.is_idempotent()) {
            F.push_back(s);
          }
          auto pool = munn::pool(s.rank(), 4);
          pool.push_back(s);
          pool.push_back(inverse(s) * s);
          v.add("no pooled idempotent outside F is fixed",
                detail::pool_covers(s, pool, F));
          v.add("F is contained in J_s", F.empty() || s * F.front() == F.front());
        }
        break;
      }
      case Family::graph: {
        if (req.truncation) {
          throw ContractError("the graph family has no closed truncation");
        }
        auto g = std::make_shared<graph::DirectedGraph const>(
            req.graph ? graph::DirectedGraph::parse(*req.graph) : graph::DirectedGraph::standard());
        auto const s = graph::parse_path_pair(g, req.expression);
        r.symbolic   = graph::graph_criterion(s);
        if (verify) {
          std::vector<graph::PathPair> F{s.is_idempotent() ? s : graph::PathPair::zero(g)};
          auto pool = graph::pool(g, 3);
          pool.push_back(s);
          pool.push_back(inverse(s) * s);
          v.add("no pooled idempotent outside F is fixed",
                detail::pool_covers(s, pool, F));
          v.add("F is contained in J_s", s * F.front() == F.front());
        }
        break;
      }
      case Family::atom_flip: {
        auto const s = atomflip::parse(req.expression);
        r.symbolic   = atomflip::atomflip_criterion(s, req.truncation);
        if (verify) {
          if (r.symbolic->verdict == Verdict::refuted) {
            auto check = atomflip::verify_antichain(64);
            v.add("antichain ATOM(1..64) in J_FLIP", check.ok);
            bool linear = true;
            for (std::size_t n = 1; n <= 16; ++n) {
              auto const Fn = atomflip::truncate(n);
              linear        = linear && detail::core_witness(Fn, 1).size() == n;
            }
            v.add("finite truncations need witnesses of size n", linear);
          } else {
            std::size_t n = req.truncation.value_or(
                std::max<std::size_t>(3, static_cast<std::size_t>(s.atom_index())));
            auto const Fn = atomflip::truncate(n);
            auto       core = detail::core_witness(Fn, *atomflip::index_in_truncation(s, n));
            v.add("witness equals the finite criterion on F_" + std::to_string(n),
                  detail::same_strings(core, r.symbolic->witness));
          }
        }
        break;
      }
    }
    if (verify) {
      r.verification = std::move(v);
    }
    return r;
  }

}  // namespace invsg::report
