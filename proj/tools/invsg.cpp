// Command line front end: closure, property checks, germ groupoids and
// criterion verdicts for finite and symbolic inverse semigroups.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <invsg/invsg.hpp>

namespace {

  enum ExitCode { exit_ok = 0, exit_parse = 2, exit_budget = 3, exit_invariant = 4 };

  struct Options {
    std::string                format       = "text";
    bool                       verify       = false;
    bool                       timing       = false;
    std::size_t                budget       = invsg::default_closure_budget;
    std::size_t                subset_budget = invsg::default_subset_budget;
    std::string                output;
    std::string                input;
    std::string                action;
    bool                       self = false;
    std::string                element;
    std::string                family;
    std::string                expression;
    std::optional<std::size_t> truncation;
    std::string                graph;
  };

  invsg::Family parse_family(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (name == "munn" || name == "free") {
      return invsg::Family::munn;
    }
    if (name == "graph") {
      return invsg::Family::graph;
    }
    if (name == "atomflip" || name == "atom-flip" || name == "atom_flip") {
      return invsg::Family::atom_flip;
    }
    throw invsg::ContractError("unknown family '" + name + "' (munn, graph, atomflip)");
  }

  //! An element given by index or by label.
  invsg::index_type resolve_element(invsg::FiniteInverseSemigroup const& S,
                                    std::string const&                   text) {
    if (!text.empty() && text.size() < 10
        && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
      auto i = std::stoul(text);
      if (i < S.size()) {
        return static_cast<invsg::index_type>(i);
      }
      throw invsg::ContractError("element " + text + " out of range (order "
                                 + std::to_string(S.size()) + ")");
    }
    auto const& labels = S.labels();
    auto        it     = std::find(labels.begin(), labels.end(), text);
    if (it == labels.end()) {
      throw invsg::ContractError("no element labelled '" + text + "'");
    }
    return static_cast<invsg::index_type>(it - labels.begin());
  }

  invsg::report::RunReport run(std::string const& command, Options const& o) {
    using namespace invsg;
    if (command == "close") {
      return report::close_report(io::load_semigroup(o.input, o.budget), o.verify, o.budget);
    }
    if (command == "props") {
      return report::props_report(io::load_semigroup(o.input, o.budget), o.subset_budget,
                                  o.verify);
    }
    if (command == "germs") {
      if (o.self == !o.action.empty()) {
        throw ContractError("germs needs exactly one of --self and --action");
      }
      if (o.self) {
        if (o.input.empty()) {
          throw ContractError("germs --self needs a semigroup file");
        }
        auto in = io::load_semigroup(o.input, o.budget);
        auto S  = std::make_shared<FiniteInverseSemigroup const>(std::move(in.semigroup));
        return report::germs_report(left_translation_action(S), in.digest, true, o.verify);
      }
      if (!o.input.empty()) {
        throw ContractError("germs --action takes the semigroup from the action file");
      }
      auto in = io::load_action(o.action, o.budget);
      return report::germs_report(in.action, in.digest, false, o.verify);
    }
    if (command == "criterion") {
      if (!o.family.empty()) {
        if (!o.input.empty()) {
          throw ContractError("criterion takes either a file or --family");
        }
        if (o.element.empty()) {
          throw ContractError("criterion --family needs --element");
        }
        auto r    = report::symbolic_report(
            {parse_family(o.family), o.element, o.truncation,
                o.graph.empty() ? std::nullopt : std::optional<std::string>(o.graph)},
            o.verify);
        r.command = "criterion";
        return r;
      }
      if (o.input.empty()) {
        throw ContractError("criterion needs a semigroup file or --family");
      }
      auto                             in = io::load_semigroup(o.input, o.budget);
      std::optional<invsg::index_type> element;
      if (!o.element.empty()) {
        element = resolve_element(in.semigroup, o.element);
      }
      return report::criterion_report(in.semigroup, in.digest, element, o.verify);
    }
    // symbolic
    return report::symbolic_report(
        {parse_family(o.family), o.expression, o.truncation,
         o.graph.empty() ? std::nullopt : std::optional<std::string>(o.graph)},
        o.verify);
  }

}  // namespace

int main(int argc, char** argv) {
  Options  o;
  CLI::App app{"Finite and symbolic inverse semigroups: closure, properties, germ groupoids "
               "and the finite-cover criterion for J_s."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--verify", o.verify, "Re-run independent oracles and compare");
  app.add_flag("--timing", o.timing, "Include wall time in the report");
  app.add_option("--budget", o.budget, "Closure element cap")
      ->envname("INVSG_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--subset-budget", o.subset_budget,
                 "Compatible subsets examined by the completeness check")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", o.output, "Write the report to a file instead of stdout");

  auto* close = app.add_subcommand("close", "Close a generator file and verify the table");
  close->add_option("file", o.input, "Semigroup file")->required();

  auto* props = app.add_subcommand("props", "Unitarity, completeness and distributivity");
  props->add_option("file", o.input, "Semigroup file")->required();

  auto* germs = app.add_subcommand("germs", "Groupoid of germs of an action");
  germs->add_option("file", o.input, "Semigroup file (with --self)");
  germs->add_flag("--self", o.self, "Use the left translation action of the semigroup");
  germs->add_option("--action", o.action, "Action file");

  auto* criterion = app.add_subcommand("criterion", "Finite-cover criterion for J_s");
  criterion->add_option("file", o.input, "Semigroup file");
  criterion->add_option("--element", o.element, "Element index or label; all when omitted");
  criterion->add_option("--family", o.family, "Symbolic family: munn, graph or atomflip");
  criterion->add_option("--truncation", o.truncation, "Atom-flip truncation size");
  criterion->add_option("--graph", o.graph, "Graph edges such as \"0>0, 0>1, 1>0\"");

  auto* symbolic = app.add_subcommand("symbolic", "Criterion for an element of a symbolic family");
  symbolic->add_option("family", o.family, "munn, graph or atomflip")->required();
  symbolic->add_option("expression", o.expression, "Element expression")->required();
  symbolic->add_option("--truncation", o.truncation, "Atom-flip truncation size");
  symbolic->add_option("--graph", o.graph, "Graph edges such as \"0>0, 0>1, 1>0\"");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_parse;
  }

  std::string const command = app.get_subcommands().front()->get_name();
  try {
    auto const start  = std::chrono::steady_clock::now();
    auto       report = run(command, o);
    if (o.timing) {
      report.milliseconds = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    }
    auto const text = o.format == "structured" ? invsg::report::to_structured(report)
                                               : invsg::report::to_text(report);
    if (o.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(o.output, std::ios::binary);
      if (!(out << text)) {
        std::cerr << "invsg: cannot write " << o.output << '\n';
        return exit_parse;
      }
    }
    if (report.verification && !report.verification->all_agree()) {
      std::cerr << "invsg: verification disagreed with the report\n";
    }
    return report.exit_code();
  } catch (invsg::BudgetExceeded const& e) {
    std::cerr << "invsg: budget exceeded: " << e.what() << '\n';
    return exit_budget;
  } catch (invsg::InvariantError const& e) {
    std::cerr << "invsg: internal invariant failure: " << e.what() << '\n';
    return exit_invariant;
  } catch (invsg::Error const& e) {
    std::cerr << "invsg: error: " << e.what() << '\n';
    return exit_parse;
  }
}
