#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "action.hpp"
#include "exception.hpp"
#include "partial_bijection.hpp"
#include "semigroup.hpp"

//! Reading and writing the JSON input formats described in
//! docs/formats.md.
namespace invsg::io {

  inline constexpr int         format_version  = 1;
  inline constexpr char const* semigroup_format = "invsg-semigroup";
  inline constexpr char const* action_format    = "invsg-action";

  //! 64-bit FNV-1a of \p bytes as `fnv1a64:` followed by 16 hex digits.
  inline std::string digest(std::string const& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
  }

  inline std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open " + path.string());
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  struct LoadedSemigroup {
    FiniteInverseSemigroup semigroup;
    std::string            digest;
    //! "generators" or "table".
    std::string                   form;
    std::optional<std::size_t>    ground_size;
    std::vector<PartialBijection> generators;
  };

  namespace detail {
    using json = nlohmann::json;

    inline json parse_json(std::string const& text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
    }

    template <typename T>
    T get(json const& j, char const* key, char const* what) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(what) + " is missing field '" + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const&) {
        throw ParseError(std::string(what) + " field '" + key + "' has the wrong type");
      }
    }

    inline void check_header(json const& j, char const* format, char const* what) {
      if (!j.is_object()) {
        throw ParseError(std::string(what) + " must be a JSON object");
      }
      if (get<std::string>(j, "format", what) != format) {
        throw ParseError(std::string(what) + " has format '" + j.at("format").get<std::string>()
                         + "', expected '" + format + "'");
      }
      if (get<int>(j, "version", what) != format_version) {
        throw ParseError(std::string(what) + " version "
                         + std::to_string(j.at("version").get<int>()) + " is not supported");
      }
    }
  }  // namespace detail

  //! Builds the semigroup described by an already parsed document.
  //!
  //! \throws ParseError on malformed documents, StructuralError when a
  //! table is not an inverse semigroup, BudgetExceeded when a closure is
  //! too large.
  inline LoadedSemigroup parse_semigroup(nlohmann::json const& j,
                                         std::size_t           budget = default_closure_budget) {
    using detail::get;
    constexpr char const* what = "semigroup file";
    detail::check_header(j, semigroup_format, what);
    bool const has_gens  = j.contains("generators");
    bool const has_table = j.contains("table");
    if (has_gens == has_table) {
      throw ParseError("semigroup file needs exactly one of 'generators' and 'table'");
    }
    if (has_gens) {
      auto const n = get<std::size_t>(j, "ground_size", what);
      auto const raw
          = get<std::vector<std::vector<std::pair<index_type, index_type>>>>(j, "generators", what);
      if (raw.empty()) {
        throw ParseError("semigroup file lists no generators");
      }
      std::vector<PartialBijection> gens;
      for (auto const& pairs : raw) {
        try {
          gens.emplace_back(n, pairs);
        } catch (StructuralError const& e) {
          throw ParseError(std::string("invalid generator: ") + e.what());
        }
      }
      auto closure = close(gens, budget);
      return {std::move(closure.semigroup), "", "generators", n, std::move(gens)};
    }
    auto rows = get<std::vector<std::vector<index_type>>>(j, "table", what);
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = get<std::vector<std::string>>(j, "labels", what);
    }
    CayleyTable table;
    try {
      table = CayleyTable::from_rows(rows);
    } catch (StructuralError const& e) {
      throw ParseError(e.what());
    }
    if (!labels.empty() && labels.size() != table.size()) {
      throw ParseError("label count does not match the table");
    }
    return {FiniteInverseSemigroup::from_table(std::move(table), std::move(labels)),
            "", "table", std::nullopt, {}};
  }

  inline LoadedSemigroup parse_semigroup_text(std::string const& text,
                                              std::size_t        budget = default_closure_budget) {
    auto out   = parse_semigroup(detail::parse_json(text), budget);
    out.digest = digest(text);
    return out;
  }

  inline LoadedSemigroup load_semigroup(std::filesystem::path const& path,
                                        std::size_t budget = default_closure_budget) {
    return parse_semigroup_text(read_file(path), budget);
  }

  //! Table form of \p S, labels included when present.
  inline nlohmann::ordered_json semigroup_to_json(FiniteInverseSemigroup const& S) {
    nlohmann::ordered_json j;
    j["format"]  = semigroup_format;
    j["version"] = format_version;
    auto rows    = nlohmann::ordered_json::array();
    for (index_type a = 0; a < S.size(); ++a) {
      auto row = nlohmann::ordered_json::array();
      for (index_type b = 0; b < S.size(); ++b) {
        row.push_back(S.mul(a, b));
      }
      rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    if (!S.labels().empty()) {
      j["labels"] = S.labels();
    }
    return j;
  }

  struct LoadedAction {
    FiniteAction action;
    //! Digest of the action file followed by that of the semigroup file
    //! when it is referenced by path.
    std::string digest;
  };

  //! \p base_dir resolves a `semigroup` field given as a relative path.
  inline LoadedAction parse_action_text(std::string const&           text,
                                        std::filesystem::path const& base_dir,
                                        std::size_t                  budget = default_closure_budget) {
    using detail::get;
    constexpr char const* what = "action file";
    auto const            j    = detail::parse_json(text);
    detail::check_header(j, action_format, what);
    if (!j.contains("semigroup")) {
      throw ParseError("action file is missing field 'semigroup'");
    }
    std::string     dig = digest(text);
    LoadedSemigroup sg  = [&] {
      auto const& ref = j.at("semigroup");
      if (ref.is_string()) {
        auto loaded = load_semigroup(base_dir / ref.get<std::string>(), budget);
        dig += "+" + loaded.digest;
        return loaded;
      }
      if (ref.is_object()) {
        return parse_semigroup(ref, budget);
      }
      throw ParseError("action file field 'semigroup' must be a path or an object");
    }();
    auto const space = get<std::size_t>(j, "space_size", what);

    std::map<index_type, std::vector<index_type>> domains;
    if (j.contains("domains")) {
      auto const& list = j.at("domains");
      if (!list.is_array()) {
        throw ParseError("action file field 'domains' must be an array");
      }
      for (auto const& item : list) {
        auto e = get<index_type>(item, "idempotent", "domain entry");
        if (domains.contains(e)) {
          throw ParseError("domain given twice for idempotent " + std::to_string(e));
        }
        domains[e] = get<std::vector<index_type>>(item, "points", "domain entry");
      }
    }
    std::vector<std::tuple<index_type, index_type, index_type>> triples;
    if (j.contains("action")) {
      for (auto const& t : get<std::vector<std::vector<index_type>>>(j, "action", what)) {
        if (t.size() != 3) {
          throw ParseError("action entries are [element, point, image] triples");
        }
        triples.emplace_back(t[0], t[1], t[2]);
      }
    }
    auto S = std::make_shared<FiniteInverseSemigroup const>(std::move(sg.semigroup));
    return {FiniteAction(std::move(S), space, domains, triples), dig};
  }

  inline LoadedAction load_action(std::filesystem::path const& path,
                                  std::size_t budget = default_closure_budget) {
    return parse_action_text(read_file(path), path.parent_path(), budget);
  }

}  // namespace invsg::io
