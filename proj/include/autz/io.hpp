#pragma once

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "autz/builtins.hpp"
#include "autz/criteria.hpp"
#include "autz/error.hpp"
#include "autz/group.hpp"

namespace autz {

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::BadParameters, std::string(what) + ": expected a non-negative integer, got '" +
                                         std::string(s) + "'");
  return v;
}

}  // namespace detail

/// Comma-separated unsigned list, e.g. "3,1,1". Empty string is an empty list.
inline std::vector<unsigned> parse_uint_list(std::string_view s, std::string_view what = "list") {
  std::vector<unsigned> out;
  if (detail::trim(s).empty()) return out;
  for (const auto& part : detail::split(s, ',')) out.push_back(unsigned(detail::parse_uint(part, what)));
  return out;
}

/// Cycle notation such as "(0 1 2)(3 4)" or "(0,1,2)(3,4)"; "()" is the
/// identity. Points are 0-based.
inline Permutation parse_cycles(std::size_t degree, std::string_view text) {
  Permutation perm = Permutation::identity(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::InvalidPermutation, "cycle notation '" + std::string(text) + "' at offset " +
                                              std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) fail("unclosed cycle");
    std::string body(text.substr(i + 1, close - i - 1));
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<std::uint32_t> cycle;
    std::string tok;
    while (in >> tok) {
      std::uint64_t v = 0;
      try {
        v = detail::parse_uint(tok, "cycle point");
      } catch (const Error&) {
        fail("bad point '" + tok + "'");
      }
      if (v >= degree) fail("point " + tok + " out of range for degree " + std::to_string(degree));
      if (used[v]++) fail("point " + tok + " appears twice");
      cycle.push_back(std::uint32_t(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) perm.images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    i = close + 1;
  }
  return perm;
}

struct BuiltinInfo {
  std::string name;
  std::string params;
  std::string description;
};

inline std::vector<BuiltinInfo> list_builtins() {
  return {
      {"cyclic", "m", "cyclic group C_m"},
      {"elementary", "p:k", "elementary abelian (C_p)^k"},
      {"abelian", "p:e1,e2,...", "abelian p-group, product of C_{p^ei}"},
      {"dihedral", "order", "dihedral group, order 2^k >= 8"},
      {"quaternion", "order", "generalized quaternion group, order 2^k >= 8"},
      {"semidihedral", "order", "semidihedral group, order 2^k >= 16"},
      {"modular", "p:order", "modular p-group M_{p^k}, order p^k >= p^3"},
      {"metacyclic", "m:k:s", "split metacyclic C_m x| C_k with x -> x^s"},
      {"abelian_by_cyclic", "p:e1,e2,...:c:m11,m12,...", "abelian base x| C_{p^c} acting by a row matrix"},
      {"extraspecial", "p:order:plus|minus", "extraspecial group of order p^(2n+1)"},
      {"heisenberg", "p:k", "unitriangular 3x3 over Z/p^k, order p^(3k)"},
      {"unitriangular4", "p", "unitriangular 4x4 over F_p, order p^6"},
      {"wreath", "p", "wreath product C_p wr C_p, order p^(p+1)"},
      {"perm", "degree:gen1:gen2:...", "closure of permutations in cycle notation"},
  };
}

namespace detail {

inline Group builtin_term(std::string_view term, std::size_t cap) {
  auto parts = split(term, ':');
  const std::string name(trim(parts[0]));
  std::vector<std::string> args(parts.begin() + 1, parts.end());
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(Errc::BadParameters, name + " takes " + std::to_string(n) + " parameter(s), got " +
                                           std::to_string(args.size()));
  };
  auto u = [&](std::size_t i) { return parse_uint(args[i], name); };
  namespace b = builtins;
  if (name == "cyclic") return want(1), b::cyclic(u(0), cap);
  if (name == "elementary") return want(2), b::elementary(u(0), unsigned(u(1)), cap);
  if (name == "abelian") return want(2), b::abelian(u(0), parse_uint_list(args[1], name), cap);
  if (name == "dihedral") return want(1), b::dihedral(u(0), cap);
  if (name == "quaternion") return want(1), b::quaternion(u(0), cap);
  if (name == "semidihedral") return want(1), b::semidihedral(u(0), cap);
  if (name == "modular") return want(2), b::modular(u(0), u(1), cap);
  if (name == "metacyclic") return want(3), b::metacyclic(u(0), u(1), u(2), cap);
  if (name == "abelian_by_cyclic") {
    want(4);
    std::vector<std::uint64_t> matrix;
    for (unsigned x : parse_uint_list(args[3], name)) matrix.push_back(x);
    return b::abelian_by_cyclic(u(0), parse_uint_list(args[1], name), unsigned(u(2)), matrix, cap);
  }
  if (name == "extraspecial") return want(3), b::extraspecial(u(0), u(1), trim(args[2]), cap);
  if (name == "heisenberg") return want(2), b::heisenberg(u(0), unsigned(u(1)), cap);
  if (name == "unitriangular4") return want(1), b::unitriangular4(u(0), cap);
  if (name == "wreath") return want(1), b::wreath(u(0), cap);
  if (name == "perm") {
    if (args.empty()) throw Error(Errc::BadParameters, "perm needs a degree");
    const std::size_t degree = u(0);
    if (degree == 0) throw Error(Errc::BadParameters, "perm degree must be positive");
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < args.size(); ++i) gens.push_back(parse_cycles(degree, args[i]));
    return group_from_permutations(degree, gens, cap);
  }
  throw Error(Errc::UnknownBuiltin, "'" + name + "'");
}

}  // namespace detail

/// A builtin spec: one or more terms NAME[:param...] joined by '*' for a
/// direct product, e.g. "dihedral:16*cyclic:2".
inline Group builtin(std::string_view spec, std::size_t cap = kDefaultOrderCap) {
  auto terms = detail::split(spec, '*');
  Group g = detail::builtin_term(terms[0], cap);
  for (std::size_t i = 1; i < terms.size(); ++i)
    g = direct_product(g, detail::builtin_term(terms[i], cap), cap);
  return g;
}

// ---------------------------------------------------------------------------
// Group files

namespace detail {

using json = nlohmann::json;

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& why) {
  throw Error(Errc::ParseError, "field '" + where + "': " + why);
}

inline std::uint64_t json_uint(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) parse_fail(where, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace detail

/// Parses the GroupFile JSON format ("perm-group" or "cayley").
inline Group parse_group(std::string_view text, std::size_t cap = kDefaultOrderCap) {
  using detail::json;
  using detail::parse_fail;
  const json doc = detail::parse_json_text(text);
  if (!doc.is_object()) parse_fail("<root>", "expected an object");
  if (!doc.contains("format") || !doc["format"].is_string()) parse_fail("format", "missing or not a string");
  const std::string format = doc["format"].get<std::string>();
  std::set<std::string> allowed{"format", "name"};
  if (format == "perm-group") {
    allowed.insert({"degree", "generators"});
  } else if (format == "cayley") {
    allowed.insert({"order", "table"});
  } else {
    parse_fail("format", "unknown format '" + format + "'");
  }
  for (const auto& [key, _] : doc.items())
    if (!allowed.count(key)) parse_fail(key, "unknown field");
  if (doc.contains("name") && !doc["name"].is_string()) parse_fail("name", "expected a string");

  if (format == "perm-group") {
    if (!doc.contains("degree")) parse_fail("degree", "missing");
    if (!doc.contains("generators") || !doc["generators"].is_array())
      parse_fail("generators", "missing or not an array");
    const std::size_t degree = detail::json_uint(doc["degree"], "degree");
    if (degree == 0) parse_fail("degree", "must be positive");
    std::vector<Permutation> gens;
    const auto& arr = doc["generators"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "generators[" + std::to_string(i) + "]";
      if (!arr[i].is_array()) parse_fail(where, "expected an array of images");
      Permutation perm;
      for (std::size_t j = 0; j < arr[i].size(); ++j)
        perm.images.push_back(std::uint32_t(
            detail::json_uint(arr[i][j], where + "[" + std::to_string(j) + "]")));
      gens.push_back(std::move(perm));
    }
    return group_from_permutations(degree, gens, cap);
  }

  if (!doc.contains("order")) parse_fail("order", "missing");
  if (!doc.contains("table") || !doc["table"].is_array()) parse_fail("table", "missing or not an array");
  const std::size_t n = detail::json_uint(doc["order"], "order");
  if (n > cap)
    throw Error(Errc::ClosureExceedsCap, "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const auto& rows = doc["table"];
  if (rows.size() != n)
    parse_fail("table", "has " + std::to_string(rows.size()) + " rows, order is " + std::to_string(n));
  std::vector<std::vector<Elem>> table(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string where = "table[" + std::to_string(r) + "]";
    if (!rows[r].is_array()) parse_fail(where, "expected an array");
    if (rows[r].size() != n)
      parse_fail(where, "has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c)
      table[r].push_back(Elem(detail::json_uint(rows[r][c], where + "[" + std::to_string(c) + "]")));
  }
  return group_from_cayley_table(table);
}

/// Cayley-format text, one table row per line.
inline std::string serialize_group(const Group& g, std::string_view name = {}) {
  std::ostringstream out;
  out << "{\n  \"format\": \"cayley\",\n";
  if (!name.empty()) out << "  \"name\": " << nlohmann::json(std::string(name)).dump() << ",\n";
  out << "  \"order\": " << g.order() << ",\n  \"table\": [\n";
  for (Elem r = 0; r < g.order(); ++r) {
    out << "    [";
    auto row = g.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "]" << (r + 1 < g.order() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Group read_group(const std::filesystem::path& path, std::size_t cap = kDefaultOrderCap) {
  const std::string text = read_text_file(path);
  try {
    return parse_group(text, cap);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

inline void write_group(const Group& g, const std::filesystem::path& path, std::string_view name = {}) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << serialize_group(g, name);
}

/// "builtin:SPEC" or a path to a group file (relative paths resolve against
/// `base_dir`).
inline Group resolve_source(std::string_view source, const std::filesystem::path& base_dir = {},
                            std::size_t cap = kDefaultOrderCap) {
  constexpr std::string_view prefix = "builtin:";
  if (source.substr(0, prefix.size()) == prefix) return builtin(source.substr(prefix.size()), cap);
  std::filesystem::path path(source);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  return read_group(path, cap);
}

// ---------------------------------------------------------------------------
// Manifests

struct ManifestEntry {
  std::string name;
  std::string source;
  std::optional<Decision> expected;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;  // for relative file sources
};

inline void check_unique_names(const Manifest& m) {
  std::set<std::string> seen;
  for (const auto& e : m.entries)
    if (!seen.insert(e.name).second) throw Error(Errc::InvalidManifest, "duplicate name '" + e.name + "'");
}

/// {"entries": [{"name": ..., "source": ..., "expected": "Minimal"}, ...]}
inline Manifest parse_manifest(std::string_view text) {
  using detail::json;
  const json doc = detail::parse_json_text(text);
  auto fail = [](const std::string& why) { throw Error(Errc::InvalidManifest, why); };
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    fail("expected an object with an 'entries' array");
  for (const auto& [key, _] : doc.items())
    if (key != "entries") fail("unknown field '" + key + "'");
  Manifest m;
  const auto& arr = doc["entries"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const auto& e = arr[i];
    if (!e.is_object()) fail(where + ": expected an object");
    for (const auto& [key, _] : e.items())
      if (key != "name" && key != "source" && key != "expected") fail(where + ": unknown field '" + key + "'");
    if (!e.contains("name") || !e["name"].is_string()) fail(where + ": missing name");
    if (!e.contains("source") || !e["source"].is_string()) fail(where + ": missing source");
    ManifestEntry entry{e["name"].get<std::string>(), e["source"].get<std::string>(), std::nullopt};
    if (e.contains("expected") && !e["expected"].is_null()) {
      if (!e["expected"].is_string()) fail(where + ": expected must be a string");
      entry.expected = parse_decision(e["expected"].get<std::string>());
      if (!entry.expected) fail(where + ": unknown decision '" + e["expected"].get<std::string>() + "'");
    }
    m.entries.push_back(std::move(entry));
  }
  check_unique_names(m);
  return m;
}

inline Manifest read_manifest(const std::filesystem::path& path) {
  Manifest m = parse_manifest(read_text_file(path));
  m.base_dir = path.parent_path();
  return m;
}

inline std::string serialize_manifest(const Manifest& m) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : m.entries) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["source"] = e.source;
    if (e.expected) j["expected"] = std::string(decision_name(*e.expected));
    arr.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["entries"] = std::move(arr);
  return doc.dump(2) + "\n";
}

}  // namespace autz
