#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "autz/centaut.hpp"
#include "autz/criteria.hpp"
#include "autz/io.hpp"
#include "autz/structure.hpp"

namespace autz {

struct VerifyOptions {
  std::size_t order_cap = kDefaultOrderCap;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  unsigned jobs = 1;
  bool timing = false;  // timings make reports run-dependent
};

enum class RecordStatus { Ok, Skipped, Error };

inline std::string_view status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::Ok: return "ok";
    case RecordStatus::Skipped: return "skipped";
    case RecordStatus::Error: return "error";
  }
  return "?";
}

struct AnalysisRecord {
  std::string name;
  std::string source;
  std::optional<Decision> expected;
  RecordStatus status = RecordStatus::Ok;
  std::string message;  // reason for skip or error

  std::size_t order = 0;
  std::uint32_t p = 0;
  std::optional<StructureReport> structure;
  std::optional<CentralAutReport> central;  // empty when the enumeration was skipped
  std::optional<NecessaryConditions> necessary;
  std::optional<Verdict> verdict;
  std::optional<bool> agreement;  // verdict vs brute force, when both are decided
  bool expectation_met = true;
  double seconds = 0.0;
};

struct Summary {
  std::size_t minimal = 0;
  std::size_t not_minimal = 0;
  std::size_t undecided = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::size_t expectation_failures = 0;
  std::size_t incoherent = 0;  // rules disagreeing among themselves
};

struct VerificationReport {
  std::vector<AnalysisRecord> records;
  Summary summary;

  bool clean() const { return summary.mismatches == 0 && summary.expectation_failures == 0; }
};

inline AnalysisRecord analyze_entry(const ManifestEntry& entry, const std::filesystem::path& base_dir,
                                    const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisRecord rec;
  rec.name = entry.name;
  rec.source = entry.source;
  rec.expected = entry.expected;
  try {
    const Group g = resolve_source(entry.source, base_dir, opts.order_cap);
    rec.order = g.order();
    rec.p = g.prime().value_or(0);
    const StructureReport report = structure_report(g);
    rec.structure = report;
    try {
      rec.central = central_automorphism_count(g, opts.enumeration_cap);
    } catch (const Error& e) {
      if (e.code() != Errc::EnumerationCapExceeded) throw;
      rec.status = RecordStatus::Skipped;
      rec.message = e.what();
    }
    if (report.nilpotency_class >= 2) {
      rec.necessary = necessary_conditions_report(report);
      rec.verdict = classify_report(report);
      if (rec.central && rec.verdict->decision != Decision::Undecided) {
        rec.agreement = (rec.verdict->decision == Decision::Minimal) == rec.central->minimal;
        rec.verdict->brute_force_agrees = rec.agreement;
      }
    }
  } catch (const Error& e) {
    rec.status = e.code() == Errc::ClosureExceedsCap ? RecordStatus::Skipped : RecordStatus::Error;
    rec.message = e.what();
  }
  if (rec.expected)
    rec.expectation_met = rec.verdict && rec.verdict->decision == *rec.expected;
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

/// Analyzes every manifest entry, on up to `jobs` threads. Records come back
/// in manifest order whatever the thread count.
inline VerificationReport run_verification(const Manifest& manifest, const VerifyOptions& opts = {}) {
  VerificationReport out;
  out.records.resize(manifest.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < manifest.entries.size(); i = next++)
      out.records[i] = analyze_entry(manifest.entries[i], manifest.base_dir, opts);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, unsigned(manifest.entries.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Summary& s = out.summary;
  for (const auto& r : out.records) {
    if (r.status == RecordStatus::Skipped) ++s.skipped;
    if (r.status == RecordStatus::Error) ++s.errors;
    if (r.verdict) {
      switch (r.verdict->decision) {
        case Decision::Minimal: ++s.minimal; break;
        case Decision::NotMinimal: ++s.not_minimal; break;
        case Decision::Undecided: ++s.undecided; break;
      }
      if (!r.verdict->coherent()) ++s.incoherent;
    }
    if (r.agreement && !*r.agreement) ++s.mismatches;
    if (!r.expectation_met) ++s.expectation_failures;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Output

enum class ReportFormat { Json, Csv, Table };

namespace detail {

inline nlohmann::ordered_json exps_json(const AbelianInvariants& a) {
  return nlohmann::ordered_json(a.exponents);
}

inline std::string exps_text(const AbelianInvariants& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    out += (i ? "," : "") + std::to_string(a.exponents[i]);
  return out + "]";
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string seconds_text(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(4) << s;
  return o.str();
}

}  // namespace detail

inline nlohmann::ordered_json structure_json(const StructureReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["class"] = r.nilpotency_class;
  j["coclass"] = r.coclass;
  j["d"] = r.d;
  j["dZ"] = r.d_center;
  j["dZ2modZ"] = r.d_z2_mod_z;
  j["gamma"] = detail::exps_json(r.center);
  j["beta"] = detail::exps_json(r.z2_mod_center);
  j["alpha"] = detail::exps_json(r.abelianization);
  j["centerInDerived"] = r.center_in_derived;
  j["derivedEqualsCenter"] = r.derived_equals_center;
  j["z2Abelian"] = r.z2_abelian;
  j["upperSeries"] = r.upper_orders;
  j["lowerSeries"] = r.lower_orders;
  return j;
}

inline nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["decision"] = decision_name(v.decision);
  j["rule"] = rule_name(v.rule);
  j["details"] = v.details;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : v.cross_checks) {
    nlohmann::ordered_json cj;
    cj["rule"] = rule_name(c.rule);
    cj["decision"] = decision_name(c.decision);
    cj["details"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["crossChecks"] = std::move(checks);
  j["coherent"] = v.coherent();
  return j;
}

inline nlohmann::ordered_json central_json(const CentralAutReport& c) {
  nlohmann::ordered_json j;
  j["homCandidates"] = c.hom_candidates;
  j["autCount"] = c.aut_count;
  j["zInnOrder"] = c.z_inn_order;
  j["minimal"] = c.minimal;
  return j;
}

inline nlohmann::ordered_json record_json(const AnalysisRecord& r, bool timing) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["source"] = r.source;
  j["status"] = status_name(r.status);
  if (!r.message.empty()) j["message"] = r.message;
  j["order"] = r.order;
  j["p"] = r.p;
  if (r.structure) j["structure"] = structure_json(*r.structure);
  j["centralAutomorphisms"] = r.central ? central_json(*r.central) : nlohmann::ordered_json("skipped");
  if (r.necessary) {
    nlohmann::ordered_json n;
    n["centerInDerived"] = r.necessary->center_in_derived;
    n["zInnNoncyclic"] = r.necessary->z_inn_noncyclic;
    n["rankIdentity"] = r.necessary->rank_identity;
    j["necessaryConditions"] = std::move(n);
  }
  if (r.verdict) j["verdict"] = verdict_json(*r.verdict);
  j["agreement"] = r.agreement ? nlohmann::ordered_json(*r.agreement) : nlohmann::ordered_json();
  j["expected"] = r.expected ? nlohmann::ordered_json(decision_name(*r.expected)) : nlohmann::ordered_json();
  j["expectationMet"] = r.expectation_met;
  if (timing) j["seconds"] = detail::seconds_text(r.seconds);
  return j;
}

inline nlohmann::ordered_json summary_json(const Summary& s) {
  nlohmann::ordered_json j;
  j["minimal"] = s.minimal;
  j["notMinimal"] = s.not_minimal;
  j["undecided"] = s.undecided;
  j["mismatches"] = s.mismatches;
  j["skipped"] = s.skipped;
  j["errors"] = s.errors;
  j["expectationFailures"] = s.expectation_failures;
  j["incoherent"] = s.incoherent;
  return j;
}

inline std::string format_report(const VerificationReport& rep, ReportFormat fmt, bool timing = false) {
  if (fmt == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    auto recs = nlohmann::ordered_json::array();
    for (const auto& r : rep.records) recs.push_back(record_json(r, timing));
    doc["records"] = std::move(recs);
    doc["summary"] = summary_json(rep.summary);
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (fmt == ReportFormat::Csv) {
    out << "name,status,order,p,n,class,coclass,d,dZ,dZ2modZ,gamma,beta,alpha,homCandidates,autCount,"
           "zInnOrder,bruteMinimal,decision,rule,coherent,agreement,expected,expectationMet";
    if (timing) out << ",seconds";
    out << "\n";
    for (const auto& r : rep.records) {
      out << detail::csv_quote(r.name) << "," << status_name(r.status) << "," << r.order << "," << r.p << ",";
      if (r.structure) {
        const auto& s = *r.structure;
        out << s.n << "," << s.nilpotency_class << "," << s.coclass << "," << s.d << "," << s.d_center << ","
            << s.d_z2_mod_z << ",\"" << detail::exps_text(s.center) << "\",\""
            << detail::exps_text(s.z2_mod_center) << "\",\"" << detail::exps_text(s.abelianization) << "\",";
      } else {
        out << ",,,,,,,,,";
      }
      if (r.central)
        out << r.central->hom_candidates << "," << r.central->aut_count << "," << r.central->z_inn_order << ","
            << (r.central->minimal ? "true" : "false") << ",";
      else
        out << ",,,,";
      if (r.verdict)
        out << decision_name(r.verdict->decision) << "," << rule_name(r.verdict->rule) << ","
            << (r.verdict->coherent() ? "true" : "false") << ",";
      else
        out << ",,,";
      out << (r.agreement ? (*r.agreement ? "true" : "false") : "") << ","
          << (r.expected ? decision_name(*r.expected) : "") << "," << (r.expectation_met ? "true" : "false");
      if (timing) out << "," << detail::seconds_text(r.seconds);
      out << "\n";
    }
    return out.str();
  }
  int name_width = 14;
  for (const auto& r : rep.records) name_width = std::max(name_width, int(r.name.size()) + 1);
  out << std::left << std::setw(name_width) << "name" << std::right << std::setw(6) << "order" << std::setw(6)
      << "class" << std::setw(8) << "coclass" << "  " << std::left << std::setw(10) << "Z" << std::setw(14)
      << "Z2/Z" << std::setw(14) << "G/G'" << std::right << std::setw(8) << "|Autz|" << std::setw(8)
      << "|ZInn|" << "  " << std::left << std::setw(11) << "decision" << std::setw(13) << "rule" << "agree";
  if (timing) out << "  seconds";
  out << "\n";
  for (const auto& r : rep.records) {
    out << std::left << std::setw(name_width) << r.name << std::right << std::setw(6) << r.order;
    if (r.structure) {
      const auto& s = *r.structure;
      out << std::setw(6) << s.nilpotency_class << std::setw(8) << s.coclass << "  " << std::left << std::setw(10)
          << detail::exps_text(s.center) << std::setw(14) << detail::exps_text(s.z2_mod_center) << std::setw(14)
          << detail::exps_text(s.abelianization) << std::right;
    } else {
      out << std::setw(6) << "-" << std::setw(8) << "-" << "  " << std::left << std::setw(10) << "-"
          << std::setw(14) << "-" << std::setw(14) << "-" << std::right;
    }
    if (r.central)
      out << std::setw(8) << r.central->aut_count << std::setw(8) << r.central->z_inn_order;
    else
      out << std::setw(8) << "skip" << std::setw(8) << "skip";
    out << "  " << std::left << std::setw(11)
        << (r.verdict ? std::string(decision_name(r.verdict->decision)) : std::string(status_name(r.status)))
        << std::setw(13) << (r.verdict ? std::string(rule_name(r.verdict->rule)) : "-")
        << (r.agreement ? (*r.agreement ? "yes" : "NO") : "-") << std::right;
    if (!r.expectation_met) out << "  (expected " << (r.expected ? decision_name(*r.expected) : "") << ")";
    if (timing) out << "  " << detail::seconds_text(r.seconds);
    out << "\n";
  }
  const auto& s = rep.summary;
  out << "\nminimal " << s.minimal << ", not minimal " << s.not_minimal << ", undecided " << s.undecided
      << ", mismatches " << s.mismatches << ", skipped " << s.skipped << ", errors " << s.errors
      << ", expectation failures " << s.expectation_failures << ", incoherent " << s.incoherent << "\n";
  return out.str();
}

}  // namespace autz
