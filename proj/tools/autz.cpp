// autz: decide whether Aut_z(G) = Z(Inn(G)) for finite p-groups.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "autz/corpus.hpp"
#include "autz/harness.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::size_t default_order_cap() {
  if (const char* env = std::getenv("AUTZ_ORDER_CAP")) {
    try {
      return std::size_t(autz::detail::parse_uint(env, "AUTZ_ORDER_CAP"));
    } catch (const autz::Error& e) {
      std::cerr << "autz: ignoring AUTZ_ORDER_CAP: " << e.what() << "\n";
    }
  }
  return autz::kDefaultOrderCap;
}

autz::AbelianInvariants invariants_arg(std::uint32_t p, const std::string& list) {
  std::vector<unsigned> exps;
  if (!autz::detail::trim(list).empty()) exps = autz::parse_uint_list(list);
  return autz::make_invariants(p, exps);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw autz::Error(autz::Errc::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central automorphisms of finite p-groups: structural criteria checked against brute force"};
  app.require_subcommand(1);

  autz::VerifyOptions opts;
  opts.order_cap = default_order_cap();
  app.add_option("--cap", opts.order_cap, "Group order cap (env AUTZ_ORDER_CAP)")->capture_default_str();
  app.add_option("--enum-cap", opts.enumeration_cap, "Cap on candidate homomorphisms")->capture_default_str();

  const std::map<std::string, autz::ReportFormat> formats{
      {"json", autz::ReportFormat::Json}, {"csv", autz::ReportFormat::Csv}, {"table", autz::ReportFormat::Table}};
  autz::ReportFormat format = autz::ReportFormat::Json;
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "Analyze one group (builtin:SPEC or a group file)");
  std::string source;
  analyze->add_option("source", source, "builtin:NAME[:params] or path")->required();
  analyze->add_option("--format", format, "json|csv|table")->transform(CLI::CheckedTransformer(formats));
  analyze->add_flag("--timing", opts.timing, "Include timings");

  auto* verify = app.add_subcommand("verify", "Run the verification harness over a manifest");
  std::string manifest_path;
  verify->add_option("--manifest", manifest_path, "Manifest JSON (default: built-in corpus)");
  verify->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json|csv|table")->transform(CLI::CheckedTransformer(formats));
  verify->add_option("-o,--output", out_path, "Write the report here instead of stdout");
  verify->add_flag("--timing", opts.timing, "Include timings (makes reports run-dependent)");
  // Global options are also accepted after the subcommand.
  verify->add_option("--cap", opts.order_cap, "Group order cap");
  verify->add_option("--enum-cap", opts.enumeration_cap, "Cap on candidate homomorphisms");
  analyze->add_option("--cap", opts.order_cap, "Group order cap");
  analyze->add_option("--enum-cap", opts.enumeration_cap, "Cap on candidate homomorphisms");

  auto* hom = app.add_subcommand("hom", "Invariants of Hom(A, B) for abelian p-groups");
  std::uint32_t hp = 0;
  std::string ha, hb;
  hom->add_option("--p", hp, "Prime")->required();
  hom->add_option("--a", ha, "Exponents of A, comma separated")->required();
  hom->add_option("--b", hb, "Exponents of B, comma separated")->required();

  auto* pred = app.add_subcommand("predicate", "Cyclic-center criterion on invariant data");
  std::uint32_t pp = 0;
  std::string alpha, beta;
  unsigned gamma = 0;
  pred->add_option("--p", pp, "Prime")->required();
  pred->add_option("--alpha", alpha, "Exponents of G/G'")->required();
  pred->add_option("--beta", beta, "Exponents of Z2(G)/Z(G)")->required();
  pred->add_option("--gamma", gamma, "Z(G) = C_{p^gamma}")->required();

  auto* build = app.add_subcommand("build", "Write a builtin group as a cayley group file");
  std::string spec;
  build->add_option("spec", spec, "NAME[:params], e.g. quaternion:8")->required();
  build->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* list = app.add_subcommand("list-builtins", "List builtin families");

  auto* corpus = app.add_subcommand("corpus", "Print the built-in corpus as a manifest");
  corpus->add_option("-o,--output", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      autz::Manifest m;
      m.entries.push_back({source, source, std::nullopt});
      const auto rep = autz::run_verification(m, opts);
      const auto& rec = rep.records.front();
      if (format == autz::ReportFormat::Json)
        std::cout << autz::record_json(rec, opts.timing).dump(2) << "\n";
      else
        std::cout << autz::format_report(rep, format, opts.timing);
      if (rec.status == autz::RecordStatus::Error) {
        std::cerr << "autz: " << rec.message << "\n";
        return kExitUsage;
      }
      return rep.clean() ? kExitClean : kExitMismatch;
    }
    if (*verify) {
      const autz::Manifest m = manifest_path.empty() ? autz::default_corpus() : autz::read_manifest(manifest_path);
      const auto rep = autz::run_verification(m, opts);
      write_output(autz::format_report(rep, format, opts.timing), out_path);
      return rep.clean() ? kExitClean : kExitMismatch;
    }
    if (*hom) {
      const auto h = autz::hom_invariants(invariants_arg(hp, ha), invariants_arg(hp, hb));
      nlohmann::ordered_json j;
      j["p"] = h.p;
      j["exponents"] = h.exponents;
      j["logOrder"] = h.log_order();
      std::cout << j.dump() << "\n";
      return kExitClean;
    }
    if (*pred) {
      const bool holds = autz::cyclic_center_predicate(invariants_arg(pp, alpha), invariants_arg(pp, beta), gamma);
      nlohmann::ordered_json j;
      j["holds"] = holds;
      std::cout << j.dump() << "\n";
      return kExitClean;
    }
    if (*build) {
      const autz::Group g = autz::builtin(spec, opts.order_cap);
      write_output(autz::serialize_group(g, spec), out_path);
      return kExitClean;
    }
    if (*list) {
      for (const auto& b : autz::list_builtins())
        std::cout << b.name << (b.params.empty() ? "" : ":" + b.params) << "\t" << b.description << "\n";
      return kExitClean;
    }
    if (*corpus) {
      write_output(autz::serialize_manifest(autz::default_corpus()), out_path);
      return kExitClean;
    }
  } catch (const autz::Error& e) {
    std::cerr << "autz: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "autz: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
