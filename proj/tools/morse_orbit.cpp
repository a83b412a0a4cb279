// morse-orbit: build and verify the Morse matching on N(C)/G.
//
//   morse-orbit analyze --group Sym(4) --prime 2 [--collection all|above:<gens>|classes:<gens>]
//                       [--fusion] [--json] [--out FILE] [--timings]
//   morse-orbit verify ...            exit status only
//   morse-orbit homology ...          homology table only
//   morse-orbit export-digraph --format dot --out FILE ...
//   morse-orbit fusion-compare --group G --prime p [--collection ...]
//
// Exit status: 0 when every verdict passes, 1 when one fails, 2 on bad input.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "morse_orbit/analysis.hpp"

namespace {

using namespace morse_orbit;

struct CommonFlags {
  AnalysisOptions options;
  bool json = false;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--group", flags.options.group_spec, "Group spec, e.g. Sym(4), Dih(8), gens:[(0 1);(1 2)]")
      ->required();
  cmd->add_option("--prime", flags.options.prime, "Prime p dividing the group order")->required();
  cmd->add_option("--collection", flags.options.collection_spec, "all | above:<gens>[|<gens>] | classes:<gens>")
      ->capture_default_str();
  cmd->add_option("--threads", flags.options.threads, "Worker threads (0 = all available)")
      ->envname("MORSE_ORBIT_THREADS")
      ->capture_default_str();
  cmd->add_option("--max-order", flags.options.max_order, "Largest group order accepted")->capture_default_str();
  cmd->add_option("--out", flags.out, "Write output to this file instead of stdout");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
}

int status(const AnalysisReport& report) { return report.all_pass() ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Morse matching on orbit spaces of p-subgroup complexes"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, verify_flags, homology_flags, export_flags, fusion_flags;
  bool with_fusion = false;
  bool timings = false;
  std::string format = "dot";

  auto* analyze = app.add_subcommand("analyze", "Full analysis with report");
  add_common(analyze, analyze_flags);
  analyze->add_flag("--json", analyze_flags.json, "Emit the JSON report");
  analyze->add_flag("--fusion", with_fusion, "Also compare N(C)/F with N(C^)/G");
  analyze->add_flag("--timings", timings, "Include wall-clock timings in the report");

  auto* verify = app.add_subcommand("verify", "Run every check; report through the exit status only");
  add_common(verify, verify_flags);
  verify->add_flag("--fusion", with_fusion, "Also run the fusion comparison");

  auto* homology = app.add_subcommand("homology", "Reduced integral homology of N(C)/G");
  add_common(homology, homology_flags);
  homology->add_flag("--json", homology_flags.json, "Emit JSON");

  auto* export_digraph = app.add_subcommand("export-digraph", "Write the matching digraph");
  add_common(export_digraph, export_flags);
  export_digraph->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot"}))->capture_default_str();

  auto* fusion_compare = app.add_subcommand("fusion-compare", "Compare N(C)/F with N(C^)/G");
  add_common(fusion_compare, fusion_flags);
  fusion_compare->add_flag("--json", fusion_flags.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      auto options = analyze_flags.options;
      options.fusion = with_fusion;
      options.timings = timings;
      auto result = run_analysis(options);
      emit(analyze_flags.json ? result.report.to_json() + "\n" : result.report.to_table(), analyze_flags.out);
      return status(result.report);
    }
    if (verify->parsed()) {
      auto options = verify_flags.options;
      options.fusion = with_fusion;
      return status(run_analysis(options).report);
    }
    if (homology->parsed()) {
      auto result = run_analysis(homology_flags.options);
      emit(homology_flags.json ? result.report.homology_json() + "\n" : result.report.homology_table(),
           homology_flags.out);
      return result.report.homology_trivial == Verdict::Pass ? 0 : 1;
    }
    if (export_digraph->parsed()) {
      auto result = run_analysis(export_flags.options);
      if (!result.digraph) {
        std::cerr << "error: matching could not be built; no digraph to export\n";
        return 1;
      }
      emit(to_dot(*result.digraph), export_flags.out);
      return status(result.report);
    }
    if (fusion_compare->parsed()) {
      auto report = run_fusion_comparison(fusion_flags.options);
      emit(fusion_flags.json ? report.to_json() + "\n" : report.to_table(), fusion_flags.out);
      return status(report);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
