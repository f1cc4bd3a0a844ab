// fixlab command-line driver. Links only the C interface.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixlab/fixlab.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int report_error(fixlab_status status) {
  std::cerr << "fixlab: " << fixlab_status_name(status) << " error: " << fixlab_last_error() << "\n";
  // Bad input of any kind is a usage error; caps and internal errors count as failures.
  return (status == FIXLAB_CAP || status == FIXLAB_INTERNAL) ? kExitFail : kExitUsage;
}

// Prints or saves a report and returns the exit code.
int finish_report(fixlab_report* report, const std::string& path, bool timing) {
  std::fprintf(stderr, "wall time: %.2f s\n", fixlab_report_wall_seconds(report));
  fixlab_status status;
  if (path.empty()) {
    char* text = nullptr;
    status = fixlab_report_to_json(report, timing ? 1 : 0, &text);
    if (status == FIXLAB_OK) {
      std::fputs(text, stdout);
      fixlab_string_free(text);
    }
  } else {
    status = fixlab_report_save(report, path.c_str(), timing ? 1 : 0);
  }
  const int passed = fixlab_report_passed(report);
  const auto failures = fixlab_report_failure_count(report);
  fixlab_report_free(report);
  if (status != FIXLAB_OK) return report_error(status);
  std::fprintf(stderr, "%s (%zu failures)\n", passed ? "PASS" : "FAIL", failures);
  return passed ? kExitPass : kExitFail;
}

// Loads an instance and prints the JSON produced by `query`.
template <typename Query>
int instance_query(const std::string& path, Query query) {
  fixlab_instance* inst = nullptr;
  auto status = fixlab_instance_load(path.c_str(), &inst);
  if (status != FIXLAB_OK) return report_error(status);
  char* text = nullptr;
  int code = kExitPass;
  status = query(inst, &text, code);
  fixlab_instance_free(inst);
  if (status != FIXLAB_OK) return report_error(status);
  std::fputs(text, stdout);
  fixlab_string_free(text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixlab: fixed points and complements in small semidirect products"};
  app.require_subcommand(1);

  std::string claim, report_path, instance_path, out_dir;
  std::size_t max_order = 0, jobs = 0;
  std::uint64_t seed = 1;
  bool timing = false, abelian = false, nilpotent = false;

  std::string claim_list;
  for (std::size_t i = 0; i < fixlab_claim_count(); ++i) claim_list += std::string(i ? ", " : "") + fixlab_claim_id(i);

  auto* verify = app.add_subcommand("verify", "Run a claim verification campaign over the corpus");
  verify->add_option("claim", claim, "Claim id: " + claim_list)->required();
  verify->add_option("--max-order", max_order, "Largest |G| in the corpus (0 = claim default)");
  verify->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
  verify->add_option("--seed", seed, "Corpus sampling seed");
  verify->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  verify->add_flag("--timing", timing, "Include wall time in the report");

  auto* h1 = app.add_subcommand("h1", "Print Z1 and H1(J, N) for an instance");
  h1->add_option("--instance", instance_path, "Instance file")->required();

  auto* complements = app.add_subcommand("complements", "List the complements of N in an instance");
  complements->add_option("--instance", instance_path, "Instance file")->required();

  auto* fixpoint = app.add_subcommand("fixpoint", "Find a J-fixed point of the instance's attached action");
  fixpoint->add_option("--instance", instance_path, "Instance file with an omega action")->required();
  auto* ab = fixpoint->add_flag("--abelian", abelian, "Use the abelian-N finder");
  auto* nil = fixpoint->add_flag("--nilpotent", nilpotent, "Use the nilpotent-N finder");
  ab->excludes(nil);

  auto* search = app.add_subcommand("search", "Counterexample searches");
  search->require_subcommand(1);
  auto* ls = search->add_subcommand("ls", "Search for locally conjugate, non-conjugate complements");
  ls->add_option("--max-order", max_order, "Largest |G| in the corpus")->required();
  ls->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
  ls->add_option("--seed", seed, "Corpus sampling seed");
  ls->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  ls->add_flag("--timing", timing, "Include wall time in the report");

  auto* corpus = app.add_subcommand("corpus", "Write the corpus as instance files");
  corpus->add_option("--max-order", max_order, "Largest |G| in the corpus")->required();
  corpus->add_option("--out", out_dir, "Output directory")->required();
  corpus->add_option("--seed", seed, "Corpus sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  fixlab_verify_options options;
  fixlab_verify_options_init(&options);
  options.max_order = max_order;
  options.jobs = jobs;
  options.seed = seed;

  if (verify->parsed()) {
    fixlab_report* report = nullptr;
    const auto status = fixlab_verify(claim.c_str(), &options, &report);
    if (status != FIXLAB_OK) return report_error(status);
    return finish_report(report, report_path, timing);
  }
  if (ls->parsed()) {
    fixlab_report* report = nullptr;
    const auto status = fixlab_search_ls(&options, &report);
    if (status != FIXLAB_OK) return report_error(status);
    const auto finds = fixlab_report_find_count(report);
    std::fprintf(stderr, finds ? "%zu candidate pairs found\n" : "none found within bounds\n", finds);
    return finish_report(report, report_path, timing);
  }
  if (h1->parsed()) {
    return instance_query(instance_path, [](fixlab_instance* inst, char** text, int&) {
      return fixlab_h1_json(inst, text);
    });
  }
  if (complements->parsed()) {
    return instance_query(instance_path, [](fixlab_instance* inst, char** text, int&) {
      return fixlab_complements_json(inst, text);
    });
  }
  if (fixpoint->parsed()) {
    const auto mode = abelian ? FIXLAB_FINDER_ABELIAN : nilpotent ? FIXLAB_FINDER_NILPOTENT : FIXLAB_FINDER_AUTO;
    return instance_query(instance_path, [mode](fixlab_instance* inst, char** text, int& code) {
      int found = 0;
      const auto status = fixlab_fixpoint_json(inst, mode, text, &found);
      // a theorem violation is a failure; unmet hypotheses are a valid answer
      if (status == FIXLAB_OK && nlohmann::json::parse(*text).at("outcome") == "theorem-violation") code = kExitFail;
      return status;
    });
  }
  if (corpus->parsed()) {
    std::size_t written = 0;
    const auto status = fixlab_corpus_write(max_order, seed, out_dir.c_str(), &written);
    if (status != FIXLAB_OK) return report_error(status);
    std::fprintf(stderr, "wrote %zu instances to %s\n", written, out_dir.c_str());
    return kExitPass;
  }
  return kExitUsage;
}
