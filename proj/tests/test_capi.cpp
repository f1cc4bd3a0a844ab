#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fixlab/fixlab.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  fixlab_string_free(s);
  return out;
}

fs::path corpus_dir() {
  static const fs::path dir = [] {
    const auto d = fs::temp_directory_path() / "fixlab_capi_corpus";
    fs::remove_all(d);
    size_t written = 0;
    REQUIRE(fixlab_corpus_write(6, 1, d.string().c_str(), &written) == FIXLAB_OK);
    REQUIRE(written > 0);
    return d;
  }();
  return dir;
}

// The C3 x| C2 instance with the inversion action.
std::string s3_path() {
  for (const auto& e : fs::directory_iterator(corpus_dir())) {
    if (e.path().filename() == "index.json") continue;
    std::ifstream in(e.path());
    const auto j = json::parse(in);
    if (j["name"].get<std::string>().rfind("C3 x| C2", 0) == 0) {
      fixlab_instance* inst = nullptr;
      REQUIRE(fixlab_instance_load(e.path().string().c_str(), &inst) == FIXLAB_OK);
      char* out = nullptr;
      REQUIRE(fixlab_h1_json(inst, &out) == FIXLAB_OK);
      const auto h = json::parse(take(out));
      fixlab_instance_free(inst);
      if (h["z1"] == 3) return e.path().string();
    }
  }
  FAIL("no S3 instance in the corpus");
  return {};
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("claim registry and status names") {
    CHECK(fixlab_claim_count() == 14);
    CHECK(std::string(fixlab_claim_id(0)).size() > 0);
    CHECK(fixlab_claim_id(1000) == nullptr);
    CHECK(std::string(fixlab_status_name(FIXLAB_PARSE)) == "parse");
  }

  TEST_CASE("verify through the C API") {
    fixlab_verify_options opts;
    fixlab_verify_options_init(&opts);
    opts.max_order = 12;
    opts.jobs = 2;
    fixlab_report* report = nullptr;
    CHECK(fixlab_verify("no-such-claim", &opts, &report) == FIXLAB_USAGE);
    CHECK(report == nullptr);
    CHECK(std::string(fixlab_last_error()).find("no-such-claim") != std::string::npos);
    REQUIRE(fixlab_verify("eq-1", &opts, &report) == FIXLAB_OK);
    CHECK(fixlab_report_passed(report));
    CHECK(fixlab_report_failure_count(report) == 0);
    char* text = nullptr;
    REQUIRE(fixlab_report_to_json(report, 0, &text) == FIXLAB_OK);
    const auto j = json::parse(take(text));
    CHECK(j["claim"] == "eq-1");
    CHECK_FALSE(j.contains("wall_seconds"));
    const auto path = (fs::temp_directory_path() / "fixlab_capi_report.json").string();
    CHECK(fixlab_report_save(report, path.c_str(), 1) == FIXLAB_OK);
    CHECK(fixlab_report_save(report, "/nonexistent/dir/r.json", 0) == FIXLAB_IO);
    fixlab_report_free(report);

    REQUIRE(fixlab_search_ls(&opts, &report) == FIXLAB_OK);
    CHECK(fixlab_report_find_count(report) == 0);
    fixlab_report_free(report);
  }

  TEST_CASE("instances and queries") {
    fixlab_instance* inst = nullptr;
    CHECK(fixlab_instance_parse("{", &inst) == FIXLAB_PARSE);
    CHECK(fixlab_instance_load("/nonexistent/x.json", &inst) == FIXLAB_IO);
    CHECK(inst == nullptr);

    REQUIRE(fixlab_instance_load(s3_path().c_str(), &inst) == FIXLAB_OK);
    char* out = nullptr;
    REQUIRE(fixlab_instance_to_json(inst, &out) == FIXLAB_OK);
    const auto text = take(out);
    fixlab_instance* again = nullptr;
    REQUIRE(fixlab_instance_parse(text.c_str(), &again) == FIXLAB_OK);
    CHECK(std::string(fixlab_instance_id(again)) == fixlab_instance_id(inst));
    fixlab_instance_free(again);

    REQUIRE(fixlab_h1_json(inst, &out) == FIXLAB_OK);
    const auto h = json::parse(take(out));
    CHECK(h["z1"] == 3);
    CHECK(h["h1"] == 1);
    CHECK(h["complements_from_search"] == 3);

    REQUIRE(fixlab_complements_json(inst, &out) == FIXLAB_OK);
    CHECK(json::parse(take(out)).is_object());

    int found = -1;
    CHECK(fixlab_fixpoint_json(inst, FIXLAB_FINDER_AUTO, &out, &found) == FIXLAB_PRECONDITION);
    fixlab_instance_free(inst);
  }
}
