#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "fixlab/actions.hpp"
#include "fixlab/claims.hpp"
#include "fixlab/complements.hpp"
#include "fixlab/corpus.hpp"
#include "fixlab/errors.hpp"
#include "fixlab/instance_io.hpp"
#include "helpers.hpp"

using namespace fixlab;
using nlohmann::json;

namespace {

Instance s3_instance(bool with_omega) {
  auto c3 = cyclic_group(3);
  const auto g = c3.generators().front();
  const auto action = ActionHom::from_generator_images(cyclic_group(2), c3, {{g.inverse()}});
  std::optional<OmegaSpec> omega;
  if (with_omega) {
    const SemidirectProduct sdp(action);
    const auto k = enumerate_complements(sdp)[1];
    const auto ga = coset_action(sdp.whole(), k);
    omega = OmegaSpec{ga.points(), ga.generator_rows()};
  }
  return make_instance("S3", action, omega);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fixlab_test_" + name);
}

}  // namespace

TEST_SUITE("instance-io") {
  TEST_CASE("round trip is byte-identical") {
    for (bool omega : {false, true}) {
      const auto inst = s3_instance(omega);
      const auto text = instance_to_string(inst);
      const auto back = instance_from_string(text);
      CHECK(back.id == inst.id);
      CHECK(instance_to_string(back) == text);
      const auto path = temp_path("roundtrip.json").string();
      save_instance(back, path);
      CHECK(instance_to_string(load_instance(path)) == text);
    }
    CHECK(s3_instance(false).id != s3_instance(true).id);
    CHECK(s3_instance(true).id == s3_instance(true).id);
  }

  TEST_CASE("labels are recomputed") {
    const auto inst = s3_instance(false);
    CHECK(inst.labels.n_abelian);
    CHECK(inst.labels.g_supersoluble);
    CHECK(inst.labels.coprime);
    auto j = instance_to_json(inst);
    j["labels"]["coprime"] = false;
    CHECK_THROWS_WITH_AS(instance_from_json(j), doctest::Contains("labels.coprime"), ParseError);
  }

  TEST_CASE("strict schema") {
    const auto base = instance_to_json(s3_instance(false));
    auto missing = base;
    missing.erase("action");
    CHECK_THROWS_WITH_AS(instance_from_json(missing), doctest::Contains("action"), ParseError);
    auto unknown_label = base;
    unknown_label["labels"]["p_group"] = true;
    CHECK_THROWS_WITH_AS(instance_from_json(unknown_label), doctest::Contains("p_group"), ParseError);
    auto unknown_key = base;
    unknown_key["comment"] = "x";
    CHECK_THROWS_AS(instance_from_json(unknown_key), ParseError);
    auto bad_id = base;
    bad_id["id"] = "0000000000000000";
    CHECK_THROWS_WITH_AS(instance_from_json(bad_id), doctest::Contains("id"), ParseError);
    auto bad_cycle = base;
    bad_cycle["action"][0][0] = "(0 9)";
    CHECK_THROWS_WITH_AS(instance_from_json(bad_cycle), doctest::Contains("action[0][0]"), ParseError);
    auto not_hom = base;
    not_hom["action"][0][0] = "()";
    CHECK_THROWS_AS(instance_from_json(not_hom), ParseError);
    auto bad_format = base;
    bad_format["format"] = "other/9";
    CHECK_THROWS_AS(instance_from_json(bad_format), ParseError);
    CHECK_THROWS_AS(instance_from_string("{ not json"), ParseError);
    CHECK_THROWS_AS(load_instance("/nonexistent/fixlab.json"), IoError);
  }

  TEST_CASE("attached action") {
    const auto inst = s3_instance(true);
    const auto action = instance_action(inst);
    CHECK(action.points() == 3);
    CHECK_THROWS_AS(instance_action(s3_instance(false)), PreconditionError);
    auto j = instance_to_json(inst);
    j["omega"]["generator_rows"][0][0] = 0;
    j["omega"]["generator_rows"][0][1] = 0;
    j.erase("id");
    CHECK_THROWS_AS(instance_from_json(j), ParseError);
  }
}

TEST_SUITE("corpus") {
  TEST_CASE("catalogs") {
    const auto ab = abelian_catalog(8);
    // C2 C3 C4 C2xC2 C5 C6 C7 C8 C2xC4 C2xC2xC2
    CHECK(ab.size() == 10);
    CHECK(nonabelian_normal_catalog(8).size() == 3);
  }

  TEST_CASE("small abelian-N corpus") {
    CorpusConfig c;
    c.max_order = 6;
    c.nilpotent_n = false;
    const auto corpus = corpus_generate(c);
    std::size_t s3_like = 0;
    for (const auto& inst : corpus.instances) {
      CHECK(inst.labels.n_abelian);
      CHECK(inst.sdp->whole().order() <= 6);
      if (inst.name.rfind("C3 x| C2", 0) == 0) ++s3_like;
    }
    CHECK(s3_like == 2);
    CHECK(std::is_sorted(corpus.instances.begin(), corpus.instances.end(),
                         [](const Instance& a, const Instance& b) { return a.id < b.id; }));
  }

  TEST_CASE("coprime filters") {
    CorpusConfig c;
    c.max_order = 8;
    c.coprime = CoprimeFilter::NonCoprime;
    const auto nc = corpus_generate(c);
    std::set<std::string> pairs;
    for (const auto& inst : nc.instances) {
      CHECK_FALSE(inst.labels.coprime);
      pairs.insert(inst.name.substr(0, inst.name.find(" #")));
    }
    CHECK(pairs.contains("C2 x| C2"));
    CHECK(pairs.contains("C4 x| C2"));
    CHECK(pairs.contains("C2xC2 x| C2"));
    c.coprime = CoprimeFilter::Coprime;
    for (const auto& inst : corpus_generate(c).instances) CHECK(std::gcd(inst.n().order(), inst.j().order()) == 1);
  }

  TEST_CASE("generation is deterministic") {
    CorpusConfig c;
    c.max_order = 16;
    const auto a = corpus_generate(c);
    const auto b = corpus_generate(c);
    REQUIRE(a.instances.size() == b.instances.size());
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
      CHECK(instance_to_string(a.instances[i]) == instance_to_string(b.instances[i]));
    }
  }
}

TEST_SUITE("claims") {
  TEST_CASE("claim ids") {
    CHECK(claim_ids().size() == 14);
    CHECK(is_claim_id("prop-nil-split"));
    CHECK_FALSE(is_claim_id("lemma-1"));
    CHECK_THROWS_AS(run_claim("lemma-1", {}), PreconditionError);
    CHECK(default_max_order("lem-ab") == 48);
  }

  TEST_CASE("small campaigns pass and skips carry reasons") {
    ClaimConfig cfg;
    cfg.max_order = 16;
    cfg.jobs = 2;
    for (const char* id : {"lem-ab", "eq-1", "thm-ab", "lem-nil"}) {
      const auto r = run_claim(id, cfg);
      CHECK_MESSAGE(r.passed(), id);
      CHECK(r.tested + r.skipped.size() == r.considered);
      for (const auto& s : r.skipped) CHECK_FALSE(s.reason.empty());
      const auto j = report_to_json(r);
      CHECK(j["status"] == "pass");
      CHECK_FALSE(j.contains("wall_seconds"));
      CHECK(report_to_json(r, true).contains("wall_seconds"));
    }
  }

  TEST_CASE("search below any possible example finds nothing") {
    ClaimConfig cfg;
    cfg.max_order = 12;
    const auto r = search_ls_counterexample(cfg);
    CHECK(r.passed());
    CHECK(r.finds.empty());
    for (const auto& s : r.skipped) CHECK_FALSE(s.reason.empty());
  }

  TEST_CASE("reports do not depend on the worker count") {
    ClaimConfig one;
    one.max_order = 16;
    one.jobs = 1;
    ClaimConfig four = one;
    four.jobs = 4;
    CHECK(report_to_json(run_claim("cor-ab", one)).dump() == report_to_json(run_claim("cor-ab", four)).dump());
  }
}
