#include "fixlab/fixlab.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "fixlab/actions.hpp"
#include "fixlab/claims.hpp"
#include "fixlab/cohomology.hpp"
#include "fixlab/complements.hpp"
#include "fixlab/corpus.hpp"
#include "fixlab/instance_io.hpp"

struct fixlab_instance {
  fixlab::Instance inst;
};

struct fixlab_report {
  fixlab::ClaimReport report;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

fixlab_status set_error(fixlab_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, mapping exceptions to status codes.
template <typename F>
fixlab_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const fixlab::ParseError& e) {
    return set_error(FIXLAB_PARSE, e.what());
  } catch (const fixlab::IoError& e) {
    return set_error(FIXLAB_IO, e.what());
  } catch (const fixlab::CapExceeded& e) {
    return set_error(FIXLAB_CAP, e.what());
  } catch (const fixlab::PreconditionError& e) {
    return set_error(FIXLAB_PRECONDITION, e.what());
  } catch (const fixlab::DegreeMismatch& e) {
    return set_error(FIXLAB_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FIXLAB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FIXLAB_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fixlab::ClaimConfig claim_config(const fixlab_verify_options* options) {
  fixlab::ClaimConfig config;
  if (options) {
    config.max_order = options->max_order;
    config.jobs = options->jobs;
    config.seed = options->seed;
  }
  return config;
}

json subgroup_json(const fixlab::PermutationGroup& h) {
  json gens = json::array();
  for (const auto& x : h.small_generators()) gens.push_back(x.to_cycles());
  return json{{"order", h.order()}, {"generators", std::move(gens)}};
}

json cocycle_json(const fixlab::CrossedHom& phi) {
  const auto& ctx = phi.context();
  const auto& sdp = ctx.sdp();
  json values = json::array();
  for (auto j : ctx.domain_generators()) {
    values.push_back(json{{"j", sdp.complement().element(j).to_cycles()},
                          {"value", sdp.normal().element(phi(j)).to_cycles()}});
  }
  return values;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

void fixlab_verify_options_init(fixlab_verify_options* options) {
  if (!options) return;
  options->max_order = 0;
  options->jobs = 0;
  options->seed = 1;
}

const char* fixlab_last_error(void) { return last_error.c_str(); }

const char* fixlab_status_name(fixlab_status status) {
  switch (status) {
    case FIXLAB_OK: return "ok";
    case FIXLAB_USAGE: return "usage";
    case FIXLAB_PARSE: return "parse";
    case FIXLAB_IO: return "io";
    case FIXLAB_CAP: return "cap";
    case FIXLAB_PRECONDITION: return "precondition";
    case FIXLAB_INTERNAL: return "internal";
  }
  return "unknown";
}

void fixlab_string_free(char* s) { std::free(s); }

size_t fixlab_claim_count(void) { return fixlab::claim_ids().size(); }

const char* fixlab_claim_id(size_t index) {
  const auto& ids = fixlab::claim_ids();
  return index < ids.size() ? ids[index].c_str() : nullptr;
}

fixlab_status fixlab_verify(const char* claim, const fixlab_verify_options* options, fixlab_report** out) {
  if (!claim || !out) return set_error(FIXLAB_USAGE, "null argument");
  *out = nullptr;
  if (!fixlab::is_claim_id(claim)) return set_error(FIXLAB_USAGE, std::string("unknown claim '") + claim + "'");
  return guarded([&] {
    *out = new fixlab_report{fixlab::run_claim(claim, claim_config(options))};
    return FIXLAB_OK;
  });
}

fixlab_status fixlab_search_ls(const fixlab_verify_options* options, fixlab_report** out) {
  if (!out) return set_error(FIXLAB_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new fixlab_report{fixlab::search_ls_counterexample(claim_config(options))};
    return FIXLAB_OK;
  });
}

int fixlab_report_passed(const fixlab_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t fixlab_report_failure_count(const fixlab_report* report) {
  return report ? report->report.failures.size() : 0;
}

size_t fixlab_report_find_count(const fixlab_report* report) { return report ? report->report.finds.size() : 0; }

double fixlab_report_wall_seconds(const fixlab_report* report) { return report ? report->report.wall_seconds : 0; }

fixlab_status fixlab_report_to_json(const fixlab_report* report, int include_timing, char** out) {
  if (!report || !out) return set_error(FIXLAB_USAGE, "null argument");
  return guarded([&] {
    *out = copy_string(dump(fixlab::report_to_json(report->report, include_timing != 0)));
    return FIXLAB_OK;
  });
}

fixlab_status fixlab_report_save(const fixlab_report* report, const char* path, int include_timing) {
  if (!report || !path) return set_error(FIXLAB_USAGE, "null argument");
  return guarded([&] {
    std::ofstream file(path);
    if (!file) throw fixlab::IoError(std::string("cannot write ") + path);
    file << dump(fixlab::report_to_json(report->report, include_timing != 0));
    if (!file) throw fixlab::IoError(std::string("write failed for ") + path);
    return FIXLAB_OK;
  });
}

void fixlab_report_free(fixlab_report* report) { delete report; }

fixlab_status fixlab_instance_load(const char* path, fixlab_instance** out) {
  if (!path || !out) return set_error(FIXLAB_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new fixlab_instance{fixlab::load_instance(path)};
    return FIXLAB_OK;
  });
}

fixlab_status fixlab_instance_parse(const char* text, fixlab_instance** out) {
  if (!text || !out) return set_error(FIXLAB_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new fixlab_instance{fixlab::instance_from_string(text)};
    return FIXLAB_OK;
  });
}

fixlab_status fixlab_instance_save(const fixlab_instance* instance, const char* path) {
  if (!instance || !path) return set_error(FIXLAB_USAGE, "null argument");
  return guarded([&] {
    fixlab::save_instance(instance->inst, path);
    return FIXLAB_OK;
  });
}

fixlab_status fixlab_instance_to_json(const fixlab_instance* instance, char** out) {
  if (!instance || !out) return set_error(FIXLAB_USAGE, "null argument");
  return guarded([&] {
    *out = copy_string(fixlab::instance_to_string(instance->inst));
    return FIXLAB_OK;
  });
}

const char* fixlab_instance_id(const fixlab_instance* instance) {
  return instance ? instance->inst.id.c_str() : nullptr;
}

void fixlab_instance_free(fixlab_instance* instance) { delete instance; }

fixlab_status fixlab_h1_json(const fixlab_instance* instance, char** out) {
  if (!instance || !out) return set_error(FIXLAB_USAGE, "null argument");
  return guarded([&] {
    const auto& inst = instance->inst;
    const auto h1 = fixlab::compute_h1(fixlab::CohomContext::full(inst.sdp));
    json classes = json::array();
    for (std::size_t c = 0; c < h1.size(); ++c) {
      const auto& phi = h1.classes()[c];
      classes.push_back(json{{"index", c},
                             {"distinguished", c == h1.distinguished_index()},
                             {"representative", cocycle_json(phi)},
                             {"complement", subgroup_json(fixlab::complement_from_cocycle(phi))}});
    }
    const auto searched = fixlab::enumerate_complements(inst.sdp->whole(), inst.sdp->normal_image());
    json result{{"instance", inst.id},
                {"name", inst.name},
                {"z1", h1.cocycles().size()},
                {"h1", h1.size()},
                {"complements_from_cocycles", h1.cocycles().size()},
                {"complements_from_search", searched.size()},
                {"classes", std::move(classes)}};
    *out = copy_string(dump(result));
    return FIXLAB_OK;
  });
}

fixlab_status fixlab_complements_json(const fixlab_instance* instance, char** out) {
  if (!instance || !out) return set_error(FIXLAB_USAGE, "null argument");
  return guarded([&] {
    const auto& inst = instance->inst;
    const auto& g = inst.sdp->whole();
    const auto comps = fixlab::enumerate_complements(*inst.sdp);
    std::vector<std::size_t> conj_rep, local_rep;
    std::vector<std::size_t> conj_class(comps.size()), local_class(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      conj_class[i] = conj_rep.size();
      for (std::size_t c = 0; c < conj_rep.size(); ++c) {
        if (fixlab::conjugacy_witness(comps[conj_rep[c]], comps[i], g)) {
          conj_class[i] = c;
          break;
        }
      }
      if (conj_class[i] == conj_rep.size()) conj_rep.push_back(i);
      local_class[i] = local_rep.size();
      for (std::size_t c = 0; c < local_rep.size(); ++c) {
        if (fixlab::locally_conjugate(comps[local_rep[c]], comps[i], g).conjugate) {
          local_class[i] = c;
          break;
        }
      }
      if (local_class[i] == local_rep.size()) local_rep.push_back(i);
    }
    json list = json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      auto entry = subgroup_json(comps[i]);
      entry["conjugacy_class"] = conj_class[i];
      entry["local_class"] = local_class[i];
      list.push_back(std::move(entry));
    }
    json result{{"instance", inst.id},
                {"name", inst.name},
                {"count", comps.size()},
                {"conjugacy_classes", conj_rep.size()},
                {"local_classes", local_rep.size()},
                {"complements", std::move(list)}};
    *out = copy_string(dump(result));
    return FIXLAB_OK;
  });
}

fixlab_status fixlab_fixpoint_json(const fixlab_instance* instance, fixlab_finder mode, char** out, int* found) {
  if (!instance || !out) return set_error(FIXLAB_USAGE, "null argument");
  return guarded([&] {
    const auto& inst = instance->inst;
    const auto action = fixlab::instance_action(inst);
    const bool abelian = mode == FIXLAB_FINDER_ABELIAN || (mode == FIXLAB_FINDER_AUTO && inst.labels.n_abelian);
    const auto r = abelian ? fixlab::find_fixed_point_abelian(*inst.sdp, action)
                           : fixlab::find_fixed_point_nilpotent(*inst.sdp, action);
    json result{{"instance", inst.id},
                {"finder", abelian ? "abelian" : "nilpotent"},
                {"points", action.points()},
                {"outcome", fixlab::finder_outcome_name(r.outcome)},
                {"detail", r.detail}};
    if (r.outcome == fixlab::FinderOutcome::FixedPoint) {
      result["point"] = r.point;
      if (r.conjugator) result["conjugator"] = r.conjugator->to_cycles();
    }
    if (abelian) {
      result["complements_examined"] = r.complements_examined;
      result["complements_total"] = r.complements_total;
    } else {
      const auto& s = r.supplement_stats;
      result["recursion"] = json{{"direct", s.direct},
                                 {"split_prime", s.split_prime},
                                 {"minimal_inside", s.minimal_inside},
                                 {"minimal_outside", s.minimal_outside},
                                 {"max_depth", s.max_depth}};
    }
    if (found) *found = r.outcome == fixlab::FinderOutcome::FixedPoint ? 1 : 0;
    *out = copy_string(dump(result));
    return FIXLAB_OK;
  });
}

fixlab_status fixlab_corpus_write(size_t max_order, uint64_t seed, const char* dir, size_t* written) {
  if (!dir) return set_error(FIXLAB_USAGE, "null argument");
  return guarded([&] {
    fixlab::CorpusConfig config;
    config.max_order = max_order;
    config.seed = seed;
    config.other_n = true;
    const auto corpus = fixlab::corpus_generate(config);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw fixlab::IoError(std::string("cannot create ") + dir + ": " + ec.message());
    const std::filesystem::path root(dir);
    json index = json::array();
    for (const auto& inst : corpus.instances) {
      fixlab::save_instance(inst, (root / (inst.id + ".json")).string());
      index.push_back(json{{"id", inst.id}, {"name", inst.name}, {"order", inst.sdp->whole().order()}});
    }
    json skipped = json::array();
    for (const auto& s : corpus.skipped) skipped.push_back(json{{"pair", s.pair}, {"reason", s.reason}});
    json manifest{{"max_order", max_order},
                  {"seed", seed},
                  {"instances", std::move(index)},
                  {"duplicates", corpus.duplicates},
                  {"sampled_pairs", corpus.sampled_pairs},
                  {"skipped", std::move(skipped)}};
    std::ofstream file(root / "index.json");
    file << dump(manifest);
    if (!file) throw fixlab::IoError("cannot write index.json in " + std::string(dir));
    if (written) *written = corpus.instances.size();
    return FIXLAB_OK;
  });
}

}  // extern "C"
