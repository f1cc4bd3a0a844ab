#include "fixlab/instance_io.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "fixlab/structure.hpp"

namespace fixlab {

using nlohmann::json;

namespace {

json labels_to_json(const InstanceLabels& l) {
  return json{{"coprime", l.coprime},
              {"g_soluble", l.g_soluble},
              {"g_supersoluble", l.g_supersoluble},
              {"n_abelian", l.n_abelian},
              {"n_nilpotent", l.n_nilpotent}};
}

json content_json(const Instance& inst) {
  json out;
  out["format"] = kInstanceFormat;
  out["name"] = inst.name;
  out["N"] = group_to_json(inst.n());
  out["J"] = group_to_json(inst.j());
  json action = json::array();
  for (const auto& row : inst.sdp->action().generator_images()) {
    json images = json::array();
    for (const auto& p : row) images.push_back(p.to_cycles());
    action.push_back(std::move(images));
  }
  out["action"] = std::move(action);
  out["labels"] = labels_to_json(inst.labels);
  if (inst.omega) out["omega"] = json{{"points", inst.omega->points}, {"generator_rows", inst.omega->generator_rows}};
  return out;
}

// Rejects keys outside `allowed` and reports the first missing `required` key.
void check_keys(const json& j, const std::string& where, const std::set<std::string>& allowed,
                const std::set<std::string>& required) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ParseError(where + ": unknown key '" + key + "'");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  }
}

template <typename T>
T get_field(const json& j, const std::string& key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(where + "." + key + ": " + e.what());
  }
}

PermutationGroup group_from_json(const json& j, const std::string& where) {
  check_keys(j, where, {"degree", "generators"}, {"degree", "generators"});
  const auto degree = get_field<std::size_t>(j, "degree", where);
  const auto gens = get_field<std::vector<std::string>>(j, "generators", where);
  if (degree == 0 || degree > kMaxDegree) throw ParseError(where + ".degree: out of range");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      perms.push_back(Permutation::from_cycles(gens[i], degree));
    } catch (const Error& e) {
      throw ParseError(where + ".generators[" + std::to_string(i) + "]: " + e.what());
    }
  }
  try {
    return PermutationGroup::generate(degree, std::move(perms));
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

void check_label(const std::string& key, bool stored, bool computed) {
  if (stored != computed) {
    throw ParseError("labels." + key + ": stored " + (stored ? "true" : "false") + " but recomputed " +
                     (computed ? "true" : "false"));
  }
}

}  // namespace

std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 15];
  return out;
}

json group_to_json(const PermutationGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycles());
  return json{{"degree", g.degree()}, {"generators", std::move(gens)}};
}

InstanceLabels compute_labels(const SemidirectProduct& sdp) {
  InstanceLabels l;
  l.n_abelian = sdp.normal().is_abelian();
  l.n_nilpotent = is_nilpotent(sdp.normal());
  l.g_supersoluble = is_supersoluble(sdp.whole());
  l.g_soluble = is_soluble(sdp.whole());
  l.coprime = std::gcd(sdp.normal().order(), sdp.complement().order()) == 1;
  return l;
}

Instance make_instance(std::string name, const ActionHom& action, std::optional<OmegaSpec> omega) {
  Instance inst;
  inst.name = std::move(name);
  inst.sdp = std::make_shared<const SemidirectProduct>(action);
  inst.labels = compute_labels(*inst.sdp);
  inst.omega = std::move(omega);
  if (inst.omega) instance_action(inst);
  inst.id = content_hash(content_json(inst).dump());
  return inst;
}

GAction instance_action(const Instance& inst) {
  if (!inst.omega) throw PreconditionError("instance has no attached action");
  return GAction::from_generator_rows(inst.sdp->whole(), inst.omega->points, inst.omega->generator_rows);
}

json instance_to_json(const Instance& inst) {
  auto out = content_json(inst);
  out["id"] = inst.id;
  return out;
}

Instance instance_from_json(const json& j) {
  check_keys(j, "instance", {"format", "id", "name", "N", "J", "action", "labels", "omega"},
             {"format", "name", "N", "J", "action", "labels"});
  const auto format = get_field<std::string>(j, "format", "instance");
  if (format != kInstanceFormat) throw ParseError("instance.format: unsupported format '" + format + "'");
  const auto name = get_field<std::string>(j, "name", "instance");
  auto n = group_from_json(j.at("N"), "N");
  auto jg = group_from_json(j.at("J"), "J");

  const auto raw_action = get_field<std::vector<std::vector<std::string>>>(j, "action", "instance");
  if (raw_action.size() != jg.generators().size()) {
    throw ParseError("action: expected one row per J generator (" + std::to_string(jg.generators().size()) +
                     "), got " + std::to_string(raw_action.size()));
  }
  std::vector<std::vector<Permutation>> images;
  for (std::size_t r = 0; r < raw_action.size(); ++r) {
    if (raw_action[r].size() != n.generators().size()) {
      throw ParseError("action[" + std::to_string(r) + "]: expected one image per N generator");
    }
    std::vector<Permutation> row;
    for (std::size_t c = 0; c < raw_action[r].size(); ++c) {
      try {
        row.push_back(Permutation::from_cycles(raw_action[r][c], n.degree()));
      } catch (const Error& e) {
        throw ParseError("action[" + std::to_string(r) + "][" + std::to_string(c) + "]: " + e.what());
      }
    }
    images.push_back(std::move(row));
  }

  std::optional<OmegaSpec> omega;
  if (j.contains("omega")) {
    const auto& o = j.at("omega");
    check_keys(o, "omega", {"points", "generator_rows"}, {"points", "generator_rows"});
    omega = OmegaSpec{get_field<std::size_t>(o, "points", "omega"),
                      get_field<std::vector<std::vector<std::uint32_t>>>(o, "generator_rows", "omega")};
  }

  const auto& lj = j.at("labels");
  check_keys(lj, "labels", {"coprime", "g_soluble", "g_supersoluble", "n_abelian", "n_nilpotent"},
             {"coprime", "g_soluble", "g_supersoluble", "n_abelian", "n_nilpotent"});

  Instance inst;
  try {
    inst = make_instance(name, ActionHom::from_generator_images(std::move(jg), std::move(n), std::move(images)),
                         std::move(omega));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  const auto& l = inst.labels;
  check_label("coprime", get_field<bool>(lj, "coprime", "labels"), l.coprime);
  check_label("g_soluble", get_field<bool>(lj, "g_soluble", "labels"), l.g_soluble);
  check_label("g_supersoluble", get_field<bool>(lj, "g_supersoluble", "labels"), l.g_supersoluble);
  check_label("n_abelian", get_field<bool>(lj, "n_abelian", "labels"), l.n_abelian);
  check_label("n_nilpotent", get_field<bool>(lj, "n_nilpotent", "labels"), l.n_nilpotent);
  if (j.contains("id")) {
    const auto id = get_field<std::string>(j, "id", "instance");
    if (id != inst.id) throw ParseError("instance.id: stored " + id + " but content hashes to " + inst.id);
  }
  return inst;
}

std::string instance_to_string(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

Instance instance_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return instance_from_string(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << instance_to_string(inst);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace fixlab
