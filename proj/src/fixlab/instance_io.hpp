#pragma once

// Semidirect-product instances and their JSON file format.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixlab/actions.hpp"
#include "fixlab/construct.hpp"

namespace fixlab {

inline constexpr const char* kInstanceFormat = "fixlab-instance/1";

struct InstanceLabels {
  bool n_abelian = false;
  bool n_nilpotent = false;
  bool g_supersoluble = false;
  bool g_soluble = false;
  bool coprime = false;

  friend bool operator==(const InstanceLabels&, const InstanceLabels&) = default;
};

// A finite set acted on by the generators of N x| J: N's generators first,
// then J's, matching SemidirectProduct::whole().generators().
struct OmegaSpec {
  std::size_t points = 0;
  std::vector<std::vector<std::uint32_t>> generator_rows;
};

struct Instance {
  std::string id;
  std::string name;
  std::shared_ptr<const SemidirectProduct> sdp;
  InstanceLabels labels;
  std::optional<OmegaSpec> omega;

  const PermutationGroup& n() const { return sdp->normal(); }
  const PermutationGroup& j() const { return sdp->complement(); }
};

InstanceLabels compute_labels(const SemidirectProduct& sdp);

// Builds the semidirect product, labels and id. The omega rows, if given, are
// validated as an action of the whole group.
Instance make_instance(std::string name, const ActionHom& action, std::optional<OmegaSpec> omega = {});

GAction instance_action(const Instance& inst);

nlohmann::json instance_to_json(const Instance& inst);
// Strict: unknown keys are rejected, missing fields are named, labels and id
// are checked against recomputation. Throws ParseError.
Instance instance_from_json(const nlohmann::json& j);

std::string instance_to_string(const Instance& inst);
Instance instance_from_string(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// 16 hex digits of the FNV-1a hash of a string.
std::string content_hash(const std::string& text);

nlohmann::json group_to_json(const PermutationGroup& g);

}  // namespace fixlab
