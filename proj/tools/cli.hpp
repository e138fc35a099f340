#pragma once

#include "vest/perturb.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vest::cli {

inline constexpr int report_schema_version = 1;

enum ExitCode { exit_ok = 0, exit_check_failure = 1, exit_usage = 2 };

struct RunConfig {
	std::string instance;
	int max_p = 2;
	int max_deg = 2;
	int trials = 25;
	std::uint64_t seed = 1;
	std::string report_path;
	std::string coeff_rep = "trivial";
};

struct InstanceInfo {
	std::string name;
	std::string description;
};

std::vector<InstanceInfo> instances();
bool is_group_instance(const std::string &name);
// pair-r<n> -> n, otherwise nullopt
std::optional<int> pair_dimension(const std::string &name);

// throws ConfigError
void validate(const RunConfig &cfg);

Report run_verify(const RunConfig &cfg);
nlohmann::json report_json(const RunConfig &cfg, const Report &rep);

enum class MapKind { ve, integrate };
// degree defaults to the highest slot (or point) index in the input
std::string apply_map(const RunConfig &cfg, MapKind map, const std::string &input,
                      std::optional<int> degree = std::nullopt);

} // namespace vest::cli
