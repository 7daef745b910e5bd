#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dendrite::cli {

/// Entry point behind main(): parses the subcommand, validates its config,
/// runs it, writes artifacts. Exit codes: 0 success, 1 runtime failure,
/// 2 config validation failure.
int run(const std::vector<std::string>& args);

/// FNV-1a hash of the canonical config dump, as 16 hex digits; artifact
/// names are templated <command>-<confighash>-<seed>.<ext>.
std::string config_hash(const nlohmann::ordered_json& config);

std::string artifact_name(const std::string& command, const nlohmann::ordered_json& config,
                          std::uint64_t seed, const std::string& ext);

} // namespace dendrite::cli
