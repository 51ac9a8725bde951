#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace dcrep {

struct CommandOptions {
  std::string model;  // shipped model/fixture name or path
  std::optional<std::string> field;
  std::optional<int> prime;
  std::optional<int> aux_prime;
  std::optional<long long> ideal_height;
  std::optional<long long> ideal_coord;
  std::optional<long long> lift_order;
  std::uint64_t seed = 0;
  std::string suite = "all";
};

struct CommandResult {
  int exit_code = 0;
  nlohmann::json payload;   // deterministic in (inputs, flags, seed)
  nlohmann::json metadata;  // seed, fields, embeddings
  std::map<std::string, std::string> files;  // extra artifacts by file name

  /// {"command", "exit_code", "payload", "metadata"}, pretty printed.
  std::string document(const std::string& command) const;
};

CommandResult cmd_classify(const CommandOptions& opt);
CommandResult cmd_poset(const CommandOptions& opt);
CommandResult cmd_decompose(const CommandOptions& opt);
CommandResult cmd_verify(const CommandOptions& opt);

/// Runs a command by name, converting errors into exit codes 1/2/3 and an error payload.
CommandResult run_command(const std::string& name, const CommandOptions& opt);

/// JUnit XML for a verify payload.
std::string junit_xml(const nlohmann::json& verify_payload);

}  // namespace dcrep
