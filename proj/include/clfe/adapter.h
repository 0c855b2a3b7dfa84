#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace clfe {

enum class AdapterRole { kTranslator, kGenerator, kAnnotator };

std::string_view to_string(AdapterRole role);
AdapterRole parse_adapter_role(std::string_view text);

// Seconds an adapter may run before it is killed; read from the environment.
inline constexpr const char* kAdapterTimeoutEnv = "CLFE_ADAPTER_TIMEOUT";
inline constexpr int kDefaultAdapterTimeoutSeconds = 3600;

// An external stage exchanging JSON Lines through two files. The command is
// run by /bin/sh; "{input}" and "{output}" are replaced by the quoted paths,
// or both paths are appended when neither placeholder appears. The adapter
// must write one JSON object per input line, in order, echoing sample_id.
struct AdapterContract {
  AdapterRole role = AdapterRole::kGenerator;
  std::string command;
  // Empty paths are replaced by files in a scratch directory that is removed
  // after the call.
  std::filesystem::path input_path;
  std::filesystem::path output_path;
};

// Writes `lines`, runs the adapter and returns its validated output lines.
// Throws AdapterError when the process cannot start or times out. A non-zero
// exit also throws, with exit_code() carrying the status. The output file
// must hold one line per input line, each echoing its sample_id.
std::vector<std::string> run_adapter(const AdapterContract& contract,
                                     const std::vector<std::string>& lines);

// POSIX shell single-quoting.
std::string shell_quote(std::string_view text);

}  // namespace clfe
