#include "clfe/adapter.h"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <optional>
#include <cstdlib>
#include <json.hpp>
#include <thread>

#include "clfe/errors.h"
#include "clfe/jsonl.h"

extern char** environ;

namespace clfe {

namespace {

class ScratchDir {
 public:
  ScratchDir() {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "clfe-adapter-XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr) {
      throw IoError("cannot create scratch directory for adapter files");
    }
    path_ = pattern;
  }
  ~ScratchDir() {
    std::error_code ignored;
    std::filesystem::remove_all(path_, ignored);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

int timeout_seconds() {
  const char* value = std::getenv(kAdapterTimeoutEnv);
  if (value == nullptr || *value == '\0') return kDefaultAdapterTimeoutSeconds;
  char* end = nullptr;
  long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed <= 0) {
    throw ValidationError(std::string(kAdapterTimeoutEnv) +
                          " must be a positive integer");
  }
  return static_cast<int>(parsed);
}

std::string replace_all(std::string text, std::string_view from,
                        std::string_view to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

std::string sample_id_of(const std::string& line) {
  auto object = nlohmann::json::parse(line, nullptr, false);
  if (object.is_discarded() || !object.is_object()) return {};
  auto it = object.find("sample_id");
  if (it == object.end() || !it->is_string()) return {};
  return it->get<std::string>();
}

// Runs `command` through /bin/sh with stdout folded into stderr; returns the
// wait status.
int spawn_and_wait(const std::string& name, const std::string& command) {
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_adddup2(&actions, STDERR_FILENO, STDOUT_FILENO);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  std::string shell = "/bin/sh";
  std::string flag = "-c";
  std::string body = command;
  char* argv[] = {shell.data(), flag.data(), body.data(), nullptr};
  pid_t pid = 0;
  int rc = posix_spawn(&pid, shell.c_str(), &actions, &attr, argv, environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  if (rc != 0) throw AdapterError(name, "spawn failed: " + std::string(strerror(rc)));

  const auto deadline =
      std::chrono::steady_clock::now() + std::chrono::seconds(timeout_seconds());
  auto pause = std::chrono::milliseconds(1);
  while (true) {
    int status = 0;
    pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) return status;
    if (done < 0) throw AdapterError(name, "waitpid failed");
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, &status, 0);
      throw AdapterError(name, "timed out after " +
                                   std::to_string(timeout_seconds()) + " s");
    }
    std::this_thread::sleep_for(pause);
    pause = std::min(pause * 2, std::chrono::milliseconds(50));
  }
}

}  // namespace

std::string_view to_string(AdapterRole role) {
  switch (role) {
    case AdapterRole::kTranslator: return "translator";
    case AdapterRole::kGenerator: return "generator";
    case AdapterRole::kAnnotator: return "annotator";
  }
  return "?";
}

AdapterRole parse_adapter_role(std::string_view text) {
  if (text == "translator") return AdapterRole::kTranslator;
  if (text == "generator") return AdapterRole::kGenerator;
  if (text == "annotator") return AdapterRole::kAnnotator;
  throw ValidationError("unknown adapter role '" + std::string(text) + "'");
}

std::string shell_quote(std::string_view text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += '\'';
  return out;
}

std::vector<std::string> run_adapter(const AdapterContract& contract,
                                     const std::vector<std::string>& lines) {
  const std::string name(to_string(contract.role));
  if (contract.command.empty()) throw AdapterError(name, "no command configured");

  std::optional<ScratchDir> scratch;
  if (contract.input_path.empty() || contract.output_path.empty()) scratch.emplace();
  const auto input = contract.input_path.empty() ? scratch->path() / "input.jsonl"
                                                 : contract.input_path;
  const auto output = contract.output_path.empty()
                          ? scratch->path() / "output.jsonl"
                          : contract.output_path;

  std::vector<std::string> expected_ids;
  for (const std::string& line : lines) expected_ids.push_back(sample_id_of(line));
  write_lines(input, lines);
  std::error_code ignored;
  std::filesystem::remove(output, ignored);

  std::string command = contract.command;
  const bool placeholders = command.find("{input}") != std::string::npos ||
                            command.find("{output}") != std::string::npos;
  if (placeholders) {
    command = replace_all(command, "{input}", shell_quote(input.string()));
    command = replace_all(command, "{output}", shell_quote(output.string()));
  } else {
    command += " " + shell_quote(input.string()) + " " + shell_quote(output.string());
  }

  const int status = spawn_and_wait(name, command);
  if (WIFSIGNALED(status)) {
    throw AdapterError(name, "killed by signal " + std::to_string(WTERMSIG(status)));
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) != 0) {
    throw AdapterError(name, "exited with status " + std::to_string(WEXITSTATUS(status)),
                       WEXITSTATUS(status));
  }
  if (!std::filesystem::exists(output)) {
    throw AdapterError(name, "wrote no output file '" + output.string() + "'");
  }
  std::vector<std::string> result = read_lines(output);
  if (result.size() != lines.size()) {
    throw AdapterError(name, "emitted " + std::to_string(result.size()) +
                                 " lines for " + std::to_string(lines.size()) +
                                 " input lines");
  }
  for (std::size_t i = 0; i < result.size(); ++i) {
    if (sample_id_of(result[i]) != expected_ids[i]) {
      throw AdapterError(name, "line " + std::to_string(i + 1) +
                                   " does not echo sample_id '" + expected_ids[i] +
                                   "'");
    }
  }
  return result;
}

}  // namespace clfe
