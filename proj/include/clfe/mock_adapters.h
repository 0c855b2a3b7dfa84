#pragma once

#include <filesystem>

#include "clfe/adapter.h"

namespace clfe {

// Stand-ins for the neural stages, run as `clfe mock-adapter`:
//   translator: {sample_id, sentence} -> {sample_id, translation: sentence}
//   generator:  {sample_id, ...} -> {sample_id, linearized} looked up by
//               sample_id in a canned JSONL file
//   annotator:  {sample_id, ...} -> {sample_id, conllu} looked up by sent_id
//               in a canned CoNLL-U file
// A sample missing from the canned data is a ValidationError.
void run_mock_adapter(AdapterRole role, const std::filesystem::path& canned,
                      const std::filesystem::path& input,
                      const std::filesystem::path& output);

}  // namespace clfe
