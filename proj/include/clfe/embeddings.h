#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clfe {

// Read-only token -> vector table (GloVe-style text format: a token followed
// by `dim` decimals per line). Keys are lowercased; first occurrence wins.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;

  // Throws ValidationError (LineError) on inconsistent dimensions or
  // unparsable numbers, IoError when the file cannot be read.
  static EmbeddingStore load(const std::filesystem::path& path);
  static EmbeddingStore parse(std::string_view content);

  // Builds from in-memory entries with the same validation.
  static EmbeddingStore from_entries(
      const std::vector<std::pair<std::string, std::vector<double>>>& entries);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return index_.size(); }

  // Lookup is by lowercased token.
  std::optional<std::span<const double>> find(std::string_view token) const;

 private:
  bool insert(std::string token, std::vector<double> vector);

  std::size_t dim_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> data_;
};

inline EmbeddingStore load_embeddings(const std::filesystem::path& path) {
  return EmbeddingStore::load(path);
}

}  // namespace clfe
