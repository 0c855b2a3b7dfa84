#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clfe {

inline constexpr std::uint32_t kDefaultFeatureDim = 1U << 18;

// Hashed bag-of-terms. Entries sorted by index, no explicit zeros.
struct SparseVector {
  std::uint32_t dim = kDefaultFeatureDim;
  std::vector<std::pair<std::uint32_t, double>> entries;

  double at(std::uint32_t index) const;
  bool operator==(const SparseVector&) const = default;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Terms of head, tail and sentence hashed as "H:<t>", "T:<t>", "S:<t>"
// (64-bit FNV-1a mod dim), one count per occurrence. Throws ValidationError
// for an empty head or tail.
SparseVector featurize(std::string_view head, std::string_view tail,
                       std::string_view sentence,
                       std::uint32_t dim = kDefaultFeatureDim);

// Per-class loss weights.
struct ClassWeights {
  std::map<std::string, double> weights;

  double at(const std::string& label) const;
};

// 1 / ln(1 + n_c) for each class; counts must be >= 1.
std::map<std::string, double> raw_class_weights(
    const std::map<std::string, double>& counts);
// Inverse-log weights rescaled to mean 1. Throws ValidationError for a
// count below 1 or an empty histogram.
ClassWeights class_weights(const std::map<std::string, double>& counts);
ClassWeights class_weights(const std::map<std::string, std::size_t>& counts);
ClassWeights uniform_weights(const std::vector<std::string>& labels);

// Linear softmax over hashed features. Weight rows are allocated lazily per
// feature index, so an untouched feature costs nothing.
class SoftmaxModel {
 public:
  using Rows = std::map<std::uint32_t, std::vector<double>>;

  // Labels must be non-empty and duplicate-free.
  SoftmaxModel(std::vector<std::string> labels, std::uint32_t dim);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t num_classes() const { return labels_.size(); }
  std::uint32_t dim() const { return dim_; }
  std::optional<std::size_t> label_index(std::string_view label) const;

  double weight(std::uint32_t feature, std::size_t cls) const;
  double& mutable_weight(std::uint32_t feature, std::size_t cls);
  double bias(std::size_t cls) const { return bias_.at(cls); }
  double& mutable_bias(std::size_t cls) { return bias_.at(cls); }
  const Rows& rows() const { return rows_; }
  Rows& mutable_rows() { return rows_; }
  std::vector<double>& mutable_biases() { return bias_; }

  std::vector<double> logits(const SparseVector& x) const;
  double squared_norm() const;

  std::string to_json() const;
  // Throws ValidationError on malformed or inconsistent documents.
  static SoftmaxModel from_json(std::string_view text);

  bool operator==(const SoftmaxModel&) const = default;

 private:
  std::vector<std::string> labels_;
  std::uint32_t dim_;
  Rows rows_;
  std::vector<double> bias_;
};

struct Example {
  SparseVector features;
  std::string label;
};

struct Gradient {
  SoftmaxModel::Rows rows;
  std::vector<double> bias;
};

struct LossResult {
  double loss = 0.0;
  Gradient gradient;
};

// -(1/|B|) sum_i w(y_i) log softmax(W x_i + b)[y_i] + l2 ||W||^2, with its
// gradient in W and b. Throws ValidationError for an empty batch or a label
// outside the model's vocabulary.
LossResult weighted_ce_loss(const SoftmaxModel& model,
                            std::span<const Example> batch,
                            const ClassWeights& weights, double l2);

struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 20;
  // One batch holds this many facts, as in the reference relation head.
  int batch_size = 16;
  std::uint64_t seed = 0;
  double l2 = 1e-6;
  bool class_weighting = true;
};

// Reference optimizer settings of the original neural relation head, kept
// for documentation; the linear stand-in trains with plain SGD.
inline constexpr double kReferenceAdamLearningRate = 1e-4;
inline constexpr int kReferenceSchedulerStep = 2;
inline constexpr double kReferenceSchedulerGamma = 0.3;

struct TrainResult {
  SoftmaxModel model;
  ClassWeights weights;
  // Full-training-set objective after each epoch.
  std::vector<double> loss_trace;
};

// Mini-batch SGD with a seeded shuffle each epoch. The label vocabulary is
// the sorted set of training labels. Throws ValidationError on fewer than two
// classes or a non-positive hyperparameter.
TrainResult train(const std::vector<Example>& examples, const TrainConfig& cfg,
                  std::uint32_t dim = kDefaultFeatureDim);

struct TrainingPair {
  std::string head;
  std::string tail;
  std::string sentence;
  std::string relation;
};

TrainResult train(const std::vector<TrainingPair>& pairs, const TrainConfig& cfg,
                  std::uint32_t dim = kDefaultFeatureDim);

struct Prediction {
  std::string relation;
  std::vector<double> probabilities;  // aligned with model.labels()
};

// Argmax of the softmax; ties go to the earlier label.
Prediction predict(const SoftmaxModel& model, const SparseVector& x);
Prediction predict(const SoftmaxModel& model, std::string_view head,
                   std::string_view tail, std::string_view sentence);

}  // namespace clfe
