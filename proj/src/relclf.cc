#include "clfe/relclf.h"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <random>
#include <set>

#include "clfe/errors.h"
#include "clfe/text.h"

namespace clfe {

double SparseVector::at(std::uint32_t index) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), index,
      [](const auto& entry, std::uint32_t i) { return entry.first < i; });
  return it != entries.end() && it->first == index ? it->second : 0.0;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

SparseVector featurize(std::string_view head, std::string_view tail,
                       std::string_view sentence, std::uint32_t dim) {
  if (trim(head).empty()) throw ValidationError("featurize: empty head");
  if (trim(tail).empty()) throw ValidationError("featurize: empty tail");
  if (dim == 0) throw ValidationError("featurize: zero dimension");
  std::map<std::uint32_t, double> counts;
  auto add_field = [&](std::string_view prefix, std::string_view text) {
    for (const std::string& term : terms(text)) {
      std::string key(prefix);
      key += term;
      counts[static_cast<std::uint32_t>(fnv1a64(key) % dim)] += 1.0;
    }
  };
  add_field("H:", head);
  add_field("T:", tail);
  add_field("S:", sentence);
  SparseVector x;
  x.dim = dim;
  x.entries.assign(counts.begin(), counts.end());
  return x;
}

double ClassWeights::at(const std::string& label) const {
  auto it = weights.find(label);
  if (it == weights.end()) {
    throw ValidationError("no class weight for label '" + label + "'");
  }
  return it->second;
}

std::map<std::string, double> raw_class_weights(
    const std::map<std::string, double>& counts) {
  std::map<std::string, double> raw;
  for (const auto& [label, count] : counts) {
    if (!(count >= 1.0)) {
      throw ValidationError("class '" + label + "' has count below 1");
    }
    raw[label] = 1.0 / std::log1p(count);
  }
  return raw;
}

ClassWeights class_weights(const std::map<std::string, double>& counts) {
  if (counts.empty()) throw ValidationError("empty class histogram");
  auto raw = raw_class_weights(counts);
  double sum = 0.0;
  for (const auto& [label, w] : raw) sum += w;
  const double scale = static_cast<double>(raw.size()) / sum;
  ClassWeights out;
  for (const auto& [label, w] : raw) out.weights[label] = w * scale;
  return out;
}

ClassWeights class_weights(const std::map<std::string, std::size_t>& counts) {
  std::map<std::string, double> real;
  for (const auto& [label, n] : counts) real[label] = static_cast<double>(n);
  return class_weights(real);
}

ClassWeights uniform_weights(const std::vector<std::string>& labels) {
  ClassWeights out;
  for (const auto& label : labels) out.weights[label] = 1.0;
  return out;
}

SoftmaxModel::SoftmaxModel(std::vector<std::string> labels, std::uint32_t dim)
    : labels_(std::move(labels)), dim_(dim), bias_(labels_.size(), 0.0) {
  if (labels_.empty()) throw ValidationError("model needs at least one label");
  if (dim_ == 0) throw ValidationError("model dimension must be positive");
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size()) {
    throw ValidationError("duplicate labels in vocabulary");
  }
}

std::optional<std::size_t> SoftmaxModel::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

double SoftmaxModel::weight(std::uint32_t feature, std::size_t cls) const {
  auto it = rows_.find(feature);
  return it == rows_.end() ? 0.0 : it->second.at(cls);
}

double& SoftmaxModel::mutable_weight(std::uint32_t feature, std::size_t cls) {
  if (feature >= dim_) throw ValidationError("feature index out of range");
  auto [it, inserted] = rows_.try_emplace(feature, labels_.size(), 0.0);
  return it->second.at(cls);
}

std::vector<double> SoftmaxModel::logits(const SparseVector& x) const {
  std::vector<double> z = bias_;
  for (const auto& [index, value] : x.entries) {
    auto it = rows_.find(index);
    if (it == rows_.end()) continue;
    for (std::size_t c = 0; c < z.size(); ++c) z[c] += it->second[c] * value;
  }
  return z;
}

double SoftmaxModel::squared_norm() const {
  double sum = 0.0;
  for (const auto& [index, row] : rows_) {
    for (double w : row) sum += w * w;
  }
  return sum;
}

std::string SoftmaxModel::to_json() const {
  nlohmann::ordered_json doc;
  doc["format"] = "clfe-softmax-v1";
  doc["dim"] = dim_;
  doc["labels"] = labels_;
  doc["bias"] = bias_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [index, row] : rows_) {
    if (std::all_of(row.begin(), row.end(), [](double w) { return w == 0.0; })) {
      continue;
    }
    rows.push_back({{"index", index}, {"weights", row}});
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

SoftmaxModel SoftmaxModel::from_json(std::string_view text) {
  try {
    auto doc = nlohmann::json::parse(text);
    if (doc.value("format", "") != "clfe-softmax-v1") {
      throw ValidationError("model: unknown format tag");
    }
    SoftmaxModel model(doc.at("labels").get<std::vector<std::string>>(),
                       doc.at("dim").get<std::uint32_t>());
    auto bias = doc.at("bias").get<std::vector<double>>();
    if (bias.size() != model.num_classes()) {
      throw ValidationError("model: bias length differs from label count");
    }
    model.bias_ = std::move(bias);
    for (const auto& row : doc.at("rows")) {
      auto index = row.at("index").get<std::uint32_t>();
      auto weights = row.at("weights").get<std::vector<double>>();
      if (index >= model.dim_ || weights.size() != model.num_classes()) {
        throw ValidationError("model: inconsistent weight row");
      }
      model.rows_[index] = std::move(weights);
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("model: ") + e.what());
  }
}

namespace {

std::vector<double> softmax(std::vector<double> z) {
  const double max = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - max);
    sum += v;
  }
  for (double& v : z) v /= sum;
  return z;
}

}  // namespace

LossResult weighted_ce_loss(const SoftmaxModel& model,
                            std::span<const Example> batch,
                            const ClassWeights& weights, double l2) {
  if (batch.empty()) throw ValidationError("empty batch");
  const std::size_t k = model.num_classes();
  const double inv = 1.0 / static_cast<double>(batch.size());
  LossResult out;
  out.gradient.bias.assign(k, 0.0);
  double data_term = 0.0;
  for (const Example& ex : batch) {
    auto y = model.label_index(ex.label);
    if (!y) throw ValidationError("label '" + ex.label + "' outside vocabulary");
    if (ex.features.dim != model.dim()) {
      throw ValidationError("feature dimension differs from model dimension");
    }
    const double w = weights.at(ex.label);
    const auto z = model.logits(ex.features);
    const double max = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double v : z) sum += std::exp(v - max);
    const double log_norm = max + std::log(sum);
    data_term -= w * (z[*y] - log_norm);

    std::vector<double> delta(k);
    for (std::size_t c = 0; c < k; ++c) {
      const double p = std::exp(z[c] - log_norm);
      delta[c] = inv * w * (p - (c == *y ? 1.0 : 0.0));
      out.gradient.bias[c] += delta[c];
    }
    for (const auto& [index, value] : ex.features.entries) {
      auto [it, inserted] = out.gradient.rows.try_emplace(index, k, 0.0);
      for (std::size_t c = 0; c < k; ++c) it->second[c] += delta[c] * value;
    }
  }
  out.loss = inv * data_term + l2 * model.squared_norm();
  if (l2 != 0.0) {
    for (const auto& [index, row] : model.rows()) {
      auto [it, inserted] = out.gradient.rows.try_emplace(index, k, 0.0);
      for (std::size_t c = 0; c < k; ++c) it->second[c] += 2.0 * l2 * row[c];
    }
  }
  return out;
}

TrainResult train(const std::vector<Example>& examples, const TrainConfig& cfg,
                  std::uint32_t dim) {
  if (!(cfg.learning_rate > 0.0) || cfg.epochs < 0 || cfg.batch_size <= 0 ||
      cfg.l2 < 0.0) {
    throw ValidationError("train: invalid configuration");
  }
  std::map<std::string, std::size_t> histogram;
  for (const Example& ex : examples) ++histogram[ex.label];
  if (histogram.size() < 2) {
    throw ValidationError("train: need at least two relation classes");
  }
  std::vector<std::string> labels;
  for (const auto& [label, count] : histogram) labels.push_back(label);

  TrainResult result{SoftmaxModel(labels, dim),
                     cfg.class_weighting ? class_weights(histogram)
                                         : uniform_weights(labels),
                     {}};
  SoftmaxModel& model = result.model;

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Example> batch;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(cfg.batch_size)) {
      std::size_t end =
          std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      batch.clear();
      for (std::size_t i = start; i < end; ++i) batch.push_back(examples[order[i]]);
      LossResult step = weighted_ce_loss(model, batch, result.weights, cfg.l2);
      for (const auto& [index, grad] : step.gradient.rows) {
        auto [it, inserted] =
            model.mutable_rows().try_emplace(index, model.num_classes(), 0.0);
        for (std::size_t c = 0; c < grad.size(); ++c) {
          it->second[c] -= cfg.learning_rate * grad[c];
        }
      }
      auto& bias = model.mutable_biases();
      for (std::size_t c = 0; c < bias.size(); ++c) {
        bias[c] -= cfg.learning_rate * step.gradient.bias[c];
      }
    }
    result.loss_trace.push_back(
        weighted_ce_loss(model, examples, result.weights, cfg.l2).loss);
  }
  return result;
}

TrainResult train(const std::vector<TrainingPair>& pairs, const TrainConfig& cfg,
                  std::uint32_t dim) {
  std::vector<Example> examples;
  examples.reserve(pairs.size());
  for (const TrainingPair& p : pairs) {
    examples.push_back({featurize(p.head, p.tail, p.sentence, dim), p.relation});
  }
  return train(examples, cfg, dim);
}

Prediction predict(const SoftmaxModel& model, const SparseVector& x) {
  Prediction out;
  const auto z = model.logits(x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < z.size(); ++c) {
    if (z[c] > z[best]) best = c;
  }
  out.probabilities = softmax(z);
  out.relation = model.labels()[best];
  return out;
}

Prediction predict(const SoftmaxModel& model, std::string_view head,
                   std::string_view tail, std::string_view sentence) {
  return predict(model, featurize(head, tail, sentence, model.dim()));
}

}  // namespace clfe
