#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "clfe/errors.h"
#include "clfe/relclf.h"

using namespace clfe;

namespace {

// FNV-1a 64 computed byte by byte with the published constants.
std::uint64_t reference_fnv(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

TEST_CASE("fnv1a64 known vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("featurize") {
  const std::uint32_t dim = 1U << 18;
  SparseVector a = featurize("X", "X", "the cat saw the dog", dim);
  CHECK(a == featurize("X", "X", "the cat saw the dog", dim));
  const auto h = static_cast<std::uint32_t>(reference_fnv("H:x") % dim);
  const auto t = static_cast<std::uint32_t>(reference_fnv("T:x") % dim);
  const auto the = static_cast<std::uint32_t>(reference_fnv("S:the") % dim);
  CHECK(h != t);
  CHECK(a.at(h) == 1.0);
  CHECK(a.at(t) == 1.0);
  CHECK(a.at(the) == 2.0);
  for (std::size_t i = 1; i < a.entries.size(); ++i) {
    CHECK(a.entries[i - 1].first < a.entries[i].first);
  }
  CHECK_THROWS_AS(featurize("", "t", "s"), ValidationError);
  CHECK_THROWS_AS(featurize("h", " ", "s"), ValidationError);
}

TEST_CASE("class weights") {
  auto uniform = class_weights(std::map<std::string, double>{{"a", 5}, {"b", 5}});
  CHECK(uniform.at("a") == doctest::Approx(1.0));
  CHECK(uniform.at("b") == doctest::Approx(1.0));

  auto raw = raw_class_weights({{"a", 1.0}, {"b", std::exp(1.0) - 1.0}});
  CHECK(raw.at("a") == doctest::Approx(1.0 / std::log(2.0)));
  CHECK(raw.at("b") == doctest::Approx(1.0));

  auto skew = class_weights(std::map<std::string, std::size_t>{{"frequent", 1000}, {"rare", 10}});
  CHECK(skew.at("rare") > skew.at("frequent"));
  CHECK_THROWS_AS(class_weights(std::map<std::string, double>{{"a", 0}}), ValidationError);
  CHECK_THROWS_AS(class_weights(std::map<std::string, double>{}), ValidationError);
}

TEST_CASE("loss fixtures") {
  SoftmaxModel zero({"a", "b"}, 16);
  SparseVector x{16, {{3, 1.0}}};
  std::vector<Example> batch{{x, "a"}};
  auto w = uniform_weights({"a", "b"});
  CHECK(weighted_ce_loss(zero, batch, w, 0.0).loss == doctest::Approx(std::log(2.0)));

  ClassWeights doubled{{{"a", 2.0}, {"b", 1.0}}};
  CHECK(weighted_ce_loss(zero, batch, doubled, 0.0).loss ==
        doctest::Approx(2.0 * std::log(2.0)));

  std::vector<Example> bad{{x, "c"}};
  CHECK_THROWS_AS(weighted_ce_loss(zero, bad, w, 0.0), ValidationError);
  CHECK_THROWS_AS(weighted_ce_loss(zero, std::span<const Example>{}, w, 0.0), ValidationError);
}

TEST_CASE("prediction") {
  SoftmaxModel zero({"a", "b", "c"}, 64);
  Prediction p = predict(zero, "h", "t", "s");
  CHECK(p.relation == "a");
  for (double q : p.probabilities) CHECK(q == doctest::Approx(1.0 / 3.0));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  SoftmaxModel m({"a", "b", "c"}, 64);
  for (std::uint32_t f = 0; f < 64; ++f) {
    for (std::size_t c = 0; c < 3; ++c) m.mutable_weight(f, c) = u(rng);
  }
  for (int trial = 0; trial < 50; ++trial) {
    SparseVector x{64, {}};
    for (std::uint32_t f = 0; f < 64; f += 1 + rng() % 7) x.entries.emplace_back(f, u(rng));
    Prediction q = predict(m, x);
    CHECK(std::accumulate(q.probabilities.begin(), q.probabilities.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
    SoftmaxModel shifted = m;
    for (std::size_t c = 0; c < 3; ++c) shifted.mutable_bias(c) += 17.0;
    CHECK(predict(shifted, x).relation == q.relation);
  }
}

TEST_CASE("training") {
  std::vector<TrainingPair> pairs = {{"A", "x", "plays x", "sport"},
                                     {"B", "y", "born in y", "birth"},
                                     {"C", "x", "plays x well", "sport"},
                                     {"D", "z", "born in z", "birth"}};
  TrainConfig cfg;
  cfg.epochs = 0;
  TrainResult none = train(pairs, cfg, 256);
  CHECK(none.model.rows().empty());
  CHECK(none.model.labels() == std::vector<std::string>{"birth", "sport"});

  cfg.epochs = 20;
  TrainResult trained = train(pairs, cfg, 256);
  CHECK(predict(trained.model, "B", "y", "born in y").relation == "birth");
  CHECK(predict(trained.model, "A", "x", "plays x").relation == "sport");
  CHECK(SoftmaxModel::from_json(trained.model.to_json()) == trained.model);

  std::vector<TrainingPair> single = {{"A", "x", "s", "r"}, {"B", "y", "s", "r"}};
  CHECK_THROWS_AS(train(single, cfg, 256), ValidationError);
  cfg.learning_rate = 0.0;
  CHECK_THROWS_AS(train(pairs, cfg, 256), ValidationError);
}

TEST_CASE("full-batch loss is non-increasing on a convex fixture") {
  std::mt19937_64 rng(9);
  std::vector<Example> data;
  const std::vector<std::string> labels = {"a", "b", "c"};
  for (int i = 0; i < 30; ++i) {
    SparseVector x{32, {}};
    for (std::uint32_t f = 0; f < 32; f += 1 + rng() % 5) x.entries.emplace_back(f, 1.0);
    data.push_back({x, labels[rng() % 3]});
  }
  TrainConfig cfg;
  cfg.batch_size = static_cast<int>(data.size());
  cfg.epochs = 40;
  cfg.learning_rate = 0.05;
  TrainResult r = train(data, cfg, 32);
  for (std::size_t e = 1; e < r.loss_trace.size(); ++e) {
    CHECK(r.loss_trace[e] <= r.loss_trace[e - 1] + 1e-12);
  }
}

TEST_CASE("model documents are validated") {
  CHECK_THROWS_AS(SoftmaxModel::from_json("{}"), ValidationError);
  CHECK_THROWS_AS(SoftmaxModel::from_json("not json"), ValidationError);
  CHECK_THROWS_AS(SoftmaxModel({"a", "a"}, 4), ValidationError);
}
