#ifndef DNN2LR_DNN_HPP_
#define DNN2LR_DNN_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dnn2lr/encode.hpp"

namespace dnn2lr {

// Which quantity embedding gradients are taken of.
enum class GradientTarget {
  kProbability,  // d sigmoid(logit) / d e
  kLogit,        // d logit / d e
};

struct DnnConfig {
  std::size_t embed_dim = 10;
  std::vector<std::size_t> hidden = {400, 100};
  double learning_rate = 0.001;
  double l2 = 0.0001;
  std::size_t epochs = 20;
  std::size_t batch_size = 256;
  // Epochs without a strict validation-AUC improvement before stopping; 0
  // disables early stopping.
  std::size_t patience = 3;
  // Stop after the first epoch whose validation AUC reaches this value.
  std::optional<double> stop_at_auc;
  std::uint64_t seed = 0;
  GradientTarget gradient_target = GradientTarget::kProbability;

  void Validate() const;
};

// Embedding layer followed by ReLU dense layers and a single sigmoid output.
// All parameters live in one flat buffer:
//   [embeddings (vocab x embed_dim) | W1 b1 | W2 b2 | ... | w_out b_out]
// with dense weights stored row-major as (out x in).
class DnnModel {
 public:
  struct Layer {
    std::size_t in = 0;
    std::size_t out = 0;
    std::size_t weight_offset = 0;
    std::size_t bias_offset = 0;
    bool operator==(const Layer&) const = default;
  };

  DnnModel() = default;
  // All parameters zero.
  DnnModel(std::size_t num_fields, std::size_t vocab_size, std::size_t embed_dim, std::vector<std::size_t> hidden);

  // Embeddings ~ U(-0.05, 0.05); dense weights ~ N(0, 2 / fan_in); biases 0.
  static DnnModel Initialize(std::size_t num_fields, std::size_t vocab_size, const DnnConfig& cfg);

  std::size_t num_fields() const { return num_fields_; }
  std::size_t vocab_size() const { return vocab_size_; }
  std::size_t embed_dim() const { return embed_dim_; }
  std::size_t input_dim() const { return num_fields_ * embed_dim_; }
  const std::vector<std::size_t>& hidden() const { return hidden_; }
  const std::vector<Layer>& layers() const { return layers_; }

  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }
  std::span<double> embedding(FeatureId id) { return {params_.data() + id * embed_dim_, embed_dim_}; }
  std::span<const double> embedding(FeatureId id) const { return {params_.data() + id * embed_dim_, embed_dim_}; }
  std::span<double> weights(std::size_t layer);
  std::span<double> bias(std::size_t layer);

  // Throws a lookup error for ids outside the embedding table or rows of the
  // wrong width.
  void CheckRow(std::span<const FeatureId> row) const;

  double Logit(std::span<const FeatureId> row) const;
  double Predict(std::span<const FeatureId> row) const;
  // Forward pass from an explicit concatenated input (num_fields * embed_dim).
  double LogitFromInput(std::span<const double> input) const;
  std::vector<double> PredictAll(const EncodedDataset& data) const;

  // Version, field count, embed_dim, vocab size and layer shapes followed by
  // the parameter buffer as little-endian float32.
  void Save(const std::filesystem::path& path) const;
  static DnnModel Load(const std::filesystem::path& path);

  bool operator==(const DnnModel&) const = default;

 private:
  std::size_t num_fields_ = 0;
  std::size_t vocab_size_ = 0;
  std::size_t embed_dim_ = 0;
  std::vector<std::size_t> hidden_;
  std::vector<Layer> layers_;
  std::vector<double> params_;
};

struct EpochLog {
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double valid_auc = 0.0;
};

struct DnnTrainResult {
  DnnModel model;
  std::vector<EpochLog> history;
  std::size_t best_epoch = 0;
  double best_valid_auc = 0.0;
};

// Adam (beta1 0.9, beta2 0.999, eps 1e-8) on mean binary cross-entropy plus
// l2 * |dense weights|^2 / 2. Returns the snapshot with the best validation
// AUC; later epochs win ties so a saturated model is preferred to the first
// one that reached the same AUC.
DnnTrainResult TrainDnn(const EncodedDataset& train, const EncodedDataset& valid, std::size_t vocab_size,
                        const DnnConfig& cfg);

// Per-sample view needed by the interpretation step.
struct GradientRecord {
  std::size_t sample = 0;
  std::size_t embed_dim = 0;
  std::vector<double> local_weights;  // (fields x embed_dim), w_{k,f}
  std::vector<double> embeddings;     // (fields x embed_dim), e_{k,f}
  double prediction = 0.0;

  std::size_t fields() const { return embed_dim ? local_weights.size() / embed_dim : 0; }
  std::span<const double> weight(std::size_t f) const { return {local_weights.data() + f * embed_dim, embed_dim}; }
  std::span<const double> embedding(std::size_t f) const { return {embeddings.data() + f * embed_dim, embed_dim}; }
};

GradientRecord EmbeddingGradient(const DnnModel& model, std::span<const FeatureId> row, std::size_t sample,
                                 GradientTarget target = GradientTarget::kProbability);

// Row-parallel over samples.
std::vector<GradientRecord> EmbeddingGradients(const DnnModel& model, const EncodedDataset& data,
                                               GradientTarget target = GradientTarget::kProbability);

}  // namespace dnn2lr

#endif  // DNN2LR_DNN_HPP_
