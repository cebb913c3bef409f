#ifndef DNN2LR_LR_HPP_
#define DNN2LR_LR_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dnn2lr/encode.hpp"

namespace dnn2lr {

inline constexpr std::array<double, 6> kLrLearningRateGrid = {0.005, 0.01, 0.05, 0.1, 0.5, 1.0};
inline constexpr std::array<double, 5> kLrL2Grid = {0.0001, 0.001, 0.01, 0.1, 1.0};

struct LrConfig {
  double learning_rate = 0.05;
  double l2 = 0.001;
  std::size_t epochs = 10;
  // Epochs without a strict validation-AUC improvement before stopping; 0
  // disables early stopping.
  std::size_t patience = 3;
  std::uint64_t seed = 0;
  // Train every (learning_rate, l2) pair of the grids above and keep the one
  // with the best validation AUC.
  bool grid_search = false;

  void Validate() const;
};

// One scalar weight per feature id plus a global bias.
struct LrWeights {
  std::vector<double> weights;
  double bias = 0.0;

  // "field<TAB>token<TAB>weight" per feature in id order, then a
  // "__bias__<TAB><TAB>value" line.
  void Save(const std::filesystem::path& path, const Vocabulary& vocab) const;
  static LrWeights Load(const std::filesystem::path& path, const Vocabulary& vocab);

  bool operator==(const LrWeights&) const = default;
};

// bias + sum of the active feature weights over `fields` (bias counted once).
double ScoreFieldSum(const LrWeights& w, std::span<const FeatureId> row, std::span<const std::size_t> fields);

// ScoreFieldSum over the first `cols` columns of every row.
std::vector<double> ScoreLeadingColumns(const LrWeights& w, const EncodedDataset& data, std::size_t cols);

struct LrTrainResult {
  LrWeights weights;
  LrConfig chosen;
  double best_valid_auc = 0.0;
  std::size_t best_epoch = 0;
};

// Per-sample SGD on binary cross-entropy of sigmoid(bias + sum W[active]);
// each step shrinks the active weights by l2 * w. Returns the snapshot with
// the best validation AUC, later epochs winning ties.
LrTrainResult TrainLr(const EncodedDataset& train, const EncodedDataset& valid, std::size_t vocab_size,
                      const LrConfig& cfg);

}  // namespace dnn2lr

#endif  // DNN2LR_LR_HPP_
