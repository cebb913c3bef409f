#ifndef DNN2LR_SELECT_HPP_
#define DNN2LR_SELECT_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "dnn2lr/encode.hpp"
#include "dnn2lr/lr.hpp"

namespace dnn2lr {

struct SelectionResult {
  // Indices into the candidate list, in acceptance order.
  std::vector<std::size_t> accepted;
  std::vector<CrossFieldSpec> accepted_specs;
  // (step, AUC) with step 0 the original-fields-only AUC.
  std::vector<std::pair<std::size_t, double>> auc_trace;
  double base_auc = 0.0;

  double final_auc() const { return auc_trace.empty() ? base_auc : auc_trace.back().second; }

  // "rank<TAB>name1+name2<TAB>AUC after acceptance" per accepted cross field.
  void Save(const std::filesystem::path& path, const Schema& schema) const;
  static SelectionResult Load(const std::filesystem::path& path, const Schema& schema,
                              std::span<const CrossFieldSpec> candidates, double base_auc);
};

// b(-1): bias plus the weights of the first `num_original` columns.
std::vector<double> BaseScores(const LrWeights& w, const EncodedDataset& valid, std::size_t num_original);

// out[k] = prev[k] + W[valid(k, column)]
void IncrementalScore(std::span<const double> prev, const LrWeights& w, const EncodedDataset& valid,
                      std::size_t column, std::span<double> out);
std::vector<double> IncrementalScore(std::span<const double> prev, const LrWeights& w, const EncodedDataset& valid,
                                     std::size_t column);

// Greedy forward selection over candidate columns num_original + j. Each
// round scores every unselected candidate in parallel and accepts the best
// one only if it strictly beats the current AUC; ties go to the lower rank.
SelectionResult GreedySelect(const LrWeights& w, const EncodedDataset& valid, std::size_t num_original,
                             std::span<const CrossFieldSpec> candidates);

}  // namespace dnn2lr

#endif  // DNN2LR_SELECT_HPP_
