#ifndef DNN2LR_REFERENCE_HPP_
#define DNN2LR_REFERENCE_HPP_

// Single-threaded counterparts of the OpenMP kernels. They follow the same
// arithmetic order so results must match the parallel versions exactly; the
// test suite and the benchmark compare the two.

#include <cstddef>
#include <span>
#include <vector>

#include "dnn2lr/candidates.hpp"
#include "dnn2lr/dnn.hpp"
#include "dnn2lr/interpret.hpp"
#include "dnn2lr/lr.hpp"
#include "dnn2lr/select.hpp"

namespace dnn2lr::reference {

std::vector<double> PredictAll(const DnnModel& model, const EncodedDataset& data);

std::vector<GradientRecord> EmbeddingGradients(const DnnModel& model, const EncodedDataset& data,
                                               GradientTarget target = GradientTarget::kProbability);

InconsistencyMatrix ComputeInconsistency(std::span<const GradientRecord> records, const GlobalWeights& global);

CrossCounts CountCrosses(const FeasibleMatrix& feasible, const InconsistencyMatrix& d, std::size_t max_order,
                         std::size_t per_sample_cap);

SelectionResult GreedySelect(const LrWeights& w, const EncodedDataset& valid, std::size_t num_original,
                             std::span<const CrossFieldSpec> candidates);

}  // namespace dnn2lr::reference

#endif  // DNN2LR_REFERENCE_HPP_
