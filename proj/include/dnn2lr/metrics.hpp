#ifndef DNN2LR_METRICS_HPP_
#define DNN2LR_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

namespace dnn2lr {

struct EvalReport {
  double auc = 0.0;
  double logloss = 0.0;
  std::size_t samples = 0;
};

// Mann-Whitney AUC with midranks for ties, O(M log M). The value is
// (2 * concordant + tied) / (2 * positives * negatives), with numerator and
// denominator formed exactly in integers. Throws an undefined-AUC error when
// only one class is present.
double Auc(std::span<const std::uint8_t> labels, std::span<const double> scores);

// Mean binary cross-entropy with predictions clipped to [1e-15, 1 - 1e-15].
double LogLoss(std::span<const std::uint8_t> labels, std::span<const double> predictions);

double Sigmoid(double z);

EvalReport Evaluate(std::span<const std::uint8_t> labels, std::span<const double> predictions);

}  // namespace dnn2lr

#endif  // DNN2LR_METRICS_HPP_
