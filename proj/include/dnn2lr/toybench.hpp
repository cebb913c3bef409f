#ifndef DNN2LR_TOYBENCH_HPP_
#define DNN2LR_TOYBENCH_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "dnn2lr/data.hpp"
#include "dnn2lr/dnn.hpp"

namespace dnn2lr {

enum class LogicalOp { kAnd, kOr, kXnor, kXor };

inline constexpr std::array<LogicalOp, 4> kLogicalOps = {LogicalOp::kAnd, LogicalOp::kOr, LogicalOp::kXnor,
                                                         LogicalOp::kXor};

std::string_view LogicalOpName(LogicalOp op);
// Case-insensitive; throws a config error for anything but AND, OR, XNOR, XOR.
LogicalOp ParseLogicalOp(std::string_view name);
int ApplyOp(LogicalOp op, int alpha, int beta);

// Fields "alpha" and "beta" with tokens "0"/"1"; label "label" with "1"/"0".
Schema ToySchema();

struct LogicalDataset {
  LogicalOp op = LogicalOp::kXor;
  std::size_t replication = 0;
  RawDataset data;
};

// Every truth-table row `replication` times, shuffled with `seed`.
LogicalDataset Generate(LogicalOp op, std::size_t replication, std::uint64_t seed);

// d for one op: cells[a * 2 + b] = {d_alpha, d_beta} at input (a, b).
struct ToyOpResult {
  LogicalOp op = LogicalOp::kXor;
  bool converged = false;
  std::size_t attempts = 0;
  double auc = 0.0;
  std::array<std::array<double, 2>, 4> cells{};

  double mean() const;
  double max() const;
};

// d computed with the global weights taken over every row of `data`.
ToyOpResult AnalyzeToyModel(const DnnModel& model, const LogicalDataset& data,
                            GradientTarget target = GradientTarget::kProbability);

struct Assumption1Report {
  std::vector<ToyOpResult> ops;  // AND, OR, XNOR, XOR

  const ToyOpResult& at(LogicalOp op) const;
  // Mean d over XOR and XNOR cells divided by the mean over AND and OR.
  double separation_ratio() const;

  // "op<TAB>alpha<TAB>beta<TAB>d_alpha<TAB>d_beta<TAB>converged" rows.
  void WriteTsv(std::ostream& out) const;
  void WriteText(std::ostream& out) const;
};

struct ToyConfig {
  DnnConfig dnn;
  std::size_t replication = 256;
  // Extra attempts with a fresh seed for XOR and XNOR when AUC stays below 1.
  std::size_t max_retries = 5;
};

ToyConfig DefaultToyConfig();

// One DNN per op, trained on the full replicated set (also used for
// validation). The four ops run in parallel.
Assumption1Report RunAssumption1(const ToyConfig& cfg, std::uint64_t seed);

}  // namespace dnn2lr

#endif  // DNN2LR_TOYBENCH_HPP_
