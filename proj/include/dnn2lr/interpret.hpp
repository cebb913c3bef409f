#ifndef DNN2LR_INTERPRET_HPP_
#define DNN2LR_INTERPRET_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dnn2lr/dnn.hpp"

namespace dnn2lr {

// Per-field mean of the local gradient vectors over a sample set.
struct GlobalWeights {
  std::size_t embed_dim = 0;
  std::vector<double> values;  // (fields x embed_dim)

  std::size_t fields() const { return embed_dim ? values.size() / embed_dim : 0; }
  std::span<const double> weight(std::size_t f) const { return {values.data() + f * embed_dim, embed_dim}; }
};

GlobalWeights ComputeGlobalWeights(std::span<const GradientRecord> records);

// w_{k,f} . e_{k,f}
double LocalInterpretation(const GradientRecord& record, std::size_t field);
// mean_w_f . e_{k,f}
double GlobalInterpretation(const GradientRecord& record, const GlobalWeights& global, std::size_t field);
// |(w_{k,f} - mean_w_f) . e_{k,f}|
double Inconsistency(const GradientRecord& record, const GlobalWeights& global, std::size_t field);

// Row-major (samples x fields) matrix of reals.
class InconsistencyMatrix {
 public:
  InconsistencyMatrix() = default;
  InconsistencyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return values_.size(); }
  double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  double& at(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols_, cols_}; }
  std::span<const double> values() const { return values_; }

  void WriteTsv(std::ostream& out) const;
  bool operator==(const InconsistencyMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Row-parallel over samples.
InconsistencyMatrix ComputeInconsistency(std::span<const GradientRecord> records, const GlobalWeights& global);

// Binary mask of feasible (sample, field) cells.
class FeasibleMatrix {
 public:
  FeasibleMatrix() = default;
  FeasibleMatrix(std::size_t rows, std::size_t cols, double eta, double threshold)
      : rows_(rows), cols_(cols), eta_(eta), threshold_(threshold), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double eta() const { return eta_; }
  double threshold() const { return threshold_; }
  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }
  std::size_t ones() const;

  void WriteTsv(std::ostream& out) const;
  bool operator==(const FeasibleMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  double eta_ = 0.0;
  double threshold_ = 0.0;
  std::vector<std::uint8_t> bits_;
};

// Number of entries the top-eta set must hold at least: ceil(eta * total),
// clamped to [1, total].
std::size_t TopCount(double eta, std::size_t total);

// Nearest-rank threshold: the value at ascending 1-based rank
// total - TopCount(eta, total) + 1 over all entries.
double QuantileThreshold(const InconsistencyMatrix& d, double eta);

// D*[k][f] = 1 iff D[k][f] >= QuantileThreshold(D, eta); ties all included.
FeasibleMatrix FeasibleFilter(const InconsistencyMatrix& d, double eta);

struct Interpretation {
  GlobalWeights global;
  InconsistencyMatrix inconsistency;
  FeasibleMatrix feasible;

  // Binary dump: magic, shape, eta, threshold, D as float64, D* as bytes.
  void Save(const std::filesystem::path& path) const;
  static Interpretation Load(const std::filesystem::path& path);
  // "field<TAB>w_1,...,w_d"
  void SaveGlobalWeights(const std::filesystem::path& path, std::span<const std::string> field_names) const;
};

Interpretation Interpret(std::span<const GradientRecord> records, double eta);

}  // namespace dnn2lr

#endif  // DNN2LR_INTERPRET_HPP_
