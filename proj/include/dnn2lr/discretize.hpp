#ifndef DNN2LR_DISCRETIZE_HPP_
#define DNN2LR_DISCRETIZE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnn2lr/data.hpp"

namespace dnn2lr {

// Quantile cut points of one numerical field at one granularity. A value v
// falls into bin i = #{cut points < v}.
struct BinBoundaries {
  std::string source_field;
  std::size_t granularity = 0;
  std::vector<double> cut_points;

  std::size_t BinOf(double value) const;
  bool operator==(const BinBoundaries&) const = default;
};

// Parses a token as a finite real. Missing, empty, non-numeric and
// non-finite tokens yield nullopt.
std::optional<double> ParseFinite(std::string_view token);

// Nearest-rank quantiles of the parseable values of `field` at i/granularity,
// i = 1..granularity-1, with duplicates collapsed.
BinBoundaries FitBins(const RawDataset& train, const Schema& schema, std::size_t field, std::size_t granularity);

// Nearest-rank cut points over already-sorted values.
std::vector<double> QuantileCutPoints(std::span<const double> sorted, std::size_t granularity);

// Maps a raw token to "b<i>", or the missing token when it does not parse.
std::string ApplyBins(std::string_view token, const BinBoundaries& bins);
std::vector<std::string> ApplyBins(const RawDataset& data, std::size_t field, const BinBoundaries& bins);

std::string DerivedFieldName(std::string_view field, std::size_t granularity);

// Replaces every numerical field, in place, by one categorical field per
// granularity named "<field>@q<g>". Column indices of the result are the
// positions in the expanded field list.
Schema ExpandSchema(const Schema& schema, std::span<const std::size_t> granularities);

// Fitted boundaries for every numerical field of a raw schema, ordered as the
// derived fields appear in the expanded schema.
class Discretizer {
 public:
  Discretizer() = default;

  // Fields are fitted in parallel.
  static Discretizer Fit(const RawDataset& train, const Schema& schema, std::span<const std::size_t> granularities);

  const Schema& raw_schema() const { return raw_schema_; }
  const Schema& expanded_schema() const { return expanded_schema_; }
  const std::vector<BinBoundaries>& bins() const { return bins_; }

  // Rewrites a dataset in the raw schema into the expanded schema.
  RawDataset Transform(const RawDataset& data) const;

  // One line per derived field: "name<TAB>granularity<TAB>c1,c2,...".
  void Save(const std::filesystem::path& path) const;
  static Discretizer Load(const std::filesystem::path& path, const Schema& raw_schema,
                          std::span<const std::size_t> granularities);

 private:
  Schema raw_schema_;
  Schema expanded_schema_;
  std::vector<std::size_t> granularities_;
  std::vector<BinBoundaries> bins_;
};

}  // namespace dnn2lr

#endif  // DNN2LR_DISCRETIZE_HPP_
