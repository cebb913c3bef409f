#ifndef DNN2LR_DATA_HPP_
#define DNN2LR_DATA_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dnn2lr {

inline constexpr std::string_view kMissingToken = "__MISSING__";
inline constexpr char kCrossSeparator = '\x1f';

enum class FieldKind { kNumerical, kCategorical };

std::string_view FieldKindName(FieldKind kind);

struct FieldSpec {
  std::string name;
  FieldKind kind = FieldKind::kCategorical;
  // Position of the column in the delimited file this field is read from.
  std::size_t column_index = 0;

  bool operator==(const FieldSpec&) const = default;
};

struct Schema {
  std::vector<FieldSpec> fields;
  std::string label;
  std::string positive_label;
  // When set, label cells must be either positive_label or this token.
  std::optional<std::string> negative_label;

  std::size_t size() const { return fields.size(); }
  std::optional<std::size_t> FindField(std::string_view name) const;
  std::size_t NumNumerical() const;

  // Throws a schema error on duplicate names/columns, a label listed as a
  // feature, reserved characters in names, or an empty field list.
  void Validate() const;

  bool operator==(const Schema&) const = default;
};

Schema SchemaFromJson(const nlohmann::json& j);
nlohmann::json SchemaToJson(const Schema& schema);
Schema LoadSchema(const std::filesystem::path& path);
void SaveSchema(const Schema& schema, const std::filesystem::path& path);

enum class SplitTag { kTrain, kValid, kTest };

std::string_view SplitTagName(SplitTag tag);

// Row-major table of string tokens, one per schema field, plus binary labels.
class RawDataset {
 public:
  RawDataset() = default;
  RawDataset(std::size_t num_fields, SplitTag split) : num_fields_(num_fields), split_(split) {}

  std::size_t rows() const { return labels_.size(); }
  std::size_t fields() const { return num_fields_; }
  bool empty() const { return labels_.empty(); }
  SplitTag split() const { return split_; }
  void set_split(SplitTag split) { split_ = split; }

  std::span<const std::string> row(std::size_t r) const {
    return {tokens_.data() + r * num_fields_, num_fields_};
  }
  const std::string& token(std::size_t r, std::size_t f) const { return tokens_[r * num_fields_ + f]; }
  std::uint8_t label(std::size_t r) const { return labels_[r]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  void AddRow(std::vector<std::string> tokens, std::uint8_t label);
  void Reserve(std::size_t rows);

  // Rows [begin, end) as a new dataset.
  RawDataset Slice(std::size_t begin, std::size_t end, SplitTag split) const;

  bool operator==(const RawDataset&) const = default;

 private:
  std::size_t num_fields_ = 0;
  SplitTag split_ = SplitTag::kTrain;
  std::vector<std::string> tokens_;
  std::vector<std::uint8_t> labels_;
};

// Splits one CSV record per call. Handles RFC 4180 quoting, including quoted
// separators, doubled quotes and quoted line breaks.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Returns false at end of input. line() reports the 1-based line on which
  // the record returned last started.
  bool Next(std::vector<std::string>& cells);
  std::size_t line() const { return record_line_; }

 private:
  std::istream& in_;
  std::size_t next_line_ = 1;
  std::size_t record_line_ = 0;
};

// Quotes a cell when it contains a comma, quote or line break.
std::string CsvEscape(std::string_view cell);

RawDataset ReadCsv(std::istream& in, const Schema& schema, SplitTag split = SplitTag::kTrain);
RawDataset LoadCsv(const std::filesystem::path& path, const Schema& schema,
                   SplitTag split = SplitTag::kTrain);
// Writes a header of schema field names plus the label column, and labels as
// positive_label / negative_label (or "1"/"0" when no negative label is set).
void WriteCsv(std::ostream& out, const RawDataset& data, const Schema& schema);

// The last ceil(valid_fraction * rows) rows become the validation split.
std::pair<RawDataset, RawDataset> Split(const RawDataset& data, double valid_fraction);

}  // namespace dnn2lr

#endif  // DNN2LR_DATA_HPP_
