#ifndef DNN2LR_ENCODE_HPP_
#define DNN2LR_ENCODE_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dnn2lr/data.hpp"

namespace dnn2lr {

using FeatureId = std::uint32_t;

inline constexpr std::string_view kOovToken = "__OOV__";

// Token dictionaries for every field over one global id space. Field f owns
// the contiguous range [offset(f), offset(f) + field_size(f)); the first id
// of each range is the field's out-of-vocabulary bucket.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Tokens seen at least max(min_count, 1) times in the training split get
  // an id; ids within a field follow lexicographic token order.
  static Vocabulary Build(const RawDataset& train, const Schema& schema, std::size_t min_count);

  // Appends one field fitted on a column of training tokens.
  void AddField(std::string name, std::span<const std::string> train_tokens, std::size_t min_count);

  std::size_t num_fields() const { return fields_.size(); }
  FeatureId size() const { return total_; }
  const std::string& field_name(std::size_t f) const { return fields_[f].name; }
  FeatureId offset(std::size_t f) const { return fields_[f].offset; }
  FeatureId oov_id(std::size_t f) const { return fields_[f].offset; }
  std::size_t field_size(std::size_t f) const { return fields_[f].tokens.size(); }

  FeatureId Lookup(std::size_t f, std::string_view token) const;
  // Inverse of Lookup for ids of field f; the OOV id maps to kOovToken.
  const std::string& Token(std::size_t f, FeatureId id) const;
  std::size_t FieldOf(FeatureId id) const;

  // One line per (field, token): "field<TAB>token<TAB>id".
  void Save(const std::filesystem::path& path) const;
  static Vocabulary Load(const std::filesystem::path& path);

  bool operator==(const Vocabulary& other) const;

 private:
  struct Field {
    std::string name;
    FeatureId offset = 0;
    std::vector<std::string> tokens;  // tokens[0] is kOovToken
    std::unordered_map<std::string, FeatureId> ids;
  };

  std::vector<Field> fields_;
  FeatureId total_ = 0;
};

// Dense (rows x cols) matrix of active feature ids, one per field, and labels.
class EncodedDataset {
 public:
  EncodedDataset() = default;
  EncodedDataset(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), ids_(rows * cols, 0), labels_(rows, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  FeatureId at(std::size_t r, std::size_t c) const { return ids_[r * cols_ + c]; }
  FeatureId& at(std::size_t r, std::size_t c) { return ids_[r * cols_ + c]; }
  std::span<const FeatureId> row(std::size_t r) const { return {ids_.data() + r * cols_, cols_}; }
  std::uint8_t label(std::size_t r) const { return labels_[r]; }
  std::uint8_t& label(std::size_t r) { return labels_[r]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  // First `cols` columns of every row.
  EncodedDataset LeadingColumns(std::size_t cols) const;
  // Columns of `extra` appended after this dataset's columns.
  EncodedDataset WithColumns(const EncodedDataset& extra) const;

  void Save(const std::filesystem::path& path) const;
  static EncodedDataset Load(const std::filesystem::path& path);

  bool operator==(const EncodedDataset&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FeatureId> ids_;
  std::vector<std::uint8_t> labels_;
};

// Encodes the first data.fields() vocabulary fields.
EncodedDataset Encode(const RawDataset& data, const Vocabulary& vocab);

// A sorted tuple of 2 to 4 distinct field indices naming one cross field.
class CrossFieldSpec {
 public:
  static constexpr std::size_t kMaxOrder = 4;
  static constexpr std::size_t kMaxField = 0xFFFE;

  CrossFieldSpec() = default;
  // Throws a config error unless indices are strictly increasing, within
  // kMaxField and 2..4 in number.
  explicit CrossFieldSpec(std::span<const std::size_t> fields);
  CrossFieldSpec(std::initializer_list<std::size_t> fields)
      : CrossFieldSpec(std::span<const std::size_t>(fields.begin(), fields.size())) {}

  std::size_t order() const { return order_; }
  std::size_t operator[](std::size_t i) const { return fields_[i]; }
  std::vector<std::size_t> fields() const { return {fields_.begin(), fields_.begin() + order_}; }

  // Injective packing used as a hash-map key.
  std::uint64_t key() const;
  static CrossFieldSpec FromKey(std::uint64_t key);

  // Names joined by '+', e.g. "gender+occupation".
  std::string Name(const Schema& schema) const;
  static CrossFieldSpec FromName(std::string_view name, const Schema& schema);

  // Order first, then lexicographic field tuple.
  std::strong_ordering operator<=>(const CrossFieldSpec& other) const;
  bool operator==(const CrossFieldSpec& other) const { return key() == other.key(); }

 private:
  std::array<std::uint16_t, kMaxOrder> fields_{};
  std::uint8_t order_ = 0;
};

struct CrossFieldSpecHash {
  std::size_t operator()(const CrossFieldSpec& s) const { return std::hash<std::uint64_t>{}(s.key()); }
};

// Constituent tokens joined with kCrossSeparator in spec order.
std::string CrossToken(std::span<const std::string> row, const CrossFieldSpec& spec);

struct CrossMaterialization {
  Vocabulary vocab;         // input vocabulary plus one field per spec
  EncodedDataset encoded;   // input columns plus one column per spec
};

// Appends one cross field per spec (in list order) to `vocab`, fitted on the
// training split with `min_count`, and encodes `train` with the result.
CrossMaterialization MaterializeCrosses(const RawDataset& train, const EncodedDataset& train_encoded,
                                        const Vocabulary& vocab, const Schema& schema,
                                        std::span<const CrossFieldSpec> specs, std::size_t min_count);

// Encodes the cross columns of another split with an already extended
// vocabulary; cross fields are the last specs.size() vocabulary fields.
EncodedDataset AppendCrossColumns(const RawDataset& data, const EncodedDataset& encoded, const Vocabulary& vocab,
                                  std::span<const CrossFieldSpec> specs);

}  // namespace dnn2lr

#endif  // DNN2LR_ENCODE_HPP_
