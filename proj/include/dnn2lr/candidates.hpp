#ifndef DNN2LR_CANDIDATES_HPP_
#define DNN2LR_CANDIDATES_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dnn2lr/encode.hpp"
#include "dnn2lr/interpret.hpp"

namespace dnn2lr {

using CrossCounts = std::unordered_map<CrossFieldSpec, std::uint64_t, CrossFieldSpecHash>;

struct CandidateSet {
  std::vector<std::pair<CrossFieldSpec, std::uint64_t>> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<CrossFieldSpec> specs() const;

  // "name1+name2<TAB>order<TAB>count" per line, in rank order.
  void Save(const std::filesystem::path& path, const Schema& schema) const;
  static CandidateSet Load(const std::filesystem::path& path, const Schema& schema);
};

// Feasible fields of sample k in ascending index order. When more than `cap`
// are feasible, only the `cap` with the largest inconsistency survive (ties
// go to the smaller field index).
std::vector<std::size_t> FeasibleFields(const FeasibleMatrix& feasible, const InconsistencyMatrix& d, std::size_t k,
                                        std::size_t cap);

// Every subset of size 2..max_order of each sample's (capped) feasible fields
// adds one to its cross field's count. Samples are processed in parallel with
// thread-local maps merged at the end.
CrossCounts CountCrosses(const FeasibleMatrix& feasible, const InconsistencyMatrix& d, std::size_t max_order,
                         std::size_t per_sample_cap);

// Sorted by (count desc, order asc, field tuple asc), truncated to epsilon.
CandidateSet TopCandidates(const CrossCounts& counts, std::size_t epsilon);

std::size_t DefaultEpsilon(std::size_t num_fields, std::size_t multiplier = 3);

// Number of all cross fields of order 2..max_order over num_fields fields.
std::uint64_t ExhaustiveCrossFieldCount(std::size_t num_fields, std::size_t max_order = 4);

}  // namespace dnn2lr

#endif  // DNN2LR_CANDIDATES_HPP_
