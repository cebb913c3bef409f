#ifndef DNN2LR_ERROR_HPP_
#define DNN2LR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dnn2lr {

// Every failure surfaced by the library carries one of these categories; the
// CLI prints the category as the first token of its one-line error message.
enum class ErrorCategory {
  kSchema,
  kData,
  kConfig,
  kFit,
  kTraining,
  kLookup,
  kUndefinedAuc,
  kDependency,
  kIntegrity,
  kIo,
};

std::string_view CategoryName(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

inline Error SchemaError(const std::string& m) { return {ErrorCategory::kSchema, m}; }
inline Error DataError(const std::string& m) { return {ErrorCategory::kData, m}; }
inline Error ConfigError(const std::string& m) { return {ErrorCategory::kConfig, m}; }
inline Error FitError(const std::string& m) { return {ErrorCategory::kFit, m}; }
inline Error TrainingError(const std::string& m) { return {ErrorCategory::kTraining, m}; }
inline Error LookupError(const std::string& m) { return {ErrorCategory::kLookup, m}; }
inline Error UndefinedAucError(const std::string& m) { return {ErrorCategory::kUndefinedAuc, m}; }
inline Error DependencyError(const std::string& m) { return {ErrorCategory::kDependency, m}; }
inline Error IntegrityError(const std::string& m) { return {ErrorCategory::kIntegrity, m}; }
inline Error IoError(const std::string& m) { return {ErrorCategory::kIo, m}; }

}  // namespace dnn2lr

#endif  // DNN2LR_ERROR_HPP_
