#ifndef DNN2LR_DIGEST_HPP_
#define DNN2LR_DIGEST_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace dnn2lr {

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);
std::string Sha256File(const std::filesystem::path& path);

}  // namespace dnn2lr

#endif  // DNN2LR_DIGEST_HPP_
