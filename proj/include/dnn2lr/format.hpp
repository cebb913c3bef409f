#ifndef DNN2LR_FORMAT_HPP_
#define DNN2LR_FORMAT_HPP_

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "dnn2lr/error.hpp"

// Helpers shared by the line-oriented text and binary artifact formats.
namespace dnn2lr {

// Shortest text that parses back to the same double.
std::string FormatDouble(double value);
double ParseDouble(std::string_view text);
std::uint64_t ParseUnsigned(std::string_view text);

std::vector<std::string> SplitString(std::string_view text, char sep);
std::string JoinStrings(const std::vector<std::string>& parts, std::string_view sep);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view content);

// Little-endian scalar IO for checkpoint-style binary files.
template <typename T>
void WriteLe(std::ostream& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  unsigned char bytes[sizeof(T)];
  std::uint64_t bits = 0;
  if constexpr (sizeof(T) == 4) {
    std::uint32_t b;
    std::memcpy(&b, &value, 4);
    bits = b;
  } else {
    static_assert(sizeof(T) == 8);
    std::memcpy(&bits, &value, 8);
  }
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T ReadLe(std::istream& in) {
  static_assert(std::is_trivially_copyable_v<T>);
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw DataError("truncated binary file");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  T value;
  if constexpr (sizeof(T) == 4) {
    const auto b = static_cast<std::uint32_t>(bits);
    std::memcpy(&value, &b, 4);
  } else {
    std::memcpy(&value, &bits, 8);
  }
  return value;
}

}  // namespace dnn2lr

#endif  // DNN2LR_FORMAT_HPP_
