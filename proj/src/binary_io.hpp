#pragma once

// Little-endian encoding helpers shared by the SSEB and SSCD formats.

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <span>
#include <string_view>
#include <type_traits>

namespace scd::detail {

template <typename T>
  requires std::is_unsigned_v<T>
T decode_le(const unsigned char* p) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<T>(p[i]) << (8 * i);
  }
  return v;
}

template <typename T>
  requires std::is_unsigned_v<T>
void encode_le(T v, unsigned char* p) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    p[i] = static_cast<unsigned char>(v >> (8 * i));
  }
}

inline float decode_f32(const unsigned char* p) {
  return std::bit_cast<float>(decode_le<std::uint32_t>(p));
}

inline void encode_f32(float f, unsigned char* p) {
  encode_le(std::bit_cast<std::uint32_t>(f), p);
}

template <typename T>
void write_le(std::ostream& out, T v) {
  std::array<unsigned char, sizeof(T)> buf{};
  encode_le(v, buf.data());
  out.write(reinterpret_cast<const char*>(buf.data()), buf.size());
}

// u16 length prefix followed by the bytes. Throws ValidationError when the
// string does not fit.
void write_short_string(std::ostream& out, std::string_view s, const char* what);

void write_f32_array(std::ostream& out, std::span<const float> values);

void decode_f32_array(std::span<const unsigned char> bytes, std::span<float> out);

}  // namespace scd::detail
