#include "binary_io.hpp"

#include <limits>
#include <string>
#include <vector>

#include "scd/error.hpp"

namespace scd::detail {

void write_short_string(std::ostream& out, std::string_view s, const char* what) {
  if (s.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw ValidationError(std::string(what) + " longer than 65535 bytes");
  }
  write_le(out, static_cast<std::uint16_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void write_f32_array(std::ostream& out, std::span<const float> values) {
  std::vector<unsigned char> buf(values.size() * 4);
  for (std::size_t i = 0; i < values.size(); ++i) {
    encode_f32(values[i], buf.data() + 4 * i);
  }
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
}

void decode_f32_array(std::span<const unsigned char> bytes, std::span<float> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = decode_f32(bytes.data() + 4 * i);
  }
}

}  // namespace scd::detail
