#include "wurkit/bits.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "wurkit/errors.hpp"

namespace wurkit {

BitStream parse_bits(std::string_view text) {
  BitStream bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1')
      throw ParseError("invalid bit character '" + std::string(1, c) + "' at position " + std::to_string(i), i);
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return bits;
}

std::string format_bits(std::span<const Bit> bits) {
  std::string s;
  s.reserve(bits.size());
  for (Bit b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::size_t hamming_distance(std::span<const Bit> a, std::span<const Bit> b) {
  if (a.size() != b.size()) throw ConfigError("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

void write_packed(std::ostream& out, std::span<const Bit> bits) {
  out << "bits=" << bits.size() << '\n';
  std::uint8_t byte = 0;
  std::size_t fill = 0;
  for (Bit b : bits) {
    byte = static_cast<std::uint8_t>((byte << 1) | (b & 1u));
    if (++fill == 8) {
      out.put(static_cast<char>(byte));
      byte = 0;
      fill = 0;
    }
  }
  if (fill != 0) out.put(static_cast<char>(byte << (8 - fill)));
}

BitStream read_packed(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("bits=", 0) != 0)
    throw ParseError("packed stream: missing 'bits=<count>' header", 0);
  std::size_t count = 0;
  try {
    std::size_t used = 0;
    count = std::stoull(header.substr(5), &used);
    if (used != header.size() - 5) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("packed stream: bad bit count in header '" + header + "'", 5);
  }
  const std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::size_t need = (count + 7) / 8;
  if (payload.size() != need)
    throw ParseError("packed stream: expected " + std::to_string(need) + " payload bytes, found " +
                         std::to_string(payload.size()),
                     header.size() + 1 + std::min(need, payload.size()));
  BitStream bits(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto byte = static_cast<std::uint8_t>(payload[i / 8]);
    bits[i] = static_cast<Bit>((byte >> (7 - i % 8)) & 1u);
  }
  return bits;
}

BitStream load_stream_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open stream file '" + path + "'");
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.rfind("bits=", 0) == 0) {
    std::istringstream packed(content);
    return read_packed(packed);
  }
  BitStream bits;
  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (c == '0' || c == '1')
      bits.push_back(static_cast<Bit>(c - '0'));
    else if (c != ' ' && c != '\n' && c != '\r' && c != '\t')
      throw ParseError("invalid bit character '" + std::string(1, c) + "' at position " + std::to_string(i), i);
  }
  return bits;
}

}  // namespace wurkit
