#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wurkit {

using Bit = std::uint8_t;
using BitStream = std::vector<Bit>;

// Parses a string of '0'/'1'. Any other character raises ParseError carrying
// its position.
BitStream parse_bits(std::string_view text);

std::string format_bits(std::span<const Bit> bits);

std::size_t hamming_distance(std::span<const Bit> a, std::span<const Bit> b);

// Packed stream files: a first line "bits=<count>\n" followed by the bits
// packed most-significant-bit first; the final byte is zero padded.
void write_packed(std::ostream& out, std::span<const Bit> bits);
BitStream read_packed(std::istream& in);

// Reads either a packed file (detected by its "bits=" header) or an ASCII
// file of '0'/'1' characters; whitespace is ignored in the ASCII form.
BitStream load_stream_file(const std::string& path);

}  // namespace wurkit
