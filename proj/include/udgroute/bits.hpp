#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace udgroute {

/// Number of bits needed to write any value in [0, max_value].
inline unsigned bits_for(std::uint64_t max_value) {
  unsigned w = 0;
  while (max_value > 0) {
    ++w;
    max_value >>= 1;
  }
  return w == 0 ? 1 : w;
}

/// Width of a vertex identifier in an n-vertex graph: ceil(log2 n), at least 1.
inline unsigned id_width(std::size_t n) { return n <= 2 ? 1 : bits_for(n - 1); }

/// Field widths shared by every label encoding of one graph.
struct BitLayout {
  std::size_t n = 0;
  unsigned id = 1;       // vertex ids and postorder numbers
  unsigned count = 1;    // list lengths (up to n)
  unsigned exits = 1;    // exit-list lengths (up to floor(log2 n))
  unsigned distance = 1; // quantized distances (up to n^2)

  static BitLayout for_graph(std::size_t n) {
    BitLayout l;
    l.n = n;
    l.id = id_width(n);
    l.count = bits_for(n);
    l.exits = bits_for(bits_for(n));
    l.distance = bits_for(static_cast<std::uint64_t>(n) * n);
    return l;
  }
};

class BitWriter {
 public:
  void write(std::uint64_t value, unsigned width);
  void write_bit(bool b) { write(b ? 1 : 0, 1); }

  std::size_t bit_count() const { return bits_; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t read(unsigned width);
  bool read_bit() { return read(1) != 0; }
  std::size_t position() const { return pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace udgroute
