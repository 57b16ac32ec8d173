#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace icg {

// Word-level helpers shared by adjacency rows and the solver's candidate
// sets. All sets are little-endian packed: bit i lives in word i/64.
namespace bits {

inline std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

inline void set_bit(std::uint64_t* w, std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

inline void clear_bit(std::uint64_t* w, std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

inline bool test_bit(const std::uint64_t* w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1; }

inline void and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

inline std::size_t popcount(const std::uint64_t* w, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
  return c;
}

inline std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

template <typename Fn>
inline void for_each_bit(const std::uint64_t* w, std::size_t words, Fn&& fn) {
  for (std::size_t i = 0; i < words; ++i) {
    std::uint64_t x = w[i];
    while (x) {
      fn(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

}  // namespace bits

// Minimal dynamic bitset; symbol sets need set/test/count plus raw word
// access for the solver, nothing more.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_(bits::word_count(nbits), 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_size() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  void set(std::size_t i) { bits::set_bit(words_.data(), i); }
  void reset(std::size_t i) { bits::clear_bit(words_.data(), i); }
  bool test(std::size_t i) const { return bits::test_bit(words_.data(), i); }
  std::size_t count() const { return bits::popcount(words_.data(), words_.size()); }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace icg
