#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace krdom {

// Runtime-sized bitset; enough for vertex-set masks.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  int size() const { return bits_; }

  bool operator==(const DynBitset&) const = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace krdom
