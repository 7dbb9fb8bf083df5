#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gk/error.hpp"

namespace gk {

// A subset of generator indices N_k = {1..k+1}, stored as a bit mask
// (bit i-1 set when generator i is present).
class GenSet {
 public:
  static constexpr int max_index = 31;

  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint32_t bits) : bits_(bits) {}

  GenSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  static GenSet from_indices(const std::vector<int>& indices) {
    GenSet s;
    for (int i : indices) s.insert(i);
    return s;
  }

  // {1..n}
  static constexpr GenSet full(int n) {
    return GenSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  void insert(int i) {
    if (i < 1 || i > max_index) throw InvalidGenerator(i, max_index);
    bits_ |= std::uint32_t{1} << (i - 1);
  }

  constexpr bool contains(int i) const {
    return i >= 1 && i <= max_index && ((bits_ >> (i - 1)) & 1u) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  // Smallest index, 0 when empty.
  constexpr int min() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }
  // Largest index, 0 when empty.
  constexpr int max() const {
    return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_);
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend constexpr GenSet operator|(GenSet a, GenSet b) {
    return GenSet(a.bits_ | b.bits_);
  }
  friend constexpr GenSet operator&(GenSet a, GenSet b) {
    return GenSet(a.bits_ & b.bits_);
  }
  friend constexpr GenSet operator^(GenSet a, GenSet b) {
    return GenSet(a.bits_ ^ b.bits_);
  }
  friend constexpr GenSet operator-(GenSet a, GenSet b) {
    return GenSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(GenSet, GenSet) = default;
  friend constexpr auto operator<=>(GenSet, GenSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace gk
