#pragma once

#include <cstddef>
#include <cstdint>

namespace gk {

// Global size bounds. Everything in the library is exact and exhaustive, so
// these exist to keep a careless request from running forever.
struct Limits {
  int max_k = 6;
  std::size_t max_word_length = 24;
  int max_elementary_rank = 10;
  int max_dihedral_n = 30;
  std::uint64_t max_epimorphism_assignments = 10'000'000;
  std::size_t max_cosets = 1u << 16;
  std::size_t max_tree_vertices = 2'000'000;

  // Derive the coset cap from a memory budget in bytes (one transition row
  // per coset plus its representative).
  static constexpr std::size_t cosets_for_memory(std::size_t bytes,
                                                 int generator_count) {
    const std::size_t per_coset =
        static_cast<std::size_t>(generator_count) * sizeof(std::size_t) + 64;
    return bytes / per_coset;
  }
};

inline constexpr Limits default_limits{};

}  // namespace gk
