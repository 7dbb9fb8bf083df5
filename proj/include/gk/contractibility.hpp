#pragma once

// Redundancy of intersections of parity subgroups H_{A_1} ∩ ... ∩ H_{A_m}.
//
// H_A is cut out by the single GF(2) linear constraint <chi_A, p(x)> = 0,
// where p(x) is the vector of letter-count parities of x. A member of the
// intersection is redundant exactly when its characteristic vector is a sum
// of the others, so contractibility is linear dependence over GF(2).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gk/error.hpp"
#include "gk/gen_set.hpp"

namespace gk {

struct Contractibility {
  bool contractible = false;
  // 1-based position of a set lying in the span of the others.
  std::optional<std::size_t> removable;
};

// Reduced-echelon basis over GF(2) on 32-bit vectors.
class Gf2Basis {
 public:
  // Reduces v against the basis; zero means v is in the span.
  std::uint32_t reduce(std::uint32_t v) const {
    for (std::uint32_t b : rows_) {
      if ((v ^ b) < v) v ^= b;
    }
    return v;
  }

  // Returns false when v was already in the span.
  bool insert(std::uint32_t v) {
    v = reduce(v);
    if (v == 0) return false;
    rows_.push_back(v);
    // Keep rows sorted by leading bit, descending, so reduce() is one pass.
    for (std::size_t i = rows_.size() - 1;
         i > 0 && rows_[i] > rows_[i - 1]; --i) {
      std::swap(rows_[i], rows_[i - 1]);
    }
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::vector<std::uint32_t> rows_;
};

inline std::size_t gf2_rank(const std::vector<GenSet>& sets) {
  Gf2Basis basis;
  for (GenSet s : sets) basis.insert(s.bits());
  return basis.rank();
}

// Sets must be non-empty and pairwise distinct.
inline Contractibility is_contractible(const std::vector<GenSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) {
      throw InvalidArgument("intersection member " + std::to_string(i + 1) +
                            " is empty");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[i] == sets[j]) {
        throw InvalidArgument("intersection members " + std::to_string(j + 1) +
                              " and " + std::to_string(i + 1) +
                              " are equal sets");
      }
    }
  }
  Gf2Basis basis;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!basis.insert(sets[i].bits())) {
      // In the span of its predecessors, hence of all the others.
      return {true, i + 1};
    }
  }
  return {false, std::nullopt};
}

}  // namespace gk
