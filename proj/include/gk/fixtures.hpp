#pragma once

// Named small groups used as homomorphism targets by the verification
// suites.

#include <string>
#include <vector>

#include "gk/finite_group.hpp"

namespace gk {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

// Z_{n1} x Z_{n2} x ...
inline FiniteGroup abelian_group(const std::vector<int>& factors) {
  FiniteGroup g = cyclic_group(1);
  for (int n : factors) g = direct_product(g, cyclic_group(n));
  return g;
}

inline std::string abelian_name(const std::vector<int>& factors) {
  std::string s;
  for (int n : factors) {
    if (!s.empty()) s += "x";
    s += "Z" + std::to_string(n);
  }
  return s;
}

// One abelian group of each isomorphism type with 2 <= order <= 16, by
// invariant factors.
inline std::vector<NamedGroup> abelian_fixtures() {
  const std::vector<std::vector<int>> types = {
      {2},     {3},        {4},       {2, 2},    {5},        {6},
      {7},     {8},        {2, 4},    {2, 2, 2}, {9},        {3, 3},
      {10},    {11},       {12},      {2, 6},    {13},       {14},
      {15},    {16},       {2, 8},    {4, 4},    {2, 2, 4},  {2, 2, 2, 2}};
  std::vector<NamedGroup> out;
  for (const auto& t : types) out.push_back({abelian_name(t), abelian_group(t)});
  return out;
}

// Every group of odd order between 3 and 15 (all are abelian).
inline std::vector<NamedGroup> odd_order_fixtures() {
  const std::vector<std::vector<int>> types = {{3},  {5},  {7},  {9}, {3, 3},
                                               {11}, {13}, {15}};
  std::vector<NamedGroup> out;
  for (const auto& t : types) out.push_back({abelian_name(t), abelian_group(t)});
  return out;
}

}  // namespace gk
