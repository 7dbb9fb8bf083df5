#pragma once

// Finite groups given by explicit multiplication tables. These are the
// targets of homomorphisms out of G_k.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/error.hpp"
#include "gk/limits.hpp"

namespace gk {

using Element = std::uint32_t;

class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity; throws
  // InvalidArgument on any failure. `table` is row-major: table[a*order+b]
  // is a*b.
  FiniteGroup(std::size_t order, Element identity, std::vector<Element> table,
              std::vector<std::string> labels,
              std::vector<Element> generators = {})
      : order_(order),
        identity_(identity),
        table_(std::move(table)),
        labels_(std::move(labels)),
        generators_(std::move(generators)) {
    validate();
  }

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Element>& table() const noexcept { return table_; }
  // Distinguished generators (c_i for K_{2^n}, b_1 b_2 for dihedral groups).
  const std::vector<Element>& generators() const noexcept {
    return generators_;
  }

  bool is_commutative() const {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = a + 1; b < order_; ++b) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  // g^2 = e (identity included).
  bool squares_to_identity(Element g) const { return mul(g, g) == identity_; }
  bool is_involution(Element g) const {
    return g != identity_ && squares_to_identity(g);
  }

  std::size_t element_order(Element g) const {
    std::size_t n = 1;
    for (Element x = g; x != identity_; x = mul(x, g)) ++n;
    return n;
  }

  std::vector<Element> involutions() const {
    std::vector<Element> out;
    for (Element g = 0; g < order_; ++g) {
      if (is_involution(g)) out.push_back(g);
    }
    return out;
  }

 private:
  void validate();

  std::size_t order_;
  Element identity_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::vector<Element> generators_;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Smallest subgroup containing `seeds`, sorted ascending. Its size divides
// |G| (checked).
inline std::vector<Element> generated_subgroup(
    const FiniteGroup& g, const std::vector<Element>& seeds) {
  std::vector<char> seen(g.order(), 0);
  std::deque<Element> queue{g.identity()};
  seen[g.identity()] = 1;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element s : seeds) {
      if (s >= g.order()) throw InvalidArgument("element out of range");
      const Element y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  if (g.order() % out.size() != 0) {
    throw std::logic_error("subgroup order does not divide group order");
  }
  return out;
}

inline void FiniteGroup::validate() {
  if (order_ == 0) throw InvalidArgument("group order must be positive");
  if (table_.size() != order_ * order_) {
    throw InvalidArgument("multiplication table has wrong size");
  }
  if (identity_ >= order_) throw InvalidArgument("identity out of range");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < order_; ++i) {
      labels_.push_back("g" + std::to_string(i));
    }
  }
  if (labels_.size() != order_) throw InvalidArgument("wrong label count");
  for (Element v : table_) {
    if (v >= order_) throw InvalidArgument("table entry out of range");
  }
  for (Element g : generators_) {
    if (g >= order_) throw InvalidArgument("generator out of range");
  }
  inverse_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw InvalidArgument("identity element is not two-sided");
    }
    std::size_t found = 0;
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_) {
          throw InvalidArgument("one-sided inverse in table");
        }
        inverse_[a] = b;
        ++found;
      }
    }
    if (found != 1) throw InvalidArgument("element without unique inverse");
  }
  // Latin square: every row is a permutation.
  for (Element a = 0; a < order_; ++a) {
    std::vector<char> hit(order_, 0);
    for (Element b = 0; b < order_; ++b) {
      if (hit[mul(a, b)]++) throw InvalidArgument("table is not a Latin square");
    }
  }
  if (order_ <= 64) {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        const Element ab = mul(a, b);
        for (Element c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw InvalidArgument("table is not associative");
          }
        }
      }
    }
    return;
  }
  // Light's test: checking (x s) y = x (s y) for s in a generating set
  // suffices.
  std::vector<Element> gens = generators_;
  std::vector<char> reached(order_, 0);
  auto close = [&] {
    std::fill(reached.begin(), reached.end(), 0);
    std::deque<Element> q;
    for (Element s : gens) {
      if (!reached[s]) {
        reached[s] = 1;
        q.push_back(s);
      }
    }
    while (!q.empty()) {
      const Element x = q.front();
      q.pop_front();
      for (Element s : gens) {
        for (Element y : {mul(x, s), mul(s, x)}) {
          if (!reached[y]) {
            reached[y] = 1;
            q.push_back(y);
          }
        }
      }
    }
  };
  close();
  for (Element x = 0; x < order_; ++x) {
    if (!reached[x]) {
      gens.push_back(x);
      close();
    }
  }
  for (Element s : gens) {
    for (Element x = 0; x < order_; ++x) {
      const Element xs = mul(x, s);
      for (Element y = 0; y < order_; ++y) {
        if (mul(xs, y) != mul(x, mul(s, y))) {
          throw InvalidArgument("table is not associative");
        }
      }
    }
  }
}

// K_{2^n}: elements are bit vectors of length n under XOR. c_i is bit i-1.
inline FiniteGroup elementary_abelian(int n,
                                      const Limits& limits = default_limits) {
  if (n < 1) throw InvalidArgument("elementary abelian rank must be >= 1");
  if (n > limits.max_elementary_rank) {
    throw BoundExceeded("elementary abelian rank " + std::to_string(n) +
                        " exceeds bound " +
                        std::to_string(limits.max_elementary_rank));
  }
  const std::size_t order = std::size_t{1} << n;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) table[a * order + b] = a ^ b;
    if (a == 0) {
      labels[a] = "e";
    } else {
      for (int j = 0; j < n; ++j) {
        if ((a >> j) & 1u) labels[a] += "c" + std::to_string(j + 1);
      }
    }
  }
  std::vector<Element> gens;
  for (int j = 0; j < n; ++j) gens.push_back(Element{1} << j);
  return FiniteGroup(order, 0, std::move(table), std::move(labels),
                     std::move(gens));
}

// The dihedral group of order 2n, realized as maps x -> s*x + t on Z_n with
// s = +-1. Element t + n*[s = -1]. b1 : x -> -x, b2 : x -> 1 - x, so b1 b2 is
// a rotation of order n. Generators are {b1, b2}.
inline FiniteGroup two_involution_group(int n,
                                        const Limits& limits = default_limits) {
  if (n < 2) throw InvalidArgument("two-involution group needs n >= 2");
  if (n > limits.max_dihedral_n) {
    throw BoundExceeded("two-involution group n=" + std::to_string(n) +
                        " exceeds bound " +
                        std::to_string(limits.max_dihedral_n));
  }
  const auto un = static_cast<std::size_t>(n);
  const std::size_t order = 2 * un;
  auto encode = [un](int sign, long t) {
    const auto tt = static_cast<std::size_t>(((t % static_cast<long>(un)) +
                                              static_cast<long>(un)) %
                                             static_cast<long>(un));
    return static_cast<Element>(tt + (sign < 0 ? un : 0));
  };
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const int sa = a < un ? 1 : -1;
    const long ta = static_cast<long>(a % un);
    for (std::size_t b = 0; b < order; ++b) {
      const int sb = b < un ? 1 : -1;
      const long tb = static_cast<long>(b % un);
      // (a*b)(x) = a(b(x)) = sa*(sb*x + tb) + ta
      table[a * order + b] = encode(sa * sb, sa * tb + ta);
    }
  }
  const Element identity = 0;
  const Element b1 = encode(-1, 0);
  const Element b2 = encode(-1, 1);

  // Label each element by its shortest alternating word, preferring b1 first.
  std::vector<std::string> labels(order);
  std::vector<char> seen(order, 0);
  std::deque<Element> q{identity};
  seen[identity] = 1;
  labels[identity] = "e1";
  while (!q.empty()) {
    const Element x = q.front();
    q.pop_front();
    for (auto [g, name] : {std::pair{b1, "b1"}, std::pair{b2, "b2"}}) {
      const Element y = table[x * order + g];
      if (!seen[y]) {
        seen[y] = 1;
        labels[y] = (x == identity ? std::string() : labels[x]) + name;
        q.push_back(y);
      }
    }
  }
  return FiniteGroup(order, identity, std::move(table), std::move(labels),
                     {b1, b2});
}

// Z_n under addition.
inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be >= 1");
  const auto order = static_cast<std::size_t>(n);
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      table[a * order + b] = static_cast<Element>((a + b) % order);
    }
    labels[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
  }
  std::vector<Element> gens;
  if (order > 1) gens.push_back(1);
  return FiniteGroup(order, 0, std::move(table), std::move(labels),
                     std::move(gens));
}

// G x H with element (g, h) stored as g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  auto idx = [&](Element a, Element b) {
    return static_cast<Element>(a * h.order() + b);
  };
  for (Element a = 0; a < n; ++a) {
    const Element ag = static_cast<Element>(a / h.order());
    const Element ah = static_cast<Element>(a % h.order());
    labels[a] = "(" + g.label(ag) + "," + h.label(ah) + ")";
    for (Element b = 0; b < n; ++b) {
      const Element bg = static_cast<Element>(b / h.order());
      const Element bh = static_cast<Element>(b % h.order());
      table[a * n + b] = idx(g.mul(ag, bg), h.mul(ah, bh));
    }
  }
  std::vector<Element> gens;
  for (Element s : g.generators()) gens.push_back(idx(s, h.identity()));
  for (Element s : h.generators()) gens.push_back(idx(g.identity(), s));
  return FiniteGroup(n, idx(g.identity(), h.identity()), std::move(table),
                     std::move(labels), std::move(gens));
}

enum class GroupClass { ElementaryAbelian2, TwoInvolutionDihedral, Other };

inline const char* to_string(GroupClass c) {
  switch (c) {
    case GroupClass::ElementaryAbelian2:
      return "ElementaryAbelian2";
    case GroupClass::TwoInvolutionDihedral:
      return "TwoInvolutionDihedral";
    case GroupClass::Other:
      return "Other";
  }
  return "Other";
}

inline bool is_elementary_abelian_2(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x) {
    if (!g.squares_to_identity(x)) return false;
  }
  return g.is_commutative();
}

// A pair of distinct involutions generating the whole group, if one exists.
inline std::optional<std::pair<Element, Element>> generating_involution_pair(
    const FiniteGroup& g) {
  const auto inv = g.involutions();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t j = i + 1; j < inv.size(); ++j) {
      if (generated_subgroup(g, {inv[i], inv[j]}).size() == g.order()) {
        return std::pair{inv[i], inv[j]};
      }
    }
  }
  return std::nullopt;
}

inline bool is_two_involution_generated(const FiniteGroup& g) {
  return generating_involution_pair(g).has_value();
}

inline GroupClass classify(const FiniteGroup& g) {
  if (is_elementary_abelian_2(g)) return GroupClass::ElementaryAbelian2;
  if (is_two_involution_generated(g)) return GroupClass::TwoInvolutionDihedral;
  return GroupClass::Other;
}

// JSON descriptor {order, identity, table, labels[, generators]}.
inline nlohmann::ordered_json to_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  j["identity"] = g.identity();
  j["table"] = g.table();
  j["labels"] = g.labels();
  if (!g.generators().empty()) j["generators"] = g.generators();
  return j;
}

inline FiniteGroup group_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<Element> gens;
    if (j.contains("generators")) gens = j.at("generators").get<std::vector<Element>>();
    return FiniteGroup(j.at("order").get<std::size_t>(),
                       j.at("identity").get<Element>(),
                       j.at("table").get<std::vector<Element>>(),
                       std::move(labels), std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad group descriptor: ") + e.what());
  }
}

}  // namespace gk
