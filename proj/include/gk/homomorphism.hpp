#pragma once

// Homomorphisms G_k -> finite group, determined by generator images.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/error.hpp"
#include "gk/finite_group.hpp"
#include "gk/gen_set.hpp"
#include "gk/limits.hpp"
#include "gk/word.hpp"

namespace gk {

// A0 together with ordered, non-empty, disjoint blocks A_1..A_n covering
// N_k \ A0.
class BlockPartition {
 public:
  BlockPartition(const GroupContext& ctx, std::vector<GenSet> blocks)
      : ctx_(ctx), blocks_(std::move(blocks)) {
    GenSet used;
    for (GenSet b : blocks_) {
      ctx_.check(b);
      if (b.empty()) throw InvalidArgument("partition block must be non-empty");
      if ((used & b) != GenSet{}) {
        throw InvalidArgument("partition blocks must be disjoint");
      }
      used = used | b;
    }
    rest_ = ctx_.generators() - used;
  }

  // Checks that `a0` is exactly the complement of the blocks.
  BlockPartition(const GroupContext& ctx, GenSet a0, std::vector<GenSet> blocks)
      : BlockPartition(ctx, std::move(blocks)) {
    if (a0 != rest_) {
      throw InvalidArgument("A0 " + a0.to_string() +
                            " is not the complement of the blocks (" +
                            rest_.to_string() + ")");
    }
  }

  const GroupContext& context() const noexcept { return ctx_; }
  GenSet a0() const noexcept { return rest_; }
  const std::vector<GenSet>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  // 1-based block holding generator i, 0 when i is in A0.
  std::size_t block_of(int i) const {
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      if (blocks_[j].contains(i)) return j + 1;
    }
    return 0;
  }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  GroupContext ctx_;
  std::vector<GenSet> blocks_;
  GenSet rest_;
};

// Every ordered two-block partition (A0, A1, A2) of N_k.
inline std::vector<BlockPartition> two_block_partitions(
    const GroupContext& ctx) {
  std::vector<BlockPartition> out;
  const int n = ctx.generator_count();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    GenSet b1, b2;
    std::size_t c = code;
    for (int i = 1; i <= n; ++i, c /= 3) {
      if (c % 3 == 1) b1.insert(i);
      if (c % 3 == 2) b2.insert(i);
    }
    if (!b1.empty() && !b2.empty()) out.emplace_back(ctx, std::vector{b1, b2});
  }
  return out;
}

struct ParityHomParams {
  std::vector<GenSet> sets;
};
struct TwoGenHomParams {
  BlockPartition partition;
  // Order-2n dihedral target when set; otherwise an explicit group.
  std::optional<int> n;
  Element b1 = 0;
  Element b2 = 0;
};
struct ExplicitHomParams {};

class Homomorphism {
 public:
  using Params = std::variant<ParityHomParams, TwoGenHomParams, ExplicitHomParams>;

  // Images are listed for a_1..a_{k+1}; each must square to the identity.
  Homomorphism(const GroupContext& ctx, GroupPtr target,
               std::vector<Element> images, Params params = ExplicitHomParams{})
      : ctx_(ctx),
        target_(std::move(target)),
        images_(std::move(images)),
        params_(std::move(params)) {
    if (!target_) throw InvalidArgument("homomorphism without target");
    if (images_.size() != static_cast<std::size_t>(ctx_.generator_count())) {
      throw InvalidArgument("need one image per generator");
    }
    for (Element g : images_) {
      if (g >= target_->order()) throw InvalidArgument("image out of range");
      if (!target_->squares_to_identity(g)) {
        throw InvalidArgument("generator image " + target_->label(g) +
                              " does not square to the identity");
      }
    }
  }

  const GroupContext& context() const noexcept { return ctx_; }
  const FiniteGroup& target() const noexcept { return *target_; }
  const GroupPtr& target_ptr() const noexcept { return target_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  Element image(int i) const {
    ctx_.check(i);
    return images_[static_cast<std::size_t>(i - 1)];
  }
  const Params& params() const noexcept { return params_; }

 private:
  GroupContext ctx_;
  GroupPtr target_;
  std::vector<Element> images_;
  Params params_;
};

// Left-to-right product of generator images.
inline Element evaluate(const Homomorphism& h, const Word& x) {
  require_same(h.context(), x.context());
  const FiniteGroup& g = h.target();
  Element acc = g.identity();
  for (int i : x.letters()) {
    acc = g.mul(acc, h.images()[static_cast<std::size_t>(i - 1)]);
  }
  return acc;
}

// phi(G_k) as a subset of the target.
inline std::vector<Element> image_subgroup(const Homomorphism& h) {
  return generated_subgroup(h.target(), h.images());
}

inline bool is_epimorphism(const Homomorphism& h) {
  return image_subgroup(h).size() == h.target().order();
}

// a_i -> product of c_j over the j with i in A_j, into K_{2^n}.
inline Homomorphism parity_hom(const std::vector<GenSet>& sets,
                               const GroupContext& ctx,
                               const Limits& limits = default_limits) {
  if (sets.empty()) throw InvalidArgument("parity_hom needs at least one set");
  for (GenSet a : sets) {
    ctx.check(a);
    if (a.empty()) throw InvalidArgument("parity_hom set must be non-empty");
  }
  auto target = std::make_shared<const FiniteGroup>(
      elementary_abelian(static_cast<int>(sets.size()), limits));
  std::vector<Element> images;
  for (int i = 1; i <= ctx.generator_count(); ++i) {
    Element bits = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[j].contains(i)) bits |= Element{1} << j;
    }
    images.push_back(bits);
  }
  return Homomorphism(ctx, std::move(target), std::move(images),
                      ParityHomParams{sets});
}

// a_i -> e (A0), b1 (B1), b2 (B2), with b1 b2 chosen involutions generating
// the target.
inline Homomorphism two_gen_hom(const BlockPartition& p, GroupPtr target,
                                Element b1, Element b2) {
  if (p.block_count() != 2) {
    throw InvalidArgument("two_gen_hom needs exactly two blocks, got " +
                          std::to_string(p.block_count()));
  }
  if (!target) throw InvalidArgument("two_gen_hom without target");
  if (b1 >= target->order() || b2 >= target->order() ||
      !target->is_involution(b1) || !target->is_involution(b2)) {
    throw InvalidArgument("b1 and b2 must be involutions of the target");
  }
  if (generated_subgroup(*target, {b1, b2}).size() != target->order()) {
    throw InvalidArgument("b1 and b2 do not generate the target");
  }
  std::vector<Element> images;
  for (int i = 1; i <= p.context().generator_count(); ++i) {
    switch (p.block_of(i)) {
      case 0:
        images.push_back(target->identity());
        break;
      case 1:
        images.push_back(b1);
        break;
      default:
        images.push_back(b2);
        break;
    }
  }
  return Homomorphism(p.context(), std::move(target), std::move(images),
                      TwoGenHomParams{p, std::nullopt, b1, b2});
}

// Target is the dihedral group of order 2n with its standard b1, b2.
inline Homomorphism two_gen_hom(const BlockPartition& p, int n,
                                const Limits& limits = default_limits) {
  auto g = std::make_shared<const FiniteGroup>(two_involution_group(n, limits));
  const Element b1 = g->generators()[0];
  const Element b2 = g->generators()[1];
  Homomorphism h = two_gen_hom(p, std::move(g), b1, b2);
  return Homomorphism(h.context(), h.target_ptr(), h.images(),
                      TwoGenHomParams{p, n, b1, b2});
}

// Every generator assignment (images squaring to the identity) whose image
// is all of G, in lexicographic order of the image tuple.
inline std::vector<Homomorphism> epimorphism_search(
    const GroupContext& ctx, const GroupPtr& target,
    const Limits& limits = default_limits) {
  if (!target) throw InvalidArgument("epimorphism_search without target");
  const auto gens = static_cast<std::size_t>(ctx.generator_count());
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < gens; ++i) {
    space *= target->order();
    if (space > limits.max_epimorphism_assignments) {
      throw BoundExceeded("epimorphism search space |G|^(k+1) exceeds " +
                          std::to_string(limits.max_epimorphism_assignments));
    }
  }
  std::vector<Element> candidates;
  for (Element g = 0; g < target->order(); ++g) {
    if (target->squares_to_identity(g)) candidates.push_back(g);
  }
  std::vector<Homomorphism> out;
  std::vector<std::size_t> digit(gens, 0);
  std::vector<Element> images(gens);
  while (true) {
    for (std::size_t i = 0; i < gens; ++i) images[i] = candidates[digit[i]];
    if (generated_subgroup(*target, images).size() == target->order()) {
      out.emplace_back(ctx, target, images);
    }
    bool wrapped = true;
    for (std::size_t pos = gens; pos-- > 0;) {
      if (++digit[pos] < candidates.size()) {
        wrapped = false;
        break;
      }
      digit[pos] = 0;
    }
    if (wrapped) return out;
  }
}

inline nlohmann::ordered_json sets_to_json(const std::vector<GenSet>& sets) {
  auto arr = nlohmann::ordered_json::array();
  for (GenSet s : sets) arr.push_back(s.indices());
  return arr;
}

inline std::vector<GenSet> sets_from_json(const nlohmann::json& j) {
  std::vector<GenSet> out;
  for (const auto& s : j) {
    out.push_back(GenSet::from_indices(s.get<std::vector<int>>()));
  }
  return out;
}

// Descriptor {kind: "parity"|"two_gen"|"explicit", k, ...}.
inline nlohmann::ordered_json to_json(const Homomorphism& h) {
  nlohmann::ordered_json j;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ParityHomParams>) {
          j["kind"] = "parity";
          j["k"] = h.context().k();
          j["sets"] = sets_to_json(p.sets);
        } else if constexpr (std::is_same_v<P, TwoGenHomParams>) {
          j["kind"] = "two_gen";
          j["k"] = h.context().k();
          j["blocks"] = sets_to_json(p.partition.blocks());
          if (p.n) {
            j["target"] = {{"family", "two_involution"}, {"n", *p.n}};
          } else {
            j["target"] = to_json(h.target());
            j["involutions"] = {p.b1, p.b2};
          }
        } else {
          j["kind"] = "explicit";
          j["k"] = h.context().k();
          j["target"] = to_json(h.target());
          j["images"] = h.images();
        }
      },
      h.params());
  return j;
}

inline Homomorphism homomorphism_from_json(
    const nlohmann::json& j, const Limits& limits = default_limits) {
  try {
    const GroupContext ctx(j.at("k").get<int>(), limits);
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "parity") {
      return parity_hom(sets_from_json(j.at("sets")), ctx, limits);
    }
    if (kind == "two_gen") {
      BlockPartition p(ctx, sets_from_json(j.at("blocks")));
      const auto& t = j.at("target");
      if (t.contains("family")) {
        if (t.at("family") != "two_involution") {
          throw InvalidArgument("unknown target family");
        }
        return two_gen_hom(p, t.at("n").get<int>(), limits);
      }
      auto g = std::make_shared<const FiniteGroup>(group_from_json(t));
      const auto inv = j.at("involutions").get<std::vector<Element>>();
      if (inv.size() != 2) throw InvalidArgument("need two involutions");
      return two_gen_hom(p, std::move(g), inv[0], inv[1]);
    }
    if (kind == "explicit") {
      auto g = std::make_shared<const FiniteGroup>(group_from_json(j.at("target")));
      return Homomorphism(ctx, std::move(g),
                          j.at("images").get<std::vector<Element>>());
    }
    throw InvalidArgument("unknown homomorphism kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad homomorphism descriptor: ") +
                          e.what());
  }
}

}  // namespace gk
