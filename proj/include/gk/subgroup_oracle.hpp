#pragma once

// Membership predicates for the subgroup families of G_k: parity subgroups
// H_A, their intersections, kernels of maps onto two-involution groups, and
// the index-three subgroups Σ_{A1A2}.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/contractibility.hpp"
#include "gk/error.hpp"
#include "gk/finite_group.hpp"
#include "gk/gen_set.hpp"
#include "gk/homomorphism.hpp"
#include "gk/limits.hpp"
#include "gk/word.hpp"

namespace gk {

enum class Normality { CertifiedNormal, Unknown };

inline const char* to_string(Normality n) {
  return n == Normality::CertifiedNormal ? "CertifiedNormal" : "Unknown";
}

// (A0, A1, A2) with A1, A2 non-empty and m_j = min A_j.
class IndexThreeSpec {
 public:
  IndexThreeSpec(const GroupContext& ctx, GenSet a1, GenSet a2)
      : partition_(ctx, {a1, a2}) {}
  IndexThreeSpec(const GroupContext& ctx, GenSet a0, GenSet a1, GenSet a2)
      : partition_(ctx, a0, {a1, a2}) {}

  const GroupContext& context() const noexcept {
    return partition_.context();
  }
  const BlockPartition& partition() const noexcept { return partition_; }
  GenSet a0() const noexcept { return partition_.a0(); }
  GenSet a1() const noexcept { return partition_.blocks()[0]; }
  GenSet a2() const noexcept { return partition_.blocks()[1]; }
  int m1() const noexcept { return a1().min(); }
  int m2() const noexcept { return a2().min(); }

  IndexThreeSpec swapped() const {
    return IndexThreeSpec(context(), a0(), a2(), a1());
  }

 private:
  BlockPartition partition_;
};

// Substitute a_i -> e (A0), a_{m_j} (A_j) in a word, then reduce. The result
// alternates between the two letters given for the blocks.
inline Word project_two_blocks(const BlockPartition& p, int letter1,
                               int letter2, const Word& x) {
  require_same(p.context(), x.context());
  std::vector<int> raw;
  raw.reserve(x.length());
  for (int i : x.letters()) {
    switch (p.block_of(i)) {
      case 0:
        break;
      case 1:
        raw.push_back(letter1);
        break;
      default:
        raw.push_back(letter2);
        break;
    }
  }
  return reduce(raw, p.context());
}

// u_{A1A2}(x)
inline Word u_image(const IndexThreeSpec& spec, const Word& x) {
  return project_two_blocks(spec.partition(), spec.m1(), spec.m2(), x);
}

// The recursive collapse γ on alternating words in two letters: a word of
// length <= 2 maps to e or its last letter, and a longer word
// y_1 ... y_{n-2} y_{n-1} y_n maps to γ(y_1 ... y_{n-2} · γ(y_{n-1} y_n)).
inline Word gamma_reduce(const Word& w) {
  const auto letters = w.letters();
  if (!letters.empty()) {
    const int first = letters[0];
    int other = 0;
    for (int i : letters) {
      if (i == first) continue;
      if (other == 0) other = i;
      if (i != other) {
        throw InvalidArgument("gamma_reduce needs a word in two letters, got " +
                              to_string(w));
      }
    }
  }
  std::vector<int> s(letters.begin(), letters.end());
  while (s.size() >= 3) {
    // γ(y_{n-1} y_n) = y_n, which meets y_{n-2} = y_n and cancels.
    const int last = s.back();
    s.pop_back();
    s.pop_back();
    if (!s.empty() && s.back() == last) {
      s.pop_back();
    } else {
      s.push_back(last);
    }
  }
  if (s.size() == 2) s.erase(s.begin());
  return reduce(s, w.context());
}

struct ParityParams {
  GenSet a;
};
struct IntersectionParams {
  std::vector<GenSet> sets;
};
struct TwoGenKernelParams {
  BlockPartition partition;
  int n;
  // Built with the scope override; index 2n is then unverified.
  bool unverified_scope;
  std::shared_ptr<const Homomorphism> hom;
};
struct IndexThreeParams {
  IndexThreeSpec spec;
};
struct KernelParams {
  std::shared_ptr<const Homomorphism> hom;
};

class SubgroupOracle {
 public:
  using Params = std::variant<ParityParams, IntersectionParams,
                              TwoGenKernelParams, IndexThreeParams,
                              KernelParams>;

  SubgroupOracle(const GroupContext& ctx, Params params,
                 std::optional<std::size_t> claimed_index, Normality normality)
      : ctx_(ctx),
        params_(std::move(params)),
        claimed_index_(claimed_index),
        normality_(normality) {}

  const GroupContext& context() const noexcept { return ctx_; }
  const Params& params() const noexcept { return params_; }
  std::optional<std::size_t> claimed_index() const noexcept {
    return claimed_index_;
  }
  Normality normality() const noexcept { return normality_; }
  bool certified_normal() const noexcept {
    return normality_ == Normality::CertifiedNormal;
  }

  const char* kind_name() const {
    static constexpr const char* names[] = {
        "parity", "parity_intersection", "two_gen_kernel", "index_three",
        "kernel"};
    return names[params_.index()];
  }

  bool contains(const Word& x) const {
    require_same(ctx_, x.context());
    return std::visit([&](const auto& p) { return member(p, x); }, params_);
  }

 private:
  static bool member(const ParityParams& p, const Word& x) {
    return letter_count(x, p.a) % 2 == 0;
  }
  static bool member(const IntersectionParams& p, const Word& x) {
    for (GenSet a : p.sets) {
      if (letter_count(x, a) % 2 != 0) return false;
    }
    return true;
  }
  static bool member(const TwoGenKernelParams& p, const Word& x) {
    return evaluate(*p.hom, x) == p.hom->target().identity();
  }
  static bool member(const IndexThreeParams& p, const Word& x) {
    return gamma_reduce(u_image(p.spec, x)).is_identity();
  }
  static bool member(const KernelParams& p, const Word& x) {
    return evaluate(*p.hom, x) == p.hom->target().identity();
  }

  GroupContext ctx_;
  Params params_;
  std::optional<std::size_t> claimed_index_;
  Normality normality_;
};

// H_A: words whose letters from A occur an even number of times in total.
inline SubgroupOracle parity_oracle(GenSet a, const GroupContext& ctx) {
  ctx.check(a);
  if (a.empty()) throw InvalidArgument("parity subgroup needs non-empty A");
  return SubgroupOracle(ctx, ParityParams{a}, 2, Normality::CertifiedNormal);
}

// ∩_j H_{A_j} for a non-contractible family; index 2^m.
inline SubgroupOracle intersection_oracle(const std::vector<GenSet>& sets,
                                          const GroupContext& ctx) {
  if (sets.empty()) throw InvalidArgument("intersection of no sets");
  for (GenSet a : sets) ctx.check(a);
  const Contractibility c = is_contractible(sets);
  if (c.contractible) throw ContractibleIntersection(*c.removable);
  if (sets.size() >= 8 * sizeof(std::size_t)) {
    throw BoundExceeded("too many intersection members");
  }
  return SubgroupOracle(ctx, IntersectionParams{sets},
                        std::size_t{1} << sets.size(),
                        Normality::CertifiedNormal);
}

// Ker φ: normal by construction, index |φ(G_k)|.
inline SubgroupOracle kernel_oracle(const Homomorphism& h) {
  auto hom = std::make_shared<const Homomorphism>(h);
  const std::size_t index = image_subgroup(h).size();
  return SubgroupOracle(h.context(), KernelParams{std::move(hom)}, index,
                        Normality::CertifiedNormal);
}

// n = 2^i (2s+1) with i in {0, 1} and s >= 1.
inline bool in_two_gen_scope(int n) {
  if (n < 3) return false;
  const int odd = (n % 2 == 0) ? n / 2 : n;
  return odd % 2 == 1 && odd >= 3;
}

// H^{(n)}_{B0B1B2}: kernel of a_i -> e, b1, b2 into the dihedral group of
// order 2n.
inline SubgroupOracle two_gen_kernel_oracle(const BlockPartition& p, int n,
                                            bool allow_out_of_scope = false,
                                            const Limits& limits =
                                                default_limits) {
  const bool in_scope = in_two_gen_scope(n);
  if (!in_scope && !allow_out_of_scope) {
    throw UnsupportedIndex("n=" + std::to_string(n) +
                           " is not of the form 2^i(2s+1), i in {0,1}, s >= 1");
  }
  auto hom = std::make_shared<const Homomorphism>(two_gen_hom(p, n, limits));
  const std::size_t index = image_subgroup(*hom).size();
  return SubgroupOracle(p.context(),
                        TwoGenKernelParams{p, n, !in_scope, std::move(hom)},
                        index, Normality::CertifiedNormal);
}

// Literal divisibility reading of the two-generator kernel: the projected
// alternating word has length divisible by 2n.
inline bool projected_length_divisible(const BlockPartition& p, int n,
                                       const Word& x) {
  const int l1 = p.blocks().at(0).min();
  const int l2 = p.blocks().at(1).min();
  return project_two_blocks(p, l1, l2, x).length() %
             (2 * static_cast<std::size_t>(n)) ==
         0;
}

// Σ_{A1A2}: words whose u-image collapses to e under γ. Normality is left
// open; the coset engine decides it.
inline SubgroupOracle index_three_oracle(const IndexThreeSpec& spec) {
  return SubgroupOracle(spec.context(), IndexThreeParams{spec}, 3,
                        Normality::Unknown);
}

// Oracle spec {kind, params, k}.
inline nlohmann::ordered_json to_json(const SubgroupOracle& o) {
  nlohmann::ordered_json j;
  j["kind"] = o.kind_name();
  nlohmann::ordered_json params;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ParityParams>) {
          params["A"] = p.a.indices();
        } else if constexpr (std::is_same_v<P, IntersectionParams>) {
          params["sets"] = sets_to_json(p.sets);
        } else if constexpr (std::is_same_v<P, TwoGenKernelParams>) {
          params["B0"] = p.partition.a0().indices();
          params["B1"] = p.partition.blocks()[0].indices();
          params["B2"] = p.partition.blocks()[1].indices();
          params["n"] = p.n;
          params["override"] = p.unverified_scope;
        } else if constexpr (std::is_same_v<P, IndexThreeParams>) {
          params["A0"] = p.spec.a0().indices();
          params["A1"] = p.spec.a1().indices();
          params["A2"] = p.spec.a2().indices();
        } else {
          params["hom"] = to_json(*p.hom);
        }
      },
      o.params());
  j["params"] = std::move(params);
  j["k"] = o.context().k();
  return j;
}

inline SubgroupOracle oracle_from_json(const nlohmann::json& j,
                                       const Limits& limits = default_limits) {
  try {
    const GroupContext ctx(j.at("k").get<int>(), limits);
    const auto kind = j.at("kind").get<std::string>();
    const auto& p = j.at("params");
    auto set = [&](const char* key) {
      return GenSet::from_indices(p.at(key).get<std::vector<int>>());
    };
    if (kind == "parity") return parity_oracle(set("A"), ctx);
    if (kind == "parity_intersection") {
      return intersection_oracle(sets_from_json(p.at("sets")), ctx);
    }
    if (kind == "two_gen_kernel") {
      const GenSet b0 = p.contains("B0") ? set("B0") : GenSet{};
      BlockPartition part = p.contains("B0")
                                ? BlockPartition(ctx, b0, {set("B1"), set("B2")})
                                : BlockPartition(ctx, {set("B1"), set("B2")});
      return two_gen_kernel_oracle(part, p.at("n").get<int>(),
                                   p.value("override", false), limits);
    }
    if (kind == "index_three") {
      if (p.contains("A0")) {
        return index_three_oracle(
            IndexThreeSpec(ctx, set("A0"), set("A1"), set("A2")));
      }
      return index_three_oracle(IndexThreeSpec(ctx, set("A1"), set("A2")));
    }
    if (kind == "kernel") {
      const Homomorphism h = homomorphism_from_json(p.at("hom"), limits);
      require_same(ctx, h.context());
      return kernel_oracle(h);
    }
    throw InvalidArgument("unknown oracle kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad oracle spec: ") + e.what());
  }
}

}  // namespace gk
