#pragma once

// Right-coset enumeration for oracle-defined subgroups of finite index,
// normality verdicts and factor groups.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/error.hpp"
#include "gk/finite_group.hpp"
#include "gk/limits.hpp"
#include "gk/subgroup_oracle.hpp"
#include "gk/word.hpp"

namespace gk {

// Cosets Hx. transitions[c][i-1] is the coset of reps[c]·a_i.
struct CosetTable {
  GroupContext ctx;
  std::vector<Word> reps;
  std::vector<std::vector<std::size_t>> transitions;
  std::size_t closure_radius = 0;
  nlohmann::ordered_json subgroup;
  bool certified_normal = false;

  static constexpr const char* side = "right";

  std::size_t index() const noexcept { return reps.size(); }

  // Coset H·x, by following transitions from H.
  std::size_t coset_of(const Word& x) const {
    require_same(ctx, x.context());
    std::size_t c = 0;
    for (int i : x.letters()) c = transitions[c][static_cast<std::size_t>(i - 1)];
    return c;
  }
};

inline constexpr std::size_t default_max_radius = 12;
inline constexpr std::size_t default_h_bound = 6;
inline constexpr std::size_t default_g_bound = 4;

// Breadth-first closure from e. A candidate w = reps[c]·a_i joins coset d
// iff w·reps[d]^{-1} ∈ H; otherwise it opens a new coset, provided
// |w| <= max_radius.
inline CosetTable enumerate_cosets(const SubgroupOracle& o,
                                   std::size_t max_radius = default_max_radius,
                                   const Limits& limits = default_limits) {
  if (max_radius < 1) throw InvalidArgument("max_radius must be >= 1");
  if (max_radius > limits.max_word_length) {
    throw BoundExceeded("max_radius " + std::to_string(max_radius) +
                        " exceeds word length bound " +
                        std::to_string(limits.max_word_length));
  }
  const GroupContext& ctx = o.context();
  const auto gens = static_cast<std::size_t>(ctx.generator_count());
  constexpr std::size_t unset = static_cast<std::size_t>(-1);

  CosetTable t{ctx, {Word::identity(ctx)}, {}, 0, to_json(o),
               o.certified_normal()};
  t.transitions.emplace_back(gens, unset);
  std::vector<Word> rep_inverses{Word::identity(ctx)};

  for (std::size_t c = 0; c < t.reps.size(); ++c) {
    for (std::size_t g = 0; g < gens; ++g) {
      if (t.transitions[c][g] != unset) continue;
      const Word w =
          multiply(t.reps[c], Word::generator(ctx, static_cast<int>(g + 1)));
      std::size_t target = unset;
      for (std::size_t d = 0; d < t.reps.size(); ++d) {
        if (o.contains(multiply(w, rep_inverses[d]))) {
          target = d;
          break;
        }
      }
      if (target == unset) {
        if (w.length() > max_radius) {
          std::size_t open = 0;
          for (const auto& row : t.transitions) {
            for (std::size_t v : row) open += (v == unset);
          }
          throw NonClosure(max_radius, open, t.reps.size());
        }
        if (t.reps.size() >= limits.max_cosets) {
          throw BoundExceeded("coset count exceeds cap " +
                              std::to_string(limits.max_cosets));
        }
        target = t.reps.size();
        t.reps.push_back(w);
        rep_inverses.push_back(inverse(w));
        t.transitions.emplace_back(gens, unset);
        t.closure_radius = std::max(t.closure_radius, w.length());
      }
      // a_g is an involution, so the edge is symmetric.
      t.transitions[c][g] = target;
      t.transitions[target][g] = c;
    }
  }
  return t;
}

struct CertifiedNormalVerdict {};
struct NotNormalVerdict {
  Word h;  // in H
  Word g;  // with g^{-1} h g outside H
};
struct NormalUpToBoundVerdict {
  std::size_t h_bound;
  std::size_t g_bound;
};
using NormalityVerdict =
    std::variant<CertifiedNormalVerdict, NotNormalVerdict,
                 NormalUpToBoundVerdict>;

inline std::string verdict_name(const NormalityVerdict& v) {
  switch (v.index()) {
    case 0:
      return "CertifiedNormal";
    case 1:
      return "NotNormal";
    default:
      return "NormalUpToBound";
  }
}

inline nlohmann::ordered_json to_json(const NormalityVerdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(v);
  if (const auto* w = std::get_if<NotNormalVerdict>(&v)) {
    j["h"] = to_string(w->h);
    j["g"] = to_string(w->g);
    j["conjugate"] = to_string(conjugate(w->h, w->g));
  } else if (const auto* b = std::get_if<NormalUpToBoundVerdict>(&v)) {
    j["h_bound"] = b->h_bound;
    j["g_bound"] = b->g_bound;
  }
  return j;
}

// Re-checks a NotNormal witness against the oracle; other verdicts pass.
inline bool revalidate(const SubgroupOracle& o, const NormalityVerdict& v) {
  if (const auto* w = std::get_if<NotNormalVerdict>(&v)) {
    return o.contains(w->h) && !o.contains(conjugate(w->h, w->g));
  }
  return true;
}

// Kernel provenance certifies normality. Otherwise search h ∈ H with
// |h| <= h_bound and g with |g| <= g_bound, both in length-then-lex order,
// for g^{-1} h g ∉ H.
inline NormalityVerdict check_normality(const SubgroupOracle& o,
                                        const CosetTable& t,
                                        std::size_t h_bound = default_h_bound,
                                        std::size_t g_bound = default_g_bound) {
  if (t.subgroup != to_json(o)) {
    throw InvalidArgument("coset table was not produced from this oracle");
  }
  if (o.certified_normal()) return CertifiedNormalVerdict{};
  const auto gs = enumerate_words(o.context(), g_bound);
  std::optional<NotNormalVerdict> found;
  for_each_word(o.context(), h_bound, [&](const Word& h) {
    if (found || !o.contains(h)) return;
    for (const Word& g : gs) {
      if (!o.contains(conjugate(h, g))) {
        found = NotNormalVerdict{h, g};
        return;
      }
    }
  });
  if (found) return *found;
  return NormalUpToBoundVerdict{h_bound, g_bound};
}

// Exact test on a closed table: H is normal iff G_k acts regularly on its
// cosets, i.e. the permutation group generated by the transitions has order
// equal to the index.
inline bool coset_action_is_regular(const CosetTable& t) {
  using Perm = std::vector<std::size_t>;
  const std::size_t n = t.index();
  const auto gens = static_cast<std::size_t>(t.ctx.generator_count());
  std::vector<Perm> generators;
  for (std::size_t g = 0; g < gens; ++g) {
    Perm p(n);
    for (std::size_t c = 0; c < n; ++c) p[c] = t.transitions[c][g];
    generators.push_back(std::move(p));
  }
  Perm id(n);
  for (std::size_t c = 0; c < n; ++c) id[c] = c;
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    const Perm p = queue.front();
    queue.pop_front();
    for (const Perm& s : generators) {
      Perm q(n);
      for (std::size_t c = 0; c < n; ++c) q[c] = s[p[c]];
      if (seen.insert(q).second) {
        if (seen.size() > n) return false;
        queue.push_back(std::move(q));
      }
    }
  }
  return seen.size() == n;
}

// G_k / H on the cosets of a closed table: (Hx)(Hy) = H(xy).
inline FiniteGroup quotient_group(const CosetTable& t) {
  if (!t.certified_normal && !coset_action_is_regular(t)) {
    throw QuotientUndefined("subgroup is not normal; factor group undefined");
  }
  const std::size_t n = t.index();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = t.reps[i].is_identity() ? "H" : "H" + to_string(t.reps[i]);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t c = i;
      for (int g : t.reps[j].letters()) {
        c = t.transitions[c][static_cast<std::size_t>(g - 1)];
      }
      table[i * n + j] = static_cast<Element>(c);
    }
  }
  std::vector<Element> gens;
  for (int g = 1; g <= t.ctx.generator_count(); ++g) {
    const auto c = static_cast<Element>(t.transitions[0][static_cast<std::size_t>(g - 1)]);
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) {
      gens.push_back(c);
    }
  }
  return FiniteGroup(n, 0, std::move(table), std::move(labels), std::move(gens));
}

// {k, side, subgroup, index, closure_radius, reps, transitions}.
inline nlohmann::ordered_json to_json(const CosetTable& t) {
  nlohmann::ordered_json j;
  j["k"] = t.ctx.k();
  j["side"] = CosetTable::side;
  j["subgroup"] = t.subgroup;
  j["index"] = t.index();
  j["closure_radius"] = t.closure_radius;
  j["certified_normal"] = t.certified_normal;
  auto reps = nlohmann::ordered_json::array();
  for (const Word& w : t.reps) reps.push_back(to_string(w));
  j["reps"] = std::move(reps);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.transitions) rows.push_back(row);
  j["transitions"] = std::move(rows);
  return j;
}

inline CosetTable coset_table_from_json(const nlohmann::json& j,
                                        const Limits& limits = default_limits) {
  try {
    const GroupContext ctx(j.at("k").get<int>(), limits);
    const SubgroupOracle o = oracle_from_json(j.at("subgroup"), limits);
    require_same(ctx, o.context());
    CosetTable t{ctx, {}, {}, j.at("closure_radius").get<std::size_t>(),
                 to_json(o), o.certified_normal()};
    for (const auto& r : j.at("reps")) {
      t.reps.push_back(parse_word(r.get<std::string>(), ctx));
    }
    const auto gens = static_cast<std::size_t>(ctx.generator_count());
    for (const auto& row : j.at("transitions")) {
      auto r = row.get<std::vector<std::size_t>>();
      if (r.size() != gens) throw InvalidArgument("transition row width");
      for (std::size_t v : r) {
        if (v >= t.reps.size()) throw InvalidArgument("transition out of range");
      }
      t.transitions.push_back(std::move(r));
    }
    if (t.transitions.size() != t.reps.size() ||
        j.at("index").get<std::size_t>() != t.reps.size()) {
      throw InvalidArgument("coset table index mismatch");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad coset table: ") + e.what());
  }
}

}  // namespace gk
