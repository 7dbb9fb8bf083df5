#pragma once

// Executable checks of the structural results about subgroups of G_k. Each
// suite returns a report listing every check with its inputs and outcome;
// `info` holds computed facts that are reported but not gated on.

#include <algorithm>
#include <chrono>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/contractibility.hpp"
#include "gk/coset_table.hpp"
#include "gk/finite_group.hpp"
#include "gk/fixtures.hpp"
#include "gk/homomorphism.hpp"
#include "gk/subgroup_oracle.hpp"
#include "gk/word.hpp"

namespace gk::verify {

using json = nlohmann::ordered_json;

struct Check {
  std::string name;
  json inputs;
  bool passed;
  std::string detail;
};

struct Report {
  std::string suite;
  json params;
  std::vector<Check> checks;
  json info = json::object();
  double seconds = 0;

  bool passed() const {
    for (const Check& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const Check& c : checks) n += !c.passed;
    return n;
  }
  void add(std::string name, json inputs, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), std::move(inputs), ok, std::move(detail)});
  }
};

struct Options {
  int k = 2;
  std::size_t max_radius = default_max_radius;
  std::size_t h_bound = default_h_bound;
  std::size_t g_bound = default_g_bound;
  // Exhaustive word-length bound for membership comparisons.
  std::size_t word_length = 8;
  // Longer bound for the equivalences checked to length 10.
  std::size_t long_word_length = 10;
  std::vector<int> dihedral_n = {3, 5, 6};
  std::uint64_t seed = 1;
  std::size_t random_pairs = 10'000;
  Limits limits{};
};

inline json to_json(const Report& r) {
  json j;
  j["suite"] = r.suite;
  j["params"] = r.params;
  j["passed"] = r.passed();
  j["failures"] = r.failures();
  auto checks = json::array();
  for (const Check& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["inputs"] = c.inputs;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["info"] = r.info;
  return j;
}

inline json options_json(const Options& o) {
  json j;
  j["k"] = o.k;
  j["max_radius"] = o.max_radius;
  j["h_bound"] = o.h_bound;
  j["g_bound"] = o.g_bound;
  j["word_length"] = o.word_length;
  j["long_word_length"] = o.long_word_length;
  j["dihedral_n"] = o.dihedral_n;
  j["seed"] = o.seed;
  return j;
}

// All non-empty subsets of N_k, in increasing bit order.
inline std::vector<GenSet> nonempty_subsets(const GroupContext& ctx) {
  std::vector<GenSet> out;
  const std::uint32_t full = ctx.generators().bits();
  for (std::uint32_t b = 1; b <= full; ++b) out.emplace_back(b);
  return out;
}

// Visit every family of `m` distinct sets drawn from `pool` (combinations
// in index order).
inline void for_each_family(
    const std::vector<GenSet>& pool, std::size_t m,
    const std::function<void(const std::vector<GenSet>&)>& visit) {
  std::vector<GenSet> fam(m);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t start) {
    if (pos == m) {
      visit(fam);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      fam[pos] = pool[i];
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

inline json family_json(const std::vector<GenSet>& sets) {
  return sets_to_json(sets);
}

inline json partition_json(const BlockPartition& p) {
  json j;
  j["A0"] = p.a0().indices();
  j["A1"] = p.blocks()[0].indices();
  j["A2"] = p.blocks()[1].indices();
  return j;
}

namespace detail {

inline std::vector<char> membership(const std::vector<Word>& words,
                                    const std::function<bool(const Word&)>& f) {
  std::vector<char> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(f(w) ? 1 : 0);
  return out;
}

// Parity-subgroup membership from raw letter counts.
inline bool in_parity_conjunction(const std::vector<GenSet>& sets,
                                  const Word& x) {
  for (GenSet a : sets) {
    if (letter_count(x, a) % 2 != 0) return false;
  }
  return true;
}

template <typename F>
Report timed(std::string suite, const Options& o, F&& body) {
  Report r;
  r.suite = std::move(suite);
  r.params = options_json(o);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

}  // namespace detail

// H_A has index 2 and is normal; distinct A give distinct H_A; independent
// intersections have index 2^m and dependent ones are contractible.
inline Report prop1(const Options& o) {
  return detail::timed("prop1", o, [&](Report& r) {
    const GroupContext ctx(o.k, o.limits);
    const auto subsets = nonempty_subsets(ctx);
    for (GenSet a : subsets) {
      const auto oracle = parity_oracle(a, ctx);
      const auto t = enumerate_cosets(oracle, o.max_radius, o.limits);
      const auto v = check_normality(oracle, t, o.h_bound, o.g_bound);
      r.add("index2-normal", {{"A", a.indices()}},
            t.index() == 2 && std::holds_alternative<CertifiedNormalVerdict>(v),
            "index " + std::to_string(t.index()) + ", " + verdict_name(v));
    }
    std::size_t pairs = 0;
    std::size_t distinguished = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = i + 1; j < subsets.size(); ++j) {
        ++pairs;
        // Any generator in exactly one of the sets lies in exactly one of
        // the two subgroups.
        const int g = (subsets[i] ^ subsets[j]).min();
        const Word w = Word::generator(ctx, g);
        if (parity_oracle(subsets[i], ctx).contains(w) !=
            parity_oracle(subsets[j], ctx).contains(w)) {
          ++distinguished;
        }
      }
    }
    r.add("pairwise-distinct", {{"pairs", pairs}}, distinguished == pairs,
          std::to_string(distinguished) + " of " + std::to_string(pairs) +
              " pairs separated by a generator");

    // Letter-count parity vector of each bounded word, from raw counts.
    std::vector<std::uint32_t> parity;
    for (const Word& x : enumerate_words(ctx, o.word_length)) {
      std::uint32_t mask = 0;
      for (int i = 1; i <= ctx.generator_count(); ++i) {
        if (letter_count(x, i) % 2 != 0) mask |= std::uint32_t{1} << (i - 1);
      }
      parity.push_back(mask);
    }
    auto bounded = [&](const std::vector<GenSet>& fam) {
      std::vector<char> in;
      in.reserve(parity.size());
      for (std::uint32_t mask : parity) {
        bool member = true;
        for (GenSet a : fam) member = member && std::popcount(mask & a.bits()) % 2 == 0;
        in.push_back(member ? 1 : 0);
      }
      return in;
    };
    std::size_t independent = 0, independent_ok = 0;
    std::size_t dependent = 0, dependent_ok = 0;
    const std::size_t max_m = std::min<std::size_t>(
        static_cast<std::size_t>(ctx.generator_count()), 4);
    for (std::size_t m = 1; m <= max_m; ++m) {
      for_each_family(subsets, m, [&](const std::vector<GenSet>& fam) {
        const Contractibility c = is_contractible(fam);
        const auto full = bounded(fam);
        // Brute force: some member can be dropped without changing the
        // bounded intersection.
        bool brute_contractible = false;
        for (std::size_t drop = 0; drop < fam.size() && fam.size() > 1; ++drop) {
          std::vector<GenSet> rest;
          for (std::size_t i = 0; i < fam.size(); ++i) {
            if (i != drop) rest.push_back(fam[i]);
          }
          if (bounded(rest) == full) {
            brute_contractible = true;
            break;
          }
        }
        if (c.contractible) {
          ++dependent;
          std::vector<GenSet> rest;
          for (std::size_t i = 0; i < fam.size(); ++i) {
            if (i + 1 != *c.removable) rest.push_back(fam[i]);
          }
          const bool removable_ok = bounded(rest) == full;
          bool raised = false;
          try {
            (void)intersection_oracle(fam, ctx);
          } catch (const ContractibleIntersection& e) {
            raised = e.removable() == *c.removable;
          }
          if (brute_contractible && removable_ok && raised) ++dependent_ok;
          else
            r.add("contractible-family", {{"sets", family_json(fam)}}, false,
                  "brute force disagrees with GF(2) dependence");
        } else {
          ++independent;
          const auto t =
              enumerate_cosets(intersection_oracle(fam, ctx), o.max_radius,
                               o.limits);
          const bool ok = !brute_contractible &&
                          t.index() == (std::size_t{1} << fam.size());
          if (ok) ++independent_ok;
          else
            r.add("independent-family", {{"sets", family_json(fam)}}, false,
                  "index " + std::to_string(t.index()));
        }
      });
    }
    r.add("independent-index-2^m",
          {{"families", independent}, {"max_m", max_m}},
          independent_ok == independent,
          std::to_string(independent_ok) + " of " +
              std::to_string(independent) + " families");
    r.add("dependent-contractible",
          {{"families", dependent}, {"max_m", max_m},
           {"word_length", o.word_length}},
          dependent_ok == dependent,
          std::to_string(dependent_ok) + " of " + std::to_string(dependent) +
              " families");
  });
}

// No epimorphism onto a group of odd order > 1; index-3 subgroups are not
// normal.
inline Report thm_odd_index(const Options& o) {
  return detail::timed("thm-odd-index", o, [&](Report& r) {
    const GroupContext ctx(o.k, o.limits);
    for (const NamedGroup& g : odd_order_fixtures()) {
      auto target = std::make_shared<const FiniteGroup>(g.group);
      const auto epis = epimorphism_search(ctx, target, o.limits);
      r.add("no-epimorphism", {{"target", g.name}, {"order", g.group.order()}},
            epis.empty(), std::to_string(epis.size()) + " epimorphisms");
    }
    for (const BlockPartition& p : two_block_partitions(ctx)) {
      const IndexThreeSpec spec(ctx, p.a0(), p.blocks()[0], p.blocks()[1]);
      const auto oracle = index_three_oracle(spec);
      const auto t = enumerate_cosets(oracle, o.max_radius, o.limits);
      const auto v = check_normality(oracle, t, o.h_bound, o.g_bound);
      const bool ok = std::holds_alternative<NotNormalVerdict>(v) &&
                      revalidate(oracle, v);
      r.add("index3-not-normal", partition_json(p), ok, to_json(v).dump());
    }
  });
}

// Epimorphisms onto a finite abelian group exist iff it is elementary
// abelian of exponent 2.
inline Report prop_abelian(const Options& o) {
  return detail::timed("prop-abelian", o, [&](Report& r) {
    const GroupContext ctx(o.k, o.limits);
    for (const NamedGroup& g : abelian_fixtures()) {
      auto target = std::make_shared<const FiniteGroup>(g.group);
      const auto epis = epimorphism_search(ctx, target, o.limits);
      const GroupClass c = classify(g.group);
      const bool ok = epis.empty() != (c == GroupClass::ElementaryAbelian2);
      r.add("epi-iff-elementary",
            {{"target", g.name}, {"order", g.group.order()}}, ok,
            std::to_string(epis.size()) + " epimorphisms, class " +
                to_string(c));
    }
  });
}

// Ker φ_{A1..An} = H_{A1} ∩ ... ∩ H_{An}; homomorphism property.
inline Report thm_kernels(const Options& o) {
  return detail::timed("thm-kernels", o, [&](Report& r) {
    const GroupContext ctx(o.k, o.limits);
    const auto subsets = nonempty_subsets(ctx);
    const auto words = enumerate_words(ctx, o.word_length);
    std::size_t families = 0, agree = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      for_each_family(subsets, n, [&](const std::vector<GenSet>& fam) {
        ++families;
        const auto kernel = kernel_oracle(parity_hom(fam, ctx, o.limits));
        const bool independent = !is_contractible(fam).contractible;
        const std::optional<SubgroupOracle> inter =
            independent ? std::optional(intersection_oracle(fam, ctx))
                        : std::nullopt;
        for (const Word& x : words) {
          const bool rhs = inter ? inter->contains(x)
                                 : detail::in_parity_conjunction(fam, x);
          if (kernel.contains(x) != rhs) {
            r.add("kernel-equals-intersection", {{"sets", family_json(fam)}},
                  false, "differs at " + to_string(x));
            return;
          }
        }
        ++agree;
      });
    }
    r.add("kernel-equals-intersection",
          {{"families", families}, {"max_n", 3}, {"word_length", o.word_length}},
          agree == families,
          std::to_string(agree) + " of " + std::to_string(families));

    // evaluate(h, xy) = evaluate(h, x) evaluate(h, y)
    std::vector<Homomorphism> homs;
    homs.push_back(parity_hom({GenSet{1}, GenSet{1, 2}}, ctx, o.limits));
    for (int n : o.dihedral_n) {
      homs.push_back(
          two_gen_hom(BlockPartition(ctx, {GenSet{1}, GenSet{2}}), n, o.limits));
    }
    const auto short_words = enumerate_words(ctx, 5);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> letter(1, ctx.generator_count());
    std::uniform_int_distribution<std::size_t> length(6, 20);
    auto random_word = [&] {
      std::vector<int> raw(length(rng));
      for (int& i : raw) i = letter(rng);
      return reduce(raw, ctx);
    };
    std::size_t violations = 0;
    for (const Homomorphism& h : homs) {
      const FiniteGroup& g = h.target();
      for (const Word& x : short_words) {
        for (const Word& y : short_words) {
          violations += evaluate(h, multiply(x, y)) !=
                        g.mul(evaluate(h, x), evaluate(h, y));
        }
      }
      for (std::size_t i = 0; i < o.random_pairs; ++i) {
        const Word x = random_word();
        const Word y = random_word();
        violations += evaluate(h, multiply(x, y)) !=
                      g.mul(evaluate(h, x), evaluate(h, y));
      }
    }
    r.add("homomorphism-property",
          {{"homs", homs.size()}, {"exhaustive_length", 5},
           {"random_pairs", o.random_pairs}, {"seed", o.seed}},
          violations == 0, std::to_string(violations) + " violations");
  });
}

namespace detail {

// Distinct kernels among all epimorphisms G_k -> target, compared on words
// of length <= L.
inline std::size_t distinct_kernels(const std::vector<Homomorphism>& homs,
                                    const std::vector<Word>& words) {
  std::set<std::vector<char>> seen;
  for (const Homomorphism& h : homs) {
    seen.insert(membership(words, [&](const Word& x) {
      return evaluate(h, x) == h.target().identity();
    }));
  }
  return seen.size();
}

}  // namespace detail

// The kernel of a_i -> e, b1, b2 onto a two-involution group of order 2n is
// H^{(n)}_{B0B1B2}, under both readings of its defining condition.
inline Report prop_index2n(const Options& o) {
  return detail::timed("prop-index2n", o, [&](Report& r) {
    const GroupContext ctx(o.k, o.limits);
    const auto words = enumerate_words(ctx, o.long_word_length);
    const auto short_words = enumerate_words(ctx, 6);
    json counts = json::array();
    for (int n : o.dihedral_n) {
      std::size_t mismatches = 0;
      std::set<std::vector<char>> family;
      for (const BlockPartition& p : two_block_partitions(ctx)) {
        const auto oracle = two_gen_kernel_oracle(p, n, true, o.limits);
        const auto kernel = kernel_oracle(two_gen_hom(p, n, o.limits));
        for (const Word& x : words) {
          const bool m = oracle.contains(x);
          mismatches += (m != kernel.contains(x));
          mismatches += (m != projected_length_divisible(p, n, x));
        }
        family.insert(detail::membership(
            short_words, [&](const Word& x) { return oracle.contains(x); }));
      }
      r.add("kernel-equals-H(n)",
            {{"n", n}, {"word_length", o.long_word_length}}, mismatches == 0,
            std::to_string(mismatches) + " mismatches");
      auto target = std::make_shared<const FiniteGroup>(
          two_involution_group(n, o.limits));
      const auto epis = epimorphism_search(ctx, target, o.limits);
      counts.push_back({{"n", n},
                        {"epimorphisms", epis.size()},
                        {"distinct_kernels", detail::distinct_kernels(epis, short_words)},
                        {"family_distinct", family.size()}});
    }
    r.info["kernels_onto_dihedral"] = std::move(counts);
  });
}

// H^{(n)} has index 2n, is normal, and its factor group is generated by two
// involutions.
inline Report thm_2n(const Options& o) {
  return detail::timed("thm-2n", o, [&](Report& r) {
    const GroupContext ctx(o.k, o.limits);
    for (int n : o.dihedral_n) {
      for (const BlockPartition& p : two_block_partitions(ctx)) {
        const auto oracle = two_gen_kernel_oracle(p, n, false, o.limits);
        const auto t = enumerate_cosets(oracle, o.max_radius, o.limits);
        const auto v = check_normality(oracle, t, o.h_bound, o.g_bound);
        const GroupClass c = classify(quotient_group(t));
        json in = partition_json(p);
        in["n"] = n;
        r.add("index-2n-normal-dihedral", std::move(in),
              t.index() == static_cast<std::size_t>(2 * n) &&
                  std::holds_alternative<CertifiedNormalVerdict>(v) &&
                  c == GroupClass::TwoInvolutionDihedral,
              "index " + std::to_string(t.index()) + ", " + verdict_name(v) +
                  ", quotient " + to_string(c));
      }
    }
  });
}

// γ(u(x)) = e iff 3 divides l(u(x)).
inline Report lemma3(const Options& o) {
  return detail::timed("lemma3", o, [&](Report& r) {
    const GroupContext ctx(o.k, o.limits);
    const auto words = enumerate_words(ctx, o.long_word_length);
    for (const BlockPartition& p : two_block_partitions(ctx)) {
      const IndexThreeSpec spec(ctx, p.a0(), p.blocks()[0], p.blocks()[1]);
      std::size_t discrepancies = 0;
      for (const Word& x : words) {
        const Word u = u_image(spec, x);
        discrepancies +=
            gamma_reduce(u).is_identity() != (u.length() % 3 == 0);
      }
      json in = partition_json(p);
      in["words"] = words.size();
      r.add("gamma-iff-mod3", std::move(in), discrepancies == 0,
            std::to_string(discrepancies) + " discrepancies");
    }
  });
}

// Σ_{A1A2} is a subgroup of index 3, and the length arithmetic of u-images.
inline Report prop_index3(const Options& o) {
  return detail::timed("prop-index3", o, [&](Report& r) {
    const GroupContext ctx(o.k, o.limits);
    const auto words = enumerate_words(ctx, o.word_length);
    const auto short_words = enumerate_words(ctx, 6);
    std::set<std::vector<char>> distinct;
    std::size_t swap_equal = 0, partitions = 0;
    for (const BlockPartition& p : two_block_partitions(ctx)) {
      ++partitions;
      const IndexThreeSpec spec(ctx, p.a0(), p.blocks()[0], p.blocks()[1]);
      const auto oracle = index_three_oracle(spec);
      std::vector<Word> members;
      for (const Word& x : words) {
        if (oracle.contains(x)) members.push_back(x);
      }
      bool closed = oracle.contains(Word::identity(ctx));
      for (const Word& x : members) {
        if (!oracle.contains(inverse(x))) closed = false;
        for (const Word& y : members) {
          if (!oracle.contains(multiply(x, inverse(y)))) closed = false;
        }
      }
      const auto t = enumerate_cosets(oracle, o.max_radius, o.limits);

      // Case formula over all u-image pairs (alternating words in m1, m2).
      std::vector<Word> images;
      for (const Word& x : words) {
        const Word u = u_image(spec, x);
        if (std::find(images.begin(), images.end(), u) == images.end()) {
          images.push_back(u);
        }
      }
      bool formula = true;
      for (const Word& x : images) {
        for (const Word& y : images) {
          const std::size_t l = multiply(x, inverse(y)).length();
          const std::size_t lx = x.length(), ly = y.length();
          std::size_t expected = lx + ly;
          if (lx > 0 && ly > 0 && x.back() == y.back()) {
            expected = lx > ly ? lx - ly : ly - lx;
          }
          if (l != expected) formula = false;
        }
      }
      json in = partition_json(p);
      in["members_checked"] = members.size();
      in["u_images"] = images.size();
      r.add("subgroup-index3-length-formula", std::move(in),
            closed && t.index() == 3 && formula,
            std::string(closed ? "closed" : "NOT closed") + ", index " +
                std::to_string(t.index()) +
                (formula ? ", case formula holds" : ", case formula FAILS"));

      const auto sig = detail::membership(
          short_words, [&](const Word& x) { return oracle.contains(x); });
      distinct.insert(sig);
      const auto swapped = index_three_oracle(spec.swapped());
      swap_equal += sig == detail::membership(short_words, [&](const Word& x) {
                      return swapped.contains(x);
                    });
    }
    // Every index-3 subgroup is a point stabilizer of a transitive action
    // onto S_3; each arises from exactly two epimorphisms.
    auto s3 = std::make_shared<const FiniteGroup>(two_involution_group(3, o.limits));
    const auto epis = epimorphism_search(ctx, s3, o.limits);
    r.info["ordered_partitions"] = partitions;
    r.info["swapped_blocks_equal"] = swap_equal;
    r.info["sigma_family_distinct"] = distinct.size();
    r.info["index3_subgroups_total"] = epis.size() / 2;
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "prop1",        "thm-odd-index", "prop-abelian", "thm-kernels",
      "prop-index2n", "thm-2n",        "lemma3",       "prop-index3"};
  return names;
}

inline Report run(std::string_view tag, const Options& o) {
  if (tag == "prop1") return prop1(o);
  if (tag == "thm-odd-index") return thm_odd_index(o);
  if (tag == "prop-abelian") return prop_abelian(o);
  if (tag == "thm-kernels") return thm_kernels(o);
  if (tag == "prop-index2n") return prop_index2n(o);
  if (tag == "thm-2n") return thm_2n(o);
  if (tag == "lemma3") return lemma3(o);
  if (tag == "prop-index3") return prop_index3(o);
  throw InvalidArgument("unknown verification tag '" + std::string(tag) + "'");
}

}  // namespace gk::verify
