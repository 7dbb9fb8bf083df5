#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gk/fixtures.hpp"
#include "gk/homomorphism.hpp"
#include "gk/subgroup_oracle.hpp"
#include "oracles.hpp"

namespace gk {
namespace {

std::string image_label(const Homomorphism& h, int i) {
  return h.target().label(h.image(i));
}

TEST(ParityHom, Examples) {
  const GroupContext ctx(2);
  const Homomorphism h1 = parity_hom({GenSet{1}}, ctx);
  EXPECT_EQ(image_label(h1, 1), "c1");
  EXPECT_EQ(image_label(h1, 2), "e");
  EXPECT_EQ(image_label(h1, 3), "e");

  const Homomorphism h2 = parity_hom({GenSet{1, 2}, GenSet{2, 3}}, ctx);
  EXPECT_EQ(image_label(h2, 2), "c1c2");

  const Homomorphism h3 = parity_hom({GenSet{1}, GenSet{2}}, ctx);
  EXPECT_EQ(image_label(h3, 3), "e");

  EXPECT_THROW(parity_hom({GenSet{1}, GenSet{}}, ctx), InvalidArgument);
  EXPECT_THROW(parity_hom({}, ctx), InvalidArgument);
}

// Every branch of the case display: i lies in exactly the A_j with j in J
// (J ranging over all subsets of {1..n}), and then a_i -> product of c_j,
// j in J, read off the element label.
TEST(ParityHom, AllCaseBranches) {
  const GroupContext ctx(3);
  std::vector<GenSet> subsets;
  for (std::uint32_t b = 1; b < 16; ++b) subsets.emplace_back(b);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::size_t> idx(n, 0);
    std::set<std::size_t> branches;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                            std::size_t from) {
      if (pos == n) {
        std::vector<GenSet> sets;
        for (std::size_t i : idx) sets.push_back(subsets[i]);
        const Homomorphism h = parity_hom(sets, ctx);
        for (int i = 1; i <= 4; ++i) {
          std::string expected;
          std::size_t branch = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (sets[j].contains(i)) {
              expected += "c" + std::to_string(j + 1);
              branch |= std::size_t{1} << j;
            }
          }
          if (expected.empty()) expected = "e";
          branches.insert(branch);
          ASSERT_EQ(image_label(h, i), expected);
        }
        return;
      }
      for (std::size_t s = from; s < subsets.size(); ++s) {
        idx[pos] = s;
        rec(pos + 1, s + 1);
      }
    };
    rec(0, 0);
    EXPECT_EQ(branches.size(), std::size_t{1} << n);
  }
}

TEST(TwoGenHom, Examples) {
  const GroupContext ctx(2);
  const BlockPartition p(ctx, {GenSet{1, 3}, GenSet{2}});
  const Homomorphism h = two_gen_hom(p, 3);
  EXPECT_EQ(image_label(h, 1), "b1");
  EXPECT_EQ(image_label(h, 2), "b2");
  EXPECT_EQ(image_label(h, 3), "b1");

  const BlockPartition q(ctx, GenSet{3}, {GenSet{1}, GenSet{2}});
  const Homomorphism g = two_gen_hom(q, 3);
  EXPECT_EQ(g.image(3), g.target().identity());
  EXPECT_EQ(image_label(g, 3), "e1");

  for (const BlockPartition& part : two_block_partitions(ctx)) {
    const Homomorphism hp = two_gen_hom(part, 3);
    EXPECT_EQ(evaluate(hp, reduce({1, 1}, ctx)), hp.target().identity());
  }
}

TEST(TwoGenHom, Errors) {
  const GroupContext ctx(2);
  EXPECT_THROW(two_gen_hom(BlockPartition(ctx, {GenSet{1, 2, 3}}), 3),
               InvalidArgument);
  EXPECT_THROW(
      two_gen_hom(BlockPartition(ctx, {GenSet{1}, GenSet{2}, GenSet{3}}), 3),
      InvalidArgument);
  auto d3 = std::make_shared<const FiniteGroup>(two_involution_group(3));
  const BlockPartition p(ctx, {GenSet{1}, GenSet{2}});
  // Same involution twice does not generate D3.
  EXPECT_THROW(two_gen_hom(p, d3, d3->generators()[0], d3->generators()[0]),
               InvalidArgument);
}

TEST(BlockPartition, Validation) {
  const GroupContext ctx(2);
  EXPECT_THROW(BlockPartition(ctx, {GenSet{1}, GenSet{1, 2}}), InvalidArgument);
  EXPECT_THROW(BlockPartition(ctx, {GenSet{1}, GenSet{}}), InvalidArgument);
  EXPECT_THROW(BlockPartition(ctx, GenSet{}, {GenSet{1}, GenSet{2}}),
               InvalidArgument);
  EXPECT_THROW(BlockPartition(ctx, {GenSet{4}}), InvalidGenerator);
  EXPECT_EQ(BlockPartition(ctx, {GenSet{1}, GenSet{2}}).a0(), GenSet{3});
  // 3^3 assignments minus those leaving a block empty: 27 - 2*8 + 1 = 12.
  EXPECT_EQ(two_block_partitions(ctx).size(), 12u);
}

TEST(Evaluate, Examples) {
  const GroupContext ctx(2);
  const Homomorphism h = parity_hom({GenSet{1}}, ctx);
  const Word x = reduce({1, 2, 1}, ctx);
  EXPECT_EQ(letter_count(x, 1) % 2, 0u);
  EXPECT_EQ(evaluate(h, x), h.target().identity());

  const Homomorphism d = two_gen_hom(BlockPartition(ctx, {GenSet{1}, GenSet{2}}), 3);
  // b1b2 has order 3 in D3.
  const FiniteGroup& g = d.target();
  ASSERT_EQ(g.element_order(g.mul(d.image(1), d.image(2))), 3u);
  EXPECT_EQ(evaluate(d, reduce({1, 2, 1, 2, 1, 2}, ctx)), g.identity());

  EXPECT_EQ(evaluate(h, Word::identity(ctx)), h.target().identity());
  EXPECT_EQ(evaluate(d, Word::identity(ctx)), g.identity());
  EXPECT_THROW(evaluate(h, Word::identity(GroupContext(3))), ContextMismatch);
}

// Parity images are determined by letter counts mod 2.
TEST(Evaluate, ParityMatchesLetterCounts) {
  const GroupContext ctx(2);
  const std::vector<GenSet> sets = {GenSet{1}, GenSet{1, 2}, GenSet{2, 3}};
  const Homomorphism h = parity_hom(sets, ctx);
  for (const Word& x : enumerate_words(ctx, 8)) {
    Element expected = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (letter_count(x, sets[j]) % 2) expected |= Element{1} << j;
    }
    ASSERT_EQ(evaluate(h, x), expected);
  }
}

std::vector<Homomorphism> sample_homs(const GroupContext& ctx) {
  std::vector<Homomorphism> homs;
  homs.push_back(parity_hom({GenSet{1}, GenSet{1, 2}}, ctx));
  homs.push_back(parity_hom({GenSet{1, 2, 3}}, ctx));
  for (int n : {3, 4, 5, 6}) {
    homs.push_back(two_gen_hom(BlockPartition(ctx, {GenSet{1, 3}, GenSet{2}}), n));
    homs.push_back(
        two_gen_hom(BlockPartition(ctx, GenSet{3}, {GenSet{2}, GenSet{1}}), n));
  }
  return homs;
}

TEST(Evaluate, HomomorphismPropertyExhaustive) {
  const GroupContext ctx(2);
  const auto words = enumerate_words(ctx, 5);
  for (const Homomorphism& h : sample_homs(ctx)) {
    for (const Word& x : words) {
      for (const Word& y : words) {
        ASSERT_EQ(evaluate(h, multiply(x, y)),
                  h.target().mul(evaluate(h, x), evaluate(h, y)));
      }
    }
  }
}

TEST(Evaluate, HomomorphismPropertyRandomLongPairs) {
  const GroupContext ctx(2);
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> letter(1, 3), len(6, 24);
  auto random_word = [&] {
    std::vector<int> raw(static_cast<std::size_t>(len(rng)));
    for (int& v : raw) v = letter(rng);
    return reduce(raw, ctx);
  };
  const auto homs = sample_homs(ctx);
  for (int trial = 0; trial < 10000; ++trial) {
    const Word x = random_word(), y = random_word();
    for (const Homomorphism& h : homs) {
      ASSERT_EQ(evaluate(h, multiply(x, y)),
                h.target().mul(evaluate(h, x), evaluate(h, y)));
    }
  }
}

TEST(KernelOracle, ClaimedIndex) {
  const GroupContext ctx(2);
  const SubgroupOracle k1 = kernel_oracle(parity_hom({GenSet{1}}, ctx));
  EXPECT_EQ(k1.claimed_index(), 2u);
  EXPECT_TRUE(k1.certified_normal());
  EXPECT_EQ(kernel_oracle(parity_hom({GenSet{1}, GenSet{2}}, ctx)).claimed_index(),
            4u);
  EXPECT_EQ(kernel_oracle(two_gen_hom(BlockPartition(ctx, {GenSet{1, 3}, GenSet{2}}), 3))
                .claimed_index(),
            6u);
  // Dependent family: image is a proper subgroup of K_8.
  EXPECT_EQ(kernel_oracle(parity_hom({GenSet{1}, GenSet{2}, GenSet{1, 2}}, ctx))
                .claimed_index(),
            4u);
}

TEST(EpimorphismSearch, Examples) {
  const GroupContext ctx(2);
  EXPECT_TRUE(epimorphism_search(
                  ctx, std::make_shared<const FiniteGroup>(cyclic_group(3)))
                  .empty());
  EXPECT_TRUE(epimorphism_search(
                  ctx, std::make_shared<const FiniteGroup>(cyclic_group(4)))
                  .empty());
  // 2^3 - 1 nonzero assignments, one per non-empty A.
  const auto k1 = epimorphism_search(
      ctx, std::make_shared<const FiniteGroup>(elementary_abelian(1)));
  EXPECT_EQ(k1.size(), 7u);
  std::set<std::vector<Element>> images;
  for (const Homomorphism& h : k1) images.insert(h.images());
  EXPECT_EQ(images.size(), 7u);
}

// Surjections of three involutions onto D3: count the triples that generate,
// directly from the permutation model.
TEST(EpimorphismSearch, CountOntoD3MatchesPermutationModel) {
  const GroupContext ctx(2);
  const FiniteGroup s3 = testing::permutation_group({{1, 0, 2}, {0, 2, 1}});
  std::vector<Element> sq;
  for (Element g = 0; g < 6; ++g) {
    if (s3.mul(g, g) == s3.identity()) sq.push_back(g);
  }
  std::size_t count = 0;
  for (Element a : sq) {
    for (Element b : sq) {
      for (Element c : sq) {
        if (generated_subgroup(s3, {a, b, c}).size() == 6) ++count;
      }
    }
  }
  const auto epis = epimorphism_search(
      ctx, std::make_shared<const FiniteGroup>(two_involution_group(3)));
  EXPECT_EQ(epis.size(), count);
  EXPECT_EQ(count, 42u);
  for (std::size_t i = 1; i < epis.size(); ++i) {
    EXPECT_LT(epis[i - 1].images(), epis[i].images());
  }
}

TEST(EpimorphismSearch, NoneOntoOddOrderTargets) {
  const GroupContext ctx(2);
  for (const NamedGroup& g : odd_order_fixtures()) {
    EXPECT_TRUE(
        epimorphism_search(ctx, std::make_shared<const FiniteGroup>(g.group))
            .empty())
        << g.name;
  }
}

// Among abelian targets, epimorphisms from G_2 exist exactly for K_{2^r}
// with r <= 3: images of three involutions span at most rank 3.
TEST(EpimorphismSearch, AbelianTargetsAreElementaryOfBoundedRank) {
  const GroupContext ctx(2);
  for (const NamedGroup& g : abelian_fixtures()) {
    const auto epis =
        epimorphism_search(ctx, std::make_shared<const FiniteGroup>(g.group));
    const bool ea = classify(g.group) == GroupClass::ElementaryAbelian2;
    const bool reachable = ea && g.group.order() <= 8;
    EXPECT_EQ(!epis.empty(), reachable) << g.name;
    if (!epis.empty()) {
      EXPECT_EQ(classify(g.group), GroupClass::ElementaryAbelian2) << g.name;
    }
  }
}

TEST(EpimorphismSearch, BoundExceeded) {
  Limits small;
  small.max_epimorphism_assignments = 100;
  EXPECT_THROW(epimorphism_search(
                   GroupContext(2),
                   std::make_shared<const FiniteGroup>(cyclic_group(5)), small),
               BoundExceeded);
}

TEST(Serialization, HomomorphismJsonRoundTrip) {
  const GroupContext ctx(2);
  std::vector<Homomorphism> homs = sample_homs(ctx);
  auto s3 = std::make_shared<const FiniteGroup>(two_involution_group(3));
  homs.push_back(epimorphism_search(ctx, s3).back());
  for (const Homomorphism& h : homs) {
    const auto j = to_json(h);
    const Homomorphism back = homomorphism_from_json(j);
    EXPECT_EQ(back.images(), h.images());
    EXPECT_EQ(back.target().table(), h.target().table());
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
  EXPECT_THROW(homomorphism_from_json(nlohmann::json{{"kind", "bogus"}}),
               InvalidArgument);
}

}  // namespace
}  // namespace gk
