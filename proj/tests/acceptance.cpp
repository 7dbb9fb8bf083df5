// Acceptance suite. Each criterion runs at its stated scale and must finish
// inside its time budget. With no arguments every criterion runs and one
// PASS/FAIL line is printed per criterion; `acceptance N` runs criterion N
// alone. The exit code is 0 iff every selected criterion passed.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gk/contractibility.hpp"
#include "gk/coset_table.hpp"
#include "gk/finite_group.hpp"
#include "gk/fixtures.hpp"
#include "gk/homomorphism.hpp"
#include "gk/subgroup_oracle.hpp"
#include "gk/tree.hpp"
#include "gk/word.hpp"

namespace {

using namespace gk;

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string why) {
    ok = false;
    if (failures.size() < 10) failures.push_back(std::move(why));
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<GenSet> nonempty_subsets(const GroupContext& ctx) {
  std::vector<GenSet> out;
  for (std::uint32_t b = 1; b <= ctx.generators().bits(); ++b) out.emplace_back(b);
  return out;
}

void for_each_family(const std::vector<GenSet>& pool, std::size_t m,
                     const std::function<void(const std::vector<GenSet>&)>& f) {
  std::vector<GenSet> fam(m);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t from) {
    if (pos == m) {
      f(fam);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      fam[pos] = pool[i];
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::string sets_str(const std::vector<GenSet>& fam) {
  std::string s;
  for (GenSet a : fam) s += a.to_string();
  return s;
}

// Parity mask of each word: bit i-1 set iff a_i occurs an odd number of times.
std::vector<std::uint32_t> parity_masks(const std::vector<Word>& words, int gens) {
  std::vector<std::uint32_t> out;
  out.reserve(words.size());
  for (const Word& x : words) {
    std::uint32_t m = 0;
    for (int i = 1; i <= gens; ++i) {
      if (letter_count(x, i) % 2) m |= 1u << (i - 1);
    }
    out.push_back(m);
  }
  return out;
}

std::vector<char> bounded_intersection(const std::vector<std::uint32_t>& masks,
                                       const std::vector<GenSet>& fam) {
  std::vector<char> in;
  in.reserve(masks.size());
  for (std::uint32_t m : masks) {
    bool member = true;
    for (GenSet a : fam) member = member && std::popcount(m & a.bits()) % 2 == 0;
    in.push_back(member);
  }
  return in;
}

Outcome criterion1() {
  Outcome o;
  std::size_t subgroups = 0, pairs = 0;
  for (int k : {2, 3}) {
    const GroupContext ctx(k);
    const auto subsets = nonempty_subsets(ctx);
    if (subsets.size() != (std::size_t{1} << (k + 1)) - 1) o.fail("subset count");
    for (GenSet a : subsets) {
      const SubgroupOracle h = parity_oracle(a, ctx);
      const CosetTable t = enumerate_cosets(h);
      const NormalityVerdict v = check_normality(h, t);
      ++subgroups;
      if (t.index() != 2) o.fail("k=" + std::to_string(k) + " H_" + a.to_string() + " index " + std::to_string(t.index()));
      if (!std::holds_alternative<CertifiedNormalVerdict>(v)) o.fail("H_" + a.to_string() + " " + verdict_name(v));
    }
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = i + 1; j < subsets.size(); ++j) {
        ++pairs;
        const Word w = Word::generator(ctx, (subsets[i] ^ subsets[j]).min());
        if (parity_oracle(subsets[i], ctx).contains(w) ==
            parity_oracle(subsets[j], ctx).contains(w)) {
          o.fail("no distinguishing word for " + subsets[i].to_string() + " " + subsets[j].to_string());
        }
      }
    }
  }
  o.summary = std::to_string(subgroups) + " parity subgroups (k=2,3) index 2 and CertifiedNormal, " +
              std::to_string(pairs) + " pairs distinguished";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const GroupContext ctx(3);
  const auto subsets = nonempty_subsets(ctx);
  const auto masks = parity_masks(enumerate_words(ctx, 8), 4);
  std::size_t independent = 0, dependent = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    for_each_family(subsets, m, [&](const std::vector<GenSet>& fam) {
      const Contractibility c = is_contractible(fam);
      const auto full = bounded_intersection(masks, fam);
      bool droppable = false;
      for (std::size_t d = 0; d < fam.size() && !droppable; ++d) {
        std::vector<GenSet> rest;
        for (std::size_t i = 0; i < fam.size(); ++i) {
          if (i != d) rest.push_back(fam[i]);
        }
        droppable = bounded_intersection(masks, rest) == full;
      }
      if (gf2_rank(fam) == fam.size()) {
        ++independent;
        if (c.contractible) o.fail(sets_str(fam) + " independent but contractible");
        const CosetTable t = enumerate_cosets(intersection_oracle(fam, ctx));
        if (t.index() != (std::size_t{1} << m)) {
          o.fail(sets_str(fam) + " index " + std::to_string(t.index()));
        }
        if (droppable) o.fail(sets_str(fam) + " brute force finds a redundant member");
      } else {
        ++dependent;
        if (!c.contractible) o.fail(sets_str(fam) + " dependent but not contractible");
        if (!droppable) o.fail(sets_str(fam) + " brute force finds no redundant member");
      }
    });
  }
  o.summary = std::to_string(independent) + " independent families at index 2^m, " +
              std::to_string(dependent) + " dependent families contractible (brute force, length <= 8)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const GroupContext ctx(2);
  std::size_t targets = 0, witnesses = 0;
  for (const NamedGroup& g : odd_order_fixtures()) {
    ++targets;
    if (g.group.order() % 2 == 0 || g.group.order() < 3 || g.group.order() > 15) {
      o.fail(g.name + " is not of odd order 3..15");
    }
    const auto epis =
        epimorphism_search(ctx, std::make_shared<const FiniteGroup>(g.group));
    if (!epis.empty()) o.fail(g.name + ": " + std::to_string(epis.size()) + " epimorphisms");
  }
  for (const BlockPartition& p : two_block_partitions(ctx)) {
    const SubgroupOracle s =
        index_three_oracle(IndexThreeSpec(ctx, p.a0(), p.blocks()[0], p.blocks()[1]));
    const NormalityVerdict v = check_normality(s, enumerate_cosets(s));
    const auto* w = std::get_if<NotNormalVerdict>(&v);
    if (w == nullptr || !s.contains(w->h) || s.contains(conjugate(w->h, w->g))) {
      o.fail("no validating witness for " + to_json(s).dump());
    } else {
      ++witnesses;
    }
  }
  o.summary = std::to_string(targets) + " odd-order targets without epimorphisms, " +
              std::to_string(witnesses) + " index-3 subgroups with NotNormal witnesses";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const GroupContext ctx(2);
  std::size_t groups = 0;
  for (const NamedGroup& g : abelian_fixtures()) {
    ++groups;
    const auto epis =
        epimorphism_search(ctx, std::make_shared<const FiniteGroup>(g.group));
    const bool ea = classify(g.group) == GroupClass::ElementaryAbelian2;
    if (epis.empty() == ea) {
      o.fail(g.name + ": " + std::to_string(epis.size()) + " epimorphisms, class " +
             to_string(classify(g.group)));
    }
  }
  o.summary = std::to_string(groups) + " abelian fixtures of order <= 16: epimorphism exists iff ElementaryAbelian2";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const GroupContext ctx(2);
  const auto words = enumerate_words(ctx, 8);
  const auto subsets = nonempty_subsets(ctx);
  std::size_t families = 0, contractible = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_family(subsets, n, [&](const std::vector<GenSet>& fam) {
      ++families;
      const SubgroupOracle kernel = kernel_oracle(parity_hom(fam, ctx));
      // A contractible family has the same intersection as the family with
      // its redundant members removed; that reduced family is what
      // intersection_oracle accepts.
      std::vector<GenSet> reduced = fam;
      for (Contractibility c = is_contractible(reduced); c.contractible;
           c = is_contractible(reduced)) {
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(*c.removable - 1));
      }
      if (reduced.size() != fam.size()) ++contractible;
      const SubgroupOracle inter = intersection_oracle(reduced, ctx);
      for (const Word& x : words) {
        bool conj = true;
        for (GenSet a : fam) conj = conj && letter_count(x, a) % 2 == 0;
        if (kernel.contains(x) != inter.contains(x) || kernel.contains(x) != conj) {
          o.fail(sets_str(fam) + " differs at " + to_string(x));
          return;
        }
      }
    });
  }
  o.summary = std::to_string(families) + " families (n <= 3, " + std::to_string(contractible) +
              " contractible) agree on " + std::to_string(words.size()) + " words of length <= 8";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const GroupContext ctx(2);
  const auto words = enumerate_words(ctx, 10);
  std::size_t oracles = 0;
  for (int n : {3, 5, 6}) {
    for (const BlockPartition& p : two_block_partitions(ctx)) {
      ++oracles;
      const SubgroupOracle h = two_gen_kernel_oracle(p, n);
      const CosetTable t = enumerate_cosets(h);
      const std::string tag = "n=" + std::to_string(n) + " " + to_json(h)["params"].dump();
      if (t.index() != static_cast<std::size_t>(2 * n)) o.fail(tag + " index " + std::to_string(t.index()));
      if (!std::holds_alternative<CertifiedNormalVerdict>(check_normality(h, t))) o.fail(tag + " not certified");
      if (classify(quotient_group(t)) != GroupClass::TwoInvolutionDihedral) o.fail(tag + " quotient class");
      const Homomorphism phi = two_gen_hom(p, n);
      for (const Word& x : words) {
        const bool image_identity = evaluate(phi, x) == phi.target().identity();
        if (h.contains(x) != image_identity ||
            projected_length_divisible(p, n, x) != image_identity) {
          o.fail(tag + " reading differs at " + to_string(x));
          break;
        }
      }
    }
  }
  o.summary = std::to_string(oracles) + " two-generator kernels (n = 3, 5, 6) of index 2n, dihedral quotients, "
              "divisibility reading = image identity on " + std::to_string(words.size()) + " words";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const GroupContext ctx(2);
  const auto words = enumerate_words(ctx, 10);
  std::size_t checked = 0, discrepancies = 0;
  for (const BlockPartition& p : two_block_partitions(ctx)) {
    const IndexThreeSpec s(ctx, p.a0(), p.blocks()[0], p.blocks()[1]);
    for (const Word& x : words) {
      const Word u = u_image(s, x);
      ++checked;
      if (gamma_reduce(u).is_identity() != (u.length() % 3 == 0)) ++discrepancies;
    }
  }
  if (discrepancies) o.fail(std::to_string(discrepancies) + " discrepancies");
  o.summary = std::to_string(checked) + " (partition, word) pairs of length <= 10, " +
              std::to_string(discrepancies) + " discrepancies";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const GroupContext ctx(2);
  const auto words = enumerate_words(ctx, 8);
  std::size_t partitions = 0, pairs = 0;
  for (const BlockPartition& p : two_block_partitions(ctx)) {
    ++partitions;
    const IndexThreeSpec spec(ctx, p.a0(), p.blocks()[0], p.blocks()[1]);
    const SubgroupOracle s = index_three_oracle(spec);
    const std::string tag = to_json(s)["params"].dump();
    std::vector<Word> members;
    for (const Word& x : words) {
      if (s.contains(x)) members.push_back(x);
    }
    if (!s.contains(Word::identity(ctx))) o.fail(tag + " misses e");
    bool closed = true;
    for (const Word& x : members) {
      if (!s.contains(inverse(x))) closed = false;
      for (const Word& y : members) {
        if (!s.contains(multiply(x, y))) closed = false;
      }
    }
    if (!closed) o.fail(tag + " not closed");
    const CosetTable t = enumerate_cosets(s);
    if (t.index() != 3) o.fail(tag + " index " + std::to_string(t.index()));
    std::vector<std::size_t> ul;
    for (const Word& x : words) ul.push_back(u_image(spec, x).length());
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        ++pairs;
        const std::size_t l = u_image(spec, multiply(words[i], inverse(words[j]))).length();
        const std::size_t diff = ul[i] > ul[j] ? ul[i] - ul[j] : ul[j] - ul[i];
        if (l != ul[i] + ul[j] && l != diff) {
          o.fail(tag + " case formula fails at " + to_string(words[i]) + ", " + to_string(words[j]));
          i = words.size();
          break;
        }
      }
    }
  }
  o.summary = std::to_string(partitions) + " partitions: closed, index 3, case formula on " +
              std::to_string(pairs) + " pairs";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t slices = 0, colorings = 0, exports = 0;
  for (int k = 1; k <= 3; ++k) {
    const GroupContext ctx(k);
    for (std::size_t depth = 0; depth <= 5; ++depth) {
      ++slices;
      std::size_t expected = 1, level = static_cast<std::size_t>(k + 1);
      for (std::size_t j = 1; j <= depth; ++j, level *= static_cast<std::size_t>(k)) {
        expected += level;
      }
      const std::size_t got = build_slice(ctx, depth).vertices.size();
      if (got != expected) {
        o.fail("k=" + std::to_string(k) + " depth " + std::to_string(depth) + ": " +
               std::to_string(got) + " vertices, expected " + std::to_string(expected));
      }
    }
    std::vector<SubgroupOracle> oracles;
    for (GenSet a : nonempty_subsets(ctx)) oracles.push_back(parity_oracle(a, ctx));
    for (const BlockPartition& p : two_block_partitions(ctx)) {
      oracles.push_back(two_gen_kernel_oracle(p, 3));
      oracles.push_back(index_three_oracle(
          IndexThreeSpec(ctx, p.a0(), p.blocks()[0], p.blocks()[1])));
    }
    const TreeSlice slice = build_slice(ctx, 4);
    for (const SubgroupOracle& h : oracles) {
      ++colorings;
      const CosetTable t = enumerate_cosets(h);
      const PeriodicColoring c = color_slice(slice, t);
      for (std::size_t u = 0; u < slice.vertices.size(); ++u) {
        for (std::size_t v = u + 1; v < slice.vertices.size(); ++v) {
          const bool same_coset = h.contains(
              multiply(slice.vertices[u].word, inverse(slice.vertices[v].word)));
          if (same_coset && c.colors[u] != c.colors[v]) {
            o.fail(to_json(h).dump() + " colors differ on one coset");
          }
        }
      }
      // Byte stability: rebuild everything from scratch and compare.
      const PeriodicColoring again =
          color_slice(build_slice(ctx, 4), enumerate_cosets(h));
      for (ExportFormat f : {ExportFormat::Dot, ExportFormat::Json}) {
        ++exports;
        if (export_coloring(c, f) != export_coloring(again, f)) {
          o.fail(to_json(h).dump() + " export not byte-stable");
        }
      }
    }
  }
  o.summary = std::to_string(slices) + " slice sizes, " + std::to_string(colorings) +
              " colorings constant on cosets at depth 4, " + std::to_string(exports) +
              " exports byte-stable";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "parity subgroups: index 2, normal, pairwise distinct", 5, criterion1},
      {2, "intersections: index 2^m or contractible", 30, criterion2},
      {3, "odd index: no epimorphisms, index-3 not normal", 60, criterion3},
      {4, "abelian images are elementary abelian", 60, criterion4},
      {5, "parity kernels equal intersections", 30, criterion5},
      {6, "two-generator kernels of index 2n", 120, criterion6},
      {7, "gamma collapse equals divisibility by 3", 10, criterion7},
      {8, "index-3 subgroups", 60, criterion8},
      {9, "tree model and colorings", 60, criterion9},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all = true;
  for (const Criterion& c : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.budget_seconds) {
      out.fail("took " + std::to_string(secs) + " s, budget " +
               std::to_string(c.budget_seconds) + " s");
    }
    all = all && out.ok;
    std::ostringstream line;
    line << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title
         << "): " << out.summary << " [" << std::fixed << std::setprecision(2) << secs
         << " s < " << std::setprecision(0) << c.budget_seconds << " s]";
    std::cout << line.str() << "\n";
    for (const std::string& f : out.failures) std::cout << "    " << f << "\n";
  }
  return all ? 0 : 1;
}
