#pragma once

// Finite slices of the Cayley tree Γ^k, with vertices labeled by elements
// of G_k, and colorings that are constant on right cosets of a subgroup.
//
// The root is e. The neighbors of a vertex x are x·a_i for i = 1..k+1, taken
// in ascending index order; the one with i equal to x's last letter is the
// parent.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/coset_table.hpp"
#include "gk/error.hpp"
#include "gk/limits.hpp"
#include "gk/word.hpp"

namespace gk {

struct TreeVertex {
  Word word;
  std::optional<std::size_t> parent;
  std::size_t depth;
};

struct TreeSlice {
  GroupContext ctx;
  std::size_t depth;
  std::vector<TreeVertex> vertices;
};

// Vertices in breadth-first order: every reduced word of length <= depth
// exactly once.
inline TreeSlice build_slice(const GroupContext& ctx, std::size_t depth,
                             const Limits& limits = default_limits) {
  if (depth > limits.max_word_length ||
      count_words(ctx, depth) > limits.max_tree_vertices) {
    throw BoundExceeded("tree slice of depth " + std::to_string(depth) +
                        " exceeds size bound");
  }
  TreeSlice s{ctx, depth, {}};
  s.vertices.reserve(count_words(ctx, depth));
  s.vertices.push_back({Word::identity(ctx), std::nullopt, 0});
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    if (s.vertices[v].depth == depth) continue;
    for (int i = 1; i <= ctx.generator_count(); ++i) {
      const Word& x = s.vertices[v].word;
      if (!x.is_identity() && x.back() == i) continue;
      s.vertices.push_back({multiply(x, Word::generator(ctx, i)), v,
                            s.vertices[v].depth + 1});
    }
  }
  return s;
}

struct PeriodicColoring {
  TreeSlice slice;
  nlohmann::ordered_json subgroup;
  std::vector<std::size_t> colors;  // coset id per vertex
};

inline PeriodicColoring color_slice(const TreeSlice& slice,
                                    const CosetTable& table) {
  require_same(slice.ctx, table.ctx);
  PeriodicColoring c{slice, table.subgroup, {}};
  c.colors.reserve(slice.vertices.size());
  for (const TreeVertex& v : slice.vertices) {
    c.colors.push_back(table.coset_of(v.word));
  }
  return c;
}

inline std::size_t distinct_colors(const PeriodicColoring& c) {
  std::vector<std::size_t> sorted = c.colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

enum class ExportFormat { Dot, Json };

inline ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  throw InvalidArgument("unknown export format '" + std::string(name) + "'");
}

inline constexpr std::array<const char*, 12> coset_palette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};

inline nlohmann::ordered_json to_json(const PeriodicColoring& c) {
  nlohmann::ordered_json j;
  j["k"] = c.slice.ctx.k();
  j["depth"] = c.slice.depth;
  j["subgroup"] = c.subgroup;
  auto verts = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < c.slice.vertices.size(); ++v) {
    const TreeVertex& tv = c.slice.vertices[v];
    nlohmann::ordered_json o;
    o["word"] = to_string(tv.word);
    o["parent"] = tv.parent ? nlohmann::ordered_json(*tv.parent)
                            : nlohmann::ordered_json(nullptr);
    o["coset"] = c.colors[v];
    verts.push_back(std::move(o));
  }
  j["vertices"] = std::move(verts);
  return j;
}

inline std::string to_dot(const PeriodicColoring& c) {
  std::ostringstream out;
  out << "graph cayley_tree {\n";
  out << "  // k=" << c.slice.ctx.k() << " depth=" << c.slice.depth
      << " subgroup=" << c.subgroup.dump() << "\n";
  out << "  node [style=filled, shape=circle];\n";
  for (std::size_t v = 0; v < c.slice.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << to_string(c.slice.vertices[v].word)
        << "\", fillcolor=\"" << coset_palette[c.colors[v] % coset_palette.size()]
        << "\", coset=" << c.colors[v] << "];\n";
  }
  for (std::size_t v = 0; v < c.slice.vertices.size(); ++v) {
    if (const auto& p = c.slice.vertices[v].parent) {
      out << "  v" << *p << " -- v" << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

inline std::string export_coloring(const PeriodicColoring& c,
                                   ExportFormat format) {
  if (format == ExportFormat::Dot) return to_dot(c);
  return to_json(c).dump(2) + "\n";
}

inline PeriodicColoring coloring_from_json(const nlohmann::json& j,
                                           const Limits& limits =
                                               default_limits) {
  try {
    const GroupContext ctx(j.at("k").get<int>(), limits);
    const SubgroupOracle o = oracle_from_json(j.at("subgroup"), limits);
    require_same(ctx, o.context());
    PeriodicColoring c{TreeSlice{ctx, j.at("depth").get<std::size_t>(), {}},
                       to_json(o), {}};
    for (const auto& v : j.at("vertices")) {
      Word w = parse_word(v.at("word").get<std::string>(), ctx);
      std::optional<std::size_t> parent;
      if (!v.at("parent").is_null()) {
        parent = v.at("parent").get<std::size_t>();
        if (*parent >= c.slice.vertices.size()) {
          throw InvalidArgument("parent index must precede its child");
        }
      }
      const std::size_t depth = w.length();
      c.slice.vertices.push_back({std::move(w), parent, depth});
      c.colors.push_back(v.at("coset").get<std::size_t>());
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad coloring: ") + e.what());
  }
}

}  // namespace gk
