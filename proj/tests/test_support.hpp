#pragma once

// Helpers shared by the test binaries: small graph builders, a seeded random
// graph source, and brute-force oracles that share no code with the library
// searches they are compared against.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gadgetry/coloring.hpp"
#include "gadgetry/graph.hpp"

namespace testing_support {

using gadgetry::Color;
using gadgetry::Graph;
using gadgetry::IdPair;
using gadgetry::Role;
using gadgetry::Vertex;

inline std::string vname(int i) { return "v" + std::to_string(i); }

inline Graph from_pairs(int n, const std::vector<std::pair<int, int>>& edges, const std::string& name = "g") {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.emplace_back(vname(i));
  std::vector<IdPair> es;
  for (auto [a, b] : edges) es.emplace_back(vname(a), vname(b));
  return Graph(name, vs, es);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return from_pairs(n, es, "C" + std::to_string(n));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  }
  return from_pairs(a + b, es, "K" + std::to_string(a) + "," + std::to_string(b));
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from_pairs(10, es, "petersen");
}

/// G(n, p) with a fixed seed supplied by the caller.
inline Graph random_graph(std::mt19937& rng, int n, double p, const std::string& name = "r") {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) es.emplace_back(a, b);
    }
  }
  return from_pairs(n, es, name);
}

// graph6 decoding for n <= 62 (one graph per line).
inline Graph from_graph6(const std::string& line, const std::string& name = "atlas") {
  const int n = line[0] - 63;
  std::vector<std::pair<int, int>> es;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = line[1 + bit / 6] - 63;
      if (byte >> (5 - bit % 6) & 1) es.emplace_back(i, j);
    }
  }
  return from_pairs(n, es, name);
}

/// Every graph on 1..7 vertices up to isomorphism.
inline std::vector<Graph> atlas7() {
  std::ifstream in(std::string(GADGETRY_FIXTURE_DIR) + "/atlas7.g6");
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(from_graph6(line, "atlas" + std::to_string(out.size())));
  }
  return out;
}

// ---- coloring oracle ---------------------------------------------------------

/// Enumerates all k^n total colorings and looks for a proper one agreeing with
/// the partial assignment.
inline bool brute_force_extends(const Graph& g, const std::map<std::string, Color>& partial, int k) {
  const std::size_t n = g.order();
  std::vector<int> color(n, 1);
  while (true) {
    bool ok = true;
    for (const auto& [id, c] : partial) ok = ok && color[g.index_of(id)] == c;
    for (const auto& [a, b] : g.edges()) ok = ok && color[a] != color[b];
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && color[i] == k) color[i++] = 1;
    if (i == n) return false;
    ++color[i];
  }
}

/// All boundary tuples, each checked with brute_force_extends.
inline std::set<gadgetry::ColorTuple> brute_force_trace(const Graph& g, const std::vector<std::string>& boundary,
                                                        int k) {
  std::set<gadgetry::ColorTuple> out;
  gadgetry::ColorTuple t(boundary.size(), 1);
  while (true) {
    std::map<std::string, Color> partial;
    for (std::size_t i = 0; i < boundary.size(); ++i) partial[boundary[i]] = t[i];
    if (brute_force_extends(g, partial, k)) out.insert(t);
    std::size_t i = 0;
    while (i < t.size() && t[i] == k) t[i++] = 1;
    if (i == t.size()) break;
    ++t[i];
  }
  return out;
}

// ---- minor oracle ------------------------------------------------------------

/// Tries every map from host vertices to {unused, bag 1, .., bag t} and
/// checks the model conditions directly.
inline bool naive_has_minor(const Graph& host, const Graph& pattern, const std::vector<std::string>& roots = {},
                            bool rooted = false) {
  const int n = static_cast<int>(host.order());
  const int t = static_cast<int>(pattern.order());
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [a, b] : host.edges()) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  std::uint32_t root_mask = 0;
  for (const auto& r : roots) root_mask |= 1u << host.index_of(r);

  auto connected = [&](std::uint32_t set) {
    std::uint32_t seen = set & (~set + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if (frontier >> v & 1) next |= adj[v];
      }
      frontier = next & set & ~seen;
      seen |= frontier;
    }
    return seen == set;
  };
  auto touches = [&](std::uint32_t a, std::uint32_t b) {
    for (int v = 0; v < n; ++v) {
      if ((a >> v & 1) && (adj[v] & b)) return true;
    }
    return false;
  };

  std::vector<int> assign(n, 0);
  while (true) {
    std::vector<std::uint32_t> bags(t, 0);
    for (int v = 0; v < n; ++v) {
      if (assign[v] > 0) bags[assign[v] - 1] |= 1u << v;
    }
    bool ok = true;
    for (int b = 0; b < t && ok; ++b) ok = bags[b] != 0 && connected(bags[b]) && (!rooted || (bags[b] & root_mask));
    for (std::size_t e = 0; e < pattern.edges().size() && ok; ++e) {
      auto [a, b] = pattern.edges()[e];
      ok = touches(bags[a], bags[b]);
    }
    if (ok) return true;
    int i = 0;
    while (i < n && assign[i] == t) assign[i++] = 0;
    if (i == n) return false;
    ++assign[i];
  }
}

}  // namespace testing_support
