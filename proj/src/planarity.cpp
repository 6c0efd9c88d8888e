#include "gadgetry/planarity.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "gadgetry/error.hpp"

namespace gadgetry {

bool is_planar(const Graph& g) {
  if (g.order() <= 4) return true;
  if (g.size() > 3 * g.order() - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.order());
  for (const auto& [i, j] : g.edges()) boost::add_edge(i, j, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

Graph boundary_augmentation(const Graph& g, const CyclicBoundary& boundary, const std::string& apex_id) {
  std::string apex = apex_id;
  while (g.contains(apex)) apex += "_";
  auto vertices = g.vertices();
  auto edges = g.edge_ids();
  const auto& b = boundary.order;
  if (!b.empty()) vertices.emplace_back(apex);
  for (std::size_t i = 0; i < b.size(); ++i) {
    edges.emplace_back(apex, b[i]);
    if (b.size() >= 2 && !(b.size() == 2 && i == 1)) edges.emplace_back(b[i], b[(i + 1) % b.size()]);
  }
  return Graph(g.name(), std::move(vertices), edges);
}

bool planar_with_boundary(const Graph& g, const CyclicBoundary& boundary) {
  std::set<std::string> seen;
  for (const auto& id : boundary.order) {
    if (!g.contains(id)) throw Error(ErrorCode::UnknownId, "boundary vertex '" + id + "' not in graph");
    if (!seen.insert(id).second) throw Error(ErrorCode::BadParameter, "boundary vertex '" + id + "' repeated");
  }
  return is_planar(boundary_augmentation(g, boundary));
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Embeds a 2-connected block path by path. Faces are kept as vertex cycles,
// which is valid because every intermediate embedded graph stays 2-connected.
bool block_is_planar(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  int m = 0;
  for (const auto& list : adj) m += static_cast<int>(list.size());
  m /= 2;
  if (n < 5) return true;
  if (m > 3 * n - 6) return false;

  std::vector<std::vector<char>> edge_in(n, std::vector<char>(n, 0));
  std::vector<char> vertex_in(n, 0);
  int embedded_edges = 0;

  // Initial cycle: edge (0, a) closed by a path from a back to 0.
  const int a = adj[0][0];
  std::vector<int> parent(n, -1);
  std::vector<int> queue{a};
  parent[a] = a;
  for (std::size_t h = 0; h < queue.size() && parent[0] < 0; ++h) {
    int x = queue[h];
    for (int y : adj[x]) {
      if (parent[y] >= 0 || (x == a && y == 0)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  std::vector<int> cycle;
  for (int x = 0; x != a; x = parent[x]) cycle.push_back(x);
  cycle.push_back(a);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    vertex_in[u] = 1;
    edge_in[u][v] = edge_in[v][u] = 1;
    ++embedded_edges;
  }
  std::vector<std::vector<int>> faces{cycle, cycle};

  struct Fragment {
    std::vector<int> attachments;
    std::vector<int> body;  // empty for a chord
  };

  while (embedded_edges < m) {
    std::vector<Fragment> fragments;
    for (int u = 0; u < n; ++u) {
      if (!vertex_in[u]) continue;
      for (int v : adj[u]) {
        if (v > u && vertex_in[v] && !edge_in[u][v]) fragments.push_back({{u, v}, {}});
      }
    }
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
      if (vertex_in[s] || comp[s] >= 0) continue;
      Fragment frag;
      std::set<int> att;
      comp[s] = s;
      frag.body.push_back(s);
      for (std::size_t h = 0; h < frag.body.size(); ++h) {
        for (int y : adj[frag.body[h]]) {
          if (vertex_in[y]) {
            att.insert(y);
          } else if (comp[y] < 0) {
            comp[y] = s;
            frag.body.push_back(y);
          }
        }
      }
      frag.attachments.assign(att.begin(), att.end());
      fragments.push_back(std::move(frag));
    }

    auto admissible = [&](const Fragment& f) {
      std::vector<int> out;
      for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& face = faces[fi];
        bool all = std::all_of(f.attachments.begin(), f.attachments.end(), [&](int x) {
          return std::find(face.begin(), face.end(), x) != face.end();
        });
        if (all) out.push_back(fi);
      }
      return out;
    };

    int chosen = -1, chosen_face = -1;
    for (int i = 0; i < static_cast<int>(fragments.size()); ++i) {
      auto faces_ok = admissible(fragments[i]);
      if (faces_ok.empty()) return false;
      if (faces_ok.size() == 1) {
        chosen = i;
        chosen_face = faces_ok[0];
        break;
      }
      if (chosen < 0) {
        chosen = i;
        chosen_face = faces_ok[0];
      }
    }

    const Fragment& frag = fragments[chosen];
    std::vector<int> path;
    if (frag.body.empty()) {
      path = frag.attachments;
    } else {
      // Attachment a1, walk through the body to a different attachment a2.
      const int a1 = frag.attachments[0];
      std::vector<int> from(n, -2);
      std::vector<int> bfs;
      for (int y : adj[a1]) {
        if (!vertex_in[y] && comp[y] == comp[frag.body[0]] && from[y] == -2) {
          from[y] = -1;
          bfs.push_back(y);
        }
      }
      int end = -1, a2 = -1;
      for (std::size_t h = 0; h < bfs.size() && end < 0; ++h) {
        int x = bfs[h];
        for (int y : adj[x]) {
          if (vertex_in[y] && y != a1) {
            end = x;
            a2 = y;
            break;
          }
          if (!vertex_in[y] && from[y] == -2) {
            from[y] = x;
            bfs.push_back(y);
          }
        }
      }
      if (end < 0) return false;  // not 2-connected; caller guarantees otherwise
      std::vector<int> interior;
      for (int x = end; x != -1; x = from[x]) interior.push_back(x);
      std::reverse(interior.begin(), interior.end());
      path.push_back(a1);
      path.insert(path.end(), interior.begin(), interior.end());
      path.push_back(a2);
    }

    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      int u = path[i], v = path[i + 1];
      vertex_in[u] = vertex_in[v] = 1;
      edge_in[u][v] = edge_in[v][u] = 1;
      ++embedded_edges;
    }

    const auto face = faces[chosen_face];
    const int len = static_cast<int>(face.size());
    const int pi = static_cast<int>(std::find(face.begin(), face.end(), path.front()) - face.begin());
    const int pj = static_cast<int>(std::find(face.begin(), face.end(), path.back()) - face.begin());
    std::vector<int> f1, f2;
    for (int x = pi;; x = (x + 1) % len) {
      f1.push_back(face[x]);
      if (x == pj) break;
    }
    for (int x = pj;; x = (x + 1) % len) {
      f2.push_back(face[x]);
      if (x == pi) break;
    }
    for (std::size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
    faces[chosen_face] = std::move(f1);
    faces.push_back(std::move(f2));
  }
  return true;
}

}  // namespace

bool is_planar_path_embedding(const Graph& g) {
  const int n = static_cast<int>(g.order());
  if (n <= 4) return true;
  if (g.size() > 3 * g.order() - 6) return false;

  // Biconnected blocks by Tarjan's edge-stack method.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (auto vv : g.neighbors(u)) {
      int v = static_cast<int>(vv);
      if (v == parent) continue;
      if (disc[v] < 0) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<std::pair<int, int>> block;
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == std::make_pair(u, v)) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] < 0) dfs(s, -1);
  }

  for (const auto& block : blocks) {
    std::vector<int> local(n, -1);
    int count = 0;
    for (const auto& [u, v] : block) {
      if (local[u] < 0) local[u] = count++;
      if (local[v] < 0) local[v] = count++;
    }
    Adjacency adj(count);
    for (const auto& [u, v] : block) {
      adj[local[u]].push_back(local[v]);
      adj[local[v]].push_back(local[u]);
    }
    if (!block_is_planar(adj)) return false;
  }
  return true;
}

}  // namespace gadgetry
