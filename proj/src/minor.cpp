#include "gadgetry/minor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "gadgetry/error.hpp"

namespace gadgetry {

namespace {

using Clock = std::chrono::steady_clock;

template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }
  bool none() const {
    for (auto x : w) {
      if (x) return false;
    }
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int lowest() const {
    for (int i = 0; i < W; ++i) {
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    }
    return -1;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  bool operator==(const Bits&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < W; ++i) {
      for (auto x = w[i]; x; x &= x - 1) f(i * 64 + std::countr_zero(x));
    }
  }
};

struct Budget {
  Clock::time_point start = Clock::now();
  double limit_secs;
  MinorSearchStats* stats;
  std::uint64_t nodes = 0;

  void tick() {
    ++nodes;
    if ((nodes & 0xFFF) == 0 && limit_secs > 0) {
      double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (elapsed > limit_secs) {
        flush();
        throw Error(ErrorCode::Timeout, [&] {
                      std::ostringstream msg;
                      msg << "minor search exceeded " << limit_secs << " s after " << nodes << " nodes";
                      return msg.str();
                    }());
      }
    }
  }
  void flush() {
    if (!stats) return;
    stats->nodes += nodes;
    stats->seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }
};

// Sub-problem on one connected host component: partition ALL of its vertices
// into t connected blocks realizing the pattern. Covering the component loses
// nothing: any unused vertex adjacent to a block can join that block without
// breaking a model, and the component is connected.
//
// Blocks are built in order of their smallest vertex (block i is seeded with
// the smallest unassigned vertex), each grown one frontier vertex at a time by
// an include/exclude branching that visits every connected set once.
template <int W>
class PartitionSearch {
 public:
  PartitionSearch(std::vector<Bits<W>> adj, Bits<W> roots, bool rooted, std::vector<std::vector<char>> pattern_adj,
                  Budget& budget)
      : adj_(std::move(adj)),
        roots_(roots),
        rooted_(rooted),
        qadj_(std::move(pattern_adj)),
        t_(static_cast<int>(qadj_.size())),
        budget_(budget) {
    complete_ = true;
    for (int a = 0; a < t_; ++a) {
      for (int b = 0; b < t_; ++b) {
        if (a != b && !qadj_[a][b]) complete_ = false;
      }
    }
  }

  /// Block i is assigned to pattern vertex assignment_[i].
  bool run() {
    for (int i = 0; i < static_cast<int>(adj_.size()); ++i) remaining_.set(i);
    return open(0);
  }

  const std::vector<Bits<W>>& blocks() const { return blocks_; }
  const std::vector<int>& assignment() const { return assignment_; }

 private:
  Bits<W> neighborhood(const Bits<W>& s) const {
    Bits<W> out;
    s.for_each([&](int v) { out = out | adj_[v]; });
    return out;
  }

  bool connected(const Bits<W>& s) const {
    int seed = s.lowest();
    if (seed < 0) return true;
    Bits<W> reach;
    reach.set(seed);
    while (true) {
      Bits<W> next = (neighborhood(reach) & s) | reach;
      if (next == reach) break;
      reach = next;
    }
    return reach == s;
  }

  int component_count(const Bits<W>& s) const {
    int count = 0;
    Bits<W> left = s;
    while (!left.none()) {
      Bits<W> reach;
      reach.set(left.lowest());
      while (true) {
        Bits<W> next = (neighborhood(reach) & left) | reach;
        if (next == reach) break;
        reach = next;
      }
      left = left.minus(reach);
      ++count;
    }
    return count;
  }

  bool open(int i) {
    if (i == t_) return remaining_.none() && finish();
    if (remaining_.none()) return false;
    if (i == t_ - 1) {
      if (!connected(remaining_)) return false;
      return close(i, remaining_, neighborhood(remaining_));
    }
    const int seed = remaining_.lowest();
    Bits<W> bag, excluded;
    bag.set(seed);
    return grow(i, bag, adj_[seed], excluded);
  }

  bool grow(int i, const Bits<W>& bag, const Bits<W>& bag_nbrs, const Bits<W>& excluded) {
    budget_.tick();
    const int later = t_ - i - 1;
    const Bits<W> rest = remaining_.minus(bag);
    // The bag only grows from here, so these bounds only get tighter.
    if (rest.count() < later) return false;
    if (rooted_ && (rest & roots_).count() < later) return false;
    if (complete_) {
      for (const auto& nb : block_nbrs_) {
        if ((nb & rest).count() < later) return false;
      }
    }
    const Bits<W> frontier = (bag_nbrs & rest).minus(excluded);
    const int v = frontier.lowest();
    if (v < 0) return close(i, bag, bag_nbrs);
    Bits<W> with = bag;
    with.set(v);
    if (grow(i, with, bag_nbrs | adj_[v], excluded)) return true;
    Bits<W> ex = excluded;
    ex.set(v);
    return grow(i, bag, bag_nbrs, ex);
  }

  bool close(int i, const Bits<W>& bag, const Bits<W>& bag_nbrs) {
    const int later = t_ - i - 1;
    const Bits<W> rest = remaining_.minus(bag);
    if (rooted_ && (bag & roots_).none()) return false;
    if (complete_) {
      for (const auto& b : blocks_) {
        if ((bag_nbrs & b).none()) return false;
      }
    }
    if (later == 0) {
      if (!rest.none()) return false;
    } else {
      if (rest.count() < later) return false;
      if (rooted_ && (rest & roots_).count() < later) return false;
      if (complete_) {
        if ((bag_nbrs & rest).count() < later) return false;
        for (const auto& nb : block_nbrs_) {
          if ((nb & rest).count() < later) return false;
        }
        // Later blocks are pairwise adjacent, so together they are connected.
        if (!connected(rest)) return false;
      } else if (component_count(rest) > later) {
        return false;
      }
    }
    const Bits<W> saved = remaining_;
    blocks_.push_back(bag);
    block_nbrs_.push_back(bag_nbrs);
    remaining_ = rest;
    const bool ok = open(i + 1);
    remaining_ = saved;
    if (!ok) {
      blocks_.pop_back();
      block_nbrs_.pop_back();
    }
    return ok;
  }

  // Matches blocks to pattern vertices so that every pattern edge joins
  // adjacent blocks.
  bool finish() {
    std::vector<std::vector<char>> quotient(t_, std::vector<char>(t_, 0));
    for (int a = 0; a < t_; ++a) {
      for (int b = 0; b < t_; ++b) {
        quotient[a][b] = a != b && !(block_nbrs_[a] & blocks_[b]).none();
      }
    }
    std::vector<int> perm(t_);
    for (int a = 0; a < t_; ++a) perm[a] = a;  // perm[pattern vertex] = block
    do {
      bool ok = true;
      for (int a = 0; a < t_ && ok; ++a) {
        for (int b = a + 1; b < t_ && ok; ++b) {
          if (qadj_[a][b] && !quotient[perm[a]][perm[b]]) ok = false;
        }
      }
      if (ok) {
        assignment_.assign(t_, 0);
        for (int a = 0; a < t_; ++a) assignment_[perm[a]] = a;
        return true;
      }
    } while (!complete_ && std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  std::vector<Bits<W>> adj_;
  Bits<W> roots_;
  bool rooted_;
  std::vector<std::vector<char>> qadj_;
  int t_;
  bool complete_ = true;
  Budget& budget_;
  Bits<W> remaining_;
  std::vector<Bits<W>> blocks_;
  std::vector<Bits<W>> block_nbrs_;
  std::vector<int> assignment_;
};

// Local result: for each pattern vertex (by index within the sub-pattern), the
// host indices of its branch set.
using LocalModel = std::vector<std::vector<std::size_t>>;

template <int W>
std::optional<LocalModel> solve_component_w(const Graph& host, const std::vector<std::size_t>& comp,
                                            const std::vector<char>& is_root, bool rooted,
                                            const std::vector<std::vector<char>>& qadj, Budget& budget) {
  std::vector<int> local(host.order(), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
  std::vector<Bits<W>> adj(comp.size());
  Bits<W> roots;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (auto u : host.neighbors(comp[i])) adj[i].set(local[u]);
    if (is_root[comp[i]]) roots.set(static_cast<int>(i));
  }
  PartitionSearch<W> search(std::move(adj), roots, rooted, qadj, budget);
  if (!search.run()) return std::nullopt;
  LocalModel out(qadj.size());
  for (std::size_t b = 0; b < search.blocks().size(); ++b) {
    auto& dest = out[search.assignment()[b]];
    search.blocks()[b].for_each([&](int v) { dest.push_back(comp[v]); });
  }
  return out;
}

std::optional<LocalModel> solve_component(const Graph& host, const std::vector<std::size_t>& comp,
                                          const std::vector<char>& is_root, bool rooted,
                                          const std::vector<std::vector<char>>& qadj, Budget& budget) {
  const auto n = comp.size();
  if (n <= 64) return solve_component_w<1>(host, comp, is_root, rooted, qadj, budget);
  if (n <= 128) return solve_component_w<2>(host, comp, is_root, rooted, qadj, budget);
  if (n <= 256) return solve_component_w<4>(host, comp, is_root, rooted, qadj, budget);
  if (n <= 1024) return solve_component_w<16>(host, comp, is_root, rooted, qadj, budget);
  throw Error(ErrorCode::BadParameter, "host component with " + std::to_string(n) + " vertices is beyond the search");
}

}  // namespace

std::optional<MinorModel> find_model(const Graph& host, const Graph& pattern, const RootConstraint& rc,
                                     double budget_secs, MinorSearchStats* stats) {
  if (pattern.empty()) throw Error(ErrorCode::BadParameter, "pattern graph is empty");
  std::vector<char> is_root(host.order(), 0);
  std::size_t root_count = 0;
  if (rc.rooted) {
    for (const auto& r : rc.roots) {
      auto i = host.find(r);
      if (!i) throw Error(ErrorCode::UnknownId, "root '" + r + "' not in host");
      root_count += !is_root[*i];
      is_root[*i] = 1;
    }
    if (root_count < pattern.order()) return std::nullopt;
  }
  if (host.order() < pattern.order()) return std::nullopt;

  Budget budget{Clock::now(), budget_secs, stats};
  const auto host_comps = connected_components(host);
  const auto pattern_comps = connected_components(pattern);

  // Each pattern component lives inside one host component; try every
  // placement, solving each (host component, pattern components) pair once.
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::optional<LocalModel>> memo;
  std::vector<std::size_t> placement(pattern_comps.size());
  std::optional<MinorModel> found;

  auto try_placement = [&]() -> bool {
    std::map<std::size_t, std::vector<std::size_t>> groups;  // host comp -> pattern vertex indices
    for (std::size_t pc = 0; pc < pattern_comps.size(); ++pc) {
      auto& g = groups[placement[pc]];
      g.insert(g.end(), pattern_comps[pc].begin(), pattern_comps[pc].end());
    }
    std::map<std::string, std::vector<std::string>> branch_sets;
    for (auto& [hc, pverts] : groups) {
      std::sort(pverts.begin(), pverts.end());
      if (host_comps[hc].size() < pverts.size()) return false;
      auto key = std::make_pair(hc, pverts);
      auto it = memo.find(key);
      if (it == memo.end()) {
        std::vector<std::vector<char>> qadj(pverts.size(), std::vector<char>(pverts.size(), 0));
        for (std::size_t a = 0; a < pverts.size(); ++a) {
          for (std::size_t b = 0; b < pverts.size(); ++b) qadj[a][b] = pattern.adjacent(pverts[a], pverts[b]);
        }
        it = memo.emplace(key, solve_component(host, host_comps[hc], is_root, rc.rooted, qadj, budget)).first;
      }
      if (!it->second) return false;
      for (std::size_t a = 0; a < pverts.size(); ++a) {
        auto& dest = branch_sets[pattern.id(pverts[a])];
        for (auto v : (*it->second)[a]) dest.push_back(host.id(v));
        std::sort(dest.begin(), dest.end());
      }
    }
    found = MinorModel{pattern, host, std::move(branch_sets)};
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t pc) -> bool {
    if (pc == pattern_comps.size()) return try_placement();
    for (std::size_t hc = 0; hc < host_comps.size(); ++hc) {
      placement[pc] = hc;
      if (place(pc + 1)) return true;
    }
    return false;
  };
  place(0);
  budget.flush();
  if (found) {
    // Trim to an inclusion-minimal model: drop any vertex whose removal
    // keeps every model condition.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [pid, set] : found->branch_sets) {
        for (std::size_t i = 0; i < set.size() && set.size() > 1;) {
          const std::string v = set[i];
          set.erase(set.begin() + static_cast<std::ptrdiff_t>(i));
          if (verify_model(*found, rc)) {
            changed = true;
          } else {
            set.insert(set.begin() + static_cast<std::ptrdiff_t>(i), v);
            ++i;
          }
        }
      }
    }
  }
  return found;
}

bool verify_model(const MinorModel& model, const RootConstraint& rc) {
  const Graph& host = model.host;
  const Graph& pattern = model.pattern;
  std::vector<char> is_root(host.order(), 0);
  if (rc.rooted) {
    for (const auto& r : rc.roots) {
      auto i = host.find(r);
      if (!i) throw Error(ErrorCode::UnknownId, "root '" + r + "' not in host");
      is_root[*i] = 1;
    }
  }
  std::vector<int> owner(host.order(), -1);
  std::vector<std::vector<std::size_t>> sets(pattern.order());
  for (const auto& [pid, hids] : model.branch_sets) {
    auto p = pattern.find(pid);
    if (!p) throw Error(ErrorCode::UnknownId, "pattern vertex '" + pid + "' not in pattern");
    for (const auto& hid : hids) {
      auto h = host.find(hid);
      if (!h) throw Error(ErrorCode::UnknownId, "host vertex '" + hid + "' not in host");
      if (owner[*h] >= 0) return false;
      owner[*h] = static_cast<int>(*p);
      sets[*p].push_back(*h);
    }
  }
  for (std::size_t p = 0; p < pattern.order(); ++p) {
    const auto& s = sets[p];
    if (s.empty()) return false;
    if (rc.rooted && std::none_of(s.begin(), s.end(), [&](std::size_t v) { return is_root[v]; })) return false;
    std::vector<char> seen(host.order(), 0);
    std::vector<std::size_t> stack{s[0]};
    seen[s[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto u : host.neighbors(v)) {
        if (!seen[u] && owner[u] == static_cast<int>(p)) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != s.size()) return false;
  }
  for (const auto& [a, b] : pattern.edges()) {
    bool joined = false;
    for (auto v : sets[a]) {
      for (auto u : host.neighbors(v)) {
        if (owner[u] == static_cast<int>(b)) joined = true;
      }
    }
    if (!joined) return false;
  }
  return true;
}

bool is_minor_free(const Graph& host, const Graph& pattern, const RootConstraint& rc, double budget_secs,
                   MinorSearchStats* stats) {
  return !find_model(host, pattern, rc, budget_secs, stats).has_value();
}

Json model_to_json(const MinorModel& model) {
  Json sets = Json::object();
  for (const auto& [pid, hids] : model.branch_sets) sets[pid] = hids;
  return Json{{"pattern", model.pattern.name()}, {"host", model.host.name()}, {"branch_sets", std::move(sets)}};
}

}  // namespace gadgetry
