#include "gadgetry/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "gadgetry/error.hpp"

namespace gadgetry {

namespace {

constexpr int kMaxColors = 63;

void check_color(int k, Color c, const std::string& where) {
  if (c < 1 || c > k) {
    throw Error(ErrorCode::ColorOutOfRange,
                "color " + std::to_string(c) + " at '" + where + "' outside 1.." + std::to_string(k));
  }
}

// Every injective relabeling of the tuple's colors into [k], i.e. the orbit of
// `t` under the color permutations.
void for_each_in_orbit(const ColorTuple& t, int k, const std::function<void(const ColorTuple&)>& emit) {
  ColorTuple rep = canonical_relabeling(t);
  int labels = rep.empty() ? 0 : *std::max_element(rep.begin(), rep.end());
  std::vector<Color> image(labels + 1, 0);
  std::vector<char> used(k + 1, 0);
  ColorTuple out(rep.size());
  std::function<void(int)> assign = [&](int label) {
    if (label > labels) {
      for (std::size_t i = 0; i < rep.size(); ++i) out[i] = image[rep[i]];
      emit(out);
      return;
    }
    for (Color c = 1; c <= k; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      image[label] = c;
      assign(label + 1);
      used[c] = 0;
    }
  };
  assign(1);
}

class ExtensionSearch {
 public:
  ExtensionSearch(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), 0), domain_(g.order(), 0) {}

  bool run(const PartialColoring& partial) {
    const std::uint64_t full = (k_ >= 64) ? ~0ULL : ((1ULL << k_) - 1);
    for (const auto& [id, c] : partial.assignment()) {
      check_color(k_, c, id);
      color_[g_.index_of(id)] = c;
    }
    for (const auto& [i, j] : g_.edges()) {
      if (color_[i] && color_[i] == color_[j]) return false;
    }
    for (std::size_t v = 0; v < g_.order(); ++v) {
      if (color_[v]) continue;
      domain_[v] = full;
      for (auto u : g_.neighbors(v)) {
        if (color_[u]) domain_[v] &= ~bit(color_[u]);
      }
      if (!domain_[v]) return false;
    }
    // Uncolored components are independent once the precoloring has been
    // pushed into their domains.
    std::vector<char> seen(g_.order(), 0);
    for (std::size_t s = 0; s < g_.order(); ++s) {
      if (color_[s] || seen[s]) continue;
      std::vector<std::size_t> comp{s};
      seen[s] = 1;
      for (std::size_t h = 0; h < comp.size(); ++h) {
        for (auto u : g_.neighbors(comp[h])) {
          if (!color_[u] && !seen[u]) {
            seen[u] = 1;
            comp.push_back(u);
          }
        }
      }
      free_ = std::move(comp);
      first_ = partial.empty();
      if (!solve(free_.size())) return false;
    }
    return true;
  }

 private:
  static std::uint64_t bit(Color c) { return 1ULL << (c - 1); }

  // Most-constrained vertex first; ties by uncolored degree, then index.
  std::size_t pick() const {
    std::size_t best = SIZE_MAX;
    int best_dom = 1 << 30, best_deg = -1;
    for (auto v : free_) {
      if (color_[v]) continue;
      int dom = std::popcount(domain_[v]);
      int deg = 0;
      for (auto u : g_.neighbors(v)) deg += color_[u] == 0;
      if (dom < best_dom || (dom == best_dom && deg > best_deg)) {
        best = v;
        best_dom = dom;
        best_deg = deg;
      }
    }
    return best;
  }

  bool solve(std::size_t remaining) {
    if (remaining == 0) return true;
    const std::size_t v = pick();
    std::uint64_t options = domain_[v];
    if (first_) {
      options &= bit(1);
      first_ = false;
    }
    std::vector<std::size_t> touched;
    for (Color c = 1; c <= k_; ++c) {
      if (!(options & bit(c))) continue;
      color_[v] = c;
      touched.clear();
      bool dead = false;
      for (auto u : g_.neighbors(v)) {
        if (color_[u] || !(domain_[u] & bit(c))) continue;
        domain_[u] &= ~bit(c);
        touched.push_back(u);
        if (!domain_[u]) dead = true;
      }
      if (!dead && solve(remaining - 1)) return true;
      for (auto u : touched) domain_[u] |= bit(c);
      color_[v] = 0;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Color> color_;
  std::vector<std::uint64_t> domain_;
  std::vector<std::size_t> free_;
  bool first_ = false;
};

}  // namespace

PartialColoring::PartialColoring(int k) : k_(k) {
  if (k < 1 || k > kMaxColors) throw Error(ErrorCode::BadParameter, "palette size " + std::to_string(k));
}

PartialColoring::PartialColoring(int k, std::map<std::string, Color> assignment) : PartialColoring(k) {
  for (auto& [id, c] : assignment) set(id, c);
}

PartialColoring::PartialColoring(int k, const std::vector<std::string>& ids, const ColorTuple& colors)
    : PartialColoring(k) {
  if (ids.size() != colors.size()) throw Error(ErrorCode::BadParameter, "ids and colors differ in length");
  for (std::size_t i = 0; i < ids.size(); ++i) set(ids[i], colors[i]);
}

PartialColoring& PartialColoring::set(const std::string& id, Color c) {
  check_color(k_, c, id);
  assignment_[id] = c;
  return *this;
}

ColoringFamily::ColoringFamily(std::vector<std::string> domain, int k) : domain_(std::move(domain)), k_(k) {
  if (k < 1 || k > kMaxColors) throw Error(ErrorCode::BadParameter, "palette size " + std::to_string(k));
}

ColoringFamily::ColoringFamily(std::vector<std::string> domain, int k, const std::vector<ColorTuple>& members)
    : ColoringFamily(std::move(domain), k) {
  for (const auto& m : members) insert(m);
}

void ColoringFamily::insert(ColorTuple t) {
  if (t.size() != domain_.size()) {
    throw Error(ErrorCode::BadParameter, "tuple of length " + std::to_string(t.size()) + " for a domain of size " +
                                             std::to_string(domain_.size()));
  }
  for (std::size_t i = 0; i < t.size(); ++i) check_color(k_, t[i], domain_[i]);
  members_.insert(std::move(t));
}

PartialColoring ColoringFamily::as_partial(const ColorTuple& t) const { return PartialColoring(k_, domain_, t); }

ColoringFamily ColoringFamily::all(std::vector<std::string> domain, int k) {
  ColoringFamily fam(std::move(domain), k);
  ColorTuple t(fam.domain_.size(), 1);
  while (true) {
    fam.members_.insert(t);
    std::size_t i = t.size();
    while (i > 0 && t[i - 1] == k) t[--i] = 1;
    if (i == 0) break;
    ++t[i - 1];
  }
  return fam;
}

ColorTuple canonical_relabeling(const ColorTuple& t) {
  std::map<Color, Color> relabel;
  ColorTuple out;
  out.reserve(t.size());
  for (Color c : t) {
    auto [it, inserted] = relabel.emplace(c, static_cast<Color>(relabel.size() + 1));
    out.push_back(it->second);
  }
  return out;
}

bool extends(const Graph& g, const PartialColoring& partial) {
  return ExtensionSearch(g, partial.k()).run(partial);
}

ColoringFamily boundary_trace(const Graph& g, const std::vector<std::string>& boundary, int k) {
  std::set<std::string> seen;
  for (const auto& id : boundary) {
    g.index_of(id);
    if (!seen.insert(id).second) throw Error(ErrorCode::DuplicateBoundaryId, "boundary id '" + id + "' repeated");
  }
  ColoringFamily out(boundary, k);
  // Extension is invariant under color permutations, so one representative
  // per orbit (restricted-growth tuples) decides the whole orbit.
  ColorTuple rep(boundary.size(), 1);
  std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int used) {
    if (pos == rep.size()) {
      if (extends(g, PartialColoring(k, boundary, rep))) {
        for_each_in_orbit(rep, k, [&](const ColorTuple& t) { out.insert(t); });
      }
      return;
    }
    for (Color c = 1; c <= std::min(used + 1, k); ++c) {
      rep[pos] = c;
      walk(pos + 1, std::max(used, c));
    }
  };
  walk(0, 0);
  return out;
}

ColoringFamily close_under_permutations(const ColoringFamily& family) {
  ColoringFamily out(family.domain(), family.k());
  for (const auto& m : family.members()) {
    for_each_in_orbit(m, family.k(), [&](const ColorTuple& t) { out.insert(t); });
  }
  return out;
}

bool is_closed(const ColoringFamily& family) { return close_under_permutations(family) == family; }

Json family_to_json(const ColoringFamily& family) {
  Json members = Json::array();
  for (const auto& m : family.members()) members.push_back(m);
  return Json{{"domain", family.domain()}, {"k", family.k()}, {"members", std::move(members)}};
}

ColoringFamily family_from_json(const Json& doc, const std::string& where) {
  const std::string root = where.empty() ? "" : where + ".";
  auto bad = [&](const std::string& field, const std::string& what) {
    throw Error(ErrorCode::SchemaViolation, "field '" + root + field + "': " + what);
  };
  if (!doc.is_object()) bad("<root>", "expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "domain" && it.key() != "k" && it.key() != "members") bad(it.key(), "unknown field");
  }
  if (!doc.contains("domain") || !doc["domain"].is_array()) bad("domain", "missing or not a list");
  if (!doc.contains("k") || !doc["k"].is_number_integer()) bad("k", "missing or not an integer");
  if (!doc.contains("members") || !doc["members"].is_array()) bad("members", "missing or not a list");
  std::vector<std::string> domain;
  for (const auto& d : doc["domain"]) {
    if (!d.is_string()) bad("domain", "ids must be strings");
    domain.push_back(d.get<std::string>());
  }
  std::set<std::string> distinct(domain.begin(), domain.end());
  if (distinct.size() != domain.size()) bad("domain", "repeated id");
  const int k = doc["k"].get<int>();
  if (k < 1 || k > kMaxColors) bad("k", "palette size out of range");
  ColoringFamily fam(domain, k);
  const auto& ms = doc["members"];
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string field = "members[" + std::to_string(i) + "]";
    if (!ms[i].is_array()) bad(field, "expected a list of colors");
    ColorTuple t;
    for (const auto& c : ms[i]) {
      if (!c.is_number_integer()) bad(field, "colors must be integers");
      t.push_back(c.get<int>());
    }
    try {
      fam.insert(std::move(t));
    } catch (const Error& e) {
      bad(field, e.what());
    }
  }
  return fam;
}

}  // namespace gadgetry
