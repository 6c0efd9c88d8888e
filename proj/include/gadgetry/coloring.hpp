#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gadgetry/graph.hpp"
#include "gadgetry/graph_io.hpp"

namespace gadgetry {

using Color = int;
using ColorTuple = std::vector<Color>;

/// Partial assignment of colors 1..k to vertex ids.
class PartialColoring {
 public:
  explicit PartialColoring(int k);
  PartialColoring(int k, std::map<std::string, Color> assignment);
  /// Colors `ids[i]` with `colors[i]`.
  PartialColoring(int k, const std::vector<std::string>& ids, const ColorTuple& colors);

  int k() const { return k_; }
  const std::map<std::string, Color>& assignment() const { return assignment_; }
  bool empty() const { return assignment_.empty(); }

  /// Throws ColorOutOfRange.
  PartialColoring& set(const std::string& id, Color c);

 private:
  int k_;
  std::map<std::string, Color> assignment_;
};

/// Extensional family of total colorings of `domain`. Members are kept in
/// lexicographic tuple order.
class ColoringFamily {
 public:
  ColoringFamily(std::vector<std::string> domain, int k);
  ColoringFamily(std::vector<std::string> domain, int k, const std::vector<ColorTuple>& members);

  const std::vector<std::string>& domain() const { return domain_; }
  int k() const { return k_; }
  const std::set<ColorTuple>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const ColorTuple& t) const { return members_.count(t) > 0; }

  /// Validates length and color range (ColorOutOfRange / BadParameter).
  void insert(ColorTuple t);

  PartialColoring as_partial(const ColorTuple& t) const;

  /// Every function domain -> [k].
  static ColoringFamily all(std::vector<std::string> domain, int k);

  friend bool operator==(const ColoringFamily&, const ColoringFamily&) = default;

 private:
  std::vector<std::string> domain_;
  int k_;
  std::set<ColorTuple> members_;
};

/// True iff some proper k-coloring of g agrees with `partial`.
/// Throws UnknownVertex, ColorOutOfRange.
bool extends(const Graph& g, const PartialColoring& partial);

/// Exactly the boundary tuples whose coloring extends to g.
/// Throws UnknownVertex, DuplicateBoundaryId.
ColoringFamily boundary_trace(const Graph& g, const std::vector<std::string>& boundary, int k);

ColoringFamily close_under_permutations(const ColoringFamily& family);
bool is_closed(const ColoringFamily& family);

/// Relabels colors by first appearance (1, 2, ...); the orbit representative.
ColorTuple canonical_relabeling(const ColorTuple& t);

Json family_to_json(const ColoringFamily& family);
ColoringFamily family_from_json(const Json& doc, const std::string& where = "");

}  // namespace gadgetry
