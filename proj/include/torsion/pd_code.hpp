#pragma once

#include "torsion/integer_matrix.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace torsion {

// One crossing of a planar diagram. Arc labels are listed counterclockwise
// starting from the incoming under-strand: arcs[0] enters under, arcs[2]
// leaves under, arcs[1] and arcs[3] belong to the over-strand.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;  // +1 right-handed, -1 left-handed

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Closed braid: sigma_i is +i, its inverse -i. Strands are numbered 1..n from
// left to right and oriented upwards.
struct BraidWord {
  int strands = 0;
  std::vector<int> word;
  // Optional component index for each strand position at the bottom.
  std::vector<int> components;
};

// Oriented link diagram with component labelling. Components that carry no
// crossings (split unknotted circles) are kept as free loops so that every
// component index survives deletion of sublinks.
class PDCode {
 public:
  // Validates the tuples, infers orientation from the under-strands and
  // numbers components. When component_of is empty, components are numbered
  // 1..m in order of their smallest arc label.
  static PDCode from_tuples(const std::vector<std::array<int, 4>>& tuples,
                            const std::map<int, int>& component_of = {});

  static PDCode from_braid(const BraidWord& braid);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::map<int, int>& component_of() const { return component_of_; }
  const std::set<int>& free_loops() const { return free_loops_; }

  // Sorted component indices, free loops included.
  const std::vector<int>& components() const { return components_; }
  std::size_t num_components() const { return components_.size(); }
  // 0-based position of a component index in components().
  std::size_t position_of(int component) const;

  int component_of_arc(int label) const;
  int under_component(const Crossing& c) const { return component_of_arc(c.arcs[0]); }
  int over_component(const Crossing& c) const { return component_of_arc(c.arcs[1]); }

  friend bool operator==(const PDCode&, const PDCode&) = default;

 private:
  friend PDCode delete_components(const PDCode& d, const std::set<int>& remove);

  static PDCode build(const std::vector<std::array<int, 4>>& tuples,
                      const std::vector<int>* signs, const std::map<int, int>& component_of,
                      const std::set<int>& free_loops, bool require_contiguous);

  std::vector<Crossing> crossings_;
  std::map<int, int> component_of_;
  std::set<int> free_loops_;
  std::vector<int> components_;
};

// Parses a PD literal ("PD[X[1,4,2,3], ...]" or "[[1,4,2,3], ...]") or a
// braid literal ("{n:2, w:[1,1]}"). Throws SyntaxError or Error(Topology).
PDCode parse_link(std::string_view text);

// Symmetric matrix with linking numbers off the diagonal and framings on it.
// Rows follow components(). Throws Error(OddCrossingParity) on corrupt data.
IntMatrix linking_matrix(const PDCode& d, const std::vector<long long>& framings);

// Removes the given components. Crossings between a removed and a surviving
// strand disappear and the surviving arc halves are fused. Surviving
// component indices are preserved.
PDCode delete_components(const PDCode& d, const std::set<int>& remove);

// True when the diagram is disconnected as a 4-valent graph, or has a free
// loop next to other components.
bool is_split_diagram(const PDCode& d);

}  // namespace torsion
