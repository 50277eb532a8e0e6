#include "torsion/pd_code.hpp"

#include "torsion/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace torsion {

namespace {

std::size_t slot_id(std::size_t crossing, int pos) { return crossing * 4 + static_cast<std::size_t>(pos); }

// Union-find over arbitrary integer keys.
class LabelUnion {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) return x;
    const int root = find(it->second);
    it->second = root;
    return root;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller label becomes the representative.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::map<int, int> parent_;
};

}  // namespace

PDCode PDCode::from_tuples(const std::vector<std::array<int, 4>>& tuples,
                           const std::map<int, int>& component_of) {
  return build(tuples, nullptr, component_of, {}, true);
}

PDCode PDCode::build(const std::vector<std::array<int, 4>>& tuples, const std::vector<int>* signs,
                     const std::map<int, int>& component_of, const std::set<int>& free_loops,
                     bool require_contiguous) {
  const std::size_t n = tuples.size();
  std::map<int, std::vector<std::size_t>> occurrences;
  for (std::size_t c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      const int label = tuples[c][p];
      if (label <= 0) {
        throw Error(ErrorKind::Topology, "arc labels must be positive, got " + std::to_string(label) +
                                             " in crossing " + std::to_string(c + 1));
      }
      occurrences[label].push_back(slot_id(c, p));
    }
  }
  std::vector<std::size_t> partner(4 * n);
  for (const auto& [label, slots] : occurrences) {
    if (slots.size() != 2) {
      throw Error(ErrorKind::Topology, "arc " + std::to_string(label) + " occurs " +
                                           std::to_string(slots.size()) + " times (expected 2)");
    }
    partner[slots[0]] = slots[1];
    partner[slots[1]] = slots[0];
  }
  auto through = [](std::size_t s) { return (s & ~std::size_t{3}) | ((s + 2) & 3); };
  auto label_at = [&](std::size_t s) { return tuples[s / 4][s % 4]; };

  // arrival[s] is true when the oriented strand enters the crossing at slot s.
  std::vector<char> arrival(4 * n, 0);
  std::vector<char> seen(4 * n, 0);
  std::vector<std::vector<int>> cycles;  // arc labels per component, in orientation order
  for (std::size_t start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    // Walk assuming `start` is an arrival slot.
    std::vector<std::size_t> in_slots, out_slots;
    std::size_t s = start;
    do {
      in_slots.push_back(s);
      const std::size_t t = through(s);
      out_slots.push_back(t);
      seen[s] = seen[t] = 1;
      s = partner[t];
    } while (s != start);

    int forward = 0;  // +1 keep, -1 reverse, 0 undetermined
    auto vote = [&](int v, std::size_t slot) {
      if (forward != 0 && forward != v) {
        throw Error(ErrorKind::Topology, "inconsistent orientation along the component through arc " +
                                             std::to_string(label_at(slot)));
      }
      forward = v;
    };
    for (std::size_t x : in_slots) {
      if (x % 4 == 0) vote(+1, x);
      if (x % 4 == 2) vote(-1, x);
    }
    if (forward == 0 && signs != nullptr) {
      for (std::size_t x : in_slots) {
        const int sign = (*signs)[x / 4];
        // A positive crossing has the over-strand entering at slot 3.
        if (x % 4 == 3) vote(sign > 0 ? +1 : -1, x);
        if (x % 4 == 1) vote(sign > 0 ? -1 : +1, x);
      }
    }
    if (forward == 0) {
      // Over-only component: traverse away from the smallest label towards
      // its smaller neighbour.
      std::size_t k_min = 0;
      for (std::size_t k = 0; k < in_slots.size(); ++k) {
        if (label_at(in_slots[k]) < label_at(in_slots[k_min])) k_min = k;
      }
      // Label at in_slots[k] arrives; the next label leaves through out_slots[k].
      const int next = label_at(out_slots[k_min]);
      const int prev = label_at(in_slots[(k_min + in_slots.size() - 1) % in_slots.size()]);
      forward = next <= prev ? +1 : -1;
    }
    const auto& arrivals = forward > 0 ? in_slots : out_slots;
    for (std::size_t x : arrivals) arrival[x] = 1;
    std::vector<int> labels;
    for (std::size_t x : arrivals) labels.push_back(label_at(x));
    if (forward < 0) std::reverse(labels.begin(), labels.end());
    cycles.push_back(std::move(labels));
  }

  PDCode d;
  d.crossings_.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    Crossing x{tuples[c], arrival[slot_id(c, 3)] ? +1 : -1};
    if (signs != nullptr && (*signs)[c] != x.sign) {
      throw Error(ErrorKind::Topology,
                  "crossing " + std::to_string(c + 1) + " sign disagrees with the orientation");
    }
    d.crossings_.push_back(x);
  }

  if (component_of.empty() && free_loops.empty()) {
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
      return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    int next = 1;
    for (const auto& cyc : cycles) {
      for (int label : cyc) d.component_of_[label] = next;
      ++next;
    }
  } else {
    std::set<int> used;
    for (const auto& cyc : cycles) {
      int index = 0;
      for (int label : cyc) {
        const auto it = component_of.find(label);
        if (it == component_of.end()) {
          throw Error(ErrorKind::Topology, "arc " + std::to_string(label) + " has no component index");
        }
        if (index != 0 && it->second != index) {
          throw Error(ErrorKind::Topology, "arcs of one component are assigned to components " +
                                               std::to_string(index) + " and " +
                                               std::to_string(it->second));
        }
        index = it->second;
        d.component_of_[label] = index;
      }
      if (!used.insert(index).second) {
        throw Error(ErrorKind::Topology, "component index " + std::to_string(index) +
                                             " is assigned to two separate cycles");
      }
    }
    for (int loop : free_loops) {
      if (!used.insert(loop).second) {
        throw Error(ErrorKind::Topology, "free loop index " + std::to_string(loop) + " reused");
      }
      d.free_loops_.insert(loop);
    }
    for (const auto& [label, index] : component_of) {
      if (!occurrences.contains(label)) {
        throw Error(ErrorKind::Topology, "component map names unknown arc " + std::to_string(label));
      }
    }
  }

  std::set<int> all;
  for (const auto& [label, index] : d.component_of_) all.insert(index);
  all.insert(d.free_loops_.begin(), d.free_loops_.end());
  d.components_.assign(all.begin(), all.end());
  if (require_contiguous) {
    for (std::size_t i = 0; i < d.components_.size(); ++i) {
      if (d.components_[i] != static_cast<int>(i + 1)) {
        throw Error(ErrorKind::Topology, "component indices must be contiguous from 1");
      }
    }
  }
  return d;
}

PDCode PDCode::from_braid(const BraidWord& braid) {
  const int n = braid.strands;
  if (n < 1) throw Error(ErrorKind::Topology, "a braid needs at least one strand");
  for (int letter : braid.word) {
    if (letter == 0 || std::abs(letter) >= n) {
      throw Error(ErrorKind::Topology, "braid letter " + std::to_string(letter) +
                                           " out of range for " + std::to_string(n) + " strands");
    }
  }
  if (!braid.components.empty() && braid.components.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::Topology, "braid component list must have one entry per strand");
  }

  int next_label = 1;
  std::vector<int> initial(n), current(n), strand_at(n);
  for (int p = 0; p < n; ++p) {
    initial[p] = current[p] = next_label++;
    strand_at[p] = p;
  }
  std::map<int, int> strand_of_label;
  for (int p = 0; p < n; ++p) strand_of_label[initial[p]] = p;

  std::vector<std::array<int, 4>> tuples;
  std::vector<int> signs;
  std::vector<char> touched(n, 0);
  for (int letter : braid.word) {
    const int i = std::abs(letter) - 1;
    // Strand A moves from position i to i+1, strand B from i+1 to i.
    const int a_in = current[i], b_in = current[i + 1];
    const int a_out = next_label++, b_out = next_label++;
    strand_of_label[a_out] = strand_at[i];
    strand_of_label[b_out] = strand_at[i + 1];
    if (letter > 0) {
      tuples.push_back({b_in, a_out, b_out, a_in});
      signs.push_back(+1);
    } else {
      tuples.push_back({a_in, b_in, a_out, b_out});
      signs.push_back(-1);
    }
    touched[i] = touched[i + 1] = 1;
    current[i] = b_out;
    current[i + 1] = a_out;
    std::swap(strand_at[i], strand_at[i + 1]);
  }

  // Closing the braid identifies the top of each position with its bottom.
  std::map<int, int> closing;
  for (int p = 0; p < n; ++p) {
    if (current[p] != initial[p]) closing[current[p]] = initial[p];
  }
  for (auto& t : tuples) {
    for (int& label : t) {
      const auto it = closing.find(label);
      if (it != closing.end()) label = it->second;
    }
  }

  // Strand starting at s ends at position p, whose top joins the bottom of p.
  std::vector<int> successor(n);
  for (int p = 0; p < n; ++p) successor[strand_at[p]] = p;
  std::vector<int> cycle_of(n, -1);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < n; ++s) {
    if (cycle_of[s] >= 0) continue;
    std::vector<int> members;
    for (int x = s; cycle_of[x] < 0; x = successor[x]) {
      cycle_of[x] = static_cast<int>(cycles.size());
      members.push_back(x);
    }
    cycles.push_back(std::move(members));
  }

  std::vector<int> index_of_cycle(cycles.size());
  if (braid.components.empty()) {
    for (std::size_t c = 0; c < cycles.size(); ++c) index_of_cycle[c] = static_cast<int>(c + 1);
  } else {
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      const int idx = braid.components[cycles[c].front()];
      for (int x : cycles[c]) {
        if (braid.components[x] != idx) {
          throw Error(ErrorKind::Topology, "strands " + std::to_string(cycles[c].front() + 1) + " and " +
                                               std::to_string(x + 1) +
                                               " close up into one component but carry different indices");
        }
      }
      index_of_cycle[c] = idx;
    }
  }

  std::map<int, int> component_of;
  std::set<int> free_loops;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const bool free = cycles[c].size() == 1 && !touched[cycles[c].front()];
    if (free) free_loops.insert(index_of_cycle[c]);
  }
  for (const auto& [label, strand] : strand_of_label) {
    const auto it = closing.find(label);
    const int final_label = it == closing.end() ? label : it->second;
    const int idx = index_of_cycle[cycle_of[strand]];
    if (free_loops.contains(idx)) continue;
    component_of[final_label] = idx;
  }
  return build(tuples, &signs, component_of, free_loops, true);
}

std::size_t PDCode::position_of(int component) const {
  const auto it = std::lower_bound(components_.begin(), components_.end(), component);
  if (it == components_.end() || *it != component) {
    throw Error(ErrorKind::InvalidArgument, "no component with index " + std::to_string(component));
  }
  return static_cast<std::size_t>(it - components_.begin());
}

int PDCode::component_of_arc(int label) const {
  const auto it = component_of_.find(label);
  if (it == component_of_.end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown arc " + std::to_string(label));
  }
  return it->second;
}

IntMatrix linking_matrix(const PDCode& d, const std::vector<long long>& framings) {
  const std::size_t m = d.num_components();
  if (framings.size() != m) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(m) + " framings, got " +
                                                std::to_string(framings.size()));
  }
  IntMatrix twice(m, m);
  for (const Crossing& c : d.crossings()) {
    const std::size_t a = d.position_of(d.under_component(c));
    const std::size_t b = d.position_of(d.over_component(c));
    if (a == b) continue;
    twice(a, b) += c.sign;
    twice(b, a) += c.sign;
  }
  IntMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) {
        out(i, j) = framings[i];
        continue;
      }
      if (twice(i, j) % 2 != 0) {
        throw Error(ErrorKind::OddCrossingParity,
                    "odd signed crossing count between components " +
                        std::to_string(d.components()[i]) + " and " + std::to_string(d.components()[j]));
      }
      out(i, j) = twice(i, j) / 2;
    }
  }
  return out;
}

PDCode delete_components(const PDCode& d, const std::set<int>& remove) {
  for (int c : remove) d.position_of(c);
  if (remove.size() >= d.num_components()) {
    throw Error(ErrorKind::EmptyResult, "deleting every component leaves an empty link");
  }
  if (remove.empty()) return d;

  LabelUnion fuse;
  std::vector<std::array<int, 4>> kept;
  std::vector<int> signs;
  for (const Crossing& c : d.crossings()) {
    const bool under_gone = remove.contains(d.under_component(c));
    const bool over_gone = remove.contains(d.over_component(c));
    if (under_gone && over_gone) continue;
    if (over_gone) {
      fuse.unite(c.arcs[0], c.arcs[2]);
    } else if (under_gone) {
      fuse.unite(c.arcs[1], c.arcs[3]);
    } else {
      kept.push_back(c.arcs);
      signs.push_back(c.sign);
    }
  }
  for (auto& t : kept) {
    for (int& label : t) label = fuse.find(label);
  }

  std::set<int> present;
  for (const auto& t : kept) present.insert(t.begin(), t.end());
  std::map<int, int> component_of;
  std::set<int> with_crossings;
  for (const auto& [label, comp] : d.component_of()) {
    if (remove.contains(comp)) continue;
    const int rep = fuse.find(label);
    if (!present.contains(rep)) continue;
    component_of[rep] = comp;
    with_crossings.insert(comp);
  }
  std::set<int> free_loops;
  for (int comp : d.components()) {
    if (!remove.contains(comp) && !with_crossings.contains(comp)) free_loops.insert(comp);
  }
  return PDCode::build(kept, &signs, component_of, free_loops, false);
}

bool is_split_diagram(const PDCode& d) {
  const std::size_t m = d.num_components();
  if (m <= 1) return false;
  if (!d.free_loops().empty()) return true;
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Crossing& c : d.crossings()) {
    parent[find(d.position_of(d.under_component(c)))] = find(d.position_of(d.over_component(c)));
  }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < m; ++i) {
    if (find(i) != root) return true;
  }
  return false;
}

}  // namespace torsion
