// Copyright 2026 The HealSim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEALSIM_CONTACT_GRAPH_HPP_
#define HEALSIM_CONTACT_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace healsim::sim {

/// Undirected contact graph between particles plus the two electrodes. A
/// bridge is an electrode-to-electrode chain; chains sharing no particle are
/// counted separately.
class ContactGraph {
 public:
  explicit ContactGraph(std::size_t bodies = 0);

  std::size_t bodies() const { return adjacency_.size(); }
  void add_contact(std::uint32_t a, std::uint32_t b);
  void touch_left(std::uint32_t a) { left_[a] = true; }
  void touch_right(std::uint32_t a) { right_[a] = true; }

  bool touches_left(std::uint32_t a) const { return left_[a]; }
  bool touches_right(std::uint32_t a) const { return right_[a]; }
  const std::vector<std::uint32_t>& neighbours(std::uint32_t a) const {
    return adjacency_[a];
  }
  std::size_t contact_count() const { return contacts_; }

 private:
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<bool> left_;
  std::vector<bool> right_;
  std::size_t contacts_ = 0;
};

struct DisjointPaths {
  std::size_t count = 0;
  /// Body sequences from the left electrode to the right one.
  std::vector<std::vector<std::uint32_t>> paths;
};

/// Maximum number of vertex-disjoint left-to-right paths via unit-capacity
/// max-flow (Dinic) on the vertex-split graph.
DisjointPaths max_disjoint_paths(const ContactGraph& graph);

}  // namespace healsim::sim

#endif  // HEALSIM_CONTACT_GRAPH_HPP_
