#pragma once

#include "families.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace indturan {

/// A graph as exchanged with the outside world: optional roots and bipartition.
struct GraphRecord {
  Graph graph;
  std::optional<VertexSet> roots;
  std::optional<Bipartition> partition;
};

/**
 * Builds a family from a descriptor such as
 *
 *   Trt:r=3,t=1   Tr11:r=2   path:len=4   star:r=3   theta:len=3,t=2
 *   Kst:s=2,t=3   power:base=(path:len=3),l=2   f1:base=Trt:r=2,t=1
 *   attach:base=Kst:s=1,t=2,t=1   cycle:n=6   pathgraph:n=4
 *
 * Unknown kinds or keys throw ParseError. Bipartite results carry a partition:
 * the template's parts where there is one, otherwise the 2-colouring.
 */
GraphRecord build_family(std::string_view descriptor);

/// Throws InvalidArgument when the record has no roots.
RootedGraph as_rooted(const GraphRecord& record);

/// Throws InvalidArgument when the record has no partition.
BipartiteTemplate as_template(const GraphRecord& record);

}  // namespace indturan
