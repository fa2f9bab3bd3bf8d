#pragma once

#include "cyclone/config.hpp"
#include "cyclone/triangulation.hpp"

#include <cstdint>
#include <vector>

namespace cyclone {

/// Breadth-first search of the undirected flip graph from the lowest
/// triangulation, using the reference flip scan and an explicit visited set
/// keyed by canonical text. Shares no code with the reverse search beyond the
/// triangulation primitives. Returns every triangulation in canonical order.
///
/// Throws CapacityError once more than `node_limit` triangulations are held.
std::vector<Triangulation> enumerate_bfs_oracle(const PointConfig& cfg, std::uint64_t node_limit);
std::vector<Triangulation> enumerate_bfs_oracle(const PointConfig& cfg);

} // namespace cyclone
