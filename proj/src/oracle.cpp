#include "cyclone/oracle.hpp"

#include "cyclone/enumeration.hpp"
#include "cyclone/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace cyclone {

std::vector<Triangulation> enumerate_bfs_oracle(const PointConfig& cfg, std::uint64_t node_limit) {
    std::unordered_set<std::string> visited;
    std::vector<Triangulation> found;
    std::deque<Triangulation> frontier;

    auto discover = [&](Triangulation t) {
        if (!visited.insert(t.to_text()).second) return;
        if (visited.size() > node_limit) {
            throw CapacityError("flip graph of C(" + std::to_string(cfg.n()) + "," + std::to_string(cfg.d()) +
                                ") has more than " + std::to_string(node_limit) + " triangulations");
        }
        found.push_back(t);
        frontier.push_back(std::move(t));
    };

    discover(lowest_triangulation(cfg));
    while (!frontier.empty()) {
        const Triangulation t = std::move(frontier.front());
        frontier.pop_front();
        for (const Flip& flip : find_flips(cfg, t)) discover(apply_flip(t, flip));
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<Triangulation> enumerate_bfs_oracle(const PointConfig& cfg) {
    return enumerate_bfs_oracle(cfg, node_limit_from_env());
}

} // namespace cyclone
