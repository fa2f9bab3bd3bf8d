#pragma once

#include "cyclone/bigint.hpp"
#include "cyclone/triangulation.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixtures {

inline cyclone::BigInt catalan(int k) {
    cyclone::BigInt c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

struct Fig3Node {
    const char* cells;
    const char* gkz;
};

// The fourteen triangulations of C(6,2) with their GKZ vectors.
inline const std::vector<Fig3Node>& fig3_nodes() {
    static const std::vector<Fig3Node> nodes = {
        {"{{1,2,3},{1,3,4},{1,4,5},{1,5,6}}", "(40,2,8,18,32,20)"},
        {"{{1,2,3},{1,3,4},{4,5,6},{1,4,6}}", "(38,2,8,38,2,32)"},
        {"{{1,2,3},{4,5,6},{3,4,6},{1,3,6}}", "(32,2,38,8,2,38)"},
        {"{{4,5,6},{3,4,6},{2,3,6},{1,2,6}}", "(20,32,18,8,2,40)"},
        {"{{1,2,3},{1,5,6},{3,4,5},{1,3,5}}", "(38,2,20,2,38,20)"},
        {"{{1,2,3},{3,4,5},{1,3,6},{3,5,6}}", "(32,2,40,2,8,36)"},
        {"{{3,4,5},{3,5,6},{2,3,6},{1,2,6}}", "(20,32,20,2,8,38)"},
        {"{{1,5,6},{3,4,5},{1,2,5},{2,3,5}}", "(32,18,8,2,40,20)"},
        {"{{3,4,5},{1,2,6},{2,3,5},{2,5,6}}", "(20,38,8,2,20,32)"},
        {"{{1,4,5},{1,5,6},{2,3,4},{1,2,4}}", "(38,8,2,20,32,20)"},
        {"{{1,5,6},{2,3,4},{2,4,5},{1,2,5}}", "(32,20,2,8,38,20)"},
        {"{{2,3,4},{1,2,6},{2,4,5},{2,5,6}}", "(20,40,2,8,18,32)"},
        {"{{2,3,4},{1,2,4},{4,5,6},{1,4,6}}", "(36,8,2,40,2,32)"},
        {"{{2,3,4},{4,5,6},{1,2,6},{2,4,6}}", "(20,38,2,20,2,38)"},
    };
    return nodes;
}

inline const std::vector<std::pair<int, int>>& fig3_tree_edges() {
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 4}, {0, 9}, {1, 2}, {2, 3}, {4, 5}, {4, 7},
        {5, 6}, {7, 8}, {9, 10}, {9, 12}, {10, 11}, {12, 13}};
    return edges;
}

// Unordered pairs.
inline const std::vector<std::pair<int, int>>& fig3_other_edges() {
    static const std::vector<std::pair<int, int>> edges = {
        {6, 3}, {13, 3}, {2, 5}, {6, 8}, {8, 11}, {11, 13}, {7, 10}, {1, 12}};
    return edges;
}

// Instances small enough for exhaustive checks in property tests.
inline const std::vector<std::pair<int, int>>& small_instances() {
    static const std::vector<std::pair<int, int>> instances = {
        {4, 2}, {5, 2}, {6, 2}, {7, 2}, {8, 2}, {5, 3}, {6, 3}, {7, 3}, {8, 3}, {9, 3},
        {6, 4}, {7, 4}, {8, 4}, {9, 4}, {7, 5}, {8, 5}, {9, 5}, {10, 5}, {8, 6}, {10, 6},
        {4, 1}, {6, 1}, {5, 4}, {9, 7}};
    return instances;
}

} // namespace fixtures
