#pragma once

#include "qfre/cost_expr.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qfre {

// Two-level interconnect: switched all-to-all groups of nodes, groups linked
// by a circulant (chordal-ring) graph. Offsets are traversed in both
// directions; an offset o with 2o = 0 (mod num_groups) is a self-inverse
// duplex channel. The default is C_64(1,2,4,8,16,32) with 12 nodes per group.
struct QFlyTopology {
    int num_groups = 64;
    int nodes_per_group = 12;
    std::vector<int> offsets = {1, 2, 4, 8, 16, 32};  // sorted, unique
    int logical_compute_per_node = 9;
    int logical_extractor_per_node = 1;
    int physical_per_node = 1000;

    bool is_duplex(int offset) const { return (2 * offset) % num_groups == 0; }
    std::vector<int> duplex_offsets() const;
    std::int64_t total_logical_compute() const {
        return std::int64_t{num_groups} * nodes_per_group * logical_compute_per_node;
    }
};

QFlyTopology build_topology(int num_groups, int nodes_per_group, std::vector<int> offsets);

struct RoutePath {
    std::vector<int> groups;  // src first, dst last
    int hop_count() const { return static_cast<int>(groups.size()) - 1; }
};

// Max over ordered pairs of shortest-path hop counts (BFS from every group).
// Throws on a disconnected graph.
int diameter(const QFlyTopology& topo);

// A shortest path src -> dst. Ties broken by preferring larger offsets
// first, then the smaller intermediate group index.
RoutePath route(const QFlyTopology& topo, int src, int dst);

// Per-group switch radix: one port per local node plus one duplex
// inter-group port per chordal offset.
int switch_ports(const QFlyTopology& topo);

enum class BroadcastMode {
    source_limited,  // only the home group sends, |offsets| routed sends per round
    relaying,        // every holder sends; shows the achievability margin
};

struct BroadcastRound {
    std::vector<std::pair<int, int>> sends;  // (src_group, dst_group)
};

struct BroadcastSchedule {
    int root = 0;
    BroadcastMode mode = BroadcastMode::source_limited;
    std::vector<BroadcastRound> rounds;

    int num_rounds() const { return static_cast<int>(rounds.size()); }
};

BroadcastSchedule broadcast_rounds(const QFlyTopology& topo, BroadcastMode mode, int root = 0);

// Cost of the full variable broadcast under the one-variable-per-group
// layout: 2 intra-group cycles, ceil((g-1)/|offsets|) inter-group rounds,
// plus a worst-case g-cycle rearrangement, all paid in T_Bell.
CostExpr analytic_broadcast_cost(const QFlyTopology& topo, TBellDomain domain = {});

}  // namespace qfre
