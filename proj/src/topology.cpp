#include "qfre/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace qfre {

namespace {

int mod_group(int x, int g) {
    int m = x % g;
    return m < 0 ? m + g : m;
}

// Signed traversal: every offset usable as +o and -o.
std::vector<int> neighbors(const QFlyTopology& topo, int group) {
    std::set<int> out;
    for (int o : topo.offsets) {
        out.insert(mod_group(group + o, topo.num_groups));
        out.insert(mod_group(group - o, topo.num_groups));
    }
    out.erase(group);
    return {out.begin(), out.end()};
}

std::vector<int> bfs_distances(const QFlyTopology& topo, int src) {
    std::vector<int> dist(topo.num_groups, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int next : neighbors(topo, cur)) {
            if (dist[next] < 0) {
                dist[next] = dist[cur] + 1;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

void require_group(const QFlyTopology& topo, int group, const char* what) {
    if (group < 0 || group >= topo.num_groups)
        throw std::invalid_argument(std::string(what) + ": group index out of range");
}

}  // namespace

std::vector<int> QFlyTopology::duplex_offsets() const {
    std::vector<int> out;
    for (int o : offsets)
        if (is_duplex(o)) out.push_back(o);
    return out;
}

QFlyTopology build_topology(int num_groups, int nodes_per_group, std::vector<int> offsets) {
    if (num_groups < 2) throw std::invalid_argument("build_topology: need at least 2 groups");
    if (nodes_per_group < 1) throw std::invalid_argument("build_topology: need at least 1 node per group");
    if (offsets.empty()) throw std::invalid_argument("build_topology: offsets must be non-empty");
    std::sort(offsets.begin(), offsets.end());
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (offsets[i] < 1 || offsets[i] >= num_groups)
            throw std::invalid_argument("build_topology: offset " + std::to_string(offsets[i]) +
                                        " outside [1, " + std::to_string(num_groups - 1) + "]");
        if (i > 0 && offsets[i] == offsets[i - 1])
            throw std::invalid_argument("build_topology: duplicate offset " + std::to_string(offsets[i]));
    }
    QFlyTopology topo;
    topo.num_groups = num_groups;
    topo.nodes_per_group = nodes_per_group;
    topo.offsets = std::move(offsets);
    return topo;
}

int diameter(const QFlyTopology& topo) {
    int worst = 0;
    for (int src = 0; src < topo.num_groups; ++src) {
        const auto dist = bfs_distances(topo, src);
        for (int d : dist) {
            if (d < 0) throw std::runtime_error("diameter: topology is disconnected");
            worst = std::max(worst, d);
        }
    }
    return worst;
}

RoutePath route(const QFlyTopology& topo, int src, int dst) {
    require_group(topo, src, "route");
    require_group(topo, dst, "route");
    if (src == dst) throw std::invalid_argument("route: src == dst");

    const auto dist_to_dst = bfs_distances(topo, dst);
    if (dist_to_dst[src] < 0) throw std::runtime_error("route: destination unreachable");

    // Greedy descent: at each hop take the largest offset lying on a
    // shortest path, trying +o before -o is not enough on a ring, so order
    // candidates by (offset desc, resulting group asc) and take the first
    // that strictly decreases the BFS distance.
    RoutePath path;
    path.groups.push_back(src);
    int cur = src;
    while (cur != dst) {
        int best_next = -1;
        for (auto it = topo.offsets.rbegin(); it != topo.offsets.rend() && best_next < 0; ++it) {
            int fwd = mod_group(cur + *it, topo.num_groups);
            int bwd = mod_group(cur - *it, topo.num_groups);
            for (int cand : {std::min(fwd, bwd), std::max(fwd, bwd)}) {
                if (dist_to_dst[cand] == dist_to_dst[cur] - 1) {
                    best_next = cand;
                    break;
                }
            }
        }
        if (best_next < 0) throw std::runtime_error("route: no shortest-path step found");
        path.groups.push_back(best_next);
        cur = best_next;
    }
    return path;
}

int switch_ports(const QFlyTopology& topo) {
    return topo.nodes_per_group + static_cast<int>(topo.offsets.size());
}

BroadcastSchedule broadcast_rounds(const QFlyTopology& topo, BroadcastMode mode, int root) {
    require_group(topo, root, "broadcast_rounds");
    const int k = static_cast<int>(topo.offsets.size());

    std::vector<int> pending;  // ascending, skipping the root
    for (int g = 0; g < topo.num_groups; ++g)
        if (g != root) pending.push_back(g);

    BroadcastSchedule schedule;
    schedule.root = root;
    schedule.mode = mode;

    if (mode == BroadcastMode::source_limited) {
        std::size_t next = 0;
        while (next < pending.size()) {
            BroadcastRound round;
            for (int i = 0; i < k && next < pending.size(); ++i, ++next)
                round.sends.emplace_back(root, pending[next]);
            schedule.rounds.push_back(std::move(round));
        }
    } else {
        std::vector<int> holders{root};
        std::size_t next = 0;
        while (next < pending.size()) {
            BroadcastRound round;
            std::vector<int> received;
            for (int holder : holders) {
                for (int i = 0; i < k && next < pending.size(); ++i, ++next) {
                    round.sends.emplace_back(holder, pending[next]);
                    received.push_back(pending[next]);
                }
                if (next >= pending.size()) break;
            }
            holders.insert(holders.end(), received.begin(), received.end());
            std::sort(holders.begin(), holders.end());
            schedule.rounds.push_back(std::move(round));
        }
    }
    return schedule;
}

CostExpr analytic_broadcast_cost(const QFlyTopology& topo, TBellDomain domain) {
    const int k = static_cast<int>(topo.offsets.size());
    const int inter_rounds = (topo.num_groups - 1 + k - 1) / k;
    const int slope = 2 + inter_rounds + topo.num_groups;
    return CostExpr::affine(Rational{0}, Rational{slope}, domain);
}

}  // namespace qfre
