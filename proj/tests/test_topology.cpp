#include "qfre/topology.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <random>
#include <set>

using namespace qfre;

namespace {

// Independent BFS oracle over signed offset moves.
std::vector<int> oracle_distances(const QFlyTopology& topo, int src) {
    std::vector<int> dist(topo.num_groups, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (int o : topo.offsets) {
            for (int next : {(cur + o) % topo.num_groups,
                             ((cur - o) % topo.num_groups + topo.num_groups) % topo.num_groups}) {
                if (dist[next] < 0) {
                    dist[next] = dist[cur] + 1;
                    queue.push_back(next);
                }
            }
        }
    }
    return dist;
}

void check_schedule(const QFlyTopology& topo, const BroadcastSchedule& schedule) {
    const int k = static_cast<int>(topo.offsets.size());
    std::set<int> covered{schedule.root};
    std::set<int> holders{schedule.root};
    for (const auto& round : schedule.rounds) {
        std::map<int, int> out_degree;
        for (const auto& [src, dst] : round.sends) {
            CHECK(holders.count(src) == 1);          // senders already hold the state
            CHECK(covered.insert(dst).second);       // every group receives exactly once
            ++out_degree[src];
        }
        for (const auto& [src, degree] : out_degree) CHECK(degree <= k);
        if (schedule.mode == BroadcastMode::source_limited) {
            for (const auto& [src, dst] : round.sends) CHECK(src == schedule.root);
        } else {
            for (const auto& [src, dst] : round.sends) holders.insert(dst);
        }
    }
    CHECK(static_cast<int>(covered.size()) == topo.num_groups);
}

}  // namespace

TEST_CASE("build_topology validation") {
    const QFlyTopology topo = build_topology(64, 12, {1, 2, 4, 8, 16, 32});
    CHECK(topo.duplex_offsets() == std::vector<int>{32});
    CHECK(topo.total_logical_compute() == 6912);

    CHECK_NOTHROW(build_topology(2, 1, {1}));
    CHECK_THROWS_AS(build_topology(64, 12, {64}), std::invalid_argument);
    CHECK_THROWS_AS(build_topology(64, 12, {0}), std::invalid_argument);
    CHECK_THROWS_AS(build_topology(64, 12, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_topology(64, 12, {}), std::invalid_argument);
}

TEST_CASE("diameter") {
    CHECK(diameter(build_topology(64, 12, {1, 2, 4, 8, 16, 32})) == 3);
    // complete graph
    std::vector<int> all;
    for (int o = 1; o < 8; ++o) all.push_back(o);
    CHECK(diameter(build_topology(8, 1, all)) == 1);
    // plain ring with bidirectional traversal
    CHECK(diameter(build_topology(8, 1, {1})) == 4);
}

TEST_CASE("diameter stays 3 for supersets of the default offsets") {
    std::vector<int> offsets{1, 2, 4, 8, 16, 32};
    for (int extra : {3, 5, 7, 21}) {
        auto with_extra = offsets;
        with_extra.push_back(extra);
        CHECK(diameter(build_topology(64, 12, with_extra)) <= 3);
    }
}

TEST_CASE("route examples") {
    const QFlyTopology topo = build_topology(64, 12, {1, 2, 4, 8, 16, 32});
    CHECK(route(topo, 0, 32).groups == std::vector<int>{0, 32});
    CHECK(route(topo, 0, 63).hop_count() == 1);  // -1 traversal of offset 1

    int worst = 0;
    for (int dst = 1; dst < 64; ++dst) worst = std::max(worst, route(topo, 0, dst).hop_count());
    CHECK(worst == 3);

    CHECK_THROWS_AS(route(topo, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(route(topo, 0, 64), std::invalid_argument);
}

TEST_CASE("route matches the BFS oracle on 1000 random pairs") {
    const QFlyTopology topo = build_topology(64, 12, {1, 2, 4, 8, 16, 32});
    std::vector<std::vector<int>> oracle;
    for (int src = 0; src < 64; ++src) oracle.push_back(oracle_distances(topo, src));

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(0, 63);
    int checked = 0;
    while (checked < 1000) {
        const int src = pick(rng);
        const int dst = pick(rng);
        if (src == dst) continue;
        const RoutePath path = route(topo, src, dst);
        CHECK(path.hop_count() == oracle[src][dst]);
        // every step must use a declared offset
        for (std::size_t i = 0; i + 1 < path.groups.size(); ++i) {
            const int diff =
                ((path.groups[i + 1] - path.groups[i]) % 64 + 64) % 64;
            bool legal = false;
            for (int o : topo.offsets) legal = legal || diff == o || diff == 64 - o;
            CHECK(legal);
        }
        ++checked;
    }
}

TEST_CASE("switch ports") {
    CHECK(switch_ports(build_topology(64, 12, {1, 2, 4, 8, 16, 32})) == 18);
    CHECK(switch_ports(build_topology(2, 1, {1})) == 2);
    CHECK(switch_ports(build_topology(64, 12, {1, 2, 4, 8, 16})) == 17);
}

TEST_CASE("broadcast schedules") {
    const QFlyTopology topo = build_topology(64, 12, {1, 2, 4, 8, 16, 32});

    const auto limited = broadcast_rounds(topo, BroadcastMode::source_limited);
    CHECK(limited.num_rounds() == 11);  // ceil(63 / 6)
    check_schedule(topo, limited);

    const auto relayed = broadcast_rounds(topo, BroadcastMode::relaying);
    CHECK(relayed.num_rounds() <= 11);
    CHECK(relayed.num_rounds() >= 3);  // coverage grows at most 7x per round
    check_schedule(topo, relayed);

    const QFlyTopology tiny = build_topology(2, 1, {1});
    CHECK(broadcast_rounds(tiny, BroadcastMode::source_limited).num_rounds() == 1);
    CHECK(broadcast_rounds(tiny, BroadcastMode::relaying).num_rounds() == 1);
}

TEST_CASE("relaying never needs more rounds than source-limited") {
    for (int groups : {2, 5, 8, 16, 37, 64}) {
        std::vector<int> offsets{1};
        if (groups > 4) offsets.push_back(3);
        if (groups > 16) offsets.push_back(7);
        const QFlyTopology topo = build_topology(groups, 2, offsets);
        const auto limited = broadcast_rounds(topo, BroadcastMode::source_limited);
        const auto relayed = broadcast_rounds(topo, BroadcastMode::relaying);
        CHECK(relayed.num_rounds() <= limited.num_rounds());
        check_schedule(topo, limited);
        check_schedule(topo, relayed);
    }
}

TEST_CASE("analytic broadcast cost") {
    const QFlyTopology topo = build_topology(64, 12, {1, 2, 4, 8, 16, 32});
    const CostExpr cost = analytic_broadcast_cost(topo);
    CHECK(cost.slope_at(Rational{5}) == 77);  // 2 + 11 + 64
    const CostExpr with_startup = cost + CostExpr::affine(Rational{0}, Rational{2});
    CHECK(with_startup.slope_at(Rational{5}) == 79);
    CHECK(with_startup.eval_rounded(Rational{5}) == 395);

    const QFlyTopology tiny = build_topology(2, 1, {1});
    CHECK(analytic_broadcast_cost(tiny).slope_at(Rational{5}) == 5);  // 2 + 1 + 2
}
