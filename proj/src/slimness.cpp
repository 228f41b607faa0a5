#include "coarsequot/slimness.hpp"

#include <algorithm>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coarsequot {

std::vector<std::int16_t> all_pairs_distances(const MetricGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::int16_t> dist(static_cast<size_t>(n) * n);
#pragma omp parallel for schedule(dynamic, 16)
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) dist[static_cast<size_t>(s) * n + v] = static_cast<std::int16_t>(row[v]);
    }
    return dist;
}

int max_geodesic_distance(const MetricGraph& g, const std::vector<int>& dist_a,
                          const std::vector<int>& dist_b, Vertex a, Vertex b,
                          const std::vector<int>& dist_p) {
    const int d = dist_a[b];
    // interval vertices ordered by distance from a form a topological order
    // of the geodesic DAG
    std::vector<Vertex> interval;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (dist_a[w] + dist_b[w] == d) interval.push_back(w);
    std::sort(interval.begin(), interval.end(),
              [&](Vertex x, Vertex y) { return dist_a[x] < dist_a[y]; });
    std::vector<int> best(g.vertex_count(), -1);
    best[a] = dist_p[a];
    for (Vertex w : interval) {
        if (w == a) continue;
        int incoming = -1;
        for (Vertex z : g.neighbors(w)) {
            if (dist_a[z] == dist_a[w] - 1 && dist_a[z] + dist_b[z] == d)
                incoming = std::max(incoming, best[z]);
        }
        best[w] = std::min(dist_p[w], incoming);
    }
    return best[b];
}

namespace {

// Exact slimness sweep for one opposite vertex z: returns
// max over pairs {x,y}, p in I(x,y) of min(F(p,x,z), F(p,y,z)).
int slim_sweep_for_z(const MetricGraph& g, const std::vector<std::int16_t>& apsp, Vertex z) {
    const int n = g.vertex_count();
    auto row = [&](Vertex v) { return apsp.data() + static_cast<size_t>(v) * n; };

    // T[a*n+p] = max over geodesics a->z of min distance to p
    std::vector<std::int16_t> t(static_cast<size_t>(n) * n, -1);
    std::vector<int> dist_a(n), dist_z(n), dist_p(n);
    for (int v = 0; v < n; ++v) dist_z[v] = row(z)[v];
    std::vector<Vertex> interval;
    std::vector<std::vector<std::int16_t>> dp; // per interval vertex, vector over p
    for (Vertex a = 0; a < n; ++a) {
        for (int v = 0; v < n; ++v) dist_a[v] = row(a)[v];
        const int d = dist_a[z];
        interval.clear();
        for (Vertex w = 0; w < n; ++w)
            if (dist_a[w] + dist_z[w] == d) interval.push_back(w);
        std::sort(interval.begin(), interval.end(),
                  [&](Vertex x, Vertex y) { return dist_a[x] < dist_a[y]; });
        std::vector<int> pos(n, -1);
        for (size_t i = 0; i < interval.size(); ++i) pos[interval[i]] = static_cast<int>(i);
        dp.assign(interval.size(), std::vector<std::int16_t>(n));
        for (size_t i = 0; i < interval.size(); ++i) {
            Vertex w = interval[i];
            if (w == a) {
                for (int p = 0; p < n; ++p) dp[i][p] = row(a)[p];
                continue;
            }
            std::vector<std::int16_t> acc(n, -1);
            for (Vertex nb : g.neighbors(w)) {
                if (row(a)[nb] != dist_a[w] - 1 || pos[nb] < 0) continue;
                const auto& prev = dp[pos[nb]];
                for (int p = 0; p < n; ++p) acc[p] = std::max(acc[p], prev[p]);
            }
            const auto* dw = row(w);
            for (int p = 0; p < n; ++p) dp[i][p] = std::min<std::int16_t>(dw[p], acc[p]);
        }
        std::copy(dp[pos[z]].begin(), dp[pos[z]].end(), t.begin() + static_cast<size_t>(a) * n);
    }

    int worst = 0;
    // z == x or z == y stays in: bigons are degenerate triangles and the
    // exact constant quantifies over them too
    for (Vertex x = 0; x < n; ++x) {
        const auto* dx = row(x);
        const auto* tx = t.data() + static_cast<size_t>(x) * n;
        for (Vertex y = x + 1; y < n; ++y) {
            const auto* dy = row(y);
            const auto* ty = t.data() + static_cast<size_t>(y) * n;
            const int dxy = dx[y];
            for (int p = 0; p < n; ++p) {
                if (dx[p] + dy[p] != dxy) continue;
                worst = std::max(worst, static_cast<int>(std::min(tx[p], ty[p])));
            }
        }
    }
    return worst;
}

int slim_sampled(const MetricGraph& g, const SamplingSpec& spec) {
    const int n = g.vertex_count();
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int worst = 0;
    for (int trial = 0; trial < spec.count; ++trial) {
        Vertex x = pick(rng), y = pick(rng), z = pick(rng);
        if (x == y || y == z || x == z) continue;
        Path sides[3] = {geodesic(g, x, y), geodesic(g, y, z), geodesic(g, z, x)};
        for (int s = 0; s < 3; ++s) {
            std::vector<Vertex> other;
            other.insert(other.end(), sides[(s + 1) % 3].vertices.begin(),
                         sides[(s + 1) % 3].vertices.end());
            other.insert(other.end(), sides[(s + 2) % 3].vertices.begin(),
                         sides[(s + 2) % 3].vertices.end());
            auto dist = bfs_distances_multi(g, other);
            for (Vertex p : sides[s].vertices) worst = std::max(worst, dist[p]);
        }
    }
    return worst;
}

} // namespace

Measurement slim_constant(const MetricGraph& g, const SamplingSpec& spec) {
    const int n = g.vertex_count();
    if (n <= 2) return {0, true};
    if (spec.mode == SamplingSpec::RANDOM) return {slim_sampled(g, spec), false};
    if (n > spec.exhaustive_vertex_cap)
        throw BudgetExceeded("exhaustive slimness above vertex cap");
    auto apsp = all_pairs_distances(g);
    int delta = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : delta)
    for (Vertex z = 0; z < n; ++z) delta = std::max(delta, slim_sweep_for_z(g, apsp, z));
    return {delta, true};
}

Measurement quasiconvexity_constant(const MetricGraph& g, const Subspace& y,
                                    const SamplingSpec& spec) {
    if (y.members.empty()) throw EmptySubspace();
    const int n = g.vertex_count();
    auto dist_y = bfs_distances_multi(g, y.members);
    const int pairs = static_cast<int>(y.members.size());

    if (spec.mode == SamplingSpec::RANDOM) {
        std::mt19937_64 rng(spec.seed);
        std::uniform_int_distribution<int> pick(0, pairs - 1);
        int worst = 0;
        for (int trial = 0; trial < spec.count; ++trial) {
            Vertex u = y.members[pick(rng)], v = y.members[pick(rng)];
            if (u == v) continue;
            for (Vertex p : geodesic(g, u, v).vertices) worst = std::max(worst, dist_y[p]);
        }
        return {worst, false};
    }

    if (n > spec.exhaustive_vertex_cap)
        throw BudgetExceeded("exhaustive quasiconvexity above vertex cap");
    // K depends only on the geodesic interval, so all-geodesic enumeration
    // collapses to the interval sweep.
    std::vector<std::vector<int>> rows(pairs);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < pairs; ++i) rows[i] = bfs_distances(g, y.members[i]);
    int worst = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
    for (int i = 0; i < pairs; ++i) {
        for (int j = i + 1; j < pairs; ++j) {
            const int d = rows[i][y.members[j]];
            for (Vertex p = 0; p < n; ++p)
                if (rows[i][p] + rows[j][p] == d) worst = std::max(worst, dist_y[p]);
        }
    }
    return {worst, true};
}

int fattened_intersection_diameter(const MetricGraph& g, const Subspace& y,
                                   const Subspace& yprime, int t) {
    auto dist = bfs_distances_multi(g, yprime.members);
    std::vector<Vertex> inter;
    for (Vertex v : y.members)
        if (dist[v] <= t) inter.push_back(v);
    if (inter.size() <= 1) return 0;
    return set_diameter(g, inter);
}

int separation_m0(const MetricGraph& g, const std::vector<Subspace>& family, int delta, int k) {
    if (family.size() < 2) throw FamilyTooSmall();
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            if (family[i].members == family[j].members)
                throw FamilyTooSmall("duplicate family member");
    const int t = 2 * k + 2 * delta;
    int m0 = 0;
    const int count = static_cast<int>(family.size());
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(max : m0)
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            m0 = std::max(m0, fattened_intersection_diameter(g, family[i], family[j], t));
        }
    return m0;
}

} // namespace coarsequot
