#include "coarsequot/reference.hpp"

#include <algorithm>

namespace coarsequot::reference {

namespace {

void extend(const MetricGraph& g, const std::vector<int>& dist_u, const std::vector<int>& dist_v,
            int total, Path& partial, std::vector<Path>& out, std::size_t cap) {
    Vertex cur = partial.back();
    if (dist_v[cur] == 0) {
        if (out.size() >= cap) throw BudgetExceeded("geodesic enumeration cap");
        out.push_back(partial);
        return;
    }
    for (Vertex w : g.neighbors(cur)) {
        if (dist_u[w] == dist_u[cur] + 1 && dist_u[w] + dist_v[w] == total) {
            partial.vertices.push_back(w);
            extend(g, dist_u, dist_v, total, partial, out, cap);
            partial.vertices.pop_back();
        }
    }
}

int dist_to_path(const std::vector<int>& dist_rows_flat, int n, const Path& p, Vertex x) {
    int best = -1;
    for (Vertex w : p.vertices) {
        int d = dist_rows_flat[static_cast<size_t>(w) * n + x];
        if (best < 0 || d < best) best = d;
    }
    return best;
}

} // namespace

std::vector<Path> all_geodesics(const MetricGraph& g, Vertex u, Vertex v, std::size_t cap) {
    auto dist_u = bfs_distances(g, u);
    auto dist_v = bfs_distances(g, v);
    std::vector<Path> out;
    Path partial;
    partial.vertices.push_back(u);
    extend(g, dist_u, dist_v, dist_u[v], partial, out, cap);
    return out;
}

int slim_constant(const MetricGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<size_t>(n) * n);
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), dist.begin() + static_cast<size_t>(s) * n);
    }
    int delta = 0;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x; y < n; ++y)
            for (Vertex z = 0; z < n; ++z) {
                auto sides_xy = all_geodesics(g, x, y);
                auto sides_yz = all_geodesics(g, y, z);
                auto sides_zx = all_geodesics(g, z, x);
                for (const auto& a : sides_xy)
                    for (const auto& b : sides_yz)
                        for (const auto& c : sides_zx)
                            for (Vertex p : a.vertices) {
                                int d = std::min(dist_to_path(dist, n, b, p),
                                                 dist_to_path(dist, n, c, p));
                                delta = std::max(delta, d);
                            }
            }
    return delta;
}

int quasiconvexity_constant(const MetricGraph& g, const Subspace& y) {
    auto dist_y = bfs_distances_multi(g, y.members);
    int k = 0;
    for (Vertex u : y.members)
        for (Vertex v : y.members) {
            if (u >= v) continue;
            for (const auto& p : all_geodesics(g, u, v))
                for (Vertex w : p.vertices) k = std::max(k, dist_y[w]);
        }
    return k;
}

int hausdorff_distance(const MetricGraph& g, const std::vector<Vertex>& a,
                       const std::vector<Vertex>& b) {
    int h = 0;
    for (Vertex x : a) {
        auto row = bfs_distances(g, x);
        int best = -1;
        for (Vertex y : b)
            if (best < 0 || row[y] < best) best = row[y];
        h = std::max(h, best);
    }
    for (Vertex y : b) {
        auto row = bfs_distances(g, y);
        int best = -1;
        for (Vertex x : a)
            if (best < 0 || row[x] < best) best = row[x];
        h = std::max(h, best);
    }
    return h;
}

} // namespace coarsequot::reference
