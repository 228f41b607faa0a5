#include "coarsequot/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace coarsequot {

MetricGraph::MetricGraph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
                         std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ <= 0) throw InvalidGraph("graph needs at least one vertex");
    adj_.assign(n_, {});
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw UnknownVertex("edge endpoint out of range");
        if (u == v) throw InvalidGraph("self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) throw InvalidGraph("multi-edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw InvalidGraph("label count mismatch");
    // connectivity
    auto d = bfs_distances(*this, 0);
    for (int v = 0; v < n_; ++v)
        if (d[v] < 0) throw InvalidGraph("graph not connected");
}

const std::vector<Vertex>& MetricGraph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool MetricGraph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::string& MetricGraph::label(Vertex v) const {
    check_vertex(v);
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
}

void MetricGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw UnknownVertex("vertex id " + std::to_string(v));
}

void Path::validate(const MetricGraph& g) const {
    if (vertices.empty()) throw InvalidGraph("empty path");
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!g.adjacent(vertices[i], vertices[i + 1]))
            throw InvalidGraph("path vertices not adjacent");
}

Subspace::Subspace(const MetricGraph& g, std::vector<Vertex> m) : host(&g), members(std::move(m)) {
    if (members.empty()) throw EmptySubspace();
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Vertex v : members) g.check_vertex(v);
}

bool Subspace::contains(Vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

std::vector<int> bfs_distances(const MetricGraph& g, Vertex src) {
    g.check_vertex(src);
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_distances_multi(const MetricGraph& g, const std::vector<Vertex>& sources) {
    if (sources.empty()) throw EmptySubspace("multi-source BFS with no sources");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        g.check_vertex(s);
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_distances_avoiding(const MetricGraph& g, Vertex src,
                                        const std::vector<char>& banned) {
    std::vector<int> dist(g.vertex_count(), -1);
    if (banned[src]) return dist;
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0 && !banned[w]) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int distance(const MetricGraph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    return bfs_distances(g, u)[v];
}

Path geodesic(const MetricGraph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    auto dist = bfs_distances(g, u);
    Path p;
    p.vertices.resize(dist[v] + 1);
    Vertex cur = v;
    for (int i = dist[v]; i >= 0; --i) {
        p.vertices[i] = cur;
        if (i == 0) break;
        // smallest-id predecessor
        for (Vertex w : g.neighbors(cur)) {
            if (dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        }
    }
    return p;
}

std::vector<Vertex> geodesic_interval(const MetricGraph& g, const std::vector<int>& dist_u,
                                      const std::vector<int>& dist_v, Vertex u, Vertex v) {
    std::vector<Vertex> out;
    int d = dist_u[v];
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (dist_u[w] + dist_v[w] == d) out.push_back(w);
    (void)u;
    return out;
}

ProjectionSet closest_point_projection(const MetricGraph& g, const Subspace& y, Vertex z) {
    g.check_vertex(z);
    if (y.members.empty()) throw EmptySubspace();
    auto dist = bfs_distances(g, z);
    int best = -1;
    for (Vertex m : y.members)
        if (best < 0 || dist[m] < best) best = dist[m];
    ProjectionSet ps;
    ps.base_distance = best;
    for (Vertex m : y.members)
        if (dist[m] == best) ps.points.push_back(m);
    return ps;
}

std::vector<Vertex> project_set(const MetricGraph& g, const Subspace& y,
                                const std::vector<Vertex>& a) {
    std::vector<Vertex> out;
    for (Vertex z : a) {
        auto ps = closest_point_projection(g, y, z);
        out.insert(out.end(), ps.points.begin(), ps.points.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int set_diameter(const MetricGraph& g, const std::vector<Vertex>& s) {
    if (s.size() <= 1) return 0;
    int diam = 0;
    for (Vertex v : s) {
        auto dist = bfs_distances(g, v);
        for (Vertex w : s) diam = std::max(diam, dist[w]);
    }
    return diam;
}

int proj_distance(const MetricGraph& g, const Subspace& y, const std::vector<Vertex>& a,
                  const std::vector<Vertex>& b) {
    if (a.empty() || b.empty()) throw EmptySubspace("proj_distance with empty set");
    auto pa = project_set(g, y, a);
    auto pb = project_set(g, y, b);
    pa.insert(pa.end(), pb.begin(), pb.end());
    std::sort(pa.begin(), pa.end());
    pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
    return set_diameter(g, pa);
}

int hausdorff_distance(const MetricGraph& g, const std::vector<Vertex>& a,
                       const std::vector<Vertex>& b) {
    if (a.empty() || b.empty()) throw EmptySubspace("hausdorff_distance with empty set");
    auto da = bfs_distances_multi(g, a);
    auto db = bfs_distances_multi(g, b);
    int h = 0;
    for (Vertex v : a) h = std::max(h, db[v]);
    for (Vertex v : b) h = std::max(h, da[v]);
    return h;
}

MetricGraph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return MetricGraph(n, std::move(e));
}

MetricGraph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return MetricGraph(n, std::move(e));
}

MetricGraph grid_graph(int rows, int cols) {
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
        }
    return MetricGraph(rows * cols, std::move(e));
}

} // namespace coarsequot
