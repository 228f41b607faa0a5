#include "coarsequot/projection_complex.hpp"

#include <algorithm>
#include <deque>

namespace coarsequot {

namespace {

// diameter of the union of two projection point sets, measured with
// precomputed member BFS rows
int union_diameter(const std::vector<std::vector<int>>& rows, const std::vector<Vertex>& members,
                   const std::vector<int>& pa, const std::vector<int>& pb) {
    int d = 0;
    auto dist = [&](int m1, int m2) { return rows[m1][members[m2]]; };
    for (int a : pa)
        for (int b : pb) d = std::max(d, dist(a, b));
    for (const auto* side : {&pa, &pb})
        for (size_t i = 0; i < side->size(); ++i)
            for (size_t j = i + 1; j < side->size(); ++j)
                d = std::max(d, dist((*side)[i], (*side)[j]));
    return d;
}

} // namespace

ProjectionFamily geometric_family(const ConeOff& c, int element_cap) {
    const int n = static_cast<int>(c.family.size());
    if (n > element_cap) throw BudgetExceeded("geometric family above element cap");
    ProjectionFamily f;
    f.provenance = ProjectionFamily::GEOMETRIC;
    f.size = n;
    for (int i = 0; i < n; ++i) f.names.push_back("Y" + std::to_string(i));
    f.table.assign(static_cast<size_t>(n) * n * n, -1);

    for (int y = 0; y < n; ++y) {
        const Subspace& target = c.family[y];
        const auto& members = target.members;
        std::vector<std::vector<int>> rows(members.size());
        for (size_t m = 0; m < members.size(); ++m)
            rows[m] = bfs_distances(*c.base, members[m]);
        // projection of each other element onto target, as member indices
        std::vector<std::vector<int>> proj(n);
        for (int u = 0; u < n; ++u) {
            if (u == y) continue;
            std::vector<char> in(members.size(), 0);
            for (Vertex uv : c.family[u].members) {
                int best = -1;
                for (size_t m = 0; m < members.size(); ++m)
                    if (best < 0 || rows[m][uv] < best) best = rows[m][uv];
                for (size_t m = 0; m < members.size(); ++m)
                    if (rows[m][uv] == best) in[m] = 1;
            }
            for (size_t m = 0; m < members.size(); ++m)
                if (in[m]) proj[u].push_back(static_cast<int>(m));
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == y || v == y) continue;
                f.set(y, u, v, union_diameter(rows, members, proj[u], proj[v]));
            }
    }
    return f;
}

ProjectionFamily augment_with_points(const ConeOff& c, const Rational& r, int element_cap) {
    const int nb = c.base->vertex_count();
    const int nf = static_cast<int>(c.family.size());
    const int n = nb + nf;
    if (n > element_cap) throw BudgetExceeded("augmented family above element cap");

    // coverage: every base point within R of some family member
    long long radius = r.num() / r.den();
    std::vector<std::vector<int>> nearest(nb);
    for (int i = 0; i < nf; ++i) {
        auto dist = bfs_distances_multi(*c.base, c.family[i].members);
        for (Vertex v = 0; v < nb; ++v)
            if (dist[v] <= radius) nearest[v].push_back(i);
    }
    for (Vertex v = 0; v < nb; ++v)
        if (nearest[v].empty())
            throw NotCoboundedlyCovered("vertex " + std::to_string(v) +
                                        " has no family member within R");

    ProjectionFamily f;
    f.provenance = ProjectionFamily::GEOMETRIC;
    f.size = n;
    for (Vertex v = 0; v < nb; ++v)
        f.names.push_back(c.base->has_labels() ? c.base->label(v) : "x" + std::to_string(v));
    for (int i = 0; i < nf; ++i) f.names.push_back("Y" + std::to_string(i));
    f.table.assign(static_cast<size_t>(n) * n * n, 0);
    f.nearest_subspaces = std::move(nearest);

    // base elements carry constant maps: distance stays 0; only cone rows
    // need computing, over all augmented elements
    for (int y = 0; y < nf; ++y) {
        const Subspace& target = c.family[y];
        const auto& members = target.members;
        std::vector<std::vector<int>> rows(members.size());
        for (size_t m = 0; m < members.size(); ++m)
            rows[m] = bfs_distances(*c.base, members[m]);
        auto dist_y = bfs_distances_multi(*c.base, members);
        std::vector<std::vector<int>> proj(n);
        for (int e = 0; e < n; ++e) {
            if (e == nb + y) continue;
            std::vector<char> in(members.size(), 0);
            std::vector<Vertex> srcs;
            if (e < nb)
                srcs.push_back(e);
            else
                srcs = c.family[e - nb].members;
            for (Vertex s : srcs) {
                int best = -1;
                for (size_t m = 0; m < members.size(); ++m)
                    if (best < 0 || rows[m][s] < best) best = rows[m][s];
                for (size_t m = 0; m < members.size(); ++m)
                    if (rows[m][s] == best) in[m] = 1;
            }
            for (size_t m = 0; m < members.size(); ++m)
                if (in[m]) proj[e].push_back(static_cast<int>(m));
        }
        const int row = nb + y;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == row || v == row) {
                    f.set(row, u, v, -1);
                    continue;
                }
                f.set(row, u, v, union_diameter(rows, members, proj[u], proj[v]));
            }
    }
    return f;
}

AxiomReport verify_projection_axioms(const ProjectionFamily& f, const Rational& theta) {
    AxiomReport rep;
    rep.theta = theta;
    const int n = f.size;

    for (int y = 0; y < n; ++y)
        for (int u = 0; u < n; ++u) {
            if (u == y) continue;
            // (III)
            Rational self(f.dpi(y, u, u));
            rep.min_theta_bounded = rat_max(rep.min_theta_bounded, self);
            if (self > theta && rep.bounded_ok) {
                rep.bounded_ok = false;
                rep.bounded_witness = {y, u, u, -1, self};
            }
            for (int v = 0; v < n; ++v) {
                if (v == y) continue;
                // (I)
                if (f.dpi(y, u, v) != f.dpi(y, v, u) && rep.symmetry_ok) {
                    rep.symmetry_ok = false;
                    rep.symmetry_witness = {y, u, v, -1, Rational(f.dpi(y, u, v))};
                }
                // (II)
                for (int w = 0; w < n; ++w) {
                    if (w == y) continue;
                    if (f.dpi(y, u, w) > f.dpi(y, u, v) + f.dpi(y, v, w) && rep.triangle_ok) {
                        rep.triangle_ok = false;
                        rep.triangle_witness = {y, u, w, v, Rational(f.dpi(y, u, w))};
                    }
                }
                // (IV)
                if (u != v && v != y && u != y) {
                    Rational m(std::min(f.dpi(y, u, v), f.dpi(v, u, y)));
                    rep.min_theta_behrstock = rat_max(rep.min_theta_behrstock, m);
                    if (m > theta && rep.behrstock_ok) {
                        rep.behrstock_ok = false;
                        rep.behrstock_witness = {y, u, v, -1, m};
                    }
                    // (IV') under the unmodified surrogate distances
                    if (Rational(f.dpi(y, u, v)) > theta) {
                        for (int w = 0; w < n; ++w) {
                            if (w == v || w == y || w == u) continue;
                            if (f.dpi(v, u, w) != f.dpi(v, y, w)) {
                                ++rep.strong_failures;
                                if (rep.strong_failures == 1)
                                    rep.strong_witness = {y, u, v, w,
                                                          Rational(f.dpi(v, u, w))};
                            }
                        }
                    }
                }
            }
        }

    // (V): count statistic per pair
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int count = 0;
            for (int y = 0; y < n; ++y) {
                if (y == u || y == v) continue;
                if (Rational(f.dpi(y, u, v)) >= theta) ++count;
            }
            if (count > rep.max_big_count) {
                rep.max_big_count = count;
                rep.big_count_witness = {-1, u, v, -1, Rational(count)};
            }
        }
    return rep;
}

std::vector<int> ProjectionComplex::bfs(int src) const {
    std::vector<int> dist(size, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<int> ProjectionComplex::bfs_avoiding(int src, const std::vector<char>& banned) const {
    std::vector<int> dist(size, -1);
    if (banned[src]) return dist;
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0 && !banned[w]) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

ProjectionComplex build_projection_complex(const ProjectionFamily& f, const Rational& zhe) {
    if (zhe.negative()) throw PreconditionBroken("Zhe must be non-negative");
    ProjectionComplex p;
    p.zhe = zhe;
    p.size = f.size;
    p.adj.assign(f.size, {});
    for (int u = 0; u < f.size; ++u)
        for (int v = u + 1; v < f.size; ++v) {
            bool edge = true;
            for (int y = 0; y < f.size && edge; ++y) {
                if (y == u || y == v) continue;
                if (Rational(f.dpi(y, u, v)) > zhe) edge = false;
            }
            if (edge) {
                p.edges.push_back({u, v});
                p.adj[u].push_back(v);
                p.adj[v].push_back(u);
            }
        }
    if (p.size > 0) {
        auto d = p.bfs(0);
        p.connected = std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
    }
    return p;
}

PathImageReport bounded_path_image_check(const ProjectionComplex& p, const ProjectionFamily& f,
                                         const Rational& theta) {
    if (p.zhe < Rational(33) * theta)
        throw PreconditionBroken("bounded path image needs Zhe >= 33*theta");
    PathImageReport rep;
    const int n = p.size;
    const Rational path_bound = Rational(11) * theta + Rational(4) * theta;
    const Rational geo_bound = Rational(22) * theta + Rational(6) * p.zhe + Rational(4) * theta;

    for (int y = 0; y < n; ++y) {
        // N_2(y) in the complex
        auto dist_y = p.bfs(y);
        std::vector<char> near(n, 0), self(n, 0);
        for (int v = 0; v < n; ++v) near[v] = dist_y[v] >= 0 && dist_y[v] <= 2;
        self[y] = 1;

        for (int u = 0; u < n; ++u) {
            if (near[u]) continue;
            auto comp = p.bfs_avoiding(u, near);
            auto no_y = p.bfs_avoiding(u, self);
            auto direct = p.bfs(u);
            for (int v = u + 1; v < n; ++v) {
                if (v == y) continue;
                ++rep.pairs_checked;
                // joined by a path outside N_2(y)
                if (!near[v] && comp[v] >= 0) {
                    int gap = f.dpi(y, u, v);
                    rep.max_path_gap = std::max(rep.max_path_gap, gap);
                    if (Rational(gap) > path_bound)
                        rep.violations.push_back({y, u, v, gap, false});
                }
                // joined by a geodesic missing y
                if (direct[v] >= 0 && no_y[v] == direct[v]) {
                    int gap = f.dpi(y, u, v);
                    rep.max_geo_gap = std::max(rep.max_geo_gap, gap);
                    if (Rational(gap) > geo_bound)
                        rep.violations.push_back({y, u, v, gap, true});
                }
            }
        }
    }
    return rep;
}

} // namespace coarsequot
