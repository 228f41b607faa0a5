#include "coarsequot/coning.hpp"

#include <algorithm>
#include <random>

#include "coarsequot/reference.hpp"

namespace coarsequot {

Vertex ConeOff::cone_vertex(int family_index) const {
    return base->vertex_count() + family_index;
}

bool ConeOff::is_cone(Vertex v) const { return v >= base->vertex_count(); }

int ConeOff::family_index(Vertex v) const {
    return is_cone(v) ? v - base->vertex_count() : -1;
}

ConeOff build_cone_off(const MetricGraph& g, std::vector<Subspace> family) {
    for (const auto& y : family)
        if (y.members.empty()) throw EmptySubspace("cone over empty subspace");
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    const int n = g.vertex_count();
    for (size_t i = 0; i < family.size(); ++i) {
        Vertex cone = n + static_cast<Vertex>(i);
        for (Vertex m : family[i].members) edges.push_back({cone, m});
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v));
        for (size_t i = 0; i < family.size(); ++i)
            labels.push_back("cone:" + std::to_string(i));
    }
    MetricGraph combined(n + static_cast<int>(family.size()), std::move(edges), std::move(labels));
    return ConeOff{&g, std::move(family), std::move(combined)};
}

ConeOff build_modified_cone_off(const MetricGraph& g,
                                const std::vector<std::vector<Vertex>>& rho_images,
                                const Rational& a) {
    // cone radius is integer in a graph; A from the ledger may be fractional
    long long radius = a.num() / a.den();
    std::vector<Subspace> family;
    family.reserve(rho_images.size());
    for (const auto& rho : rho_images) {
        if (rho.empty()) throw MissingRho();
        auto dist = bfs_distances_multi(g, rho);
        std::vector<Vertex> hood;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (dist[v] <= radius) hood.push_back(v);
        family.emplace_back(g, std::move(hood));
    }
    return build_cone_off(g, std::move(family));
}

std::vector<Vertex> DeElectrification::base_vertices() const {
    std::vector<Vertex> out;
    for (const auto& p : pieces)
        for (Vertex v : p.path.vertices)
            if (out.empty() || out.back() != v) out.push_back(v);
    return out;
}

int DeElectrification::base_length() const {
    int len = 0;
    for (const auto& p : pieces) len += p.path.length();
    return len;
}

DeElectrification de_electrify(const ConeOff& c, const Path& gamma) {
    gamma.validate(c.graph);
    if (c.is_cone(gamma.front()) || c.is_cone(gamma.back()))
        throw DanglingConeVertex("de-electrification endpoints must lie in the base");

    DeElectrification out;
    Path current;
    for (size_t i = 0; i < gamma.vertices.size(); ++i) {
        Vertex v = gamma.vertices[i];
        if (!c.is_cone(v)) {
            current.vertices.push_back(v);
            continue;
        }
        // interior crossing u, v_Y, w
        Vertex before = gamma.vertices[i - 1];
        Vertex after = gamma.vertices[i + 1];
        if (!current.vertices.empty()) {
            out.pieces.push_back({false, current, -1});
            current.vertices.clear();
        }
        DeElectrification::Piece crossing;
        crossing.is_crossing = true;
        crossing.owner = c.family_index(v);
        crossing.path = geodesic(*c.base, before, after);
        out.pieces.push_back(std::move(crossing));
    }
    if (!current.vertices.empty()) out.pieces.push_back({false, current, -1});

    // crossing endpoints belong to the owner by the cone adjacency rule
    for (const auto& p : out.pieces) {
        if (!p.is_crossing) continue;
        const auto& owner = c.family[p.owner];
        if (!owner.contains(p.path.front()) || !owner.contains(p.path.back()))
            throw InvalidGraph("crossing endpoints escaped the owner subspace");
    }
    return out;
}

SprianoReport check_spriano(const ConeOff& c, const SamplingSpec& spec,
                            std::size_t geodesic_cap) {
    const MetricGraph& base = *c.base;
    const int n = base.vertex_count();
    SprianoReport report;

    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (spec.mode == SamplingSpec::EXHAUSTIVE) {
        if (n > spec.exhaustive_vertex_cap)
            throw BudgetExceeded("exhaustive spriano above vertex cap");
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) pairs.push_back({x, y});
    } else {
        std::mt19937_64 rng(spec.seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < spec.count; ++i) {
            Vertex x = pick(rng), y = pick(rng);
            if (x != y) pairs.push_back({x, y});
        }
        report.exact = false;
    }

    int worst = 0;
    for (auto [x, y] : pairs) {
        auto dist_x = bfs_distances(base, x);
        auto dist_y = bfs_distances(base, y);
        auto interval = geodesic_interval(base, dist_x, dist_y, x, y);

        std::vector<Path> hat_geodesics;
        try {
            hat_geodesics = reference::all_geodesics(c.graph, x, y, geodesic_cap);
        } catch (const BudgetExceeded&) {
            hat_geodesics = {geodesic(c.graph, x, y)};
            report.exact = false;
        }
        for (const auto& hat : hat_geodesics) {
            auto tilde = de_electrify(c, hat);
            auto dist_tilde = bfs_distances_multi(base, tilde.base_vertices());
            for (Vertex p : interval) worst = std::max(worst, dist_tilde[p]);
        }
        ++report.pairs_checked;
    }
    report.measured_d = worst;
    return report;
}

ProjectionSet extended_projection(const ConeOff& c, int target_family_index, Vertex x) {
    const Subspace& y = c.family[target_family_index];
    if (c.is_cone(x)) {
        int idx = c.family_index(x);
        if (idx == target_family_index) throw SelfProjection();
        const Subspace& u = c.family[idx];
        ProjectionSet ps;
        ps.points = project_set(*c.base, y, u.members);
        auto dist = bfs_distances_multi(*c.base, y.members);
        int best = -1;
        for (Vertex m : u.members)
            if (best < 0 || dist[m] < best) best = dist[m];
        ps.base_distance = best;
        return ps;
    }
    return closest_point_projection(*c.base, y, x);
}

int extended_proj_distance(const ConeOff& c, int target_family_index, Vertex x, Vertex y) {
    auto px = extended_projection(c, target_family_index, x).points;
    auto py = extended_projection(c, target_family_index, y).points;
    px.insert(px.end(), py.begin(), py.end());
    std::sort(px.begin(), px.end());
    px.erase(std::unique(px.begin(), px.end()), px.end());
    return set_diameter(*c.base, px);
}

namespace {

// exhaustive sweep, one family member at a time, with projections tabulated
// from per-member BFS rows instead of per-tuple searches
void bgi_exhaustive(const ConeOff& c, const Rational& threshold_c, BgiReport& report) {
    const MetricGraph& base = *c.base;
    const int nb = base.vertex_count();
    const int total = c.graph.vertex_count();
    const int fam = static_cast<int>(c.family.size());

    for (int f = 0; f < fam; ++f) {
        const Subspace& y = c.family[f];
        const Vertex cone = c.cone_vertex(f);
        auto dist_y = bfs_distances_multi(base, y.members);
        const int ny = static_cast<int>(y.members.size());
        std::vector<std::vector<int>> member_rows(ny);
        for (int m = 0; m < ny; ++m) member_rows[m] = bfs_distances(base, y.members[m]);
        auto member_dist = [&](int m1, int m2) { return member_rows[m1][y.members[m2]]; };

        // projection of every cone-off vertex except v_Y, as member indices
        std::vector<std::vector<int>> proj(total);
        for (Vertex x = 0; x < total; ++x) {
            if (x == cone) continue;
            if (!c.is_cone(x)) {
                for (int m = 0; m < ny; ++m)
                    if (member_rows[m][x] == dist_y[x]) proj[x].push_back(m);
            } else {
                const Subspace& u = c.family[c.family_index(x)];
                std::vector<char> in(ny, 0);
                for (Vertex uv : u.members) {
                    int best = -1;
                    for (int m = 0; m < ny; ++m)
                        if (best < 0 || member_rows[m][uv] < best) best = member_rows[m][uv];
                    for (int m = 0; m < ny; ++m)
                        if (member_rows[m][uv] == best) in[m] = 1;
                }
                for (int m = 0; m < ny; ++m)
                    if (in[m]) proj[x].push_back(m);
            }
        }

        // which pairs admit a geodesic avoiding the cone
        std::vector<std::vector<int>> with(total), without(total);
        std::vector<char> banned(total, 0);
        banned[cone] = 1;
        for (Vertex x = 0; x < total; ++x) {
            if (x == cone) continue;
            with[x] = bfs_distances(c.graph, x);
            without[x] = bfs_distances_avoiding(c.graph, x, banned);
        }

        for (Vertex x = 0; x < total; ++x) {
            if (x == cone) continue;
            for (Vertex yv = x + 1; yv < total; ++yv) {
                if (yv == cone) continue;
                ++report.tuples_checked;
                int d = 0;
                for (int m1 : proj[x])
                    for (int m2 : proj[yv]) d = std::max(d, member_dist(m1, m2));
                for (const auto& side : {proj[x], proj[yv]})
                    for (size_t i = 0; i < side.size(); ++i)
                        for (size_t j = i + 1; j < side.size(); ++j)
                            d = std::max(d, member_dist(side[i], side[j]));
                bool avoidable = without[x][yv] >= 0 && without[x][yv] == with[x][yv];
                if (avoidable)
                    report.max_proj_dist_without_cone =
                        std::max(report.max_proj_dist_without_cone, d);
                if (Rational(d) > threshold_c && avoidable)
                    report.violations.push_back({x, yv, f, d});
            }
        }
    }
}

} // namespace

BgiReport strong_bgi_check(const ConeOff& c, const Rational& threshold_c,
                           const SamplingSpec& spec) {
    BgiReport report;
    const int total = c.graph.vertex_count();
    const int fam = static_cast<int>(c.family.size());

    if (spec.mode == SamplingSpec::EXHAUSTIVE) {
        if (total > spec.exhaustive_vertex_cap)
            throw BudgetExceeded("exhaustive strong BGI above vertex cap");
        bgi_exhaustive(c, threshold_c, report);
        return report;
    }

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> pick_v(0, total - 1);
    std::uniform_int_distribution<int> pick_f(0, fam - 1);
    for (int i = 0; i < spec.count; ++i) {
        Vertex x = pick_v(rng), y = pick_v(rng);
        int f = pick_f(rng);
        Vertex cone = c.cone_vertex(f);
        if (x == y || x == cone || y == cone) continue;
        ++report.tuples_checked;
        int d = extended_proj_distance(c, f, x, y);
        std::vector<char> banned(total, 0);
        banned[cone] = 1;
        auto with = bfs_distances(c.graph, x);
        auto without = bfs_distances_avoiding(c.graph, x, banned);
        bool avoidable = without[y] >= 0 && without[y] == with[y];
        if (avoidable)
            report.max_proj_dist_without_cone =
                std::max(report.max_proj_dist_without_cone, d);
        if (Rational(d) > threshold_c && avoidable)
            report.violations.push_back({x, y, f, d});
    }
    return report;
}

} // namespace coarsequot
