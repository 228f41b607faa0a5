#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarsequot/errors.hpp"

namespace coarsequot {

using Vertex = int;

// Finite connected simplicial graph with the unit-edge shortest path metric.
// Immutable after construction: every checker downstream assumes the
// adjacency never changes.
class MetricGraph {
  public:
    MetricGraph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
                std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    const std::string& label(Vertex v) const;
    bool has_labels() const { return !labels_.empty(); }

    void check_vertex(Vertex v) const;

  private:
    int n_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
};

struct Path {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    void validate(const MetricGraph& g) const;
};

struct Subspace {
    const MetricGraph* host = nullptr;
    std::vector<Vertex> members; // sorted, unique, non-empty

    Subspace() = default;
    Subspace(const MetricGraph& g, std::vector<Vertex> m);
    bool contains(Vertex v) const;
};

struct ProjectionSet {
    std::vector<Vertex> points; // sorted
    int base_distance = 0;
};

// BFS plumbing. Distances use -1 for unreachable (cannot happen on a
// connected graph, but restricted searches use it).
std::vector<int> bfs_distances(const MetricGraph& g, Vertex src);
std::vector<int> bfs_distances_multi(const MetricGraph& g, const std::vector<Vertex>& sources);
std::vector<int> bfs_distances_avoiding(const MetricGraph& g, Vertex src,
                                        const std::vector<char>& banned);

int distance(const MetricGraph& g, Vertex u, Vertex v);

// Deterministic geodesic: BFS tree from u with smallest-id predecessor.
Path geodesic(const MetricGraph& g, Vertex u, Vertex v);

// Vertices lying on some geodesic from u to v, given the two BFS rows.
std::vector<Vertex> geodesic_interval(const MetricGraph& g, const std::vector<int>& dist_u,
                                      const std::vector<int>& dist_v, Vertex u, Vertex v);

ProjectionSet closest_point_projection(const MetricGraph& g, const Subspace& y, Vertex z);

// Union-of-member projection of a vertex set, as used for d^pi over sets.
std::vector<Vertex> project_set(const MetricGraph& g, const Subspace& y,
                                const std::vector<Vertex>& a);

int set_diameter(const MetricGraph& g, const std::vector<Vertex>& s);

int proj_distance(const MetricGraph& g, const Subspace& y, const std::vector<Vertex>& a,
                  const std::vector<Vertex>& b);

int hausdorff_distance(const MetricGraph& g, const std::vector<Vertex>& a,
                       const std::vector<Vertex>& b);

// Convenience builders used by fixtures and tests.
MetricGraph path_graph(int n);
MetricGraph cycle_graph(int n);
MetricGraph grid_graph(int rows, int cols);

} // namespace coarsequot
