#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "percbk/errors.hpp"

namespace percbk {

enum class GraphKind { box, torus, rectangle };

std::string to_string(GraphKind k);
GraphKind graph_kind_from_string(const std::string& s);

struct Edge {
    std::int32_t u;
    std::int32_t v;
    std::int32_t axis;
};

// A sorted set of vertex indices with a human-readable descriptor.
struct VertexSet {
    std::vector<std::int32_t> indices;
    std::string tag;

    bool contains(std::int32_t v) const;
};

// Finite nearest-neighbour graph on a hypercubic vertex set: a centered box
// [-n,n]^d, a centered rectangle with per-axis radii, a general grid, or a
// periodic torus of side 2n+1. Immutable after construction; vertex indexing
// is row-major over coordinates shifted to start at zero, and edge indexing
// groups by axis then by tail vertex index, so identical parameters always
// produce the identical graph.
class EdgeGraph {
  public:
    static constexpr std::size_t default_vertex_cap = std::size_t(1) << 22;

    static EdgeGraph box(int dim, int radius, std::size_t vertex_cap = default_vertex_cap);
    static EdgeGraph rectangle(const std::vector<int>& radii,
                               std::size_t vertex_cap = default_vertex_cap);
    // Grid with extents[a] vertices along axis a, coordinates [0, extents[a]-1].
    static EdgeGraph grid(const std::vector<int>& extents,
                          std::size_t vertex_cap = default_vertex_cap);
    static EdgeGraph torus(int dim, int radius, std::size_t vertex_cap = default_vertex_cap);

    GraphKind kind() const { return kind_; }
    int dim() const { return dim_; }
    // Coordinate range along an axis, inclusive.
    int lo(int axis) const { return lo_[axis]; }
    int hi(int axis) const { return hi_[axis]; }
    int side(int axis) const { return hi_[axis] - lo_[axis] + 1; }
    // Radius parameter n: boxes [-n,n]^d and tori of side 2n+1.
    int radius() const;

    std::int32_t vertex_count() const { return vertex_count_; }
    std::int32_t edge_count() const { return static_cast<std::int32_t>(edges_.size()); }

    int coord(std::int32_t vertex, int axis) const {
        return coords_[static_cast<std::size_t>(vertex) * dim_ + axis];
    }
    std::int32_t vertex_index(std::span<const int> coords) const;
    // -1 when the coordinates fall outside the vertex set.
    std::int32_t try_vertex_index(std::span<const int> coords) const;

    const Edge& edge(std::int32_t e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::int32_t>& incident(std::int32_t vertex) const {
        return incidence_[vertex];
    }
    // Edge id leaving `vertex` in the +axis direction, or -1.
    std::int32_t edge_from(std::int32_t vertex, int axis) const {
        return edge_from_[static_cast<std::size_t>(vertex) * dim_ + axis];
    }

    // L-infinity norm of a vertex of a centered box/rectangle.
    int linf_norm(std::int32_t vertex) const;
    // L-infinity distance between two vertices (periodic metric on tori).
    int linf_distance(std::int32_t a, std::int32_t b) const;

    // Index of the image of edge e under vertex translation by `displacement`.
    // Exact bijection on tori; on boxes the image must stay in range.
    std::int32_t translate_edge(std::int32_t e, std::span<const int> displacement) const;

    nlohmann::json to_json() const;
    static EdgeGraph from_json(const nlohmann::json& j);

  private:
    EdgeGraph() = default;
    static EdgeGraph build(GraphKind kind, std::vector<int> lo, std::vector<int> hi,
                           bool periodic, std::size_t vertex_cap);

    GraphKind kind_ = GraphKind::box;
    int dim_ = 0;
    std::vector<int> lo_;
    std::vector<int> hi_;
    std::int32_t vertex_count_ = 0;
    std::vector<int> coords_;                     // vertex-major, dim_ entries each
    std::vector<Edge> edges_;
    std::vector<std::vector<std::int32_t>> incidence_;
    std::vector<std::int32_t> edge_from_;         // vertex-major, dim_ entries each
};

// Vertices of a box with L-infinity norm in (m, n]; the annulus A_{m,n}.
VertexSet annulus(const EdgeGraph& g, int m, int n);
// Vertices of a box with L-infinity norm exactly n.
VertexSet boundary(const EdgeGraph& g, int n);

}  // namespace percbk
