#include "percbk/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include <nlohmann/json.hpp>

namespace percbk {

std::string to_string(GraphKind k) {
    switch (k) {
        case GraphKind::box: return "box";
        case GraphKind::torus: return "torus";
        case GraphKind::rectangle: return "rectangle";
    }
    return "?";
}

GraphKind graph_kind_from_string(const std::string& s) {
    if (s == "box") return GraphKind::box;
    if (s == "torus") return GraphKind::torus;
    if (s == "rectangle") return GraphKind::rectangle;
    throw argument_error("unknown graph kind: " + s);
}

bool VertexSet::contains(std::int32_t v) const {
    return std::binary_search(indices.begin(), indices.end(), v);
}

EdgeGraph EdgeGraph::build(GraphKind kind, std::vector<int> lo, std::vector<int> hi,
                           bool periodic, std::size_t vertex_cap) {
    EdgeGraph g;
    g.kind_ = kind;
    g.dim_ = static_cast<int>(lo.size());
    g.lo_ = std::move(lo);
    g.hi_ = std::move(hi);

    std::size_t count = 1;
    for (int a = 0; a < g.dim_; ++a) {
        const std::size_t side = static_cast<std::size_t>(g.hi_[a] - g.lo_[a] + 1);
        if (count > vertex_cap / side) {
            throw capacity_error("vertex count exceeds cap of " + std::to_string(vertex_cap));
        }
        count *= side;
    }
    g.vertex_count_ = static_cast<std::int32_t>(count);

    g.coords_.resize(count * g.dim_);
    std::vector<int> c(g.dim_);
    for (int a = 0; a < g.dim_; ++a) c[a] = g.lo_[a];
    for (std::size_t v = 0; v < count; ++v) {
        for (int a = 0; a < g.dim_; ++a) g.coords_[v * g.dim_ + a] = c[a];
        for (int a = g.dim_ - 1; a >= 0; --a) {
            if (++c[a] <= g.hi_[a]) break;
            c[a] = g.lo_[a];
        }
    }

    g.edge_from_.assign(count * g.dim_, -1);
    g.incidence_.resize(count);
    for (int a = 0; a < g.dim_; ++a) {
        for (std::int32_t v = 0; v < g.vertex_count_; ++v) {
            std::vector<int> nb(g.dim_);
            for (int b = 0; b < g.dim_; ++b) nb[b] = g.coord(v, b);
            ++nb[a];
            if (nb[a] > g.hi_[a]) {
                if (!periodic) continue;
                nb[a] = g.lo_[a];
            }
            const std::int32_t w = g.vertex_index(nb);
            const std::int32_t e = static_cast<std::int32_t>(g.edges_.size());
            g.edges_.push_back(Edge{v, w, a});
            g.edge_from_[static_cast<std::size_t>(v) * g.dim_ + a] = e;
            g.incidence_[v].push_back(e);
            g.incidence_[w].push_back(e);
        }
    }
    return g;
}

EdgeGraph EdgeGraph::box(int dim, int radius, std::size_t vertex_cap) {
    if (dim < 1) throw argument_error("box: dimension must be >= 1");
    if (radius < 0) throw argument_error("box: radius must be >= 0");
    std::vector<int> lo(dim, -radius), hi(dim, radius);
    return build(GraphKind::box, std::move(lo), std::move(hi), false, vertex_cap);
}

EdgeGraph EdgeGraph::rectangle(const std::vector<int>& radii, std::size_t vertex_cap) {
    if (radii.empty()) throw argument_error("rectangle: need at least one axis");
    std::vector<int> lo, hi;
    for (int r : radii) {
        if (r < 0) throw argument_error("rectangle: radii must be >= 0");
        lo.push_back(-r);
        hi.push_back(r);
    }
    return build(GraphKind::rectangle, std::move(lo), std::move(hi), false, vertex_cap);
}

EdgeGraph EdgeGraph::grid(const std::vector<int>& extents, std::size_t vertex_cap) {
    if (extents.empty()) throw argument_error("grid: need at least one axis");
    std::vector<int> lo, hi;
    for (int n : extents) {
        if (n < 1) throw argument_error("grid: extents must be >= 1");
        lo.push_back(0);
        hi.push_back(n - 1);
    }
    return build(GraphKind::rectangle, std::move(lo), std::move(hi), false, vertex_cap);
}

EdgeGraph EdgeGraph::torus(int dim, int radius, std::size_t vertex_cap) {
    if (dim < 1) throw argument_error("torus: dimension must be >= 1");
    if (radius < 1) throw argument_error("torus: radius must be >= 1");
    std::vector<int> lo(dim, 0), hi(dim, 2 * radius);
    return build(GraphKind::torus, std::move(lo), std::move(hi), true, vertex_cap);
}

int EdgeGraph::radius() const {
    if (kind_ == GraphKind::torus) return hi_[0] / 2;
    for (int a = 0; a < dim_; ++a) {
        if (lo_[a] != -hi_[a] || hi_[a] != hi_[0]) {
            throw argument_error("radius() requires a centered box with equal radii");
        }
    }
    return hi_[0];
}

std::int32_t EdgeGraph::try_vertex_index(std::span<const int> coords) const {
    std::int64_t idx = 0;
    for (int a = 0; a < dim_; ++a) {
        const int c = coords[a];
        if (c < lo_[a] || c > hi_[a]) return -1;
        idx = idx * side(a) + (c - lo_[a]);
    }
    return static_cast<std::int32_t>(idx);
}

std::int32_t EdgeGraph::vertex_index(std::span<const int> coords) const {
    const std::int32_t v = try_vertex_index(coords);
    if (v < 0) throw argument_error("vertex coordinates out of range");
    return v;
}

int EdgeGraph::linf_norm(std::int32_t vertex) const {
    if (kind_ == GraphKind::torus) {
        throw argument_error("linf_norm is defined for boxes and rectangles only");
    }
    int m = 0;
    for (int a = 0; a < dim_; ++a) m = std::max(m, std::abs(coord(vertex, a)));
    return m;
}

int EdgeGraph::linf_distance(std::int32_t a, std::int32_t b) const {
    int m = 0;
    for (int ax = 0; ax < dim_; ++ax) {
        int d = std::abs(coord(a, ax) - coord(b, ax));
        if (kind_ == GraphKind::torus) d = std::min(d, side(ax) - d);
        m = std::max(m, d);
    }
    return m;
}

std::int32_t EdgeGraph::translate_edge(std::int32_t e, std::span<const int> displacement) const {
    const Edge& ed = edges_[e];
    std::vector<int> cu(dim_), cv(dim_);
    for (int a = 0; a < dim_; ++a) {
        cu[a] = coord(ed.u, a) + displacement[a];
        cv[a] = coord(ed.v, a) + displacement[a];
        if (kind_ == GraphKind::torus) {
            const int s = side(a);
            cu[a] = ((cu[a] - lo_[a]) % s + s) % s + lo_[a];
            cv[a] = ((cv[a] - lo_[a]) % s + s) % s + lo_[a];
        }
    }
    const std::int32_t u = try_vertex_index(cu);
    const std::int32_t v = try_vertex_index(cv);
    if (u < 0 || v < 0) throw argument_error("translated edge leaves the graph");
    std::int32_t out = edge_from(u, ed.axis);
    if (out >= 0 && (edges_[out].v == v || edges_[out].u == v)) return out;
    out = edge_from(v, ed.axis);
    if (out >= 0 && (edges_[out].v == u || edges_[out].u == u)) return out;
    throw argument_error("translated edge leaves the graph");
}

nlohmann::json EdgeGraph::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind_);
    j["d"] = dim_;
    j["lo"] = lo_;
    j["hi"] = hi_;
    j["vertex_count"] = vertex_count_;
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : edges_) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

EdgeGraph EdgeGraph::from_json(const nlohmann::json& j) {
    const GraphKind kind = graph_kind_from_string(j.at("kind").get<std::string>());
    const auto lo = j.at("lo").get<std::vector<int>>();
    const auto hi = j.at("hi").get<std::vector<int>>();
    if (lo.size() != hi.size() || lo.size() != j.at("d").get<std::size_t>()) {
        throw argument_error("graph json: inconsistent dimension");
    }
    EdgeGraph g = build(kind, lo, hi, kind == GraphKind::torus, default_vertex_cap);
    if (g.vertex_count() != j.at("vertex_count").get<std::int32_t>() ||
        g.edge_count() != static_cast<std::int32_t>(j.at("edges").size())) {
        throw argument_error("graph json: counts do not match the deterministic layout");
    }
    return g;
}

VertexSet annulus(const EdgeGraph& g, int m, int n) {
    if (g.kind() != GraphKind::box) throw argument_error("annulus requires a box graph");
    if (m < 0 || m >= n) throw argument_error("annulus requires 0 <= m < n");
    if (n > g.radius()) throw argument_error("annulus radius exceeds the box");
    VertexSet out;
    out.tag = "A_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    for (std::int32_t v = 0; v < g.vertex_count(); ++v) {
        const int r = g.linf_norm(v);
        if (r > m && r <= n) out.indices.push_back(v);
    }
    return out;
}

VertexSet boundary(const EdgeGraph& g, int n) {
    if (g.kind() != GraphKind::box) throw argument_error("boundary requires a box graph");
    if (n < 0 || n > g.radius()) throw argument_error("boundary radius out of range");
    VertexSet out;
    out.tag = "dLambda_" + std::to_string(n);
    for (std::int32_t v = 0; v < g.vertex_count(); ++v) {
        if (g.linf_norm(v) == n) out.indices.push_back(v);
    }
    return out;
}

}  // namespace percbk
