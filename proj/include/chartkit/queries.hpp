#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>

#include "chartkit/faces.hpp"

namespace chartkit {

// Gamma_m: the label-m edges and hoops with their endpoints.
struct Subchart {
    int label = 0;
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
    std::set<HoopId> hoops;
};

inline Subchart label_subgraph(const Chart& c, int m) {
    if (m < 1 || m > c.degree - 1) throw ChartError("label out of range");
    Subchart s;
    s.label = m;
    for (const auto& [id, e] : c.edges)
        if (e.label == m) {
            s.edges.insert(id);
            s.vertices.insert(e.origin);
            s.vertices.insert(e.target);
        }
    for (const auto& [id, h] : c.hoops)
        if (h.label == m) s.hoops.insert(id);
    return s;
}

// Middle darts and inward/outward triples at white vertices.
struct DartClass {
    struct WhiteInfo {
        std::vector<Dart> inward;  // the three inward darts, in ccw order
        std::vector<Dart> outward; // the three outward darts, in ccw order
        Dart middle_inward = -1;
        Dart middle_outward = -1;
    };
    std::map<VertexId, WhiteInfo> whites;

    bool is_middle(Dart d, VertexId at) const {
        auto it = whites.find(at);
        if (it == whites.end()) return false;
        return it->second.middle_inward == d || it->second.middle_outward == d;
    }
};

inline DartClass dart_classification(const Chart& c) {
    DartClass out;
    for (const auto& [id, v] : c.vertices) {
        if (v.kind != VertexKind::White || v.rotation.size() != 6) continue;
        std::vector<bool> inw;
        for (Dart d : v.rotation) inw.push_back(c.inward(d));
        int start = -1;
        for (int s = 0; s < 6; ++s)
            if (inw[s] && inw[(s + 1) % 6] && inw[(s + 2) % 6]) { start = s; break; }
        if (start < 0) continue; // invalid white; validate() reports it
        DartClass::WhiteInfo w;
        for (int i = 0; i < 3; ++i) w.inward.push_back(v.rotation[(start + i) % 6]);
        for (int i = 3; i < 6; ++i) w.outward.push_back(v.rotation[(start + i) % 6]);
        w.middle_inward = v.rotation[(start + 1) % 6];
        w.middle_outward = v.rotation[(start + 4) % 6];
        out.whites[id] = w;
    }
    return out;
}

// An edge is middle at a white vertex when one of its darts there is a
// middle dart.
inline bool edge_middle_at(const Chart& c, const DartClass& dc, EdgeId e, VertexId w) {
    const EdgeRecord& rec = c.edge(e);
    if (rec.origin == w && dc.is_middle(dart_at_origin(e), w)) return true;
    if (rec.target == w && dc.is_middle(dart_at_target(e), w)) return true;
    return false;
}

inline bool is_free_edge(const Chart& c, const EdgeRecord& e) {
    return c.vertex(e.origin).kind == VertexKind::Black &&
           c.vertex(e.target).kind == VertexKind::Black;
}

inline bool is_terminal_edge(const Chart& c, const EdgeRecord& e) {
    VertexKind a = c.vertex(e.origin).kind, b = c.vertex(e.target).kind;
    return (a == VertexKind::Black) != (b == VertexKind::Black) &&
           (a == VertexKind::White || b == VertexKind::White);
}

// I-terminal: inward at its black vertex.
inline bool is_i_terminal(const Chart& c, const EdgeRecord& e) {
    return is_terminal_edge(c, e) && c.vertex(e.target).kind == VertexKind::Black;
}
inline bool is_o_terminal(const Chart& c, const EdgeRecord& e) {
    return is_terminal_edge(c, e) && c.vertex(e.origin).kind == VertexKind::Black;
}

inline VertexId white_end(const Chart& c, const EdgeRecord& e) {
    if (c.vertex(e.origin).kind == VertexKind::White) return e.origin;
    if (c.vertex(e.target).kind == VertexKind::White) return e.target;
    throw ChartError("edge e" + std::to_string(e.id) + " has no white endpoint");
}
inline VertexId black_end(const Chart& c, const EdgeRecord& e) {
    if (c.vertex(e.origin).kind == VertexKind::Black) return e.origin;
    if (c.vertex(e.target).kind == VertexKind::Black) return e.target;
    throw ChartError("edge e" + std::to_string(e.id) + " has no black endpoint");
}

// Bigons: e1, e2 join the same white pair, bound an open disk U, and no edge
// at either white vertex meets U.
struct Bigon {
    EdgeId e1, e2;
    VertexId w1, w2;
};

namespace detail {

inline std::optional<std::set<Cell>> bigon_interior(const CellComplex& cc, EdgeId a, EdgeId b) {
    const Chart& c = *cc.chart;
    const EdgeRecord& ea = c.edge(a);
    const EdgeRecord& eb = c.edge(b);
    if (ea.origin != ea.target) {
        // Simple 2-cycle: the bounded side is its enclosure.
        std::set<Cell> barrier{Cell::edge(a), Cell::edge(b), Cell::vertex(ea.origin),
                               Cell::vertex(ea.target)};
        return enclosed_by(cc, barrier);
    }
    // Two loops at one vertex: the disk between them exists iff one loop lies
    // inside the other; its cells are the outer enclosure minus the inner part.
    std::set<Cell> bar_a{Cell::edge(a), Cell::vertex(ea.origin)};
    std::set<Cell> bar_b{Cell::edge(b), Cell::vertex(eb.origin)};
    std::set<Cell> in_a = enclosed_by(cc, bar_a);
    std::set<Cell> in_b = enclosed_by(cc, bar_b);
    if (in_a.count(Cell::edge(b))) {
        std::set<Cell> between;
        for (const Cell& x : in_a)
            if (!in_b.count(x) && !(x == Cell::edge(b))) between.insert(x);
        return between;
    }
    if (in_b.count(Cell::edge(a))) {
        std::set<Cell> between;
        for (const Cell& x : in_b)
            if (!in_a.count(x) && !(x == Cell::edge(a))) between.insert(x);
        return between;
    }
    return std::nullopt;
}

} // namespace detail

inline std::vector<Bigon> find_bigons(const Chart& c, const CellComplex& cc) {
    std::vector<Bigon> out;
    // Group candidate edges by their unordered white endpoint pair.
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> by_ends;
    for (const auto& [id, e] : c.edges) {
        if (c.vertex(e.origin).kind != VertexKind::White) continue;
        if (c.vertex(e.target).kind != VertexKind::White) continue;
        auto key = std::minmax(e.origin, e.target);
        by_ends[{key.first, key.second}].push_back(id);
    }
    for (const auto& [ends, es] : by_ends) {
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                auto interior = detail::bigon_interior(cc, es[i], es[j]);
                if (!interior) continue;
                bool clean = true;
                for (const Cell& cell : *interior) {
                    if (cell.kind != Cell::Kind::Edge) continue;
                    const EdgeRecord& e = c.edge(cell.id);
                    if (e.origin == ends.first || e.origin == ends.second ||
                        e.target == ends.first || e.target == ends.second) {
                        clean = false;
                        break;
                    }
                }
                if (clean) out.push_back({es[i], es[j], ends.first, ends.second});
            }
    }
    return out;
}

struct Complexity {
    long w = 0, f = 0, c = 0, b = 0;
    std::array<long, 4> c_tuple() const { return {c, w, -f, -b}; }
    std::array<long, 4> w_tuple() const { return {w, c, -f, -b}; }
    std::array<long, 3> cw_tuple() const { return {c + w, -f, -b}; }
    bool operator==(const Complexity& o) const {
        return w == o.w && f == o.f && c == o.c && b == o.b;
    }
};

inline Complexity complexities(const Chart& chart) {
    Complexity out;
    for (const auto& [id, v] : chart.vertices) {
        if (v.kind == VertexKind::White) ++out.w;
        if (v.kind == VertexKind::Crossing) ++out.c;
    }
    for (const auto& [id, e] : chart.edges)
        if (is_free_edge(chart, e)) ++out.f;
    CellComplex cc = cell_complex(chart);
    out.b = static_cast<long>(find_bigons(chart, cc).size());
    return out;
}

} // namespace chartkit
