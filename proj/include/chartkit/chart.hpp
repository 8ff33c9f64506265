#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chartkit/base.hpp"

namespace chartkit {

enum class VertexKind { Black, White, Crossing };

inline int degree_of(VertexKind k) {
    switch (k) {
    case VertexKind::Black: return 1;
    case VertexKind::White: return 6;
    case VertexKind::Crossing: return 4;
    }
    return 0;
}

inline std::string kind_name(VertexKind k) {
    switch (k) {
    case VertexKind::Black: return "black";
    case VertexKind::White: return "white";
    case VertexKind::Crossing: return "cross";
    }
    return "?";
}

struct VertexRecord {
    VertexId id = -1;
    VertexKind kind = VertexKind::Black;
    std::vector<Dart> rotation; // incident darts in counterclockwise order
};

struct EdgeRecord {
    EdgeId id = -1;
    int label = 0;
    VertexId origin = -1;
    VertexId target = -1;
};

// Placement of a hoop or of a whole connected component inside the plane.
// Parent is one of: the root zone (~), the face left of a dart, or the
// inside of a hoop.
struct Placement {
    enum class Kind { Root, FaceOfDart, InsideHoop } kind = Kind::Root;
    Dart dart = -1;   // for FaceOfDart
    HoopId hoop = -1; // for InsideHoop

    static Placement root() { return {}; }
    static Placement face(Dart d) { return {Kind::FaceOfDart, d, -1}; }
    static Placement inside(HoopId h) { return {Kind::InsideHoop, -1, h}; }

    bool operator==(const Placement& o) const {
        return kind == o.kind && dart == o.dart && hoop == o.hoop;
    }
};

struct HoopRecord {
    HoopId id = -1;
    int label = 0;
    bool ccw = true; // orientation as drawn
    Placement parent;
};

// An n-chart as a combinatorial embedding: records plus a rotation system,
// with hoops and detached components located by explicit placements.
class Chart {
public:
    int degree = 2; // n

    std::map<VertexId, VertexRecord> vertices;
    std::map<EdgeId, EdgeRecord> edges;
    std::map<HoopId, HoopRecord> hoops;

    // Outer face designation: the orbit containing this dart is the chart's
    // outer face. Unset for charts without darts.
    std::optional<Dart> outer_dart;

    // Placement of connected components other than the outer one, keyed by
    // any dart of the component; the keyed dart's orbit is the component's
    // outward-facing orbit. Components with a single orbit may be omitted.
    std::map<Dart, Placement> placements;

    bool has_edge(EdgeId e) const { return edges.count(e) != 0; }
    bool has_vertex(VertexId v) const { return vertices.count(v) != 0; }

    const EdgeRecord& edge(EdgeId e) const {
        auto it = edges.find(e);
        if (it == edges.end()) throw ChartError("no edge e" + std::to_string(e));
        return it->second;
    }
    const VertexRecord& vertex(VertexId v) const {
        auto it = vertices.find(v);
        if (it == vertices.end()) throw ChartError("no vertex v" + std::to_string(v));
        return it->second;
    }
    const HoopRecord& hoop(HoopId h) const {
        auto it = hoops.find(h);
        if (it == hoops.end()) throw ChartError("no hoop h" + std::to_string(h));
        return it->second;
    }

    // The vertex a dart lives at.
    VertexId vertex_of(Dart d) const {
        const EdgeRecord& e = edge(edge_of(d));
        return at_origin(d) ? e.origin : e.target;
    }

    // A dart is inward at its vertex iff the edge points toward it.
    bool inward(Dart d) const { return !at_origin(d); }
    bool outward(Dart d) const { return at_origin(d); }

    int label_of(Dart d) const { return edge(edge_of(d)).label; }

    // Next dart counterclockwise around the dart's vertex.
    Dart rot_next(Dart d) const {
        const auto& r = vertex(vertex_of(d)).rotation;
        auto it = std::find(r.begin(), r.end(), d);
        if (it == r.end()) throw ChartError("dart " + dart_name(d) + " missing from rotation");
        ++it;
        return it == r.end() ? r.front() : *it;
    }
    Dart rot_prev(Dart d) const {
        const auto& r = vertex(vertex_of(d)).rotation;
        auto it = std::find(r.begin(), r.end(), d);
        if (it == r.end()) throw ChartError("dart " + dart_name(d) + " missing from rotation");
        return it == r.begin() ? r.back() : *(it - 1);
    }

    std::vector<Dart> all_darts() const {
        std::vector<Dart> out;
        for (const auto& [id, e] : edges) {
            out.push_back(dart_at_origin(id));
            out.push_back(dart_at_target(id));
        }
        return out;
    }

    VertexId fresh_vertex_id() const { return vertices.empty() ? 0 : vertices.rbegin()->first + 1; }
    EdgeId fresh_edge_id() const { return edges.empty() ? 0 : edges.rbegin()->first + 1; }
    HoopId fresh_hoop_id() const { return hoops.empty() ? 0 : hoops.rbegin()->first + 1; }
};

// Structural integrity: every dart resolves, every rotation lists exactly the
// incident darts, placement references exist. Stronger chart axioms (degrees,
// labels, white/crossing conditions, planarity) belong to validate().
inline void check_structure(const Chart& c) {
    std::map<VertexId, std::multiset<Dart>> incident;
    for (const auto& [id, e] : c.edges) {
        if (e.id != id) throw ChartError("edge id mismatch on e" + std::to_string(id));
        if (!c.has_vertex(e.origin) || !c.has_vertex(e.target))
            throw ChartError("edge e" + std::to_string(id) + " has a dangling endpoint");
        incident[e.origin].insert(dart_at_origin(id));
        incident[e.target].insert(dart_at_target(id));
    }
    for (const auto& [id, v] : c.vertices) {
        if (v.id != id) throw ChartError("vertex id mismatch on v" + std::to_string(id));
        std::multiset<Dart> rot(v.rotation.begin(), v.rotation.end());
        if (rot.size() != v.rotation.size())
            throw ChartError("duplicate dart in rotation of v" + std::to_string(id));
        if (rot != incident[id])
            throw ChartError("rotation of v" + std::to_string(id) +
                             " does not list exactly the incident darts");
    }
    for (const auto& [id, h] : c.hoops) {
        if (h.id != id) throw ChartError("hoop id mismatch on h" + std::to_string(id));
        if (h.parent.kind == Placement::Kind::InsideHoop && !c.hoops.count(h.parent.hoop))
            throw ChartError("hoop h" + std::to_string(id) + " placed inside a missing hoop");
        if (h.parent.kind == Placement::Kind::FaceOfDart && !c.has_edge(edge_of(h.parent.dart)))
            throw ChartError("hoop h" + std::to_string(id) + " placed at a missing dart");
    }
    if (c.outer_dart && !c.has_edge(edge_of(*c.outer_dart)))
        throw ChartError("outer dart references a missing edge");
    for (const auto& [d, p] : c.placements) {
        if (!c.has_edge(edge_of(d))) throw ChartError("placement anchors a missing dart");
        if (p.kind == Placement::Kind::InsideHoop && !c.hoops.count(p.hoop))
            throw ChartError("placement inside a missing hoop");
        if (p.kind == Placement::Kind::FaceOfDart && !c.has_edge(edge_of(p.dart)))
            throw ChartError("placement at a missing dart");
    }
}

// Convenience builder used by fixtures, the parser and the move engine.
class ChartBuilder {
public:
    explicit ChartBuilder(int degree) { chart_.degree = degree; }

    VertexId vertex(VertexKind kind, VertexId id = -1) {
        if (id < 0) id = chart_.fresh_vertex_id();
        VertexRecord r;
        r.id = id;
        r.kind = kind;
        chart_.vertices[id] = r;
        return id;
    }

    EdgeId edge(int label, VertexId from, VertexId to, EdgeId id = -1) {
        if (id < 0) id = chart_.fresh_edge_id();
        EdgeRecord r;
        r.id = id;
        r.label = label;
        r.origin = from;
        r.target = to;
        chart_.edges[id] = r;
        return id;
    }

    HoopId hoop(int label, bool ccw = true, Placement parent = Placement::root(), HoopId id = -1) {
        if (id < 0) id = chart_.fresh_hoop_id();
        HoopRecord r;
        r.id = id;
        r.label = label;
        r.ccw = ccw;
        r.parent = parent;
        chart_.hoops[id] = r;
        return id;
    }

    void rotation(VertexId v, std::vector<Dart> darts) {
        chart_.vertices.at(v).rotation = std::move(darts);
    }

    // For degree-1 and other vertices whose rotation is forced.
    void auto_rotations() {
        std::map<VertexId, std::vector<Dart>> incident;
        for (const auto& [id, e] : chart_.edges) {
            incident[e.origin].push_back(dart_at_origin(id));
            incident[e.target].push_back(dart_at_target(id));
        }
        for (auto& [id, v] : chart_.vertices)
            if (v.rotation.empty()) v.rotation = incident[id];
    }

    void outer(Dart d) { chart_.outer_dart = d; }
    void place(Dart anchor, Placement p) { chart_.placements[anchor] = p; }

    Chart build() {
        auto_rotations();
        check_structure(chart_);
        return chart_;
    }

    Chart& raw() { return chart_; }

private:
    Chart chart_;
};

} // namespace chartkit
