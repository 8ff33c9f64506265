#pragma once

#include <map>
#include <set>
#include <vector>

#include "chartkit/chart.hpp"

namespace chartkit {

// Face orbits of the rotation system. With counterclockwise rotations the
// orbit step d -> rot_next(twin(d)) walks each face keeping it on the left;
// the outward-facing orbit of a component is traversed clockwise around it.
struct FaceStructure {
    struct Orbit {
        int id = -1;
        std::vector<Dart> darts; // cyclic
        int component = -1;
        int zone = -1; // resolved zone (outer orbits map to the parent zone)
    };
    struct Component {
        int id = -1;
        std::set<VertexId> vertices;
        std::set<EdgeId> edges;
        std::vector<int> orbits;
        int outer_orbit = -1;
        int parent_zone = -1;
    };
    // A zone is a connected region of the complement of the chart:
    // the root zone, a non-outer face orbit, or the inside of a hoop.
    struct Zone {
        enum class Kind { Root, Orbit, HoopInside } kind = Kind::Root;
        int id = -1;
        int orbit = -1;   // for Kind::Orbit
        HoopId hoop = -1; // for Kind::HoopInside
        std::vector<int> child_components;
        std::vector<HoopId> child_hoops;
    };

    std::vector<Orbit> orbits;
    std::vector<Component> components;
    std::vector<Zone> zones;
    std::map<Dart, int> orbit_of;
    std::map<HoopId, int> zone_inside_hoop;
    std::map<HoopId, int> zone_around_hoop;
    std::map<VertexId, int> component_of_vertex;
    int root_zone = 0;

    int zone_left_of(Dart d) const { return orbits[orbit_of.at(d)].zone; }

    // Zones adjacent to an edge's two sides.
    std::pair<int, int> zones_beside(EdgeId e) const {
        return {zone_left_of(dart_at_origin(e)), zone_left_of(dart_at_target(e))};
    }
};

inline Dart face_next(const Chart& c, Dart d) { return c.rot_next(twin(d)); }

namespace detail {

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        if (!parent.count(x)) parent[x] = x;
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

// Computes orbits, components and zones. Throws ChartError when placements
// are missing, cyclic or unresolvable; planarity itself is validate()'s job.
inline FaceStructure face_structure(const Chart& c) {
    FaceStructure fs;

    // Orbits of d -> rot_next(twin(d)).
    std::set<Dart> seen;
    for (Dart d0 : c.all_darts()) {
        if (seen.count(d0)) continue;
        FaceStructure::Orbit orb;
        orb.id = static_cast<int>(fs.orbits.size());
        Dart d = d0;
        do {
            orb.darts.push_back(d);
            seen.insert(d);
            d = face_next(c, d);
        } while (d != d0);
        for (Dart x : orb.darts) fs.orbit_of[x] = orb.id;
        fs.orbits.push_back(std::move(orb));
    }

    // Connected components of the dart graph.
    detail::UnionFind uf;
    for (const auto& [id, e] : c.edges) uf.unite(e.origin, e.target);
    for (const auto& [id, v] : c.vertices) uf.find(id);
    std::map<int, int> comp_index;
    for (const auto& [id, v] : c.vertices) {
        int root = uf.find(id);
        if (!comp_index.count(root)) {
            comp_index[root] = static_cast<int>(fs.components.size());
            FaceStructure::Component comp;
            comp.id = comp_index[root];
            fs.components.push_back(comp);
        }
        int ci = comp_index[root];
        fs.components[ci].vertices.insert(id);
        fs.component_of_vertex[id] = ci;
    }
    for (const auto& [id, e] : c.edges)
        fs.components[fs.component_of_vertex.at(e.origin)].edges.insert(id);
    for (auto& orb : fs.orbits) {
        orb.component = fs.component_of_vertex.at(c.vertex_of(orb.darts.front()));
        fs.components[orb.component].orbits.push_back(orb.id);
    }

    // Outer orbit of each component: from the outer dart, from a placement
    // anchor, or forced when the component has a single orbit.
    std::map<int, Placement> comp_parent;
    int root_component = -1;
    if (c.outer_dart) {
        root_component = fs.orbits[fs.orbit_of.at(*c.outer_dart)].component;
        fs.components[root_component].outer_orbit = fs.orbit_of.at(*c.outer_dart);
        comp_parent[root_component] = Placement::root();
    }
    for (const auto& [anchor, place] : c.placements) {
        int ci = fs.orbits[fs.orbit_of.at(anchor)].component;
        if (ci == root_component) throw ChartError("outer component also has a placement");
        if (comp_parent.count(ci)) throw ChartError("component placed twice");
        fs.components[ci].outer_orbit = fs.orbit_of.at(anchor);
        comp_parent[ci] = place;
    }
    for (auto& comp : fs.components) {
        if (comp.outer_orbit >= 0) continue;
        if (comp.orbits.size() == 1) {
            comp.outer_orbit = comp.orbits.front();
            comp_parent[comp.id] = Placement::root();
        } else {
            throw ChartError("component with several faces needs an outer dart or placement");
        }
    }
    if (!c.edges.empty() && !c.outer_dart && fs.components.size() == 1 &&
        fs.components[0].orbits.size() > 1)
        throw ChartError("chart with darts needs an outer designation");

    // Zones: root + non-outer orbits + hoop insides.
    fs.zones.push_back({FaceStructure::Zone::Kind::Root, 0, -1, -1, {}, {}});
    for (auto& orb : fs.orbits) {
        if (orb.id == fs.components[orb.component].outer_orbit) continue;
        FaceStructure::Zone z;
        z.kind = FaceStructure::Zone::Kind::Orbit;
        z.id = static_cast<int>(fs.zones.size());
        z.orbit = orb.id;
        orb.zone = z.id;
        fs.zones.push_back(z);
    }
    for (const auto& [hid, h] : c.hoops) {
        FaceStructure::Zone z;
        z.kind = FaceStructure::Zone::Kind::HoopInside;
        z.id = static_cast<int>(fs.zones.size());
        z.hoop = hid;
        fs.zone_inside_hoop[hid] = z.id;
        fs.zones.push_back(z);
    }

    // Resolve a placement to a zone id. Outer orbits delegate to their
    // component's parent, so resolution may chase a chain; guard cycles.
    auto resolve = [&](Placement p) -> int {
        std::set<int> visited_components;
        for (;;) {
            switch (p.kind) {
            case Placement::Kind::Root: return fs.root_zone;
            case Placement::Kind::InsideHoop: return fs.zone_inside_hoop.at(p.hoop);
            case Placement::Kind::FaceOfDart: {
                int orbit = fs.orbit_of.at(p.dart);
                int ci = fs.orbits[orbit].component;
                if (orbit != fs.components[ci].outer_orbit) return fs.orbits[orbit].zone;
                if (!visited_components.insert(ci).second)
                    throw ChartError("cyclic component placement");
                p = comp_parent.at(ci); // the outer orbit faces the parent zone
                break;
            }
            }
        }
    };

    for (auto& comp : fs.components) {
        comp.parent_zone = resolve(comp_parent.at(comp.id));
        fs.zones[comp.parent_zone].child_components.push_back(comp.id);
        for (int oid : comp.orbits)
            if (oid == comp.outer_orbit) fs.orbits[oid].zone = comp.parent_zone;
    }
    for (const auto& [hid, h] : c.hoops) {
        int z = resolve(h.parent);
        fs.zone_around_hoop[hid] = z;
        fs.zones[z].child_hoops.push_back(hid);
    }
    return fs;
}

// ---------------------------------------------------------------------------
// Cells and flooding.
//
// The plane decomposes into cells: vertices, edges, hoops and zones. Flood
// fills over cell adjacency, stopped by a barrier set, drive every
// "what is enclosed" question (disks bounded by cycles, bigons, SC-closures,
// region interiors).
// ---------------------------------------------------------------------------

struct Cell {
    enum class Kind { Vertex, Edge, Hoop, Zone } kind;
    int id;
    bool operator<(const Cell& o) const {
        return kind != o.kind ? kind < o.kind : id < o.id;
    }
    bool operator==(const Cell& o) const { return kind == o.kind && id == o.id; }
    static Cell vertex(VertexId v) { return {Kind::Vertex, v}; }
    static Cell edge(EdgeId e) { return {Kind::Edge, e}; }
    static Cell hoop(HoopId h) { return {Kind::Hoop, h}; }
    static Cell zone(int z) { return {Kind::Zone, z}; }
};

struct CellComplex {
    const Chart* chart;
    FaceStructure fs;
    std::map<Cell, std::vector<Cell>> adjacency;

    std::vector<Cell> all_cells() const {
        std::vector<Cell> out;
        for (const auto& [id, v] : chart->vertices) out.push_back(Cell::vertex(id));
        for (const auto& [id, e] : chart->edges) out.push_back(Cell::edge(id));
        for (const auto& [id, h] : chart->hoops) out.push_back(Cell::hoop(id));
        for (const auto& z : fs.zones) out.push_back(Cell::zone(z.id));
        return out;
    }
};

inline CellComplex cell_complex(const Chart& c) {
    CellComplex cc;
    cc.chart = &c;
    cc.fs = face_structure(c);
    auto link = [&](Cell a, Cell b) {
        cc.adjacency[a].push_back(b);
        cc.adjacency[b].push_back(a);
    };
    for (const auto& [id, e] : c.edges) {
        link(Cell::edge(id), Cell::vertex(e.origin));
        if (e.target != e.origin) link(Cell::edge(id), Cell::vertex(e.target));
        auto [zl, zr] = cc.fs.zones_beside(id);
        link(Cell::edge(id), Cell::zone(zl));
        if (zr != zl) link(Cell::edge(id), Cell::zone(zr));
    }
    for (const auto& [id, v] : c.vertices) {
        std::set<int> zs;
        for (Dart d : v.rotation) zs.insert(cc.fs.zone_left_of(d));
        for (int z : zs) link(Cell::vertex(id), Cell::zone(z));
        if (v.rotation.empty()) link(Cell::vertex(id), Cell::zone(cc.fs.root_zone));
    }
    for (const auto& [id, h] : c.hoops) {
        link(Cell::hoop(id), Cell::zone(cc.fs.zone_inside_hoop.at(id)));
        link(Cell::hoop(id), Cell::zone(cc.fs.zone_around_hoop.at(id)));
    }
    return cc;
}

inline std::set<Cell> flood(const CellComplex& cc, const std::set<Cell>& seeds,
                            const std::set<Cell>& barrier) {
    std::set<Cell> reached;
    std::vector<Cell> stack;
    for (const Cell& s : seeds)
        if (!barrier.count(s)) {
            reached.insert(s);
            stack.push_back(s);
        }
    while (!stack.empty()) {
        Cell cell = stack.back();
        stack.pop_back();
        auto it = cc.adjacency.find(cell);
        if (it == cc.adjacency.end()) continue;
        for (const Cell& n : it->second)
            if (!barrier.count(n) && reached.insert(n).second) stack.push_back(n);
    }
    return reached;
}

// Everything separated from the root zone by the barrier complex.
inline std::set<Cell> enclosed_by(const CellComplex& cc, const std::set<Cell>& barrier) {
    std::set<Cell> outside = flood(cc, {Cell::zone(cc.fs.root_zone)}, barrier);
    std::set<Cell> inside;
    for (const Cell& cell : cc.all_cells())
        if (!outside.count(cell) && !barrier.count(cell)) inside.insert(cell);
    return inside;
}

} // namespace chartkit
