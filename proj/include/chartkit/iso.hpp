#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chartkit/faces.hpp"

namespace chartkit {

// Canonical key of a chart up to relabeling of ids: a BFS encoding of the
// rotation system minimized over starting darts, combined with the
// containment forest of components and hoops. Two charts are isomorphic as
// charts-in-a-disk iff their keys agree.
namespace isodetail {

// Canonical encoding of one component starting from a given dart: breadth
// first over vertices; each vertex's rotation is read starting from its
// discovery dart. Records (kind, [label, orientation, peer]) per dart.
inline std::string encode_from(const Chart& c, Dart start) {
    std::map<VertexId, int> vid;
    std::map<VertexId, Dart> entry;
    std::vector<VertexId> order;
    auto discover = [&](VertexId v, Dart via) {
        if (vid.count(v)) return;
        vid[v] = static_cast<int>(order.size());
        order.push_back(v);
        entry[v] = via;
    };
    discover(c.vertex_of(start), start);
    std::ostringstream os;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        VertexId v = order[qi];
        const VertexRecord& rec = c.vertex(v);
        os << kind_name(rec.kind)[0];
        // Walk the rotation counterclockwise from the entry dart.
        const auto& rot = rec.rotation;
        auto it = std::find(rot.begin(), rot.end(), entry[v]);
        size_t n = rot.size(), start_i = it - rot.begin();
        for (size_t i = 0; i < n; ++i) {
            Dart d = rot[(start_i + i) % n];
            os << ":" << c.label_of(d) << (c.outward(d) ? '>' : '<');
            VertexId peer = c.vertex_of(twin(d));
            discover(peer, twin(d));
            os << vid[peer];
        }
        os << ";";
    }
    return os.str();
}

inline std::string component_key(const Chart& c, const FaceStructure& fs, int comp) {
    // Start darts restricted to the outward-facing orbit so the embedding's
    // outer choice is part of the key.
    std::string best;
    for (Dart d : fs.orbits[fs.components[comp].outer_orbit].darts) {
        std::string k = encode_from(c, d);
        if (best.empty() || k < best) best = k;
    }
    return best;
}

} // namespace isodetail

inline std::string chart_key(const Chart& c) {
    FaceStructure fs = face_structure(c);
    // Forest over zones: each component/hoop hangs in a parent zone; zones
    // belong to components (non-outer orbits), hoops, or the root.
    std::map<int, std::string> comp_keys;
    for (const auto& comp : fs.components)
        comp_keys[comp.id] = isodetail::component_key(c, fs, comp.id);

    // For zone identification inside a component we canonicalize the orbit
    // multiset of children; per-face resolution is folded in by hashing the
    // child zone's orbit signature (labels along the face walk).
    auto orbit_sig = [&](int orbit) {
        std::ostringstream os;
        std::string best;
        const auto& darts = fs.orbits[orbit].darts;
        for (size_t s = 0; s < darts.size(); ++s) {
            std::ostringstream t;
            for (size_t i = 0; i < darts.size(); ++i) {
                Dart d = darts[(s + i) % darts.size()];
                t << c.label_of(d) << (c.outward(d) ? '>' : '<') << ",";
            }
            if (best.empty() || t.str() < best) best = t.str();
        }
        os << best;
        return os.str();
    };

    std::function<std::string(int)> zone_key = [&](int zone) -> std::string {
        const auto& z = fs.zones[zone];
        std::ostringstream os;
        switch (z.kind) {
        case FaceStructure::Zone::Kind::Root: os << "R("; break;
        case FaceStructure::Zone::Kind::HoopInside:
            os << "H" << c.hoop(z.hoop).label << (c.hoop(z.hoop).ccw ? "c" : "w") << "(";
            break;
        case FaceStructure::Zone::Kind::Orbit: os << "F" << orbit_sig(z.orbit) << "("; break;
        }
        std::vector<std::string> kids;
        for (int comp : z.child_components) {
            std::ostringstream k;
            k << "C[" << comp_keys[comp] << "]{";
            std::vector<std::string> inner;
            for (int orbit : fs.components[comp].orbits) {
                if (orbit == fs.components[comp].outer_orbit) continue;
                int zid = fs.orbits[orbit].zone;
                inner.push_back(zone_key(zid));
            }
            std::sort(inner.begin(), inner.end());
            for (auto& s : inner) k << s;
            k << "}";
            kids.push_back(k.str());
        }
        for (HoopId h : z.child_hoops) kids.push_back(zone_key(fs.zone_inside_hoop.at(h)));
        std::sort(kids.begin(), kids.end());
        for (auto& s : kids) os << s;
        os << ")";
        return os.str();
    };

    std::ostringstream os;
    os << "chart" << c.degree << "/" << zone_key(fs.root_zone);
    return os.str();
}

inline bool isomorphic(const Chart& a, const Chart& b) { return chart_key(a) == chart_key(b); }

inline size_t chart_hash(const Chart& c) { return std::hash<std::string>{}(chart_key(c)); }

} // namespace chartkit
