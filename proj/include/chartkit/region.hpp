#pragma once

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chartkit/queries.hpp"
#include "chartkit/validate.hpp"

namespace chartkit {

// How a region boundary meets an edge it does not contain whole.
enum class CutKind {
    OriginIn,  // crossed once, the origin-side part is inside
    TargetIn,  // crossed once, the target-side part is inside
    MiddleIn,  // crossed twice, only a middle segment is inside
    MiddleOut, // crossed twice, both end parts inside, a middle piece outside
};

inline int crossings_of(CutKind k) {
    return (k == CutKind::OriginIn || k == CutKind::TargetIn) ? 1 : 2;
}

// One transverse intersection point of the region boundary with an edge.
struct BoundaryCrossing {
    EdgeId edge = -1;
    bool entering = false; // edge oriented into the region at this point
    int zone_after = -1;   // zone the boundary runs through after this point
};

// A combinatorial disk: a regular neighbourhood of its content, with holes
// filled. Content lists whole cells; cut edges record which part is inside.
// The transverse boundary walk is derived and traversed counterclockwise,
// region on the left.
struct DiskRegion {
    std::string name;
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
    std::set<HoopId> hoops;
    std::map<EdgeId, CutKind> cuts;
    std::set<int> filled_zones;
    std::vector<BoundaryCrossing> walk; // cyclic

    bool contains_vertex(VertexId v) const { return vertices.count(v) != 0; }
    bool contains_edge_whole(EdgeId e) const { return edges.count(e) != 0; }
    bool meets_edge(EdgeId e) const { return edges.count(e) || cuts.count(e); }
    bool empty() const {
        return vertices.empty() && edges.empty() && hoops.empty() && cuts.empty();
    }
};

// Cells of a region's content, as barrier/seed sets for flooding.
inline std::set<Cell> content_cells(const DiskRegion& r) {
    std::set<Cell> out;
    for (VertexId v : r.vertices) out.insert(Cell::vertex(v));
    for (EdgeId e : r.edges) out.insert(Cell::edge(e));
    for (HoopId h : r.hoops) out.insert(Cell::hoop(h));
    for (const auto& [e, k] : r.cuts) out.insert(Cell::edge(e));
    return out;
}

namespace detail {

// The content of a region as a standalone embedded graph; cut edges end at
// fresh stub vertices sitting at the crossing points.
struct ContentComplex {
    Chart mini;
    std::map<VertexId, EdgeId> stub_edge; // stub vertex -> original edge
    std::map<Dart, Dart> orig_dart;       // mini dart -> original dart (non-stub ends)
    std::set<VertexId> stubs;
};

inline ContentComplex content_complex(const Chart& c, const DiskRegion& r) {
    ContentComplex out;
    Chart& m = out.mini;
    m.degree = c.degree;
    for (VertexId v : r.vertices) m.vertices[v] = c.vertex(v);
    int next_vertex = c.vertices.empty() ? 0 : c.vertices.rbegin()->first + 1;
    int next_edge = c.edges.empty() ? 0 : c.edges.rbegin()->first + 1;

    auto stub = [&](EdgeId original) {
        VertexRecord rec;
        rec.id = next_vertex++;
        rec.kind = VertexKind::Black; // placeholder endpoint at the crossing
        m.vertices[rec.id] = rec;
        out.stubs.insert(rec.id);
        out.stub_edge[rec.id] = original;
        return rec.id;
    };

    for (EdgeId e : r.edges) {
        m.edges[e] = c.edge(e);
        out.orig_dart[dart_at_origin(e)] = dart_at_origin(e);
        out.orig_dart[dart_at_target(e)] = dart_at_target(e);
    }
    std::map<Dart, Dart> to_mini; // original dart -> mini dart, for kept germs
    for (EdgeId e : r.edges) {
        to_mini[dart_at_origin(e)] = dart_at_origin(e);
        to_mini[dart_at_target(e)] = dart_at_target(e);
    }
    for (const auto& [e, kind] : r.cuts) {
        const EdgeRecord& orig = c.edge(e);
        auto add_piece = [&](bool keep_origin, bool keep_target) {
            EdgeRecord rec = orig;
            rec.id = next_edge++;
            if (!keep_origin) {
                VertexId s = stub(e);
                rec.origin = s;
                m.vertices[s].rotation = {dart_at_origin(rec.id)};
            } else {
                to_mini[dart_at_origin(e)] = dart_at_origin(rec.id);
                out.orig_dart[dart_at_origin(rec.id)] = dart_at_origin(e);
            }
            if (!keep_target) {
                VertexId s = stub(e);
                rec.target = s;
                m.vertices[s].rotation = {dart_at_target(rec.id)};
            } else {
                to_mini[dart_at_target(e)] = dart_at_target(rec.id);
                out.orig_dart[dart_at_target(rec.id)] = dart_at_target(e);
            }
            m.edges[rec.id] = rec;
        };
        switch (kind) {
        case CutKind::OriginIn: add_piece(true, false); break;
        case CutKind::TargetIn: add_piece(false, true); break;
        case CutKind::MiddleIn: add_piece(false, false); break;
        case CutKind::MiddleOut:
            add_piece(true, false);
            add_piece(false, true);
            break;
        }
    }
    for (VertexId v : r.vertices) {
        std::vector<Dart> patched;
        for (Dart d : c.vertex(v).rotation) {
            auto it = to_mini.find(d);
            if (it == to_mini.end())
                throw ChartError("edge e" + std::to_string(edge_of(d)) + " at inside vertex v" +
                                 std::to_string(v) + " is neither inside nor cut");
            patched.push_back(it->second);
        }
        m.vertices[v].rotation = patched;
    }
    return out;
}

} // namespace detail

// Completes a region from partial content: swallows enclosed holes, checks
// the content forms a single disk, and derives the canonical boundary walk.
// Throws ChartError when the content cannot bound a disk.
inline DiskRegion finish_region(const Chart& c, const CellComplex& cc, DiskRegion r) {
    // Closure: anything separated from the root zone by the content is inside.
    for (;;) {
        std::set<Cell> barrier = content_cells(r);
        std::set<Cell> inside = enclosed_by(cc, barrier);
        bool grew = false;
        r.filled_zones.clear();
        for (const Cell& cell : inside) {
            switch (cell.kind) {
            case Cell::Kind::Vertex: grew |= r.vertices.insert(cell.id).second; break;
            case Cell::Kind::Edge:
                if (r.cuts.count(cell.id))
                    throw ChartError("cut edge e" + std::to_string(cell.id) +
                                     " is enclosed by the region content");
                grew |= r.edges.insert(cell.id).second;
                break;
            case Cell::Kind::Hoop: grew |= r.hoops.insert(cell.id).second; break;
            case Cell::Kind::Zone: r.filled_zones.insert(cell.id); break;
            }
        }
        if (!grew) break;
    }
    if (r.filled_zones.count(cc.fs.root_zone))
        throw ChartError("region would swallow the root zone");
    if (r.empty()) throw ChartError("empty region");

    for (const auto& [e, kind] : r.cuts) {
        const EdgeRecord& rec = c.edge(e);
        bool oin = r.vertices.count(rec.origin), tin = r.vertices.count(rec.target);
        bool want_oin = kind == CutKind::OriginIn || kind == CutKind::MiddleOut;
        bool want_tin = kind == CutKind::TargetIn || kind == CutKind::MiddleOut;
        if (oin != want_oin || tin != want_tin)
            throw ChartError("cut kind of e" + std::to_string(e) +
                             " disagrees with endpoint membership");
        if (r.edges.count(e)) throw ChartError("edge e" + std::to_string(e) + " both whole and cut");
    }

    // Count content components (adjacency runs through filled zones).
    int component_count = 0;
    {
        std::set<Cell> allowed = content_cells(r);
        for (int z : r.filled_zones) allowed.insert(Cell::zone(z));
        std::set<Cell> barrier;
        for (const Cell& cell : cc.all_cells())
            if (!allowed.count(cell)) barrier.insert(cell);
        std::set<Cell> left = allowed;
        while (!left.empty()) {
            std::set<Cell> reached = flood(cc, {*left.begin()}, barrier);
            bool any = false;
            for (const Cell& cell : reached)
                if (left.erase(cell)) any = true;
            if (!any) left.erase(left.begin());
            ++component_count;
        }
    }

    detail::ContentComplex content = detail::content_complex(c, r);
    check_structure(content.mini);

    // Face orbits of the content complex; each content component contributes
    // exactly one orbit facing unfilled zones.
    std::set<Dart> seen;
    std::vector<std::vector<Dart>> orbits;
    for (Dart d0 : content.mini.all_darts()) {
        if (seen.count(d0)) continue;
        std::vector<Dart> orb;
        Dart d = d0;
        do {
            orb.push_back(d);
            seen.insert(d);
            d = face_next(content.mini, d);
        } while (d != d0);
        orbits.push_back(std::move(orb));
    }

    // The corner swept just before walking dart x lies in the zone left of x.
    auto corner_zone = [&](Dart x) -> std::optional<int> {
        if (content.stubs.count(content.mini.vertex_of(x))) return std::nullopt;
        return cc.fs.zone_left_of(content.orig_dart.at(x));
    };

    std::vector<int> boundaries;
    std::set<int> ambient; // unfilled zones touched by boundary corners
    for (size_t i = 0; i < orbits.size(); ++i) {
        bool outsideish = false;
        for (Dart x : orbits[i]) {
            auto z = corner_zone(x);
            if (z) {
                if (!r.filled_zones.count(*z)) {
                    outsideish = true;
                    ambient.insert(*z);
                }
            } else {
                EdgeId orig = content.stub_edge.at(content.mini.vertex_of(x));
                auto [zl, zr] = cc.fs.zones_beside(orig);
                if (!r.filled_zones.count(zl) || !r.filled_zones.count(zr)) outsideish = true;
            }
        }
        if (outsideish) boundaries.push_back(static_cast<int>(i));
    }
    if (!content.mini.edges.empty() &&
        static_cast<int>(boundaries.size()) != component_count)
        throw ChartError("region content does not bound one disk per component");
    if (boundaries.size() > 1 && ambient.size() > 1) {
        // All side-by-side components must open onto one common zone so a
        // single disk can hold them.
        for (int b : boundaries) {
            bool ok = false;
            for (Dart x : orbits[b])
                if (auto z = corner_zone(x))
                    if (*z == *ambient.begin()) ok = true;
            if (!ok) throw ChartError("region components do not share an ambient zone");
        }
    }

    // Trace each component boundary forward, then reverse so the region sits
    // on the left.
    struct Item {
        bool crossing;
        BoundaryCrossing x;
        int zone;
    };
    auto trace = [&](int oi) {
        std::vector<Item> items;
        for (Dart x : orbits[oi]) {
            VertexId v = content.mini.vertex_of(x);
            if (content.stubs.count(v)) {
                BoundaryCrossing bc;
                bc.edge = content.stub_edge.at(v);
                bc.entering = at_origin(x); // origin-position stub: edge enters here
                items.push_back({true, bc, -1});
            } else {
                items.push_back({false, {}, *corner_zone(x)});
            }
        }
        std::reverse(items.begin(), items.end());
        return items;
    };

    // Deterministic component order: by smallest original edge id touched.
    std::sort(boundaries.begin(), boundaries.end(), [&](int a, int b) {
        auto key = [&](int oi) {
            EdgeId best = std::numeric_limits<EdgeId>::max();
            for (Dart x : orbits[oi]) {
                VertexId v = content.mini.vertex_of(x);
                EdgeId e = content.stubs.count(v) ? content.stub_edge.at(v)
                                                  : edge_of(content.orig_dart.at(x));
                best = std::min(best, e);
            }
            return best;
        };
        return key(a) < key(b);
    });

    // Stitch: each further component is nested at the entering-to-exiting
    // seam of the accumulated walk, rotated so its own seam-start (an
    // entering crossing cyclically preceded by an exiting one) comes first.
    // This pins one disk among the isotopy choices.
    auto crossing_indices = [](const std::vector<Item>& v) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i].crossing) idx.push_back(i);
        return idx;
    };
    auto seam_start = [&](const std::vector<Item>& v, bool entering) -> std::optional<size_t> {
        std::vector<size_t> idx = crossing_indices(v);
        for (size_t k = 0; k < idx.size(); ++k) {
            const Item& cur = v[idx[k]];
            const Item& prev = v[idx[(k + idx.size() - 1) % idx.size()]];
            if (cur.x.entering == entering && prev.x.entering != entering) return idx[k];
        }
        for (size_t i : idx)
            if (v[i].x.entering == entering) return i;
        return std::nullopt;
    };
    std::vector<Item> items;
    bool first_component = true;
    for (int b : boundaries) {
        std::vector<Item> part = trace(b);
        if (first_component) {
            items = std::move(part);
            first_component = false;
            continue;
        }
        if (auto s = seam_start(part, true))
            std::rotate(part.begin(), part.begin() + *s, part.end());
        size_t insert_at = seam_start(items, false).value_or(items.size());
        items.insert(items.begin() + insert_at, part.begin(), part.end());
    }

    r.walk.clear();
    int n = static_cast<int>(items.size());
    for (int i = 0; i < n; ++i) {
        if (!items[i].crossing) continue;
        BoundaryCrossing bc = items[i].x;
        bc.zone_after = -1;
        for (int k = 1; k <= n; ++k) {
            const Item& follow = items[(i + k) % n];
            if (!follow.crossing) { bc.zone_after = follow.zone; break; }
        }
        if (bc.zone_after < 0) {
            auto [zl, zr] = cc.fs.zones_beside(bc.edge);
            bc.zone_after = r.filled_zones.count(zl) ? zr : zl;
        }
        r.walk.push_back(bc);
    }
    return r;
}

// Builds a region as the filled neighbourhood of seed content. Edges between
// two seed vertices are taken whole; edges with one seed endpoint are cut.
inline DiskRegion region_around(const Chart& c, const CellComplex& cc,
                                const std::set<VertexId>& seed_vertices,
                                const std::set<EdgeId>& extra_whole_edges = {},
                                const std::string& name = "") {
    DiskRegion r;
    r.name = name;
    r.vertices = seed_vertices;
    for (EdgeId e : extra_whole_edges) {
        r.edges.insert(e);
        r.vertices.insert(c.edge(e).origin);
        r.vertices.insert(c.edge(e).target);
    }
    for (const auto& [id, e] : c.edges) {
        if (r.edges.count(id)) continue;
        bool oin = r.vertices.count(e.origin), tin = r.vertices.count(e.target);
        if (oin && tin) r.edges.insert(id);
        else if (oin) r.cuts[id] = CutKind::OriginIn;
        else if (tin) r.cuts[id] = CutKind::TargetIn;
    }
    return finish_region(c, cc, r);
}

// Region difference Cl(D - N) where N's content lies inside D's.
inline DiskRegion region_difference(const Chart& c, const CellComplex& cc, const DiskRegion& d,
                                    const DiskRegion& n, const std::string& name = "") {
    DiskRegion r;
    r.name = name;
    for (VertexId v : d.vertices)
        if (!n.vertices.count(v)) r.vertices.insert(v);
    for (HoopId h : d.hoops)
        if (!n.hoops.count(h)) r.hoops.insert(h);
    for (EdgeId e : d.edges) {
        if (n.edges.count(e)) continue;
        auto it = n.cuts.find(e);
        if (it == n.cuts.end()) {
            r.edges.insert(e);
        } else {
            switch (it->second) {
            case CutKind::OriginIn: r.cuts[e] = CutKind::TargetIn; break;
            case CutKind::TargetIn: r.cuts[e] = CutKind::OriginIn; break;
            case CutKind::MiddleIn: r.cuts[e] = CutKind::MiddleOut; break;
            case CutKind::MiddleOut: r.cuts[e] = CutKind::MiddleIn; break;
            }
        }
    }
    for (const auto& [e, kind] : d.cuts) {
        if (n.edges.count(e)) continue;
        auto it = n.cuts.find(e);
        if (it == n.cuts.end()) {
            r.cuts[e] = kind;
            continue;
        }
        if (crossings_of(kind) == 1 && crossings_of(it->second) == 1)
            r.cuts[e] = CutKind::MiddleIn;
        else
            throw ChartError("unsupported double cut in region difference on e" +
                             std::to_string(e));
    }
    return finish_region(c, cc, r);
}

} // namespace chartkit
