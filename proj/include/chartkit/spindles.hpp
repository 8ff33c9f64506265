#pragma once

#include <optional>
#include <set>
#include <vector>

#include "chartkit/paths.hpp"

namespace chartkit {

// A spindle or half-spindle witness: a 2-colored disk bounded by a pair of
// selective directed paths of one label (plus, for half spindles, an arc
// crossed only by inward label-m edges).
struct SpindleWitness {
    enum class Kind { Spindle, HalfSpindle } kind = Kind::Spindle;
    int label_m = 0, label_k = 0;
    DirectedPath p_star;  // upward-right-selective
    DirectedPath p_tilde; // upward-left-selective
    std::set<VertexId> inner_vertices;
    std::set<EdgeId> inner_edges;
    std::set<EdgeId> arc_crossings; // edges crossed by L (half spindles)
    bool minimal = false;
};

namespace detail {

// All simple directed paths of one label, grown edge by edge.
inline std::vector<DirectedPath> all_simple_directed_paths(const Chart& c, int m,
                                                           size_t max_len = 32) {
    std::vector<DirectedPath> out;
    std::function<void(DirectedPath&)> extend = [&](DirectedPath& p) {
        out.push_back(p);
        if (p.edges.size() >= max_len) return;
        VertexId vp = p.vertices.back();
        const VertexRecord& rec = c.vertex(vp);
        if (rec.kind == VertexKind::Black) return;
        for (Dart d : rec.rotation) {
            if (!c.outward(d) || c.label_of(d) != m) continue;
            VertexId nv = c.vertex_of(twin(d));
            if (std::find(p.vertices.begin(), p.vertices.end(), nv) != p.vertices.end())
                continue;
            p.edges.push_back(edge_of(d));
            p.vertices.push_back(nv);
            extend(p);
            p.edges.pop_back();
            p.vertices.pop_back();
        }
    };
    for (const auto& [id, e] : c.edges) {
        if (e.label != m || e.origin == e.target) continue;
        DirectedPath p;
        p.label = m;
        p.vertices = {e.origin, e.target};
        p.edges = {id};
        extend(p);
    }
    return out;
}

// Inner-sector darts at a transit: standing at the vertex entering along
// d_in and leaving along d_out, the side sectors as in side_at().
inline std::vector<Dart> sector_darts(const Chart& c, Dart d_from, Dart d_to) {
    std::vector<Dart> out;
    Dart d = c.rot_next(d_from);
    while (d != d_to) {
        out.push_back(d);
        d = c.rot_next(d);
    }
    return out;
}

struct Growth {
    bool ok = true;
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
    std::set<EdgeId> cuts; // inward label-m edges crossing the arc L
};

// Grows the content on one side of a path pair from the seed darts, walking
// the graph only: label-k edges and outward label-m edges are swallowed
// whole, inward label-m frontier edges may cross L (half spindles only).
// Fails when the growth escapes to a forbidden vertex or a foreign label.
inline Growth grow_side(const Chart& c, int m, int k, const std::vector<Dart>& seeds,
                        const std::set<VertexId>& path_vertices,
                        const std::set<EdgeId>& path_edges,
                        const std::set<VertexId>& forbidden, bool allow_arc_cuts) {
    Growth g;
    std::vector<EdgeId> frontier;
    auto push_edge = [&](EdgeId e) {
        if (path_edges.count(e) || g.edges.count(e) || g.cuts.count(e)) return;
        frontier.push_back(e);
    };
    for (Dart d : seeds) push_edge(edge_of(d));
    while (!frontier.empty() && g.ok) {
        EdgeId e = frontier.back();
        frontier.pop_back();
        if (g.edges.count(e) || g.cuts.count(e)) continue;
        const EdgeRecord& rec = c.edge(e);
        if (rec.label != m && rec.label != k) {
            g.ok = false; // foreign label inside the candidate disk
            return g;
        }
        auto grown_or_path = [&](VertexId v) {
            return g.vertices.count(v) || path_vertices.count(v);
        };
        bool o_in = grown_or_path(rec.origin), t_in = grown_or_path(rec.target);
        // An inward label-m edge whose source is still outside crosses L.
        if (allow_arc_cuts && rec.label == m && t_in && !o_in) {
            g.cuts.insert(e);
            continue;
        }
        g.edges.insert(e);
        for (VertexId v : {rec.origin, rec.target}) {
            if (path_vertices.count(v)) continue;
            if (forbidden.count(v)) {
                g.ok = false;
                return g;
            }
            if (!g.vertices.insert(v).second) continue;
            for (Dart d : c.vertex(v).rotation) push_edge(edge_of(d));
        }
    }
    return g;
}

} // namespace detail

// All spindles for the label pair (m, k): disks bounded by an
// upward-right-selective and an upward-left-selective directed path of label
// m sharing exactly their endpoints, with the left-of-P* side bounded and
// 2-colored. Only bounded sides are reported.
inline std::vector<SpindleWitness> detect_spindles(const Chart& c, int m, int k) {
    if (std::abs(m - k) != 1) throw ChartError("spindle label pair must differ by 1");
    std::vector<SpindleWitness> out;
    CellComplex cc = cell_complex(c);
    DartClass dc = dart_classification(c);
    auto paths = detail::all_simple_directed_paths(c, m);
    for (const DirectedPath& pt : paths) {
        PathFlags ft = path_flags(c, dc, pt);
        if (!ft.upward_left) continue;
        for (const DirectedPath& ps : paths) {
            if (&ps == &pt) continue;
            if (ps.vertices.front() != pt.vertices.front()) continue;
            if (ps.vertices.back() != pt.vertices.back()) continue;
            if (ps.vertices.front() == ps.vertices.back()) continue;
            PathFlags fs = path_flags(c, dc, ps);
            if (!fs.upward_right) continue;
            // Shared cells: exactly the two endpoints.
            std::set<VertexId> inter;
            std::set<VertexId> vs(ps.vertices.begin(), ps.vertices.end());
            for (VertexId v : pt.vertices)
                if (vs.count(v)) inter.insert(v);
            if (inter.size() != 2) continue;
            std::set<EdgeId> shared_edges;
            std::set<EdgeId> es(ps.edges.begin(), ps.edges.end());
            for (EdgeId e : pt.edges)
                if (es.count(e)) shared_edges.insert(e);
            if (!shared_edges.empty()) continue;

            std::set<VertexId> path_vertices(ps.vertices.begin(), ps.vertices.end());
            path_vertices.insert(pt.vertices.begin(), pt.vertices.end());
            std::set<EdgeId> path_edges(ps.edges.begin(), ps.edges.end());
            path_edges.insert(pt.edges.begin(), pt.edges.end());

            // Seeds: corners left of the counterclockwise boundary walk
            // (up P*, back down P~).
            std::vector<Dart> seeds;
            auto transit = [&](VertexId v, Dart d_out, Dart d_in) {
                for (Dart d : detail::sector_darts(c, d_out, d_in)) seeds.push_back(d);
            };
            // Start vertex: leave along P*'s first edge, arrive from P~'s
            // first edge.
            transit(ps.vertices.front(), dart_at_origin(ps.edges.front()),
                    dart_at_origin(pt.edges.front()));
            // Interior vertices of P*.
            for (size_t i = 1; i + 1 < ps.vertices.size(); ++i)
                transit(ps.vertices[i], dart_at_origin(ps.edges[i]),
                        dart_at_target(ps.edges[i - 1]));
            // End vertex: arrive along P*, leave back down P~.
            transit(ps.vertices.back(), dart_at_target(pt.edges.back()),
                    dart_at_target(ps.edges.back()));
            // Interior vertices of P~ (boundary walks it downward).
            for (size_t i = 1; i + 1 < pt.vertices.size(); ++i)
                transit(pt.vertices[i], dart_at_target(pt.edges[i - 1]),
                        dart_at_origin(pt.edges[i]));

            // The disk must sit on the left of P*, i.e. the side the seeds
            // open into must be the bounded side of the path cycle; its
            // content is then the exact enclosure (hoops included).
            std::set<Cell> barrier;
            for (VertexId v : path_vertices) barrier.insert(Cell::vertex(v));
            for (EdgeId e : path_edges) barrier.insert(Cell::edge(e));
            std::set<Cell> inside = enclosed_by(cc, barrier);
            int side_zone = seeds.empty()
                                ? cc.fs.zone_left_of(dart_at_origin(ps.edges.front()))
                                : cc.fs.zone_left_of(seeds.front());
            if (!inside.count(Cell::zone(side_zone))) continue;

            bool two_colored = true;
            SpindleWitness w;
            for (const Cell& cell : inside) {
                if (cell.kind == Cell::Kind::Edge) {
                    int l = c.edge(cell.id).label;
                    if (l != m && l != k) two_colored = false;
                    w.inner_edges.insert(cell.id);
                }
                if (cell.kind == Cell::Kind::Hoop) {
                    int l = c.hoop(cell.id).label;
                    if (l != m && l != k) two_colored = false;
                }
                if (cell.kind == Cell::Kind::Vertex) w.inner_vertices.insert(cell.id);
            }
            if (!two_colored) continue;
            w.kind = SpindleWitness::Kind::Spindle;
            w.label_m = m;
            w.label_k = k;
            w.p_star = ps;
            w.p_tilde = pt;
            out.push_back(std::move(w));
        }
    }
    // Deduplicate by content + boundary.
    std::set<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> seen;
    std::vector<SpindleWitness> uniq;
    for (auto& w : out) {
        std::vector<EdgeId> a = w.p_star.edges, b = w.p_tilde.edges;
        if (!seen.insert({a, b}).second) continue;
        uniq.push_back(std::move(w));
    }
    // Minimal flag: no other witness strictly inside.
    auto cells_of = [](const SpindleWitness& w) {
        std::set<EdgeId> s(w.inner_edges.begin(), w.inner_edges.end());
        for (EdgeId e : w.p_star.edges) s.insert(e);
        for (EdgeId e : w.p_tilde.edges) s.insert(e);
        return s;
    };
    for (auto& w : uniq) {
        w.minimal = true;
        auto mine = cells_of(w);
        for (auto& other : uniq) {
            if (&other == &w) continue;
            auto theirs = cells_of(other);
            if (theirs != mine &&
                std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end()))
                w.minimal = false;
        }
    }
    return uniq;
}

// All half spindles for the label pair (m, k): the paths share exactly their
// final vertex, both have at least two edges, and every edge crossing the
// bottom arc is an inward label-m edge with a white source outside.
inline std::vector<SpindleWitness> detect_half_spindles(const Chart& c, int m, int k) {
    if (std::abs(m - k) != 1) throw ChartError("half-spindle label pair must differ by 1");
    std::vector<SpindleWitness> out;
    CellComplex cc = cell_complex(c);
    DartClass dc = dart_classification(c);
    auto paths = detail::all_simple_directed_paths(c, m);
    for (const DirectedPath& pt : paths) {
        if (pt.edges.size() < 2) continue;
        PathFlags ft = path_flags(c, dc, pt);
        if (!ft.upward_left) continue;
        for (const DirectedPath& ps : paths) {
            if (ps.edges.size() < 2) continue;
            if (ps.vertices.back() != pt.vertices.back()) continue;
            std::set<VertexId> vs(ps.vertices.begin(), ps.vertices.end());
            int shared = 0;
            for (VertexId v : pt.vertices)
                if (vs.count(v)) ++shared;
            if (shared != 1) continue; // only the apex
            PathFlags fs = path_flags(c, dc, ps);
            if (!fs.upward_right) continue;

            std::set<VertexId> path_vertices(ps.vertices.begin() + 1, ps.vertices.end());
            path_vertices.insert(pt.vertices.begin() + 1, pt.vertices.end());
            std::set<EdgeId> path_edges(ps.edges.begin(), ps.edges.end());
            path_edges.insert(pt.edges.begin(), pt.edges.end());
            std::set<VertexId> forbidden{ps.vertices.front(), pt.vertices.front()};

            std::vector<Dart> seeds;
            auto transit = [&](VertexId v, Dart d_out, Dart d_in) {
                for (Dart d : detail::sector_darts(c, d_out, d_in)) seeds.push_back(d);
            };
            for (size_t i = 1; i + 1 < ps.vertices.size(); ++i)
                transit(ps.vertices[i], dart_at_origin(ps.edges[i]),
                        dart_at_target(ps.edges[i - 1]));
            transit(ps.vertices.back(), dart_at_target(pt.edges.back()),
                    dart_at_target(ps.edges.back()));
            for (size_t i = 1; i + 1 < pt.vertices.size(); ++i)
                transit(pt.vertices[i], dart_at_target(pt.edges[i - 1]),
                        dart_at_origin(pt.edges[i]));

            detail::Growth g =
                detail::grow_side(c, m, k, seeds, path_vertices, path_edges, forbidden, true);
            if (!g.ok) continue;
            // (v): arc crossings must be I-edges: white source strictly
            // outside, white target inside.
            bool arc_ok = true;
            for (EdgeId e : g.cuts) {
                const EdgeRecord& rec = c.edge(e);
                if (c.vertex(rec.origin).kind != VertexKind::White) arc_ok = false;
                if (c.vertex(rec.target).kind != VertexKind::White) arc_ok = false;
                if (path_vertices.count(rec.target)) arc_ok = false; // must be Int E
            }
            if (!arc_ok) continue;
            // Hoops enclosed by the grown complex sit inside E: they must
            // respect the 2-coloring (i).
            {
                std::set<Cell> barrier;
                for (VertexId v : path_vertices) barrier.insert(Cell::vertex(v));
                for (EdgeId e : path_edges) barrier.insert(Cell::edge(e));
                for (VertexId v : g.vertices) barrier.insert(Cell::vertex(v));
                for (EdgeId e : g.edges) barrier.insert(Cell::edge(e));
                bool hoops_ok = true;
                for (const Cell& cell : enclosed_by(cc, barrier))
                    if (cell.kind == Cell::Kind::Hoop) {
                        int l = c.hoop(cell.id).label;
                        if (l != m && l != k) hoops_ok = false;
                    }
                if (!hoops_ok) continue;
            }

            SpindleWitness w;
            w.kind = SpindleWitness::Kind::HalfSpindle;
            w.label_m = m;
            w.label_k = k;
            w.p_star = ps;
            w.p_tilde = pt;
            w.inner_vertices = g.vertices;
            w.inner_edges = g.edges;
            w.arc_crossings = g.cuts;
            out.push_back(std::move(w));
        }
    }
    std::set<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> seen;
    std::vector<SpindleWitness> uniq;
    for (auto& w : out) {
        if (!seen.insert({w.p_star.edges, w.p_tilde.edges}).second) continue;
        uniq.push_back(std::move(w));
    }
    for (auto& w : uniq) w.minimal = true;
    return uniq;
}

} // namespace chartkit
