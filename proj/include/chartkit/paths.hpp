#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "chartkit/tangles.hpp"

namespace chartkit {

struct DirectedPath {
    int label = 0;
    std::vector<VertexId> vertices; // v0 .. vp
    std::vector<EdgeId> edges;      // e_i oriented v_{i-1} -> v_i

    size_t length() const { return edges.size(); }

    // P[v_i, v_j]
    DirectedPath subpath(size_t i, size_t j) const {
        DirectedPath p;
        p.label = label;
        p.vertices.assign(vertices.begin() + i, vertices.begin() + j + 1);
        p.edges.assign(edges.begin() + i, edges.begin() + j);
        return p;
    }
};

enum class Side { Left, Right };

// Side of a dart relative to a transit (enter along d_in, leave along d_out):
// walking counterclockwise from the exit dart, left-side darts come before
// the entry dart.
inline Side side_at(const Chart& c, Dart d_in, Dart d_out, Dart d_side) {
    Dart d = c.rot_next(d_out);
    while (d != d_in) {
        if (d == d_side) return Side::Left;
        d = c.rot_next(d);
    }
    return Side::Right;
}

struct PathFlags {
    bool upward_right = true, upward_left = true;
    bool downward_right = true, downward_left = true;
    bool mm = false;
    bool dichromatic = false;
    int companion = 0; // k with |m-k| = 1 for dichromatic paths
};

// Selectivity, M&M and dichromatic flags recomputed from the chart.
inline PathFlags path_flags(const Chart& c, const DartClass& dc, const DirectedPath& p) {
    PathFlags f;
    for (size_t i = 1; i + 1 <= p.vertices.size() - 1; ++i) {
        VertexId v = p.vertices[i];
        if (c.vertex(v).kind != VertexKind::White) continue;
        Dart din = dart_at_target(p.edges[i - 1]);
        Dart dout = dart_at_origin(p.edges[i]);
        for (Dart d : c.vertex(v).rotation) {
            if (d == din || d == dout) continue;
            if (c.label_of(d) != p.label) continue;
            Side s = side_at(c, din, dout, d);
            bool in = c.inward(d);
            if (s == Side::Right && !in) f.upward_right = false;
            if (s == Side::Left && !in) f.upward_left = false;
            if (s == Side::Right && in) f.downward_right = false;
            if (s == Side::Left && in) f.downward_left = false;
        }
    }
    if (!p.edges.empty()) {
        VertexId v0 = p.vertices.front(), vp = p.vertices.back();
        bool front_mid = c.vertex(v0).kind == VertexKind::White &&
                         edge_middle_at(c, dc, p.edges.front(), v0);
        bool back_mid = c.vertex(vp).kind == VertexKind::White &&
                        edge_middle_at(c, dc, p.edges.back(), vp);
        f.mm = front_mid && back_mid;
    }
    // Dichromatic: one companion label k shared by every vertex.
    for (int k : {p.label - 1, p.label + 1}) {
        if (k < 1 || k > c.degree - 1) continue;
        bool ok = true;
        for (VertexId v : p.vertices) {
            bool has_m = false, has_k = false;
            for (Dart d : c.vertex(v).rotation) {
                if (c.label_of(d) == p.label) has_m = true;
                if (c.label_of(d) == k) has_k = true;
            }
            if (!(has_m && has_k)) { ok = false; break; }
        }
        if (ok) {
            f.dichromatic = true;
            f.companion = k;
            break;
        }
    }
    return f;
}

// Upward principal: every edge middle at its start vertex. Downward: at its
// end vertex.
inline bool upward_principal(const Chart& c, const DartClass& dc, const DirectedPath& p) {
    for (size_t i = 0; i < p.edges.size(); ++i) {
        VertexId v = p.vertices[i];
        if (c.vertex(v).kind != VertexKind::White) return false;
        if (!edge_middle_at(c, dc, p.edges[i], v)) return false;
    }
    return true;
}

inline bool downward_principal(const Chart& c, const DartClass& dc, const DirectedPath& p) {
    for (size_t i = 0; i < p.edges.size(); ++i) {
        VertexId v = p.vertices[i + 1];
        if (c.vertex(v).kind != VertexKind::White) return false;
        if (!edge_middle_at(c, dc, p.edges[i], v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Maximal extension within a region.
// ---------------------------------------------------------------------------

struct Extension {
    DirectedPath path;
    enum class End {
        TerminalEdge, // last edge ends at a black vertex
        BoundaryExit, // last edge crosses the region boundary
        WhiteStop,    // no outward continuation at a white vertex
        CycleClosure, // continuation would revisit a path vertex
    } end = End::WhiteStop;
    bool cycle_error() const { return end == End::CycleClosure; }
};

// The unique upward maximal side-selective directed path starting from e,
// dominated by the region. At a white vertex with two outward label-m edges
// the continuation is chosen so the other one lies on the opposite side.
inline Extension extend_upward_maximal(const Chart& c, const DiskRegion& r, EdgeId e,
                                       Side side) {
    if (!r.meets_edge(e)) throw ChartError("start edge not in region");
    Extension out;
    DirectedPath& p = out.path;
    p.label = c.edge(e).label;
    p.vertices = {c.edge(e).origin, c.edge(e).target};
    p.edges = {e};
    std::set<VertexId> visited(p.vertices.begin(), p.vertices.end());
    for (;;) {
        EdgeId last = p.edges.back();
        VertexId v = p.vertices.back();
        if (!r.contains_vertex(v)) {
            out.end = Extension::End::BoundaryExit;
            return out;
        }
        VertexKind k = c.vertex(v).kind;
        if (k == VertexKind::Black) {
            out.end = Extension::End::TerminalEdge;
            return out;
        }
        Dart din = c.edge(last).target == v ? dart_at_target(last) : dart_at_origin(last);
        Dart next_dart = -1;
        if (k == VertexKind::Crossing) {
            next_dart = *diagonal_continue(c, din);
        } else {
            std::vector<Dart> outward;
            for (Dart d : c.vertex(v).rotation)
                if (d != din && c.label_of(d) == p.label && c.outward(d)) outward.push_back(d);
            if (outward.empty()) {
                out.end = Extension::End::WhiteStop;
                return out;
            }
            if (outward.size() == 1) {
                next_dart = outward[0];
            } else {
                // Choose so the other outward edge sits on the opposite side.
                Side opposite = side == Side::Right ? Side::Left : Side::Right;
                next_dart = side_at(c, din, outward[0], outward[1]) == opposite ? outward[0]
                                                                                : outward[1];
            }
        }
        EdgeId ne = edge_of(next_dart);
        VertexId nv = c.vertex_of(twin(next_dart));
        if (visited.count(nv) && r.contains_vertex(nv)) {
            out.end = Extension::End::CycleClosure;
            return out;
        }
        if (!r.meets_edge(ne)) {
            out.end = Extension::End::WhiteStop; // cannot leave the region sideways
            return out;
        }
        p.edges.push_back(ne);
        p.vertices.push_back(nv);
        visited.insert(nv);
    }
}

// Mirror of the upward extension: grows the path backwards from e.
inline Extension extend_downward_maximal(const Chart& c, const DiskRegion& r, EdgeId e,
                                         Side side) {
    if (!r.meets_edge(e)) throw ChartError("start edge not in region");
    Extension out;
    DirectedPath& p = out.path;
    p.label = c.edge(e).label;
    p.vertices = {c.edge(e).origin, c.edge(e).target};
    p.edges = {e};
    std::set<VertexId> visited(p.vertices.begin(), p.vertices.end());
    for (;;) {
        EdgeId first = p.edges.front();
        VertexId v = p.vertices.front();
        if (!r.contains_vertex(v)) {
            out.end = Extension::End::BoundaryExit;
            return out;
        }
        VertexKind k = c.vertex(v).kind;
        if (k == VertexKind::Black) {
            out.end = Extension::End::TerminalEdge;
            return out;
        }
        Dart dout = c.edge(first).origin == v ? dart_at_origin(first) : dart_at_target(first);
        Dart prev_dart = -1;
        if (k == VertexKind::Crossing) {
            prev_dart = *diagonal_continue(c, dout);
        } else {
            std::vector<Dart> inward;
            for (Dart d : c.vertex(v).rotation)
                if (d != dout && c.label_of(d) == p.label && c.inward(d)) inward.push_back(d);
            if (inward.empty()) {
                out.end = Extension::End::WhiteStop;
                return out;
            }
            if (inward.size() == 1) {
                prev_dart = inward[0];
            } else {
                Side opposite = side == Side::Right ? Side::Left : Side::Right;
                prev_dart = side_at(c, inward[0], dout, inward[1]) == opposite ? inward[0]
                                                                               : inward[1];
            }
        }
        EdgeId ne = edge_of(prev_dart);
        VertexId nv = c.vertex_of(twin(prev_dart));
        if (visited.count(nv) && r.contains_vertex(nv)) {
            out.end = Extension::End::CycleClosure;
            return out;
        }
        if (!r.meets_edge(ne)) {
            out.end = Extension::End::WhiteStop;
            return out;
        }
        p.edges.insert(p.edges.begin(), ne);
        p.vertices.insert(p.vertices.begin(), nv);
        visited.insert(nv);
    }
}

// ---------------------------------------------------------------------------
// Dichromatic M&M directed paths (Lemma 3.1 obstruction).
// ---------------------------------------------------------------------------

inline std::vector<DirectedPath> find_mm_dichromatic(const Chart& c, int m) {
    DartClass dc = dart_classification(c);
    std::vector<DirectedPath> out;
    std::set<std::vector<EdgeId>> seen;

    std::function<void(DirectedPath&)> extend = [&](DirectedPath& p) {
        VertexId vp = p.vertices.back();
        if (c.vertex(vp).kind == VertexKind::White &&
            edge_middle_at(c, dc, p.edges.back(), vp)) {
            PathFlags f = path_flags(c, dc, p);
            if (f.mm && f.dichromatic && seen.insert(p.edges).second) out.push_back(p);
        }
        if (c.vertex(vp).kind == VertexKind::Black) return;
        for (Dart d : c.vertex(vp).rotation) {
            if (!c.outward(d) || c.label_of(d) != m) continue;
            EdgeId e = edge_of(d);
            VertexId nv = c.vertex_of(twin(d));
            if (std::find(p.vertices.begin(), p.vertices.end(), nv) != p.vertices.end())
                continue;
            p.edges.push_back(e);
            p.vertices.push_back(nv);
            extend(p);
            p.edges.pop_back();
            p.vertices.pop_back();
        }
    };

    for (const auto& [id, e] : c.edges) {
        if (e.label != m) continue;
        VertexId v0 = e.origin;
        if (c.vertex(v0).kind != VertexKind::White) continue;
        if (!edge_middle_at(c, dc, id, v0)) continue;
        if (e.target == e.origin) continue;
        DirectedPath p;
        p.label = m;
        p.vertices = {v0, e.target};
        p.edges = {id};
        extend(p);
    }
    return out;
}

// A directed label-m cycle meeting the region, if any (Lemmas 3.2/3.3).
inline std::optional<CycleInfo> directed_cycle_in_region(const Chart& c, const DiskRegion& r,
                                                         int m) {
    for (const CycleInfo& cyc : find_cycles(c, m)) {
        if (!cyc.directed) continue;
        bool meets = false;
        for (EdgeId e : cyc.edges)
            if (r.meets_edge(e)) meets = true;
        for (VertexId v : cyc.vertices)
            if (r.contains_vertex(v)) meets = true;
        if (meets) return cyc;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Principal paths and the map f_D.
// ---------------------------------------------------------------------------

struct PrincipalPathResult {
    bool ok = false;
    DirectedPath path;
    EdgeId corresponding = -1; // f_D(tau_O)
    std::vector<std::string> problems;
};

// The upward principal path associated to an O-terminal edge of label s_O in
// a verified N-tangle: starts with the label-s_I edge middle at its white
// vertex, extends upward maximal, and must end at a terminal edge.
inline PrincipalPathResult principal_path(const Chart& c, const DiskRegion& r,
                                          const TangleClass& cls, EdgeId tau_o) {
    PrincipalPathResult res;
    if (cls.kind != TangleClass::Kind::NTangle) {
        res.problems.push_back("region is not a verified N-tangle");
        return res;
    }
    const EdgeRecord& to = c.edge(tau_o);
    if (!is_terminal_edge(c, to) || to.label != cls.s_o || !is_o_terminal(c, to)) {
        res.problems.push_back("tau_O is not an O-terminal edge of label s_O");
        return res;
    }
    DartClass dc = dart_classification(c);
    VertexId v0 = white_end(c, to);
    const auto& info = dc.whites.at(v0);
    Dart mid = c.label_of(info.middle_outward) == cls.s_i ? info.middle_outward
                                                          : info.middle_inward;
    if (c.label_of(mid) != cls.s_i) {
        res.problems.push_back("no label-s_I middle dart at the white vertex");
        return res;
    }
    if (!c.outward(mid)) {
        res.problems.push_back("label-s_I middle edge is not outward (tau_O not middle?)");
        return res;
    }
    Extension ext = extend_upward_maximal(c, r, edge_of(mid), Side::Right);
    res.path = ext.path;
    if (ext.end == Extension::End::CycleClosure) {
        res.problems.push_back("extension closed a directed cycle");
        return res;
    }
    if (ext.end != Extension::End::TerminalEdge) {
        res.problems.push_back("principal path did not end at a terminal edge");
        return res;
    }
    if (!upward_principal(c, dc, res.path))
        res.problems.push_back("path is not upward principal (chart not minimal?)");
    res.corresponding = res.path.edges.back();
    res.ok = res.problems.empty();
    return res;
}

} // namespace chartkit
