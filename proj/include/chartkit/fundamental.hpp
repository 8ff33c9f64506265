#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chartkit/paths.hpp"

namespace chartkit {

// The two same-orientation edges at a terminal edge's white vertex.
inline std::pair<EdgeId, EdgeId> sibling_edges(const Chart& c, const DartClass& dc,
                                               EdgeId tau) {
    const EdgeRecord& t = c.edge(tau);
    VertexId w = white_end(c, t);
    bool tau_inward = t.target == w; // inward at the white vertex
    const auto& info = dc.whites.at(w);
    const auto& triple = tau_inward ? info.inward : info.outward;
    std::vector<EdgeId> sibs;
    for (Dart d : triple)
        if (edge_of(d) != tau) sibs.push_back(edge_of(d));
    if (sibs.size() != 2) throw ChartError("terminal edge without two sibling edges");
    return {sibs[0], sibs[1]};
}

struct DeltaCheck {
    EdgeId tau = -1;
    EdgeId sib1 = -1, sib2 = -1;
    bool boundary_arc_ok = false; // Delta(tau) cap dD inside the right IO-arc
    bool interior_empty = false;  // Gamma cap (Int Delta - tau) empty
    std::vector<std::string> problems;
    int walk_pos = -1; // position of the sibling pair along the region walk
};

struct FundamentalInfo {
    bool ok = false;
    TangleClass cls;
    std::vector<EdgeId> tau_o; // T_O(D), counterclockwise along the walk
    std::vector<EdgeId> tau_i; // T_I(D), clockwise along the walk
    std::vector<VertexId> w_o; // their white vertices, same order
    std::vector<VertexId> w_i;
    std::map<EdgeId, EdgeId> f_d; // tau_O -> tau_I
    std::map<EdgeId, DirectedPath> principal_paths;
    std::vector<DeltaCheck> deltas;
    bool siblings_polarity_ok = true; // Lemma 4.1
    bool no_wrong_io_edges = true;    // Remark 4.3(1)
    bool deltas_ok = true;
    bool paths_disjoint = true;
    bool f_d_injective = true;
    bool f_d_bijective = true;
    std::set<VertexId> d_dagger_vertices; // content left after removing deltas
    std::vector<std::string> problems;
};

namespace detail {

inline int walk_index_of_edge(const DiskRegion& r, EdgeId e) {
    for (int i = 0; i < static_cast<int>(r.walk.size()); ++i)
        if (r.walk[i].edge == e) return i;
    return -1;
}

} // namespace detail

// Verifies Lemma 7.4 for one terminal edge and reports the walk position of
// its sibling pair.
inline DeltaCheck delta_check(const Chart& c, const DiskRegion& r, const TangleClass& cls,
                              const DartClass& dc, EdgeId tau) {
    DeltaCheck out;
    out.tau = tau;
    auto [s1, s2] = sibling_edges(c, dc, tau);
    out.sib1 = s1;
    out.sib2 = s2;
    const EdgeRecord& t = c.edge(tau);
    bool is_to = c.edge(tau).label == cls.s_o;

    auto c1 = r.cuts.find(s1), c2 = r.cuts.find(s2);
    if (c1 == r.cuts.end() || c2 == r.cuts.end()) {
        out.problems.push_back("sibling edges of e" + std::to_string(tau) +
                               " do not cross the boundary");
        return out;
    }
    int p1 = detail::walk_index_of_edge(r, s1);
    int p2 = detail::walk_index_of_edge(r, s2);
    int n = static_cast<int>(r.walk.size());
    if (p1 < 0 || p2 < 0 || n == 0) {
        out.problems.push_back("sibling crossings not on the walk");
        return out;
    }
    // Adjacent crossings: one of the two arcs between them is empty, which is
    // the Delta side; then Int Delta meets no other boundary point.
    bool adjacent = (p1 + 1) % n == p2 || (p2 + 1) % n == p1;
    if (!adjacent && n != 2) {
        out.problems.push_back("sibling crossings are not adjacent on the boundary");
    }
    out.walk_pos = std::min(p1, p2);
    if ((p1 + 1) % n == p2) out.walk_pos = p1;
    if ((p2 + 1) % n == p1) out.walk_pos = p2;

    // Both siblings must cross the arc matching the terminal's polarity.
    CrossingClass expect = is_to ? CrossingClass::IEdge : CrossingClass::OEdge;
    bool classes_ok = true;
    for (int p : {p1, p2})
        if (classify_crossing(c, r, r.walk[p]) != expect) classes_ok = false;
    out.boundary_arc_ok = classes_ok && (adjacent || n == 2);

    // Interior emptiness: on the tau side of the sibling arc, the content is
    // exactly tau and its black vertex.
    VertexId w = white_end(c, t);
    std::set<Cell> barrier{Cell::vertex(w), Cell::edge(s1), Cell::edge(s2)};
    std::set<Cell> allowed = content_cells(r);
    // Flood from tau within the region content avoiding the sibling arc.
    std::set<Cell> reached;
    std::vector<Cell> stack{Cell::edge(tau)};
    reached.insert(Cell::edge(tau));
    std::map<Cell, std::vector<Cell>> adj;
    for (const Cell& cell : allowed) {
        if (cell.kind == Cell::Kind::Edge) {
            const EdgeRecord& e = c.edge(cell.id);
            for (VertexId v : {e.origin, e.target}) {
                if (!allowed.count(Cell::vertex(v))) continue;
                adj[cell].push_back(Cell::vertex(v));
                adj[Cell::vertex(v)].push_back(cell);
            }
        }
    }
    while (!stack.empty()) {
        Cell cell = stack.back();
        stack.pop_back();
        for (const Cell& nb : adj[cell])
            if (!barrier.count(nb) && reached.insert(nb).second) stack.push_back(nb);
    }
    out.interior_empty = true;
    for (const Cell& cell : reached) {
        if (cell == Cell::edge(tau)) continue;
        if (cell.kind == Cell::Kind::Vertex && cell.id == black_end(c, t)) continue;
        out.interior_empty = false;
        out.problems.push_back("extra content on the tau side of the sibling arc");
        break;
    }
    return out;
}

// Full fundamental information of a verified N-tangle: Delta disks, the
// fundamental region orders (I)/(II), and the bijection f_D via principal
// paths. Failed sub-checks are reported, not thrown: a failing fixture is an
// obstruction witness.
inline FundamentalInfo fundamental_info(const Chart& c, const DiskRegion& r) {
    FundamentalInfo out;
    out.cls = classify_region(c, r);
    if (out.cls.kind != TangleClass::Kind::NTangle) {
        out.problems.push_back("region is not an N-tangle");
        return out;
    }
    DartClass dc = dart_classification(c);
    TangleTally tally = boundary_tally(c, r);

    // Remark 4.3(1).
    for (const BoundaryCrossing& x : r.walk) {
        auto cls = classify_crossing(c, r, x);
        int label = c.edge(x.edge).label;
        if ((cls == CrossingClass::OEdge && label == out.cls.s_i) ||
            (cls == CrossingClass::IEdge && label == out.cls.s_o))
            out.no_wrong_io_edges = false;
    }

    // Lemma 4.1: sibling polarity.
    std::vector<std::pair<EdgeId, bool>> terminals; // (tau, is_tau_o)
    for (EdgeId e : tally.o_terminals) terminals.push_back({e, c.edge(e).label == out.cls.s_o});
    for (EdgeId e : tally.i_terminals) terminals.push_back({e, c.edge(e).label == out.cls.s_o});
    for (auto [tau, dummy] : terminals) {
        auto [s1, s2] = sibling_edges(c, dc, tau);
        CrossingClass expect =
            is_i_terminal(c, c.edge(tau)) ? CrossingClass::OEdge : CrossingClass::IEdge;
        for (EdgeId s : {s1, s2}) {
            int p = detail::walk_index_of_edge(r, s);
            if (p < 0 || classify_crossing(c, r, r.walk[p]) != expect)
                out.siblings_polarity_ok = false;
        }
    }

    // Delta disks, ordered along the walk.
    std::vector<std::pair<int, EdgeId>> to_sorted, ti_sorted;
    for (EdgeId tau : tally.o_terminals) {
        DeltaCheck d = delta_check(c, r, out.cls, dc, tau);
        if (!d.boundary_arc_ok || !d.interior_empty) out.deltas_ok = false;
        to_sorted.push_back({d.walk_pos, tau});
        out.deltas.push_back(std::move(d));
    }
    for (EdgeId tau : tally.i_terminals) {
        DeltaCheck d = delta_check(c, r, out.cls, dc, tau);
        if (!d.boundary_arc_ok || !d.interior_empty) out.deltas_ok = false;
        ti_sorted.push_back({d.walk_pos, tau});
        out.deltas.push_back(std::move(d));
    }
    // (II): tau_O whites counterclockwise (walk order); (I): tau_I whites
    // clockwise (reverse walk order).
    std::sort(to_sorted.begin(), to_sorted.end());
    std::sort(ti_sorted.begin(), ti_sorted.end());
    std::reverse(ti_sorted.begin(), ti_sorted.end());
    for (auto [pos, tau] : to_sorted) {
        out.tau_o.push_back(tau);
        out.w_o.push_back(white_end(c, c.edge(tau)));
    }
    for (auto [pos, tau] : ti_sorted) {
        out.tau_i.push_back(tau);
        out.w_i.push_back(white_end(c, c.edge(tau)));
    }

    // D-dagger: the region content minus the Delta contents (tau edges and
    // their black vertices).
    out.d_dagger_vertices = r.vertices;
    for (auto [tau, is_to] : terminals) out.d_dagger_vertices.erase(black_end(c, c.edge(tau)));

    // f_D via principal paths.
    std::set<EdgeId> images;
    std::vector<std::set<VertexId>> path_vertices;
    for (EdgeId tau : out.tau_o) {
        PrincipalPathResult res = principal_path(c, r, out.cls, tau);
        if (!res.ok) {
            out.problems.insert(out.problems.end(), res.problems.begin(), res.problems.end());
            out.f_d_bijective = false;
            continue;
        }
        out.principal_paths[tau] = res.path;
        out.f_d[tau] = res.corresponding;
        if (!images.insert(res.corresponding).second) out.f_d_injective = false;
        std::set<VertexId> vs(res.path.vertices.begin(), res.path.vertices.end());
        for (const auto& prev : path_vertices)
            for (VertexId v : vs)
                if (prev.count(v)) out.paths_disjoint = false;
        path_vertices.push_back(std::move(vs));
    }
    if (out.f_d.size() != out.tau_o.size() || images.size() != out.tau_i.size() ||
        !out.f_d_injective)
        out.f_d_bijective = false;

    out.ok = out.problems.empty() && out.no_wrong_io_edges && out.siblings_polarity_ok &&
             out.deltas_ok && out.paths_disjoint && out.f_d_injective && out.f_d_bijective;
    return out;
}

} // namespace chartkit
