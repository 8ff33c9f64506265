#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "chartkit/queries.hpp"
#include "chartkit/region.hpp"

namespace chartkit {

// A maximal run of same-label edges joined through crossings. Open chains
// end at white or black vertices; closed chains meet neither.
struct Chain {
    std::vector<EdgeId> edges;
    bool closed = false;
    VertexId end_a = -1, end_b = -1; // for open chains
    enum class Class { Free, Terminal, Internal, Loop, Ring } cls = Class::Internal;
    bool i_terminal = false; // for Terminal: oriented into its black end
    int crossings = 0;
};

// At a crossing the label-m run continues on the diagonal, which is the only
// other label-m dart there.
inline std::optional<Dart> diagonal_continue(const Chart& c, Dart arriving) {
    VertexId v = c.vertex_of(arriving);
    const VertexRecord& rec = c.vertex(v);
    if (rec.kind != VertexKind::Crossing) return std::nullopt;
    const auto& r = rec.rotation;
    auto it = std::find(r.begin(), r.end(), arriving);
    return r[(it - r.begin() + 2) % 4];
}

inline std::vector<Chain> edge_chains(const Chart& c) {
    std::vector<Chain> out;
    std::set<EdgeId> used;
    auto at_crossing = [&](Dart d) {
        return c.vertex(c.vertex_of(d)).kind == VertexKind::Crossing;
    };
    // Walk from an edge-end dart through crossings until a non-crossing
    // vertex or closure. Returns the run and the final edge-end dart.
    auto walk = [&](Dart first_end) {
        std::vector<EdgeId> run{edge_of(first_end)};
        Dart cur = twin(first_end);
        while (at_crossing(cur)) {
            Dart partner = *diagonal_continue(c, cur);
            if (edge_of(partner) == run.front() && partner == first_end) break; // closed
            run.push_back(edge_of(partner));
            cur = twin(partner);
        }
        return std::pair{run, cur};
    };
    for (const auto& [id, e] : c.edges) {
        if (used.count(id)) continue;
        Chain ch;
        bool o_cross = at_crossing(dart_at_origin(id));
        bool t_cross = at_crossing(dart_at_target(id));
        if (!o_cross) {
            auto [run, last] = walk(dart_at_origin(id));
            ch.edges = run;
            ch.end_a = e.origin;
            ch.end_b = c.vertex_of(last);
        } else if (!t_cross) {
            auto [run, last] = walk(dart_at_target(id));
            ch.edges = run;
            ch.end_a = e.target;
            ch.end_b = c.vertex_of(last);
        } else {
            // Interior edge of a run: walk both ways from it.
            auto [fwd, fend] = walk(dart_at_origin(id)); // leaves via target side
            if (at_crossing(fend)) {
                ch.edges = fwd; // ring: closed through crossings
                ch.closed = true;
            } else {
                auto [bwd, bend] = walk(dart_at_target(id)); // leaves via origin side
                std::vector<EdgeId> seq(bwd.rbegin(), bwd.rend());
                seq.insert(seq.end(), fwd.begin() + 1, fwd.end());
                ch.edges = seq;
                ch.end_a = c.vertex_of(bend);
                ch.end_b = c.vertex_of(fend);
            }
        }
        for (EdgeId eid : ch.edges) used.insert(eid);
        std::set<VertexId> crossings_seen;
        for (EdgeId eid : ch.edges)
            for (VertexId v : {c.edge(eid).origin, c.edge(eid).target})
                if (c.vertex(v).kind == VertexKind::Crossing) crossings_seen.insert(v);
        ch.crossings = static_cast<int>(crossings_seen.size());
        if (ch.closed) {
            ch.cls = Chain::Class::Ring;
        } else {
            VertexKind ka = c.vertex(ch.end_a).kind;
            VertexKind kb = c.vertex(ch.end_b).kind;
            if (ka == VertexKind::Black && kb == VertexKind::Black) {
                ch.cls = Chain::Class::Free;
            } else if (ka == VertexKind::Black || kb == VertexKind::Black) {
                ch.cls = Chain::Class::Terminal;
                VertexId black = ka == VertexKind::Black ? ch.end_a : ch.end_b;
                for (EdgeId eid : ch.edges) {
                    const EdgeRecord& er = c.edge(eid);
                    if (er.target == black) ch.i_terminal = true;
                    if (er.origin == black) ch.i_terminal = false;
                }
            } else if (ch.end_a == ch.end_b) {
                ch.cls = Chain::Class::Loop;
            } else {
                ch.cls = Chain::Class::Internal;
            }
        }
        out.push_back(std::move(ch));
    }
    return out;
}

struct EdgeTaxonomy {
    std::set<EdgeId> free_edges;
    std::map<EdgeId, bool> terminal_edges; // value: I-terminal
    std::set<EdgeId> internal_edges;
    std::map<HoopId, bool> hoops; // value: simple
    std::vector<Chain> rings;
    std::vector<Chain> loops;
    std::vector<Chain> chains; // every chain, for callers that need runs
};

inline EdgeTaxonomy edge_taxonomy(const Chart& c, const CellComplex& cc) {
    EdgeTaxonomy tx;
    tx.chains = edge_chains(c);
    for (const Chain& ch : tx.chains) {
        switch (ch.cls) {
        case Chain::Class::Free:
            for (EdgeId e : ch.edges) tx.free_edges.insert(e);
            break;
        case Chain::Class::Terminal:
            for (EdgeId e : ch.edges) tx.terminal_edges[e] = ch.i_terminal;
            break;
        case Chain::Class::Internal:
            for (EdgeId e : ch.edges) tx.internal_edges.insert(e);
            break;
        case Chain::Class::Loop: tx.loops.push_back(ch); break;
        case Chain::Class::Ring: tx.rings.push_back(ch); break;
        }
    }
    int total_whites = 0;
    for (const auto& [id, v] : c.vertices)
        if (v.kind == VertexKind::White) ++total_whites;
    for (const auto& [id, h] : c.hoops) {
        std::set<Cell> inside = enclosed_by(cc, {Cell::hoop(id)});
        int inner_whites = 0;
        for (const Cell& cell : inside)
            if (cell.kind == Cell::Kind::Vertex &&
                c.vertex(cell.id).kind == VertexKind::White)
                ++inner_whites;
        tx.hoops[id] = inner_whites == 0 || inner_whites == total_whites;
    }
    return tx;
}

// ---------------------------------------------------------------------------
// Cycles of one label and W_O^Mid.
// ---------------------------------------------------------------------------

struct CycleInfo {
    int label = 0;
    std::vector<VertexId> vertices; // v0 .. v_{k-1}, cyclic
    std::vector<EdgeId> edges;      // e_i joins v_{i-1} (cyclically) and v_i
    bool directed = false;
    std::set<VertexId> whites;
};

namespace detail {

inline std::vector<EdgeId> normalize_cycle(std::vector<EdgeId> es) {
    if (es.empty()) return es;
    std::vector<EdgeId> best;
    for (int refl = 0; refl < 2; ++refl) {
        for (size_t s = 0; s < es.size(); ++s) {
            std::vector<EdgeId> cand;
            for (size_t i = 0; i < es.size(); ++i) cand.push_back(es[(s + i) % es.size()]);
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(es.begin(), es.end());
    }
    return best;
}

} // namespace detail

// Every simple closed edge-walk in Gamma_m, loops included.
inline std::vector<CycleInfo> find_cycles(const Chart& c, int m) {
    Subchart g = label_subgraph(c, m);
    std::map<VertexId, std::vector<EdgeId>> incident;
    for (EdgeId e : g.edges) {
        incident[c.edge(e).origin].push_back(e);
        if (c.edge(e).target != c.edge(e).origin) incident[c.edge(e).target].push_back(e);
    }
    std::set<std::vector<EdgeId>> seen;
    std::vector<CycleInfo> out;

    auto emit = [&](const std::vector<VertexId>& vs, const std::vector<EdgeId>& es) {
        auto key = detail::normalize_cycle(es);
        if (!seen.insert(key).second) return;
        CycleInfo info;
        info.label = m;
        info.vertices = vs;
        info.edges = es;
        // Directed iff coherently oriented one way or the other.
        for (int dir = 0; dir < 2 && !info.directed; ++dir) {
            bool ok = true;
            size_t k = es.size();
            for (size_t i = 0; i < k; ++i) {
                VertexId from = vs[(i + k - 1) % k], to = vs[i];
                const EdgeRecord& er = c.edge(es[i]);
                bool forward = er.origin == from && er.target == to;
                bool backward = er.origin == to && er.target == from;
                if (dir == 0 ? !forward : !backward) { ok = false; break; }
                if (er.origin == er.target) continue;
            }
            info.directed |= ok;
        }
        for (VertexId v : vs)
            if (c.vertex(v).kind == VertexKind::White) info.whites.insert(v);
        out.push_back(std::move(info));
    };

    for (EdgeId e : g.edges) {
        const EdgeRecord& er = c.edge(e);
        if (er.origin == er.target) emit({er.origin}, {e});
    }

    // DFS for simple cycles: vertex-simple walks returning to the start.
    std::vector<VertexId> vstack;
    std::vector<EdgeId> estack;
    std::set<VertexId> on_path;

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId at) {
        for (EdgeId e : incident[at]) {
            const EdgeRecord& er = c.edge(e);
            if (er.origin == er.target) continue;
            if (!estack.empty() && e == estack.back()) continue;
            VertexId nxt = er.origin == at ? er.target : er.origin;
            if (nxt == start && estack.size() >= 1) {
                if (estack.size() == 1 && estack.front() == e) continue;
                std::vector<EdgeId> es = estack;
                es.push_back(e);
                std::vector<VertexId> vs = vstack;
                emit(vs, es);
                continue;
            }
            if (on_path.count(nxt)) continue;
            vstack.push_back(nxt);
            estack.push_back(e);
            on_path.insert(nxt);
            dfs(start, nxt);
            on_path.erase(nxt);
            estack.pop_back();
            vstack.pop_back();
        }
    };

    std::vector<VertexId> verts;
    for (auto& [v, es] : incident) verts.push_back(v);
    for (VertexId v : verts) {
        vstack = {v};
        estack.clear();
        on_path = {v};
        dfs(v, v);
    }
    return out;
}

// Cells strictly inside the disk bounded by a cycle.
inline std::set<Cell> cycle_interior(const Chart& c, const CellComplex& cc,
                                     const CycleInfo& cycle) {
    std::set<Cell> barrier;
    for (EdgeId e : cycle.edges) barrier.insert(Cell::edge(e));
    for (VertexId v : cycle.vertices) barrier.insert(Cell::vertex(v));
    return enclosed_by(cc, barrier);
}

// W_O^Mid(C,m): whites on C that carry a label-m outside edge middle at them.
inline std::set<VertexId> w_o_mid(const Chart& c, const CellComplex& cc, const DartClass& dc,
                                  const CycleInfo& cycle) {
    std::set<Cell> interior = cycle_interior(c, cc, cycle);
    std::set<EdgeId> on_cycle(cycle.edges.begin(), cycle.edges.end());
    std::set<VertexId> cyc_verts(cycle.vertices.begin(), cycle.vertices.end());
    std::set<VertexId> out;
    for (const auto& [id, e] : c.edges) {
        if (e.label != cycle.label || on_cycle.count(id)) continue;
        if (interior.count(Cell::edge(id))) continue; // inside edge
        int touches = 0;
        bool non_white_touch = false;
        for (VertexId v : {e.origin, e.target})
            if (cyc_verts.count(v)) {
                ++touches;
                if (c.vertex(v).kind != VertexKind::White) non_white_touch = true;
            }
        if (e.origin == e.target && cyc_verts.count(e.origin)) touches = 1;
        if (touches == 0 || non_white_touch) continue;
        for (VertexId v : {e.origin, e.target})
            if (cyc_verts.count(v) && edge_middle_at(c, dc, id, v)) out.insert(v);
    }
    return out;
}

// 2- and 3-color disk tests for a cycle bounding a disk.
struct ColorDiskInfo {
    bool two_color = false;
    bool three_color = false;
    bool gamma_m_connected = false; // Gamma_m within the closed disk
    std::set<Cell> interior;
};

inline ColorDiskInfo color_disk(const Chart& c, const CellComplex& cc, const CycleInfo& cycle) {
    ColorDiskInfo info;
    info.interior = cycle_interior(c, cc, cycle);
    int m = cycle.label;
    std::set<int> labels;
    bool crossing_inside = false;
    for (const Cell& cell : info.interior) {
        if (cell.kind == Cell::Kind::Edge) labels.insert(c.edge(cell.id).label);
        if (cell.kind == Cell::Kind::Hoop) labels.insert(c.hoop(cell.id).label);
        if (cell.kind == Cell::Kind::Vertex &&
            c.vertex(cell.id).kind == VertexKind::Crossing)
            crossing_inside = true;
    }
    for (VertexId v : cycle.vertices)
        if (c.vertex(v).kind == VertexKind::Crossing) crossing_inside = true;
    auto within = [&](std::set<int> allowed) {
        for (int l : labels)
            if (!allowed.count(l)) return false;
        return true;
    };
    info.two_color = within({m - 1, m}) || within({m, m + 1});
    info.three_color = !crossing_inside && within({m - 1, m, m + 1});

    // Connectivity of Gamma_m cap E: label-m edges of C plus enclosed ones.
    std::set<EdgeId> gm;
    for (EdgeId e : cycle.edges) gm.insert(e);
    for (const Cell& cell : info.interior)
        if (cell.kind == Cell::Kind::Edge && c.edge(cell.id).label == m) gm.insert(cell.id);
    if (!gm.empty()) {
        detail::UnionFind uf; // vertices as 2v, edges as 2e+1
        for (EdgeId e : gm) {
            uf.unite(2 * c.edge(e).origin, 2 * c.edge(e).target);
            uf.unite(2 * c.edge(e).origin, 2 * e + 1);
        }
        int root = uf.find(2 * *gm.begin() + 1);
        info.gamma_m_connected = true;
        for (EdgeId e : gm)
            if (uf.find(2 * e + 1) != root) info.gamma_m_connected = false;
    }
    return info;
}

// ---------------------------------------------------------------------------
// Consecutive triplets.
// ---------------------------------------------------------------------------

struct TripletWitness {
    EdgeId e1, e2, e3;
    VertexId w1, w2; // f(p), f(q)
    bool ccw_side;   // disk swept counterclockwise from e1
    bool admissible; // label(e3) != label(e1)
};

inline std::vector<TripletWitness> consecutive_triplets(const Chart& c) {
    std::vector<TripletWitness> out;
    for (const auto& [id, e] : c.edges) {
        if (!is_terminal_edge(c, e)) continue;
        VertexId w1 = white_end(c, e);
        Dart d1 = e.origin == w1 ? dart_at_origin(id) : dart_at_target(id);
        for (bool ccw : {true, false}) {
            Dart d2 = ccw ? c.rot_next(d1) : c.rot_prev(d1);
            EdgeId e2 = edge_of(d2);
            if (e2 == id) continue;
            VertexId w2 = c.vertex_of(twin(d2));
            if (c.vertex(w2).kind != VertexKind::White) continue;
            Dart d3 = ccw ? c.rot_next(twin(d2)) : c.rot_prev(twin(d2));
            EdgeId e3 = edge_of(d3);
            if (e3 == id || e3 == e2) continue;
            TripletWitness w;
            w.e1 = id;
            w.e2 = e2;
            w.e3 = e3;
            w.w1 = w1;
            w.w2 = w2;
            w.ccw_side = ccw;
            w.admissible = c.edge(e3).label != e.label;
            out.push_back(w);
        }
    }
    return out;
}

} // namespace chartkit
