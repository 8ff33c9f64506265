#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "chartkit/analysis.hpp"
#include "chartkit/spindles.hpp"

namespace chartkit {

// Necessary conditions for minimality, reported as violations. An empty
// report means "no known obstruction", never a minimality certificate.
struct Obstruction {
    enum class Kind {
        BlackEdgeNotTerminalOrFree, // (a)
        TerminalNotMiddle,          // (b)
        RingWithWhiteFreeSide,      // (c)
        NonAdmissibleTriplet,       // (d)
        TwoColorDiskWithTerminal,   // (e)
        FewMiddleOutsideEdges,      // (f)
        DichromaticMMPath,          // (g)
        SpindleFound,               // (h)
        HalfSpindleFound,           // (h)
    };
    Kind kind;
    std::string detail;
};

struct ObstructionReport {
    std::vector<Obstruction> items;
    bool empty() const { return items.empty(); }
};

inline std::string obstruction_kind_name(Obstruction::Kind k) {
    switch (k) {
    case Obstruction::Kind::BlackEdgeNotTerminalOrFree: return "black-edge-not-terminal-or-free";
    case Obstruction::Kind::TerminalNotMiddle: return "terminal-not-middle";
    case Obstruction::Kind::RingWithWhiteFreeSide: return "ring-with-white-free-side";
    case Obstruction::Kind::NonAdmissibleTriplet: return "non-admissible-triplet";
    case Obstruction::Kind::TwoColorDiskWithTerminal: return "two-color-disk-with-terminal";
    case Obstruction::Kind::FewMiddleOutsideEdges: return "few-middle-outside-edges";
    case Obstruction::Kind::DichromaticMMPath: return "dichromatic-mm-path";
    case Obstruction::Kind::SpindleFound: return "spindle";
    case Obstruction::Kind::HalfSpindleFound: return "half-spindle";
    }
    return "?";
}

inline ObstructionReport minimality_obstructions(const Chart& c) {
    ObstructionReport rep;
    auto add = [&](Obstruction::Kind k, const std::string& d) {
        rep.items.push_back({k, d});
    };
    CellComplex cc = cell_complex(c);
    DartClass dc = dart_classification(c);
    EdgeTaxonomy tx = edge_taxonomy(c, cc);

    // (a) every chain with a black end must be a plain terminal or free edge.
    for (const Chain& ch : tx.chains) {
        bool has_black = !ch.closed && (c.vertex(ch.end_a).kind == VertexKind::Black ||
                                        c.vertex(ch.end_b).kind == VertexKind::Black);
        if (has_black && ch.crossings > 0)
            add(Obstruction::Kind::BlackEdgeNotTerminalOrFree,
                "edge run through " + std::to_string(ch.crossings) +
                    " crossings ends at a black vertex (e" + std::to_string(ch.edges.front()) +
                    ")");
    }

    // (b) terminal edges middle at their white vertex.
    for (const auto& [e, i_term] : tx.terminal_edges) {
        const EdgeRecord& rec = c.edge(e);
        if (!is_terminal_edge(c, rec)) continue; // chain-level terminal through crossings
        VertexId w = white_end(c, rec);
        if (!edge_middle_at(c, dc, e, w))
            add(Obstruction::Kind::TerminalNotMiddle,
                "terminal e" + std::to_string(e) + " is not middle at v" + std::to_string(w));
    }

    // (c) each ring's complementary domains must contain a white vertex.
    long whites_total = 0;
    for (const auto& [id, v] : c.vertices)
        if (v.kind == VertexKind::White) ++whites_total;
    for (const Chain& ring : tx.rings) {
        std::set<Cell> barrier;
        for (EdgeId e : ring.edges) {
            barrier.insert(Cell::edge(e));
            barrier.insert(Cell::vertex(c.edge(e).origin));
            barrier.insert(Cell::vertex(c.edge(e).target));
        }
        std::set<Cell> inside = enclosed_by(cc, barrier);
        long inner = 0;
        for (const Cell& cell : inside)
            if (cell.kind == Cell::Kind::Vertex &&
                c.vertex(cell.id).kind == VertexKind::White)
                ++inner;
        if (inner == 0 || inner == whites_total)
            add(Obstruction::Kind::RingWithWhiteFreeSide,
                "ring through e" + std::to_string(ring.edges.front()) +
                    " has a white-vertex-free side");
    }

    // (d) non-admissible consecutive triplets.
    for (const TripletWitness& t : consecutive_triplets(c))
        if (!t.admissible)
            add(Obstruction::Kind::NonAdmissibleTriplet,
                "triplet (e" + std::to_string(t.e1) + ", e" + std::to_string(t.e2) + ", e" +
                    std::to_string(t.e3) + ") has label(e3) = label(e1)");

    // (e) 2-color disks may not contain terminal edges; (f) connectivity of
    // Gamma_m in 2-color disks and |W_O^Mid| >= 2 in 2-/3-color disks.
    for (int m = 1; m <= c.degree - 1; ++m) {
        for (const CycleInfo& cyc : find_cycles(c, m)) {
            ColorDiskInfo info = color_disk(c, cc, cyc);
            if (info.two_color) {
                bool has_free_or_hoop = false;
                for (const Cell& cell : info.interior) {
                    if (cell.kind == Cell::Kind::Hoop) has_free_or_hoop = true;
                    if (cell.kind == Cell::Kind::Edge && is_free_edge(c, c.edge(cell.id)))
                        has_free_or_hoop = true;
                }
                for (const Cell& cell : info.interior)
                    if (cell.kind == Cell::Kind::Edge &&
                        is_terminal_edge(c, c.edge(cell.id)))
                        add(Obstruction::Kind::TwoColorDiskWithTerminal,
                            "2-color disk of the label-" + std::to_string(m) +
                                " cycle at e" + std::to_string(cyc.edges.front()) +
                                " contains terminal e" + std::to_string(cell.id));
                if (!has_free_or_hoop && !info.gamma_m_connected)
                    add(Obstruction::Kind::FewMiddleOutsideEdges,
                        "2-color disk with disconnected Gamma_" + std::to_string(m));
            }
            if ((info.two_color || info.three_color) && info.gamma_m_connected) {
                bool has_free_or_hoop = false;
                for (const Cell& cell : info.interior) {
                    if (cell.kind == Cell::Kind::Hoop) has_free_or_hoop = true;
                    if (cell.kind == Cell::Kind::Edge && is_free_edge(c, c.edge(cell.id)))
                        has_free_or_hoop = true;
                }
                if (!has_free_or_hoop && w_o_mid(c, cc, dc, cyc).size() < 2) {
                    std::ostringstream os;
                    os << "cycle of label " << m << " at e" << cyc.edges.front()
                       << " bounds a colored disk with |W_O^Mid| < 2";
                    add(Obstruction::Kind::FewMiddleOutsideEdges, os.str());
                }
            }
        }
    }

    // (g) dichromatic M&M directed paths.
    for (int m = 1; m <= c.degree - 1; ++m)
        for (const DirectedPath& p : find_mm_dichromatic(c, m))
            add(Obstruction::Kind::DichromaticMMPath,
                "dichromatic M&M path of label " + std::to_string(m) + " starting at e" +
                    std::to_string(p.edges.front()));

    // (h) spindles and half spindles.
    for (int m = 1; m <= c.degree - 1; ++m) {
        for (int k : {m - 1, m + 1}) {
            if (k < 1 || k > c.degree - 1) continue;
            for (const SpindleWitness& w : detect_spindles(c, m, k))
                add(Obstruction::Kind::SpindleFound,
                    "spindle with label pair (" + std::to_string(m) + "," + std::to_string(k) +
                        ") bounded at e" + std::to_string(w.p_star.edges.front()));
            for (const SpindleWitness& w : detect_half_spindles(c, m, k))
                add(Obstruction::Kind::HalfSpindleFound,
                    "half spindle with label pair (" + std::to_string(m) + "," +
                        std::to_string(k) + ") at e" + std::to_string(w.p_star.edges.front()));
        }
    }
    return rep;
}

} // namespace chartkit
