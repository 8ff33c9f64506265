#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chartkit/analysis.hpp"
#include "chartkit/region.hpp"

namespace chartkit {

// Classification of one boundary crossing against the I-/O-edge definition:
// both endpoints white, one inside, one outside, a single crossing point.
enum class CrossingClass { IEdge, OEdge, Other };

inline CrossingClass classify_crossing(const Chart& c, const DiskRegion& r,
                                       const BoundaryCrossing& x) {
    auto it = r.cuts.find(x.edge);
    if (it == r.cuts.end() || crossings_of(it->second) != 1) return CrossingClass::Other;
    const EdgeRecord& e = c.edge(x.edge);
    if (c.vertex(e.origin).kind != VertexKind::White ||
        c.vertex(e.target).kind != VertexKind::White)
        return CrossingClass::Other;
    return x.entering ? CrossingClass::IEdge : CrossingClass::OEdge;
}

struct TangleTally {
    long e_i = 0, e_o = 0, t_i = 0, t_o = 0;
    std::set<EdgeId> i_edges, o_edges;
    std::set<EdgeId> i_terminals, o_terminals;       // wholly inside the region
    std::map<int, long> boundary_label_count;        // label -> crossings
    long whites_inside = 0, crossings_inside = 0;
};

inline bool is_tangle(const Chart& c, const DiskRegion& r) { return !r.empty(); }

inline TangleTally boundary_tally(const Chart& c, const DiskRegion& r) {
    TangleTally t;
    for (const BoundaryCrossing& x : r.walk) {
        t.boundary_label_count[c.edge(x.edge).label] += 1;
        switch (classify_crossing(c, r, x)) {
        case CrossingClass::IEdge:
            ++t.e_i;
            t.i_edges.insert(x.edge);
            break;
        case CrossingClass::OEdge:
            ++t.e_o;
            t.o_edges.insert(x.edge);
            break;
        case CrossingClass::Other: break;
        }
    }
    for (EdgeId e : r.edges) {
        const EdgeRecord& rec = c.edge(e);
        if (!is_terminal_edge(c, rec)) continue;
        if (is_i_terminal(c, rec)) {
            ++t.t_i;
            t.i_terminals.insert(e);
        } else {
            ++t.t_o;
            t.o_terminals.insert(e);
        }
    }
    for (VertexId v : r.vertices) {
        if (c.vertex(v).kind == VertexKind::White) ++t.whites_inside;
        if (c.vertex(v).kind == VertexKind::Crossing) ++t.crossings_inside;
    }
    return t;
}

// The IS/OS-arc census from the proof of the balance identity: every dart at
// a white vertex inside D is consumed by exactly one of the categories.
struct BalanceAudit {
    long is_arcs = 0, os_arcs = 0;
    long s_edges = 0; // edges with both white endpoints in D
    long loops = 0;   // loop records at whites in D
    bool hypotheses_ok = true;
    std::vector<std::string> notes;
};

struct BalanceVerdict {
    bool holds = false;
    TangleTally tally;
    BalanceAudit audit;
};

inline BalanceVerdict balance_check(const Chart& c, const DiskRegion& r) {
    BalanceVerdict v;
    v.tally = boundary_tally(c, r);
    BalanceAudit& a = v.audit;
    if (v.tally.crossings_inside > 0) {
        a.hypotheses_ok = false;
        a.notes.push_back("region contains a crossing");
    }
    for (const auto& [e, kind] : r.cuts) {
        const EdgeRecord& rec = c.edge(e);
        if (is_terminal_edge(c, rec)) {
            a.hypotheses_ok = false;
            a.notes.push_back("boundary meets terminal edge e" + std::to_string(e));
        }
        if (crossings_of(kind) == 1 && (c.vertex(rec.origin).kind != VertexKind::White ||
                                        c.vertex(rec.target).kind != VertexKind::White)) {
            a.hypotheses_ok = false;
            a.notes.push_back("cut edge e" + std::to_string(e) +
                              " lacks white vertices on both sides");
        }
    }
    for (VertexId w : r.vertices) {
        if (c.vertex(w).kind != VertexKind::White) continue;
        for (Dart d : c.vertex(w).rotation)
            (c.inward(d) ? a.is_arcs : a.os_arcs) += 1;
    }
    for (const auto& [id, e] : c.edges) {
        bool oin = r.vertices.count(e.origin) && c.vertex(e.origin).kind == VertexKind::White;
        bool tin = r.vertices.count(e.target) && c.vertex(e.target).kind == VertexKind::White;
        if (e.origin == e.target && oin) ++a.loops;
        else if (oin && tin) ++a.s_edges;
    }
    if (!a.hypotheses_ok) return v;
    // Census: IS = E_I + T_O + S + L and OS = E_O + T_I + S + L, so equality
    // of IS and OS gives the balance identity.
    long is_expected = v.tally.e_i + v.tally.t_o + a.s_edges + a.loops;
    long os_expected = v.tally.e_o + v.tally.t_i + a.s_edges + a.loops;
    if (is_expected != a.is_arcs || os_expected != a.os_arcs) {
        a.hypotheses_ok = false;
        a.notes.push_back("arc census does not match edge categories");
        return v;
    }
    v.holds = v.tally.e_i + v.tally.t_o == v.tally.e_o + v.tally.t_i;
    return v;
}

// ---------------------------------------------------------------------------
// Tangle classification.
// ---------------------------------------------------------------------------

struct TangleClass {
    enum class Kind { Plain, NSTangle, NetTangle, NTangle } kind = Kind::Plain;
    int alpha = 0, beta = 0; // label pair for net-tangles
    enum class Direction { None, Upward, Downward } direction = Direction::None;
    int s_i = 0, s_o = 0;    // IO-label pair for N-tangles
    int ns_label = 0;        // for NS-tangles
    // Index ranges into the region walk realizing the two boundary arcs.
    int arc_alpha_begin = 0, arc_alpha_len = 0;
    std::vector<std::string> notes;
};

// Net-tangle conditions on a region: no crossing/hoop/free edge but a white
// vertex inside; interior labels within [alpha, beta]; the boundary word is
// a block of alpha crossings and a block of beta crossings, each uniformly
// I or uniformly O.
inline TangleClass classify_region(const Chart& c, const DiskRegion& r) {
    TangleClass out;
    TangleTally tally = boundary_tally(c, r);

    bool has_white = tally.whites_inside > 0;
    bool has_crossing = tally.crossings_inside > 0;
    bool has_hoop = !r.hoops.empty();
    bool has_free = false;
    for (EdgeId e : r.edges)
        if (is_free_edge(c, c.edge(e))) has_free = true;

    // NS-tangle: some label m such that every other label meets the boundary
    // at most once, a white vertex inside, and at most one crossing of each
    // label inside (crossing vertices, per condition (iii)).
    auto ns_check = [&]() -> std::optional<int> {
        if (!has_white) return std::nullopt;
        std::vector<int> heavy;
        for (const auto& [label, n] : tally.boundary_label_count)
            if (n >= 2) heavy.push_back(label);
        if (heavy.size() > 1) return std::nullopt;
        std::map<int, int> crossings_per_label;
        for (VertexId v : r.vertices) {
            if (c.vertex(v).kind != VertexKind::Crossing) continue;
            for (Dart d : c.vertex(v).rotation) crossings_per_label[c.label_of(d)]++;
        }
        for (const auto& [label, n] : crossings_per_label)
            if (n / 2 > 1) return std::nullopt; // two darts per label per crossing
        if (heavy.empty()) {
            // Any label qualifies; prefer one present on the boundary.
            if (!tally.boundary_label_count.empty())
                return tally.boundary_label_count.begin()->first;
            return 1;
        }
        return heavy.front();
    };

    // Net-tangle detection.
    auto net_check = [&]() -> bool {
        if (has_crossing || has_hoop || has_free || !has_white) return false;
        if (r.walk.empty()) return false;
        std::set<int> blabels;
        for (const BoundaryCrossing& x : r.walk) blabels.insert(c.edge(x.edge).label);
        if (blabels.size() != 2) return false;
        int alpha = *blabels.begin(), beta = *blabels.rbegin();
        // Every crossing must be an I- or O-edge.
        for (const BoundaryCrossing& x : r.walk)
            if (classify_crossing(c, r, x) == CrossingClass::Other) return false;
        // The cyclic label word must be alpha^a beta^b.
        int n = static_cast<int>(r.walk.size());
        auto lab = [&](int i) { return c.edge(r.walk[(i % n + n) % n].edge).label; };
        int switches = 0;
        for (int i = 0; i < n; ++i)
            if (lab(i) != lab(i + 1)) ++switches;
        if (switches != 2) return false;
        int start = 0;
        while (!(lab(start) == alpha && lab(start - 1) == beta)) ++start;
        int alen = 0;
        while (lab(start + alen) == alpha) ++alen;
        // Uniform polarity per arc.
        auto uniform = [&](int from, int len) -> std::optional<bool> {
            bool entering = r.walk[(from % n + n) % n].entering;
            for (int i = 0; i < len; ++i)
                if (r.walk[((from + i) % n + n) % n].entering != entering)
                    return std::nullopt;
            return entering;
        };
        auto a_pol = uniform(start, alen);
        auto b_pol = uniform(start + alen, n - alen);
        if (!a_pol || !b_pol) return false;
        // Interior labels within [alpha, beta].
        for (EdgeId e : r.edges)
            if (c.edge(e).label < alpha || c.edge(e).label > beta) return false;
        out.alpha = alpha;
        out.beta = beta;
        out.arc_alpha_begin = start % n;
        out.arc_alpha_len = alen;
        if (*a_pol && !*b_pol) out.direction = TangleClass::Direction::Upward;
        else if (!*a_pol && *b_pol) out.direction = TangleClass::Direction::Downward;
        else out.direction = TangleClass::Direction::None;
        return true;
    };

    if (net_check()) {
        out.kind = TangleClass::Kind::NetTangle;
        if (out.beta == out.alpha + 1 && out.direction != TangleClass::Direction::None) {
            out.kind = TangleClass::Kind::NTangle;
            if (out.direction == TangleClass::Direction::Upward) {
                out.s_i = out.alpha;
                out.s_o = out.beta;
            } else {
                out.s_i = out.beta;
                out.s_o = out.alpha;
            }
        }
        return out;
    }
    if (auto m = ns_check()) {
        out.kind = TangleClass::Kind::NSTangle;
        out.ns_label = *m;
        return out;
    }
    return out;
}

// The boundary IO-arc pair of a verified N-tangle: walk indices carrying
// I-edges and O-edges respectively.
struct IOArcs {
    std::vector<int> l_i, l_o; // positions into region walk
};

inline IOArcs io_arcs(const Chart& c, const DiskRegion& r) {
    IOArcs arcs;
    for (int i = 0; i < static_cast<int>(r.walk.size()); ++i) {
        auto cls = classify_crossing(c, r, r.walk[i]);
        if (cls == CrossingClass::IEdge) arcs.l_i.push_back(i);
        if (cls == CrossingClass::OEdge) arcs.l_o.push_back(i);
    }
    return arcs;
}

// Boundary Condition Lemma check: labels inside D fall within the boundary
// label range [a, b].
struct BoundaryConditionVerdict {
    bool hypotheses_ok = true;
    bool holds = false;
    int a = 0, b = 0;
    std::vector<int> offending_labels;
};

inline BoundaryConditionVerdict boundary_condition_check(const Chart& c, const DiskRegion& r) {
    BoundaryConditionVerdict v;
    TangleTally tally = boundary_tally(c, r);
    if (tally.crossings_inside > 0) v.hypotheses_ok = false;
    for (EdgeId e : r.edges)
        if (is_free_edge(c, c.edge(e))) v.hypotheses_ok = false;
    if (!r.hoops.empty()) v.hypotheses_ok = false;
    if (tally.boundary_label_count.empty()) {
        v.hypotheses_ok = false;
        return v;
    }
    v.a = tally.boundary_label_count.begin()->first;
    v.b = tally.boundary_label_count.rbegin()->first;
    v.holds = true;
    std::set<int> inside;
    for (EdgeId e : r.edges) inside.insert(c.edge(e).label);
    for (const auto& [e, k] : r.cuts) inside.insert(c.edge(e).label);
    for (int l : inside)
        if (l < v.a || l > v.b) {
            v.holds = false;
            v.offending_labels.push_back(l);
        }
    return v;
}

// ---------------------------------------------------------------------------
// Theorem 1.1 verification on a region.
// ---------------------------------------------------------------------------

struct TheoremOneReport {
    bool precondition_ok = false;
    bool a_is_n_tangle = false;
    bool b_boundary_counts_equal = false;
    bool c_terminal_exists = false;
    bool d_terminal_counts_equal = false;
    bool e_polarity = false;
    TangleClass cls;
    TangleTally tally;

    bool all() const {
        return precondition_ok && a_is_n_tangle && b_boundary_counts_equal &&
               c_terminal_exists && d_terminal_counts_equal && e_polarity;
    }
};

inline TheoremOneReport verify_theorem1(const Chart& c, const DiskRegion& r) {
    TheoremOneReport rep;
    rep.cls = classify_region(c, r);
    rep.tally = boundary_tally(c, r);
    bool net = rep.cls.kind == TangleClass::Kind::NetTangle ||
               rep.cls.kind == TangleClass::Kind::NTangle;
    rep.precondition_ok = net && rep.cls.beta == rep.cls.alpha + 1;
    if (!rep.precondition_ok) return rep;
    int alpha = rep.cls.alpha, beta = rep.cls.beta;

    rep.a_is_n_tangle = rep.cls.kind == TangleClass::Kind::NTangle;
    rep.b_boundary_counts_equal = rep.tally.boundary_label_count[alpha] ==
                                  rep.tally.boundary_label_count[beta];

    std::map<int, long> ti_by_label, to_by_label;
    for (EdgeId e : rep.tally.i_terminals) ti_by_label[c.edge(e).label]++;
    for (EdgeId e : rep.tally.o_terminals) to_by_label[c.edge(e).label]++;
    long t_alpha = ti_by_label[alpha] + to_by_label[alpha];
    long t_beta = ti_by_label[beta] + to_by_label[beta];
    rep.c_terminal_exists = rep.tally.t_i + rep.tally.t_o > 0;
    rep.d_terminal_counts_equal = t_alpha == t_beta;

    if (rep.cls.direction == TangleClass::Direction::Upward)
        rep.e_polarity = to_by_label[alpha] == 0 && ti_by_label[beta] == 0;
    else if (rep.cls.direction == TangleClass::Direction::Downward)
        rep.e_polarity = ti_by_label[alpha] == 0 && to_by_label[beta] == 0;
    return rep;
}

} // namespace chartkit
