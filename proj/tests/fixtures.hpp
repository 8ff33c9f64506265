#pragma once

// Hand-built charts used across the test suites. Dart layouts are chosen so
// every white vertex satisfies the alternation and three-in/three-out
// conditions and every component embeds with genus zero; validate() guards
// this in test_chart.cpp.

#include <chartkit/chart.hpp>
#include <chartkit/region.hpp>
#include <chartkit/tangles.hpp>
#include <chartkit/validate.hpp>

namespace fixtures {

using namespace chartkit;

struct W2 {
    Chart chart;
    VertexId v0, v1;
    EdgeId e1;                     // the connecting label-1 edge, middle at both
    std::vector<EdgeId> terminals; // t1..t10 in construction order
};

// Two white vertices joined by one label-1 edge, ten terminal edges.
inline W2 w2() {
    ChartBuilder b(3);
    W2 f;
    f.v0 = b.vertex(VertexKind::White);
    f.v1 = b.vertex(VertexKind::White);
    std::vector<VertexId> blk;
    for (int i = 0; i < 10; ++i) blk.push_back(b.vertex(VertexKind::Black));
    EdgeId t1 = b.edge(1, blk[0], f.v0);
    EdgeId t2 = b.edge(2, blk[1], f.v0);
    EdgeId t3 = b.edge(1, blk[2], f.v0);
    EdgeId t4 = b.edge(2, f.v0, blk[3]);
    f.e1 = b.edge(1, f.v0, f.v1);
    EdgeId t5 = b.edge(2, f.v0, blk[4]);
    EdgeId t6 = b.edge(2, blk[5], f.v1);
    EdgeId t7 = b.edge(2, blk[6], f.v1);
    EdgeId t8 = b.edge(1, f.v1, blk[7]);
    EdgeId t9 = b.edge(2, f.v1, blk[8]);
    EdgeId t10 = b.edge(1, f.v1, blk[9]);
    f.terminals = {t1, t2, t3, t4, t5, t6, t7, t8, t9, t10};
    b.rotation(f.v0, {dart_at_target(t1), dart_at_target(t2), dart_at_target(t3),
                      dart_at_origin(t4), dart_at_origin(f.e1), dart_at_origin(t5)});
    b.rotation(f.v1, {dart_at_target(t6), dart_at_target(f.e1), dart_at_target(t7),
                      dart_at_origin(t8), dart_at_origin(t9), dart_at_origin(t10)});
    b.outer(dart_at_origin(f.e1));
    f.chart = b.build();
    return f;
}

struct T2 {
    Chart chart;
    VertexId w, wd; // wd is the orientation-dual partner
    EdgeId ia, ib;  // label-alpha edges wd -> w
    EdgeId oa, ob;  // label-(alpha+1) edges w -> wd
    EdgeId ta, tb;  // O-terminal (alpha+1) and I-terminal (alpha) at w
    EdgeId tc, td;  // O-terminal (alpha) and I-terminal (alpha+1) at wd
    int alpha = 1;
};

// The canonical minimal N-tangle closed with its orientation dual: one white
// vertex w with I-edges of label alpha, O-edges of label alpha+1, one
// terminal edge of each polarity, mirrored at wd.
inline T2 t2(int alpha = 1, int degree = 3) {
    ChartBuilder b(degree);
    T2 f;
    f.alpha = alpha;
    f.w = b.vertex(VertexKind::White);
    f.wd = b.vertex(VertexKind::White);
    VertexId ba = b.vertex(VertexKind::Black);
    VertexId bb = b.vertex(VertexKind::Black);
    VertexId bc = b.vertex(VertexKind::Black);
    VertexId bd = b.vertex(VertexKind::Black);
    f.ia = b.edge(alpha, f.wd, f.w);
    f.ib = b.edge(alpha, f.wd, f.w);
    f.oa = b.edge(alpha + 1, f.w, f.wd);
    f.ob = b.edge(alpha + 1, f.w, f.wd);
    f.ta = b.edge(alpha + 1, ba, f.w);
    f.tb = b.edge(alpha, f.w, bb);
    f.tc = b.edge(alpha, bc, f.wd);
    f.td = b.edge(alpha + 1, f.wd, bd);
    b.rotation(f.w, {dart_at_target(f.ia), dart_at_target(f.ta), dart_at_target(f.ib),
                     dart_at_origin(f.oa), dart_at_origin(f.tb), dart_at_origin(f.ob)});
    b.rotation(f.wd, {dart_at_target(f.ob), dart_at_target(f.tc), dart_at_target(f.oa),
                      dart_at_origin(f.ib), dart_at_origin(f.td), dart_at_origin(f.ia)});
    b.outer(dart_at_target(f.ob));
    f.chart = b.build();
    return f;
}

// A single free edge of the given label.
inline Chart free_edge_chart(int label = 2, int degree = 4) {
    ChartBuilder b(degree);
    VertexId u = b.vertex(VertexKind::Black);
    VertexId v = b.vertex(VertexKind::Black);
    b.edge(label, u, v);
    return b.build();
}

// A single hoop.
inline Chart hoop_chart(int label = 1, int degree = 3) {
    ChartBuilder b(degree);
    b.hoop(label);
    return b.build();
}

inline Chart empty_chart(int degree = 4) { return ChartBuilder(degree).build(); }

// An oval nest: a free edge inside two concentric simple hoops.
inline Chart oval_nest_chart(int degree = 3) {
    ChartBuilder b(degree);
    HoopId outer = b.hoop(1);
    HoopId inner = b.hoop(1, true, Placement::inside(outer));
    VertexId u = b.vertex(VertexKind::Black);
    VertexId v = b.vertex(VertexKind::Black);
    EdgeId e = b.edge(2, u, v);
    b.place(dart_at_origin(e), Placement::inside(inner));
    return b.build();
}

// ---------------------------------------------------------------------------
// N-tangle halves and the doubling closure.
//
// A half is a chart whose future I-/O-edges end at designated black "port"
// vertices. mirror_close glues the half to its orientation-reversed mirror
// image along those edges, yielding a closed valid chart in which the
// original half spans an N-tangle region.
// ---------------------------------------------------------------------------

struct Half {
    Chart chart;
    std::set<VertexId> ports;
};

struct ClosedTangle {
    Chart chart;
    std::set<VertexId> inner_vertices; // the half without its ports
    std::set<EdgeId> inner_edges;      // edges wholly inside the tangle region
};

inline ClosedTangle mirror_close(const Half& half) {
    const Chart& h = half.chart;
    if (!h.hoops.empty()) throw ChartError("mirror_close: half must be hoop-free");
    int voff = h.vertices.empty() ? 0 : h.vertices.rbegin()->first + 1;
    int eoff = h.edges.empty() ? 0 : h.edges.rbegin()->first + 1;

    Chart c;
    c.degree = h.degree;
    auto mv = [&](VertexId v) { return v + voff; };
    auto me = [&](EdgeId e) { return e + eoff; };

    for (const auto& [id, v] : h.vertices) {
        c.vertices[id] = v;
        VertexRecord m = v;
        m.id = mv(id);
        std::reverse(m.rotation.begin(), m.rotation.end());
        // Mirror dart: same end of the mirrored edge, but the mirrored edge
        // is itself reversed, so origin ends map to target ends.
        for (Dart& d : m.rotation)
            d = at_origin(d) ? dart_at_target(me(edge_of(d))) : dart_at_origin(me(edge_of(d)));
        c.vertices[m.id] = m;
    }
    for (const auto& [id, e] : h.edges) {
        c.edges[id] = e;
        EdgeRecord m = e;
        m.id = me(id);
        m.origin = mv(e.target); // orientation reversed in the mirror
        m.target = mv(e.origin);
        c.edges[m.id] = m;
    }
    // Glue each port's edge to its mirror: the half-side record absorbs the
    // mirrored endpoint; the mirrored record and both port vertices vanish.
    for (VertexId p : half.ports) {
        const VertexRecord& port = h.vertex(p);
        if (port.rotation.size() != 1) throw ChartError("port must have degree 1");
        Dart d = port.rotation.front();
        EdgeId e = edge_of(d);
        EdgeId em = me(e);
        VertexId pm = mv(p);
        EdgeRecord& rec = c.edges.at(e);
        const EdgeRecord& mrec = c.edges.at(em);
        Dart replace_with;
        if (rec.target == p) {
            rec.target = mrec.origin == pm ? mrec.target : mrec.origin;
            replace_with = dart_at_target(e);
        } else {
            rec.origin = mrec.target == pm ? mrec.origin : mrec.target;
            replace_with = dart_at_origin(e);
        }
        VertexId other = at_origin(replace_with) ? rec.origin : rec.target;
        auto& rot = c.vertices.at(other).rotation;
        for (Dart& x : rot)
            if (edge_of(x) == em) x = replace_with;
        c.edges.erase(em);
        c.vertices.erase(p);
        c.vertices.erase(pm);
    }
    // Outer face: a glued edge borders it after doubling. Components beyond
    // the first float beside it in the root zone, anchored at one of their
    // own glued edges.
    {
        detail::UnionFind uf;
        for (const auto& [id, e] : c.edges) uf.unite(e.origin, e.target);
        std::set<int> placed;
        for (const auto& [id, e] : c.edges) {
            bool o_half = h.vertices.count(e.origin) && !half.ports.count(e.origin);
            bool t_half = h.vertices.count(e.target) && !half.ports.count(e.target);
            if (o_half == t_half) continue; // not a glued edge
            int comp = uf.find(e.origin);
            if (!placed.insert(comp).second) continue;
            if (!c.outer_dart) c.outer_dart = dart_at_origin(id);
            else c.placements[dart_at_origin(id)] = Placement::root();
        }
    }
    check_structure(c);

    ClosedTangle out;
    out.chart = c;
    for (const auto& [id, v] : h.vertices)
        if (!half.ports.count(id)) out.inner_vertices.insert(id);
    for (const auto& [id, e] : h.edges)
        if (!half.ports.count(e.origin) && !half.ports.count(e.target))
            out.inner_edges.insert(id);
    return out;
}

// ---------------------------------------------------------------------------
// Comb N-tangle halves: a row of whites w_0 .. w_{n-1}, each of type
// (alpha, alpha+1). The middle inward edge of each white is either an
// O-terminal or the label-(alpha+1) link from the left neighbour; the middle
// outward edge is either an I-terminal or the label-alpha link to the right
// neighbour. Remaining slots are boundary ports. Principal paths are the
// maximal runs of alpha-links, so combs realize any T_O = T_I = s >= 1.
// ---------------------------------------------------------------------------

struct CombSpec {
    // Per white: {middle-in is an O-terminal, middle-out is an I-terminal}.
    std::vector<std::pair<bool, bool>> whites;
};

namespace detail_fixtures {

// Appends one comb row; returns a port stub dart bordering the row's outer
// face.
inline Dart comb_row(ChartBuilder& b, Half& half, const CombSpec& spec, int alpha) {
    int n = static_cast<int>(spec.whites.size());
    if (n == 0) throw ChartError("empty comb");
    if (!spec.whites.front().first || !spec.whites.back().second)
        throw ChartError("comb must start with an O-terminal and end with an I-terminal");
    for (int i = 0; i + 1 < n; ++i)
        if (spec.whites[i].second && spec.whites[i + 1].first)
            throw ChartError("comb disconnects after white " + std::to_string(i));
    auto port = [&]() {
        VertexId p = b.vertex(VertexKind::Black);
        half.ports.insert(p);
        return p;
    };
    std::vector<VertexId> w(n);
    for (int i = 0; i < n; ++i) w[i] = b.vertex(VertexKind::White);
    std::vector<EdgeId> xlink(n, -1), ylink(n, -1); // from w[i] to w[i+1]
    for (int i = 0; i + 1 < n; ++i) {
        if (!spec.whites[i].second) xlink[i] = b.edge(alpha, w[i], w[i + 1]);
        if (!spec.whites[i + 1].first) ylink[i] = b.edge(alpha + 1, w[i], w[i + 1]);
    }
    Dart anchor = -1;
    for (int i = 0; i < n; ++i) {
        EdgeId mid_in = spec.whites[i].first
                            ? b.edge(alpha + 1, b.vertex(VertexKind::Black), w[i])
                            : ylink[i - 1];
        EdgeId mid_out = spec.whites[i].second
                             ? b.edge(alpha, w[i], b.vertex(VertexKind::Black))
                             : xlink[i];
        Dart in0;
        if (i > 0 && xlink[i - 1] >= 0) {
            in0 = dart_at_target(xlink[i - 1]);
        } else {
            EdgeId pe = b.edge(alpha, port(), w[i]);
            in0 = dart_at_target(pe);
            if (anchor < 0) anchor = dart_at_origin(pe);
        }
        EdgeId pe2 = b.edge(alpha, port(), w[i]);
        Dart in2 = dart_at_target(pe2);
        if (anchor < 0) anchor = dart_at_origin(pe2);
        Dart out0 = ylink[i] >= 0 ? dart_at_origin(ylink[i])
                                  : dart_at_origin(b.edge(alpha + 1, w[i], port()));
        Dart out2 = dart_at_origin(b.edge(alpha + 1, w[i], port()));
        b.rotation(w[i], {in0, dart_at_target(mid_in), in2, out0, dart_at_origin(mid_out),
                          out2});
    }
    return anchor;
}

} // namespace detail_fixtures

inline Half nt_comb_half(const CombSpec& spec, int alpha = 1, int degree = 0) {
    if (degree == 0) degree = alpha + 2;
    ChartBuilder b(degree);
    Half half;
    Dart anchor = detail_fixtures::comb_row(b, half, spec, alpha);
    b.outer(anchor);
    half.chart = b.build();
    return half;
}

// Several comb rows side by side in one disk: the tangle region unites them,
// so T_O = T_I equals the number of rows carrying one run each.
inline Half nt_multi_half(const std::vector<CombSpec>& rows, int alpha = 1, int degree = 0) {
    if (degree == 0) degree = alpha + 2;
    ChartBuilder b(degree);
    Half half;
    bool first = true;
    for (const CombSpec& spec : rows) {
        Dart anchor = detail_fixtures::comb_row(b, half, spec, alpha);
        if (first) b.outer(anchor);
        else b.place(anchor, Placement::root());
        first = false;
    }
    half.chart = b.build();
    return half;
}

// Chain: one principal run through all k whites (k = 1 is the canonical
// minimal N-tangle).
inline Half nt_chain_half(int k, int alpha = 1, int degree = 0) {
    CombSpec spec;
    for (int i = 0; i < k; ++i) spec.whites.push_back({i == 0, i == k - 1});
    return nt_comb_half(spec, alpha, degree);
}

// Two principal runs side by side: T_O = T_I = 2 with disjoint principal
// paths in the two components of the tangle content.
inline Half nt_branch_half(int alpha = 1, int degree = 0) {
    CombSpec two, one;
    two.whites = {{true, false}, {false, true}};
    one.whites = {{true, true}};
    return nt_multi_half({two, one}, alpha, degree);
}

// Plants one hoop of a far-away label in every bounded zone, so no
// 2-colored disk survives anywhere outside the tangle content. The closed
// tangle charts stay valid and their regions ignore the hoops.
inline Chart spoil_two_color_disks(const Chart& chart, int spoiler_label) {
    Chart c = chart;
    FaceStructure fs = face_structure(c);
    for (const auto& z : fs.zones) {
        if (z.kind != FaceStructure::Zone::Kind::Orbit) continue;
        ChartBuilder b(0);
        b.raw() = c;
        b.hoop(spoiler_label, true,
               Placement::face(fs.orbits[z.orbit].darts.front()));
        c = b.raw();
    }
    check_structure(c);
    return c;
}

struct SP {
    Chart chart;
    VertexId v0, v1;
    EdgeId e_star, e_mid, e_tilde; // the theta: labels m, k, m
    int m = 1, k = 2;
};

// The minimal spindle shape: two white vertices joined by three consecutive
// edges of labels m, k, m, the outer two forming the selective path pair.
inline SP sp_fixture() {
    ChartBuilder b(3);
    SP f;
    f.v0 = b.vertex(VertexKind::White);
    f.v1 = b.vertex(VertexKind::White);
    std::vector<VertexId> blk;
    for (int i = 0; i < 6; ++i) blk.push_back(b.vertex(VertexKind::Black));
    f.e_star = b.edge(1, f.v0, f.v1);
    f.e_mid = b.edge(2, f.v0, f.v1);
    f.e_tilde = b.edge(1, f.v0, f.v1);
    EdgeId t1 = b.edge(2, blk[0], f.v0);
    EdgeId t2 = b.edge(1, blk[1], f.v0);
    EdgeId t3 = b.edge(2, blk[2], f.v0);
    EdgeId t4 = b.edge(2, f.v1, blk[3]);
    EdgeId t5 = b.edge(1, f.v1, blk[4]);
    EdgeId t6 = b.edge(2, f.v1, blk[5]);
    b.rotation(f.v0, {dart_at_origin(f.e_star), dart_at_origin(f.e_mid),
                      dart_at_origin(f.e_tilde), dart_at_target(t1), dart_at_target(t2),
                      dart_at_target(t3)});
    b.rotation(f.v1, {dart_at_target(f.e_tilde), dart_at_target(f.e_mid),
                      dart_at_target(f.e_star), dart_at_origin(t4), dart_at_origin(t5),
                      dart_at_origin(t6)});
    b.outer(dart_at_target(t1));
    f.chart = b.build();
    return f;
}

struct HS {
    Chart chart;
    VertexId vr, vl, apex, z; // path whites and the inner white
    VertexId v0r, v0l, y;     // outside whites
    EdgeId es1, es2, et1, et2, il;
};

// A half spindle with s = t = 2: two selective two-edge paths meeting at the
// apex, one inner white fed by an I-edge through the bottom arc.
inline HS hs_fixture() {
    ChartBuilder b(3);
    HS f;
    f.vr = b.vertex(VertexKind::White);
    f.vl = b.vertex(VertexKind::White);
    f.apex = b.vertex(VertexKind::White);
    f.z = b.vertex(VertexKind::White);
    f.v0r = b.vertex(VertexKind::White);
    f.v0l = b.vertex(VertexKind::White);
    f.y = b.vertex(VertexKind::White);
    auto black = [&]() { return b.vertex(VertexKind::Black); };

    f.es1 = b.edge(1, f.v0r, f.vr);
    f.es2 = b.edge(1, f.vr, f.apex);
    f.et1 = b.edge(1, f.v0l, f.vl);
    f.et2 = b.edge(1, f.vl, f.apex);
    f.il = b.edge(1, f.y, f.z);
    EdgeId kr1 = b.edge(2, black(), f.vr); // O-terminal outside the disk
    EdgeId ka = b.edge(2, f.vr, f.apex);
    EdgeId mr = b.edge(1, f.vr, f.z);
    EdgeId zk3 = b.edge(2, f.z, f.vr);
    EdgeId kl1 = b.edge(2, black(), f.vl);
    EdgeId zk1 = b.edge(2, f.z, f.vl);
    EdgeId ml = b.edge(1, f.vl, black()); // I-terminal inside the disk
    EdgeId kl3 = b.edge(2, f.vl, f.z);
    EdgeId zm2 = b.edge(1, f.z, black());
    EdgeId k1 = b.edge(2, f.apex, black());
    EdgeId ma = b.edge(1, f.apex, black());
    EdgeId k2 = b.edge(2, f.apex, black());

    b.rotation(f.vr, {dart_at_target(f.es1), dart_at_target(kr1), dart_at_origin(f.es2),
                      dart_at_origin(ka), dart_at_origin(mr), dart_at_target(zk3)});
    b.rotation(f.apex, {dart_at_target(f.et2), dart_at_target(ka), dart_at_target(f.es2),
                        dart_at_origin(k1), dart_at_origin(ma), dart_at_origin(k2)});
    b.rotation(f.vl, {dart_at_origin(f.et2), dart_at_target(kl1), dart_at_target(f.et1),
                      dart_at_target(zk1), dart_at_origin(ml), dart_at_origin(kl3)});
    b.rotation(f.z, {dart_at_target(f.il), dart_at_origin(zk1), dart_at_origin(zm2),
                     dart_at_origin(zk3), dart_at_target(mr), dart_at_target(kl3)});
    // W2-style completions for the three outer whites.
    auto complete = [&](VertexId w, EdgeId structural) {
        // structural is outward at w with label 1; fill the other five slots.
        EdgeId q1 = b.edge(2, black(), w);
        EdgeId q2 = b.edge(1, black(), w);
        EdgeId q3 = b.edge(2, black(), w);
        EdgeId q4 = b.edge(2, w, black());
        EdgeId q5 = b.edge(1, w, black());
        b.rotation(w, {dart_at_target(q1), dart_at_target(q2), dart_at_target(q3),
                       dart_at_origin(structural), dart_at_origin(q4), dart_at_origin(q5)});
    };
    complete(f.v0r, f.es1);
    complete(f.v0l, f.et1);
    complete(f.y, f.il);
    b.outer(dart_at_origin(k1));
    f.chart = b.build();
    return f;
}

} // namespace fixtures
