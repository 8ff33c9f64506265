#include <catch2/catch_amalgamated.hpp>

#include <chartkit/faces.hpp>
#include <chartkit/queries.hpp>
#include <chartkit/region.hpp>
#include <chartkit/validate.hpp>

#include "fixtures.hpp"

using namespace chartkit;

namespace {

// Independent Euler oracle: V - E + F must be 2 on every component,
// recomputed here from scratch rather than through validate().
void check_euler(const Chart& c) {
    FaceStructure fs = face_structure(c);
    for (const auto& comp : fs.components) {
        long v = (long)comp.vertices.size();
        long e = (long)comp.edges.size();
        long f = (long)comp.orbits.size();
        REQUIRE(v - e + f == 2);
    }
}

} // namespace

TEST_CASE("empty chart is legal") {
    Chart c = fixtures::empty_chart(4);
    CHECK(validate(c).ok());
    FaceStructure fs = face_structure(c);
    CHECK(fs.zones.size() == 1); // just the root zone
}

TEST_CASE("free edge chart") {
    Chart c = fixtures::free_edge_chart(2, 4);
    REQUIRE(validate(c).ok());
    check_euler(c);
    FaceStructure fs = face_structure(c);
    CHECK(fs.orbits.size() == 1);
    CHECK(fs.zones.size() == 1);
    Complexity cx = complexities(c);
    CHECK(cx.f == 1);
    CHECK(cx.w == 0);
    CHECK(cx.c_tuple() == std::array<long, 4>{0, 0, -1, 0});
}

TEST_CASE("single hoop chart") {
    Chart c = fixtures::hoop_chart();
    REQUIRE(validate(c).ok());
    FaceStructure fs = face_structure(c);
    CHECK(fs.zones.size() == 2); // root + inside
}

TEST_CASE("W2 fixture structure") {
    auto f = fixtures::w2();
    const Chart& c = f.chart;
    REQUIRE(validate(c).ok());
    check_euler(c);

    // Oracle: exhaustive dart enumeration.
    int whites = 0, blacks = 0;
    for (const auto& [id, v] : c.vertices) {
        if (v.kind == VertexKind::White) ++whites;
        if (v.kind == VertexKind::Black) ++blacks;
    }
    CHECK(whites == 2);
    CHECK(blacks == 10);
    CHECK(c.edges.size() == 11); // e1 plus ten terminal edges
    CHECK(c.all_darts().size() == 22);

    // The component is a tree: exactly one face.
    FaceStructure fs = face_structure(c);
    CHECK(fs.orbits.size() == 1);

    Complexity cx = complexities(c);
    CHECK(cx.w == 2);
    CHECK(cx.f == 0);
    CHECK(cx.c == 0);
    CHECK(cx.b == 0);

    SECTION("middle darts") {
        DartClass dc = dart_classification(c);
        REQUIRE(dc.whites.count(f.v0));
        REQUIRE(dc.whites.count(f.v1));
        // Middle inward at v0 is the label-2 terminal, middle outward is e1.
        CHECK(c.label_of(dc.whites.at(f.v0).middle_inward) == 2);
        CHECK(dc.whites.at(f.v0).middle_outward == dart_at_origin(f.e1));
        CHECK(dc.whites.at(f.v1).middle_inward == dart_at_target(f.e1));
        CHECK(edge_middle_at(c, dc, f.e1, f.v0));
        CHECK(edge_middle_at(c, dc, f.e1, f.v1));
    }

    SECTION("cyclic invariance of middles") {
        Chart rot = c;
        auto& r = rot.vertices.at(f.v0).rotation;
        std::rotate(r.begin(), r.begin() + 1, r.end());
        DartClass dc = dart_classification(rot);
        CHECK(dc.whites.at(f.v0).middle_outward == dart_at_origin(f.e1));
    }

    SECTION("label subgraph") {
        Subchart g1 = label_subgraph(c, 1);
        // e1 plus the four label-1 terminals (two per white vertex).
        CHECK(g1.edges.size() == 5);
        CHECK(g1.edges.count(f.e1) == 1);
        Subchart g2 = label_subgraph(c, 2);
        CHECK(g2.edges.size() == 6);
        CHECK(g2.vertices.count(f.v0) == 1);
        std::set<EdgeId> uni;
        for (int m = 1; m <= 2; ++m)
            for (EdgeId e : label_subgraph(c, m).edges) uni.insert(e);
        CHECK(uni.size() == c.edges.size());
        CHECK_THROWS_AS(label_subgraph(c, 0), ChartError);
        CHECK_THROWS_AS(label_subgraph(c, 3), ChartError);
    }
}

TEST_CASE("empty label subgraph on empty chart") {
    Chart c = fixtures::empty_chart(4);
    for (int m = 1; m <= 3; ++m) {
        Subchart g = label_subgraph(c, m);
        CHECK(g.edges.empty());
        CHECK(g.vertices.empty());
    }
}

TEST_CASE("T2 fixture embeds with genus zero") {
    auto f = fixtures::t2();
    REQUIRE(validate(f.chart).ok());
    check_euler(f.chart);
    FaceStructure fs = face_structure(f.chart);
    CHECK(fs.orbits.size() == 4);
}

TEST_CASE("validate flags each mutation class") {
    auto f = fixtures::w2();

    SECTION("degree change") {
        Chart c = f.chart;
        // Recolor a black endpoint as white: degree 1 vs white kind.
        VertexId b = c.edge(f.terminals[0]).origin;
        c.vertices.at(b).kind = VertexKind::White;
        auto rep = validate(c);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.violations.front().code == Violation::Code::DegreeMismatch);
    }
    SECTION("label out of range") {
        Chart c = f.chart;
        c.edges.at(f.e1).label = 5;
        auto rep = validate(c);
        REQUIRE_FALSE(rep.ok());
        bool found = false;
        for (auto& v : rep.violations)
            if (v.code == Violation::Code::LabelOutOfRange) found = true;
        CHECK(found);
    }
    SECTION("broken alternation") {
        Chart c = f.chart;
        c.edges.at(f.terminals[1]).label = 1; // t2 was the label-2 O-terminal at v0
        auto rep = validate(c);
        REQUIRE_FALSE(rep.ok());
        bool found = false;
        for (auto& v : rep.violations)
            if (v.code == Violation::Code::WhiteAlternation) found = true;
        CHECK(found);
    }
    SECTION("broken three-in-three-out") {
        Chart c = f.chart;
        // Reverse one terminal edge; in/out pattern at v0 becomes in,out,in,...
        auto& e = c.edges.at(f.terminals[1]);
        std::swap(e.origin, e.target);
        auto& rot = c.vertices.at(f.v0).rotation;
        for (Dart& d : rot)
            if (edge_of(d) == f.terminals[1]) d = twin(d);
        auto& brot = c.vertices.at(e.target).rotation;
        for (Dart& d : brot)
            if (edge_of(d) == f.terminals[1]) d = twin(d);
        auto rep = validate(c);
        REQUIRE_FALSE(rep.ok());
        bool found = false;
        for (auto& v : rep.violations)
            if (v.code == Violation::Code::WhiteOrientation) found = true;
        CHECK(found);
    }
    SECTION("white with in,out alternating orientations") {
        // Spec example: orientations in,out,in,out,in,out must be rejected.
        ChartBuilder b(3);
        VertexId w = b.vertex(VertexKind::White);
        std::vector<Dart> rot;
        for (int i = 0; i < 6; ++i) {
            VertexId blk = b.vertex(VertexKind::Black);
            int label = (i % 2) ? 2 : 1;
            if (i % 2) {
                EdgeId e = b.edge(label, w, blk);
                rot.push_back(dart_at_origin(e));
            } else {
                EdgeId e = b.edge(label, blk, w);
                rot.push_back(dart_at_target(e));
            }
        }
        b.rotation(w, rot);
        Chart c = b.build();
        auto rep = validate(c);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.violations.front().code == Violation::Code::WhiteOrientation);
    }
}

TEST_CASE("crossing condition") {
    // A ring of label l1 crossing a ring of label l2 twice, Venn style:
    // a1 runs around the left, a2 through the lens, b1 through the lens,
    // b2 around the right.
    auto make = [](int l1, int l2, bool coherent) {
        ChartBuilder b(5);
        VertexId x = b.vertex(VertexKind::Crossing); // top intersection
        VertexId y = b.vertex(VertexKind::Crossing); // bottom intersection
        EdgeId a1 = b.edge(l1, x, y);
        EdgeId a2 = b.edge(l1, y, x);
        EdgeId b1 = b.edge(l2, x, y);
        EdgeId b2 = coherent ? b.edge(l2, y, x) : b.edge(l2, x, y);
        Dart b2_at_x = coherent ? dart_at_target(b2) : dart_at_origin(b2);
        Dart b2_at_y = coherent ? dart_at_origin(b2) : dart_at_target(b2);
        b.rotation(x, {b2_at_x, dart_at_origin(a1), dart_at_origin(b1), dart_at_target(a2)});
        b.rotation(y, {dart_at_origin(a2), dart_at_target(b1), dart_at_target(a1), b2_at_y});
        b.outer(dart_at_origin(a1));
        return b.build();
    };

    SECTION("labels (1,3), coherent -> valid") {
        Chart c = make(1, 3, true);
        auto rep = validate(c);
        CHECK(rep.ok());
        check_euler(c);
    }
    SECTION("labels (1,2) -> violation") {
        Chart c = make(1, 2, true);
        auto rep = validate(c);
        REQUIRE_FALSE(rep.ok());
        bool found = false;
        for (auto& v : rep.violations)
            if (v.code == Violation::Code::CrossingDiagonal) found = true;
        CHECK(found);
    }
}

TEST_CASE("structural errors throw at build") {
    SECTION("dangling endpoint") {
        Chart c;
        c.degree = 3;
        EdgeRecord e;
        e.id = 0;
        e.label = 1;
        e.origin = 0;
        e.target = 1;
        c.edges[0] = e;
        CHECK_THROWS_AS(check_structure(c), ChartError);
    }
    SECTION("rotation inconsistent with incident edges") {
        ChartBuilder b(3);
        VertexId u = b.vertex(VertexKind::Black);
        VertexId v = b.vertex(VertexKind::Black);
        EdgeId e = b.edge(1, u, v);
        b.rotation(u, {dart_at_target(e)}); // wrong end
        CHECK_THROWS_AS(b.build(), ChartError);
    }
}

TEST_CASE("oval nest containment tree") {
    Chart c = fixtures::oval_nest_chart();
    REQUIRE(validate(c).ok());
    FaceStructure fs = face_structure(c);
    // Zones: root, inside outer hoop, inside inner hoop.
    CHECK(fs.zones.size() == 3);
    // The free edge component must live inside the inner hoop.
    REQUIRE(fs.components.size() == 1);
    int pz = fs.components[0].parent_zone;
    REQUIRE(fs.zones[pz].kind == FaceStructure::Zone::Kind::HoopInside);
    int around = fs.zone_around_hoop.at(fs.zones[pz].hoop);
    CHECK(fs.zones[around].kind == FaceStructure::Zone::Kind::HoopInside);
}

TEST_CASE("faces merge outer orbits into parent zones") {
    auto f = fixtures::w2();
    Chart c = f.chart;
    // Drop a free edge beside W2 in the root zone.
    ChartBuilder b(3);
    b.raw() = c;
    VertexId u = b.vertex(VertexKind::Black);
    VertexId v = b.vertex(VertexKind::Black);
    EdgeId fe = b.edge(1, u, v);
    b.raw().vertices[u].rotation = {dart_at_origin(fe)};
    b.raw().vertices[v].rotation = {dart_at_target(fe)};
    Chart c2 = b.raw();
    check_structure(c2);
    REQUIRE(validate(c2).ok());
    FaceStructure fs = face_structure(c2);
    CHECK(fs.components.size() == 2);
    // Both components sit in the root zone; only one zone exists.
    CHECK(fs.zones.size() == 1);
    for (const auto& comp : fs.components) CHECK(comp.parent_zone == fs.root_zone);
}
