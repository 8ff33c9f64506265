#include <catch2/catch_amalgamated.hpp>

#include <chartkit/io.hpp>
#include <chartkit/iso.hpp>
#include <chartkit/tangles.hpp>

#include "fixtures.hpp"

using namespace chartkit;

TEST_CASE("serialize / parse round trip") {
    for (Chart c : {fixtures::w2().chart, fixtures::t2().chart, fixtures::oval_nest_chart(),
                    fixtures::hoop_chart(), fixtures::empty_chart()}) {
        std::string text = serialize(c);
        ChartDocument doc = parse_document(text);
        CHECK(serialize(doc.chart) == text);
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_document("degree 3\n"), ParseError);
    try {
        parse_document("chart v1\ndegree 3\nvertex 0 black\nfoo bar\n");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
    CHECK_THROWS_AS(parse_document("chart v1\nvertex 0 purple\n"), ParseError);
    CHECK_THROWS_AS(parse_document("chart v1\nrot 0 e1*\n"), ParseError);
}

TEST_CASE("label range parses but fails validation") {
    // degree 3 with an edge of label 3: parse ok, validate reports.
    std::string text = "chart v1\ndegree 3\nvertex 0 black\nvertex 1 black\n"
                       "edge 0 3 0 1\nrot 0 e0+\nrot 1 e0-\nouter e0+\n";
    ChartDocument doc = parse_document(text);
    auto rep = validate(doc.chart);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().code == Violation::Code::LabelOutOfRange);
}

TEST_CASE("region blocks round trip through the walk") {
    auto f = fixtures::t2();
    CellComplex cc = cell_complex(f.chart);
    DiskRegion d = region_around(f.chart, cc, {f.w}, {f.ta, f.tb}, "D");
    std::string text = serialize(f.chart, {d});
    ChartDocument doc = parse_document(text);
    REQUIRE(doc.regions.size() == 1);
    CellComplex cc2 = cell_complex(doc.chart);
    DiskRegion rebuilt = build_region(doc.chart, cc2, doc.regions[0]);
    CHECK(rebuilt.vertices == d.vertices);
    CHECK(rebuilt.edges == d.edges);
    CHECK(rebuilt.cuts == d.cuts);
    CHECK(rebuilt.walk.size() == d.walk.size());
    TangleClass cls = classify_region(doc.chart, rebuilt);
    CHECK(cls.kind == TangleClass::Kind::NTangle);
}

TEST_CASE("no-crossing region needs its contains seeds") {
    auto f = fixtures::w2();
    CellComplex cc = cell_complex(f.chart);
    std::set<VertexId> all;
    for (auto& [id, v] : f.chart.vertices) all.insert(id);
    DiskRegion d = region_around(f.chart, cc, all, {}, "full");
    std::string text = serialize(f.chart, {d});
    ChartDocument doc = parse_document(text);
    DiskRegion rebuilt = build_region(doc.chart, cell_complex(doc.chart), doc.regions[0]);
    CHECK(rebuilt.vertices == d.vertices);
    CHECK(rebuilt.edges == d.edges);
}

TEST_CASE("isomorphism keys") {
    SECTION("relabeled charts are isomorphic") {
        auto f = fixtures::t2();
        Chart shifted;
        shifted.degree = f.chart.degree;
        int voff = 50, eoff = 70;
        for (auto& [id, v] : f.chart.vertices) {
            VertexRecord r = v;
            r.id = id + voff;
            for (Dart& dd : r.rotation)
                dd = at_origin(dd) ? dart_at_origin(edge_of(dd) + eoff)
                                   : dart_at_target(edge_of(dd) + eoff);
            shifted.vertices[r.id] = r;
        }
        for (auto& [id, e] : f.chart.edges) {
            EdgeRecord r = e;
            r.id = id + eoff;
            r.origin += voff;
            r.target += voff;
            shifted.edges[r.id] = r;
        }
        shifted.outer_dart = at_origin(*f.chart.outer_dart)
                                 ? dart_at_origin(edge_of(*f.chart.outer_dart) + eoff)
                                 : dart_at_target(edge_of(*f.chart.outer_dart) + eoff);
        check_structure(shifted);
        CHECK(isomorphic(f.chart, shifted));
    }
    SECTION("a relabeled rotation is not") {
        auto f = fixtures::t2();
        Chart mut = f.chart;
        mut.edges.at(f.ta).label = 1;
        mut.edges.at(f.tb).label = 2; // swap terminal labels at w
        CHECK_FALSE(isomorphic(f.chart, mut));
    }
    SECTION("hoop nesting distinguishes charts") {
        Chart nest = fixtures::oval_nest_chart();
        // Same items, hoops side by side instead of nested.
        ChartBuilder b(3);
        HoopId h1 = b.hoop(1);
        b.hoop(1, true, Placement::inside(h1));
        VertexId u = b.vertex(VertexKind::Black);
        VertexId v = b.vertex(VertexKind::Black);
        EdgeId e = b.edge(2, u, v);
        b.place(dart_at_origin(e), Placement::inside(h1)); // beside the inner hoop
        Chart flat = b.build();
        CHECK_FALSE(isomorphic(nest, flat));
        CHECK(isomorphic(nest, fixtures::oval_nest_chart()));
    }
    SECTION("chain closures of different lengths differ") {
        auto a = fixtures::mirror_close(fixtures::nt_chain_half(2));
        auto b = fixtures::mirror_close(fixtures::nt_chain_half(3));
        CHECK_FALSE(isomorphic(a.chart, b.chart));
        CHECK(isomorphic(a.chart, fixtures::mirror_close(fixtures::nt_chain_half(2)).chart));
    }
}
