#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chartkit/region.hpp"

namespace chartkit {

// Line-based chart text format.
//
//   chart v1
//   degree N
//   vertex ID black|white|cross
//   edge ID LABEL FROM TO
//   rot VERTEX D1 D2 ...          darts written eK+ / eK-
//   hoop ID LABEL CW|CCW FACEPATH
//   place DART FACEPATH           placement of a detached component
//   outer DART|trivial
//   region NAME: FACE xEK< FACE xEK> ...
//   contains ITEM ...             vK / eK / hK seeds inside a region block
//   endregion
//
// FACEPATH and FACE tokens: ~ (root zone), @eK+ / @eK- (zone left of a
// dart), @hK (inside hoop K).

struct RegionSpec {
    std::string name;
    struct Crossing {
        EdgeId edge;
        bool entering;
        std::string face_before; // token preceding this crossing
    };
    std::vector<Crossing> walk;
    std::vector<std::string> contains; // vK / eK / hK tokens
};

struct ChartDocument {
    Chart chart;
    std::vector<RegionSpec> regions;
};

struct ParseError : ChartError {
    int line;
    ParseError(int line_, const std::string& what)
        : ChartError("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

namespace iodetail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline Dart parse_dart(const std::string& tok, int line) {
    if (tok.size() < 3 || tok[0] != 'e')
        throw ParseError(line, "expected dart like e3+ or e3-, got '" + tok + "'");
    char sign = tok.back();
    if (sign != '+' && sign != '-')
        throw ParseError(line, "dart must end with + or -: '" + tok + "'");
    int id;
    try {
        id = std::stoi(tok.substr(1, tok.size() - 2));
    } catch (...) {
        throw ParseError(line, "bad dart id in '" + tok + "'");
    }
    return sign == '+' ? dart_at_origin(id) : dart_at_target(id);
}

inline Placement parse_facepath(const std::string& tok, int line) {
    if (tok == "~") return Placement::root();
    if (tok.size() >= 2 && tok[0] == '@' && tok[1] == 'h') {
        try {
            return Placement::inside(std::stoi(tok.substr(2)));
        } catch (...) {
            throw ParseError(line, "bad hoop token '" + tok + "'");
        }
    }
    if (tok.size() >= 2 && tok[0] == '@' && tok[1] == 'e')
        return Placement::face(parse_dart(tok.substr(1), line));
    throw ParseError(line, "expected face path ~, @eK+/-, or @hK, got '" + tok + "'");
}

inline std::string facepath_token(const Placement& p) {
    switch (p.kind) {
    case Placement::Kind::Root: return "~";
    case Placement::Kind::InsideHoop: return "@h" + std::to_string(p.hoop);
    case Placement::Kind::FaceOfDart: return "@" + dart_name(p.dart);
    }
    return "~";
}

} // namespace iodetail

inline ChartDocument parse_document(const std::string& text) {
    ChartDocument doc;
    Chart& c = doc.chart;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    RegionSpec* open_region = nullptr;
    std::map<VertexId, std::vector<Dart>> rotations;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = iodetail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& kw = toks[0];
        if (!header) {
            if (kw != "chart" || toks.size() != 2 || toks[1] != "v1")
                throw ParseError(lineno, "expected header 'chart v1'");
            header = true;
            continue;
        }
        if (open_region) {
            if (kw == "contains") {
                for (size_t i = 1; i < toks.size(); ++i)
                    open_region->contains.push_back(toks[i]);
                continue;
            }
            if (kw == "endregion") {
                open_region = nullptr;
                continue;
            }
            throw ParseError(lineno, "expected 'contains' or 'endregion' inside region block");
        }
        if (kw == "degree") {
            if (toks.size() != 2) throw ParseError(lineno, "degree N");
            c.degree = std::stoi(toks[1]);
        } else if (kw == "vertex") {
            if (toks.size() != 3) throw ParseError(lineno, "vertex ID KIND");
            VertexRecord v;
            v.id = std::stoi(toks[1]);
            if (toks[2] == "black") v.kind = VertexKind::Black;
            else if (toks[2] == "white") v.kind = VertexKind::White;
            else if (toks[2] == "cross") v.kind = VertexKind::Crossing;
            else throw ParseError(lineno, "vertex kind must be black|white|cross");
            if (c.vertices.count(v.id)) throw ParseError(lineno, "duplicate vertex id");
            c.vertices[v.id] = v;
        } else if (kw == "edge") {
            if (toks.size() != 5) throw ParseError(lineno, "edge ID LABEL FROM TO");
            EdgeRecord e;
            e.id = std::stoi(toks[1]);
            e.label = std::stoi(toks[2]);
            e.origin = std::stoi(toks[3]);
            e.target = std::stoi(toks[4]);
            if (c.edges.count(e.id)) throw ParseError(lineno, "duplicate edge id");
            c.edges[e.id] = e;
        } else if (kw == "rot") {
            if (toks.size() < 2) throw ParseError(lineno, "rot VERTEX D1 ...");
            VertexId v = std::stoi(toks[1]);
            std::vector<Dart> rot;
            for (size_t i = 2; i < toks.size(); ++i)
                rot.push_back(iodetail::parse_dart(toks[i], lineno));
            rotations[v] = rot;
        } else if (kw == "hoop") {
            if (toks.size() != 5) throw ParseError(lineno, "hoop ID LABEL CW|CCW FACEPATH");
            HoopRecord h;
            h.id = std::stoi(toks[1]);
            h.label = std::stoi(toks[2]);
            if (toks[3] == "CCW") h.ccw = true;
            else if (toks[3] == "CW") h.ccw = false;
            else throw ParseError(lineno, "hoop orientation must be CW or CCW");
            h.parent = iodetail::parse_facepath(toks[4], lineno);
            if (c.hoops.count(h.id)) throw ParseError(lineno, "duplicate hoop id");
            c.hoops[h.id] = h;
        } else if (kw == "place") {
            if (toks.size() != 3) throw ParseError(lineno, "place DART FACEPATH");
            Dart d = iodetail::parse_dart(toks[1], lineno);
            c.placements[d] = iodetail::parse_facepath(toks[2], lineno);
        } else if (kw == "outer") {
            if (toks.size() != 2) throw ParseError(lineno, "outer DART|trivial");
            if (toks[1] == "trivial") c.outer_dart.reset();
            else c.outer_dart = iodetail::parse_dart(toks[1], lineno);
        } else if (kw == "region") {
            if (toks.size() < 2 || toks[1].back() != ':')
                throw ParseError(lineno, "region NAME: ...");
            RegionSpec spec;
            spec.name = toks[1].substr(0, toks[1].size() - 1);
            std::string face = "";
            for (size_t i = 2; i < toks.size(); ++i) {
                const std::string& t = toks[i];
                if (t[0] == 'x') {
                    if (t.size() < 4 || t[1] != 'e')
                        throw ParseError(lineno, "crossing token like xe3< expected");
                    char dir = t.back();
                    if (dir != '<' && dir != '>')
                        throw ParseError(lineno, "crossing token must end with < or >");
                    RegionSpec::Crossing x;
                    x.edge = std::stoi(t.substr(2, t.size() - 3));
                    x.entering = dir == '<';
                    x.face_before = face;
                    spec.walk.push_back(x);
                } else {
                    face = t; // zone token; checked against the built walk
                }
            }
            doc.regions.push_back(spec);
            open_region = &doc.regions.back();
        } else if (kw == "endregion") {
            throw ParseError(lineno, "endregion without region");
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (open_region) throw ParseError(lineno, "unterminated region block");
    for (auto& [v, rot] : rotations) {
        if (!c.vertices.count(v)) throw ParseError(0, "rot for unknown vertex");
        c.vertices[v].rotation = rot;
    }
    check_structure(c);
    return doc;
}

// Zone naming for serialization: the root zone is ~, orbit zones take their
// smallest dart, hoop zones their hoop.
inline std::string zone_token(const FaceStructure& fs, int zone) {
    const auto& z = fs.zones[zone];
    switch (z.kind) {
    case FaceStructure::Zone::Kind::Root: return "~";
    case FaceStructure::Zone::Kind::HoopInside: return "@h" + std::to_string(z.hoop);
    case FaceStructure::Zone::Kind::Orbit: {
        Dart best = *std::min_element(fs.orbits[z.orbit].darts.begin(),
                                      fs.orbits[z.orbit].darts.end());
        return "@" + dart_name(best);
    }
    }
    return "~";
}

inline std::string serialize(const Chart& c, const std::vector<DiskRegion>& regions = {}) {
    std::ostringstream os;
    os << "chart v1\n";
    os << "degree " << c.degree << "\n";
    for (const auto& [id, v] : c.vertices)
        os << "vertex " << id << " " << kind_name(v.kind) << "\n";
    for (const auto& [id, e] : c.edges)
        os << "edge " << id << " " << e.label << " " << e.origin << " " << e.target << "\n";
    for (const auto& [id, v] : c.vertices) {
        if (v.rotation.empty()) continue;
        os << "rot " << id;
        for (Dart d : v.rotation) os << " " << dart_name(d);
        os << "\n";
    }
    for (const auto& [id, h] : c.hoops)
        os << "hoop " << id << " " << h.label << " " << (h.ccw ? "CCW" : "CW") << " "
           << iodetail::facepath_token(h.parent) << "\n";
    for (const auto& [d, p] : c.placements)
        os << "place " << dart_name(d) << " " << iodetail::facepath_token(p) << "\n";
    if (c.outer_dart) os << "outer " << dart_name(*c.outer_dart) << "\n";
    else os << "outer trivial\n";
    if (!regions.empty()) {
        FaceStructure fs = face_structure(c);
        for (const DiskRegion& r : regions) {
            os << "region " << (r.name.empty() ? "R" : r.name) << ":";
            for (const BoundaryCrossing& x : r.walk)
                os << " " << zone_token(fs, x.zone_after) << " xe" << x.edge
                   << (x.entering ? "<" : ">");
            os << "\n";
            // Emit all whole-content seeds; the reader's flood rebuilds the
            // rest, and extra seeds are harmless.
            if (!r.vertices.empty() || !r.hoops.empty()) {
                os << "contains";
                for (VertexId v : r.vertices) os << " v" << v;
                for (HoopId h : r.hoops) os << " h" << h;
                os << "\n";
            }
            os << "endregion\n";
        }
    }
    return os.str();
}

// Rebuilds a region from its parsed spec: cut kinds from the crossing
// multiset, content flooded from the inside ends and the contains seeds,
// then verified against the derived canonical walk.
inline DiskRegion build_region(const Chart& c, const CellComplex& cc, const RegionSpec& spec) {
    DiskRegion r;
    r.name = spec.name;
    std::map<EdgeId, std::vector<bool>> crossings; // entering flags in walk order
    for (const auto& x : spec.walk) {
        if (!c.has_edge(x.edge))
            throw ChartError("region " + spec.name + " crosses missing edge e" +
                             std::to_string(x.edge));
        crossings[x.edge].push_back(x.entering);
    }
    for (const auto& [e, flags] : crossings) {
        if (flags.size() == 1) {
            r.cuts[e] = flags[0] ? CutKind::TargetIn : CutKind::OriginIn;
        } else if (flags.size() == 2 && flags[0] != flags[1]) {
            // Entering and exiting once each: the middle is inside when the
            // endpoints are claimed outside by the flood below; resolved
            // after seeding. Provisionally mark as MiddleIn.
            r.cuts[e] = CutKind::MiddleIn;
        } else {
            throw ChartError("region " + spec.name + " has unsupported crossing pattern on e" +
                             std::to_string(e));
        }
    }
    // Seeds.
    std::set<VertexId> seed_vertices;
    for (const auto& [e, kind] : r.cuts) {
        const EdgeRecord& rec = c.edge(e);
        if (kind == CutKind::TargetIn) seed_vertices.insert(rec.target);
        if (kind == CutKind::OriginIn) seed_vertices.insert(rec.origin);
    }
    for (const std::string& tok : spec.contains) {
        if (tok.size() < 2) throw ChartError("bad contains token " + tok);
        int id = std::stoi(tok.substr(1));
        if (tok[0] == 'v') seed_vertices.insert(id);
        else if (tok[0] == 'e') {
            seed_vertices.insert(c.edge(id).origin);
            seed_vertices.insert(c.edge(id).target);
        } else if (tok[0] == 'h') r.hoops.insert(id);
        else throw ChartError("bad contains token " + tok);
    }
    // Flood within the graph, not crossing the boundary.
    std::vector<VertexId> stack(seed_vertices.begin(), seed_vertices.end());
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        r.vertices.insert(v);
        for (Dart d : c.vertex(v).rotation) {
            EdgeId e = edge_of(d);
            auto it = r.cuts.find(e);
            if (it != r.cuts.end()) continue;
            if (r.edges.insert(e).second) {
                for (VertexId u : {c.edge(e).origin, c.edge(e).target})
                    if (!r.vertices.count(u)) stack.push_back(u);
            }
        }
    }
    // Resolve MiddleIn vs MiddleOut: both endpoints flooded means the middle
    // is outside.
    for (auto& [e, kind] : r.cuts) {
        if (crossings[e].size() != 2) continue;
        const EdgeRecord& rec = c.edge(e);
        bool oin = r.vertices.count(rec.origin), tin = r.vertices.count(rec.target);
        if (oin && tin) kind = CutKind::MiddleOut;
        else if (!oin && !tin) kind = CutKind::MiddleIn;
        else throw ChartError("inconsistent double crossing on e" + std::to_string(e));
    }
    DiskRegion built = finish_region(c, cc, r);
    // The parsed crossing sequence must match the canonical walk cyclically.
    auto seq = [&](auto&& walk) {
        std::vector<std::pair<EdgeId, bool>> s;
        for (const auto& x : walk) s.push_back({x.edge, x.entering});
        return s;
    };
    auto derived = seq(built.walk);
    auto given = seq(spec.walk);
    if (derived.size() != given.size())
        throw ChartError("region " + spec.name + " walk length mismatch");
    bool match = derived.empty();
    for (size_t s = 0; s < derived.size() && !match; ++s) {
        match = true;
        for (size_t i = 0; i < derived.size(); ++i)
            if (derived[(s + i) % derived.size()] != given[i]) {
                match = false;
                break;
            }
    }
    if (!match)
        throw ChartError("region " + spec.name +
                         " walk does not match the canonical boundary of its content");
    built.name = spec.name;
    return built;
}

} // namespace chartkit
