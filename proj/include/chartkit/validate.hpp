#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "chartkit/faces.hpp"

namespace chartkit {

struct Violation {
    enum class Code {
        DegreeMismatch,
        LabelOutOfRange,
        WhiteAlternation,
        WhiteOrientation,
        CrossingDiagonal,
        EulerMismatch,
        BadDegree,
    };
    Code code;
    std::string where;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

inline std::string violation_code_name(Violation::Code c) {
    switch (c) {
    case Violation::Code::DegreeMismatch: return "degree-mismatch";
    case Violation::Code::LabelOutOfRange: return "label-out-of-range";
    case Violation::Code::WhiteAlternation: return "white-alternation";
    case Violation::Code::WhiteOrientation: return "white-orientation";
    case Violation::Code::CrossingDiagonal: return "crossing-diagonal";
    case Violation::Code::EulerMismatch: return "euler-mismatch";
    case Violation::Code::BadDegree: return "bad-degree";
    }
    return "?";
}

// Positions of inward darts must form one cyclically consecutive block.
inline bool consecutive_block(const std::vector<bool>& inward, int block) {
    int n = static_cast<int>(inward.size());
    int count = 0;
    for (bool b : inward) count += b ? 1 : 0;
    if (count != block) return false;
    for (int s = 0; s < n; ++s) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            bool want = i < block;
            if (inward[(s + i) % n] != want) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

// Checks the n-chart axioms: vertex degrees 1/4/6, labels in [1, n-1], the
// white-vertex alternation and three-in/three-out condition, the crossing
// diagonal condition, and genus zero per component (V - E + F = 2).
inline ValidationReport validate(const Chart& c) {
    ValidationReport rep;
    auto add = [&](Violation::Code code, const std::string& where, const std::string& msg) {
        rep.violations.push_back({code, where, msg});
    };

    for (const auto& [id, e] : c.edges)
        if (e.label < 1 || e.label > c.degree - 1)
            add(Violation::Code::LabelOutOfRange, "e" + std::to_string(id),
                "label " + std::to_string(e.label) + " outside [1," +
                    std::to_string(c.degree - 1) + "]");
    for (const auto& [id, h] : c.hoops)
        if (h.label < 1 || h.label > c.degree - 1)
            add(Violation::Code::LabelOutOfRange, "h" + std::to_string(id),
                "hoop label " + std::to_string(h.label) + " out of range");

    for (const auto& [id, v] : c.vertices) {
        const std::string where = "v" + std::to_string(id);
        int deg = static_cast<int>(v.rotation.size());
        if (deg != 1 && deg != 4 && deg != 6) {
            add(Violation::Code::BadDegree, where,
                "degree " + std::to_string(deg) + " is not 1, 4 or 6");
            continue;
        }
        if (deg != degree_of(v.kind)) {
            add(Violation::Code::DegreeMismatch, where,
                kind_name(v.kind) + " vertex has degree " + std::to_string(deg));
            continue;
        }
        if (v.kind == VertexKind::White) {
            std::vector<int> labels;
            std::vector<bool> inward;
            for (Dart d : v.rotation) {
                labels.push_back(c.label_of(d));
                inward.push_back(c.inward(d));
            }
            bool alt = true;
            for (int i = 0; i < 6; ++i)
                if (labels[i] == labels[(i + 1) % 6]) alt = false;
            int lo = *std::min_element(labels.begin(), labels.end());
            int hi = *std::max_element(labels.begin(), labels.end());
            if (!alt || hi != lo + 1)
                add(Violation::Code::WhiteAlternation, where,
                    "darts are not labeled i, i+1 alternately");
            if (!consecutive_block(inward, 3))
                add(Violation::Code::WhiteOrientation, where,
                    "inward darts do not form three consecutive arcs");
        }
        if (v.kind == VertexKind::Crossing) {
            const auto& r = v.rotation;
            bool ok = true;
            for (int i = 0; i < 2 && ok; ++i) {
                Dart a = r[i], b = r[i + 2];
                if (c.label_of(a) != c.label_of(b)) ok = false;
                else if (c.inward(a) == c.inward(b)) ok = false; // must pass through
            }
            int li = c.label_of(r[0]), lj = c.label_of(r[1]);
            if (ok && std::abs(li - lj) <= 1) ok = false;
            if (!ok)
                add(Violation::Code::CrossingDiagonal, where,
                    "diagonals must share a label, orient coherently and differ by more than 1");
        }
    }

    // Euler characteristic per component; only meaningful if the structure
    // resolved, so guard against placement errors.
    try {
        FaceStructure fs = face_structure(c);
        for (const auto& comp : fs.components) {
            long v = static_cast<long>(comp.vertices.size());
            long e = static_cast<long>(comp.edges.size());
            long f = static_cast<long>(comp.orbits.size());
            if (v - e + f != 2) {
                std::ostringstream os;
                os << "component with " << v << " vertices, " << e << " edges, " << f
                   << " faces has V-E+F=" << (v - e + f);
                add(Violation::Code::EulerMismatch,
                    "v" + std::to_string(*comp.vertices.begin()), os.str());
            }
        }
    } catch (const ChartError& err) {
        add(Violation::Code::EulerMismatch, "chart", err.what());
    }
    return rep;
}

} // namespace chartkit
