#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chartkit {

using VertexId = int;
using EdgeId = int;
using HoopId = int;

// A dart is an edge end: 2*e is the origin end of edge e, 2*e+1 the target end.
// The dart "lives at" the vertex on that end of the edge.
using Dart = int;

inline Dart dart_at_origin(EdgeId e) { return 2 * e; }
inline Dart dart_at_target(EdgeId e) { return 2 * e + 1; }
inline EdgeId edge_of(Dart d) { return d / 2; }
inline bool at_origin(Dart d) { return (d & 1) == 0; }
inline Dart twin(Dart d) { return d ^ 1; }

inline std::string dart_name(Dart d) {
    return "e" + std::to_string(edge_of(d)) + (at_origin(d) ? "+" : "-");
}

struct ChartError : std::runtime_error {
    explicit ChartError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chartkit
