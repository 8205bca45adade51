#ifndef CHIPFIRE_GRAPHIO_HPP
#define CHIPFIRE_GRAPHIO_HPP

#include <chipfire/matrix.hpp>
#include <chipfire/numeric.hpp>

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace chipfire {

// Directed multigraph. Vertices are 0-based internally; the file formats use
// 1-based ids. Self-loops are rejected at construction.
struct DirectedMultigraph {
    struct Edge {
        std::size_t source = 0;
        std::size_t target = 0;
        Int multiplicity = 1;
    };

    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::optional<std::size_t> sink;

    DirectedMultigraph(std::size_t vertex_count, std::vector<Edge> edges,
                       std::optional<std::size_t> sink = std::nullopt);
};

// Full (n+1)x(n+1) Laplacian: diagonal = out-degree with multiplicity,
// entry (i, j) = -(number of edges i -> j). Every row sums to zero.
IntMatrix laplacian(const DirectedMultigraph& g);

// Every vertex has a directed path to s.
bool has_global_sink(const DirectedMultigraph& g, std::size_t sink);

// Laplacian with row and column `sink` deleted, remaining vertices keeping
// their order. Throws NoGlobalSinkError when the reachability check fails.
IntMatrix reduced_laplacian(const DirectedMultigraph& g, std::size_t sink);

// G-parking predicate over the non-sink vertices: for every nonempty subset
// I of them, some i in I has a[i] < (number of edges from i leaving I).
// Requires a >= 0 and at most 24 non-sink vertices.
bool is_g_parking(const DirectedMultigraph& g, std::size_t sink, const IntVec& a);

// Parses either the JSON form {"vertices": n, "edges": [[u, v, mult], ...],
// "sink": s} or the plain-text form "V E sink" followed by E lines "u v mult"
// (sink 0 means none). Vertex ids in files are 1-based.
DirectedMultigraph parse_graph(std::string_view text);

} // namespace chipfire

#endif
