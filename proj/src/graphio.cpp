#include <chipfire/graphio.hpp>

#include <chipfire/errors.hpp>
#include <chipfire/io.hpp>

#include <json.hpp>

#include <deque>
#include <sstream>

namespace chipfire {

DirectedMultigraph::DirectedMultigraph(std::size_t vertex_count_, std::vector<Edge> edges_,
                                       std::optional<std::size_t> sink_)
    : vertex_count(vertex_count_), edges(std::move(edges_)), sink(sink_) {
    if (vertex_count == 0) throw ParseError("graph needs at least one vertex");
    for (const Edge& e : edges) {
        if (e.source >= vertex_count || e.target >= vertex_count)
            throw ParseError("edge endpoint out of range");
        if (e.source == e.target) throw ParseError("self-loops are not allowed");
        if (e.multiplicity < 1) throw ParseError("edge multiplicity must be positive");
    }
    if (sink && *sink >= vertex_count) throw ParseError("sink vertex out of range");
}

IntMatrix laplacian(const DirectedMultigraph& g) {
    IntMatrix m(g.vertex_count);
    for (const auto& e : g.edges) {
        m(e.source, e.source) += e.multiplicity;
        m(e.source, e.target) -= e.multiplicity;
    }
    return m;
}

bool has_global_sink(const DirectedMultigraph& g, std::size_t sink) {
    if (sink >= g.vertex_count)
        throw IndexError("sink vertex " + std::to_string(sink) + " out of range");
    // Walk edges backwards from the sink; global sink means everything is met.
    std::vector<std::vector<std::size_t>> rev(g.vertex_count);
    for (const auto& e : g.edges) rev[e.target].push_back(e.source);
    std::vector<char> seen(g.vertex_count, 0);
    std::deque<std::size_t> queue{sink};
    seen[sink] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t u : rev[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                queue.push_back(u);
            }
    }
    return reached == g.vertex_count;
}

IntMatrix reduced_laplacian(const DirectedMultigraph& g, std::size_t sink) {
    if (!has_global_sink(g, sink))
        throw NoGlobalSinkError("vertex " + std::to_string(sink + 1) +
                                " is not reachable from every vertex");
    if (g.vertex_count < 2)
        throw DimensionMismatchError("reduced Laplacian needs at least two vertices");
    IntMatrix full = laplacian(g);
    IntMatrix out(g.vertex_count - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < g.vertex_count; ++i) {
        if (i == sink) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < g.vertex_count; ++j) {
            if (j == sink) continue;
            out(r, c) = full(i, j);
            ++c;
        }
        ++r;
    }
    return out;
}

bool is_g_parking(const DirectedMultigraph& g, std::size_t sink, const IntVec& a) {
    if (sink >= g.vertex_count)
        throw IndexError("sink vertex " + std::to_string(sink) + " out of range");
    std::vector<std::size_t> verts; // non-sink vertices in order
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (v != sink) verts.push_back(v);
    const std::size_t n = verts.size();
    if (a.size() != n)
        throw DimensionMismatchError("expected one value per non-sink vertex (" +
                                     std::to_string(n) + ")");
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] < 0)
            throw NegativeInputError("value at position " + std::to_string(i) + " is negative");
    if (n > 24)
        throw DimensionTooLargeError("subset search needs 2^n candidates; " + std::to_string(n) +
                                     " non-sink vertices exceed 24");

    // position of each vertex among the non-sink list, or n for the sink
    std::vector<std::size_t> pos(g.vertex_count, n);
    for (std::size_t i = 0; i < n; ++i) pos[verts[i]] = i;

    std::vector<Int> outdeg(n, Int(0));
    std::vector<std::vector<std::pair<std::size_t, Int>>> internal(n);
    for (const auto& e : g.edges) {
        if (pos[e.source] == n) continue;
        outdeg[pos[e.source]] += e.multiplicity;
        if (pos[e.target] != n)
            internal[pos[e.source]].push_back({pos[e.target], e.multiplicity});
    }

    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        bool has_small = false;
        for (std::size_t i = 0; i < n && !has_small; ++i) {
            if (!((mask >> i) & 1u)) continue;
            Int leaving = outdeg[i];
            for (const auto& [j, mult] : internal[i])
                if ((mask >> j) & 1u) leaving -= mult;
            if (a[i] < leaving) has_small = true;
        }
        if (!has_small) return false;
    }
    return true;
}

namespace {

DirectedMultigraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_unsigned() || j["vertices"].get<std::uint64_t>() == 0)
        throw ParseError("\"vertices\" must be a positive integer");
    const std::size_t v = j["vertices"].get<std::size_t>();
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");

    std::vector<DirectedMultigraph::Edge> edges;
    for (const auto& t : j["edges"]) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("each edge must be a [source, target, multiplicity] triple");
        const Int u = int_from_json(t[0]);
        const Int w = int_from_json(t[1]);
        const Int mult = int_from_json(t[2]);
        if (u < 1 || u > Int(v) || w < 1 || w > Int(v))
            throw ParseError("edge endpoint out of range (vertex ids are 1-based)");
        edges.push_back({static_cast<std::size_t>(u - 1), static_cast<std::size_t>(w - 1), mult});
    }

    std::optional<std::size_t> sink;
    if (j.contains("sink") && !j["sink"].is_null()) {
        const Int s = int_from_json(j["sink"]);
        if (s < 1 || s > Int(v)) throw ParseError("sink out of range (vertex ids are 1-based)");
        sink = static_cast<std::size_t>(s - 1);
    }
    return DirectedMultigraph(v, std::move(edges), sink);
}

DirectedMultigraph graph_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long v = 0, ecount = 0, sink = 0;
    if (!(in >> v >> ecount >> sink))
        throw ParseError("graph text must start with \"V E sink\"");
    if (v < 1) throw ParseError("vertex count must be positive");
    if (ecount < 0) throw ParseError("edge count must be nonnegative");
    std::vector<DirectedMultigraph::Edge> edges;
    for (long long k = 0; k < ecount; ++k) {
        long long u = 0, w = 0, mult = 0;
        if (!(in >> u >> w >> mult))
            throw ParseError("expected " + std::to_string(ecount) + " edge lines \"u v mult\"");
        if (u < 1 || u > v || w < 1 || w > v)
            throw ParseError("edge endpoint out of range (vertex ids are 1-based)");
        edges.push_back({static_cast<std::size_t>(u - 1), static_cast<std::size_t>(w - 1),
                         Int(mult)});
    }
    std::string trailing;
    if (in >> trailing) throw ParseError("unexpected trailing token \"" + trailing + "\"");
    if (sink < 0 || sink > v) throw ParseError("sink out of range (0 means none)");
    std::optional<std::size_t> s;
    if (sink > 0) s = static_cast<std::size_t>(sink - 1);
    return DirectedMultigraph(static_cast<std::size_t>(v), std::move(edges), s);
}

} // namespace

DirectedMultigraph parse_graph(std::string_view text) {
    std::size_t k = text.find_first_not_of(" \t\r\n");
    if (k == std::string_view::npos) throw ParseError("empty graph input");
    if (text[k] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON in graph input");
        return graph_from_json(j);
    }
    return graph_from_text(text);
}

} // namespace chipfire
