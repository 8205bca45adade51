#include <chipfire/io.hpp>

#include <chipfire/errors.hpp>

#include <fstream>
#include <sstream>

namespace chipfire {

namespace {

Int parse_int_token(const std::string& tok) {
    try {
        return Int(tok);
    } catch (const std::exception&) {
        throw ParseError("not an integer: \"" + tok + "\"");
    }
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw ParseError("matrix JSON needs \"n\" and \"rows\"");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::uint64_t>() == 0)
        throw ParseError("\"n\" must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    if (!j["rows"].is_array() || j["rows"].size() != n)
        throw ParseError("\"rows\" must be an array of n rows");
    std::vector<IntVec> rows;
    for (const auto& r : j["rows"]) {
        if (!r.is_array() || r.size() != n) throw ParseError("each row must list n entries");
        IntVec row;
        for (const auto& v : r) row.push_back(int_from_json(v));
        rows.push_back(std::move(row));
    }
    return IntMatrix(rows);
}

} // namespace

IntMatrix parse_matrix(std::string_view text) {
    std::size_t k = text.find_first_not_of(" \t\r\n");
    if (k == std::string_view::npos) throw ParseError("empty matrix input");
    if (text[k] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON in matrix input");
        return matrix_from_json(j);
    }

    std::istringstream in{std::string(text)};
    std::string tok;
    if (!(in >> tok)) throw ParseError("empty matrix input");
    const Int nval = parse_int_token(tok);
    if (nval < 1 || nval > 4096) throw ParseError("matrix size out of range");
    const std::size_t n = static_cast<std::size_t>(nval);

    std::vector<IntVec> rows(n, IntVec());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(in >> tok))
                throw ParseError("expected " + std::to_string(n * n) + " matrix entries");
            rows[i].push_back(parse_int_token(tok));
        }
    if (in >> tok) throw ParseError("unexpected trailing token \"" + tok + "\"");
    return IntMatrix(rows);
}

std::string format_matrix_text(const IntMatrix& m) {
    std::string out = std::to_string(m.size()) + "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"rows", std::move(rows)}};
}

IntVec parse_configuration(std::string_view text) {
    std::istringstream in{std::string(text)};
    IntVec v;
    std::string tok;
    while (in >> tok) v.push_back(parse_int_token(tok));
    if (v.empty()) throw ParseError("empty configuration input");
    return v;
}

std::string format_configuration(const IntVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += to_string(v[i]);
    }
    return out;
}

nlohmann::json int_to_json(const Int& x) {
    static const Int kLimit = Int(1) << 53;
    if (x > -kLimit && x < kLimit) return static_cast<std::int64_t>(x);
    return to_string(x);
}

nlohmann::json vec_to_json(const IntVec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

nlohmann::json ratvec_to_json(const RatVec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rat& q : v) out.push_back(to_string(q));
    return out;
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return parse_int_token(j.get<std::string>());
    throw ParseError("expected an integer (number or decimal string)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace chipfire
