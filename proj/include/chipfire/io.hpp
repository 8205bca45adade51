#ifndef CHIPFIRE_IO_HPP
#define CHIPFIRE_IO_HPP

#include <chipfire/matrix.hpp>
#include <chipfire/numeric.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace chipfire {

// Matrix text format: line 1 is n, then n lines of n space-separated
// integers. JSON alternative: {"n": int, "rows": [[int, ...], ...]}.
// parse_matrix sniffs the form from the first non-space character.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix_text(const IntMatrix& m);
nlohmann::json matrix_to_json(const IntMatrix& m);

// Configuration text format: one line of space-separated integers.
IntVec parse_configuration(std::string_view text);
std::string format_configuration(const IntVec& v);

// JSON value for one exact integer: a number while it fits 53 bits, a
// decimal string beyond that.
nlohmann::json int_to_json(const Int& x);
nlohmann::json vec_to_json(const IntVec& v);
nlohmann::json ratvec_to_json(const RatVec& v); // entries as "p/q" strings
Int int_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);

} // namespace chipfire

#endif
