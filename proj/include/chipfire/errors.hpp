#ifndef CHIPFIRE_ERRORS_HPP
#define CHIPFIRE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chipfire {

// Base class for all engine errors. `code()` is the stable machine-readable
// identifier used by the CLI and the Python layer; the what() string is the
// human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Matrix has no exact inverse.
class SingularError : public Error {
public:
    explicit SingularError(const std::string& message = "matrix is singular")
        : Error("singular", message) {}
};

// Engine construction rejected the matrix; carries the verdict's witness text.
class NotMMatrixError : public Error {
public:
    explicit NotMMatrixError(const std::string& witness)
        : Error("not_m_matrix", "not an M-matrix: " + witness) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& message = "state index out of range")
        : Error("index_out_of_range", message) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& message = "configuration length does not match matrix dimension")
        : Error("dimension_mismatch", message) {}
};

class NegativeInputError : public Error {
public:
    explicit NegativeInputError(const std::string& message = "configuration must be componentwise nonnegative")
        : Error("negative_input", message) {}
};

// Safety valve for stabilization; reaching it means the matrix is not
// avalanche finite or the cap was set too low.
class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& message = "firing cap exceeded")
        : Error("cap_exceeded", message) {}
};

class SearchTooLargeError : public Error {
public:
    explicit SearchTooLargeError(const std::string& message = "search space exceeds the enumeration guard")
        : Error("search_too_large", message) {}
};

class DimensionTooLargeError : public Error {
public:
    explicit DimensionTooLargeError(const std::string& message = "dimension exceeds the subset-enumeration guard")
        : Error("dimension_too_large", message) {}
};

class NoGlobalSinkError : public Error {
public:
    explicit NoGlobalSinkError(const std::string& message = "designated vertex is not a global sink")
        : Error("no_global_sink", message) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse_error", message) {}
};

} // namespace chipfire

#endif
