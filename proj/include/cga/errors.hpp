#ifndef CGA_ERRORS_HPP
#define CGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cga {

// A stated hypothesis of an operation is violated (bad input, refused case).
// The CLI maps this to exit code 2.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A check that was expected to hold failed (identity did not reduce to zero,
// candidate matrices are not a representation, ...).  CLI exit code 3.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error in an expression, field spec or file, with a position.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace cga

#endif
