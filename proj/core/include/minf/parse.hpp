/*
 * parse.hpp
 * ---------
 * Polynomial text front end: parses expressions over x1..xn (aliases
 * x, y, z, w for n <= 4) with integer/rational coefficients and the
 * operators + - * ^ into a SupportSpec with exact coefficients.
 */
#pragma once

#include <string>

#include "minf/monodromy.hpp"

namespace minf {

struct ParseError : std::runtime_error {
    std::size_t position;  // 0-based offset into the source string
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

// Like terms are combined and zero coefficients dropped; the resulting
// spec always carries coefficients.
SupportSpec parse_polynomial(const std::string& text);

}  // namespace minf
