#pragma once

#include <stdexcept>
#include <string>

#include "opg/presentation.hpp"

namespace opg {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + what),
        line(line), col(col) {}
};

// Presentation file grammar:
//   prime 3
//   precision 4                      (optional, default 4)
//   generators x y0 y1 y2
//   relator y0^p * [y0, x^-1] * [y1, y2]
//   orientation x = 1-p              (default 1 per generator)
// '#' starts a comment. Orientation values and exponents are integer
// expressions in the symbol p, evaluated exactly and reduced mod p^prec.
// The parsed object is validated; precision_override replaces the file's
// precision before orientation values are evaluated.
OrientedPresentation parse_presentation(const std::string& text,
                                        int precision_override = 0);

OrientedPresentation parse_presentation_file(const std::string& path,
                                             int precision_override = 0);

// Serialization that round-trips through parse_presentation.
std::string print_presentation(const OrientedPresentation& op);

// An H^1 class as a linear combination of generator duals, e.g. "x + 2*y0".
FpVec parse_h1_class(const std::string& text, const Presentation& pres);

// Evaluates an integer expression in the symbol p (the orientation-value
// grammar) and reduces mod p^prec.
Padic eval_p_expression(const std::string& text, int64_t p, int prec);

} // namespace opg
