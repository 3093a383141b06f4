#pragma once

#include <string>
#include <vector>

#include "mcdc/expr.hpp"

namespace mcdc {

/// Parse a vector file: one vector per line, values 0/1 separated by spaces
/// or commas, `#` starts a comment, blank lines ignored. Every data line must
/// have exactly n values. Throws BadToken or WrongArity.
std::vector<InputVector> parse_vectors(const std::string& text, int n);

/// Inverse rendering, one space-separated vector per line.
std::string format_vectors(const std::vector<InputVector>& vectors);

} // namespace mcdc
