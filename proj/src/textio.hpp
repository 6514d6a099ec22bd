#pragma once

#include <string>
#include <vector>

#include "matgf.hpp"

namespace ffgroup {

/// "1,1,1" = 1 + X + X^2: comma-separated element codes, low-degree-first.
std::string poly_text(const Poly& f);

/// Human form "X^2+X+1"; high degree first, coefficient 1 omitted.
std::string poly_pretty(const Poly& f);

/// Accepts both the comma form and the pretty form (with '-' meaning a negated
/// coefficient).
Poly parse_poly(const FieldPtr& ctx, const std::string& text);

/// n lines of n space-separated element codes, row-major.
std::string mat_text(const Mat& m);
Mat parse_mat(const FieldPtr& ctx, unsigned n, const std::string& text);

/// Generator file: one matrix per block, blocks separated by blank lines,
/// '#' starts a comment. Throws ParseError with a line diagnostic.
std::vector<Mat> parse_generator_file(const FieldPtr& ctx, unsigned n, const std::string& text);

/// Field descriptor "p^k", a plain prime power, or a prime.
std::pair<std::uint64_t, unsigned> parse_field_descriptor(const std::string& text);

}  // namespace ffgroup
