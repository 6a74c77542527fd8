#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbu/geometry.hpp"
#include "hbu/potential.hpp"
#include "hbu/real_set.hpp"
#include "hbu/spectral.hpp"

/// Text grammars shared by the CLI and config files. Every failure throws
/// ParseError naming the offending input.
namespace hbu::parse {

/// Whole-string decimal number; `inf` and `-inf` are accepted.
double number(std::string_view s);
int integer(std::string_view s);

/// `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`.
std::complex<double> complex_number(std::string_view s);

/// Comma-separated complex numbers, e.g. `1,0.5+0.1i,-i`.
std::vector<std::complex<double>> complex_list(std::string_view s);

/// Two whitespace- or comma-separated columns, `#` comments.
std::vector<std::pair<double, double>> table_file(const std::string& path);

/// `zero`, `linear:<c>`, `cubic:<c>`, `power:<gamma>`, `custom:<path>`.
geometry::ApproachFunction approach_function(std::string_view s);

/// `const:<v>`, `pow:<p>`, `exp:<p>`, `custom:<path>`.
potential::Majorant majorant(std::string_view s);

/// `[a,b]` atoms joined by `u`, e.g. `[-inf,0]u[2,3.5]`; `empty` for the
/// empty set.
opgroup::ClosedRealSet real_set(std::string_view s);

/// `jordan:[(height,size),...]`.
std::vector<opgroup::JordanBlockSpec> jordan_spec(std::string_view s);

/// Matrix text with keys n, re, im (row-major, n*n values each).
opgroup::CMatrix matrix_text(std::string_view text);
opgroup::CMatrix matrix_file(const std::string& path);

/// A `jordan:` literal or a matrix file path.
opgroup::MatrixGenerator matrix_source(std::string_view s);

}  // namespace hbu::parse
