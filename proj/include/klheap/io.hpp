#pragma once

// Text, JSON and CSV renderings shared by the CLI and the tests.

#include <map>
#include <string>
#include <string_view>

#include "klheap/perm.hpp"
#include "klheap/qpoly.hpp"

namespace klheap {

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; throws ParseError otherwise.
Format parse_format(std::string_view name);

/// Quotes the field when it holds a comma, quote or newline.
std::string csv_field(std::string_view field);

/// "1 2" for 1+2q; "" for zero. Used inside the CSV coeffs column.
std::string coeff_list(const QPoly& p);

using PolyTable = std::map<Permutation, QPoly, ShortLex>;

/// Text: one "x<TAB>poly" line per entry. JSON: an array of
/// {"x": one-line, "poly": {"coeffs": [...]}}. CSV: header "x,coeffs".
/// Every form ends with a newline.
std::string format_poly_table(const PolyTable& table, Format format);

/// {"v_exps":{"-3":1,"1":2}} for v^-3 + 2v; exponents ascending.
std::string half_laurent_json(const HalfLaurent& h);

}  // namespace klheap
