#include "klheap/io.hpp"

#include "json.hpp"
#include "klheap/error.hpp"

namespace klheap {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw ParseError("unknown format '" + std::string(name) + "' (expected text, json or csv)", 0);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string coeff_list(const QPoly& p) {
  std::string out;
  for (Coeff c : p.coeffs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
  }
  return out;
}

std::string format_poly_table(const PolyTable& table, Format format) {
  std::string out;
  switch (format) {
    case Format::Text:
      for (const auto& [x, p] : table) out += x.to_string() + "\t" + p.to_string() + "\n";
      return out;
    case Format::Csv:
      out = "x,coeffs\n";
      for (const auto& [x, p] : table) out += csv_field(x.to_string()) + "," + csv_field(coeff_list(p)) + "\n";
      return out;
    case Format::Json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& [x, p] : table) {
        std::vector<Coeff> coeffs(p.coeffs().begin(), p.coeffs().end());
        doc.push_back({{"x", x.to_string()}, {"poly", {{"coeffs", coeffs}}}});
      }
      return doc.dump() + "\n";
    }
  }
  return out;
}

std::string half_laurent_json(const HalfLaurent& h) {
  nlohmann::ordered_json exps = nlohmann::ordered_json::object();
  if (!h.is_zero()) {
    for (int e = h.low_exponent(); e <= h.high_exponent(); ++e) {
      if (h.coeff_at(e) != 0) exps[std::to_string(e)] = h.coeff_at(e);
    }
  }
  return nlohmann::ordered_json{{"v_exps", exps}}.dump();
}

}  // namespace klheap
