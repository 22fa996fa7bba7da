#include "amenity/report.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace amenity {

namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  if (v.is_number_float()) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  return v.dump();
}

// stage / label / check lead; the rest is the union over all rows in json's
// key order, so rows with extra fields still get columns
std::vector<std::string> column_order(const Json& rows) {
  std::vector<std::string> out;
  auto add = [&](const std::string& k) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  };
  for (const char* k : {"stage", "label", "check"})
    for (const auto& row : rows)
      if (row.contains(k)) {
        add(k);
        break;
      }
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (it.key() != "stage" && it.key() != "label" && it.key() != "check")
        add(it.key());
  return out;
}

}  // namespace

std::string emit_structured(const Json& report) { return report.dump(2) + "\n"; }

bool report_certified(const Json& report) {
  return report.value("certified", false);
}

std::string render_tabular(const Json& report) {
  std::string out;
  out += report.value("name", "");
  out += "  [" + report.value("suite", std::string("?")) + "]\n";

  const Json& rows = report.at("rows");
  if (!rows.empty()) {
    auto cols = column_order(rows);
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> text;
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        line.push_back(row.contains(cols[i]) ? cell_text(row.at(cols[i])) : "");
        width[i] = std::max(width[i], line.back().size());
      }
      text.push_back(std::move(line));
    }
    auto pad = [](const std::string& s, std::size_t w) {
      return s + std::string(w - s.size(), ' ');
    };
    for (std::size_t i = 0; i < cols.size(); ++i)
      out += pad(cols[i], width[i]) + (i + 1 < cols.size() ? "  " : "");
    out += "\n";
    for (const auto& line : text) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        out += pad(line[i], width[i]) + (i + 1 < cols.size() ? "  " : "");
      out += "\n";
    }
  }

  if (report.contains("stage_max")) {
    out += "stage max:";
    for (const auto& v : report.at("stage_max")) out += " " + cell_text(v);
    out += "\n";
  }
  out += std::string("certified: ") +
         (report.value("certified", false) ? "yes" : "no") + "\n";
  for (const auto& n : report.at("notes"))
    out += "note: " + n.get<std::string>() + "\n";
  return out;
}

}  // namespace amenity
