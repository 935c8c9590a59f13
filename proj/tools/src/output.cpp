#include "output.hpp"

#include <algorithm>

namespace hkfl::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv_row(const std::vector<std::string>& row, std::ostream& out) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
  out << '\n';
}

// Display width in code points, so that "−" counts as one column.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void write_table(const Table& t, std::ostream& out) {
  std::vector<std::size_t> widths(t.header.size(), 0);
  for (std::size_t i = 0; i < t.header.size(); ++i) widths[i] = width(t.header[i]);
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
      widths[i] = std::max(widths[i], width(row[i]));
  auto line = [&](const std::vector<std::string>& row) {
    std::string text;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += "  ";
      text += row[i];
      if (i + 1 < row.size()) text.append(widths[i] - width(row[i]), ' ');
    }
    out << text << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

std::string discrepancy_line(const Discrepancy& d) {
  return d.code + " [" + d.anchor + "] " + d.detail + ": stated " + d.stated + "; observed " +
         d.observed;
}

}  // namespace

Json to_json(const Discrepancy& d) {
  Json j;
  j["code"] = d.code;
  j["anchor"] = d.anchor;
  j["detail"] = d.detail;
  j["stated"] = d.stated;
  j["observed"] = d.observed;
  return j;
}

void render(const std::string& command, const Output& output, Format format, std::ostream& out,
            std::ostream& err) {
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = command;
      doc["parameters"] = output.parameters;
      doc["result"] = output.result;
      doc["discrepancies"] = Json::array();
      for (const auto& d : output.discrepancies) doc["discrepancies"].push_back(to_json(d));
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      if (!output.table.header.empty()) {
        write_csv_row(output.table.header, out);
        for (const auto& row : output.table.rows) write_csv_row(row, out);
      }
      // CSV has a single table; discrepancies go to the diagnostic stream.
      for (const auto& d : output.discrepancies) err << discrepancy_line(d) << '\n';
      break;
    case Format::Table:
      for (const auto& s : output.summary) out << s << '\n';
      if (!output.table.header.empty()) {
        if (!output.summary.empty()) out << '\n';
        write_table(output.table, out);
      }
      if (!output.discrepancies.empty()) out << '\n';
      for (const auto& d : output.discrepancies) out << discrepancy_line(d) << '\n';
      break;
  }
  if (output.exit_code != 0 && !output.failure.empty()) err << "check failed: " << output.failure << '\n';
}

}  // namespace hkfl::cli
