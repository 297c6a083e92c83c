#include "gfactor/table_io.hpp"

#include "gfactor/errors.hpp"
#include "gfactor/numeric_text.hpp"

namespace gfactor {

SweepCsvRow project_row(const SweepRow& row) {
  SweepCsvRow out;
  out.t = row.t;
  out.composition = row.composition.formula();
  out.a_angstrom = row.result.params_used.a;
  out.eg_gamma_ev = row.result.params_used.eg_gamma;
  out.eg_min_ev = row.result.params_used.min_gap();
  out.character = std::string(gap_character_name(row.result.character));
  out.g = row.result.g;
  return out;
}

std::string to_csv(const SweepTable& table) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const SweepRow& row : table.rows) {
    const SweepCsvRow fields = project_row(row);
    out += format_double(fields.t);
    out += ',';
    out += fields.composition;
    out += ',';
    out += format_double(fields.a_angstrom);
    out += ',';
    out += format_double(fields.eg_gamma_ev);
    out += ',';
    out += format_double(fields.eg_min_ev);
    out += ',';
    out += fields.character;
    out += ',';
    out += format_double(fields.g);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_field(std::string_view field, const char* column, int line_no) {
  try {
    return parse_double(field);
  } catch (const ParseError&) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid number '" +
                         std::string(field) + "' in column " + column,
                     line_no);
  }
}

}  // namespace

std::vector<SweepCsvRow> parse_sweep_csv(std::string_view text) {
  std::vector<SweepCsvRow> rows;
  int line_no = 0;
  bool header_seen = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (pos <= text.size() && !header_seen)
        throw ParseError("line 1: expected header '" + std::string(kSweepCsvHeader) + "'", 1);
      continue;
    }

    if (!header_seen) {
      if (line != kSweepCsvHeader)
        throw ParseError("line 1: expected header '" + std::string(kSweepCsvHeader) +
                             "', got '" + std::string(line) + "'",
                         1);
      header_seen = true;
      continue;
    }

    const auto fields = split_fields(line);
    if (fields.size() != 7)
      throw ParseError("line " + std::to_string(line_no) + ": expected 7 fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    SweepCsvRow row;
    row.t = parse_field(fields[0], "t", line_no);
    row.composition = std::string(fields[1]);
    row.a_angstrom = parse_field(fields[2], "a_angstrom", line_no);
    row.eg_gamma_ev = parse_field(fields[3], "eg_gamma_ev", line_no);
    row.eg_min_ev = parse_field(fields[4], "eg_min_ev", line_no);
    if (!parse_gap_character(fields[5]))
      throw ParseError("line " + std::to_string(line_no) + ": unknown character '" +
                           std::string(fields[5]) + "'",
                       line_no);
    row.character = std::string(fields[5]);
    row.g = parse_field(fields[6], "g", line_no);
    rows.push_back(std::move(row));
  }
  if (!header_seen)
    throw ParseError("line 1: expected header '" + std::string(kSweepCsvHeader) + "'", 1);
  return rows;
}

}  // namespace gfactor
