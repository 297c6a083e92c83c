#include "gfactor/database.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "gfactor/numeric_text.hpp"

namespace gfactor {

std::string_view param_key_name(ParamKey key) noexcept {
  switch (key) {
    case ParamKey::EgGamma: return "eg_gamma";
    case ParamKey::EgX: return "eg_x";
    case ParamKey::EgL: return "eg_l";
    case ParamKey::DeltaSo: return "delta_so";
    case ParamKey::Ep: return "e_p";
    case ParamKey::LatticeConstant: return "a";
  }
  return "?";
}

std::optional<ParamKey> parse_param_key(std::string_view name) noexcept {
  for (ParamKey key : {ParamKey::EgGamma, ParamKey::EgX, ParamKey::EgL, ParamKey::DeltaSo,
                       ParamKey::Ep, ParamKey::LatticeConstant})
    if (param_key_name(key) == name) return key;
  return std::nullopt;
}

double BinaryCompound::value(ParamKey key) const noexcept {
  switch (key) {
    case ParamKey::EgGamma: return eg_gamma;
    case ParamKey::EgX: return eg_x;
    case ParamKey::EgL: return eg_l;
    case ParamKey::DeltaSo: return delta_so;
    case ParamKey::Ep: return e_p;
    case ParamKey::LatticeConstant: return a;
  }
  return 0;
}

namespace {

std::string line_prefix(int line_no) { return "line " + std::to_string(line_no) + ": "; }

/// Whitespace-separated tokens; a double quote suspends splitting until the
/// matching quote so source="..." stays one token.
std::vector<std::string> tokenize_line(std::string_view line, int line_no) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::string token;
    bool quoted = false;
    while (i < line.size() && (quoted || !std::isspace(static_cast<unsigned char>(line[i])))) {
      if (line[i] == '"') quoted = !quoted;
      token.push_back(line[i]);
      ++i;
    }
    if (quoted) throw ParseError(line_prefix(line_no) + "unterminated quote", line_no);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

struct KeyValue {
  std::string key;
  std::string value;
};

KeyValue split_key_value(const std::string& token, int line_no) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ParseError(line_prefix(line_no) + "expected key=value, got '" + token + "'", line_no);
  return {token.substr(0, eq), token.substr(eq + 1)};
}

std::string unquote(const std::string& value, int line_no) {
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
    const std::string inner = value.substr(1, value.size() - 2);
    if (inner.find('"') != std::string::npos)
      throw ParseError(line_prefix(line_no) + "embedded quote in string value", line_no);
    return inner;
  }
  if (value.find('"') != std::string::npos)
    throw ParseError(line_prefix(line_no) + "malformed quoted value '" + value + "'", line_no);
  return value;
}

double parse_number(const std::string& key, const std::string& value, int line_no) {
  try {
    return parse_double(value);
  } catch (const ParseError&) {
    throw ParseError(line_prefix(line_no) + "invalid number '" + value + "' for " + key, line_no);
  }
}

BinaryCompound parse_compound_record(const std::vector<std::string>& tokens, int line_no) {
  if (tokens.size() < 2)
    throw ParseError(line_prefix(line_no) + "compound record needs a name", line_no);
  BinaryCompound comp;
  comp.name = tokens[1];

  std::set<std::string> seen;
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    const KeyValue kv = split_key_value(tokens[i], line_no);
    if (!seen.insert(kv.key).second)
      throw ParseError(line_prefix(line_no) + "duplicate key '" + kv.key + "' in compound '" +
                           comp.name + "'",
                       line_no);
    if (kv.key == "source") {
      comp.source_note = unquote(kv.value, line_no);
    } else if (kv.key == "a") {
      comp.a = parse_number(kv.key, kv.value, line_no);
    } else if (kv.key == "eg_gamma") {
      comp.eg_gamma = parse_number(kv.key, kv.value, line_no);
    } else if (kv.key == "eg_x") {
      comp.eg_x = parse_number(kv.key, kv.value, line_no);
    } else if (kv.key == "eg_l") {
      comp.eg_l = parse_number(kv.key, kv.value, line_no);
    } else if (kv.key == "delta_so") {
      comp.delta_so = parse_number(kv.key, kv.value, line_no);
    } else if (kv.key == "e_p") {
      comp.e_p = parse_number(kv.key, kv.value, line_no);
    } else {
      throw ParseError(line_prefix(line_no) + "unknown key '" + kv.key + "' in compound '" +
                           comp.name + "'",
                       line_no);
    }
  }
  for (const char* required : {"a", "eg_gamma", "eg_x", "eg_l", "delta_so", "e_p", "source"})
    if (!seen.count(required))
      throw ParseError(line_prefix(line_no) + "compound '" + comp.name + "' is missing " + required,
                       line_no);
  return comp;
}

BowingRecord parse_bowing_record(const std::vector<std::string>& tokens, int line_no) {
  if (tokens.size() < 3)
    throw ParseError(line_prefix(line_no) + "bowing record needs 'A/B' and a parameter id",
                     line_no);
  BowingRecord bow;

  const std::string& pair = tokens[1];
  const auto slash = pair.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= pair.size() ||
      pair.find('/', slash + 1) != std::string::npos)
    throw ParseError(line_prefix(line_no) + "bowing edge must be 'BinaryA/BinaryB', got '" + pair +
                         "'",
                     line_no);
  bow.binary_a = pair.substr(0, slash);
  bow.binary_b = pair.substr(slash + 1);

  const auto key = parse_param_key(tokens[2]);
  if (!key)
    throw ParseError(line_prefix(line_no) + "unknown parameter id '" + tokens[2] + "'", line_no);
  if (*key == ParamKey::LatticeConstant)
    throw ParseError(line_prefix(line_no) +
                         "the lattice constant never bows; remove the '" + pair + " a' entry",
                     line_no);
  bow.parameter = *key;

  std::set<std::string> seen;
  for (std::size_t i = 3; i < tokens.size(); ++i) {
    const KeyValue kv = split_key_value(tokens[i], line_no);
    if (!seen.insert(kv.key).second)
      throw ParseError(line_prefix(line_no) + "duplicate key '" + kv.key + "'", line_no);
    if (kv.key == "b") {
      bow.b = parse_number(kv.key, kv.value, line_no);
    } else if (kv.key == "source") {
      bow.source_note = unquote(kv.value, line_no);
    } else {
      throw ParseError(line_prefix(line_no) + "unknown key '" + kv.key + "' in bowing record",
                       line_no);
    }
  }
  for (const char* required : {"b", "source"})
    if (!seen.count(required))
      throw ParseError(line_prefix(line_no) + "bowing record is missing " + required, line_no);
  return bow;
}

/// Elements implied by a compound name, when the name is a pure binary
/// formula like "GaAs".
std::optional<std::pair<Element, Element>> binary_elements(const std::string& name) {
  try {
    const Composition comp = parse_composition(name);
    if (!comp.is_pure_binary()) return std::nullopt;
    return std::make_pair(comp.cations().front().element, comp.anions().front().element);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

void require_positive(std::vector<Violation>& out, const std::string& subject, const char* field,
                      double value) {
  if (!(value > 0.0) || !std::isfinite(value))
    out.push_back({subject, field, "must be positive, got " + format_double(value)});
}

void require_non_negative(std::vector<Violation>& out, const std::string& subject,
                          const char* field, double value) {
  if (!(value >= 0.0) || !std::isfinite(value))
    out.push_back({subject, field, "must be non-negative, got " + format_double(value)});
}

}  // namespace

DatabaseRecords parse_database(std::string_view content) {
  DatabaseRecords records;
  bool temperature_seen = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const auto nl = content.find('\n', pos);
    std::string_view line =
        content.substr(pos, nl == std::string_view::npos ? content.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first >= line.size() || line[first] == '#') continue;

    const auto tokens = tokenize_line(line, line_no);
    if (tokens[0] == "compound") {
      records.compounds.push_back(parse_compound_record(tokens, line_no));
    } else if (tokens[0] == "bowing") {
      records.bowings.push_back(parse_bowing_record(tokens, line_no));
    } else if (tokens[0] == "temperature") {
      if (tokens.size() != 2)
        throw ParseError(line_prefix(line_no) + "temperature record takes one quoted value",
                         line_no);
      if (temperature_seen)
        throw ParseError(line_prefix(line_no) + "duplicate temperature record", line_no);
      records.temperature_note = unquote(tokens[1], line_no);
      temperature_seen = true;
    } else {
      throw ParseError(line_prefix(line_no) + "unknown record type '" + tokens[0] + "'", line_no);
    }
  }
  return records;
}

std::vector<Violation> validate_records(const DatabaseRecords& records) {
  std::vector<Violation> violations;

  std::map<std::string, std::pair<Element, Element>> valid_binaries;
  std::set<std::string> names;
  std::map<std::pair<Element, Element>, std::string> pairs;

  for (const auto& comp : records.compounds) {
    if (!names.insert(comp.name).second) {
      violations.push_back({comp.name, "name", "duplicate compound name"});
      continue;
    }
    const auto elements = binary_elements(comp.name);
    if (!elements) {
      violations.push_back({comp.name, "name", "must be a pure binary formula such as 'GaAs'"});
    } else {
      const auto [it, inserted] = pairs.emplace(*elements, comp.name);
      if (!inserted)
        violations.push_back(
            {comp.name, "name", "same cation/anion pair as compound '" + it->second + "'"});
      else
        valid_binaries.emplace(comp.name, *elements);
    }
    require_positive(violations, comp.name, "a", comp.a);
    require_positive(violations, comp.name, "eg_gamma", comp.eg_gamma);
    require_positive(violations, comp.name, "eg_x", comp.eg_x);
    require_positive(violations, comp.name, "eg_l", comp.eg_l);
    require_non_negative(violations, comp.name, "delta_so", comp.delta_so);
    require_non_negative(violations, comp.name, "e_p", comp.e_p);
    if (comp.source_note.empty())
      violations.push_back({comp.name, "source", "every record must cite its source"});
  }

  std::set<std::tuple<std::string, std::string, ParamKey>> seen_edges;
  for (const auto& bow : records.bowings) {
    const std::string subject = bow.binary_a + "/" + bow.binary_b;
    if (bow.parameter == ParamKey::LatticeConstant) {
      violations.push_back({subject, "parameter", "the lattice constant never bows"});
      continue;
    }
    if (!std::isfinite(bow.b))
      violations.push_back({subject, "b", "must be finite"});
    if (bow.source_note.empty())
      violations.push_back({subject, "source", "every record must cite its source"});

    const auto a_it = valid_binaries.find(bow.binary_a);
    const auto b_it = valid_binaries.find(bow.binary_b);
    if (a_it == valid_binaries.end()) {
      violations.push_back({subject, "edge", "references missing compound '" + bow.binary_a + "'"});
      continue;
    }
    if (b_it == valid_binaries.end()) {
      violations.push_back({subject, "edge", "references missing compound '" + bow.binary_b + "'"});
      continue;
    }
    if (bow.binary_a == bow.binary_b) {
      violations.push_back({subject, "edge", "endpoints are the same compound"});
      continue;
    }
    const bool share_cation = a_it->second.first == b_it->second.first;
    const bool share_anion = a_it->second.second == b_it->second.second;
    if (share_cation == share_anion) {
      violations.push_back(
          {subject, "edge", "endpoints must share exactly one sublattice element"});
      continue;
    }
    auto edge = std::make_tuple(std::min(bow.binary_a, bow.binary_b),
                                std::max(bow.binary_a, bow.binary_b), bow.parameter);
    if (!seen_edges.insert(edge).second)
      violations.push_back({subject, "edge", "duplicate bowing entry for " +
                                                 std::string(param_key_name(bow.parameter))});
  }
  return violations;
}

MaterialsDatabase MaterialsDatabase::from_records(DatabaseRecords records) {
  auto violations = validate_records(records);
  if (!violations.empty()) {
    std::string message = "database validation failed:";
    for (const auto& v : violations) message += "\n  - " + v.to_string();
    throw ValidationError(message, std::move(violations));
  }

  std::sort(records.compounds.begin(), records.compounds.end(),
            [](const BinaryCompound& a, const BinaryCompound& b) { return a.name < b.name; });
  for (auto& bow : records.bowings)
    if (bow.binary_b < bow.binary_a) std::swap(bow.binary_a, bow.binary_b);
  std::sort(records.bowings.begin(), records.bowings.end(),
            [](const BowingRecord& a, const BowingRecord& b) {
              return std::tie(a.binary_a, a.binary_b, a.parameter) <
                     std::tie(b.binary_a, b.binary_b, b.parameter);
            });

  MaterialsDatabase db;
  db.records_ = std::move(records);
  for (std::size_t i = 0; i < db.records_.compounds.size(); ++i) {
    auto& comp = db.records_.compounds[i];
    const auto elements = binary_elements(comp.name);
    comp.cation = elements->first;
    comp.anion = elements->second;
    db.by_name_.emplace(comp.name, i);
    db.by_pair_.emplace(*elements, i);
  }
  for (const auto& bow : db.records_.bowings)
    db.bowings_.emplace(std::make_tuple(bow.binary_a, bow.binary_b, bow.parameter), bow.b);
  return db;
}

BinaryCompound MaterialsDatabase::get_binary(std::string_view name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw LookupError("unknown compound '" + std::string(name) + "'");
  return records_.compounds[it->second];
}

bool MaterialsDatabase::has_binary(std::string_view name) const noexcept {
  return by_name_.find(name) != by_name_.end();
}

const BinaryCompound& MaterialsDatabase::binary(Element cation, Element anion) const {
  const BinaryCompound* comp = find_binary(cation, anion);
  if (!comp)
    throw LookupError("no parameter record for binary '" + std::string(element_symbol(cation)) +
                      std::string(element_symbol(anion)) + "'");
  return *comp;
}

const BinaryCompound* MaterialsDatabase::find_binary(Element cation, Element anion) const noexcept {
  const auto it = by_pair_.find({cation, anion});
  return it == by_pair_.end() ? nullptr : &records_.compounds[it->second];
}

double MaterialsDatabase::bowing(std::string_view binary_a, std::string_view binary_b,
                                 ParamKey key) const noexcept {
  if (key == ParamKey::LatticeConstant) return 0.0;
  std::string a(binary_a);
  std::string b(binary_b);
  if (b < a) std::swap(a, b);
  const auto it = bowings_.find(std::make_tuple(a, b, key));
  return it == bowings_.end() ? 0.0 : it->second;
}

std::vector<std::string> MaterialsDatabase::compound_names() const {
  std::vector<std::string> names;
  names.reserve(records_.compounds.size());
  for (const auto& comp : records_.compounds) names.push_back(comp.name);
  return names;
}

MaterialsDatabase load_database(std::string_view content) {
  return MaterialsDatabase::from_records(parse_database(content));
}

MaterialsDatabase load_database_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open parameter database '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return load_database(buffer.str());
  } catch (const ParseError& err) {
    throw ParseError(path.string() + ": " + err.what(), err.line());
  }
}

std::vector<Violation> validate_database(const MaterialsDatabase& db) {
  return validate_records(db.records());
}

std::string serialize_database(const MaterialsDatabase& db) {
  const DatabaseRecords& records = db.records();
  std::string out = "# iii-v parameter database (canonical form)\n";
  if (!records.temperature_note.empty())
    out += "temperature \"" + records.temperature_note + "\"\n";
  for (const auto& comp : records.compounds) {
    out += "compound " + comp.name;
    out += " a=" + format_double(comp.a);
    out += " eg_gamma=" + format_double(comp.eg_gamma);
    out += " eg_x=" + format_double(comp.eg_x);
    out += " eg_l=" + format_double(comp.eg_l);
    out += " delta_so=" + format_double(comp.delta_so);
    out += " e_p=" + format_double(comp.e_p);
    out += " source=\"" + comp.source_note + "\"\n";
  }
  for (const auto& bow : records.bowings) {
    out += "bowing " + bow.binary_a + "/" + bow.binary_b + " ";
    out += param_key_name(bow.parameter);
    out += " b=" + format_double(bow.b);
    out += " source=\"" + bow.source_note + "\"\n";
  }
  return out;
}

}  // namespace gfactor
