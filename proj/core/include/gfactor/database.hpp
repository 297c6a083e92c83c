#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "gfactor/composition.hpp"
#include "gfactor/errors.hpp"

namespace gfactor {

/// Interpolatable material parameters. LatticeConstant is a valid evaluation
/// target but can never carry a bowing entry: the lattice constant always
/// interpolates linearly (Vegard's law).
enum class ParamKey { EgGamma, EgX, EgL, DeltaSo, Ep, LatticeConstant };

std::string_view param_key_name(ParamKey key) noexcept;
std::optional<ParamKey> parse_param_key(std::string_view name) noexcept;

/// Low-temperature parameter record for one III-V binary compound.
struct BinaryCompound {
  std::string name;
  Element cation{};
  Element anion{};
  double a = 0;         // lattice constant, Angstrom
  double eg_gamma = 0;  // direct gap at the Gamma point, eV
  double eg_x = 0;      // X-valley gap, eV
  double eg_l = 0;      // L-valley gap, eV
  double delta_so = 0;  // spin-orbit splitting, eV
  double e_p = 0;       // interband momentum-matrix energy, eV
  std::string source_note;

  double value(ParamKey key) const noexcept;

  friend bool operator==(const BinaryCompound&, const BinaryCompound&) = default;
};

/// One ternary bowing coefficient: along the edge between the two binaries
/// the parameter deviates from linearity by -x(1-x)*b.
struct BowingRecord {
  std::string binary_a;
  std::string binary_b;
  ParamKey parameter = ParamKey::EgGamma;
  double b = 0;  // eV
  std::string source_note;

  friend bool operator==(const BowingRecord&, const BowingRecord&) = default;
};

/// Parsed database content, prior to validation. Tests may build these
/// directly to exercise individual invariants.
struct DatabaseRecords {
  std::vector<BinaryCompound> compounds;
  std::vector<BowingRecord> bowings;
  std::string temperature_note;

  friend bool operator==(const DatabaseRecords&, const DatabaseRecords&) = default;
};

/// Syntactic parse of the line-oriented parameter file format. Performs no
/// cross-record validation; see validate_records().
DatabaseRecords parse_database(std::string_view content);

/// Every invariant violation in the records; empty iff they form a valid
/// database.
std::vector<Violation> validate_records(const DatabaseRecords& records);

/// Immutable, validated materials database. Constructed exclusively through
/// from_records()/load_database(); safe to share across threads.
class MaterialsDatabase {
public:
  /// Validates, canonicalizes ordering, and freezes the records. Throws
  /// ValidationError listing every violation when validation fails.
  static MaterialsDatabase from_records(DatabaseRecords records);

  /// Record for a compound name; the result is a value copy. Throws
  /// LookupError for unknown names.
  BinaryCompound get_binary(std::string_view name) const;
  bool has_binary(std::string_view name) const noexcept;

  /// Record for a (cation, anion) pair; throws LookupError when absent.
  const BinaryCompound& binary(Element cation, Element anion) const;
  const BinaryCompound* find_binary(Element cation, Element anion) const noexcept;

  /// Stored bowing coefficient for the ternary edge between two binaries, or
  /// 0 when no entry exists (linear interpolation is the default). The
  /// binary order does not matter. Lattice-constant queries always return 0.
  double bowing(std::string_view binary_a, std::string_view binary_b, ParamKey key) const noexcept;

  std::size_t compound_count() const noexcept { return records_.compounds.size(); }
  std::vector<std::string> compound_names() const;  // sorted
  const std::string& temperature_note() const noexcept { return records_.temperature_note; }
  const DatabaseRecords& records() const noexcept { return records_; }

  friend bool operator==(const MaterialsDatabase& lhs, const MaterialsDatabase& rhs) {
    return lhs.records_ == rhs.records_;
  }

private:
  MaterialsDatabase() = default;

  DatabaseRecords records_;  // canonical order after from_records()
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::map<std::pair<Element, Element>, std::size_t> by_pair_;
  std::map<std::tuple<std::string, std::string, ParamKey>, double, std::less<>> bowings_;
};

MaterialsDatabase load_database(std::string_view content);
MaterialsDatabase load_database_file(const std::filesystem::path& path);

/// Re-checks every invariant of an already constructed database. Databases
/// returned by load_database() always validate clean.
std::vector<Violation> validate_database(const MaterialsDatabase& db);

/// Canonical text form. Loading the result reproduces the database bit for
/// bit, and serializing again yields byte-identical text.
std::string serialize_database(const MaterialsDatabase& db);

}  // namespace gfactor
