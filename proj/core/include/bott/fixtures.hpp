#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bott/connection.hpp"

namespace bott {

enum class FixtureKind {
  Bracket,
  LeviCivita,
  Bott,
  Curvature,
  Ricci,
  SymRicci,
  LieDerivative,
  System,
  PerturbedConnection,
  PerturbedCurvature,
  PerturbedSymRicci,
  PerturbedLieDerivative,
};

std::string kind_name(FixtureKind k);
std::optional<FixtureKind> kind_from_name(std::string_view s);
bool is_perturbed_delta(FixtureKind k);

// Number of indices in a row key, 0 for system rows.
std::size_t key_length(FixtureKind k);
// Number of '|' separated values per row.
std::size_t value_count(FixtureKind k);

struct FixtureRow {
  std::vector<int> key;  // 1-based, as printed
  std::vector<std::string> values;
  int line = 0;
};

// A printed table, values kept as text so each G4 sign can parse its own copy.
struct Fixture {
  std::string id;
  FixtureKind kind = FixtureKind::Bott;
  std::optional<GroupId> group;  // empty for tables stated for every group
  std::optional<DistId> dist;
  bool perturbed = false;
  std::vector<FixtureRow> rows;
  std::vector<std::string> equal;    // bracket tables only
  std::vector<std::string> nonzero;  // bracket tables only
  std::string source;
  int line = 0;
};

std::vector<Fixture> parse_fixtures(std::string_view text, std::string_view source);

struct ErratumAction {
  enum class Type { Set, Add, Relabel, SetEquation, AddEquation };
  Type type = Type::Set;
  std::vector<int> key;
  std::size_t row = 0;  // 1-based, for Relabel and SetEquation
  std::string value;
};

struct Erratum {
  std::string id;
  std::vector<ErratumAction> actions;
  std::string note;
};

std::map<std::string, Erratum> parse_errata(std::string_view text);

// The table with the corrections applied. Throws when an action does not fit
// the table (missing key for set, existing key for add, row out of range).
Fixture apply_erratum(const Fixture& f, const Erratum& e);

}  // namespace bott
