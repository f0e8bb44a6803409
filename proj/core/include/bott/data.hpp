#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bott/fixtures.hpp"
#include "bott/theorems.hpp"

namespace bott {

namespace data::detail {
struct NamedText {
  const char* name;
  const char* text;
};
const std::vector<NamedText>& embedded_fixture_files();
std::string_view embedded_errata();
std::string_view embedded_theorems();
}  // namespace data::detail

// Printed tables, their corrections and the theorem claims.
struct Registry {
  std::vector<Fixture> fixtures;  // in file order
  std::map<std::string, Erratum> errata;
  std::vector<TheoremRecord> theorems;

  const Fixture* fixture(std::string_view id) const;
  const TheoremRecord* theorem(std::string_view id) const;
  const Erratum* erratum(std::string_view id) const;
};

// The copy compiled into the library.
const Registry& builtin_registry();

// Reads fixtures/*.txt, errata.txt and theorems.txt from a directory laid out
// like the repository's data/.
Registry load_registry(const std::filesystem::path& dir);

Registry make_registry(const std::vector<std::pair<std::string, std::string>>& fixture_files,
                       std::string_view errata, std::string_view theorems);

}  // namespace bott
