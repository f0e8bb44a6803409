#include "bott/data.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "bott/parse.hpp"

namespace bott {

const Fixture* Registry::fixture(std::string_view id) const {
  auto it = std::find_if(fixtures.begin(), fixtures.end(), [&](const Fixture& f) { return f.id == id; });
  return it == fixtures.end() ? nullptr : &*it;
}

const TheoremRecord* Registry::theorem(std::string_view id) const {
  auto it = std::find_if(theorems.begin(), theorems.end(), [&](const TheoremRecord& t) { return t.id == id; });
  return it == theorems.end() ? nullptr : &*it;
}

const Erratum* Registry::erratum(std::string_view id) const {
  auto it = errata.find(std::string(id));
  return it == errata.end() ? nullptr : &it->second;
}

Registry make_registry(const std::vector<std::pair<std::string, std::string>>& fixture_files,
                       std::string_view errata, std::string_view theorems) {
  Registry r;
  std::set<std::string> ids;
  for (auto& [name, text] : fixture_files)
    for (auto& f : parse_fixtures(text, name)) {
      if (!ids.insert(f.id).second) throw ParseError(name + ": fixture " + f.id + " defined twice");
      r.fixtures.push_back(std::move(f));
    }
  r.errata = parse_errata(errata);
  for (auto& [id, e] : r.errata)
    if (!ids.count(id)) throw ParseError("erratum for unknown fixture " + id);
  r.theorems = parse_theorems(theorems);
  std::set<std::string> tids;
  for (auto& t : r.theorems)
    if (!tids.insert(t.id).second) throw ParseError("theorem " + t.id + " defined twice");
  return r;
}

const Registry& builtin_registry() {
  static const Registry r = [] {
    std::vector<std::pair<std::string, std::string>> files;
    for (auto& f : data::detail::embedded_fixture_files()) files.emplace_back(f.name, f.text);
    return make_registry(files, data::detail::embedded_errata(), data::detail::embedded_theorems());
  }();
  return r;
}

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Registry load_registry(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (auto& e : std::filesystem::directory_iterator(dir / "fixtures"))
    if (e.path().extension() == ".txt") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<std::pair<std::string, std::string>> files;
  for (auto& p : paths) files.emplace_back(p.filename().string(), slurp(p));
  return make_registry(files, slurp(dir / "errata.txt"), slurp(dir / "theorems.txt"));
}

}  // namespace bott
