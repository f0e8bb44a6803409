#include "bott/fixtures.hpp"

#include <algorithm>

#include "bott/parse.hpp"
#include "bott/text.hpp"

namespace bott {

namespace {

struct KindInfo {
  FixtureKind kind;
  const char* name;
  std::size_t keys;
  std::size_t values;
};

constexpr std::array<KindInfo, 12> kKinds = {{
    {FixtureKind::Bracket, "bracket", 2, 3},
    {FixtureKind::LeviCivita, "levi-civita", 2, 3},
    {FixtureKind::Bott, "bott", 2, 3},
    {FixtureKind::Curvature, "curvature", 3, 3},
    {FixtureKind::Ricci, "ricci", 2, 1},
    {FixtureKind::SymRicci, "sym-ricci", 2, 1},
    {FixtureKind::LieDerivative, "lie-derivative", 2, 1},
    {FixtureKind::System, "system", 0, 1},
    {FixtureKind::PerturbedConnection, "perturbed-connection", 2, 3},
    {FixtureKind::PerturbedCurvature, "perturbed-curvature", 3, 3},
    {FixtureKind::PerturbedSymRicci, "perturbed-sym-ricci", 2, 1},
    {FixtureKind::PerturbedLieDerivative, "perturbed-lie-derivative", 2, 1},
}};

const KindInfo& info(FixtureKind k) {
  return *std::find_if(kKinds.begin(), kKinds.end(), [&](const KindInfo& i) { return i.kind == k; });
}

ParseError error_at(std::string_view source, int line, const std::string& what) {
  return ParseError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> parse_values(std::string_view v, std::size_t n) {
  std::vector<std::string> out;
  for (auto part : split(v, '|')) out.emplace_back(part);
  if (out.size() != n)
    throw ParseError("expected " + std::to_string(n) + " value(s), got " + std::to_string(out.size()));
  for (auto& s : out)
    if (s.empty()) throw ParseError("empty value");
  return out;
}

}  // namespace

std::string kind_name(FixtureKind k) { return info(k).name; }

std::optional<FixtureKind> kind_from_name(std::string_view s) {
  for (auto& i : kKinds)
    if (s == i.name) return i.kind;
  return std::nullopt;
}

bool is_perturbed_delta(FixtureKind k) {
  return k == FixtureKind::PerturbedConnection || k == FixtureKind::PerturbedCurvature ||
         k == FixtureKind::PerturbedSymRicci || k == FixtureKind::PerturbedLieDerivative;
}

std::size_t key_length(FixtureKind k) { return info(k).keys; }
std::size_t value_count(FixtureKind k) { return info(k).values; }

std::vector<Fixture> parse_fixtures(std::string_view text, std::string_view source) {
  std::vector<Fixture> out;
  std::optional<Fixture> cur;
  int lineno = 0;
  for (auto raw : split_lines(text)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!cur) {
      auto w = split_words(line);
      if (w.size() != 6 || w[0] != "fixture")
        throw error_at(source, lineno, "expected 'fixture <id> <kind> <group> <dist> <plain|perturbed>'");
      Fixture f;
      f.id = std::string(w[1]);
      auto kind = kind_from_name(w[2]);
      if (!kind) throw error_at(source, lineno, "unknown fixture kind '" + std::string(w[2]) + "'");
      f.kind = *kind;
      if (w[3] != "all") {
        f.group = group_from_name(w[3]);
        if (!f.group) throw error_at(source, lineno, "unknown group '" + std::string(w[3]) + "'");
      }
      if (w[4] != "-") {
        f.dist = dist_from_name(w[4]);
        if (!f.dist) throw error_at(source, lineno, "unknown distribution '" + std::string(w[4]) + "'");
      }
      if (w[5] != "plain" && w[5] != "perturbed") throw error_at(source, lineno, "expected plain or perturbed");
      f.perturbed = w[5] == "perturbed";
      if (f.perturbed && !f.dist) throw error_at(source, lineno, "perturbed table without a distribution");
      if (!f.dist && f.kind != FixtureKind::Bracket && f.kind != FixtureKind::LeviCivita)
        throw error_at(source, lineno, "this kind needs a distribution");
      if (is_perturbed_delta(f.kind) != (f.perturbed && f.kind != FixtureKind::System))
        throw error_at(source, lineno, "perturbed kinds and the perturbed flag disagree");
      f.source = std::string(source);
      f.line = lineno;
      cur = std::move(f);
      continue;
    }
    if (line == "end") {
      out.push_back(std::move(*cur));
      cur.reset();
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw error_at(source, lineno, "expected '<key>: <value>'");
    std::string_view key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    try {
      if (cur->kind == FixtureKind::Bracket && (key == "equal" || key == "nonzero")) {
        (key == "equal" ? cur->equal : cur->nonzero).emplace_back(value);
        continue;
      }
      FixtureRow row;
      row.line = lineno;
      if (cur->kind == FixtureKind::System) {
        if (key != "eq") throw ParseError("system rows start with 'eq:'");
      } else {
        row.key = parse_indices(key, key_length(cur->kind));
      }
      row.values = parse_values(value, value_count(cur->kind));
      cur->rows.push_back(std::move(row));
    } catch (const ParseError& e) {
      throw error_at(source, lineno, e.what());
    }
  }
  if (cur) throw error_at(source, lineno, "fixture " + cur->id + " has no 'end'");
  return out;
}

std::map<std::string, Erratum> parse_errata(std::string_view text) {
  std::map<std::string, Erratum> out;
  std::optional<Erratum> cur;
  int lineno = 0;
  for (auto raw : split_lines(text)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto words = split_words(line);
    if (!cur) {
      if (words.size() != 2 || words[0] != "erratum") throw error_at("errata", lineno, "expected 'erratum <id>'");
      cur = Erratum{std::string(words[1]), {}, {}};
      continue;
    }
    if (line == "end") {
      std::string id = cur->id;
      if (!out.emplace(id, std::move(*cur)).second) throw error_at("errata", lineno, "second erratum for " + id);
      cur.reset();
      continue;
    }
    try {
      auto colon = line.find(':');
      std::string_view head = words[0];
      if (head.ends_with(':')) head.remove_suffix(1);
      ErratumAction a;
      if (head == "note") {
        cur->note = std::string(trim(line.substr(colon + 1)));
        continue;
      }
      if (head == "relabel") {
        if (words.size() < 3) throw ParseError("expected 'relabel <row> <key>'");
        a.type = ErratumAction::Type::Relabel;
        a.row = std::stoul(std::string(words[1]));
        for (std::size_t i = 2; i < words.size(); ++i) a.key.push_back(parse_indices(words[i], 1)[0]);
        cur->actions.push_back(std::move(a));
        continue;
      }
      if (colon == std::string_view::npos) throw ParseError("expected ':'");
      std::string_view lhs = trim(line.substr(0, colon));
      a.value = std::string(trim(line.substr(colon + 1)));
      auto lw = split_words(lhs);
      if (head == "set" && lw.size() == 3 && lw[1] == "eq") {
        a.type = ErratumAction::Type::SetEquation;
        a.row = std::stoul(std::string(lw[2]));
      } else if (head == "add" && lw.size() == 2 && lw[1] == "eq") {
        a.type = ErratumAction::Type::AddEquation;
      } else if (head == "set" || head == "add") {
        a.type = head == "set" ? ErratumAction::Type::Set : ErratumAction::Type::Add;
        for (std::size_t i = 1; i < lw.size(); ++i) a.key.push_back(parse_indices(lw[i], 1)[0]);
        if (a.key.empty()) throw ParseError("missing key");
      } else {
        throw ParseError("unknown action '" + std::string(head) + "'");
      }
      cur->actions.push_back(std::move(a));
    } catch (const std::exception& e) {
      throw error_at("errata", lineno, e.what());
    }
  }
  if (cur) throw error_at("errata", lineno, "erratum " + cur->id + " has no 'end'");
  return out;
}

Fixture apply_erratum(const Fixture& f, const Erratum& e) {
  Fixture g = f;
  auto find_key = [&](const std::vector<int>& key) {
    return std::find_if(g.rows.begin(), g.rows.end(), [&](const FixtureRow& r) { return r.key == key; });
  };
  for (auto& a : e.actions) {
    switch (a.type) {
      case ErratumAction::Type::Set:
      case ErratumAction::Type::Add: {
        if (a.key.size() != key_length(f.kind)) throw ParseError("erratum " + e.id + ": key length does not fit");
        auto it = find_key(a.key);
        bool exists = it != g.rows.end();
        if (a.type == ErratumAction::Type::Set && !exists)
          throw ParseError("erratum " + e.id + ": no printed entry to set");
        if (a.type == ErratumAction::Type::Add && exists)
          throw ParseError("erratum " + e.id + ": entry already printed");
        auto values = parse_values(a.value, value_count(f.kind));
        if (exists)
          it->values = values;
        else
          g.rows.push_back({a.key, values, 0});
        break;
      }
      case ErratumAction::Type::Relabel:
        if (a.row == 0 || a.row > g.rows.size() || a.key.size() != key_length(f.kind))
          throw ParseError("erratum " + e.id + ": relabel does not fit");
        g.rows[a.row - 1].key = a.key;
        break;
      case ErratumAction::Type::SetEquation:
        if (f.kind != FixtureKind::System || a.row == 0 || a.row > g.rows.size())
          throw ParseError("erratum " + e.id + ": no equation " + std::to_string(a.row));
        g.rows[a.row - 1].values = {a.value};
        break;
      case ErratumAction::Type::AddEquation:
        if (f.kind != FixtureKind::System) throw ParseError("erratum " + e.id + ": not a system");
        g.rows.push_back({{}, {a.value}, 0});
        break;
    }
  }
  return g;
}

}  // namespace bott
