#include "bott/theorems.hpp"

#include "bott/parse.hpp"
#include "bott/text.hpp"

namespace bott {

std::string claim_name(Claim c) {
  switch (c) {
    case Claim::Soliton: return "soliton";
    case Claim::NotSoliton: return "not-soliton";
    case Claim::Einstein: return "einstein";
    case Claim::NotEinstein: return "not-einstein";
  }
  return "?";
}

bool is_negative(Claim c) { return c == Claim::NotSoliton || c == Claim::NotEinstein; }
bool is_einstein(Claim c) { return c == Claim::Einstein || c == Claim::NotEinstein; }

namespace {

std::optional<Claim> claim_from_name(std::string_view s) {
  for (Claim c : {Claim::Soliton, Claim::NotSoliton, Claim::Einstein, Claim::NotEinstein})
    if (claim_name(c) == s) return c;
  return std::nullopt;
}

ParseError error_at(int line, const std::string& what) {
  return ParseError("theorems:" + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<TheoremRecord> parse_theorems(std::string_view text) {
  std::vector<TheoremRecord> out;
  std::optional<TheoremRecord> cur;
  int lineno = 0;
  for (auto raw : split_lines(text)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!cur) {
      auto w = split_words(line);
      if (w.size() != 6 || w[0] != "theorem")
        throw error_at(lineno, "expected 'theorem <id> <group> <dist> <plain|perturbed> <claim>'");
      TheoremRecord t;
      t.id = std::string(w[1]);
      auto g = group_from_name(w[2]);
      auto d = dist_from_name(w[3]);
      auto c = claim_from_name(w[5]);
      if (!g || !d || !c || (w[4] != "plain" && w[4] != "perturbed")) throw error_at(lineno, "bad theorem header");
      t.group = *g;
      t.dist = *d;
      t.perturbed = w[4] == "perturbed";
      t.claim = *c;
      t.line = lineno;
      cur = std::move(t);
      continue;
    }
    if (line == "end") {
      if (is_negative(cur->claim) != cur->families.empty())
        throw error_at(lineno, "negative claims have no families, positive claims need at least one");
      out.push_back(std::move(*cur));
      cur.reset();
      continue;
    }
    if (!line.starts_with("family ")) throw error_at(lineno, "expected 'family <label>: <clauses>'");
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw error_at(lineno, "family without ':'");
    FamilyText f;
    f.label = std::string(trim(line.substr(7, colon - 7)));
    f.line = lineno;
    for (auto c : split(line.substr(colon + 1), ';'))
      if (!c.empty()) f.clauses.emplace_back(c);
    cur->families.push_back(std::move(f));
  }
  if (cur) throw error_at(lineno, "theorem " + cur->id + " has no 'end'");
  return out;
}

SolutionFamily build_family(const FamilyText& f, std::optional<int> eta) {
  SolutionFamily fam;
  fam.label = f.label;
  for (auto& clause : f.clauses) {
    try {
      auto ne = clause.find("!=");
      if (ne != std::string::npos) {
        RatFun d = parse_ratfun(clause.substr(0, ne), eta) - parse_ratfun(clause.substr(ne + 2), eta);
        fam.side_nonzero.push_back(d.num());
        continue;
      }
      auto eq = clause.find('=');
      if (eq == std::string::npos) throw ParseError("clause without '=' or '!='");
      std::string_view lhs = trim(std::string_view(clause).substr(0, eq));
      RatFun rhs = parse_ratfun(std::string_view(clause).substr(eq + 1), eta);
      auto p = param_from_name(lhs);
      if (p && !rhs.depends_on(*p) && !fam.bindings.count(*p)) {
        fam.bindings[*p] = rhs;
        continue;
      }
      fam.side_equal.push_back((parse_ratfun(lhs, eta) - rhs).num());
    } catch (const ParseError& e) {
      throw ParseError("theorems:" + std::to_string(f.line) + ": family " + f.label + ": " + e.what());
    }
  }
  return fam;
}

}  // namespace bott
