#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bott/connection.hpp"
#include "bott/soliton.hpp"

namespace bott {

enum class Claim { Soliton, NotSoliton, Einstein, NotEinstein };

std::string claim_name(Claim c);
bool is_negative(Claim c);
bool is_einstein(Claim c);

// A family as printed: clause text, parsed per G4 sign by build_family.
struct FamilyText {
  std::string label;
  std::vector<std::string> clauses;
  int line = 0;
};

struct TheoremRecord {
  std::string id;
  GroupId group = GroupId::G1;
  DistId dist = DistId::D;
  bool perturbed = false;
  Claim claim = Claim::Soliton;
  std::vector<FamilyText> families;
  int line = 0;
};

std::vector<TheoremRecord> parse_theorems(std::string_view text);

// "p = q" binds p when p is a single parameter absent from q and not yet
// bound; any other equation is a side equation. "p != q" is a side condition.
SolutionFamily build_family(const FamilyText& f, std::optional<int> eta);

}  // namespace bott
