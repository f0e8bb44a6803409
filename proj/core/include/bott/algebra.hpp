#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bott/poly.hpp"
#include "bott/sampling.hpp"

namespace bott {

using Vec3 = std::array<Poly, 3>;

// c[i][j][k] is the e_k component of [e_i, e_j]; indices are 0-based.
using StructureConstants = std::array<std::array<Vec3, 3>, 3>;

// g(e_i, e_j) = kSigns[i] when i == j; e_3 is timelike.
inline constexpr std::array<int, 3> kSigns = {1, 1, -1};

enum class GroupId { G1, G2, G3, G4, G5, G6, G7 };

inline constexpr std::array<GroupId, 7> kAllGroups = {GroupId::G1, GroupId::G2, GroupId::G3, GroupId::G4,
                                                      GroupId::G5, GroupId::G6, GroupId::G7};

std::string group_name(GroupId g);
std::optional<GroupId> group_from_name(std::string_view s);

struct UnknownId : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LieAlgebraSpec {
  std::string label;
  StructureConstants c;
  std::vector<Poly> equal;
  std::vector<Poly> nonzero;
  std::vector<Param> params;       // parameters the brackets are written in
  std::optional<int> eta;          // the sign G4 was instantiated with
  std::optional<bool> unimodular;  // catalog metadata

  Constraints constraints() const { return {equal, nonzero}; }
};

// G4 is defined for eta = +1 and eta = -1; eta is ignored for other groups.
LieAlgebraSpec catalog(GroupId id, int eta = 1);

// The instances a verification run covers: G4 twice, every other group once.
std::vector<int> eta_values(GroupId id);

Vec3 basis(int i);
Vec3 zero_vec();
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Poly& s, const Vec3& v);
bool is_zero(const Vec3& v);

Vec3 bracket(const LieAlgebraSpec& spec, const Vec3& x, const Vec3& y);

// defect[i][j][k] = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
using JacobiDefect = std::array<std::array<std::array<Vec3, 3>, 3>, 3>;
JacobiDefect jacobi_defect(const LieAlgebraSpec& spec);
bool jacobi_holds(const LieAlgebraSpec& spec);
// Jacobi at `points` random rational points; false on the first failure.
bool jacobi_holds_sampled(const LieAlgebraSpec& spec, std::uint64_t seed, int points = 10);

bool is_antisymmetric(const StructureConstants& c);

Poly metric_pair(const Vec3& x, const Vec3& y);

// "alpha*e_1 - beta/2*e_3"; "0" for the zero vector.
std::string vec_str(const Vec3& v);

// Custom algebra text: "label: <name>", "<i> <j>: c1 | c2 | c3" for brackets,
// "equal: <expr>", "nonzero: <expr>", '#' comments. Missing brackets are zero.
LieAlgebraSpec parse_custom_algebra(std::string_view text);

}  // namespace bott
