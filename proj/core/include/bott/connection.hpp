#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "bott/algebra.hpp"

namespace bott {

enum class DistId { D, D1, D2 };

inline constexpr std::array<DistId, 3> kAllDistributions = {DistId::D, DistId::D1, DistId::D2};

// A plane spanned by two frame vectors and the frame vector normal to it.
struct Distribution {
  DistId id;
  std::array<int, 2> plane;  // 0-based
  int normal;

  bool in_plane(int i) const { return i == plane[0] || i == plane[1]; }
};

Distribution distribution(DistId id);
std::string dist_name(DistId id);
std::optional<DistId> dist_from_name(std::string_view s);

// gamma[i][j] is nabla_{e_i} e_j.
using Christoffel = std::array<std::array<Vec3, 3>, 3>;

enum class ConnectionKind { LeviCivita, Bott, PerturbedBott };

struct Connection {
  Christoffel gamma;
  ConnectionKind kind = ConnectionKind::LeviCivita;
  std::optional<Distribution> dist;
};

struct KindMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Koszul formula for a left-invariant metric in a pseudo-orthonormal frame.
Connection levi_civita(const LieAlgebraSpec& spec);

// Casewise projection: on the plane use pi_D(nabla^L), plane along the normal
// use pi_normal([X,Y]), normal along the plane use pi_D([X,Y]), normal along
// the normal use pi_normal(nabla^L).
Connection bott(const LieAlgebraSpec& spec, const Connection& lc, const Distribution& dist);

// Adds a0 to the (normal, normal, normal) coefficient.
Connection perturb(const Connection& base);

// Bilinear extension over constant frame coefficients.
Vec3 apply(const Connection& conn, const Vec3& x, const Vec3& y);

std::string connection_name(const Connection& conn);

}  // namespace bott
