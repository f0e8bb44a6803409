#include "bott/connection.hpp"

namespace bott {

Distribution distribution(DistId id) {
  switch (id) {
    case DistId::D: return {id, {0, 1}, 2};
    case DistId::D1: return {id, {0, 2}, 1};
    case DistId::D2: return {id, {1, 2}, 0};
  }
  throw std::invalid_argument("unknown distribution");
}

std::string dist_name(DistId id) {
  switch (id) {
    case DistId::D: return "D";
    case DistId::D1: return "D1";
    case DistId::D2: return "D2";
  }
  return "?";
}

std::optional<DistId> dist_from_name(std::string_view s) {
  for (DistId d : kAllDistributions)
    if (dist_name(d) == s) return d;
  return std::nullopt;
}

Connection levi_civita(const LieAlgebraSpec& spec) {
  const auto& c = spec.c;
  Connection conn;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
        Poly lowered = c[i][j][k].scaled(kSigns[k]) - c[j][k][i].scaled(kSigns[i]) + c[k][i][j].scaled(kSigns[j]);
        conn.gamma[i][j][k] = lowered.scaled(mpq_class(kSigns[k], 2));
      }
  return conn;
}

Connection bott(const LieAlgebraSpec& spec, const Connection& lc, const Distribution& dist) {
  if (lc.kind != ConnectionKind::LeviCivita) throw KindMismatch("bott() needs the Levi-Civita connection");
  Connection conn;
  conn.kind = ConnectionKind::Bott;
  conn.dist = dist;
  const int n = dist.normal;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      bool pi = dist.in_plane(i), pj = dist.in_plane(j);
      const Vec3& src = (pi != pj) ? spec.c[i][j] : lc.gamma[i][j];
      bool keep_plane = pj;  // the target follows the second slot in every case
      for (int k = 0; k < 3; ++k)
        if ((k == n) != keep_plane) conn.gamma[i][j][k] = src[k];
    }
  return conn;
}

Connection perturb(const Connection& base) {
  if (base.kind != ConnectionKind::Bott || !base.dist)
    throw KindMismatch("only a Bott connection can be perturbed");
  Connection conn = base;
  conn.kind = ConnectionKind::PerturbedBott;
  int n = base.dist->normal;
  conn.gamma[n][n][n] += Poly::var(Param::a0);
  return conn;
}

Vec3 apply(const Connection& conn, const Vec3& x, const Vec3& y) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (y[j].is_zero()) continue;
      Poly xy = x[i] * y[j];
      for (int k = 0; k < 3; ++k)
        if (!conn.gamma[i][j][k].is_zero()) out[k] += xy * conn.gamma[i][j][k];
    }
  }
  return out;
}

std::string connection_name(const Connection& conn) {
  switch (conn.kind) {
    case ConnectionKind::LeviCivita: return "Levi-Civita";
    case ConnectionKind::Bott: return "Bott(" + dist_name(conn.dist->id) + ")";
    case ConnectionKind::PerturbedBott: return "perturbed Bott(" + dist_name(conn.dist->id) + ")";
  }
  return "?";
}

}  // namespace bott
