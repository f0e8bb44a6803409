#pragma once

#include "bott/connection.hpp"

namespace bott {

// r[i][j][p] = R(e_i, e_j) e_p
struct CurvatureTensor {
  std::array<std::array<std::array<Vec3, 3>, 3>, 3> r;
};

struct BilinearForm {
  std::array<std::array<Poly, 3>, 3> m;

  bool is_symmetric() const;
  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.m == b.m; }
};

// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, with the
// same connection in all three terms.
CurvatureTensor riemann(const LieAlgebraSpec& spec, const Connection& conn);

// rho(X,Y) = -g(R(X,e1)Y,e1) - g(R(X,e2)Y,e2) + g(R(X,e3)Y,e3)
BilinearForm ricci(const CurvatureTensor& curv);

BilinearForm symmetrize(const BilinearForm& rho);

BilinearForm metric_form();

}  // namespace bott
