#include "bott/curvature.hpp"

namespace bott {

bool BilinearForm::is_symmetric() const {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

CurvatureTensor riemann(const LieAlgebraSpec& spec, const Connection& conn) {
  CurvatureTensor t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec3 ei = basis(i), ej = basis(j);
      Vec3 br = bracket(spec, ei, ej);
      for (int p = 0; p < 3; ++p) {
        Vec3 ep = basis(p);
        t.r[i][j][p] = apply(conn, ei, apply(conn, ej, ep)) - apply(conn, ej, apply(conn, ei, ep)) -
                       apply(conn, br, ep);
      }
    }
  return t;
}

BilinearForm ricci(const CurvatureTensor& curv) {
  // g(v, e_a) = kSigns[a] * v_a
  BilinearForm f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      f.m[i][j] = curv.r[i][2][j][2].scaled(kSigns[2]) - curv.r[i][0][j][0].scaled(kSigns[0]) -
                  curv.r[i][1][j][1].scaled(kSigns[1]);
  return f;
}

BilinearForm symmetrize(const BilinearForm& rho) {
  BilinearForm f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f.m[i][j] = (rho.m[i][j] + rho.m[j][i]).scaled(mpq_class(1, 2));
  return f;
}

BilinearForm metric_form() {
  BilinearForm g;
  for (int i = 0; i < 3; ++i) g.m[i][i] = Poly(kSigns[i]);
  return g;
}

}  // namespace bott
