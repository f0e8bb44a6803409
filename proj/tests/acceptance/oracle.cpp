#include "oracle.hpp"

namespace oracle {

namespace {

constexpr int kSig[3] = {1, 1, -1};

using Table = std::array<std::array<V, 3>, 3>;

V vec(Q a, Q b, Q c) { return {a, b, c}; }

Table brackets(int group, const Params& p) {
  const Q &a = p.alpha, &b = p.beta, &c = p.gamma, &d = p.delta;
  V e12, e13, e23;
  switch (group) {
    case 1:
      e12 = vec(a, 0, -b);
      e13 = vec(-a, -b, 0);
      e23 = vec(b, a, a);
      break;
    case 2:
      e12 = vec(0, c, -b);
      e13 = vec(0, -b, -c);
      e23 = vec(a, 0, 0);
      break;
    case 3:
      e12 = vec(0, 0, -c);
      e13 = vec(0, -b, 0);
      e23 = vec(a, 0, 0);
      break;
    case 4:
      e12 = vec(0, -1, 2 * p.eta - b);
      e13 = vec(0, -b, 1);
      e23 = vec(a, 0, 0);
      break;
    case 5:
      e12 = vec(0, 0, 0);
      e13 = vec(a, b, 0);
      e23 = vec(c, d, 0);
      break;
    case 6:
      e12 = vec(0, a, b);
      e13 = vec(0, c, d);
      e23 = vec(0, 0, 0);
      break;
    default:
      e12 = vec(-a, -b, -b);
      e13 = vec(a, b, b);
      e23 = vec(c, d, d);
      break;
  }
  Table t{};
  auto neg = [](V v) {
    for (auto& x : v) x = -x;
    return v;
  };
  t[0][1] = e12;
  t[1][0] = neg(e12);
  t[0][2] = e13;
  t[2][0] = neg(e13);
  t[1][2] = e23;
  t[2][1] = neg(e23);
  return t;
}

Q g(const V& x, const V& y) {
  Q s = 0;
  for (int k = 0; k < 3; ++k) s += kSig[k] * x[k] * y[k];
  return s;
}

V unit(int i) {
  V v{0, 0, 0};
  v[i] = 1;
  return v;
}

V bracket(const Table& t, const V& x, const V& y) {
  V r{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[k] += x[i] * y[j] * t[i][j][k];
  return r;
}

V nabla(const Table& conn, const V& x, const V& y) { return bracket(conn, x, y); }

}  // namespace

Result evaluate(int group, std::optional<int> normal, bool perturbed, const Params& p) {
  Table br = brackets(group, p);

  // 2 g(D_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y) on a left-invariant frame
  Table lc{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        V ei = unit(i), ej = unit(j), ek = unit(k);
        Q gz = (g(bracket(br, ei, ej), ek) - g(bracket(br, ej, ek), ei) + g(bracket(br, ek, ei), ej)) / 2;
        lc[i][j][k] = kSig[k] * gz;
      }

  Table conn = lc;
  if (normal) {
    int n = *normal;
    auto in_plane = [n](int i) { return i != n; };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        V src = in_plane(i) == in_plane(j) ? lc[i][j] : br[i][j];
        V out{0, 0, 0};
        for (int k = 0; k < 3; ++k)
          if (in_plane(k) == in_plane(j)) out[k] = src[k];
        conn[i][j] = out;
      }
    if (perturbed) conn[n][n][n] += p.a0;
  }

  auto curv = [&](const V& x, const V& y, const V& z) {
    V a = nabla(conn, x, nabla(conn, y, z));
    V b = nabla(conn, y, nabla(conn, x, z));
    V c = nabla(conn, bracket(br, x, y), z);
    V r;
    for (int k = 0; k < 3; ++k) r[k] = a[k] - b[k] - c[k];
    return r;
  };

  Form rho{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      V x = unit(i), y = unit(j);
      rho[i][j] = -g(curv(x, unit(0), y), unit(0)) - g(curv(x, unit(1), y), unit(1)) +
                  g(curv(x, unit(2), y), unit(2));
    }

  Result res;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      res.sym_ricci[i][j] = (rho[i][j] + rho[j][i]) / 2;
      V x = unit(i), y = unit(j);
      res.lie[i][j] = g(nabla(conn, x, p.mu), y) + g(x, nabla(conn, y, p.mu));
    }
  return res;
}

Params draw(int group, int eta, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
  auto q = [&] { return Q(num(gen), den(gen)); };
  auto nz = [&] {
    Q x;
    do x = q();
    while (x == 0);
    return x;
  };
  for (;;) {
    Params p;
    p.eta = eta;
    p.alpha = q();
    p.beta = q();
    p.gamma = q();
    p.delta = q();
    p.a0 = nz();
    p.mu = {q(), q(), q()};
    for (auto& x : p.mu) x.canonicalize();
    if (group == 5) {
      p.delta = nz();
      p.beta = -p.alpha * p.gamma / p.delta;
    } else if (group == 6) {
      p.delta = nz();
      p.beta = p.alpha * p.gamma / p.delta;
    } else if (group == 7) {
      if (gen() % 2) p.alpha = 0;
      else p.gamma = 0;
    }
    for (Q* x : {&p.alpha, &p.beta, &p.gamma, &p.delta, &p.a0}) x->canonicalize();
    if (group == 1 && p.alpha == 0) continue;
    if (group == 2 && p.gamma == 0) continue;
    if (group >= 5 && p.alpha + p.delta == 0) continue;
    return p;
  }
}

}  // namespace oracle
