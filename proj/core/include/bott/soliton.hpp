#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bott/curvature.hpp"
#include "bott/ratfun.hpp"
#include "bott/sampling.hpp"

namespace bott {

// V = mu1 e1 + mu2 e2 + mu3 e3
Vec3 soliton_field();

// (L_V g)(X,Y) = g(nabla_X V, Y) + g(X, nabla_Y V)
BilinearForm lie_derivative_form(const Connection& conn, const Vec3& v);

struct SolitonSystem {
  std::vector<Poly> equations;
  std::string label;
  Constraints constraints;       // inherited from the algebra
  std::vector<Param> params;     // algebra parameters, then a0 when perturbed
  bool perturbed = false;
  std::optional<int> eta;
};

// L_V g + 2 rho_sym + 2 mu g over the pairs i <= j. Each equation is divided by
// its positive rational content; zero rows are dropped and rows equal up to a
// nonzero rational factor are kept once.
SolitonSystem build_system(const LieAlgebraSpec& spec, const Connection& conn);

// True when every equation has joint degree <= 1 in (mu1, mu2, mu3, mu).
bool is_affine_in_unknowns(const SolitonSystem& sys);

bool same_up_to_scale(const Poly& a, const Poly& b);

struct SolutionFamily {
  std::string label;
  Bindings bindings;
  std::vector<Poly> side_equal;
  std::vector<Poly> side_nonzero;
};

// One conjunctive case of a family after its side equations are resolved.
struct FamilyBranch {
  Bindings bindings;            // closed: no value mentions a bound parameter
  std::vector<Poly> nonzero;    // includes coefficients divided by when solving
  std::vector<Poly> implicit;   // side equations with no linear parameter
  std::string description;
};

struct FamilyVerdict {
  enum class Kind { Satisfied, Violated, Inconsistent };
  Kind kind = Kind::Satisfied;
  std::size_t equation = 0;     // index into the system, when Violated
  RatFun residual;
  std::string branch;           // description of the violating branch
  std::vector<FamilyBranch> branches;  // the feasible branches
};

struct FamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// einstein = true additionally imposes mu1 = mu2 = mu3 = 0.
FamilyVerdict check_family(const SolitonSystem& sys, const SolutionFamily& fam, bool einstein = false);

struct ConstraintViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PointVerdict {
  bool solvable = false;
  Point witness;          // unknowns; free ones set to 0
  int dimension = 0;      // dimension of the solution set
  std::size_t conflict = 0;  // equation index producing 0 = c when inconsistent
};

// Exact Gaussian elimination in (mu1, mu2, mu3, mu) once every system
// parameter is fixed by `point`. einstein fixes mu1 = mu2 = mu3 = 0.
PointVerdict decide_at_point(const SolitonSystem& sys, const Point& point, bool einstein = false);

struct SpotCheck {
  std::size_t requested = 0;
  std::size_t checked = 0;
  std::size_t skipped_branches = 0;  // branches with implicit constraints
  std::optional<Point> failure;      // full point where the family does not solve the system
  std::string failure_reason;
};

// Instantiates each feasible branch at random admissible rational points and
// requires both an exact zero of every equation and a Solvable verdict.
SpotCheck spot_check(const SolitonSystem& sys, const FamilyVerdict& verdict, std::uint64_t seed,
                     std::size_t per_branch = 25, bool einstein = false);

std::string point_str(const Point& p);

}  // namespace bott
