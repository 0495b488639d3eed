// Exact linear feasibility over the rationals.
//
// Every face query in the geometry module reduces to one of two problems:
// membership of a point in a convex hull (nonnegative barycentric weights)
// or existence of a separating/supporting hyperplane (free variables).
// Both are answered by a phase-1 simplex over mpq with Bland's rule, so
// the answers are exact and the solver always terminates.
#pragma once

#include <optional>
#include <vector>

#include "irredpoly/rational.hpp"

namespace irredpoly::lp {

enum class Rel { Eq, Le, Ge };

struct Constraint {
    std::vector<Rational> coeffs;  // length == num_vars
    Rel rel;
    Rational rhs;
};

// Finds x satisfying all constraints, or nullopt if the system is infeasible.
// When nonneg_vars is true every variable is constrained to x >= 0;
// otherwise all variables are free.
std::optional<std::vector<Rational>> find_feasible(int num_vars,
                                                   const std::vector<Constraint>& cons,
                                                   bool nonneg_vars);

// Rank of a rational matrix (rows may be empty).
int rank(std::vector<std::vector<Rational>> rows);

// Basis of { x : A x = 0 } for the matrix with the given rows.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows,
                                             int ncols);

}  // namespace irredpoly::lp
