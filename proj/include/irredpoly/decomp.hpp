// Integral Minkowski decomposability.
//
// Exact criteria (segment direction gcd, prism apex gcd) plus a bounded
// brute-force oracle that exhaustively searches for a two-summand integral
// decomposition of a small polytope. The oracle is the independent ground
// truth the exact criteria are validated against.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "irredpoly/geometry.hpp"

namespace irredpoly {

// gcd of all coordinates of all points taken together; zeros are ignored,
// signs dropped, and the all-zero input yields 0. Throws on an empty list.
long long gcd_of_points(const std::vector<LatticePoint>& points);

// A polytope presented as base-in-a-hyperplane plus one apex off it.
struct PrismSpec {
    IntegralPolytope base;
    LatticePoint apex;
    Hyperplane plane;
};

// Gao's criterion: conv({apex} u base) is integrally indecomposable iff
// gcd(apex - v_1, ..., apex - v_k) = 1 over the base vertices. Validates
// the spec (base on plane, apex off it) and throws if it is violated.
bool prism_indecomposable(const PrismSpec& spec);

// A lattice segment is indecomposable iff its direction is primitive.
bool segment_indecomposable(const LatticePoint& u, const LatticePoint& v);

// Presents pt as a prism if possible: picks the lex-smallest vertex that
// lies outside the affine hull of the remaining vertices and builds an
// integer hyperplane through those. nullopt if no vertex works.
std::optional<PrismSpec> match_prism(const IntegralPolytope& pt);

struct OracleBudget {
    int max_dim = 3;
    int max_points = 14;       // lattice points of the input (hard cap 64)
    std::int64_t time_budget_ms = 10000;
};

enum class DecompVerdict { Decomposable, Indecomposable, Unknown };

struct DecompositionResult {
    DecompVerdict verdict = DecompVerdict::Unknown;
    // Present iff decomposable: two integral polytopes, each with at least
    // two points, whose Minkowski sum is the input. The first summand is
    // normalized to have its lex-minimal vertex at the origin.
    std::optional<std::pair<IntegralPolytope, IntegralPolytope>> summands;
    std::string note;  // reason when verdict == Unknown
};

// Exhaustive search for a decomposition. Candidate first summands range
// over subsets of the input's lattice points translated so the lex-minimal
// point is the origin; subsets are visited in depth-first inclusion order
// over the lex-sorted point list, and the first hit is returned. Exceeding
// any budget yields Unknown, never a guess.
DecompositionResult brute_force_decomposable(const IntegralPolytope& pt,
                                             const OracleBudget& budget = {});

// Combined exact decision: segment and prism tests first (exact in any
// dimension), then the bounded oracle. method records which path decided.
struct IndecompDecision {
    DecompVerdict verdict = DecompVerdict::Unknown;
    std::string method;  // "segment", "prism", or "oracle"
    std::string note;
};

IndecompDecision decide_polytope_indecomposable(const IntegralPolytope& pt,
                                                const OracleBudget& budget = {});

}  // namespace irredpoly
