// Exact lattice-polytope kernel.
//
// Polytopes are stored by their vertex set only (V-representation); every
// face/membership question is answered by exact rational feasibility, so
// the kernel is dimension-agnostic and degenerate polytopes (points,
// segments, lower-dimensional bodies) are first-class.
#pragma once

#include <optional>
#include <vector>

#include "irredpoly/poly.hpp"
#include "irredpoly/rational.hpp"

namespace irredpoly {

using LatticePoint = std::vector<long long>;

// { x : normal . x = offset }, integer data. The constructor divides
// through by the joint gcd of (normal, offset) and flips signs so the
// first nonzero normal entry is positive; whenever the plane contains a
// lattice point this leaves a primitive normal with integer offset.
class Hyperplane {
public:
    Hyperplane() = default;  // empty sentinel; any real plane has dim >= 1
    Hyperplane(std::vector<long long> normal, long long offset);

    const std::vector<long long>& normal() const { return normal_; }
    long long offset() const { return offset_; }
    int dim() const { return static_cast<int>(normal_.size()); }

    // normal . x - offset
    long long eval(const LatticePoint& x) const;

    bool operator==(const Hyperplane& o) const = default;

private:
    std::vector<long long> normal_;
    long long offset_;
};

class IntegralPolytope {
public:
    // Vertices must be the extreme points, deduplicated; callers normally
    // go through convex_hull which establishes that.
    static IntegralPolytope from_vertices(int dim, std::vector<LatticePoint> vertices);

    int dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }  // sorted lex
    size_t vertex_count() const { return vertices_.size(); }

    bool contains(const LatticePoint& p) const;

    bool operator==(const IntegralPolytope& o) const = default;

private:
    int dim_ = 0;
    std::vector<LatticePoint> vertices_;
};

enum class Side { Minus, Plus };  // which closed halfspace holds the parent

struct FaceWitness {
    IntegralPolytope face;
    Hyperplane plane;
    Side side;
};

// Exact extreme-point filter: a point is kept iff it is not a convex
// combination of the others. Throws on empty input or mixed dimensions.
IntegralPolytope convex_hull(const std::vector<LatticePoint>& points);

// conv(supp(p)); throws on the zero polynomial.
IntegralPolytope newton_polytope(const Polynomial& p);

// Hull of all pairwise vertex sums.
IntegralPolytope minkowski_sum(const IntegralPolytope& a, const IntegralPolytope& b);

// All vertices on one closed side of h and at least one on h.
bool is_supporting(const IntegralPolytope& pt, const Hyperplane& h);

// The face cut out by a supporting hyperplane; throws if h does not support pt.
FaceWitness face(const IntegralPolytope& pt, const Hyperplane& h);

// Searches for a supporting hyperplane exposing exactly sub inside parent.
// Requires sub's vertices to be vertices of parent.
std::optional<FaceWitness> is_face_of(const IntegralPolytope& sub,
                                      const IntegralPolytope& parent);

// Vertex pairs (u, v), u < v lex, whose segment is a face of pt.
std::vector<std::pair<LatticePoint, LatticePoint>> edges(const IntegralPolytope& pt);

// All lattice points of pt in lex order, or nullopt once more than
// max_count are found (the decomposition oracle's budget guard).
std::optional<std::vector<LatticePoint>> lattice_points(const IntegralPolytope& pt,
                                                        size_t max_count);

LatticePoint exponent_to_point(const ExponentVector& alpha);

}  // namespace irredpoly
