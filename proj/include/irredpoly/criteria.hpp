// One-sided irreducibility criteria over the complex numbers.
//
// Every criterion only certifies irreducibility; silence means nothing
// (the verdict is Inconclusive, never "reducible"). All witnesses carried
// by a certificate can be re-validated without repeating the search.
#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "irredpoly/decomp.hpp"
#include "irredpoly/geometry.hpp"
#include "irredpoly/poly.hpp"

namespace irredpoly {

enum class Verdict { Irreducible, Inconclusive };
enum class Criterion { DegreeGcd, FaceIndecomposable, GaoDirect, None };

// The constructive witness behind the degree-gcd criterion: a descending
// chain of faces of N(p) ending in a prism whose distinguished edge
// [x0, x1] is primitive.
//
// h0 is the plane  d_J * sum_I x_i + d_I * sum_J x_j = d_I * d_J,  kept both
// raw (as written) and normalized. c0 = h0 ∩ N(p). Each later plane fixes
// one I-coordinate at its maximum over the surviving apex candidates; the
// apex sets shrink to the singleton {x0}. x1 is the lex-smallest
// max-degree vertex on the J side.
struct FaceChain {
    std::vector<long long> h0_raw_normal;
    long long h0_raw_offset = 0;
    Hyperplane h0;
    IntegralPolytope c0;
    std::vector<std::pair<Hyperplane, IntegralPolytope>> chain;   // (H_i, C_i), one per i in I
    std::vector<std::vector<LatticePoint>> apex_sets;             // A_1 ⊇ A_11 ⊇ ... (|I|+1 sets)
    LatticePoint x0;
    LatticePoint x1;
    long long edge_gcd = 0;
};

struct IrreducibilityCertificate {
    Verdict verdict = Verdict::Inconclusive;
    Criterion criterion = Criterion::None;
    std::optional<SplitDecomposition> split;
    std::optional<std::pair<int, int>> degrees;      // (d_I, d_J)
    std::optional<long long> degree_gcd;
    std::optional<FaceChain> face_chain;
    // The distinguished edge with its coordinate gcd (1 under DegreeGcd).
    std::optional<std::tuple<LatticePoint, LatticePoint, long long>> edge;
    char face_part = 0;        // 'I' or 'J' when criterion == FaceIndecomposable
    std::string face_method;   // "segment" / "prism" / "oracle" for the face criterion
    std::string notes;
};

// Builds the full face chain for a split with both parts nonconstant.
// Any failed internal face verification throws std::logic_error: the chain
// is a theorem, so a failure is an implementation bug, never a verdict.
FaceChain build_face_chain(const SplitDecomposition& split);

// Irreducible iff some disjoint-variable split has coprime part degrees;
// the certificate carries the split, the degrees and the face chain.
IrreducibilityCertificate degree_gcd_criterion(const Polynomial& p);

// Irreducible iff some split has a part whose Newton polytope (constant
// term set aside) has at least two vertices and is integrally
// indecomposable: exact segment/prism tests first, bounded oracle last.
IrreducibilityCertificate face_criterion(const Polynomial& p, const OracleBudget& budget = {});

// Direct polytope test: p not divisible by any variable and N(p)
// indecomposable per the oracle. Throws std::invalid_argument naming the
// offending variables if the divisibility precondition fails.
IrreducibilityCertificate gao_direct(const Polynomial& p, const OracleBudget& budget = {});

// Combined driver: DegreeGcd, then FaceIndecomposable, then GaoDirect;
// first success wins and every attempt is logged in notes.
IrreducibilityCertificate decide_irreducibility(const Polynomial& p,
                                                const OracleBudget& budget = {});

// Re-validates an Irreducible certificate against p from its stored
// witnesses: split reassembly, degrees, gcds, every chain face, the edge.
// Returns false (with a reason) instead of throwing.
bool recheck_certificate(const Polynomial& p, const IrreducibilityCertificate& cert,
                         std::string* why = nullptr);

std::string to_string(Verdict v);
std::string to_string(Criterion c);

}  // namespace irredpoly
