// Sparse multivariate polynomials with exact rational coefficients.
//
// A polynomial is a map from exponent vectors to nonzero coefficients.
// Only the support (the set of exponent vectors) matters to the
// irreducibility criteria; coefficients are kept exact so that products
// and cancellations in the test harness are computed without error.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "irredpoly/rational.hpp"

namespace irredpoly {

// Fixed-length sequence of non-negative exponents; length = variable count.
using ExponentVector = std::vector<int>;

class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    Polynomial() = default;
    explicit Polynomial(int n_vars) : n_(n_vars) {}
    Polynomial(int n_vars, TermMap terms);

    int n_vars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;  // zero or a single all-zero exponent term

    // Adds c * z^alpha, merging like terms and dropping the term if the
    // merged coefficient vanishes.
    void add_term(const ExponentVector& alpha, const Rational& c);

    Rational coefficient(const ExponentVector& alpha) const;
    Rational constant_term() const;

    std::set<ExponentVector> support() const;

    // Max coordinate sum over the support. Undefined for the zero polynomial.
    int total_degree() const;

    // True iff every term has a positive exponent on variable i (0-based).
    bool divisible_by_variable(int i) const;

    // Canonical text form using names z1..zn (or the given names).
    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const = default;

private:
    int n_ = 0;
    TermMap terms_;
};

// A witness that p = part_I + part_J where the parts use disjoint variables.
// Indices are 0-based internally; all user-facing output is 1-based.
struct SplitDecomposition {
    std::vector<int> index_set_I;
    std::vector<int> index_set_J;
    Polynomial part_I;
    Polynomial part_J;
    int degree_I = 0;
    int degree_J = 0;
};

// All ways of writing p as a sum of two nonconstant polynomials in disjoint
// variables. Variables are adjacent when they share a monomial; each split
// is a 2-partition of the connected components of that graph. The constant
// term and any variable that does not appear in p are assigned to part_J;
// side I is the side containing the smallest appearing variable. Splits are
// sorted by (|I|, lexicographic I). Empty when the graph is connected.
std::vector<SplitDecomposition> find_splits(const Polynomial& p);

// Rebuilds the split parts for given index sets (same rules as find_splits).
SplitDecomposition make_split(const Polynomial& p, const std::vector<int>& I,
                              const std::vector<int>& J);

}  // namespace irredpoly
