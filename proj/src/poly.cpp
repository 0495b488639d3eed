#include "irredpoly/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace irredpoly {

Polynomial::Polynomial(int n_vars, TermMap terms) : n_(n_vars), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        const auto& [alpha, c] = *it;
        if (static_cast<int>(alpha.size()) != n_)
            throw std::invalid_argument("exponent vector length != variable count");
        for (int e : alpha)
            if (e < 0) throw std::invalid_argument("negative exponent");
        if (c == 0) it = terms_.erase(it);
        else ++it;
    }
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& alpha = terms_.begin()->first;
    return std::all_of(alpha.begin(), alpha.end(), [](int e) { return e == 0; });
}

void Polynomial::add_term(const ExponentVector& alpha, const Rational& c) {
    if (static_cast<int>(alpha.size()) != n_)
        throw std::invalid_argument("exponent vector length != variable count");
    for (int e : alpha)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const ExponentVector& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(ExponentVector(n_, 0));
}

std::set<ExponentVector> Polynomial::support() const {
    std::set<ExponentVector> s;
    for (const auto& [alpha, c] : terms_) s.insert(alpha);
    return s;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) throw std::domain_error("total degree of the zero polynomial");
    int best = 0;
    for (const auto& [alpha, c] : terms_)
        best = std::max(best, std::accumulate(alpha.begin(), alpha.end(), 0));
    return best;
}

bool Polynomial::divisible_by_variable(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("variable index out of range");
    if (terms_.empty()) throw std::domain_error("divisibility of the zero polynomial");
    for (const auto& [alpha, c] : terms_)
        if (alpha[i] == 0) return false;
    return true;
}

std::string Polynomial::to_string() const {
    std::vector<std::string> names;
    names.reserve(n_);
    for (int i = 0; i < n_; ++i) names.push_back("z" + std::to_string(i + 1));
    return to_string(names);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != n_)
        throw std::invalid_argument("name list length != variable count");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest exponent vector first reads like handwritten input.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [alpha, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool all_zero = std::all_of(alpha.begin(), alpha.end(), [](int e) { return e == 0; });
        bool wrote_coeff = false;
        if (mag != 1 || all_zero) {
            out << rational_to_string(mag);
            wrote_coeff = true;
        }
        for (int i = 0; i < n_; ++i) {
            if (alpha[i] == 0) continue;
            if (wrote_coeff) out << "*";
            out << names[i];
            if (alpha[i] > 1) out << "^" << alpha[i];
            wrote_coeff = true;
        }
    }
    return out.str();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    Polynomial r(n_);
    r.terms_ = terms_;
    for (const auto& [alpha, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    Polynomial neg(o.n_);
    for (const auto& [alpha, c] : o.terms_) neg.terms_.emplace(alpha, -c);
    return *this + neg;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    Polynomial r(n_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : o.terms_) {
            ExponentVector sum(n_);
            for (int i = 0; i < n_; ++i) sum[i] = a[i] + b[i];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

namespace {

// Union-find over variable indices.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SplitDecomposition make_split(const Polynomial& p, const std::vector<int>& I,
                              const std::vector<int>& J) {
    std::vector<bool> in_I(p.n_vars(), false);
    for (int i : I) in_I[i] = true;
    Polynomial part_I(p.n_vars()), part_J(p.n_vars());
    for (const auto& [alpha, c] : p.terms()) {
        bool constant = true, uses_I = false, uses_J = false;
        for (int v = 0; v < p.n_vars(); ++v) {
            if (alpha[v] == 0) continue;
            constant = false;
            (in_I[v] ? uses_I : uses_J) = true;
        }
        if (constant) {
            part_J.add_term(alpha, c);  // constants always ride with part_J
        } else if (uses_I && uses_J) {
            throw std::invalid_argument("monomial crosses the I/J partition");
        } else if (uses_I) {
            part_I.add_term(alpha, c);
        } else {
            part_J.add_term(alpha, c);
        }
    }
    SplitDecomposition s;
    s.index_set_I = I;
    s.index_set_J = J;
    std::sort(s.index_set_I.begin(), s.index_set_I.end());
    std::sort(s.index_set_J.begin(), s.index_set_J.end());
    s.part_I = std::move(part_I);
    s.part_J = std::move(part_J);
    s.degree_I = s.part_I.is_zero() ? 0 : s.part_I.total_degree();
    s.degree_J = s.part_J.is_zero() ? 0 : s.part_J.total_degree();
    return s;
}

std::vector<SplitDecomposition> find_splits(const Polynomial& p) {
    if (p.is_constant()) throw std::domain_error("find_splits of a constant polynomial");
    const int n = p.n_vars();
    std::vector<bool> appears(n, false);
    Dsu dsu(n);
    for (const auto& [alpha, c] : p.terms()) {
        int prev = -1;
        for (int v = 0; v < n; ++v) {
            if (alpha[v] == 0) continue;
            appears[v] = true;
            if (prev >= 0) dsu.unite(prev, v);
            prev = v;
        }
    }

    // Components over the variables that appear, ordered by smallest member.
    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < n; ++v)
        if (appears[v]) by_root[dsu.find(v)].push_back(v);
    std::vector<std::vector<int>> comps;
    for (auto& [root, vars] : by_root) comps.push_back(vars);
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    const int k = static_cast<int>(comps.size());
    std::vector<SplitDecomposition> out;
    if (k < 2) return out;

    std::vector<int> silent;  // variables that never appear; they go with J
    for (int v = 0; v < n; ++v)
        if (!appears[v]) silent.push_back(v);

    // Each unordered 2-partition once: component 0 (holding the smallest
    // appearing variable) always sits on side I.
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> I = comps[0];
        std::vector<int> J = silent;
        for (int c = 1; c < k; ++c) {
            auto& side = (mask >> (c - 1)) & 1 ? I : J;
            side.insert(side.end(), comps[c].begin(), comps[c].end());
        }
        if (J.size() == silent.size()) continue;  // J needs a component too
        out.push_back(make_split(p, I, J));
    }
    std::sort(out.begin(), out.end(), [](const SplitDecomposition& a, const SplitDecomposition& b) {
        if (a.index_set_I.size() != b.index_set_I.size())
            return a.index_set_I.size() < b.index_set_I.size();
        return a.index_set_I < b.index_set_I;
    });
    return out;
}

}  // namespace irredpoly
