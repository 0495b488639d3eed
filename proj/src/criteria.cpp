#include "irredpoly/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace irredpoly {

namespace {

std::string var_name(int i, const std::vector<std::string>& names) {
    if (i < static_cast<int>(names.size())) return names[i];
    return "z" + std::to_string(i + 1);
}

std::string index_set_text(const std::vector<int>& idx) {
    std::string s = "{";
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k] + 1);  // 1-based for people
    }
    return s + "}";
}

std::string split_text(const SplitDecomposition& s) {
    return "I=" + index_set_text(s.index_set_I) + " J=" + index_set_text(s.index_set_J);
}

long long coordinate_sum(const LatticePoint& p, const std::vector<int>& idx) {
    long long acc = 0;
    for (int i : idx) acc += p[i];
    return acc;
}

// Max-total-degree vertices of the part's Newton polytope, degree measured
// over the part's own index set.
std::vector<LatticePoint> apex_candidates(const Polynomial& part, const std::vector<int>& idx,
                                          int degree) {
    std::vector<LatticePoint> out;
    for (const auto& v : newton_polytope(part).vertices())
        if (coordinate_sum(v, idx) == degree) out.push_back(v);
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("face chain construction failed: " + what);
}

Polynomial strip_constant(const Polynomial& p) {
    Rational c = p.constant_term();
    if (c == 0) return p;
    Polynomial q = p;
    q.add_term(ExponentVector(p.n_vars(), 0), -c);
    return q;
}

}  // namespace

std::string to_string(Verdict v) {
    return v == Verdict::Irreducible ? "Irreducible" : "Inconclusive";
}

std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::DegreeGcd: return "DegreeGcd";
        case Criterion::FaceIndecomposable: return "FaceIndecomposable";
        case Criterion::GaoDirect: return "GaoDirect";
        case Criterion::None: return "None";
    }
    return "None";
}

FaceChain build_face_chain(const SplitDecomposition& split) {
    if (split.part_I.is_constant() || split.part_J.is_constant())
        throw std::invalid_argument("face chain requires nonconstant parts");
    const Polynomial p = split.part_I + split.part_J;
    const int n = p.n_vars();
    const long long d1 = split.degree_I, d2 = split.degree_J;

    FaceChain fc;
    fc.h0_raw_normal.assign(n, 0);
    for (int i : split.index_set_I) fc.h0_raw_normal[i] = d2;
    for (int j : split.index_set_J) fc.h0_raw_normal[j] = d1;
    fc.h0_raw_offset = d1 * d2;
    fc.h0 = Hyperplane(fc.h0_raw_normal, fc.h0_raw_offset);

    const IntegralPolytope np = newton_polytope(p);
    require(is_supporting(np, fc.h0), "H0 does not support N(p)");
    fc.c0 = face(np, fc.h0).face;
    require(is_face_of(fc.c0, np).has_value(), "C0 is not a face of N(p)");

    auto a1 = apex_candidates(split.part_I, split.index_set_I, static_cast<int>(d1));
    auto a2 = apex_candidates(strip_constant(split.part_J), split.index_set_J,
                              static_cast<int>(d2));
    require(!a1.empty() && !a2.empty(), "empty max-degree vertex set");
    {
        std::vector<LatticePoint> expect = a1;
        expect.insert(expect.end(), a2.begin(), a2.end());
        std::sort(expect.begin(), expect.end());
        require(fc.c0.vertices() == expect, "C0 vertices differ from the two apex sets");
    }

    fc.apex_sets.push_back(a1);
    IntegralPolytope cur_face = fc.c0;
    std::vector<LatticePoint> cur = a1;
    for (int i : split.index_set_I) {
        long long m = cur[0][i];
        for (const auto& v : cur) m = std::max(m, v[i]);
        std::vector<LatticePoint> next;
        for (const auto& v : cur)
            if (v[i] == m) next.push_back(v);

        std::vector<long long> normal(n, 0);
        normal[i] += d2;
        for (int j : split.index_set_J) normal[j] += m;
        Hyperplane hi(std::move(normal), m * d2);

        require(is_supporting(cur_face, hi), "H_i does not support C_{i-1}");
        IntegralPolytope ci = face(cur_face, hi).face;
        {
            std::vector<LatticePoint> expect = next;
            expect.insert(expect.end(), a2.begin(), a2.end());
            std::sort(expect.begin(), expect.end());
            require(ci.vertices() == expect, "C_i vertices differ from apex set + base");
        }
        require(is_face_of(ci, cur_face).has_value(), "C_i is not a face of C_{i-1}");

        fc.chain.emplace_back(hi, ci);
        fc.apex_sets.push_back(next);
        cur = std::move(next);
        cur_face = std::move(ci);
    }
    require(cur.size() == 1, "apex set did not shrink to a singleton");
    fc.x0 = cur[0];
    fc.x1 = a2.front();  // lex-smallest by construction

    require(coordinate_sum(fc.x0, split.index_set_I) == d1, "x0 degree mismatch");
    require(coordinate_sum(fc.x1, split.index_set_J) == d2, "x1 degree mismatch");

    auto seg = IntegralPolytope::from_vertices(n, {fc.x0, fc.x1});
    require(is_face_of(seg, np).has_value(), "[x0, x1] is not an edge of N(p)");

    LatticePoint diff(n);
    for (int k = 0; k < n; ++k) diff[k] = fc.x0[k] - fc.x1[k];
    fc.edge_gcd = gcd_of_points({diff});
    require(fc.edge_gcd > 0 && std::gcd(d1, d2) % fc.edge_gcd == 0,
            "edge gcd does not divide gcd(d1, d2)");
    return fc;
}

IrreducibilityCertificate degree_gcd_criterion(const Polynomial& p) {
    auto splits = find_splits(p);
    IrreducibilityCertificate cert;

    const SplitDecomposition* hit = nullptr;
    std::vector<std::string> also;
    for (const auto& s : splits) {
        if (std::gcd(s.degree_I, s.degree_J) != 1) continue;
        if (!hit) hit = &s;
        else also.push_back(split_text(s));
    }
    if (!hit) {
        cert.notes = splits.empty()
                         ? "no disjoint-variable split"
                         : std::to_string(splits.size()) + " split(s), none with coprime degrees";
        return cert;
    }

    cert.verdict = Verdict::Irreducible;
    cert.criterion = Criterion::DegreeGcd;
    cert.split = *hit;
    cert.degrees = {hit->degree_I, hit->degree_J};
    cert.degree_gcd = 1;
    cert.face_chain = build_face_chain(*hit);
    cert.edge = {cert.face_chain->x0, cert.face_chain->x1, cert.face_chain->edge_gcd};
    std::ostringstream note;
    note << "split " << split_text(*hit) << ": degrees (" << hit->degree_I << ","
         << hit->degree_J << "), gcd 1";
    if (!also.empty()) {
        note << "; other coprime splits:";
        for (const auto& a : also) note << " " << a;
    }
    cert.notes = note.str();
    return cert;
}

IrreducibilityCertificate face_criterion(const Polynomial& p, const OracleBudget& budget) {
    auto splits = find_splits(p);
    IrreducibilityCertificate cert;
    std::vector<std::string> log;

    for (const auto& s : splits) {
        for (char side : {'I', 'J'}) {
            // Testing one part: the constant term is pushed to the other
            // part, so the tested part vanishes at the origin.
            const Polynomial part =
                side == 'I' ? s.part_I : strip_constant(s.part_J);
            auto np = newton_polytope(part);
            if (np.vertex_count() < 2) {
                log.push_back("split " + split_text(s) + " part " + side + ": singleton polytope");
                continue;
            }
            auto dec = decide_polytope_indecomposable(np, budget);
            if (dec.verdict == DecompVerdict::Indecomposable) {
                cert.verdict = Verdict::Irreducible;
                cert.criterion = Criterion::FaceIndecomposable;
                cert.split = s;
                cert.degrees = {s.degree_I, s.degree_J};
                cert.face_part = side;
                cert.face_method = dec.method;
                cert.notes = "split " + split_text(s) + ": part " + side +
                             " Newton polytope is integrally indecomposable (" + dec.method + ")";
                return cert;
            }
            if (dec.verdict == DecompVerdict::Unknown)
                log.push_back("split " + split_text(s) + " part " + side + ": budget (" +
                              dec.note + ")");
            else
                log.push_back("split " + split_text(s) + " part " + side + ": decomposable");
        }
    }
    if (splits.empty()) cert.notes = "no disjoint-variable split";
    else {
        std::string joined;
        for (const auto& l : log) {
            if (!joined.empty()) joined += "; ";
            joined += l;
        }
        cert.notes = joined;
    }
    return cert;
}

IrreducibilityCertificate gao_direct(const Polynomial& p, const OracleBudget& budget) {
    if (p.is_constant()) throw std::domain_error("gao_direct of a constant polynomial");
    std::vector<int> offending;
    for (int i = 0; i < p.n_vars(); ++i)
        if (p.divisible_by_variable(i)) offending.push_back(i);
    if (!offending.empty()) {
        std::string msg = "polynomial is divisible by";
        for (size_t k = 0; k < offending.size(); ++k)
            msg += (k ? ", " : " ") + var_name(offending[k], {});
        throw std::invalid_argument(msg);
    }

    IrreducibilityCertificate cert;
    auto np = newton_polytope(p);
    auto r = brute_force_decomposable(np, budget);
    if (r.verdict == DecompVerdict::Indecomposable) {
        cert.verdict = Verdict::Irreducible;
        cert.criterion = Criterion::GaoDirect;
        cert.notes = "Newton polytope is integrally indecomposable (oracle)";
    } else if (r.verdict == DecompVerdict::Decomposable) {
        cert.notes = "Newton polytope is integrally decomposable";
    } else {
        cert.notes = "budget (" + r.note + ")";
    }
    return cert;
}

IrreducibilityCertificate decide_irreducibility(const Polynomial& p, const OracleBudget& budget) {
    if (p.is_constant()) throw std::domain_error("verdict of a constant polynomial");
    std::vector<std::string> log;

    auto c1 = degree_gcd_criterion(p);
    if (c1.verdict == Verdict::Irreducible) return c1;
    log.push_back("degree_gcd: " + c1.notes);

    auto c2 = face_criterion(p, budget);
    if (c2.verdict == Verdict::Irreducible) {
        c2.notes = log[0] + " | face: " + c2.notes;
        return c2;
    }
    log.push_back("face: " + c2.notes);

    std::vector<int> offending;
    for (int i = 0; i < p.n_vars(); ++i)
        if (p.divisible_by_variable(i)) offending.push_back(i);
    if (offending.empty()) {
        auto c3 = gao_direct(p, budget);
        if (c3.verdict == Verdict::Irreducible) {
            std::string prefix;
            for (const auto& l : log) prefix += l + " | ";
            c3.notes = prefix + "gao: " + c3.notes;
            return c3;
        }
        log.push_back("gao: " + c3.notes);
    } else {
        std::string names;
        for (size_t k = 0; k < offending.size(); ++k)
            names += (k ? ", " : "") + var_name(offending[k], {});
        log.push_back("divisible by " + names + " - Gao criterion inapplicable");
    }

    IrreducibilityCertificate cert;
    std::string joined;
    for (const auto& l : log) {
        if (!joined.empty()) joined += " | ";
        joined += l;
    }
    cert.notes = joined;
    return cert;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool validate_split(const Polynomial& p, const IrreducibilityCertificate& cert,
                    SplitDecomposition& rebuilt, std::string* why) {
    if (!cert.split) return fail(why, "certificate lacks a split");
    const auto& s = *cert.split;
    std::vector<bool> seen(p.n_vars(), false);
    for (int i : s.index_set_I) {
        if (i < 0 || i >= p.n_vars() || seen[i]) return fail(why, "bad index set I");
        seen[i] = true;
    }
    for (int j : s.index_set_J) {
        if (j < 0 || j >= p.n_vars() || seen[j]) return fail(why, "index sets overlap");
        seen[j] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        return fail(why, "index sets do not cover all variables");
    if (s.index_set_I.empty() || s.index_set_J.empty())
        return fail(why, "empty side in split");
    try {
        rebuilt = make_split(p, s.index_set_I, s.index_set_J);
    } catch (const std::exception& e) {
        return fail(why, std::string("split does not partition p: ") + e.what());
    }
    if (rebuilt.part_I.is_constant() || rebuilt.part_J.is_constant())
        return fail(why, "split part is constant");
    if (cert.degrees &&
        (cert.degrees->first != rebuilt.degree_I || cert.degrees->second != rebuilt.degree_J))
        return fail(why, "stored degrees do not match the split");
    return true;
}

bool validate_chain(const Polynomial& p, const SplitDecomposition& s, const FaceChain& fc,
                    std::string* why) {
    const int n = p.n_vars();
    std::vector<long long> raw(n, 0);
    for (int i : s.index_set_I) raw[i] = s.degree_J;
    for (int j : s.index_set_J) raw[j] = s.degree_I;
    if (raw != fc.h0_raw_normal ||
        fc.h0_raw_offset != static_cast<long long>(s.degree_I) * s.degree_J)
        return fail(why, "raw H0 does not match the split degrees");
    if (Hyperplane(raw, fc.h0_raw_offset) != fc.h0)
        return fail(why, "normalized H0 mismatch");

    IntegralPolytope np = newton_polytope(p);
    if (!is_supporting(np, fc.h0)) return fail(why, "H0 does not support N(p)");
    if (!(face(np, fc.h0).face == fc.c0)) return fail(why, "C0 mismatch");

    if (fc.apex_sets.size() != s.index_set_I.size() + 1)
        return fail(why, "apex set count mismatch");
    if (fc.chain.size() != s.index_set_I.size()) return fail(why, "chain length mismatch");
    for (size_t k = 0; k + 1 < fc.apex_sets.size(); ++k)
        for (const auto& v : fc.apex_sets[k + 1])
            if (std::find(fc.apex_sets[k].begin(), fc.apex_sets[k].end(), v) ==
                fc.apex_sets[k].end())
                return fail(why, "apex sets are not nested");
    if (fc.apex_sets.back().size() != 1 || fc.apex_sets.back()[0] != fc.x0)
        return fail(why, "final apex set is not {x0}");

    IntegralPolytope cur = fc.c0;
    for (const auto& [h, c] : fc.chain) {
        if (!is_supporting(cur, h)) return fail(why, "chain plane does not support its parent");
        if (!(face(cur, h).face == c)) return fail(why, "chain face mismatch");
        cur = c;
    }

    if (coordinate_sum(fc.x0, s.index_set_I) != s.degree_I)
        return fail(why, "x0 coordinate sum != d_I");
    if (coordinate_sum(fc.x1, s.index_set_J) != s.degree_J)
        return fail(why, "x1 coordinate sum != d_J");

    LatticePoint diff(n);
    for (int k = 0; k < n; ++k) diff[k] = fc.x0[k] - fc.x1[k];
    if (gcd_of_points({diff}) != fc.edge_gcd) return fail(why, "edge gcd mismatch");
    if (std::gcd(s.degree_I, s.degree_J) % fc.edge_gcd != 0)
        return fail(why, "edge gcd does not divide gcd of degrees");
    auto seg = IntegralPolytope::from_vertices(n, {fc.x0, fc.x1});
    if (!is_face_of(seg, np)) return fail(why, "[x0, x1] is not an edge of N(p)");
    return true;
}

}  // namespace

bool recheck_certificate(const Polynomial& p, const IrreducibilityCertificate& cert,
                         std::string* why) {
    if (cert.verdict != Verdict::Irreducible) return true;  // nothing to witness
    switch (cert.criterion) {
        case Criterion::None:
            return fail(why, "irreducible verdict without a criterion");
        case Criterion::DegreeGcd: {
            SplitDecomposition s;
            if (!validate_split(p, cert, s, why)) return false;
            if (std::gcd(s.degree_I, s.degree_J) != 1)
                return fail(why, "degrees are not coprime");
            if (!cert.degree_gcd || *cert.degree_gcd != 1)
                return fail(why, "stored gcd is not 1");
            if (!cert.face_chain) return fail(why, "missing face chain");
            if (!validate_chain(p, s, *cert.face_chain, why)) return false;
            if (!cert.edge) return fail(why, "missing edge");
            const auto& [x0, x1, g] = *cert.edge;
            if (x0 != cert.face_chain->x0 || x1 != cert.face_chain->x1 ||
                g != cert.face_chain->edge_gcd)
                return fail(why, "edge disagrees with the chain");
            if (g != 1) return fail(why, "edge is not primitive");
            return true;
        }
        case Criterion::FaceIndecomposable: {
            SplitDecomposition s;
            if (!validate_split(p, cert, s, why)) return false;
            if (cert.face_part != 'I' && cert.face_part != 'J')
                return fail(why, "missing face part");
            const Polynomial part =
                cert.face_part == 'I' ? s.part_I : strip_constant(s.part_J);
            auto np = newton_polytope(part);
            if (np.vertex_count() < 2) return fail(why, "part polytope is a singleton");
            auto dec = decide_polytope_indecomposable(np, {});
            if (dec.verdict != DecompVerdict::Indecomposable)
                return fail(why, "part polytope not confirmed indecomposable");
            return true;
        }
        case Criterion::GaoDirect: {
            for (int i = 0; i < p.n_vars(); ++i)
                if (p.divisible_by_variable(i))
                    return fail(why, "polynomial divisible by a variable");
            auto r = brute_force_decomposable(newton_polytope(p), {});
            if (r.verdict != DecompVerdict::Indecomposable)
                return fail(why, "Newton polytope not confirmed indecomposable");
            return true;
        }
    }
    return fail(why, "unknown criterion");
}

}  // namespace irredpoly
