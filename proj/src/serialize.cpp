#include "irredpoly/serialize.hpp"

#include <stdexcept>

namespace irredpoly {

namespace {

Json points_to_json(const std::vector<LatticePoint>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

std::vector<LatticePoint> points_from_json(const Json& arr) {
    std::vector<LatticePoint> pts;
    for (const auto& e : arr) pts.push_back(e.get<LatticePoint>());
    return pts;
}

Json ones_based(const std::vector<int>& idx) {
    Json arr = Json::array();
    for (int i : idx) arr.push_back(i + 1);
    return arr;
}

std::vector<int> zero_based(const Json& arr) {
    std::vector<int> idx;
    for (const auto& e : arr) idx.push_back(e.get<int>() - 1);
    return idx;
}

Json plane_entry(const Hyperplane& h, const IntegralPolytope& body,
                 const std::vector<LatticePoint>& apex_set) {
    Json e;
    e["normal"] = h.normal();
    e["offset"] = h.offset();
    e["vertices"] = points_to_json(body.vertices());
    e["apex_set"] = points_to_json(apex_set);
    return e;
}

}  // namespace

Json polytope_to_json(const IntegralPolytope& pt) {
    Json j;
    j["dim"] = pt.dim();
    j["vertices"] = points_to_json(pt.vertices());
    return j;
}

IntegralPolytope polytope_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("vertices"))
        throw std::invalid_argument("polytope JSON needs \"dim\" and \"vertices\"");
    const int dim = j.at("dim").get<int>();
    auto pts = points_from_json(j.at("vertices"));
    if (pts.empty()) throw std::invalid_argument("polytope JSON with no vertices");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("vertex length does not match dim");
    return convex_hull(pts);
}

Json split_to_json(const SplitDecomposition& s) {
    Json j;
    j["I"] = ones_based(s.index_set_I);
    j["J"] = ones_based(s.index_set_J);
    j["degrees"] = {s.degree_I, s.degree_J};
    j["part_I"] = s.part_I.to_string();
    j["part_J"] = s.part_J.to_string();
    return j;
}

Json certificate_to_json(const IrreducibilityCertificate& cert) {
    Json j;
    j["verdict"] = to_string(cert.verdict);
    j["criterion"] = to_string(cert.criterion);
    if (cert.split) {
        j["split"] = {{"I", ones_based(cert.split->index_set_I)},
                      {"J", ones_based(cert.split->index_set_J)}};
    }
    if (cert.degrees) j["degrees"] = {cert.degrees->first, cert.degrees->second};
    if (cert.degree_gcd) j["gcd"] = *cert.degree_gcd;
    if (cert.face_chain) {
        const auto& fc = *cert.face_chain;
        j["h0"] = {{"normal", fc.h0_raw_normal},
                   {"offset", fc.h0_raw_offset},
                   {"primitive_normal", fc.h0.normal()},
                   {"primitive_offset", fc.h0.offset()}};
        Json chain = Json::array();
        chain.push_back(plane_entry(fc.h0, fc.c0, fc.apex_sets.at(0)));
        for (size_t k = 0; k < fc.chain.size(); ++k)
            chain.push_back(
                plane_entry(fc.chain[k].first, fc.chain[k].second, fc.apex_sets.at(k + 1)));
        j["chain"] = std::move(chain);
    }
    if (cert.edge) {
        const auto& [x0, x1, g] = *cert.edge;
        j["edge"] = {{"x0", x0}, {"x1", x1}, {"gcd", g}};
    }
    if (cert.face_part) j["face_part"] = std::string(1, cert.face_part);
    if (!cert.face_method.empty()) j["face_method"] = cert.face_method;
    j["notes"] = cert.notes;
    return j;
}

IrreducibilityCertificate certificate_from_json(const Json& j, const Polynomial* p) {
    IrreducibilityCertificate cert;
    const std::string verdict = j.at("verdict").get<std::string>();
    cert.verdict = verdict == "Irreducible" ? Verdict::Irreducible : Verdict::Inconclusive;
    const std::string crit = j.at("criterion").get<std::string>();
    if (crit == "DegreeGcd") cert.criterion = Criterion::DegreeGcd;
    else if (crit == "FaceIndecomposable") cert.criterion = Criterion::FaceIndecomposable;
    else if (crit == "GaoDirect") cert.criterion = Criterion::GaoDirect;
    else cert.criterion = Criterion::None;

    if (j.contains("split")) {
        auto I = zero_based(j.at("split").at("I"));
        auto J = zero_based(j.at("split").at("J"));
        if (p) {
            cert.split = make_split(*p, I, J);
        } else {
            SplitDecomposition s;
            s.index_set_I = I;
            s.index_set_J = J;
            if (j.contains("degrees")) {
                s.degree_I = j.at("degrees").at(0).get<int>();
                s.degree_J = j.at("degrees").at(1).get<int>();
            }
            cert.split = std::move(s);
        }
    }
    if (j.contains("degrees"))
        cert.degrees = {j.at("degrees").at(0).get<int>(), j.at("degrees").at(1).get<int>()};
    if (j.contains("gcd")) cert.degree_gcd = j.at("gcd").get<long long>();

    if (j.contains("h0") && j.contains("chain")) {
        FaceChain fc;
        fc.h0_raw_normal = j.at("h0").at("normal").get<std::vector<long long>>();
        fc.h0_raw_offset = j.at("h0").at("offset").get<long long>();
        fc.h0 = Hyperplane(j.at("h0").at("primitive_normal").get<std::vector<long long>>(),
                           j.at("h0").at("primitive_offset").get<long long>());
        const auto& chain = j.at("chain");
        if (chain.empty()) throw std::invalid_argument("empty chain");
        const int dim = static_cast<int>(fc.h0_raw_normal.size());
        for (size_t k = 0; k < chain.size(); ++k) {
            const auto& e = chain.at(k);
            Hyperplane h(e.at("normal").get<std::vector<long long>>(),
                         e.at("offset").get<long long>());
            auto body = IntegralPolytope::from_vertices(dim, points_from_json(e.at("vertices")));
            fc.apex_sets.push_back(points_from_json(e.at("apex_set")));
            if (k == 0) fc.c0 = body;
            else fc.chain.emplace_back(h, body);
        }
        if (j.contains("edge")) {
            fc.x0 = j.at("edge").at("x0").get<LatticePoint>();
            fc.x1 = j.at("edge").at("x1").get<LatticePoint>();
            fc.edge_gcd = j.at("edge").at("gcd").get<long long>();
        }
        cert.face_chain = std::move(fc);
    }
    if (j.contains("edge"))
        cert.edge = {j.at("edge").at("x0").get<LatticePoint>(),
                     j.at("edge").at("x1").get<LatticePoint>(),
                     j.at("edge").at("gcd").get<long long>()};
    if (j.contains("face_part")) cert.face_part = j.at("face_part").get<std::string>().at(0);
    if (j.contains("face_method")) cert.face_method = j.at("face_method").get<std::string>();
    if (j.contains("notes")) cert.notes = j.at("notes").get<std::string>();
    return cert;
}

Json decomposition_to_json(const DecompositionResult& r) {
    Json j;
    switch (r.verdict) {
        case DecompVerdict::Decomposable: j["verdict"] = "decomposable"; break;
        case DecompVerdict::Indecomposable: j["verdict"] = "indecomposable"; break;
        case DecompVerdict::Unknown: j["verdict"] = "unknown"; break;
    }
    if (r.summands)
        j["summands"] = {polytope_to_json(r.summands->first),
                         polytope_to_json(r.summands->second)};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace irredpoly
