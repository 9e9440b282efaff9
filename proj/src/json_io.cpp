#include "qcs/json_io.hpp"

namespace qcs {

namespace {

using nlohmann::json;

json fp_poly_to_json(const Poly& a) {
    json arr = json::array();
    for (const auto& c : a.c) arr.push_back(c[0]);
    return arr;
}

json fp2_poly_to_json(const Poly& a) {
    json arr = json::array();
    for (const auto& c : a.c) arr.push_back(json::array({c[0], c[1]}));
    return arr;
}

Poly fp_poly_from_json(const Gf& fp, const json& j) {
    std::vector<u32> coeffs;
    for (const auto& v : j) coeffs.push_back(v.get<u32>());
    return p_from_ints(fp, coeffs);
}

Poly fp2_poly_from_json(const Gf& fp2, const json& j) {
    std::vector<Gf::El> coeffs;
    for (const auto& v : j) coeffs.push_back(fp2.make({v[0].get<u32>(), v[1].get<u32>()}));
    return p_make(fp2, coeffs);
}

}  // namespace

nlohmann::json blueprint_to_json(const Blueprint& bp) {
    json j;
    j["n"] = bp.triplet.n;
    j["p"] = bp.triplet.p;
    j["m"] = bp.triplet.m;
    j["t"] = bp.triplet.t;
    j["c0"] = bp.ext.c0;
    j["c1"] = bp.ext.c1;
    j["g"] = fp_poly_to_json(bp.g);
    j["h"] = fp2_poly_to_json(bp.h);
    j["hbar"] = fp2_poly_to_json(bp.hbar);
    j["a"] = fp_poly_to_json(bp.a);
    j["f"] = fp_poly_to_json(bp.f);
    j["k"] = bp.k;
    j["g_cosets"] = bp.g_cosets;
    j["h_cosets"] = bp.h_cosets;
    j["h_exponents"] = bp.h_exponents;
    return j;
}

Blueprint blueprint_from_json(const nlohmann::json& j) {
    Blueprint bp;
    bp.triplet.n = j.at("n").get<u32>();
    bp.triplet.p = j.at("p").get<u32>();
    bp.triplet.m = j.at("m").get<i64>();
    bp.triplet.t = j.at("t").get<u32>();
    bp.ext = make_quad_ext(bp.triplet.p, j.at("c0").get<u32>(), j.at("c1").get<u32>());
    Gf fp = make_prime_field(bp.triplet.p);
    bp.g = fp_poly_from_json(fp, j.at("g"));
    bp.h = fp2_poly_from_json(bp.ext.gf, j.at("h"));
    bp.hbar = fp2_poly_from_json(bp.ext.gf, j.at("hbar"));
    bp.a = fp_poly_from_json(fp, j.at("a"));
    bp.f = fp_poly_from_json(fp, j.at("f"));
    bp.k = j.at("k").get<u32>();
    bp.g_cosets = j.at("g_cosets").get<std::vector<std::vector<u32>>>();
    bp.h_cosets = j.at("h_cosets").get<std::vector<std::vector<u32>>>();
    bp.h_exponents = j.at("h_exponents").get<std::vector<u32>>();
    return bp;
}

}  // namespace qcs
