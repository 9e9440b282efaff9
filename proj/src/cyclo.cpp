#include "qcs/cyclo.hpp"

#include <algorithm>
#include <numeric>

namespace qcs {

std::vector<std::vector<u32>> cyclotomic_cosets(u32 n, u64 q) {
    if (std::gcd(q % n, static_cast<u64>(n)) != 1)
        throw domain_error("cyclotomic_cosets: gcd(n, q) != 1");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<u32>> cosets;
    for (u32 i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<u32> coset;
        u64 j = i;
        do {
            coset.push_back(static_cast<u32>(j));
            seen[j] = true;
            j = j * q % n;
        } while (j != i);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

const Factor& FactorSet::by_index(u32 idx) const {
    for (const auto& f : factors)
        if (f.index == idx) return f;
    throw domain_error("FactorSet: no factor with index " + std::to_string(idx));
}

bool FactorSet::has_index(u32 idx) const {
    return std::any_of(factors.begin(), factors.end(),
                       [idx](const Factor& f) { return f.index == idx; });
}

FactorSet factor_xn_minus_1(u32 n, const QuadExt& ext, const SplitField& sf,
                            bool base_is_fp2) {
    const u32 p = ext.gf.p();
    const u64 q = base_is_fp2 ? static_cast<u64>(p) * p : p;
    FactorSet fs;
    fs.n = n;
    for (const auto& coset : cyclotomic_cosets(n, q)) {
        // minimal polynomial: product of (X - beta^i) over the coset
        Poly prod = p_one(sf.gf);
        for (u32 i : coset) {
            Poly lin{{sf.gf.neg(sf.gf.pow(sf.beta, i)), sf.gf.one()}};
            prod = p_mul(sf.gf, prod, lin);
        }
        Factor fac;
        fac.index = coset.front();
        fac.coset = coset;
        Poly in_fp2 = project_split_to_fp2(sf, ext.gf, prod);
        if (base_is_fp2) {
            fac.poly = std::move(in_fp2);
        } else {
            Gf fp = make_prime_field(p);
            fac.poly = project_fp2_to_fp(fp, in_fp2);
        }
        fs.factors.push_back(std::move(fac));
    }
    // consistency: the factors multiply back to X^n - 1
    Gf base = base_is_fp2 ? ext.gf : make_prime_field(p);
    Poly check = p_one(base);
    for (const auto& f : fs.factors) check = p_mul(base, check, f.poly);
    if (!(check == p_xn_minus_1(base, n)))
        throw algebra_error("factor_xn_minus_1: factors do not multiply to X^n - 1");
    return fs;
}

ExpRun longest_consecutive_run(const std::vector<u32>& exponents, u32 n) {
    std::vector<bool> in(n, false);
    for (u32 e : exponents) in[e % n] = true;
    ExpRun best;
    best.s = 1;
    if (exponents.empty()) return best;
    // all exponents present: the run wraps the whole cycle
    if (exponents.size() >= n) return ExpRun{0, n, 1};
    for (u32 s0 = 0; s0 < n; ++s0) {
        if (!in[s0] || in[(s0 + n - 1) % n]) continue;  // not a run start
        u32 len = 0;
        while (in[(s0 + len) % n]) ++len;
        if (len > best.len) {
            best.start = s0;
            best.len = len;
        }
    }
    return best;
}

std::vector<u32> relabel_exponents(const std::vector<u32>& exponents, u32 n, u32 s) {
    if (std::gcd(s, n) != 1)
        throw domain_error("relabel_exponents: s not a unit mod n");
    // s^{-1} mod n
    u64 sinv = 0;
    for (u64 t = 1; t < n; ++t)
        if (t * s % n == 1) { sinv = t; break; }
    if (n == 1) sinv = 0;
    std::vector<u32> out;
    out.reserve(exponents.size());
    for (u32 e : exponents) out.push_back(static_cast<u32>(sinv * e % n));
    std::sort(out.begin(), out.end());
    return out;
}

ExpRun best_run_over_primitive_roots(const std::vector<u32>& exponents, u32 n) {
    ExpRun best;
    for (u32 s = 1; s < std::max<u32>(n, 2); ++s) {
        if (n > 1 && std::gcd(s, n) != 1) continue;
        ExpRun r = longest_consecutive_run(relabel_exponents(exponents, n, s), n);
        r.s = s;
        if (r.len > best.len) best = r;
        if (best.len >= n) break;
    }
    if (best.len == 0) best.s = 1;
    return best;
}

}  // namespace qcs
