#ifndef QCS_DECODE_HPP
#define QCS_DECODE_HPP

#include "qcs/distance.hpp"

// Syndrome computation and the algebraic decoding pipeline: syndrome
// polynomial -> reduction mod h -> Berlekamp-Massey + root search + linear
// magnitude solve -> split back into the error pair.

namespace qcs {

// Everything the decoder needs, derived once per code.
struct DecoderCtx {
    Blueprint bp;
    SplitField sf;
    Sigma sigma;
    BchReport bch;
    u32 tau = 0;       // floor((bch.d - 1) / 4)
    u32 run_start = 0; // first syndrome root exponent (w.r.t. beta_s)
    Gf::El beta_s;     // primitive n-th root underlying the longest run
    PauliVec gen1;     // (g, f) residues
    Gf::El alpha;      // -c0^{-1} eta^p: E_j = e2[i] + alpha * e1[i]
};

DecoderCtx make_decoder_ctx(const Blueprint& bp);

// r' over F_p, computed as the sum of shifted sigma-form values and checked
// against the closed form g(X) e2(X^{-m}) - f(X) e1(X^{-m}) mod X^n - 1.
Poly syndrome_polynomial(const DecoderCtx& ctx, const std::vector<u32>& e1,
                         const std::vector<u32>& e2);

// r = (r' / g) mod h over F_{p^2}
Poly reduce_syndrome(const DecoderCtx& ctx, const Poly& rprime);

struct DecodeResult {
    bool ok = false;
    std::string reason;
    Poly E;                   // combined error polynomial over F_{p^2}
    std::vector<u32> e1, e2;  // recovered pair (valid when ok)
};

// Recover E with at most 2*tau nonzero coefficients and E = r mod h.
DecodeResult bmw_decode(const DecoderCtx& ctx, const Poly& r);

// Decompose E back into the error pair (position map j -> -m*j mod n).
void split_error(const DecoderCtx& ctx, const Poly& E, std::vector<u32>& e1,
                 std::vector<u32>& e2);

// Full pipeline from an explicit error pair.
DecodeResult decode_error(const DecoderCtx& ctx, const std::vector<u32>& e1,
                          const std::vector<u32>& e2);

// Hard-decision lookup decoder state for the Monte Carlo study (p = 2,
// n <= 32).  Syndromes are sigma-form values against the stabilizer rows.
struct SyndromeTable {
    u32 n = 0;
    u32 rows = 0;                  // number of stabilizer generators = n - k
    std::vector<u64> syn_x, syn_z; // per-position syndrome masks
    std::vector<u64> leader_x, leader_z;
    std::vector<unsigned char> have;
    u32 max_weight = 0;

    u64 syndrome_of(u64 x, u64 z) const;
};

// Leaders filled by ascending joint weight, lexicographic (x, z) tie-break.
SyndromeTable build_syndrome_table(const Blueprint& bp, u32 max_weight);

}  // namespace qcs

#endif
