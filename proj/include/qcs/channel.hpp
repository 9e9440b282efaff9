#ifndef QCS_CHANNEL_HPP
#define QCS_CHANNEL_HPP

#include <optional>

#include "qcs/decode.hpp"

// Monte Carlo study of the depolarizing channel: sample errors, decode with
// the syndrome lookup table, accumulate block error rates, and locate the
// crossover probability between codes.

namespace qcs {

enum class ChannelModel {
    DepolarizingSplit,  // X, Y, Z each with probability prob/3
    IndependentXZ,      // X and Z flips independently with probability prob
};

struct ChannelParams {
    double prob = 0.0;
    ChannelModel model = ChannelModel::DepolarizingSplit;
    u64 trials = 1;
    u64 seed = 0;
};

struct QberPoint {
    std::string code_id;
    double prob = 0.0;
    u64 trials = 0;
    u64 errors = 0;
    double qber = 0.0;
    double stderr_ = 0.0;
};

// Counter-based generator: the stream is a pure function of (seed, stream,
// counter), so per-trial substreams are reproducible across worker counts.
struct CounterRng {
    u64 key = 0;
    u64 ctr = 0;

    CounterRng(u64 seed, u64 stream);
    u64 next_u64();
    double next_double();  // uniform in [0, 1)
};

// One channel use on n positions; returns the (x, z) bitmask pair (p = 2).
std::pair<u64, u64> sample_error(const ChannelParams& params, u32 n, CounterRng& rng);

// One point of the QBER curve.  A block error is any nonzero residual
// (true + recovered); residuals inside S still count (no degeneracy credit).
QberPoint qber_point(const SyndromeTable& table, const std::string& code_id,
                     const ChannelParams& params, u32 prob_index, u32 workers);

std::vector<QberPoint> run_qber(const SyndromeTable& table, const std::string& code_id,
                                const ChannelParams& base, const std::vector<double>& probs,
                                u32 workers);

// Crossing abscissa of two QBER curves on a common grid, by linear
// interpolation at the first sign change of the difference; empty when one
// curve dominates throughout.
std::optional<double> find_threshold(const std::vector<QberPoint>& a,
                                     const std::vector<QberPoint>& b);

}  // namespace qcs

#endif
