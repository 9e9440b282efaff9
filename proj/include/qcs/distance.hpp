#ifndef QCS_DISTANCE_HPP
#define QCS_DISTANCE_HPP

#include "qcs/construct.hpp"

// Distance analysis: the BCH-style bound from consecutive roots of h, and
// exhaustive minimum-weight search over the nonzero centralizer cosets.

namespace qcs {

struct BchReport {
    u32 d = 1;         // 1 + longest consecutive root run of h
    ExpRun run;        // the run, over the best primitive root beta^s
    u32 detect = 0;    // floor((d+1)/2) - 1 errors detected beyond correction
    u32 correct = 0;   // floor((d-1)/4) errors corrected
};

BchReport bch_distance(const Blueprint& bp);

// Minimum joint weights over the nonzero multiples w of h (= C(S)), both
// with S excluded (undetectable-error distance) and with S included (no
// degeneracy credit, the published table's accounting).  The weight of w is
// that of the pair (w1, w2) (raw) or (w1, sigma w2) (sigma).  UINT32_MAX
// means the respective set is empty.
struct BruteResult {
    bool completed = false;
    u64 total_messages = 0;  // p^{2K} - 1 candidate messages
    u32 raw = 0;             // min over C(S) \ S
    u32 sigma = 0;
    u32 raw_all = 0;         // min over C(S) \ {0}
    u32 sigma_all = 0;
};

// Number of candidate messages the exhaustive search would enumerate.
u64 brute_message_count(const Blueprint& bp);

// Exhaustive search; returns completed = false without work when the
// message count exceeds `budget`.  `workers` = 0 picks a default.
BruteResult brute_force_distance(const Blueprint& bp, u64 budget, u32 workers);

struct DetectCorrect {
    u32 detect = 0, correct = 0;
};

// d-1 detectable, floor((d-1)/2) correctable
DetectCorrect detect_correct_from_distance(u32 d);

}  // namespace qcs

#endif
