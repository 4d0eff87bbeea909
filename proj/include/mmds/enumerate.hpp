#pragma once

// Brute-force scans over all (partition, permutation) pairs, closed-form
// counting theorems, the max-decrease bound with its witness, and the
// asymptotic zone growth classifier.

#include "mmds/rational.hpp"
#include "mmds/system.hpp"

#include <map>
#include <vector>

namespace mmds {

std::vector<BigInt> bell_numbers(int up_to);

// all set partitions of [n] as canonical Partitions, in restricted
// growth string order
std::vector<Partition> all_partitions(int n);

struct CountLedger {
    int n = 0;
    BigInt total_pairs;                       // n! * B_n
    std::map<long, BigInt> histogram;         // |D| -> pair count
    std::map<std::pair<long, long>, BigInt> joint;  // (|D|,|I|) -> count
    BigInt sum_D, sum_I;
    long max_D = 0;
    std::vector<BigInt> bell;                 // B_1..B_n
    BigRat mean_D_fraction() const { return BigRat(sum_D, total_pairs * n); }
};

CountLedger scan_all(int n, int threads = 1);

bool mean_D_equals_mean_I(int n, int threads = 1);

// largest possible number of strict decreases over all permutations:
// |X| - max_k |pihat_k|, with a witness flowing down the zone rows
struct MaxDecreases {
    long count = 0;
    std::vector<int> witness;   // permutation achieving the bound
};

MaxDecreases max_decreases(const Partition& p);

// max over all partitions of [n] of the above, by scanning numerical
// partitions of n
long d_X(int n);

BigInt count_always_increasing_by_partition(const Partition& p);
BigRat probability_always_increasing(const Partition& p);

BigInt count_always_increasing_by_permutation(int n, const std::vector<int>& alpha);

// both sides of the pair-counting identity plus the raw scan (n <= 6)
struct DualityReport {
    BigInt by_partition;
    BigInt by_permutation;
    BigInt by_raw_scan;
    bool agree = false;
};

DualityReport duality_identity(int n);

enum class GrowthPattern { Polynomial, Exponential, SuperExponential };

struct ZoneGrowthReport {
    std::vector<BigRat> ratio;   // max |D|/|X| for each finite stage
    BigRat limit;                // 1, 1/r or 0
    GrowthPattern pattern;
};

// zone mass at stage s given by the pattern: a*s^r, a*r^s, or s^s
ZoneGrowthReport zone_growth_limit(GrowthPattern pattern, long a, long r, int n_max);

// exact max-decrease fraction 1 - 2 C(2n+1, n)/2^(2n+1) for the odd
// power set spaces
std::vector<BigRat> power_set_decrease_ratios(int n_max);

} // namespace mmds
