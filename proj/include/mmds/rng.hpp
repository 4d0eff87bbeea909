#pragma once

#include "mmds/rational.hpp"
#include "mmds/system.hpp"

#include <cstdint>
#include <vector>

namespace mmds {

// Counter-based splitmix64. Deterministic across platforms, cheap to
// split: stream k of seed s is just Rng(hash(s, k)).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), rejection sampled
    std::uint64_t below(std::uint64_t bound);

    // uniform BigInt in [0, bound)
    BigInt big_below(const BigInt& bound);

private:
    std::uint64_t state_;
};

std::vector<int> random_permutation(Rng& rng, int n);
std::vector<int> random_map(Rng& rng, int n);

// Uniform over all set partitions of [n], via the completion-count table
// T(r, m) = m T(r-1, m) + T(r-1, m+1), T(0, m) = 1.
Partition random_partition(Rng& rng, int n);

// Uniform partition + uniform dynamics (permutation when invertible_only).
System random_system(Rng& rng, int n, bool invertible_only);

// Uniform partition + uniform reversible pair: a permutation alpha and an
// involution r with r a r = a^{-1}. Built by conjugation: pick any
// permutation s and involution r0 = id, then alpha = s r0 s^{-1}... that
// is not uniform over pairs; instead we sample r as a uniform involution
// and alpha as w r for a uniform involution w, since every alpha with
// r alpha r = alpha^{-1} factors as (alpha r) r with alpha r an involution.
System random_reversible_system(Rng& rng, int n);

std::vector<int> random_involution(Rng& rng, int n);

} // namespace mmds
