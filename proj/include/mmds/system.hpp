#pragma once

// Core types: finite microstate sets, partitions into macrostates,
// deterministic dynamics and optional reversion, plus the exact
// entropy / transition-count analyses built on top of them.

#include "mmds/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mmds {

// Partition of {0,...,n-1}. Blocks are canonical: each block sorted
// ascending, blocks ordered by (size, first element).
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // microstate -> block index
};

Partition make_partition(int n, const std::vector<std::vector<int>>& blocks);
Partition partition_from_labels(const std::vector<int>& labels);
bool same_partition(const Partition& a, const Partition& b);

// Zones: group blocks by cardinality. sizes is strictly increasing,
// so sizes.size() is the number of distinct block sizes.
struct ZoneProfile {
    std::vector<long> sizes;                    // k_1 < ... < k_o
    std::vector<long> zone_card;                // k_j * (#blocks of size k_j)
    std::vector<std::vector<int>> zone_blocks;  // block indices per zone
    std::vector<std::vector<int>> zone_members; // microstates per zone, sorted
    std::vector<int> zone_of_block;
    std::vector<int> zone_of;                   // microstate -> zone
};

ZoneProfile zone_profile(const Partition& p);

struct System {
    int n = 0;
    Partition part;
    std::vector<int> alpha;
    std::optional<std::vector<int>> reversion;

    bool invertible() const;
    int block_of(int i) const { return part.block_of[i]; }
    long block_size(int i) const { return (long)part.blocks[part.block_of[i]].size(); }
};

// Validates everything: alpha a function on [n], blocks a partition,
// and when a reversion is given, r*r = id and r*alpha*r = alpha^{-1}
// (which forces alpha to be a bijection).
System build_system(int n, const std::vector<std::vector<int>>& blocks,
                    const std::vector<int>& alpha,
                    const std::optional<std::vector<int>>& reversion = std::nullopt);

std::vector<int> inverse_permutation(const std::vector<int>& p);
std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g); // f after g
std::vector<int> iterate_map(const std::vector<int>& f, long steps); // steps >= 0, or <0 if bijective
bool is_permutation(const std::vector<int>& f);

// --- entropy ---

struct EntropyReport {
    std::vector<long> block_sizes;
    double S_system = 0;                      // sum (|a|/n) ln|a|
    double H_macro = 0;                       // ln n - S
    double H_transition = 0;                  // conditional entropy of T
    double S_plus_H = 0;                      // = ln n, sanity value
};

EntropyReport entropy_report(const System& sys, long steps = 1);

double block_entropy(long size);           // ln |a|
double system_entropy(const Partition& p); // sum (|a|/n) ln |a|

// --- transition counts ---

// N[a][b] = #{ i in block b : alpha^steps(i) in block a }.
// Columns sum to |b|; rows sum to |a| exactly when alpha is invertible.
struct TransitionCounts {
    std::vector<std::vector<long>> N;   // indexed [to][from]
    std::vector<long> block_sizes;
    int nblocks = 0;
    BigRat T(int a, int b) const { return BigRat(N[a][b], block_sizes[b]); }
};

TransitionCounts transition_counts(const System& sys, long steps = 1);

// Zone-level counts: M[j][i] = # microstates moving from zone i to zone j.
std::vector<std::vector<long>> zone_transition_counts(const System& sys, long steps = 1);

// --- decrease / increase / conserve split ---

struct DICSplit {
    std::vector<int> D, I, C;   // sorted microstate lists
};

// Compares |block(alpha^steps(i))| with |block(i)| by exact integers.
DICSplit dic_split(const System& sys, long steps = 1);

std::vector<int> equilibrium_states(const System& sys);     // union of max-size blocks
std::vector<int> nonequilibrium_states(const System& sys);

// --- jumps ---

struct JumpStats {
    std::vector<long> jump;   // per microstate
    long total = 0;
    long max = 0;
    bool zero_jump = true;
};

JumpStats jump_stats(const System& sys, long steps = 1);

// --- orbits (invertible dynamics) ---

// Each orbit listed as i, alpha(i), alpha^2(i), ... starting from its
// smallest element; orbits sorted by that smallest element.
std::vector<std::vector<int>> orbits(const System& sys);

// --- equilibrium reaching time ---

struct EqTimeReport {
    std::vector<long> e;            // smallest k >= 0 with alpha^k(i) in X^eq
    long E = 0;                     // max over X
    bool equilibrium_bound = true;
    std::vector<int> witness_orbit; // a forward orbit never reaching X^eq, when not bound
};

EqTimeReport equilibrium_reaching_time(const System& sys);

// Derived macro observable (X, {0..E}, e, alpha): blocks are the level
// sets of the reaching time.
struct DerivedTimeSystem {
    System sys;
    std::vector<bool> level_meets_alpha_eq;  // alpha(X^eq) meets e^{-1}(k)?
    BigRat mean_jump;                        // mean jump of the derived system
};

DerivedTimeSystem derived_time_system(const System& sys);

// --- constructions ---

System product(const System& x, const System& y);
System disjoint_union(const System& x, const System& y);
System empty_system();

// First-return dynamics on Z (invertible systems only). Keeps the
// reversion when Z is r-closed.
System restrict_system(const System& sys, const std::vector<int>& Z);

// Merge blocks through a surjection g : blocks -> [m]. Asserts the merged
// partition is coarser in entropy (exact) and that H(p)+H(T) does not
// increase (1e-9 slack, see notes).
System coarse_grain(const System& sys, const std::vector<int>& g);

Partition meet(const Partition& a, const Partition& b);
Partition joint(const Partition& a, const Partition& b);  // join: components of block overlap graph

// --- typical sets ---

struct TypicalSetsReport {
    BigInt typical_micro_count;     // |X^n_eps|
    BigInt typical_macro_count;     // |A^n_eps|
    BigInt total_micro;             // |X|^n
    BigInt total_macro;             // |A|^n
    double S = 0;                   // per-copy system entropy
    bool micro_mass_bound = false;  // |X^n_eps| >= (1-eps)|X|^n
    bool macro_size_bounds = false; // every typical macro size within e^{n(S±eps)}
    bool macro_count_lower = false; // (1-eps)|A|^n e^{-n(S+eps)} <= |A^n_eps|
    bool macro_count_upper = false; // |A^n_eps| <= |A|^n e^{-n(S-eps)}
};

TypicalSetsReport typical_sets(const System& sys, int n_power, double eps);

// --- statistics spaces ---

// Occupancy models for p particles on b boxes. Returns the micro-macro
// partition for the chosen statistic.
enum class Statistic { MB, LB, BE, Gentile, FD, DI, II };

struct StatSpace {
    long n = 0;                 // number of microstates
    Partition part;
    std::vector<std::string> micro_labels;
};

StatSpace statistics_space(Statistic s, int particles, int boxes, int gentile_max = 0);

} // namespace mmds
