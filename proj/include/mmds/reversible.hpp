#pragma once

// Reversible-system machinery: the two sheet-doubling constructions, the
// chain-based orbit builders, the four-part decomposition of a reversible
// system, fluctuation identities, entropy production statistics, and the
// exponentially tilted block distribution.

#include "mmds/rational.hpp"
#include "mmds/system.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mmds {

// Sheet encoding for the doubled systems: (i,+1) -> i, (i,-1) -> n+i.
// make_IR keeps the original partition pulled back through the projection;
// make_ER doubles the macrostates, one copy per sheet.
System make_IR(const System& sys);
System make_ER(const System& sys);

// Chain-based reversible systems. Each chain is the list of macro labels
// along a linear order L_c; kind 'n' doubles the chain into one cycle with
// a fixed-point-free reversion, kind 'o' adds one reversion-fixed point
// labeled g[c], kind 't' adds two (labels g[c] and h[c]).
// The equivariant variants take an involution iota on labels; the second
// sheet is labeled through iota, and g/h labels must be iota-fixed.
enum class ChainKind { N, O, T, EqN, EqO, EqT };

System build_not(ChainKind kind, const std::vector<std::vector<int>>& chains,
                 const std::vector<int>& g = {}, const std::vector<int>& h = {},
                 const std::vector<int>& iota = {});

// Four-part decomposition of a reversible system by cycle type:
//   paired   - cycles exchanged with a distinct mirror cycle (doubling part)
//   self0    - self-mirrored cycles without reversion fixed points
//   self1    - self-mirrored with exactly one fixed point
//   self2    - self-mirrored with two fixed points
// The certificate phi maps the reassembled disjoint union back onto the
// original index set and is verified to commute with alpha, r and blocks.
enum class DecomposeMode { Invariant, Equivariant };

struct Decomposition {
    System base;        // the half-system whose doubling gives the paired part
    System part_paired; // IR- or ER-style doubling of base
    System part_n, part_o, part_t;
    System reassembled;
    std::vector<int> phi;          // reassembled index -> original index
    bool certificate_ok = false;
    long cycles_paired = 0, cycles_n = 0, cycles_o = 0, cycles_t = 0;
};

Decomposition decompose_reversible(const System& sys, DecomposeMode mode);

struct FluctuationReport {
    bool forward_backward = false;   // N_ab(alpha) == N_ba(alpha^{-1}) for all a,b
    bool reversion_identity = false; // N_ab(alpha) == |{i in r(a) : alpha(i) in r(b)}|
    bool checked_reversion = false;  // reversion present
};

FluctuationReport fluctuation_check(const System& sys);

// n-step entropy production. Values are kept as exact reduced integer
// pairs (|alpha^n i|, |i|); sigma(i) = ln(num/den)/n.
struct ProductionProfile {
    long n_steps = 1;
    std::vector<std::pair<long, long>> sigma_pair;  // reduced (after, before) per microstate
    std::vector<double> sigma;                       // ln ratio / n
    double mean_u = 0, mean_u_neq = 0, mean_q = 0;
    std::map<std::pair<long, long>, BigRat> density_u, density_u_neq, density_q;
    bool mean_u_zero = false;            // exact, invertible systems
    bool mean_u_neq_nonneg = false;      // exact sign
    bool mean_u_neq_zero = false;        // and whether it vanishes
    bool eq_invariant = false;           // X^eq invariant under alpha^n
    bool mean_q_nonneg = false;
    bool entropy_preserving_reversible = false;
    bool W_u_even = false;               // densities symmetric under pair swap
    bool W_u_neq_dominates = false;      // mass(x) >= mass(-x) for x > 0
    bool W_q_detailed_balance = false;   // mass(num,den) = (num/den) mass(den,num)
};

ProductionProfile production_profile(const System& sys, long n_steps);

// Exponential tilting of the per-block mean production: p_a proportional
// to exp(lambda sigma_bar(a)), lambda solved so the p-mean hits the target.
struct TiltedDistribution {
    double lambda = 0;
    std::vector<double> block_prob;   // per block
    std::vector<double> micro_prob;   // p_a / |a| per microstate
    std::vector<double> block_mean;   // sigma_bar per block
};

TiltedDistribution tilted_distribution(const System& sys, long n_steps, double target_mean);

} // namespace mmds
