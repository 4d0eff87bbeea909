#pragma once

// Second-law property checks: L1 through L4, the global / zonal / block
// arrows of time, their orbit-local variants, arrows of time around a
// microstate, and the sufficient-condition theorems implying them.
// All verdicts use exact rational arithmetic.

#include "mmds/rational.hpp"
#include "mmds/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mmds {

struct PropertyVerdict {
    bool holds = false;
    BigRat lhs;              // the tested ratio or worst sub-ratio
    BigRat bound;            // the epsilon side
    std::vector<long> witnesses;  // violating microstates / blocks / orbits, capped
    bool vacuous = false;    // e.g. GAT with empty X^neq
    std::vector<PropertyVerdict> parts;  // sub-verdicts for conjunctions
    std::string note;
};

inline void add_witness(PropertyVerdict& v, long w, size_t cap = 10) {
    if (v.witnesses.size() < cap) v.witnesses.push_back(w);
}

PropertyVerdict check_L1(const System& sys, const BigRat& eps, long steps = 1);
PropertyVerdict check_GAT(const System& sys, const BigRat& eps, long steps = 1);
PropertyVerdict check_ZAT(const System& sys, const BigRat& eps, long steps = 1);
PropertyVerdict check_BAT(const System& sys, const BigRat& eps, long steps = 1);
PropertyVerdict check_L2(const System& sys, const BigRat& e1, const BigRat& e2);
PropertyVerdict check_L3(const System& sys, const BigRat& e1, const BigRat& e2);
PropertyVerdict check_L4(const System& sys, const BigRat& e1, const BigRat& e2);

// Orbit-local variants G0..G4. G0 and G1 ignore e2.
PropertyVerdict check_G(const System& sys, int level, const BigRat& e1,
                        const BigRat& e2 = BigRat(0));

// Arrow of time around microstate i over exponents n in [-N, M]:
// the fraction of steps with non-increasing entropy is at most eps.
// reversed=true tests the time-reversed arrow (non-decreasing entropy).
PropertyVerdict arrow_of_time_at(const System& sys, int i, long N, long M,
                                 const BigRat& eps, bool reversed = false);

// Loschmidt-style exact counts over the whole system: for invertible
// dynamics, #{i : S(alpha(i)) < S(i)} = #{i : S(alpha^{-1}(i)) < S(i)}
// and the per-intensity refinements.
struct LocalArrowReport {
    long dec_forward = 0;   // |D_alpha|
    long inc_backward = 0;  // |I_{alpha^{-1}}|
    long inc_forward = 0;
    long dec_backward = 0;
    bool count_equalities = false;        // dec_forward == inc_backward etc.
    long D_neq_forward = 0;               // |D restricted to X^neq|
    long I_neq_staying = 0;               // |{i in IX^neq : alpha(i) in X^neq}|... see impl
    bool neq_identity = false;
};

LocalArrowReport local_arrow_report(const System& sys);

enum class SufficientCondition {
    DominantEquilibrium,     // |X^neq| <= eps |X| forces L1(eps) for every dynamics
    SmallDownwardCounts,     // N_ab |A_{<b}| <= eps |b| for |a| < |b| forces L1(eps)
    SmallNonUpwardRates,     // T_ab <= eps/|A_{<=b}| for |a| <= |b|, b noneq, forces GAT(eps)
    ZoneConserved,           // |C pihat_i| <= (e2 - gamma_i) |pihat_i| forces L3, cumulative gamma
    ZoneConservedAdjacent,   // same with gamma from the zone below only (needs zero jump)
    BlockConserved,          // graph version for L4 with E-1-Lipschitz alpha
    BlockConservedAdjacent,  // corollary form of the above
    ZeroJump,                // zero jump forces |I| = |D|
    EntropyPreservingReversion, // r preserving block sizes forces |I| = |D|
    AlwaysIncreasing,        // D empty iff entropy constant on orbits (invertible)
};

struct SufficientReport {
    bool hypothesis_holds = false;
    bool conclusion_holds = false;  // checked independently when hypothesis holds
    PropertyVerdict detail;
    std::string description;
};

SufficientReport sufficient_conditions(const System& sys, SufficientCondition which,
                                       const BigRat& e1 = BigRat(0),
                                       const BigRat& e2 = BigRat(0),
                                       const std::vector<std::pair<int, int>>* edges = nullptr);

// E-1-Lipschitz test for a dynamics on a graph: every edge maps to an
// edge or collapses to a point.
bool is_graph_lipschitz(const System& sys, const std::vector<std::pair<int, int>>& edges);

} // namespace mmds
