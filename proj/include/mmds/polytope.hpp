#pragma once
// Exact lattice-point enumeration over the transition-count polytopes.
//
// Every family's weight is the number of permutations realizing a lattice
// point, which always factors as a product over zones (or blocks) of
// size! * multinomial(size; column entries). Probabilities are the weighted
// sum divided by the size of the sampled permutation class: n! for
// unrestricted permutations, or an exhaustively computed census for the
// zero-jump, symmetric, and edge-Lipschitz classes.

#include "mmds/rational.hpp"
#include "mmds/system.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mmds {

struct LinearConstraint {
    std::vector<int> coeff;  // one entry per variable
    long rhs = 0;
};

// weight factor = size! * multinomial(size; values of vars [, remainder])
struct WeightGroup {
    long size = 0;
    std::vector<int> vars;
    bool implicit_remainder = false;
};

struct PolytopeSpec {
    int num_vars = 0;
    std::vector<std::string> var_names;
    std::vector<LinearConstraint> eq;
    std::vector<LinearConstraint> le;
    std::vector<LinearConstraint> ge;
    std::vector<WeightGroup> groups;
    BigInt normalizer = 0;  // size of the sampled permutation class
};

struct WeightedSum {
    BigInt lattice_points = 0;
    BigInt weighted_sum = 0;  // permutations selected
    BigRat probability = BigRat(0);
};

enum class Family {
    Lambda,     // d strict decreases, all permutations
    LambdaDE,   // d decreases and e increases
    Upsilon,    // d decreases among zero-jump permutations
    Psi,        // L2 membership, all permutations
    Theta,      // L3 membership, all permutations
    Omega,      // L3 membership among zero-jump permutations
    Sigma,      // L3 membership among symmetric permutations
    Phi,        // doubled reversible system lands in L2
    ThetaPair,  // one side of the doubled-system L2 bracketing pair
    Gamma,      // L4 membership among edge-Lipschitz permutations
};

struct FamilyArgs {
    long d = 0;
    long e = 0;
    BigRat eps1 = BigRat(0);
    BigRat eps2 = BigRat(0);
    // microstate edges, Gamma only; the block-level graph is induced
    std::vector<std::pair<int, int>> edges;
};

PolytopeSpec build_polytope(const Partition& part, Family family, const FamilyArgs& args);

WeightedSum enumerate_and_sum(const PolytopeSpec& spec, int threads = 1);

// exhaustive censuses of the restricted permutation classes (n <= 8)
BigInt census_zero_jump(const Partition& part);
BigInt census_symmetric(const Partition& part);
BigInt census_lipschitz(int n, const std::vector<std::pair<int, int>>& edges);

enum class RandomSystemProperty {
    DecreaseCount,      // Lambda
    DecreaseIncrease,   // LambdaDE
    L2,                 // Psi
    L3,                 // Theta
    L3ZeroJump,         // Omega
    L3Symmetric,        // Sigma
    IRL2,               // Phi
    L4Graph,            // Gamma
};

WeightedSum probability_of_property(const Partition& part, RandomSystemProperty prop,
                                    const FamilyArgs& args, int threads = 1);

// lower and upper bounds on the chance that a random permutation doubles to
// a reversible system with L2(e1,e2); requires |X^eq| >= (1-e1)|X|
std::pair<WeightedSum, WeightedSum> reversible_L2_bounds(const Partition& part,
                                                         const BigRat& eps1,
                                                         const BigRat& eps2,
                                                         int threads = 1);

// two-zone closed forms, zone masses s1 < s2
BigRat two_zone_decrease_probability(long s1, long s2, long d);

struct TwoZoneMostLikely {
    long formula_d = 0;  // floor(s1*s2 / (s1+s2+2))
    long exact_d = 0;    // argmax of the exact distribution, smaller d on ties
    bool agrees = false;
};
TwoZoneMostLikely two_zone_mostlikely(long s1, long s2);

// closed form for the two-zone doubled-reversible L2 probability
BigRat two_zone_reversible_L2(long s1, long s2, const BigRat& eps1, const BigRat& eps2);

// numerical partitions of n in decreasing-part order; each one determines a
// zone profile (parts of equal size fuse into one zone)
std::vector<std::vector<int>> numerical_partitions(int n);

// canonical set partition of [n] whose block sizes are the given parts
Partition partition_with_sizes(const std::vector<int>& parts);

}  // namespace mmds
