#pragma once
// Max-entropy transition proportions in the infinite-size limit, under three
// regimes: unconstrained (outer product), jumps banded to |i-j| <= k, and a
// fixed average jump. Plus property checkers on proportion data and on finite
// system sequences. All real arithmetic here is binary64.

#include "mmds/rational.hpp"
#include "mmds/system.hpp"

#include <vector>

namespace mmds {

enum class LimitModel { Free, BoundedJump, FixedJump };

struct Proportions {
    int o = 0;
    std::vector<double> p;                       // zone proportions, sum 1
    std::vector<std::vector<double>> lambda;     // lambda[i][j], transitions j -> i
    LimitModel model = LimitModel::Free;
    int k = 0;                                   // band half-width
    double delta = 0;                            // prescribed average jump
    std::vector<double> b;                       // factor multipliers
    double c = 1;                                // jump discount e^{-multiplier}
    double multiplier = 0;                       // Lagrange multiplier of the jump
};

// jump cost between zone indices (0-based): |i-j| + [i==j] - 1, so staying
// put and moving to an adjacent zone both cost zero
long jump_cost(int i, int j);

Proportions maxent_free(const std::vector<double>& p);
Proportions maxent_bounded_jump(const std::vector<double>& p, int k);
Proportions maxent_fixed_jump(const std::vector<double>& p, double delta);

// largest average jump attainable by a symmetric nonnegative matrix with the
// given row sums (linear program; exact vertex scan cross-check for o <= 6)
double max_average_jump(const std::vector<double>& p);
double max_average_jump_vertex_scan(const std::vector<double>& p);  // o <= 6

double shannon_entropy(const std::vector<double>& p);
double matrix_entropy(const std::vector<std::vector<double>>& lambda);

struct LimitVerdict {
    bool holds = false;
    double lhs = 0;
    double rhs = 0;
};

struct LimitPropertyReport {
    bool ordered = false;  // the theorems assume strictly increasing p (or b)
    LimitVerdict L1;                 // decrease mass <= eps1
    LimitVerdict GAT;                // non-upward mass from below the top zone
    std::vector<LimitVerdict> ZAT;   // per zone j = 0..o-2
    bool ZAT_all = false;
    bool L3 = false;                 // L1 and ZAT_all
};

LimitPropertyReport limit_properties(const Proportions& pr, double eps1, double eps2);

// uniform proportions p_i = 1/o: L1(eps) holds iff 1/o >= 1 - 2 eps
bool uniform_limit_L1(int o, double eps);

// finite-sequence check: exact per-zone mass ratios and L3 verdicts
struct SequenceL3Report {
    int o = 0;
    std::vector<std::vector<BigRat>> gamma;           // sum of lower-zone mass / zone mass
    std::vector<std::vector<BigRat>> conserve_ratio;  // conserving states / zone mass
    std::vector<bool> holds;
    bool all_hold = false;
    bool gamma_trend_down = false;  // max gamma never increases along the sequence
};

SequenceL3Report check_sequence_L3(const std::vector<System>& seq, const BigRat& e1,
                                   const BigRat& e2);

}  // namespace mmds
