#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmds/properties.hpp"
#include "mmds/rng.hpp"
#include "mmds/thermo.hpp"

#include <cmath>
#include <numeric>

using namespace mmds;

namespace {

double max_abs_diff(const std::vector<std::vector<double>>& a,
                    const std::vector<std::vector<double>>& b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

void check_row_sums(const Proportions& pr, double tol) {
    for (int j = 0; j < pr.o; ++j) {
        double col = 0, row = 0;
        for (int i = 0; i < pr.o; ++i) {
            col += pr.lambda[i][j];
            row += pr.lambda[j][i];
        }
        CHECK(col == doctest::Approx(pr.p[j]).epsilon(0).scale(1).epsilon(tol));
        CHECK(row == doctest::Approx(pr.p[j]).epsilon(tol));
    }
}

// band-model proportions with prescribed geometric factors b_j = q^{j-1} b_1
Proportions geometric_band(int o, int k, double q) {
    std::vector<double> b(o);
    for (int j = 0; j < o; ++j) b[j] = std::pow(q, j);
    double mass = 0;
    for (int i = 0; i < o; ++i)
        for (int j = 0; j < o; ++j)
            if (std::abs(i - j) <= k) mass += b[i] * b[j];
    for (double& v : b) v /= std::sqrt(mass);
    Proportions pr;
    pr.o = o;
    pr.model = LimitModel::BoundedJump;
    pr.k = k;
    pr.b = b;
    pr.c = 1;
    pr.lambda.assign(o, std::vector<double>(o, 0));
    pr.p.assign(o, 0);
    for (int i = 0; i < o; ++i)
        for (int j = 0; j < o; ++j)
            if (std::abs(i - j) <= k) {
                pr.lambda[i][j] = b[i] * b[j];
                pr.p[j] += b[i] * b[j];
            }
    return pr;
}

}  // namespace

TEST_CASE("free model is the outer product") {
    auto u3 = maxent_free({1.0 / 3, 1.0 / 3, 1.0 / 3});
    for (auto& row : u3.lambda)
        for (double v : row) CHECK(v == doctest::Approx(1.0 / 9).epsilon(1e-14));

    auto one = maxent_free({1.0});
    CHECK(one.lambda[0][0] == doctest::Approx(1.0));

    auto two = maxent_free({0.25, 0.75});
    CHECK(two.lambda[0][0] == doctest::Approx(1.0 / 16));
    CHECK(two.lambda[0][1] == doctest::Approx(3.0 / 16));
    CHECK(two.lambda[1][0] == doctest::Approx(3.0 / 16));
    CHECK(two.lambda[1][1] == doctest::Approx(9.0 / 16));
    CHECK(matrix_entropy(two.lambda) ==
          doctest::Approx(2 * shannon_entropy(two.p)).epsilon(1e-12));
    check_row_sums(two, 1e-12);

    CHECK_THROWS_AS(maxent_free({0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(maxent_free({0.3, 0.3}), std::invalid_argument);
}

TEST_CASE("banded solver satisfies its constraints and recovers the free model") {
    std::vector<double> p{0.1, 0.2, 0.3, 0.4};
    for (int k = 1; k <= 4; ++k) {
        auto pr = maxent_bounded_jump(p, k);
        check_row_sums(pr, 1e-10);
        for (int i = 0; i < pr.o; ++i)
            for (int j = 0; j < pr.o; ++j)
                if (std::abs(i - j) > k) CHECK(pr.lambda[i][j] == 0);
        for (double v : pr.b) CHECK(v > 0);
    }
    // k >= o-1 covers every pair
    auto wide = maxent_bounded_jump(p, 3);
    auto free = maxent_free(p);
    CHECK(max_abs_diff(wide.lambda, free.lambda) < 1e-10);

    auto half = maxent_bounded_jump({0.5, 0.5}, 1);
    for (auto& row : half.lambda)
        for (double v : row) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("banded solution is a constrained entropy maximum") {
    std::vector<double> p{0.05, 0.15, 0.35, 0.45};
    auto pr = maxent_bounded_jump(p, 2);
    double h0 = matrix_entropy(pr.lambda);
    Rng rng(99);
    // 2x2 exchanges keep both marginals fixed; all four cells must stay in band
    for (int trial = 0; trial < 400; ++trial) {
        int i1 = (int)rng.below(4), i2 = (int)rng.below(4);
        int j1 = (int)rng.below(4), j2 = (int)rng.below(4);
        if (i1 == i2 || j1 == j2) continue;
        auto in_band = [&](int i, int j) { return std::abs(i - j) <= 2; };
        if (!in_band(i1, j1) || !in_band(i1, j2) || !in_band(i2, j1) || !in_band(i2, j2)) continue;
        auto l = pr.lambda;
        double t = 1e-4;
        if (l[i1][j2] < t || l[i2][j1] < t) continue;
        l[i1][j1] += t;
        l[i2][j2] += t;
        l[i1][j2] -= t;
        l[i2][j1] -= t;
        CHECK(matrix_entropy(l) <= h0 + 1e-9);
    }
}

TEST_CASE("largest average jump: simplex agrees with the vertex scan") {
    CHECK(max_average_jump({0.4, 0.6}) == doctest::Approx(0.0).epsilon(1e-12));
    Rng rng(123);
    for (int o = 2; o <= 6; ++o) {
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<double> p(o);
            double s = 0;
            for (double& v : p) {
                v = 1 + (double)rng.below(9);
                s += v;
            }
            for (double& v : p) v /= s;
            double lp = max_average_jump(p);
            double vs = max_average_jump_vertex_scan(p);
            CHECK(lp == doctest::Approx(vs).epsilon(1e-8));
            CHECK(lp <= (double)(o - 2) + 1e-10);
        }
    }
}

TEST_CASE("fixed-jump solver hits its constraints across the feasible range") {
    std::vector<double> p{0.1, 0.2, 0.3, 0.4};
    double cap = max_average_jump(p);
    CHECK(cap > 0);
    for (double frac : {0.15, 0.4, 0.7, 0.9}) {
        double delta = frac * cap;
        auto pr = maxent_fixed_jump(p, delta);
        check_row_sums(pr, 1e-10);
        double jm = 0;
        for (int i = 0; i < pr.o; ++i)
            for (int j = 0; j < pr.o; ++j) {
                CHECK(pr.lambda[i][j] ==
                      doctest::Approx(pr.lambda[j][i]).epsilon(1e-10));  // symmetric
                jm += jump_cost(i, j) * pr.lambda[i][j];
            }
        CHECK(jm == doctest::Approx(delta).epsilon(1e-9));
    }
    CHECK_THROWS_AS(maxent_fixed_jump(p, cap + 0.5), std::invalid_argument);
    CHECK_THROWS_AS(maxent_fixed_jump(p, cap), std::runtime_error);
}

TEST_CASE("fixed-jump limits: free model at the free jump, unit band at zero") {
    std::vector<double> p{0.1, 0.2, 0.3, 0.4};
    auto free = maxent_free(p);
    double free_jump = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) free_jump += jump_cost(i, j) * free.lambda[i][j];
    auto pr = maxent_fixed_jump(p, free_jump);
    CHECK(std::abs(pr.multiplier) < 1e-8);
    CHECK(max_abs_diff(pr.lambda, free.lambda) < 1e-8);

    auto zero = maxent_fixed_jump(p, 0.0);
    auto band = maxent_bounded_jump(p, 1);
    CHECK(zero.c == 0);
    CHECK(max_abs_diff(zero.lambda, band.lambda) < 1e-10);

    // o = 2: every jump cost vanishes, only delta = 0 makes sense
    auto flat = maxent_fixed_jump({0.3, 0.7}, 0.0);
    CHECK(max_abs_diff(flat.lambda, maxent_free({0.3, 0.7}).lambda) < 1e-14);
    CHECK_THROWS_AS(maxent_fixed_jump({0.3, 0.7}, 0.2), std::invalid_argument);
}

TEST_CASE("limit properties of the free model") {
    // ordered two-zone example: decrease mass p1*p2
    auto pr = maxent_free({0.1, 0.9});
    auto rep = limit_properties(pr, 0.1, 0.2);
    CHECK(rep.ordered);
    CHECK(rep.L1.lhs == doctest::Approx(0.09));
    CHECK(rep.L1.holds);
    // GAT: lambda_11 <= eps2 * p1 -> 0.01 <= 0.02
    CHECK(rep.GAT.holds);
    CHECK(rep.ZAT.size() == 1);
    CHECK(rep.ZAT[0].holds);
    CHECK(rep.L3);

    auto bad = limit_properties(pr, 0.05, 0.05);
    CHECK_FALSE(bad.L1.holds);
    CHECK_FALSE(bad.L3);

    // uniform proportions break the ordering assumption
    auto uni = limit_properties(maxent_free({0.5, 0.5}), 0.2, 0.2);
    CHECK_FALSE(uni.ordered);
}

TEST_CASE("uniform proportions fail L1 below a quarter unless trivial") {
    for (int o = 1; o <= 6; ++o) {
        bool l1 = uniform_limit_L1(o, 0.2);
        CHECK(l1 == (o == 1));
        // matches the generic criterion on the solved uniform model
        std::vector<double> p(o, 1.0 / o);
        auto rep = limit_properties(maxent_free(p), 0.2, 0.2);
        CHECK(rep.L1.holds == (o == 1));
    }
    // at eps = 1/4 two zones pass: 1/2 >= 1 - 1/2
    CHECK(uniform_limit_L1(2, 0.25));
}

TEST_CASE("geometric factor verdicts") {
    // With b_j = q^{j-1} every criterion is governed by the zone just below the
    // top: its band is truncated there, so the binding ratio is ~1/q for L1,
    // GAT and ZAT alike, whatever k is. Interior zones scale like q^-k.
    for (double q : {10.0, 100.0}) {
        for (int k : {1, 2}) {
            auto pr = geometric_band(4, k, q);
            auto at = [&](double eps) { return limit_properties(pr, eps, eps); };
            auto rep = at(1 / q);
            CHECK(rep.ordered);
            CHECK(rep.L1.holds);
            CHECK(rep.GAT.holds);
            CHECK(rep.ZAT_all);
            CHECK(rep.L3);
            // everything fails once eps drops below the 1/q scale
            auto low = at(0.5 / q);
            CHECK_FALSE(low.L1.holds);
            CHECK_FALSE(low.GAT.holds);
            CHECK_FALSE(low.ZAT_all);
            // the top-adjacent zone keeps ratio ~1/q, the first zone ~q^-k
            auto unit = at(1.0);
            CHECK(unit.ZAT.back().lhs / unit.ZAT.back().rhs ==
                  doctest::Approx(1 / q).epsilon(0.05));
            CHECK(unit.ZAT.front().lhs / unit.ZAT.front().rhs ==
                  doctest::Approx(std::pow(q, -k)).epsilon(0.05));
        }
    }
    // q = 10, eps = 1/20: L1 fails
    auto tight = limit_properties(geometric_band(4, 1, 10.0), 0.05, 0.05);
    CHECK_FALSE(tight.L1.holds);
    // q = 10, k = 2, eps = 0.02 sits between 1/q and 1/q^2: GAT and ZAT fail
    auto mid = limit_properties(geometric_band(4, 2, 10.0), 0.02, 0.02);
    CHECK_FALSE(mid.GAT.holds);
    CHECK_FALSE(mid.ZAT_all);
}

TEST_CASE("exponential level weights give L3 at matching eps") {
    // s(1) > ... > s(o) > 0 with sum of e^{-s(i)} equal to 1
    std::vector<double> t{3.0, 1.5, 0.2};
    double z = 0;
    for (double v : t) z += std::exp(-v);
    std::vector<double> p;
    std::vector<double> s;
    for (double v : t) {
        p.push_back(std::exp(-v) / z);
        s.push_back(v + std::log(z));
    }
    CHECK(s.back() > 0);
    double eps = 1 - std::exp(-s.back());  // s(o) = -ln(1 - eps)
    auto rep = limit_properties(maxent_free(p), eps, eps);
    CHECK(rep.ordered);
    CHECK(rep.L3);
}

TEST_CASE("finite sequences: exact ratios and L3 verdicts") {
    // two zones with geometrically growing top zone
    std::vector<System> seq;
    for (int m = 1; m <= 5; ++m) {
        int big = 2 << m;  // 4, 8, 16, 32, 64
        std::vector<std::vector<int>> blocks;
        blocks.push_back({0});
        std::vector<int> rest(big);
        std::iota(rest.begin(), rest.end(), 1);
        blocks.push_back(rest);
        std::vector<int> alpha(big + 1);
        std::iota(alpha.begin(), alpha.end(), 0);
        // one microstate rises into the big block and one falls out
        std::swap(alpha[0], alpha[1]);
        seq.push_back(build_system(big + 1, blocks, alpha));
    }
    auto rep = check_sequence_L3(seq, BigRat(1, 3), BigRat(1, 1));
    CHECK(rep.o == 2);
    CHECK(rep.gamma.size() == 5);
    CHECK(rep.gamma[0][0] == BigRat(1, 4));
    CHECK(rep.gamma[4][0] == BigRat(1, 64));
    CHECK(rep.gamma_trend_down);
    CHECK(rep.all_hold);

    // single zone: nothing to check, vacuously fine
    auto solo = build_system(3, {{0, 1, 2}}, {1, 2, 0});
    auto vac = check_sequence_L3({solo, solo}, BigRat(0), BigRat(0));
    CHECK(vac.all_hold);
    CHECK(vac.gamma[0].empty());

    // mismatched zone counts are rejected
    CHECK_THROWS_AS(check_sequence_L3({solo, seq[0]}, BigRat(1), BigRat(1)),
                    std::invalid_argument);
}
