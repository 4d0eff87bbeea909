// Acceptance gate: twelve end-to-end checks, one verdict line each.
//
// Three commonly quoted closed forms are provably wrong (the d_8 table entry,
// the two-zone floor formula, and the geometric-band GAT/ZAT thresholds). For
// those the corrected claim is verified exhaustively and the discrepancy is
// certified by an explicit counterexample; the verdict line says so.

#include "mmds/enumerate.hpp"
#include "mmds/polytope.hpp"
#include "mmds/properties.hpp"
#include "mmds/reversible.hpp"
#include "mmds/rng.hpp"
#include "mmds/system.hpp"
#include "mmds/thermo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace mmds;

namespace {

int threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return (int)std::min(hw ? hw : 1u, 8u);
}

int failures = 0;

void report(int id, bool pass, double limit_s, double secs, const std::string& note) {
    bool in_time = secs <= limit_s;
    if (!pass || !in_time) ++failures;
    std::printf("criterion %2d: %s (%.2fs, limit %.0fs)%s%s\n", id,
                pass && in_time ? "PASS" : "FAIL", secs, limit_s,
                note.empty() ? "" : " — ", note.c_str());
    std::fflush(stdout);
}

template <typename F>
void criterion(int id, double limit_s, F body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool pass = false;
    try {
        pass = body(note);
    } catch (const std::exception& err) {
        note = std::string("exception: ") + err.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, pass, limit_s, secs, note);
}

// the commonly quoted table, entry 8 included verbatim
const long quoted_dx[40] = {0,  0,  1,  2,  2,  3,  4,  4,  5,  6,  7,  8,  9,  10,
                             11, 11, 12, 13, 14, 15, 16, 16, 17, 18, 19, 20, 21, 22,
                             23, 24, 25, 26, 27, 27, 28, 29, 30, 31, 32, 33};

std::vector<CountLedger> scans;  // filled by criterion 2, reused by 3

// zone-level census of all permutations of one profile
struct ProfileCensus {
    std::map<long, BigInt> by_d;
    std::map<std::pair<long, long>, BigInt> by_de;
    BigInt l2[3][3], l3[3][3];  // counts per (eps1, eps2) grid cell
};

const long eps_num[3] = {0, 1, 1};
const long eps_den[3] = {1, 3, 1};

ProfileCensus census_profile(const Partition& part) {
    auto zp = zone_profile(part);
    int n = part.n, o = (int)zp.sizes.size();
    ProfileCensus c;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long> up(o);
    do {
        long d = 0, e = 0;
        std::fill(up.begin(), up.end(), 0);
        for (int i = 0; i < n; ++i) {
            int zi = zp.zone_of[i], zt = zp.zone_of[perm[i]];
            if (zt < zi) ++d;
            if (zt > zi) {
                ++e;
                ++up[zi];
            }
        }
        c.by_d[d] += 1;
        c.by_de[{d, e}] += 1;
        long neq = n - zp.zone_card[o - 1];
        for (int a = 0; a < 3; ++a) {
            if (eps_den[a] * d > eps_num[a] * n) continue;
            for (int b = 0; b < 3; ++b) {
                if (eps_den[b] * e >= (eps_den[b] - eps_num[b]) * neq) c.l2[a][b] += 1;
                bool zones_ok = true;
                for (int j = 0; j + 1 < o && zones_ok; ++j)
                    zones_ok = eps_den[b] * up[j] >= (eps_den[b] - eps_num[b]) * zp.zone_card[j];
                if (zones_ok) c.l3[a][b] += 1;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

}  // namespace

int main() {
    const int tw = threads();
    std::printf("acceptance gate, %d worker thread(s)\n", tw);

    criterion(1, 1.0, [](std::string& note) {
        std::vector<int> off;
        for (int n = 1; n <= 40; ++n)
            if (d_X(n) != quoted_dx[n - 1]) off.push_back(n);
        // the single known erratum: entry 8 reads 4 but is provably 5
        bool erratum_only = off == std::vector<int>{8} && d_X(8) == 5;
        auto md = max_decreases(partition_with_sizes({1, 1, 1, 2, 3}));
        System w = build_system(8, {{0}, {1}, {2}, {3, 4}, {5, 6, 7}}, md.witness);
        bool witness_ok = md.count == 5 && (long)dic_split(w).D.size() == 5;
        note = erratum_only && witness_ok
                   ? "39/40 entries match; the quoted d_8 = 4 is a certified erratum, the "
                     "value is 5 (profile 1+1+1+2+3 realizes 5 strict decreases)"
                   : "unexpected mismatch pattern";
        return erratum_only && witness_ok;
    });

    criterion(2, 300.0, [&](std::string& note) {
        scans.clear();
        bool ok = true;
        for (int n = 1; n <= 7; ++n) {
            scans.push_back(scan_all(n, tw));
            ok = ok && scans.back().max_D == d_X(n);
        }
        note = "partition formula equals the exhaustive pair scan for n = 1..7";
        return ok;
    });

    criterion(3, 300.0, [](std::string& note) {
        bool mean_ok = scans.size() >= 3 && scans[2].mean_D_fraction() == BigRat(12, 90);
        bool sums_ok = true;
        for (const auto& s : scans) sums_ok = sums_ok && s.sum_D == s.sum_I;
        note = "mean |D|/|X| at n=3 is exactly 12/90; sum|D| = sum|I| for n = 1..7";
        return mean_ok && sums_ok;
    });

    criterion(4, 60.0, [](std::string& note) {
        bool ok = true;
        for (int n = 1; n <= 6; ++n) {
            auto rep = duality_identity(n);
            ok = ok && rep.agree;
        }
        note = "partition-side and permutation-side counts agree exactly for n = 1..6";
        return ok;
    });

    criterion(5, 600.0, [&](std::string& note) {
        long profiles = 0, checks = 0;
        for (int n = 1; n <= 8; ++n) {
            BigInt nfact = factorial(n);
            for (const auto& parts : numerical_partitions(n)) {
                auto part = partition_with_sizes(std::vector<int>(parts.begin(), parts.end()));
                auto census = census_profile(part);
                ++profiles;
                long d_max = max_decreases(part).count;
                for (long d = 0; d <= d_max; ++d) {
                    FamilyArgs args;
                    args.d = d;
                    auto sum = probability_of_property(part, RandomSystemProperty::DecreaseCount,
                                                       args, tw);
                    auto it = census.by_d.find(d);
                    BigInt want = it == census.by_d.end() ? BigInt(0) : it->second;
                    if (sum.probability != BigRat(want, nfact)) return false;
                    ++checks;
                    for (long e = 0; e <= n; ++e) {
                        args.e = e;
                        auto s2 = probability_of_property(
                            part, RandomSystemProperty::DecreaseIncrease, args, tw);
                        auto jt = census.by_de.find({d, e});
                        BigInt w2 = jt == census.by_de.end() ? BigInt(0) : jt->second;
                        if (s2.probability != BigRat(w2, nfact)) return false;
                        ++checks;
                    }
                }
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) {
                        FamilyArgs args;
                        args.eps1 = BigRat(eps_num[a], eps_den[a]);
                        args.eps2 = BigRat(eps_num[b], eps_den[b]);
                        auto p2 = probability_of_property(part, RandomSystemProperty::L2, args, tw);
                        auto p3 = probability_of_property(part, RandomSystemProperty::L3, args, tw);
                        if (p2.probability != BigRat(census.l2[a][b], nfact)) return false;
                        if (p3.probability != BigRat(census.l3[a][b], nfact)) return false;
                        checks += 2;
                    }
            }
        }
        std::ostringstream os;
        os << checks << " exact rational equalities over " << profiles
           << " zone profiles, |X| <= 8";
        note = os.str();
        return true;
    });

    criterion(6, 10.0, [](std::string& note) {
        long disagreements = 0, pairs = 0;
        bool characterized = true, argmax_ok = true;
        for (long s1 = 1; s1 <= 40; ++s1)
            for (long s2 = s1 + 1; s2 <= 40; ++s2) {
                ++pairs;
                auto ml = two_zone_mostlikely(s1, s2);
                if (!ml.agrees) ++disagreements;
                characterized = characterized &&
                                ml.agrees == (s1 * s2 % (s1 + s2 + 2) <= 1);
                // independent argmax over the closed-form distribution
                long best = 0;
                BigRat best_p = two_zone_decrease_probability(s1, s2, 0);
                for (long d = 1; d <= s1; ++d) {
                    BigRat p = two_zone_decrease_probability(s1, s2, d);
                    if (p > best_p) {
                        best_p = p;
                        best = d;
                    }
                }
                argmax_ok = argmax_ok && best == ml.exact_d;
            }
        std::ostringstream os;
        os << "floor formula is a certified erratum: it misses the exact argmax on "
           << disagreements << "/" << pairs
           << " pairs (first at s1=1,s2=2); agreement holds exactly iff "
              "s1*s2 mod (s1+s2+2) <= 1, verified, and every exact argmax was "
              "re-derived from the closed-form distribution";
        note = os.str();
        return disagreements > 0 && characterized && argmax_ok;
    });

    criterion(7, 30.0, [](std::string& note) {
        Rng rng(7001);
        for (int t = 0; t < 1000; ++t) {
            int n = 2 + (int)rng.below(9);
            auto s = random_system(rng, n, true);
            if (!fluctuation_check(s).forward_backward) return false;
            auto fi = fluctuation_check(make_IR(s));
            auto fe = fluctuation_check(make_ER(s));
            if (!fi.forward_backward || !fi.reversion_identity) return false;
            if (!fe.forward_backward || !fe.reversion_identity) return false;
        }
        note = "forward-backward and reversion count identities, 1000 systems, n <= 10";
        return true;
    });

    criterion(8, 60.0, [](std::string& note) {
        Rng rng(8001);
        std::vector<std::pair<BigRat, BigRat>> grid{
            {BigRat(0), BigRat(0)}, {BigRat(1, 4), BigRat(1, 3)}, {BigRat(1), BigRat(1)}};
        for (int t = 0; t < 1000; ++t) {
            int n = 2 + (int)rng.below(9);
            auto s = random_system(rng, n, true);
            // the constructors throw if their own transition contracts break
            auto ir = make_IR(s);
            auto er = make_ER(s);
            auto d = dic_split(s);
            long D = (long)d.D.size(), I = (long)d.I.size(), C = (long)d.C.size();
            long neq = (long)nonequilibrium_states(s).size();
            // doubled fibers double the entropy additively; split fibers keep it
            if (std::abs(system_entropy(ir.part) - system_entropy(s.part) - std::log(2)) > 1e-12)
                return false;
            if (std::abs(system_entropy(er.part) - system_entropy(s.part)) > 1e-12) return false;
            auto dh = dic_split(ir), de = dic_split(er);
            if ((long)dh.D.size() != D + I || (long)dh.I.size() != D + I ||
                (long)dh.C.size() != 2 * C)
                return false;
            if (de.D.size() != dh.D.size() || de.I.size() != dh.I.size()) return false;
            // split sheets reproduce the forward and backward counts
            auto tf = transition_counts(s, 1), tb = transition_counts(s, -1);
            auto te = transition_counts(er, 1);
            int nb = tf.nblocks;
            for (int a = 0; a < nb; ++a)
                for (int b = 0; b < nb; ++b) {
                    int a1 = er.part.block_of[s.part.blocks[a][0]];
                    int b1 = er.part.block_of[s.part.blocks[b][0]];
                    int a2 = er.part.block_of[n + s.part.blocks[a][0]];
                    int b2 = er.part.block_of[n + s.part.blocks[b][0]];
                    if (te.N[a1][b1] != tf.N[a][b] || te.N[a2][b2] != tb.N[a][b]) return false;
                    if (te.N[a1][b2] != 0 || te.N[a2][b1] != 0) return false;
                }
            for (const auto& [e1, e2] : grid) {
                bool l1 = check_L1(ir, e1).holds;
                if (l1 != (BigRat(D + I) <= 2 * e1 * n)) return false;
                if (l1 != (BigRat(C) >= (BigRat(1) - 2 * e1) * n)) return false;
                if (neq > 0) {
                    bool gat = check_GAT(ir, e2).holds;
                    if (gat != (BigRat(D + I) >= 2 * (BigRat(1) - e2) * neq)) return false;
                }
                bool l2 = check_L2(ir, e1, e2).holds;
                bool both = (BigRat(D + I) <= 2 * e1 * n) &&
                            (BigRat(D + I) >= 2 * (BigRat(1) - e2) * neq);
                if (l2 != both) return false;
                if (l2 != check_L2(er, e1, e2).holds) return false;
                if (check_L3(ir, e1, e2).holds != check_L3(er, e1, e2).holds) return false;
            }
        }
        note = "doubling contracts (fibers, split counts, sheet transitions, property "
               "equivalences) on 1000 systems";
        return true;
    });

    criterion(9, 60.0, [](std::string& note) {
        Rng rng(9001);
        int done = 0;
        while (done < 500) {
            int kind = done % 5;
            System s;
            DecomposeMode mode = DecomposeMode::Invariant;
            if (kind <= 1) {
                auto base = random_system(rng, 2 + (int)rng.below(7), true);
                s = kind == 0 ? make_IR(base) : make_ER(base);
                if (kind == 1) mode = DecomposeMode::Equivariant;
            } else {
                int nchains = 1 + (int)rng.below(3);
                std::vector<std::vector<int>> chains(nchains);
                std::vector<int> g(nchains), h(nchains);
                for (int c = 0; c < nchains; ++c) {
                    int len = 1 + (int)rng.below(4);
                    for (int j = 0; j < len; ++j) chains[c].push_back((int)rng.below(4));
                    g[c] = (int)rng.below(4);
                    h[c] = (int)rng.below(4);
                }
                if (kind == 2) s = build_not(ChainKind::N, chains);
                if (kind == 3) s = build_not(ChainKind::O, chains, g);
                if (kind == 4) s = build_not(ChainKind::T, chains, g, h);
            }
            auto dec = decompose_reversible(s, mode);
            if (!dec.certificate_ok) return false;
            ++done;
        }
        note = "verified isomorphism certificates on 500 systems from the doubling and "
               "chain generators";
        return true;
    });

    criterion(10, 60.0, [](std::string& note) {
        Rng rng(10001);
        for (int t = 0; t < 500; ++t) {
            long steps = 1 + t % 3;
            auto base = random_system(rng, 2 + (int)rng.below(8), true);
            auto prof = production_profile(base, steps);
            if (!prof.mean_u_zero) return false;  // invertible: zero mean exactly
            if (!prof.mean_u_neq_nonneg) return false;
            if (prof.eq_invariant != prof.mean_u_neq_zero) return false;
            // size-preserving reversion: even law and detailed balance
            auto ir = production_profile(make_IR(base), steps);
            if (!ir.entropy_preserving_reversible) return false;
            if (!ir.W_u_even || !ir.W_u_neq_dominates || !ir.W_q_detailed_balance)
                return false;
        }
        note = "production sign/invariance laws and exact detailed balance, 500 systems, "
               "1..3 steps";
        return true;
    });

    criterion(11, 5.0, [](std::string& note) {
        std::vector<double> p{0.25, 0.75};
        auto fr = maxent_free(p);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (fr.lambda[i][j] != p[i] * p[j]) return false;
        std::vector<double> p4{0.1, 0.2, 0.3, 0.4};
        auto wide = maxent_bounded_jump(p4, 4);
        auto free4 = maxent_free(p4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (std::abs(wide.lambda[i][j] - free4.lambda[i][j]) > 1e-10) return false;
        for (int o = 2; o <= 5; ++o) {
            auto u = maxent_free(std::vector<double>(o, 1.0 / o));
            for (const auto& row : u.lambda)
                for (double v : row)
                    if (std::abs(v - 1.0 / (o * o)) > 1e-15) return false;
        }
        for (int o = 1; o <= 8; ++o)
            if (uniform_limit_L1(o, 0.2) != (o == 1)) return false;

        // geometric factors b_j = q^{j-1}: the quoted GAT/ZAT thresholds
        // 1/q^2 and 1/q^k ignore the band truncation at the top zone, whose
        // ratio is 1/q for every k; the 1/q threshold and the L3 implication hold as quoted
        for (double q : {10.0, 100.0}) {
            for (int k : {1, 2}) {
                int o = 4;
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
                pr.p.assign(o, 0);
                pr.lambda.assign(o, std::vector<double>(o, 0));
                for (int i = 0; i < o; ++i)
                    for (int j = 0; j < o; ++j)
                        if (std::abs(i - j) <= k) {
                            pr.lambda[i][j] = b[i] * b[j];
                            pr.p[j] += b[i] * b[j];
                        }
                auto at_q = limit_properties(pr, 1 / q, 1 / q);
                if (!at_q.L1.holds || !at_q.GAT.holds || !at_q.ZAT_all || !at_q.L3)
                    return false;
                auto below = limit_properties(pr, 0.5 / q, 0.5 / q);
                if (below.L1.holds || below.GAT.holds || below.ZAT_all) return false;
                // one direction of the quoted claim survives: below 1/q^2
                // (resp. 1/q^k) the properties indeed fail
                auto tiny = limit_properties(pr, 0.5 / (q * q), 0.5 * std::pow(q, -k));
                if (tiny.GAT.holds || tiny.ZAT_all) return false;
                // counterexample to the quoted iff at eps between 1/q^2 and 1/q
                if (k == 2 && q == 10.0) {
                    auto mid = limit_properties(pr, 0.02, 0.02);
                    if (mid.GAT.holds || mid.ZAT_all) return false;
                }
            }
        }
        note = "solvers exact; uniform L1 at eps=0.2 iff o=1; geometric verdicts hold "
               "with certified erratum: GAT/ZAT thresholds are 1/q (top-zone band "
               "truncation), not 1/q^2 and 1/q^k; counterexample q=10, k=2, eps=0.02";
        return true;
    });

    criterion(12, 30.0, [](std::string& note) {
        Rng rng(12001);
        int done = 0, with_hypothesis = 0;
        long attempts = 0;
        while (done < 1000 && ++attempts < 100000) {
            auto s = random_system(rng, 2 + (int)rng.below(9), true);
            auto et = equilibrium_reaching_time(s);
            if (!et.equilibrium_bound) continue;
            ++done;
            for (int i : nonequilibrium_states(s))
                if (et.e[s.alpha[i]] != et.e[i] - 1) return false;
            auto dt = derived_time_system(s);
            bool hyp = true;
            for (bool m : dt.level_meets_alpha_eq) hyp = hyp && m;
            if (!hyp || et.E == 0) continue;
            ++with_hypothesis;
            // smallest eps with the original system in L1(eps)
            BigRat eps((long)dic_split(s).D.size(), s.n);
            if (!check_L1(s, eps).holds) return false;
            if (!check_L2(dt.sys, eps, BigRat(0)).holds) return false;
        }
        std::ostringstream os;
        os << "strict descent of the reaching time on 1000 equilibrium-bound systems; "
              "derived time system passed L2(eps,0) in "
           << with_hypothesis << " hypothesis-satisfying cases";
        note = os.str();
        return done == 1000 && with_hypothesis > 0;
    });

    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures;
}
