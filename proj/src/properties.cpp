#include "mmds/properties.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mmds {

namespace {

std::vector<char> membership(const std::vector<int>& xs, int n) {
    std::vector<char> m(n, 0);
    for (int i : xs) m[i] = 1;
    return m;
}

// ratio verdict for "good >= (1-eps) * total": lhs is the failing
// fraction (total-good)/total, compared against eps
PropertyVerdict lower_bound_verdict(long good, long total, const BigRat& eps) {
    PropertyVerdict v;
    v.bound = eps;
    if (total == 0) {
        v.holds = true;
        v.vacuous = true;
        v.lhs = 0;
        return v;
    }
    v.lhs = BigRat(total - good, total);
    v.holds = v.lhs <= eps;
    return v;
}

} // namespace

PropertyVerdict check_L1(const System& sys, const BigRat& eps, long steps) {
    auto d = dic_split(sys, steps);
    PropertyVerdict v;
    v.lhs = BigRat((long)d.D.size(), sys.n);
    v.bound = eps;
    v.holds = v.lhs <= eps;
    if (!v.holds)
        for (int i : d.D) add_witness(v, i);
    return v;
}

PropertyVerdict check_GAT(const System& sys, const BigRat& eps, long steps) {
    auto d = dic_split(sys, steps);
    auto neq = nonequilibrium_states(sys);
    auto in_I = membership(d.I, sys.n);
    long good = 0;
    PropertyVerdict v;
    for (int i : neq)
        if (in_I[i]) ++good;
    v = lower_bound_verdict(good, (long)neq.size(), eps);
    if (!v.holds)
        for (int i : neq)
            if (!in_I[i]) add_witness(v, i);
    return v;
}

PropertyVerdict check_ZAT(const System& sys, const BigRat& eps, long steps) {
    auto d = dic_split(sys, steps);
    auto z = zone_profile(sys.part);
    auto in_I = membership(d.I, sys.n);
    int o = (int)z.sizes.size();
    PropertyVerdict v;
    v.bound = eps;
    v.holds = true;
    v.lhs = 0;
    if (o <= 1) {
        v.vacuous = true;
        return v;
    }
    // zones below the top one only
    for (int j = 0; j + 1 < o; ++j) {
        long good = 0;
        for (int i : z.zone_members[j])
            if (in_I[i]) ++good;
        BigRat fail((long)z.zone_members[j].size() - good, (long)z.zone_members[j].size());
        if (fail > v.lhs) v.lhs = fail;
        if (fail > eps) {
            v.holds = false;
            add_witness(v, j);
        }
    }
    return v;
}

PropertyVerdict check_BAT(const System& sys, const BigRat& eps, long steps) {
    auto d = dic_split(sys, steps);
    auto in_I = membership(d.I, sys.n);
    size_t maxsz = 0;
    for (const auto& b : sys.part.blocks) maxsz = std::max(maxsz, b.size());
    PropertyVerdict v;
    v.bound = eps;
    v.holds = true;
    v.lhs = 0;
    bool any = false;
    for (int bi = 0; bi < (int)sys.part.blocks.size(); ++bi) {
        const auto& b = sys.part.blocks[bi];
        if (b.size() == maxsz) continue;  // equilibrium blocks are exempt
        any = true;
        long good = 0;
        for (int i : b)
            if (in_I[i]) ++good;
        BigRat fail((long)b.size() - good, (long)b.size());
        if (fail > v.lhs) v.lhs = fail;
        if (fail > eps) {
            v.holds = false;
            add_witness(v, bi);
        }
    }
    v.vacuous = !any;
    return v;
}

namespace {

PropertyVerdict conjunction(PropertyVerdict a, PropertyVerdict b) {
    PropertyVerdict v;
    v.holds = a.holds && b.holds;
    v.lhs = a.lhs;   // the L1 side
    v.bound = a.bound;
    v.parts.push_back(std::move(a));
    v.parts.push_back(std::move(b));
    return v;
}

} // namespace

PropertyVerdict check_L2(const System& sys, const BigRat& e1, const BigRat& e2) {
    return conjunction(check_L1(sys, e1), check_GAT(sys, e2));
}

PropertyVerdict check_L3(const System& sys, const BigRat& e1, const BigRat& e2) {
    return conjunction(check_L1(sys, e1), check_ZAT(sys, e2));
}

PropertyVerdict check_L4(const System& sys, const BigRat& e1, const BigRat& e2) {
    return conjunction(check_L1(sys, e1), check_BAT(sys, e2));
}

PropertyVerdict check_G(const System& sys, int level, const BigRat& e1, const BigRat& e2) {
    if (level < 0 || level > 4) throw std::invalid_argument("check_G: level must be 0..4");
    if (!sys.invertible()) throw std::invalid_argument("check_G: needs invertible dynamics");
    auto d = dic_split(sys);
    auto in_I = membership(d.I, sys.n);
    auto in_D = membership(d.D, sys.n);
    auto eq = membership(equilibrium_states(sys), sys.n);
    auto z = zone_profile(sys.part);
    int o = (int)z.sizes.size();
    size_t maxsz = 0;
    for (const auto& b : sys.part.blocks) maxsz = std::max(maxsz, b.size());

    PropertyVerdict v;
    v.bound = e1;
    v.holds = true;
    v.lhs = 0;
    auto os = orbits(sys);
    for (long ci = 0; ci < (long)os.size(); ++ci) {
        const auto& c = os[ci];
        long sz = (long)c.size();
        long ceq = 0, cI = 0, cD = 0;
        for (int i : c) {
            if (eq[i]) ++ceq;
            if (in_I[i]) ++cI;
            if (in_D[i]) ++cD;
        }
        bool ok = true;
        switch (level) {
        case 0:
            ok = BigRat(sz - ceq, sz) <= e1;
            if (BigRat(sz - ceq, sz) > v.lhs) v.lhs = BigRat(sz - ceq, sz);
            break;
        case 1:
            ok = BigRat(cD, sz) <= e1;
            if (BigRat(cD, sz) > v.lhs) v.lhs = BigRat(cD, sz);
            break;
        case 2: {
            ok = BigRat(sz - ceq, sz) <= e1;
            long cneq = sz - ceq;
            if (cneq > 0) ok = ok && BigRat(cI, 1) >= (BigRat(1) - e2) * cneq;
            break;
        }
        case 3: {
            ok = BigRat(sz - ceq, sz) <= e1;
            for (int j = 0; ok && j + 1 < o; ++j) {
                long zc = 0, zi = 0;
                for (int i : c)
                    if (z.zone_of[i] == j) {
                        ++zc;
                        if (in_I[i]) ++zi;
                    }
                if (zc > 0) ok = BigRat(zi, 1) >= (BigRat(1) - e2) * zc;
            }
            break;
        }
        case 4: {
            ok = BigRat(sz - ceq, sz) <= e1;
            std::map<int, std::pair<long, long>> per_block;  // block -> (count, inc)
            for (int i : c) {
                if (sys.part.blocks[sys.part.block_of[i]].size() == maxsz) continue;
                auto& pr = per_block[sys.part.block_of[i]];
                pr.first++;
                if (in_I[i]) pr.second++;
            }
            for (auto& [_, pr] : per_block)
                if (ok) ok = BigRat(pr.second, 1) >= (BigRat(1) - e2) * pr.first;
            break;
        }
        }
        if (!ok) {
            v.holds = false;
            add_witness(v, ci);
        }
    }
    return v;
}

PropertyVerdict arrow_of_time_at(const System& sys, int i, long N, long M,
                                 const BigRat& eps, bool reversed) {
    if (!sys.invertible())
        throw std::invalid_argument("arrow_of_time_at: needs invertible dynamics");
    if (i < 0 || i >= sys.n) throw std::invalid_argument("arrow_of_time_at: bad microstate");
    if (N < 0 || M < 0) throw std::invalid_argument("arrow_of_time_at: N, M must be >= 0");
    auto inv = inverse_permutation(sys.alpha);
    // walk to alpha^{-N}(i) then forward through alpha^{M+1}(i)
    int j = i;
    for (long t = 0; t < N; ++t) j = inv[j];
    long bad = 0;
    for (long t = 0; t < N + M + 1; ++t) {
        long s0 = sys.block_size(j);
        j = sys.alpha[j];
        long s1 = sys.block_size(j);
        if (!reversed ? (s1 <= s0) : (s1 >= s0)) ++bad;
    }
    PropertyVerdict v;
    v.lhs = BigRat(bad, N + M + 1);
    v.bound = eps;
    v.holds = v.lhs <= eps;
    return v;
}

LocalArrowReport local_arrow_report(const System& sys) {
    if (!sys.invertible())
        throw std::invalid_argument("local_arrow_report: needs invertible dynamics");
    auto df = dic_split(sys, 1);
    auto db = dic_split(sys, -1);
    LocalArrowReport r;
    r.dec_forward = (long)df.D.size();
    r.inc_forward = (long)df.I.size();
    r.dec_backward = (long)db.D.size();
    r.inc_backward = (long)db.I.size();
    r.count_equalities =
        r.dec_forward == r.inc_backward && r.inc_forward == r.dec_backward;

    auto neq = membership(nonequilibrium_states(sys), sys.n);
    auto in_I = membership(df.I, sys.n);
    auto in_D = membership(df.D, sys.n);
    for (int i = 0; i < sys.n; ++i) {
        if (neq[i] && in_D[i]) ++r.D_neq_forward;
        if (neq[i] && in_I[i] && neq[sys.alpha[i]]) ++r.I_neq_staying;
    }
    r.neq_identity = r.D_neq_forward == r.I_neq_staying;
    return r;
}

bool is_graph_lipschitz(const System& sys, const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<int, int>> es;
    for (auto [u, w] : edges) {
        if (u == w) throw std::invalid_argument("graph: loop edge");
        es.insert({std::min(u, w), std::max(u, w)});
    }
    for (auto [u, w] : es) {
        int au = sys.alpha[u], aw = sys.alpha[w];
        if (au == aw) continue;
        if (!es.count({std::min(au, aw), std::max(au, aw)})) return false;
    }
    return true;
}

namespace {

// macro graph: {a,b} linked when some micro edge joins them
std::set<std::pair<int, int>> macro_edges(const System& sys,
                                          const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<int, int>> me;
    for (auto [u, w] : edges) {
        int a = sys.part.block_of[u], b = sys.part.block_of[w];
        if (a != b) me.insert({std::min(a, b), std::max(a, b)});
    }
    return me;
}

} // namespace

SufficientReport sufficient_conditions(const System& sys, SufficientCondition which,
                                       const BigRat& e1, const BigRat& e2,
                                       const std::vector<std::pair<int, int>>* edges) {
    SufficientReport rep;
    auto z = zone_profile(sys.part);
    int o = (int)z.sizes.size();
    long n = sys.n;
    long neq_sz = (long)nonequilibrium_states(sys).size();

    switch (which) {
    case SufficientCondition::DominantEquilibrium: {
        rep.description = "small nonequilibrium forces few decreases for every permutation";
        rep.hypothesis_holds = sys.invertible() && BigRat(neq_sz, n) <= e1;
        if (rep.hypothesis_holds) {
            rep.detail = check_L1(sys, e1);
            rep.conclusion_holds = rep.detail.holds;
        }
        break;
    }
    case SufficientCondition::SmallDownwardCounts: {
        rep.description = "per-pair downward transition rates bounded by eps/#smaller-blocks";
        auto tc = transition_counts(sys);
        bool hyp = true;
        for (int b = 0; hyp && b < tc.nblocks; ++b) {
            long smaller = 0;
            for (int a = 0; a < tc.nblocks; ++a)
                if (tc.block_sizes[a] < tc.block_sizes[b]) ++smaller;
            for (int a = 0; hyp && a < tc.nblocks; ++a)
                if (tc.block_sizes[a] < tc.block_sizes[b])
                    hyp = BigRat(tc.N[a][b] * smaller, tc.block_sizes[b]) <= e1;
        }
        rep.hypothesis_holds = hyp;
        if (hyp) {
            rep.detail = check_L1(sys, e1);
            rep.conclusion_holds = rep.detail.holds;
        }
        break;
    }
    case SufficientCondition::SmallNonUpwardRates: {
        rep.description = "non-upward rates from nonequilibrium blocks bounded by eps/#non-larger-blocks";
        auto tc = transition_counts(sys);
        size_t maxsz = 0;
        for (long s : tc.block_sizes) maxsz = std::max(maxsz, (size_t)s);
        bool hyp = true;
        for (int b = 0; hyp && b < tc.nblocks; ++b) {
            if ((size_t)tc.block_sizes[b] == maxsz) continue;
            long nolarger = 0;
            for (int a = 0; a < tc.nblocks; ++a)
                if (tc.block_sizes[a] <= tc.block_sizes[b]) ++nolarger;
            for (int a = 0; hyp && a < tc.nblocks; ++a)
                if (tc.block_sizes[a] <= tc.block_sizes[b])
                    hyp = BigRat(tc.N[a][b] * nolarger, tc.block_sizes[b]) <= e1;
        }
        rep.hypothesis_holds = hyp;
        if (hyp) {
            rep.detail = check_GAT(sys, e1);
            rep.conclusion_holds = rep.detail.holds;
        }
        break;
    }
    case SufficientCondition::ZoneConserved:
    case SufficientCondition::ZoneConservedAdjacent: {
        bool adjacent = which == SufficientCondition::ZoneConservedAdjacent;
        rep.description = adjacent
            ? "zero-jump permutations with small conserved zones give the zonal arrow"
            : "permutations with small conserved zones give the zonal arrow";
        bool hyp = sys.invertible() && BigRat(neq_sz, n) <= e1;
        if (adjacent) hyp = hyp && jump_stats(sys).zero_jump;
        std::vector<BigRat> gamma(o, BigRat(0));
        long below = 0;
        for (int i = 1; i < o - 1; ++i) {
            below += z.zone_card[i - 1];
            gamma[i] = adjacent ? BigRat(z.zone_card[i - 1], z.zone_card[i])
                                : BigRat(below, z.zone_card[i]);
            if (gamma[i] > e2) hyp = false;
        }
        if (hyp) {
            auto d = dic_split(sys);
            auto in_C = membership(d.C, sys.n);
            for (int i = 0; hyp && i < o - 1; ++i) {
                long zc = 0;
                for (int m : z.zone_members[i])
                    if (in_C[m]) ++zc;
                hyp = BigRat(zc, 1) <= (e2 - gamma[i]) * z.zone_card[i];
            }
        }
        rep.hypothesis_holds = hyp;
        if (hyp) {
            rep.detail = check_L3(sys, e1, e2);
            rep.conclusion_holds = rep.detail.holds;
        }
        break;
    }
    case SufficientCondition::BlockConserved:
    case SufficientCondition::BlockConservedAdjacent: {
        if (!edges) throw std::invalid_argument("sufficient_conditions: graph required");
        bool adjacent = which == SufficientCondition::BlockConservedAdjacent;
        rep.description = "edge-Lipschitz permutations with small conserved blocks give the block arrow";
        bool hyp = sys.invertible() && BigRat(neq_sz, n) <= e1 &&
                   is_graph_lipschitz(sys, *edges);
        if (adjacent) hyp = hyp && jump_stats(sys).zero_jump;
        auto me = macro_edges(sys, *edges);
        size_t maxsz = 0;
        for (const auto& b : sys.part.blocks) maxsz = std::max(maxsz, b.size());
        int nb = (int)sys.part.blocks.size();
        std::set<long> sizes(z.sizes.begin(), z.sizes.end());
        std::vector<BigRat> gamma(nb, BigRat(0));
        for (int a = 0; hyp && a < nb; ++a) {
            if (sys.part.blocks[a].size() == maxsz) continue;
            long ba = 0;
            for (int b = 0; b < nb; ++b) {
                if (b == a) continue;
                long sb = (long)sys.part.blocks[b].size();
                long sa = (long)sys.part.blocks[a].size();
                if (sb >= sa) continue;
                if (!me.count({std::min(a, b), std::max(a, b)})) continue;
                if (adjacent) {
                    // only neighbors with no realized size strictly between
                    bool between = false;
                    for (long s : sizes)
                        if (s > sb && s < sa) between = true;
                    if (between) continue;
                } else {
                    // the non-adjacent form counts only nonequilibrium neighbors
                    if (sys.part.blocks[b].size() == maxsz) continue;
                }
                ba += sb;
            }
            gamma[a] = BigRat(ba, (long)sys.part.blocks[a].size());
            if (gamma[a] > e2) hyp = false;
        }
        if (hyp) {
            auto d = dic_split(sys);
            auto in_C = membership(d.C, sys.n);
            for (int a = 0; hyp && a < nb; ++a) {
                if (sys.part.blocks[a].size() == maxsz) continue;
                long ca = 0;
                for (int m : sys.part.blocks[a])
                    if (in_C[m]) ++ca;
                hyp = BigRat(ca, 1) <= (e2 - gamma[a]) * (long)sys.part.blocks[a].size();
            }
        }
        rep.hypothesis_holds = hyp;
        if (hyp) {
            rep.detail = check_L4(sys, e1, e2);
            rep.conclusion_holds = rep.detail.holds;
        }
        break;
    }
    case SufficientCondition::ZeroJump: {
        rep.description = "zero jump forces |I| = |D|";
        rep.hypothesis_holds = sys.invertible() && jump_stats(sys).zero_jump;
        if (rep.hypothesis_holds) {
            auto d = dic_split(sys);
            rep.conclusion_holds = d.I.size() == d.D.size();
        }
        break;
    }
    case SufficientCondition::EntropyPreservingReversion: {
        rep.description = "a size-preserving reversion forces |I| = |D|";
        bool hyp = sys.reversion.has_value();
        if (hyp)
            for (int i = 0; i < sys.n && hyp; ++i)
                hyp = sys.block_size((*sys.reversion)[i]) == sys.block_size(i);
        rep.hypothesis_holds = hyp;
        if (hyp) {
            auto d = dic_split(sys);
            rep.conclusion_holds = d.I.size() == d.D.size();
        }
        break;
    }
    case SufficientCondition::AlwaysIncreasing: {
        rep.description = "no decreases happens exactly when entropy is constant on orbits";
        if (!sys.invertible())
            throw std::invalid_argument("sufficient_conditions: needs invertible dynamics");
        auto d = dic_split(sys);
        bool no_dec = d.D.empty();
        bool const_on_orbits = true;
        for (const auto& c : orbits(sys)) {
            for (int i : c)
                if (sys.block_size(i) != sys.block_size(c[0])) const_on_orbits = false;
        }
        rep.hypothesis_holds = no_dec;
        rep.conclusion_holds = const_on_orbits;
        rep.detail.holds = (no_dec == const_on_orbits);
        break;
    }
    }
    return rep;
}

} // namespace mmds
