#include "mmds/system.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mmds {

namespace {

void canonicalize(std::vector<std::vector<int>>& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
}

} // namespace

Partition make_partition(int n, const std::vector<std::vector<int>>& blocks_in) {
    if (n < 0) throw std::invalid_argument("partition: negative n");
    Partition p;
    p.n = n;
    p.blocks = blocks_in;
    for (auto& b : p.blocks)
        if (b.empty()) throw std::invalid_argument("partition: empty block");
    canonicalize(p.blocks);
    p.block_of.assign(n, -1);
    for (int bi = 0; bi < (int)p.blocks.size(); ++bi) {
        for (int i : p.blocks[bi]) {
            if (i < 0 || i >= n) throw std::invalid_argument("partition: element out of range");
            if (p.block_of[i] != -1) throw std::invalid_argument("partition: element repeated");
            p.block_of[i] = bi;
        }
    }
    for (int i = 0; i < n; ++i)
        if (p.block_of[i] == -1) throw std::invalid_argument("partition: element missing");
    return p;
}

Partition partition_from_labels(const std::vector<int>& labels) {
    std::map<int, std::vector<int>> by_label;
    for (int i = 0; i < (int)labels.size(); ++i) by_label[labels[i]].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [_, b] : by_label) blocks.push_back(std::move(b));
    return make_partition((int)labels.size(), blocks);
}

bool same_partition(const Partition& a, const Partition& b) {
    return a.n == b.n && a.blocks == b.blocks;
}

ZoneProfile zone_profile(const Partition& p) {
    ZoneProfile z;
    std::map<long, std::vector<int>> by_size;
    for (int bi = 0; bi < (int)p.blocks.size(); ++bi)
        by_size[(long)p.blocks[bi].size()].push_back(bi);
    z.zone_of_block.assign(p.blocks.size(), -1);
    z.zone_of.assign(p.n, -1);
    for (auto& [k, bs] : by_size) {
        int j = (int)z.sizes.size();
        z.sizes.push_back(k);
        z.zone_card.push_back(k * (long)bs.size());
        z.zone_blocks.push_back(bs);
        std::vector<int> members;
        for (int bi : bs) {
            z.zone_of_block[bi] = j;
            for (int i : p.blocks[bi]) {
                members.push_back(i);
                z.zone_of[i] = j;
            }
        }
        std::sort(members.begin(), members.end());
        z.zone_members.push_back(std::move(members));
    }
    return z;
}

bool is_permutation(const std::vector<int>& f) {
    std::vector<char> seen(f.size(), 0);
    for (int v : f) {
        if (v < 0 || v >= (int)f.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool System::invertible() const { return is_permutation(alpha); }

std::vector<int> inverse_permutation(const std::vector<int>& p) {
    if (!is_permutation(p)) throw std::invalid_argument("inverse of a non-bijective map");
    std::vector<int> inv(p.size());
    for (int i = 0; i < (int)p.size(); ++i) inv[p[i]] = i;
    return inv;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> h(g.size());
    for (int i = 0; i < (int)g.size(); ++i) h[i] = f[g[i]];
    return h;
}

std::vector<int> iterate_map(const std::vector<int>& f, long steps) {
    int n = (int)f.size();
    std::vector<int> base = f;
    if (steps < 0) {
        base = inverse_permutation(f);
        steps = -steps;
    }
    std::vector<int> result(n);
    std::iota(result.begin(), result.end(), 0);
    // plain repeated squaring on maps
    while (steps > 0) {
        if (steps & 1) result = compose(base, result);
        base = compose(base, base);
        steps >>= 1;
    }
    return result;
}

System build_system(int n, const std::vector<std::vector<int>>& blocks,
                    const std::vector<int>& alpha,
                    const std::optional<std::vector<int>>& reversion) {
    System s;
    s.n = n;
    s.part = make_partition(n, blocks);
    if ((int)alpha.size() != n) throw std::invalid_argument("dynamics: wrong domain size");
    for (int v : alpha)
        if (v < 0 || v >= n) throw std::invalid_argument("dynamics: value out of range");
    s.alpha = alpha;
    if (n > 0 && s.part.blocks.empty()) throw std::invalid_argument("partition: no blocks");
    if (reversion) {
        const auto& r = *reversion;
        if ((int)r.size() != n) throw std::invalid_argument("reversion: wrong domain size");
        if (!is_permutation(r)) throw std::invalid_argument("reversion: not a bijection");
        for (int i = 0; i < n; ++i)
            if (r[r[i]] != i) throw std::invalid_argument("reversion: not an involution");
        if (!is_permutation(alpha))
            throw std::invalid_argument("reversion requires invertible dynamics");
        auto inv = inverse_permutation(alpha);
        for (int i = 0; i < n; ++i)
            if (r[alpha[r[i]]] != inv[i])
                throw std::invalid_argument("reversion does not conjugate dynamics to its inverse");
        s.reversion = r;
    }
    return s;
}

double block_entropy(long size) { return std::log((double)size); }

double system_entropy(const Partition& p) {
    double s = 0;
    for (const auto& b : p.blocks)
        s += (double)b.size() / p.n * std::log((double)b.size());
    return s;
}

TransitionCounts transition_counts(const System& sys, long steps) {
    if (steps < 0 && !sys.invertible())
        throw std::invalid_argument("negative steps need invertible dynamics");
    auto an = iterate_map(sys.alpha, steps);
    TransitionCounts tc;
    tc.nblocks = (int)sys.part.blocks.size();
    tc.N.assign(tc.nblocks, std::vector<long>(tc.nblocks, 0));
    for (const auto& b : sys.part.blocks) tc.block_sizes.push_back((long)b.size());
    for (int i = 0; i < sys.n; ++i)
        tc.N[sys.part.block_of[an[i]]][sys.part.block_of[i]]++;
    return tc;
}

std::vector<std::vector<long>> zone_transition_counts(const System& sys, long steps) {
    auto z = zone_profile(sys.part);
    auto an = iterate_map(sys.alpha, steps);
    int o = (int)z.sizes.size();
    std::vector<std::vector<long>> M(o, std::vector<long>(o, 0));
    for (int i = 0; i < sys.n; ++i) M[z.zone_of[an[i]]][z.zone_of[i]]++;
    return M;
}

EntropyReport entropy_report(const System& sys, long steps) {
    if (sys.n == 0) throw std::invalid_argument("entropy of empty system");
    EntropyReport r;
    for (const auto& b : sys.part.blocks) r.block_sizes.push_back((long)b.size());
    r.S_system = system_entropy(sys.part);
    r.H_macro = std::log((double)sys.n) - r.S_system;
    auto tc = transition_counts(sys, steps);
    double ht = 0;
    for (int b = 0; b < tc.nblocks; ++b) {
        double w = (double)tc.block_sizes[b] / sys.n;
        for (int a = 0; a < tc.nblocks; ++a) {
            if (tc.N[a][b] == 0) continue;
            double t = (double)tc.N[a][b] / tc.block_sizes[b];
            ht -= w * t * std::log(t);
        }
    }
    r.H_transition = ht;
    r.S_plus_H = r.S_system + r.H_macro;
    return r;
}

DICSplit dic_split(const System& sys, long steps) {
    auto an = iterate_map(sys.alpha, steps);
    DICSplit s;
    for (int i = 0; i < sys.n; ++i) {
        long before = sys.block_size(i);
        long after = (long)sys.part.blocks[sys.part.block_of[an[i]]].size();
        if (after < before) s.D.push_back(i);
        else if (after > before) s.I.push_back(i);
        else s.C.push_back(i);
    }
    return s;
}

std::vector<int> equilibrium_states(const System& sys) {
    size_t mx = 0;
    for (const auto& b : sys.part.blocks) mx = std::max(mx, b.size());
    std::vector<int> eq;
    for (const auto& b : sys.part.blocks)
        if (b.size() == mx) eq.insert(eq.end(), b.begin(), b.end());
    std::sort(eq.begin(), eq.end());
    return eq;
}

std::vector<int> nonequilibrium_states(const System& sys) {
    auto eq = equilibrium_states(sys);
    std::vector<char> is_eq(sys.n, 0);
    for (int i : eq) is_eq[i] = 1;
    std::vector<int> neq;
    for (int i = 0; i < sys.n; ++i)
        if (!is_eq[i]) neq.push_back(i);
    return neq;
}

JumpStats jump_stats(const System& sys, long steps) {
    auto z = zone_profile(sys.part);
    auto an = iterate_map(sys.alpha, steps);
    JumpStats j;
    j.jump.assign(sys.n, 0);
    for (int i = 0; i < sys.n; ++i) {
        int z0 = z.zone_of[i], z1 = z.zone_of[an[i]];
        long v = std::abs(z1 - z0);
        if (v > 0) v -= 1;  // sizes strictly between the two endpoints
        j.jump[i] = v;
        j.total += v;
        j.max = std::max(j.max, v);
    }
    j.zero_jump = (j.max == 0);
    return j;
}

std::vector<std::vector<int>> orbits(const System& sys) {
    if (!sys.invertible()) throw std::invalid_argument("orbits need invertible dynamics");
    std::vector<char> seen(sys.n, 0);
    std::vector<std::vector<int>> res;
    for (int i = 0; i < sys.n; ++i) {
        if (seen[i]) continue;
        std::vector<int> orb;
        int j = i;
        do {
            seen[j] = 1;
            orb.push_back(j);
            j = sys.alpha[j];
        } while (j != i);
        res.push_back(std::move(orb));
    }
    return res;
}

EqTimeReport equilibrium_reaching_time(const System& sys) {
    std::vector<char> is_eq(sys.n, 0);
    for (int i : equilibrium_states(sys)) is_eq[i] = 1;
    EqTimeReport rep;
    rep.e.assign(sys.n, -1);
    for (int i = 0; i < sys.n; ++i)
        if (is_eq[i]) rep.e[i] = 0;
    for (int i = 0; i < sys.n; ++i) {
        if (rep.e[i] >= 0) continue;
        // follow the forward orbit until X^eq, a known state, or a loop
        std::vector<int> path;
        std::vector<long> pos(0);
        std::map<int, long> where;
        int j = i;
        long k = 0;
        while (true) {
            if (is_eq[j]) {
                for (long t = 0; t < (long)path.size(); ++t)
                    if (rep.e[path[t]] < 0) rep.e[path[t]] = k - t;
                break;
            }
            if (rep.e[j] >= 0) {
                for (long t = 0; t < (long)path.size(); ++t)
                    if (rep.e[path[t]] < 0) rep.e[path[t]] = rep.e[j] + k - t;
                break;
            }
            auto it = where.find(j);
            if (it != where.end()) {
                // cycle entirely inside X^neq: never reaches equilibrium
                rep.equilibrium_bound = false;
                rep.witness_orbit.assign(path.begin() + it->second, path.end());
                return rep;
            }
            where[j] = k;
            path.push_back(j);
            j = sys.alpha[j];
            ++k;
        }
    }
    for (long v : rep.e) rep.E = std::max(rep.E, v);
    return rep;
}

DerivedTimeSystem derived_time_system(const System& sys) {
    auto et = equilibrium_reaching_time(sys);
    if (!et.equilibrium_bound)
        throw std::invalid_argument("derived time system needs an equilibrium bound system");
    DerivedTimeSystem d;
    std::vector<int> labels(sys.n);
    for (int i = 0; i < sys.n; ++i) labels[i] = (int)et.e[i];
    auto part = partition_from_labels(labels);
    std::vector<std::vector<int>> blocks = part.blocks;
    d.sys = build_system(sys.n, blocks, sys.alpha);
    auto eq = equilibrium_states(sys);
    d.level_meets_alpha_eq.assign(et.E + 1, false);
    for (int i : eq) d.level_meets_alpha_eq[et.e[sys.alpha[i]]] = true;
    auto js = jump_stats(d.sys);
    d.mean_jump = BigRat(js.total, sys.n);
    return d;
}

System product(const System& x, const System& y) {
    if (x.n == 0 || y.n == 0) throw std::invalid_argument("product with empty system");
    int n = x.n * y.n;
    auto idx = [&](int i, int j) { return i * y.n + j; };
    std::vector<int> alpha(n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < y.n; ++j)
            alpha[idx(i, j)] = idx(x.alpha[i], y.alpha[j]);
    std::vector<std::vector<int>> blocks;
    for (const auto& a : x.part.blocks)
        for (const auto& b : y.part.blocks) {
            std::vector<int> blk;
            for (int i : a)
                for (int j : b) blk.push_back(idx(i, j));
            blocks.push_back(std::move(blk));
        }
    std::optional<std::vector<int>> rev;
    if (x.reversion && y.reversion) {
        std::vector<int> r(n);
        for (int i = 0; i < x.n; ++i)
            for (int j = 0; j < y.n; ++j)
                r[idx(i, j)] = idx((*x.reversion)[i], (*y.reversion)[j]);
        rev = r;
    }
    return build_system(n, blocks, alpha, rev);
}

System empty_system() { return System{}; }

System disjoint_union(const System& x, const System& y) {
    if (x.n == 0) return y;
    if (y.n == 0) return x;
    int n = x.n + y.n;
    std::vector<int> alpha(n);
    for (int i = 0; i < x.n; ++i) alpha[i] = x.alpha[i];
    for (int j = 0; j < y.n; ++j) alpha[x.n + j] = x.n + y.alpha[j];
    std::vector<std::vector<int>> blocks = x.part.blocks;
    for (const auto& b : y.part.blocks) {
        std::vector<int> blk;
        for (int j : b) blk.push_back(x.n + j);
        blocks.push_back(std::move(blk));
    }
    std::optional<std::vector<int>> rev;
    if (x.reversion && y.reversion) {
        std::vector<int> r(n);
        for (int i = 0; i < x.n; ++i) r[i] = (*x.reversion)[i];
        for (int j = 0; j < y.n; ++j) r[x.n + j] = x.n + (*y.reversion)[j];
        rev = r;
    }
    return build_system(n, blocks, alpha, rev);
}

System restrict_system(const System& sys, const std::vector<int>& Z) {
    if (!sys.invertible())
        throw std::invalid_argument("restriction needs invertible dynamics");
    std::vector<int> zs = Z;
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    if (zs.empty()) throw std::invalid_argument("restriction to empty set");
    std::vector<int> newidx(sys.n, -1);
    for (int k = 0; k < (int)zs.size(); ++k) {
        if (zs[k] < 0 || zs[k] >= sys.n) throw std::invalid_argument("restriction: bad index");
        newidx[zs[k]] = k;
    }
    int m = (int)zs.size();
    std::vector<int> alpha(m);
    for (int k = 0; k < m; ++k) {
        // first return to Z; guaranteed to exist since alpha is a permutation
        int j = sys.alpha[zs[k]];
        while (newidx[j] < 0) j = sys.alpha[j];
        alpha[k] = newidx[j];
    }
    std::vector<std::vector<int>> blocks;
    for (const auto& b : sys.part.blocks) {
        std::vector<int> blk;
        for (int i : b)
            if (newidx[i] >= 0) blk.push_back(newidx[i]);
        if (!blk.empty()) blocks.push_back(std::move(blk));
    }
    std::optional<std::vector<int>> rev;
    if (sys.reversion) {
        bool closed = true;
        for (int i : zs)
            if (newidx[(*sys.reversion)[i]] < 0) { closed = false; break; }
        if (closed) {
            std::vector<int> r(m);
            for (int k = 0; k < m; ++k) r[k] = newidx[(*sys.reversion)[zs[k]]];
            rev = r;
        }
    }
    return build_system(m, blocks, alpha, rev);
}

System coarse_grain(const System& sys, const std::vector<int>& g) {
    int nb = (int)sys.part.blocks.size();
    if ((int)g.size() != nb) throw std::invalid_argument("coarse_grain: map size mismatch");
    std::map<int, std::vector<int>> merged;
    for (int b = 0; b < nb; ++b)
        for (int i : sys.part.blocks[b]) merged[g[b]].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [_, blk] : merged) blocks.push_back(std::move(blk));
    System out = build_system(sys.n, blocks, sys.alpha, sys.reversion);

    // coarser partition: S can only grow, and the macro information
    // H(p) + H(T) can only shrink
    double s_fine = system_entropy(sys.part), s_coarse = system_entropy(out.part);
    if (s_coarse < s_fine - 1e-12)
        throw std::logic_error("coarse_grain: entropy decreased");
    auto rf = entropy_report(sys), rc = entropy_report(out);
    if (rc.H_macro + rc.H_transition > rf.H_macro + rf.H_transition + 1e-9)
        throw std::logic_error("coarse_grain: macro information increased");
    return out;
}

Partition meet(const Partition& a, const Partition& b) {
    if (a.n != b.n) throw std::invalid_argument("meet: size mismatch");
    std::map<std::pair<int, int>, std::vector<int>> fibers;
    for (int i = 0; i < a.n; ++i)
        fibers[{a.block_of[i], b.block_of[i]}].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [_, blk] : fibers) blocks.push_back(std::move(blk));
    return make_partition(a.n, blocks);
}

Partition joint(const Partition& a, const Partition& b) {
    if (a.n != b.n) throw std::invalid_argument("join: size mismatch");
    // union-find over microstates: i ~ j when they share a block in a or b
    std::vector<int> parent(a.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (const auto& blk : a.blocks)
        for (size_t t = 1; t < blk.size(); ++t) unite(blk[0], blk[t]);
    for (const auto& blk : b.blocks)
        for (size_t t = 1; t < blk.size(); ++t) unite(blk[0], blk[t]);
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < a.n; ++i) comps[find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [_, blk] : comps) blocks.push_back(std::move(blk));
    return make_partition(a.n, blocks);
}

TypicalSetsReport typical_sets(const System& sys, int n_power, double eps) {
    if (n_power < 1) throw std::invalid_argument("typical_sets: n_power must be positive");
    if (eps <= 0) throw std::invalid_argument("typical_sets: eps must be positive");
    auto z = zone_profile(sys.part);
    int o = (int)z.sizes.size();
    TypicalSetsReport rep;
    rep.S = system_entropy(sys.part);
    double lo = n_power * (rep.S - eps), hi = n_power * (rep.S + eps);

    long nblocks = (long)sys.part.blocks.size();
    rep.total_micro = 1;
    rep.total_macro = 1;
    for (int t = 0; t < n_power; ++t) {
        rep.total_micro *= sys.n;
        rep.total_macro *= nblocks;
    }

    // a product macrostate is typical iff sum of log block sizes lies in
    // [n(S-eps), n(S+eps)]; aggregate by composition of n_power over zones
    rep.typical_micro_count = 0;
    rep.typical_macro_count = 0;
    bool sizes_ok = true;
    std::vector<long> m(o, 0);
    std::function<void(int, int)> rec = [&](int zi, int left) {
        if (zi == o - 1) {
            m[zi] = left;
            double logsize = 0;
            for (int j = 0; j < o; ++j) logsize += m[j] * std::log((double)z.sizes[j]);
            if (logsize >= lo - 1e-12 && logsize <= hi + 1e-12) {
                // count of macrostates with this zone composition, and their
                // common microstate count
                BigInt macro_ct = multinomial(n_power, m);
                for (int j = 0; j < o; ++j) {
                    BigInt bj = (BigInt)z.zone_blocks[j].size();
                    for (long t = 0; t < m[j]; ++t) macro_ct *= bj;
                }
                BigInt size = 1;
                for (int j = 0; j < o; ++j)
                    for (long t = 0; t < m[j]; ++t) size *= z.sizes[j];
                rep.typical_macro_count += macro_ct;
                rep.typical_micro_count += macro_ct * size;
                double lg = logsize;
                if (lg < lo - 1e-12 || lg > hi + 1e-12) sizes_ok = false;
            }
            return;
        }
        for (long v = 0; v <= left; ++v) {
            m[zi] = v;
            rec(zi + 1, left - (int)v);
        }
    };
    rec(0, n_power);

    rep.macro_size_bounds = sizes_ok;
    // |X^n_eps| >= (1-eps)|X|^n, compared as exact rationals
    rep.micro_mass_bound =
        BigRat(rep.typical_micro_count, rep.total_micro) >= BigRat(1) - BigRat(eps);
    double macro_ct = rep.typical_macro_count.convert_to<double>();
    double total_macro = rep.total_macro.convert_to<double>();
    rep.macro_count_lower =
        macro_ct >= (1 - eps) * total_macro * std::exp(-hi) - 1e-9;
    rep.macro_count_upper = macro_ct <= total_macro * std::exp(-lo) + 1e-9;
    return rep;
}

namespace {

// occupancy vector of a placement map [p] -> [b]
std::vector<int> occupancy(const std::vector<int>& place, int boxes) {
    std::vector<int> occ(boxes, 0);
    for (int v : place) occ[v]++;
    return occ;
}

std::string occ_label(const std::vector<int>& occ) {
    std::string s = "(";
    for (size_t i = 0; i < occ.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(occ[i]);
    }
    return s + ")";
}

} // namespace

StatSpace statistics_space(Statistic st, int particles, int boxes, int gentile_max) {
    if (particles < 1 || boxes < 1)
        throw std::invalid_argument("statistics_space: need positive particles and boxes");
    StatSpace sp;
    std::vector<int> labels;

    switch (st) {
    case Statistic::MB: case Statistic::LB: case Statistic::Gentile: {
        // enumerate placements [p] -> [b]; filter per statistic
        std::map<std::vector<int>, int> occ_id;
        std::vector<int> place(particles, 0);
        while (true) {
            bool keep = true;
            auto occ = occupancy(place, boxes);
            if (st == Statistic::LB)
                for (int v : occ) keep = keep && v <= 1;
            if (st == Statistic::Gentile)
                for (int v : occ) keep = keep && v <= gentile_max;
            if (keep) {
                auto [it, _] = occ_id.try_emplace(occ, (int)occ_id.size());
                labels.push_back(it->second);
                sp.micro_labels.push_back(occ_label(occ));
            }
            int k = particles - 1;
            while (k >= 0 && place[k] == boxes - 1) place[k--] = 0;
            if (k < 0) break;
            place[k]++;
        }
        break;
    }
    case Statistic::BE: {
        // microstates are the occupancy vectors themselves; singleton blocks
        std::vector<int> occ(boxes, 0);
        std::function<void(int, int)> rec = [&](int box, int left) {
            if (box == boxes - 1) {
                occ[box] = left;
                labels.push_back((int)labels.size());
                sp.micro_labels.push_back(occ_label(occ));
                return;
            }
            for (int v = 0; v <= left; ++v) {
                occ[box] = v;
                rec(box + 1, left - v);
            }
        };
        rec(0, particles);
        break;
    }
    case Statistic::FD: {
        if (particles > boxes)
            throw std::invalid_argument("statistics_space: FD needs particles <= boxes");
        std::vector<int> mask(boxes, 0);
        std::fill(mask.end() - particles, mask.end(), 1);
        do {
            labels.push_back((int)labels.size());
            sp.micro_labels.push_back(occ_label(mask));
        } while (std::next_permutation(mask.begin(), mask.end()));
        break;
    }
    case Statistic::DI: {
        // set partitions of the particles into at most `boxes` parts;
        // macrostate is the multiset of part sizes
        std::map<std::vector<int>, int> shape_id;
        std::vector<int> rgs(particles, 0);
        std::function<void(int, int)> rec = [&](int i, int mx) {
            if (i == particles) {
                int parts = mx + 1;
                if (parts > boxes) return;
                std::vector<int> sz(parts, 0);
                for (int v : rgs) sz[v]++;
                std::sort(sz.begin(), sz.end());
                auto [it, _] = shape_id.try_emplace(sz, (int)shape_id.size());
                labels.push_back(it->second);
                std::string lab;
                for (int v : rgs) lab += std::to_string(v) + ".";
                sp.micro_labels.push_back(lab);
                return;
            }
            for (int v = 0; v <= mx + 1; ++v) {
                rgs[i] = v;
                rec(i + 1, std::max(mx, v));
            }
        };
        rec(0, -1);
        break;
    }
    case Statistic::II: {
        // numerical partitions of `particles` into at most `boxes` parts
        std::vector<int> parts;
        std::function<void(int, int)> rec = [&](int left, int maxpart) {
            if (left == 0) {
                labels.push_back((int)labels.size());
                std::string lab;
                for (int v : parts) lab += std::to_string(v) + "+";
                if (!lab.empty()) lab.pop_back();
                sp.micro_labels.push_back(lab);
                return;
            }
            if ((int)parts.size() == boxes) return;
            for (int v = std::min(left, maxpart); v >= 1; --v) {
                parts.push_back(v);
                rec(left - v, v);
                parts.pop_back();
            }
        };
        rec(particles, particles);
        break;
    }
    }

    sp.n = (long)labels.size();
    sp.part = partition_from_labels(labels);
    return sp;
}

} // namespace mmds
