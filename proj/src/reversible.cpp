#include "mmds/reversible.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mmds {

namespace {

std::vector<int> block_labels(const System& sys) {
    std::vector<int> lab(sys.n);
    for (int i = 0; i < sys.n; ++i) lab[i] = sys.part.block_of[i];
    return lab;
}

System system_from_parts(const std::vector<int>& labels, const std::vector<int>& alpha,
                         const std::optional<std::vector<int>>& rev) {
    auto part = partition_from_labels(labels);
    return build_system((int)labels.size(), part.blocks, alpha, rev);
}

} // namespace

System make_IR(const System& sys) {
    if (!sys.invertible()) throw std::invalid_argument("make_IR: needs invertible dynamics");
    int n = sys.n;
    auto inv = inverse_permutation(sys.alpha);
    std::vector<int> alpha(2 * n), r(2 * n), lab(2 * n);
    for (int i = 0; i < n; ++i) {
        alpha[i] = sys.alpha[i];
        alpha[n + i] = n + inv[i];
        r[i] = n + i;
        r[n + i] = i;
        lab[i] = sys.part.block_of[i];
        lab[n + i] = sys.part.block_of[i];
    }
    auto out = system_from_parts(lab, alpha, r);

    // doubled fibers, balanced increase/decrease, and the averaged
    // transition rule are structural facts of this construction
    auto d0 = dic_split(sys, 1), db = dic_split(sys, -1), dh = dic_split(out, 1);
    if (dh.D.size() != dh.I.size() || dh.D.size() != d0.D.size() + d0.I.size() ||
        dh.C.size() != 2 * d0.C.size())
        throw std::logic_error("make_IR: decrease/increase bookkeeping failed");
    auto tf = transition_counts(sys, 1), tb = transition_counts(sys, -1);
    auto th = transition_counts(out, 1);
    // blocks of out are in the same canonical order as sys (same sizes
    // doubled, same smallest elements)
    for (int a = 0; a < tf.nblocks; ++a)
        for (int b = 0; b < tf.nblocks; ++b)
            if (th.N[a][b] != tf.N[a][b] + tb.N[a][b])
                throw std::logic_error("make_IR: transition averaging failed");
    (void)db;
    return out;
}

System make_ER(const System& sys) {
    if (!sys.invertible()) throw std::invalid_argument("make_ER: needs invertible dynamics");
    int n = sys.n;
    int nb = (int)sys.part.blocks.size();
    auto inv = inverse_permutation(sys.alpha);
    std::vector<int> alpha(2 * n), r(2 * n), lab(2 * n);
    for (int i = 0; i < n; ++i) {
        alpha[i] = sys.alpha[i];
        alpha[n + i] = n + inv[i];
        r[i] = n + i;
        r[n + i] = i;
        lab[i] = sys.part.block_of[i];
        lab[n + i] = nb + sys.part.block_of[i];
    }
    auto out = system_from_parts(lab, alpha, r);

    // fibers keep their sizes and sheets never mix
    if (out.part.blocks.size() != 2 * sys.part.blocks.size())
        throw std::logic_error("make_ER: fiber count failed");
    auto th = transition_counts(out);
    for (int a = 0; a < th.nblocks; ++a)
        for (int b = 0; b < th.nblocks; ++b) {
            bool sa = out.part.blocks[a][0] < n, sb = out.part.blocks[b][0] < n;
            if (sa != sb && th.N[a][b] != 0)
                throw std::logic_error("make_ER: sheets mixed");
        }
    if (std::abs(system_entropy(out.part) - system_entropy(sys.part)) > 1e-12)
        throw std::logic_error("make_ER: entropy changed");
    return out;
}

System build_not(ChainKind kind, const std::vector<std::vector<int>>& chains,
                 const std::vector<int>& g, const std::vector<int>& h,
                 const std::vector<int>& iota) {
    bool eq = kind == ChainKind::EqN || kind == ChainKind::EqO || kind == ChainKind::EqT;
    bool has_o = kind == ChainKind::O || kind == ChainKind::T ||
                 kind == ChainKind::EqO || kind == ChainKind::EqT;
    bool has_t = kind == ChainKind::T || kind == ChainKind::EqT;
    if (has_o && g.size() != chains.size())
        throw std::invalid_argument("build_not: g must label every chain");
    if (has_t && h.size() != chains.size())
        throw std::invalid_argument("build_not: h must label every chain");
    auto apply_iota = [&](int lbl) {
        if (!eq) return lbl;
        if (lbl < 0 || lbl >= (int)iota.size())
            throw std::invalid_argument("build_not: label outside involution domain");
        return iota[lbl];
    };
    if (eq) {
        if (!is_permutation(iota)) throw std::invalid_argument("build_not: iota not a bijection");
        for (int i = 0; i < (int)iota.size(); ++i)
            if (iota[iota[i]] != i) throw std::invalid_argument("build_not: iota not an involution");
        for (int lbl : g)
            if (apply_iota(lbl) != lbl)
                throw std::invalid_argument("build_not: g labels must be iota-fixed");
        for (int lbl : h)
            if (apply_iota(lbl) != lbl)
                throw std::invalid_argument("build_not: h labels must be iota-fixed");
    }

    std::vector<int> alpha, r, lab;
    for (size_t c = 0; c < chains.size(); ++c) {
        const auto& f = chains[c];
        int m = (int)f.size();
        if (!has_o && m == 0)
            throw std::invalid_argument("build_not: chains must be nonempty for this kind");
        int base = (int)lab.size();
        // layout per chain: [o_c] f(l_1..l_m) sheet +1, [t_c], then sheet -1
        // in reverse cycle position; we store +1 sheet first, -1 sheet after
        int o_idx = -1, t_idx = -1;
        std::vector<int> plus(m), minus(m);
        int cursor = base;
        if (has_o) o_idx = cursor++;
        for (int j = 0; j < m; ++j) plus[j] = cursor++;
        if (has_t) t_idx = cursor++;
        for (int j = 0; j < m; ++j) minus[j] = cursor++;
        alpha.resize(cursor, -1);
        r.resize(cursor, -1);
        lab.resize(cursor, -1);

        // cycle o_c -> (l_1,+) -> ... -> (l_m,+) -> t_c -> (l_m,-) -> ... -> (l_1,-) -> o_c
        std::vector<int> cyc;
        if (has_o) cyc.push_back(o_idx);
        for (int j = 0; j < m; ++j) cyc.push_back(plus[j]);
        if (has_t) cyc.push_back(t_idx);
        for (int j = m - 1; j >= 0; --j) cyc.push_back(minus[j]);
        for (size_t k = 0; k < cyc.size(); ++k)
            alpha[cyc[k]] = cyc[(k + 1) % cyc.size()];

        if (has_o) {
            r[o_idx] = o_idx;
            lab[o_idx] = g[c];
        }
        if (has_t) {
            r[t_idx] = t_idx;
            lab[t_idx] = h[c];
        }
        for (int j = 0; j < m; ++j) {
            r[plus[j]] = minus[j];
            r[minus[j]] = plus[j];
            lab[plus[j]] = f[j];
            lab[minus[j]] = apply_iota(f[j]);
        }
    }
    if (lab.empty()) throw std::invalid_argument("build_not: no chains given");
    return system_from_parts(lab, alpha, r);
}

namespace {

// induced involution on blocks; throws if r does not permute blocks
std::vector<int> block_involution(const System& sys) {
    const auto& r = *sys.reversion;
    int nb = (int)sys.part.blocks.size();
    std::vector<int> iota(nb, -1);
    for (int b = 0; b < nb; ++b) {
        int target = sys.part.block_of[r[sys.part.blocks[b][0]]];
        for (int i : sys.part.blocks[b])
            if (sys.part.block_of[r[i]] != target)
                throw std::invalid_argument("reversion does not act on macrostates");
        if ((long)sys.part.blocks[target].size() != (long)sys.part.blocks[b].size())
            throw std::invalid_argument("reversion does not act on macrostates");
        iota[b] = target;
    }
    return iota;
}

} // namespace

Decomposition decompose_reversible(const System& sys, DecomposeMode mode) {
    if (!sys.reversion) throw std::invalid_argument("decompose: reversion required");
    const auto& r = *sys.reversion;
    std::vector<int> iota;
    if (mode == DecomposeMode::Invariant) {
        for (int i = 0; i < sys.n; ++i)
            if (sys.part.block_of[r[i]] != sys.part.block_of[i])
                throw std::invalid_argument("decompose: reversion must fix macrostates");
        iota.assign(sys.part.blocks.size(), 0);
        for (int b = 0; b < (int)iota.size(); ++b) iota[b] = b;
    } else {
        iota = block_involution(sys);
    }

    auto cycles = orbits(sys);
    auto cycle_of = std::vector<int>(sys.n, -1);
    for (int c = 0; c < (int)cycles.size(); ++c)
        for (int i : cycles[c]) cycle_of[i] = c;

    Decomposition dec;
    std::vector<int> base_states;            // representatives of mirrored pairs
    std::vector<std::vector<int>> chains_n, chains_o, chains_t;
    std::vector<std::vector<int>> orig_n, orig_o, orig_t;  // original indices per chain slot
    std::vector<int> g_o, g_t, h_t;
    std::vector<int> o_fixed_o, o_fixed_t, t_fixed_t;      // original fixed points

    std::vector<char> done(cycles.size(), 0);
    for (int c = 0; c < (int)cycles.size(); ++c) {
        if (done[c]) continue;
        const auto& cyc = cycles[c];
        int mirror = cycle_of[r[cyc[0]]];
        if (mirror != c) {
            // mirrored pair; keep the cycle holding the smaller index
            done[c] = done[mirror] = 1;
            const auto& rep = cycles[c][0] < cycles[mirror][0] ? cycles[c] : cycles[mirror];
            for (int i : rep) base_states.push_back(i);
            dec.cycles_paired += 2;
            continue;
        }
        done[c] = 1;
        long L = (long)cyc.size();
        std::vector<int> fixed;
        for (int i : cyc)
            if (r[i] == i) fixed.push_back(i);
        if (fixed.empty()) {
            // self-mirrored, fixed point free: length 2m, r(x_j) = x_{sigma-j}
            long sigma = -1;
            for (long j = 0; j < L; ++j)
                if (cyc[j] == r[cyc[0]]) sigma = j;
            if (L % 2 != 0 || sigma % 2 == 0)
                throw std::logic_error("decompose: impossible fixed point free cycle");
            long m = L / 2;
            // chain starts t with 2t = sigma+1 (mod 2m); two candidates
            long t1 = -1;
            for (long t = 0; t < L; ++t)
                if ((2 * t) % L == (sigma + 1) % L) { t1 = t; break; }
            long t2 = (t1 + m) % L;
            long t0 = cyc[t1] < cyc[t2] ? t1 : t2;
            std::vector<int> chain, orig;
            for (long j = 0; j < m; ++j) {
                int x = cyc[(t0 + j) % L];
                chain.push_back(sys.part.block_of[x]);
                orig.push_back(x);
            }
            chains_n.push_back(chain);
            orig_n.push_back(orig);
            dec.cycles_n++;
        } else if (fixed.size() == 1) {
            long p = -1;
            for (long j = 0; j < L; ++j)
                if (cyc[j] == fixed[0]) p = j;
            long m = (L - 1) / 2;
            std::vector<int> chain, orig;
            for (long j = 1; j <= m; ++j) {
                int x = cyc[(p + j) % L];
                chain.push_back(sys.part.block_of[x]);
                orig.push_back(x);
            }
            chains_o.push_back(chain);
            orig_o.push_back(orig);
            g_o.push_back(sys.part.block_of[fixed[0]]);
            o_fixed_o.push_back(fixed[0]);
            dec.cycles_o++;
        } else if (fixed.size() == 2) {
            int f0 = std::min(fixed[0], fixed[1]);
            int f1 = std::max(fixed[0], fixed[1]);
            long p = -1;
            for (long j = 0; j < L; ++j)
                if (cyc[j] == f0) p = j;
            long m = (L - 2) / 2;
            // the other fixed point sits m+1 steps ahead
            if (cyc[(p + m + 1) % L] != f1)
                throw std::logic_error("decompose: fixed points misplaced");
            std::vector<int> chain, orig;
            for (long j = 1; j <= m; ++j) {
                int x = cyc[(p + j) % L];
                chain.push_back(sys.part.block_of[x]);
                orig.push_back(x);
            }
            chains_t.push_back(chain);
            orig_t.push_back(orig);
            g_t.push_back(sys.part.block_of[f0]);
            h_t.push_back(sys.part.block_of[f1]);
            o_fixed_t.push_back(f0);
            t_fixed_t.push_back(f1);
            dec.cycles_t++;
        } else {
            throw std::logic_error("decompose: a cycle cannot hold more than two fixed points");
        }
    }

    // assemble: labels are original block ids throughout, so the
    // disjoint union glues into the original macro structure
    std::vector<int> alpha_re, r_re, lab_re;
    dec.phi.clear();
    auto append = [&](const std::vector<int>& a, const std::vector<int>& rv,
                      const std::vector<int>& lb, const std::vector<int>& ph) {
        int off = (int)lab_re.size();
        for (size_t k = 0; k < a.size(); ++k) {
            alpha_re.push_back(a[k] + off);
            r_re.push_back(rv[k] + off);
            lab_re.push_back(lb[k]);
            dec.phi.push_back(ph[k]);
        }
    };

    // paired part: doubling of the representative half
    {
        std::sort(base_states.begin(), base_states.end());
        if (!base_states.empty()) {
            int nb2 = (int)base_states.size();
            std::vector<int> idx(sys.n, -1);
            for (int k = 0; k < nb2; ++k) idx[base_states[k]] = k;
            std::vector<int> a_base(nb2), lab_base(nb2);
            for (int k = 0; k < nb2; ++k) {
                // base dynamics: first return inside the representative set,
                // but representative cycles are alpha-closed, so one step
                a_base[k] = idx[sys.alpha[base_states[k]]];
                lab_base[k] = sys.part.block_of[base_states[k]];
            }
            dec.base = system_from_parts(lab_base, a_base, std::nullopt);
            auto inv = inverse_permutation(a_base);
            std::vector<int> a2(2 * nb2), r2(2 * nb2), lab2(2 * nb2), phi2(2 * nb2);
            for (int k = 0; k < nb2; ++k) {
                a2[k] = a_base[k];
                a2[nb2 + k] = nb2 + inv[k];
                r2[k] = nb2 + k;
                r2[nb2 + k] = k;
                lab2[k] = lab_base[k];
                lab2[nb2 + k] = iota[lab_base[k]];
                phi2[k] = base_states[k];
                phi2[nb2 + k] = r[base_states[k]];
            }
            dec.part_paired = system_from_parts(lab2, a2, r2);
            append(std::vector<int>(a2.begin(), a2.end()), r2, lab2, phi2);
        }
    }

    // chain parts; each reproduces build_not's layout so the round trip
    // through build_not is the identity on indices
    auto append_chain_family = [&](ChainKind kind, const std::vector<std::vector<int>>& chains,
                                   const std::vector<std::vector<int>>& origs,
                                   const std::vector<int>& g, const std::vector<int>& h,
                                   const std::vector<int>& of, const std::vector<int>& tf,
                                   System& part_out) {
        if (chains.empty()) return;
        bool has_o = kind != ChainKind::EqN;
        bool has_t = kind == ChainKind::EqT;
        std::vector<int> a, rv, lb, ph;
        for (size_t c = 0; c < chains.size(); ++c) {
            int m = (int)chains[c].size();
            int base = (int)lb.size();
            int cursor = base;
            int o_idx = -1, t_idx = -1;
            std::vector<int> plus(m), minus(m);
            if (has_o) o_idx = cursor++;
            for (int j = 0; j < m; ++j) plus[j] = cursor++;
            if (has_t) t_idx = cursor++;
            for (int j = 0; j < m; ++j) minus[j] = cursor++;
            a.resize(cursor);
            rv.resize(cursor);
            lb.resize(cursor);
            ph.resize(cursor);
            std::vector<int> cycv;
            if (has_o) cycv.push_back(o_idx);
            for (int j = 0; j < m; ++j) cycv.push_back(plus[j]);
            if (has_t) cycv.push_back(t_idx);
            for (int j = m - 1; j >= 0; --j) cycv.push_back(minus[j]);
            for (size_t k = 0; k < cycv.size(); ++k)
                a[cycv[k]] = cycv[(k + 1) % cycv.size()];
            if (has_o) {
                rv[o_idx] = o_idx;
                lb[o_idx] = g[c];
                ph[o_idx] = of[c];
            }
            if (has_t) {
                rv[t_idx] = t_idx;
                lb[t_idx] = h[c];
                ph[t_idx] = tf[c];
            }
            for (int j = 0; j < m; ++j) {
                rv[plus[j]] = minus[j];
                rv[minus[j]] = plus[j];
                lb[plus[j]] = chains[c][j];
                lb[minus[j]] = iota[chains[c][j]];
                ph[plus[j]] = origs[c][j];
                ph[minus[j]] = r[origs[c][j]];
            }
        }
        part_out = system_from_parts(lb, a, rv);
        append(a, rv, lb, ph);
    };

    append_chain_family(ChainKind::EqN, chains_n, orig_n, {}, {}, {}, {}, dec.part_n);
    append_chain_family(ChainKind::EqO, chains_o, orig_o, g_o, {}, o_fixed_o, {}, dec.part_o);
    append_chain_family(ChainKind::EqT, chains_t, orig_t, g_t, h_t, o_fixed_t, t_fixed_t,
                        dec.part_t);

    dec.reassembled = system_from_parts(lab_re, alpha_re, r_re);

    // verify the certificate: phi is a bijection commuting with alpha and
    // the reversion, sending labels to the original block assignment
    bool ok = is_permutation(dec.phi) && (int)dec.phi.size() == sys.n;
    for (int k = 0; ok && k < sys.n; ++k) {
        ok = sys.alpha[dec.phi[k]] == dec.phi[alpha_re[k]] &&
             r[dec.phi[k]] == dec.phi[r_re[k]] &&
             sys.part.block_of[dec.phi[k]] == lab_re[k];
    }
    dec.certificate_ok = ok;
    if (!ok) throw std::logic_error("decompose: certificate verification failed");
    return dec;
}

FluctuationReport fluctuation_check(const System& sys) {
    if (!sys.invertible())
        throw std::invalid_argument("fluctuation_check: needs invertible dynamics");
    FluctuationReport rep;
    auto tf = transition_counts(sys, 1), tb = transition_counts(sys, -1);
    rep.forward_backward = true;
    for (int a = 0; a < tf.nblocks; ++a)
        for (int b = 0; b < tf.nblocks; ++b)
            if (tf.N[a][b] != tb.N[b][a]) rep.forward_backward = false;
    if (sys.reversion) {
        rep.checked_reversion = true;
        const auto& r = *sys.reversion;
        rep.reversion_identity = true;
        int nb = tf.nblocks;
        for (int a = 0; a < nb; ++a)
            for (int b = 0; b < nb; ++b) {
                // count i in r(a) with alpha(i) in r(b); r-images of blocks
                // need not be blocks themselves
                std::vector<char> in_rb(sys.n, 0);
                for (int j : sys.part.blocks[b]) in_rb[r[j]] = 1;
                long cnt = 0;
                for (int j : sys.part.blocks[a])
                    if (in_rb[sys.alpha[r[j]]]) ++cnt;
                if (cnt != tf.N[a][b]) rep.reversion_identity = false;
            }
    }
    return rep;
}

namespace {

std::pair<long, long> reduced_pair(long after, long before) {
    long g = std::gcd(after, before);
    return {after / g, before / g};
}

// exact sign of sum_p c_p ln p for rational c_p: zero iff all c_p vanish,
// otherwise the double evaluation decides (prime logs are independent
// over the rationals, and the c_p here are far from adversarial)
int log_combination_sign(const std::map<long, BigRat>& prime_weights) {
    bool all_zero = true;
    double v = 0;
    for (auto& [p, c] : prime_weights) {
        if (c != 0) all_zero = false;
        v += rat_to_double(c) * std::log((double)p);
    }
    if (all_zero) return 0;
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

void add_prime_weight(std::map<long, BigRat>& w, long value, const BigRat& coeff) {
    long v = value;
    for (long p = 2; p * p <= v; ++p)
        while (v % p == 0) {
            w[p] += coeff;
            v /= p;
        }
    if (v > 1) w[v] += coeff;
}

} // namespace

ProductionProfile production_profile(const System& sys, long n_steps) {
    if (n_steps < 1) throw std::invalid_argument("production_profile: n_steps must be >= 1");
    if (sys.n == 0) throw std::invalid_argument("production_profile: empty system");
    ProductionProfile pr;
    pr.n_steps = n_steps;
    auto an = iterate_map(sys.alpha, n_steps);
    long nb = (long)sys.part.blocks.size();
    auto neq = nonequilibrium_states(sys);
    std::vector<char> is_neq(sys.n, 0);
    for (int i : neq) is_neq[i] = 1;

    std::map<long, BigRat> w_u, w_u_neq, w_q;
    for (int i = 0; i < sys.n; ++i) {
        long before = sys.block_size(i);
        long after = (long)sys.part.blocks[sys.part.block_of[an[i]]].size();
        auto cls = reduced_pair(after, before);
        pr.sigma_pair.push_back(cls);
        pr.sigma.push_back(std::log((double)cls.first / cls.second) / n_steps);
        pr.density_u[cls] += BigRat(1, sys.n);
        if (is_neq[i]) pr.density_u_neq[cls] += BigRat(1, (long)neq.size());
        pr.density_q[cls] += BigRat(1, nb * before);
        add_prime_weight(w_u, cls.first, BigRat(1));
        add_prime_weight(w_u, cls.second, BigRat(-1));
        if (is_neq[i]) {
            add_prime_weight(w_u_neq, cls.first, BigRat(1));
            add_prime_weight(w_u_neq, cls.second, BigRat(-1));
        }
        add_prime_weight(w_q, cls.first, BigRat(1, before));
        add_prime_weight(w_q, cls.second, BigRat(-1, before));
    }
    double su = 0, sq = 0, sn = 0;
    for (int i = 0; i < sys.n; ++i) {
        su += pr.sigma[i] / sys.n;
        sq += pr.sigma[i] / (nb * sys.block_size(i));
        if (is_neq[i] && !neq.empty()) sn += pr.sigma[i] / (double)neq.size();
    }
    pr.mean_u = su;
    pr.mean_q = sq;
    pr.mean_u_neq = sn;

    pr.mean_u_zero = log_combination_sign(w_u) == 0;
    int sgn_neq = log_combination_sign(w_u_neq);
    pr.mean_u_neq_nonneg = sgn_neq >= 0;
    pr.mean_u_neq_zero = sgn_neq == 0;
    pr.mean_q_nonneg = log_combination_sign(w_q) >= 0;

    auto eqs = equilibrium_states(sys);
    pr.eq_invariant = true;
    for (int i : eqs)
        if (is_neq[an[i]]) pr.eq_invariant = false;

    pr.entropy_preserving_reversible = sys.reversion.has_value();
    if (sys.reversion)
        for (int i = 0; i < sys.n; ++i)
            if (sys.block_size((*sys.reversion)[i]) != sys.block_size(i))
                pr.entropy_preserving_reversible = false;

    auto mass = [](const std::map<std::pair<long, long>, BigRat>& d,
                   std::pair<long, long> k) {
        auto it = d.find(k);
        return it == d.end() ? BigRat(0) : it->second;
    };
    pr.W_u_even = true;
    pr.W_u_neq_dominates = true;
    pr.W_q_detailed_balance = true;
    std::set<std::pair<long, long>> keys;
    for (auto& [k, _] : pr.density_u) keys.insert(k);
    for (auto& [k, _] : pr.density_u_neq) keys.insert(k);
    for (auto& [k, _] : pr.density_q) keys.insert(k);
    for (auto& k : keys) {
        std::pair<long, long> flip{k.second, k.first};
        if (mass(pr.density_u, k) != mass(pr.density_u, flip)) pr.W_u_even = false;
        if (k.first > k.second &&
            mass(pr.density_u_neq, k) < mass(pr.density_u_neq, flip))
            pr.W_u_neq_dominates = false;
        if (mass(pr.density_q, k) != BigRat(k.first, k.second) * mass(pr.density_q, flip))
            pr.W_q_detailed_balance = false;
    }
    return pr;
}

TiltedDistribution tilted_distribution(const System& sys, long n_steps, double target_mean) {
    if (n_steps < 1) throw std::invalid_argument("tilted_distribution: n_steps must be >= 1");
    auto an = iterate_map(sys.alpha, n_steps);
    int nb = (int)sys.part.blocks.size();
    TiltedDistribution td;
    td.block_mean.resize(nb, 0);
    for (int b = 0; b < nb; ++b) {
        double s = 0;
        for (int i : sys.part.blocks[b]) {
            long before = sys.block_size(i);
            long after = (long)sys.part.blocks[sys.part.block_of[an[i]]].size();
            s += std::log((double)after) - std::log((double)before);
        }
        td.block_mean[b] = s / sys.part.blocks[b].size();
    }
    double lo = *std::min_element(td.block_mean.begin(), td.block_mean.end());
    double hi = *std::max_element(td.block_mean.begin(), td.block_mean.end());
    if (target_mean < lo - 1e-12 || target_mean > hi + 1e-12)
        throw std::invalid_argument("tilted_distribution: target outside attainable range");
    if (hi - lo < 1e-15) {
        // all blocks identical: every attainable target is the common value
        td.lambda = 0;
    } else {
        if (target_mean >= hi - 1e-13 || target_mean <= lo + 1e-13)
            throw std::runtime_error(
                "tilted_distribution: boundary target needs a diverging multiplier");
        auto mean_at = [&](double lam) {
            double mx = 0;
            for (double m : td.block_mean) mx = std::max(mx, lam * m);
            double z = 0, s = 0;
            for (double m : td.block_mean) {
                double w = std::exp(lam * m - mx);
                z += w;
                s += m * w;
            }
            return s / z;
        };
        double a = -1, b = 1;
        while (mean_at(a) > target_mean) a *= 2;
        while (mean_at(b) < target_mean) b *= 2;
        // bisection down to a tight bracket, then Newton polishing
        for (int it = 0; it < 200 && b - a > 1e-13 * (1 + std::abs(a)); ++it) {
            double mid = 0.5 * (a + b);
            (mean_at(mid) < target_mean ? a : b) = mid;
        }
        double lam = 0.5 * (a + b);
        for (int it = 0; it < 50; ++it) {
            double mx = 0;
            for (double m : td.block_mean) mx = std::max(mx, lam * m);
            double z = 0, s1 = 0, s2 = 0;
            for (double m : td.block_mean) {
                double w = std::exp(lam * m - mx);
                z += w;
                s1 += m * w;
                s2 += m * m * w;
            }
            double mean = s1 / z, var = s2 / z - mean * mean;
            if (var <= 0) break;
            double step = (target_mean - mean) / var;
            lam += step;
            if (std::abs(step) < 1e-14 * (1 + std::abs(lam))) break;
        }
        if (std::abs(mean_at(lam) - target_mean) > 1e-12)
            throw std::runtime_error("tilted_distribution: solver did not converge");
        td.lambda = lam;
    }
    double mx = 0;
    for (double m : td.block_mean) mx = std::max(mx, td.lambda * m);
    double z = 0;
    td.block_prob.resize(nb);
    for (int b = 0; b < nb; ++b) {
        td.block_prob[b] = std::exp(td.lambda * td.block_mean[b] - mx);
        z += td.block_prob[b];
    }
    for (auto& p : td.block_prob) p /= z;
    td.micro_prob.resize(sys.n);
    for (int i = 0; i < sys.n; ++i)
        td.micro_prob[i] = td.block_prob[sys.part.block_of[i]] / sys.block_size(i);
    return td;
}

} // namespace mmds
