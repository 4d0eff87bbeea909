#include "mmds/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mmds {

std::vector<BigInt> bell_numbers(int up_to) {
    if (up_to < 1) throw std::invalid_argument("bell_numbers: need n >= 1");
    // B_{n+1} = sum C(n,k) B_k with B_0 = 1
    std::vector<BigInt> B(up_to + 1);
    B[0] = 1;
    for (int n = 0; n < up_to; ++n) {
        BigInt s = 0;
        for (int k = 0; k <= n; ++k) s += binomial(n, k) * B[k];
        B[n + 1] = s;
    }
    return std::vector<BigInt>(B.begin() + 1, B.end());
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int mx) {
        if (i == n) {
            out.push_back(partition_from_labels(rgs));
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(mx, v));
        }
    };
    rec(0, -1);
    return out;
}

namespace {

struct PartialLedger {
    std::map<long, BigInt> histogram;
    std::map<std::pair<long, long>, BigInt> joint;
    BigInt sum_D = 0, sum_I = 0;
    long max_D = 0;
};

// scan every permutation against one partition's size table
void scan_partition(int n, const std::vector<int>& size_of, PartialLedger& led) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        long d = 0, inc = 0;
        for (int i = 0; i < n; ++i) {
            int s0 = size_of[i], s1 = size_of[perm[i]];
            if (s1 < s0) ++d;
            else if (s1 > s0) ++inc;
        }
        led.histogram[d] += 1;
        led.joint[{d, inc}] += 1;
        led.sum_D += d;
        led.sum_I += inc;
        led.max_D = std::max(led.max_D, d);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

CountLedger scan_all(int n, int threads) {
    if (n < 1 || n > 8) throw std::invalid_argument("scan_all: n must be 1..8");
    auto parts = all_partitions(n);
    CountLedger led;
    led.n = n;
    led.bell = bell_numbers(n);
    led.total_pairs = factorial(n) * led.bell.back();

    threads = std::max(1, threads);
    std::vector<PartialLedger> partial(parts.size());
    std::vector<std::vector<int>> size_tables(parts.size(), std::vector<int>(n));
    for (size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < n; ++i)
            size_tables[p][i] = (int)parts[p].blocks[parts[p].block_of[i]].size();

    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t p = next.fetch_add(1);
            if (p >= parts.size()) break;
            scan_partition(n, size_tables[p], partial[p]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // merge in partition order for a deterministic ledger
    for (auto& pl : partial) {
        for (auto& [d, c] : pl.histogram) led.histogram[d] += c;
        for (auto& [k, c] : pl.joint) led.joint[k] += c;
        led.sum_D += pl.sum_D;
        led.sum_I += pl.sum_I;
        led.max_D = std::max(led.max_D, pl.max_D);
    }
    return led;
}

bool mean_D_equals_mean_I(int n, int threads) {
    auto led = scan_all(n, threads);
    return led.sum_D == led.sum_I;
}

MaxDecreases max_decreases(const Partition& p) {
    auto z = zone_profile(p);
    int o = (int)z.sizes.size();
    // rows ordered by decreasing block size, left justified; every column
    // flows downward and wraps from its last row back to its first
    std::vector<int> order(o);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return z.sizes[a] > z.sizes[b]; });
    long width = 0;
    for (long c : z.zone_card) width = std::max(width, c);

    MaxDecreases md;
    md.witness.assign(p.n, -1);
    for (long col = 0; col < width; ++col) {
        std::vector<int> column;
        for (int row = 0; row < o; ++row) {
            const auto& members = z.zone_members[order[row]];
            if (col < (long)members.size()) column.push_back(members[col]);
        }
        for (size_t k = 0; k < column.size(); ++k)
            md.witness[column[k]] = column[(k + 1) % column.size()];
    }
    long maxcard = 0;
    for (long c : z.zone_card) maxcard = std::max(maxcard, c);
    md.count = p.n - maxcard;

    // the witness must be a permutation achieving exactly the bound
    if (!is_permutation(md.witness))
        throw std::logic_error("max_decreases: witness is not a permutation");
    long d = 0;
    for (int i = 0; i < p.n; ++i)
        if (p.blocks[p.block_of[md.witness[i]]].size() < p.blocks[p.block_of[i]].size()) ++d;
    if (d != md.count) throw std::logic_error("max_decreases: witness misses the bound");
    return md;
}

long d_X(int n) {
    if (n < 1) throw std::invalid_argument("d_X: need n >= 1");
    // minimize over numerical partitions l of n the largest zone mass
    // max_k k * l_k, where l_k is the multiplicity of part k
    long best = n;  // partition into n singletons gives max mass n
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            std::map<int, long> mult;
            for (int v : parts) mult[v]++;
            long mx = 0;
            for (auto& [k, l] : mult) mx = std::max(mx, (long)k * l);
            best = std::min(best, mx);
            return;
        }
        for (int v = std::min(left, maxpart); v >= 1; --v) {
            parts.push_back(v);
            rec(left - v, v);
            parts.pop_back();
        }
    };
    rec(n, n);
    return n - best;
}

BigInt count_always_increasing_by_partition(const Partition& p) {
    auto z = zone_profile(p);
    BigInt c = 1;
    for (long card : z.zone_card) c *= factorial(card);
    return c;
}

BigRat probability_always_increasing(const Partition& p) {
    return BigRat(count_always_increasing_by_partition(p), factorial(p.n));
}

BigInt count_always_increasing_by_permutation(int n, const std::vector<int>& alpha) {
    if (!is_permutation(alpha))
        throw std::invalid_argument("count_always_increasing_by_permutation: needs a permutation");
    System s = build_system(n, {[&] {
                                 std::vector<int> all(n);
                                 std::iota(all.begin(), all.end(), 0);
                                 return all;
                             }()},
                            alpha);
    auto cycles = orbits(s);
    int nc = (int)cycles.size();
    // color each cycle with a block size k; a coloring is feasible when
    // every used k divides the total mass of its cycles
    BigInt total = 0;
    std::vector<int> color(nc, 1);
    std::function<void(int)> rec = [&](int c) {
        if (c == nc) {
            std::map<int, long> mass;  // k -> total colored cardinality
            for (int i = 0; i < nc; ++i) mass[color[i]] += (long)cycles[i].size();
            BigInt term = 1;
            for (auto& [k, m] : mass) {
                if (m % k != 0) return;
                // uniform partitions with blocks of size k on m elements
                BigInt t = factorial(m);
                BigInt kf = factorial(k);
                for (long j = 0; j < m / k; ++j) t /= kf;
                t /= factorial(m / k);
                term *= t;
            }
            total += term;
            return;
        }
        for (int k = 1; k <= n; ++k) {
            color[c] = k;
            rec(c + 1);
        }
    };
    rec(0);
    return total;
}

DualityReport duality_identity(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("duality_identity: n must be 1..6");
    DualityReport rep;
    rep.by_partition = 0;
    auto parts = all_partitions(n);
    for (const auto& p : parts) rep.by_partition += count_always_increasing_by_partition(p);

    rep.by_permutation = 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do rep.by_permutation += count_always_increasing_by_permutation(n, perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    // raw scan: count pairs with no strict decrease
    rep.by_raw_scan = 0;
    for (const auto& p : parts) {
        std::vector<int> size_of(n);
        for (int i = 0; i < n; ++i) size_of[i] = (int)p.blocks[p.block_of[i]].size();
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool dec = false;
            for (int i = 0; i < n && !dec; ++i)
                if (size_of[perm[i]] < size_of[i]) dec = true;
            if (!dec) rep.by_raw_scan += 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    rep.agree = rep.by_partition == rep.by_permutation && rep.by_partition == rep.by_raw_scan;
    return rep;
}

ZoneGrowthReport zone_growth_limit(GrowthPattern pattern, long a, long r, int n_max) {
    if (n_max < 2) throw std::invalid_argument("zone_growth_limit: need n_max >= 2");
    if (a < 1) throw std::invalid_argument("zone_growth_limit: need a >= 1");
    if (pattern != GrowthPattern::SuperExponential && r <= 1)
        throw std::invalid_argument("zone_growth_limit: need r > 1");
    auto mass = [&](long s) {
        BigInt m = a;
        switch (pattern) {
        case GrowthPattern::Polynomial:
            for (long t = 0; t < r; ++t) m *= s;
            break;
        case GrowthPattern::Exponential:
            for (long t = 0; t < s; ++t) m *= r;
            break;
        case GrowthPattern::SuperExponential:
            for (long t = 0; t < s; ++t) m *= s;
            break;
        }
        return m;
    };
    ZoneGrowthReport rep;
    rep.pattern = pattern;
    BigInt below = 0, total = 0;
    for (long s = 1; s <= n_max; ++s) {
        below = total;
        total += mass(s);
        if (s >= 2) rep.ratio.push_back(BigRat(below, total));
    }
    switch (pattern) {
    case GrowthPattern::Polynomial: rep.limit = BigRat(1); break;
    case GrowthPattern::Exponential: rep.limit = BigRat(1, r); break;
    case GrowthPattern::SuperExponential: rep.limit = BigRat(0); break;
    }
    return rep;
}

std::vector<BigRat> power_set_decrease_ratios(int n_max) {
    std::vector<BigRat> out;
    for (int n = 1; n <= n_max; ++n) {
        BigInt total = BigInt(1) << (2 * n + 1);
        out.push_back(BigRat(total - 2 * binomial(2 * n + 1, n), total));
    }
    return out;
}

} // namespace mmds
