#include "mmds/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmds {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("rng: zero bound");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % bound;
}

BigInt Rng::big_below(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("rng: nonpositive bound");
    unsigned bits = (unsigned)msb(bound) + 1;
    unsigned words = (bits + 63) / 64;
    while (true) {
        BigInt v = 0;
        for (unsigned w = 0; w < words; ++w) v = (v << 64) | next();
        v >>= words * 64 - bits;
        if (v < bound) return v;
    }
}

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

std::vector<int> random_map(Rng& rng, int n) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[i] = (int)rng.below(n);
    return f;
}

Partition random_partition(Rng& rng, int n) {
    if (n < 1) throw std::invalid_argument("random_partition: n must be positive");
    // T[r][m] = number of ways to extend a restricted growth string with r
    // symbols left and m block labels already in use
    std::vector<std::vector<BigInt>> T(n + 1, std::vector<BigInt>(n + 2, 0));
    for (int m = 0; m <= n + 1; ++m) T[0][m] = 1;
    for (int r = 1; r <= n; ++r)
        for (int m = 0; m <= n; ++m)
            T[r][m] = m * T[r - 1][m] + T[r - 1][m + 1];
    std::vector<int> labels(n);
    int m = 0;
    for (int i = 0; i < n; ++i) {
        int r = n - i;
        BigInt pick = rng.big_below(T[r][m]);
        if (pick < m * T[r - 1][m]) {
            labels[i] = (int)(pick / T[r - 1][m]).convert_to<long>();
        } else {
            labels[i] = m;
            ++m;
        }
    }
    return partition_from_labels(labels);
}

System random_system(Rng& rng, int n, bool invertible_only) {
    auto part = random_partition(rng, n);
    auto alpha = invertible_only ? random_permutation(rng, n) : random_map(rng, n);
    return build_system(n, part.blocks, alpha);
}

std::vector<int> random_involution(Rng& rng, int n) {
    // I(k) = I(k-1) + (k-1) I(k-2)
    std::vector<BigInt> I(n + 1);
    I[0] = 1;
    if (n >= 1) I[1] = 1;
    for (int k = 2; k <= n; ++k) I[k] = I[k - 1] + (k - 1) * I[k - 2];
    std::vector<int> r(n, -1);
    std::vector<int> free_elems(n);
    for (int i = 0; i < n; ++i) free_elems[i] = i;
    while (!free_elems.empty()) {
        int k = (int)free_elems.size();
        int x = free_elems.back();
        BigInt pick = rng.big_below(I[k]);
        if (pick < I[k - 1]) {
            r[x] = x;
            free_elems.pop_back();
        } else {
            int idx = (int)((pick - I[k - 1]) / I[k - 2]).convert_to<long>();
            int y = free_elems[idx];
            r[x] = y;
            r[y] = x;
            free_elems.pop_back();
            free_elems.erase(free_elems.begin() + idx);
        }
    }
    return r;
}

System random_reversible_system(Rng& rng, int n) {
    auto part = random_partition(rng, n);
    auto r = random_involution(rng, n);
    auto w = random_involution(rng, n);
    auto alpha = compose(w, r);
    return build_system(n, part.blocks, alpha, r);
}

} // namespace mmds
