#include "mmds/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace mmds {

namespace {

int checked_int(const BigInt& v, const char* what) {
    if (v > 1000000000 || v < -1000000000)
        throw std::invalid_argument(std::string(what) + ": value out of range");
    return v.convert_to<int>();
}

// q * sum(vars) <= / >= p * base, with eps = p/q
LinearConstraint eps_constraint(int nv, const std::vector<int>& vars, const BigRat& eps,
                                long base) {
    LinearConstraint c;
    c.coeff.assign(nv, 0);
    int q = checked_int(denominator(eps), "eps denominator");
    for (int v : vars) c.coeff[v] += q;
    c.rhs = checked_int(numerator(eps) * base, "eps rhs");
    return c;
}

// q * sum(vars) >= (q - p) * base, i.e. sum >= (1 - eps) * base
LinearConstraint one_minus_eps_ge(int nv, const std::vector<int>& vars, const BigRat& eps,
                                  long base) {
    LinearConstraint c;
    c.coeff.assign(nv, 0);
    int q = checked_int(denominator(eps), "eps denominator");
    int p = checked_int(numerator(eps), "eps numerator");
    for (int v : vars) c.coeff[v] += q;
    c.rhs = (long)(q - p) * base;
    return c;
}

LinearConstraint sum_eq(int nv, const std::vector<int>& vars, long rhs) {
    LinearConstraint c;
    c.coeff.assign(nv, 0);
    for (int v : vars) c.coeff[v] += 1;
    c.rhs = rhs;
    return c;
}

// square-matrix variable layout: x[i][j] = moves from zone j to zone i
struct MatrixVars {
    int o;
    int at(int i, int j) const { return i * o + j; }
};

void add_flow_equalities(PolytopeSpec& spec, const std::vector<long>& s) {
    int o = (int)s.size();
    MatrixVars m{o};
    for (int i = 0; i < o; ++i) {
        std::vector<int> col, row;
        for (int j = 0; j < o; ++j) {
            col.push_back(m.at(j, i));
            row.push_back(m.at(i, j));
        }
        spec.eq.push_back(sum_eq(spec.num_vars, col, s[i]));
        spec.eq.push_back(sum_eq(spec.num_vars, row, s[i]));
    }
}

void add_column_groups(PolytopeSpec& spec, const std::vector<long>& s) {
    int o = (int)s.size();
    MatrixVars m{o};
    for (int i = 0; i < o; ++i) {
        WeightGroup g;
        g.size = s[i];
        for (int j = 0; j < o; ++j) g.vars.push_back(m.at(j, i));
        spec.groups.push_back(g);
    }
}

void matrix_names(PolytopeSpec& spec, int o) {
    for (int i = 0; i < o; ++i)
        for (int j = 0; j < o; ++j)
            spec.var_names.push_back("x[" + std::to_string(i) + "][" + std::to_string(j) + "]");
}

std::vector<int> below_diagonal(int o) {
    MatrixVars m{o};
    std::vector<int> v;
    for (int i = 0; i < o; ++i)
        for (int j = i + 1; j < o; ++j) v.push_back(m.at(i, j));  // to smaller zone
    return v;
}

std::vector<int> above_diagonal(int o) {
    MatrixVars m{o};
    std::vector<int> v;
    for (int i = 0; i < o; ++i)
        for (int j = 0; j < i; ++j) v.push_back(m.at(i, j));  // to bigger zone
    return v;
}

// chain variables y_i = traffic between zones i and i+1, used by the
// zero-jump families; column of zone i is (y_{i-1}, y_i, remainder)
void add_chain_groups(PolytopeSpec& spec, const std::vector<long>& s) {
    int o = (int)s.size();
    for (int i = 0; i < o; ++i) {
        WeightGroup g;
        g.size = s[i];
        if (i >= 1) g.vars.push_back(i - 1);
        if (i <= o - 2) g.vars.push_back(i);
        g.implicit_remainder = true;
        spec.groups.push_back(g);
    }
}

void add_chain_boxes(PolytopeSpec& spec, const std::vector<long>& s) {
    int o = (int)s.size();
    spec.le.push_back(sum_eq(spec.num_vars, {0}, s[0]));
    spec.le.push_back(sum_eq(spec.num_vars, {o - 2}, s[o - 1]));
    for (int i = 1; i <= o - 2; ++i)
        spec.le.push_back(sum_eq(spec.num_vars, {i - 1, i}, s[i]));
}

void require_census_size(int n, const char* family) {
    if (n > 8)
        throw std::invalid_argument(std::string(family) +
                                    ": census normalizer only available for n <= 8");
}

bool is_zero_jump_perm(const std::vector<int>& perm, const std::vector<int>& zone_of) {
    for (size_t i = 0; i < perm.size(); ++i)
        if (std::abs(zone_of[perm[i]] - zone_of[i]) > 1) return false;
    return true;
}

bool is_symmetric_perm(const std::vector<int>& perm, const std::vector<int>& zone_of, int o) {
    std::vector<long> a((size_t)o * o, 0);
    for (size_t i = 0; i < perm.size(); ++i) a[(size_t)zone_of[perm[i]] * o + zone_of[i]]++;
    for (int i = 0; i < o; ++i)
        for (int j = i + 1; j < o; ++j)
            if (a[(size_t)i * o + j] != a[(size_t)j * o + i]) return false;
    return true;
}

}  // namespace

std::vector<std::vector<int>> numerical_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(parts);
            return;
        }
        for (int v = std::min(left, maxpart); v >= 1; --v) {
            parts.push_back(v);
            rec(left - v, v);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition partition_with_sizes(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<std::vector<int>> blocks;
    int next = 0;
    for (int sz : parts) {
        std::vector<int> b(sz);
        std::iota(b.begin(), b.end(), next);
        next += sz;
        blocks.push_back(b);
    }
    return make_partition(n, blocks);
}

PolytopeSpec build_polytope(const Partition& part, Family family, const FamilyArgs& args) {
    auto zp = zone_profile(part);
    const std::vector<long>& s = zp.zone_card;
    int o = (int)s.size();
    long n = part.n;
    long eqn = s[o - 1];  // members of maximal blocks
    long neq = n - eqn;

    PolytopeSpec spec;
    switch (family) {
        case Family::Lambda:
        case Family::LambdaDE: {
            spec.num_vars = o * o;
            matrix_names(spec, o);
            add_flow_equalities(spec, s);
            spec.eq.push_back(sum_eq(spec.num_vars, below_diagonal(o), args.d));
            if (family == Family::LambdaDE)
                spec.eq.push_back(sum_eq(spec.num_vars, above_diagonal(o), args.e));
            add_column_groups(spec, s);
            spec.normalizer = factorial(n);
            break;
        }
        case Family::Psi:
        case Family::Theta: {
            spec.num_vars = o * o;
            matrix_names(spec, o);
            add_flow_equalities(spec, s);
            spec.le.push_back(eps_constraint(spec.num_vars, below_diagonal(o), args.eps1, n));
            if (family == Family::Psi) {
                spec.ge.push_back(
                    one_minus_eps_ge(spec.num_vars, above_diagonal(o), args.eps2, neq));
            } else {
                MatrixVars m{o};
                for (int j = 0; j + 1 < o; ++j) {
                    std::vector<int> up;
                    for (int i = j + 1; i < o; ++i) up.push_back(m.at(i, j));
                    spec.ge.push_back(one_minus_eps_ge(spec.num_vars, up, args.eps2, s[j]));
                }
            }
            add_column_groups(spec, s);
            spec.normalizer = factorial(n);
            break;
        }
        case Family::Upsilon:
        case Family::Omega: {
            if (o == 1) {
                // one zone: the empty chain; only d = 0 is feasible
                if (family == Family::Upsilon) {
                    LinearConstraint c;
                    c.rhs = args.d;
                    spec.eq.push_back(c);
                }
                WeightGroup g;
                g.size = s[0];
                g.implicit_remainder = true;
                spec.groups.push_back(g);
                require_census_size(part.n, "Upsilon/Omega");
                spec.normalizer = census_zero_jump(part);
                break;
            }
            spec.num_vars = o - 1;
            for (int i = 0; i + 1 < o; ++i)
                spec.var_names.push_back("y[" + std::to_string(i) + "]");
            std::vector<int> all(o - 1);
            std::iota(all.begin(), all.end(), 0);
            if (family == Family::Upsilon)
                spec.eq.push_back(sum_eq(spec.num_vars, all, args.d));
            else
                spec.le.push_back(eps_constraint(spec.num_vars, all, args.eps1, n));
            add_chain_boxes(spec, s);
            if (family == Family::Omega)
                for (int i = 0; i + 1 < o; ++i)
                    spec.ge.push_back(one_minus_eps_ge(spec.num_vars, {i}, args.eps2, s[i]));
            add_chain_groups(spec, s);
            require_census_size(part.n, "Upsilon/Omega");
            spec.normalizer = census_zero_jump(part);
            break;
        }
        case Family::Sigma: {
            // upper-triangle variables x_{ij}, i <= j
            std::vector<std::vector<int>> id(o, std::vector<int>(o, -1));
            for (int i = 0; i < o; ++i)
                for (int j = i; j < o; ++j) {
                    id[i][j] = id[j][i] = spec.num_vars++;
                    spec.var_names.push_back("x[" + std::to_string(i) + "][" +
                                             std::to_string(j) + "]");
                }
            for (int i = 0; i < o; ++i) {
                std::vector<int> touching;
                for (int j = 0; j < o; ++j) touching.push_back(id[i][j]);
                spec.eq.push_back(sum_eq(spec.num_vars, touching, s[i]));
            }
            std::vector<int> strict_upper;
            for (int i = 0; i < o; ++i)
                for (int j = i + 1; j < o; ++j) strict_upper.push_back(id[i][j]);
            spec.le.push_back(eps_constraint(spec.num_vars, strict_upper, args.eps1, n));
            for (int i = 0; i + 1 < o; ++i) {
                std::vector<int> up;
                for (int j = i + 1; j < o; ++j) up.push_back(id[i][j]);
                spec.ge.push_back(one_minus_eps_ge(spec.num_vars, up, args.eps2, s[i]));
            }
            for (int i = 0; i < o; ++i) {
                WeightGroup g;
                g.size = s[i];
                for (int j = 0; j < o; ++j) g.vars.push_back(id[j][i]);
                spec.groups.push_back(g);
            }
            require_census_size(part.n, "Sigma");
            spec.normalizer = census_symmetric(part);
            break;
        }
        case Family::Phi:
        case Family::ThetaPair: {
            spec.num_vars = o * o;
            matrix_names(spec, o);
            MatrixVars m{o};
            for (int i = 0; i < o; ++i) {
                std::vector<int> both;
                for (int j = 0; j < o; ++j) {
                    both.push_back(m.at(i, j));
                    both.push_back(m.at(j, i));  // diagonal picks up coefficient 2
                }
                spec.eq.push_back(sum_eq(spec.num_vars, both, 2 * s[i]));
            }
            if (family == Family::Phi) {
                std::vector<int> diag;
                for (int i = 0; i < o; ++i) diag.push_back(m.at(i, i));
                // (1-2e1)|X| <= sum x_ii <= 2(1-e2)|X^eq| - (1-2e2)|X|
                spec.ge.push_back(one_minus_eps_ge(spec.num_vars, diag, 2 * args.eps1, n));
                LinearConstraint ub;
                ub.coeff.assign(spec.num_vars, 0);
                int q = checked_int(denominator(args.eps2), "eps denominator");
                int p = checked_int(numerator(args.eps2), "eps numerator");
                for (int v : diag) ub.coeff[v] += q;
                ub.rhs = 2L * (q - p) * eqn - (long)(q - 2 * p) * n;
                spec.le.push_back(ub);
            } else {
                std::vector<int> top;
                for (int j = 0; j + 1 < o; ++j) {
                    top.push_back(m.at(j, o - 1));
                    top.push_back(m.at(o - 1, j));
                }
                spec.ge.push_back(one_minus_eps_ge(spec.num_vars, top, args.eps2, 2 * neq));
            }
            add_column_groups(spec, s);
            spec.normalizer = factorial(n);
            break;
        }
        case Family::Gamma: {
            int nb = (int)part.blocks.size();
            spec.num_vars = nb * nb;
            auto at = [&](int a, int b) { return a * nb + b; };  // from block b to a
            for (int a = 0; a < nb; ++a)
                for (int b = 0; b < nb; ++b)
                    spec.var_names.push_back("x[" + std::to_string(a) + "][" +
                                             std::to_string(b) + "]");
            for (int b = 0; b < nb; ++b) {
                std::vector<int> col, row;
                for (int a = 0; a < nb; ++a) {
                    col.push_back(at(a, b));
                    row.push_back(at(b, a));
                }
                spec.eq.push_back(sum_eq(spec.num_vars, col, (long)part.blocks[b].size()));
                spec.eq.push_back(sum_eq(spec.num_vars, row, (long)part.blocks[b].size()));
            }
            // induced block graph
            std::set<std::pair<int, int>> macro;
            for (auto [i, j] : args.edges) {
                int a = part.block_of.at(i), b = part.block_of.at(j);
                if (a != b) macro.insert({std::min(a, b), std::max(a, b)});
            }
            auto adjacent = [&](int a, int b) {
                return macro.count({std::min(a, b), std::max(a, b)}) > 0;
            };
            size_t maxsz = 0;
            for (auto& blk : part.blocks) maxsz = std::max(maxsz, blk.size());
            std::vector<int> down;
            for (int a = 0; a < nb; ++a)
                for (int b = 0; b < nb; ++b)
                    if (part.blocks[a].size() < part.blocks[b].size() && adjacent(a, b))
                        down.push_back(at(a, b));
            spec.le.push_back(eps_constraint(spec.num_vars, down, args.eps1, n));
            for (int b = 0; b < nb; ++b) {
                if (part.blocks[b].size() == maxsz) continue;
                std::vector<int> up;
                for (int a = 0; a < nb; ++a)
                    if (part.blocks[a].size() > part.blocks[b].size() && adjacent(a, b))
                        up.push_back(at(a, b));
                spec.ge.push_back(one_minus_eps_ge(spec.num_vars, up, args.eps2,
                                                   (long)part.blocks[b].size()));
            }
            for (int b = 0; b < nb; ++b) {
                WeightGroup g;
                g.size = (long)part.blocks[b].size();
                for (int a = 0; a < nb; ++a) g.vars.push_back(at(a, b));
                spec.groups.push_back(g);
            }
            require_census_size(part.n, "Gamma");
            spec.normalizer = census_lipschitz(part.n, args.edges);
            break;
        }
    }
    return spec;
}

namespace {

struct Enumerator {
    const PolytopeSpec& spec;
    std::vector<long> x;
    std::vector<long> eq_bud, le_bud, ge_need;
    BigInt points = 0;
    BigInt total = 0;

    explicit Enumerator(const PolytopeSpec& s) : spec(s), x(s.num_vars, 0) {
        for (auto& c : spec.eq) eq_bud.push_back(c.rhs);
        for (auto& c : spec.le) le_bud.push_back(c.rhs);
        for (auto& c : spec.ge) ge_need.push_back(c.rhs);
        for (int v = 0; v < spec.num_vars; ++v) {
            bool bounded = false;
            for (auto& c : spec.eq) bounded = bounded || c.coeff[v] > 0;
            for (auto& c : spec.le)
                bounded = bounded || (c.coeff[v] > 0 && c.rhs >= 0);
            if (!bounded) throw std::logic_error("unbounded polytope variable");
        }
    }

    long upper_bound(int v) const {
        long ub = -1;
        for (size_t k = 0; k < spec.eq.size(); ++k) {
            int c = spec.eq[k].coeff[v];
            if (c > 0) {
                long b = eq_bud[k] < 0 ? -1 : eq_bud[k] / c;
                ub = ub < 0 ? b : std::min(ub, b);
            }
        }
        for (size_t k = 0; k < spec.le.size(); ++k) {
            int c = spec.le[k].coeff[v];
            if (c > 0) {
                long b = le_bud[k] < 0 ? -1 : le_bud[k] / c;
                ub = ub < 0 ? b : std::min(ub, b);
            }
        }
        return ub;
    }

    bool ge_attainable(int from) const {
        for (size_t k = 0; k < spec.ge.size(); ++k) {
            if (ge_need[k] <= 0) continue;
            long max_add = 0;
            for (int v = from; v < spec.num_vars; ++v) {
                int c = spec.ge[k].coeff[v];
                if (c > 0) {
                    long ub = upper_bound(v);
                    if (ub < 0) return false;
                    max_add += (long)c * ub;
                    if (max_add >= ge_need[k]) break;
                }
            }
            if (max_add < ge_need[k]) return false;
        }
        return true;
    }

    void apply(int v, long val, int sign) {
        for (size_t k = 0; k < spec.eq.size(); ++k) eq_bud[k] -= sign * spec.eq[k].coeff[v] * val;
        for (size_t k = 0; k < spec.le.size(); ++k) le_bud[k] -= sign * spec.le[k].coeff[v] * val;
        for (size_t k = 0; k < spec.ge.size(); ++k)
            ge_need[k] -= sign * spec.ge[k].coeff[v] * val;
    }

    BigInt point_weight() const {
        BigInt w = 1;
        std::vector<long> parts;
        for (auto& g : spec.groups) {
            parts.clear();
            long sum = 0;
            for (int v : g.vars) {
                parts.push_back(x[v]);
                sum += x[v];
            }
            if (g.implicit_remainder) {
                if (g.size - sum < 0) return 0;
                parts.push_back(g.size - sum);
            }
            w *= factorial(g.size) * multinomial(g.size, parts);
            if (w == 0) return 0;
        }
        return w;
    }

    void dfs(int v) {
        if (v == spec.num_vars) {
            for (long b : eq_bud)
                if (b != 0) return;
            for (long g : ge_need)
                if (g > 0) return;
            BigInt w = point_weight();
            if (w != 0) {
                points += 1;
                total += w;
            }
            return;
        }
        long ub = upper_bound(v);
        if (ub < 0) return;
        for (long val = 0; val <= ub; ++val) {
            x[v] = val;
            apply(v, val, +1);
            if (ge_attainable(v + 1)) dfs(v + 1);
            apply(v, val, -1);
        }
        x[v] = 0;
    }
};

}  // namespace

WeightedSum enumerate_and_sum(const PolytopeSpec& spec, int threads) {
    WeightedSum out;
    if (spec.num_vars == 0) {
        // a zero-dimensional polytope is the single empty point when all
        // constraints hold vacuously
        bool ok = true;
        for (auto& c : spec.eq) ok = ok && c.rhs == 0;
        for (auto& c : spec.le) ok = ok && c.rhs >= 0;
        for (auto& c : spec.ge) ok = ok && c.rhs <= 0;
        if (ok) {
            out.lattice_points = 1;
            Enumerator e(spec);
            out.weighted_sum = e.point_weight();
        }
        if (spec.normalizer > 0) out.probability = BigRat(out.weighted_sum, spec.normalizer);
        return out;
    }

    Enumerator root(spec);
    long ub0 = root.upper_bound(0);
    if (threads <= 1 || ub0 < 1) {
        root.dfs(0);
        out.lattice_points = root.points;
        out.weighted_sum = root.total;
    } else {
        std::vector<Enumerator> branch;
        branch.reserve(ub0 + 1);
        for (long val = 0; val <= ub0; ++val) branch.emplace_back(spec);
        auto run = [&](long val) {
            Enumerator& e = branch[val];
            e.x[0] = val;
            e.apply(0, val, +1);
            if (e.ge_attainable(1)) e.dfs(1);
        };
        std::vector<std::thread> pool;
        std::atomic<long> next{0};
        int nw = std::min<long>(threads, ub0 + 1);
        for (int t = 0; t < nw; ++t)
            pool.emplace_back([&] {
                for (long v; (v = next.fetch_add(1)) <= ub0;) run(v);
            });
        for (auto& t : pool) t.join();
        for (auto& e : branch) {
            out.lattice_points += e.points;
            out.weighted_sum += e.total;
        }
    }
    if (spec.normalizer > 0) out.probability = BigRat(out.weighted_sum, spec.normalizer);
    return out;
}

namespace {

BigInt census(int n, const std::function<bool(const std::vector<int>&)>& keep) {
    if (n > 8) throw std::invalid_argument("census: n <= 8 only");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt c = 0;
    do {
        if (keep(perm)) c += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

}  // namespace

BigInt census_zero_jump(const Partition& part) {
    auto zp = zone_profile(part);
    return census(part.n,
                  [&](const std::vector<int>& p) { return is_zero_jump_perm(p, zp.zone_of); });
}

BigInt census_symmetric(const Partition& part) {
    auto zp = zone_profile(part);
    int o = (int)zp.sizes.size();
    return census(part.n,
                  [&](const std::vector<int>& p) { return is_symmetric_perm(p, zp.zone_of, o); });
}

BigInt census_lipschitz(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [i, j] : edges) adj[i][j] = adj[j][i] = 1;
    return census(n, [&](const std::vector<int>& p) {
        for (auto [i, j] : edges)
            if (p[i] != p[j] && !adj[p[i]][p[j]]) return false;
        return true;
    });
}

WeightedSum probability_of_property(const Partition& part, RandomSystemProperty prop,
                                    const FamilyArgs& args, int threads) {
    Family fam;
    switch (prop) {
        case RandomSystemProperty::DecreaseCount: fam = Family::Lambda; break;
        case RandomSystemProperty::DecreaseIncrease: fam = Family::LambdaDE; break;
        case RandomSystemProperty::L2: fam = Family::Psi; break;
        case RandomSystemProperty::L3: fam = Family::Theta; break;
        case RandomSystemProperty::L3ZeroJump: fam = Family::Omega; break;
        case RandomSystemProperty::L3Symmetric: fam = Family::Sigma; break;
        case RandomSystemProperty::IRL2: fam = Family::Phi; break;
        case RandomSystemProperty::L4Graph: fam = Family::Gamma; break;
        default: throw std::invalid_argument("unknown property");
    }
    return enumerate_and_sum(build_polytope(part, fam, args), threads);
}

std::pair<WeightedSum, WeightedSum> reversible_L2_bounds(const Partition& part,
                                                         const BigRat& eps1,
                                                         const BigRat& eps2, int threads) {
    auto zp = zone_profile(part);
    long eqn = zp.zone_card.back();
    if (BigRat(part.n - eqn, part.n) > eps1)
        throw std::invalid_argument("reversible_L2_bounds: requires |X^eq| >= (1-eps1)|X|");
    FamilyArgs lo{0, 0, eps1, eps2, {}};
    FamilyArgs hi{0, 0, eps1, eps2 * 2, {}};
    return {enumerate_and_sum(build_polytope(part, Family::ThetaPair, lo), threads),
            enumerate_and_sum(build_polytope(part, Family::ThetaPair, hi), threads)};
}

BigRat two_zone_decrease_probability(long s1, long s2, long d) {
    if (!(0 < s1 && s1 < s2)) throw std::invalid_argument("need 0 < s1 < s2");
    return BigRat(binomial(s1, d) * binomial(s2, d), binomial(s1 + s2, s1));
}

TwoZoneMostLikely two_zone_mostlikely(long s1, long s2) {
    if (!(0 < s1 && s1 < s2)) throw std::invalid_argument("need 0 < s1 < s2");
    TwoZoneMostLikely r;
    r.formula_d = (s1 * s2) / (s1 + s2 + 2);
    BigInt best = 0;
    r.exact_d = 0;
    for (long d = 0; d <= s1; ++d) {
        BigInt w = binomial(s1, d) * binomial(s2, d);
        if (w > best) {  // smaller d wins ties
            best = w;
            r.exact_d = d;
        }
    }
    r.agrees = r.formula_d == r.exact_d;
    return r;
}

BigRat two_zone_reversible_L2(long s1, long s2, const BigRat& eps1, const BigRat& eps2) {
    if (!(0 < s1 && s1 < s2)) throw std::invalid_argument("need 0 < s1 < s2");
    long n = s1 + s2;
    // d ranges over (1-eps2) s1 <= d <= min(s1, s2, eps1 n)
    BigInt sum = 0;
    for (long d = 0; d <= s1; ++d) {
        if (BigRat(d) < (BigRat(1) - eps2) * s1) continue;
        if (BigRat(d) > eps1 * n) continue;
        sum += binomial(s1, d) * binomial(s2, d);
    }
    return BigRat(sum, binomial(n, s1));
}

}  // namespace mmds
