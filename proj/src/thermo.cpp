#include "mmds/thermo.hpp"

#include "mmds/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace mmds {

long jump_cost(int i, int j) { return std::abs(i - j) + (i == j ? 1 : 0) - 1; }

double shannon_entropy(const std::vector<double>& p) {
    double h = 0;
    for (double v : p)
        if (v > 0) h -= v * std::log(v);
    return h;
}

double matrix_entropy(const std::vector<std::vector<double>>& lambda) {
    double h = 0;
    for (const auto& row : lambda)
        for (double v : row)
            if (v > 0) h -= v * std::log(v);
    return h;
}

namespace {

void check_simplex(const std::vector<double>& p) {
    if (p.empty()) throw std::invalid_argument("empty proportion vector");
    double s = 0;
    for (double v : p) {
        if (!(v > 0)) throw std::invalid_argument("zone proportions must be positive");
        s += v;
    }
    if (std::abs(s - 1) > 1e-9)
        throw std::invalid_argument("zone proportions must sum to one");
}

// solve A x = rhs in place, partial pivoting; false when singular
bool gauss_solve(std::vector<std::vector<double>> A, std::vector<double> rhs,
                 std::vector<double>& x) {
    int n = (int)A.size();
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (std::abs(A[piv][col]) < 1e-13) return false;
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < n; ++r) {
            double f = A[r][col] / A[col][col];
            if (f == 0) continue;
            for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    x.assign(n, 0);
    for (int r = n - 1; r >= 0; --r) {
        double v = rhs[r];
        for (int c = r + 1; c < n; ++c) v -= A[r][c] * x[c];
        x[r] = v / A[r][r];
    }
    return true;
}

double inf_norm(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// maximize obj . x subject to A x = rhs, x >= 0 (two-phase simplex,
// Bland's rule); rhs must be nonnegative
double simplex_max(std::vector<std::vector<double>> A, std::vector<double> rhs,
                   std::vector<double> obj) {
    int m = (int)A.size();
    int n = (int)obj.size();
    // tableau with artificial variables n..n+m-1
    int cols = n + m;
    std::vector<std::vector<double>> T(m, std::vector<double>(cols + 1, 0));
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) T[r][c] = A[r][c];
        T[r][n + r] = 1;
        T[r][cols] = rhs[r];
        basis[r] = n + r;
    }
    auto pivot = [&](int pr, int pc) {
        double pv = T[pr][pc];
        for (int c = 0; c <= cols; ++c) T[pr][c] /= pv;
        for (int r = 0; r < m; ++r) {
            if (r == pr) continue;
            double f = T[r][pc];
            if (f == 0) continue;
            for (int c = 0; c <= cols; ++c) T[r][c] -= f * T[pr][c];
        }
        basis[pr] = pc;
    };
    auto run = [&](const std::vector<double>& cost, int usable) {
        for (int iter = 0; iter < 10000; ++iter) {
            // reduced costs under current basis
            std::vector<double> y(m);
            for (int r = 0; r < m; ++r) y[r] = cost[basis[r]];
            int enter = -1;
            for (int c = 0; c < usable; ++c) {
                double red = cost[c];
                for (int r = 0; r < m; ++r) red -= y[r] * T[r][c];
                if (red > 1e-10) {
                    enter = c;  // Bland: first improving column
                    break;
                }
            }
            if (enter < 0) return;
            int leave = -1;
            double best = 0;
            for (int r = 0; r < m; ++r) {
                if (T[r][enter] > 1e-12) {
                    double ratio = T[r][cols] / T[r][enter];
                    if (leave < 0 || ratio < best - 1e-15 ||
                        (std::abs(ratio - best) <= 1e-15 && basis[r] < basis[leave])) {
                        leave = r;
                        best = ratio;
                    }
                }
            }
            if (leave < 0) throw std::runtime_error("unbounded linear program");
            pivot(leave, enter);
        }
        throw std::runtime_error("simplex iteration limit");
    };
    // phase 1: drive artificials out
    std::vector<double> phase1(cols, 0);
    for (int c = n; c < cols; ++c) phase1[c] = -1;
    run(phase1, cols);
    double infeas = 0;
    for (int r = 0; r < m; ++r)
        if (basis[r] >= n) infeas += T[r][cols];
    if (infeas > 1e-9) throw std::runtime_error("infeasible linear program");
    // phase 2
    std::vector<double> phase2(cols, 0);
    for (int c = 0; c < n; ++c) phase2[c] = obj[c];
    for (int c = n; c < cols; ++c) phase2[c] = -1e9;  // keep artificials out
    run(phase2, n);
    double val = 0;
    for (int r = 0; r < m; ++r)
        if (basis[r] < n) val += obj[basis[r]] * T[r][cols];
    return val;
}

std::vector<std::vector<double>> outer(const std::vector<double>& b, int k, double c) {
    int o = (int)b.size();
    std::vector<std::vector<double>> l(o, std::vector<double>(o, 0));
    for (int i = 0; i < o; ++i)
        for (int j = 0; j < o; ++j) {
            if (k > 0 && std::abs(i - j) > k) continue;
            l[i][j] = b[i] * b[j] * std::pow(c, (double)jump_cost(i, j));
        }
    return l;
}

}  // namespace

Proportions maxent_free(const std::vector<double>& p) {
    check_simplex(p);
    Proportions pr;
    pr.o = (int)p.size();
    pr.p = p;
    pr.model = LimitModel::Free;
    pr.k = pr.o;
    pr.b = p;  // lambda_ij = p_i p_j
    pr.c = 1;
    pr.lambda = outer(p, 0, 1);
    double h = matrix_entropy(pr.lambda);
    if (std::abs(h - 2 * shannon_entropy(p)) > 1e-9)
        throw std::logic_error("free model entropy is not twice the zone entropy");
    return pr;
}

Proportions maxent_bounded_jump(const std::vector<double>& p, int k) {
    check_simplex(p);
    if (k < 1) throw std::invalid_argument("band width must be at least 1");
    int o = (int)p.size();
    auto residual = [&](const std::vector<double>& b, std::vector<double>& F) {
        F.assign(o, 0);
        for (int j = 0; j < o; ++j) {
            double s = 0;
            for (int i = std::max(0, j - k); i <= std::min(o - 1, j + k); ++i) s += b[i];
            F[j] = b[j] * s - p[j];
        }
    };
    for (int attempt = 0; attempt <= 5; ++attempt) {
        std::vector<double> b(o);
        for (int j = 0; j < o; ++j)
            b[j] = std::sqrt(p[j]) * (1 + 0.07 * attempt * ((j % 2) ? 1 : -1));
        std::vector<double> F, Fn, step;
        residual(b, F);
        bool ok = false;
        for (int iter = 0; iter < 400; ++iter) {
            if (inf_norm(F) <= 1e-12) {
                ok = true;
                break;
            }
            std::vector<std::vector<double>> J(o, std::vector<double>(o, 0));
            for (int j = 0; j < o; ++j) {
                double s = 0;
                for (int i = std::max(0, j - k); i <= std::min(o - 1, j + k); ++i) {
                    s += b[i];
                    J[j][i] += b[j];
                }
                J[j][j] += s;
            }
            if (!gauss_solve(J, F, step)) break;
            double t = 1;
            bool moved = false;
            for (int h = 0; h <= 40; ++h) {
                std::vector<double> cand(o);
                bool pos = true;
                for (int j = 0; j < o; ++j) {
                    cand[j] = b[j] - t * step[j];
                    pos = pos && cand[j] > 0;
                }
                if (pos) {
                    residual(cand, Fn);
                    if (inf_norm(Fn) < inf_norm(F) * (1 - t / 4) || inf_norm(Fn) <= 1e-12) {
                        b = cand;
                        F = Fn;
                        moved = true;
                        break;
                    }
                }
                t /= 2;
            }
            if (!moved) break;
        }
        if (ok) {
            Proportions pr;
            pr.o = o;
            pr.p = p;
            pr.model = LimitModel::BoundedJump;
            pr.k = k;
            pr.b = b;
            pr.c = 1;
            pr.lambda = outer(b, k, 1);
            return pr;
        }
    }
    throw std::runtime_error("banded max-entropy solver did not converge");
}

double max_average_jump_vertex_scan(const std::vector<double>& p) {
    check_simplex(p);
    int o = (int)p.size();
    if (o > 6) throw std::invalid_argument("vertex scan limited to o <= 6");
    // upper-triangle variables, row-sum equalities; objective counts each
    // off-diagonal pair twice
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < o; ++i)
        for (int j = i; j < o; ++j) vars.push_back({i, j});
    int m = (int)vars.size();
    std::vector<std::vector<double>> A(o, std::vector<double>(m, 0));
    std::vector<double> obj(m, 0);
    for (int v = 0; v < m; ++v) {
        auto [i, j] = vars[v];
        A[i][v] += 1;
        A[j][v] += 1;
        if (i == j) A[i][v] = 1;  // diagonal appears once in its row sum
        obj[v] = (i == j ? 0.0 : 2.0 * jump_cost(i, j));
    }
    double best = 0;
    std::vector<int> pick(o);
    std::function<void(int, int)> rec = [&](int from, int depth) {
        if (depth == o) {
            std::vector<std::vector<double>> B(o, std::vector<double>(o));
            for (int r = 0; r < o; ++r)
                for (int c = 0; c < o; ++c) B[r][c] = A[r][pick[c]];
            std::vector<double> x;
            if (!gauss_solve(B, p, x)) return;
            for (double v : x)
                if (v < -1e-10) return;
            double val = 0;
            for (int c = 0; c < o; ++c) val += obj[pick[c]] * x[c];
            best = std::max(best, val);
            return;
        }
        for (int v = from; v < m; ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

double max_average_jump(const std::vector<double>& p) {
    check_simplex(p);
    int o = (int)p.size();
    if (o == 1) return 0;
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < o; ++i)
        for (int j = i; j < o; ++j) vars.push_back({i, j});
    int m = (int)vars.size();
    std::vector<std::vector<double>> A(o, std::vector<double>(m, 0));
    std::vector<double> obj(m, 0);
    for (int v = 0; v < m; ++v) {
        auto [i, j] = vars[v];
        if (i == j) {
            A[i][v] = 1;
        } else {
            A[i][v] = 1;
            A[j][v] = 1;
            obj[v] = 2.0 * jump_cost(i, j);
        }
    }
    return simplex_max(A, p, obj);
}

Proportions maxent_fixed_jump(const std::vector<double>& p, double delta) {
    check_simplex(p);
    int o = (int)p.size();
    if (delta < -1e-15) throw std::invalid_argument("average jump must be nonnegative");
    bool degenerate = true;  // all jump costs zero, i.e. o <= 2
    for (int i = 0; i < o && degenerate; ++i)
        for (int j = 0; j < o; ++j)
            if (jump_cost(i, j) != 0) {
                degenerate = false;
                break;
            }
    if (degenerate) {
        if (std::abs(delta) > 1e-12)
            throw std::invalid_argument("nonzero average jump unattainable with o <= 2");
        auto pr = maxent_free(p);
        pr.model = LimitModel::FixedJump;
        pr.delta = 0;
        return pr;
    }
    double cap = max_average_jump(p);
    if (delta > cap + 1e-12)
        throw std::invalid_argument("average jump above the attainable maximum");
    if (cap - delta < 1e-9) throw std::runtime_error("diverging multiplier");
    if (delta <= 1e-12) {
        // zero jump forces the unit band; the discount degenerates to c = 0
        auto band = maxent_bounded_jump(p, 1);
        band.model = LimitModel::FixedJump;
        band.delta = 0;
        band.c = 0;
        band.multiplier = std::numeric_limits<double>::infinity();
        return band;
    }

    // unknowns u_0..u_{o-1} (log b) and v (log c)
    auto lam = [&](const std::vector<double>& u, double v, int i, int j) {
        return std::exp(u[i] + u[j] + jump_cost(i, j) * v);
    };
    auto residual = [&](const std::vector<double>& u, double v, std::vector<double>& F) {
        F.assign(o + 1, 0);
        for (int j = 0; j < o; ++j) {
            double s = 0;
            for (int i = 0; i < o; ++i) s += lam(u, v, i, j);
            F[j] = s - p[j];
        }
        double jm = 0;
        for (int i = 0; i < o; ++i)
            for (int j = 0; j < o; ++j) jm += jump_cost(i, j) * lam(u, v, i, j);
        F[o] = jm - delta;
    };
    for (int attempt = 0; attempt <= 5; ++attempt) {
        std::vector<double> u(o);
        for (int j = 0; j < o; ++j)
            u[j] = 0.5 * std::log(p[j]) + 0.05 * attempt * ((j % 2) ? 1 : -1);
        double v = -0.1 * attempt;
        std::vector<double> F, Fn, step;
        residual(u, v, F);
        bool ok = false;
        for (int iter = 0; iter < 400; ++iter) {
            if (inf_norm(F) <= 1e-12) {
                ok = true;
                break;
            }
            std::vector<std::vector<double>> J(o + 1, std::vector<double>(o + 1, 0));
            for (int j = 0; j < o; ++j) {
                for (int i = 0; i < o; ++i) {
                    double l = lam(u, v, i, j);
                    J[j][i] += l;
                    J[j][o] += jump_cost(i, j) * l;
                }
                double s = 0;
                for (int i = 0; i < o; ++i) s += lam(u, v, i, j);
                J[j][j] += s;
            }
            for (int i = 0; i < o; ++i)
                for (int j = 0; j < o; ++j) {
                    double l = lam(u, v, i, j);
                    long Jc = jump_cost(i, j);
                    J[o][i] += Jc * l;
                    J[o][j] += Jc * l;
                    J[o][o] += (double)Jc * Jc * l;
                }
            if (!gauss_solve(J, F, step)) break;
            double t = 1;
            bool moved = false;
            for (int h = 0; h <= 40; ++h) {
                std::vector<double> cu(o);
                for (int j = 0; j < o; ++j) cu[j] = u[j] - t * step[j];
                double cv = v - t * step[o];
                residual(cu, cv, Fn);
                if (inf_norm(Fn) < inf_norm(F) * (1 - t / 4) || inf_norm(Fn) <= 1e-12) {
                    u = cu;
                    v = cv;
                    F = Fn;
                    moved = true;
                    break;
                }
                t /= 2;
            }
            if (!moved) break;
        }
        if (ok) {
            Proportions pr;
            pr.o = o;
            pr.p = p;
            pr.model = LimitModel::FixedJump;
            pr.delta = delta;
            pr.b.resize(o);
            for (int j = 0; j < o; ++j) pr.b[j] = std::exp(u[j]);
            pr.c = std::exp(v);
            pr.multiplier = -v;
            pr.lambda = outer(pr.b, 0, pr.c);
            return pr;
        }
    }
    throw std::runtime_error("fixed-jump max-entropy solver did not converge");
}

LimitPropertyReport limit_properties(const Proportions& pr, double eps1, double eps2) {
    const double slack = 1e-12;
    int o = pr.o;
    LimitPropertyReport rep;
    const std::vector<double>& ord = pr.model == LimitModel::Free ? pr.p : pr.b;
    rep.ordered = true;
    for (int j = 0; j + 1 < o; ++j) rep.ordered = rep.ordered && ord[j] < ord[j + 1];

    double dec = 0;
    for (int i = 0; i < o; ++i)
        for (int j = i + 1; j < o; ++j) dec += pr.lambda[i][j];
    rep.L1 = {dec <= eps1 + slack, dec, eps1};

    double nonup = 0, noneq = 0;
    for (int j = 0; j + 1 < o; ++j) {
        noneq += pr.p[j];
        for (int i = 0; i <= j; ++i) nonup += pr.lambda[i][j];
    }
    rep.GAT = {nonup <= eps2 * noneq + slack, nonup, eps2 * noneq};

    rep.ZAT_all = true;
    for (int j = 0; j + 1 < o; ++j) {
        double stay = 0;
        for (int i = 0; i <= j; ++i) stay += pr.lambda[i][j];
        LimitVerdict v{stay <= eps2 * pr.p[j] + slack, stay, eps2 * pr.p[j]};
        rep.ZAT_all = rep.ZAT_all && v.holds;
        rep.ZAT.push_back(v);
    }
    rep.L3 = rep.L1.holds && rep.ZAT_all;
    return rep;
}

bool uniform_limit_L1(int o, double eps) { return 1.0 / o >= 1 - 2 * eps - 1e-12; }

SequenceL3Report check_sequence_L3(const std::vector<System>& seq, const BigRat& e1,
                                   const BigRat& e2) {
    SequenceL3Report rep;
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    rep.all_hold = true;
    rep.gamma_trend_down = true;
    BigRat prev_max(-1);
    bool have_prev = false;
    for (const auto& sys : seq) {
        auto zp = zone_profile(sys.part);
        int o = (int)zp.sizes.size();
        if (rep.o == 0) rep.o = o;
        if (o != rep.o) throw std::invalid_argument("zone count mismatch in sequence");

        std::vector<BigRat> g;
        BigInt below = zp.zone_card[0];
        for (int i = 1; i < o; ++i) {
            g.push_back(BigRat(below, zp.zone_card[i]));
            below += zp.zone_card[i];
        }
        auto dic = dic_split(sys);
        std::vector<char> conserved(sys.n, 0);
        for (int i : dic.C) conserved[i] = 1;
        std::vector<BigRat> cr;
        for (int z = 0; z < o; ++z) {
            long keep = 0;
            for (int i : zp.zone_members[z]) keep += conserved[i];
            cr.push_back(BigRat(keep, zp.zone_card[z]));
        }
        bool h = check_L3(sys, e1, e2).holds;
        rep.holds.push_back(h);
        rep.all_hold = rep.all_hold && h;

        BigRat mx(0);
        for (const auto& v : g) mx = std::max(mx, v);
        if (have_prev && mx > prev_max) rep.gamma_trend_down = false;
        prev_max = mx;
        have_prev = true;

        rep.gamma.push_back(std::move(g));
        rep.conserve_ratio.push_back(std::move(cr));
    }
    return rep;
}

}  // namespace mmds
