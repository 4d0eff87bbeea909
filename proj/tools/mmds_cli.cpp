// mmds: one binary exposing the library over the System JSON format.
//
// Exit codes: 0 success or property holds, 1 property fails, 2 usage error,
// 3 bad input, 4 solver failure.

#include "mmds/enumerate.hpp"
#include "mmds/json_io.hpp"
#include "mmds/polytope.hpp"
#include "mmds/properties.hpp"
#include "mmds/reversible.hpp"
#include "mmds/rng.hpp"
#include "mmds/system.hpp"
#include "mmds/thermo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace mmds;
using nlohmann::json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p/q", plain integer, or decimal ("0.25" -> 1/4)
BigRat parse_rat(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) bad();
            return BigRat(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return BigRat(BigInt(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-") bad();
        BigInt den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return BigRat(BigInt(digits), den);
    } catch (const std::exception&) {
        bad();
    }
    return BigRat(0);  // unreachable
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string slurp(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

System load_system(const std::string& path) {
    std::string text;
    if (path == "-") {
        text = slurp(std::cin);
    } else {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open " + path);
        text = slurp(f);
    }
    return system_from_json(json::parse(text));
}

void emit(const std::string& out, const std::string& text) {
    if (out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json verdict_json(const PropertyVerdict& v) {
    json j;
    j["holds"] = v.holds;
    j["lhs"] = rat_to_string(v.lhs);
    j["bound"] = rat_to_string(v.bound);
    j["vacuous"] = v.vacuous;
    if (!v.witnesses.empty()) j["witnesses"] = v.witnesses;
    if (!v.note.empty()) j["note"] = v.note;
    if (!v.parts.empty()) {
        j["parts"] = json::array();
        for (const auto& p : v.parts) j["parts"].push_back(verdict_json(p));
    }
    return j;
}

// "1x2,3x1" -> block sizes {1,1,3}
std::vector<long> parse_zone_spec(const std::string& spec) {
    std::vector<long> sizes;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto x = item.find('x');
        if (x == std::string::npos) throw usage_error("zone spec wants SIZExCOUNT: " + item);
        long size = std::stol(item.substr(0, x));
        long count = std::stol(item.substr(x + 1));
        if (size < 1 || count < 1) throw usage_error("zone spec entries must be positive");
        for (long c = 0; c < count; ++c) sizes.push_back(size);
    }
    if (sizes.empty()) throw usage_error("empty zone spec");
    return sizes;
}

// "0-1,1-2" -> {{0,1},{1,2}}
std::vector<std::pair<int, int>> parse_edges(const std::string& spec) {
    std::vector<std::pair<int, int>> edges;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw usage_error("edge wants A-B: " + item);
        edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return edges;
}

// ---- random ----

int run_random(int n, const std::string& zones, std::uint64_t seed, bool map_dynamics,
               const std::string& out) {
    Rng rng(seed);
    System sys;
    if (!zones.empty()) {
        auto sizes = parse_zone_spec(zones);
        long total = 0;
        for (long s : sizes) total += s;
        if (n > 0 && n != total)
            throw usage_error("zone spec covers " + std::to_string(total) +
                              " states, --n says " + std::to_string(n));
        std::vector<std::vector<int>> blocks;
        int next = 0;
        for (long s : sizes) {
            std::vector<int> b;
            for (long c = 0; c < s; ++c) b.push_back(next++);
            blocks.push_back(std::move(b));
        }
        auto alpha = map_dynamics ? random_map(rng, (int)total)
                                  : random_permutation(rng, (int)total);
        sys = build_system((int)total, blocks, alpha, std::nullopt);
    } else {
        if (n < 1) throw usage_error("random needs --n or --zones");
        sys = random_system(rng, n, !map_dynamics);
    }
    json j = system_to_json(sys);
    j["seed"] = seed;
    emit(out, dump(j));
    return 0;
}

// ---- analyze ----

int run_analyze(const std::string& input, const BigRat& e1, const BigRat& e2, long steps,
                const std::string& out) {
    System sys = load_system(input);
    bool invertible = is_permutation(sys.alpha);
    auto zp = zone_profile(sys.part);
    auto ent = entropy_report(sys, steps);
    auto tc = transition_counts(sys, steps);
    auto dic = dic_split(sys, steps);
    auto js = jump_stats(sys, steps);

    json j;
    j["n"] = sys.n;
    j["invertible"] = invertible;
    j["has_reversion"] = sys.reversion.has_value();
    j["steps"] = steps;
    j["eps1"] = rat_to_string(e1);
    j["eps2"] = rat_to_string(e2);
    j["zones"] = {{"sizes", zp.sizes}, {"cardinalities", zp.zone_card}};
    j["entropy"] = {{"system", fmt17(ent.S_system)},
                    {"macro", fmt17(ent.H_macro)},
                    {"transition", fmt17(ent.H_transition)},
                    {"system_plus_macro", fmt17(ent.S_plus_H)}};
    j["block_transitions"] = tc.N;
    j["zone_transitions"] = zone_transition_counts(sys, steps);
    j["split"] = {{"decreasing", dic.D.size()},
                  {"increasing", dic.I.size()},
                  {"conserving", dic.C.size()}};
    j["jumps"] = {{"total", js.total}, {"max", js.max}, {"zero_jump", js.zero_jump}};

    auto eq = equilibrium_reaching_time(sys);
    j["equilibrium"] = {{"bound", eq.equilibrium_bound}, {"max_time", eq.E}};
    if (!eq.equilibrium_bound) j["equilibrium"]["escaping_orbit"] = eq.witness_orbit;

    json props;
    props["L1"] = verdict_json(check_L1(sys, e1, steps));
    props["GAT"] = verdict_json(check_GAT(sys, e2, steps));
    props["ZAT"] = verdict_json(check_ZAT(sys, e2, steps));
    props["BAT"] = verdict_json(check_BAT(sys, e2, steps));
    props["L2"] = verdict_json(check_L2(sys, e1, e2));
    props["L3"] = verdict_json(check_L3(sys, e1, e2));
    props["L4"] = verdict_json(check_L4(sys, e1, e2));
    if (invertible)
        for (int g = 0; g <= 4; ++g)
            props["G" + std::to_string(g)] = verdict_json(check_G(sys, g, e1, e2));
    j["properties"] = props;

    if (invertible) {
        auto arrow = local_arrow_report(sys);
        j["arrow"] = {{"dec_forward", arrow.dec_forward},
                      {"inc_backward", arrow.inc_backward},
                      {"inc_forward", arrow.inc_forward},
                      {"dec_backward", arrow.dec_backward},
                      {"count_equalities", arrow.count_equalities},
                      {"neq_identity", arrow.neq_identity}};
        j["orbit_count"] = orbits(sys).size();
    }
    if (sys.reversion) {
        auto fl = fluctuation_check(sys);
        j["fluctuation"] = {{"forward_backward", fl.forward_backward},
                            {"reversion_identity", fl.reversion_identity}};
    }
    emit(out, dump(j));
    return 0;
}

// ---- check ----

int run_check(const std::string& input, const std::string& prop, const std::string& eps,
              const std::string& eps2, long steps, const std::string& out) {
    System sys = load_system(input);
    BigRat e1 = parse_rat(eps);
    BigRat e2 = eps2.empty() ? e1 : parse_rat(eps2);
    PropertyVerdict v;
    if (prop == "l1") v = check_L1(sys, e1, steps);
    else if (prop == "gat") v = check_GAT(sys, e1, steps);
    else if (prop == "zat") v = check_ZAT(sys, e1, steps);
    else if (prop == "bat") v = check_BAT(sys, e1, steps);
    else if (prop == "l2") v = check_L2(sys, e1, e2);
    else if (prop == "l3") v = check_L3(sys, e1, e2);
    else if (prop == "l4") v = check_L4(sys, e1, e2);
    else if (prop.size() == 2 && prop[0] == 'g' && prop[1] >= '0' && prop[1] <= '4')
        v = check_G(sys, prop[1] - '0', e1, e2);
    else
        throw usage_error("unknown property: " + prop);
    json j = verdict_json(v);
    j["property"] = prop;
    emit(out, dump(j));
    return v.holds ? 0 : 1;
}

// ---- enumerate ----

int run_enumerate(int scan_n, int dx_n, bool always_inc, const std::string& input,
                  const std::string& side, int duality_n, int threads,
                  const std::string& out) {
    int chosen = (scan_n > 0) + (dx_n > 0) + always_inc + (duality_n > 0);
    if (chosen != 1)
        throw usage_error("enumerate wants exactly one of --scan, --dx, "
                          "--always-increasing, --duality");
    if (scan_n > 0) {
        auto ledger = scan_all(scan_n, threads);
        std::ostringstream os;
        os << "d,count\n";
        for (const auto& [d, count] : ledger.histogram) os << d << "," << count << "\n";
        emit(out, os.str());
        return 0;
    }
    if (dx_n > 0) {
        std::ostringstream os;
        os << "n,d\n";
        for (int n = 1; n <= dx_n; ++n) os << n << "," << d_X(n) << "\n";
        emit(out, os.str());
        return 0;
    }
    if (always_inc) {
        System sys = load_system(input);
        json j;
        if (side == "partition") {
            j["count"] = count_always_increasing_by_partition(sys.part).str();
            j["probability"] = rat_to_string(probability_always_increasing(sys.part));
        } else if (side == "permutation") {
            j["count"] = count_always_increasing_by_permutation(sys.n, sys.alpha).str();
        } else {
            throw usage_error("--side wants partition or permutation");
        }
        emit(out, dump(j));
        return 0;
    }
    auto rep = duality_identity(duality_n);
    json j;
    j["by_partition"] = rep.by_partition.str();
    j["by_permutation"] = rep.by_permutation.str();
    j["by_raw_scan"] = rep.by_raw_scan.str();
    j["agree"] = rep.agree;
    emit(out, dump(j));
    return rep.agree ? 0 : 1;
}

// ---- polytope ----

Family family_by_name(const std::string& name) {
    if (name == "lambda") return Family::Lambda;
    if (name == "lambda-de") return Family::LambdaDE;
    if (name == "upsilon") return Family::Upsilon;
    if (name == "psi" || name == "l2") return Family::Psi;
    if (name == "theta" || name == "l3") return Family::Theta;
    if (name == "omega" || name == "l3-zero") return Family::Omega;
    if (name == "sigma" || name == "l3-sym") return Family::Sigma;
    if (name == "phi" || name == "ir-l2") return Family::Phi;
    if (name == "theta-pair") return Family::ThetaPair;
    if (name == "gamma" || name == "l4") return Family::Gamma;
    throw usage_error("unknown family: " + name);
}

int run_polytope(const std::string& family, const std::string& property,
                 const std::string& zones, const std::string& counts, long d, long e,
                 const std::string& eps1, const std::string& eps2,
                 const std::string& edges, int threads, const std::string& out) {
    if (family.empty() == property.empty())
        throw usage_error("polytope wants exactly one of --family, --property");
    Family fam = family_by_name(family.empty() ? property : family);

    if (zones.empty() || counts.empty())
        throw usage_error("polytope wants --zones and --counts");
    std::vector<long> sizes, mult;
    {
        std::istringstream zi(zones), ci(counts);
        std::string item;
        while (std::getline(zi, item, ',')) sizes.push_back(std::stol(item));
        while (std::getline(ci, item, ',')) mult.push_back(std::stol(item));
    }
    if (sizes.size() != mult.size())
        throw usage_error("--zones and --counts must have equal length");
    std::vector<int> parts;
    for (size_t i = 0; i < sizes.size(); ++i)
        for (long c = 0; c < mult[i]; ++c) parts.push_back((int)sizes[i]);
    Partition part = partition_with_sizes(parts);

    FamilyArgs args;
    args.d = d;
    args.e = e;
    args.eps1 = parse_rat(eps1);
    args.eps2 = parse_rat(eps2);
    args.edges = parse_edges(edges);
    auto spec = build_polytope(part, fam, args);
    auto sum = enumerate_and_sum(spec, threads);
    json j;
    j["points"] = sum.lattice_points.str();
    j["weighted_sum"] = sum.weighted_sum.str();
    j["probability"] = rat_to_string(sum.probability);
    emit(out, dump(j));
    return 0;
}

// ---- reversible ----

int run_reversible(const std::string& input, const std::string& make,
                   const std::string& decompose, bool fluctuation, bool production,
                   long steps, const std::string& out) {
    int chosen = !make.empty() + !decompose.empty() + fluctuation + production;
    if (chosen != 1)
        throw usage_error("reversible wants exactly one of --make, --decompose, "
                          "--fluctuation, --production");
    System sys = load_system(input);
    if (!make.empty()) {
        System doubled;
        if (make == "ir") doubled = make_IR(sys);
        else if (make == "er") doubled = make_ER(sys);
        else throw usage_error("--make wants ir or er");
        emit(out, dump(system_to_json(doubled)));
        return 0;
    }
    if (!decompose.empty()) {
        DecomposeMode mode;
        if (decompose == "invariant") mode = DecomposeMode::Invariant;
        else if (decompose == "equivariant") mode = DecomposeMode::Equivariant;
        else throw usage_error("--decompose wants invariant or equivariant");
        auto dec = decompose_reversible(sys, mode);
        json j;
        j["certificate_ok"] = dec.certificate_ok;
        j["cycles"] = {{"paired", dec.cycles_paired},
                       {"self_no_fixed", dec.cycles_n},
                       {"self_one_fixed", dec.cycles_o},
                       {"self_two_fixed", dec.cycles_t}};
        j["phi"] = dec.phi;
        emit(out, dump(j));
        return dec.certificate_ok ? 0 : 1;
    }
    if (fluctuation) {
        auto fl = fluctuation_check(sys);
        json j;
        j["forward_backward"] = fl.forward_backward;
        j["checked_reversion"] = fl.checked_reversion;
        j["reversion_identity"] = fl.reversion_identity;
        emit(out, dump(j));
        bool ok = fl.forward_backward && (!fl.checked_reversion || fl.reversion_identity);
        return ok ? 0 : 1;
    }
    auto prof = production_profile(sys, steps);
    json j;
    j["n_steps"] = prof.n_steps;
    j["mean_u"] = fmt17(prof.mean_u);
    j["mean_u_neq"] = fmt17(prof.mean_u_neq);
    j["mean_q"] = fmt17(prof.mean_q);
    j["mean_u_zero"] = prof.mean_u_zero;
    j["mean_u_neq_nonneg"] = prof.mean_u_neq_nonneg;
    j["mean_u_neq_zero"] = prof.mean_u_neq_zero;
    j["eq_invariant"] = prof.eq_invariant;
    j["entropy_preserving_reversible"] = prof.entropy_preserving_reversible;
    j["W_u_even"] = prof.W_u_even;
    j["W_q_detailed_balance"] = prof.W_q_detailed_balance;
    json dens;
    for (const auto& [pair, mass] : prof.density_q)
        dens[std::to_string(pair.first) + "/" + std::to_string(pair.second)] =
            rat_to_string(mass);
    j["density_q"] = dens;
    emit(out, dump(j));
    return 0;
}

// ---- thermo ----

int run_thermo(const std::string& model, int k, double delta,
               const std::vector<double>& p, bool check_limits, double eps1, double eps2,
               const std::string& out) {
    Proportions pr;
    if (model == "free") pr = maxent_free(p);
    else if (model == "band") pr = maxent_bounded_jump(p, k);
    else if (model == "jump") pr = maxent_fixed_jump(p, delta);
    else throw usage_error("--model wants free, band or jump");

    std::ostringstream os;
    os << "model," << model << "\n";
    if (model == "band") os << "k," << k << "\n";
    if (model == "jump") {
        os << "delta," << fmt17(pr.delta) << "\n";
        os << "multiplier," << fmt17(pr.multiplier) << "\n";
        os << "c," << fmt17(pr.c) << "\n";
    }
    os << "entropy," << fmt17(matrix_entropy(pr.lambda)) << "\n";
    os << "b";
    for (double v : pr.b) os << "," << fmt17(v);
    os << "\n";
    for (const auto& row : pr.lambda) {
        os << "lambda";
        for (double v : row) os << "," << fmt17(v);
        os << "\n";
    }
    bool ok = true;
    if (check_limits) {
        auto rep = limit_properties(pr, eps1, eps2);
        os << "ordered," << rep.ordered << "\n";
        os << "L1," << rep.L1.holds << "," << fmt17(rep.L1.lhs) << "," << fmt17(rep.L1.rhs)
           << "\n";
        os << "GAT," << rep.GAT.holds << "," << fmt17(rep.GAT.lhs) << ","
           << fmt17(rep.GAT.rhs) << "\n";
        for (size_t j = 0; j < rep.ZAT.size(); ++j)
            os << "ZAT," << j << "," << rep.ZAT[j].holds << "," << fmt17(rep.ZAT[j].lhs)
               << "," << fmt17(rep.ZAT[j].rhs) << "\n";
        os << "L3," << rep.L3 << "\n";
        ok = rep.L3;
    }
    emit(out, os.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact second-law toolkit for finite micro-macro systems"};
    app.require_subcommand(1);

    std::string input = "-", output = "-";
    int threads = 1;
    long steps = 1;

    auto* random = app.add_subcommand("random", "generate a seeded random system");
    int rnd_n = 0;
    std::string rnd_zones;
    std::uint64_t seed = 0;
    bool rnd_map = false;
    random->add_option("--n", rnd_n, "number of microstates");
    random->add_option("--zones", rnd_zones, "zone spec SIZExCOUNT,... instead of a random partition");
    random->add_option("--seed", seed, "rng seed")->capture_default_str();
    random->add_flag("--map", rnd_map, "allow non-invertible dynamics");
    random->add_option("--output", output, "output path, - for stdout");

    auto* analyze = app.add_subcommand("analyze", "full report on one system");
    std::string an_e1 = "1/10", an_e2 = "1/10";
    analyze->add_option("--input", input, "system json, - for stdin");
    analyze->add_option("--eps1", an_e1, "first tolerance, rational")->capture_default_str();
    analyze->add_option("--eps2", an_e2, "second tolerance, rational")->capture_default_str();
    analyze->add_option("--steps", steps, "dynamics steps");
    analyze->add_option("--output", output);

    auto* check = app.add_subcommand("check", "test one property, exit 0 iff it holds");
    std::string ck_prop, ck_eps, ck_eps2;
    check->add_option("--property", ck_prop, "l1 l2 l3 l4 gat zat bat g0..g4")->required();
    check->add_option("--eps", ck_eps, "tolerance, rational")->required();
    check->add_option("--eps2", ck_eps2, "second tolerance, defaults to --eps");
    check->add_option("--input", input);
    check->add_option("--steps", steps);
    check->add_option("--output", output);

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive counting ledgers");
    int en_scan = 0, en_dx = 0, en_duality = 0;
    bool en_ai = false;
    std::string en_side = "partition";
    enumerate->add_option("--scan", en_scan, "scan all pairs on [n], CSV d,count");
    enumerate->add_option("--dx", en_dx, "largest decrease counts for 1..n, CSV");
    enumerate->add_flag("--always-increasing", en_ai, "count never-decreasing pairings");
    enumerate->add_option("--side", en_side, "partition or permutation");
    enumerate->add_option("--duality", en_duality, "verify the pair-counting identity at n");
    enumerate->add_option("--input", input);
    enumerate->add_option("--threads", threads);
    enumerate->add_option("--output", output);

    auto* polytope = app.add_subcommand("polytope", "lattice sums over transition polytopes");
    std::string po_family, po_property, po_zones, po_counts, po_edges;
    std::string po_e1 = "0", po_e2 = "0";
    long po_d = 0, po_e = 0;
    polytope->add_option("--family", po_family,
                         "lambda lambda-de upsilon psi theta omega sigma phi theta-pair gamma");
    polytope->add_option("--property", po_property, "l2 l3 l3-zero l3-sym ir-l2 l4");
    polytope->add_option("--zones", po_zones, "distinct block sizes, ascending")->required();
    polytope->add_option("--counts", po_counts, "blocks per size")->required();
    polytope->add_option("--d", po_d, "decrease count");
    polytope->add_option("--e", po_e, "increase count");
    polytope->add_option("--eps1", po_e1)->capture_default_str();
    polytope->add_option("--eps2", po_e2)->capture_default_str();
    polytope->add_option("--edges", po_edges, "microstate edges A-B,... for gamma");
    polytope->add_option("--threads", threads);
    polytope->add_option("--output", output);

    auto* reversible = app.add_subcommand("reversible", "reversion constructions and checks");
    std::string rv_make, rv_decompose;
    bool rv_fluct = false, rv_prod = false;
    reversible->add_option("--make", rv_make, "ir or er");
    reversible->add_option("--decompose", rv_decompose, "invariant or equivariant");
    reversible->add_flag("--fluctuation", rv_fluct, "exact count symmetries");
    reversible->add_flag("--production", rv_prod, "entropy production profile");
    reversible->add_option("--steps", steps);
    reversible->add_option("--input", input);
    reversible->add_option("--output", output);

    auto* thermo = app.add_subcommand("thermo", "limit proportion solvers, CSV out");
    std::string th_model = "free";
    int th_k = 1;
    double th_delta = 0, th_e1 = 0.1, th_e2 = 0.1;
    std::vector<double> th_p;
    bool th_limits = false;
    thermo->add_option("--model", th_model, "free, band or jump")->capture_default_str();
    thermo->add_option("--k", th_k, "band half-width");
    thermo->add_option("--delta", th_delta, "prescribed average jump");
    thermo->add_option("--p", th_p, "zone proportions")->delimiter(',')->required();
    thermo->add_flag("--check-limits", th_limits, "report L1/GAT/ZAT/L3, exit by L3");
    thermo->add_option("--eps1", th_e1)->capture_default_str();
    thermo->add_option("--eps2", th_e2)->capture_default_str();
    thermo->add_option("--output", output);

    try {
        app.parse(argc, argv);
        if (random->parsed()) return run_random(rnd_n, rnd_zones, seed, rnd_map, output);
        if (analyze->parsed())
            return run_analyze(input, parse_rat(an_e1), parse_rat(an_e2), steps, output);
        if (check->parsed())
            return run_check(input, ck_prop, ck_eps, ck_eps2, steps, output);
        if (enumerate->parsed())
            return run_enumerate(en_scan, en_dx, en_ai, input, en_side, en_duality,
                                 threads, output);
        if (polytope->parsed())
            return run_polytope(po_family, po_property, po_zones, po_counts, po_d, po_e,
                                po_e1, po_e2, po_edges, threads, output);
        if (reversible->parsed())
            return run_reversible(input, rv_make, rv_decompose, rv_fluct, rv_prod, steps,
                                  output);
        if (thermo->parsed())
            return run_thermo(th_model, th_k, th_delta, th_p, th_limits, th_e1, th_e2,
                              output);
        return 2;
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : 2;
    } catch (const usage_error& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "solver error: " << err.what() << "\n";
        return 4;
    }
}
