// isoclass: one binary with subcommands for every experiment. Exit codes:
// 0 success, 1 an invariant check or sweep failed, 2 usage error.

#include "isoclass/acceptance.hpp"
#include "isoclass/addcomb.hpp"
#include "isoclass/class_groups.hpp"
#include "isoclass/cm_analytics.hpp"
#include "isoclass/ec_isogeny.hpp"
#include "isoclass/report.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace isoclass;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Globals {
    u64 seed = 0;
    unsigned workers = 1;
    std::string format = "json";
    std::string out_path;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Serialized record (wall time stripped so identical configs give identical
/// bytes; the timing goes to stderr) plus optional leading scalar line.
void emit(const ReportRecord& rec, const Globals& g, const std::string& scalar = "",
          const std::string& csv = "") {
    ordered_json j = to_json(rec);
    std::fprintf(stderr, "# %s wall_ms=%.3f\n", rec.experiment.c_str(), rec.wall_ms);
    j.erase("wall_ms");
    const std::string payload = g.format == "csv" && !csv.empty() ? csv : j.dump(2) + "\n";
    if (!scalar.empty())
        std::fputs((scalar + "\n").c_str(), stdout);
    std::fputs(payload.c_str(), stdout);
    if (!g.out_path.empty()) {
        std::ofstream f(g.out_path, std::ios::binary);
        if (!f)
            throw UsageError("cannot open output file: " + g.out_path);
        f << payload;
    }
}

/// Comma-separated integer coefficients, leading term first:
/// "1,-1,5" is x^2 - x + 5. Returned ascending as the library stores them.
ZPoly parse_poly(const std::string& s) {
    std::vector<long> desc;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            desc.push_back(std::stol(tok, &pos));
            if (pos != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad coefficient '" + tok + "' in --poly");
        }
    }
    if (desc.empty() || desc.front() != 1)
        throw UsageError("--poly needs a monic polynomial, leading coefficient first");
    ZPoly p;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it)
        p.emplace_back(*it);
    return p;
}

std::vector<u64> parse_u64_list(const std::string& s, const char* what) {
    std::vector<u64> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoull(tok, &pos));
            if (pos != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad entry '") + tok + "' in " + what);
        }
    }
    if (out.empty())
        throw UsageError(std::string(what) + " must not be empty");
    return out;
}

Field make_field_checked(u64 q) {
    try {
        const auto [p, k] = prime_power_split(q);
        return Field::make(p, k);
    } catch (const std::exception&) {
        throw UsageError("q must be a prime power with extension degree <= 8, got " +
                         std::to_string(q));
    }
}

/// "3,5,9" (explicit element indices) or "random:SIZE,SEED".
GroundSet parse_set_spec(const Field& F, const std::string& spec) {
    if (spec.rfind("random:", 0) == 0) {
        const auto nums = parse_u64_list(spec.substr(7), "--set random:");
        if (nums.size() != 2)
            throw UsageError("--set random: wants SIZE,SEED");
        return random_ground_set(F, nums[0], nums[1]);
    }
    return make_ground_set(F, parse_u64_list(spec, "--set"));
}

ordered_json weil_record_json(const WeilPolynomialRecord& rec) {
    ordered_json j;
    j["g"] = rec.g;
    j["q"] = rec.q;
    std::vector<std::string> coeffs;
    for (const auto& c : rec.coeffs)
        coeffs.push_back(c.get_str());
    j["coeffs_ascending"] = coeffs;
    std::vector<std::string> slopes;
    for (const auto& s : rec.newton_slopes)
        slopes.push_back(s.get_str());
    j["newton_slopes"] = slopes;
    j["ordinary"] = rec.ordinary;
    return j;
}

// ---------------------------------------------------------------- commands

int cmd_class_number(const Globals& g, std::optional<i64> disc, std::optional<i64> fundamental,
                     u64 conductor, bool verbose) {
    Stopwatch timer;
    ReportRecord rec;
    rec.experiment = "class-number";
    rec.claim = "class-number-formula";
    u64 h = 0;
    if (disc && !fundamental) {
        h = class_number_forms(*disc);
        rec.inputs = {{"disc", *disc}};
        rec.outputs = {{"disc", *disc}, {"h", h}, {"method", "reduced-forms"}};
    } else if (fundamental && !disc) {
        h = class_number_order(*fundamental, conductor);
        const i64 full_disc = static_cast<i64>(conductor * conductor) * *fundamental;
        rec.inputs = {{"fundamental", *fundamental}, {"conductor", conductor}};
        rec.outputs = {{"disc", full_disc}, {"h", h}, {"method", "conductor-formula"}};
        if (verbose) {
            rec.outputs["h_forms"] = class_number_forms(full_disc);
            rec.outputs["euler_product_without_1_over_p"] =
                class_number_order_no_p(*fundamental, conductor).get_str();
        }
    } else {
        throw UsageError("class-number wants exactly one of --disc or --fundamental");
    }
    rec.wall_ms = timer.ms();
    emit(rec, g, std::to_string(h));
    return kExitOk;
}

int cmd_isogeny_size(const Globals& g, u64 q, i64 a, unsigned n, bool with_members) {
    Stopwatch timer;
    IsogenyClassSummary s = isogeny_class_summary(a, q, n);
    ReportRecord rec;
    rec.experiment = with_members ? "isogeny-members" : "isogeny-size";
    rec.claim = "isogeny-class-size";
    rec.inputs = {{"q", q}, {"trace", a}, {"n", n}};
    rec.outputs = {{"q", s.base.q},   {"a", s.base.a},  {"n", s.n},
                   {"a_n", s.a_n.get_str()}, {"f_n", s.f_n}, {"size", s.size}};
    if (with_members) {
        s.members = isogeny_class_members(q, a);
        rec.outputs["members"] = s.members;
        rec.outputs["member_count"] = s.members.size();
    }
    rec.wall_ms = timer.ms();
    emit(rec, g, std::to_string(s.size));
    return kExitOk;
}

int cmd_curve_census(const Globals& g, u64 q) {
    Stopwatch timer;
    const auto census = enumerate_curves_by_trace(q, g.workers);
    ReportRecord rec;
    rec.experiment = "curve-census";
    rec.claim = "isogeny-class-size";
    rec.inputs = {{"q", q}};
    ordered_json rows = ordered_json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (const auto& [trace, count] : census) {
        rows.push_back({{"trace", trace}, {"count", count}});
        csv_rows.push_back({std::to_string(trace), std::to_string(count)});
    }
    rec.outputs = {{"q", q}, {"census", rows}};
    rec.wall_ms = timer.ms();
    emit(rec, g, "", to_csv({"trace", "count"}, csv_rows));
    return kExitOk;
}

int cmd_supersingular(const Globals& g, u64 p) {
    Stopwatch timer;
    const auto js = supersingular_j_invariants(p);
    ReportRecord rec;
    rec.experiment = "supersingular";
    rec.claim = "supersingular-locus";
    rec.inputs = {{"p", p}};
    rec.outputs = {{"p", p}, {"count", js.size()}, {"j_indices", js}};
    rec.wall_ms = timer.ms();
    emit(rec, g, std::to_string(js.size()));
    return kExitOk;
}

int cmd_weil_census(const Globals& g, unsigned gg, u64 q, bool ordinary_only) {
    if (gg < 1 || gg > 2)
        throw UsageError("weil-census supports --g 1 or 2");
    Stopwatch timer;
    const auto recs = enumerate_weil_polynomials(gg, q, ordinary_only, g.workers);
    ReportRecord rec;
    rec.experiment = "weil-census";
    rec.claim = "newton-polygon";
    rec.inputs = {{"g", gg}, {"q", q}, {"ordinary_only", ordinary_only}};
    ordered_json arr = ordered_json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (const auto& w : recs) {
        arr.push_back(weil_record_json(w));
        std::string coeffs, slopes;
        for (size_t i = 0; i < w.coeffs.size(); ++i)
            coeffs += (i ? ";" : "") + w.coeffs[i].get_str();
        for (size_t i = 0; i < w.newton_slopes.size(); ++i)
            slopes += (i ? ";" : "") + w.newton_slopes[i].get_str();
        csv_rows.push_back({std::to_string(q), std::to_string(gg), coeffs, slopes,
                            w.ordinary ? "1" : "0"});
    }
    rec.outputs = {{"count", recs.size()}, {"records", arr}};
    rec.wall_ms = timer.ms();
    emit(rec, g, "",
         to_csv({"q", "g", "coeffs_ascending", "newton_slopes", "ordinary"}, csv_rows));
    return kExitOk;
}

int cmd_weil_scaling(const Globals& g, unsigned gg, const std::string& q_csv) {
    if (gg < 1 || gg > 2)
        throw UsageError("weil-scaling supports --g 1 or 2");
    Stopwatch timer;
    const auto qs = parse_u64_list(q_csv, "--q");
    const CensusScaling s = census_scaling(gg, qs, g.workers);
    ReportRecord rec;
    rec.experiment = "weil-scaling";
    rec.claim = "weil-census-scaling";
    rec.inputs = {{"g", gg}, {"q_list", qs}};
    ordered_json pts = ordered_json::array();
    for (const auto& p : s.points)
        pts.push_back({{"q", p.q}, {"total", p.total}, {"ordinary", p.ordinary}});
    rec.outputs = {{"points", pts},
                   {"slope_total", s.slope_total},
                   {"slope_ordinary", s.slope_ordinary},
                   {"target", s.target}};
    rec.wall_ms = timer.ms();
    emit(rec, g);
    return kExitOk;
}

WeilRootProfile profile_from_args(const std::string& poly, u64 q, unsigned digits) {
    const ZPoly coeffs = parse_poly(poly);
    WeilPolynomialRecord rec;
    try {
        rec = make_weil_record(coeffs, q);
    } catch (const std::exception& e) {
        throw UsageError(std::string("not a usable Weil polynomial: ") + e.what());
    }
    return weil_root_profile(rec, digits);
}

ordered_json profile_json(const WeilRootProfile& prof) {
    ordered_json j;
    j["g"] = prof.record.g;
    j["q"] = prof.record.q;
    j["precision_digits"] = prof.precision_digits;
    j["angles"] = prof.angles;
    j["angle_strings"] = prof.angle_str;
    j["root_re"] = prof.root_re;
    j["root_im"] = prof.root_im;
    j["multiplicity"] = prof.multiplicity;
    j["degenerate"] = prof.degenerate;
    j["degenerate_reason"] = prof.degenerate_reason;
    return j;
}

int cmd_cm_density(const Globals& g, const std::string& poly, u64 q, u64 nmax, unsigned digits) {
    Stopwatch timer;
    const WeilRootProfile prof = profile_from_args(poly, q, digits);
    const double density = positivity_density(prof, nmax, g.workers);
    ReportRecord rec;
    rec.experiment = "cm-density";
    rec.claim = "positivity-density";
    rec.inputs = {{"poly_descending", poly}, {"q", q}, {"nmax", nmax}};
    rec.outputs = profile_json(prof);
    rec.outputs["density"] = density;
    rec.outputs["target"] = std::ldexp(1.0, -static_cast<int>(prof.record.g));
    rec.wall_ms = timer.ms();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", density);
    emit(rec, g, buf);
    return kExitOk;
}

int cmd_cm_independence(const Globals& g, const std::string& poly, u64 q, long bound, double tol,
                        unsigned digits) {
    Stopwatch timer;
    const WeilRootProfile prof = profile_from_args(poly, q, digits);
    const IndependenceVerdict v = multiplicative_independence_heuristic(prof, bound, tol);
    ReportRecord rec;
    rec.experiment = "cm-independence";
    rec.claim = "angle-independence";
    rec.inputs = {{"poly_descending", poly}, {"q", q}, {"bound", bound}, {"tolerance", tol}};
    rec.outputs = profile_json(prof);
    rec.outputs["independent"] = v.independent;
    rec.outputs["witness"] = v.witness;
    rec.outputs["min_combination"] = v.value;
    rec.verdict = v.independent;
    rec.wall_ms = timer.ms();
    emit(rec, g, v.independent ? "independent" : "dependent");
    return kExitOk;
}

int cmd_disc_report(const Globals& g, const std::string& poly, u64 q, unsigned n) {
    Stopwatch timer;
    const ZPoly coeffs = parse_poly(poly);
    WeilPolynomialRecord wrec;
    try {
        wrec = make_weil_record(coeffs, q);
    } catch (const std::exception& e) {
        throw UsageError(std::string("not a usable Weil polynomial: ") + e.what());
    }
    DiscriminantReport d;
    try {
        d = discriminant_report(wrec, n);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    ReportRecord rec;
    rec.experiment = "disc-report";
    rec.claim = "discriminant-identity";
    rec.inputs = {{"poly_descending", poly}, {"q", q}, {"n", n}};
    ordered_json& o = rec.outputs;
    o["g"] = d.g;
    o["q"] = d.q;
    o["n"] = d.n;
    o["Q"] = d.Q.get_str();
    auto poly_str = [](const ZPoly& p) {
        std::vector<std::string> v;
        for (const auto& c : p)
            v.push_back(c.get_str());
        return v;
    };
    o["power_poly_ascending"] = poly_str(d.power_poly);
    o["trace_poly_ascending"] = poly_str(d.trace_poly_n);
    o["disc_power"] = d.disc_power.get_str();
    o["disc_trace"] = d.disc_trace.get_str();
    o["q_power_factor"] = d.q_power_factor.get_str();
    o["circle_term"] = d.circle_term.get_str();
    o["exact_identity_holds"] = d.exact_identity_holds;
    o["observed_ratio_exponent"] = d.observed_ratio_exponent;
    o["unit_circle_factor"] = d.unit_circle_factor;
    o["unit_circle_bound"] = d.unit_circle_bound;
    o["polar_disc_power"] = d.polar_disc_power;
    o["polar_disc_trace"] = d.polar_disc_trace;
    o["polar_rel_err_power"] = d.polar_rel_err_power;
    o["polar_rel_err_trace"] = d.polar_rel_err_trace;
    o["degenerate"] = d.degenerate;
    rec.verdict = d.exact_identity_holds;
    rec.wall_ms = timer.ms();
    emit(rec, g, d.disc_power.get_str());
    return d.exact_identity_holds ? kExitOk : kExitViolation;
}

int cmd_sumprod(const Globals& g, u64 q, const std::string& set_spec) {
    Stopwatch timer;
    const Field F = make_field_checked(q);
    GroundSet A;
    try {
        A = parse_set_spec(F, set_spec);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    SumProductStats st;
    try {
        st = sum_product_stats(A);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    ReportRecord rec;
    rec.experiment = "sumprod";
    rec.claim = "sum-product-growth";
    rec.inputs = {{"q", q}, {"set", set_spec}};
    rec.outputs = {{"size", st.size},
                   {"sum_size", st.sum_size},
                   {"prod_size", st.prod_size},
                   {"shifted_size", st.shifted_size},
                   {"sum_exponent", st.sum_exponent},
                   {"prod_exponent", st.prod_exponent},
                   {"shifted_exponent", st.shifted_exponent},
                   {"max_exponent", st.max_exponent}};
    rec.wall_ms = timer.ms();
    emit(rec, g);
    return kExitOk;
}

int cmd_ruzsa_sweep(const Globals& g, u64 trials) {
    Stopwatch timer;
    const RuzsaSweepResult cyc = ruzsa_sweep_cyclic(trials, 64, g.seed);
    const RuzsaSweepResult mul = ruzsa_sweep_multiplicative(trials, 64, g.seed);
    ReportRecord rec;
    rec.experiment = "ruzsa-sweep";
    rec.claim = "doubling-inequality";
    rec.inputs = {{"trials", trials}, {"seed", g.seed}};
    rec.outputs = {{"cyclic", {{"trials", cyc.trials}, {"violations", cyc.violations}}},
                   {"multiplicative", {{"trials", mul.trials}, {"violations", mul.violations}}}};
    const bool ok = cyc.violations == 0 && mul.violations == 0;
    rec.verdict = ok;
    rec.wall_ms = timer.ms();
    const std::string csv =
        to_csv({"family", "trials", "violations"},
               {{"cyclic", std::to_string(cyc.trials), std::to_string(cyc.violations)},
                {"multiplicative", std::to_string(mul.trials), std::to_string(mul.violations)}});
    emit(rec, g, "", csv);
    return ok ? kExitOk : kExitViolation;
}

int cmd_dotprod_check(const Globals& g, u64 q, unsigned n, u64 trials) {
    Stopwatch timer;
    const Field F = make_field_checked(q);
    RuzsaSweepResult sw{};
    try {
        sw = dot_product_sweep(F, n, trials, g.seed);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    ReportRecord rec;
    rec.experiment = "dotprod-check";
    rec.claim = "dot-product-bound";
    rec.inputs = {{"q", q}, {"n", n}, {"trials", trials}, {"seed", g.seed}};
    rec.outputs = {{"trials", sw.trials}, {"violations", sw.violations}};
    rec.verdict = sw.violations == 0;
    rec.wall_ms = timer.ms();
    const std::string csv = to_csv({"q", "n", "trials", "violations"},
                                   {{std::to_string(q), std::to_string(n),
                                     std::to_string(sw.trials), std::to_string(sw.violations)}});
    emit(rec, g, "", csv);
    return sw.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_build_r(const Globals& g, unsigned N) {
    Stopwatch timer;
    StructuredHypersurface H;
    try {
        H = build_hypersurface(N);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    ReportRecord rec;
    rec.experiment = "build-r";
    rec.claim = "structured-hypersurface";
    rec.inputs = {{"N", N}};
    ordered_json blocks = ordered_json::array();
    for (unsigned i = 1; i <= N; ++i)
        blocks.push_back({{"block", i},
                          {"coordinates", {6 * (i - 1) + 1, 6 * (i - 1) + 2, 6 * (i - 1) + 3,
                                           6 * (i - 1) + 4, 6 * (i - 1) + 5, 6 * (i - 1) + 6}},
                          {"first_triple_shift", 2 * i - 1},
                          {"second_triple_shift", 2 * i}});
    rec.outputs = {{"N", H.N},
                   {"arity", H.arity},
                   {"factor_count", H.shift_vectors.size()},
                   {"factor_degree", 4 * N},
                   {"total_degree", static_cast<u64>(4 * N) * H.shift_vectors.size()},
                   {"blocks", blocks},
                   {"base_polynomial", "P(x, y, z) = x*y + z"}};
    // Explicit bit vectors only while the list stays small; the factors are
    // always generated, never expanded.
    if (N <= 4) {
        ordered_json cs = ordered_json::array();
        for (u32 mask : H.shift_vectors) {
            std::vector<int> bits(2 * N);
            for (unsigned b = 0; b < 2 * N; ++b)
                bits[b] = (mask >> b) & 1;
            cs.push_back(bits);
        }
        rec.outputs["shift_vectors"] = cs;
    }
    rec.wall_ms = timer.ms();
    emit(rec, g);
    return kExitOk;
}

int cmd_hypersurface_search(const Globals& g, u64 q, unsigned N, const std::string& classes_spec,
                            u64 budget, const std::string& mode_str) {
    Stopwatch timer;
    const Field F = make_field_checked(q);
    StructuredHypersurface H;
    try {
        H = build_hypersurface(N);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    SearchMode mode;
    if (mode_str == "block-solve")
        mode = SearchMode::block_solve;
    else if (mode_str == "lexicographic")
        mode = SearchMode::lexicographic;
    else
        throw UsageError("--mode must be block-solve or lexicographic");

    // --classes forms: "full" (whole field, every coordinate);
    // "random:SIZE" (seeded per-coordinate random sets);
    // "traces:a1,...,a6N" (ordinary isogeny classes as j-invariant sets).
    std::vector<GroundSet> classes;
    try {
        if (classes_spec == "full") {
            std::vector<u64> everything(F.q());
            for (u64 i = 0; i < F.q(); ++i)
                everything[i] = i;
            for (unsigned j = 0; j < H.arity; ++j)
                classes.push_back(make_ground_set(F, everything));
        } else if (classes_spec.rfind("random:", 0) == 0) {
            const u64 size = parse_u64_list(classes_spec.substr(7), "--classes random:").at(0);
            for (unsigned j = 0; j < H.arity; ++j)
                classes.push_back(random_ground_set(F, size, g.seed * 1000 + j));
        } else if (classes_spec.rfind("traces:", 0) == 0) {
            std::vector<i64> traces;
            std::stringstream ss(classes_spec.substr(7));
            std::string tok;
            while (std::getline(ss, tok, ','))
                traces.push_back(std::stoll(tok));
            if (traces.size() != H.arity)
                throw UsageError("--classes traces: wants exactly " + std::to_string(H.arity) +
                                 " traces");
            for (i64 a : traces)
                classes.push_back(make_ground_set(F, isogeny_class_members(q, a)));
        } else {
            throw UsageError("--classes must be full, random:SIZE, or traces:a1,...");
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    const SearchReport rep = hypersurface_search(classes, H, budget, mode, g.seed, g.workers);
    ReportRecord rec;
    rec.experiment = "hypersurface-search";
    rec.claim = "hypersurface-intersection";
    rec.inputs = {{"q", q},       {"N", N},           {"classes", classes_spec},
                  {"seed", g.seed}, {"budget", budget}, {"mode", mode_str},
                  {"workers", g.workers}};
    rec.outputs = {{"found", rep.found},
                   {"witness", rep.witness},
                   {"vanishing_c", rep.vanishing_c},
                   {"evaluations", rep.evaluations},
                   {"fraction_searched", rep.fraction_searched}};
    rec.wall_ms = timer.ms();
    emit(rec, g, rep.found ? "found" : "exhausted");
    return kExitOk;
}

int cmd_acceptance(const Globals& g, const std::string& filter, bool inject) {
    AcceptanceOptions opts;
    opts.filter = filter;
    opts.workers = g.workers;
    opts.inject_failure = inject;
    const auto results = acceptance_suite(opts);
    bool all_pass = !results.empty();
    for (const auto& r : results) {
        std::puts(format_result_line(r).c_str());
        all_pass = all_pass && r.pass;
    }
    if (results.empty()) {
        std::puts("no acceptance criteria matched the filter");
        return kExitUsage;
    }
    return all_pass ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isoclass: isogeny classes, Weil polynomials, and additive combinatorics"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--seed", g.seed, "seed for randomized experiments (default 0)");
    app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out_path, "also write the payload to this file");

    // class-number
    auto* cn = app.add_subcommand("class-number", "class number of an imaginary quadratic order");
    std::optional<i64> cn_disc, cn_fund;
    u64 cn_f = 1;
    bool cn_verbose = false;
    cn->add_option("--disc", cn_disc, "full discriminant (counts reduced forms)");
    cn->add_option("--fundamental", cn_fund, "fundamental discriminant (conductor formula)");
    cn->add_option("--conductor", cn_f, "conductor f (with --fundamental)");
    cn->add_flag("--verbose", cn_verbose, "also report the forms count and the Euler product");

    // isogeny-size / isogeny-members
    auto* isz = app.add_subcommand("isogeny-size", "size of an ordinary isogeny class");
    u64 is_q = 0;
    i64 is_a = 0;
    unsigned is_n = 1;
    isz->add_option("--q", is_q, "field size")->required();
    isz->add_option("--trace", is_a, "Frobenius trace")->required();
    isz->add_option("--n", is_n, "extension degree");

    auto* imem = app.add_subcommand("isogeny-members", "j-invariants in an isogeny class");
    u64 im_q = 0;
    i64 im_a = 0;
    imem->add_option("--q", im_q, "field size")->required();
    imem->add_option("--trace", im_a, "Frobenius trace")->required();

    auto* census = app.add_subcommand("curve-census", "curve counts by Frobenius trace");
    u64 cc_q = 0;
    census->add_option("--q", cc_q, "field size")->required();

    auto* ss = app.add_subcommand("supersingular", "supersingular j-invariants over F_{p^2}");
    u64 ss_p = 0;
    ss->add_option("--p", ss_p, "prime characteristic")->required();

    // weil-census / weil-scaling
    auto* wc = app.add_subcommand("weil-census", "enumerate Weil polynomials of degree 2g");
    unsigned wc_g = 1;
    u64 wc_q = 0;
    bool wc_ord = false;
    wc->add_option("--g", wc_g, "half-degree (1 or 2)")->required();
    wc->add_option("--q", wc_q, "field size")->required();
    wc->add_flag("--ordinary-only", wc_ord, "keep only ordinary records");

    auto* wsc = app.add_subcommand("weil-scaling", "fit census growth against field size");
    unsigned ws_g = 1;
    std::string ws_qs;
    wsc->add_option("--g", ws_g, "half-degree (1 or 2)")->required();
    wsc->add_option("--q", ws_qs, "comma-separated field sizes (at least 3)")->required();

    // cm analytics
    auto* cd = app.add_subcommand("cm-density", "positivity density of a root profile");
    std::string cd_poly;
    u64 cd_q = 0, cd_nmax = 100000;
    unsigned cd_digits = 40;
    cd->add_option("--poly", cd_poly, "coefficients, leading term first, e.g. 1,-1,5")
        ->required();
    cd->add_option("--q", cd_q, "field size")->required();
    cd->add_option("--nmax", cd_nmax, "number of steps");
    cd->add_option("--digits", cd_digits, "working precision in decimal digits");

    auto* ci = app.add_subcommand("cm-independence", "scan for small angle relations");
    std::string ci_poly;
    u64 ci_q = 0;
    long ci_bound = 20;
    double ci_tol = 1e-9;
    unsigned ci_digits = 40;
    ci->add_option("--poly", ci_poly, "coefficients, leading term first")->required();
    ci->add_option("--q", ci_q, "field size")->required();
    ci->add_option("--bound", ci_bound, "coefficient bound for the scan");
    ci->add_option("--tol", ci_tol, "detection tolerance");
    ci->add_option("--digits", ci_digits, "working precision in decimal digits");

    auto* dr = app.add_subcommand("disc-report", "discriminant identities for a power record");
    std::string dr_poly;
    u64 dr_q = 0;
    unsigned dr_n = 1;
    dr->add_option("--poly", dr_poly, "coefficients, leading term first")->required();
    dr->add_option("--q", dr_q, "field size")->required();
    dr->add_option("--n", dr_n, "power to analyze")->required();

    // additive combinatorics
    auto* sp = app.add_subcommand("sumprod", "sumset/product-set growth of one set");
    u64 sp_q = 0;
    std::string sp_set;
    sp->add_option("--q", sp_q, "field size")->required();
    sp->add_option("--set", sp_set, "element indices 'a,b,c' or random:SIZE,SEED")->required();

    auto* rz = app.add_subcommand("ruzsa-sweep", "doubling-inequality sweeps in both families");
    u64 rz_trials = 10000;
    rz->add_option("--trials", rz_trials, "random pairs per family");

    auto* dp = app.add_subcommand("dotprod-check", "dot-product bound on avoiding pairs");
    u64 dp_q = 0, dp_trials = 1000;
    unsigned dp_n = 1;
    dp->add_option("--q", dp_q, "field size")->required();
    dp->add_option("--n", dp_n, "vector dimension")->required();
    dp->add_option("--trials", dp_trials, "sampled avoiding pairs");

    auto* br = app.add_subcommand("build-r", "describe the structured product hypersurface");
    unsigned br_N = 1;
    br->add_option("--N", br_N, "number of blocks")->required();

    auto* hs = app.add_subcommand("hypersurface-search", "search product sets for R = 0");
    u64 hs_q = 0, hs_budget = 1000000;
    unsigned hs_N = 1;
    std::string hs_classes = "full", hs_mode = "block-solve";
    hs->add_option("--q", hs_q, "field size")->required();
    hs->add_option("--N", hs_N, "number of blocks")->required();
    hs->add_option("--classes", hs_classes, "full | random:SIZE | traces:a1,...");
    hs->add_option("--budget", hs_budget, "evaluation/solve budget");
    hs->add_option("--mode", hs_mode, "block-solve | lexicographic");

    // acceptance
    auto* ac = app.add_subcommand("acceptance", "run the acceptance criteria");
    std::string ac_filter;
    bool ac_inject = false;
    ac->add_option("--filter", ac_filter, "run only criteria matching this id or tag");
    ac->add_flag("--inject-failure", ac_inject, "self-test: force criterion 1 to fail");

    // Global options may appear before or after the subcommand name.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        // Formal dispatch record: every run flows through a validated config.
        ExperimentConfig cfg;
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.seed = g.seed;
        cfg.output_format = g.format;
        cfg.workers = g.workers;
        validate(cfg);

        if (cn->parsed())
            return cmd_class_number(g, cn_disc, cn_fund, cn_f, cn_verbose);
        if (isz->parsed())
            return cmd_isogeny_size(g, is_q, is_a, is_n, false);
        if (imem->parsed())
            return cmd_isogeny_size(g, im_q, im_a, 1, true);
        if (census->parsed())
            return cmd_curve_census(g, cc_q);
        if (ss->parsed())
            return cmd_supersingular(g, ss_p);
        if (wc->parsed())
            return cmd_weil_census(g, wc_g, wc_q, wc_ord);
        if (wsc->parsed())
            return cmd_weil_scaling(g, ws_g, ws_qs);
        if (cd->parsed())
            return cmd_cm_density(g, cd_poly, cd_q, cd_nmax, cd_digits);
        if (ci->parsed())
            return cmd_cm_independence(g, ci_poly, ci_q, ci_bound, ci_tol, ci_digits);
        if (dr->parsed())
            return cmd_disc_report(g, dr_poly, dr_q, dr_n);
        if (sp->parsed())
            return cmd_sumprod(g, sp_q, sp_set);
        if (rz->parsed())
            return cmd_ruzsa_sweep(g, rz_trials);
        if (dp->parsed())
            return cmd_dotprod_check(g, dp_q, dp_n, dp_trials);
        if (br->parsed())
            return cmd_build_r(g, br_N);
        if (hs->parsed())
            return cmd_hypersurface_search(g, hs_q, hs_N, hs_classes, hs_budget, hs_mode);
        if (ac->parsed())
            return cmd_acceptance(g, ac_filter, ac_inject);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitViolation;
    }
    return kExitUsage;
}
