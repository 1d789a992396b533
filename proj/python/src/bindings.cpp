// Python bindings: a functional facade over the core library. Sets are plain
// lists of element indices plus the field size q; big integers cross the
// boundary as exact Python ints.

#include "isoclass/acceptance.hpp"
#include "isoclass/addcomb.hpp"
#include "isoclass/class_groups.hpp"
#include "isoclass/cm_analytics.hpp"
#include "isoclass/ec_isogeny.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace isoclass;

namespace {

py::object to_py_int(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(const py::object& o) {
    return mpz_class(py::str(o).cast<std::string>(), 10);
}

ZPoly poly_from_list(const std::vector<py::object>& ascending) {
    ZPoly p;
    for (const auto& c : ascending)
        p.push_back(to_mpz(c));
    return p;
}

Field field_for(u64 q) {
    const auto [p, k] = prime_power_split(q);
    return Field::make(p, k);
}

GroundSet set_for(const Field& F, const std::vector<u64>& indices) {
    return make_ground_set(F, indices);
}

WeilPolynomialRecord record_for(const std::vector<py::object>& ascending, u64 q) {
    return make_weil_record(poly_from_list(ascending), q);
}

py::dict weil_record_dict(const WeilPolynomialRecord& rec) {
    py::dict d;
    d["g"] = rec.g;
    d["q"] = rec.q;
    py::list coeffs;
    for (const auto& c : rec.coeffs)
        coeffs.append(to_py_int(c));
    d["coeffs"] = coeffs;
    py::list slopes;
    for (const auto& s : rec.newton_slopes)
        slopes.append(s.get_str());
    d["newton_slopes"] = slopes;
    d["ordinary"] = rec.ordinary;
    return d;
}

py::dict profile_dict(const WeilRootProfile& prof) {
    py::dict d;
    d["g"] = prof.record.g;
    d["q"] = prof.record.q;
    d["precision_digits"] = prof.precision_digits;
    d["angles"] = prof.angles;
    d["angle_strings"] = prof.angle_str;
    d["root_re"] = prof.root_re;
    d["root_im"] = prof.root_im;
    d["multiplicity"] = prof.multiplicity;
    d["degenerate"] = prof.degenerate;
    d["degenerate_reason"] = prof.degenerate_reason;
    return d;
}

SetOp parse_op(const std::string& op) {
    if (op == "sum")
        return SetOp::sum;
    if (op == "difference")
        return SetOp::difference;
    if (op == "product")
        return SetOp::product;
    if (op == "shifted_product")
        return SetOp::shifted_product;
    throw std::invalid_argument("op must be sum, difference, product, or shifted_product");
}

SearchMode parse_mode(const std::string& mode) {
    if (mode == "block-solve")
        return SearchMode::block_solve;
    if (mode == "lexicographic")
        return SearchMode::lexicographic;
    throw std::invalid_argument("mode must be block-solve or lexicographic");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "isogeny classes, Weil polynomials, and additive combinatorics over finite fields";

    // ---- class numbers -----------------------------------------------------
    m.def("class_number_forms", &class_number_forms, py::arg("disc"),
          "Class number by counting reduced primitive binary quadratic forms.");
    m.def("class_number_order", &class_number_order, py::arg("fundamental"), py::arg("conductor"),
          "Class number of the order of the given conductor via the standard formula.");
    m.def("is_fundamental_discriminant", &is_fundamental_discriminant, py::arg("disc"));

    // ---- isogeny classes ---------------------------------------------------
    m.def("isogeny_class_size", &isogeny_class_size, py::arg("trace"), py::arg("q"),
          py::arg("n") = 1, "Number of curves isogenous over F_{q^n} to one with this trace.");
    m.def(
        "isogeny_class_summary",
        [](i64 a, u64 q, unsigned n, bool with_members) {
            const IsogenyClassSummary s = isogeny_class_summary(a, q, n);
            py::dict d;
            d["q"] = s.base.q;
            d["trace"] = s.base.a;
            d["fundamental"] = s.base.D_K;
            d["f1"] = s.base.f1;
            d["ordinary"] = s.base.ordinary;
            d["n"] = s.n;
            d["a_n"] = to_py_int(s.a_n);
            d["f_n"] = s.f_n;
            d["size"] = s.size;
            if (with_members)
                d["members"] = isogeny_class_members(q, a);
            return d;
        },
        py::arg("trace"), py::arg("q"), py::arg("n") = 1, py::arg("with_members") = false);
    m.def(
        "curve_census",
        [](u64 q, unsigned workers) {
            py::dict d;
            for (const auto& [trace, count] : enumerate_curves_by_trace(q, workers))
                d[py::int_(trace)] = count;
            return d;
        },
        py::arg("q"), py::arg("workers") = 1,
        "Exhaustive curve counts keyed by Frobenius trace.");
    m.def("supersingular_j_invariants", &supersingular_j_invariants, py::arg("p"),
          "Indices of the supersingular j-invariants in F_{p^2}.");

    // ---- Weil polynomials --------------------------------------------------
    m.def(
        "weil_status",
        [](const std::vector<py::object>& coeffs, u64 q) {
            return std::string(to_string(weil_status(poly_from_list(coeffs), q)));
        },
        py::arg("coeffs_ascending"), py::arg("q"),
        "Exact verdict: weil, bad_shape, functional_equation_violation, or off_circle_roots.");
    m.def(
        "weil_census",
        [](unsigned g, u64 q, bool ordinary_only, unsigned workers) {
            py::list out;
            for (const auto& rec : enumerate_weil_polynomials(g, q, ordinary_only, workers))
                out.append(weil_record_dict(rec));
            return out;
        },
        py::arg("g"), py::arg("q"), py::arg("ordinary_only") = false, py::arg("workers") = 1);
    m.def(
        "weil_scaling",
        [](unsigned g, const std::vector<u64>& qs, unsigned workers) {
            const CensusScaling s = census_scaling(g, qs, workers);
            py::dict d;
            py::list pts;
            for (const auto& p : s.points) {
                py::dict e;
                e["q"] = p.q;
                e["total"] = p.total;
                e["ordinary"] = p.ordinary;
                pts.append(e);
            }
            d["g"] = s.g;
            d["points"] = pts;
            d["slope_total"] = s.slope_total;
            d["slope_ordinary"] = s.slope_ordinary;
            d["target"] = s.target;
            return d;
        },
        py::arg("g"), py::arg("q_list"), py::arg("workers") = 1);

    // ---- root profiles and densities ---------------------------------------
    m.def(
        "root_profile",
        [](const std::vector<py::object>& coeffs, u64 q, unsigned digits) {
            return profile_dict(weil_root_profile(record_for(coeffs, q), digits));
        },
        py::arg("coeffs_ascending"), py::arg("q"), py::arg("digits") = 40);
    m.def(
        "positivity_density",
        [](const std::vector<py::object>& coeffs, u64 q, u64 n_max, unsigned workers) {
            const WeilRootProfile prof = weil_root_profile(record_for(coeffs, q));
            py::gil_scoped_release release;
            return positivity_density(prof, n_max, workers);
        },
        py::arg("coeffs_ascending"), py::arg("q"), py::arg("n_max") = 100000,
        py::arg("workers") = 1);
    m.def(
        "angle_independence",
        [](const std::vector<py::object>& coeffs, u64 q, long bound, double tol) {
            const IndependenceVerdict v =
                multiplicative_independence_heuristic(weil_root_profile(record_for(coeffs, q)),
                                                      bound, tol);
            py::dict d;
            d["independent"] = v.independent;
            d["witness"] = v.witness;
            d["min_combination"] = v.value;
            d["coefficient_bound"] = v.coefficient_bound;
            d["tolerance"] = v.tolerance;
            return d;
        },
        py::arg("coeffs_ascending"), py::arg("q"), py::arg("bound") = 20,
        py::arg("tol") = 1e-9);
    m.def(
        "discriminant_report",
        [](const std::vector<py::object>& coeffs, u64 q, unsigned n) {
            const DiscriminantReport r = discriminant_report(record_for(coeffs, q), n);
            py::dict d;
            d["g"] = r.g;
            d["q"] = r.q;
            d["n"] = r.n;
            d["Q"] = to_py_int(r.Q);
            d["disc_power"] = to_py_int(r.disc_power);
            d["disc_trace"] = to_py_int(r.disc_trace);
            d["q_power_factor"] = to_py_int(r.q_power_factor);
            d["circle_term"] = to_py_int(r.circle_term);
            d["exact_identity_holds"] = r.exact_identity_holds;
            d["observed_ratio_exponent"] = r.observed_ratio_exponent;
            d["unit_circle_factor"] = r.unit_circle_factor;
            d["unit_circle_bound"] = r.unit_circle_bound;
            d["polar_disc_power"] = r.polar_disc_power;
            d["polar_disc_trace"] = r.polar_disc_trace;
            d["polar_rel_err_power"] = r.polar_rel_err_power;
            d["polar_rel_err_trace"] = r.polar_rel_err_trace;
            d["degenerate"] = r.degenerate;
            return d;
        },
        py::arg("coeffs_ascending"), py::arg("q"), py::arg("n"));

    // ---- additive combinatorics --------------------------------------------
    m.def(
        "set_op",
        [](u64 q, const std::vector<u64>& A, const std::vector<u64>& B, const std::string& op) {
            const Field F = field_for(q);
            return set_op(set_for(F, A), set_for(F, B), parse_op(op)).elems;
        },
        py::arg("q"), py::arg("A"), py::arg("B"), py::arg("op"),
        "Image of a set pair under sum, difference, product, or shifted_product.");
    m.def(
        "sum_product_stats",
        [](u64 q, const std::vector<u64>& A) {
            const Field F = field_for(q);
            const SumProductStats st = sum_product_stats(set_for(F, A));
            py::dict d;
            d["size"] = st.size;
            d["sum_size"] = st.sum_size;
            d["prod_size"] = st.prod_size;
            d["shifted_size"] = st.shifted_size;
            d["sum_exponent"] = st.sum_exponent;
            d["prod_exponent"] = st.prod_exponent;
            d["shifted_exponent"] = st.shifted_exponent;
            d["max_exponent"] = st.max_exponent;
            return d;
        },
        py::arg("q"), py::arg("A"));
    m.def(
        "expander_image",
        [](u64 q, const std::vector<u64>& A, const std::vector<u64>& B, const std::vector<u64>& C,
           int shift) {
            const Field F = field_for(q);
            return expander_image(set_for(F, A), set_for(F, B), set_for(F, C), shift).elems;
        },
        py::arg("q"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("shift") = 0);
    m.def(
        "subfield_concentration",
        [](u64 q, const std::vector<u64>& A, unsigned d) {
            const Field F = field_for(q);
            return subfield_concentration(set_for(F, A), d);
        },
        py::arg("q"), py::arg("A"), py::arg("d"));
    m.def(
        "ruzsa_sweep_cyclic",
        [](u64 trials, u64 max_modulus, u64 seed) {
            py::gil_scoped_release release;
            const RuzsaSweepResult r = ruzsa_sweep_cyclic(trials, max_modulus, seed);
            return std::make_pair(r.trials, r.violations);
        },
        py::arg("trials"), py::arg("max_modulus") = 64, py::arg("seed") = 0);
    m.def(
        "ruzsa_sweep_multiplicative",
        [](u64 trials, u64 max_q, u64 seed) {
            py::gil_scoped_release release;
            const RuzsaSweepResult r = ruzsa_sweep_multiplicative(trials, max_q, seed);
            return std::make_pair(r.trials, r.violations);
        },
        py::arg("trials"), py::arg("max_q") = 64, py::arg("seed") = 0);
    m.def(
        "check_dot_product_bound",
        [](u64 q, unsigned n, const std::vector<std::vector<u64>>& A,
           const std::vector<std::vector<u64>>& B) {
            const Field F = field_for(q);
            const DotProductCheck c = check_dot_product_bound(A, B, F, n);
            py::dict d;
            d["avoids"] = c.avoids;
            d["product"] = to_py_int(c.product);
            d["bound"] = to_py_int(c.bound);
            d["holds"] = c.holds;
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("A"), py::arg("B"));
    m.def(
        "dot_product_sweep",
        [](u64 q, unsigned n, u64 trials, u64 seed) {
            const Field F = field_for(q);
            py::gil_scoped_release release;
            const RuzsaSweepResult r = dot_product_sweep(F, n, trials, seed);
            return std::make_pair(r.trials, r.violations);
        },
        py::arg("q"), py::arg("n"), py::arg("trials"), py::arg("seed") = 0);
    m.def(
        "distinct_pair_products",
        [](u64 q, const std::vector<u64>& A) {
            const Field F = field_for(q);
            const PairProductCount c = distinct_pair_products(set_for(F, A));
            py::dict d;
            d["pairs_with_repetition"] = c.pairs_with_repetition;
            d["distinct_products"] = c.distinct_products;
            d["all_distinct"] = c.all_distinct;
            return d;
        },
        py::arg("q"), py::arg("A"));

    // ---- the structured hypersurface ----------------------------------------
    m.def(
        "hypersurface_info",
        [](unsigned N) {
            const StructuredHypersurface H = build_hypersurface(N);
            py::dict d;
            d["N"] = H.N;
            d["arity"] = H.arity;
            d["factor_count"] = H.shift_vectors.size();
            return d;
        },
        py::arg("N"));
    m.def(
        "evaluate_R",
        [](u64 q, unsigned N, const std::vector<u64>& x)
            -> std::pair<u64, std::optional<std::vector<int>>> {
            const Field F = field_for(q);
            const StructuredHypersurface H = build_hypersurface(N);
            std::vector<FieldElement> xs;
            xs.reserve(x.size());
            for (u64 idx : x) {
                if (idx >= F.q())
                    throw std::invalid_argument("coordinate index out of range");
                xs.push_back(F.from_index(idx));
            }
            const HypersurfaceValue v = evaluate_R(H, xs);
            return {F.index(v.value), v.vanishing_c};
        },
        py::arg("q"), py::arg("N"), py::arg("x"),
        "Returns (value_index, vanishing_shift_vector_or_None).");
    m.def(
        "hypersurface_search",
        [](u64 q, unsigned N, const std::vector<std::vector<u64>>& classes, u64 budget,
           const std::string& mode, u64 seed, unsigned workers) {
            const Field F = field_for(q);
            const StructuredHypersurface H = build_hypersurface(N);
            std::vector<GroundSet> sets;
            sets.reserve(classes.size());
            for (const auto& c : classes)
                sets.push_back(set_for(F, c));
            SearchReport rep;
            {
                py::gil_scoped_release release;
                rep = hypersurface_search(sets, H, budget, parse_mode(mode), seed, workers);
            }
            py::dict d;
            d["found"] = rep.found;
            d["witness"] = rep.witness;
            d["vanishing_c"] = rep.vanishing_c;
            d["evaluations"] = rep.evaluations;
            d["fraction_searched"] = rep.fraction_searched;
            return d;
        },
        py::arg("q"), py::arg("N"), py::arg("classes"), py::arg("budget"),
        py::arg("mode") = "block-solve", py::arg("seed") = 0, py::arg("workers") = 1);
    m.def(
        "isogeny_class_members",
        [](u64 q, i64 a) { return isogeny_class_members(q, a); }, py::arg("q"), py::arg("trace"),
        "Sorted j-invariant indices of the curves in the isogeny class of the trace.");

    // ---- acceptance ----------------------------------------------------------
    m.def(
        "acceptance",
        [](const std::string& filter, unsigned workers) {
            AcceptanceOptions opts;
            opts.filter = filter;
            opts.workers = workers;
            std::vector<AcceptanceResult> results;
            {
                py::gil_scoped_release release;
                results = acceptance_suite(opts);
            }
            py::list out;
            for (const auto& r : results) {
                py::dict d;
                d["number"] = r.number;
                d["id"] = r.id;
                d["tags"] = r.tags;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        py::arg("filter") = "", py::arg("workers") = 1,
        "Run the acceptance criteria (optionally filtered) and report results.");
}
