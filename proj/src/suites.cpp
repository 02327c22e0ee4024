#include "gqlab/suites.hpp"

#include <functional>

#include "gqlab/characters.hpp"
#include "gqlab/errors.hpp"
#include "gqlab/geometry.hpp"
#include "gqlab/group_ring.hpp"
#include "gqlab/kantor.hpp"

namespace gqlab {

namespace {

nlohmann::json error_json(const Error& e) {
    return {{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", e.witness()}};
}

// Runs one check; library errors become a failed check carrying the error.
void run_check(SuiteReport& rep, const std::string& name, const std::function<CheckResult()>& body) {
    try {
        CheckResult c = body();
        c.name = name;
        rep.checks.push_back(std::move(c));
    } catch (const Error& e) {
        rep.checks.push_back({name, false, error_json(e)});
    }
}

void append(SuiteReport& into, const SuiteReport& from) {
    for (const auto& c : from.checks) into.checks.push_back({from.suite + "." + c.name, c.pass, c.report});
}

bool linear_rows_zero(const Certificate& c, const CharacterTable& t) {
    for (std::size_t i = 0; i < t.linear_count && i < c.multiplicities.size(); ++i)
        if (c.multiplicities[i] != 0) return false;
    return true;
}

}  // namespace

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"report", c.report}});
    return {{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"kantor", "algebra", "characters", "geometry", "all"};
    return names;
}

SuiteReport kantor_suite(const KantorFamily& f, const SuiteOptions& opt) {
    SuiteReport rep{"kantor", {}};
    bool axioms = false;
    run_check(rep, "kantor_axioms", [&] {
        auto r = verify_kantor_axioms(f, opt.jobs);
        axioms = r.pass;
        return CheckResult{"", r.pass, to_json(r)};
    });
    if (!axioms) return rep;
    run_check(rep, "coset_geometry", [&] {
        auto cg = coset_geometry(f);
        auto ax = verify_gq_axioms(cg.gq);
        const std::uint64_t s = f.s, t = f.t;
        std::uint64_t want_points = (1 + s) * (1 + s * t), want_lines = (1 + t) * (1 + s * t);
        bool counts = cg.gq.num_points() == want_points && cg.gq.num_lines() == want_lines;
        return CheckResult{"", ax.pass && counts,
                           {{"axioms", to_json(ax)}, {"points", cg.gq.num_points()}, {"lines", cg.gq.num_lines()},
                            {"expected_points", want_points}, {"expected_lines", want_lines}}};
    });
    run_check(rep, "stgq_structure", [&] {
        auto st = stgq_structure(f);
        return CheckResult{"", true,
                           {{"U0_order", st.U0.size()}, {"normal", st.normal}, {"order_s", st.order_s}, {"factorizes", st.factorizes},
                            {"is_stgq", st.is_stgq}, {"quotient_elementary_abelian", st.quotient_elem_abelian}}};
    });
    run_check(rep, "star_coset_equality", [&] {
        auto r = star_coset_equality_check(f);
        return CheckResult{"", r.pass, {{"status", to_string(r.status)}, {"equality_holds", r.equality_holds}, {"per_member", r.per_member}}};
    });
    return rep;
}

SuiteReport algebra_suite(const KantorFamily& f, const SuiteOptions& opt) {
    SuiteReport rep{"algebra", {}};
    bool ran = false;
    run_check(rep, "delta_identities", [&] {
        auto reps = verify_fourdim_algebra(f, opt.jobs);
        ran = true;
        bool ok = true;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reps) {
            ok = ok && r.pass;
            arr.push_back(to_json(r));
        }
        return CheckResult{"", ok, arr};
    });
    if (!ran) return rep;
    run_check(rep, "span_closure", [&] {
        auto r = fourdim_span_closure(f);
        return CheckResult{"", r.pass, {{"products", r.products}, {"detail", r.detail}}};
    });
    return rep;
}

SuiteReport characters_suite(const KantorFamily& f, const SuiteOptions& opt) {
    SuiteReport rep{"characters", {}};
    std::optional<CharacterTable> table;
    ClassData cd;
    run_check(rep, "character_table", [&] {
        cd = class_data(f.group);
        table = character_table(f.group, cd);
        auto o = check_orthogonality(*table);
        return CheckResult{"", o.pass(),
                           {{"classes", table->classes.class_count()}, {"linear", table->linear_count}, {"degrees", table->degrees},
                            {"prime", table->prime}, {"rows_ok", o.rows_ok}, {"columns_ok", o.columns_ok}, {"degrees_ok", o.degrees_ok}}};
    });
    if (!table) return rep;
    for (const char* which : {"chi_S", "chi_T"}) {
        run_check(rep, std::string(which) + "_character", [&] {
            ClassFunction cf = std::string(which) == "chi_S" ? chi_S(f, cd) : chi_T(f, cd);
            auto cert = certify_character(cf, *table, opt.jobs);
            bool lin0 = linear_rows_zero(cert, *table);
            auto j = to_json(cert);
            j["degree"] = to_json(cf.values[0]);
            j["linear_multiplicities_zero"] = lin0;
            return CheckResult{"", cert.is_character && lin0, j};
        });
    }
    run_check(rep, "linear_values_on_delta", [&] {
        auto recs = linear_values_on_delta(f, *table);
        bool ok = true;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : recs) {
            ok = ok && r.ok;
            arr.push_back({{"row", r.row}, {"principal", r.principal}, {"chi_delta", r.chi_delta}, {"chi_delta_star", r.chi_delta_star},
                           {"u", r.u}, {"u_star", r.u_star}, {"ok", r.ok}});
        }
        return CheckResult{"", ok, arr};
    });
    run_check(rep, "nonlinear_divisibility", [&] {
        auto r = nonlinear_divisibility_check(f, *table);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : r.records) {
            nlohmann::json mult = nlohmann::json::array();
            for (const auto& m : x.eigen_multiplicities) mult.push_back(rational_to_string(m));
            nlohmann::json e = {{"row", x.row}, {"degree", x.degree}, {"chi_S", rational_to_string(x.chi_S)}, {"chi_T", rational_to_string(x.chi_T)},
                                {"eigen_multiplicities", mult}, {"annihilated", x.annihilated}, {"ok", x.ok}};
            if (x.omega) e["omega"] = rational_to_string(*x.omega);
            if (x.z) e["z"] = rational_to_string(*x.z);
            arr.push_back(e);
        }
        return CheckResult{"", r.pass, arr};
    });
    return rep;
}

SuiteReport geometry_suite(const KantorFamily& f, const SuiteOptions& opt) {
    SuiteReport rep{"geometry", {}};
    std::optional<CosetGeometry> cg;
    std::optional<DerivedQuadrangle> derived;
    std::optional<AutomorphismAction> act;
    run_check(rep, "regular_point", [&] {
        cg = coset_geometry(f);
        bool reg = is_regular_point(cg->gq, cg->infinity);
        return CheckResult{"", reg, {{"point", cg->infinity}, {"regular", reg}}};
    });
    if (!cg) return rep;
    run_check(rep, "payne_derivation", [&] {
        derived = payne_derive(cg->gq, cg->infinity);
        auto ax = verify_gq_axioms(derived->gq);
        return CheckResult{"", ax.pass,
                           {{"axioms", to_json(ax)}, {"points", derived->gq.num_points()}, {"lines", derived->gq.num_lines()},
                            {"s", derived->gq.s()}, {"t", derived->gq.t()}}};
    });
    run_check(rep, "point_regular_action", [&] {
        act = right_regular_action(f);
        auto r = verify_action(*act);
        return CheckResult{"", r.pass && act->point_regular, to_json(r)};
    });
    if (act) {
        const auto& a = *act;
        const std::uint32_t s = a.gq.s(), t = a.gq.t();
        run_check(rep, "delta_identity", [&] {
            auto d = delta_set(a, a.base);
            auto r = verify_cayley_delta_identity(a.group, GroupRingElement::from_set(a.group, d), s, t);
            bool size_ok = d.size() == static_cast<std::size_t>(s) * (t + 1);
            auto j = to_json(r);
            j["delta_size"] = d.size();
            return CheckResult{"", r.pass && size_ok, j};
        });
        run_check(rep, "benson", [&] {
            bool ok = true;
            nlohmann::json arr = nlohmann::json::array();
            for (Element g = 1; g < a.group.order(); ++g) {
                auto r = benson_check(a, g);
                ok = ok && r.pass;
                arr.push_back(to_json(r));
            }
            return CheckResult{"", ok, arr};
        });
        run_check(rep, "l2_bound", [&] {
            bool ok = true;
            nlohmann::json arr = nlohmann::json::array();
            for (Element g = 1; g < a.group.order(); ++g) {
                if (a.group.multiply(g, g) == 0) continue;
                auto r = l2_bound_check(a, g);
                ok = ok && r.pass;
                arr.push_back(to_json(r));
            }
            return CheckResult{"", ok, arr};
        });
        run_check(rep, "cycle_structure", [&] {
            bool ok = true;
            nlohmann::json arr = nlohmann::json::array();
            for (Element g = 1; g < a.group.order(); ++g) {
                if (a.group.multiply(g, g) == 0) continue;
                auto r = cycle_structure_check(a, g);
                ok = ok && r.pass;
                arr.push_back(to_json(r));
            }
            return CheckResult{"", ok, arr};
        });
    }
    auto spectral = [&](const std::string& tag, const GeneralizedQuadrangle& gq) {
        run_check(rep, "spectrum_" + tag, [&] {
            auto sp = incidence_spectrum(gq);
            return CheckResult{"", sp.lambda3_ok, to_json(sp)};
        });
        run_check(rep, "mixing_" + tag, [&] {
            auto ms = mixing_suite(gq, opt.seed, opt.mixing_trials);
            std::size_t ok = 0;
            for (const auto& m : ms) ok += m.pass;
            return CheckResult{"", ok == ms.size(), {{"trials", ms.size()}, {"passed", ok}, {"seed", opt.seed}}};
        });
    };
    spectral("coset", cg->gq);
    if (derived) spectral("derived", derived->gq);
    return rep;
}

SuiteReport run_suite(const std::string& name, const KantorFamily& f, const SuiteOptions& opt) {
    if (name == "kantor") return kantor_suite(f, opt);
    if (name == "algebra") return algebra_suite(f, opt);
    if (name == "characters") return characters_suite(f, opt);
    if (name == "geometry") return geometry_suite(f, opt);
    if (name == "all") {
        SuiteReport all{"all", {}};
        auto k = kantor_suite(f, opt);
        append(all, k);
        if (!k.pass()) return all;
        append(all, algebra_suite(f, opt));
        append(all, characters_suite(f, opt));
        if (f.s == f.t) append(all, geometry_suite(f, opt));
        return all;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown suite: " + name);
}

const std::vector<std::string>& scan_names() {
    static const std::vector<std::string> names{"eleven-pairs", "thirtyone", "h0-irred", "sbound1", "imprimitive",
                                                "gl2",          "ggd",       "final",    "prim-pairs"};
    return names;
}

SearchCertificate run_scan(const std::string& name, const ScanOverrides& o) {
    if (name == "eleven-pairs") return eleven_pairs_scan();
    if (name == "thirtyone") return thirtyone_pairs_scan();
    if (name == "h0-irred") return h0_irred_exclusion();
    if (name == "sbound1") return sbound_step1_scan();
    if (name == "imprimitive") return imprimitive_exclusion();
    if (name == "gl2") return gl2_case_check(default_gl2_q_list(o.max_q.value_or(1000)));
    if (name == "ggd") return o.max_pd ? ggd_exclusion_scan(*o.max_pd) : ggd_exclusion_scan();
    if (name == "final") return final_inequality_scan(o.max_q1.value_or(10000), o.max_e.value_or(63));
    if (name == "prim-pairs") return prim_pairs_suite(o.jobs);
    throw Error(ErrorCode::InvalidArgument, "unknown scan: " + name);
}

std::string certificate_file_name(const std::string& scan) { return scan + ".json"; }

}  // namespace gqlab
