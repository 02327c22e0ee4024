// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gqlab/characters.hpp"
#include "gqlab/errors.hpp"
#include "gqlab/geometry.hpp"
#include "gqlab/group_ring.hpp"
#include "gqlab/kantor.hpp"
#include "gqlab/search.hpp"

using namespace gqlab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::vector<KantorFamily> criterion1_families() {
    std::vector<KantorFamily> fs;
    for (std::uint32_t q : {3u, 5u, 7u}) fs.push_back(classical_wq_family(q));
    for (std::uint32_t q : {2u, 4u, 8u}) fs.push_back(t2_oval_family(q));
    return fs;
}

void kantor_axioms(Outcome& o) {
    for (const auto& f : criterion1_families()) {
        std::string tag = f.group.label();
        o.require(verify_kantor_axioms(f).pass, tag + " K1/K2");
        auto cg = coset_geometry(f);
        const std::uint64_t q = f.s;
        o.require(cg.gq.num_points() == (1 + q) * (1 + q * q), tag + " point count");
        o.require(verify_gq_axioms(cg.gq).pass, tag + " GQ axioms");
    }
    o.detail << "6 families, K1/K2 exhaustive, coset GQs (1+q)(1+q^2) points";
}

void group_ring(Outcome& o) {
    std::size_t n = 0;
    for (const auto& f : criterion1_families())
        for (const auto& r : verify_fourdim_algebra(f)) {
            ++n;
            o.require(r.pass, f.group.label() + " " + r.identity_name);
        }
    o.detail << n << " exact identities over 6 families";
}

void characterhood(Outcome& o) {
    for (std::uint32_t q : {3u, 5u}) {
        auto f = classical_wq_family(q);
        auto cd = class_data(f.group);
        auto t = character_table(f.group, cd);
        for (const char* which : {"S", "T"}) {
            auto cf = std::string(which) == "S" ? chi_S(f, cd) : chi_T(f, cd);
            auto cert = certify_character(cf, t);
            std::string tag = "W(" + std::to_string(q) + ") chi_" + which;
            o.require(cert.is_character, tag + " nonnegative integer multiplicities");
            for (std::size_t i = 0; i < t.linear_count; ++i) o.require(cert.multiplicities[i] == 0, tag + " linear multiplicity");
            if (q == 3) o.require(cf.values[0].is_rational() && cf.values[0].rational() == 12, tag + "(1) = 12");
            o.detail << tag << "(1)=" << cf.values[0].to_string() << " ";
        }
    }
    auto f = t2_oval_family(4);
    auto cd = class_data(f.group);
    for (auto& v : chi_S(f, cd).values) o.require(v.is_zero(), "T2(4) chi_S = 0");
    for (auto& v : chi_T(f, cd).values) o.require(v.is_zero(), "T2(4) chi_T = 0");
    o.detail << "T2(4) chi_S = chi_T = 0";
}

void ott_gap(Outcome& o) {
    std::mt19937_64 rng(20261016);
    for (std::uint64_t s : {4u, 16u, 64u, 256u}) {
        for (int i = 0; i < 100; ++i) {
            std::uint64_t m1 = 1 + rng() % (1u << 20);
            std::uint64_t u = 1 + rng() % (s * s * s);
            auto g = ott_gap_inner_product(s, u, 2 * m1, m1);
            o.require(g.value == mpq_class(static_cast<unsigned long>(s + 1), 2) && !g.is_integer, "s=" + std::to_string(s));
        }
    }
    o.detail << "400 tuples, value (s+1)/2 exactly";
}

void testbed(Outcome& o) {
    auto f = classical_wq_family(3);
    auto cg = coset_geometry(f);
    auto d = payne_derive(cg.gq, cg.infinity);
    o.require(d.gq.s() == 2 && d.gq.t() == 4, "order (2,4)");
    o.require(d.gq.num_points() == 27 && d.gq.num_lines() == 45, "27 points / 45 lines");
    o.require(verify_gq_axioms(d.gq).pass, "derived GQ axioms");
    auto a = right_regular_action(f);
    o.require(a.point_regular && verify_action(a).pass, "point-regular action");
    auto delta = delta_set(a, a.base);
    o.require(delta.size() == 10, "|Delta| = 10");
    o.require(verify_cayley_delta_identity(f.group, GroupRingElement::from_set(f.group, delta), 2, 4).pass, "Delta^2 identity");
    std::size_t benson = 0, l2 = 0, cyc = 0, non_inv = 0;
    for (Element g = 1; g < 27; ++g) {
        auto b = benson_check(a, g);
        benson += b.pass && b.residue == 3 && b.residue_target == 3;
        if (f.group.multiply(g, g) == 0) continue;
        ++non_inv;
        l2 += l2_bound_check(a, g).pass;
        auto c = cycle_structure_check(a, g);
        cyc += c.pass && c.degrees_ok && c.p2_prime == c.l2;
    }
    o.require(benson == 26, "Benson");
    o.require(l2 == non_inv, "L2 bound");
    o.require(cyc == non_inv, "cycle structure");
    o.detail << "27/45, |Delta|=10, Benson " << benson << "/26 (3 mod 6), L2 " << l2 << "/" << non_inv << ", cycles " << cyc << "/" << non_inv;
}

void spectra(Outcome& o) {
    auto w3 = coset_geometry(classical_wq_family(3));
    auto w5 = coset_geometry(classical_wq_family(5));
    auto d = payne_derive(w3.gq, w3.infinity);
    std::vector<std::pair<std::string, const GeneralizedQuadrangle*>> gqs{{"W(3)", &w3.gq}, {"W(5)", &w5.gq}, {"GQ(2,4)", &d.gq}};
    for (auto& [name, gq] : gqs) {
        auto sp = incidence_spectrum(*gq);
        double want = std::sqrt(static_cast<double>(gq->s() + gq->t()));
        o.require(std::abs(sp.lambda3 - want) <= 1e-9 * want, name + " lambda3");
        auto ms = mixing_suite(*gq, 12345, 100);
        std::size_t ok = 0;
        for (auto& m : ms) ok += m.pass;
        o.require(ms.size() == 100 && ok == 100, name + " mixing");
        o.detail << name << " |l3|=" << sp.lambda3 << " mixing " << ok << "/100; ";
    }
}

void scans(Outcome& o) {
    auto stable = [&](const std::string& name, const std::function<SearchCertificate()>& run) {
        auto a = run();
        auto b = run();
        o.require(certificate_dump(a) == certificate_dump(b), name + " byte-stable");
        o.require(!first_bad_trace(a), name + " traces");
        return a;
    };
    auto eleven = stable("eleven_pairs", [] { return eleven_pairs_scan(); });
    bool envelope = true;
    for (const auto& w : eleven.witnesses) envelope = envelope && w["p1"].get<int>() <= 13 && w["l1"].get<int>() <= 5;
    o.require(envelope, "eleven pairs envelope");
    o.require(eleven.count() == 11, "eleven pairs count 11");
    o.require(!eleven.notes.empty(), "side-condition discrepancy logged");
    o.detail << "eleven=" << eleven.count() << " (mod-5 reading " << eleven.parameters["side_condition_count"] << "); ";

    auto th = stable("thirtyone", [] { return thirtyone_pairs_scan(); });
    o.require(th.count() == 31, "thirtyone count");
    o.detail << "thirtyone=" << th.count() << "; ";

    auto h0 = stable("h0_irred", [] { return h0_irred_exclusion(); });
    std::set<std::pair<int, int>> h0set;
    for (const auto& w : h0.witnesses) h0set.emplace(w["p"].get<int>(), w["e"].get<int>());
    o.require(h0set == std::set<std::pair<int, int>>{{5, 3}, {5, 5}, {5, 7}, {5, 9}}, "h0 set");
    o.require(h0.parameters["gcd_checks_pass"] == true, "h0 gcd < 1+s");
    o.detail << "h0 e in {3,5,7,9}; ";

    auto sb = stable("sbound_step1", [] { return sbound_step1_scan(); });
    std::vector<std::string> outside;
    for (const auto& w : sb.witnesses) {
        int p = w["p"].get<int>(), d = w["d"].get<int>();
        bool in = (p == 5 && d <= 10) || (p == 13 && d == 3);
        if (!in) outside.push_back("(" + std::to_string(p) + "," + std::to_string(d) + ")");
    }
    std::string out_list;
    for (auto& s : outside) out_list += s + " ";
    o.require(outside.empty(), "sbound violations outside {(5,d<=10),(13,3)}: " + out_list);
    o.detail << "sbound violations=" << sb.count() << "; ";

    auto im = stable("imprimitive", [] { return imprimitive_exclusion(); });
    o.require(im.count() == 1 && im.witnesses[0]["t"] == 3 && im.witnesses[0]["q"] == 5, "imprimitive {(3,5)}");

    auto fin = stable("final_inequality", [] { return final_inequality_scan(); });
    o.require(fin.pass, "final inequality on the default grid");
    o.detail << "imprimitive {(3,5)}; final grid " << fin.parameters["grid_points"] << " points";
}

void negative_controls(Outcome& o) {
    auto f = classical_wq_family(3);
    std::vector<std::vector<Element>> m, sm;
    for (auto& a : f.members) m.push_back(a.members());
    for (auto& a : f.star_members) sm.push_back(a.members());
    // member 1 duplicated from member 2
    auto m_bad = m, sm_bad = sm;
    m_bad[1] = m_bad[2];
    sm_bad[1] = sm_bad[2];
    auto r1 = verify_kantor_axioms(make_family(f.group, 3, 3, m_bad, sm_bad));
    o.require(!r1.pass && (r1.axiom == "K1" || r1.axiom == "K2") && !r1.witness.empty(), "duplicated member");
    // A_1 swapped for the center, which still lies in A_1*
    auto m_z = m;
    m_z[1] = center(f.group).members();
    auto r2 = verify_kantor_axioms(make_family(f.group, 3, 3, m_z, sm));
    o.require(!r2.pass && (r2.axiom == "K1" || r2.axiom == "K2") && !r2.witness.empty(), "center as a member");

    const auto& G = f.group;
    auto a = right_regular_action(f);
    auto delta = delta_set(a, a.base);
    std::mt19937_64 rng(8);
    std::vector<Element> pool;
    for (Element x = 1; x < G.order(); ++x)
        if (x < G.inverse(x)) pool.push_back(x);
    std::vector<Element> set;
    do {
        std::shuffle(pool.begin(), pool.end(), rng);
        set.clear();
        for (int i = 0; i < 5; ++i) {
            set.push_back(pool[i]);
            set.push_back(G.inverse(pool[i]));
        }
        std::sort(set.begin(), set.end());
    } while (set == delta);
    o.require(!verify_cayley_delta_identity(G, GroupRingElement::from_set(G, set), 2, 4).pass, "random symmetric 10-subset");

    auto cd = class_data(G);
    auto t = character_table(G, cd);
    ClassFunction half{G, {}};
    for (std::size_t i = 0; i < cd.class_count(); ++i) half.values.push_back(Cyclotomic(t.field, mpq_class(1, 2)));
    o.require(!certify_character(half, t).is_character, "constant 1/2");
    o.detail << "corrupted families fail " << r1.axiom << "/" << r2.axiom << ", random subset and constant 1/2 rejected";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double limit_s;  // 0: no runtime bound
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> all{{1, "Kantor axioms", 60, kantor_axioms},
                               {2, "group-ring identities", 0, group_ring},
                               {3, "character-hood", 0, characterhood},
                               {4, "Ott gap", 0, ott_gap},
                               {5, "point-regular testbed", 30, testbed},
                               {6, "spectra", 0, spectra},
                               {7, "arithmetic scans", 300, scans},
                               {8, "negative controls", 0, negative_controls}};
    bool all_pass = true;
    for (auto& c : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.pass = false;
            o.detail << " [runtime " << secs << "s over " << c.limit_s << "s]";
        }
        all_pass = all_pass && o.pass;
        std::cout << "CRITERION " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": " << o.detail.str() << " ("
                  << std::fixed;
        std::cout.precision(2);
        std::cout << secs << "s)" << std::endl;
        std::cout.unsetf(std::ios::fixed);
        std::cout.precision(6);
    }
    return all_pass ? 0 : 1;
}
