#include <doctest.h>

#include "gqlab/characters.hpp"
#include "gqlab/cyclotomic.hpp"
#include "gqlab/errors.hpp"
#include "gqlab/kantor.hpp"

using namespace gqlab;

TEST_CASE("cyclotomic arithmetic") {
    auto F3 = CyclotomicField::get(3);
    CHECK(F3->degree() == 2);
    auto w = Cyclotomic::zeta_power(F3, 1);
    auto sum = Cyclotomic(F3, 1) + w + Cyclotomic::zeta_power(F3, 2);
    CHECK(sum.is_zero());
    CHECK((w * w * w) == Cyclotomic(F3, 1));
    CHECK((w * w.conj()).rational() == 1);
    // Q(zeta_4) and Q(zeta_3) promote to Q(zeta_12)
    auto i = Cyclotomic::zeta_power(CyclotomicField::get(4), 1);
    auto p = i * w;
    CHECK(p.field()->conductor() == 12);
    auto c = p.to_complex();
    CHECK(std::abs(std::abs(c) - 1.0) < 1e-12);
    auto F12 = CyclotomicField::get(12);
    CHECK(F12->degree() == 4);
    CHECK(F12->minimal_polynomial() == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    auto back = cyclotomic_from_json(F12, to_json(p));
    CHECK(back == p);
}

TEST_CASE("character tables of small groups") {
    struct Case {
        FiniteGroup g;
        std::size_t k, linear;
    };
    for (auto& c : {Case{heisenberg_group(3), 11, 9}, Case{elementary_abelian(2, 6), 64, 64},
                    Case{extraspecial_central_c4(2, ExtraspecialKind::Plus), 34, 32}, Case{heisenberg_group(5), 29, 25},
                    Case{cyclic_group(12), 12, 12}}) {
        auto t = character_table(c.g);
        CHECK(t.rows.size() == c.k);
        CHECK(t.linear_count == c.linear);
        CHECK(check_orthogonality(t).pass());
        std::uint64_t sq = 0;
        for (auto d : t.degrees) sq += d * d;
        CHECK(sq == c.g.order());
        for (auto& v : t.rows[0]) CHECK(v == Cyclotomic(v.field(), 1));
    }
}

TEST_CASE("heisenberg(3) nonlinear degrees") {
    auto t = character_table(heisenberg_group(3));
    CHECK(t.degrees[9] == 3);
    CHECK(t.degrees[10] == 3);
    CHECK(t.prime % 3 == 1);
    CHECK(t.prime * t.prime > 4 * 27);
}

TEST_CASE("table size limit") {
    TableOptions opt;
    opt.max_classes = 10;
    bool too_large = false;
    try {
        character_table(heisenberg_group(3), opt);
    } catch (const Error& e) {
        too_large = e.code() == ErrorCode::TooLarge;
    }
    CHECK(too_large);
    opt = {};
    opt.prime_cap = 5;
    bool exhausted = false;
    try {
        character_table(heisenberg_group(3), opt);
    } catch (const Error& e) {
        exhausted = e.code() == ErrorCode::PrimeSearchExhausted;
    }
    CHECK(exhausted);
}

TEST_CASE("chi_S and chi_T are characters for W(3)") {
    auto f = classical_wq_family(3);
    auto cd = class_data(f.group);
    auto t = character_table(f.group, cd);
    auto S = chi_S(f, cd), T = chi_T(f, cd);
    CHECK(S.values[0].rational() == 12);
    CHECK(T.values[0].rational() == 12);
    for (auto* cf : {&S, &T}) {
        auto cert = certify_character(*cf, t);
        CHECK(cert.is_character);
        for (std::size_t i = 0; i < t.linear_count; ++i) CHECK(cert.multiplicities[i] == 0);
        CHECK(cert.multiplicities[9] == 2);
        CHECK(cert.multiplicities[10] == 2);
        CHECK(certify_character(*cf, t, 3).multiplicities == cert.multiplicities);
    }
}

TEST_CASE("W(5) multiplicities") {
    auto f = classical_wq_family(5);
    auto cd = class_data(f.group);
    auto t = character_table(f.group, cd);
    auto S = chi_S(f, cd);
    CHECK(S.values[0].rational() == 60);
    auto cert = certify_character(S, t);
    CHECK(cert.is_character);
    for (std::size_t i = t.linear_count; i < t.rows.size(); ++i) CHECK(cert.multiplicities[i] == 3);
}

TEST_CASE("T2(4): chi_S and chi_T vanish") {
    auto f = t2_oval_family(4);
    auto cd = class_data(f.group);
    for (auto& v : chi_S(f, cd).values) CHECK(v.is_zero());
    for (auto& v : chi_T(f, cd).values) CHECK(v.is_zero());
}

TEST_CASE("constant one half is not a character") {
    auto G = heisenberg_group(3);
    auto cd = class_data(G);
    auto t = character_table(G, cd);
    ClassFunction half{G, {}};
    for (std::size_t i = 0; i < cd.class_count(); ++i) half.values.push_back(Cyclotomic(t.field, mpq_class(1, 2)));
    auto cert = certify_character(half, t);
    CHECK_FALSE(cert.is_character);
    REQUIRE(cert.offending_row);
    CHECK(*cert.offending_row == 0);
    CHECK(cert.multiplicities[0] == mpq_class(1, 2));
}

TEST_CASE("linear values on delta and nonlinear divisibility") {
    for (std::uint32_t q : {3u, 5u}) {
        auto f = classical_wq_family(q);
        auto t = character_table(f.group);
        for (auto& r : linear_values_on_delta(f, t)) CHECK(r.ok);
        auto nl = nonlinear_divisibility_check(f, t);
        CHECK(nl.pass);
        for (auto& r : nl.records) CHECK(r.degree == q);
    }
    for (auto& r : linear_values_on_delta(t2_oval_family(4))) CHECK(r.ok);
}

TEST_CASE("evaluate on group ring coefficients") {
    auto G = heisenberg_group(3);
    auto t = character_table(G);
    std::vector<std::int64_t> all(G.order(), 1);
    // sum over G of a nonprincipal character vanishes
    for (std::size_t r = 1; r < t.rows.size(); ++r) CHECK(evaluate(t, r, all).is_zero());
    CHECK(evaluate(t, 0, all).rational() == 27);
}

TEST_CASE("U0 intersection profile") {
    auto f = classical_wq_family(3);
    auto st = stgq_structure(f);
    for (Element g : st.U0.members()) {
        if (g == 0) continue;
        CHECK(u0_intersection_profile(f, g).profile_holds);
    }
    Element outside = 1;
    while (st.U0.contains(outside)) ++outside;
    bool not_in = false;
    try {
        u0_intersection_profile(f, outside);
    } catch (const Error& e) {
        not_in = e.code() == ErrorCode::NotInU0;
    }
    CHECK(not_in);
}

TEST_CASE("Ott gap is (s+1)/2") {
    for (std::uint64_t s : {4u, 16u, 64u, 256u}) {
        for (std::uint64_t m1 : {1u, 2u, 8u}) {
            auto g = ott_gap_inner_product(s, s - 1, 2 * m1, m1);
            CHECK(g.value == mpq_class(s + 1, 2));
            CHECK_FALSE(g.is_integer);
        }
    }
    bool hyp = false;
    try {
        ott_gap_inner_product(4, 1, 6, 2);
    } catch (const Error& e) {
        hyp = e.code() == ErrorCode::HypothesisViolation;
    }
    CHECK(hyp);
}
