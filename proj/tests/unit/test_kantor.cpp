#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "gqlab/errors.hpp"
#include "gqlab/geometry.hpp"
#include "gqlab/kantor.hpp"

using namespace gqlab;

namespace {

std::vector<std::vector<Element>> lists(const std::vector<Subgroup>& v) {
    std::vector<std::vector<Element>> out;
    for (const auto& a : v) out.push_back(a.members());
    return out;
}

}  // namespace

TEST_CASE("W(q) families satisfy K1 and K2") {
    for (std::uint32_t q : {3u, 5u, 7u}) {
        auto f = classical_wq_family(q);
        CHECK(f.s == q);
        CHECK(f.t == q);
        CHECK(f.members.size() == q + 1);
        CHECK(verify_kantor_axioms(f).pass);
        CHECK(verify_kantor_axioms(f, 4).pass);
    }
}

TEST_CASE("T2 oval families satisfy K1 and K2") {
    for (std::uint32_t q : {2u, 4u, 8u}) {
        auto f = t2_oval_family(q);
        CHECK(f.s == q);
        CHECK(f.group.order() == q * q * q);
        CHECK(verify_kantor_axioms(f).pass);
    }
    // translation oval x^4 in GF(8)
    CHECK(verify_kantor_axioms(t2_oval_family(8, 4)).pass);
}

TEST_CASE("constructor preconditions") {
    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::SchemaError;
    };
    CHECK(code([] { classical_wq_family(4); }) == ErrorCode::InvalidFieldOrder);
    CHECK(code([] { classical_wq_family(15); }) == ErrorCode::InvalidFieldOrder);
    CHECK(code([] { t2_oval_family(3); }) == ErrorCode::InvalidFieldOrder);
    CHECK(code([] { t2_oval_family(32); }) == ErrorCode::OrderOverflow);
    // x^3 is not an oval in GF(4)
    CHECK(code([] { t2_oval_family(4, 3); }) == ErrorCode::NotAnOval);
}

TEST_CASE("corrupted families fail with a witness") {
    auto f = classical_wq_family(3);
    auto m = lists(f.members), sm = lists(f.star_members);

    // member 1 replaced by a copy of member 2
    auto dup = m, sdup = sm;
    dup[1] = dup[2];
    sdup[1] = sdup[2];
    auto bad1 = make_family(f.group, 3, 3, dup, sdup);
    auto r1 = verify_kantor_axioms(bad1);
    CHECK_FALSE(r1.pass);
    CHECK(r1.axiom == "K1");
    REQUIRE(r1.witness.size() == 4);
    auto [i, j, k, x] = std::tuple(r1.witness[0], r1.witness[1], r1.witness[2], static_cast<Element>(r1.witness[3]));
    CHECK(x != 0);
    CHECK(bad1.members[k].contains(x));
    auto ij = product_set(f.group, bad1.members[i].members(), bad1.members[j].members());
    CHECK(std::binary_search(ij.begin(), ij.end(), x));

    // A_1 replaced by the center, still inside A_1*
    auto zc = m;
    zc[1] = center(f.group).members();
    auto bad2 = make_family(f.group, 3, 3, zc, sm);
    auto r2 = verify_kantor_axioms(bad2);
    CHECK_FALSE(r2.pass);
    CHECK((r2.axiom == "K1" || r2.axiom == "K2"));
    if (r2.axiom == "K2") {
        REQUIRE(r2.witness.size() == 3);
        CHECK(bad2.star_members[r2.witness[0]].contains(static_cast<Element>(r2.witness[2])));
        CHECK(bad2.members[r2.witness[1]].contains(static_cast<Element>(r2.witness[2])));
    }
}

TEST_CASE("containment errors surface as StructureError") {
    auto f = classical_wq_family(3);
    auto m = lists(f.members), sm = lists(f.star_members);
    m[1] = m[2];
    bool structure = false;
    try {
        verify_kantor_axioms(make_family(f.group, 3, 3, m, sm));
    } catch (const Error& e) {
        structure = e.code() == ErrorCode::StructureError;
    }
    CHECK(structure);
}

TEST_CASE("coset geometry is a GQ with the right counts") {
    auto check = [](const KantorFamily& f) {
        auto cg = coset_geometry(f);
        const std::uint64_t s = f.s, t = f.t;
        CHECK(cg.gq.num_points() == (1 + s) * (1 + s * t));
        CHECK(cg.gq.num_lines() == (1 + t) * (1 + s * t));
        CHECK(verify_gq_axioms(cg.gq).pass);
        // right multiplication is an automorphism fixing infinity
        for (Element h : {1u, 7u}) {
            auto [pp, lp] = coset_right_action(f, cg, h);
            CHECK(pp[cg.infinity] == cg.infinity);
            CHECK(pp[cg.element_point(0)] == cg.element_point(h));
            for (LineId l = 0; l < cg.gq.num_lines(); ++l)
                for (PointId p : cg.gq.line_points(l)) CHECK(cg.gq.incident(pp[p], lp[l]));
        }
    };
    for (std::uint32_t q : {3u, 5u, 7u}) check(classical_wq_family(q));
    for (std::uint32_t q : {2u, 4u, 8u}) check(t2_oval_family(q));
}

TEST_CASE("STGQ structure") {
    auto w = stgq_structure(classical_wq_family(3));
    CHECK(w.is_stgq);
    CHECK(w.U0.size() == 3);
    CHECK(w.normal);
    CHECK(w.factorizes);
    auto t = stgq_structure(t2_oval_family(4));
    CHECK(t.is_stgq);
    CHECK(t.quotient_elem_abelian);
}

TEST_CASE("star coset equality statuses") {
    // s | t for W(q): nothing to assert
    CHECK(star_coset_equality_check(classical_wq_family(3)).status == StarCosetStatus::Vacuous);
    auto f = classical_wq_family(3);
    auto sm = lists(f.star_members);
    sm[1] = sm[2];
    auto broken = make_family(f.group, 3, 3, lists(f.members), sm);
    CHECK(star_coset_equality_check(broken).status == StarCosetStatus::NotApplicable);
}

TEST_CASE("family json round trip") {
    auto f = t2_oval_family(4);
    auto g = family_from_json(family_to_json(f));
    CHECK(g.s == 4);
    CHECK(verify_kantor_axioms(g).pass);
    for (std::size_t i = 0; i < f.members.size(); ++i) CHECK(g.members[i].members() == f.members[i].members());
    bool schema = false;
    try {
        family_from_json(nlohmann::json{{"s", 3}});
    } catch (const Error& e) {
        schema = e.code() == ErrorCode::SchemaError;
    }
    CHECK(schema);
}
