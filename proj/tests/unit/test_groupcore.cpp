#include <doctest.h>

#include "gqlab/errors.hpp"
#include "gqlab/field.hpp"
#include "gqlab/group.hpp"
#include "gqlab/numtheory.hpp"

using namespace gqlab;

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

TEST_CASE("field axioms for small orders") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u}) {
        GaloisField F(q);
        CHECK(F.order() == q);
        for (GaloisField::Elem a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, q) == a);
        }
        auto w = F.primitive_element();
        std::uint32_t ord = 1;
        for (auto x = w; x != 1; x = F.mul(x, w)) ++ord;
        CHECK(ord == q - 1);
    }
    CHECK(code_of([] { GaloisField F(6); }) == ErrorCode::InvalidFieldOrder);
    CHECK(code_of([] { GaloisField F(1); }) == ErrorCode::InvalidFieldOrder);
}

TEST_CASE("number theory helpers") {
    CHECK(nt::is_prime(1000000007ULL));
    CHECK_FALSE(nt::is_prime(561));
    auto pp = nt::prime_power(3125);
    REQUIRE(pp);
    CHECK(pp->first == 5);
    CHECK(pp->second == 5);
    CHECK_FALSE(nt::prime_power(12));
    CHECK(nt::prime_power(999999999989ULL).has_value());
    CHECK(nt::isqrt(99) == 9);
    CHECK(nt::primitive_root(13) == 2);
    CHECK(nt::mulmod(nt::invmod(7, 101), 7, 101) == 1);
}

TEST_CASE("heisenberg group structure") {
    for (std::uint32_t q : {3u, 5u, 9u}) {
        auto G = heisenberg_group(q);
        CHECK(G.order() == q * q * q);
        CHECK_FALSE(G.is_abelian());
        auto Z = center(G);
        CHECK(Z.size() == q);
        CHECK(derived_subgroup(G) == Z);
        auto cd = class_data(G);
        CHECK(cd.class_count() == q * q + q - 1);
        CHECK(cd.coset_count == q * q);
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < cd.class_count(); ++i) {
            total += cd.classes[i].size();
            CHECK(cd.centralizer_orders[i] * cd.classes[i].size() == G.order());
        }
        CHECK(total == G.order());
    }
}

TEST_CASE("commutator and conjugate conventions") {
    auto G = heisenberg_group(3);
    for (Element a = 0; a < G.order(); a += 5)
        for (Element b = 0; b < G.order(); b += 7) {
            Element lhs = G.commutator(a, b);
            Element rhs = G.multiply(G.multiply(G.inverse(a), G.inverse(b)), G.multiply(a, b));
            CHECK(lhs == rhs);
            CHECK(G.multiply(b, G.conjugate(a, b)) == G.multiply(a, b));
        }
}

TEST_CASE("elementary abelian and cyclic") {
    auto E = elementary_abelian(2, 6);
    CHECK(E.order() == 64);
    CHECK(E.is_abelian());
    CHECK(is_elementary_abelian(E));
    CHECK(class_data(E).class_count() == 64);
    auto C = cyclic_group(12);
    CHECK(C.exponent() == 12);
    CHECK_FALSE(is_elementary_abelian(C));
    CHECK(C.element_order(1) == 12);
}

TEST_CASE("extraspecial central product with C4") {
    for (auto kind : {ExtraspecialKind::Plus, ExtraspecialKind::Minus}) {
        auto G = extraspecial_central_c4(2, kind);
        CHECK(G.order() == 64);
        CHECK(center(G).size() == 4);
        CHECK(derived_subgroup(G).size() == 2);
        CHECK(frattini_p_group(G).size() == 2);
        CHECK(G.exponent() == 4);
    }
}

TEST_CASE("quotient by the center") {
    auto G = heisenberg_group(3);
    auto Z = center(G);
    auto Q = quotient(G, Z);
    CHECK(Q.group.order() == 9);
    CHECK(is_elementary_abelian(Q.group));
    for (Element a = 0; a < G.order(); ++a)
        for (Element b = 0; b < G.order(); b += 4)
            CHECK(Q.projection[G.multiply(a, b)] == Q.group.multiply(Q.projection[a], Q.projection[b]));
}

TEST_CASE("normality witness") {
    auto G = heisenberg_group(3);
    auto Z = center(G);
    Element a = 1;
    while (Z.contains(a)) ++a;
    auto A = subgroup_closure(G, {a});
    REQUIRE(A.size() == 3);
    auto w = normality_witness(A);
    REQUIRE(w);
    CHECK_FALSE(A.contains(G.conjugate(w->first, w->second)));
    CHECK_FALSE(normality_witness(Z));
    CHECK(code_of([&] { quotient(G, A); }) == ErrorCode::NotNormal);
}

TEST_CASE("invalid tables are rejected") {
    // 0 is not an identity
    std::vector<Element> bad{1, 0, 0, 1};
    CHECK(code_of([&] { FiniteGroup::from_table(2, bad, "bad"); }) == ErrorCode::NoIdentity);
    // x*y = x - y mod 3 style table: identity-less and non-associative
    std::vector<Element> loop{0, 1, 2, 1, 2, 1, 2, 0, 0};
    auto c = code_of([&] { FiniteGroup::from_table(3, loop, "loop"); });
    CHECK((c == ErrorCode::NonAssociative || c == ErrorCode::NoInverse || c == ErrorCode::NoIdentity));
}

TEST_CASE("group json round trip") {
    auto G = heisenberg_group(5);
    auto H = group_from_json(group_to_json(G, true));
    CHECK(H.order() == 125);
    for (Element a = 0; a < 125; a += 3)
        for (Element b = 0; b < 125; b += 11) CHECK(H.multiply(a, b) == G.multiply(a, b));
}
