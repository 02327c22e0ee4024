#include <doctest.h>

#include <limits>
#include <random>

#include "gqlab/errors.hpp"
#include "gqlab/geometry.hpp"
#include "gqlab/group_ring.hpp"
#include "gqlab/kantor.hpp"

using namespace gqlab;

TEST_CASE("convolution basics") {
    auto G = heisenberg_group(3);
    auto one = GroupRingElement::scalar(G, 1);
    auto all = GroupRingElement::all_ones(G);
    CHECK(one * all == all);
    CHECK(all * all == static_cast<std::int64_t>(G.order()) * all);
    std::mt19937_64 rng(7);
    GroupRingElement x(G), y(G);
    for (Element g = 0; g < G.order(); ++g) {
        x.set(g, static_cast<std::int64_t>(rng() % 7) - 3);
        y.set(g, static_cast<std::int64_t>(rng() % 5) - 2);
    }
    CHECK(gr_multiply(x, y, 1) == gr_multiply(x, y, 4));
    CHECK((x * y).coefficient_sum() == x.coefficient_sum() * y.coefficient_sum());
    CHECK((x * y).involution() == y.involution() * x.involution());
}

TEST_CASE("overflow is detected") {
    auto G = cyclic_group(2);
    auto big = GroupRingElement::scalar(G, std::numeric_limits<std::int64_t>::max() / 2 + 1);
    bool thrown = false;
    try {
        auto z = big + big;
        (void)z;
    } catch (const Error& e) {
        thrown = e.code() == ErrorCode::CoefficientOverflow;
    }
    CHECK(thrown);
}

TEST_CASE("delta identities hold for the shipped families") {
    for (std::uint32_t q : {3u, 5u}) {
        auto f = classical_wq_family(q);
        for (const auto& r : verify_fourdim_algebra(f)) CHECK_MESSAGE(r.pass, r.identity_name);
        CHECK(fourdim_span_closure(f).pass);
        auto d = delta_elements(f);
        CHECK(d.delta.support_size() == (f.t + 1) * (f.s - 1));
        CHECK(d.delta * d.delta_star == d.delta_star * d.delta);
    }
    for (std::uint32_t q : {2u, 4u}) {
        auto f = t2_oval_family(q);
        for (const auto& r : verify_fourdim_algebra(f)) CHECK_MESSAGE(r.pass, r.identity_name);
    }
}

TEST_CASE("S and T elements") {
    auto f = classical_wq_family(3);
    auto st = st_elements(f);
    // sum_i (s A_i + A_i*) and sum_i (t A_i - A_i*)
    CHECK(st.S.coefficient_sum() == 4 * 3 * (3 + 3));
    CHECK(st.T.coefficient_sum() == 0);
    CHECK(st.S[0] == 4 * (3 + 1));
    CHECK(st.T[0] == 4 * (3 - 1));
}

TEST_CASE("compare_elements reports the first differing element") {
    auto G = cyclic_group(5);
    auto a = GroupRingElement::from_set(G, {1, 2});
    auto b = GroupRingElement::from_set(G, {1, 3});
    auto r = compare_elements("demo", a, b);
    CHECK_FALSE(r.pass);
    REQUIRE(r.witness_element);
    CHECK(*r.witness_element == 2);
    CHECK(*r.lhs_coeff == 1);
    CHECK(*r.rhs_coeff == 0);
}

TEST_CASE("Cayley identity: true delta passes, random symmetric sets fail") {
    auto f = classical_wq_family(3);
    auto a = right_regular_action(f);
    auto d = delta_set(a, a.base);
    CHECK(d.size() == 10);
    CHECK(verify_cayley_delta_identity(f.group, GroupRingElement::from_set(f.group, d), 2, 4).pass);

    const auto& G = f.group;
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        // symmetric 10-subset of non-identity elements: pairs {x, x^-1}, x of order 3
        std::vector<Element> pool;
        for (Element x = 1; x < G.order(); ++x)
            if (x < G.inverse(x)) pool.push_back(x);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Element> set;
        for (int i = 0; i < 5; ++i) {
            set.push_back(pool[i]);
            set.push_back(G.inverse(pool[i]));
        }
        std::sort(set.begin(), set.end());
        if (set == d) continue;
        CHECK_FALSE(verify_cayley_delta_identity(G, GroupRingElement::from_set(G, set), 2, 4).pass);
    }
}
