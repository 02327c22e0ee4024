#include <doctest.h>

#include <cmath>

#include "gqlab/errors.hpp"
#include "gqlab/geometry.hpp"
#include "gqlab/kantor.hpp"

using namespace gqlab;

namespace {

// GQ(1,1): the 3x3 grid
GeneralizedQuadrangle grid() {
    std::vector<std::vector<PointId>> lines;
    for (PointId r = 0; r < 3; ++r) lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
    for (PointId c = 0; c < 3; ++c) lines.push_back({c, c + 3, c + 6});
    return GeneralizedQuadrangle(9, lines, 2, 2);
}

}  // namespace

TEST_CASE("axiom checker") {
    auto w = coset_geometry(classical_wq_family(3));
    CHECK(verify_gq_axioms(w.gq).pass);
    // a 3x3 grid has lines of size 3 but point degree 2: not order (2,2)
    auto r = verify_gq_axioms(grid());
    CHECK_FALSE(r.pass);
    CHECK(r.axiom == "point_degree");
    // drop a line
    std::vector<std::vector<PointId>> lines;
    for (LineId l = 1; l < w.gq.num_lines(); ++l) lines.push_back(w.gq.line_points(l));
    auto broken = GeneralizedQuadrangle(w.gq.num_points(), lines, 3, 3);
    CHECK_FALSE(verify_gq_axioms(broken).pass);
}

TEST_CASE("trace and span in W(3)") {
    auto w = coset_geometry(classical_wq_family(3));
    const auto& gq = w.gq;
    PointId x = w.infinity, y = 0;
    while (y == x || gq.collinear(x, y)) ++y;
    auto ts = trace_and_span(gq, x, y);
    CHECK(ts.trace.size() == 4);
    CHECK(ts.span.size() == 4);
    bool same = false;
    try {
        trace_and_span(gq, x, x);
    } catch (const Error& e) {
        same = e.code() == ErrorCode::SamePoint;
    }
    CHECK(same);
    CHECK(is_regular_point(gq, x));
}

TEST_CASE("regularity needs s = t") {
    auto w = coset_geometry(classical_wq_family(3));
    auto d = payne_derive(w.gq, w.infinity);
    bool nso = false;
    try {
        is_regular_point(d.gq, 0);
    } catch (const Error& e) {
        nso = e.code() == ErrorCode::NotSquareOrder;
    }
    CHECK(nso);
}

TEST_CASE("Payne derivation") {
    for (std::uint32_t q : {3u, 5u}) {
        auto w = coset_geometry(classical_wq_family(q));
        auto d = payne_derive(w.gq, w.infinity);
        CHECK(d.gq.s() == q - 1);
        CHECK(d.gq.t() == q + 1);
        CHECK(d.gq.num_points() == q * q * q);
        CHECK(d.gq.num_lines() == (q + 2) * (1 + (q - 1) * (q + 1)));
        CHECK(verify_gq_axioms(d.gq).pass);
    }
}

TEST_CASE("point-regular Heisenberg action on GQ(2,4)") {
    auto f = classical_wq_family(3);
    auto a = right_regular_action(f);
    CHECK(a.gq.num_points() == 27);
    CHECK(a.gq.num_lines() == 45);
    CHECK(a.point_regular);
    CHECK(verify_action(a).pass);
    auto d = delta_set(a, a.base);
    CHECK(d.size() == 10);

    std::size_t non_involutions = 0;
    for (Element g = 1; g < 27; ++g) {
        auto b = benson_check(a, g);
        CHECK(b.pass);
        CHECK(b.residue == 3);
        CHECK(b.residue_target == 3);
        if (f.group.multiply(g, g) == 0) continue;
        ++non_involutions;
        auto l2 = l2_bound_check(a, g);
        CHECK(l2.pass);
        CHECK(std::abs(l2.bound - 9 * (2 + std::sqrt(6.0))) < 1e-9);
        auto c = cycle_structure_check(a, g);
        CHECK(c.degrees_ok);
        CHECK(c.sizes_ok);
        CHECK(c.pass);
    }
    CHECK(non_involutions == 26);
    bool ident = false;
    try {
        benson_check(a, 0);
    } catch (const Error& e) {
        ident = e.code() == ErrorCode::IdentityElement;
    }
    CHECK(ident);
}

TEST_CASE("L2 bound is exact at the boundary") {
    // (1+st)(2+sqrt(s+t)) with s=t=2: 5(2+2) = 20
    CHECK(l2_below_bound(19, 2, 2));
    CHECK_FALSE(l2_below_bound(20, 2, 2));
    // s=2,t=4: 9(2+sqrt 6) = 40.04...
    CHECK(l2_below_bound(40, 2, 4));
    CHECK_FALSE(l2_below_bound(41, 2, 4));
}

TEST_CASE("incidence spectra") {
    auto check = [](const GeneralizedQuadrangle& gq) {
        auto sp = incidence_spectrum(gq);
        double want = std::sqrt(static_cast<double>(gq.s() + gq.t()));
        CHECK(sp.lambda3_ok);
        CHECK(std::abs(sp.lambda3 - want) <= 1e-9 * want);
        CHECK(sp.symmetric);
        CHECK(std::abs(sp.lambda1 - std::sqrt((gq.s() + 1.0) * (gq.t() + 1.0))) < 1e-9);
    };
    auto w3 = coset_geometry(classical_wq_family(3));
    check(w3.gq);
    check(coset_geometry(classical_wq_family(5)).gq);
    check(payne_derive(w3.gq, w3.infinity).gq);
    check(coset_geometry(t2_oval_family(2)).gq);
}

TEST_CASE("mixing inequality") {
    auto w3 = coset_geometry(classical_wq_family(3));
    auto ms = mixing_suite(w3.gq, 99, 50);
    CHECK(ms.size() == 50);
    for (auto& m : ms) CHECK(m.pass);
    // same seed, same draws
    auto again = mixing_suite(w3.gq, 99, 50);
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(ms[i].edges == again[i].edges);
    std::vector<PointId> X{0, 1, 2};
    std::vector<LineId> Y{0, 1};
    auto r = mixing_inequality_check(w3.gq, X, Y);
    CHECK(r.pass);
}
