#include <doctest.h>

#include "gqlab/errors.hpp"
#include "gqlab/kantor.hpp"
#include "gqlab/suites.hpp"

using namespace gqlab;

TEST_CASE("all suites pass on W(3)") {
    auto rep = run_suite("all", classical_wq_family(3));
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
    CHECK(rep.pass());
    auto j = to_json(rep);
    CHECK(j["pass"] == true);
}

TEST_CASE("T2(4) passes every suite") {
    auto rep = run_suite("all", t2_oval_family(4));
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
    bool has_geometry = false;
    for (const auto& c : rep.checks) has_geometry = has_geometry || c.name.rfind("geometry.", 0) == 0;
    CHECK(has_geometry);
}

TEST_CASE("geometry suite on W(3)") {
    auto f = classical_wq_family(3);
    auto rep = geometry_suite(f);
    CHECK(rep.pass());
}

TEST_CASE("broken family stops the kantor suite") {
    auto f = classical_wq_family(3);
    std::vector<std::vector<Element>> m, sm;
    for (auto& a : f.members) m.push_back(a.members());
    for (auto& a : f.star_members) sm.push_back(a.members());
    m[1] = m[2];
    sm[1] = sm[2];
    auto rep = run_suite("kantor", make_family(f.group, 3, 3, m, sm));
    REQUIRE(rep.checks.size() == 1);
    CHECK_FALSE(rep.pass());
    CHECK(rep.checks[0].report["axiom"] == "K1");
}

TEST_CASE("scan dispatch") {
    CHECK(scan_names().size() == 9);
    ScanOverrides o;
    o.max_e = 15;
    auto c = run_scan("final", o);
    CHECK(c.pass);
    CHECK(c.parameters["max_e"] == 15);
    bool invalid = false;
    try {
        run_scan("bogus");
    } catch (const Error& e) {
        invalid = e.code() == ErrorCode::InvalidArgument;
    }
    CHECK(invalid);
}
