#include "gqlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "gqlab/errors.hpp"
#include "gqlab/kantor.hpp"

namespace gqlab {

AxiomReport verify_gq_axioms(const GeneralizedQuadrangle& gq) {
    AxiomReport r;
    auto fail = [&](std::string axiom, std::vector<std::int64_t> w, std::string detail) {
        r.pass = false;
        r.axiom = std::move(axiom);
        r.witness = std::move(w);
        r.detail = std::move(detail);
        return r;
    };
    for (LineId l = 0; l < gq.num_lines(); ++l)
        if (gq.line_points(l).size() != gq.s() + 1)
            return fail("line_size", {l, static_cast<std::int64_t>(gq.line_points(l).size())}, "line does not have s+1 points");
    for (PointId p = 0; p < gq.num_points(); ++p)
        if (gq.point_lines(p).size() != gq.t() + 1)
            return fail("point_degree", {p, static_cast<std::int64_t>(gq.point_lines(p).size())}, "point is not on t+1 lines");
    for (LineId l = 0; l < gq.num_lines(); ++l)
        for (LineId m = l + 1; m < gq.num_lines(); ++m)
            if (gq.line_set(l).count_and(gq.line_set(m)) > 1) {
                Bitset both = gq.line_set(l);
                both &= gq.line_set(m);
                auto pts = both.to_vector();
                return fail("digon", {l, m, pts[0], pts[1]}, "two points on two common lines");
            }
    for (PointId p = 0; p < gq.num_points(); ++p)
        for (LineId l = 0; l < gq.num_lines(); ++l) {
            if (gq.incident(p, l)) continue;
            std::size_t c = gq.perp(p).count_and(gq.line_set(l));
            if (c != 1) return fail("unique_collinear_point", {p, l, static_cast<std::int64_t>(c)}, "non-incident pair without a unique collinear point");
        }
    return r;
}

namespace {

Bitset perp_of_set(const GeneralizedQuadrangle& gq, const Bitset& pts) {
    Bitset acc(gq.num_points());
    for (PointId p = 0; p < gq.num_points(); ++p) acc.set(p);
    pts.for_each([&](std::size_t p) { acc &= gq.perp(static_cast<PointId>(p)); });
    return acc;
}

}  // namespace

TraceSpan trace_and_span(const GeneralizedQuadrangle& gq, PointId x, PointId y) {
    if (x == y) throw Error(ErrorCode::SamePoint, "trace needs two distinct points", {x});
    if (x >= gq.num_points() || y >= gq.num_points()) throw Error(ErrorCode::InvalidArgument, "point id out of range");
    Bitset tr = gq.perp(x);
    tr &= gq.perp(y);
    Bitset sp = perp_of_set(gq, tr);
    return {tr.to_vector(), sp.to_vector()};
}

bool is_regular_point(const GeneralizedQuadrangle& gq, PointId x) {
    if (gq.s() != gq.t()) throw Error(ErrorCode::NotSquareOrder, "regularity is checked for order (s,s) only", {gq.s(), gq.t()});
    for (PointId y = 0; y < gq.num_points(); ++y) {
        if (gq.collinear(x, y)) continue;
        if (trace_and_span(gq, x, y).span.size() != gq.s() + 1) return false;
    }
    return true;
}

DerivedQuadrangle payne_derive(const GeneralizedQuadrangle& gq, PointId x) {
    if (!is_regular_point(gq, x)) throw Error(ErrorCode::NotRegularPoint, "base point is not regular", {x});
    DerivedQuadrangle d;
    std::vector<std::int64_t> new_id(gq.num_points(), -1);
    for (PointId p = 0; p < gq.num_points(); ++p)
        if (!gq.collinear(x, p)) {
            new_id[p] = static_cast<std::int64_t>(d.original_point.size());
            d.original_point.push_back(p);
        }
    std::vector<std::vector<PointId>> lines;
    for (LineId l = 0; l < gq.num_lines(); ++l) {
        if (gq.incident(x, l)) continue;
        std::vector<PointId> pts;
        for (PointId p : gq.line_points(l))
            if (new_id[p] >= 0) pts.push_back(static_cast<PointId>(new_id[p]));
        lines.push_back(std::move(pts));
    }
    std::set<std::vector<PointId>> spans;
    for (PointId y = 0; y < gq.num_points(); ++y) {
        if (new_id[y] < 0) continue;
        auto ts = trace_and_span(gq, x, y);
        std::vector<PointId> pts;
        for (PointId p : ts.span)
            if (p != x) pts.push_back(static_cast<PointId>(new_id[p]));
        spans.insert(std::move(pts));
    }
    for (const auto& sp : spans) lines.push_back(sp);
    d.gq = GeneralizedQuadrangle(static_cast<std::uint32_t>(d.original_point.size()), std::move(lines), gq.s() - 1, gq.s() + 1);
    return d;
}

AxiomReport verify_action(const AutomorphismAction& a) {
    AxiomReport r;
    auto fail = [&](std::string axiom, std::vector<std::int64_t> w) {
        r.pass = false;
        r.axiom = std::move(axiom);
        r.witness = std::move(w);
        return r;
    };
    const auto& gq = a.gq;
    const std::uint32_t n = a.group.order();
    if (a.point_perm.size() != n || a.line_perm.size() != n) return fail("size", {n});
    for (Element g = 0; g < n; ++g) {
        std::vector<bool> seen(gq.num_points(), false), lseen(gq.num_lines(), false);
        for (PointId p : a.point_perm[g]) {
            if (p >= gq.num_points() || seen[p]) return fail("point_permutation", {g, p});
            seen[p] = true;
        }
        for (LineId l : a.line_perm[g]) {
            if (l >= gq.num_lines() || lseen[l]) return fail("line_permutation", {g, l});
            lseen[l] = true;
        }
        for (LineId l = 0; l < gq.num_lines(); ++l)
            for (PointId p : gq.line_points(l))
                if (!gq.incident(a.point_perm[g][p], a.line_perm[g][l])) return fail("incidence", {g, p, l});
    }
    for (PointId p = 0; p < gq.num_points(); ++p)
        if (a.point_perm[0][p] != p) return fail("identity", {p});
    // P^{gh} = (P^g)^h; all pairs for small groups, a prefix of g otherwise
    const std::uint32_t gcap = n <= 512 ? n : 16;
    for (Element g = 0; g < gcap; ++g)
        for (Element h = 0; h < n; ++h) {
            Element gh = a.group.multiply(g, h);
            for (PointId p = 0; p < gq.num_points(); ++p)
                if (a.point_perm[gh][p] != a.point_perm[h][a.point_perm[g][p]]) return fail("homomorphism", {g, h, p});
        }
    if (a.point_regular) {
        if (gq.num_points() != n) return fail("regular", {n, gq.num_points()});
        std::vector<bool> hit(n, false);
        for (Element g = 0; g < n; ++g) {
            PointId p = a.point_perm[g][a.base];
            if (hit[p]) return fail("regular", {g, p});
            hit[p] = true;
        }
    }
    return r;
}

AutomorphismAction right_regular_action(const KantorFamily& f) {
    CosetGeometry cg = coset_geometry(f);
    const auto& big = cg.gq;
    if (big.s() != big.t() || !is_regular_point(big, cg.infinity))
        throw Error(ErrorCode::BasePointNotRegular, "the base point of the coset geometry is not regular", {cg.infinity});
    DerivedQuadrangle d = payne_derive(big, cg.infinity);
    const auto& g = f.group;
    if (d.original_point.size() != g.order()) throw Error(ErrorCode::StructureError, "derived points are not the group elements");
    for (Element x = 0; x < g.order(); ++x)
        if (d.original_point[x] != cg.element_point(x)) throw Error(ErrorCode::StructureError, "derived point order differs from element order");
    AutomorphismAction a;
    a.gq = d.gq;
    a.group = g;
    a.base = 0;
    a.point_regular = true;
    a.point_perm.assign(g.order(), {});
    a.line_perm.assign(g.order(), {});
    for (Element h = 0; h < g.order(); ++h) {
        auto& pp = a.point_perm[h];
        pp.resize(g.order());
        for (Element x = 0; x < g.order(); ++x) pp[x] = g.multiply(x, h);
        auto& lp = a.line_perm[h];
        lp.resize(a.gq.num_lines());
        for (LineId l = 0; l < a.gq.num_lines(); ++l) {
            std::vector<PointId> img;
            for (PointId p : a.gq.line_points(l)) img.push_back(pp[p]);
            LineId m = a.gq.find_line(img);
            if (m == a.gq.num_lines()) throw Error(ErrorCode::StructureError, "right multiplication does not map lines to lines", {h, l});
            lp[l] = m;
        }
    }
    return a;
}

std::vector<Element> delta_set(const AutomorphismAction& a, PointId base) {
    std::vector<Element> out;
    for (Element g = 1; g < a.group.order(); ++g) {
        PointId p = a.point_perm[g][base];
        if (p != base && a.gq.collinear(base, p)) out.push_back(g);
    }
    return out;
}

FixedStructures fixed_structures(const AutomorphismAction& a, Element g) {
    if (g == 0) throw Error(ErrorCode::IdentityElement, "fixed structures need g != 1");
    const auto& gq = a.gq;
    const Element gi = a.group.inverse(g);
    FixedStructures fs;
    fs.g = g;
    for (PointId p = 0; p < gq.num_points(); ++p) {
        PointId pg = a.point_perm[g][p];
        if (!gq.collinear(p, pg)) continue;
        fs.P2.push_back(p);
        PointId pgi = a.point_perm[gi][p];
        if (pg == p) continue;
        LineId l = gq.join(p, pg);
        if (!gq.incident(pgi, l)) fs.P2_prime.push_back(p);
    }
    for (LineId l = 0; l < gq.num_lines(); ++l) {
        LineId lg = a.line_perm[g][l];
        if (lg == l)
            fs.L1.push_back(l);
        else if (gq.line_set(l).count_and(gq.line_set(lg)) > 0)
            fs.L2.push_back(l);
    }
    return fs;
}

BensonReport benson_check(const AutomorphismAction& a, Element g) {
    if (g == 0) throw Error(ErrorCode::IdentityElement, "Benson counting needs g != 1");
    const auto& gq = a.gq;
    const std::uint64_t s = gq.s(), t = gq.t();
    auto fs = fixed_structures(a, g);
    ClassData cd = class_data(a.group);
    auto delta = delta_set(a, a.base);
    std::vector<bool> in_delta(a.group.order(), false);
    for (Element x : delta) in_delta[x] = true;
    const auto cls = cd.class_of[g];
    std::uint64_t meet = 0, miss = 0;
    for (Element x : cd.classes[cls]) (in_delta[x] ? meet : miss) += 1;
    const std::uint64_t cent = cd.centralizer_orders[cls];
    BensonReport r;
    r.g = g;
    r.p2 = fs.P2.size();
    r.group_count = cent * meet;
    r.l1 = fs.L1.size();
    r.l2 = fs.L2.size();
    r.line_count = (s + 1) * r.l1 + r.l2;
    r.residue = r.p2 % (s + t);
    r.residue_target = ((s + 1) * (t + 1)) % (s + t);
    r.complement_residue = (cent * miss) % (s + t);
    r.complement_target = (t * (s * s - 1)) % (s + t);
    r.pass = r.p2 == r.group_count && r.p2 == r.line_count && r.residue == r.residue_target && r.complement_residue == r.complement_target;
    return r;
}

bool l2_below_bound(std::uint64_t l2, std::uint64_t s, std::uint64_t t) {
    // l2 < (1+st)(2+sqrt(s+t))  <=>  l2 - 2(1+st) < (1+st) sqrt(s+t)
    const __int128 m = 1 + static_cast<__int128>(s) * t;
    const __int128 lhs = static_cast<__int128>(l2) - 2 * m;
    if (lhs < 0) return true;
    return lhs * lhs < m * m * static_cast<__int128>(s + t);
}

L2BoundReport l2_bound_check(const AutomorphismAction& a, Element g) {
    if (g == 0 || a.group.multiply(g, g) == 0) throw Error(ErrorCode::InvolutionOrIdentity, "the bound needs g^2 != 1", {g});
    const std::uint64_t s = a.gq.s(), t = a.gq.t();
    auto fs = fixed_structures(a, g);
    L2BoundReport r;
    r.g = g;
    r.l2 = fs.L2.size();
    r.bound = static_cast<double>(1 + s * t) * (2.0 + std::sqrt(static_cast<double>(s + t)));
    r.pass = l2_below_bound(r.l2, s, t);
    return r;
}

CycleReport cycle_structure_check(const AutomorphismAction& a, Element g) {
    if (g == 0 || a.group.multiply(g, g) == 0) throw Error(ErrorCode::InvolutionOrIdentity, "the cycle structure needs g^2 != 1", {g});
    const auto& gq = a.gq;
    auto fs = fixed_structures(a, g);
    const Element gi = a.group.inverse(g);
    Bitset p2p(gq.num_points()), l2(gq.num_lines()), l1(gq.num_lines());
    for (PointId p : fs.P2_prime) p2p.set(p);
    for (LineId l : fs.L2) l2.set(l);
    for (LineId l : fs.L1) l1.set(l);
    CycleReport r;
    r.g = g;
    r.p2_prime = fs.P2_prime.size();
    r.l2 = fs.L2.size();
    r.degrees_ok = true;
    for (PointId p : fs.P2_prime) {
        std::size_t deg = gq.point_line_set(p).count_and(l2);
        r.edges += deg;
        if (deg != 2) r.degrees_ok = false;
    }
    for (LineId l : fs.L2)
        if (gq.line_set(l).count_and(p2p) != 2) r.degrees_ok = false;
    r.sizes_ok = r.p2_prime == r.l2 && r.edges == 2 * r.l2;
    r.fixed_lines_ok = true;
    for (PointId p : fs.P2) {
        if (p2p.test(p)) continue;
        if (gq.point_line_set(p).count_and(l1) != 1) {
            r.fixed_lines_ok = false;
            continue;
        }
        LineId l = gq.join(p, a.point_perm[g][p]);
        if (l == gq.num_lines() || !l1.test(l) || !gq.incident(a.point_perm[gi][p], l)) r.fixed_lines_ok = false;
    }
    r.pass = r.degrees_ok && r.sizes_ok && r.fixed_lines_ok;
    return r;
}

MixingReport mixing_inequality_check(const GeneralizedQuadrangle& gq, const std::vector<PointId>& X, const std::vector<LineId>& Y) {
    return mixing_inequality_check(gq, X, Y, incidence_spectrum(gq));
}

MixingReport mixing_inequality_check(const GeneralizedQuadrangle& gq, const std::vector<PointId>& X, const std::vector<LineId>& Y,
                                     const SpectralData& spec) {
    Bitset xs(gq.num_points());
    for (PointId p : X) xs.set(p);
    MixingReport r;
    r.x = xs.count();
    Bitset ys(gq.num_lines());
    for (LineId l : Y) ys.set(l);
    r.y = ys.count();
    ys.for_each([&](std::size_t l) { r.edges += gq.line_set(static_cast<LineId>(l)).count_and(xs); });
    const double U = gq.num_points(), V = gq.num_lines();
    const double a = gq.t() + 1.0, b = gq.s() + 1.0;
    const double x = static_cast<double>(r.x), y = static_cast<double>(r.y);
    const double expected = std::sqrt(a * b) / std::sqrt(U * V) * x * y;
    r.deviation = std::abs(static_cast<double>(r.edges) - expected);
    r.bound = spec.lambda3 * std::sqrt(std::max(0.0, x * y * (1.0 - x / U) * (1.0 - y / V)));
    r.pass = r.deviation <= r.bound + 1e-9 * std::max(1.0, expected);
    return r;
}

std::vector<MixingReport> mixing_suite(const GeneralizedQuadrangle& gq, std::uint64_t seed, std::size_t trials) {
    SpectralData spec = incidence_spectrum(gq);
    std::mt19937_64 rng(seed);
    std::vector<PointId> pts(gq.num_points());
    std::vector<LineId> lns(gq.num_lines());
    std::vector<MixingReport> out;
    for (std::size_t i = 0; i < trials; ++i) {
        std::iota(pts.begin(), pts.end(), 0);
        std::iota(lns.begin(), lns.end(), 0);
        std::uniform_int_distribution<std::size_t> dx(1, pts.size()), dy(1, lns.size());
        std::size_t nx = dx(rng), ny = dy(rng);
        // partial Fisher-Yates with the engine directly, so results do not depend on the library's shuffle
        for (std::size_t k = 0; k < nx; ++k) std::swap(pts[k], pts[k + rng() % (pts.size() - k)]);
        for (std::size_t k = 0; k < ny; ++k) std::swap(lns[k], lns[k + rng() % (lns.size() - k)]);
        out.push_back(mixing_inequality_check(gq, std::vector<PointId>(pts.begin(), pts.begin() + nx),
                                              std::vector<LineId>(lns.begin(), lns.begin() + ny), spec));
    }
    return out;
}

nlohmann::json to_json(const BensonReport& r) {
    return {{"element", r.g},          {"p2", r.p2},   {"group_count", r.group_count},
            {"l1", r.l1},              {"l2", r.l2},   {"line_count", r.line_count},
            {"residue", r.residue},    {"residue_target", r.residue_target},
            {"complement_residue", r.complement_residue}, {"complement_target", r.complement_target},
            {"pass", r.pass}};
}

nlohmann::json to_json(const L2BoundReport& r) {
    return {{"element", r.g}, {"l2", r.l2}, {"bound", r.bound}, {"pass", r.pass}};
}

nlohmann::json to_json(const CycleReport& r) {
    return {{"element", r.g},          {"p2_prime", r.p2_prime},     {"l2", r.l2},
            {"edges", r.edges},        {"degrees_ok", r.degrees_ok}, {"sizes_ok", r.sizes_ok},
            {"fixed_lines_ok", r.fixed_lines_ok}, {"pass", r.pass}};
}

nlohmann::json to_json(const MixingReport& r) {
    return {{"x", r.x}, {"y", r.y}, {"edges", r.edges}, {"deviation", r.deviation}, {"bound", r.bound}, {"pass", r.pass}};
}

nlohmann::json to_json(const SpectralData& d) {
    nlohmann::json distinct = nlohmann::json::array();
    for (auto [v, m] : d.distinct) distinct.push_back({{"value", v}, {"multiplicity", m}});
    return {{"points", d.num_points}, {"lines", d.num_lines}, {"a", d.a},
            {"b", d.b},               {"lambda1", d.lambda1},  {"lambda3", d.lambda3},
            {"symmetric", d.symmetric}, {"lambda3_ok", d.lambda3_ok}, {"distinct", distinct}};
}

}  // namespace gqlab
