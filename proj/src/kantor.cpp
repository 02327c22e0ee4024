#include "gqlab/kantor.hpp"

#include <algorithm>

#include "gqlab/errors.hpp"
#include "gqlab/field.hpp"
#include "gqlab/numtheory.hpp"
#include "gqlab/parallel.hpp"

namespace gqlab {

namespace {

void check_structure(const KantorFamily& f) {
    const auto& g = f.group;
    if (f.s == 0 || f.t == 0) throw Error(ErrorCode::StructureError, "s and t must be positive");
    if (static_cast<std::uint64_t>(f.s) * f.s * f.t != g.order()) throw Error(ErrorCode::StructureError, "|G| != s^2 t");
    if (f.members.size() != f.t + 1 || f.star_members.size() != f.t + 1)
        throw Error(ErrorCode::StructureError, "family must have t+1 members");
    for (std::size_t i = 0; i <= f.t; ++i) {
        const auto& a = f.members[i];
        const auto& as = f.star_members[i];
        if (!a.parent().same_group(g) || !as.parent().same_group(g)) throw Error(ErrorCode::GroupMismatch, "member of another group", {static_cast<std::int64_t>(i)});
        if (a.size() != f.s) throw Error(ErrorCode::StructureError, "|A_i| != s", {static_cast<std::int64_t>(i)});
        if (as.size() != f.s * f.t) throw Error(ErrorCode::StructureError, "|A_i*| != st", {static_cast<std::int64_t>(i)});
        if (!a.subset_of(as)) throw Error(ErrorCode::StructureError, "A_i not contained in A_i*", {static_cast<std::int64_t>(i)});
    }
}

}  // namespace

KantorFamily make_family(const FiniteGroup& g, std::uint32_t s, std::uint32_t t,
                         const std::vector<std::vector<Element>>& members,
                         const std::vector<std::vector<Element>>& star_members) {
    KantorFamily f;
    f.group = g;
    f.s = s;
    f.t = t;
    for (const auto& m : members) f.members.push_back(Subgroup::from_members(g, m));
    for (const auto& m : star_members) f.star_members.push_back(Subgroup::from_members(g, m));
    return f;
}

AxiomReport verify_kantor_axioms(const KantorFamily& f, unsigned jobs) {
    check_structure(f);
    const auto& g = f.group;
    const std::size_t m = f.members.size();
    // K1: per (i,j) pair i<j, the least violating k (and element)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<std::int64_t>> found(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t idx) {
        auto [i, j] = pairs[idx];
        std::vector<bool> prod(g.order(), false);
        for (Element a : f.members[i].members())
            for (Element b : f.members[j].members()) prod[g.multiply(a, b)] = true;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == i || k == j) continue;
            for (Element x : f.members[k].members()) {
                if (x != 0 && prod[x]) {
                    found[idx] = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), static_cast<std::int64_t>(k), x};
                    return;
                }
            }
        }
    });
    for (auto& w : found) {
        if (!w.empty()) return {false, "K1", w, "A_i A_j meets A_k nontrivially"};
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            for (Element x : f.members[j].members()) {
                if (x != 0 && f.star_members[i].contains(x))
                    return {false, "K2", {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), x}, "A_i* meets A_j nontrivially"};
            }
        }
    return {};
}

KantorFamily classical_wq_family(std::uint32_t q) {
    if (q % 2 == 0 || !nt::prime_power(q)) throw Error(ErrorCode::InvalidFieldOrder, "classical_wq_family needs an odd prime power, got " + std::to_string(q));
    FiniteGroup g = heisenberg_group(q);
    GaloisField F(q);
    auto id = [q](Element x, Element y, Element z) { return (x * q + y) * q + z; };
    const auto half = F.from_int((q + 1) / 2);
    std::vector<std::vector<Element>> members, stars;
    std::vector<Element> a0;
    for (Element y = 0; y < q; ++y) a0.push_back(id(0, y, 0));
    members.push_back(a0);
    for (Element c = 0; c < q; ++c) {
        std::vector<Element> a;
        for (Element x = 0; x < q; ++x) a.push_back(id(x, F.mul(c, x), F.mul(half, F.mul(c, F.mul(x, x)))));
        members.push_back(a);
    }
    std::vector<Element> z;
    for (Element c = 0; c < q; ++c) z.push_back(id(0, 0, c));
    for (auto& a : members) stars.push_back(product_set(g, a, z));
    return make_family(g, q, q, members, stars);
}

KantorFamily t2_oval_family(std::uint32_t q, std::uint32_t k) {
    auto pp = nt::prime_power(q);
    if (q % 2 != 0 || !pp) throw Error(ErrorCode::InvalidFieldOrder, "t2_oval_family needs an even prime power, got " + std::to_string(q));
    if (3ull * pp->second > 12) throw Error(ErrorCode::OrderOverflow, "q^3 exceeds 4096");
    GaloisField F(q);
    using V = std::array<Element, 3>;
    std::vector<V> oval;
    oval.push_back({0, 1, 0});
    for (Element c = 0; c < q; ++c) oval.push_back({1, c, F.pow(c, k)});
    auto det = [&](const V& a, const V& b, const V& c) {
        // characteristic 2: signs vanish
        Element t1 = F.mul(a[0], F.add(F.mul(b[1], c[2]), F.mul(b[2], c[1])));
        Element t2 = F.mul(a[1], F.add(F.mul(b[0], c[2]), F.mul(b[2], c[0])));
        Element t3 = F.mul(a[2], F.add(F.mul(b[0], c[1]), F.mul(b[1], c[0])));
        return F.add(F.add(t1, t2), t3);
    };
    for (std::size_t i = 0; i < oval.size(); ++i)
        for (std::size_t j = i + 1; j < oval.size(); ++j)
            for (std::size_t l = j + 1; l < oval.size(); ++l)
                if (det(oval[i], oval[j], oval[l]) == 0)
                    throw Error(ErrorCode::NotAnOval, "three oval points are linearly dependent",
                                {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), static_cast<std::int64_t>(l)});

    FiniteGroup g = elementary_abelian(2, 3 * pp->second);
    auto id = [q](const V& v) { return (v[0] * q + v[1]) * q + v[2]; };
    auto scale = [&](Element lam, const V& v) { return V{F.mul(lam, v[0]), F.mul(lam, v[1]), F.mul(lam, v[2])}; };
    const V nucleus{0, 0, 1};
    std::vector<std::vector<Element>> members, stars;
    for (const auto& p : oval) {
        std::vector<Element> a, as;
        for (Element lam = 0; lam < q; ++lam) a.push_back(id(scale(lam, p)));
        for (Element lam = 0; lam < q; ++lam)
            for (Element mu = 0; mu < q; ++mu) {
                V v = scale(lam, p), w = scale(mu, nucleus);
                as.push_back(id({F.add(v[0], w[0]), F.add(v[1], w[1]), F.add(v[2], w[2])}));
            }
        members.push_back(a);
        stars.push_back(as);
    }
    return make_family(g, q, q, members, stars);
}

StgqStructure stgq_structure(const KantorFamily& f) {
    const auto& g = f.group;
    std::vector<Element> inter;
    for (Element x = 0; x < g.order(); ++x) {
        bool all = true;
        for (const auto& a : f.star_members) all = all && a.contains(x);
        if (all) inter.push_back(x);
    }
    StgqStructure st;
    st.U0 = Subgroup::from_members(g, inter);
    st.order_s = st.U0.size() == f.s;
    st.normal = !normality_witness(st.U0).has_value();
    st.factorizes = true;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        auto prod = product_set(g, f.members[i].members(), st.U0.members());
        st.factorizes = st.factorizes && prod == f.star_members[i].members();
    }
    st.is_stgq = st.order_s && st.normal && st.factorizes;
    if (st.normal) st.quotient_elem_abelian = is_elementary_abelian(quotient(g, st.U0).group);
    return st;
}

namespace {

// Right cosets H g, ids in order of least element; returns element -> coset id.
std::vector<std::uint32_t> right_cosets(const FiniteGroup& g, const Subgroup& h, std::uint32_t& count) {
    std::vector<std::uint32_t> of(g.order(), UINT32_MAX);
    count = 0;
    for (Element x = 0; x < g.order(); ++x) {
        if (of[x] != UINT32_MAX) continue;
        for (Element a : h.members()) of[g.multiply(a, x)] = count;
        ++count;
    }
    return of;
}

}  // namespace

CosetGeometry coset_geometry(const KantorFamily& f) {
    check_structure(f);
    const auto& g = f.group;
    const std::uint32_t m = static_cast<std::uint32_t>(f.members.size());
    CosetGeometry cg;
    cg.member_count = m;
    cg.infinity = 0;

    std::vector<std::uint32_t> star_base(m), line_base(m);
    std::vector<std::vector<std::uint32_t>> star_of(m), line_of(m);
    PointId next_point = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t cnt;
        star_of[i] = right_cosets(g, f.star_members[i], cnt);
        star_base[i] = next_point;
        next_point += cnt;
    }
    cg.element_offset = next_point;
    const std::uint32_t num_points = next_point + g.order();

    LineId next_line = m;  // lines 0..t are the symbols [A_i]
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t cnt;
        line_of[i] = right_cosets(g, f.members[i], cnt);
        line_base[i] = next_line;
        next_line += cnt;
    }
    std::vector<std::vector<PointId>> lines(next_line);
    for (std::uint32_t i = 0; i < m; ++i) lines[i].push_back(cg.infinity);
    cg.coset_point.assign(m, std::vector<PointId>(g.order()));
    cg.coset_line.assign(m, std::vector<LineId>(g.order()));
    for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<bool> star_done(g.order(), false), line_done(g.order(), false);
        for (Element x = 0; x < g.order(); ++x) {
            PointId cp = star_base[i] + star_of[i][x];
            LineId cl = line_base[i] + line_of[i][x];
            cg.coset_point[i][x] = cp;
            cg.coset_line[i][x] = cl;
            if (!star_done[star_of[i][x]]) {
                star_done[star_of[i][x]] = true;
                lines[i].push_back(cp);
            }
            if (!line_done[line_of[i][x]]) {
                line_done[line_of[i][x]] = true;
                lines[cl].push_back(cp);  // A_i x lies in A_i* x
            }
            lines[cl].push_back(cg.element_point(x));
        }
    }
    cg.gq = GeneralizedQuadrangle(num_points, std::move(lines), f.s, f.t);
    return cg;
}

std::pair<std::vector<PointId>, std::vector<LineId>> coset_right_action(const KantorFamily& f, const CosetGeometry& cg, Element h) {
    const auto& g = f.group;
    std::vector<PointId> pp(cg.gq.num_points());
    std::vector<LineId> lp(cg.gq.num_lines());
    pp[cg.infinity] = cg.infinity;
    for (LineId i = 0; i < cg.member_count; ++i) lp[i] = i;
    for (std::uint32_t i = 0; i < cg.member_count; ++i)
        for (Element x = 0; x < g.order(); ++x) {
            Element xh = g.multiply(x, h);
            pp[cg.coset_point[i][x]] = cg.coset_point[i][xh];
            lp[cg.coset_line[i][x]] = cg.coset_line[i][xh];
        }
    for (Element x = 0; x < g.order(); ++x) pp[cg.element_point(x)] = cg.element_point(g.multiply(x, h));
    return {pp, lp};
}

std::string to_string(StarCosetStatus s) {
    switch (s) {
        case StarCosetStatus::Asserted: return "asserted";
        case StarCosetStatus::Vacuous: return "hypothesis_vacuous";
        case StarCosetStatus::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

StarCosetReport star_coset_equality_check(const KantorFamily& f) {
    StarCosetReport rep;
    AxiomReport ax;
    try {
        ax = verify_kantor_axioms(f);
    } catch (const Error&) {
        ax.pass = false;
    }
    if (!ax.pass) return rep;  // NotApplicable
    const auto& g = f.group;
    auto gp = derived_subgroup(g);
    rep.equality_holds = true;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        bool eq = product_set(g, f.star_members[i].members(), gp.members()) == product_set(g, f.members[i].members(), gp.members());
        rep.per_member.push_back(eq);
        rep.equality_holds = rep.equality_holds && eq;
    }
    if (f.t % f.s == 0) {
        rep.status = StarCosetStatus::Vacuous;
        rep.pass = true;
    } else {
        rep.status = StarCosetStatus::Asserted;
        rep.pass = rep.equality_holds;
    }
    return rep;
}

nlohmann::json family_to_json(const KantorFamily& f) {
    nlohmann::json j;
    j["group_label"] = f.group.label();
    j["group"] = group_to_json(f.group);
    j["s"] = f.s;
    j["t"] = f.t;
    std::vector<std::vector<Element>> m, sm;
    for (auto& a : f.members) m.push_back(a.members());
    for (auto& a : f.star_members) sm.push_back(a.members());
    j["members"] = m;
    j["star_members"] = sm;
    return j;
}

KantorFamily family_from_json(const nlohmann::json& j) {
    try {
        FiniteGroup g = group_from_json(j.at("group"));
        return make_family(g, j.at("s").get<std::uint32_t>(), j.at("t").get<std::uint32_t>(),
                           j.at("members").get<std::vector<std::vector<Element>>>(),
                           j.at("star_members").get<std::vector<std::vector<Element>>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SchemaError, std::string("bad family JSON: ") + e.what());
    }
}

}  // namespace gqlab
