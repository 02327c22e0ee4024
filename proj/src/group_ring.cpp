#include "gqlab/group_ring.hpp"

#include <gmpxx.h>

#include <array>

#include "gqlab/errors.hpp"
#include "gqlab/parallel.hpp"

namespace gqlab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::CoefficientOverflow, "group ring coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::CoefficientOverflow, "group ring coefficient overflow");
    return r;
}

void require_same(const GroupRingElement& a, const GroupRingElement& b) {
    if (!a.group().same_group(b.group())) throw Error(ErrorCode::GroupMismatch, "group ring elements over different groups");
}

}  // namespace

GroupRingElement::GroupRingElement(const FiniteGroup& g) : group_(g), coeffs_(g.order(), 0) {}

GroupRingElement GroupRingElement::scalar(const FiniteGroup& g, std::int64_t c) {
    GroupRingElement x(g);
    x.coeffs_[0] = c;
    return x;
}

GroupRingElement GroupRingElement::all_ones(const FiniteGroup& g) {
    GroupRingElement x(g);
    std::fill(x.coeffs_.begin(), x.coeffs_.end(), 1);
    return x;
}

GroupRingElement GroupRingElement::from_set(const FiniteGroup& g, const std::vector<Element>& xs) {
    GroupRingElement x(g);
    for (Element e : xs) x.coeffs_[e] = checked_add(x.coeffs_[e], 1);
    return x;
}

std::int64_t GroupRingElement::coefficient_sum() const {
    std::int64_t s = 0;
    for (auto c : coeffs_) s = checked_add(s, c);
    return s;
}

std::size_t GroupRingElement::support_size() const {
    std::size_t n = 0;
    for (auto c : coeffs_) n += c != 0;
    return n;
}

GroupRingElement GroupRingElement::involution() const {
    GroupRingElement r(group_);
    for (Element x = 0; x < coeffs_.size(); ++x) r.coeffs_[group_.inverse(x)] = coeffs_[x];
    return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], checked_mul(-1, o.coeffs_[i]));
    return *this;
}

GroupRingElement& GroupRingElement::operator*=(std::int64_t c) {
    for (auto& x : coeffs_) x = checked_mul(x, c);
    return *this;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    return group_.same_group(o.group_) && coeffs_ == o.coeffs_;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
GroupRingElement operator*(std::int64_t c, GroupRingElement a) { return a *= c; }
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return gr_multiply(a, b); }

GroupRingElement gr_multiply(const GroupRingElement& x, const GroupRingElement& y, unsigned jobs) {
    require_same(x, y);
    const auto& g = x.group();
    std::vector<Element> xs, ys;
    for (Element a = 0; a < g.order(); ++a) {
        if (x[a]) xs.push_back(a);
        if (y[a]) ys.push_back(a);
    }
    unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(xs.size())));
    std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(g.order(), 0));
    parallel_for(workers, workers, [&](std::size_t w) {
        auto& acc = partial[w];
        std::size_t lo = xs.size() * w / workers, hi = xs.size() * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) {
            Element a = xs[i];
            for (Element b : ys) {
                Element z = g.multiply(a, b);
                acc[z] = checked_add(acc[z], checked_mul(x[a], y[b]));
            }
        }
    });
    GroupRingElement r(g);
    for (const auto& acc : partial)
        for (Element z = 0; z < g.order(); ++z) r.set(z, checked_add(r[z], acc[z]));
    return r;
}

nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json j{{"identity_name", r.identity_name}, {"pass", r.pass}};
    if (r.witness_element) j["witness_element"] = *r.witness_element;
    if (r.lhs_coeff) j["lhs_coeff"] = *r.lhs_coeff;
    if (r.rhs_coeff) j["rhs_coeff"] = *r.rhs_coeff;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

IdentityReport compare_elements(const std::string& name, const GroupRingElement& lhs, const GroupRingElement& rhs) {
    require_same(lhs, rhs);
    IdentityReport rep;
    rep.identity_name = name;
    for (Element z = 0; z < lhs.group().order(); ++z) {
        if (lhs[z] != rhs[z]) {
            rep.pass = false;
            rep.witness_element = z;
            rep.lhs_coeff = lhs[z];
            rep.rhs_coeff = rhs[z];
            break;
        }
    }
    return rep;
}

DeltaPair delta_elements(const KantorFamily& f) {
    DeltaPair d{GroupRingElement(f.group), GroupRingElement(f.group)};
    for (const auto& a : f.members)
        for (Element x : a.members())
            if (x != 0) d.delta.set(x, d.delta[x] + 1);
    for (const auto& a : f.star_members)
        for (Element x : a.members())
            if (x != 0) d.delta_star.set(x, d.delta_star[x] + 1);
    return d;
}

namespace {

// (c0, c1, c2, c3) -> c0 + c1 Delta + c2 Delta* + c3 G
GroupRingElement combo(const FiniteGroup& g, const DeltaPair& d, std::array<std::int64_t, 4> c) {
    return GroupRingElement::scalar(g, c[0]) + c[1] * d.delta + c[2] * d.delta_star + c[3] * GroupRingElement::all_ones(g);
}

// Closed-form coordinates of b_i b_j in (1, Delta, Delta*, G).
std::array<std::int64_t, 4> expected_product(std::size_t i, std::size_t j, std::int64_t s, std::int64_t t, std::int64_t order) {
    if (i > j) std::swap(i, j);
    const std::int64_t dsum = (t + 1) * (s - 1), dssum = (t + 1) * (s * t - 1);
    if (i == 0) {
        std::array<std::int64_t, 4> r{0, 0, 0, 0};
        r[j] = 1;
        return r;
    }
    if (j == 3) {
        if (i == 1) return {0, 0, 0, dsum};
        if (i == 2) return {0, 0, 0, dssum};
        return {0, 0, 0, order};
    }
    if (i == 1 && j == 1) return {(s - 2) * (t + 1), s - t - 2, -1, t + 1};
    if (i == 1 && j == 2) return {(s - t - 1) * (t + 1), -(t + 1), s - t - 1, t * (t + 1)};
    return {(s * t - t - 1) * (t + 1), 0, s * t - 2 * t - 2, t * t * (t + 1)};
}

}  // namespace

std::vector<IdentityReport> verify_fourdim_algebra(const KantorFamily& f, unsigned jobs) {
    const auto& g = f.group;
    auto d = delta_elements(f);
    const std::int64_t s = f.s, t = f.t;
    auto dd = gr_multiply(d.delta, d.delta, jobs);
    auto dds = gr_multiply(d.delta, d.delta_star, jobs);
    auto dsd = gr_multiply(d.delta_star, d.delta, jobs);
    auto dsds = gr_multiply(d.delta_star, d.delta_star, jobs);
    std::vector<IdentityReport> out;
    out.push_back(compare_elements("delta_squared", dd, combo(g, d, expected_product(1, 1, s, t, g.order()))));
    out.push_back(compare_elements("delta_delta_star", dds, combo(g, d, expected_product(1, 2, s, t, g.order()))));
    out.push_back(compare_elements("delta_star_squared", dsds, combo(g, d, expected_product(2, 2, s, t, g.order()))));
    out.push_back(compare_elements("delta_commutes_with_delta_star", dds, dsd));
    return out;
}

SpanClosureReport fourdim_span_closure(const KantorFamily& f) {
    const auto& g = f.group;
    auto d = delta_elements(f);
    std::array<GroupRingElement, 4> basis{GroupRingElement::scalar(g, 1), d.delta, d.delta_star, GroupRingElement::all_ones(g)};
    const std::size_t n = g.order();

    // choose 4 rows giving an invertible 4x4 block (exact rationals)
    std::vector<std::size_t> rows;
    std::vector<std::array<mpq_class, 4>> reduced;  // echelon rows for independence test
    for (std::size_t z = 0; z < n && rows.size() < 4; ++z) {
        std::array<mpq_class, 4> v;
        for (int k = 0; k < 4; ++k) v[k] = basis[k][static_cast<Element>(z)];
        for (const auto& r : reduced) {
            int piv = 0;
            while (piv < 4 && r[piv] == 0) ++piv;
            if (v[piv] != 0) {
                mpq_class factor = v[piv] / r[piv];
                for (int k = 0; k < 4; ++k) v[k] -= factor * r[k];
            }
        }
        bool nonzero = false;
        for (auto& c : v) nonzero = nonzero || c != 0;
        if (nonzero) {
            rows.push_back(z);
            reduced.push_back(v);
        }
    }
    SpanClosureReport rep;
    if (rows.size() < 4) {
        rep.pass = false;
        rep.detail = "basis (1, Delta, Delta*, G) is not linearly independent";
        return rep;
    }
    rep.products.assign(4, std::vector<std::vector<std::int64_t>>(4));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            auto prod = gr_multiply(basis[i], basis[j]);
            // solve M c = b on the chosen rows by Gauss-Jordan
            std::array<std::array<mpq_class, 5>, 4> m;
            for (int r = 0; r < 4; ++r) {
                for (int k = 0; k < 4; ++k) m[r][k] = basis[k][static_cast<Element>(rows[r])];
                m[r][4] = prod[static_cast<Element>(rows[r])];
            }
            for (int c = 0; c < 4; ++c) {
                int p = c;
                while (m[p][c] == 0) ++p;
                std::swap(m[p], m[c]);
                for (int r = 0; r < 4; ++r) {
                    if (r == c || m[r][c] == 0) continue;
                    mpq_class factor = m[r][c] / m[c][c];
                    for (int k = 0; k < 5; ++k) m[r][k] -= factor * m[c][k];
                }
            }
            std::array<std::int64_t, 4> coords{};
            bool integral = true;
            for (int c = 0; c < 4; ++c) {
                mpq_class v = m[c][4] / m[c][c];
                if (v.get_den() != 1) integral = false;
                coords[c] = integral ? v.get_num().get_si() : 0;
            }
            rep.products[i][j] = std::vector<std::int64_t>(coords.begin(), coords.end());
            auto expected = expected_product(i, j, f.s, f.t, g.order());
            if (!integral || !(combo(g, d, coords) == prod) || coords != expected) {
                if (rep.pass) rep.detail = "product b" + std::to_string(i) + "*b" + std::to_string(j) + " does not match";
                rep.pass = false;
            }
        }
    }
    return rep;
}

STPair st_elements(const KantorFamily& f) {
    STPair st{GroupRingElement(f.group), GroupRingElement(f.group)};
    const std::int64_t s = f.s, t = f.t;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        auto a = GroupRingElement::from_set(f.group, f.members[i].members());
        auto as = GroupRingElement::from_set(f.group, f.star_members[i].members());
        st.S += s * a + as;
        st.T += t * a - as;
    }
    return st;
}

IdentityReport verify_cayley_delta_identity(const FiniteGroup& g, const GroupRingElement& delta, std::uint32_t s, std::uint32_t t) {
    if (!delta.group().same_group(g)) throw Error(ErrorCode::GroupMismatch, "delta is over a different group");
    const std::uint64_t expected_order = (1ull + s) * (1ull + static_cast<std::uint64_t>(s) * t);
    if (g.order() != expected_order) throw Error(ErrorCode::SizeMismatch, "|G| != (1+s)(1+st)");
    if (delta.coefficient_sum() != static_cast<std::int64_t>(t + 1) * s) throw Error(ErrorCode::SizeMismatch, "|Delta| != (t+1)s");
    IdentityReport rep;
    rep.identity_name = "cayley_delta_squared";
    if (delta[0] != 0) {
        rep.pass = false;
        rep.detail = "identity lies in Delta";
        rep.witness_element = 0;
        return rep;
    }
    if (!(delta.involution() == delta)) {
        rep.pass = false;
        rep.detail = "Delta is not inverse-closed";
        return rep;
    }
    const std::int64_t S = s, T = t;
    auto lhs = gr_multiply(delta, delta);
    auto rhs = GroupRingElement::scalar(g, (T + 1) * (S - 1)) + (S - T - 2) * delta + (T + 1) * GroupRingElement::all_ones(g);
    auto cmp = compare_elements(rep.identity_name, lhs, rhs);
    return cmp;
}

}  // namespace gqlab
