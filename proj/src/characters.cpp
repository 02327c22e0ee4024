#include "gqlab/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gqlab/errors.hpp"
#include "gqlab/group_ring.hpp"
#include "gqlab/kantor.hpp"
#include "gqlab/numtheory.hpp"
#include "gqlab/parallel.hpp"

namespace gqlab {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

// --- linear characters -------------------------------------------------------

// Characters of G/G' as exponent vectors over G/G' elements: value zeta_e^{x}.
std::vector<std::vector<std::uint32_t>> abelian_characters(const FiniteGroup& a, u64 e) {
    const std::uint32_t n = a.order();
    std::vector<std::int64_t> pos(n, -1);
    std::vector<Element> hlist{0};
    pos[0] = 0;
    std::vector<std::vector<std::uint32_t>> chars{{0}};
    while (hlist.size() < n) {
        Element x = 0;
        while (pos[x] != -1) ++x;
        std::uint32_t m = 1;
        Element y = x;
        while (pos[y] == -1) {
            y = a.multiply(y, x);
            ++m;
        }
        // now y = x^m lies in H
        std::vector<Element> next;
        next.reserve(hlist.size() * m);
        Element xj = 0;
        for (std::uint32_t j = 0; j < m; ++j) {
            for (Element h : hlist) next.push_back(a.multiply(xj, h));
            xj = a.multiply(xj, x);
        }
        std::vector<std::vector<std::uint32_t>> nchars;
        nchars.reserve(chars.size() * m);
        const u64 hsz = hlist.size();
        for (const auto& lam : chars) {
            u64 v = lam[pos[y]];
            if (v % m != 0) throw Error(ErrorCode::StructureError, "linear character extension failed");
            u64 w0 = v / m;
            for (std::uint32_t k = 0; k < m; ++k) {
                u64 w = (w0 + k * (e / m)) % e;
                std::vector<std::uint32_t> nl(next.size());
                for (std::uint32_t j = 0; j < m; ++j)
                    for (u64 h = 0; h < hsz; ++h) nl[j * hsz + h] = static_cast<std::uint32_t>((j * w + lam[h]) % e);
                nchars.push_back(std::move(nl));
            }
        }
        hlist = std::move(next);
        for (std::size_t i = 0; i < hlist.size(); ++i) pos[hlist[i]] = static_cast<std::int64_t>(i);
        chars = std::move(nchars);
    }
    // reindex by element id
    for (auto& c : chars) {
        std::vector<std::uint32_t> byid(n);
        for (std::size_t i = 0; i < n; ++i) byid[hlist[i]] = c[i];
        c = std::move(byid);
    }
    return chars;
}

// --- modular linear algebra ----------------------------------------------------

u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subm(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 mulm(u64 a, u64 b, u64 p) { return nt::mulmod(a, b, p); }
u64 invm(u64 a, u64 p) { return nt::powmod(a, p - 2, p); }

struct Space {
    std::vector<Vec> basis;           // reduced: basis[i][pivots[j]] = delta_ij
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan to pivot form.
Space reduce_rows(std::vector<Vec> rows, u64 p) {
    Space out;
    if (rows.empty()) return out;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        u64 iv = invm(rows[r][c], p);
        for (auto& x : rows[r]) x = mulm(x, iv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            u64 f = rows[i][c];
            for (std::size_t k = 0; k < n; ++k)
                if (rows[r][k]) rows[i][k] = subm(rows[i][k], mulm(f, rows[r][k], p), p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.basis = std::move(rows);
    return out;
}

// Null space of a d x d matrix, as coordinate vectors.
std::vector<Vec> null_space(std::vector<Vec> m, u64 p) {
    const std::size_t d = m.size();
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < d; ++c) {
        std::size_t piv = r;
        while (piv < d && m[piv][c] == 0) ++piv;
        if (piv == d) continue;
        std::swap(m[r], m[piv]);
        u64 iv = invm(m[r][c], p);
        for (auto& x : m[r]) x = mulm(x, iv, p);
        for (std::size_t i = 0; i < d; ++i) {
            if (i == r || m[i][c] == 0) continue;
            u64 f = m[i][c];
            for (std::size_t k = 0; k < d; ++k)
                if (m[r][k]) m[i][k] = subm(m[i][k], mulm(f, m[r][k], p), p);
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(d, false);
    for (auto c : pivcol) is_piv[c] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < d; ++free) {
        if (is_piv[free]) continue;
        Vec v(d, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = subm(0, m[i][free], p);
        out.push_back(std::move(v));
    }
    return out;
}

// Characteristic polynomial via Hessenberg reduction, low degree first.
Vec char_poly(std::vector<Vec> h, u64 p) {
    const std::size_t d = h.size();
    for (std::size_t c = 0; c + 2 < d; ++c) {
        std::size_t i = c + 1;
        while (i < d && h[i][c] == 0) ++i;
        if (i == d) continue;
        if (i != c + 1) {
            std::swap(h[i], h[c + 1]);
            for (auto& row : h) std::swap(row[i], row[c + 1]);
        }
        u64 iv = invm(h[c + 1][c], p);
        for (std::size_t r = c + 2; r < d; ++r) {
            if (h[r][c] == 0) continue;
            u64 u = mulm(h[r][c], iv, p);
            for (std::size_t k = 0; k < d; ++k) h[r][k] = subm(h[r][k], mulm(u, h[c + 1][k], p), p);
            for (std::size_t k = 0; k < d; ++k) h[k][c + 1] = addm(h[k][c + 1], mulm(u, h[k][r], p), p);
        }
    }
    std::vector<Vec> P(d + 1);
    P[0] = {1};
    for (std::size_t m = 0; m < d; ++m) {
        Vec next(m + 2, 0);
        for (std::size_t k = 0; k <= m; ++k) {
            next[k + 1] = addm(next[k + 1], P[m][k], p);
            next[k] = subm(next[k], mulm(h[m][m], P[m][k], p), p);
        }
        u64 prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod = mulm(prod, h[i + 1][i], p);
            u64 coef = mulm(h[i][m], prod, p);
            if (coef == 0) continue;
            for (std::size_t k = 0; k < P[i].size(); ++k) next[k] = subm(next[k], mulm(coef, P[i][k], p), p);
        }
        P[m + 1] = std::move(next);
    }
    return P[d];
}

std::vector<u64> roots_mod(const Vec& poly, u64 p) {
    std::vector<u64> out;
    for (u64 x = 0; x < p; ++x) {
        u64 acc = 0;
        for (std::size_t k = poly.size(); k-- > 0;) acc = addm(mulm(acc, x, p), poly[k], p);
        if (acc == 0) out.push_back(x);
    }
    return out;
}

u64 choose_prime(u64 e, u64 order, u64 cap) {
    for (u64 l = e + 1;; l += e) {
        if (l > cap) throw Error(ErrorCode::PrimeSearchExhausted, "no prime = 1 mod exponent below the cap", {static_cast<std::int64_t>(cap)});
        if (l * l > 4 * order && nt::is_prime(l)) return l;
    }
}

bool row_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

std::vector<std::int64_t> class_sums(const ClassData& cd, const std::vector<std::int64_t>& coeffs) {
    std::vector<std::int64_t> out(cd.class_count(), 0);
    for (std::size_t g = 0; g < coeffs.size(); ++g)
        if (coeffs[g]) out[cd.class_of[g]] += coeffs[g];
    return out;
}

Cyclotomic dot_classes(const CharacterTable& t, std::size_t row, const std::vector<std::int64_t>& sums) {
    Cyclotomic acc(t.field);
    for (std::size_t r = 0; r < sums.size(); ++r)
        if (sums[r]) acc += t.rows[row][r] * mpq_class(static_cast<long>(sums[r]));
    return acc;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, const TableOptions& opt) {
    return character_table(g, class_data(g), opt);
}

CharacterTable character_table(const FiniteGroup& g, const ClassData& cd, const TableOptions& opt) {
    if (g.order() > kDenseTableLimit) throw Error(ErrorCode::TooLarge, "character tables need |G| <= 4096", {g.order()});
    const std::size_t k = cd.class_count();
    if (k > opt.max_classes) throw Error(ErrorCode::TooLarge, "too many conjugacy classes", {static_cast<std::int64_t>(k)});
    CharacterTable t;
    t.group = g;
    t.classes = cd;
    const u64 e = g.exponent();
    t.field = CyclotomicField::get(static_cast<std::uint32_t>(e));
    const u64 n = g.order();

    // linear part from G/G'
    Quotient q = quotient(g, cd.derived_subgroup);
    auto lin = abelian_characters(q.group, e);
    std::vector<std::vector<Cyclotomic>> linear_rows;
    for (const auto& c : lin) {
        std::vector<Cyclotomic> row;
        row.reserve(k);
        for (std::size_t r = 0; r < k; ++r)
            row.push_back(Cyclotomic::zeta_power(t.field, c[q.projection[cd.classes[r][0]]]));
        linear_rows.push_back(std::move(row));
    }
    // principal first, the rest lexicographic
    std::sort(linear_rows.begin() + 1, linear_rows.end(), row_less);
    {
        // abelian_characters puts the trivial character first already
        for (auto& r : linear_rows) {
            t.rows.push_back(std::move(r));
            t.degrees.push_back(1);
        }
    }
    t.linear_count = t.rows.size();
    if (t.linear_count == k) return t;

    // nonlinear part: Dixon-Schneider on the subspace with zero G'-coset sums
    const u64 p = choose_prime(e, n, opt.prime_cap);
    t.prime = p;
    const u64 zeta = nt::powmod(nt::primitive_root(p), (p - 1) / e, p);

    std::vector<std::vector<std::size_t>> coset_classes(cd.coset_count);
    for (std::size_t r = 0; r < k; ++r) coset_classes[cd.coset_of[cd.classes[r][0]]].push_back(r);
    std::vector<Vec> init;
    for (const auto& cc : coset_classes)
        for (std::size_t a = 1; a < cc.size(); ++a) {
            Vec v(k, 0);
            v[cc[a]] = 1;
            v[cc[0]] = p - 1;
            init.push_back(std::move(v));
        }
    std::vector<Space> spaces{reduce_rows(std::move(init), p)};

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cd.classes[a].size() < cd.classes[b].size(); });

    auto apply = [&](std::size_t j, const Vec& y) {
        Vec out(k, 0);
        for (std::size_t r = 0; r < k; ++r) {
            if (y[r] == 0) continue;
            Element gr = cd.classes[r][0];
            for (Element x : cd.classes[j]) {
                std::size_t s = cd.class_of[g.multiply(g.inverse(x), gr)];
                out[s] = addm(out[s], y[r], p);
            }
        }
        return out;
    };

    for (std::size_t j : order) {
        if (j == 0) continue;
        bool all_lines = std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() <= 1; });
        if (all_lines) break;
        std::vector<Space> next;
        for (auto& sp : spaces) {
            const std::size_t d = sp.basis.size();
            if (d <= 1) {
                next.push_back(std::move(sp));
                continue;
            }
            std::vector<Vec> A(d, Vec(d, 0));
            for (std::size_t i = 0; i < d; ++i) {
                Vec y = apply(j, sp.basis[i]);
                for (std::size_t i2 = 0; i2 < d; ++i2) A[i2][i] = y[sp.pivots[i2]];
            }
            auto roots = roots_mod(char_poly(A, p), p);
            if (roots.size() <= 1) {
                next.push_back(std::move(sp));
                continue;
            }
            std::size_t total = 0;
            for (u64 lam : roots) {
                auto B = A;
                for (std::size_t i = 0; i < d; ++i) B[i][i] = subm(B[i][i], lam, p);
                auto ns = null_space(std::move(B), p);
                std::vector<Vec> vecs;
                for (const auto& c : ns) {
                    Vec v(k, 0);
                    for (std::size_t i = 0; i < d; ++i)
                        if (c[i])
                            for (std::size_t x = 0; x < k; ++x)
                                if (sp.basis[i][x]) v[x] = addm(v[x], mulm(c[i], sp.basis[i][x], p), p);
                    vecs.push_back(std::move(v));
                }
                total += vecs.size();
                next.push_back(reduce_rows(std::move(vecs), p));
            }
            if (total != d) throw Error(ErrorCode::StructureError, "class matrices are not diagonalizable mod the chosen prime");
        }
        spaces = std::move(next);
    }

    // power maps for lifting
    std::vector<std::vector<std::uint32_t>> power_classes(k);
    for (std::size_t r = 0; r < k; ++r) {
        Element x = cd.classes[r][0];
        std::uint32_t o = g.element_order(x);
        Element y = 0;
        for (std::uint32_t l = 0; l < o; ++l) {
            power_classes[r].push_back(cd.class_of[y]);
            y = g.multiply(y, x);
        }
    }

    std::vector<std::pair<u64, std::vector<Cyclotomic>>> nonlinear;
    const u64 nmod = n % p;
    for (const auto& sp : spaces) {
        if (sp.basis.size() != 1) throw Error(ErrorCode::StructureError, "eigenspace did not split to a line");
        Vec w = sp.basis[0];
        if (w[0] == 0) throw Error(ErrorCode::StructureError, "central character vanishes at the identity");
        u64 sc = invm(w[0], p);
        for (auto& x : w) x = mulm(x, sc, p);
        u64 S = 0;
        for (std::size_t r = 0; r < k; ++r)
            S = addm(S, mulm(mulm(w[r], w[cd.inverse_class[r]], p), invm(cd.classes[r].size() % p, p), p), p);
        u64 target = mulm(nmod, invm(S, p), p);
        u64 deg = 0;
        for (u64 d = 1; d * d <= n; ++d)
            if (n % d == 0 && (d * d) % p == target) {
                deg = d;
                break;
            }
        if (deg == 0) throw Error(ErrorCode::StructureError, "no degree matches the modular norm");
        Vec chi(k);
        for (std::size_t r = 0; r < k; ++r) chi[r] = mulm(mulm(w[r], deg % p, p), invm(cd.classes[r].size() % p, p), p);
        std::vector<Cyclotomic> row;
        row.reserve(k);
        for (std::size_t r = 0; r < k; ++r) {
            const auto& pc = power_classes[r];
            const u64 o = pc.size();
            const u64 zo = nt::powmod(zeta, e / o, p);
            const u64 zo_inv = invm(zo, p);
            const u64 o_inv = invm(o % p, p);
            std::vector<std::int64_t> mult(o);
            u64 total = 0;
            for (u64 kk = 0; kk < o; ++kk) {
                u64 acc = 0, step = nt::powmod(zo_inv, kk, p), cur = 1;
                for (u64 l = 0; l < o; ++l) {
                    acc = addm(acc, mulm(chi[pc[l]], cur, p), p);
                    cur = mulm(cur, step, p);
                }
                u64 m = mulm(acc, o_inv, p);
                if (m > deg) throw Error(ErrorCode::StructureError, "eigenvalue multiplicity out of range");
                mult[kk] = static_cast<std::int64_t>(m);
                total += m;
            }
            if (total != deg) throw Error(ErrorCode::StructureError, "eigenvalue multiplicities do not sum to the degree");
            row.push_back(Cyclotomic::from_root_counts(t.field, mult, static_cast<std::uint32_t>(e / o)));
        }
        nonlinear.emplace_back(deg, std::move(row));
    }
    std::sort(nonlinear.begin(), nonlinear.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return row_less(a.second, b.second);
    });
    for (auto& [d, row] : nonlinear) {
        t.rows.push_back(std::move(row));
        t.degrees.push_back(d);
    }
    return t;
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
    OrthogonalityReport rep;
    const std::size_t k = t.classes.class_count();
    const mpq_class order(static_cast<unsigned long>(t.group.order()));
    if (t.rows.size() != k) {
        rep.rows_ok = rep.columns_ok = false;
    }
    mpq_class sum_sq = 0;
    for (auto d : t.degrees) sum_sq += mpq_class(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    rep.degrees_ok = sum_sq == order;
    if (!rep.rows_ok) return rep;

    std::vector<std::vector<Cyclotomic>> conj(k);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& v : t.rows[i]) conj[i].push_back(v.conj());
    for (std::size_t i = 0; i < k && rep.rows_ok; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Cyclotomic acc(t.field);
            for (std::size_t c = 0; c < k; ++c)
                acc += t.rows[i][c] * conj[j][c] * mpq_class(static_cast<unsigned long>(t.classes.classes[c].size()));
            Cyclotomic want(t.field, i == j ? order : mpq_class(0));
            if (acc != want) {
                rep.rows_ok = false;
                break;
            }
        }
    for (std::size_t a = 0; a < k && rep.columns_ok; ++a)
        for (std::size_t b = a; b < k; ++b) {
            Cyclotomic acc(t.field);
            for (std::size_t i = 0; i < k; ++i) acc += t.rows[i][a] * conj[i][b];
            Cyclotomic want(t.field, a == b ? mpq_class(static_cast<unsigned long>(t.classes.centralizer_orders[a])) : mpq_class(0));
            if (acc != want) {
                rep.columns_ok = false;
                break;
            }
        }
    return rep;
}

nlohmann::json table_to_json(const CharacterTable& t) {
    nlohmann::json j;
    j["conductor"] = t.field->conductor();
    j["group_order"] = t.group.order();
    j["prime"] = t.prime;
    j["degrees"] = t.degrees;
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t r = 0; r < t.classes.class_count(); ++r)
        classes.push_back({{"representative", t.classes.classes[r][0]}, {"size", t.classes.classes[r].size()}});
    j["classes"] = classes;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

// --- chi_S / chi_T -------------------------------------------------------------

namespace {

struct IntersectionCounts {
    std::vector<std::int64_t> a_class, star_class, a_coset, star_coset;
};

IntersectionCounts intersection_counts(const KantorFamily& f, const ClassData& cd) {
    IntersectionCounts c;
    c.a_class.assign(cd.class_count(), 0);
    c.star_class.assign(cd.class_count(), 0);
    c.a_coset.assign(cd.coset_count, 0);
    c.star_coset.assign(cd.coset_count, 0);
    for (const auto& a : f.members)
        for (Element x : a.members()) {
            ++c.a_class[cd.class_of[x]];
            ++c.a_coset[cd.coset_of[x]];
        }
    for (const auto& a : f.star_members)
        for (Element x : a.members()) {
            ++c.star_class[cd.class_of[x]];
            ++c.star_coset[cd.coset_of[x]];
        }
    return c;
}

void check_same_group(const KantorFamily& f, const ClassData& cd) {
    if (cd.class_of.size() != f.group.order()) throw Error(ErrorCode::GroupMismatch, "class data belongs to another group");
}

ClassFunction st_function(const KantorFamily& f, const ClassData& cd, bool is_s) {
    check_same_group(f, cd);
    auto c = intersection_counts(f, cd);
    const mpz_class s = f.s, t = f.t, u = cd.coset_count;
    const mpz_class g = std::gcd(f.s, f.t);
    const mpz_class den = is_s ? mpz_class(s * (s + t)) : mpz_class(s * t * (s + t));
    FieldPtr field = CyclotomicField::get(1);
    ClassFunction out;
    out.group = f.group;
    for (std::size_t r = 0; r < cd.class_count(); ++r) {
        std::size_t coset = cd.coset_of[cd.classes[r][0]];
        mpz_class cent = static_cast<unsigned long>(cd.centralizer_orders[r]);
        mpz_class num;
        if (is_s)
            num = cent * (s * c.a_class[r] + c.star_class[r]) - u * (s * c.a_coset[coset] + c.star_coset[coset]);
        else
            num = g * (cent * (t * c.a_class[r] - c.star_class[r]) - u * (t * c.a_coset[coset] - c.star_coset[coset]));
        if (num % den != 0)
            throw Error(ErrorCode::NonIntegralValue, std::string(is_s ? "chi_S" : "chi_T") + " is not integral on a class",
                        {static_cast<std::int64_t>(r)});
        out.values.emplace_back(field, mpq_class(num / den));
    }
    return out;
}

}  // namespace

ClassFunction chi_S(const KantorFamily& f, const ClassData& cd) { return st_function(f, cd, true); }
ClassFunction chi_T(const KantorFamily& f, const ClassData& cd) { return st_function(f, cd, false); }

Certificate certify_character(const ClassFunction& f, const CharacterTable& t, unsigned jobs) {
    if (!f.group.same_group(t.group) || f.values.size() != t.classes.class_count())
        throw Error(ErrorCode::GroupMismatch, "class function and table belong to different groups");
    const std::size_t k = t.rows.size();
    std::vector<Cyclotomic> ip(k);
    const mpq_class inv_order(1, static_cast<unsigned long>(t.group.order()));
    parallel_for(k, jobs, [&](std::size_t i) {
        Cyclotomic acc(t.field);
        for (std::size_t c = 0; c < f.values.size(); ++c) {
            if (f.values[c].is_zero()) continue;
            acc += f.values[c] * t.rows[i][c].conj() * mpq_class(static_cast<unsigned long>(t.classes.classes[c].size()));
        }
        ip[i] = acc * inv_order;
    });
    Certificate cert;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& v = ip[i];
        mpq_class m = v.coeffs().empty() ? mpq_class(0) : v.coeffs()[0];
        cert.multiplicities.push_back(m);
        if (cert.is_character && !v.is_nonnegative_integer()) {
            cert.is_character = false;
            cert.offending_row = i;
        }
    }
    return cert;
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    nlohmann::json m = nlohmann::json::array();
    for (const auto& x : c.multiplicities) m.push_back(rational_to_string(x));
    j["multiplicities"] = m;
    j["is_character"] = c.is_character;
    j["offending_row"] = c.offending_row ? nlohmann::json(*c.offending_row) : nlohmann::json(nullptr);
    return j;
}

Cyclotomic evaluate(const CharacterTable& t, std::size_t row, const std::vector<std::int64_t>& coeffs) {
    return dot_classes(t, row, class_sums(t.classes, coeffs));
}

// --- linear characters on Delta ---------------------------------------------------

std::vector<LinearDeltaRecord> linear_values_on_delta(const KantorFamily& f) {
    return linear_values_on_delta(f, character_table(f.group));
}

std::vector<LinearDeltaRecord> linear_values_on_delta(const KantorFamily& f, const CharacterTable& t) {
    if (!f.group.same_group(t.group)) throw Error(ErrorCode::GroupMismatch, "table belongs to another group");
    auto dp = delta_elements(f);
    auto ds = class_sums(t.classes, dp.delta.coeffs());
    auto dss = class_sums(t.classes, dp.delta_star.coeffs());
    const std::int64_t s = f.s, tt = f.t;
    const Cyclotomic one(t.field, 1);
    std::vector<LinearDeltaRecord> out;
    for (std::size_t i = 0; i < t.linear_count; ++i) {
        LinearDeltaRecord rec;
        rec.row = i;
        rec.principal = i == 0;
        std::vector<bool> ker(t.classes.class_count());
        for (std::size_t r = 0; r < ker.size(); ++r) ker[r] = t.rows[i][r] == one;
        for (const auto& a : f.members)
            rec.u += std::all_of(a.members().begin(), a.members().end(), [&](Element x) { return ker[t.classes.class_of[x]]; });
        for (const auto& a : f.star_members)
            rec.u_star += std::all_of(a.members().begin(), a.members().end(), [&](Element x) { return ker[t.classes.class_of[x]]; });
        Cyclotomic vd = dot_classes(t, i, ds), vds = dot_classes(t, i, dss);
        if (!vd.is_rational() || !vds.is_rational() || vd.rational().get_den() != 1 || vds.rational().get_den() != 1) {
            rec.ok = false;
        } else {
            rec.chi_delta = vd.rational().get_num().get_si();
            rec.chi_delta_star = vds.rational().get_num().get_si();
            if (rec.principal) {
                rec.ok = rec.chi_delta == (tt + 1) * (s - 1) && rec.chi_delta_star == (tt + 1) * (s * tt - 1);
            } else {
                bool pair_ok = (rec.u == 1 && rec.u_star == 1) || (rec.u == 0 && rec.u_star == 0) ||
                               (tt % s == 0 && rec.u == tt / s + 1 && rec.u_star == 0);
                rec.ok = pair_ok && rec.chi_delta == s * rec.u - tt - 1 && rec.chi_delta_star == s * tt * rec.u_star - tt - 1;
            }
        }
        out.push_back(rec);
    }
    return out;
}

// --- nonlinear characters ------------------------------------------------------------

NonlinearReport nonlinear_divisibility_check(const KantorFamily& f, const CharacterTable& t) {
    if (!f.group.same_group(t.group)) throw Error(ErrorCode::GroupMismatch, "table belongs to another group");
    NonlinearReport rep;
    const std::size_t k = t.rows.size();
    if (t.linear_count == k) return rep;
    const FiniteGroup& g = f.group;
    const std::int64_t s = f.s, tt = f.t;
    auto dp = delta_elements(f);
    auto st = st_elements(f);
    auto d2 = dp.delta * dp.delta;
    auto ident = [&](std::int64_t c) { return GroupRingElement::scalar(g, c); };
    auto fy = (dp.delta - ident(s - 1)) * (dp.delta + ident(tt + 1)) * (dp.delta + ident(tt + 1 - s));

    auto cs_S = class_sums(t.classes, st.S.coeffs());
    auto cs_T = class_sums(t.classes, st.T.coeffs());
    auto cs_D = class_sums(t.classes, dp.delta.coeffs());
    auto cs_D2 = class_sums(t.classes, d2.coeffs());

    // class sums of f(Delta) * h for every h
    std::vector<std::pair<Element, std::int64_t>> supp;
    for (Element x = 0; x < g.order(); ++x)
        if (fy[x]) supp.emplace_back(x, fy[x]);
    std::vector<std::vector<std::int64_t>> shifted(g.order());
    for (Element h = 0; h < g.order(); ++h) {
        auto& v = shifted[h];
        v.assign(t.classes.class_count(), 0);
        for (auto [x, c] : supp) v[t.classes.class_of[g.multiply(x, h)]] += c;
    }

    const mpq_class lam[3] = {mpq_class(s - 1), mpq_class(-tt - 1), mpq_class(s - tt - 1)};
    const std::int64_t gg = std::gcd(s, tt);
    for (std::size_t i = t.linear_count; i < k; ++i) {
        NonlinearRecord rec;
        rec.row = i;
        rec.degree = t.degrees[i];
        Cyclotomic vs = dot_classes(t, i, cs_S), vt = dot_classes(t, i, cs_T);
        Cyclotomic vd = dot_classes(t, i, cs_D), vd2 = dot_classes(t, i, cs_D2);
        bool rational = vs.is_rational() && vt.is_rational() && vd.is_rational() && vd2.is_rational();
        bool ints_ok = false, eig_ok = false;
        if (rational) {
            rec.chi_S = vs.rational();
            rec.chi_T = vt.rational();
            mpq_class om = rec.chi_S / mpq_class(s * (s + tt));
            mpq_class zz = rec.chi_T * gg / mpq_class((s + tt) * s * tt);
            rec.omega = om;
            rec.z = zz;
            ints_ok = om.get_den() == 1 && om >= 0 && zz.get_den() == 1 && zz >= 0;
            mpq_class m = static_cast<unsigned long>(rec.degree), a = vd.rational(), b = vd2.rational();
            eig_ok = true;
            for (int x = 0; x < 3; ++x) {
                const mpq_class& lj = lam[(x + 1) % 3];
                const mpq_class& lk = lam[(x + 2) % 3];
                mpq_class n = (b - (lj + lk) * a + lj * lk * m) / ((lam[x] - lj) * (lam[x] - lk));
                rec.eigen_multiplicities.push_back(n);
                if (n.get_den() != 1 || n < 0) eig_ok = false;
            }
        }
        rec.annihilated = true;
        for (Element h = 0; h < g.order() && rec.annihilated; ++h)
            if (!dot_classes(t, i, shifted[h]).is_zero()) rec.annihilated = false;
        rec.ok = rational && ints_ok && eig_ok && rec.annihilated;
        if (!rec.ok) rep.pass = false;
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

// --- U0 and the skew case ------------------------------------------------------------

U0Profile u0_intersection_profile(const KantorFamily& f, Element g) {
    auto st = stgq_structure(f);
    if (!st.is_stgq) throw Error(ErrorCode::HypothesisViolation, "family does not have the skew translation structure");
    if (g >= f.group.order() || !st.U0.contains(g)) throw Error(ErrorCode::NotInU0, "element is not in U0", {static_cast<std::int64_t>(g)});
    ClassData cd = class_data(f.group);
    const auto& cls = cd.classes[cd.class_of[g]];
    const std::uint32_t coset = cd.coset_of[g];
    const bool in_derived = cd.derived_subgroup.contains(g);
    U0Profile p;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        std::uint32_t ac = 0, sc = 0, acl = 0, scl = 0;
        for (Element x : f.members[i].members()) {
            ac += cd.coset_of[x] == coset;
            acl += cd.class_of[x] == cd.class_of[g];
        }
        for (Element x : f.star_members[i].members()) {
            sc += cd.coset_of[x] == coset;
            scl += cd.class_of[x] == cd.class_of[g];
        }
        p.a_coset.push_back(ac);
        p.star_coset.push_back(sc);
        p.a_class.push_back(acl);
        p.star_class.push_back(scl);
        if (sc != cd.derived_subgroup.size() || ac != static_cast<std::uint32_t>(in_derived) || scl != cls.size() ||
            acl != static_cast<std::uint32_t>(g == 0))
            p.profile_holds = false;
    }
    return p;
}

mpq_class skew_chis_closed_form(U0Status status, std::uint64_t s, std::uint64_t g_mod_gprime) {
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
    mpq_class c(mpz_class(static_cast<unsigned long>(s + 1)), mpz_class(static_cast<unsigned long>(2 * s)));
    c.canonicalize();
    mpz_class u = static_cast<unsigned long>(g_mod_gprime);
    mpz_class s3 = mpz_class(static_cast<unsigned long>(s)) * s * s;
    switch (status) {
        case U0Status::InU0NotDerived:
            return 0;
        case U0Status::InDerivedNonIdentity:
            return -c * mpq_class(u);
        case U0Status::Identity:
            return c * mpq_class(s3 - u);
    }
    return 0;
}

OttGap ott_gap_inner_product(std::uint64_t s, std::uint64_t u, std::uint64_t gprime_order, std::uint64_t m1_order) {
    if (gprime_order != 2 * m1_order)
        throw Error(ErrorCode::HypothesisViolation, "[G' : M1] must be 2",
                    {static_cast<std::int64_t>(gprime_order), static_cast<std::int64_t>(m1_order)});
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
    mpz_class S = static_cast<unsigned long>(s), U = static_cast<unsigned long>(u);
    mpz_class Gp = static_cast<unsigned long>(gprime_order), M1 = static_cast<unsigned long>(m1_order);
    mpz_class bracket = (S * S * S - U) * S - U * S * (M1 - 1) + U * S * (Gp - M1);
    mpq_class v(mpz_class((S + 1) * bracket), mpz_class(2 * S * S * S * S));
    v.canonicalize();
    return {v, v.get_den() == 1};
}

}  // namespace gqlab
