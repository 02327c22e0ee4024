#include "gqlab/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "gqlab/errors.hpp"
#include "gqlab/field.hpp"
#include "gqlab/numtheory.hpp"

namespace gqlab {

struct FiniteGroup::Impl {
    std::uint32_t n = 0;
    std::vector<Element> table;  // empty when rule-backed
    MultRule rule;
    std::vector<Element> inverse;
    std::string label;
    nlohmann::json structure;
    std::uint64_t exponent = 1;
};

namespace {

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

FiniteGroup FiniteGroup::from_table(std::uint32_t n, std::vector<Element> table, std::string label,
                                    nlohmann::json structure) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
    if (n > kDenseTableLimit) throw Error(ErrorCode::OrderOverflow, "dense table limited to order 4096");
    if (table.size() != static_cast<std::size_t>(n) * n) throw Error(ErrorCode::SizeMismatch, "table size is not n*n");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= n) throw Error(ErrorCode::StructureError, "table entry out of range", {static_cast<std::int64_t>(i / n), static_cast<std::int64_t>(i % n)});
    }
    auto at = [&](Element a, Element b) { return table[static_cast<std::size_t>(a) * n + b]; };

    for (Element x = 0; x < n; ++x) {
        if (at(0, x) != x || at(x, 0) != x) throw Error(ErrorCode::NoIdentity, "id 0 is not a two-sided identity", {x});
    }
    if (n <= 512) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                Element ab = at(a, b);
                for (Element c = 0; c < n; ++c) {
                    if (at(ab, c) != at(a, at(b, c))) throw Error(ErrorCode::NonAssociative, "associativity fails", {a, b, c});
                }
            }
    } else {
        std::mt19937_64 rng(0x5eed5eedULL);
        std::uniform_int_distribution<Element> pick(0, n - 1);
        for (int i = 0; i < 100000; ++i) {
            Element a = pick(rng), b = pick(rng), c = pick(rng);
            if (at(at(a, b), c) != at(a, at(b, c))) throw Error(ErrorCode::NonAssociative, "associativity fails", {a, b, c});
        }
    }
    std::vector<Element> inverse(n, n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (at(x, y) == 0) {
                inverse[x] = y;
                break;
            }
        }
        if (inverse[x] == n || at(inverse[x], x) != 0) throw Error(ErrorCode::NoInverse, "element has no inverse", {x});
    }

    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->table = std::move(table);
    impl->inverse = std::move(inverse);
    impl->label = std::move(label);
    impl->structure = std::move(structure);
    FiniteGroup g;
    g.impl_ = impl;
    std::uint64_t e = 1;
    for (Element x = 0; x < n; ++x) e = lcm64(e, g.element_order(x));
    impl->exponent = e;
    return g;
}

FiniteGroup FiniteGroup::from_rule(std::uint32_t n, const MultRule& rule, std::string label, nlohmann::json structure,
                                   MultRule inverse_rule) {
    if (n <= kDenseTableLimit) {
        std::vector<Element> table(static_cast<std::size_t>(n) * n);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = rule(a, b);
        return from_table(n, std::move(table), std::move(label), std::move(structure));
    }
    if (!inverse_rule) throw Error(ErrorCode::InvalidArgument, "rule-backed groups above order 4096 need an inverse rule");
    std::vector<Element> inverse(n);
    for (Element x = 0; x < n; ++x) {
        if (rule(0, x) != x || rule(x, 0) != x) throw Error(ErrorCode::NoIdentity, "id 0 is not a two-sided identity", {x});
        inverse[x] = inverse_rule(x, 0);
        if (inverse[x] >= n || rule(x, inverse[x]) != 0 || rule(inverse[x], x) != 0) throw Error(ErrorCode::NoInverse, "inverse rule wrong", {x});
    }
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
        Element a = pick(rng), b = pick(rng), c = pick(rng);
        if (rule(rule(a, b), c) != rule(a, rule(b, c))) throw Error(ErrorCode::NonAssociative, "associativity fails", {a, b, c});
    }
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->rule = rule;
    impl->inverse = std::move(inverse);
    impl->label = std::move(label);
    impl->structure = std::move(structure);
    FiniteGroup g;
    g.impl_ = impl;
    std::uint64_t e = 1;
    for (Element x = 0; x < n; ++x) e = lcm64(e, g.element_order(x));
    impl->exponent = e;
    return g;
}

std::uint32_t FiniteGroup::order() const { return impl_->n; }

Element FiniteGroup::multiply(Element a, Element b) const {
    if (!impl_->table.empty()) return impl_->table[static_cast<std::size_t>(a) * impl_->n + b];
    return impl_->rule(a, b);
}

Element FiniteGroup::inverse(Element a) const { return impl_->inverse[a]; }

Element FiniteGroup::power(Element a, std::int64_t e) const {
    if (e < 0) {
        a = inverse(a);
        e = -e;
    }
    Element r = 0;
    while (e) {
        if (e & 1) r = multiply(r, a);
        a = multiply(a, a);
        e >>= 1;
    }
    return r;
}

Element FiniteGroup::conjugate(Element x, Element g) const { return multiply(multiply(inverse(g), x), g); }

Element FiniteGroup::commutator(Element a, Element b) const {
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

std::uint32_t FiniteGroup::element_order(Element a) const {
    std::uint32_t k = 1;
    Element x = a;
    while (x != 0) {
        x = multiply(x, a);
        ++k;
    }
    return k;
}

std::uint64_t FiniteGroup::exponent() const { return impl_->exponent; }

bool FiniteGroup::is_abelian() const {
    for (Element a = 0; a < order(); ++a)
        for (Element b = a + 1; b < order(); ++b)
            if (multiply(a, b) != multiply(b, a)) return false;
    return true;
}

bool FiniteGroup::has_table() const { return !impl_->table.empty(); }
const std::string& FiniteGroup::label() const { return impl_->label; }
const nlohmann::json& FiniteGroup::structure() const { return impl_->structure; }

// ---------------------------------------------------------------------------

Subgroup Subgroup::from_members(const FiniteGroup& g, std::vector<Element> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h;
    h.parent_ = g;
    h.mask_.assign(g.order(), false);
    for (Element x : members) {
        if (x >= g.order()) throw Error(ErrorCode::StructureError, "member id out of range", {x});
        h.mask_[x] = true;
    }
    if (members.empty() || members.front() != 0) throw Error(ErrorCode::StructureError, "subgroup must contain the identity");
    for (Element a : members) {
        if (!h.mask_[g.inverse(a)]) throw Error(ErrorCode::StructureError, "not closed under inverse", {a});
        for (Element b : members) {
            if (!h.mask_[g.multiply(a, b)]) throw Error(ErrorCode::StructureError, "not closed under product", {a, b});
        }
    }
    h.members_ = std::move(members);
    return h;
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return from_members(g, {0}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
    Subgroup h;
    h.parent_ = g;
    h.members_.resize(g.order());
    std::iota(h.members_.begin(), h.members_.end(), 0);
    h.mask_.assign(g.order(), true);
    return h;
}

bool Subgroup::subset_of(const Subgroup& o) const {
    for (Element x : members_)
        if (!o.contains(x)) return false;
    return true;
}

// ---------------------------------------------------------------------------

FiniteGroup cyclic_group(std::uint32_t n) {
    return FiniteGroup::from_rule(
        n, [n](Element a, Element b) { return (a + b) % n; }, "cyclic(" + std::to_string(n) + ")",
        {{"kind", "cyclic"}, {"n", n}}, [n](Element a, Element) { return (n - a) % n; });
}

FiniteGroup heisenberg_group(std::uint32_t q) {
    if (q % 2 == 0 || !nt::prime_power(q)) throw Error(ErrorCode::InvalidFieldOrder, "heisenberg_group needs an odd prime power, got " + std::to_string(q));
    auto f = std::make_shared<GaloisField>(q);
    const std::uint64_t n64 = static_cast<std::uint64_t>(q) * q * q;
    if (n64 > 1u << 20) throw Error(ErrorCode::OrderOverflow, "order too large");
    auto split = [q](Element a) { return std::array<Element, 3>{a / (q * q), (a / q) % q, a % q}; };
    auto join = [q](Element x, Element y, Element z) { return (x * q + y) * q + z; };
    MultRule rule = [=](Element a, Element b) {
        auto u = split(a), v = split(b);
        return join(f->add(u[0], v[0]), f->add(u[1], v[1]), f->add(f->add(u[2], v[2]), f->mul(u[0], v[1])));
    };
    MultRule inv = [=](Element a, Element) {
        auto u = split(a);
        // (x,y,z)^{-1} = (-x, -y, -z + xy)
        return join(f->neg(u[0]), f->neg(u[1]), f->add(f->neg(u[2]), f->mul(u[0], u[1])));
    };
    return FiniteGroup::from_rule(static_cast<std::uint32_t>(n64), rule, "heisenberg(" + std::to_string(q) + ")",
                                  {{"kind", "heisenberg"}, {"q", q}}, inv);
}

FiniteGroup elementary_abelian(std::uint32_t p, std::uint32_t n) {
    if (!nt::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        order *= p;
        if (order > kDenseTableLimit) throw Error(ErrorCode::OrderOverflow, "p^n exceeds 4096");
    }
    auto N = static_cast<std::uint32_t>(order);
    MultRule rule = [p, n](Element a, Element b) {
        if (p == 2) return a ^ b;
        Element r = 0, scale = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            r += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return r;
    };
    return FiniteGroup::from_rule(N, rule, "elementary_abelian(" + std::to_string(p) + "," + std::to_string(n) + ")",
                                  {{"kind", "elementary_abelian"}, {"p", p}, {"n", n}});
}

FiniteGroup extraspecial_central_c4(std::uint32_t n, ExtraspecialKind kind) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    if (2 * n + 2 > 12) throw Error(ErrorCode::OrderOverflow, "2^{2n+2} exceeds 4096");
    const std::uint32_t bits = 2 * n;
    // v packs (a1,b1,...,an,bn) with a1 the most significant bit.
    auto coord = [bits](Element v, std::uint32_t i) { return (v >> (bits - 1 - i)) & 1u; };
    const bool minus = kind == ExtraspecialKind::Minus;
    MultRule rule = [=](Element x, Element y) {
        Element v = x >> 2, c = x & 3u, w = y >> 2, d = y & 3u;
        std::uint32_t beta = 0;
        for (std::uint32_t i = 0; i < n; ++i) beta ^= coord(v, 2 * i) & coord(w, 2 * i + 1);
        if (minus) beta ^= (coord(v, 0) & coord(w, 0)) ^ (coord(v, 1) & coord(w, 1));
        return ((v ^ w) << 2) | ((c + d + 2 * beta) & 3u);
    };
    std::uint32_t order = 1u << (2 * n + 2);
    return FiniteGroup::from_rule(order, rule,
                                  std::string("extraspecial_c4(") + std::to_string(n) + "," + (minus ? "minus" : "plus") + ")",
                                  {{"kind", "extraspecial_c4"}, {"n", n}, {"type", minus ? "minus" : "plus"}});
}

FiniteGroup group_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "group JSON must be an object");
    if (j.contains("structure") && j["structure"].is_object()) {
        const auto& s = j["structure"];
        std::string kind = s.value("kind", "");
        FiniteGroup g;
        if (kind == "heisenberg") g = heisenberg_group(s.at("q").get<std::uint32_t>());
        else if (kind == "elementary_abelian") g = elementary_abelian(s.at("p").get<std::uint32_t>(), s.at("n").get<std::uint32_t>());
        else if (kind == "cyclic") g = cyclic_group(s.at("n").get<std::uint32_t>());
        else if (kind == "extraspecial_c4")
            g = extraspecial_central_c4(s.at("n").get<std::uint32_t>(), s.at("type").get<std::string>() == "minus" ? ExtraspecialKind::Minus : ExtraspecialKind::Plus);
        if (g.valid()) {
            if (j.contains("order") && j["order"].get<std::uint32_t>() != g.order()) throw Error(ErrorCode::SchemaError, "order does not match structure");
            return g;
        }
    }
    if (j.contains("table")) {
        auto n = j.at("order").get<std::uint32_t>();
        auto rows = j.at("table").get<std::vector<std::vector<Element>>>();
        std::vector<Element> flat;
        flat.reserve(static_cast<std::size_t>(n) * n);
        for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
        return FiniteGroup::from_table(n, std::move(flat), j.value("label", "table"));
    }
    throw Error(ErrorCode::SchemaError, "group JSON has neither a known structure nor a table");
}

nlohmann::json group_to_json(const FiniteGroup& g, bool include_table) {
    nlohmann::json j;
    j["label"] = g.label();
    j["order"] = g.order();
    if (!g.structure().is_null()) j["structure"] = g.structure();
    if (include_table || g.structure().is_null()) {
        std::vector<std::vector<Element>> rows(g.order(), std::vector<Element>(g.order()));
        for (Element a = 0; a < g.order(); ++a)
            for (Element b = 0; b < g.order(); ++b) rows[a][b] = g.multiply(a, b);
        j["table"] = rows;
    }
    return j;
}

// ---------------------------------------------------------------------------

namespace {

// Closure of `seed` (already a subgroup mask) with extra generators added.
void close_under(const FiniteGroup& g, std::vector<bool>& mask, std::vector<Element>& members, const std::vector<Element>& gens) {
    std::size_t head = 0;
    while (head < members.size()) {
        Element x = members[head++];
        for (Element s : gens) {
            Element y = g.multiply(x, s);
            if (!mask[y]) {
                mask[y] = true;
                members.push_back(y);
            }
        }
    }
}

}  // namespace

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::vector<bool> mask(g.order(), false);
    std::vector<Element> members{0};
    mask[0] = true;
    std::vector<Element> used;
    for (Element x : gens) {
        if (x >= g.order()) throw Error(ErrorCode::InvalidArgument, "generator id out of range", {x});
        if (mask[x]) continue;
        used.push_back(x);
        std::fill(mask.begin(), mask.end(), false);
        members.assign(1, 0);
        mask[0] = true;
        close_under(g, mask, members, used);
    }
    std::sort(members.begin(), members.end());
    return Subgroup::from_members(g, std::move(members));
}

Subgroup center(const FiniteGroup& g) {
    std::vector<Element> z;
    for (Element x = 0; x < g.order(); ++x) {
        bool central = true;
        for (Element y = 0; y < g.order() && central; ++y) central = g.multiply(x, y) == g.multiply(y, x);
        if (central) z.push_back(x);
    }
    return Subgroup::from_members(g, std::move(z));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Element> comms;
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = a + 1; b < g.order(); ++b) {
            Element c = g.commutator(a, b);
            if (!seen[c]) {
                seen[c] = true;
                comms.push_back(c);
            }
        }
    return subgroup_closure(g, comms);
}

Subgroup frattini_p_group(const FiniteGroup& g) {
    auto pp = nt::prime_power(g.order());
    if (g.order() == 1) return Subgroup::trivial(g);
    if (!pp) throw Error(ErrorCode::InvalidArgument, "frattini_p_group needs a p-group");
    auto p = static_cast<std::int64_t>(pp->first);
    std::vector<bool> seen(g.order(), false);
    std::vector<Element> gens;
    auto add = [&](Element x) {
        if (!seen[x]) {
            seen[x] = true;
            gens.push_back(x);
        }
    };
    for (Element a = 0; a < g.order(); ++a) add(g.power(a, p));
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = a + 1; b < g.order(); ++b) add(g.commutator(a, b));
    return subgroup_closure(g, gens);
}

std::optional<std::pair<Element, Element>> normality_witness(const Subgroup& n) {
    const auto& g = n.parent();
    for (Element x : n.members())
        for (Element y = 0; y < g.order(); ++y)
            if (!n.contains(g.conjugate(x, y))) return std::make_pair(x, y);
    return std::nullopt;
}

ClassData class_data(const FiniteGroup& g) {
    ClassData cd;
    const auto n = g.order();
    cd.class_of.assign(n, UINT32_MAX);
    for (Element x = 0; x < n; ++x) {
        if (cd.class_of[x] != UINT32_MAX) continue;
        auto idx = static_cast<std::uint32_t>(cd.classes.size());
        std::vector<Element> cls;
        for (Element y = 0; y < n; ++y) {
            Element c = g.conjugate(x, y);
            if (cd.class_of[c] == UINT32_MAX) {
                cd.class_of[c] = idx;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        cd.classes.push_back(std::move(cls));
    }
    for (auto& c : cd.classes) cd.centralizer_orders.push_back(n / c.size());
    for (auto& c : cd.classes) cd.inverse_class.push_back(cd.class_of[g.inverse(c.front())]);

    cd.derived_subgroup = derived_subgroup(g);
    cd.coset_of.assign(n, UINT32_MAX);
    for (Element x = 0; x < n; ++x) {
        if (cd.coset_of[x] != UINT32_MAX) continue;
        for (Element d : cd.derived_subgroup.members()) cd.coset_of[g.multiply(x, d)] = cd.coset_count;
        ++cd.coset_count;
    }
    return cd;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!n.parent().same_group(g)) throw Error(ErrorCode::GroupMismatch, "subgroup of a different group");
    if (auto w = normality_witness(n)) throw Error(ErrorCode::NotNormal, "subgroup is not normal", {w->first, w->second});
    Quotient q;
    q.projection.assign(g.order(), UINT32_MAX);
    for (Element x = 0; x < g.order(); ++x) {
        if (q.projection[x] != UINT32_MAX) continue;
        auto id = static_cast<Element>(q.lift.size());
        q.lift.push_back(x);
        for (Element m : n.members()) q.projection[g.multiply(x, m)] = id;
    }
    auto k = static_cast<std::uint32_t>(q.lift.size());
    std::vector<Element> table(static_cast<std::size_t>(k) * k);
    for (Element a = 0; a < k; ++a)
        for (Element b = 0; b < k; ++b) table[static_cast<std::size_t>(a) * k + b] = q.projection[g.multiply(q.lift[a], q.lift[b])];
    q.group = FiniteGroup::from_table(k, std::move(table), g.label() + "/N");
    return q;
}

std::vector<Element> product_set(const FiniteGroup& g, const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<bool> mask(g.order(), false);
    for (Element x : a)
        for (Element y : b) mask[g.multiply(x, y)] = true;
    std::vector<Element> out;
    for (Element x = 0; x < g.order(); ++x)
        if (mask[x]) out.push_back(x);
    return out;
}

bool is_elementary_abelian(const FiniteGroup& g) {
    if (g.order() == 1) return true;
    auto pp = nt::prime_power(g.order());
    if (!pp || !g.is_abelian()) return false;
    return g.exponent() == pp->first;
}

}  // namespace gqlab
