#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gqlab {

using Element = std::uint32_t;
using MultRule = std::function<Element(Element, Element)>;

constexpr std::uint32_t kDenseTableLimit = 4096;

// Finite group on ids 0..n-1, id 0 the identity. Cheap to copy (shared
// immutable state); two copies compare equal with same_group().
class FiniteGroup {
public:
    FiniteGroup() = default;

    // Verifies identity, inverses and associativity (exhaustive for n <= 512,
    // 1e5 sampled triples otherwise). For n > 4096 the rule is kept and an
    // inverse rule must be supplied.
    static FiniteGroup from_rule(std::uint32_t n, const MultRule& rule, std::string label,
                                 nlohmann::json structure = nullptr, MultRule inverse_rule = nullptr);
    static FiniteGroup from_table(std::uint32_t n, std::vector<Element> table, std::string label,
                                  nlohmann::json structure = nullptr);

    std::uint32_t order() const;
    Element multiply(Element a, Element b) const;
    Element inverse(Element a) const;
    Element power(Element a, std::int64_t e) const;
    Element conjugate(Element x, Element g) const;  // g^{-1} x g
    Element commutator(Element a, Element b) const;  // a^{-1} b^{-1} a b
    std::uint32_t element_order(Element a) const;
    std::uint64_t exponent() const;
    bool is_abelian() const;
    bool has_table() const;

    const std::string& label() const;
    const nlohmann::json& structure() const;
    bool same_group(const FiniteGroup& other) const { return impl_ == other.impl_; }
    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// Sorted member list plus membership mask. Closure is checked on creation.
class Subgroup {
public:
    Subgroup() = default;
    static Subgroup from_members(const FiniteGroup& g, std::vector<Element> members);
    static Subgroup trivial(const FiniteGroup& g);
    static Subgroup whole(const FiniteGroup& g);

    const FiniteGroup& parent() const { return parent_; }
    const std::vector<Element>& members() const { return members_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(members_.size()); }
    bool contains(Element x) const { return mask_[x]; }
    bool subset_of(const Subgroup& o) const;
    bool operator==(const Subgroup& o) const { return members_ == o.members_; }

private:
    FiniteGroup parent_;
    std::vector<Element> members_;
    std::vector<bool> mask_;
};

struct ClassData {
    std::vector<std::vector<Element>> classes;  // class 0 = {identity}; ordered by least member
    std::vector<std::uint32_t> class_of;
    std::vector<std::uint64_t> centralizer_orders;
    std::vector<std::uint32_t> inverse_class;  // class of g^{-1}
    Subgroup derived_subgroup;
    std::vector<std::uint32_t> coset_of;  // element -> G'-coset index (ordered by least member)
    std::uint32_t coset_count = 0;

    std::size_t class_count() const { return classes.size(); }
};

struct Quotient {
    FiniteGroup group;
    std::vector<Element> projection;  // element of G -> element of G/N
    std::vector<Element> lift;         // coset id -> least element of coset
};

// Constructors ---------------------------------------------------------------

FiniteGroup cyclic_group(std::uint32_t n);
FiniteGroup heisenberg_group(std::uint32_t q);
FiniteGroup elementary_abelian(std::uint32_t p, std::uint32_t n);
enum class ExtraspecialKind { Plus, Minus };
FiniteGroup extraspecial_central_c4(std::uint32_t n, ExtraspecialKind kind);

// Rebuilds a group from its JSON form ({label, order, structure} or {.., table}).
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g, bool include_table = false);

// Structure ------------------------------------------------------------------

ClassData class_data(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Element>& gens);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
// Subgroup generated by p-th powers and commutators (the Frattini subgroup for a p-group).
Subgroup frattini_p_group(const FiniteGroup& g);
// Returns (n, g) with g^{-1} n g outside N, or nullopt when N is normal.
std::optional<std::pair<Element, Element>> normality_witness(const Subgroup& n);
Quotient quotient(const FiniteGroup& g, const Subgroup& n);
// Elements of the product set A B (as a sorted list).
std::vector<Element> product_set(const FiniteGroup& g, const std::vector<Element>& a, const std::vector<Element>& b);
bool is_elementary_abelian(const FiniteGroup& g);

}  // namespace gqlab
