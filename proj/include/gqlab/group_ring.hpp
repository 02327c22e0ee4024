#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gqlab/group.hpp"
#include "gqlab/kantor_family.hpp"

namespace gqlab {

// Integer combination of group elements. Coefficients are 64-bit with every
// operation overflow-checked (CoefficientOverflow).
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(const FiniteGroup& g);

    static GroupRingElement scalar(const FiniteGroup& g, std::int64_t c);  // c * identity
    static GroupRingElement all_ones(const FiniteGroup& g);                // the element "G"
    static GroupRingElement from_set(const FiniteGroup& g, const std::vector<Element>& xs);

    const FiniteGroup& group() const { return group_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t operator[](Element x) const { return coeffs_[x]; }
    void set(Element x, std::int64_t c) { coeffs_[x] = c; }

    std::int64_t coefficient_sum() const;
    std::size_t support_size() const;
    // sum a_g g^{-1}
    GroupRingElement involution() const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    GroupRingElement& operator*=(std::int64_t c);
    bool operator==(const GroupRingElement& o) const;

private:
    FiniteGroup group_;
    std::vector<std::int64_t> coeffs_;
};

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator*(std::int64_t c, GroupRingElement a);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

// Convolution; `jobs` > 1 splits the left support across threads, result identical.
GroupRingElement gr_multiply(const GroupRingElement& x, const GroupRingElement& y, unsigned jobs = 1);

struct IdentityReport {
    std::string identity_name;
    bool pass = true;
    std::optional<Element> witness_element;
    std::optional<std::int64_t> lhs_coeff;
    std::optional<std::int64_t> rhs_coeff;
    std::string detail;
};
nlohmann::json to_json(const IdentityReport& r);
// Compares two elements coefficientwise, first differing id as witness.
IdentityReport compare_elements(const std::string& name, const GroupRingElement& lhs, const GroupRingElement& rhs);

struct DeltaPair {
    GroupRingElement delta;
    GroupRingElement delta_star;
};
DeltaPair delta_elements(const KantorFamily& f);

// Delta^2, Delta Delta*, (Delta*)^2 identities plus commutativity.
std::vector<IdentityReport> verify_fourdim_algebra(const KantorFamily& f, unsigned jobs = 1);

struct SpanClosureReport {
    bool pass = true;
    // products[i][j] = coordinates of b_i * b_j in the basis (1, Delta, Delta*, G)
    std::vector<std::vector<std::vector<std::int64_t>>> products;
    std::string detail;
};
// Re-expresses every product of basis elements in (1, Delta, Delta*, G),
// requiring an exact integer solution that matches the closed-form coefficients.
SpanClosureReport fourdim_span_closure(const KantorFamily& f);

struct STPair {
    GroupRingElement S;
    GroupRingElement T;
};
STPair st_elements(const KantorFamily& f);

// Delta^2 = (t+1)(s-1) + (s-t-2) Delta + (t+1) G for a point-regular group.
IdentityReport verify_cayley_delta_identity(const FiniteGroup& g, const GroupRingElement& delta, std::uint32_t s, std::uint32_t t);

}  // namespace gqlab
