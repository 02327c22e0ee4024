#pragma once

#include <cstdint>
#include <vector>

namespace gqlab {

// F_q with q = p^k. An element is the integer sum c_i p^i of its
// coefficient vector in the monomial basis 1, x, ..., x^{k-1}; the modulus is
// the least monic irreducible of degree k in that same integer encoding.
class GaloisField {
public:
    using Elem = std::uint32_t;

    explicit GaloisField(std::uint32_t q);

    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    // Coefficients c_0..c_k of the monic modulus.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    // Image of an integer under Z -> F_p -> F_q.
    Elem from_int(std::int64_t n) const;
    Elem primitive_element() const { return exp_[1 % exp_.size()]; }

private:
    Elem poly_mul(Elem a, Elem b) const;

    std::uint32_t q_, p_, k_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_table_;  // only when q <= 256
    std::vector<Elem> exp_;                  // exp_[i] = w^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;         // log_[a] for a != 0
};

}  // namespace gqlab
