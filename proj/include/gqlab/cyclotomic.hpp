#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gqlab {

// Q(zeta_n) with basis 1, zeta, ..., zeta^{phi(n)-1}.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(std::uint32_t n);

    std::uint32_t conductor() const { return n_; }
    std::uint32_t degree() const { return phi_; }
    // Monic Phi_n, low degree first (length phi+1).
    const std::vector<std::int64_t>& minimal_polynomial() const { return phi_poly_; }
    // zeta^k reduced to the basis, k in [0, n).
    const std::vector<std::int64_t>& power(std::uint32_t k) const { return powers_[k % n_]; }

    explicit CyclotomicField(std::uint32_t n);

private:
    std::uint32_t n_, phi_;
    std::vector<std::int64_t> phi_poly_;
    std::vector<std::vector<std::int64_t>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(CyclotomicField::get(1)) {}
    explicit Cyclotomic(FieldPtr f);
    Cyclotomic(FieldPtr f, const mpq_class& r);
    static Cyclotomic zeta_power(FieldPtr f, std::uint32_t k);
    // sum_k mult[k] zeta^{k * step}
    static Cyclotomic from_root_counts(FieldPtr f, const std::vector<std::int64_t>& counts, std::uint32_t step = 1);

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational() const;  // requires is_rational()
    bool is_nonnegative_integer() const;
    Cyclotomic conj() const;
    std::complex<double> to_complex() const;
    // Same value in Q(zeta_m), n | m.
    Cyclotomic embed(const FieldPtr& bigger) const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const mpq_class& r);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(Cyclotomic a, const mpq_class& r) { return a *= r; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // Lexicographic on coefficient vectors (same field).
    bool operator<(const Cyclotomic& o) const;

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<mpq_class> c_;
};

// Coefficients as strings ("p" or "p/q").
nlohmann::json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const FieldPtr& f, const nlohmann::json& j);
std::string rational_to_string(const mpq_class& r);

}  // namespace gqlab
