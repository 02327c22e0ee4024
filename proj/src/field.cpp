#include "gqlab/field.hpp"

#include <string>

#include "gqlab/errors.hpp"
#include "gqlab/numtheory.hpp"

namespace gqlab {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

Poly digits(std::uint32_t a, std::uint32_t p, std::uint32_t k) {
    Poly d(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

// Remainder of a by monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        if (lead) {
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = digits(static_cast<std::uint32_t>(low), p, d);
            g.push_back(1);
            Poly r = poly_rem(f, g, p);
            bool zero = true;
            for (auto c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
    auto pp = nt::prime_power(q);
    if (!pp || q > 65536) throw Error(ErrorCode::InvalidFieldOrder, "field order " + std::to_string(q) + " is not a supported prime power");
    p_ = static_cast<std::uint32_t>(pp->first);
    k_ = pp->second;

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else {
        std::uint32_t count = q_;  // p^k candidate lower parts
        for (std::uint32_t low = 0; low < count; ++low) {
            Poly f = digits(low, p_, k_);
            f.push_back(1);
            if (f[0] != 0 && is_irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
    }

    if (q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                Poly da = digits(a, p_, k_), db = digits(b, p_, k_);
                for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
                add_table_[a * q_ + b] = undigits(da, p_);
            }
        }
    }

    // find a primitive element and build exp/log tables
    log_.assign(q_, 0);
    for (Elem w = 1; w < q_; ++w) {
        exp_.assign(q_ - 1, 0);
        Elem x = 1;
        bool ok = true;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            if (i > 0 && x == 1) {
                ok = false;
                break;
            }
            exp_[i] = x;
            x = poly_mul(x, w);
        }
        if (ok && x == 1) break;
    }
    for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

GaloisField::Elem GaloisField::poly_mul(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    Poly da = digits(a, p_, k_), db = digits(b, p_, k_);
    Poly prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    return undigits(poly_rem(prod, modulus_, p_), p_);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Poly da = digits(a, p_, k_), db = digits(b, p_, k_);
    for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da, p_);
}

GaloisField::Elem GaloisField::neg(Elem a) const {
    if (p_ == 2) return a;
    Poly da = digits(a, p_, k_);
    for (auto& c : da) c = (p_ - c) % p_;
    return undigits(da, p_);
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

GaloisField::Elem GaloisField::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

}  // namespace gqlab
