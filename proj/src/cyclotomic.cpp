#include "gqlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "gqlab/errors.hpp"

namespace gqlab {

namespace {

using IPoly = std::vector<std::int64_t>;

// Exact division of a by monic b (integer coefficients).
IPoly divide_monic(IPoly a, const IPoly& b) {
    std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {0};
    IPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        std::int64_t lead = a[i];
        q[i - db] = lead;
        if (lead)
            for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= lead * b[k];
    }
    return q;
}

IPoly cyclotomic_poly(std::uint32_t n) {
    IPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0) num = divide_monic(num, cyclotomic_poly(d));
    }
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    return num;
}

Cyclotomic promote_pair(const Cyclotomic& a, const FieldPtr& other) {
    if (a.field()->conductor() == other->conductor()) return a;
    return a.embed(other);
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (a->conductor() == b->conductor()) return a;
    if (b->conductor() % a->conductor() == 0) return b;
    if (a->conductor() % b->conductor() == 0) return a;
    std::uint32_t x = a->conductor(), y = b->conductor();
    std::uint32_t g = std::gcd(x, y);
    return CyclotomicField::get(x / g * y);
}

}  // namespace

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint32_t n) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const CyclotomicField>(n);
    cache.emplace(n, f);
    return f;
}

CyclotomicField::CyclotomicField(std::uint32_t n) : n_(n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    phi_poly_ = cyclotomic_poly(n);
    phi_ = static_cast<std::uint32_t>(phi_poly_.size() - 1);
    powers_.assign(n, IPoly(phi_, 0));
    IPoly cur(phi_, 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        powers_[k] = cur;
        // multiply by zeta: shift, then reduce the x^phi term
        IPoly next(phi_ + 1, 0);
        for (std::uint32_t i = 0; i < phi_; ++i) next[i + 1] = cur[i];
        std::int64_t lead = next[phi_];
        for (std::uint32_t i = 0; i < phi_; ++i) next[i] -= lead * phi_poly_[i];
        next.pop_back();
        cur = next;
    }
}

Cyclotomic::Cyclotomic(FieldPtr f) : field_(std::move(f)), c_(field_->degree()) {}

Cyclotomic::Cyclotomic(FieldPtr f, const mpq_class& r) : Cyclotomic(std::move(f)) { c_[0] = r; }

Cyclotomic Cyclotomic::zeta_power(FieldPtr f, std::uint32_t k) {
    Cyclotomic x(f);
    const auto& p = f->power(k);
    for (std::size_t i = 0; i < p.size(); ++i) x.c_[i] = p[i];
    return x;
}

Cyclotomic Cyclotomic::from_root_counts(FieldPtr f, const std::vector<std::int64_t>& counts, std::uint32_t step) {
    Cyclotomic x(f);
    std::vector<std::int64_t> acc(f->degree(), 0);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (!counts[k]) continue;
        const auto& p = f->power(static_cast<std::uint32_t>((k * step) % f->conductor()));
        for (std::size_t i = 0; i < p.size(); ++i) acc[i] += counts[k] * p[i];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) x.c_[i] = acc[i];
    return x;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class Cyclotomic::rational() const {
    if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "value is not rational");
    return c_[0];
}

bool Cyclotomic::is_nonnegative_integer() const { return is_rational() && c_[0].get_den() == 1 && c_[0] >= 0; }

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic r(field_);
    const auto n = field_->conductor();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& p = field_->power(static_cast<std::uint32_t>((n - i % n) % n));
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k]) r.c_[k] += c_[i] * p[k];
    }
    return r;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    const double n = field_->conductor();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
        z += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

Cyclotomic Cyclotomic::embed(const FieldPtr& bigger) const {
    if (bigger->conductor() % field_->conductor() != 0) throw Error(ErrorCode::InvalidArgument, "target field does not contain this one");
    const std::uint32_t step = bigger->conductor() / field_->conductor();
    Cyclotomic r(bigger);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& p = bigger->power(static_cast<std::uint32_t>(i * step));
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k]) r.c_[k] += c_[i] * p[k];
    }
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (field_->conductor() != o.field_->conductor()) {
        auto f = common_field(field_, o.field_);
        *this = promote_pair(*this, f);
        return *this += promote_pair(o, f);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (field_->conductor() != o.field_->conductor()) {
        auto f = common_field(field_, o.field_);
        *this = promote_pair(*this, f);
        return *this -= promote_pair(o, f);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const mpq_class& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.field_->conductor() != b.field_->conductor()) {
        auto f = common_field(a.field_, b.field_);
        return promote_pair(a, f) * promote_pair(b, f);
    }
    if (a.is_rational()) return b * a.c_[0];
    if (b.is_rational()) return a * b.c_[0];
    const auto& f = a.field_;
    const std::size_t d = f->degree();
    std::vector<mpq_class> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    // reduce modulo the monic minimal polynomial
    const auto& m = f->minimal_polynomial();
    for (std::size_t i = prod.size(); i-- > d;) {
        if (prod[i] == 0) continue;
        mpq_class lead = prod[i];
        for (std::size_t k = 0; k < d; ++k)
            if (m[k]) prod[i - d + k] -= lead * m[k];
        prod[i] = 0;
    }
    Cyclotomic r(f);
    for (std::size_t i = 0; i < d; ++i) r.c_[i] = prod[i];
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (field_->conductor() != o.field_->conductor()) {
        auto f = common_field(field_, o.field_);
        return promote_pair(*this, f) == promote_pair(o, f);
    }
    return c_ == o.c_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return c_.size() < o.c_.size();
}

std::string rational_to_string(const mpq_class& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Cyclotomic::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rational_to_string(c_[i]);
        if (i == 1) out += "*z";
        if (i > 1) out += "*z^" + std::to_string(i);
    }
    if (out.empty()) out = "0";
    return out;
}

nlohmann::json to_json(const Cyclotomic& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : x.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

Cyclotomic cyclotomic_from_json(const FieldPtr& f, const nlohmann::json& j) {
    if (!j.is_array() || j.size() != f->degree()) throw Error(ErrorCode::SchemaError, "coefficient vector has wrong length");
    Cyclotomic out(f);
    for (std::size_t i = 0; i < j.size(); ++i) {
        mpq_class v(j[i].get<std::string>());
        v.canonicalize();
        out += Cyclotomic::zeta_power(f, static_cast<std::uint32_t>(i)) * v;
    }
    return out;
}

}  // namespace gqlab
