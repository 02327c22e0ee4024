#include "gqlab/numtheory.hpp"

#include <cmath>
#include <numeric>

#include "gqlab/errors.hpp"

namespace gqlab::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        f.emplace_back(p, k);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    if (is_prime(n)) return std::make_pair(n, 1u);
    for (unsigned k = 2; k < 64; ++k) {
        auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<long double>(n), 1.0L / k)));
        for (std::uint64_t c = (r > 1 ? r - 1 : 1); c <= r + 1; ++c) {
            unsigned __int128 acc = 1;
            for (unsigned i = 0; i < k && acc <= n; ++i) acc *= c;
            if (acc == n && is_prime(c)) return std::make_pair(c, k);
        }
        if (r < 2) break;
    }
    return std::nullopt;
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto f = factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, k] : f) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error(ErrorCode::InvalidArgument, "no primitive root (modulus not prime?)");
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error(ErrorCode::InvalidArgument, "element not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

}  // namespace gqlab::nt
