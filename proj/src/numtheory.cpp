#include "perank/numtheory.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace perank {

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::domain_error("divisors: n must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

// n = p1^a1 * ... * pr^ar as (p, p^a) pairs, ascending p.
std::vector<std::pair<std::int64_t, std::int64_t>> prime_power_factors(std::int64_t n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::int64_t q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        out.emplace_back(p, q);
    }
    if (n > 1) out.emplace_back(n, n);
    return out;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::domain_error("euler_phi: n must be >= 1");
    std::int64_t phi = n;
    for (const auto& [p, q] : prime_power_factors(n)) phi = phi / p * (p - 1);
    return phi;
}

std::int64_t additive_psi(std::int64_t n) {
    if (n < 2) throw std::domain_error("additive_psi: n must be >= 2");
    std::int64_t sum = 0;
    for (const auto& [p, q] : prime_power_factors(n)) sum += euler_phi(q);
    // A single factor of 2 costs nothing alongside an odd part: negating a
    // matrix of odd order m yields order 2m in the same dimension.
    if (n > 2 && n % 4 == 2) sum -= 1;
    return sum;
}

OrdPre ord_pre(std::int64_t k, std::int64_t ell) {
    if (k < 2 || ell < 2) throw std::domain_error("ord_pre: k and ell must be >= 2");
    std::map<std::int64_t, std::int64_t> seen;  // residue -> first exponent
    std::int64_t r = 1 % ell;
    for (std::int64_t e = 0;; ++e) {
        auto [it, fresh] = seen.emplace(r, e);
        if (!fresh) return OrdPre{k, ell, it->second, e - it->second};
        r = (r * (k % ell)) % ell;
    }
}

IntPolynomial cyclotomic(std::int64_t m) {
    if (m < 1) throw std::domain_error("cyclotomic: m must be >= 1");
    const auto divs = divisors(m);
    std::map<std::int64_t, IntPolynomial> phi;  // bottom-up over the divisor lattice
    for (std::int64_t d : divs) {
        IntPolynomial p = IntPolynomial::x_pow_minus_one(d);
        for (std::int64_t e : divisors(d)) {
            if (e == d) continue;
            auto [q, rem] = divmod(p, phi.at(e));
            if (!rem.is_zero()) throw std::logic_error("cyclotomic: inexact division");
            p = std::move(q);
        }
        phi.emplace(d, std::move(p));
    }
    return phi.at(m);
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::domain_error("lcm_checked: arguments must be >= 1");
    const std::int64_t g = std::gcd(a, b);
    return (Int128(a / g) * Int128(b)).to_int64();
}

}  // namespace perank
