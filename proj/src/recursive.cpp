#include "perank/recursive.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "perank/errors.hpp"
#include "perank/linalg.hpp"
#include "perank/numtheory.hpp"

namespace perank {

namespace {

Int128 gcd128(Int128 a, Int128 b) {
    if (a.sign() < 0) a = -a;
    if (b.sign() < 0) b = -b;
    while (!b.is_zero()) {
        const Int128 r = rem(a, b);
        a = b;
        b = r;
    }
    return a;
}

// True iff the order-d recurrence read off chi (monic, degree d) holds
// on 2 * ell consecutive positions, which suffices for an ell-periodic
// sequence: sum_i chi_i s(n+i) = 0 for n in [0, 2 ell).
bool annihilates(const IntPolynomial& chi, const PeriodicSequence& s) {
    const std::int64_t d = chi.degree();
    for (std::int64_t n = 0; n < 2 * s.ell(); ++n) {
        Int128 acc(0);
        for (std::int64_t i = 0; i <= d; ++i) acc += chi.coeff(i) * Int128(s.term(n + i));
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

Rational make_rational(Int128 num, Int128 den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    const Int128 g = gcd128(num, den);
    if (!g.is_zero() && g != Int128(1)) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    return Rational{num, den};
}

Recurrence recurrence_from_char_poly(const IntPolynomial& chi) {
    if (!chi.is_monic() || chi.degree() < 1)
        throw std::domain_error("characteristic polynomial must be monic of degree >= 1");
    if (chi.coeff(0).is_zero())
        throw std::domain_error("characteristic polynomial has zero constant term, so c_0 would vanish");
    Recurrence rec;
    rec.order = chi.degree();
    rec.char_poly = chi;
    rec.coeffs.reserve(static_cast<std::size_t>(rec.order));
    for (std::int64_t i = 0; i < rec.order; ++i) rec.coeffs.push_back(make_rational(-chi.coeff(i), Int128(1)));
    return rec;
}

std::int64_t rank_cr(const PeriodicSequence& s) {
    if (s.ell() == 1) return 1;
    return static_cast<std::int64_t>(rank(circulant(s.period())));
}

IntPolynomial minimal_char_poly(const PeriodicSequence& s) {
    const std::int64_t L = s.ell();
    IntPolynomial chi = IntPolynomial::x_pow_minus_one(L);

    // The annihilators dividing x^L - 1 are exactly the products of the
    // cyclotomics of a divisor-subset lattice, so removing factors
    // greedily (largest degree first) reaches the unique minimum.
    std::vector<std::int64_t> order = divisors(L);
    std::sort(order.begin(), order.end(), [](std::int64_t a, std::int64_t b) {
        const std::int64_t pa = euler_phi(a), pb = euler_phi(b);
        return pa != pb ? pa > pb : a > b;
    });
    for (std::int64_t m : order) {
        const auto [q, rm] = divmod(chi, cyclotomic(m));
        if (!rm.is_zero() || q.degree() < 1) continue;
        if (annihilates(q, s)) chi = q;
    }
    return chi;
}

std::vector<std::int64_t> unroll(const Recurrence& rec, const std::vector<std::int64_t>& initial,
                                 std::int64_t count) {
    if (static_cast<std::int64_t>(initial.size()) != rec.order)
        throw std::domain_error("initial conditions must match the recurrence order");
    if (count < rec.order) throw std::domain_error("count must cover at least the initial conditions");
    for (const Rational& c : rec.coeffs)
        if (c.den != Int128(1)) throw unsupported_error("unroll needs integer recurrence coefficients");

    std::vector<Int128> terms(initial.begin(), initial.end());
    terms.reserve(static_cast<std::size_t>(count));
    for (std::int64_t n = rec.order; n < count; ++n) {
        Int128 acc(0);
        for (std::int64_t i = 0; i < rec.order; ++i)
            acc += rec.coeffs[static_cast<std::size_t>(i)].num * terms[static_cast<std::size_t>(n - rec.order + i)];
        terms.push_back(acc);
    }
    std::vector<std::int64_t> out;
    out.reserve(terms.size());
    for (const Int128& t : terms) out.push_back(t.to_int64());
    return out;
}

PeriodicSequence witness_cr(const std::vector<std::int64_t>& divisor_set) {
    if (divisor_set.empty()) throw std::domain_error("divisor set must be nonempty");
    std::vector<std::int64_t> ds = divisor_set;
    std::sort(ds.begin(), ds.end());
    if (std::adjacent_find(ds.begin(), ds.end()) != ds.end()) throw std::domain_error("duplicate divisors");
    if (ds.front() < 1) throw std::domain_error("divisors must be positive");

    std::int64_t ell = 1;
    for (std::int64_t d : ds) ell = lcm_checked(ell, d);
    if (ell < 2) throw std::domain_error("divisor set {1} targets period 1, which has no muggle values");

    IntPolynomial chi = IntPolynomial::one();
    for (std::int64_t d : ds) chi = chi * cyclotomic(d);
    const std::int64_t degree = chi.degree();

    std::vector<std::int64_t> initial(static_cast<std::size_t>(degree), 0);
    initial.back() = 1;
    const std::vector<std::int64_t> terms = unroll(recurrence_from_char_poly(chi), initial, 2 * ell);
    for (std::int64_t n = 0; n < ell; ++n)
        if (terms[static_cast<std::size_t>(n)] != terms[static_cast<std::size_t>(n + ell)])
            throw std::logic_error("impulse witness is not ell-periodic");

    PeriodicSequence w{std::vector<std::int64_t>(terms.begin(), terms.begin() + ell)};
    if (w.ell() != ell) throw std::logic_error("impulse witness has a shorter period than its divisor lcm");
    if (rank_cr(w) != degree) throw std::logic_error("impulse witness failed its rank verification");
    return w;
}

CrMuggleReport muggle_report_cr(std::int64_t ell) {
    if (ell < 2) throw std::domain_error("ell must be at least 2");
    const std::vector<std::int64_t> ds = divisors(ell);
    const std::size_t m = ds.size();
    if (m > 24) throw resource_error("too many divisors for subset enumeration (" + std::to_string(m) + " > 24)");
    std::vector<std::int64_t> phi(m);
    for (std::size_t i = 0; i < m; ++i) phi[i] = euler_phi(ds[i]);

    // Best divisor set per attainable value: smallest cardinality, then
    // lexicographically least.
    std::map<std::int64_t, std::vector<std::int64_t>> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::int64_t l = 1, sum = 0;
        std::vector<std::int64_t> subset;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                l = lcm_checked(l, ds[i]);
                sum += phi[i];
                subset.push_back(ds[i]);
            }
        if (l != ell) continue;
        auto it = best.find(sum);
        if (it == best.end() || subset.size() < it->second.size() ||
            (subset.size() == it->second.size() && subset < it->second))
            best[sum] = std::move(subset);
    }

    CrMuggleReport rep;
    rep.ell = ell;
    rep.range_lo = additive_psi(ell);
    rep.range_hi = ell;
    for (const auto& [value, subset] : best) {
        rep.muggles.push_back(value);
        rep.witnesses.emplace(value, std::make_pair(subset, witness_cr(subset)));
    }
    if (rep.muggles.front() != rep.range_lo || rep.muggles.back() != rep.range_hi)
        throw std::logic_error("muggle range does not match [psi(ell), ell]");
    std::set<std::int64_t> muggle_set(rep.muggles.begin(), rep.muggles.end());
    for (std::int64_t v = rep.range_lo; v <= rep.range_hi; ++v)
        if (!muggle_set.count(v)) rep.magics.push_back(v);
    return rep;
}

}  // namespace perank
