#include "perank/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "perank/errors.hpp"
#include "perank/numtheory.hpp"
#include "perank/recursive.hpp"
#include "perank/regular.hpp"

namespace perank {

namespace {

// Row-echelon rank over Q on plain __int128 rows with gcd shrinking
// after every elimination; a second opinion fully separate from the
// fraction-free path in linalg.
__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

void shrink_row(std::vector<__int128>& row) {
    __int128 g = 0;
    for (__int128 v : row) {
        v = abs128(v);
        while (v != 0) {
            const __int128 t = g % v;
            g = v;
            v = t;
        }
    }
    if (g > 1)
        for (__int128& v : row) v /= g;
}

std::size_t rank_by_rows(std::vector<std::vector<__int128>> m) {
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const __int128 a = m[r][c], b = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
            shrink_row(m[i]);
        }
        ++r;
    }
    return r;
}

// Columns picked from the 2*ell x (d+1) sliding-window matrix
// W[n][i] = s(n + i).
std::size_t window_rank(const PeriodicSequence& s, const std::vector<std::int64_t>& col_offsets) {
    std::vector<std::vector<__int128>> m(static_cast<std::size_t>(2 * s.ell()));
    for (std::int64_t n = 0; n < 2 * s.ell(); ++n) {
        m[static_cast<std::size_t>(n)].reserve(col_offsets.size());
        for (std::int64_t i : col_offsets) m[static_cast<std::size_t>(n)].push_back(s.term(n + i));
    }
    return rank_by_rows(std::move(m));
}

std::vector<std::int64_t> offsets(std::int64_t from, std::int64_t to) {
    std::vector<std::int64_t> v;
    for (std::int64_t i = from; i < to; ++i) v.push_back(i);
    return v;
}

bool is_minimal_period(const std::vector<std::int64_t>& t, const std::vector<std::int64_t>& proper_divisors) {
    for (std::int64_t p : proper_divisors) {
        bool periodic = true;
        for (std::size_t i = static_cast<std::size_t>(p); i < t.size() && periodic; ++i)
            periodic = (t[i] == t[i - static_cast<std::size_t>(p)]);
        if (periodic) return false;
    }
    return true;
}

std::int64_t rank_for(Framework fw, const PeriodicSequence& s, std::int64_t k) {
    switch (fw) {
        case Framework::automatic: return rank_automatic(s, k);
        case Framework::cr: return rank_cr(s);
        case Framework::regular: return rank_regular(s, k);
    }
    throw std::logic_error("unreachable framework");
}

}  // namespace

void for_each_per(std::int64_t ell, std::int64_t alphabet_size, std::int64_t budget,
                  const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    if (ell < 2) throw std::domain_error("ell must be at least 2");
    if (alphabet_size < 2) throw std::domain_error("alphabet size must be at least 2");
    if (budget < 1) throw std::domain_error("budget must be positive");

    Int128 total(1);
    for (std::int64_t i = 0; i < ell; ++i) total *= Int128(alphabet_size);
    if (total > Int128(budget))
        throw resource_error("enumerating " + std::to_string(alphabet_size) + "^" + std::to_string(ell) +
                             " tuples needs a budget of at least " + total.str() + " (configured: " +
                             std::to_string(budget) + ")");

    std::vector<std::int64_t> proper;
    for (std::int64_t p : divisors(ell))
        if (p < ell) proper.push_back(p);

    std::vector<std::int64_t> t(static_cast<std::size_t>(ell), 0);
    while (true) {
        if (is_minimal_period(t, proper)) fn(t);
        std::int64_t pos = ell - 1;
        while (pos >= 0 && ++t[static_cast<std::size_t>(pos)] == alphabet_size) t[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return;
    }
}

std::vector<PeriodicSequence> enumerate_per(std::int64_t ell, std::int64_t alphabet_size, std::int64_t budget) {
    std::vector<PeriodicSequence> out;
    for_each_per(ell, alphabet_size, budget, [&](const std::vector<std::int64_t>& t) { out.emplace_back(t); });
    return out;
}

std::int64_t rank_cr_bruteforce(const PeriodicSequence& s) {
    const std::int64_t L = s.ell();
    if (L > 16) throw resource_error("definitional rank search is limited to ell <= 16 (got " + std::to_string(L) + ")");

    for (std::int64_t d = 1; d <= L; ++d) {
        // Solvability of W[:, 0..d-1] x = W[:, d] over Q.
        const std::size_t lead = window_rank(s, offsets(0, d));
        if (window_rank(s, offsets(0, d + 1)) != lead) continue;
        // Some solution has c_0 != 0 unless every solution drops column
        // 0: that happens exactly when col d lies in span(cols 1..d-1)
        // while col 0 does not.
        std::vector<std::int64_t> inner = offsets(1, d);
        const std::size_t r_inner = window_rank(s, inner);
        inner.push_back(d);
        const bool last_in_inner = window_rank(s, inner) == r_inner;
        inner.back() = 0;
        const bool first_in_inner = window_rank(s, inner) == r_inner;
        if (!last_in_inner || first_in_inner) return d;
    }
    throw std::logic_error("no recurrence of order <= ell found, which contradicts periodicity");
}

std::vector<std::vector<std::int64_t>> kernel_tuples_by_definition(const PeriodicSequence& s, std::int64_t k) {
    if (k < 2) throw std::domain_error("base k must be at least 2");
    const std::int64_t L = s.ell();
    const OrdPre op = L == 1 ? OrdPre{k, 1, 0, 1} : ord_pre(k, L);

    std::set<std::vector<std::int64_t>> tuples;
    const __int128 pw_cap = static_cast<__int128>(1) << 100;
    __int128 pw = 1;  // k^e, literally
    for (std::int64_t e = 0; e < op.pre + op.ord; ++e, pw *= k) {
        if (pw > pw_cap) throw resource_error("definitional kernel check needs k^e beyond its integer range");
        const std::int64_t jmax = e < op.pre ? static_cast<std::int64_t>(std::min<__int128>(pw, L)) : L;
        for (std::int64_t j = 0; j < jmax; ++j) {
            std::vector<std::int64_t> t(static_cast<std::size_t>(L));
            for (std::int64_t n = 0; n < L; ++n)
                t[static_cast<std::size_t>(n)] = s.period()[static_cast<std::size_t>((pw * n + j) % L)];
            tuples.insert(std::move(t));
        }
    }
    return {tuples.begin(), tuples.end()};
}

std::string framework_name(Framework fw) {
    switch (fw) {
        case Framework::automatic: return "automatic";
        case Framework::cr: return "cr";
        case Framework::regular: return "regular";
    }
    throw std::logic_error("unreachable framework");
}

std::optional<Framework> parse_framework(const std::string& name) {
    if (name == "automatic") return Framework::automatic;
    if (name == "cr") return Framework::cr;
    if (name == "regular") return Framework::regular;
    return std::nullopt;
}

DiffReport diff_report(Framework fw, std::int64_t k, std::int64_t ell, std::int64_t alphabet_size,
                       std::int64_t budget) {
    const bool takes_base = fw != Framework::cr;
    if (takes_base && k < 2) throw std::domain_error("base k must be at least 2");

    DiffReport rep;
    rep.framework = fw;
    rep.k = takes_base ? k : 0;
    rep.ell = ell;
    rep.alphabet_size = alphabet_size;

    for_each_per(ell, alphabet_size, budget, [&](const std::vector<std::int64_t>& t) {
        ++rep.observed_ranks[rank_for(fw, PeriodicSequence(t), k)];
    });

    std::map<std::int64_t, PeriodicSequence> predicted_witnesses;
    if (fw == Framework::cr) {
        CrMuggleReport r = muggle_report_cr(ell);
        rep.predicted_muggles = r.muggles;
        for (auto& [value, entry] : r.witnesses) predicted_witnesses.emplace(value, std::move(entry.second));
        rep.has_prediction = true;
    } else if (std::gcd(k, ell) == 1) {
        if (fw == Framework::automatic) {
            AutomaticMuggleReport r = muggle_report_automatic(k, ell);
            rep.predicted_muggles = r.muggles;
            predicted_witnesses = std::move(r.witnesses);
        } else {
            CrMuggleReport r = muggle_report_regular(k, ell);
            rep.predicted_muggles = r.muggles;
            for (auto& [value, entry] : r.witnesses) predicted_witnesses.emplace(value, std::move(entry.second));
        }
        rep.has_prediction = true;
    }

    if (rep.has_prediction) {
        const std::set<std::int64_t> predicted(rep.predicted_muggles.begin(), rep.predicted_muggles.end());
        for (const auto& [rank_value, count] : rep.observed_ranks)
            if (!predicted.count(rank_value)) rep.soundness_violations.push_back(rank_value);
        for (std::int64_t value : rep.predicted_muggles) {
            if (rep.observed_ranks.count(value)) continue;
            rep.unrealized_muggles.push_back(value);
            const PeriodicSequence& w = predicted_witnesses.at(value);
            if (rank_for(fw, w, k) != value) throw std::logic_error("closure witness failed re-verification");
            rep.witness_closures.emplace(value, w);
        }
    }
    return rep;
}

AutomaticMuggleReport empirical_report(Framework fw, std::int64_t k, std::int64_t ell,
                                       std::int64_t alphabet_size, std::int64_t budget) {
    if (fw == Framework::cr)
        throw std::domain_error("the constant-recursive characterization is closed-form for every ell; "
                                "empirical mode applies to the automatic and regular frameworks");
    if (k < 2) throw std::domain_error("base k must be at least 2");

    AutomaticMuggleReport rep;
    rep.k = k;
    rep.ell = ell;
    rep.coprime = std::gcd(k, ell) == 1;
    rep.empirical = true;

    for_each_per(ell, alphabet_size, budget, [&](const std::vector<std::int64_t>& t) {
        const PeriodicSequence s(t);
        rep.witnesses.emplace(rank_for(fw, s, k), s);  // keeps the first realizer
    });
    if (rep.witnesses.empty()) throw std::logic_error("empirical enumeration observed no sequences");

    for (const auto& [value, w] : rep.witnesses) rep.muggles.push_back(value);
    rep.range_lo = rep.muggles.front();
    rep.range_hi = rep.muggles.back();
    std::set<std::int64_t> observed(rep.muggles.begin(), rep.muggles.end());
    for (std::int64_t v = rep.range_lo; v <= rep.range_hi; ++v)
        if (!observed.count(v)) rep.magics.push_back(v);
    return rep;
}

}  // namespace perank
