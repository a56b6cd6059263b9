#include "perank/sequences.hpp"

#include <numeric>
#include <stdexcept>

namespace perank {

namespace {

// Smallest p dividing n such that v repeats with period p.
std::size_t minimal_period_length(const std::vector<std::int64_t>& v) {
    const std::size_t n = v.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = (v[i] == v[i - p]);
        if (ok) return p;
    }
    return n;
}

}  // namespace

PeriodicSequence::PeriodicSequence(std::vector<std::int64_t> raw_period) {
    if (raw_period.empty()) throw std::domain_error("period tuple must be nonempty");
    const std::size_t p = minimal_period_length(raw_period);
    reduced_ = (p != raw_period.size());
    raw_period.resize(p);
    period_ = std::move(raw_period);
}

std::int64_t PeriodicSequence::term(std::int64_t n) const {
    if (n < 0) throw std::domain_error("sequence index must be nonnegative");
    return period_[static_cast<std::size_t>(n % ell())];
}

PeriodicSequence PeriodicSequence::subsequence(std::int64_t c, std::int64_t r) const {
    if (c < 0 || r < 0) throw std::domain_error("subsequence parameters must be nonnegative");
    // s(c*n + r) has period ell / gcd(c, ell); the constructor trims further.
    const std::int64_t L = ell();
    const std::int64_t p = (c == 0) ? 1 : L / std::gcd(c % L == 0 ? L : c % L, L);
    std::vector<std::int64_t> vals(static_cast<std::size_t>(p));
    for (std::int64_t n = 0; n < p; ++n) vals[static_cast<std::size_t>(n)] = period_[static_cast<std::size_t>((c % L * n + r % L) % L)];
    return PeriodicSequence(std::move(vals));
}

std::vector<std::int64_t> parse_period(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        // Trim surrounding spaces.
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::domain_error("empty entry in period list");
        tok = tok.substr(a, b - a + 1);
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw std::domain_error("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw std::domain_error("not an integer: '" + tok + "'");
        out.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::string format_period(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace perank
