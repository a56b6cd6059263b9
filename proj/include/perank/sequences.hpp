#pragma once

// Periodic integer sequences represented by their minimal period tuple.
// Construction canonicalizes: any input tuple is reduced to the smallest
// period, so a value of this type is always a member of Per(ell) for its
// own ell.

#include <cstdint>
#include <string>
#include <vector>

namespace perank {

class PeriodicSequence {
  public:
    /// Builds the sequence with the minimal period extracted from
    /// raw_period. Empty input -> std::domain_error.
    explicit PeriodicSequence(std::vector<std::int64_t> raw_period);

    std::int64_t ell() const { return static_cast<std::int64_t>(period_.size()); }
    const std::vector<std::int64_t>& period() const { return period_; }
    /// True if construction shortened the input tuple.
    bool was_reduced() const { return reduced_; }

    /// s(n). n >= 0.
    std::int64_t term(std::int64_t n) const;

    /// The sequence (s(c*n + r)) for n >= 0, minimized. Its period length
    /// divides ell / gcd(c, ell). c, r >= 0; c = 0 gives the constant s(r).
    PeriodicSequence subsequence(std::int64_t c, std::int64_t r) const;

    friend bool operator==(const PeriodicSequence& a, const PeriodicSequence& b) { return a.period_ == b.period_; }
    friend bool operator!=(const PeriodicSequence& a, const PeriodicSequence& b) { return !(a == b); }
    friend bool operator<(const PeriodicSequence& a, const PeriodicSequence& b) { return a.period_ < b.period_; }

  private:
    std::vector<std::int64_t> period_;
    bool reduced_ = false;
};

/// Comma-separated integer list, e.g. "0,1,2,3,4,5" -> {0,1,2,3,4,5}.
/// Malformed input -> std::domain_error.
std::vector<std::int64_t> parse_period(const std::string& text);

/// Inverse of parse_period.
std::string format_period(const std::vector<std::int64_t>& values);

}  // namespace perank
