#pragma once

// k-regular rank: the dimension over Q of the span of the k-kernel.
// Coprime k collapses this to the circulant rank (and so to the
// constant-recursive rank); the non-coprime case is computed from the
// definition and can fall strictly below the automatic rank.

#include <cstdint>

#include "perank/recursive.hpp"
#include "perank/sequences.hpp"

namespace perank {

/// Rank over Q of the matrix whose rows are the ell-term value tuples of
/// the kernel elements. Always <= rank_automatic(s, k). 1 for constants.
std::int64_t rank_regular(const PeriodicSequence& s, std::int64_t k);

/// Whether rank_regular(s, k) equals the circulant rank of the period;
/// guaranteed true when gcd(k, s.ell) = 1, which this requires.
bool check_coprime_collapse(const PeriodicSequence& s, std::int64_t k);

/// For coprime (k, ell) the regular muggle set equals the
/// constant-recursive one; the report's witnesses are re-verified with
/// rank_regular before returning. Non-coprime input -> unsupported_error
/// (no closed form is known).
CrMuggleReport muggle_report_regular(std::int64_t k, std::int64_t ell);

}  // namespace perank
