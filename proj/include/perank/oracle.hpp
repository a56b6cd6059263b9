#pragma once

// Brute-force oracles, deliberately independent of the closed-form
// paths: definitional rank recomputation, exhaustive enumeration of
// small sequence spaces, and theorem-vs-observation diffing.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perank/automatic.hpp"
#include "perank/sequences.hpp"

namespace perank {

inline constexpr std::int64_t kDefaultTupleBudget = 10'000'000;

/// Calls fn once for every length-ell tuple over {0, ..., alphabet_size
/// - 1} whose minimal period is exactly ell. alphabet_size^ell beyond
/// the budget -> resource_error naming the budget that would be needed.
void for_each_per(std::int64_t ell, std::int64_t alphabet_size, std::int64_t budget,
                  const std::function<void(const std::vector<std::int64_t>&)>& fn);

/// Materialized form of for_each_per, for small spaces.
std::vector<PeriodicSequence> enumerate_per(std::int64_t ell, std::int64_t alphabet_size,
                                            std::int64_t budget = kDefaultTupleBudget);

/// Definitional constant-recursive rank: the smallest d whose sliding-
/// window linear system admits a solution with nonzero trailing
/// coefficient, found by exact elimination per candidate order. Shares
/// no code with the circulant path. ell <= 16 (cost guard).
std::int64_t rank_cr_bruteforce(const PeriodicSequence& s);

/// Kernel recomputed from the index-range definition (funnel and basin
/// exponent/offset ranges verbatim, with k^e as a plain integer), for
/// cross-checking the BFS closure. Returns the distinct value tuples,
/// sorted.
std::vector<std::vector<std::int64_t>> kernel_tuples_by_definition(const PeriodicSequence& s, std::int64_t k);

enum class Framework { automatic, cr, regular };
std::string framework_name(Framework fw);
std::optional<Framework> parse_framework(const std::string& name);

/// Theorem-vs-observation diff for one (framework, k, ell, alphabet)
/// cell. Soundness violations (observed ranks outside the predicted
/// muggle set) must be empty; predicted values the alphabet is too small
/// to realize are closed by constructed witnesses instead.
struct DiffReport {
    Framework framework = Framework::automatic;
    std::int64_t k = 0;  ///< 0 when the framework takes no base
    std::int64_t ell = 0;
    std::int64_t alphabet_size = 0;
    /// False in the non-coprime automatic/regular cases, where no
    /// characterization exists and only observations are reported.
    bool has_prediction = false;
    std::map<std::int64_t, std::int64_t> observed_ranks;  ///< rank -> count
    std::vector<std::int64_t> predicted_muggles;
    std::vector<std::int64_t> soundness_violations;
    std::vector<std::int64_t> unrealized_muggles;
    std::map<std::int64_t, PeriodicSequence> witness_closures;
};

DiffReport diff_report(Framework fw, std::int64_t k, std::int64_t ell, std::int64_t alphabet_size,
                       std::int64_t budget = kDefaultTupleBudget);

/// Observed-rank report for automatic or regular rank over a finite
/// alphabet, for the non-coprime cases outside the closed-form theory.
/// muggles = ranks observed, range = observed span, witnesses = first
/// realizer per rank; empirical is always true.
AutomaticMuggleReport empirical_report(Framework fw, std::int64_t k, std::int64_t ell,
                                       std::int64_t alphabet_size,
                                       std::int64_t budget = kDefaultTupleBudget);

}  // namespace perank
