#pragma once

// The k-kernel of a periodic sequence and everything built on it: the
// automatic rank (= kernel cardinality = minimal DFAO state count), the
// funnel/basin decomposition behind the B_ell(k) bound, minimal automata
// with output, and the coprime muggle characterization with orbit
// witnesses.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "perank/sequences.hpp"

namespace perank {

/// One kernel subsequence s(c n + r). Identified by its ell-term value
/// tuple: every kernel sequence of an ell-periodic s has period dividing
/// ell, so the tuple determines the whole sequence.
struct KernelElement {
    std::int64_t c = 0;                ///< residue in [0, ell)
    std::int64_t r = 0;                ///< residue in [0, ell)
    std::vector<std::int64_t> values;  ///< terms 0 .. ell-1 of s(cn+r)
};

/// The k-kernel with its digit-map structure: digit d sends the class of
/// t to the class of t(kn + d).
struct Kernel {
    PeriodicSequence base;
    std::int64_t k = 2;
    std::vector<KernelElement> elements;                ///< BFS discovery order
    std::vector<std::vector<std::size_t>> transitions;  ///< [element][digit]
    std::size_t initial = 0;                            ///< class of s itself
};

/// Breadth-first closure from (c, r) = (1, 0) under
/// (c, r) -> ((c k) mod ell, (c d + r) mod ell), one class per distinct
/// value tuple. k >= 2.
Kernel kernel(const PeriodicSequence& s, std::int64_t k);

/// |ker_k(s)|, the state count of the minimal DFAO.
std::int64_t rank_automatic(const PeriodicSequence& s, std::int64_t k);

/// The kernel split by exponent: funnel covers e < pre with
/// j < min(k^e, ell), basin covers pre <= e < pre + ord with j < ell.
/// Their union is the whole kernel; the funnel is empty iff pre = 0,
/// in particular whenever gcd(k, ell) = 1.
struct FunnelBasin {
    std::vector<KernelElement> funnel;
    std::vector<KernelElement> basin;
};
FunnelBasin funnel_basin(const PeriodicSequence& s, std::int64_t k);

/// B_ell(k) = sum_{e < pre} min(k^e, ell) + ell * ord. Upper bound for
/// the automatic rank over Per(ell), attained by (0, 1, ..., ell-1).
/// k, ell >= 2.
std::int64_t bound_B(std::int64_t k, std::int64_t ell);

/// Automaton with output; reads base-k digits least significant first,
/// and leading (high-order) zeros never change the output.
struct Dfao {
    std::int64_t base_k = 2;
    std::vector<std::int64_t> outputs;                  ///< per state
    std::vector<std::vector<std::size_t>> transitions;  ///< [state][digit]
    std::size_t initial = 0;
};

/// States are the kernel classes; output of a class is its first term.
Dfao build_dfao(const PeriodicSequence& s, std::int64_t k);

/// Base-k digits of n, least significant first; empty for n = 0.
std::vector<int> digits_lsd_first(std::int64_t n, std::int64_t k);

std::int64_t run_dfao_digits(const Dfao& d, const std::vector<int>& digits);
/// Output after feeding the LSD-first digits of n (n = 0 reads nothing).
std::int64_t run_dfao(const Dfao& d, std::int64_t n);

/// Classes found by output-respecting partition refinement; equals the
/// state count exactly when the DFAO is minimal.
std::size_t minimal_state_count(const Dfao& d);

/// Graphviz source: nodes labeled "q0/5" (state/output), edges labeled
/// with digits, initial state marked by an edge from a point node.
std::string dfao_to_dot(const Dfao& d);

/// Orbit-partition witness for the muggle value d * ell: s(n) = index of
/// the orbit of n mod ell under multiplication by k^d, orbits numbered
/// by minimal element (so {0} is orbit 0). Requires gcd(k, ell) = 1 and
/// d | ord_ell(k); the rank is verified before returning.
PeriodicSequence witness_automatic(std::int64_t k, std::int64_t ell, std::int64_t d);

struct AutomaticMuggleReport {
    std::int64_t k = 0;
    std::int64_t ell = 0;
    bool coprime = false;
    /// True when the report merely records ranks observed over a finite
    /// alphabet instead of a proven characterization.
    bool empirical = false;
    std::int64_t range_lo = 0;
    std::int64_t range_hi = 0;
    std::vector<std::int64_t> muggles;
    std::vector<std::int64_t> magics;
    std::map<std::int64_t, PeriodicSequence> witnesses;
};

/// Closed-form report for coprime (k, ell) >= 2: the muggle values in
/// [ell, ell * ord_ell(k)] are exactly {d ell : d | ord_ell(k)}, each
/// attached to a verified orbit witness. Non-coprime input ->
/// unsupported_error (no closed form is known; empirical enumeration is
/// the fallback).
AutomaticMuggleReport muggle_report_automatic(std::int64_t k, std::int64_t ell);

}  // namespace perank
