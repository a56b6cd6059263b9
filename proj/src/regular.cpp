#include "perank/regular.hpp"

#include <numeric>
#include <stdexcept>

#include "perank/automatic.hpp"
#include "perank/errors.hpp"
#include "perank/linalg.hpp"

namespace perank {

std::int64_t rank_regular(const PeriodicSequence& s, std::int64_t k) {
    const Kernel ker = kernel(s, k);
    if (s.ell() == 1) return 1;
    IntMatrix m(ker.elements.size(), static_cast<std::size_t>(s.ell()));
    for (std::size_t i = 0; i < ker.elements.size(); ++i)
        for (std::size_t j = 0; j < ker.elements[i].values.size(); ++j)
            m.at(i, j) = Int128(ker.elements[i].values[j]);
    return static_cast<std::int64_t>(rank(std::move(m)));
}

bool check_coprime_collapse(const PeriodicSequence& s, std::int64_t k) {
    if (k < 2) throw std::domain_error("base k must be at least 2");
    if (std::gcd(k, s.ell()) != 1) throw std::domain_error("the collapse statement needs gcd(k, ell) = 1");
    return rank_regular(s, k) == rank_cr(s);
}

CrMuggleReport muggle_report_regular(std::int64_t k, std::int64_t ell) {
    if (k < 2) throw std::domain_error("base k must be at least 2");
    if (ell < 2) throw std::domain_error("ell must be at least 2");
    if (std::gcd(k, ell) != 1)
        throw unsupported_error("no closed-form muggle characterization is known when gcd(k, ell) > 1; "
                                "use empirical enumeration instead");
    CrMuggleReport rep = muggle_report_cr(ell);
    for (const auto& [value, entry] : rep.witnesses)
        if (rank_regular(entry.second, k) != value)
            throw std::logic_error("witness failed its regular-rank verification");
    return rep;
}

}  // namespace perank
