#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "perank/errors.hpp"
#include "perank/oracle.hpp"
#include "perank/recursive.hpp"
#include "perank/regular.hpp"
#include "test_seed.hpp"

using namespace perank;

TEST_SUITE("oracle") {

TEST_CASE("enumerate_per counts match the Mobius formula") {
    CHECK(enumerate_per(2, 2).size() == 2);
    CHECK(enumerate_per(4, 2).size() == 12);    // 2^4 - 2^2
    CHECK(enumerate_per(6, 3).size() == 696);   // 3^6 - 3^3 - 3^2 + 3
    for (const PeriodicSequence& s : enumerate_per(4, 2)) CHECK(s.ell() == 4);
}

TEST_CASE("budget overruns name the required budget") {
    CHECK_THROWS_WITH_AS(for_each_per(12, 4, 1000, [](const std::vector<std::int64_t>&) {}),
                         "enumerating 4^12 tuples needs a budget of at least 16777216 (configured: 1000)",
                         resource_error);
}

TEST_CASE("definitional cr rank agrees with the circulant rank") {
    CHECK(rank_cr_bruteforce(PeriodicSequence({-1, 0, 1})) == 2);
    CHECK(rank_cr_bruteforce(PeriodicSequence({0, 1})) == 2);
    CHECK(rank_cr_bruteforce(PeriodicSequence({1, -1})) == 1);
    CHECK(rank_cr_bruteforce(PeriodicSequence({7})) == 1);
    for (std::int64_t ell = 2; ell <= 8; ++ell)
        for (const PeriodicSequence& s : enumerate_per(ell, 3)) CHECK(rank_cr_bruteforce(s) == rank_cr(s));
    std::vector<std::int64_t> long_period(17, 1);
    long_period.back() = 2;
    CHECK_THROWS_AS(rank_cr_bruteforce(PeriodicSequence(long_period)), resource_error);
}

TEST_CASE("kernel by definition equals the BFS closure") {
    std::mt19937_64 rng(test_seed);
    std::uniform_int_distribution<std::int64_t> value(0, 3);
    for (std::int64_t k = 2; k <= 5; ++k)
        for (std::int64_t ell = 2; ell <= 10; ++ell) {
            std::vector<PeriodicSequence> samples;
            std::vector<std::int64_t> ramp(static_cast<std::size_t>(ell));
            std::iota(ramp.begin(), ramp.end(), std::int64_t{0});
            samples.emplace_back(ramp);
            std::vector<std::int64_t> impulse(static_cast<std::size_t>(ell), 0);
            impulse.back() = 1;
            samples.emplace_back(impulse);
            for (int extra = 0; extra < 3; ++extra) {
                std::vector<std::int64_t> p(static_cast<std::size_t>(ell));
                for (auto& v : p) v = value(rng);
                samples.emplace_back(std::move(p));
            }
            for (const PeriodicSequence& s : samples) {
                std::set<std::vector<std::int64_t>> bfs;
                for (const KernelElement& e : kernel(s, k).elements) bfs.insert(e.values);
                const auto tuples = kernel_tuples_by_definition(s, k);
                CHECK(std::set<std::vector<std::int64_t>>(tuples.begin(), tuples.end()) == bfs);
            }
        }
}

TEST_CASE("framework names round-trip") {
    CHECK(framework_name(Framework::automatic) == "automatic");
    CHECK(framework_name(Framework::cr) == "cr");
    CHECK(framework_name(Framework::regular) == "regular");
    CHECK(parse_framework("cr") == Framework::cr);
    CHECK_FALSE(parse_framework("nonsense").has_value());
}

TEST_CASE("diff closes unrealized muggles with witnesses") {
    const DiffReport d = diff_report(Framework::cr, 0, 2, 2);
    CHECK(d.has_prediction);
    CHECK(d.predicted_muggles == std::vector<std::int64_t>{1, 2});
    CHECK(d.observed_ranks == std::map<std::int64_t, std::int64_t>{{2, 2}});
    CHECK(d.soundness_violations.empty());
    CHECK(d.unrealized_muggles == std::vector<std::int64_t>{1});
    CHECK(d.witness_closures.at(1) == PeriodicSequence({1, -1}));
}

TEST_CASE("diff over an alphabet too small for the top rank") {
    const DiffReport d = diff_report(Framework::automatic, 3, 7, 2);
    CHECK(d.soundness_violations.empty());
    CHECK(d.observed_ranks == std::map<std::int64_t, std::int64_t>{{7, 14}, {14, 28}, {21, 84}});
    CHECK(d.unrealized_muggles == std::vector<std::int64_t>{42});
    CHECK(d.witness_closures.at(42).ell() == 7);
}

TEST_CASE("diff on cr matches a reference muggle row") {
    const DiffReport d = diff_report(Framework::cr, 0, 6, 3);
    CHECK(d.predicted_muggles == std::vector<std::int64_t>{2, 3, 4, 5, 6});
    CHECK(d.soundness_violations.empty());
    // Rank 2 forces chi = x^2 - x + 1, whose sequences satisfy
    // s(n+3) = -s(n); no nonzero sequence over {0,1,2} does that. The
    // signed impulse witness closes the gap.
    CHECK(d.unrealized_muggles == std::vector<std::int64_t>{2});
    CHECK(d.witness_closures.at(2) == PeriodicSequence({0, 1, 1, 0, -1, -1}));
}

TEST_CASE("non-coprime diffs fall back to observation only") {
    const DiffReport d = diff_report(Framework::automatic, 2, 6, 3);
    CHECK_FALSE(d.has_prediction);
    CHECK(d.predicted_muggles.empty());
    CHECK(d.soundness_violations.empty());
    std::vector<std::int64_t> observed;
    for (const auto& [v, count] : d.observed_ranks) observed.push_back(v);
    CHECK(observed == std::vector<std::int64_t>{4, 5, 7, 8, 10});
}

TEST_CASE("empirical reports") {
    const AutomaticMuggleReport r = empirical_report(Framework::regular, 2, 6, 3);
    CHECK(r.empirical);
    CHECK(r.muggles == std::vector<std::int64_t>{4});
    CHECK(r.range_lo == 4);
    CHECK(r.range_hi == 4);
    CHECK(r.witnesses.at(4).ell() == 6);
    CHECK_THROWS_AS(empirical_report(Framework::cr, 0, 4, 2), std::domain_error);
}

}  // TEST_SUITE
