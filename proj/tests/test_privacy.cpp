#include <doctest.h>

#include <cmath>
#include <random>

#include "polaract/privacy.hpp"

using namespace polaract;

namespace {

std::vector<std::uint32_t> eps_good(const ReliabilityProfile& p, double eps) {
    return select_below(p, eps).good;
}

}  // namespace

TEST_SUITE("privacy") {

TEST_CASE("partition arithmetic on a worked example") {
    const std::vector<std::uint32_t> amp = {1, 2, 3};
    const std::vector<std::uint32_t> phase = {3, 4};
    const auto part = partition_indices(amp, phase, 5);
    CHECK(part.s_in == std::vector<std::uint32_t>{3});
    CHECK(part.p1 == std::vector<std::uint32_t>{1, 2});
    CHECK(part.p2 == std::vector<std::uint32_t>{4});
    CHECK(part.b == std::vector<std::uint32_t>{0});
    CHECK(part.classical() == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(part.s_bad_size() == 4);
}

TEST_CASE("partition edge cases") {
    const std::vector<std::uint32_t> all = {0, 1, 2, 3};
    auto part = partition_indices(all, all, 4);
    CHECK(part.s_in == all);
    CHECK(part.p1.empty());
    CHECK(part.p2.empty());
    CHECK(part.b.empty());

    part = partition_indices({std::vector<std::uint32_t>{0, 1}}, {std::vector<std::uint32_t>{2, 3}}, 4);
    CHECK(part.s_in.empty());  // disjoint good sets leave nothing private

    const std::vector<std::uint32_t> bad = {7};
    CHECK_THROWS_AS(partition_indices(bad, all, 4), std::out_of_range);
}

TEST_CASE("partition cells are disjoint and cover the range") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 10000; ++rep) {
        const std::size_t n = 1 + rng() % 64;
        std::vector<std::uint32_t> amp, phase;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (rng() & 1) amp.push_back(i);
            if (rng() & 1) phase.push_back(i);
        }
        const auto part = partition_indices(amp, phase, n);
        CHECK(part.s_in.size() + part.p1.size() + part.p2.size() + part.b.size() == n);
        std::vector<int> hits(n, 0);
        for (auto i : part.s_in) ++hits[i];
        for (auto i : part.p1) ++hits[i];
        for (auto i : part.p2) ++hits[i];
        for (auto i : part.b) ++hits[i];
        for (int h : hits) CHECK(h == 1);
        CHECK(part.classical().size() == part.p1.size() + part.s_in.size());
        CHECK(part.s_bad_size() == n - part.s_in.size());
    }
}

TEST_CASE("private rates") {
    IndexPartition part;
    part.n = 4;
    part.s_in = {3};
    CHECK(private_rate(part, Degradedness::Degraded) == doctest::Approx(0.25));
    CHECK(private_rate(part, Degradedness::NonDegraded) == doctest::Approx(0.25));

    part.b = {0};
    CHECK(private_rate(part, Degradedness::NonDegraded) == 0.0);

    part.s_in.clear();
    part.b.clear();
    CHECK(private_rate(part, Degradedness::Degraded) == 0.0);
    CHECK(private_rate(part, Degradedness::NonDegraded) == 0.0);
}

TEST_CASE("degraded rate dominates the non-degraded rate") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t n = 1 + rng() % 32;
        std::vector<std::uint32_t> amp, phase;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (rng() & 1) amp.push_back(i);
            if (rng() & 1) phase.push_back(i);
        }
        const auto part = partition_indices(amp, phase, n);
        CHECK(private_rate(part, Degradedness::Degraded) >=
              private_rate(part, Degradedness::NonDegraded));
    }
}

TEST_CASE("inclusion-exclusion rate") {
    CHECK(inclusion_exclusion_rate(3, 3, 4) == doctest::Approx(0.5));
    CHECK(inclusion_exclusion_rate(2, 2, 4) == 0.0);  // boundary g_amp + g_phase = n
    CHECK(inclusion_exclusion_rate(0, 0, 4) == 0.0);
    CHECK_THROWS_AS(inclusion_exclusion_rate(5, 0, 4), std::invalid_argument);
}

TEST_CASE("inclusion-exclusion approaches the capacity sum at depth twenty") {
    const auto amp = evolve(0.2, 20);
    const auto g = eps_good(amp, 1e-9).size();
    const double rate = inclusion_exclusion_rate(g, g, amp.n);
    // Asymptote C_amp + C_phase - 1 = 0.6; finite-k polarization loss keeps
    // the measured value near 0.51 here.
    CHECK(rate > 0.45);
    CHECK(rate < 0.6);
}

TEST_CASE("polaractivation check: worked statuses") {
    auto st = polaractivation_check(0.3, 0.83, 1.0);
    CHECK(st.activatable);
    CHECK(!st.private_capable);  // blocked
    CHECK(st.delta_min == doctest::Approx(0.53).epsilon(1e-12));
    CHECK(st.delta_max == doctest::Approx(0.70).epsilon(1e-12));

    st = polaractivation_check(0.9, 0.83, 1.0);
    CHECK(st.activatable);
    CHECK(st.private_capable);
    CHECK(st.delta_min == 0.0);
    CHECK(st.delta_max == doctest::Approx(0.10).epsilon(1e-12));

    st = polaractivation_check(0.3, 1.2, 1.0);
    CHECK(!st.activatable);
    CHECK(st.delta_min > st.delta_max);

    CHECK_THROWS_AS(polaractivation_check(1.2, 0.8, 1.0), std::domain_error);
    CHECK_THROWS_AS(polaractivation_check(0.3, -0.1, 1.0), std::domain_error);
}

TEST_CASE("activatable is monotone in the window endpoints") {
    for (double c_low = 0.0; c_low <= 2.0; c_low += 0.1) {
        bool prev = false;
        for (double c_star = 0.2; c_star <= 2.0; c_star += 0.1) {
            const auto st = polaractivation_check(0.1, c_low, c_star);
            if (prev) CHECK(st.activatable);  // monotone in c_sym_star
            prev = st.activatable;
            CHECK(st.activatable == (st.delta_min <= st.delta_max));
        }
    }
    // Antitone in c_low.
    bool prev = true;
    for (double c_low = 0.0; c_low <= 2.0; c_low += 0.1) {
        const auto st = polaractivation_check(0.1, c_low, 1.0);
        if (!prev) CHECK(!st.activatable);
        prev = st.activatable;
    }
}

TEST_CASE("degradedness ordering") {
    CHECK(degradedness(0.1, 0.3) == Degradedness::Degraded);
    CHECK(degradedness(0.3, 0.1) == Degradedness::NonDegraded);
    CHECK(degradedness(0.2, 0.2) == Degradedness::Degraded);  // boundary convention
    CHECK_THROWS_AS(degradedness(-0.1, 0.5), std::domain_error);
}

TEST_CASE("wiretap cells: certainty extremes") {
    const auto bob = evolve(0.0, 6);
    const auto eve = evolve(1.0, 6);

    auto sets = wiretap_sets(bob, eve, 0.45);
    CHECK(sets.s_secret.size() == bob.n);  // Bob noiseless, Eve fully erased

    sets = wiretap_sets(eve, bob, 0.45);  // Eve noiseless: nothing is secret
    CHECK(sets.s_secret.empty());

    const auto small = evolve(0.5, 3);
    CHECK_THROWS_AS(wiretap_sets(bob, small, 0.45), std::invalid_argument);
    CHECK_THROWS_AS(wiretap_sets(bob, eve, 0.6), std::domain_error);
}

TEST_CASE("wiretap cells partition the range and converge to the capacity gap") {
    const auto bob = evolve(0.1, 16);
    const auto eve = evolve(0.4, 16);
    const auto sets = wiretap_sets(bob, eve, 0.1);
    CHECK(sets.s_secret.size() + sets.s_bob_only.size() + sets.s_eve_risky.size() +
              sets.s_useless.size() ==
          bob.n);
    const double frac = static_cast<double>(sets.s_secret.size()) / static_cast<double>(bob.n);
    CHECK(std::abs(frac - 0.3) <= 0.07);  // C_Bob - C_Eve = 0.3
}

TEST_CASE("complement alignment drives s_in toward the inclusion-exclusion rate") {
    const auto amp = evolve(0.2, 20);
    const auto phase = evolve(0.2, 20);
    const auto part =
        partition_from_profiles(amp, phase, RateTarget{0.8}, PhaseAlignment::Complement);
    const double s_in_frac = static_cast<double>(part.s_in.size()) / static_cast<double>(part.n);
    const double ie = inclusion_exclusion_rate(static_cast<std::size_t>(0.8 * part.n),
                                               static_cast<std::size_t>(0.8 * part.n), part.n);
    CHECK(std::abs(s_in_frac - ie) <= 0.05);
    CHECK(private_rate(part, Degradedness::Degraded) == doctest::Approx(s_in_frac));
}

TEST_CASE("aligned mode reduces to plain intersection") {
    const auto amp = evolve(0.3, 10);
    const auto phase = evolve(0.3, 10);
    const auto aligned =
        partition_from_profiles(amp, phase, RateTarget{0.5}, PhaseAlignment::Aligned);
    // Same profile, same selection: the aligned intersection is everything
    // selected.
    CHECK(aligned.s_in.size() == static_cast<std::size_t>(0.5 * amp.n));
    CHECK(aligned.p1.empty());
    CHECK(aligned.p2.empty());

    const auto complemented =
        partition_from_profiles(amp, phase, RateTarget{0.5}, PhaseAlignment::Complement);
    CHECK(complemented.s_in.size() < aligned.s_in.size());
}

TEST_CASE("threshold-mode s_in transitions from empty to populated") {
    // A noisy pair stays empty through k = 10 and opens at k* = 11 with the
    // relaxed exponent; this is the rate-increment effect in set terms.
    std::size_t first_nonempty = 0;
    for (int k = 1; k <= 20; ++k) {
        const auto amp = evolve(0.4, k, 0.25);
        const auto part =
            partition_from_profiles(amp, amp, Threshold{}, PhaseAlignment::Complement);
        if (k <= 10) {
            CHECK(part.s_in.empty());
        } else {
            CHECK(!part.s_in.empty());
            if (first_nonempty == 0) first_nonempty = static_cast<std::size_t>(k);
        }
    }
    CHECK(first_nonempty == 11);

    // The milder pair from the erasure family is already open at small k
    // and stays open.
    for (int k = 4; k <= 12; ++k) {
        const auto amp = evolve(0.2, k, 0.45);
        const auto part =
            partition_from_profiles(amp, amp, Threshold{}, PhaseAlignment::Complement);
        CHECK(!part.s_in.empty());
    }
}

TEST_CASE("frontier heuristic for the critical bound") {
    CHECK(c_low_frontier_heuristic(0.0, 0.0) == doctest::Approx(0.8301).epsilon(1e-3));
    CHECK(c_low_frontier_heuristic(0.5, 0.5) == doctest::Approx(0.8301).epsilon(1e-3));
    CHECK(c_low_frontier_heuristic(0.2, 0.2) ==
          doctest::Approx(c_low_frontier_heuristic(0.7, 0.7)).epsilon(1e-12));
    CHECK(c_low_frontier_heuristic(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(c_low_frontier_heuristic(1.2, 0.0), std::domain_error);
}

}  // TEST_SUITE
