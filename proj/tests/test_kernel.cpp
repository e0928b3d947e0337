#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "polaract/kernel.hpp"

using namespace polaract;

namespace {

// Reference construction straight from the recursion
// G_n = (I_{n/2} (x) G_2) R_n (I_2 (x) G_{n/2}): used as an independent
// route to the implementation's closed form.
std::vector<std::uint8_t> recursion_encode(std::vector<std::uint8_t> v) {
    const std::size_t n = v.size();
    if (n == 1) return v;
    std::vector<std::uint8_t> top(v.begin(), v.begin() + n / 2);
    std::vector<std::uint8_t> bot(v.begin() + n / 2, v.end());
    top = recursion_encode(std::move(top));
    bot = recursion_encode(std::move(bot));
    // I_2 (x) G_{n/2}, then R_n riffles the first half into the even
    // positions and the second half into the odd ones.
    std::vector<std::uint8_t> shuffled(n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        shuffled[2 * i] = top[i];
        shuffled[2 * i + 1] = bot[i];
    }
    // I_{n/2} (x) G_2 pairs consecutive entries.
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        out[2 * i] = shuffled[2 * i] ^ shuffled[2 * i + 1];
        out[2 * i + 1] = shuffled[2 * i + 1];
    }
    return out;
}

std::vector<std::uint8_t> unit_vector(std::size_t n, std::size_t i) {
    std::vector<std::uint8_t> e(n, 0);
    e[i] = 1;
    return e;
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("generator matrix base cases") {
    const auto g1 = generator_matrix(1);
    CHECK(g1.at(0, 0) == 1);
    CHECK(g1.at(0, 1) == 1);
    CHECK(g1.at(1, 0) == 0);
    CHECK(g1.at(1, 1) == 1);

    // k = 2, expanded by hand from the recursion.
    const bool expected[4][4] = {{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, 1}};
    const auto g2 = generator_matrix(2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(g2.at(i, j) == expected[i][j]);

    CHECK_THROWS_AS(generator_matrix(0), std::length_error);
    CHECK_THROWS_AS(generator_matrix(13), std::length_error);
}

TEST_CASE("generator matrix satisfies the defining recursion") {
    for (int k = 1; k <= 7; ++k) {
        const auto g = generator_matrix(k);
        const std::size_t n = g.size();
        for (std::size_t j = 0; j < n; ++j) {
            const auto column = recursion_encode(unit_vector(n, j));
            for (std::size_t i = 0; i < n; ++i) CHECK(g.at(i, j) == column[i]);
        }
    }
}

TEST_CASE("G_2 * G_2 = I over GF(2), and so on up") {
    for (int k = 1; k <= 6; ++k) {
        const auto g = generator_matrix(k);
        const std::size_t n = g.size();
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::uint8_t> e = unit_vector(n, j);
            const auto twice = oracles::gf2_matvec(g, oracles::gf2_matvec(g, e));
            CHECK(twice == e);
        }
    }
}

TEST_CASE("bit reversal") {
    CHECK(bit_reversal(3, 3) == 6);  // 011 -> 110
    CHECK(bit_reversal(0, 5) == 0);
    CHECK(bit_reversal(1, 4) == 8);
    for (int k = 1; k <= 10; ++k) {
        for (std::uint32_t i = 0; i < (1u << k); ++i) {
            CHECK(bit_reversal(bit_reversal(i, k), k) == i);
        }
    }
    CHECK_THROWS_AS(bit_reversal(8, 3), std::out_of_range);
}

TEST_CASE("encoding matches the pairwise rule at k = 1") {
    CHECK(polar_encode({1, 0}, 1) == std::vector<std::uint8_t>{1, 0});
    CHECK(polar_encode({0, 1}, 1) == std::vector<std::uint8_t>{1, 1});
    CHECK(polar_encode({1, 1}, 1) == std::vector<std::uint8_t>{0, 1});
    CHECK(polar_encode({0, 0, 0, 0}, 2) == std::vector<std::uint8_t>{0, 0, 0, 0});
    CHECK_THROWS_AS(polar_encode({1, 0, 1}, 2), std::invalid_argument);
}

TEST_CASE("encoding unit vectors picks out generator columns") {
    const auto g = generator_matrix(2);
    for (std::size_t j = 0; j < 4; ++j) {
        const auto x = polar_encode(unit_vector(4, j), 2);
        for (std::size_t i = 0; i < 4; ++i) CHECK(x[i] == g.at(i, j));
    }
}

TEST_CASE("butterfly equals explicit matrix multiplication") {
    std::mt19937_64 rng(31);
    for (int k = 1; k <= 10; ++k) {
        const auto g = generator_matrix(k);
        const std::size_t n = std::size_t{1} << k;
        std::vector<std::uint8_t> m(n);
        for (int rep = 0; rep < 5; ++rep) {
            for (auto& b : m) b = static_cast<std::uint8_t>(rng() & 1);
            CHECK(polar_encode(m, k) == oracles::gf2_matvec(g, m));
        }
    }
}

TEST_CASE("encoding twice returns the message") {
    std::mt19937_64 rng(37);
    for (int k = 1; k <= 12; ++k) {
        const std::size_t n = std::size_t{1} << k;
        std::vector<std::uint8_t> m(n);
        for (auto& b : m) b = static_cast<std::uint8_t>(rng() & 1);
        CHECK(polar_encode(polar_encode(m, k), k) == m);
    }
}

TEST_CASE("butterfly performs exactly n/2 log2 n XORs") {
    for (int k = 1; k <= 12; ++k) {
        const std::size_t n = std::size_t{1} << k;
        std::vector<std::uint8_t> m(n, 0);
        std::size_t xors = 0;
        polar_encode_inplace(m, &xors);
        CHECK(xors == n / 2 * static_cast<std::size_t>(k));
    }
}

TEST_CASE("partial distances: small multisets") {
    const auto d1 = partial_distances(1);
    CHECK(std::multiset<std::uint64_t>(d1.begin(), d1.end()) ==
          std::multiset<std::uint64_t>{1, 2});
    const auto d2 = partial_distances(2);
    CHECK(std::multiset<std::uint64_t>(d2.begin(), d2.end()) ==
          std::multiset<std::uint64_t>{1, 2, 2, 4});
    CHECK_THROWS_AS(partial_distances(0), std::length_error);
    CHECK_THROWS_AS(partial_distances(9), std::length_error);
}

TEST_CASE("partial distances agree with literal coset enumeration") {
    // Full enumeration through k = 4; the span of lower-index rows grows as
    // 2^i so larger k get spot checks on the first rows only.
    for (int k = 1; k <= 4; ++k) {
        const auto g = generator_matrix(k);
        const auto d = partial_distances(k);
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(d[i] == oracles::coset_min_weight(g, i));
        }
    }
    for (int k = 5; k <= 8; ++k) {
        const auto g = generator_matrix(k);
        const auto d = partial_distances(k);
        for (std::size_t i = 0; i < 18; ++i) {
            CHECK(d[i] == oracles::coset_min_weight(g, i));
        }
    }
}

TEST_CASE("partial distance multiset is {2^wt(j)} and all powers of two") {
    for (int k = 1; k <= 8; ++k) {
        const auto d = partial_distances(k);
        std::multiset<std::uint64_t> got(d.begin(), d.end());
        std::multiset<std::uint64_t> want;
        for (std::uint64_t j = 0; j < d.size(); ++j) {
            want.insert(std::uint64_t{1} << __builtin_popcountll(j));
        }
        CHECK(got == want);
        for (auto v : d) CHECK((v & (v - 1)) == 0);
    }
}

TEST_CASE("polarization exponent is exactly one half") {
    CHECK(polarization_exponent(1) == doctest::Approx(0.5).epsilon(1e-15));
    for (int k = 1; k <= 8; ++k) {
        CHECK(std::abs(polarization_exponent(k) - 0.5) <= 1e-12);
        CHECK(polarization_exponent(k) <= 0.5 + 1e-12);  // beta <= 0.5 at these levels
    }
}

}  // TEST_SUITE
