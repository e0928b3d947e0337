#include "polaract/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace polaract {

GeneratorMatrix::GeneratorMatrix(int k, std::size_t n)
    : k_(k), n_(n), words_((n + 63) / 64), bits_(words_ * n, 0) {}

bool GeneratorMatrix::at(std::size_t row, std::size_t col) const {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
}

void GeneratorMatrix::set(std::size_t row, std::size_t col) {
    bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
}

std::span<const std::uint64_t> GeneratorMatrix::row_words(std::size_t row) const {
    return {bits_.data() + row * words_, words_};
}

GeneratorMatrix generator_matrix(int k) {
    if (k < 1) throw std::length_error("generator_matrix: k must be >= 1");
    if (k > kMaxGeneratorLevel) {
        throw std::length_error("generator_matrix: k exceeds the materialization cap of 12");
    }
    const std::size_t n = std::size_t{1} << k;
    GeneratorMatrix g(k, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t r = bit_reversal(i, k);
        for (std::uint32_t j = 0; j < n; ++j) {
            if ((r & j) == r) g.set(i, j);
        }
    }
    return g;
}

std::uint32_t bit_reversal(std::uint32_t index, int k) {
    if (k < 0 || k > 31 || index >= (std::uint32_t{1} << k)) {
        throw std::out_of_range("bit_reversal: index outside [0, 2^k)");
    }
    std::uint32_t out = 0;
    for (int b = 0; b < k; ++b) {
        out = (out << 1) | ((index >> b) & 1u);
    }
    return out;
}

void bit_reverse_permute(std::span<std::uint8_t> data, int k) {
    const std::size_t n = data.size();
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t r = bit_reversal(i, k);
        if (r > i) std::swap(data[i], data[r]);
    }
}

void polar_encode_inplace(std::span<std::uint8_t> bits, std::size_t* xor_count) {
    const std::size_t n = bits.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("polar_encode: length must be a power of two");
    }
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;

    bit_reverse_permute(bits, k);
    std::size_t xors = 0;
    for (std::size_t inc = 1; inc < n; inc <<= 1) {
        for (std::size_t base = 0; base < n; base += 2 * inc) {
            for (std::size_t j = 0; j < inc; ++j) {
                bits[base + j] ^= bits[base + j + inc];
                ++xors;
            }
        }
    }
    if (xor_count) *xor_count = xors;
}

std::vector<std::uint8_t> polar_encode(const std::vector<std::uint8_t>& message, int k) {
    if (k < 0 || message.size() != (std::size_t{1} << k)) {
        throw std::invalid_argument("polar_encode: message length must equal 2^k");
    }
    std::vector<std::uint8_t> out = message;
    polar_encode_inplace(out);
    return out;
}

std::vector<std::uint64_t> partial_distances(int k) {
    if (k < 1) throw std::length_error("partial_distances: k must be >= 1");
    if (k > kMaxPartialDistanceLevel) {
        throw std::length_error("partial_distances: coset search capped at k = 8");
    }
    // Row i's competitors are the lower-index rows. Splitting each row into
    // coordinate halves, row 2i duplicates the half-size row i and row 2i+1
    // places it in the right half only; minimizing over the two halves
    // independently gives d(2i) = 2 d'(i) and d(2i+1) = d'(i) with the same
    // competitor structure one level down.
    std::vector<std::uint64_t> d{1};
    for (int level = 0; level < k; ++level) {
        std::vector<std::uint64_t> next(d.size() * 2);
        for (std::size_t i = 0; i < d.size(); ++i) {
            next[2 * i] = 2 * d[i];
            next[2 * i + 1] = d[i];
        }
        d = std::move(next);
    }
    return d;
}

double polarization_exponent(int k) {
    const auto d = partial_distances(k);
    const double n = static_cast<double>(d.size());
    double sum = 0.0;
    for (std::uint64_t di : d) {
        sum += std::log2(static_cast<double>(di));  // exact for powers of two
    }
    return sum / (n * k);
}

}  // namespace polaract
