#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polaract {

/// Hard size caps; exceeding them throws std::length_error rather than
/// silently truncating.
inline constexpr int kMaxGeneratorLevel = 12;
inline constexpr int kMaxPartialDistanceLevel = 8;

/// n x n binary generator matrix of the recursive polar transform,
/// G_n = (I_{n/2} (x) G_2) R_n (I_2 (x) G_{n/2}) with G_2 = [[1,1],[0,1]]
/// and R_n the perfect shuffle sending the first half to the even indices.
/// The composition is the standard transform in bit-reversed order. Rows
/// are bit-packed.
class GeneratorMatrix {
public:
    GeneratorMatrix(int k, std::size_t n);

    int level() const { return k_; }
    std::size_t size() const { return n_; }
    bool at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col);
    std::span<const std::uint64_t> row_words(std::size_t row) const;
    std::size_t words_per_row() const { return words_; }

private:
    int k_;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Builds G_n for 1 <= k <= 12. The closed form used here
/// (G[i][j] = 1 iff the bit-reversal of i is a submask of j) is what the
/// recursion above expands to; the equivalence is exercised by tests.
GeneratorMatrix generator_matrix(int k);

/// Reverses the k-bit binary expansion of index. 0 <= index < 2^k.
std::uint32_t bit_reversal(std::uint32_t index, int k);

/// In-place bit-reversal reordering of a length-2^k buffer.
void bit_reverse_permute(std::span<std::uint8_t> data, int k);

/// Applies G_n to the message over GF(2): bit-reversal permutation followed
/// by the XOR butterfly. Exactly (n/2) log2(n) XORs are performed; the count
/// is reported through xor_count when given.
void polar_encode_inplace(std::span<std::uint8_t> bits, std::size_t* xor_count = nullptr);

/// Returns G_n * message over GF(2). message.size() must equal 2^k.
std::vector<std::uint8_t> polar_encode(const std::vector<std::uint8_t>& message, int k);

/// Partial distances d_i = min_{c in span of the rows preceding row i} of
/// wt(g_i + c), for 1 <= k <= 8. Rows are processed highest index first, so
/// each row's competitor span consists of the lower-index (higher-weight)
/// rows. For this kernel the coset minimum splits exactly across the
/// half-size recursion (d_{2i} = 2 d'_i, d_{2i+1} = d'_i), which is what is
/// computed here; the literal coset enumeration is kept as a test oracle.
/// The returned multiset equals {2^wt(j) : 0 <= j < n}.
std::vector<std::uint64_t> partial_distances(int k);

/// Rate-of-polarization exponent (1/n) sum_i log_n d_i. Equal to 0.5 for
/// this kernel at every level.
double polarization_exponent(int k);

}  // namespace polaract
