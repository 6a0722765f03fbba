#pragma once

#include <cstdint>
#include <vector>

namespace rlsyn {

/// A transformation f: Z_2^n -> Z_2^n as 2^n output words.
///
/// Bit convention (fixed across the toolkit): x = <x_1,...,x_n> with x_1 the
/// most significant bit of the row index, and bit i of an entry word holds
/// f_i(x) with f_1 most significant. f need not be a bijection.
struct TruthTable {
    int n = 0;
    std::vector<std::uint32_t> entries;

    /// f_i(x) for 0-based output index i.
    bool output_bit(std::uint32_t x, int i) const {
        return (entries[x] >> (n - 1 - i)) & 1;
    }

    std::uint32_t size() const { return std::uint32_t{1} << n; }

    static TruthTable identity(int n);
    static TruthTable constant_zero(int n);
    static TruthTable bit_reversal(int n);
    /// 2^n independent uniform n-bit words drawn from SplitMix64(seed).
    static TruthTable random(int n, std::uint64_t seed);

    bool operator==(const TruthTable&) const = default;
};

} // namespace rlsyn
