#include "rlsyn/truth_table.hpp"

#include "rlsyn/prng.hpp"

namespace rlsyn {

TruthTable TruthTable::identity(int n) {
    TruthTable tt{n, {}};
    tt.entries.resize(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < tt.size(); ++x)
        tt.entries[x] = x;
    return tt;
}

TruthTable TruthTable::constant_zero(int n) {
    TruthTable tt{n, {}};
    tt.entries.assign(std::size_t{1} << n, 0);
    return tt;
}

TruthTable TruthTable::bit_reversal(int n) {
    TruthTable tt{n, {}};
    tt.entries.resize(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < tt.size(); ++x) {
        std::uint32_t r = 0;
        for (int b = 0; b < n; ++b)
            if ((x >> b) & 1)
                r |= std::uint32_t{1} << (n - 1 - b);
        tt.entries[x] = r;
    }
    return tt;
}

TruthTable TruthTable::random(int n, std::uint64_t seed) {
    TruthTable tt{n, {}};
    tt.entries.resize(std::size_t{1} << n);
    SplitMix64 rng(seed);
    const std::uint32_t mask = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
    for (std::uint32_t x = 0; x < tt.size(); ++x)
        tt.entries[x] = static_cast<std::uint32_t>(rng.next()) & mask;
    return tt;
}

} // namespace rlsyn
