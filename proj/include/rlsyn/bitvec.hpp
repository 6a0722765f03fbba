#pragma once

#include <cstdint>
#include <vector>

namespace rlsyn {

/// Packed bit vector, one bit per wire. Widths beyond 64 are routine here
/// (wide circuits show up in the bench sweeps), so the storage is multi-word.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool operator==(const BitVec& other) const = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rlsyn
