#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ordext {

/// Square boolean matrix with 64-bit packed rows. Row i holds the successors
/// of element i.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const noexcept { return n_; }

    bool test(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    void reset(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
    }

    /// row(dst) |= row(src)
    void or_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = &bits_[dst * words_];
        const std::uint64_t* s = &bits_[src * words_];
        for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
    }

    std::size_t row_count(std::size_t i) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += std::popcount(bits_[i * words_ + w]);
        return c;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c;
    }

    /// First column j set in row(i) but not in row(k), if any.
    std::optional<std::size_t> first_difference(std::size_t i, std::size_t k) const {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t diff = bits_[i * words_ + w] & ~bits_[k * words_ + w];
            if (diff) return w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
        }
        return std::nullopt;
    }

    /// Calls f(j) for each set column of row i in increasing order.
    template <typename F>
    void for_each_in_row(std::size_t i, F&& f) const {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = bits_[i * words_ + w];
            while (word) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Warshall closure over packed rows.
inline void close_transitively(BitMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (m.test(i, k)) m.or_row(i, k);
}

} // namespace ordext
