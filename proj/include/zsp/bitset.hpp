#pragma once
// Minimal dynamic bitset used by the search engine and the certificate checks.
// Only the operations the solvers need; positions are dense ground-set indices.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zsp {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool all_set() const { return count() == n_; }
    bool none_set() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Lowest position >= from that is NOT set; size() when none.
    std::size_t find_first_clear(std::size_t from = 0) const {
        if (from >= n_) return n_;
        std::size_t wi = from >> 6;
        std::uint64_t w = ~words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                std::size_t pos = (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
                return pos < n_ ? pos : n_;
            }
            if (++wi >= words_.size()) return n_;
            w = ~words_[wi];
        }
    }

    void clear_all() { std::fill(words_.begin(), words_.end(), 0); }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace zsp
