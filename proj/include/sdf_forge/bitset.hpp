#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sdf {

/// Fixed-size bit vector with the word-parallel operations the search needs.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set_all()
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return bits_;
    }

    /// this = a & b (all three the same size)
    void assign_and(const Bitset& a, const Bitset& b)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] = a.words_[i] & b.words_[i];
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    void and_not(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim()
    {
        if (bits_ % 64 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sdf
