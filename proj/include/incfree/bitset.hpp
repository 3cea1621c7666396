#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace incfree {

/// Packed dynamic bitset used for incidence rows and search candidate sets.
/// Binary operations require operands of equal size.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void set_all() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void reset_all() noexcept {
        for (auto& w : words_) w = 0;
    }
    void flip_all() noexcept {
        for (auto& w : words_) w = ~w;
        trim();
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    /// |*this & other|
    std::size_t count_and(const Bitset& other) const noexcept {
        std::size_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return n;
    }
    /// |*this & ~other|
    std::size_t count_and_not(const Bitset& other) const noexcept {
        std::size_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            n += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
        return n;
    }
    bool intersects(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    std::size_t find_first() const noexcept { return find_from_word(0); }
    std::size_t find_next(std::size_t i) const noexcept {
        ++i;
        if (i >= bits_) return npos;
        std::size_t wi = i >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return find_from_word(wi + 1);
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    std::size_t find_from_word(std::size_t wi) const noexcept {
        for (; wi < words_.size(); ++wi)
            if (words_[wi]) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(words_[wi]));
        return npos;
    }
    void trim() noexcept {
        if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace incfree
