#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tropidom {

// Fixed-width bit row over 0-based vertex indices. The width is chosen at
// construction and never changes; binary operations assume equal widths.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const noexcept { return width_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }
    bool all() const noexcept { return count() == width_; }

    // Index of the lowest set bit, or width() if none.
    std::size_t first() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return width_;
    }

    // Index of the lowest clear bit, or width() if every bit is set.
    std::size_t first_clear() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto inv = ~words_[k];
            if (inv) {
                auto i = k * 64 + static_cast<std::size_t>(std::countr_zero(inv));
                return i < width_ ? i : width_;
            }
        }
        return width_;
    }

    // Index of the lowest set bit strictly above `i`, or width() if none.
    std::size_t next(std::size_t i) const noexcept {
        ++i;
        if (i >= width_) return width_;
        std::size_t k = i >> 6;
        auto w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return width_;
            w = words_[k];
        }
    }

    bool is_subset_of(const Bits& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool intersects(const Bits& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    // Number of bits set here but not in `mask`.
    std::size_t count_outside(const Bits& mask) const noexcept {
        std::size_t total = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            total += static_cast<std::size_t>(std::popcount(words_[k] & ~mask.words_[k]));
        return total;
    }

    Bits& operator|=(const Bits& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) noexcept { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) noexcept { return a &= b; }

    friend bool operator==(const Bits&, const Bits&) = default;

private:
    void trim() noexcept {
        if (width_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tropidom
