#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace gburn {

/// Fixed-width bitset whose width is chosen at construction.
/// Used for vertex sets and set-cover universes alike.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set_all() {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// this := this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    std::size_t intersect_count(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const {
        return bits_ == o.bits_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    static constexpr std::size_t npos = ~std::size_t{0};

    std::size_t find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return npos;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = bits_;
        for (auto w : words_)
            h = h * 0x9e3779b97f4a7c15ull + std::hash<uint64_t>{}(w);
        return h;
    }

private:
    void trim() {
        if (bits_ & 63) words_.back() &= (~uint64_t{0}) >> (64 - (bits_ & 63));
        if (bits_ == 0 && !words_.empty()) words_.back() = 0;
    }

    std::size_t bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace gburn
