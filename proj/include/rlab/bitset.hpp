#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rlab {

// Fixed-size bitset sized at run time. Vertex sets and neighbourhoods.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // removes everything in o
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset&) const = default;

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    // -1 when none
    int first_set_at_least(int from) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        std::uint64_t word = w_[wi] & (~0ULL << (from & 63));
        while (true) {
            if (word) {
                int bit = (wi << 6) + std::countr_zero(word);
                return bit < n_ ? bit : -1;
            }
            if (++wi >= static_cast<int>(w_.size())) return -1;
            word = w_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = first_set_at_least(0); i != -1; i = first_set_at_least(i + 1)) out.push_back(i);
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace rlab
