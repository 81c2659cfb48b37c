#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gemfive {

// Fixed-capacity set of vertex ids, one bit per vertex.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static Bitset of(int nbits, std::initializer_list<int> xs)
    {
        Bitset b(nbits);
        for (int x : xs)
            b.set(x);
        return b;
    }

    int capacity() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const
    {
        int c = 0;
        for (auto w : w_)
            c += std::popcount(w);
        return c;
    }
    bool any() const
    {
        for (auto w : w_)
            if (w)
                return true;
        return false;
    }
    bool empty() const { return !any(); }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const = default;

    bool intersects(const Bitset& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    // first set bit, or -1
    int first() const { return next(-1); }
    // first set bit strictly after `i`, or -1
    int next(int i) const
    {
        int from = i + 1;
        if (from >= nbits_)
            return -1;
        std::size_t word = from >> 6;
        std::uint64_t w = w_[word] >> (from & 63);
        if (w)
            return from + std::countr_zero(w);
        for (++word; word < w_.size(); ++word)
            if (w_[word])
                return int(word << 6) + std::countr_zero(w_[word]);
        return -1;
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> v;
        for (int i = first(); i >= 0; i = next(i))
            v.push_back(i);
        return v;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Iteration helper: for (int v : iterate(bs)) ...
struct BitsetRange {
    const Bitset* bs;
    struct iterator {
        const Bitset* bs;
        int v;
        int operator*() const { return v; }
        iterator& operator++()
        {
            v = bs->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {bs, bs->first()}; }
    iterator end() const { return {bs, -1}; }
};
inline BitsetRange iterate(const Bitset& b) { return {&b}; }

} // namespace gemfive
