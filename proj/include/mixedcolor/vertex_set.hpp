#ifndef MIXEDCOLOR_VERTEX_SET_HPP
#define MIXEDCOLOR_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mixedcolor {

/// Fixed-universe bitset over vertex ids 0..n-1. Hashable so it can key memo tables.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe, bool full = false)
        : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0)
    {
        if (full) {
            for (int v = 0; v < universe; ++v)
                insert(v);
        }
    }

    int universe() const { return universe_; }

    void insert(int v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    /// Smallest member, or -1.
    int first() const { return next(0); }

    /// Smallest member >= from, or -1.
    int next(int from) const
    {
        if (from >= universe_)
            return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi == words_.size())
                return -1;
            w = words_[wi];
        }
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        for (int v = first(); v != -1; v = next(v + 1))
            out.push_back(v);
        return out;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    std::size_t hash() const
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) {
            h ^= std::hash<std::uint64_t>{}(w);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace mixedcolor

#endif
