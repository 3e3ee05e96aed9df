#ifndef CHIBOUND_VERTEX_SET_HPP
#define CHIBOUND_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chibound {

// Subset of {0,..,n-1} as a packed bitset. The oracles are exponential
// searches dominated by intersections, so all binary ops are in-place and
// allocation-free.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0)
    {
        if (universe < 0)
            throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~0ull;
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs)
    {
        VertexSet s(universe);
        for (int v : vs)
            s.add(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool contains(int v) const
    {
        return v >= 0 && v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
    }

    void add(int v)
    {
        check(v);
        words_[v >> 6] |= 1ull << (v & 63);
    }

    void remove(int v)
    {
        check(v);
        words_[v >> 6] &= ~(1ull << (v & 63));
    }

    int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    void clear()
    {
        for (auto& w : words_)
            w = 0;
    }

    void union_with(const VertexSet& o)
    {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
    }

    void intersect_with(const VertexSet& o)
    {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
    }

    void setminus_with(const VertexSet& o)
    {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
    }

    bool is_subset_of(const VertexSet& o) const
    {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    bool intersects(const VertexSet& o) const
    {
        same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool operator==(const VertexSet& o) const
    {
        return n_ == o.n_ && words_ == o.words_;
    }

    int intersection_size(const VertexSet& o) const
    {
        same(o);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    int difference_size(const VertexSet& o) const
    {
        same(o);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~o.words_[i]);
        return c;
    }

    // first member >= from, or -1
    int next(int from) const
    {
        if (from < 0)
            from = 0;
        if (from >= n_)
            return -1;
        int w = from >> 6;
        uint64_t cur = words_[w] & (~0ull << (from & 63));
        while (true) {
            if (cur)
                return (w << 6) + std::countr_zero(cur);
            if (++w >= static_cast<int>(words_.size()))
                return -1;
            cur = words_[w];
        }
    }

    int min() const { return next(0); }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (int v = next(0); v >= 0; v = next(v + 1))
            out.push_back(v);
        return out;
    }

    struct iterator {
        const VertexSet* s;
        int v;
        int operator*() const { return v; }
        iterator& operator++()
        {
            v = s->next(v + 1);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, next(0)}; }
    iterator end() const { return {this, -1}; }

private:
    void check(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::out_of_range("VertexSet: vertex id out of range");
    }
    void same(const VertexSet& o) const
    {
        if (n_ != o.n_)
            throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim()
    {
        if (n_ & 63)
            words_.back() &= (1ull << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace chibound

#endif
