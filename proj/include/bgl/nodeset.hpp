#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bgl {

// A subset of {0..n-1}, where n is the size of the owning graph.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    NodeSet(std::size_t n, std::initializer_list<int> xs) : NodeSet(n) {
        for (int x : xs) insert(x);
    }

    static NodeSet full(std::size_t n) {
        NodeSet s(n);
        for (std::size_t i = 0; i < n; ++i) s.insert(static_cast<int>(i));
        return s;
    }

    std::size_t universe() const { return n_; }

    void insert(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void erase(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool contains(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    // Smallest member >= from, or -1.
    int next(int from = 0) const {
        if (from < 0) from = 0;
        std::size_t k = static_cast<std::size_t>(from) >> 6;
        if (k >= w_.size()) return -1;
        uint64_t cur = w_[k] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return static_cast<int>(k * 64 + __builtin_ctzll(cur));
            if (++k >= w_.size()) return -1;
            cur = w_[k];
        }
    }
    int first() const { return next(0); }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = first(); i >= 0; i = next(i + 1)) f(i);
    }

    NodeSet& operator&=(const NodeSet& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    NodeSet& operator|=(const NodeSet& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    NodeSet& operator-=(const NodeSet& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

    NodeSet complement() const {
        NodeSet r = full(n_);
        return r -= *this;
    }

    bool subset_of(const NodeSet& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const NodeSet& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool operator==(const NodeSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const NodeSet& o) const { return !(*this == o); }

    // Canonical order: lexicographic on the sorted member lists.
    bool operator<(const NodeSet& o) const {
        int i = first(), j = o.first();
        while (i >= 0 && j >= 0) {
            if (i != j) return i < j;
            i = next(i + 1);
            j = o.next(j + 1);
        }
        return i < 0 && j >= 0;
    }

    std::size_t hash() const {
        std::size_t h = n_;
        for (auto x : w_) h = h * 1000003u ^ static_cast<std::size_t>(x ^ (x >> 29));
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct NodeSetHash {
    std::size_t operator()(const NodeSet& s) const { return s.hash(); }
};

}  // namespace bgl
