#ifndef HETERORANK_VERTEX_SET_HPP
#define HETERORANK_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "heterorank/errors.hpp"
#include "heterorank/rng.hpp"

namespace hr {

// Subset of the vertex index space 0..n-1, stored as a bitmask. All set
// algebra the algorithms need is word-parallel.
class VertexSet {
public:
    VertexSet() : n_(0) {}

    explicit VertexSet(std::uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

    VertexSet(std::uint32_t n, std::initializer_list<std::uint32_t> vs) : VertexSet(n) {
        for (std::uint32_t v : vs) insert(v);
    }

    static VertexSet full(std::uint32_t n) {
        VertexSet s(n);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::uint32_t universe() const { return n_; }

    bool contains(std::uint32_t v) const {
        return v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(std::uint32_t v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(std::uint32_t v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::uint32_t count() const {
        std::uint64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return static_cast<std::uint32_t>(c);
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        std::size_t m = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < m; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t ow = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~ow) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

    std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::uint32_t v) { out.push_back(v); });
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(w));
                fn(static_cast<std::uint32_t>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    // First member, or n if empty.
    std::uint32_t first() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i]) {
                return static_cast<std::uint32_t>(i * 64 + std::countr_zero(words_[i]));
            }
        }
        return n_;
    }

    // Uniform random k-subset of this set (without replacement).
    VertexSet random_subset(std::uint32_t k, Rng& rng) const {
        std::vector<std::uint32_t> members = to_vector();
        VertexSet out(n_);
        if (k >= members.size()) {
            for (std::uint32_t v : members) out.insert(v);
            return out;
        }
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t j = i + rng.below(static_cast<std::uint32_t>(members.size() - i));
            std::swap(members[i], members[j]);
            out.insert(members[i]);
        }
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

private:
    void check(std::uint32_t v) const {
        if (v >= n_) throw InvalidVertexError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    }

    void trim() {
        if (n_ % 64 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
        }
    }

    std::uint32_t n_;
    std::vector<std::uint64_t> words_;
};

// Popcount of a & b without materializing the intersection.
inline std::uint32_t intersection_count(std::span<const std::uint64_t> a,
                                        std::span<const std::uint64_t> b) {
    std::size_t m = std::min(a.size(), b.size());
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < m; ++i) c += std::popcount(a[i] & b[i]);
    return static_cast<std::uint32_t>(c);
}

} // namespace hr

#endif
