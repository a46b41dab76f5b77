#ifndef CATLAB_MULTI_INDEX_HPP
#define CATLAB_MULTI_INDEX_HPP

#include "catlab/errors.hpp"
#include "catlab/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace catlab {

/// Multi-index alpha = (alpha_1..alpha_n) of non-negative integers. Exponent
/// record for monomials X^alpha; also used for leaf-type counts and offspring
/// vectors. Ordered lexicographically so it can key std::map deterministically.
struct MultiIndex {
    std::vector<unsigned> a;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : a(n, 0) {}
    MultiIndex(std::initializer_list<unsigned> init) : a(init) {}
    explicit MultiIndex(std::vector<unsigned> v) : a(std::move(v)) {}

    static MultiIndex unit(std::size_t n, std::size_t j) {
        MultiIndex m(n);
        m.a[j] = 1;
        return m;
    }

    std::size_t size() const { return a.size(); }
    unsigned operator[](std::size_t i) const { return a[i]; }
    unsigned& operator[](std::size_t i) { return a[i]; }

    /// |alpha| = sum of entries.
    unsigned long weight() const {
        return std::accumulate(a.begin(), a.end(), 0ul);
    }

    /// alpha! = prod alpha_i!
    Int fact() const {
        Int r = 1;
        for (unsigned e : a) r *= factorial(e);
        return r;
    }

    bool is_zero() const {
        for (unsigned e : a)
            if (e != 0) return false;
        return true;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }

    /// Componentwise subtraction; caller guarantees o <= *this.
    MultiIndex operator-(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
        return r;
    }

    bool leq(const MultiIndex& o) const {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > o.a[i]) return false;
        return true;
    }

    auto operator<=>(const MultiIndex& o) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        s += ")";
        return s;
    }
};

/// Visits every multi-index of length n with |alpha| == weight, in
/// lexicographically increasing order.
template <typename Fn>
void for_each_multi_index(std::size_t n, unsigned weight, Fn&& fn) {
    if (n == 0) {
        if (weight == 0) fn(MultiIndex(0));
        return;
    }
    MultiIndex m(n);
    auto rec = [&](auto&& self, std::size_t pos, unsigned rem) -> void {
        if (pos + 1 == n) {
            m.a[pos] = rem;
            fn(m);
            m.a[pos] = 0;
            return;
        }
        for (unsigned v = 0; v <= rem; ++v) {
            m.a[pos] = v;
            self(self, pos + 1, rem - v);
        }
        m.a[pos] = 0;
    };
    rec(rec, 0, weight);
}

/// Same, restricted to alpha <= bound componentwise.
template <typename Fn>
void for_each_multi_index_leq(std::size_t n, unsigned weight, const MultiIndex& bound, Fn&& fn) {
    if (n == 0) {
        if (weight == 0) fn(MultiIndex(0));
        return;
    }
    MultiIndex m(n);
    auto rec = [&](auto&& self, std::size_t pos, unsigned rem) -> void {
        if (pos + 1 == n) {
            if (rem <= bound.a[pos]) {
                m.a[pos] = rem;
                fn(m);
                m.a[pos] = 0;
            }
            return;
        }
        unsigned hi = std::min(rem, bound.a[pos]);
        for (unsigned v = 0; v <= hi; ++v) {
            m.a[pos] = v;
            self(self, pos + 1, rem - v);
        }
        m.a[pos] = 0;
    };
    rec(rec, 0, weight);
}

} // namespace catlab

#endif
