#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "eigencones/errors.hpp"
#include "eigencones/partition.hpp"
#include "eigencones/rational.hpp"

namespace eigencones {

/// Strictly increasing subset of [n] = {1, ..., n}, with the ambient n
/// recorded. Indexes Schubert classes of the Grassmannian of
/// |elements|-planes in C^n. All indices are 1-based.
class IndexSet {
public:
    IndexSet() = default;

    IndexSet(std::vector<int> elements, int ambient)
        : elems_(std::move(elements)), ambient_(ambient) {
        if (ambient_ < 0) throw BadRangeError("ambient must be non-negative");
        for (size_t i = 0; i < elems_.size(); ++i) {
            if (elems_[i] < 1 || elems_[i] > ambient_)
                throw BadRangeError("index set element out of [1, ambient]");
            if (i > 0 && elems_[i] <= elems_[i - 1])
                throw BadRangeError("index set must be strictly increasing");
        }
    }

    IndexSet(std::initializer_list<int> elements, int ambient)
        : IndexSet(std::vector<int>(elements), ambient) {}

    size_t cardinality() const { return elems_.size(); }
    int ambient() const { return ambient_; }
    const std::vector<int>& elements() const { return elems_; }
    bool empty() const { return elems_.empty(); }

    bool contains(int x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }

    bool is_subset_of(const IndexSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(),
                             elems_.begin(), elems_.end());
    }

    /// The partition (i_r - r >= ... >= i_1 - 1 >= 0). Independent of the
    /// ambient; empty set gives the empty partition.
    Partition shape() const {
        std::vector<int> p(elems_.size());
        size_t r = elems_.size();
        for (size_t k = 0; k < r; ++k) p[k] = elems_[r - 1 - k] - static_cast<int>(r - k);
        return Partition(std::move(p));
    }

    /// {n+1-i : i in I}; an involution on subsets of [n].
    IndexSet opposite() const {
        std::vector<int> out(elems_.size());
        for (size_t k = 0; k < elems_.size(); ++k)
            out[elems_.size() - 1 - k] = ambient_ + 1 - elems_[k];
        return IndexSet(std::move(out), ambient_);
    }

    /// [n] - I.
    IndexSet complement() const {
        std::vector<int> out;
        out.reserve(ambient_ - elems_.size());
        size_t k = 0;
        for (int x = 1; x <= ambient_; ++x) {
            if (k < elems_.size() && elems_[k] == x) { ++k; continue; }
            out.push_back(x);
        }
        return IndexSet(std::move(out), ambient_);
    }

    /// [n] - I^o; a bijection between r-subsets and (n-r)-subsets of [n].
    IndexSet oc() const { return opposite().complement(); }

    bool disjoint_from(const IndexSet& other) const {
        for (int x : elems_)
            if (other.contains(x)) return false;
        return true;
    }

    std::string str() const {
        std::string out = "{";
        for (size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(elems_[i]);
        }
        return out + "}<" + std::to_string(ambient_) + ">";
    }

    auto operator<=>(const IndexSet& other) const = default;

private:
    std::vector<int> elems_;
    int ambient_ = 0;
};

/// A natural B = { #{b in B : b <= a} : a in A }, the position counts of A
/// inside B. Requires A to be nested in B; the result lives in [|B|].
inline IndexSet relative_position(const IndexSet& inner, const IndexSet& outer) {
    if (!inner.is_subset_of(outer))
        throw NotNestedError("relative_position requires a nested pair");
    std::vector<int> out;
    out.reserve(inner.cardinality());
    size_t pos = 0;
    for (int a : inner.elements()) {
        while (pos < outer.cardinality() && outer.elements()[pos] <= a) ++pos;
        out.push_back(static_cast<int>(pos));
    }
    return IndexSet(std::move(out), static_cast<int>(outer.cardinality()));
}

/// All r-subsets of [n] in lexicographic order.
inline std::vector<IndexSet> all_subsets(int r, int n) {
    std::vector<IndexSet> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i + 1;
    while (true) {
        out.emplace_back(cur, n);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// Subset of [q] split into a positive and a negative part. Encodes one
/// signed singular-value inequality term.
class PolarizedSet {
public:
    PolarizedSet() = default;

    PolarizedSet(std::vector<int> plus, std::vector<int> minus, int ambient)
        : plus_(std::move(plus), ambient), minus_(std::move(minus), ambient) {
        if (!plus_.disjoint_from(minus_))
            throw BadRangeError("polarized parts must be disjoint");
    }

    PolarizedSet(IndexSet plus, IndexSet minus)
        : plus_(std::move(plus)), minus_(std::move(minus)) {
        if (plus_.ambient() != minus_.ambient())
            throw DimensionMismatchError("polarized parts need a common ambient");
        if (!plus_.disjoint_from(minus_))
            throw BadRangeError("polarized parts must be disjoint");
    }

    const IndexSet& plus() const { return plus_; }
    const IndexSet& minus() const { return minus_; }
    int ambient() const { return plus_.ambient(); }
    size_t cardinality() const { return plus_.cardinality() + minus_.cardinality(); }

    /// X_+ together with {p+q+1-x : x in X_-}, a subset of [p+q] avoiding
    /// its own opposite and the middle range {q+1, ..., p}. Needs p >= q.
    IndexSet embed(int p) const {
        int q = ambient();
        if (p < q) throw DimensionMismatchError("embed needs p >= ambient");
        std::vector<int> out = plus_.elements();
        for (int x : minus_.elements()) out.push_back(p + q + 1 - x);
        std::sort(out.begin(), out.end());
        return IndexSet(std::move(out), p + q);
    }

    /// The position set of the embedding inside the complement of its
    /// opposite; lives in [p+q-r] for cardinality r.
    IndexSet reduced(int p) const {
        IndexSet e = embed(p);
        return relative_position(e, e.oc());
    }

    /// #{(m, p) in minus x plus : m < p}.
    int minus_before_plus() const {
        int count = 0;
        for (int m : minus_.elements())
            for (int p : plus_.elements())
                if (m < p) ++count;
        return count;
    }

    std::string str() const {
        std::string out = "(+";
        for (int x : plus_.elements()) out += std::to_string(x) + " ";
        out += "| -";
        for (int x : minus_.elements()) out += std::to_string(x) + " ";
        return out + ")";
    }

    auto operator<=>(const PolarizedSet& other) const = default;

private:
    IndexSet plus_, minus_;
};

/// All polarized subsets of [q] of cardinality r, in a fixed deterministic
/// order (by support, then by the choice of positive part).
inline std::vector<PolarizedSet> all_polarized(int r, int q) {
    std::vector<PolarizedSet> out;
    for (const IndexSet& support : all_subsets(r, q)) {
        size_t n = support.cardinality();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> plus, minus;
            for (size_t i = 0; i < n; ++i)
                (mask >> i & 1 ? plus : minus).push_back(support.elements()[i]);
            out.emplace_back(IndexSet(plus, q), IndexSet(minus, q));
        }
    }
    return out;
}

enum class Chamber { Decreasing, DecreasingNonneg, Unconstrained };

inline std::string chamber_name(Chamber c) {
    switch (c) {
        case Chamber::Decreasing: return "decreasing";
        case Chamber::DecreasingNonneg: return "decreasing-nonneg";
        case Chamber::Unconstrained: return "unconstrained";
    }
    return "unconstrained";
}

inline Chamber chamber_from_name(const std::string& s) {
    if (s == "decreasing") return Chamber::Decreasing;
    if (s == "decreasing-nonneg") return Chamber::DecreasingNonneg;
    if (s == "unconstrained") return Chamber::Unconstrained;
    throw BadRangeError("unknown chamber '" + s + "'");
}

/// Finite sequence of exact rationals together with the chamber it is
/// asserted to lie in.
struct SpectrumVector {
    std::vector<Rat> entries;
    Chamber chamber = Chamber::Unconstrained;

    SpectrumVector() = default;
    SpectrumVector(std::vector<Rat> e, Chamber c) : entries(std::move(e)), chamber(c) {
        if (!satisfies_chamber())
            throw BadRangeError("entries violate the declared chamber");
    }

    size_t size() const { return entries.size(); }

    bool satisfies_chamber() const {
        if (chamber == Chamber::Unconstrained) return true;
        for (size_t i = 0; i + 1 < entries.size(); ++i)
            if (entries[i] < entries[i + 1]) return false;
        if (chamber == Chamber::DecreasingNonneg && !entries.empty() &&
            entries.back() < 0)
            return false;
        return true;
    }
};

/// (x_1, ..., x_q, 0, ..., 0, -x_q, ..., -x_1) in R^{p+q}; decreasing when
/// the input is decreasing with non-negative entries.
inline std::vector<Rat> hat(const std::vector<Rat>& x, int p, int q) {
    if (static_cast<int>(x.size()) != q)
        throw DimensionMismatchError("hat needs len(x) == q");
    if (p < q) throw DimensionMismatchError("hat needs q <= p");
    std::vector<Rat> out;
    out.reserve(p + q);
    for (const Rat& v : x) out.push_back(v);
    for (int i = 0; i < p - q; ++i) out.push_back(Rat(0));
    for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
    return out;
}

inline SpectrumVector hat(const SpectrumVector& x, int p, int q) {
    Chamber c = x.chamber == Chamber::DecreasingNonneg ? Chamber::Decreasing
                                                       : Chamber::Unconstrained;
    return SpectrumVector(hat(x.entries, p, q), c);
}

/// (z_1, ..., z_n, -z_n, ..., -z_1) in R^{2n}: the p = q = n case, no pad.
inline std::vector<Rat> hat_sym(const std::vector<Rat>& z) {
    return hat(z, static_cast<int>(z.size()), static_cast<int>(z.size()));
}

/// (-x_n, ..., -x_1): reversal composed with negation; preserves the
/// decreasing chamber.
inline std::vector<Rat> reverse_negate(const std::vector<Rat>& x) {
    std::vector<Rat> out;
    out.reserve(x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
    return out;
}

}  // namespace eigencones
