#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "eigencones/indexset.hpp"
#include "eigencones/partition.hpp"

namespace eigencones {

namespace detail {

/// Counts skew semistandard tableaux of shape lambda/mu and content nu whose
/// reverse reading word (rows top to bottom, each row right to left) is a
/// lattice word. Cells are filled in reading order so the lattice condition
/// can be checked incrementally.
inline long long count_lattice_fillings(const Partition& lambda, const Partition& mu,
                                        const Partition& nu) {
    if (!lambda.contains(mu)) return 0;
    const size_t rows = lambda.length();
    const size_t vals = nu.length();
    std::vector<int> remaining(vals);
    long long cells = 0;
    for (size_t v = 0; v < vals; ++v) remaining[v] = nu.part(v);
    for (size_t i = 0; i < rows; ++i) cells += lambda.part(i) - mu.part(i);
    if (cells != nu.weight()) return 0;
    if (cells == 0) return 1;

    // fill[i][j] holds the value at cell (i, j), 0-based rows and columns.
    std::vector<std::vector<int>> fill(rows);
    for (size_t i = 0; i < rows; ++i) fill[i].assign(lambda.part(i), 0);
    std::vector<int> placed(vals, 0);

    long long count = 0;
    auto rec = [&](auto&& self, size_t row, int col) -> void {
        while (row < rows && col < mu.part(row)) {
            ++row;
            col = row < rows ? lambda.part(row) - 1 : 0;
        }
        if (row == rows) {
            ++count;
            return;
        }
        const int above = (row > 0 && col < lambda.part(row - 1)) ? fill[row - 1][col] : 0;
        const int right = (col + 1 < lambda.part(row)) ? fill[row][col + 1] : static_cast<int>(vals);
        size_t nrow = row;
        int ncol = col - 1;
        if (ncol < mu.part(row)) {
            nrow = row + 1;
            ncol = nrow < rows ? lambda.part(nrow) - 1 : 0;
        }
        for (int v = above + 1; v <= right; ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v > 1 && placed[v - 1] >= placed[v - 2]) continue;
            --remaining[v - 1];
            ++placed[v - 1];
            fill[row][col] = v;
            self(self, nrow, ncol);
            ++remaining[v - 1];
            --placed[v - 1];
        }
        fill[row][col] = 0;
    };
    rec(rec, 0, lambda.part(0) - 1);
    return count;
}

}  // namespace detail

/// Memoizing cache for LR coefficients. Queries are canonicalized by
/// sorting the pair (mu, nu); safe for concurrent readers and writers.
class LrCache {
public:
    explicit LrCache(size_t cap = 0) : cap_(cap) {}

    long long coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& nu) {
        if (mu.weight() + nu.weight() != lambda.weight()) return 0;
        if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
        const Partition& a = mu <= nu ? mu : nu;
        const Partition& b = mu <= nu ? nu : mu;
        Key key{lambda, a, b};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        long long value = detail::count_lattice_fillings(lambda, a, b);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (cap_ == 0 || cache_.size() < cap_) cache_.emplace(key, value);
        }
        return value;
    }

    size_t size() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.size();
    }

    static LrCache& global() {
        static LrCache instance;
        return instance;
    }

private:
    using Key = std::tuple<Partition, Partition, Partition>;
    size_t cap_;
    mutable std::mutex mutex_;
    std::map<Key, long long> cache_;
};

/// The Littlewood-Richardson coefficient c^lambda_{mu,nu}: the number of
/// lattice skew tableaux of shape lambda/mu and content nu. Symmetric in
/// (mu, nu); zero unless |mu| + |nu| = |lambda| and both fit inside lambda.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    return LrCache::global().coefficient(lambda, mu, nu);
}

inline bool lr_nonzero(const Partition& lambda, const Partition& mu,
                       const Partition& nu) {
    if (mu.weight() + nu.weight() != lambda.weight()) return false;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return false;
    return lr_coefficient(lambda, mu, nu) > 0;
}

/// c_{I,J}^L for finite index sets: the LR coefficient of the associated
/// shapes, zero when the degrees do not match.
inline long long lr_subset(const IndexSet& I, const IndexSet& J, const IndexSet& L) {
    return lr_coefficient(L.shape(), I.shape(), J.shape());
}

}  // namespace eigencones
