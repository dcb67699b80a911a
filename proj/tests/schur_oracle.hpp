#pragma once

// Test-only brute-force route to LR coefficients, independent of the
// lattice-tableau kernel: expand Schur polynomials as sums over
// semistandard tableaux in r variables, multiply monomial-wise, and read
// the expansion off greedily against the unitriangular monomial basis.

#include <map>
#include <vector>

#include "eigencones/partition.hpp"

namespace schur_oracle {

using eigencones::Partition;
using Poly = std::map<std::vector<int>, long long>;  // exponent vector -> coeff

inline Poly schur_polynomial_uncached(const Partition& lambda, int vars) {
    Poly out;
    if (lambda.length() > static_cast<size_t>(vars)) return out;
    if (lambda.empty()) {
        out[std::vector<int>(vars, 0)] = 1;
        return out;
    }
    const int rows = static_cast<int>(lambda.length());
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(lambda.part(i), 0);
    std::vector<int> expo(vars, 0);
    auto rec = [&](auto&& self, int row, int col) -> void {
        if (row == rows) {
            ++out[expo];
            return;
        }
        int nrow = row, ncol = col + 1;
        if (ncol == lambda.part(row)) {
            ++nrow;
            ncol = 0;
        }
        const int lo = std::max(col > 0 ? fill[row][col - 1] : 1,
                                row > 0 && col < lambda.part(row - 1) ? fill[row - 1][col] + 1 : 1);
        for (int v = lo; v <= vars; ++v) {
            fill[row][col] = v;
            ++expo[v - 1];
            self(self, nrow, ncol);
            --expo[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline const Poly& schur_polynomial(const Partition& lambda, int vars) {
    static std::map<std::pair<Partition, int>, Poly> cache;
    auto key = std::make_pair(lambda, vars);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, schur_polynomial_uncached(lambda, vars)).first;
    return it->second;
}

inline Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

/// Expands a symmetric polynomial in the Schur basis by repeatedly
/// stripping the lexicographically largest monomial, whose exponent is
/// always a partition.
inline std::map<Partition, long long> schur_expand(Poly p, int vars) {
    std::map<Partition, long long> out;
    while (!p.empty()) {
        auto it = std::prev(p.end());
        while (it->second == 0) {
            p.erase(it);
            if (p.empty()) return out;
            it = std::prev(p.end());
        }
        Partition kappa(it->first);
        long long c = it->second;
        out[kappa] += c;
        for (const auto& [e, q] : schur_polynomial(kappa, vars))
            if ((p[e] -= c * q) == 0) p.erase(e);
    }
    return out;
}

/// c^lambda_{mu,nu} by polynomial multiplication in enough variables to
/// see lambda.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    if (mu.weight() + nu.weight() != lambda.weight()) return 0;
    int vars = static_cast<int>(std::max(
        lambda.length(), std::max(mu.length() + nu.length(), size_t{1})));
    Poly prod = multiply(schur_polynomial(mu, vars), schur_polynomial(nu, vars));
    auto expansion = schur_expand(std::move(prod), vars);
    auto it = expansion.find(lambda);
    return it == expansion.end() ? 0 : it->second;
}

/// The full product expansion over partitions, for box sweeps.
inline std::map<Partition, long long> schur_product(const Partition& mu,
                                                    const Partition& nu, int vars) {
    Poly prod = multiply(schur_polynomial(mu, vars), schur_polynomial(nu, vars));
    return schur_expand(std::move(prod), vars);
}

}  // namespace schur_oracle
