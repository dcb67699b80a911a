#pragma once

#include <string>
#include <vector>

#include "eigencones/lr.hpp"
#include "eigencones/system.hpp"

namespace eigencones {

/// Triple of r-subsets of [n] whose shapes have a nonzero LR coefficient;
/// one Horn inequality |x|_I + |y|_J >= |z|_L.
struct HornTriple {
    IndexSet I, J, L;
    long long coeff = 0;

    Json provenance() const {
        return {{"kind", "horn-triple"},
                {"r", I.cardinality()},
                {"I", I.elements()},
                {"J", J.elements()},
                {"L", L.elements()},
                {"coeff", coeff}};
    }
};

/// All (I, J, L) in P(r, n)^3 with c_{I,J}^L nonzero (variant strict-one:
/// equal to one), in lexicographic order on (I, J, L).
inline std::vector<HornTriple> horn_triples(int r, int n,
                                            ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (r < 1 || r >= n) throw BadRangeError("horn_triples needs 1 <= r < n");
    std::vector<HornTriple> out;
    const auto subsets = all_subsets(r, n);
    for (const IndexSet& I : subsets) {
        const long long wI = I.shape().weight();
        for (const IndexSet& J : subsets) {
            const long long wIJ = wI + J.shape().weight();
            for (const IndexSet& L : subsets) {
                if (L.shape().weight() != wIJ) continue;
                long long c = lr_subset(I, J, L);
                if (c == 0) continue;
                if (variant == ConeId::Variant::StrictOne && c != 1) continue;
                out.push_back({I, J, L, c});
            }
        }
    }
    return out;
}

/// The system describing triples (e(X), e(Y), e(X+Y)) of Hermitian
/// spectra: the trace equality plus one inequality per Horn triple,
/// r = 1, ..., n-1.
inline InequalitySystem horn_system(int n, ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (n < 1) throw BadRangeError("horn_system needs n >= 1");
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::Horn, {n}, variant};
    sys.blocks = {{"x", n, Chamber::Decreasing},
                  {"y", n, Chamber::Decreasing},
                  {"z", n, Chamber::Decreasing}};

    LinearRelation eq;
    eq.kind = LinearRelation::Kind::EQ;
    eq.coeffs["x"] = std::vector<int>(n, 1);
    eq.coeffs["y"] = std::vector<int>(n, 1);
    eq.coeffs["z"] = std::vector<int>(n, -1);
    eq.provenance = {{"kind", "trace-equality"}};
    sys.add_relation(eq);

    for (int r = 1; r < n; ++r) {
        for (const HornTriple& t : horn_triples(r, n, variant)) {
            LinearRelation rel;
            rel.coeffs["x"] = std::vector<int>(n, 0);
            rel.coeffs["y"] = std::vector<int>(n, 0);
            rel.coeffs["z"] = std::vector<int>(n, 0);
            for (int i : t.I.elements()) rel.coeffs["x"][i - 1] = 1;
            for (int j : t.J.elements()) rel.coeffs["y"][j - 1] = 1;
            for (int l : t.L.elements()) rel.coeffs["z"][l - 1] = -1;
            rel.provenance = t.provenance();
            sys.add_relation(rel);
        }
    }
    return sys;
}

inline bool horn_member(const std::vector<Rat>& x, const std::vector<Rat>& y,
                        const std::vector<Rat>& z,
                        ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (x.size() != y.size() || x.size() != z.size())
        throw DimensionMismatchError("horn_member needs equal dimensions");
    InequalitySystem sys = horn_system(static_cast<int>(x.size()), variant);
    return sys.member_exact({{"x", x}, {"y", y}, {"z", z}}).member;
}

/// The system describing (e(X), e(X_I), e(X_II)) for Hermitian X of size
/// m+n with diagonal blocks of sizes m and n: trace equality, the two
/// interlacing ladders, and |z|_L >= |x|_I + |y|_J over strict triples
/// with nonzero (variant strict-one: unit) LR coefficient.
inline InequalitySystem lr_mn_system(int m, int n,
                                     ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (m < 1 || n < 1) throw BadRangeError("lr_mn_system needs m, n >= 1");
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::LRmn, {m, n}, variant};
    sys.blocks = {{"z", m + n, Chamber::Decreasing},
                  {"x", m, Chamber::Decreasing},
                  {"y", n, Chamber::Decreasing}};

    LinearRelation eq;
    eq.kind = LinearRelation::Kind::EQ;
    eq.coeffs["z"] = std::vector<int>(m + n, 1);
    eq.coeffs["x"] = std::vector<int>(m, -1);
    eq.coeffs["y"] = std::vector<int>(n, -1);
    eq.provenance = {{"kind", "trace-equality"}};
    sys.add_relation(eq);

    auto interlace = [&](const std::string& block, int dim, int other, int k) {
        // z_k >= b_k and b_k >= z_{other+k}, 1-based k.
        LinearRelation hi;
        hi.coeffs["z"] = std::vector<int>(m + n, 0);
        hi.coeffs[block] = std::vector<int>(dim, 0);
        hi.coeffs["z"][k - 1] = 1;
        hi.coeffs[block][k - 1] = -1;
        hi.provenance = {{"kind", "interlace"}, {"block", block}, {"k", k}, {"side", "upper"}};
        sys.add_relation(hi);
        LinearRelation lo;
        lo.coeffs["z"] = std::vector<int>(m + n, 0);
        lo.coeffs[block] = std::vector<int>(dim, 0);
        lo.coeffs[block][k - 1] = 1;
        lo.coeffs["z"][other + k - 1] = -1;
        lo.provenance = {{"kind", "interlace"}, {"block", block}, {"k", k}, {"side", "lower"}};
        sys.add_relation(lo);
    };
    for (int k = 1; k <= m; ++k) interlace("x", m, n, k);
    for (int k = 1; k <= n; ++k) interlace("y", n, m, k);

    // Proper subsets only: a < m, b < n, at least one nonempty.
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a + b == 0) continue;
            for (const IndexSet& I : all_subsets(a, m)) {
                for (const IndexSet& J : all_subsets(b, n)) {
                    const long long w = I.shape().weight() + J.shape().weight();
                    for (const IndexSet& L : all_subsets(a + b, m + n)) {
                        if (L.shape().weight() != w) continue;
                        long long c = lr_subset(I, J, L);
                        if (c == 0) continue;
                        if (variant == ConeId::Variant::StrictOne && c != 1) continue;
                        LinearRelation rel;
                        rel.coeffs["z"] = std::vector<int>(m + n, 0);
                        rel.coeffs["x"] = std::vector<int>(m, 0);
                        rel.coeffs["y"] = std::vector<int>(n, 0);
                        for (int l : L.elements()) rel.coeffs["z"][l - 1] = 1;
                        for (int i : I.elements()) rel.coeffs["x"][i - 1] = -1;
                        for (int j : J.elements()) rel.coeffs["y"][j - 1] = -1;
                        rel.provenance = {{"kind", "lrmn-triple"},
                                          {"I", I.elements()},
                                          {"J", J.elements()},
                                          {"L", L.elements()},
                                          {"coeff", c}};
                        sys.add_relation(rel);
                    }
                }
            }
        }
    }
    return sys;
}

inline bool lr_mn_member(const std::vector<Rat>& z, const std::vector<Rat>& x,
                         const std::vector<Rat>& y,
                         ConeId::Variant variant = ConeId::Variant::Nonzero) {
    InequalitySystem sys = lr_mn_system(static_cast<int>(x.size()),
                                        static_cast<int>(y.size()), variant);
    if (z.size() != x.size() + y.size())
        throw DimensionMismatchError("lr_mn_member needs len(z) = len(x) + len(y)");
    return sys.member_exact({{"z", z}, {"x", x}, {"y", y}}).member;
}

}  // namespace eigencones
