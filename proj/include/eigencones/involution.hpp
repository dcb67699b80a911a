#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "eigencones/cones.hpp"
#include "eigencones/lr.hpp"
#include "eigencones/system.hpp"

namespace eigencones {

/// The system for pairs (e(X), e(Re X)) of a Hermitian matrix and its real
/// part: |x| = |y| plus |x|_I >= |y|_J whenever c^{shape(J)} over
/// (shape(I), shape(I)) is nonzero (strict-one: equal to one), r < n.
inline InequalitySystem e1_system(int n, ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (n < 1) throw BadRangeError("e1_system needs n >= 1");
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::E1, {n}, variant};
    sys.blocks = {{"x", n, Chamber::Decreasing}, {"y", n, Chamber::Decreasing}};

    LinearRelation eq;
    eq.kind = LinearRelation::Kind::EQ;
    eq.coeffs["x"] = std::vector<int>(n, 1);
    eq.coeffs["y"] = std::vector<int>(n, -1);
    eq.provenance = {{"kind", "trace-equality"}};
    sys.add_relation(eq);

    for (int r = 1; r < n; ++r) {
        const auto subsets = all_subsets(r, n);
        for (const IndexSet& I : subsets) {
            const Partition shapeI = I.shape();
            for (const IndexSet& J : subsets) {
                long long c = lr_coefficient(J.shape(), shapeI, shapeI);
                if (c == 0) continue;
                if (variant == ConeId::Variant::StrictOne && c != 1) continue;
                LinearRelation rel;
                rel.coeffs["x"] = std::vector<int>(n, 0);
                rel.coeffs["y"] = std::vector<int>(n, 0);
                for (int i : I.elements()) rel.coeffs["x"][i - 1] = 1;
                for (int j : J.elements()) rel.coeffs["y"][j - 1] = -1;
                rel.provenance = {{"kind", "e1-pair"}, {"r", r},
                                  {"I", I.elements()}, {"J", J.elements()}, {"coeff", c}};
                sys.add_relation(rel);
            }
        }
    }
    return sys;
}

/// The system for (e(A), e(pi(A))) with A real symmetric of size 2n and
/// pi the projection onto complex Hermitian matrices: |x| = 2|y| plus
/// |x|_I >= 2|y|_J over I of cardinality 2r in [2n], J of cardinality r in
/// [n], r < n, with c^{shape(I)} over (shape(J), shape(J)) nonzero.
inline InequalitySystem e2_system(int n, ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (n < 1) throw BadRangeError("e2_system needs n >= 1");
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::E2, {n}, variant};
    sys.blocks = {{"x", 2 * n, Chamber::Decreasing}, {"y", n, Chamber::Decreasing}};

    LinearRelation eq;
    eq.kind = LinearRelation::Kind::EQ;
    eq.coeffs["x"] = std::vector<int>(2 * n, 1);
    eq.coeffs["y"] = std::vector<int>(n, -2);
    eq.provenance = {{"kind", "trace-equality"}};
    sys.add_relation(eq);

    for (int r = 1; r < n; ++r) {
        for (const IndexSet& I : all_subsets(2 * r, 2 * n)) {
            const Partition shapeI = I.shape();
            for (const IndexSet& J : all_subsets(r, n)) {
                const Partition shapeJ = J.shape();
                long long c = lr_coefficient(shapeI, shapeJ, shapeJ);
                if (c == 0) continue;
                if (variant == ConeId::Variant::StrictOne && c != 1) continue;
                LinearRelation rel;
                rel.coeffs["x"] = std::vector<int>(2 * n, 0);
                rel.coeffs["y"] = std::vector<int>(n, 0);
                for (int i : I.elements()) rel.coeffs["x"][i - 1] = 1;
                for (int j : J.elements()) rel.coeffs["y"][j - 1] = -2;
                rel.provenance = {{"kind", "e2-pair"}, {"r", r},
                                  {"I", I.elements()}, {"J", J.elements()}, {"coeff", c}};
                sys.add_relation(rel);
            }
        }
    }
    return sys;
}

/// Triple of index sets in [p+q], each avoiding its own opposite and the
/// middle range; decomposes into polarized parts over [q].
struct SingTriple {
    PolarizedSet I, J, L;  // ambient q each
    int p = 0;

    IndexSet embedded_I() const { return I.embed(p); }
    IndexSet embedded_J() const { return J.embed(p); }
    IndexSet embedded_L() const { return L.embed(p); }

    size_t plus_count() const {
        return I.plus().cardinality() + J.plus().cardinality() + L.plus().cardinality();
    }
    size_t minus_count() const {
        return I.minus().cardinality() + J.minus().cardinality() + L.minus().cardinality();
    }

    Json provenance() const {
        return {{"kind", "sing-triple"},
                {"r", I.cardinality()},
                {"I+", I.plus().elements()}, {"I-", I.minus().elements()},
                {"J+", J.plus().elements()}, {"J-", J.minus().elements()},
                {"L+", L.plus().elements()}, {"L-", L.minus().elements()}};
    }
};

/// A triple persists for all larger p exactly when the negative parts are
/// twice the positive parts in total.
inline bool is_regular(const SingTriple& t) {
    return t.minus_count() == 2 * t.plus_count();
}

namespace detail {

inline bool sing_conditions(const IndexSet& I, const IndexSet& J, const IndexSet& L,
                            ConeId::Variant variant) {
    long long c1 = lr_subset(I.opposite(), J.opposite(), L);
    if (c1 == 0) return false;
    if (variant == ConeId::Variant::StrictOne && c1 != 1) return false;
    if (variant == ConeId::Variant::Weak) return true;
    long long c2 = lr_coefficient(relative_position(L, L.oc()).shape(),
                                  relative_position(I.opposite(), I.complement()).shape(),
                                  relative_position(J.opposite(), J.complement()).shape());
    if (c2 == 0) return false;
    if (variant == ConeId::Variant::StrictOne && c2 != 1) return false;
    return true;
}

}  // namespace detail

/// All admitted triples for the cone of (s(A), s(B), s(A+B)) over complex
/// p x q matrices, at fixed common cardinality r.
inline std::vector<SingTriple> sing_triples(int r, int p, int q,
                                            ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (q < 1 || p < q || r < 1 || r > q)
        throw BadRangeError("sing_triples needs p >= q >= 1 and r in [q]");
    std::vector<SingTriple> out;
    const auto polarized = all_polarized(r, q);
    for (const PolarizedSet& I : polarized)
        for (const PolarizedSet& J : polarized)
            for (const PolarizedSet& L : polarized) {
                SingTriple t{I, J, L, p};
                if (!detail::sing_conditions(t.embedded_I(), t.embedded_J(),
                                             t.embedded_L(), variant))
                    continue;
                out.push_back(std::move(t));
            }
    return out;
}

namespace detail {

inline void add_signed_relation(InequalitySystem& sys, int q, const SingTriple& t) {
    // |x|_{I-} + |y|_{J-} + |z|_{L-}  >=  |x|_{I+} + |y|_{J+} + |z|_{L+}
    LinearRelation rel;
    rel.coeffs["x"] = std::vector<int>(q, 0);
    rel.coeffs["y"] = std::vector<int>(q, 0);
    rel.coeffs["z"] = std::vector<int>(q, 0);
    for (int i : t.I.minus().elements()) rel.coeffs["x"][i - 1] = 1;
    for (int i : t.I.plus().elements()) rel.coeffs["x"][i - 1] = -1;
    for (int j : t.J.minus().elements()) rel.coeffs["y"][j - 1] = 1;
    for (int j : t.J.plus().elements()) rel.coeffs["y"][j - 1] = -1;
    for (int l : t.L.minus().elements()) rel.coeffs["z"][l - 1] = 1;
    for (int l : t.L.plus().elements()) rel.coeffs["z"][l - 1] = -1;
    rel.provenance = t.provenance();
    sys.add_relation(rel);
}

}  // namespace detail

/// The system for (s(A), s(B), s(A+B)), A and B complex p x q.
inline InequalitySystem sing_system(int p, int q,
                                    ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (q < 1 || p < q) throw BadRangeError("sing_system needs p >= q >= 1");
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::Sing, {p, q}, variant};
    sys.blocks = {{"x", q, Chamber::DecreasingNonneg},
                  {"y", q, Chamber::DecreasingNonneg},
                  {"z", q, Chamber::DecreasingNonneg}};
    for (int r = 1; r <= q; ++r)
        for (const SingTriple& t : sing_triples(r, p, q, variant))
            detail::add_signed_relation(sys, q, t);
    sys.sort_relations();
    return sys;
}

/// True when every full-variant triple is regular; a sufficient proxy for
/// the p-stabilization of the cone at this (p, q).
inline bool sing_stabilizes(int p, int q) {
    for (int r = 1; r <= q; ++r)
        for (const SingTriple& t : sing_triples(r, p, q, ConeId::Variant::Nonzero))
            if (!is_regular(t)) return false;
    return true;
}

/// The odd orthogonal Horn cone: identical to the singular cone at
/// (q+1, q).
inline InequalitySystem so_odd_system(int q, ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (q < 1) throw BadRangeError("so_odd_system needs q >= 1");
    InequalitySystem sys = sing_system(q + 1, q, variant);
    sys.cone = {ConeId::Kind::SOodd, {q}, variant};
    return sys;
}

/// The system for (e(X), s(top-right p x q block of X)), X Hermitian of
/// size n = p+q. Variants: full conditions, the description over subsets
/// of [q] only (fflp), and the short description with only the degree and
/// LR condition (os-weak).
inline InequalitySystem a_system(int p, int q,
                                 ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (q < 1 || p < q) throw BadRangeError("a_system needs p >= q >= 1");
    const int n = p + q;
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::A, {p, q}, variant};
    sys.blocks = {{"x", n, Chamber::Decreasing}, {"y", q, Chamber::DecreasingNonneg}};

    auto add = [&](const IndexSet& I, const IndexSet& J, const IndexSet& L, long long c) {
        // |x|_I - |x|_{J^o} >= 2(|y|_{L cap [q]} - |y|_{L^o cap [q]})
        LinearRelation rel;
        rel.coeffs["x"] = std::vector<int>(n, 0);
        rel.coeffs["y"] = std::vector<int>(q, 0);
        const IndexSet Jo = J.opposite(), Lo = L.opposite();
        for (int i : I.elements()) rel.coeffs["x"][i - 1] += 1;
        for (int j : Jo.elements()) rel.coeffs["x"][j - 1] -= 1;
        for (int l : L.elements())
            if (l <= q) rel.coeffs["y"][l - 1] -= 2;
        for (int l : Lo.elements())
            if (l <= q) rel.coeffs["y"][l - 1] += 2;
        rel.provenance = {{"kind", "a-triple"}, {"r", I.cardinality()},
                          {"I", I.elements()}, {"J", J.elements()},
                          {"L", L.elements()}, {"coeff", c}};
        if (!rel.is_zero()) sys.add_relation(rel);
    };

    if (variant == ConeId::Variant::Fflp) {
        // Triples inside [q], viewed in [n]; r = q uses the trivial full
        // triple.
        for (int r = 1; r <= q; ++r) {
            const auto small = all_subsets(r, q);
            for (const IndexSet& Iq : small)
                for (const IndexSet& Jq : small)
                    for (const IndexSet& Lq : small) {
                        long long c = lr_subset(Iq, Jq, Lq);
                        if (c == 0) continue;
                        IndexSet I(Iq.elements(), n), J(Jq.elements(), n), L(Lq.elements(), n);
                        add(I, J, L, c);
                    }
        }
        return sys;
    }

    const bool osweak = variant == ConeId::Variant::OsWeak;
    const int rmax = osweak ? n / 2 : q;
    for (int r = 1; r <= rmax; ++r) {
        const auto subsets = all_subsets(r, n);
        for (const IndexSet& I : subsets) {
            for (const IndexSet& J : subsets) {
                if (!osweak && !I.disjoint_from(J.opposite())) continue;
                for (const IndexSet& L : subsets) {
                    if (!osweak) {
                        if (!L.disjoint_from(L.opposite())) continue;
                        bool middle = false;
                        for (int l : L.elements())
                            if (l > q && l <= p) { middle = true; break; }
                        if (middle) continue;
                    }
                    long long c = lr_subset(I, J, L);
                    if (c == 0) continue;
                    if (variant == ConeId::Variant::StrictOne && c != 1) continue;
                    if (!osweak) {
                        long long c2 = lr_coefficient(
                            relative_position(L, L.oc()).shape(),
                            relative_position(I, J.oc()).shape(),
                            relative_position(J, I.oc()).shape());
                        if (c2 == 0) continue;
                        if (variant == ConeId::Variant::StrictOne && c2 != 1) continue;
                    }
                    add(I, J, L, c);
                }
            }
        }
    }
    sys.sort_relations();
    return sys;
}

/// The system for (s(X), e((X + X*)/2)), X complex n x n: the Fan-Hoffman-
/// Thompson bounds plus signed inequalities over nested-compatible triples.
/// Variant weak drops the reduced-coefficient condition.
inline InequalitySystem b_system(int n, ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (n < 1) throw BadRangeError("b_system needs n >= 1");
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::B, {n}, variant};
    sys.blocks = {{"x", n, Chamber::DecreasingNonneg}, {"y", n, Chamber::Decreasing}};

    for (int k = 1; k <= n; ++k) {
        LinearRelation hi;  // x_k >= y_k
        hi.coeffs["x"] = std::vector<int>(n, 0);
        hi.coeffs["y"] = std::vector<int>(n, 0);
        hi.coeffs["x"][k - 1] = 1;
        hi.coeffs["y"][k - 1] = -1;
        hi.provenance = {{"kind", "bound"}, {"k", k}, {"side", "upper"}};
        sys.add_relation(hi);
        LinearRelation lo;  // y_k >= -x_{n+1-k}
        lo.coeffs["x"] = std::vector<int>(n, 0);
        lo.coeffs["y"] = std::vector<int>(n, 0);
        lo.coeffs["y"][k - 1] = 1;
        lo.coeffs["x"][n - k] = 1;
        lo.provenance = {{"kind", "bound"}, {"k", k}, {"side", "lower"}};
        sys.add_relation(lo);
    }

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int lcard = a + b;
            if (lcard == 0 || lcard > n) continue;
            for (const IndexSet& I : all_subsets(a, n)) {
                for (const IndexSet& J : all_subsets(b, n)) {
                    if (!I.disjoint_from(J.opposite())) continue;
                    for (const IndexSet& L : all_subsets(lcard, 2 * n)) {
                        if (!L.disjoint_from(L.opposite())) continue;
                        long long c = lr_subset(I, J, L);
                        if (c == 0) continue;
                        if (variant != ConeId::Variant::Weak && c != 1) continue;
                        if (variant != ConeId::Variant::Weak) {
                            long long c2 = lr_coefficient(
                                relative_position(L, L.oc()).shape(),
                                relative_position(I, J.oc()).shape(),
                                relative_position(J, I.oc()).shape());
                            if (c2 != 1) continue;
                        }
                        // |x|_{L cap [n]} - |x|_{L^o cap [n]} >= |y|_I - |y|_{J^o}
                        LinearRelation rel;
                        rel.coeffs["x"] = std::vector<int>(n, 0);
                        rel.coeffs["y"] = std::vector<int>(n, 0);
                        const IndexSet Jo = J.opposite(), Lo = L.opposite();
                        for (int l : L.elements())
                            if (l <= n) rel.coeffs["x"][l - 1] += 1;
                        for (int l : Lo.elements())
                            if (l <= n) rel.coeffs["x"][l - 1] -= 1;
                        for (int i : I.elements()) rel.coeffs["y"][i - 1] -= 1;
                        for (int j : Jo.elements()) rel.coeffs["y"][j - 1] += 1;
                        rel.provenance = {{"kind", "b-triple"},
                                          {"I", I.elements()}, {"J", J.elements()},
                                          {"L", L.elements()}, {"coeff", c}};
                        if (!rel.is_zero()) sys.add_relation(rel);
                    }
                }
            }
        }
    }
    sys.sort_relations();
    return sys;
}

/// Polarized triple indexing one signed inequality of the block
/// singular-value cones.
struct PolarizedTriple {
    PolarizedSet I, J, L;

    Json provenance(const char* kind) const {
        return {{"kind", kind},
                {"I+", I.plus().elements()}, {"I-", I.minus().elements()},
                {"J+", J.plus().elements()}, {"J-", J.minus().elements()},
                {"L+", L.plus().elements()}, {"L-", L.minus().elements()}};
    }
};

namespace detail {

/// (dagger): |z|_{L+} - |z|_{L-} >= |x|_{I+} - |x|_{I-} + |y|_{J+} - |y|_{J-}.
inline void add_dagger_relation(InequalitySystem& sys, int zdim, int xdim, int ydim,
                                const PolarizedTriple& t, const char* kind) {
    LinearRelation rel;
    rel.coeffs["z"] = std::vector<int>(zdim, 0);
    rel.coeffs["x"] = std::vector<int>(xdim, 0);
    rel.coeffs["y"] = std::vector<int>(ydim, 0);
    for (int l : t.L.plus().elements()) rel.coeffs["z"][l - 1] += 1;
    for (int l : t.L.minus().elements()) rel.coeffs["z"][l - 1] -= 1;
    for (int i : t.I.plus().elements()) rel.coeffs["x"][i - 1] -= 1;
    for (int i : t.I.minus().elements()) rel.coeffs["x"][i - 1] += 1;
    for (int j : t.J.plus().elements()) rel.coeffs["y"][j - 1] -= 1;
    for (int j : t.J.minus().elements()) rel.coeffs["y"][j - 1] += 1;
    rel.provenance = t.provenance(kind);
    if (!rel.is_zero()) sys.add_relation(rel);
}

inline bool dagger_conditions(const PolarizedSet& I, int ip, const PolarizedSet& J, int jp,
                              const PolarizedSet& L, int lp) {
    long long c1 = lr_coefficient(L.embed(lp).shape(), I.embed(ip).shape(),
                                  J.embed(jp).shape());
    if (c1 != 1) return false;
    long long c2 = lr_coefficient(L.reduced(lp).shape(), I.reduced(ip).shape(),
                                  J.reduced(jp).shape());
    return c2 == 1;
}

}  // namespace detail

/// The system for (s(X), s(X_12), s(X_21)) over n x n matrices written in
/// p, q blocks: base bounds z_k >= x_k, z_k >= y_k plus the signed
/// inequalities over polarized triples in [q], [q], [n].
inline InequalitySystem s_system(int p, int q,
                                 ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (q < 1 || p < q) throw BadRangeError("s_system needs p >= q >= 1");
    const int n = p + q;
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::S, {p, q}, variant};
    sys.blocks = {{"z", n, Chamber::DecreasingNonneg},
                  {"x", q, Chamber::DecreasingNonneg},
                  {"y", q, Chamber::DecreasingNonneg}};

    for (int k = 1; k <= q; ++k) {
        for (const char* blk : {"x", "y"}) {
            LinearRelation rel;  // z_k >= blk_k
            rel.coeffs["z"] = std::vector<int>(n, 0);
            rel.coeffs[blk] = std::vector<int>(q, 0);
            rel.coeffs["z"][k - 1] = 1;
            rel.coeffs[blk][k - 1] = -1;
            rel.provenance = {{"kind", "base"}, {"block", blk}, {"k", k}};
            sys.add_relation(rel);
        }
    }

    for (int r = 1; r <= q; ++r) {
        for (int s = 1; s <= q; ++s) {
            if (r + s > n) continue;
            const auto Is = all_polarized(r, q);
            const auto Js = all_polarized(s, q);
            const auto Ls = all_polarized(r + s, n);
            for (const PolarizedSet& I : Is)
                for (const PolarizedSet& J : Js)
                    for (const PolarizedSet& L : Ls) {
                        if (!detail::dagger_conditions(I, p, J, p, L, n)) continue;
                        detail::add_dagger_relation(sys, n, q, q, {I, J, L}, "s-triple");
                    }
        }
    }
    sys.sort_relations();
    return sys;
}

/// The system for (s(X), s(X_11), s(X_22)): base bounds z_k >= x_k,
/// z_j >= y_j, x_l >= z_{2q+l}, plus signed inequalities over polarized
/// triples in [p], [q], [n].
inline InequalitySystem t_system(int p, int q,
                                 ConeId::Variant variant = ConeId::Variant::Nonzero) {
    if (q < 1 || p < q) throw BadRangeError("t_system needs p >= q >= 1");
    const int n = p + q;
    InequalitySystem sys;
    sys.cone = {ConeId::Kind::T, {p, q}, variant};
    sys.blocks = {{"z", n, Chamber::DecreasingNonneg},
                  {"x", p, Chamber::DecreasingNonneg},
                  {"y", q, Chamber::DecreasingNonneg}};

    auto base = [&](const char* blk, int dim, int k, bool upper) {
        LinearRelation rel;
        rel.coeffs["z"] = std::vector<int>(n, 0);
        rel.coeffs[blk] = std::vector<int>(dim, 0);
        if (upper) {  // z_k >= blk_k
            rel.coeffs["z"][k - 1] = 1;
            rel.coeffs[blk][k - 1] = -1;
        } else {  // blk_k >= z_{2q+k}
            rel.coeffs[blk][k - 1] = 1;
            rel.coeffs["z"][2 * q + k - 1] = -1;
        }
        rel.provenance = {{"kind", "base"}, {"block", blk}, {"k", k},
                          {"side", upper ? "upper" : "lower"}};
        sys.add_relation(rel);
    };
    for (int k = 1; k <= p; ++k) base("x", p, k, true);
    for (int j = 1; j <= q; ++j) base("y", q, j, true);
    for (int l = 1; l <= p - q; ++l) base("x", p, l, false);

    for (int r = 1; r <= p; ++r) {
        for (int s = 1; s <= q; ++s) {
            if (r + s > n) continue;
            const auto Is = all_polarized(r, p);
            const auto Js = all_polarized(s, q);
            const auto Ls = all_polarized(r + s, n);
            for (const PolarizedSet& I : Is)
                for (const PolarizedSet& J : Js)
                    for (const PolarizedSet& L : Ls) {
                        if (!detail::dagger_conditions(I, p, J, q, L, n)) continue;
                        detail::add_dagger_relation(sys, n, p, q, {I, J, L}, "t-triple");
                    }
        }
    }
    sys.sort_relations();
    return sys;
}

/// Generator dispatch on a ConeId.
inline InequalitySystem generate_system(const ConeId& id) {
    switch (id.kind) {
        case ConeId::Kind::Horn: return horn_system(id.params.at(0), id.variant);
        case ConeId::Kind::LRmn: return lr_mn_system(id.params.at(0), id.params.at(1), id.variant);
        case ConeId::Kind::E1: return e1_system(id.params.at(0), id.variant);
        case ConeId::Kind::E2: return e2_system(id.params.at(0), id.variant);
        case ConeId::Kind::Sing: return sing_system(id.params.at(0), id.params.at(1), id.variant);
        case ConeId::Kind::SOodd: return so_odd_system(id.params.at(0), id.variant);
        case ConeId::Kind::A: return a_system(id.params.at(0), id.params.at(1), id.variant);
        case ConeId::Kind::B: return b_system(id.params.at(0), id.variant);
        case ConeId::Kind::S: return s_system(id.params.at(0), id.params.at(1), id.variant);
        case ConeId::Kind::T: return t_system(id.params.at(0), id.params.at(1), id.variant);
    }
    throw UnsupportedConeError("unhandled cone kind");
}

}  // namespace eigencones
