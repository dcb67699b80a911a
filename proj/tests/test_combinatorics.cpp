#include <catch2/catch_amalgamated.hpp>

#include "eigencones/indexset.hpp"
#include "eigencones/partition.hpp"

using namespace eigencones;

TEST_CASE("partition normalization and equality") {
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK(Partition{}.empty());
    CHECK(Partition{2, 1}.weight() == 3);
    CHECK(Partition{2, 1}.part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), BadRangeError);
    CHECK_THROWS_AS(Partition({1, -1}), BadRangeError);
}

TEST_CASE("shape of an index set") {
    CHECK(IndexSet({1, 2, 3}, 5).shape() == Partition{});
    CHECK(IndexSet({2, 4}, 4).shape() == Partition{2, 1});
    CHECK(IndexSet({1, 3}, 3).shape() == Partition{1});
    CHECK(IndexSet({}, 4).shape() == Partition{});
}

TEST_CASE("opposite and complement") {
    CHECK(IndexSet({1}, 3).opposite() == IndexSet({3}, 3));
    CHECK(IndexSet({1, 2}, 4).opposite() == IndexSet({3, 4}, 4));
    CHECK(IndexSet({1, 2}, 4).complement() == IndexSet({3, 4}, 4));
    CHECK(IndexSet({2, 5}, 6).oc() == IndexSet({1, 3, 4, 6}, 6));

    for (int n = 1; n <= 6; ++n)
        for (int r = 0; r <= n; ++r)
            for (const IndexSet& I : all_subsets(r, n)) {
                CHECK(I.opposite().opposite() == I);
                CHECK(I.complement().complement() == I);
                CHECK(I.oc().oc() == I);
            }
}

TEST_CASE("shape weights under opposite and oc") {
    for (int n = 1; n <= 8; ++n)
        for (int r = 0; r <= n; ++r)
            for (const IndexSet& I : all_subsets(r, n)) {
                CHECK(I.shape().weight() + I.opposite().shape().weight() ==
                      static_cast<long long>(r) * (n - r));
                CHECK(I.shape().weight() == I.oc().shape().weight());
            }
}

TEST_CASE("relative position") {
    CHECK(relative_position(IndexSet({2, 5}, 6), IndexSet({1, 2, 4, 5}, 6)) ==
          IndexSet({2, 4}, 4));
    IndexSet a({1, 3, 4}, 5);
    CHECK(relative_position(a, a) == IndexSet({1, 2, 3}, 3));
    CHECK_THROWS_AS(relative_position(IndexSet({2}, 4), IndexSet({1, 3}, 4)),
                    NotNestedError);
}

TEST_CASE("relative position commutes with opposite") {
    // (A natural B)^o = A^o natural B^o, exhaustively for |B| <= 8.
    for (int n = 2; n <= 8; ++n)
        for (int rb = 1; rb <= n; ++rb)
            for (const IndexSet& B : all_subsets(rb, n))
                for (int ra = 0; ra <= rb; ++ra)
                    for (const IndexSet& Araw : all_subsets(ra, rb)) {
                        std::vector<int> elems;
                        for (int k : Araw.elements()) elems.push_back(B.elements()[k - 1]);
                        IndexSet A(elems, n);
                        CHECK(relative_position(A, B).opposite() ==
                              relative_position(A.opposite(), B.opposite()));
                    }
}

TEST_CASE("relative position is monotone in the inner set") {
    IndexSet B({1, 3, 4, 6, 7}, 8);
    IndexSet A({3, 6}, 8), A2({1, 3, 6, 7}, 8);
    CHECK(relative_position(A, B).is_subset_of(relative_position(A2, B)));
}

TEST_CASE("hat vectors") {
    using V = std::vector<Rat>;
    CHECK(hat(V{3, 1}, 3, 2) == V{3, 1, 0, -1, -3});
    CHECK(hat(V{0, 0}, 3, 2) == V{0, 0, 0, 0, 0});
    CHECK(hat(V{1}, 1, 1) == V{1, -1});
    CHECK(hat_sym(V{2, 1}) == V{2, 1, -1, -2});
    CHECK(hat_sym(V{1}) == V{1, -1});
    CHECK_THROWS_AS(hat(V{1, 2}, 1, 2), DimensionMismatchError);
    for (int n = 1; n <= 4; ++n) {
        V z;
        for (int i = n; i >= 1; --i) z.push_back(Rat(i, 2));
        CHECK(hat_sym(z) == hat(z, n, n));
    }
}

TEST_CASE("polarized embeddings") {
    CHECK(PolarizedSet({1}, {}, 2).embed(3) == IndexSet({1}, 5));
    CHECK(PolarizedSet({}, {1, 2}, 2).embed(2) == IndexSet({3, 4}, 4));
    CHECK(PolarizedSet({1}, {3}, 3).embed(3) == IndexSet({1, 4}, 6));
    CHECK_THROWS_AS(PolarizedSet({1}, {1}, 2), BadRangeError);
    CHECK_THROWS_AS(PolarizedSet({1}, {}, 3).embed(2), DimensionMismatchError);
}

TEST_CASE("reduced polarized embeddings") {
    CHECK(PolarizedSet({}, {1}, 1).reduced(1) == IndexSet({1}, 1));
    CHECK(PolarizedSet({1}, {}, 2).reduced(2) == IndexSet({1}, 3));

    // The embedded set avoids its opposite and the middle range.
    for (int q = 1; q <= 4; ++q)
        for (int p = q; p <= q + 3; ++p)
            for (int r = 1; r <= q; ++r)
                for (const PolarizedSet& X : all_polarized(r, q)) {
                    IndexSet e = X.embed(p);
                    CHECK(e.disjoint_from(e.opposite()));
                    for (int v : e.elements()) CHECK((v <= q || v > p));
                    CHECK(X.reduced(p).ambient() == p + q - r);
                }
}

TEST_CASE("weight drop of the reduced embedding") {
    // |shape(reduced)| = |shape(embed)| - (#minus)^2 - 2 #(minus < plus).
    for (int q = 1; q <= 4; ++q)
        for (int p = q; p <= q + 3; ++p)
            for (int r = 1; r <= q; ++r)
                for (const PolarizedSet& X : all_polarized(r, q)) {
                    long long lhs = X.reduced(p).shape().weight();
                    long long mm = static_cast<long long>(X.minus().cardinality());
                    long long rhs = X.embed(p).shape().weight() - mm * mm -
                                    2 * X.minus_before_plus();
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("embedding shape grows by an indicator step in p") {
    for (int q = 1; q <= 4; ++q)
        for (int p = q; p <= q + 3; ++p)
            for (int r = 1; r <= q; ++r)
                for (const PolarizedSet& X : all_polarized(r, q)) {
                    Partition lo = X.embed(p).shape();
                    Partition hi = X.embed(p + 1).shape();
                    size_t step = X.minus().cardinality();
                    for (size_t k = 0; k < static_cast<size_t>(r); ++k)
                        CHECK(hi.part(k) - lo.part(k) == (k < step ? 1 : 0));
                    Partition rlo = X.reduced(p).shape();
                    Partition rhi = X.reduced(p + 1).shape();
                    for (size_t k = 0; k < static_cast<size_t>(r); ++k)
                        CHECK(rhi.part(k) - rlo.part(k) == (k < step ? 1 : 0));
                }
}

TEST_CASE("spectrum vector chambers") {
    CHECK_THROWS_AS(SpectrumVector({Rat(1), Rat(2)}, Chamber::Decreasing), BadRangeError);
    CHECK_THROWS_AS(SpectrumVector({Rat(1), Rat(-1)}, Chamber::DecreasingNonneg), BadRangeError);
    SpectrumVector ok({Rat(2), Rat(1)}, Chamber::DecreasingNonneg);
    CHECK(ok.size() == 2);
    SpectrumVector h = hat(ok, 3, 2);
    CHECK(h.chamber == Chamber::Decreasing);
}
