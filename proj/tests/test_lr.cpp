#include <catch2/catch_amalgamated.hpp>

#include "eigencones/lr.hpp"
#include "schur_oracle.hpp"

using namespace eigencones;

TEST_CASE("lr coefficients on small shapes") {
    // Frozen values, each confirmed against the polynomial oracle below.
    CHECK(lr_coefficient(Partition{1, 1}, Partition{1}, Partition{1}) == 1);
    CHECK(schur_oracle::lr_coefficient(Partition{1, 1}, Partition{1}, Partition{1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(schur_oracle::lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{3}, Partition{1}, Partition{1}) == 0);
    CHECK(lr_coefficient(Partition{2, 1, 1}, Partition{1, 1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{1}, Partition{1}) == 0);
    // First shape with multiplicity two.
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(schur_oracle::lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
}

TEST_CASE("lr degree and containment guards") {
    CHECK(lr_coefficient(Partition{2}, Partition{2, 1}, Partition{}) == 0);
    CHECK(lr_nonzero(Partition{2, 1, 1}, Partition{1, 1}, Partition{1, 1}));
    CHECK_FALSE(lr_nonzero(Partition{4}, Partition{1, 1}, Partition{1, 1}));
}

TEST_CASE("lr symmetry in the lower pair") {
    auto box = partitions_in_box(3, 3);
    for (const Partition& mu : box)
        for (const Partition& nu : box) {
            if (mu.weight() + nu.weight() > 6) continue;
            for (const Partition& lambda : partitions_in_box(4, 4)) {
                if (lambda.weight() != mu.weight() + nu.weight()) continue;
                CHECK(detail::count_lattice_fillings(lambda, mu, nu) ==
                      detail::count_lattice_fillings(lambda, nu, mu));
            }
        }
}

TEST_CASE("lr subsets") {
    CHECK(lr_subset(IndexSet({1}, 4), IndexSet({1}, 4), IndexSet({1}, 4)) == 1);
    CHECK(lr_subset(IndexSet({2}, 3), IndexSet({2}, 3), IndexSet({3}, 3)) == 1);
    CHECK(schur_oracle::lr_coefficient(Partition{2}, Partition{1}, Partition{1}) == 1);
}

TEST_CASE("lr subset symmetry under oc, exhaustive to ambient 7") {
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r < n; ++r) {
            auto subsets = all_subsets(r, n);
            for (const IndexSet& I : subsets)
                for (const IndexSet& J : subsets)
                    for (const IndexSet& L : subsets) {
                        if (I.shape().weight() + J.shape().weight() != L.shape().weight())
                            continue;
                        CHECK(lr_subset(I, J, L) ==
                              lr_subset(I.oc(), J.oc(), L.oc()));
                    }
        }
}

TEST_CASE("pieri rule: column multiplication is a vertical strip indicator") {
    for (const Partition& mu : partitions_in_box(4, 4))
        for (int k = 1; k <= 4; ++k) {
            Partition column(std::vector<int>(k, 1));
            for (const Partition& lambda : partitions_in_box(4, 4)) {
                if (lambda.weight() != mu.weight() + k) continue;
                long long c = lr_coefficient(lambda, mu, column);
                long long expected = lambda.is_vertical_strip_over(mu) ? 1 : 0;
                CHECK(c == expected);
            }
        }
}

TEST_CASE("agreement with the polynomial oracle on the 4x4 box") {
    auto box = partitions_in_box(4, 4);
    for (const Partition& mu : box)
        for (const Partition& nu : box) {
            auto expansion = schur_oracle::schur_product(mu, nu, 4);
            for (const Partition& lambda : box) {
                if (lambda.weight() != mu.weight() + nu.weight()) continue;
                auto it = expansion.find(lambda);
                long long expected = it == expansion.end() ? 0 : it->second;
                REQUIRE(lr_coefficient(lambda, mu, nu) == expected);
            }
        }
}

TEST_CASE("saturation spot check on the 3x3 box") {
    auto box = partitions_in_box(3, 3);
    for (const Partition& mu : box)
        for (const Partition& nu : box)
            for (const Partition& lambda : partitions_in_box(3, 6)) {
                if (lambda.weight() != mu.weight() + nu.weight()) continue;
                CHECK(lr_nonzero(lambda, mu, nu) ==
                      lr_nonzero(lambda.scaled(2), mu.scaled(2), nu.scaled(2)));
            }
}

TEST_CASE("cache consistency") {
    LrCache cache;
    Partition lambda{3, 2, 1}, mu{2, 1}, nu{2, 1};
    long long first = cache.coefficient(lambda, mu, nu);
    CHECK(first == detail::count_lattice_fillings(lambda, mu, nu));
    CHECK(cache.coefficient(lambda, mu, nu) == first);
    CHECK(cache.size() >= 1);
}
