#include <catch2/catch_amalgamated.hpp>

#include "eigencones/cones.hpp"
#include "eigencones/involution.hpp"
#include "eigencones/oracle.hpp"
#include "eigencones/system.hpp"

using namespace eigencones;

namespace {

LinearRelation make_rel(std::map<std::string, std::vector<int>> coeffs,
                        LinearRelation::Kind kind = LinearRelation::Kind::GE) {
    LinearRelation r;
    r.coeffs = std::move(coeffs);
    r.kind = kind;
    return r;
}

}  // namespace

TEST_CASE("canonicalization") {
    auto r = make_rel({{"x", {2, 0}}, {"y", {2, 0}}, {"z", {-2, 0}}});
    auto c = r.canonicalized();
    CHECK(c.coeffs.at("x") == std::vector<int>{1, 0});
    CHECK(c.coeffs.at("z") == std::vector<int>{-1, 0});
    CHECK(c.canonicalized().key() == c.key());

    auto eq = make_rel({{"x", {-1, -1}}, {"y", {1, 1}}}, LinearRelation::Kind::EQ);
    auto ceq = eq.canonicalized();
    CHECK(ceq.coeffs.at("x") == std::vector<int>{1, 1});
    CHECK(ceq.coeffs.at("y") == std::vector<int>{-1, -1});

    auto zero_block = make_rel({{"x", {1}}, {"y", {0}}}).canonicalized();
    CHECK(zero_block.coeffs.count("y") == 0);

    CHECK_THROWS_AS(make_rel({{"x", {0, 0}}}).canonicalized(), ZeroRelationError);
}

TEST_CASE("dedup on insertion") {
    InequalitySystem sys;
    sys.blocks = {{"x", 2, Chamber::Decreasing}};
    CHECK(sys.add_relation(make_rel({{"x", {1, -1}}})));
    CHECK_FALSE(sys.add_relation(make_rel({{"x", {2, -2}}})));
    CHECK(sys.relations.size() == 1);
    CHECK_THROWS_AS(sys.add_relation(make_rel({{"w", {1}}})), BlockMismatchError);
}

TEST_CASE("membership on the horn system for n = 2") {
    InequalitySystem sys = horn_system(2);
    RatPoint inside{{"x", {Rat(1), Rat(0)}}, {"y", {Rat(1), Rat(0)}}, {"z", {Rat(1), Rat(1)}}};
    CHECK(sys.member_exact(inside).member);
    CHECK(sys.member_exact_fast(inside, to_float_point(inside)));

    RatPoint bad_eq{{"x", {Rat(1), Rat(0)}}, {"y", {Rat(1), Rat(0)}}, {"z", {Rat(2), Rat(1)}}};
    auto res = sys.member_exact(bad_eq, true);
    CHECK_FALSE(res.member);
    REQUIRE(res.violations.size() == 1);
    CHECK(res.violations[0].relation->kind == LinearRelation::Kind::EQ);

    RatPoint bad_chamber{{"x", {Rat(0), Rat(1)}}, {"y", {Rat(1), Rat(0)}}, {"z", {Rat(1), Rat(1)}}};
    CHECK_FALSE(sys.member_exact(bad_chamber).member);
}

TEST_CASE("empty relation list accepts chamber points") {
    InequalitySystem sys;
    sys.blocks = {{"x", 2, Chamber::DecreasingNonneg}};
    CHECK(sys.member_exact({{"x", {Rat(2), Rat(1)}}}).member);
    CHECK_FALSE(sys.member_exact({{"x", {Rat(2), Rat(-1)}}}).member);
}

TEST_CASE("float and exact membership agree away from the boundary") {
    InequalitySystem sys = horn_system(2);
    RatSampler sampler(sys, 99);
    for (int t = 0; t < 300; ++t) {
        RatPoint pt = sampler.random_point();
        bool exact = sys.member_exact(pt).member;
        // Scaling a relation by a positive constant changes nothing.
        CHECK(sys.member_exact_fast(pt, to_float_point(pt)) == exact);
    }
}

TEST_CASE("json round trip") {
    for (const InequalitySystem& sys :
         {horn_system(2), lr_mn_system(2, 2), e1_system(3), sing_system(2, 2)}) {
        InequalitySystem back = InequalitySystem::from_json(sys.to_json());
        CHECK(back == sys);
        CHECK(back.cone.kind == sys.cone.kind);
        CHECK(back.cone.params == sys.cone.params);
    }
    InequalitySystem empty;
    empty.blocks = {{"x", 1, Chamber::Unconstrained}};
    Json j = empty.to_json();
    CHECK(j["relations"].is_array());
    CHECK(j["relations"].empty());
}

TEST_CASE("text rendering") {
    InequalitySystem sys = e1_system(3);
    std::string text = sys.to_text();
    CHECK(text.find("x1 + x2 + x3 = y1 + y2 + y3") != std::string::npos);
    auto rel = make_rel({{"x", {1, 0, 1}}, {"y", {0, -1, -1}}});
    CHECK(render_relation(rel, sys.blocks) == "x1 + x3 >= y2 + y3");
    auto doubled = make_rel({{"x", {1, 1, 0}}, {"y", {-2, 0, 0}}});
    CHECK(render_relation(doubled, sys.blocks) == "x1 + x2 >= 2y1");
}

TEST_CASE("semantic equality detects a dropped inequality") {
    InequalitySystem full = horn_system(2);
    InequalitySystem pruned;
    pruned.cone = full.cone;
    pruned.blocks = full.blocks;
    for (const auto& r : full.relations) {
        if (r.provenance.value("kind", "") == "horn-triple" &&
            r.provenance["I"] == Json::array({1}) && r.provenance["J"] == Json::array({2}))
            continue;  // drop x1 + y2 >= z2
        pruned.add_relation(r);
    }
    REQUIRE(pruned.relations.size() + 1 == full.relations.size());

    auto same = semantically_equal(full, full, 200, 5);
    CHECK(same.equal);
    auto diff = semantically_equal(full, pruned, 5000, 5);
    CHECK_FALSE(diff.equal);
    REQUIRE(diff.separating_point.has_value());
    CHECK_FALSE(full.member_exact(*diff.separating_point).member);
    CHECK(pruned.member_exact(*diff.separating_point).member);
}

TEST_CASE("appears modulo the trace equality") {
    InequalitySystem sys = e1_system(3);
    // The published form x3 <= y3 equals the generated x1+x2 >= y1+y2
    // rewritten with the trace identity.
    auto published = make_rel({{"x", {0, 0, -1}}, {"y", {0, 0, 1}}});
    CHECK(appears_modulo_eq(published, sys));
    auto direct = make_rel({{"x", {1, 0, 0}}, {"y", {-1, 0, 0}}});
    CHECK(appears_modulo_eq(direct, sys));
    auto bogus = make_rel({{"x", {1, 0, 0}}, {"y", {0, 0, -1}}});
    CHECK_FALSE(appears_modulo_eq(bogus, sys));
}

TEST_CASE("cone id naming") {
    CHECK(ConeId::kind_from_name("sing") == ConeId::Kind::Sing);
    CHECK(ConeId::variant_from_name("strict-one") == ConeId::Variant::StrictOne);
    CHECK_THROWS_AS(ConeId::kind_from_name("nope"), UnsupportedConeError);
    ConeId id{ConeId::Kind::Sing, {3, 2}, ConeId::Variant::StrictOne};
    CHECK(id.str() == "sing-3-2-strict-one");
}
