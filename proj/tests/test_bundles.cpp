#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <triscroll/bundles.hpp>

using namespace triscroll;

namespace {

RankTwoBundle random_bundle(const SurfaceModel& m, std::mt19937& rng) {
    std::uniform_int_distribution<Int> coeff(-8, 8);
    std::vector<Int> c(m.rank());
    for (auto& v : c)
        v = coeff(rng);
    return make_bundle(m, m.cls(c), coeff(rng));
}

DivisorClass random_class(const SurfaceModel& m, std::mt19937& rng) {
    std::uniform_int_distribution<Int> coeff(-8, 8);
    std::vector<Int> c(m.rank());
    for (auto& v : c)
        v = coeff(rng);
    return m.cls(c);
}

} // namespace

TEST_CASE("twisting shifts Chern data") {
    const auto p2 = projective_plane();
    const auto h = p2.cls({1});

    const auto a = twist(make_bundle(p2, p2.cls({-2}), 1), h);
    CHECK(a.c1 == p2.cls({0}));
    CHECK(a.c2 == 0);

    const auto b = twist(make_bundle(p2, p2.cls({2}), 4), h);
    CHECK(b.c1 == p2.cls({4}));
    CHECK(b.c2 == 7);

    const auto e = make_bundle(p2, p2.cls({3}), 5);
    const auto same = twist(e, p2.zero());
    CHECK(same.c1 == e.c1);
    CHECK(same.c2 == e.c2);

    CHECK_THROWS_AS(twist(e, quadric_surface().cls({1, 1})), BasisMismatchError);
}

TEST_CASE("twist composition and Bogomolov invariance") {
    std::mt19937 rng(20250811);
    const std::vector<SurfaceModel> models = {projective_plane(), quadric_surface(),
                                              hirzebruch(2)};
    for (int trial = 0; trial < 1200; ++trial) {
        const auto& m = models[trial % models.size()];
        const auto e = random_bundle(m, rng);
        const auto d1 = random_class(m, rng);
        const auto d2 = random_class(m, rng);

        const auto once = twist(e, d1 + d2);
        const auto twice = twist(twist(e, d1), d2);
        CHECK(once.c1 == twice.c1);
        CHECK(once.c2 == twice.c2);

        CHECK(bogomolov(twist(e, d1)).discriminant == bogomolov(e).discriminant);
    }
}

TEST_CASE("symmetric square twist: rank-3 first Chern class") {
    const auto p2 = projective_plane();

    // L = K + det E gives c1 = 3(K + 2 det E)
    const auto e = make_bundle(p2, p2.cls({2}), 1);
    const auto l = canonical_class(p2) + e.c1;
    CHECK(sym2_twisted_c1(e, l).c1 == 3 * (canonical_class(p2) + 2 * e.c1));
    CHECK(sym2_twisted_c1(e, l).c1 == p2.cls({3}));

    CHECK(sym2_twisted_c1(make_bundle(p2, p2.cls({0}), 0), p2.zero()).c1 == p2.zero());
    CHECK(sym2_twisted_c1(make_bundle(p2, p2.cls({2}), 0), p2.cls({-1})).c1 == p2.cls({3}));

    // the identity 3 c1 + 3 L holds for arbitrary data
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto eb = random_bundle(p2, rng);
        const auto lb = random_class(p2, rng);
        CHECK(sym2_twisted_c1(eb, lb).c1 == 3 * eb.c1 + 3 * lb);
    }
}

TEST_CASE("Bogomolov discriminant and verdicts") {
    const auto p2 = projective_plane();
    const auto q2 = quadric_surface();

    const auto candidate = bogomolov(make_bundle(p2, p2.cls({4}), 13));
    CHECK(candidate.discriminant == -36);
    CHECK(candidate.verdict == StabilityVerdict::StableSide);

    const auto obvious = bogomolov(make_bundle(p2, p2.cls({2}), 1));
    CHECK(obvious.discriminant == 0);
    CHECK(obvious.verdict == StabilityVerdict::ProperlySemistableBoundary);

    // (1,1)^2 = 2 on the quadric, so the discriminant is 2 - 4 = -2
    const auto diag = bogomolov(make_bundle(q2, q2.cls({1, 1}), 1));
    CHECK(diag.discriminant == -2);
    CHECK(diag.verdict == StabilityVerdict::StableSide);

    const auto unstable = bogomolov(make_bundle(p2, p2.cls({4}), 1));
    CHECK(unstable.discriminant == 12);
    CHECK(unstable.verdict == StabilityVerdict::UnstableSide);
}

TEST_CASE("ample splittings on P^1") {
    CHECK(ample_split_rank2_on_P1(2) == std::vector<std::pair<Int, Int>>{{1, 1}});
    CHECK(ample_split_rank2_on_P1(1).empty());

    // exhaustive oracle for degree 3
    std::vector<std::pair<Int, Int>> brute;
    for (Int a1 = 1; a1 <= 3; ++a1)
        for (Int a2 = 1; a2 <= a1; ++a2)
            if (a1 + a2 == 3)
                brute.emplace_back(a1, a2);
    CHECK(ample_split_rank2_on_P1(3) == brute);

    for (Int d = -5; d <= 40; ++d) {
        const auto splits = ample_split_rank2_on_P1(d);
        CHECK(splits.empty() == (d < 2));
        for (const auto& [a1, a2] : splits) {
            CHECK(a1 >= a2);
            CHECK(a2 >= 1);
            CHECK(a1 + a2 == d);
        }
    }
}

TEST_CASE("decomposable bundles carry consistent Chern data") {
    const auto p2 = projective_plane();
    const auto e = decomposable_bundle(p2, p2.cls({2}), p2.cls({1}));
    CHECK(e.c1 == p2.cls({3}));
    CHECK(e.c2 == 2);
    REQUIRE(e.summands.has_value());

    // c1^2 - c2 = M^2 + M.N + N^2 for every decomposable bundle
    std::mt19937 rng(13);
    const std::vector<SurfaceModel> models = {projective_plane(), quadric_surface(),
                                              hirzebruch(1)};
    for (int trial = 0; trial < 600; ++trial) {
        const auto& m = models[trial % models.size()];
        const auto ma = random_class(m, rng);
        const auto nb = random_class(m, rng);
        const auto bundle = decomposable_bundle(m, ma, nb);
        const Int lhs = intersect(m, bundle.c1, bundle.c1) - bundle.c2;
        const Int rhs = intersect(m, ma, ma) + intersect(m, ma, nb) + intersect(m, nb, nb);
        CHECK(lhs == rhs);
    }

    // twisting a decomposable bundle twists the summands
    const auto tw = twist(e, p2.cls({1}));
    REQUIRE(tw.summands.has_value());
    CHECK(tw.summands->first == p2.cls({3}));
    CHECK(tw.summands->second == p2.cls({2}));
    CHECK(tw.c1 == tw.summands->first + tw.summands->second);
    CHECK(tw.c2 == intersect(p2, tw.summands->first, tw.summands->second));
}

TEST_CASE("rank-2 quotients of the trivial rank-3 bundle") {
    const auto p2 = projective_plane();
    const auto q2 = quadric_surface();

    // Whitney oracle: (1 + l)(1 + c1 + c2) = 1 term by term
    auto whitney_ok = [](const SurfaceModel& m, const DivisorClass& l, const RankTwoBundle& e) {
        const bool degree1 = (l + e.c1).is_zero();
        const bool degree2 = e.c2 + intersect(m, l, e.c1) == 0;
        return degree1 && degree2;
    };

    const auto e1 = quotient_of_trivial(p2, p2.cls({-2}));
    CHECK(e1.c1 == p2.cls({2}));
    CHECK(e1.c2 == 4);
    CHECK(whitney_ok(p2, p2.cls({-2}), e1));

    const auto e2 = quotient_of_trivial(q2, q2.cls({-1, -1}));
    CHECK(e2.c1 == q2.cls({1, 1}));
    CHECK(e2.c2 == 2);
    CHECK(whitney_ok(q2, q2.cls({-1, -1}), e2));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto l = random_class(q2, rng);
        CHECK(whitney_ok(q2, l, quotient_of_trivial(q2, l)));
    }
}
