#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/helpers.hpp"
#include "wiso/gromov_hausdorff.hpp"
#include "wiso/isometry.hpp"

using namespace wiso;
using namespace testsupport;

TEST_CASE("distortion") {
    const auto X = fig2_x();
    SUBCASE("identity correspondence has zero distortion") {
        Correspondence C{{{0, 0}, {1, 1}, {2, 2}}};
        CHECK(distortion(C, X, X) == 0.0);
    }
    SUBCASE("matching the 5-side of X to a 4-side of Y costs 1") {
        const auto Y = fig2_y();  // sides 3,4,4; side (x2,x3)=5 lands on (y2,y3)=4
        Correspondence C{{{0, 0}, {1, 1}, {2, 2}}};
        CHECK(distortion(C, X, Y) == 1.0);
    }
    SUBCASE("full correspondence between singletons") {
        const auto s1 = FiniteMetricSpace::validate({"a"}, std::vector<double>{0});
        const auto s2 = FiniteMetricSpace::validate({"b"}, std::vector<double>{0});
        Correspondence C{{{0, 0}}};
        CHECK(distortion(C, s1, s2) == 0.0);
    }
    SUBCASE("bad index") {
        Correspondence C{{{0, 7}}};
        CHECK_THROWS_AS((void)distortion(C, X, X), Error);
    }
}

TEST_CASE("gh_distance worked values") {
    SUBCASE("identical spaces") { CHECK(gh_distance(fig2_x(), fig2_x()).distance == 0.0); }
    SUBCASE("fig 2 X vs Y is 1/2") {
        CHECK(gh_distance(fig2_x(), fig2_y()).distance == 0.5);
    }
    SUBCASE("against a singleton: half the diameter") {
        const auto s = FiniteMetricSpace::validate({"y"}, std::vector<double>{0});
        CHECK(gh_distance(fig2_x(), s).distance == 2.5);
    }
    SUBCASE("returned correspondence achieves the reported distance") {
        const auto r = gh_distance(fig2_x(), fig2_y());
        CHECK(distortion(r.correspondence, fig2_x(), fig2_y()) == 2.0 * r.distance);
    }
    SUBCASE("cap") {
        const auto X = random_mixed_space(5, 1);
        CHECK_THROWS_AS((void)gh_distance(X, X, 4), Error);
    }
}

TEST_CASE("gh_distance equals exhaustive correspondence enumeration") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const int m = 2 + static_cast<int>((seed / 3) % 3);
        const auto X = random_mixed_space(n, seed * 101 + 7);
        const auto Y = random_mixed_space(m, seed * 211 + 13);
        CHECK(gh_distance(X, Y).distance == doctest::Approx(oracle_gh(X, Y)).epsilon(1e-12));
    }
}

TEST_CASE("isotonic_linf worked instances") {
    SUBCASE("split targets pool at the midpoint") {
        const auto r = isotonic_linf(IsotonicInstance::make({{3, {3}}, {4, {4, 5}}}));
        CHECK(r.error == 0.5);
        CHECK(r.values == std::vector<double>{3.0, 4.5});
    }
    SUBCASE("strictly increasing point targets fit exactly") {
        const auto r =
            isotonic_linf(IsotonicInstance::make({{1, {2}}, {2, {5}}, {3, {7}}}));
        CHECK(r.error == 0.0);
        CHECK(r.values == std::vector<double>{2, 5, 7});
    }
    SUBCASE("crossing targets force pooling") {
        const auto r = isotonic_linf(IsotonicInstance::make({{3, {5}}, {4, {3}}}));
        CHECK(r.error == 1.0);
        CHECK(r.values == std::vector<double>{4, 4});
    }
    SUBCASE("pinned zero group contributes its max target") {
        const auto r = isotonic_linf(IsotonicInstance::make({{0, {0.8}}, {2, {2}}}));
        CHECK(r.error == 0.8);
        CHECK(r.values[0] == 0.0);
        CHECK(r.values[1] == 2.0);
    }
    SUBCASE("invalid instances") {
        CHECK_THROWS_AS((void)IsotonicInstance::make({{2, {1}}, {1, {1}}}), Error);
        CHECK_THROWS_AS((void)IsotonicInstance::make({{1, {}}}), Error);
    }
}

TEST_CASE("isotonic_linf matches the epsilon-grid oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 6);
        std::vector<IsotonicInstance::Group> groups;
        double key = trial % 3 == 0 ? 0.0 : 0.5 + unit(rng);
        for (int g = 0; g < k; ++g) {
            IsotonicInstance::Group grp;
            grp.key = key;
            const int t = 1 + static_cast<int>(rng() % 4);
            for (int q = 0; q < t; ++q)
                grp.targets.push_back(std::round(unit(rng) * 8000.0) / 1000.0);
            groups.push_back(std::move(grp));
            key += 0.25 + unit(rng);
        }
        const auto inst = IsotonicInstance::make(std::move(groups));
        const auto r = isotonic_linf(inst);
        const double grid = oracle_isotonic_grid(inst, 1e-3);
        CHECK(std::abs(r.error - grid) <= 1e-3 + 1e-12);

        // returned values are feasible witnesses of the reported error
        double check = 0.0;
        std::size_t base = inst.pinned_zero ? 1 : 0;
        if (inst.pinned_zero)
            for (double t : inst.groups[0].targets) check = std::max(check, t);
        for (std::size_t g = base; g < inst.groups.size(); ++g) {
            if (g > base) CHECK(r.values[g] >= r.values[g - 1]);
            for (double t : inst.groups[g].targets)
                check = std::max(check, std::abs(r.values[g] - t));
        }
        CHECK(check == doctest::Approx(r.error).epsilon(1e-12));
    }
}

TEST_CASE("min_rescaled_gh worked values") {
    SUBCASE("rescaled copies reach zero in the matching direction") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const int n = 2 + static_cast<int>(seed % 4);
            const auto X = random_mixed_space(n, seed * 271 + 9);
            const auto psi = random_concave_rescaling(seed + 5, X.diameter());
            CHECK(min_rescaled_gh(X, apply_rescaling(X, psi)) == 0.0);
        }
    }
    SUBCASE("fig 2: rescaling X onto Y reaches zero only in the closure") {
        CHECK(min_rescaled_gh(fig2_x(), fig2_y()) == 0.0);
    }
    SUBCASE("fig 2: rescaling Y onto X leaves a gap of 1/4") {
        CHECK(min_rescaled_gh(fig2_y(), fig2_x()) == 0.25);
    }
}

TEST_CASE("dhat reproduces the fig 2 example") {
    const auto X = fig2_x(), Y = fig2_y(), Z = fig2_z();
    CHECK(dhat(X, Z) == 0.0);
    CHECK(dhat(X, Y) == 0.25);
    CHECK(dhat(Y, Z) == 0.5);
    // the triangle inequality fails strictly
    CHECK(dhat(Y, Z) > dhat(Y, X) + dhat(X, Z));
}

TEST_CASE("dhat is a dissimilarity") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const auto A = random_mixed_space(n, seed * 31 + 3);
        const auto B = random_mixed_space(n, seed * 67 + 5);
        const double ab = dhat(A, B);
        CHECK(ab >= 0.0);
        CHECK(dhat(B, A) == ab);
        CHECK(dhat(A, A) == 0.0);
    }
}

TEST_CASE("dhat agrees with the exhaustive oracle and characterizes weak isometry") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const auto A = random_mixed_space(n, seed * 131 + 3);
        const auto B = seed % 2 ? wi_partner(A, seed) : random_mixed_space(n, seed * 171 + 5);
        const double fast = dhat(A, B);
        const double slow = oracle_dhat(A, B);
        CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
        CHECK((fast <= 1e-9) == brute_force_weak_isometry(A, B));
    }
}
