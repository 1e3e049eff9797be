#include "doctest.h"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "witt/witt_algebra.hpp"

using namespace witt;

namespace {

Coefficient q(long n, long d = 1) { return Coefficient::rational(n, d); }
VectorField vf(LaurentPoly p) { return {std::move(p)}; }

VectorField random_field(std::mt19937_64& rng) { return vf(gen::random_exact(rng)); }

}  // namespace

TEST_CASE("bracket examples") {
    CHECK(bracket(L(2), L(-1)) == q(3) * L(1));
    const auto x = vf({{3, q(2)}, {-1, q(1)}});
    CHECK(bracket(x, x).is_zero());
    const auto p = vf({{2, q(1)}, {0, q(-1)}});
    const auto qq = vf({{2, q(1)}, {0, q(-2)}, {-2, q(1)}});
    CHECK(bracket(p, qq) == q(2) * qq);
    // [D, t^3 D] = 3 t^3 D
    CHECK(bracket(vf({{0, q(1)}}), vf({{3, q(1)}})) == vf({{3, q(3)}}));
}

TEST_CASE("L-basis view") {
    const auto lb = to_L_basis(vf({{1, q(1)}, {0, q(-1)}}));
    REQUIRE(lb.size() == 2);
    CHECK(lb.at(1) == q(-1));
    CHECK(lb.at(0) == q(1));
    CHECK(to_L_basis(L(5)).at(5) == q(1));
    CHECK(to_L_basis(vf(LaurentPoly())).empty());
    const auto x = vf({{4, q(3, 2)}, {-2, q(-1)}});
    CHECK(from_L_basis(to_L_basis(x), Backend::Exact) == x);
}

TEST_CASE("omega") {
    CHECK(omega(vf({{3, q(1)}})) == vf({{-3, q(-1)}}));
    const auto x = vf({{2, q(1)}, {0, q(-1)}});
    CHECK(omega(x) == vf({{-2, q(-1)}, {0, q(1)}}));
    CHECK(omega(omega(x)) == x);
}

TEST_CASE("tau") {
    CHECK(tau(2, vf({{1, q(1)}})) == vf({{2, q(2)}}));
    const auto x = vf({{1, q(1)}, {0, q(-1)}});
    CHECK(tau(1, x) == x);
    CHECK(tau(2, x) == vf({{2, q(2)}, {0, q(-2)}}));
    try {
        (void)tau(0, x);
        FAIL("expected BadParameter");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadParameter);
    }
}

TEST_CASE("is_in_span") {
    const VectorField b1[] = {vf({{1, q(1)}}), vf({{2, q(1)}})};
    CHECK_FALSE(is_in_span(vf({{3, q(1)}}), b1).has_value());
    const VectorField b2[] = {vf({{1, q(1)}})};
    auto c2 = is_in_span(vf({{1, q(2)}}), b2);
    REQUIRE(c2.has_value());
    CHECK((*c2)[0] == q(2));
    const auto qq = vf({{2, q(1)}, {0, q(-2)}, {-2, q(1)}});
    const VectorField b3[] = {vf({{2, q(1)}, {0, q(-1)}}), qq};
    auto c3 = is_in_span(qq, b3);
    REQUIRE(c3.has_value());
    CHECK((*c3)[0] == q(0));
    CHECK((*c3)[1] == q(1));

    // float backend at the default tolerance
    const VectorField fb[] = {vf(LaurentPoly{{1, q(1)}}.to_float()), vf(LaurentPoly{{2, q(1)}}.to_float())};
    auto cf = is_in_span(vf(LaurentPoly{{1, q(3)}, {2, q(-1)}}.to_float()), fb);
    REQUIRE(cf.has_value());
    CHECK(std::abs((*cf)[0].to_complex() - Complex(3.0)) < 1e-12);
}

TEST_CASE("property: structure constants for |m|, |n| <= 10") {
    for (int m = -10; m <= 10; ++m) {
        for (int n = -10; n <= 10; ++n) CHECK(bracket(L(m), L(n)) == Coefficient(m - n) * L(m + n));
    }
}

TEST_CASE("property: bracket agrees with the structure-constant oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto x = random_field(rng), y = random_field(rng);
        CHECK(oracle::to_rmap(bracket(x, y).poly) ==
              oracle::bracket_by_structure_constants(oracle::to_rmap(x.poly), oracle::to_rmap(y.poly)));
    }
}

TEST_CASE("property: antisymmetry and Jacobi") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const auto x = random_field(rng), y = random_field(rng), z = random_field(rng);
        CHECK(bracket(x, y) == Coefficient(-1) * bracket(y, x));
        const auto j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        CHECK(j.is_zero());
    }
}

TEST_CASE("property: float Jacobi residual below 1e-10") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const VectorField x{gen::random_float(rng)}, y{gen::random_float(rng)}, z{gen::random_float(rng)};
        const auto j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        CHECK(max_norm(j.poly) <= 1e-10 * std::max(1.0, max_norm(bracket(x, bracket(y, z)).poly)));
    }
}

TEST_CASE("property: omega is a homomorphism, tau_s / s is one") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 300; ++i) {
        const auto x = random_field(rng), y = random_field(rng);
        CHECK(omega(bracket(x, y)) == bracket(omega(x), omega(y)));
        // [tau x, tau y] = s^2 tau [x, y]
        for (int s = 1; s <= 3; ++s)
            CHECK(Coefficient(s * s) * tau(s, bracket(x, y)) == bracket(tau(s, x), tau(s, y)));
    }
}

TEST_CASE("property: lowest degree of a bracket") {
    // deg2([x, y]) = deg2(x) + deg2(y) when the lowest terms do not cancel
    std::mt19937_64 rng(15);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const auto x = gen::random_nonzero_exact(rng), y = gen::random_nonzero_exact(rng);
        const auto dx = deg_bounds(x), dy = deg_bounds(y);
        if (dx.deg2 == dy.deg2) continue;
        const auto b = bracket(vf(x), vf(y));
        REQUIRE_FALSE(b.is_zero());
        CHECK(deg_bounds(b.poly).deg2 == dx.deg2 + dy.deg2);
        ++checked;
    }
    CHECK(checked > 100);
}
