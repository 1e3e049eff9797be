#include "doctest.h"

#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "witt/subalgebra.hpp"
#include "witt/witt_algebra.hpp"

using namespace witt;

namespace {

Coefficient q(long n, long d = 1) { return Coefficient::rational(n, d); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::ParseError;
}

const std::vector<int> r2211{2, 2, -1, -1};

}  // namespace

TEST_CASE("gamma_contains") {
    CHECK(gamma_contains(4, 2, r2211));
    CHECK_FALSE(gamma_contains(4, 2, std::vector<int>{1, 2, -1, -1}));
    CHECK(gamma_contains(1, 1, std::vector<int>{1}));
    CHECK_FALSE(gamma_contains(3, 2, std::vector<int>{2, -1, 2}));
    CHECK_FALSE(gamma_contains(2, 2, std::vector<int>{0, 2}));
    CHECK(code_of([] { RVector::make(3, 2, {1, 1, -1}); }) == Errc::NotInGamma);
}

TEST_CASE("vr_contains and vr_cross_contains") {
    const auto r4 = RVector::make(4, 2, r2211);
    const std::vector<Coefficient> boundary{q(1), q(0), q(1), q(1)};
    CHECK(vr_contains(r4, boundary));
    CHECK_FALSE(vr_cross_contains(r4, boundary));
    const auto r2 = RVector::make(2, 2, {1, 1});
    CHECK(vr_contains(r2, std::vector<Coefficient>{q(1), q(-1)}));
    CHECK_FALSE(vr_contains(r2, std::vector<Coefficient>{q(1), q(1)}));
    CHECK(vr_cross_contains(r2, std::vector<Coefficient>{q(1), q(-1)}));
    const auto r3 = RVector::make(3, 2, {2, 1, -1});
    CHECK(vr_cross_contains(r3, std::vector<Coefficient>{q(2), q(-1), q(3)}));
    CHECK(code_of([&] { vr_contains(r2, std::vector<Coefficient>{q(1), q(-1)}, 0.0); }) == Errc::BadTolerance);
}

TEST_CASE("check_product_condition") {
    const auto r2 = RVector::make(2, 2, {1, 1});
    CHECK(check_product_condition(r2, std::vector<Coefficient>{q(1), q(-1)}));
    CHECK_FALSE(check_product_condition(r2, std::vector<Coefficient>{q(1), q(1)}));
    const auto r3 = RVector::make(3, 2, {2, 1, -1});
    CHECK(check_product_condition(r3, std::vector<Coefficient>{q(2), q(-1), q(3)}));
    CHECK(code_of([&] { check_product_condition(r2, std::vector<Coefficient>{q(0), q(1)}); }) == Errc::RequiresNonzero);
}

TEST_CASE("make_mu") {
    const auto mu = make_mu(2, 2, {1, 1}, {q(1), q(-1)});
    CHECK(mu.n() == 2);
    CHECK(code_of([] { make_mu(4, 2, {2, 2, -1, -1}, {q(1), q(0), q(1), q(1)}); }) == Errc::NotInVCross);
    CHECK(code_of([] { make_mu(3, 2, {1, 1, -1}, {q(1), q(2), q(3)}); }) == Errc::NotInGamma);
    CHECK(code_of([] { make_mu(2, 2, {1, 1}, {q(1), q(1)}); }) == Errc::NotInVCross);
    // V(r)^x already forces distinct coordinates, so RepeatedCoordinate is a backstop
    CHECK(code_of([] { make_mu(1, 1, {1}, {q(0)}); }) == Errc::NotInVCross);
}

TEST_CASE("build_P, build_Q, c_mu") {
    const auto mu = make_mu(2, 2, {1, 1}, {q(1), q(-1)});
    CHECK(build_P(mu) == LaurentPoly{{2, q(1)}, {0, q(-1)}});
    CHECK(build_Q(mu) == LaurentPoly{{2, q(1)}, {0, q(-2)}, {-2, q(1)}});
    CHECK(c_mu(mu) == q(2));
    const auto mu1 = make_mu(1, 1, {1}, {q(1)});
    CHECK(build_P(mu1) == LaurentPoly{{1, q(1)}, {0, q(-1)}});
    CHECK(c_mu(mu1) == q(1));
    for (int r = 1; r <= 4; ++r) {
        const auto m = make_mu(1, 1, {r}, {q(3)});
        CHECK(c_mu(m) == q(3 * r));
    }
    const auto mu3 = make_mu(3, 2, {2, 1, -1}, {q(2), q(-1), q(3)});
    // (-1)^4 * 2 * (2 * -1 * 3)
    CHECK(c_mu(mu3) == q(-12));
}

TEST_CASE("build_subalgebra") {
    const auto s = build_subalgebra(make_mu(2, 2, {1, 1}, {q(1), q(-1)}));
    CHECK(s.bracket_residual == 0.0);
    const auto s1 = build_subalgebra(make_mu(1, 1, {1}, {q(1)}));
    CHECK(bracket(VectorField{s1.P}, VectorField{s1.Q}) == VectorField{s1.Q});
    CHECK_THROWS_AS(build_subalgebra(make_mu(2, 2, {1, 1}, {q(1), q(1)})), Error);
}

TEST_CASE("canonicalize_mu") {
    const auto mu = make_mu(2, 1, {2, -1}, {q(-1), q(-2)});
    const auto a = make_mu(2, 2, {1, 1}, {q(1), q(-1)});
    const auto ca = canonicalize_mu(a);
    CHECK(ca.a[0] == q(-1));
    CHECK(ca.a[1] == q(1));
    CHECK(canonicalize_mu(ca).a == ca.a);
    const auto b = make_mu(2, 2, {1, 1}, {q(-1), q(1)});
    CHECK(descriptors_equal(build_subalgebra(a), build_subalgebra(b)));
    CHECK(canonicalize_mu(mu).r.r == std::vector<int>{2, -1});
}

TEST_CASE("canonicalize sorts r descending across positive entries") {
    const auto mu = make_mu(3, 3, {1, 2, 2}, {Coefficient(Complex(1.0, 0.0)), Coefficient(Complex(-0.25, 0.5590169943749474)),
                                              Coefficient(Complex(-0.25, -0.5590169943749474))});
    const auto c = canonicalize_mu(mu);
    CHECK(c.r.r == std::vector<int>{2, 2, 1});
    CHECK(c.a[2].to_complex() == Complex(1.0, 0.0));
    CHECK(c.a[0].to_complex().imag() < 0);
}

TEST_CASE("descriptors_equal") {
    CHECK(descriptors_equal(Zm{3}, Zm{3}));
    CHECK_FALSE(descriptors_equal(Zm{3}, Zm{-3}));
    CHECK_FALSE(descriptors_equal(Zm{1}, build_subalgebra(make_mu(1, 1, {1}, {q(1)}))));
    CHECK_FALSE(descriptors_equal(build_subalgebra(make_mu(1, 1, {1}, {q(1)})),
                                  build_subalgebra(make_mu(1, 1, {1}, {q(2)}))));
}

TEST_CASE("property: membership equivalence on random points") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> nd(1, 4), entry(1, 3), num(-5, 5);
    int positives = 0;
    for (int i = 0; i < 300; ++i) {
        const int n = nd(rng);
        std::vector<int> r(static_cast<std::size_t>(n));
        for (auto& v : r) v = entry(rng);
        const auto rv = RVector::make(n, n, r);
        std::vector<Coefficient> a;
        for (int j = 0; j < n; ++j) {
            int v = 0;
            while (v == 0) v = num(rng);
            a.push_back(q(v));
        }
        bool distinct = true;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) distinct = distinct && !(a[x] == a[y]);
        if (!distinct) continue;
        const bool lhs = vr_contains(rv, a);
        positives += lhs;
        CHECK(lhs == check_product_condition(rv, a));
    }
    // n = 1 always lies in V(r) and n = 2 hits (r2, -r1) multiples sometimes
    CHECK(positives > 0);
}

TEST_CASE("property: the F(t) polynomial is the constant c_mu") {
    const auto corpus = gen::build_corpus();
    for (const auto& mu : corpus.mus) {
        if (mu.backend() != Backend::Exact) continue;
        const int abs_r = mu.r.abs_r;
        LaurentPoly f = scale(build_P(mu), Coefficient(-abs_r));
        for (int l = 0; l < mu.n(); ++l) {
            LaurentPoly term = LaurentPoly::monomial(Coefficient(mu.r.r[l]), 1);
            for (int j = 0; j < mu.n(); ++j) {
                if (j != l) term = term * LaurentPoly::linear(mu.a[j]);
            }
            f = f + term;
        }
        CHECK(f == LaurentPoly::constant(c_mu(mu)));
    }
}

TEST_CASE("property: degrees of Q and closure under scaling and s*r") {
    const auto corpus = gen::build_corpus();
    std::mt19937_64 rng(22);
    for (const auto& mu : corpus.mus) {
        const auto d = deg_bounds(build_Q(mu));
        CHECK(d.deg1 == mu.n());
        CHECK(d.deg2 == -mu.r.abs_r);
        CHECK(d.deg2 <= -mu.k());
        Coefficient c = gen::small_rational(rng);
        while (c.is_zero()) c = gen::small_rational(rng);
        std::vector<Coefficient> scaled;
        for (const auto& v : mu.a) scaled.push_back(v * c.to_backend(v.backend()));
        CHECK_NOTHROW(make_mu(mu.r, scaled));
        if (mu.n() == mu.k()) {
            for (int s = 2; s <= 3; ++s) {
                std::vector<int> sr;
                for (int v : mu.r.r) sr.push_back(s * v);
                CHECK_NOTHROW(make_mu(RVector::make(mu.n(), mu.k(), sr), mu.a));
            }
        }
    }
}
