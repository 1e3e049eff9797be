#include "doctest.h"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "witt/classifier.hpp"

using namespace witt;

namespace {

Coefficient q(long n, long d = 1) { return Coefficient::rational(n, d); }
VectorField vf(LaurentPoly p) { return {std::move(p)}; }
VectorField mono(int e, long c = 1) { return vf(LaurentPoly{{e, q(c)}}); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::ParseError;
}

const MuSignature& mu22() {
    static const MuSignature mu = make_mu(2, 2, {1, 1}, {q(1), q(-1)});
    return mu;
}

}  // namespace

TEST_CASE("closure_check") {
    CHECK(code_of([] { closure_check({mono(1), mono(2)}); }) == Errc::NotClosed);
    const auto c = closure_check({mono(0), mono(3)});
    CHECK(c.alpha == q(0));
    CHECK(c.beta == q(3));
    const auto s = build_subalgebra(mu22());
    const auto cs = closure_check({vf(s.P), vf(s.Q)});
    CHECK(cs.alpha == q(0));
    CHECK(cs.beta == q(2));
    CHECK(code_of([] { closure_check({mono(2), mono(2, 5)}); }) == Errc::NotIndependent);
    CHECK(code_of([] { closure_check({mono(2), vf(LaurentPoly())}); }) == Errc::NotIndependent);
}

TEST_CASE("eigen_basis") {
    const auto e = eigen_basis({mono(0) + mono(3), mono(3)});
    CHECK(e.x == mono(0));
    CHECK(e.y == mono(3));
    CHECK(e.c == q(3));

    const auto s = build_subalgebra(mu22());
    const auto e2 = eigen_basis({vf(s.P), vf(s.Q)});
    CHECK(e2.y == vf(s.Q));
    CHECK(e2.c == c_mu(mu22()));

    const auto e3 = eigen_basis({vf(s.P) + q(5) * vf(s.Q), vf(s.Q)});
    CHECK(e3.x == vf(s.P));
    CHECK(e3.c == c_mu(mu22()));
}

TEST_CASE("classify examples") {
    const auto z = classify({mono(0), mono(-2)});
    REQUIRE(std::holds_alternative<Zm>(z));
    CHECK(std::get<Zm>(z).m == -2);

    const auto s = classify({vf({{2, q(1)}, {0, q(-1)}}), vf({{2, q(1)}, {0, q(-2)}, {-2, q(1)}})});
    REQUIRE(std::holds_alternative<Smu>(s));
    CHECK(descriptors_equal(s, build_subalgebra(canonicalize_mu(mu22()))));

    CHECK(code_of([] { classify({mono(1), mono(2)}); }) == Errc::NotClosed);
}

TEST_CASE("classify reports certificates") {
    const auto mu = make_mu(3, 2, {2, 1, -1}, {q(2), q(-1), q(3)});
    const auto s = build_subalgebra(mu);
    const auto c = classify_with_certificate({vf(s.P), vf(s.Q)});
    REQUIRE(c.certificate.recovered.has_value());
    CHECK(c.certificate.recovered->r == std::vector<int>{2, 1, -1});
    CHECK(c.certificate.eigenvalue == q(-12));
    CHECK(c.certificate.abs_r_bound);
    CHECK(std::get<Smu>(c.descriptor).mu.a.front().is_exact());
}

TEST_CASE("roundtrip_check examples") {
    CHECK(roundtrip_check(make_mu(1, 1, {2}, {q(1)}), BasisChange{{{q(1), q(0)}, {q(0), q(1)}}}));
    CHECK(roundtrip_check(mu22(), BasisChange{{{q(1), q(5)}, {q(0), q(1)}}}));
    CHECK(roundtrip_check(roots_of_unity_solution(3, 1), BasisChange{{{q(2), q(-1)}, {q(1), q(1)}}}));
}

TEST_CASE("exact input with irrational roots lands on the float backend") {
    // (2,2,1): a_1, a_2 = (-1 +- i sqrt 5)/4 are the roots of t^2 + t/2 + 3/8
    const LaurentPoly quad{{2, q(1)}, {1, q(1, 2)}, {0, q(3, 8)}};
    const LaurentPoly lin = LaurentPoly::linear(q(1));
    const VectorField p = vf(quad * lin);
    const VectorField qq = vf(shift(pow(quad, 3) * pow(lin, 2), -5));
    const auto c = classify_with_certificate({p, qq});
    REQUIRE(std::holds_alternative<Smu>(c.descriptor));
    const auto& mu = std::get<Smu>(c.descriptor).mu;
    CHECK(mu.r.r == std::vector<int>{2, 2, 1});
    CHECK(mu.backend() == Backend::Float);
    const auto expected = closed_form(RVector::make(3, 3, {2, 2, 1}));
    CHECK(descriptors_equal(c.descriptor, build_subalgebra(make_mu(expected.r, expected.solutions[0].a))));
}

TEST_CASE("omega maps s(mu) onto another member of the family") {
    const auto s = build_subalgebra(make_mu(3, 2, {2, 1, -1}, {q(2), q(-1), q(3)}));
    const auto w = classify({omega(vf(s.P)), omega(vf(s.Q))});
    REQUIRE(std::holds_alternative<Smu>(w));
    // n' = |r| = 2 after reflection
    CHECK(std::get<Smu>(w).mu.n() == 2);
}

TEST_CASE("loosely closed float input with the wrong shape is a structure violation") {
    const auto s = build_subalgebra(make_mu(3, 2, {2, 1, -1}, {q(2), q(-1), q(3)}));
    const VectorField p = vf(s.P.to_float());
    const VectorField bent = vf(s.Q.to_float() + LaurentPoly{{0, Coefficient(Complex(1e-5, 0.0))}});
    const Errc code = code_of([&] { classify({p, bent, 1e-4}); });
    CHECK((code == Errc::StructureViolation || code == Errc::ValidationFailed));
}

TEST_CASE("property: z(m) branch for 1 <= |m| <= 10") {
    for (int m = -10; m <= 10; ++m) {
        if (m == 0) continue;
        const auto d = classify({mono(0), mono(m)});
        REQUIRE(std::holds_alternative<Zm>(d));
        CHECK(std::get<Zm>(d).m == m);
        const auto d2 = classify({q(3) * mono(0) + q(-2) * mono(m), mono(0) + mono(m)});
        CHECK(descriptors_equal(d2, Zm{m}));
    }
}

TEST_CASE("property: basis invariance over the corpus") {
    const auto corpus = gen::build_corpus();
    REQUIRE(corpus.mus.size() >= 100);
    std::uint64_t seed = 100;
    for (const auto& mu : corpus.mus) {
        INFO("n = " << mu.n() << " k = " << mu.k());
        CHECK(roundtrip_check(mu, seed++));
    }
}

TEST_CASE("property: rejection soundness on random pairs") {
    std::mt19937_64 rng(31);
    int rejected = 0;
    for (int i = 0; i < 300; ++i) {
        const VectorField a = vf(gen::random_nonzero_exact(rng)), b = vf(gen::random_nonzero_exact(rng));
        const auto br = bracket(a, b);
        const int rank = oracle::span_rank({oracle::to_rmap(a.poly), oracle::to_rmap(b.poly), oracle::to_rmap(br.poly)});
        if (rank != 3) continue;
        CHECK(code_of([&] { classify({a, b}); }) == Errc::NotClosed);
        ++rejected;
    }
    CHECK(rejected > 200);
}
