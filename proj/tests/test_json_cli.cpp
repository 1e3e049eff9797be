#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/generators.hpp"
#include "witt/cli.hpp"
#include "witt/json_io.hpp"

using namespace witt;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(WITT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("coefficient json") {
    CHECK(to_json(Coefficient::rational(-3, 6)) == Json("-1/2"));
    CHECK(to_json(Coefficient(4)) == Json("4"));
    CHECK(coefficient_from_json(Json("5/10")) == Coefficient::rational(1, 2));
    CHECK(coefficient_from_json(Json(7)) == Coefficient(7));
    CHECK(coefficient_from_json(Json::array({1.5, -2.0})) == Coefficient(Complex(1.5, -2.0)));
    CHECK_THROWS_AS(coefficient_from_json(Json("1/0")), Error);
    CHECK_THROWS_AS(coefficient_from_json(Json::object()), Error);
}

TEST_CASE("parse errors") {
    try {
        (void)parse_json("{\"n\": ");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
    }
}

TEST_CASE("property: parse(emit(x)) == x on the corpus") {
    const auto corpus = gen::build_corpus();
    for (const auto& mu : corpus.mus) {
        const Json j = parse_json(to_json(mu).dump());
        const auto back = mu_from_json(j, 1e-8);
        CHECK(back.r.r == mu.r.r);
        CHECK(back.a == mu.a);
        const auto s = build_subalgebra(mu, 1e-7);
        const auto d = descriptor_from_json(parse_json(to_json(SubalgebraDescriptor{s}).dump()));
        CHECK(descriptors_equal(d, SubalgebraDescriptor{s}));
    }
    for (int i : {-3, -1, 1, 2, 5}) {
        const auto d = descriptor_from_json(to_json(SubalgebraDescriptor{Zm{i}}));
        CHECK(std::get<Zm>(d).m == i);
    }
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto p = i % 2 ? gen::random_exact(rng) : gen::random_float(rng);
        CHECK(poly_from_json(parse_json(to_json(p).dump())) == p);
        const VirasoroElement x(VectorField{p}, Coefficient::one(p.backend()));
        CHECK(virasoro_from_json(parse_json(to_json(x).dump())) == x);
    }
}

TEST_CASE("cli exit codes") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"catalog", "--bogus"}).code == kExitUsage);
    CHECK(run({"catalog", "--dim", "4"}).code == kExitOk);
    CHECK(run({"catalog", "--dim", "9"}).code == kExitValidation);
    CHECK(run({"classify", "--span", data("zm3.json")}).code == kExitOk);
    CHECK(run({"classify", "--span", data("s_roots_of_unity.json")}).code == kExitOk);
    CHECK(run({"classify", "--span", data("not_closed.json")}).code == kExitRejected);
    CHECK(run({"verify", "--span", data("not_closed.json")}).code == kExitRejected);
    CHECK(run({"classify", "--span", data("missing.json")}).code == kExitValidation);
    CHECK(run({"construct", "--mu", data("mu_2_2.json")}).code == kExitOk);
    CHECK(run({"construct", "--mu", R"({"n": 2, "k": 1, "r": [2, -1], "a": ["1", "-1"]})"}).code ==
          kExitValidation);
    CHECK(run({"solve-vr", "--r", "1,x"}).code != kExitOk);
    CHECK(run({"virasoro", "--m", "0"}).code == kExitValidation);
}

TEST_CASE("cli output") {
    const auto cat = run({"catalog", "--dim", "4"});
    const Json j = parse_json(cat.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 1);

    const auto vir = run({"virasoro", "--mu", data("mu_2_2.json")});
    REQUIRE(vir.code == kExitOk);
    CHECK(vir.out.find("1/4") != std::string::npos);

    const auto solved = parse_json(run({"solve-vr", "--r", "1,1"}).out);
    CHECK(solved.at("count") == 1);

    const auto table = run({"--format", "table", "classify", "--span", data("zm3.json")});
    CHECK(table.code == kExitOk);
    CHECK_FALSE(table.out.empty());
}

TEST_CASE("same seed, same bytes") {
    const std::vector<std::string> args{"solve-vr", "--r", "2,2,-1,-1", "--seed", "17", "--threads", "2"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
}

TEST_CASE("--out writes json") {
    const auto path = std::filesystem::temp_directory_path() / "wittsub_out_test.json";
    std::filesystem::remove(path);
    const auto r = run({"--out", path.string(), "construct", "--mu", data("mu_special.json")});
    REQUIRE(r.code == kExitOk);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const Json j = parse_json(ss.str());
    CHECK(j == parse_json(r.out));
    std::filesystem::remove(path);
}
