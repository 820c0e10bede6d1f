#include "doctest.h"

#include "qfwitt/error.hpp"
#include "qfwitt/field.hpp"

#include <random>

using namespace qf;

namespace {

FieldElt random_elt(const NumberField& K, std::mt19937_64& rng, int h = 20)
{
    std::uniform_int_distribution<int> num(-h, h), den(1, 5);
    std::vector<Rat> c;
    for (int i = 0; i < K.degree(); ++i) {
        Rat r(num(rng), den(rng));
        r.canonicalize();
        c.push_back(r);
    }
    return FieldElt(K, c);
}

} // namespace

TEST_CASE("make_field")
{
    CHECK(make_field("Q").degree() == 1);
    CHECK(make_field("Q").num_real_places() == 1);
    const auto& K = make_field("Q(sqrt(-7))");
    CHECK(K.degree() == 2);
    CHECK(K.num_real_places() == 0);
    CHECK(K.omega() == parse_element(K, "(1+t)/2"));
    const auto& R = make_field("Q(sqrt(2))");
    CHECK(R.num_real_places() == 2);
    auto a = R.real_place(0).isolating_interval, b = R.real_place(1).isolating_interval;
    CHECK((a.hi <= b.lo || b.hi <= a.lo));
    CHECK(simplest_cubic().num_real_places() == 3);
    CHECK_THROWS_AS(make_field("Q(sqrt(12))"), Error);
    CHECK_THROWS_AS(make_field("Q(sqrt(1))"), Error);
    CHECK_THROWS_AS(make_field("Q(sqrt(0))"), Error);
}

TEST_CASE("arithmetic examples")
{
    const auto& K = quadratic_field(-7);
    CHECK(parse_element(K, "1-t") * parse_element(K, "1+t") == K.from_int(8));
    auto alpha = FieldElt(K, {Rat(-27, 2), Rat(-19, 2)});
    CHECK(parse_element(K, "(-27-19*t)/2") == alpha);
    CHECK(parse_element(K, alpha.str()) == alpha);
    const auto& R = quadratic_field(2);
    CHECK(R.one() / R.theta() == parse_element(R, "t/2"));
    CHECK_THROWS_AS(R.one() / FieldElt(R, {Rat(0), Rat(0)}), Error);
}

TEST_CASE("field axioms and round trip on random samples")
{
    std::mt19937_64 rng(7);
    for (long d : {1L, -7L, 2L, -5L}) {
        const auto& K = d == 1 ? rationals() : quadratic_field(d);
        for (int i = 0; i < 100; ++i) {
            auto x = random_elt(K, rng), y = random_elt(K, rng), z = random_elt(K, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!y.is_zero())
                CHECK((x / y) * y == x);
            CHECK(parse_element(K, x.str()) == x);
            if (!x.is_zero()) {
                auto sq = is_global_square(x * x);
                REQUIRE(sq.has_value());
                CHECK((*sq) * (*sq) == x * x);
            }
        }
    }
}

TEST_CASE("signs")
{
    const auto& R = quadratic_field(2);
    int pos_place = R.real_place(0).isolating_interval.lo > 0 ? 0 : 1;
    CHECK(sign_at(R.from_int(-3), 0) == -1);
    CHECK(sign_at(R.from_int(-3), 1) == -1);
    CHECK(sign_at(R.theta(), pos_place) == 1);
    CHECK(sign_at(R.one() - R.theta(), pos_place) == -1);
    CHECK_THROWS_AS(sign_at(R.from_int(0), 0), Error);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto x = random_elt(R, rng), y = random_elt(R, rng);
        if (x.is_zero() || y.is_zero())
            continue;
        for (int p = 0; p < 2; ++p)
            CHECK(sign_at(x * y, p) == sign_at(x, p) * sign_at(y, p));
    }
    const auto& C = simplest_cubic();
    auto t = C.theta();
    CHECK(sign_at(t * t * t - 3 * t, 0) == 1);
}

TEST_CASE("global squares")
{
    const auto& K = quadratic_field(-7);
    CHECK_FALSE(is_global_square(parse_element(K, "8+6*t")).has_value());
    auto r = is_global_square(parse_element(K, "2-6*t"));
    REQUIRE(r.has_value());
    CHECK((*r == parse_element(K, "-3+t") || *r == parse_element(K, "3-t")));
    CHECK(*is_global_square(rationals().from_int(4)) == rationals().from_int(2));
}

TEST_CASE("parse errors report a column")
{
    const auto& K = quadratic_field(-7);
    try {
        parse_element(K, "1+*t");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}
