#include "doctest.h"

#include "qfwitt/error.hpp"
#include "qfwitt/ideals.hpp"

#include <cmath>
#include <random>

using namespace qf;

TEST_CASE("primes above small primes in Q(sqrt(-7))")
{
    const auto& K = quadratic_field(-7);
    auto two = primes_above(K, Int(2));
    REQUIRE(two.size() == 2);
    CHECK(two[0].residue_degree() == 1);
    CHECK(two[0] == parse_prime(K, "(2, (1+t)/2)"));
    CHECK(two[1] == parse_prime(K, "(2, (7+t)/2)"));
    auto three = primes_above(K, Int(3));
    REQUIRE(three.size() == 1);
    CHECK(three[0].is_inert());
    CHECK(three[0].norm() == 9);
    auto seven = primes_above(K, Int(7));
    REQUIRE(seven.size() == 1);
    CHECK(seven[0].ram_index() == 2);
    CHECK(ord_at(K.theta(), seven[0]) == 1);
    CHECK(seven[0] == parse_prime(K, "(t)"));
    CHECK_THROWS_AS(primes_above(K, Int(15)), Error);
}

TEST_CASE("valuations")
{
    const auto& K = quadratic_field(-7);
    auto d1 = primes_above(K, Int(2))[0];
    CHECK(ord_at(K.from_int(8), d1) == 3);
    CHECK(ord_at(parse_element(K, "1-t") * Rat(1, 16), d1) + ord_at(parse_element(K, "1-t") * Rat(1, 16), primes_above(K, Int(2))[1]) == -5);
    CHECK_THROWS_AS(ord_at(K.from_int(0), d1), Error);
    auto f = factor_principal(parse_element(K, "1-t"));
    int total = 0;
    for (auto& [P, e] : f.factors) {
        CHECK(P.under() == 2);
        total += e;
    }
    CHECK(total == 3);
    CHECK(factor_principal(K.one()).factors.empty());
    auto disc = parse_element(K, "-61056-342912*t");
    for (auto& P : odd_support(disc))
        CHECK((P.under() == 2 || P.under() == 3 || P.under() == 37 || P.under() == 7));
}

TEST_CASE("uniformizers and norm identity")
{
    std::mt19937_64 rng(11);
    for (long d : {1L, -7L, 2L, -5L, 5L, -1L, -3L, 17L}) {
        const auto& K = d == 1 ? rationals() : quadratic_field(d);
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L}) {
            auto ps = primes_above(K, Int(p));
            Int prod = 1;
            for (auto& P : ps) {
                CHECK(ord_at(P.uniformizer(), P) == 1);
                prod *= pow(P.norm(), static_cast<unsigned long>(P.ram_index()));
                CHECK(parse_prime(K, P.str()) == P);
            }
            CHECK(prod == pow(Int(p), static_cast<unsigned long>(K.degree())));
        }
        std::uniform_int_distribution<int> c(-40, 40);
        for (int i = 0; i < 40; ++i) {
            std::vector<Rat> v;
            for (int j = 0; j < K.degree(); ++j)
                v.push_back(Rat(c(rng), 1 + (i % 3)));
            for (auto& r : v)
                r.canonicalize();
            FieldElt x(K, v);
            if (x.is_zero())
                continue;
            Rat n = abs(x.norm()), acc = 1;
            for (auto& [P, e] : factor_principal(x).factors) {
                CHECK(ord_at(x, P) == e);
                if (e > 0)
                    acc *= Rat(pow(P.norm(), static_cast<unsigned long>(e)));
                else
                    acc /= Rat(pow(P.norm(), static_cast<unsigned long>(-e)));
            }
            CHECK(acc == n);
        }
    }
}

TEST_CASE("crt")
{
    const auto& K = quadratic_field(-7);
    auto three = primes_above(K, Int(3))[0];
    auto beta = crt({{three, 1, K.from_int(5)}});
    CHECK(ord_at(beta - K.from_int(5), three) >= 1);

    // 1406 meets the congruences of the worked example.
    auto disc = parse_element(K, "-61056-342912*t");
    auto x = K.from_int(1406);
    CHECK(ord_at(x - (disc - K.one()), three) >= 1);
    for (auto& P : primes_above(K, Int(2)))
        CHECK(ord_at(x, P) == 1);
    auto p37 = parse_prime(K, "(37, 20+t)");
    CHECK(ord_at(x, p37) == 1);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-30, 30);
    for (long d : {-7L, 2L, -5L, 1L}) {
        const auto& F = d == 1 ? rationals() : quadratic_field(d);
        std::vector<PrimeIdeal> S;
        PrimeCursor cur;
        for (int i = 0; i < 6; ++i)
            S.push_back(next_prime_outside(F, S, cur));
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<CrtTarget> data;
            for (auto& P : S) {
                std::vector<Int> w;
                for (int j = 0; j < F.degree(); ++j)
                    w.push_back(c(rng));
                data.push_back({P, 1 + rep % 3, F.from_omega(w)});
            }
            auto b = crt(data);
            for (auto& t : data) {
                auto diff = b - t.target;
                if (!diff.is_zero())
                    CHECK(ord_at(diff, t.prime) >= t.exponent);
            }
        }
        CHECK_THROWS_AS(crt({{S[0], 1, F.one()}, {S[0], 2, F.one()}}), Error);
    }
}

TEST_CASE("prime enumeration")
{
    const auto& K = quadratic_field(-7);
    PrimeCursor cur;
    CHECK(next_prime_outside(K, {}, cur) == primes_above(K, Int(2))[0]);
    auto small = primes_up_to(K, Int(8));
    PrimeCursor c2;
    CHECK(next_prime_outside(K, small, c2) == primes_above(K, Int(3))[0]);
    PrimeCursor c3;
    const auto& Q = rationals();
    auto P = next_prime_outside(Q, {primes_above(Q, Int(2))[0], primes_above(Q, Int(3))[0]}, c3);
    CHECK(P.under() == 5);
}

TEST_CASE("local ring matches residues")
{
    const auto& K = quadratic_field(-7);
    for (auto& P : primes_above(K, Int(2))) {
        LocalRing R(P, 4);
        CHECK(R.size() == 16);
        auto a = R.reduce(parse_element(K, "(3+t)/2"));
        auto b = R.reduce(parse_element(K, "5-t"));
        auto prod = R.reduce(parse_element(K, "(3+t)/2") * parse_element(K, "5-t"));
        CHECK(R.mul(a, b) == prod);
        CHECK(R.ord(R.reduce(K.from_int(2))) == 1);
        CHECK(R.ord(R.reduce(K.from_int(8))) == 3);
    }
    auto seven = primes_above(K, Int(7))[0];
    LocalRing R7(seven, 3);
    CHECK(R7.size() == 343);
    CHECK(R7.ord(R7.reduce(K.theta())) == 1);
    CHECK(R7.ord(R7.reduce(K.from_int(7))) == 2);
}

TEST_CASE("ideal lattices")
{
    const auto& K = quadratic_field(-5);
    auto P2 = primes_above(K, Int(2))[0];
    auto I = Ideal::of(P2);
    CHECK(I.norm() == 2);
    CHECK(I * I == Ideal::principal(K.from_int(2)));
    CHECK(I.conj() == I);
    auto P3 = primes_above(K, Int(3));
    REQUIRE(P3.size() == 2);
    CHECK(Ideal::of(P3[0]).conj() == Ideal::of(P3[1]));
    CHECK(Ideal::of(P3[0]) * Ideal::of(P3[1]) == Ideal::principal(K.from_int(3)));
}
