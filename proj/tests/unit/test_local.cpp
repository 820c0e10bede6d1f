#include "doctest.h"

#include "support/oracles.hpp"
#include "qfwitt/local.hpp"

#include <random>

using namespace qf;

namespace {

FieldElt small_elt(const NumberField& K, std::mt19937_64& rng, int h)
{
    std::uniform_int_distribution<int> c(-h, h);
    for (;;) {
        std::vector<Int> w;
        for (int i = 0; i < K.degree(); ++i)
            w.push_back(c(rng));
        auto x = K.from_omega(w);
        if (!x.is_zero())
            return x;
    }
}

const NumberField& field_for(long d)
{
    return d == 1 ? rationals() : quadratic_field(d);
}

} // namespace

TEST_CASE("local squares")
{
    const auto& Q = rationals();
    auto P5 = primes_above(Q, Int(5))[0];
    auto P7 = primes_above(Q, Int(7))[0];
    auto P2 = primes_above(Q, Int(2))[0];
    CHECK(is_local_square(Q.from_int(9), P5));
    CHECK(is_local_square(Q.from_int(2), P7));
    CHECK_FALSE(is_local_square(Q.from_int(3), P7));
    CHECK(is_local_square(Q.from_int(17), P2));
    CHECK_FALSE(is_local_square(Q.from_int(5), P2));
    CHECK(SquareClassSpace::at(P2).dim() == 3);
    const auto& K = quadratic_field(-7);
    for (auto& P : primes_above(K, Int(2)))
        CHECK(SquareClassSpace::at(P).dim() == 3);
    const auto& F = quadratic_field(-5);
    CHECK(SquareClassSpace::at(primes_above(F, Int(2))[0]).dim() == 4);
    const auto& G = quadratic_field(5);
    CHECK(SquareClassSpace::at(primes_above(G, Int(2))[0]).dim() == 4);
}

TEST_CASE("hilbert symbol examples")
{
    const auto& Q = rationals();
    auto P2 = primes_above(Q, Int(2))[0];
    CHECK(hilbert(-Q.one(), -Q.one(), P2) == -1);
    CHECK(oracle::hilbert_symbol(-Q.one(), -Q.one(), P2) == -1);
    CHECK(hilbert(-Q.one(), -Q.one(), Place::real(0)) == -1);
    for (long d : {1L, -7L, 2L, -5L}) {
        const auto& K = field_for(d);
        for (long p : {3L, 5L, 7L, 11L}) {
            for (auto& P : primes_above(K, Int(p))) {
                const auto& S = SquareClassSpace::at(P);
                CHECK(hilbert(S.nonsquare_unit(), P.uniformizer(), P) == -1);
                CHECK(hilbert(K.one(), P.uniformizer(), P) == 1);
            }
        }
    }
}

TEST_CASE("hilbert symbols agree with the search oracle")
{
    std::mt19937_64 rng(17);
    for (long d : {1L, -7L, 2L, -5L, -1L, 3L, 5L}) {
        const auto& K = field_for(d);
        std::vector<PrimeIdeal> primes = primes_up_to(K, Int(9));
        for (const auto& P : primes)
            for (int i = 0; i < 12; ++i) {
                auto a = small_elt(K, rng, 12), b = small_elt(K, rng, 12);
                INFO(K.name(), " ", P.str(), " a=", a.str(), " b=", b.str());
                CHECK(hilbert(a, b, P) == oracle::hilbert_symbol(a, b, P));
            }
    }
}

TEST_CASE("symbol laws")
{
    std::mt19937_64 rng(23);
    for (long d : {1L, -7L, 2L, -5L}) {
        const auto& K = field_for(d);
        std::vector<Place> places = infinite_places(K);
        for (const auto& P : primes_up_to(K, Int(13)))
            places.push_back(Place::finite(P));
        for (int i = 0; i < 20; ++i) {
            auto a = small_elt(K, rng, 30), a2 = small_elt(K, rng, 30), b = small_elt(K, rng, 30);
            for (const auto& v : places) {
                CHECK(hilbert(a, b, v) == hilbert(b, a, v));
                CHECK(hilbert(a * a2, b, v) == hilbert(a, b, v) * hilbert(a2, b, v));
                CHECK(hilbert(a, -a, v) == 1);
                if (v.kind == Place::Kind::Finite)
                    CHECK(is_local_square(a * a, v.prime));
            }
        }
    }
}

TEST_CASE("hasse and local adim examples")
{
    const auto& Q = rationals();
    auto P2 = Place::finite(primes_above(Q, Int(2))[0]);
    auto one = Q.one();
    CHECK(hasse(DiagonalForm(Q, {one, one, one, one}), P2) == 1);
    CHECK(hasse(DiagonalForm(Q, {one, -one, one, -one}), P2) == -1);
    CHECK(local_adim(DiagonalForm(Q, {one, -one}), P2) == 0);
    CHECK(local_adim(DiagonalForm(Q, {one, one, one}), Place::real(0)) == 3);
    for (long d : {1L, -7L, 2L, -5L}) {
        const auto& K = field_for(d);
        for (auto& P : primes_up_to(K, Int(30))) {
            if (P.is_dyadic())
                continue;
            const auto& S = SquareClassSpace::at(P);
            auto u = S.nonsquare_unit(), pi = P.uniformizer();
            DiagonalForm q(K, {K.one(), -u, -pi, u * pi});
            CHECK(local_adim(q, Place::finite(P)) == 4);
        }
    }
}

TEST_CASE("local adim isotropy verdict agrees with the lifting oracle")
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> dim(1, 5);
    for (long d : {1L, -7L, 2L, -5L}) {
        const auto& K = field_for(d);
        for (const auto& P : primes_up_to(K, Int(9)))
            for (int i = 0; i < 8; ++i) {
                std::vector<FieldElt> c;
                int n = dim(rng);
                for (int j = 0; j < n; ++j)
                    c.push_back(small_elt(K, rng, 9));
                DiagonalForm q(K, c);
                INFO(K.name(), " ", P.str(), " ", q.str());
                bool iso = local_adim(q, Place::finite(P)) < n;
                CHECK(iso == oracle::locally_isotropic(q, P));
            }
    }
}
