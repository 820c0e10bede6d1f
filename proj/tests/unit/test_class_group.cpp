#include "doctest.h"

#include "support/oracles.hpp"
#include "qfwitt/class_group.hpp"
#include "qfwitt/error.hpp"
#include "qfwitt/f2.hpp"
#include "qfwitt/local.hpp"

#include <random>

using namespace qf;

TEST_CASE("smith normal form")
{
    IntMatrix A{{Int(2), Int(4), Int(4)}, {Int(-6), Int(6), Int(12)}, {Int(10), Int(-4), Int(-16)}};
    auto s = smith_normal_form(A, 3);
    CHECK(s.diagonal == std::vector<Int>{Int(2), Int(6), Int(12)});
    auto D = multiply(multiply(s.U, A), s.V);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(D[i][j] == (i == j ? s.diagonal[i] : Int(0)));
    CHECK(multiply(s.V, s.Vinv) == identity_matrix(3));
    auto ker = kernel_lattice({{Int(1)}, {Int(2)}}, {Int(4)});
    REQUIRE(ker.size() == 2);
    for (auto& row : ker)
        CHECK(mod(row[0] + 2 * row[1], Int(4)) == 0);
}

TEST_CASE("class numbers match reduced-form counts")
{
    CHECK(ClassGroup::of(rationals()).order() == 1);
    for (long d : {-1L, -2L, -3L, -5L, -6L, -7L, -14L, -15L, -17L, -21L, -23L, -26L, -30L, -47L, -65L, -71L}) {
        const auto& K = quadratic_field(d);
        long D = K.disc().get_si();
        INFO(K.name());
        CHECK(ClassGroup::of(K).order() == oracle::class_number_imaginary(D));
    }
    CHECK(ClassGroup::of(quadratic_field(-5)).order() == 2);
    CHECK(ClassGroup::of(quadratic_field(-7)).order() == 1);
    // Real fields with known class numbers.
    CHECK(ClassGroup::of(quadratic_field(2)).order() == 1);
    CHECK(ClassGroup::of(quadratic_field(10)).order() == 2);
    CHECK(ClassGroup::of(quadratic_field(15)).order() == 2);
    CHECK(ClassGroup::of(quadratic_field(79)).order() == 3);
    CHECK(ClassGroup::of(quadratic_field(30)).order() == 2);
    CHECK(ClassGroup::of(quadratic_field(-30)).invariants() == std::vector<Int>{Int(2), Int(2)});
}

TEST_CASE("s-class groups")
{
    const auto& K = quadratic_field(-5);
    auto d2 = primes_above(K, Int(2))[0];
    CHECK(s_class_group(K, {d2}).order() == 1);
    auto p5 = primes_above(K, Int(5))[0];
    CHECK(s_class_group(K, {p5}).order() == 2);
}

TEST_CASE("principal ideals")
{
    const auto& K = quadratic_field(-7);
    auto five = is_principal(Ideal::principal(K.from_int(5)));
    REQUIRE(five.has_value());
    CHECK(abs(five->norm()) == 25);
    auto d1 = primes_above(K, Int(2))[0];
    auto I = Ideal::of(d1) * Ideal::of(d1);
    auto g = is_principal(I);
    REQUIRE(g.has_value());
    CHECK(Ideal::principal(*g) == I);
    auto f = factor_principal(*g);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == d1);
    CHECK(f.factors[0].second == 2);
    const auto& F = quadratic_field(-5);
    CHECK_FALSE(is_principal(Ideal::of(primes_above(F, Int(2))[0])).has_value());
    const auto& R = quadratic_field(10);
    CHECK_FALSE(is_principal(Ideal::of(primes_above(R, Int(2))[0])).has_value());
    CHECK(is_principal(Ideal::of(primes_above(R, Int(3))[0]) * Ideal::of(primes_above(R, Int(2))[0])).has_value());
}

TEST_CASE("fundamental units")
{
    CHECK(fundamental_unit(quadratic_field(2)) == parse_element(quadratic_field(2), "1+t"));
    CHECK(fundamental_unit(quadratic_field(3)) == parse_element(quadratic_field(3), "2+t"));
    CHECK(fundamental_unit(quadratic_field(5)) == parse_element(quadratic_field(5), "(1+t)/2"));
    CHECK(fundamental_unit(quadratic_field(7)) == parse_element(quadratic_field(7), "8+3*t"));
    CHECK(fundamental_unit(quadratic_field(13)) == parse_element(quadratic_field(13), "(3+t)/2"));
    CHECK(fundamental_unit(quadratic_field(94)) == parse_element(quadratic_field(94), "2143295+221064*t"));
}

TEST_CASE("s-units modulo squares")
{
    const auto& Q = rationals();
    auto u = s_units_mod_squares(Q, {primes_above(Q, Int(2))[0], primes_above(Q, Int(3))[0]});
    CHECK(u.size() == 3);
    CHECK(u[0] == -Q.one());
    CHECK(u[1] == Q.from_int(2));
    CHECK(u[2] == Q.from_int(3));
    const auto& R = quadratic_field(2);
    auto v = s_units_mod_squares(R, {});
    REQUIRE(v.size() == 2);
    CHECK(v[1] == parse_element(R, "1+t"));
    const auto& K = quadratic_field(-7);
    auto d1 = primes_above(K, Int(2))[0];
    auto w = s_units_mod_squares(K, {d1});
    REQUIRE(w.size() == 2);
    auto f = factor_principal(w[1]);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == d1);
    CHECK(f.factors[0].second == 1);
}

namespace {

void check_singular_basis(const NumberField& K, const std::vector<PrimeIdeal>& S)
{
    auto B = singular_group_basis(K, S);
    int r1 = K.num_real_places(), r2 = K.num_complex_places();
    int two = s_class_group(K, S).two_rank();
    CHECK(static_cast<int>(B.basis.size()) == r1 + r2 + static_cast<int>(S.size()) + two);
    for (const auto& b : B.basis)
        for (const auto& [P, e] : factor_principal(b).factors)
            if (std::find(S.begin(), S.end(), P) == S.end())
                CHECK(e % 2 == 0);
    F2Matrix fp;
    std::vector<PrimeIdeal> probes;
    PrimeCursor cur;
    auto avoid = S;
    while (probes.size() < 20) {
        auto P = next_prime_outside(K, avoid, cur);
        avoid.push_back(P);
        probes.push_back(P);
    }
    for (const auto& b : B.basis) {
        F2Row row;
        for (int i = 0; i < r1; ++i)
            row.push_back(sign_at(b, i) < 0);
        for (const auto& P : S)
            for (auto c : SquareClassSpace::at(P).coords(b))
                row.push_back(c);
        for (const auto& P : probes)
            for (auto c : SquareClassSpace::at(P).coords(b))
                row.push_back(c);
        fp.push_back(row);
    }
    CHECK(f2_rank(fp) == static_cast<int>(B.basis.size()));
}

} // namespace

TEST_CASE("singular basis examples")
{
    const auto& K = quadratic_field(-7);
    auto S = dyadic_primes(K);
    S.push_back(primes_above(K, Int(3))[0]);
    S.push_back(parse_prime(K, "(37, (17+t)/2)"));
    auto B = singular_group_basis(K, S);
    CHECK(B.basis.size() == 5);
    check_singular_basis(K, S);
    const auto& Q = rationals();
    auto BQ = singular_group_basis(Q, {primes_above(Q, Int(2))[0]});
    CHECK(BQ.basis.size() == 2);
    const auto& F = quadratic_field(-5);
    auto BF = singular_group_basis(F, dyadic_primes(F));
    CHECK(BF.class_part_size == 0);
    check_singular_basis(F, dyadic_primes(F));
    auto S5 = dyadic_primes(F);
    S5.push_back(primes_above(F, Int(5))[0]);
    check_singular_basis(F, S5);
    auto S3 = primes_above(F, Int(3));
    S3.push_back(primes_above(F, Int(2))[0]);
    check_singular_basis(F, {primes_above(F, Int(5))[0]});
    check_singular_basis(quadratic_field(10), dyadic_primes(quadratic_field(10)));
    check_singular_basis(quadratic_field(-30), dyadic_primes(quadratic_field(-30)));
    check_singular_basis(quadratic_field(2), dyadic_primes(quadratic_field(2)));
}
