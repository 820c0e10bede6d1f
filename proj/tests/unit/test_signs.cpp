#include "doctest.h"

#include "qfwitt/local.hpp"
#include "qfwitt/signs.hpp"

using namespace qf;

namespace {

std::vector<std::vector<int>> all_patterns(int r)
{
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> neg;
        for (int i = 0; i < r; ++i)
            if (mask & (1 << i))
                neg.push_back(i);
        out.push_back(neg);
    }
    return out;
}

void check_signs(const FieldElt& x, const std::vector<int>& neg)
{
    for (int j = 0; j < x.field().num_real_places(); ++j) {
        bool n = std::find(neg.begin(), neg.end(), j) != neg.end();
        CHECK(sign_at(x, j) == (n ? -1 : 1));
    }
}

} // namespace

TEST_CASE("ordering separation")
{
    const auto& R = quadratic_field(2);
    CHECK(ordering_separation(R, {}) == R.one());
    for (const auto* K : {&R, &simplest_cubic(), &rationals()})
        for (const auto& neg : all_patterns(K->num_real_places()))
            check_signs(ordering_separation(*K, neg), neg);
    const auto& C = simplest_cubic();
    auto x = ordering_separation(C, {1});
    CHECK(sign_at(x, 0) == 1);
    CHECK(sign_at(x, 1) == -1);
    CHECK(sign_at(x, 2) == 1);
}

TEST_CASE("positive approximation")
{
    const auto& K = quadratic_field(-7);
    auto three = primes_above(K, Int(3))[0];
    auto a = positive_approximation(K, {{three, 1, K.from_int(5)}});
    CHECK(ord_at(a - K.from_int(5), three) >= 1);
    const auto& Q = rationals();
    auto P3 = primes_above(Q, Int(3))[0];
    auto b = positive_approximation(Q, {{P3, 1, Q.from_int(2)}});
    CHECK(sign_at(b, 0) == 1);
    CHECK(ord_at(b - Q.from_int(2), P3) >= 1);
    auto c = positive_approximation(Q, {{P3, 2, Q.from_int(-100)}});
    CHECK(sign_at(c, 0) == 1);
    CHECK(ord_at(c + Q.from_int(100), P3) >= 2);
    const auto& R = quadratic_field(2);
    auto P7 = primes_above(R, Int(7))[0];
    CHECK(P7.ram_index() == 1);
    auto d = positive_approximation(R, {{P7, 2, -R.one()}});
    CHECK(sign_at(d, 0) == 1);
    CHECK(sign_at(d, 1) == 1);
    CHECK(ord_at(d + R.one(), P7) >= 2);
}

TEST_CASE("strong ordering separation")
{
    const auto& R = quadratic_field(2);
    for (const auto* K : {&R, &simplest_cubic()}) {
        auto S = dyadic_primes(*K);
        for (const auto& neg : all_patterns(K->num_real_places())) {
            auto rho = strong_ordering_separation(*K, neg, S);
            check_signs(rho, neg);
            for (const auto& P : S)
                CHECK(is_local_square(rho, P));
        }
    }
    const auto& Q = rationals();
    std::vector<PrimeIdeal> S{primes_above(Q, Int(3))[0], primes_above(Q, Int(5))[0]};
    auto rho = strong_ordering_separation(Q, {0}, S);
    CHECK(sign_at(rho, 0) == -1);
    for (const auto& P : S)
        CHECK(is_local_square(rho, P));
}
