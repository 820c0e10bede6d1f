#include "qfwitt/witt.hpp"

#include "qfwitt/class_group.hpp"
#include "qfwitt/error.hpp"

#include <algorithm>

namespace qf {

FieldElt disc(const DiagonalForm& q)
{
    const NumberField& K = q.field();
    FieldElt d = K.one();
    for (const auto& a : q.coeffs())
        d *= a;
    const long n = q.dim();
    if ((n * (n - 1) / 2) % 2 != 0)
        d = -d;
    return square_reduce(d);
}

std::vector<PrimeIdeal> merge_primes(std::vector<PrimeIdeal> a, const std::vector<PrimeIdeal>& b)
{
    for (const auto& P : b)
        if (std::find(a.begin(), a.end(), P) == a.end())
            a.push_back(P);
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<PrimeIdeal> prime_support(const DiagonalForm& q)
{
    std::vector<PrimeIdeal> out;
    for (const auto& a : q.coeffs())
        out = merge_primes(out, odd_support(a));
    return out;
}

std::vector<PrimeIdeal> relevant_primes(const DiagonalForm& q)
{
    return merge_primes(prime_support(q), dyadic_primes(q.field()));
}

int signature(const DiagonalForm& q, int place)
{
    int s = 0;
    for (const auto& a : q.coeffs())
        s += sign_at(a, place);
    return s;
}

bool same_square_class(const FieldElt& a, const FieldElt& b)
{
    return is_global_square(a * b).has_value();
}

int adim(const DiagonalForm& q)
{
    const NumberField& K = q.field();
    const int n = q.dim();
    if (n == 0)
        return 0;
    int best = n % 2;
    if (n % 2 == 0 && !is_global_square(disc(q)))
        best = 2;
    for (int i = 0; i < K.num_real_places(); ++i)
        best = std::max(best, std::abs(signature(q, i)));
    if (best == n)
        return n;
    for (const auto& P : relevant_primes(q)) {
        best = std::max(best, local_adim(q, Place::finite(P)));
        if (best == n)
            break;
    }
    return best;
}

WittCertificate certificate(const DiagonalForm& q, const std::vector<PrimeIdeal>& prime_set)
{
    for (const auto& P : relevant_primes(q))
        if (std::find(prime_set.begin(), prime_set.end(), P) == prime_set.end())
            throw Error(ErrorKind::MissingPrimes, "prime set lacks " + P.str());
    WittCertificate c;
    c.dim = q.dim();
    c.disc = small_square_class_rep(disc(q));
    for (int i = 0; i < q.field().num_real_places(); ++i)
        c.signatures.push_back(signature(q, i));
    auto primes = prime_set;
    std::sort(primes.begin(), primes.end());
    for (const auto& P : primes)
        c.hasse.emplace_back(P, hasse(q, Place::finite(P)));
    c.adim = adim(q);
    c.witt_index = (c.dim - c.adim) / 2;
    return c;
}

bool same_class_data(const WittCertificate& a, const WittCertificate& b)
{
    return same_square_class(a.disc, b.disc) && a.signatures == b.signatures && a.hasse == b.hasse &&
           a.adim == b.adim;
}

bool forms_equivalent(const DiagonalForm& q1, const DiagonalForm& q2, Equivalence mode)
{
    if (&q1.field() != &q2.field())
        throw Error(ErrorKind::FieldMismatch, "forms over different fields");
    DiagonalForm a = q1, b = q2;
    if (mode == Equivalence::Similar) {
        if ((a.dim() - b.dim()) % 2 != 0)
            return false;
        if (a.dim() < b.dim())
            a = a.with_hyperbolic((b.dim() - a.dim()) / 2);
        else
            b = b.with_hyperbolic((a.dim() - b.dim()) / 2);
    }
    if (a.dim() != b.dim())
        return false;
    if (!same_square_class(disc(a), disc(b)))
        return false;
    for (int i = 0; i < a.field().num_real_places(); ++i)
        if (signature(a, i) != signature(b, i))
            return false;
    for (const auto& P : merge_primes(relevant_primes(a), relevant_primes(b)))
        if (hasse(a, Place::finite(P)) != hasse(b, Place::finite(P)))
            return false;
    return true;
}

} // namespace qf
