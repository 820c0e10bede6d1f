#include "qfwitt/integer.hpp"

#include "qfwitt/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace qf {

namespace {

constexpr unsigned long kTrialBound = 1UL << 16;

const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialBound; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Large primes found by Pollard-Brent; they recur across norms of related elements.
std::mutex g_known_mutex;
std::set<Int> g_known_primes;

void remember_prime(const Int& p)
{
    if (p <= kTrialBound)
        return;
    std::lock_guard lock(g_known_mutex);
    g_known_primes.insert(p);
}

std::vector<Int> known_primes_snapshot()
{
    std::lock_guard lock(g_known_mutex);
    return {g_known_primes.begin(), g_known_primes.end()};
}

constexpr unsigned long kFullBudget = 1UL << 24;
constexpr unsigned long kQuickBudget = 1UL << 14;

std::optional<Int> pollard_brent(const Int& n, unsigned long seed, unsigned long kMaxIter)
{
    Int y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    unsigned long iter = 0;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = (y * y + c) % n;
                Int diff = x - y;
                q = (q * abs(diff)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
        iter += r;
        if (iter > kMaxIter)
            return std::nullopt;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            Int diff = x - ys;
            g = gcd(abs(diff), n);
        } while (g == 1);
    }
    if (g == n)
        return std::nullopt;
    return g;
}

void split_composite(const Int& n, std::map<Int, int>& out, unsigned long budget)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        remember_prime(n);
        ++out[n];
        return;
    }
    if (auto r = exact_sqrt(n)) {
        std::map<Int, int> sub;
        split_composite(*r, sub, budget);
        for (auto& [p, e] : sub)
            out[p] += 2 * e;
        return;
    }
    for (unsigned long seed = 2; seed < 40; ++seed) {
        if (auto d = pollard_brent(n, seed, budget)) {
            split_composite(*d, out, budget);
            split_composite(n / *d, out, budget);
            return;
        }
    }
    throw Error(ErrorKind::FactorizationFailed, "could not factor " + n.get_str());
}

} // namespace

bool is_prime(const Int& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

std::vector<std::pair<Int, int>> factor_with_budget(const Int& n_in, unsigned long budget)
{
    if (n_in == 0)
        throw Error(ErrorKind::InfiniteValuation, "factor_integer(0)");
    Int n = abs(n_in);
    std::map<Int, int> out;
    for (unsigned long p : small_primes()) {
        if (n == 1)
            break;
        if (Int(p) * p > n)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++out[Int(p)];
        }
    }
    if (n > 1 && n <= Int(kTrialBound) * kTrialBound) {
        ++out[n];
        n = 1;
    }
    if (n > 1) {
        for (const Int& p : known_primes_snapshot()) {
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                n /= p;
                ++out[p];
            }
            if (n == 1)
                break;
        }
    }
    if (n > 1)
        split_composite(n, out, budget);
    return {out.begin(), out.end()};
}

} // namespace

std::vector<std::pair<Int, int>> factor_integer(const Int& n)
{
    return factor_with_budget(n, kFullBudget);
}

bool factors_cheaply(const Int& n)
{
    try {
        factor_with_budget(n, kQuickBudget);
        return true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::FactorizationFailed)
            throw;
        return false;
    }
}

Int mod(const Int& a, const Int& m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inv_mod(const Int& a, const Int& m)
{
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorKind::ZeroDivision, "no inverse of " + a.get_str() + " mod " + m.get_str());
    return r;
}

Int pow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

int valuation(const Int& n, const Int& p)
{
    if (n == 0)
        throw Error(ErrorKind::InfiniteValuation, "valuation of 0");
    Int m = n;
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(const Rat& x, const Int& p)
{
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

int legendre(const Int& a, const Int& p)
{
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Int sqrt_mod(const Int& a_in, const Int& p)
{
    Int a = mod(a_in, p);
    if (a == 0)
        return 0;
    if (p == 2)
        return a;
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1)
        ++z;
    Int m = s, c, t, r, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    while (t != 1) {
        unsigned long i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
            if (Int(i) == m)
                throw Error(ErrorKind::Internal, "sqrt_mod: non-residue");
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m.get_ui(); ++j)
            b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

std::optional<Int> exact_sqrt(const Int& n)
{
    if (n < 0)
        return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rat> rational_sqrt(const Rat& x)
{
    auto n = exact_sqrt(x.get_num());
    if (!n)
        return std::nullopt;
    auto d = exact_sqrt(x.get_den());
    if (!d)
        return std::nullopt;
    return Rat(*n, *d);
}

Int square_part(const Int& n)
{
    Int k = 1;
    for (auto& [p, e] : factor_integer(n))
        k *= pow(p, static_cast<unsigned long>(e / 2));
    return k;
}

bool is_squarefree(const Int& n)
{
    if (n == 0)
        return false;
    for (auto& [p, e] : factor_integer(n))
        if (e > 1)
            return false;
    return true;
}

Int floor(const Rat& x)
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Int ceil(const Rat& x)
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

} // namespace qf
