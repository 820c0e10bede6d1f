#include "qfwitt/ideals.hpp"

#include "qfwitt/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

namespace qf {

namespace {

// Integral omega coordinates z and denominator D with x = z / D.
std::pair<std::vector<Int>, Int> omega_ints(const FieldElt& x)
{
    std::vector<Rat> w = x.field().to_omega(x);
    Int den = 1;
    for (const auto& c : w)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> z;
    for (const auto& c : w)
        z.push_back(c.get_num() * (den / c.get_den()));
    return {z, den};
}

Int eval_int_poly(const std::vector<Int>& g, const Int& x)
{
    Int acc = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// Hensel lift of a simple root r of g mod p to a root mod p^k.
Int lift_root(const std::vector<Int>& g, const Int& r, const Int& p, int k)
{
    Int modulus = pow(p, static_cast<unsigned long>(k));
    std::vector<Int> dg;
    for (std::size_t i = 1; i < g.size(); ++i)
        dg.push_back(g[i] * static_cast<long>(i));
    Int x = mod(r, modulus);
    Int cur = p;
    while (cur < modulus) {
        cur *= cur;
        Int m = std::min(cur, modulus);
        Int fx = mod(eval_int_poly(g, x), m);
        Int dfx = mod(eval_int_poly(dg, x), m);
        x = mod(x - fx * inv_mod(dfx, m), m);
    }
    return x;
}

std::vector<Int> reduce_hnf(std::vector<Int> z, const std::vector<std::vector<Int>>& H)
{
    for (int i = static_cast<int>(H.size()) - 1; i >= 0; --i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), z[i].get_mpz_t(), H[i][i].get_mpz_t());
        if (q == 0)
            continue;
        for (int j = 0; j <= i; ++j)
            z[j] -= q * H[i][j];
    }
    return z;
}

bool member_degree_one(const std::vector<Int>& z, const PrimeIdeal& P)
{
    return mod(z[0] + z[1] * P.root(), P.under()) == 0;
}

int ord_integral(std::vector<Int> z, const PrimeIdeal& P)
{
    const Int& p = P.under();
    int j = -1;
    for (const auto& c : z)
        if (c != 0) {
            int v = valuation(c, p);
            j = (j < 0) ? v : std::min(j, v);
        }
    if (j < 0)
        throw Error(ErrorKind::InfiniteValuation, "valuation of zero");
    Int pj = pow(p, static_cast<unsigned long>(j));
    for (auto& c : z)
        c /= pj;
    if (P.is_inert())
        return j;
    if (P.ram_index() == 2)
        return 2 * j + (member_degree_one(z, P) ? 1 : 0);
    if (!member_degree_one(z, P))
        return j;
    return j + valuation(omega_norm(P.field(), z), p);
}

std::mutex g_primes_mutex;

} // namespace

// ---------------------------------------------------------------- primes

bool operator<(const PrimeIdeal& a, const PrimeIdeal& b)
{
    if (a.norm_ != b.norm_)
        return a.norm_ < b.norm_;
    if (a.p_ != b.p_)
        return a.p_ < b.p_;
    return a.r_ < b.r_;
}

FieldElt PrimeIdeal::second_generator() const
{
    if (inert_)
        throw Error(ErrorKind::Internal, "inert primes have a single generator");
    return field_->omega() - field_->from_int(r_);
}

std::string PrimeIdeal::str() const
{
    if (inert_)
        return "(" + p_.get_str() + ")";
    return "(" + p_.get_str() + ", " + second_generator().str() + ")";
}

std::vector<PrimeIdeal> primes_above(const NumberField& K, const Int& p)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
    static std::map<std::pair<const NumberField*, Int>, std::vector<PrimeIdeal>> cache;
    {
        std::lock_guard lock(g_primes_mutex);
        auto it = cache.find({&K, p});
        if (it != cache.end())
            return it->second;
    }
    std::vector<PrimeIdeal> out;
    auto make = [&](bool inert, int e, int f, const Int& r) {
        PrimeIdeal P;
        P.field_ = &K;
        P.p_ = p;
        P.inert_ = inert;
        P.e_ = e;
        P.f_ = f;
        P.r_ = r;
        P.norm_ = pow(p, static_cast<unsigned long>(f));
        if (inert) {
            P.pi_ = K.from_int(p);
        } else {
            FieldElt h = K.omega() - K.from_int(r);
            if (ord_at(h, P) != 1)
                h += K.from_int(p);
            P.pi_ = h;
        }
        out.push_back(P);
    };
    const auto& g = K.omega_poly();
    switch (K.degree()) {
    case 1:
        make(true, 1, 1, Int(-1));
        break;
    case 2: {
        std::vector<Int> roots;
        if (p == 2) {
            for (long r = 0; r < 2; ++r)
                if (mod(eval_int_poly(g, Int(r)), p) == 0)
                    roots.push_back(r);
            // A single root mod 2 is a double root of a quadratic.
            if (roots.size() == 1)
                make(false, 2, 1, roots[0]);
        } else {
            Int delta = g[1] * g[1] - 4 * g[0];
            int leg = legendre(delta, p);
            Int inv2 = inv_mod(Int(2), p);
            if (leg == 0)
                make(false, 2, 1, mod(-g[1] * inv2, p));
            else if (leg == 1) {
                Int s = sqrt_mod(delta, p);
                roots = {mod((-g[1] + s) * inv2, p), mod((-g[1] - s) * inv2, p)};
                std::sort(roots.begin(), roots.end());
            }
        }
        if (roots.size() == 2) {
            make(false, 1, 1, roots[0]);
            make(false, 1, 1, roots[1]);
        } else if (out.empty())
            make(true, 1, 2, Int(-1));
        break;
    }
    default: {
        if (p > 100000)
            throw Error(ErrorKind::Unsupported, "prime splitting in the cubic field is limited to small p");
        for (Int r = 0; r < p; ++r)
            if (mod(eval_int_poly(g, r), p) == 0)
                throw Error(ErrorKind::Unsupported, "only inert primes are available in the cubic field");
        make(true, 1, 3, Int(-1));
        break;
    }
    }
    std::lock_guard lock(g_primes_mutex);
    cache[{&K, p}] = out;
    return out;
}

std::vector<PrimeIdeal> dyadic_primes(const NumberField& K)
{
    return primes_above(K, Int(2));
}

int ord_at(const FieldElt& x, const PrimeIdeal& P)
{
    if (x.is_zero())
        throw Error(ErrorKind::InfiniteValuation, "valuation of zero");
    if (&x.field() != &P.field())
        throw Error(ErrorKind::FieldMismatch, "element and prime from different fields");
    auto [z, den] = omega_ints(x);
    int v = ord_integral(std::move(z), P);
    if (den != 1)
        v -= P.ram_index() * valuation(den, P.under());
    return v;
}

int IdealFactorization::exponent(const PrimeIdeal& P) const
{
    for (const auto& [Q, e] : factors)
        if (Q == P)
            return e;
    return 0;
}

IdealFactorization factor_principal(const FieldElt& x)
{
    if (x.is_zero())
        throw Error(ErrorKind::InfiniteValuation, "factorization of zero");
    std::set<Int> rational;
    Rat n = x.norm();
    for (const Int& part : {n.get_num(), n.get_den(), omega_ints(x).second})
        if (abs(part) != 1)
            for (auto& [p, e] : factor_integer(part))
                rational.insert(p);
    IdealFactorization out{x, {}};
    for (const Int& p : rational)
        for (const auto& P : primes_above(x.field(), p)) {
            int e = ord_at(x, P);
            if (e != 0)
                out.factors.emplace_back(P, e);
        }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<PrimeIdeal> odd_support(const FieldElt& x)
{
    std::vector<PrimeIdeal> out;
    for (const auto& [P, e] : factor_principal(x).factors)
        if (e % 2 != 0)
            out.push_back(P);
    return out;
}

namespace {

std::vector<std::string> split_top_level(std::string_view s)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(')
            ++depth;
        if (ch == ')')
            --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else
            cur.push_back(ch);
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

PrimeIdeal parse_prime(const NumberField& K, std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.size() < 3 || s.front() != '(' || s.back() != ')')
        throw Error(ErrorKind::Parse, "prime ideal must look like (p) or (p, g): '" + std::string(text) + "'");
    auto parts = split_top_level(std::string_view(s).substr(1, s.size() - 2));
    if (parts.size() > 2)
        throw Error(ErrorKind::Parse, "too many generators in '" + std::string(text) + "'");
    FieldElt first = parse_element(K, parts[0]);
    if (parts.size() == 1 && !first.is_rational()) {
        auto fac = factor_principal(first);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1)
            throw Error(ErrorKind::Parse, "'" + std::string(text) + "' is not a prime ideal");
        return fac.factors[0].first;
    }
    if (!first.is_rational() || first.rational().get_den() != 1)
        throw Error(ErrorKind::Parse, "first generator must be a rational prime in '" + std::string(text) + "'");
    Int p = abs(first.rational().get_num());
    auto above = primes_above(K, p);
    if (parts.size() == 1) {
        if (above.size() != 1 || above[0].ram_index() != 1)
            throw Error(ErrorKind::Parse, "(" + p.get_str() + ") is not prime in " + K.name());
        return above[0];
    }
    FieldElt g = parse_element(K, parts[1]);
    std::vector<PrimeIdeal> hits;
    for (const auto& P : above)
        if (!g.is_zero() && ord_at(g, P) >= 1)
            hits.push_back(P);
    if (hits.size() != 1)
        throw Error(ErrorKind::Parse, "'" + std::string(text) + "' does not name a prime ideal");
    return hits[0];
}

// ---------------------------------------------------------------- residues

std::vector<std::vector<Int>> prime_power_basis(const PrimeIdeal& P, int k)
{
    const int n = P.field().degree();
    const Int& p = P.under();
    std::vector<std::vector<Int>> H(n, std::vector<Int>(n, Int(0)));
    if (k <= 0) {
        for (int i = 0; i < n; ++i)
            H[i][i] = 1;
        return H;
    }
    if (P.is_inert()) {
        for (int i = 0; i < n; ++i)
            H[i][i] = pow(p, static_cast<unsigned long>(k));
        return H;
    }
    if (P.ram_index() == 1) {
        Int pk = pow(p, static_cast<unsigned long>(k));
        H[0][0] = pk;
        H[1][0] = mod(-lift_root(P.field().omega_poly(), P.root(), p, k), pk);
        H[1][1] = 1;
        return H;
    }
    const unsigned long j = static_cast<unsigned long>(k / 2);
    if (k % 2 == 0) {
        H[0][0] = H[1][1] = pow(p, j);
    } else {
        H[0][0] = pow(p, j + 1);
        H[1][0] = mod(-P.root() * pow(p, j), H[0][0]);
        H[1][1] = pow(p, j);
    }
    return H;
}

std::vector<Int> residue(const FieldElt& x, const PrimeIdeal& P, int k)
{
    const int n = P.field().degree();
    if (k <= 0)
        return std::vector<Int>(n, Int(0));
    auto H = prime_power_basis(P, k);
    if (x.is_zero())
        return std::vector<Int>(n, Int(0));
    const Int& p = P.under();
    auto [z, den] = omega_ints(x);
    int s = valuation(den, p);
    Int rest = den / pow(p, static_cast<unsigned long>(s));
    if (s > 0) {
        Int ps = pow(p, static_cast<unsigned long>(s));
        bool divisible = std::all_of(z.begin(), z.end(), [&](const Int& c) {
            return mpz_divisible_p(c.get_mpz_t(), ps.get_mpz_t()) != 0;
        });
        if (divisible) {
            for (auto& c : z)
                c /= ps;
        } else if (!P.is_inert() && P.ram_index() == 1) {
            Int big = pow(p, static_cast<unsigned long>(k + s));
            Int val = mod(z[0] + z[1] * lift_root(P.field().omega_poly(), P.root(), p, k + s), big);
            if (!mpz_divisible_p(val.get_mpz_t(), ps.get_mpz_t()))
                throw Error(ErrorKind::NegativeValuation, x.str() + " is not integral at " + P.str());
            z = {val / ps, Int(0)};
        } else {
            throw Error(ErrorKind::NegativeValuation, x.str() + " is not integral at " + P.str());
        }
    }
    const Int& A = H[0][0];
    if (rest != 1) {
        Int inv = inv_mod(rest, A);
        for (auto& c : z)
            c = mod(c * inv, A);
    }
    return reduce_hnf(std::move(z), H);
}

LocalRing::LocalRing(const PrimeIdeal& P, int k) : P_(P), k_(k), n_(P.field().degree())
{
    auto to64 = [](const std::vector<std::vector<Int>>& H) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& row : H) {
            std::vector<std::int64_t> r;
            for (const auto& v : row) {
                if (!v.fits_slong_p())
                    throw Error(ErrorKind::Unsupported, "residue ring too large");
                r.push_back(v.get_si());
            }
            out.push_back(r);
        }
        return out;
    };
    hnf_ = to64(prime_power_basis(P, k));
    size_ = 1;
    for (int i = 0; i < n_; ++i)
        size_ *= static_cast<std::size_t>(hnf_[i][i]);
    if (size_ > (std::size_t(1) << 26))
        throw Error(ErrorKind::Unsupported, "residue ring too large");
    const std::int64_t A = hnf_[0][0];
    for (const auto& c : P.field().omega_poly())
        g_.push_back(mod(c, Int(A)).get_si());
    for (int j = 1; j <= k; ++j)
        level_hnf_.push_back(to64(prime_power_basis(P, j)));
}

LocalRing::Elem LocalRing::normalize(std::array<std::int64_t, 5> v) const
{
    const std::int64_t A = hnf_[0][0];
    for (int i = 0; i < n_; ++i) {
        v[i] %= A;
        if (v[i] < 0)
            v[i] += A;
    }
    for (int i = n_ - 1; i >= 0; --i) {
        std::int64_t q = v[i] / hnf_[i][i];
        if (q == 0)
            continue;
        for (int j = 0; j <= i; ++j)
            v[j] -= q * hnf_[i][j];
    }
    for (int i = 0; i < n_; ++i) {
        v[i] %= A;
        if (v[i] < 0)
            v[i] += A;
    }
    // The triangular pass may leave column 0 outside [0, A) only via the mod above.
    Elem out{0, 0, 0};
    for (int i = 0; i < n_; ++i)
        out[i] = v[i];
    return out;
}

LocalRing::Elem LocalRing::reduce(const FieldElt& x) const
{
    auto z = residue(x, P_, k_);
    Elem out{0, 0, 0};
    for (int i = 0; i < n_; ++i)
        out[i] = z[i].get_si();
    return out;
}

LocalRing::Elem LocalRing::from_index(std::size_t idx) const
{
    Elem out{0, 0, 0};
    for (int i = 0; i < n_; ++i) {
        const auto m = static_cast<std::size_t>(hnf_[i][i]);
        out[i] = static_cast<std::int64_t>(idx % m);
        idx /= m;
    }
    return out;
}

std::size_t LocalRing::index(const Elem& a) const
{
    std::size_t idx = 0, scale = 1;
    for (int i = 0; i < n_; ++i) {
        idx += static_cast<std::size_t>(a[i]) * scale;
        scale *= static_cast<std::size_t>(hnf_[i][i]);
    }
    return idx;
}

LocalRing::Elem LocalRing::add(const Elem& a, const Elem& b) const
{
    std::array<std::int64_t, 5> v{a[0] + b[0], a[1] + b[1], a[2] + b[2], 0, 0};
    return normalize(v);
}

LocalRing::Elem LocalRing::sub(const Elem& a, const Elem& b) const
{
    std::array<std::int64_t, 5> v{a[0] - b[0], a[1] - b[1], a[2] - b[2], 0, 0};
    return normalize(v);
}

LocalRing::Elem LocalRing::mul(const Elem& a, const Elem& b) const
{
    const std::int64_t A = hnf_[0][0];
    std::array<std::int64_t, 5> v{0, 0, 0, 0, 0};
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            v[i + j] = (v[i + j] + a[i] * b[j]) % A;
    for (int t = 2 * n_ - 2; t >= n_; --t) {
        const std::int64_t c = v[t];
        if (c == 0)
            continue;
        for (int j = 0; j < n_; ++j)
            v[t - n_ + j] = (v[t - n_ + j] - c * g_[j]) % A;
        v[t] = 0;
    }
    return normalize(v);
}

bool LocalRing::is_zero(const Elem& a) const
{
    return a[0] == 0 && a[1] == 0 && a[2] == 0;
}

int LocalRing::ord(const Elem& a) const
{
    for (int j = 1; j <= k_; ++j) {
        const auto& H = level_hnf_[j - 1];
        std::array<std::int64_t, 3> v = a;
        for (int i = n_ - 1; i >= 0; --i) {
            std::int64_t q = v[i] / H[i][i];
            if (v[i] < 0 && q * H[i][i] != v[i])
                --q;
            for (int c = 0; c <= i; ++c)
                v[c] -= q * H[i][c];
        }
        if (v[0] != 0 || v[1] != 0 || v[2] != 0)
            return j - 1;
    }
    return k_;
}

FieldElt LocalRing::lift(const Elem& a) const
{
    std::vector<Int> w;
    for (int i = 0; i < n_; ++i)
        w.push_back(Int(static_cast<long>(a[i])));
    return P_.field().from_omega(w);
}

// ---------------------------------------------------------------- CRT

FieldElt crt(const std::vector<CrtTarget>& data)
{
    if (data.empty())
        throw Error(ErrorKind::Internal, "crt needs at least one congruence");
    const NumberField& K = data.front().prime.field();
    const int n = K.degree();
    std::map<Int, std::vector<const CrtTarget*>> by_p;
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (data[i].prime == data[j].prime)
                throw Error(ErrorKind::DuplicateModulus, "prime " + data[i].prime.str() + " appears twice");
        if (&data[i].prime.field() != &K || &data[i].target.field() != &K)
            throw Error(ErrorKind::FieldMismatch, "crt data over different fields");
        if (data[i].exponent < 0)
            throw Error(ErrorKind::Internal, "negative crt exponent");
        if (!data[i].target.is_zero() && ord_at(data[i].target, data[i].prime) < 0)
            throw Error(ErrorKind::NegativeValuation,
                        data[i].target.str() + " has negative valuation at " + data[i].prime.str());
        if (data[i].exponent > 0)
            by_p[data[i].prime.under()].push_back(&data[i]);
    }

    std::vector<Int> acc(n, Int(0));
    Int modulus = 1;
    for (const auto& [p, targets] : by_p) {
        std::vector<Int> z(n, Int(0));
        int m = 0;
        if (targets.size() == 1) {
            const CrtTarget& t = *targets[0];
            z = residue(t.target, t.prime, t.exponent);
            m = t.prime.ram_index() == 2 ? (t.exponent + 1) / 2 : t.exponent;
        } else {
            // Two split primes over p.
            const CrtTarget& t1 = *targets[0];
            const CrtTarget& t2 = *targets[1];
            m = std::max(t1.exponent, t2.exponent);
            Int pm = pow(p, static_cast<unsigned long>(m));
            Int rho1 = residue(t1.target, t1.prime, t1.exponent)[0];
            Int rho2 = residue(t2.target, t2.prime, t2.exponent)[0];
            Int r1 = lift_root(K.omega_poly(), t1.prime.root(), p, m);
            Int r2 = lift_root(K.omega_poly(), t2.prime.root(), p, m);
            Int y = mod((rho1 - rho2) * inv_mod(r1 - r2, pm), pm);
            Int x = mod(rho1 - y * r1, pm);
            z = {x, y};
        }
        Int pm = pow(p, static_cast<unsigned long>(m));
        for (int i = 0; i < n; ++i) {
            Int diff = mod(z[i] - acc[i], pm);
            acc[i] += modulus * mod(diff * inv_mod(mod(modulus, pm), pm), pm);
        }
        modulus *= pm;
        for (auto& c : acc)
            c = mod(c, modulus);
    }
    // Centered representatives keep heights down.
    for (auto& c : acc)
        if (2 * c > modulus)
            c -= modulus;
    if (K.degree() != 2)
        return K.from_omega(acc);
    return reduce_modulo(K.from_omega(acc), crt_ideal(K, data));
}

Ideal crt_ideal(const NumberField& K, const std::vector<CrtTarget>& data)
{
    Ideal M = Ideal::unit(K);
    for (const auto& t : data)
        if (t.exponent > 0)
            M = M * Ideal::of(t.prime).pow(t.exponent);
    return M;
}

namespace {

// Gram matrix of T2(x + y omega) = sum |sigma(x + y omega)|^2, exact in degree 2.
std::array<Int, 3> t2_gram(const NumberField& K)
{
    const auto& g = K.omega_poly();
    if (K.is_real())
        return {Int(2), Int(-g[1]), Int(g[1] * g[1] - 2 * g[0])};
    return {Int(2), Int(-g[1]), Int(2 * g[0])};
}

Int t2_pair(const std::array<Int, 3>& G, const std::vector<Int>& u, const std::vector<Int>& v)
{
    return G[0] * u[0] * v[0] + G[1] * (u[0] * v[1] + u[1] * v[0]) + G[2] * u[1] * v[1];
}

Int round_div(const Int& a, const Int& b)
{
    Rat q(a, b);
    q.canonicalize();
    return floor(q + Rat(1, 2));
}

} // namespace

namespace {

// Lagrange-reduced basis of M for the trace form.
std::array<std::vector<Int>, 2> reduced_basis(const Ideal& M)
{
    const NumberField& K = M.field();
    if (K.degree() != 2)
        throw Error(ErrorKind::Unsupported, "lattice reduction needs degree 2");
    const auto G = t2_gram(K);
    std::vector<Int> b1{M.a(), Int(0)}, b2{M.b(), M.c()};
    for (;;) {
        if (t2_pair(G, b2, b2) < t2_pair(G, b1, b1))
            std::swap(b1, b2);
        Int m = round_div(t2_pair(G, b1, b2), t2_pair(G, b1, b1));
        if (m == 0)
            break;
        b2[0] -= m * b1[0];
        b2[1] -= m * b1[1];
    }
    return {b1, b2};
}

} // namespace

FieldElt reduce_modulo(const FieldElt& x, const Ideal& M)
{
    const NumberField& K = x.field();
    const auto [b1, b2] = reduced_basis(M);
    auto w = K.to_omega(x);
    Int den = 1;
    for (const auto& c : w)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    if (den != 1)
        throw Error(ErrorKind::Internal, "reduce_modulo needs an integral element");
    std::vector<Int> v{w[0].get_num(), w[1].get_num()};
    // v = u1 b1 + u2 b2 over Q, rounded.
    Int det = b1[0] * b2[1] - b1[1] * b2[0];
    Int u1 = round_div(v[0] * b2[1] - v[1] * b2[0], det);
    Int u2 = round_div(b1[0] * v[1] - b1[1] * v[0], det);
    v[0] -= u1 * b1[0] + u2 * b2[0];
    v[1] -= u1 * b1[1] + u2 * b2[1];
    return K.from_omega(v);
}

std::vector<FieldElt> signed_crt_candidates(const NumberField& K, const std::vector<CrtTarget>& data,
                                            const std::vector<int>& negatives, std::size_t count)
{
    const FieldElt x0 = crt(data);
    auto wanted = [&](const FieldElt& x) {
        for (int i = 0; i < K.num_real_places(); ++i) {
            const bool neg = std::find(negatives.begin(), negatives.end(), i) != negatives.end();
            if (sign_at(x, i) != (neg ? -1 : 1))
                return false;
        }
        return true;
    };
    std::vector<FieldElt> out;
    if (K.degree() == 1) {
        const Int m = crt_ideal(K, data).a();
        for (long r = 0; out.size() < count && r <= 4 * static_cast<long>(count); ++r)
            for (long i : {r, -r}) {
                const FieldElt x = x0 + K.from_int(m * i);
                if (!x.is_zero() && wanted(x))
                    out.push_back(x);
                if (r == 0)
                    break;
            }
        return out;
    }
    const auto [b1, b2] = reduced_basis(crt_ideal(K, data));
    const FieldElt e1 = K.from_omega(b1), e2 = K.from_omega(b2);
    // Rings |i| + |j| = r around the reduced representative.
    for (long r = 0; out.size() < count && r <= 64; ++r)
        for (long i = -r; i <= r && out.size() < count; ++i)
            for (long j : {r - std::labs(i), -(r - std::labs(i))}) {
                const FieldElt x = x0 + e1 * Rat(i) + e2 * Rat(j);
                if (!x.is_zero() && wanted(x))
                    out.push_back(x);
                if (j == 0)
                    break;
            }
    return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

std::vector<PrimeIdeal> primes_with_norm(const NumberField& K, const Int& N)
{
    if (N < 2)
        return {};
    if (is_prime(N)) {
        std::vector<PrimeIdeal> out;
        for (const auto& P : primes_above(K, N))
            if (P.residue_degree() == 1)
                out.push_back(P);
        return out;
    }
    if (K.degree() == 2) {
        if (auto r = exact_sqrt(N); r && is_prime(*r)) {
            auto above = primes_above(K, *r);
            if (above.size() == 1 && above[0].is_inert())
                return above;
        }
        return {};
    }
    if (K.degree() == 1)
        return {};
    throw Error(ErrorKind::Unsupported, "prime enumeration needs degree <= 2");
}

} // namespace

PrimeIdeal next_prime_outside(const NumberField& K, const std::vector<PrimeIdeal>& S, PrimeCursor& cursor)
{
    for (;;) {
        auto list = primes_with_norm(K, cursor.norm);
        while (cursor.index < list.size()) {
            const PrimeIdeal& P = list[cursor.index++];
            if (std::find(S.begin(), S.end(), P) == S.end())
                return P;
        }
        cursor.norm += 1;
        cursor.index = 0;
    }
}

std::vector<PrimeIdeal> primes_up_to(const NumberField& K, const Int& bound)
{
    std::vector<PrimeIdeal> out;
    for (Int N = 2; N <= bound; ++N)
        for (const auto& P : primes_with_norm(K, N))
            out.push_back(P);
    return out;
}

// ---------------------------------------------------------------- lattices

std::vector<Int> omega_mul(const NumberField& K, const std::vector<Int>& x, const std::vector<Int>& y)
{
    const int n = K.degree();
    const auto& g = K.omega_poly();
    std::vector<Int> v(2 * n - 1, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            v[i + j] += x[i] * y[j];
    for (int t = 2 * n - 2; t >= n; --t) {
        for (int j = 0; j < n; ++j)
            v[t - n + j] -= v[t] * g[j];
        v[t] = 0;
    }
    v.resize(n);
    return v;
}

Int omega_norm(const NumberField& K, const std::vector<Int>& x)
{
    if (K.degree() == 1)
        return x[0];
    if (K.degree() != 2)
        throw Error(ErrorKind::Unsupported, "omega_norm needs degree <= 2");
    const auto& g = K.omega_poly();
    return x[0] * x[0] - g[1] * x[0] * x[1] + g[0] * x[1] * x[1];
}

Ideal Ideal::unit(const NumberField& K)
{
    Ideal I;
    I.field_ = &K;
    return I;
}

Ideal Ideal::of(const PrimeIdeal& P)
{
    Ideal I;
    I.field_ = &P.field();
    const Int& p = P.under();
    if (P.field().degree() == 1) {
        I.a_ = p;
    } else if (P.is_inert()) {
        I.a_ = p;
        I.c_ = p;
    } else {
        I.a_ = p;
        I.b_ = mod(-P.root(), p);
        I.c_ = 1;
    }
    return I;
}

Ideal Ideal::principal(const FieldElt& x)
{
    auto [z, den] = omega_ints(x);
    if (den != 1)
        throw Error(ErrorKind::NegativeValuation, x.str() + " is not integral");
    if (x.is_zero())
        throw Error(ErrorKind::InfiniteValuation, "zero ideal");
    return from_generators(x.field(), {z});
}

Ideal Ideal::from_generators(const NumberField& K, const std::vector<std::vector<Int>>& gens)
{
    Ideal I;
    I.field_ = &K;
    if (K.degree() == 1) {
        Int a = 0;
        for (const auto& g : gens)
            mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), g[0].get_mpz_t());
        if (a == 0)
            throw Error(ErrorKind::InfiniteValuation, "zero ideal");
        I.a_ = a;
        return I;
    }
    if (K.degree() != 2)
        throw Error(ErrorKind::Unsupported, "ideal lattices need degree <= 2");
    std::vector<std::vector<Int>> vecs = gens;
    const std::vector<Int> w{0, 1};
    for (const auto& g : gens)
        vecs.push_back(omega_mul(K, g, w));
    // Hermite reduction on the omega column, then gcd of what is left.
    Int px = 0, py = 0, a = 0;
    for (const auto& v : vecs) {
        Int x = v[0], y = v[1];
        if (y == 0) {
            mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
            continue;
        }
        if (py == 0) {
            px = x;
            py = y;
            continue;
        }
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), py.get_mpz_t(), y.get_mpz_t());
        Int nx = s * px + t * x;
        Int rest = (y / g) * px - (py / g) * x;
        mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), rest.get_mpz_t());
        px = nx;
        py = g;
    }
    if (py == 0 || a == 0)
        throw Error(ErrorKind::Internal, "generators do not span a full lattice");
    if (py < 0) {
        py = -py;
        px = -px;
    }
    I.a_ = abs(a);
    I.b_ = mod(px, I.a_);
    I.c_ = py;
    return I;
}

bool Ideal::contains(const std::vector<Int>& w) const
{
    if (field_->degree() == 1)
        return mpz_divisible_p(w[0].get_mpz_t(), a_.get_mpz_t()) != 0;
    if (!mpz_divisible_p(w[1].get_mpz_t(), c_.get_mpz_t()))
        return false;
    Int x = w[0] - (w[1] / c_) * b_;
    return mpz_divisible_p(x.get_mpz_t(), a_.get_mpz_t()) != 0;
}

Ideal Ideal::conj() const
{
    if (field_->degree() == 1)
        return *this;
    const auto& g = field_->omega_poly();
    // conj(x + y omega) = (x - g1 y) - y omega
    return from_generators(*field_, {{a_, Int(0)}, {b_ - g[1] * c_, -c_}});
}

Ideal Ideal::pow(long k) const
{
    Ideal result = unit(*field_), base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::string Ideal::str() const
{
    if (field_->degree() == 1)
        return "(" + a_.get_str() + ")";
    return "(" + a_.get_str() + ", " + field_->from_omega(std::vector<Int>{b_, c_}).str() + ")";
}

Ideal operator*(const Ideal& x, const Ideal& y)
{
    const NumberField& K = *x.field_;
    if (K.degree() == 1) {
        Ideal I = x;
        I.a_ = x.a_ * y.a_;
        return I;
    }
    std::vector<std::vector<Int>> bx{{x.a_, Int(0)}, {x.b_, x.c_}};
    std::vector<std::vector<Int>> by{{y.a_, Int(0)}, {y.b_, y.c_}};
    std::vector<std::vector<Int>> gens;
    for (const auto& u : bx)
        for (const auto& v : by)
            gens.push_back(omega_mul(K, u, v));
    return Ideal::from_generators(K, gens);
}

} // namespace qf
