#include "qfwitt/class_group.hpp"

#include "qfwitt/error.hpp"
#include "qfwitt/f2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace qf {

namespace {

using Vec = std::vector<Int>;

Rat round_rat(const Rat& x)
{
    return Rat(floor(x + Rat(1, 2)));
}

double log_abs(const Rat& x)
{
    long en, ed;
    double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
    return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

double log_add(double a, double b)
{
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// log |sigma_i(x)| at the two real places of a real quadratic field; place 0
// sends t to -sqrt(d).
std::pair<double, double> log_embeddings(const FieldElt& x)
{
    const NumberField& K = x.field();
    const Rat& c0 = x[0];
    const Rat& c1 = x[1];
    double lsd = 0.5 * std::log(static_cast<double>(K.radicand()));
    double l_norm = log_abs(x.norm());
    if (c1 == 0) {
        double l = log_abs(c0);
        return {l, l};
    }
    if (c0 == 0) {
        double l = log_abs(c1) + lsd;
        return {l, l};
    }
    double big = log_add(log_abs(c0), log_abs(c1) + lsd);
    bool same_sign = (sgn(c0) == sgn(c1));
    // c0 + c1 sqrt(d) is the large one when signs agree.
    if (same_sign)
        return {l_norm - big, big};
    return {big, l_norm - big};
}

struct QuadraticShape {
    Int g0, g1, disc;
    Rat w[2]; // approximations of the real embeddings of omega
};

QuadraticShape shape_of(const NumberField& K)
{
    QuadraticShape s;
    const auto& g = K.omega_poly();
    s.g0 = g[0];
    s.g1 = g[1];
    s.disc = s.g1 * s.g1 - 4 * s.g0;
    if (s.disc > 0) {
        const unsigned long bits = 200;
        Int scaled = s.disc << (2 * bits);
        Int r;
        mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
        Rat root(r, Int(1) << bits);
        root.canonicalize();
        s.w[0] = (Rat(-s.g1) - root) / 2;
        s.w[1] = (Rat(-s.g1) + root) / 2;
    }
    return s;
}

Rat form_value(const QuadraticShape& s, const Vec& u, const Vec& v)
{
    if (s.disc < 0) {
        // Polarisation of the norm form.
        Int a = u[0] * v[0] * 2 - s.g1 * (u[0] * v[1] + u[1] * v[0]) + 2 * s.g0 * u[1] * v[1];
        return Rat(a, 2);
    }
    Rat acc = 0;
    for (const auto& w : s.w)
        acc += (Rat(u[0]) + Rat(u[1]) * w) * (Rat(v[0]) + Rat(v[1]) * w);
    return acc;
}

// A short nonzero vector of I for the Minkowski-type quadratic form.
Vec short_vector(const Ideal& I, const QuadraticShape& s)
{
    Vec b1{I.a(), Int(0)}, b2{I.b(), I.c()};
    for (int iter = 0; iter < 100000; ++iter) {
        if (form_value(s, b2, b2) < form_value(s, b1, b1))
            std::swap(b1, b2);
        Rat mu = round_rat(form_value(s, b1, b2) / form_value(s, b1, b1));
        if (mu == 0)
            break;
        Int m = mu.get_num();
        b2[0] -= m * b1[0];
        b2[1] -= m * b1[1];
    }
    if (form_value(s, b2, b2) < form_value(s, b1, b1))
        std::swap(b1, b2);
    return b1;
}

Ideal divide_exact(const Ideal& J, const Int& n)
{
    auto div = [&](const Int& x) {
        if (!mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t()))
            throw Error(ErrorKind::Internal, "ideal is not divisible by " + n.get_str());
        return Int(x / n);
    };
    return Ideal::from_generators(J.field(), {{div(J.a()), Int(0)}, {div(J.b()), div(J.c())}});
}

// J = gamma * I^-1 with N(J) bounded in terms of the discriminant.
std::pair<Ideal, FieldElt> reduce_ideal(const Ideal& I, const QuadraticShape& s)
{
    const NumberField& K = I.field();
    Vec g = short_vector(I, s);
    FieldElt gamma = K.from_omega(g);
    Ideal J = divide_exact(Ideal::principal(gamma) * I.conj(), I.norm());
    return {J, gamma};
}

struct UnitData {
    FieldElt eps;
    double log_eps = 0; // log of the larger absolute embedding
};

const UnitData& unit_data(const NumberField& K);

std::optional<FieldElt> search_small_generator(const Ideal& J, const QuadraticShape& s)
{
    const NumberField& K = J.field();
    const Int N = J.norm();
    Int ymax;
    if (s.disc < 0) {
        Int q = (4 * N) / abs(s.disc);
        mpz_sqrt(ymax.get_mpz_t(), q.get_mpz_t());
    } else {
        double le = unit_data(K).log_eps;
        double lb = 0.5 * (log_abs(Rat(N)) + le);
        double ly = std::log(2.0) + lb - 0.5 * std::log(s.disc.get_d());
        if (ly > 40)
            throw Error(ErrorKind::Unsupported, "principal ideal search too large for " + K.name());
        ymax = static_cast<long>(std::exp(ly)) + 2;
    }
    const Int& c = J.c();
    Int start = -(ymax / c) * c;
    for (Int y = start; y <= ymax; y += c) {
        for (int sign : {1, -1}) {
            if (s.disc < 0 && sign < 0)
                continue;
            Int rhs = s.disc * y * y + sign * 4 * N;
            if (rhs < 0)
                continue;
            auto r = exact_sqrt(rhs);
            if (!r)
                continue;
            for (const Int& root : {*r, Int(-*r)}) {
                Int twice = root + s.g1 * y;
                if (!mpz_even_p(twice.get_mpz_t()))
                    continue;
                Vec w{twice / 2, y};
                if (w[0] == 0 && w[1] == 0)
                    continue;
                if (J.contains(w) && abs(omega_norm(K, w)) == N)
                    return K.from_omega(w);
            }
        }
    }
    return std::nullopt;
}

FieldElt compute_fundamental_unit(const NumberField& K)
{
    const auto& g = K.omega_poly();
    const Int disc = g[1] * g[1] - 4 * g[0];
    Int sq;
    mpz_sqrt(sq.get_mpz_t(), disc.get_mpz_t());
    Int P = -g[1], Q = 2;
    Int p1 = 1, p2 = 0, q1 = 0, q2 = 1;
    for (int step = 0; step < 10000; ++step) {
        Int a;
        Int num = (Q > 0) ? Int(P + sq) : Int(P + sq + 1);
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        Int p = a * p1 + p2, q = a * q1 + q2;
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
        Vec w{p, Int(-q)};
        if (abs(omega_norm(K, w)) == 1) {
            FieldElt u = K.from_omega(w);
            auto [l0, l1] = log_embeddings(u);
            (void)l0;
            if (l1 < 0)
                u = u.inverse();
            if (sign_at(u, 1) < 0)
                u = -u;
            return u;
        }
        P = a * Q - P;
        Q = (disc - P * P) / Q;
    }
    throw Error(ErrorKind::LoopBudgetExceeded, "continued fraction period exceeds 10^4 steps for " + K.name());
}

const UnitData& unit_data(const NumberField& K)
{
    static std::mutex mutex;
    static std::map<const NumberField*, std::unique_ptr<UnitData>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(&K);
        if (it != cache.end())
            return *it->second;
    }
    auto d = std::make_unique<UnitData>();
    d->eps = compute_fundamental_unit(K);
    auto [l0, l1] = log_embeddings(d->eps);
    d->log_eps = std::max(std::fabs(l0), std::fabs(l1));
    std::lock_guard lock(mutex);
    auto& slot = cache[&K];
    if (!slot)
        slot = std::move(d);
    return *slot;
}

// Multiply by a power of the fundamental unit so both embeddings have
// comparable size.
FieldElt balance(const FieldElt& x, int parity_step)
{
    const NumberField& K = x.field();
    if (K.degree() != 2 || !K.is_real())
        return x;
    const auto& U = unit_data(K);
    auto [l0, l1] = log_embeddings(x);
    auto [e0, e1] = log_embeddings(U.eps);
    // x * eps^k has logs l0 + k e0, l1 + k e1 with e1 = -e0.
    double k = (l1 - l0) / (e0 - e1);
    long kk = std::lround(k / parity_step) * parity_step;
    if (kk == 0)
        return x;
    return x * pow(U.eps, kk);
}

// prod P^e = rho * J with J small and integral.
struct ScaledIdeal {
    Ideal J;
    FieldElt rho;
};

ScaledIdeal shrink(const ScaledIdeal& in, const QuadraticShape& s)
{
    auto [J1, g1] = reduce_ideal(in.J, s);
    auto [J2, g2] = reduce_ideal(J1, s);
    return {J2, in.rho * g1 / g2};
}

ScaledIdeal ideal_product(const NumberField& K, const std::vector<std::pair<PrimeIdeal, long>>& factors,
                          const QuadraticShape& s)
{
    ScaledIdeal acc{Ideal::unit(K), K.one()};
    const Int limit = 16 * (abs(s.disc) + 1);
    for (const auto& [P, e] : factors) {
        if (e == 0)
            continue;
        Ideal base = Ideal::of(P);
        if (e < 0) {
            base = base.conj();
            acc.rho *= K.from_rat(Rat(1) / Rat(pow(P.norm(), static_cast<unsigned long>(-e))));
        }
        for (long i = 0; i < std::labs(e); ++i) {
            acc.J = acc.J * base;
            if (acc.J.norm() > limit)
                acc = shrink(acc, s);
        }
    }
    if (acc.J.norm() > limit)
        acc = shrink(acc, s);
    return acc;
}

} // namespace

// ---------------------------------------------------------------- presentation

Int AbelianGroupPresentation::order() const
{
    Int h = 1;
    for (const auto& d : elementary_divisors)
        h *= d;
    return h;
}

int AbelianGroupPresentation::two_rank() const
{
    int r = 0;
    for (const auto& d : elementary_divisors)
        if (mpz_even_p(d.get_mpz_t()))
            ++r;
    return r;
}

// ---------------------------------------------------------------- principality

std::optional<FieldElt> is_principal(const Ideal& I)
{
    const NumberField& K = I.field();
    if (K.degree() == 1)
        return K.from_int(I.a());
    if (K.degree() != 2)
        throw Error(ErrorKind::Unsupported, "principal ideal test needs degree <= 2");
    auto s = shape_of(K);
    auto [J, gamma] = reduce_ideal(I, s);
    auto delta = search_small_generator(J, s);
    if (!delta)
        return std::nullopt;
    // I = gamma * J^-1 = (gamma / delta)
    return balance(gamma / *delta, 1);
}

FieldElt fundamental_unit(const NumberField& K)
{
    if (K.degree() != 2 || !K.is_real())
        throw Error(ErrorKind::Unsupported, "fundamental unit requested for " + K.name());
    return unit_data(K).eps;
}

FieldElt small_square_class_rep(const FieldElt& x)
{
    const NumberField& K = x.field();
    FieldElt y = square_reduce(x);
    if (K.degree() != 2)
        return y;
    IdealFactorization fac;
    try {
        fac = factor_principal(y);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::FactorizationFailed)
            return balance(y, 2);
        throw;
    }
    std::vector<std::pair<PrimeIdeal, int>> half;
    for (const auto& [P, e] : fac.factors)
        if (e >= 2)
            half.emplace_back(P, e / 2);
    if (half.empty())
        return balance(y, 2);
    const ClassGroup& G = ClassGroup::of(K);
    std::vector<Int> g = G.log(half);
    for (auto& c : g)
        c = -c;
    g = G.reduce(g);
    Int extra = 1;
    if (std::any_of(g.begin(), g.end(), [](const Int& c) { return c != 0; })) {
        PrimeCursor cursor;
        std::vector<PrimeIdeal> none;
        for (int tries = 0;; ++tries) {
            if (tries > 5000)
                return balance(y, 2);
            PrimeIdeal Q = next_prime_outside(K, none, cursor);
            if (G.reduce(G.log(Q)) == g) {
                half.emplace_back(Q, 1);
                extra = Q.norm();
                break;
            }
        }
    }
    FieldElt gamma = generator_of(K, half);
    return balance(square_reduce(y * K.from_int(extra * extra) / (gamma * gamma)), 2);
}

FieldElt generator_of(const NumberField& K, const std::vector<std::pair<PrimeIdeal, int>>& factors)
{
    if (K.degree() == 1) {
        Rat x = 1;
        for (const auto& [P, e] : factors)
            x *= e >= 0 ? Rat(pow(P.under(), static_cast<unsigned long>(e)))
                        : Rat(1) / Rat(pow(P.under(), static_cast<unsigned long>(-e)));
        return K.from_rat(x);
    }
    if (K.degree() != 2)
        throw Error(ErrorKind::Unsupported, "ideal generators need degree <= 2");
    auto s = shape_of(K);
    std::vector<std::pair<PrimeIdeal, long>> f;
    for (const auto& [P, e] : factors)
        f.emplace_back(P, e);
    auto acc = ideal_product(K, f, s);
    auto delta = is_principal(acc.J);
    if (!delta)
        throw Error(ErrorKind::Internal, "ideal product is not principal");
    return balance(acc.rho * *delta, 1);
}

// ---------------------------------------------------------------- class group

ClassGroup::ClassGroup(const NumberField& K) : field_(&K)
{
    if (K.degree() == 1)
        return;
    if (K.degree() != 2)
        throw Error(ErrorKind::Unsupported, "class groups need degree <= 2");
    auto s = shape_of(K);
    const double D = std::fabs(s.disc.get_d());
    const double bound = s.disc < 0 ? (2.0 / M_PI) * std::sqrt(D) : 0.5 * std::sqrt(D);
    auto& fb = pres_.generators;
    fb = primes_up_to(K, Int(static_cast<long>(std::floor(bound))));
    const std::size_t n = fb.size();
    if (n == 0)
        return;
    auto index_of = [&](const PrimeIdeal& P) -> long {
        for (std::size_t i = 0; i < n; ++i)
            if (fb[i] == P)
                return static_cast<long>(i);
        return -1;
    };
    IntMatrix& R = pres_.relations;
    std::vector<Int> seen;
    for (const auto& P : fb) {
        if (std::find(seen.begin(), seen.end(), P.under()) != seen.end())
            continue;
        seen.push_back(P.under());
        Vec row(n, Int(0));
        for (const auto& Q : primes_above(K, P.under())) {
            long i = index_of(Q);
            if (i >= 0)
                row[i] = Q.ram_index();
        }
        R.push_back(row);
    }
    long box = 8;
    long done_box = 0;
    auto add_small_relations = [&]() {
        for (long y = 1; y <= box; ++y)
            for (long x = -box; x <= box; ++x) {
                if (y <= done_box && std::labs(x) <= done_box)
                    continue;
                Vec w{Int(x), Int(y)};
                if (abs(omega_norm(K, w)) <= 1)
                    continue;
                auto f = factor_principal(K.from_omega(w));
                Vec row(n, Int(0));
                bool smooth = true;
                for (const auto& [P, e] : f.factors) {
                    long i = index_of(P);
                    if (i < 0) {
                        smooth = false;
                        break;
                    }
                    row[i] = e;
                }
                if (smooth)
                    R.push_back(row);
            }
        done_box = box;
    };
    add_small_relations();
    for (int round = 0; round < 64; ++round) {
        auto snf = smith_normal_form(R, n);
        bool full_rank = true;
        for (const auto& d : snf.diagonal)
            if (d == 0)
                full_rank = false;
        if (!full_rank) {
            box *= 2;
            add_small_relations();
            continue;
        }
        V_ = snf.V;
        Vinv_ = snf.Vinv;
        kept_.clear();
        pres_.elementary_divisors.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (snf.diagonal[i] > 1) {
                kept_.push_back(i);
                pres_.elementary_divisors.push_back(snf.diagonal[i]);
            }
        // Certify: no nontrivial element may have a principal representative.
        bool certified = true;
        for (const auto& g : elements()) {
            bool zero = std::all_of(g.begin(), g.end(), [](const Int& c) { return c == 0; });
            if (zero)
                continue;
            if (is_principal(representative(g))) {
                Vec y(n, Int(0));
                for (std::size_t i = 0; i < kept_.size(); ++i)
                    y[kept_[i]] = g[i];
                R.push_back(row_times(y, Vinv_));
                certified = false;
                break;
            }
        }
        if (certified)
            return;
    }
    throw Error(ErrorKind::LoopBudgetExceeded, "class group certification did not converge for " + K.name());
}

const ClassGroup& ClassGroup::of(const NumberField& K)
{
    static std::mutex mutex;
    static std::map<const NumberField*, std::unique_ptr<ClassGroup>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(&K);
    if (it == cache.end())
        it = cache.emplace(&K, std::make_unique<ClassGroup>(K)).first;
    return *it->second;
}

std::vector<Int> ClassGroup::reduce(std::vector<Int> g) const
{
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = mod(g[i], pres_.elementary_divisors[i]);
    return g;
}

std::vector<std::vector<Int>> ClassGroup::elements() const
{
    const auto& d = pres_.elementary_divisors;
    std::vector<std::vector<Int>> out;
    Vec g(d.size(), Int(0));
    for (;;) {
        out.push_back(g);
        std::size_t i = 0;
        while (i < d.size()) {
            g[i] += 1;
            if (g[i] < d[i])
                break;
            g[i] = 0;
            ++i;
        }
        if (i == d.size())
            break;
    }
    return out;
}

Ideal ClassGroup::representative(const std::vector<Int>& g) const
{
    const NumberField& K = *field_;
    if (kept_.empty())
        return Ideal::unit(K);
    const std::size_t n = pres_.generators.size();
    Vec y(n, Int(0));
    for (std::size_t i = 0; i < kept_.size(); ++i)
        y[kept_[i]] = g[i];
    Vec x = row_times(y, Vinv_);
    std::vector<std::pair<PrimeIdeal, long>> f;
    for (std::size_t i = 0; i < n; ++i)
        f.emplace_back(pres_.generators[i], x[i].get_si());
    auto s = shape_of(K);
    return ideal_product(K, f, s).J;
}

std::vector<Int> ClassGroup::log_of_factor_base(std::size_t i) const
{
    Vec g;
    for (std::size_t k : kept_)
        g.push_back(V_[i][k]);
    return reduce(g);
}

std::vector<Int> ClassGroup::log(const PrimeIdeal& P) const
{
    if (kept_.empty())
        return {};
    for (std::size_t i = 0; i < pres_.generators.size(); ++i)
        if (pres_.generators[i] == P)
            return log_of_factor_base(i);
    for (const auto& [Q, g] : log_cache_)
        if (Q == P)
            return g;
    for (const auto& g : elements())
        if (is_principal(Ideal::of(P) * representative(g).conj())) {
            log_cache_.emplace_back(P, g);
            return g;
        }
    throw Error(ErrorKind::Internal, "no class found for " + P.str());
}

std::vector<Int> ClassGroup::log(const std::vector<std::pair<PrimeIdeal, int>>& factors) const
{
    Vec g(kept_.size(), Int(0));
    for (const auto& [P, e] : factors) {
        auto l = log(P);
        for (std::size_t i = 0; i < g.size(); ++i)
            g[i] += e * l[i];
    }
    return reduce(g);
}

AbelianGroupPresentation class_group(const NumberField& K)
{
    return ClassGroup::of(K).presentation();
}

AbelianGroupPresentation s_class_group(const NumberField& K, const std::vector<PrimeIdeal>& S)
{
    const auto& G = ClassGroup::of(K);
    AbelianGroupPresentation out;
    const auto& d = G.invariants();
    out.generators = G.presentation().generators;
    if (d.empty())
        return out;
    // Work in the cyclic coordinates of the class group directly.
    IntMatrix A;
    for (std::size_t i = 0; i < d.size(); ++i) {
        Vec row(d.size(), Int(0));
        row[i] = d[i];
        A.push_back(row);
    }
    for (const auto& P : S)
        A.push_back(G.log(P));
    out.relations = A;
    auto snf = smith_normal_form(A, d.size());
    for (const auto& e : snf.diagonal)
        if (e > 1)
            out.elementary_divisors.push_back(e);
    return out;
}

// ---------------------------------------------------------------- S-units

std::vector<FieldElt> s_units_mod_squares(const NumberField& K, const std::vector<PrimeIdeal>& S)
{
    if (K.degree() > 2)
        throw Error(ErrorKind::Unsupported, "S-units need degree <= 2");
    std::vector<FieldElt> out;
    if (K.degree() == 2 && K.radicand() == -1)
        out.push_back(K.theta());
    else
        out.push_back(-K.one());
    if (K.degree() == 2 && K.is_real())
        out.push_back(fundamental_unit(K));
    if (S.empty())
        return out;
    const auto& G = ClassGroup::of(K);
    IntMatrix kernel;
    if (G.invariants().empty()) {
        kernel = identity_matrix(S.size());
    } else {
        IntMatrix images;
        for (const auto& P : S)
            images.push_back(G.log(P));
        kernel = kernel_lattice(images, G.invariants());
    }
    for (const auto& row : kernel) {
        std::vector<std::pair<PrimeIdeal, int>> f;
        for (std::size_t i = 0; i < S.size(); ++i)
            if (row[i] != 0)
                f.emplace_back(S[i], static_cast<int>(row[i].get_si()));
        FieldElt g = generator_of(K, f);
        const auto c = K.to_omega(g);
        if (!std::all_of(c.begin(), c.end(), [](const Rat& r) { return r.get_den() == 1; }))
            g = square_reduce(g);
        out.push_back(balance(g, 2));
    }
    return out;
}

SingularBasis singular_group_basis(const NumberField& K, const std::vector<PrimeIdeal>& S)
{
    SingularBasis out;
    out.field = &K;
    out.S = S;
    out.basis = s_units_mod_squares(K, S);
    out.unit_part_size = static_cast<int>(out.basis.size());
    if (K.degree() == 1)
        return out;
    const auto& G = ClassGroup::of(K);
    const auto& d = G.invariants();
    if (d.empty())
        return out;
    const std::size_t r = d.size();
    // C_S = Cl / <[P] : P in S> in Smith coordinates.
    IntMatrix A;
    for (std::size_t i = 0; i < r; ++i) {
        Vec row(r, Int(0));
        row[i] = d[i];
        A.push_back(row);
    }
    for (const auto& P : S)
        A.push_back(G.log(P));
    auto snf = smith_normal_form(A, r);
    std::vector<std::size_t> even;
    for (std::size_t j = 0; j < r; ++j)
        if (mpz_even_p(snf.diagonal[j].get_mpz_t()))
            even.push_back(j);
    if (even.empty())
        return out;
    auto cs_coords = [&](const Vec& g) {
        Vec c = row_times(g, snf.V);
        for (std::size_t j = 0; j < r; ++j)
            c[j] = mod(c[j], snf.diagonal[j]);
        return c;
    };
    F2Matrix found;
    PrimeCursor cursor;
    for (int probes = 0; found.size() < even.size(); ++probes) {
        if (probes >= 10000)
            throw Error(ErrorKind::LoopBudgetExceeded, "no primes found for the 2-torsion of the S-class group");
        PrimeIdeal P = next_prime_outside(K, S, cursor);
        Vec c = cs_coords(G.log(P));
        bool two_torsion = true;
        F2Row bits;
        for (std::size_t j = 0; j < r; ++j) {
            if (mod(2 * c[j], snf.diagonal[j]) != 0)
                two_torsion = false;
        }
        if (!two_torsion)
            continue;
        for (std::size_t j : even)
            bits.push_back(c[j] != 0 ? 1 : 0);
        auto trial = found;
        trial.push_back(bits);
        if (f2_rank(trial) == static_cast<int>(trial.size())) {
            found = trial;
            out.class_primes.push_back(P);
        }
    }
    // lambda_b generates b^2 * prod_{P in S} P^{n_P}.
    for (const auto& B : out.class_primes) {
        Vec t = G.log(B);
        for (auto& x : t)
            x = -2 * x;
        Vec tv = row_times(t, snf.V);
        Vec w(A.size(), Int(0));
        for (std::size_t j = 0; j < r; ++j) {
            if (!mpz_divisible_p(tv[j].get_mpz_t(), snf.diagonal[j].get_mpz_t()))
                throw Error(ErrorKind::Internal, "square of a 2-torsion class is not in the S-subgroup");
            w[j] = tv[j] / snf.diagonal[j];
        }
        Vec z = row_times(w, snf.U);
        std::vector<std::pair<PrimeIdeal, int>> f{{B, 2}};
        for (std::size_t i = 0; i < S.size(); ++i)
            if (z[r + i] != 0)
                f.emplace_back(S[i], static_cast<int>(z[r + i].get_si()));
        out.basis.push_back(balance(generator_of(K, f), 2));
    }
    out.class_part_size = static_cast<int>(out.class_primes.size());
    return out;
}

} // namespace qf
