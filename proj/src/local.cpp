#include "qfwitt/local.hpp"

#include "qfwitt/error.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qf {

namespace {

int ord_two(const PrimeIdeal& P)
{
    return P.is_dyadic() ? P.ram_index() : 0;
}

// x times an even power of the uniformizer, so that its valuation is 0 or 1.
FieldElt strip_even_valuation(const FieldElt& x, const PrimeIdeal& P, int& parity)
{
    int v = ord_at(x, P);
    parity = ((v % 2) + 2) % 2;
    int shift = v - parity;
    if (shift == 0)
        return x;
    return x * pow(P.uniformizer(), -shift);
}

F2Vec add(F2Vec a, const F2Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] ^= b[i];
    return a;
}

bool is_zero_vec(const F2Vec& a)
{
    for (auto c : a)
        if (c)
            return false;
    return true;
}

} // namespace

std::string Place::str() const
{
    switch (kind) {
    case Kind::Real: return "real[" + std::to_string(index) + "]";
    case Kind::Complex: return "complex";
    case Kind::Finite: return prime.str();
    }
    return "?";
}

// ---------------------------------------------------------------- search

int hilbert_by_search(const FieldElt& a0, const FieldElt& b0, const PrimeIdeal& P)
{
    if (a0.is_zero() || b0.is_zero())
        throw Error(ErrorKind::ZeroSign, "Hilbert symbol of zero");
    int alpha = 0, beta = 0;
    FieldElt a = strip_even_valuation(a0, P, alpha);
    FieldElt b = strip_even_valuation(b0, P, beta);
    const int e = ord_two(P);
    const int N = 2 * e + 1 + alpha + beta;
    LocalRing R(P, N);
    const std::size_t size = R.size();
    std::vector<std::size_t> square(size);
    std::vector<int> ordv(size), root_ord(size, -1);
    for (std::size_t i = 0; i < size; ++i) {
        auto z = R.from_index(i);
        ordv[i] = R.ord(z);
        square[i] = R.index(R.mul(z, z));
        int& r = root_ord[square[i]];
        if (r < 0 || ordv[i] < r)
            r = ordv[i];
    }
    auto ar = R.reduce(a), br = R.reduce(b);
    std::vector<LocalRing::Elem> ax(size), by(size);
    for (std::size_t i = 0; i < size; ++i) {
        auto s = R.from_index(square[i]);
        ax[i] = R.mul(ar, s);
        by[i] = R.mul(br, s);
    }
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) {
            if (ordv[x] != 0 && ordv[y] != 0)
                continue;
            std::size_t t = R.index(R.add(ax[x], by[y]));
            int ro = root_ord[t];
            if (ro < 0)
                continue;
            int m = std::min({e + alpha + ordv[x], e + beta + ordv[y], e + ro});
            if (N > 2 * m)
                return 1;
        }
    return -1;
}

// ---------------------------------------------------------------- square classes

SquareClassSpace::SquareClassSpace(const PrimeIdeal& P) : P_(P)
{
    if (P.is_dyadic())
        build_dyadic();
    else
        build_nondyadic();
}

int SquareClassSpace::unit_character(const FieldElt& unit) const
{
    const Int& p = P_.under();
    auto z = residue(unit, P_, 1);
    Int r = (P_.is_inert() && P_.field().degree() == 2) ? omega_norm(P_.field(), z) : z[0];
    int l = legendre(r, p);
    if (l == 0)
        throw Error(ErrorKind::Internal, unit.str() + " is not a unit at " + P_.str());
    return l < 0 ? 1 : 0;
}

void SquareClassSpace::build_nondyadic()
{
    const NumberField& K = P_.field();
    const Int& p = P_.under();
    if (P_.is_inert() && K.degree() == 2) {
        bool found = false;
        for (Int b = 1; !found && b < p; ++b)
            for (Int a = 0; a < p; ++a) {
                std::vector<Int> z{a, b};
                if (legendre(omega_norm(K, z), p) == -1) {
                    u_ = K.from_omega(z);
                    found = true;
                    break;
                }
            }
    } else {
        for (Int n = 2;; ++n)
            if (legendre(n, p) == -1) {
                u_ = K.from_int(n);
                break;
            }
    }
    basis_ = {P_.uniformizer(), u_};
    std::uint8_t c = static_cast<std::uint8_t>(unit_character(-K.one()));
    M_ = {{c, 1}, {1, 0}};
}

void SquareClassSpace::build_dyadic()
{
    unit_precision_ = 2 * P_.ram_index() + 1;
    ring_ = std::make_unique<LocalRing>(P_, unit_precision_);
    const LocalRing& R = *ring_;
    const std::size_t size = R.size();
    std::vector<std::size_t> units;
    std::vector<char> is_square(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
        auto z = R.from_index(i);
        if (R.is_unit(z)) {
            units.push_back(i);
            is_square[R.index(R.mul(z, z))] = 1;
        }
    }
    // Grow the subgroup of assigned classes one coset generator at a time.
    std::vector<std::size_t> assigned;
    std::vector<std::vector<std::uint8_t>> partial(size);
    std::vector<char> seen(size, 0);
    for (std::size_t i : units)
        if (is_square[i]) {
            assigned.push_back(i);
            seen[i] = 1;
        }
    std::vector<std::size_t> gens;
    for (std::size_t u : units) {
        if (seen[u])
            continue;
        gens.push_back(u);
        const auto ue = R.from_index(u);
        std::vector<std::size_t> fresh;
        for (std::size_t w : assigned) {
            std::size_t prod = R.index(R.mul(ue, R.from_index(w)));
            auto bits = partial[w];
            bits.resize(gens.size(), 0);
            bits.back() = 1;
            partial[prod] = bits;
            seen[prod] = 1;
            fresh.push_back(prod);
        }
        for (std::size_t w : assigned)
            partial[w].resize(gens.size(), 0);
        assigned.insert(assigned.end(), fresh.begin(), fresh.end());
    }
    unit_table_.assign(size, {});
    for (std::size_t i : units) {
        auto bits = partial[i];
        bits.resize(gens.size(), 0);
        unit_table_[i] = bits;
    }
    basis_ = {P_.uniformizer()};
    for (std::size_t g : gens)
        basis_.push_back(R.lift(R.from_index(g)));
    u_ = basis_.at(1);
}

const std::vector<std::vector<std::uint8_t>>& SquareClassSpace::symbol_matrix() const
{
    std::call_once(M_once_, [this] {
        if (!M_.empty())
            return;
        const int m = dim();
        M_.assign(m, std::vector<std::uint8_t>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j)
                M_[i][j] = M_[j][i] = hilbert_by_search(basis_[i], basis_[j], P_) < 0 ? 1 : 0;
    });
    return M_;
}

F2Vec SquareClassSpace::coords(const FieldElt& x) const
{
    if (x.is_zero())
        throw Error(ErrorKind::ZeroSign, "square class of zero");
    int v = ord_at(x, P_);
    FieldElt unit = v == 0 ? x : x * pow(P_.uniformizer(), -v);
    F2Vec out(dim(), 0);
    out[0] = static_cast<std::uint8_t>(v & 1);
    if (!P_.is_dyadic()) {
        out[1] = static_cast<std::uint8_t>(unit_character(unit));
        return out;
    }
    const auto& bits = unit_table_[ring_->index(ring_->reduce(unit))];
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i + 1] = bits[i];
    return out;
}

int SquareClassSpace::pairing(const F2Vec& a, const F2Vec& b) const
{
    const auto& M_ = symbol_matrix();
    int s = 0;
    for (int i = 0; i < dim(); ++i)
        if (a[i])
            for (int j = 0; j < dim(); ++j)
                s ^= (M_[i][j] & b[j]);
    return s;
}

const SquareClassSpace& SquareClassSpace::at(const PrimeIdeal& P)
{
    static std::mutex mutex;
    static std::map<std::tuple<const NumberField*, Int, Int>, std::unique_ptr<SquareClassSpace>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(&P.field(), P.under(), P.root());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<SquareClassSpace>(P)).first;
    return *it->second;
}

// ---------------------------------------------------------------- symbols

bool is_local_square(const FieldElt& x, const PrimeIdeal& P)
{
    return is_zero_vec(SquareClassSpace::at(P).coords(x));
}

F2Vec square_class(const FieldElt& x, const Place& v)
{
    switch (v.kind) {
    case Place::Kind::Real: return {static_cast<std::uint8_t>(sign_at(x, v.index) < 0 ? 1 : 0)};
    case Place::Kind::Complex:
        if (x.is_zero())
            throw Error(ErrorKind::ZeroSign, "square class of zero");
        return {};
    case Place::Kind::Finite: return SquareClassSpace::at(v.prime).coords(x);
    }
    return {};
}

int pairing(const F2Vec& a, const F2Vec& b, const Place& v)
{
    switch (v.kind) {
    case Place::Kind::Real: return a[0] & b[0];
    case Place::Kind::Complex: return 0;
    case Place::Kind::Finite: return SquareClassSpace::at(v.prime).pairing(a, b);
    }
    return 0;
}

int hilbert(const FieldElt& a, const FieldElt& b, const Place& v)
{
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorKind::ZeroSign, "Hilbert symbol of zero");
    return pairing(square_class(a, v), square_class(b, v), v) ? -1 : 1;
}

int hilbert(const FieldElt& a, const FieldElt& b, const PrimeIdeal& P)
{
    return hilbert(a, b, Place::finite(P));
}

int hasse(const DiagonalForm& q, const Place& v)
{
    std::vector<F2Vec> vecs;
    for (const auto& a : q.coeffs())
        vecs.push_back(square_class(a, v));
    int bit = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j)
            bit ^= pairing(vecs[i], vecs[j], v);
    return bit ? -1 : 1;
}

int local_adim(const DiagonalForm& q, const Place& v)
{
    int n = q.dim();
    if (v.kind == Place::Kind::Complex)
        return n % 2;
    if (v.kind == Place::Kind::Real) {
        int sig = 0;
        for (const auto& a : q.coeffs())
            sig += sign_at(a, v.index);
        return std::abs(sig);
    }
    const NumberField& K = q.field();
    const auto& space = SquareClassSpace::at(v.prime);
    std::vector<F2Vec> vecs;
    F2Vec du(space.dim(), 0);
    for (const auto& a : q.coeffs()) {
        vecs.push_back(space.coords(a));
        du = add(du, vecs.back());
    }
    int s = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j)
            s ^= space.pairing(vecs[i], vecs[j]);
    const F2Vec m1 = space.coords(-K.one());
    // Invariants here: unsigned determinant du and Hasse bit s.
    for (;;) {
        switch (n) {
        case 0: return 0;
        case 1: return 1;
        case 2: return is_zero_vec(add(du, m1)) ? 0 : 2;
        case 3: return s == space.pairing(m1, add(m1, du)) ? 1 : 3;
        case 4:
            if (is_zero_vec(du) && s != space.pairing(m1, m1))
                return 4;
            break;
        default: break;
        }
        // Split off a hyperbolic plane.
        s ^= space.pairing(m1, add(m1, du));
        du = add(du, m1);
        n -= 2;
    }
}

FieldElt square_class_rep(const FieldElt& x, const PrimeIdeal& P)
{
    if (P.is_dyadic())
        throw Error(ErrorKind::Unsupported, "square class representatives are tabulated for odd primes only");
    const auto& space = SquareClassSpace::at(P);
    auto c = space.coords(x);
    FieldElt r = P.field().one();
    if (c[0])
        r *= P.uniformizer();
    if (c[1])
        r *= space.nonsquare_unit();
    return r;
}

std::vector<Place> infinite_places(const NumberField& K)
{
    std::vector<Place> out;
    for (int i = 0; i < K.num_real_places(); ++i)
        out.push_back(Place::real(i));
    if (K.num_complex_places() > 0)
        out.push_back(Place::complex());
    return out;
}

} // namespace qf
