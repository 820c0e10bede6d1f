#pragma once

// Brute-force reference computations used to check the library.

#include "qfwitt/diagonal_form.hpp"
#include "qfwitt/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace qf;

/// Isotropy of q over K_P by depth-first lifting of primitive zeros modulo
/// P^k, each coordinate normalised to valuation 0 or 1 first. A node is
/// accepted once Hensel's lemma applies in one coordinate.
inline bool locally_isotropic(const DiagonalForm& q, const PrimeIdeal& P)
{
    const int n = q.dim();
    if (n == 0)
        return false;
    const int e = P.is_dyadic() ? P.ram_index() : 0;
    const int depth = 2 * e + 3;
    std::vector<FieldElt> a;
    std::vector<int> alpha;
    for (const auto& c : q.coeffs()) {
        int v = ord_at(c, P);
        int par = ((v % 2) + 2) % 2;
        FieldElt x = c;
        int shift = v - par;
        if (shift != 0)
            x = x * pow(P.uniformizer(), -shift);
        a.push_back(x);
        alpha.push_back(par);
    }
    std::vector<std::unique_ptr<LocalRing>> rings;
    for (int k = 1; k <= depth; ++k)
        rings.push_back(std::make_unique<LocalRing>(P, k));
    // children[k][i]: indices in ring k+1 reducing to index i of ring k.
    std::vector<std::vector<std::vector<std::size_t>>> children(depth);
    for (int k = 1; k < depth; ++k) {
        const auto& hi = *rings[k];
        const auto& lo = *rings[k - 1];
        children[k - 1].assign(lo.size(), {});
        for (std::size_t j = 0; j < hi.size(); ++j)
            children[k - 1][lo.index(lo.reduce(hi.lift(hi.from_index(j))))].push_back(j);
    }
    std::vector<std::vector<LocalRing::Elem>> coeff(depth);
    for (int k = 0; k < depth; ++k)
        for (const auto& x : a)
            coeff[k].push_back(rings[k]->reduce(x));

    std::function<bool(int, std::vector<std::size_t>&, int)> dfs = [&](int level, std::vector<std::size_t>& v,
                                                                        int fixed) -> bool {
        const LocalRing& R = *rings[level];
        LocalRing::Elem s{0, 0, 0};
        for (int i = 0; i < n; ++i) {
            auto vi = R.from_index(v[i]);
            s = R.add(s, R.mul(coeff[level][i], R.mul(vi, vi)));
        }
        if (!R.is_zero(s))
            return false;
        const int k = level + 1;
        int best = 1 << 20;
        for (int i = 0; i < n; ++i) {
            int o = R.ord(R.from_index(v[i]));
            if (o < k)
                best = std::min(best, e + alpha[i] + o);
        }
        if (k > 2 * best)
            return true;
        if (level + 1 >= depth)
            return false;
        // Enumerate all lifts; the normalised coordinate stays 1.
        std::vector<std::size_t> w(n);
        std::function<bool(int)> rec = [&](int i) -> bool {
            if (i == n)
                return dfs(level + 1, w, fixed);
            if (i == fixed) {
                w[i] = rings[level + 1]->index(rings[level + 1]->reduce(P.field().one()));
                return rec(i + 1);
            }
            for (std::size_t c : children[level][v[i]]) {
                w[i] = c;
                if (rec(i + 1))
                    return true;
            }
            return false;
        };
        return rec(0);
    };

    const LocalRing& R1 = *rings[0];
    const std::size_t one = R1.index(R1.reduce(P.field().one()));
    std::vector<std::size_t> v(n, 0);
    for (int fixed = 0; fixed < n; ++fixed) {
        // Coordinates before `fixed` are non-units, `fixed` is 1, the rest free.
        std::vector<std::size_t> nonunits, all;
        for (std::size_t i = 0; i < R1.size(); ++i) {
            all.push_back(i);
            if (!R1.is_unit(R1.from_index(i)))
                nonunits.push_back(i);
        }
        std::function<bool(int)> rec = [&](int i) -> bool {
            if (i == n)
                return dfs(0, v, fixed);
            if (i == fixed) {
                v[i] = one;
                return rec(i + 1);
            }
            for (std::size_t c : (i < fixed ? nonunits : all)) {
                v[i] = c;
                if (rec(i + 1))
                    return true;
            }
            return false;
        };
        if (rec(0))
            return true;
    }
    return false;
}

/// (a, b)_P from isotropy of <a, b, -1>.
inline int hilbert_symbol(const FieldElt& a, const FieldElt& b, const PrimeIdeal& P)
{
    const auto& K = a.field();
    return locally_isotropic(DiagonalForm(K, {a, b, -K.one()}), P) ? 1 : -1;
}

/// Class number of Q(sqrt d) for d < 0 by counting reduced primitive
/// binary quadratic forms of discriminant D.
inline long class_number_imaginary(long D)
{
    long h = 0;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a)
                continue;
            if (c == a && b < 0)
                continue;
            long g = std::gcd(std::gcd(a, std::labs(b)), c);
            if (g == 1)
                ++h;
        }
    return h;
}

/// Search for a nonzero integral vector (omega coordinates bounded by H) with
/// q(v) = 0. Meet-in-the-middle on the first half of the coordinates.
inline bool bounded_zero_search(const DiagonalForm& q, long H)
{
    const NumberField& K = q.field();
    const int n = q.dim();
    const int deg = K.degree();
    std::vector<FieldElt> elems;
    std::vector<FieldElt> squares;
    std::vector<std::vector<long>> coords;
    std::vector<long> c(deg, -H);
    for (;;) {
        std::vector<Int> w(c.begin(), c.end());
        FieldElt x = K.from_omega(w);
        squares.push_back(x * x);
        coords.push_back(c);
        int i = 0;
        while (i < deg && c[i] == H)
            c[i++] = -H;
        if (i == deg)
            break;
        ++c[i];
    }
    auto key = [](const FieldElt& x) { return x.str(); };
    const int half = n / 2;
    std::map<std::string, bool> left; // value -> some nonzero witness among left coords
    std::function<void(int, FieldElt, bool)> gen_left = [&](int i, FieldElt acc, bool nz) {
        if (i == half) {
            auto k = key(acc);
            auto it = left.find(k);
            if (it == left.end())
                left.emplace(k, nz);
            else
                it->second = it->second || nz;
            return;
        }
        for (std::size_t j = 0; j < squares.size(); ++j) {
            bool z = std::all_of(coords[j].begin(), coords[j].end(), [](long t) { return t == 0; });
            gen_left(i + 1, acc + q[i] * squares[j], nz || !z);
        }
    };
    gen_left(0, K.from_int(0), false);
    bool found = false;
    std::function<void(int, FieldElt, bool)> gen_right = [&](int i, FieldElt acc, bool nz) {
        if (found)
            return;
        if (i == n) {
            auto it = left.find(key(-acc));
            if (it != left.end() && (nz || it->second))
                found = true;
            return;
        }
        for (std::size_t j = 0; j < squares.size(); ++j) {
            bool z = std::all_of(coords[j].begin(), coords[j].end(), [](long t) { return t == 0; });
            gen_right(i + 1, acc + q[i] * squares[j], nz || !z);
        }
    };
    gen_right(half, K.from_int(0), false);
    return found;
}

} // namespace oracle
