#include "qfwitt/aniso.hpp"

#include "qfwitt/class_group.hpp"
#include "qfwitt/error.hpp"
#include "qfwitt/local.hpp"
#include "qfwitt/signs.hpp"
#include "qfwitt/witt.hpp"

#include <algorithm>
#include <map>

namespace qf {

namespace {

constexpr int kCandidateBudget = 40;
constexpr int kEnlargementBudget = 64;

DiagonalForm extended(const DiagonalForm& q, const FieldElt& alpha)
{
    return q + DiagonalForm(q.field(), {-alpha});
}

void require_adim(const DiagonalForm& q, int expected)
{
    const int a = adim(q);
    if (a != expected)
        throw Error(ErrorKind::WrongAdim,
                    "expected anisotropic dimension " + std::to_string(expected) + ", got " + std::to_string(a));
}

// Congruence targets that keep q_a + <-alpha> isotropic at every prime of S.
std::vector<CrtTarget> adim3_targets(const DiagonalForm& q, const std::vector<PrimeIdeal>& S)
{
    const NumberField& K = q.field();
    const FieldElt d = disc(q);
    std::vector<CrtTarget> out;
    for (const auto& P : S) {
        if (ord_at(d, P) % 2 != 0)
            out.push_back({P, 1, d - K.one()});
        else
            out.push_back({P, 2, P.uniformizer()});
    }
    return out;
}

bool cheap(const FieldElt& x)
{
    Rat nm = x.norm();
    return factors_cheaply(nm.get_num()) && factors_cheaply(nm.get_den());
}

// A positive rational integer lying in every P^k of the targets.
Int common_modulus(const std::vector<CrtTarget>& targets)
{
    std::map<Int, int> e;
    for (const auto& t : targets)
        e[t.prime.under()] = std::max(e[t.prime.under()], t.exponent);
    Int m = 1;
    for (const auto& [p, k] : e)
        m *= pow(p, static_cast<unsigned long>(k));
    return m;
}

// Shifts alpha by multiples of the modulus, preferring candidates whose norm
// factors quickly, and returns factor * shifted alpha once it lowers the
// anisotropic dimension to `expected`.
FieldElt first_working_shift(const DiagonalForm& q, const FieldElt& factor, const FieldElt& alpha, const Int& modulus,
                             bool positive_only, int expected)
{
    const NumberField& K = q.field();
    auto candidate = [&](int j) {
        long k = positive_only ? j : (j % 2 == 0 ? j / 2 : -(j + 1) / 2);
        return alpha + K.from_int(modulus * k);
    };
    auto attempt = [&](const FieldElt& cand) -> bool {
        try {
            if (adim(extended(q, cand)) == expected)
                return true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FactorizationFailed)
                throw;
            return false;
        }
        throw Error(ErrorKind::Internal, "constructed element " + cand.str() + " does not lower the anisotropic dimension");
    };
    for (int j = 0; j < kCandidateBudget; ++j) {
        FieldElt c = candidate(j);
        if (!c.is_zero() && cheap(c) && attempt(factor * c))
            return factor * c;
    }
    for (int j = 0; j < 2; ++j)
        if (!candidate(j).is_zero() && attempt(factor * candidate(j)))
            return factor * candidate(j);
    throw Error(ErrorKind::FactorizationFailed, "no candidate with a factorable norm");
}

} // namespace

DiagonalForm normalized(const DiagonalForm& q)
{
    std::vector<FieldElt> c;
    for (const auto& a : q.coeffs())
        c.push_back(small_square_class_rep(a));
    return DiagonalForm(q.field(), c);
}

FieldElt reduce_high(const DiagonalForm& q, int d)
{
    if (d < 4)
        throw Error(ErrorKind::WrongAdim, "reduce_high needs anisotropic dimension at least 4");
    require_adim(q, d);
    const NumberField& K = q.field();
    if (!K.is_real())
        return K.one();
    std::vector<int> negatives;
    for (int i = 0; i < K.num_real_places(); ++i)
        if (signature(q, i) == -d)
            negatives.push_back(i);
    FieldElt alpha = ordering_separation(K, negatives);
    if (adim(extended(q, alpha)) != d - 1)
        throw Error(ErrorKind::Internal, "sign separation did not lower the anisotropic dimension");
    return alpha;
}

FieldElt reduce_adim3(const DiagonalForm& q)
{
    require_adim(q, 3);
    const NumberField& K = q.field();
    const auto S = relevant_primes(q);
    const auto targets = adim3_targets(q, S);
    const Int modulus = common_modulus(targets);
    if (!K.is_real())
        return first_working_shift(q, K.one(), crt(targets), modulus, false, 2);

    std::vector<int> negatives;
    for (int i = 0; i < K.num_real_places(); ++i)
        if (signature(q, i) < 0)
            negatives.push_back(i);
    // Small lattice points with the right congruences and signs have the
    // local behaviour of a1 * a2 on S and at the real places; try those first.
    for (const auto& c : signed_crt_candidates(K, targets, negatives, kCandidateBudget)) {
        if (!cheap(c))
            continue;
        try {
            if (adim(extended(q, c)) == 2)
                return c;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FactorizationFailed)
                throw;
        }
    }
    FieldElt a1 = strong_ordering_separation(K, negatives, S);
    for (unsigned long extra = 1; !cheap(a1) && extra <= kCandidateBudget; ++extra)
        a1 = strong_ordering_separation(K, negatives, S, extra);
    const FieldElt a2 = positive_approximation(K, targets);
    return first_working_shift(q, a1, a2, modulus, true, 2);
}

DiagonalForm binary_part(const DiagonalForm& q_in, ReductionTrace* trace)
{
    require_adim(q_in, 2);
    const NumberField& K = q_in.field();
    const int w = witt_index(q_in);
    const int pad = (4 - w % 4) % 4;
    const DiagonalForm q = q_in.with_hyperbolic(pad);
    const FieldElt d = disc(q);
    std::vector<PrimeIdeal> S = relevant_primes(q);

    F2System sys;
    for (int i = 0; i < K.num_real_places(); ++i)
        if (sign_at(d, i) < 0)
            sys.sign_places.push_back(i);

    std::vector<PrimeIdeal> added;
    PrimeCursor cursor;
    for (int round = 0; round <= kEnlargementBudget; ++round) {
        const SingularBasis sb = singular_group_basis(K, S);
        sys.primes = S;
        sys.columns = sb.basis;
        sys.matrix.clear();
        sys.rhs.clear();
        for (int i : sys.sign_places) {
            const int s = signature(q, i);
            if (s != 2 && s != -2)
                throw Error(ErrorKind::Internal, "unexpected signature " + std::to_string(s));
            F2Row row;
            for (const auto& b : sb.basis)
                row.push_back(sign_at(b, i) < 0 ? 1 : 0);
            sys.matrix.push_back(row);
            sys.rhs.push_back(s == -2 ? 1 : 0);
        }
        for (const auto& P : S) {
            F2Row row;
            for (const auto& b : sb.basis)
                row.push_back(hilbert(b, d, P) == -1 ? 1 : 0);
            sys.matrix.push_back(row);
            sys.rhs.push_back(hasse(q, Place::finite(P)) == -1 ? 1 : 0);
        }
        if (auto eps = f2_solve(sys.matrix, sys.rhs)) {
            FieldElt alpha = K.one();
            for (std::size_t j = 0; j < eps->size(); ++j)
                if ((*eps)[j])
                    alpha *= sb.basis[j];
            alpha = small_square_class_rep(alpha);
            DiagonalForm out(K, {alpha, small_square_class_rep(-alpha * d)});
            if (trace) {
                trace->padding = pad;
                trace->enlarged_primes = added;
                trace->solution_vector = *eps;
                trace->system = sys;
            }
            return out;
        }
        const PrimeIdeal next = next_prime_outside(K, S, cursor);
        added.push_back(next);
        S.push_back(next);
    }
    throw Error(ErrorKind::LoopBudgetExceeded,
                "no solution after " + std::to_string(kEnlargementBudget) + " enlargements of S");
}

void verify_decomposition(const DiagonalForm& q, const DiagonalForm& qa, int w)
{
    if (qa.dim() + 2 * w != q.dim())
        throw Error(ErrorKind::Internal, "dimension mismatch in decomposition");
    if (adim(qa) != qa.dim())
        throw Error(ErrorKind::Internal, "anisotropic part " + qa.str() + " is isotropic");
    if (!forms_equivalent(q, qa.with_hyperbolic(w), Equivalence::Isometric))
        throw Error(ErrorKind::Internal, "invariants of " + qa.str() + " do not match");
}

AnisotropicResult anisotropic_part(const DiagonalForm& q_in)
{
    const NumberField& K = q_in.field();
    const DiagonalForm q = normalized(q_in);
    const int n = q.dim();
    const int d0 = adim(q);
    AnisotropicResult res{DiagonalForm(K, {}), (n - d0) / 2, {}};

    if (d0 == 0) {
        res.part = DiagonalForm(K, {});
    } else if (d0 == n) {
        res.part = q;
        res.trace.final_part = q;
    } else if (d0 == 1) {
        res.part = DiagonalForm(K, {disc(q)});
        res.trace.final_part = res.part;
    } else {
        DiagonalForm cur = q;
        for (int d = d0; d >= 3; --d) {
            FieldElt a = d >= 4 ? reduce_high(cur, d) : reduce_adim3(cur);
            a = small_square_class_rep(a);
            res.trace.alphas.push_back(a);
            cur = extended(cur, a);
        }
        DiagonalForm bin = binary_part(cur, &res.trace);
        res.trace.final_part = bin;
        std::vector<FieldElt> coeffs = res.trace.alphas;
        coeffs.insert(coeffs.end(), bin.coeffs().begin(), bin.coeffs().end());
        res.part = DiagonalForm(K, coeffs);
    }
    verify_decomposition(q_in, res.part, res.witt_index);
    return res;
}

} // namespace qf
