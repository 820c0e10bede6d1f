#include "qfwitt/signs.hpp"

#include "qfwitt/error.hpp"
#include "qfwitt/local.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace qf {

const std::vector<FieldElt>& place_separators(const NumberField& K)
{
    static std::mutex mutex;
    static std::map<const NumberField*, std::unique_ptr<std::vector<FieldElt>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[&K];
    if (!slot) {
        auto etas = std::make_unique<std::vector<FieldElt>>();
        const FieldElt t = K.theta();
        for (int i = 0; i < K.num_real_places(); ++i) {
            auto iv = K.real_place(i).isolating_interval;
            etas->push_back((t - K.from_rat(iv.lo)) * (t - K.from_rat(iv.hi)));
        }
        slot = std::move(etas);
    }
    return *slot;
}

FieldElt ordering_separation(const NumberField& K, const std::vector<int>& negatives)
{
    const int r = K.num_real_places();
    for (int i : negatives)
        if (i < 0 || i >= r)
            throw Error(ErrorKind::Internal, "sign pattern index " + std::to_string(i) + " out of range");
    const auto& etas = place_separators(K);
    FieldElt rho = K.one();
    for (int i : negatives)
        rho *= etas[i];
    for (int j = 0; j < r; ++j) {
        bool neg = std::find(negatives.begin(), negatives.end(), j) != negatives.end();
        if (sign_at(rho, j) != (neg ? -1 : 1))
            throw Error(ErrorKind::Internal, "separator has the wrong sign at place " + std::to_string(j));
    }
    return rho;
}

FieldElt positive_approximation(const NumberField& K, const std::vector<CrtTarget>& data, unsigned long extra)
{
    if (data.empty())
        return K.one();
    FieldElt beta = crt(data);
    const int r = K.num_real_places();
    // s lies in every P_i^k_i.
    std::map<Int, int> m;
    for (const auto& t : data)
        m[t.prime.under()] = std::max(m[t.prime.under()], t.exponent);
    Int s = 1;
    for (const auto& [p, k] : m)
        s *= pow(p, static_cast<unsigned long>(k));
    if (r == 0)
        return beta + K.from_int(s * extra);
    bool positive = !beta.is_zero();
    for (int j = 0; positive && j < r; ++j)
        positive = sign_at(beta, j) > 0;
    if (positive)
        return beta + K.from_int(s * extra);
    Rat bound = 0;
    for (int j = 0; j < r; ++j) {
        Interval iv = embed(-beta, j, Rat(1));
        bound = std::max(bound, iv.hi);
    }
    Int t = 1;
    while (Rat(t * s) <= bound)
        t *= 2;
    t = 2 * t + extra;
    FieldElt alpha = beta + K.from_int(t * s);
    for (int j = 0; j < r; ++j)
        if (sign_at(alpha, j) <= 0)
            throw Error(ErrorKind::Internal, "positive approximation is not totally positive");
    return alpha;
}

FieldElt strong_ordering_separation(const NumberField& K, const std::vector<int>& negatives,
                                    const std::vector<PrimeIdeal>& S, unsigned long extra)
{
    FieldElt a1 = ordering_separation(K, negatives);
    Int D = a1.denominator();
    a1 = a1 * Rat(D * D);
    std::vector<CrtTarget> data;
    for (const auto& P : S) {
        int k = 1 + ord_at(K.from_int(4), P) + ord_at(a1, P);
        data.push_back({P, k, a1});
    }
    FieldElt a2 = positive_approximation(K, data, extra);
    FieldElt rho = a1 * a2;
    for (const auto& P : S)
        if (!is_local_square(rho, P))
            throw Error(ErrorKind::Internal, "strong separator is not a local square at " + P.str());
    return rho;
}

} // namespace qf
