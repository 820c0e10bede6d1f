#include "qfwitt/poly.hpp"

#include "qfwitt/error.hpp"

#include <algorithm>

namespace qf {

Interval operator+(const Interval& a, const Interval& b)
{
    return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator*(const Interval& a, const Interval& b)
{
    Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs))
{
    trim();
}

QPoly QPoly::from_ints(const std::vector<Int>& coeffs)
{
    std::vector<Rat> c(coeffs.begin(), coeffs.end());
    return QPoly(std::move(c));
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rat QPoly::operator()(const Rat& x) const
{
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Interval QPoly::eval(const Interval& x) const
{
    Interval acc{0, 0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + Interval{*it, *it};
    return acc;
}

QPoly QPoly::derivative() const
{
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<long>(i));
    return QPoly(std::move(d));
}

QPoly operator-(const QPoly& a)
{
    std::vector<Rat> c = a.c_;
    for (auto& x : c)
        x = -x;
    return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b)
{
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] += b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b)
{
    return a + (-b);
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

namespace {

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b)
{
    if (b.is_zero())
        throw Error(ErrorKind::ZeroDivision, "polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    std::vector<Rat> q(std::max(0, a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Rat f = r[i] / b.lead();
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= f * b.coeffs()[j];
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

int sign(const Rat& x)
{
    return sgn(x);
}

int sign_changes(const std::vector<QPoly>& seq, const Rat& x)
{
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sign(p(x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

QPoly operator%(const QPoly& a, const QPoly& b)
{
    return divmod(a, b).second;
}

QPoly operator/(const QPoly& a, const QPoly& b)
{
    return divmod(a, b).first;
}

std::vector<QPoly> sturm_sequence(const QPoly& f)
{
    std::vector<QPoly> seq{f, f.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        QPoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero())
            break;
        seq.push_back(std::move(r));
    }
    return seq;
}

int count_roots(const std::vector<QPoly>& sturm, const Rat& a, const Rat& b)
{
    return sign_changes(sturm, a) - sign_changes(sturm, b);
}

std::vector<Interval> isolate_real_roots(const QPoly& f)
{
    if (f.degree() < 1)
        return {};
    // Cauchy bound, rounded up to an integer.
    Rat bound = 0;
    for (const auto& c : f.coeffs())
        bound = std::max(bound, Rat(abs(c / f.lead())));
    Rat b = Rat(ceil(bound)) + 1;
    auto sturm = sturm_sequence(f);

    std::vector<Interval> out;
    std::vector<Interval> stack{{-b, b}};
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        int n = count_roots(sturm, iv.lo, iv.hi);
        if (n == 0)
            continue;
        if (n == 1 && f(iv.hi) != 0) {
            out.push_back(iv);
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        if (f(mid) == 0) {
            // Nudge the split point off a rational root.
            Rat eps = iv.width() / 8;
            while (count_roots(sturm, mid - eps, mid + eps) > 1 || f(mid - eps) == 0 || f(mid + eps) == 0)
                eps /= 2;
            stack.push_back({mid + eps, iv.hi});
            stack.push_back({mid - eps, mid + eps});
            stack.push_back({iv.lo, mid - eps});
            continue;
        }
        stack.push_back({mid, iv.hi});
        stack.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

Interval bisect_root(const QPoly& f, const Interval& iv)
{
    Rat mid = (iv.lo + iv.hi) / 2;
    Rat fm = f(mid);
    if (fm == 0) {
        Rat eps = iv.width() / 4;
        return {mid - eps, mid + eps};
    }
    if (sgn(f(iv.lo)) * sgn(fm) < 0)
        return {iv.lo, mid};
    return {mid, iv.hi};
}

} // namespace qf
