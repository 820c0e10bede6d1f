#include "qfwitt/field.hpp"

#include "qfwitt/error.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <sstream>

namespace qf {

// ---------------------------------------------------------------- fields

NumberField::NumberField(Kind kind, long d) : kind_(kind), d_(d)
{
    switch (kind) {
    case Kind::Rational:
        degree_ = 1;
        f_ = {0, 1};
        g_ = {0, 1};
        disc_ = 1;
        name_ = "Q";
        break;
    case Kind::Quadratic:
        degree_ = 2;
        f_ = {Int(-d), 0, 1};
        if (mod(Int(d), 4) == 1) {
            omega_shifted_ = true;
            g_ = {Int(-(d - 1) / 4), -1, 1};
            disc_ = d;
        } else {
            g_ = f_;
            disc_ = Int(4) * d;
        }
        name_ = "Q(sqrt(" + std::to_string(d) + "))";
        break;
    case Kind::Cubic:
        degree_ = 3;
        f_ = {-1, -3, 0, 1};
        g_ = f_;
        disc_ = 81;
        name_ = "Q[x]/(x^3-3*x-1)";
        break;
    }
    fq_ = QPoly::from_ints(f_);
    if (kind == Kind::Rational)
        real_ = {Interval{-1, 1}};
    else
        real_ = isolate_real_roots(fq_);
}

RealPlace NumberField::real_place(int i) const
{
    std::lock_guard lock(real_mutex_);
    return RealPlace{i, real_.at(i)};
}

RealPlace NumberField::refine(int i) const
{
    std::lock_guard lock(real_mutex_);
    auto& iv = real_.at(i);
    if (kind_ == Kind::Rational)
        iv = Interval{iv.lo / 2, iv.hi / 2};
    else
        iv = bisect_root(fq_, iv);
    return RealPlace{i, iv};
}

std::vector<Rat> NumberField::to_omega(const FieldElt& x) const
{
    std::vector<Rat> c = x.coeffs();
    if (omega_shifted_) {
        // c0 + c1 theta = (c0 - c1) + 2 c1 omega
        return {c[0] - c[1], 2 * c[1]};
    }
    return c;
}

FieldElt NumberField::from_omega(const std::vector<Rat>& w) const
{
    if (omega_shifted_)
        return FieldElt(*this, {w[0] + w[1] / 2, w[1] / 2});
    return FieldElt(*this, w);
}

FieldElt NumberField::from_omega(const std::vector<Int>& w) const
{
    return from_omega(std::vector<Rat>(w.begin(), w.end()));
}

FieldElt NumberField::omega() const
{
    if (degree_ == 1)
        return from_int(0);
    std::vector<Rat> w(degree_, Rat(0));
    w[1] = 1;
    return from_omega(w);
}

FieldElt NumberField::theta() const
{
    std::vector<Rat> c(degree_, Rat(0));
    if (degree_ > 1)
        c[1] = 1;
    return FieldElt(*this, c);
}

FieldElt NumberField::one() const
{
    return from_int(1);
}

FieldElt NumberField::from_int(const Int& n) const
{
    return from_rat(Rat(n));
}

FieldElt NumberField::from_rat(const Rat& n) const
{
    std::vector<Rat> c(degree_, Rat(0));
    c[0] = n;
    return FieldElt(*this, c);
}

namespace {

std::mutex g_fields_mutex;

template <class Make>
const NumberField& intern(const std::string& key, Make make)
{
    static std::map<std::string, std::unique_ptr<NumberField>> registry;
    std::lock_guard lock(g_fields_mutex);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, make()).first;
    return *it->second;
}

} // namespace

const NumberField& rationals()
{
    return intern("Q", [] { return std::unique_ptr<NumberField>(new NumberField(NumberField::Kind::Rational, 1)); });
}

const NumberField& quadratic_field(long d)
{
    if (d == 0 || d == 1 || !is_squarefree(Int(d)))
        throw Error(ErrorKind::InvalidField, "Q(sqrt(" + std::to_string(d) + ")) needs squarefree d not in {0, 1}");
    return intern("Q2:" + std::to_string(d),
                  [d] { return std::unique_ptr<NumberField>(new NumberField(NumberField::Kind::Quadratic, d)); });
}

const NumberField& simplest_cubic()
{
    return intern("C3", [] { return std::unique_ptr<NumberField>(new NumberField(NumberField::Kind::Cubic, 0)); });
}

const NumberField& make_field(std::string_view spec)
{
    std::string s;
    for (char ch : spec)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s == "Q" || s == "QQ")
        return rationals();
    if (s == "Q[x]/(x^3-3*x-1)" || s == "Q[x]/(x^3-3x-1)" || s == "cubic")
        return simplest_cubic();
    std::string body;
    if (s.rfind("Q(sqrt(", 0) == 0 && s.size() > 9 && s.substr(s.size() - 2) == "))")
        body = s.substr(7, s.size() - 9);
    else if (s.rfind("Q(sqrt", 0) == 0 && s.back() == ')')
        body = s.substr(6, s.size() - 7);
    else
        throw Error(ErrorKind::InvalidField, "unrecognized field '" + std::string(spec) + "'");
    long d = 0;
    std::size_t used = 0;
    try {
        d = std::stol(body, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidField, "bad radicand in '" + std::string(spec) + "'");
    }
    if (used != body.size())
        throw Error(ErrorKind::InvalidField, "bad radicand in '" + std::string(spec) + "'");
    return quadratic_field(d);
}

// ---------------------------------------------------------------- elements

FieldElt::FieldElt(const NumberField& field, std::vector<Rat> coeffs) : field_(&field), c_(std::move(coeffs))
{
    if (static_cast<int>(c_.size()) != field.degree())
        throw Error(ErrorKind::Internal, "coefficient count does not match field degree");
    for (auto& x : c_)
        x.canonicalize();
}

void FieldElt::check_same_field(const FieldElt& o) const
{
    if (field_ != o.field_)
        throw Error(ErrorKind::FieldMismatch, "elements of different fields");
}

bool FieldElt::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool FieldElt::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

FieldElt& FieldElt::operator+=(const FieldElt& o)
{
    check_same_field(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

FieldElt& FieldElt::operator-=(const FieldElt& o)
{
    check_same_field(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

FieldElt& FieldElt::operator*=(const FieldElt& o)
{
    check_same_field(o);
    const int n = field_->degree();
    if (n == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (n == 2) {
        const long d = field_->radicand();
        Rat a = c_[0] * o.c_[0] + c_[1] * o.c_[1] * d;
        Rat b = c_[0] * o.c_[1] + c_[1] * o.c_[0];
        c_[0] = a;
        c_[1] = b;
        return *this;
    }
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            prod[i + j] += c_[i] * o.c_[j];
    const auto& f = field_->def_poly();
    for (int k = 2 * n - 2; k >= n; --k) {
        if (prod[k] == 0)
            continue;
        for (int j = 0; j < n; ++j)
            prod[k - n + j] -= prod[k] * f[j];
        prod[k] = 0;
    }
    for (int i = 0; i < n; ++i)
        c_[i] = prod[i];
    return *this;
}

namespace {

// Matrix of multiplication by x in the power basis (column j = x * theta^j).
std::vector<std::vector<Rat>> mult_matrix(const FieldElt& x)
{
    const int n = x.field().degree();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    FieldElt basis = x.field().one();
    for (int j = 0; j < n; ++j) {
        FieldElt col = x * basis;
        for (int i = 0; i < n; ++i)
            m[i][j] = col[i];
        basis *= x.field().theta();
    }
    return m;
}

Rat det(std::vector<std::vector<Rat>> m)
{
    const int n = static_cast<int>(m.size());
    Rat result = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            result = -result;
        }
        result *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            Rat f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return result;
}

} // namespace

Rat FieldElt::norm() const
{
    switch (field_->degree()) {
    case 1: return c_[0];
    case 2: return c_[0] * c_[0] - c_[1] * c_[1] * field_->radicand();
    default: return det(mult_matrix(*this));
    }
}

Rat FieldElt::trace() const
{
    auto m = mult_matrix(*this);
    Rat t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        t += m[i][i];
    return t;
}

FieldElt FieldElt::conj() const
{
    if (field_->degree() == 1)
        return *this;
    if (field_->degree() != 2)
        throw Error(ErrorKind::Unsupported, "conjugation needs a quadratic field");
    return FieldElt(*field_, {c_[0], -c_[1]});
}

FieldElt FieldElt::inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::ZeroDivision, "inverse of zero");
    const int n = field_->degree();
    if (n == 1)
        return FieldElt(*field_, {1 / c_[0]});
    if (n == 2) {
        Rat nm = norm();
        return FieldElt(*field_, {c_[0] / nm, -c_[1] / nm});
    }
    // Solve M y = e0 by Gauss-Jordan.
    auto m = mult_matrix(*this);
    std::vector<Rat> rhs(n, Rat(0));
    rhs[0] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (m[piv][c] == 0)
            ++piv;
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        Rat inv = 1 / m[c][c];
        for (int k = 0; k < n; ++k)
            m[c][k] *= inv;
        rhs[c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rat f = m[r][c];
            for (int k = 0; k < n; ++k)
                m[r][k] -= f * m[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    return FieldElt(*field_, rhs);
}

FieldElt& FieldElt::operator/=(const FieldElt& o)
{
    check_same_field(o);
    return *this *= o.inverse();
}

FieldElt operator-(const FieldElt& a)
{
    FieldElt r = a;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

FieldElt operator*(FieldElt a, const Rat& r)
{
    for (auto& x : a.c_)
        x *= r;
    return a;
}

bool operator==(const FieldElt& a, const FieldElt& b)
{
    return a.field_ == b.field_ && a.c_ == b.c_;
}

Int FieldElt::denominator() const
{
    Int den = 1;
    for (const auto& x : c_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    return den;
}

std::string FieldElt::str() const
{
    const Int den = denominator();
    std::vector<Int> num;
    for (const auto& x : c_)
        num.push_back(x.get_num() * (den / x.get_den()));
    std::string body;
    int terms = 0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0)
            continue;
        const bool neg = num[i] < 0;
        Int mag = abs(num[i]);
        if (terms > 0)
            body += neg ? "-" : "+";
        else if (neg)
            body += "-";
        if (i == 0)
            body += mag.get_str();
        else {
            if (mag != 1)
                body += mag.get_str() + "*";
            body += "t";
            if (i > 1)
                body += "^" + std::to_string(i);
        }
        ++terms;
    }
    if (terms == 0)
        return "0";
    if (den == 1)
        return body;
    if (terms > 1)
        return "(" + body + ")/" + den.get_str();
    return body + "/" + den.get_str();
}

FieldElt arith(const FieldElt& x, const FieldElt& y, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
    }
    throw Error(ErrorKind::Internal, "unknown op");
}

FieldElt pow(const FieldElt& x, long e)
{
    if (e < 0)
        return pow(x.inverse(), -e);
    FieldElt result = x.field().one(), base = x;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------- parsing

namespace {

class ElementParser {
public:
    ElementParser(const NumberField& field, std::string_view text) : K_(field), s_(text) {}

    FieldElt parse()
    {
        FieldElt v = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + msg + " in '" + std::string(s_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElt expr()
    {
        FieldElt v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    FieldElt term()
    {
        FieldElt v = unary();
        for (;;) {
            if (accept('*'))
                v *= unary();
            else if (accept('/')) {
                FieldElt d = unary();
                if (d.is_zero())
                    fail("division by zero");
                v /= d;
            } else
                return v;
        }
    }

    FieldElt unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        FieldElt base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            return pow(base, std::stol(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    FieldElt primary()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FieldElt v = expr();
            if (!accept(')'))
                fail("expected ')'");
            return v;
        }
        if (c == 't') {
            ++pos_;
            if (K_.degree() == 1)
                fail("'t' is not available over Q");
            return K_.theta();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return K_.from_int(Int(std::string(s_.substr(start, pos_ - start))));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const NumberField& K_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

FieldElt parse_element(const NumberField& field, std::string_view text)
{
    return ElementParser(field, text).parse();
}

// ---------------------------------------------------------------- signs

Interval embed(const FieldElt& x, int place, const Rat& max_width)
{
    const NumberField& K = x.field();
    QPoly p(x.coeffs());
    RealPlace pl = K.real_place(place);
    for (;;) {
        Interval v = p.eval(pl.isolating_interval);
        if (v.width() <= max_width)
            return v;
        pl = K.refine(place);
    }
}

int sign_at(const FieldElt& x, int place)
{
    if (x.is_zero())
        throw Error(ErrorKind::ZeroSign, "sign of zero");
    const NumberField& K = x.field();
    if (place < 0 || place >= K.num_real_places())
        throw Error(ErrorKind::Internal, "real place index out of range");
    if (x.is_rational())
        return sgn(x.rational());
    QPoly p(x.coeffs());
    RealPlace pl = K.real_place(place);
    for (;;) {
        Interval v = p.eval(pl.isolating_interval);
        if (v.lo > 0)
            return 1;
        if (v.hi < 0)
            return -1;
        pl = K.refine(place);
    }
}

std::vector<int> signs(const FieldElt& x)
{
    std::vector<int> out;
    for (int i = 0; i < x.field().num_real_places(); ++i)
        out.push_back(sign_at(x, i));
    return out;
}

// ---------------------------------------------------------------- squares

std::optional<FieldElt> is_global_square(const FieldElt& x)
{
    if (x.is_zero())
        throw Error(ErrorKind::ZeroSign, "square test of zero");
    const NumberField& K = x.field();
    if (K.degree() == 1) {
        if (auto r = rational_sqrt(x.rational()))
            return K.from_rat(*r);
        return std::nullopt;
    }
    if (K.degree() != 2)
        throw Error(ErrorKind::Unsupported, "global square test needs degree <= 2");
    const Rat& a = x[0];
    const Rat& b = x[1];
    const long d = K.radicand();
    if (b == 0) {
        if (auto r = rational_sqrt(a))
            return K.from_rat(*r);
        // a = d * v^2 gives (v t)^2
        if (auto r = rational_sqrt(a / d))
            return FieldElt(K, {Rat(0), *r});
        return std::nullopt;
    }
    auto n = rational_sqrt(a * a - b * b * d);
    if (!n)
        return std::nullopt;
    for (const Rat& cand : {Rat((a + *n) / 2), Rat((a - *n) / 2)}) {
        if (cand == 0)
            continue;
        if (auto u = rational_sqrt(cand)) {
            FieldElt y(K, {*u, b / (2 * *u)});
            if (y * y == x)
                return y;
        }
    }
    return std::nullopt;
}

FieldElt square_reduce(const FieldElt& x)
{
    if (x.is_zero())
        throw Error(ErrorKind::ZeroSign, "square class of zero");
    Int den = x.denominator();
    FieldElt y = x * Rat(den * den);
    Int content = 0;
    for (const auto& c : y.coeffs())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
    Int sq = square_part(content);
    return y * Rat(1, sq * sq);
}

} // namespace qf
