#include "nichols/scalar.hpp"

#include "nichols/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace nichols {

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c)
{
    if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent)
{
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({exponent, c});
    return p;
}

LaurentPoly LaurentPoly::normalize(std::vector<std::pair<int, Rational>> raw)
{
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : raw) {
        if (!p.terms_.empty() && p.terms_.back().exponent == e)
            p.terms_.back().coeff += c;
        else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back({e, std::move(c)});
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Rational LaurentPoly::coeff(int exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) return it->coeff;
    return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.exponent += k;
    return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const
{
    if (c == 0) return {};
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Rational LaurentPoly::eval(const Rational& point) const
{
    Rational sum = 0;
    for (const auto& t : terms_) {
        if (t.exponent == 0) {
            sum += t.coeff;
            continue;
        }
        if (point == 0) {
            if (t.exponent < 0) throw PoleAtPoint(point.get_str());
            continue;
        }
        mpz_class num, den;
        unsigned long e = static_cast<unsigned long>(t.exponent < 0 ? -t.exponent : t.exponent);
        mpz_pow_ui(num.get_mpz_t(), point.get_num_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), point.get_den_mpz_t(), e);
        Rational power = t.exponent > 0 ? Rational(num, den) : Rational(den, num);
        power.canonicalize();
        sum += t.coeff * power;
    }
    return sum;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

namespace {

LaurentPoly merge_add(const std::vector<LaurentPoly::Term>& a, const std::vector<LaurentPoly::Term>& b, int sign)
{
    std::vector<std::pair<int, Rational>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
            out.emplace_back(a[i].exponent, a[i].coeff);
            ++i;
        } else if (i == a.size() || b[j].exponent < a[i].exponent) {
            out.emplace_back(b[j].exponent, sign > 0 ? Rational(b[j].coeff) : Rational(-b[j].coeff));
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
            if (c != 0) out.emplace_back(a[i].exponent, std::move(c));
            ++i;
            ++j;
        }
    }
    return LaurentPoly::normalize(std::move(out));
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    *this = merge_add(terms_, o.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    if (o.is_zero()) return *this;
    *this = merge_add(terms_, o.terms_, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.shifted(a.terms_[0].exponent).scaled(a.terms_[0].coeff);
    if (b.is_monomial()) return a.shifted(b.terms_[0].exponent).scaled(b.terms_[0].coeff);
    std::vector<std::pair<int, Rational>> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) raw.emplace_back(s.exponent + t.exponent, s.coeff * t.coeff);
    return LaurentPoly::normalize(std::move(raw));
}

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational c = it->coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (it->exponent == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1) out += c.get_str() + "*";
        out += "q";
        if (it->exponent != 1) out += "^" + std::to_string(it->exponent);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers for gcd (ascending coefficients, no trailing zeros)

namespace {

using Dense = std::vector<Rational>;

Dense to_dense(const LaurentPoly& p)
{
    // p has min exponent 0 here.
    Dense d(static_cast<std::size_t>(p.max_exponent()) + 1, Rational(0));
    for (const auto& t : p.terms()) d[static_cast<std::size_t>(t.exponent)] = t.coeff;
    return d;
}

LaurentPoly from_dense(const Dense& d)
{
    std::vector<std::pair<int, Rational>> raw;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) raw.emplace_back(static_cast<int>(i), d[i]);
    return LaurentPoly::normalize(std::move(raw));
}

void trim(Dense& d)
{
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// a = quot * b + rem
void divmod(Dense a, const Dense& b, Dense& quot, Dense& rem)
{
    trim(a);
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational factor = a.back() / lead;
        quot[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    rem = std::move(a);
}

Dense monic(Dense d)
{
    Rational lead = d.back();
    for (auto& c : d) c /= lead;
    return d;
}

Dense gcd(Dense a, Dense b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

// Factor f with f*p having coprime integer coefficients and positive leading coefficient.
Rational content_normalizer(const LaurentPoly& p)
{
    mpz_class l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_class g = 0;
    for (const auto& t : p.terms()) {
        mpz_class v = t.coeff.get_num() * (l / t.coeff.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational f(l, g);
    f.canonicalize();
    if (p.leading_coeff() < 0) f = -f;
    return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// RatFunc

RatFunc RatFunc::reduce(LaurentPoly num, LaurentPoly den)
{
    if (den.is_zero()) throw ZeroDenominator();
    RatFunc r;
    if (num.is_zero()) return r;
    if (den.is_monomial()) {
        const auto& t = den.terms()[0];
        r.num_ = num.shifted(-t.exponent).scaled(1 / t.coeff);
        return r;
    }
    int a = num.min_exponent();
    int b = den.min_exponent();
    LaurentPoly n = num.shifted(-a);
    LaurentPoly d = den.shifted(-b);
    if (!n.is_monomial()) {
        Dense g = gcd(to_dense(n), to_dense(d));
        if (g.size() > 1) {
            Dense q, rem;
            divmod(to_dense(n), g, q, rem);
            n = from_dense(q);
            divmod(to_dense(d), g, q, rem);
            d = from_dense(q);
        }
    }
    Rational f = content_normalizer(d);
    r.num_ = n.scaled(f).shifted(a - b);
    r.den_ = d.scaled(f);
    return r;
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw ZeroDenominator();
    return reduce(den_, num_);
}

RatFunc RatFunc::pow(int k) const
{
    if (k < 0) return inverse().pow(-k);
    RatFunc result = 1;
    RatFunc base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Rational RatFunc::eval_at(const Rational& point) const
{
    Rational d = den_.eval(point);
    if (d == 0) throw PoleAtPoint(point.get_str());
    return num_.eval(point) / d;
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero()) return *this;
    if (is_polynomial() && o.is_polynomial()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_)
        *this = reduce(num_ + o.num_, den_);
    else
        *this = reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    if (is_polynomial() && o.is_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    if (o.is_constant()) {
        num_ = num_.scaled(o.constant_value());
        return *this;
    }
    *this = reduce(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero()) throw ZeroDenominator();
    if (o.is_constant()) {
        num_ = num_.scaled(1 / o.constant_value());
        return *this;
    }
    return *this *= o.inverse();
}

std::string to_string(const RatFunc& s)
{
    if (s.is_polynomial()) return to_string(s.num());
    std::string num = to_string(s.num());
    if (s.num().terms().size() > 1) num = "(" + num + ")";
    return num + "/(" + to_string(s.den()) + ")";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, int line, int column) : text_(text), line_(line), column_(column) {}

    RatFunc parse()
    {
        skip_ws();
        if (pos_ == text_.size()) fail("empty scalar expression");
        RatFunc value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what, line_, column_ + static_cast<int>(pos_));
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr()
    {
        RatFunc value = term();
        for (;;) {
            if (accept('+'))
                value += term();
            else if (accept('-'))
                value -= term();
            else
                return value;
        }
    }

    RatFunc term()
    {
        RatFunc value = factor();
        for (;;) {
            if (accept('*'))
                value *= factor();
            else if (accept('/')) {
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                value /= d;
            } else
                return value;
        }
    }

    RatFunc factor()
    {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        RatFunc base = primary();
        if (accept('^')) {
            int e = signed_int();
            if (e < 0 && base.is_zero()) fail("negative power of zero");
            base = base.pow(e);
        }
        return base;
    }

    RatFunc primary()
    {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rational(digits()));
        if (c == 'q') {
            ++pos_;
            if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                fail("unknown identifier");
            return RatFunc::q();
        }
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    mpz_class digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    int signed_int()
    {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer exponent");
        mpz_class v = digits();
        if (v > std::numeric_limits<int>::max()) fail("exponent out of range");
        int e = static_cast<int>(v.get_si());
        return negative ? -e : e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int column_;
};

}  // namespace

RatFunc parse_scalar(std::string_view text) { return ScalarParser(text, 1, 1).parse(); }

RatFunc parse_scalar_at(std::string_view text, int line, int column)
{
    return ScalarParser(text, line, column).parse();
}

}  // namespace nichols
