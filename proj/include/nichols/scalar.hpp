#pragma once

// Exact coefficients: GMP rationals, Laurent polynomials in q, and reduced
// rational functions in q.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nichols {

using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Finite Laurent polynomial sum c_e q^e with rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficient, so two
/// polynomials are equal iff their term lists are equal.
class LaurentPoly {
public:
    struct Term {
        int exponent;
        Rational coeff;
        bool operator==(const Term& o) const { return exponent == o.exponent && coeff == o.coeff; }
    };

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT(implicit)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(implicit)

    static LaurentPoly monomial(const Rational& c, int exponent);
    static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

    /// Canonical form of an arbitrary list of (exponent, coefficient) pairs.
    static LaurentPoly normalize(std::vector<std::pair<int, Rational>> raw);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const { return coeff(0); }
    Rational coeff(int exponent) const;

    // Only meaningful for nonzero polynomials.
    int min_exponent() const { return terms_.front().exponent; }
    int max_exponent() const { return terms_.back().exponent; }
    const Rational& leading_coeff() const { return terms_.back().coeff; }

    LaurentPoly shifted(int k) const;
    LaurentPoly scaled(const Rational& c) const;

    /// Throws PoleAtPoint for point = 0 when a negative exponent is present.
    Rational eval(const Rational& point) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

private:
    std::vector<Term> terms_;
};

std::string to_string(const LaurentPoly& p);

/// Element of Q(q) in canonical form.
///
/// The denominator is an honest polynomial with nonzero constant term,
/// integer coprime coefficients and positive leading coefficient; the
/// numerator is a Laurent polynomial sharing no factor with it. Zero is 0/1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
    RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT(implicit)
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(implicit)

    /// Canonical representative of num/den. Throws ZeroDenominator.
    static RatFunc reduce(LaurentPoly num, LaurentPoly den);
    static RatFunc q(int exponent = 1) { return RatFunc(LaurentPoly::q(exponent)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return is_polynomial() && num_.is_constant() && num_.constant_term() == 1; }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    /// Value of a constant function.
    Rational constant_value() const { return num_.constant_term(); }

    RatFunc inverse() const;
    RatFunc pow(int k) const;

    /// Exact value at q = point; throws PoleAtPoint.
    Rational eval_at(const Rational& point) const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

using Scalar = RatFunc;

/// Scalar expression text, parseable by parse_scalar.
std::string to_string(const RatFunc& s);

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | primary ['^' signed-int]
///   primary:= int | 'q' | '(' expr ')'
/// Throws ParseError (line 1, 1-based column) or ZeroDenominator.
RatFunc parse_scalar(std::string_view text);

/// Same grammar; errors are reported relative to (line, column).
RatFunc parse_scalar_at(std::string_view text, int line, int column);

}  // namespace nichols
