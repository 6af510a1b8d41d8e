#pragma once

#include "shiftcheck/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace shiftcheck {

// Univariate polynomial over the rationals. Coefficients are stored in
// ascending degree order with trailing zeros trimmed; the zero polynomial
// is the empty coefficient list (degree -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);
    static Polynomial variable();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial scaled(const Rational& c) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    struct DivMod {
        Polynomial quotient;
        Polynomial remainder;
    };
    // Exact division with remainder; throws on zero divisor.
    static DivMod divmod(const Polynomial& a, const Polynomial& b);

    std::string str(std::string_view var = "x") const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// True iff a divides b exactly (zero remainder); a must be nonzero.
bool poly_divides(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace shiftcheck
