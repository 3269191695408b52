#ifndef HARTOGS_POLYNOMIAL_HPP
#define HARTOGS_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "hartogs/rational.hpp"

namespace hartogs {

/// Dense univariate polynomial with exact rational coefficients,
/// stored in ascending degree with no trailing zeros. The zero
/// polynomial has an empty coefficient vector and degree -1.
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    RationalPoly(std::initializer_list<Rational> coeffs);

    static RationalPoly constant(const Rational& c);
    static RationalPoly identity();  // the polynomial x
    /// c * x^k
    static RationalPoly monomial(const Rational& c, std::size_t k);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^k (zero beyond the degree).
    const Rational& coeff(std::size_t k) const;
    const Rational& leading_coeff() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const RationalPoly& rhs);
    RationalPoly& operator*=(const Rational& s);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
    friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }

    bool operator==(const RationalPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// f(a*x + b); used for argument rescalings and unit shifts.
    RationalPoly compose_linear(const Rational& a, const Rational& b) const;

    /// Coefficients as "num/den" strings, ascending degree.
    std::vector<std::string> to_strings() const;
    static RationalPoly from_strings(const std::vector<std::string>& strings);

    std::string pretty(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

}  // namespace hartogs

#endif
