#include "hartogs/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hartogs {

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("rational_pow: negative power of zero");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    out.canonicalize();
    return out;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("parse_rational: malformed integer '" + text + "'");
        q.canonicalize();
        return q;
    }
    // Finite decimal: digits.digits -> exact fraction over a power of ten.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
    Integer num;
    if (num.set_str(digits, 10) != 0)
        throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly{std::vector<Rational>{c}}; }

RationalPoly RationalPoly::identity() { return RationalPoly{Rational(0), Rational(1)}; }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RationalPoly{std::move(v)};
}

void RationalPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::coeff(std::size_t k) const {
    static const Rational kZero(0);
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& RationalPoly::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

RationalPoly RationalPoly::compose_linear(const Rational& a, const Rational& b) const {
    // Horner in the argument a*x + b.
    RationalPoly arg{b, a};
    RationalPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= arg;
        acc += constant(*it);
    }
    return acc;
}

std::vector<std::string> RationalPoly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(rational_string(c));
    return out;
}

RationalPoly RationalPoly::from_strings(const std::vector<std::string>& strings) {
    std::vector<Rational> cs;
    cs.reserve(strings.size());
    for (const auto& s : strings) cs.push_back(parse_rational(s));
    return RationalPoly{std::move(cs)};
}

std::string RationalPoly::pretty(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = abs_c == 1 && k > 0;
        if (!unit) {
            os << abs_c.get_num().get_str();
            if (abs_c.get_den() != 1) os << "/" << abs_c.get_den().get_str();
        }
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace hartogs
