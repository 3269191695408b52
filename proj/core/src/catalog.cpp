#include "hartogs/catalog.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hartogs/algebra.hpp"

namespace hartogs {

namespace {

using ComplexMatrix = Eigen::MatrixXcd;

[[noreturn]] void bad_params(const std::string& message) {
    throw std::invalid_argument("make_domain: " + message);
}

void require_coords(const DomainSpec& spec, const ComplexVec& z) {
    if (z.size() != base_coordinate_count(spec))
        throw std::invalid_argument("base coordinate vector for " + spec.name() + " must have " +
                                    std::to_string(base_coordinate_count(spec)) + " entries, got " +
                                    std::to_string(z.size()));
}

// z as an m x n matrix, row-major.
ComplexMatrix unpack_type_i(int m, int n, const ComplexVec& z) {
    ComplexMatrix out(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = z[static_cast<std::size_t>(i * n + j)];
    return out;
}

// Strict upper triangle -> antisymmetric n x n.
ComplexMatrix unpack_type_ii(int n, const ComplexVec& z) {
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out(i, j) = z[idx];
            out(j, i) = -z[idx];
            ++idx;
        }
    return out;
}

// Inclusive upper triangle -> symmetric n x n.
ComplexMatrix unpack_type_iii(int n, const ComplexVec& z) {
    ComplexMatrix out(n, n);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            out(i, j) = z[idx];
            out(j, i) = z[idx];
            ++idx;
        }
    return out;
}

ComplexMatrix unpack_base(const DomainSpec& spec, const ComplexVec& z) {
    switch (spec.kind) {
        case DomainKind::TypeI:
            return unpack_type_i(spec.params[0], spec.params[1], z);
        case DomainKind::TypeII:
            return unpack_type_ii(spec.params[0], z);
        case DomainKind::TypeIII:
            return unpack_type_iii(spec.params[0], z);
        default:
            throw unsupported_kind_error("matrix coordinates undefined for " + spec.name());
    }
}

Complex det_i_minus_product(const ComplexMatrix& zm, const ComplexMatrix& xim) {
    ComplexMatrix a = ComplexMatrix::Identity(zm.rows(), zm.rows()) - zm * xim.conjugate().transpose();
    return a.determinant();
}

Complex type_iv_norm(const ComplexVec& z, const ComplexVec& xi) {
    Complex z_dot_xi(0), zz(0), xixi(0);
    for (std::size_t k = 0; k < z.size(); ++k) {
        z_dot_xi += z[k] * std::conj(xi[k]);
        zz += z[k] * z[k];
        xixi += xi[k] * xi[k];
    }
    return Complex(1) - 2.0 * z_dot_xi + zz * std::conj(xixi);
}

}  // namespace

std::string kind_name(DomainKind kind) {
    switch (kind) {
        case DomainKind::TypeI: return "I";
        case DomainKind::TypeII: return "II";
        case DomainKind::TypeIII: return "III";
        case DomainKind::TypeIV: return "IV";
        case DomainKind::TypeV16: return "V16";
        case DomainKind::TypeVI27: return "VI27";
    }
    throw std::logic_error("unreachable domain kind");
}

DomainKind kind_from_name(const std::string& name) {
    if (name == "I") return DomainKind::TypeI;
    if (name == "II") return DomainKind::TypeII;
    if (name == "III") return DomainKind::TypeIII;
    if (name == "IV") return DomainKind::TypeIV;
    if (name == "V16" || name == "V") return DomainKind::TypeV16;
    if (name == "VI27" || name == "VI") return DomainKind::TypeVI27;
    throw std::invalid_argument("unknown domain kind '" + name + "'");
}

bool kind_is_classical(DomainKind kind) {
    return kind != DomainKind::TypeV16 && kind != DomainKind::TypeVI27;
}

std::string DomainSpec::name() const {
    std::ostringstream os;
    os << "Omega_" << kind_name(kind);
    if (!params.empty()) {
        os << "(";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os << ",";
            os << params[i];
        }
        os << ")";
    }
    return os.str();
}

DomainSpec make_domain(DomainKind kind, const std::vector<int>& params) {
    DomainSpec spec;
    spec.kind = kind;
    spec.params = params;
    switch (kind) {
        case DomainKind::TypeI: {
            if (params.size() != 2) bad_params("TypeI expects parameters (m, n)");
            int m = params[0], n = params[1];
            if (m < 1 || m > n) bad_params("TypeI requires 1 <= m <= n, got m=" +
                                           std::to_string(m) + ", n=" + std::to_string(n));
            spec.r = m;
            spec.a = 2;
            spec.b = n - m;
            spec.d = m * n;
            spec.p = m + n;
            break;
        }
        case DomainKind::TypeII: {
            if (params.size() != 1) bad_params("TypeII expects parameter (n)");
            int n = params[0];
            if (n < 4) bad_params("TypeII requires n >= 4, got n=" + std::to_string(n));
            spec.r = n / 2;
            spec.a = 4;
            spec.b = n % 2 == 0 ? 0 : 2;
            spec.d = n * (n - 1) / 2;
            spec.p = 2 * (n - 1);
            break;
        }
        case DomainKind::TypeIII: {
            if (params.size() != 1) bad_params("TypeIII expects parameter (n)");
            int n = params[0];
            if (n < 2) bad_params("TypeIII requires n >= 2, got n=" + std::to_string(n));
            spec.r = n;
            spec.a = 1;
            spec.b = 0;
            spec.d = n * (n + 1) / 2;
            spec.p = n + 1;
            break;
        }
        case DomainKind::TypeIV: {
            if (params.size() != 1) bad_params("TypeIV expects parameter (n)");
            int n = params[0];
            if (n < 5) bad_params("TypeIV requires n >= 5, got n=" + std::to_string(n));
            spec.r = 2;
            spec.a = n - 2;
            spec.b = 0;
            spec.d = n;
            spec.p = n;
            break;
        }
        case DomainKind::TypeV16: {
            if (!params.empty()) bad_params("TypeV16 takes no parameters");
            spec.r = 2;
            spec.a = 6;
            spec.b = 4;
            spec.d = 16;
            spec.p = 12;
            break;
        }
        case DomainKind::TypeVI27: {
            if (!params.empty()) bad_params("TypeVI27 takes no parameters");
            spec.r = 3;
            spec.a = 8;
            spec.b = 0;
            spec.d = 27;
            spec.p = 18;
            break;
        }
    }
    // d = r(r-1)a/2 + rb + r and p = (r-1)a + b + 2 must close exactly.
    if (spec.d != spec.r * (spec.r - 1) / 2 * spec.a + spec.r * spec.b + spec.r ||
        spec.p != (spec.r - 1) * spec.a + spec.b + 2)
        throw std::logic_error("domain invariants violated for " + spec.name());
    return spec;
}

std::size_t base_coordinate_count(const DomainSpec& spec) {
    if (!spec.classical())
        throw unsupported_kind_error("coordinates undefined for exceptional domain " + spec.name());
    return static_cast<std::size_t>(spec.d);
}

Complex generic_norm(const DomainSpec& spec, const ComplexVec& z,
                     const std::optional<ComplexVec>& xi) {
    if (!spec.classical())
        throw unsupported_kind_error("generic norm unavailable for exceptional domain " + spec.name());
    require_coords(spec, z);
    const bool diagonal = !xi.has_value();
    const ComplexVec& x = diagonal ? z : *xi;
    if (!diagonal) require_coords(spec, x);

    if (spec.kind == DomainKind::TypeIV) return type_iv_norm(z, x);

    ComplexMatrix zm = unpack_base(spec, z);
    ComplexMatrix xim = diagonal ? zm : unpack_base(spec, x);
    Complex det = det_i_minus_product(zm, xim);
    if (spec.kind != DomainKind::TypeII) return det;

    // Square-root norm. On the diagonal the determinant is real and
    // nonnegative, so the positive root is unambiguous; off the diagonal
    // take the principal branch, anchored by N(0, .) = 1.
    if (diagonal) return Complex(std::sqrt(std::max(det.real(), 0.0)), 0.0);
    return std::sqrt(det);
}

double generic_norm_diag(const DomainSpec& spec, const ComplexVec& z) {
    return generic_norm(spec, z).real();
}

bool in_base_domain(const DomainSpec& spec, const ComplexVec& z) {
    if (!spec.classical())
        throw unsupported_kind_error("membership undefined for exceptional domain " + spec.name());
    require_coords(spec, z);
    if (spec.kind == DomainKind::TypeIV) {
        double zz = squared_norm(z);
        if (zz >= 1.0) return false;
        return type_iv_norm(z, z).real() > 0.0;
    }
    ComplexMatrix zm = unpack_base(spec, z);
    ComplexMatrix h = ComplexMatrix::Identity(zm.rows(), zm.rows()) - zm * zm.adjoint();
    return Eigen::LLT<ComplexMatrix>(h).info() == Eigen::Success;
}

bool is_interior(const DomainSpec& spec, const Rational& mu, const PointCH& point) {
    if (!in_base_domain(spec, point.z)) return false;
    double n = generic_norm_diag(spec, point.z);
    return squared_norm(point.w) < std::pow(n, to_double(mu));
}

Rational c_omega(const DomainSpec& spec) {
    switch (spec.kind) {
        case DomainKind::TypeI:
        case DomainKind::TypeII:
            return Rational(1);
        case DomainKind::TypeIII: {
            int n = spec.params[0];
            Rational out;
            mpz_ui_pow_ui(out.get_num_mpz_t(), 2, static_cast<unsigned long>(n * (n - 1) / 2));
            out.canonicalize();
            return out;
        }
        case DomainKind::TypeIV: {
            Rational out;
            mpz_ui_pow_ui(out.get_num_mpz_t(), 2, static_cast<unsigned long>(spec.params[0]));
            out.canonicalize();
            return out;
        }
        default:
            throw unsupported_kind_error("C_Omega unavailable for exceptional domain " + spec.name());
    }
}

double volume(const DomainSpec& spec) {
    if (!spec.classical())
        throw unsupported_kind_error("volume unavailable for exceptional domain " + spec.name());
    Rational chi0 = hua_poly(spec)(Rational(0));
    return std::pow(std::numbers::pi, spec.d) / (to_double(c_omega(spec)) * to_double(chi0));
}

double kahler_potential(const DomainSpec& spec, const Rational& mu, const PointCH& point) {
    if (!is_interior(spec, mu, point))
        throw membership_error("point is not interior to the Hartogs domain over " + spec.name());
    double n = generic_norm_diag(spec, point.z);
    return -std::log(std::pow(n, to_double(mu)) - squared_norm(point.w));
}

double squared_norm(const ComplexVec& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return s;
}

Complex hermitian_pairing(const ComplexVec& v, const ComplexVec& u) {
    if (v.size() != u.size())
        throw std::invalid_argument("hermitian_pairing: mismatched lengths");
    Complex s(0);
    for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * std::conj(u[k]);
    return s;
}

}  // namespace hartogs
