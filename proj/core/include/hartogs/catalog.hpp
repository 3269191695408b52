#ifndef HARTOGS_CATALOG_HPP
#define HARTOGS_CATALOG_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hartogs/rational.hpp"

namespace hartogs {

/// Raised when an operation needs the generic norm (or volume, metric...)
/// of an exceptional domain, where only the numerical invariants are known.
class unsupported_kind_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised when a point fails the interior-membership predicate.
class membership_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

enum class DomainKind { TypeI, TypeII, TypeIII, TypeIV, TypeV16, TypeVI27 };

std::string kind_name(DomainKind kind);
DomainKind kind_from_name(const std::string& name);
bool kind_is_classical(DomainKind kind);

/// An irreducible bounded symmetric domain with its numerical invariants:
/// rank r, characteristic multiplicities (a, b), complex dimension d and
/// genus p, tied together by d = r(r-1)a/2 + rb + r and p = (r-1)a + b + 2.
struct DomainSpec {
    DomainKind kind;
    std::vector<int> params;  // TypeI: {m, n}; TypeII/III/IV: {n}; exceptional: {}
    int r = 0;
    int a = 0;
    int b = 0;
    int d = 0;
    int p = 0;

    bool classical() const { return kind_is_classical(kind); }
    std::string name() const;
};

/// Builds the spec for a domain kind, validating the size constraints
/// (TypeI: 1 <= m <= n; TypeII: n >= 4; TypeIII: n >= 2; TypeIV: n >= 5).
DomainSpec make_domain(DomainKind kind, const std::vector<int>& params = {});

inline DomainSpec type_i(int m, int n) { return make_domain(DomainKind::TypeI, {m, n}); }
inline DomainSpec type_ii(int n) { return make_domain(DomainKind::TypeII, {n}); }
inline DomainSpec type_iii(int n) { return make_domain(DomainKind::TypeIII, {n}); }
inline DomainSpec type_iv(int n) { return make_domain(DomainKind::TypeIV, {n}); }

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

/// A point (z, w) of the Hartogs-type total space over a base domain.
/// Base coordinates are laid out per kind: TypeI row-major m x n entries;
/// TypeII the strict upper triangle of an antisymmetric matrix, row-major;
/// TypeIII the inclusive upper triangle of a symmetric matrix, row-major;
/// TypeIV a plain n-vector.
struct PointCH {
    ComplexVec z;
    ComplexVec w;
};

/// Number of base coordinates expected for a classical kind (equals d).
std::size_t base_coordinate_count(const DomainSpec& spec);

/// Generic norm N(z, conj(xi)); xi defaults to z (diagonal evaluation,
/// real-valued on the domain). TypeII takes the square root of the
/// determinant: positive root on the diagonal, principal branch anchored
/// by N(0, .) = 1 otherwise.
Complex generic_norm(const DomainSpec& spec, const ComplexVec& z,
                     const std::optional<ComplexVec>& xi = std::nullopt);

/// Diagonal generic norm as a real scalar.
double generic_norm_diag(const DomainSpec& spec, const ComplexVec& z);

/// True if z lies in the open base domain.
bool in_base_domain(const DomainSpec& spec, const ComplexVec& z);

/// True if (z, w) is interior: z in the base and ||w||^2 < N(z,z)^mu.
bool is_interior(const DomainSpec& spec, const Rational& mu, const PointCH& point);

/// det(-d^2 log N / dz_i dz_j-bar) at z = 0, exactly:
/// TypeI, TypeII -> 1; TypeIII(n) -> 2^{n(n-1)/2}; TypeIV(n) -> 2^n.
Rational c_omega(const DomainSpec& spec);

/// Euclidean volume pi^d / (C_Omega * chi(0)).
double volume(const DomainSpec& spec);

/// Potential -log(N(z,z)^mu - ||w||^2); requires an interior point.
double kahler_potential(const DomainSpec& spec, const Rational& mu, const PointCH& point);

double squared_norm(const ComplexVec& v);
Complex hermitian_pairing(const ComplexVec& v, const ComplexVec& u);

}  // namespace hartogs

#endif
