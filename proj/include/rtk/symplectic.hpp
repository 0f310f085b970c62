#pragma once

#include <utility>
#include <vector>

#include "rtk/matrix.hpp"

namespace rtk {

/// Even-dimensional vector space carrying a nondegenerate antisymmetric
/// form, given by its Gram matrix in the working basis.
struct SympSpace {
    int n = 0;                 // half-dimension
    Matrix<Rational> omega;    // 2n x 2n, antisymmetric, invertible
    Matrix<Rational> omega_inv;

    int dim() const { return 2 * n; }
};

/// Standard space with omega = [[0, -I], [I, 0]]; omega^2 = -Id.
SympSpace standard_symplectic_space(int n);

/// Wraps an arbitrary Gram matrix after checking antisymmetry,
/// invertibility and even dimension.
SympSpace make_symp_space(const Matrix<Rational>& omega);

/// omega(u, v) for column vectors in the working basis.
Rational omega_pair(const SympSpace& s, const std::vector<Rational>& u, const std::vector<Rational>& v);

/// True iff omega(AX, Y) + omega(X, AY) = 0, i.e. omega*A is symmetric.
bool is_inf_symplectic(const SympSpace& s, const Matrix<Rational>& a);

/// True iff omega(X, BY) = omega(BX, Y), i.e. omega*B is antisymmetric.
bool is_antisymplectic_symmetric(const SympSpace& s, const Matrix<Rational>& b);

/// Basis of sp(omega), dimension n(2n+1).
std::vector<Matrix<Rational>> sp_basis(const SympSpace& s);

/// Basis of the antisymplectic-symmetric endomorphisms, dimension n(2n-1).
std::vector<Matrix<Rational>> antisymplectic_basis(const SympSpace& s);

enum class Symmetry { symmetric, antisymmetric, none };

struct BilinearForm {
    Matrix<Rational> m;
    Symmetry sym = Symmetry::none;
};

/// Classifies the matrix's symmetry exactly.
BilinearForm make_bilinear_form(Matrix<Rational> m);

/// Signature (p, q) of a symmetric form; zeros are not counted, so
/// p + q = rank. Throws unless the form is symmetric.
std::pair<int, int> signature(const BilinearForm& f);

struct SubspaceInfo {
    std::vector<std::vector<Rational>> symplectic_orthogonal;  // basis rows
    bool is_isotropic = false;
    bool is_lagrangian = false;
};

/// Symplectic orthogonal, isotropy and Lagrangian tests for the span of
/// the given vectors.
SubspaceInfo subspace_ops(const SympSpace& s, const std::vector<std::vector<Rational>>& vectors);

}  // namespace rtk
