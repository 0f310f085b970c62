#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rtk/symplectic.hpp"

namespace rtk {

/// Index of the unordered pair (i, j), i < j, among all pairs of 0..d-1
/// in lexicographic order.
int pair_index(int i, int j, int d);
std::vector<std::pair<int, int>> index_pairs(int d);

/// Basis-indexed curvature tensor: one endomorphism R(e_i, e_j) per pair
/// i < j, each infinitesimally symplectic, extended to all pairs by
/// antisymmetry. First Bianchi is NOT part of the invariant; it is a
/// property some tensors have and others measurably lack.
class CurvatureTensor {
public:
    explicit CurvatureTensor(SympSpace space);

    const SympSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    /// Stores R(e_i, e_j) for i < j; value must be infinitesimally symplectic.
    void set_value(int i, int j, Matrix<Rational> value);

    /// R(e_i, e_j) for any i != j (sign handled); zero matrix for i == j.
    Matrix<Rational> value(int i, int j) const;

    /// Stored upper values, pair-indexed.
    const std::vector<Matrix<Rational>>& upper_values() const { return values_; }

    bool is_zero() const;

    CurvatureTensor operator-(const CurvatureTensor& o) const;

private:
    SympSpace space_;
    std::vector<Matrix<Rational>> values_;  // one per pair i < j
};

/// Ricci data attached to a curvature tensor or an admissible A: the
/// Ricci form r, its endomorphism A with r(X,Y) = omega(X, AY), the
/// scalar lambda when A^2 = lambda*Id, and kappa = 1/(2n+2).
struct RicciData {
    BilinearForm r;
    Matrix<Rational> A;
    std::optional<Rational> lambda;
    Rational kappa;
};

/// Validates A (infinitesimally symplectic) and assembles RicciData.
RicciData make_ricci_data(const SympSpace& s, const Matrix<Rational>& a);

/// Ricci trace r(X, Y) = Tr(Z -> R(X, Z) Y), computed exactly.
/// The result is symmetric whenever R satisfies first Bianchi; the
/// symmetry flag reports what actually holds.
BilinearForm ricci(const CurvatureTensor& r);

/// Solves omega(X, AY) = r(X, Y) for A, i.e. A = omega^{-1} * r.
/// Requires r symmetric; the result is then infinitesimally symplectic.
Matrix<Rational> endomorphism_from_ricci(const SympSpace& s, const BilinearForm& r);

/// The curvature tensor determined by its Ricci endomorphism:
///   R(X,Y)Z = kappa * [ 2 w(X,Y)AZ + w(X,Z)AY - w(Y,AZ)X
///                       - w(Y,Z)AX + w(X,AZ)Y ],   kappa = 1/(2n+2).
/// Throws unless A is infinitesimally symplectic.
CurvatureTensor ricci_type_curvature(const SympSpace& s, const Matrix<Rational>& a);

struct WeylPart {
    CurvatureTensor W;
    RicciData ricci_data;
    bool is_ricci_type = false;
};

/// Splits R into its Ricci-determined part and the remainder W:
/// W = R - ricci_type_curvature(S, A_R). Requires ricci(R) symmetric
/// (automatic for Bianchi tensors); throws otherwise, since the
/// decomposition is undefined there.
WeylPart weyl_part(const CurvatureTensor& r);

/// defect(i,j,k) = R(e_i,e_j)e_k + R(e_j,e_k)e_i + R(e_k,e_i)e_j,
/// one vector per triple i < j < k.
std::vector<std::vector<Rational>> first_bianchi_defect(const CurvatureTensor& r);
bool first_bianchi_holds(const CurvatureTensor& r);

/// Direct sum of symplectic spaces (block-diagonal omega).
SympSpace direct_sum(const SympSpace& s1, const SympSpace& s2);

/// Block-diagonal assembly of two curvature tensors on the direct sum:
/// R(X,Y)Z = R1(X1,Y1)Z1 + R2(X2,Y2)Z2.
CurvatureTensor product_curvature(const CurvatureTensor& r1, const CurvatureTensor& r2);

/// Cross block of the Weyl part of a product of Ricci-type tensors:
/// the map Z2 -> W(X1, Y1) Z2 for each basis pair (i < j) of S1. Equal to
/// -w(X1,Y1) A2 Z2 / (n+1) with 2n = dim S1 + dim S2, independently of A1.
std::vector<Matrix<Rational>> cross_term(const SympSpace& s1, const SympSpace& s2,
                                         const Matrix<Rational>& a2);

}  // namespace rtk
