#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtk/curvature.hpp"

namespace rtk {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TripleReport {
    bool valid = false;
    std::vector<CheckResult> checks;
};

/// Element of g = k (+) p, concretely: a matrix acting on p plus a vector.
struct GElem {
    Matrix<Rational> k;       // element of End(p)
    std::vector<Rational> p;  // element of p
};

/// Symmetric symplectic triple in concrete form: g = k (+) p with
/// k realized inside End(p), so the k-action is faithful by
/// construction. sigma is implicit (+1 on k, -1 on p). The brackets are
///   [C, D] = CD - DC,   [C, X] = CX,   [X, Y] = sum of pp coefficients
/// against the k basis.
class SymmetricTriple {
public:
    /// Shape-checked assembly; mathematical validity is validate_triple's job.
    static SymmetricTriple from_parts(SympSpace space, std::vector<Matrix<Rational>> k_basis,
                                      std::vector<std::vector<Rational>> pp_coeffs);

    const SympSpace& space() const { return space_; }
    int dim_k() const { return static_cast<int>(k_basis_.size()); }
    int dim_p() const { return space_.dim(); }
    int dim_g() const { return dim_k() + dim_p(); }

    const std::vector<Matrix<Rational>>& k_basis() const { return k_basis_; }
    const std::vector<std::vector<Rational>>& pp_coeffs() const { return pp_coeffs_; }

    /// [e_i, e_j] as a concrete matrix in End(p), any i, j.
    Matrix<Rational> pp_bracket_matrix(int i, int j) const;

    /// Structure constants of [k, k] in the k basis, when k is closed.
    const std::optional<std::vector<std::vector<Rational>>>& kk_structure() const {
        return kk_structure_;
    }

    /// Bracket of concrete elements (always defined).
    GElem bracket(const GElem& x, const GElem& y) const;

    GElem basis_element(int idx) const;  // 0..dim_k-1 -> k, then p
    GElem element_from_coords(const std::vector<Rational>& coords) const;

    /// Coordinates of M against the k basis, when M lies in its span.
    std::optional<std::vector<Rational>> k_coords(const Matrix<Rational>& m) const;

    /// g-coordinates of a concrete element; nullopt when the k part
    /// escapes span(k_basis).
    std::optional<std::vector<Rational>> coords(const GElem& x) const;

    /// [b_a, b_b] in g-coordinates for basis indices a, b. Requires the
    /// triple to be closed (throws otherwise).
    const std::vector<Rational>& bracket_table(int a, int b) const;
    std::vector<Rational> bracket_coords(const std::vector<Rational>& x,
                                         const std::vector<Rational>& y) const;

private:
    SympSpace space_;
    std::vector<Matrix<Rational>> k_basis_;
    std::vector<std::vector<Rational>> pp_coeffs_;
    std::optional<std::vector<std::vector<Rational>>> kk_structure_;

    // caches
    mutable std::vector<Matrix<Rational>> pp_mats_;
    mutable std::optional<CoordinateSolver<Rational>> k_solver_;
    mutable bool k_solver_failed_ = false;
    mutable std::vector<std::vector<std::vector<Rational>>> bracket_table_;  // [a][b], a<b
    mutable std::vector<Rational> zero_coords_;

    void ensure_pp_mats() const;
    const CoordinateSolver<Rational>* solver() const;
    void ensure_bracket_table() const;

    friend SymmetricTriple build_triple_from_A_unchecked(const SympSpace&, const Matrix<Rational>&);
};

/// Generic construction from an admissible Ricci endomorphism:
/// k = span of the Ricci-type curvature values, [X,Y] = -R(X,Y).
/// Requires A infinitesimally symplectic AND A^2 = lambda Id; the second
/// condition is exactly what makes the bracket a Lie bracket, so its
/// failure is reported as "no symmetric triple exists for this A".
SymmetricTriple build_triple_from_A(const SympSpace& s, const Matrix<Rational>& a);

/// Same table construction without the A^2-scalar gate. The result
/// violates the Jacobi identity whenever A^2 is not scalar; exists so
/// that validation can be exercised against genuinely broken tables.
SymmetricTriple build_triple_from_A_unchecked(const SympSpace& s, const Matrix<Rational>& a);

/// Full axiom check: k-basis independence, omega-invariance of k,
/// [p,p] = k as spans, closure of [k,k] with consistent structure
/// constants, and the Jacobi identity over every basis triple of g.
TripleReport validate_triple(const SymmetricTriple& t);

/// Curvature of the canonical connection: R(X,Y)Z = -[[X,Y],Z].
/// For triples built from A this is exactly the Ricci-type tensor of A.
CurvatureTensor curvature_of_triple(const SymmetricTriple& t);

/// Basis of span{ AB + BA : B antisymplectic-symmetric }.
std::vector<Matrix<Rational>> k_from_lemma(const SympSpace& s, const Matrix<Rational>& a);

/// Basis of { C in sp(omega) : CA = AC }, by exact nullspace.
std::vector<Matrix<Rational>> commutant_sp(const SympSpace& s, const Matrix<Rational>& a);

struct LieDiagnostics {
    std::vector<int> derived_series_dims;          // of g, until stabilization
    std::vector<int> lower_central_dims;           // of the designated ideal (empty without one)
    int killing_rank = 0;
    std::pair<int, int> killing_signature{0, 0};
    std::optional<int> quotient_killing_rank;      // of g/ideal
    std::optional<std::pair<int, int>> quotient_killing_signature;
};

/// Derived series, Killing form data, and (when an ideal is designated
/// by g-coordinate vectors) the ideal's lower central series plus the
/// Killing data of the quotient. Throws when ideal_basis does not span
/// an ideal.
LieDiagnostics lie_diagnostics(const SymmetricTriple& t,
                               const std::vector<std::vector<Rational>>* ideal_basis = nullptr);

/// The canonical ideal of a lambda = 0 triple, in g-coordinates:
/// { C in k : C(Image A) = 0 } (+) Ker A.
std::vector<std::vector<Rational>> nilpotent_radical(const SymmetricTriple& t,
                                                     const Matrix<Rational>& a);

}  // namespace rtk
