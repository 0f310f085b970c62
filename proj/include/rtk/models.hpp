#pragma once

#include <string>
#include <vector>

#include "rtk/triple.hpp"

namespace rtk {

enum class ModelFamily { PositiveLambda, NegativeLambda, ZeroLambda };

struct ModelParams {
    ModelFamily family = ModelFamily::PositiveLambda;
    int n = 2;
    Rational s = Rational(1);  // embedding scale, +/- families
    int p = 0, q = 0;          // Hermitean signature (negative) / Ricci signature (zero)
    int rank = 0;              // rank of A, zero family
};

enum class TargetAlgebra {
    trace_free,          // sl(m, R)
    skew_hermitian,      // su(form) in real 2m x 2m realization
    special_orthogonal,  // so(form): M^T G + G M = 0
};

/// Linear map from a subalgebra of g (given by g-coordinate basis
/// vectors) into target_dim x target_dim matrices.
template <typename S>
struct Embedding {
    int target_dim = 0;
    TargetAlgebra target = TargetAlgebra::trace_free;
    Matrix<S> form;  // Hermitean/orthogonal Gram matrix, where applicable
    std::vector<std::vector<Rational>> domain;  // g-coordinate vectors
    std::vector<Matrix<S>> images;              // one per domain vector
};

struct PositiveModel {
    SymmetricTriple triple;
    Matrix<Rational> A;
    Rational a, lambda;
    Embedding<Rational> embedding;  // into trace-free (n+1) x (n+1) matrices
};

struct NegativeModel {
    SymmetricTriple triple;
    Matrix<Rational> A;
    Matrix<Rational> J;  // complex structure, A = b J
    Rational b, lambda;
    Embedding<Rational> embedding;  // complex (n+1) x (n+1), realified
};

struct ZeroModel {
    SymmetricTriple triple;
    Matrix<Rational> A;
    std::vector<std::vector<Rational>> radical_basis;  // g-coordinates
    Embedding<QuadExt> levi_map;                       // so(p,q) + Z* -> so(p, q+1)
    std::vector<std::string> table_discrepancies;      // block-table cross-check findings
};

/// p = V (+) V*, A = a (P+ - P-) with a = (n+1) s^2 (so the embedding
/// scale satisfies s^2 = 2*kappa*a). The triple is generated from A and
/// embedded into trace-free (n+1) x (n+1) real matrices.
PositiveModel build_positive_model(int n, const Rational& s);

/// p = R^{2n} with complex structure J and Hermitean form of signature
/// (p, q); A = b J with b = -(2n+2) s^2 (so s * sbar = -kappa * b).
/// Embedded into skew-Hermitean trace-free complex matrices in real form.
NegativeModel build_negative_model(int n, int p, int q, const Rational& s);

/// p = Z (+) Z* (+) V with A' = diag(+1 x p, -1 x q) on the rank block.
/// Produces the validated triple, the canonical nilpotent ideal, the
/// so(p, q+1) embedding of the Levi part over Q(sqrt(2n+2)), and an
/// entrywise cross-check of the block bracket tables against the
/// generically generated brackets.
ZeroModel build_zero_model(int n, int r, int p, int q);

struct EmbeddingReport {
    bool subalgebra = false;        // domain closed under the bracket
    bool bracket_preserved = false; // E([x,y]) = [E(x),E(y)] on all pairs
    bool injective = false;
    bool membership = false;        // images inside the stated target algebra
    int image_dim = 0;
    std::vector<std::string> failures;

    bool ok() const { return subalgebra && bracket_preserved && injective && membership; }
};

template <typename S>
EmbeddingReport verify_embedding(const Embedding<S>& e, const SymmetricTriple& t);

extern template EmbeddingReport verify_embedding<Rational>(const Embedding<Rational>&,
                                                           const SymmetricTriple&);
extern template EmbeddingReport verify_embedding<QuadExt>(const Embedding<QuadExt>&,
                                                          const SymmetricTriple&);

}  // namespace rtk
