#include "rtk/symplectic.hpp"

namespace rtk {

SympSpace standard_symplectic_space(int n) {
    if (n < 1) throw std::invalid_argument("standard_symplectic_space: n must be >= 1");
    Matrix<Rational> omega(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        omega.at(i, n + i) = Rational(-1);
        omega.at(n + i, i) = Rational(1);
    }
    SympSpace s;
    s.n = n;
    s.omega = omega;
    s.omega_inv = -omega;  // omega^2 = -Id in the standard basis
    return s;
}

SympSpace make_symp_space(const Matrix<Rational>& omega) {
    if (!omega.is_square() || omega.rows() % 2 != 0 || omega.rows() == 0)
        throw std::invalid_argument("make_symp_space: dimension must be even and positive");
    if (!omega.is_antisymmetric())
        throw std::invalid_argument("make_symp_space: form is not antisymmetric");
    SympSpace s;
    s.n = omega.rows() / 2;
    s.omega = omega;
    s.omega_inv = inverse(omega);  // throws when degenerate
    return s;
}

Rational omega_pair(const SympSpace& s, const std::vector<Rational>& u, const std::vector<Rational>& v) {
    std::vector<Rational> wv = mat_vec(s.omega, v);
    if (u.size() != wv.size()) throw std::invalid_argument("omega_pair: dimension mismatch");
    Rational acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * wv[i];
    return acc;
}

static void check_endo_dims(const SympSpace& s, const Matrix<Rational>& a, const char* who) {
    if (a.rows() != s.dim() || a.cols() != s.dim())
        throw std::invalid_argument(std::string(who) + ": endomorphism size does not match space");
}

bool is_inf_symplectic(const SympSpace& s, const Matrix<Rational>& a) {
    check_endo_dims(s, a, "is_inf_symplectic");
    return (s.omega * a).is_symmetric();
}

bool is_antisymplectic_symmetric(const SympSpace& s, const Matrix<Rational>& b) {
    check_endo_dims(s, b, "is_antisymplectic_symmetric");
    return (s.omega * b).is_antisymmetric();
}

std::vector<Matrix<Rational>> sp_basis(const SympSpace& s) {
    // A in sp(omega)  <=>  omega*A symmetric  <=>  A = omega^{-1} * S
    int d = s.dim();
    std::vector<Matrix<Rational>> basis;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Matrix<Rational> sym(d, d);
            sym.at(i, j) = Rational(1);
            sym.at(j, i) = Rational(1);
            basis.push_back(s.omega_inv * sym);
        }
    return basis;
}

std::vector<Matrix<Rational>> antisymplectic_basis(const SympSpace& s) {
    int d = s.dim();
    std::vector<Matrix<Rational>> basis;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Matrix<Rational> anti(d, d);
            anti.at(i, j) = Rational(1);
            anti.at(j, i) = Rational(-1);
            basis.push_back(s.omega_inv * anti);
        }
    return basis;
}

BilinearForm make_bilinear_form(Matrix<Rational> m) {
    BilinearForm f;
    if (m.is_symmetric())
        f.sym = Symmetry::symmetric;
    else if (m.is_antisymmetric())
        f.sym = Symmetry::antisymmetric;
    else
        f.sym = Symmetry::none;
    f.m = std::move(m);
    return f;
}

std::pair<int, int> signature(const BilinearForm& f) {
    if (f.sym != Symmetry::symmetric)
        throw std::invalid_argument("signature: form is not symmetric");
    return signature(f.m);
}

SubspaceInfo subspace_ops(const SympSpace& s, const std::vector<std::vector<Rational>>& vectors) {
    int d = s.dim();
    SubspaceInfo info;
    // pairing matrix P with rows u_i^T * omega; orthogonal = ker P
    Matrix<Rational> pairing(static_cast<int>(vectors.size()), d);
    Span<Rational> u_span(d);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != d)
            throw std::invalid_argument("subspace_ops: vector has wrong dimension");
        std::vector<Rational> wu = mat_vec(s.omega.transpose(), vectors[i]);
        for (int j = 0; j < d; ++j) pairing.at(static_cast<int>(i), j) = wu[j];
        u_span.add(vectors[i]);
    }
    info.symplectic_orthogonal = nullspace(pairing);
    Span<Rational> orth_span(d);
    for (const auto& v : info.symplectic_orthogonal) orth_span.add(v);
    info.is_isotropic = true;
    for (const auto& row : u_span.echelon_basis())
        if (!orth_span.contains(row)) { info.is_isotropic = false; break; }
    info.is_lagrangian = info.is_isotropic && u_span.dim() == s.n;
    return info;
}

}  // namespace rtk
