#include "rtk/curvature.hpp"

namespace rtk {

int pair_index(int i, int j, int d) {
    if (i < 0 || j < 0 || i >= d || j >= d || i == j)
        throw std::invalid_argument("pair_index: bad indices");
    if (i > j) std::swap(i, j);
    // pairs (0,1), (0,2), ..., (0,d-1), (1,2), ...
    return i * d - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::pair<int, int>> index_pairs(int d) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) out.emplace_back(i, j);
    return out;
}

CurvatureTensor::CurvatureTensor(SympSpace space) : space_(std::move(space)) {
    int d = space_.dim();
    values_.assign(static_cast<std::size_t>(d) * (d - 1) / 2, Matrix<Rational>(d, d));
}

void CurvatureTensor::set_value(int i, int j, Matrix<Rational> value) {
    int d = space_.dim();
    if (i >= j) throw std::invalid_argument("CurvatureTensor::set_value: need i < j");
    if (value.rows() != d || value.cols() != d)
        throw std::invalid_argument("CurvatureTensor::set_value: wrong matrix size");
    if (!is_inf_symplectic(space_, value))
        throw std::invalid_argument("CurvatureTensor::set_value: value not infinitesimally symplectic");
    values_[pair_index(i, j, d)] = std::move(value);
}

Matrix<Rational> CurvatureTensor::value(int i, int j) const {
    int d = space_.dim();
    if (i == j) return Matrix<Rational>(d, d);
    if (i < j) return values_[pair_index(i, j, d)];
    return -values_[pair_index(j, i, d)];
}

bool CurvatureTensor::is_zero() const {
    for (const auto& m : values_)
        if (!m.is_zero()) return false;
    return true;
}

CurvatureTensor CurvatureTensor::operator-(const CurvatureTensor& o) const {
    if (space_.dim() != o.space_.dim() || space_.omega != o.space_.omega)
        throw std::invalid_argument("CurvatureTensor-: tensors live on different spaces");
    CurvatureTensor r(space_);
    for (std::size_t k = 0; k < values_.size(); ++k) r.values_[k] = values_[k] - o.values_[k];
    return r;
}

RicciData make_ricci_data(const SympSpace& s, const Matrix<Rational>& a) {
    if (!is_inf_symplectic(s, a))
        throw std::invalid_argument("make_ricci_data: A is not infinitesimally symplectic");
    RicciData rd;
    rd.r = make_bilinear_form(s.omega * a);
    rd.A = a;
    rd.kappa = Rational(1, 2 * s.n + 2);
    // lambda present iff A^2 is an exact scalar multiple of the identity
    Matrix<Rational> a2 = a * a;
    Rational lam = a2.at(0, 0);
    bool scalar = true;
    for (int i = 0; i < a2.rows() && scalar; ++i)
        for (int j = 0; j < a2.cols(); ++j) {
            if ((i == j && a2.at(i, j) != lam) || (i != j && !a2.at(i, j).is_zero())) {
                scalar = false;
                break;
            }
        }
    if (scalar) rd.lambda = lam;
    return rd;
}

BilinearForm ricci(const CurvatureTensor& r) {
    int d = r.dim();
    Matrix<Rational> ric(d, d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (i == k) continue;
            Matrix<Rational> rik = r.value(i, k);
            for (int j = 0; j < d; ++j) ric.at(i, j) += rik.at(k, j);
        }
    return make_bilinear_form(std::move(ric));
}

Matrix<Rational> endomorphism_from_ricci(const SympSpace& s, const BilinearForm& r) {
    if (r.sym != Symmetry::symmetric)
        throw std::invalid_argument("endomorphism_from_ricci: Ricci form must be symmetric");
    if (r.m.rows() != s.dim() || r.m.cols() != s.dim())
        throw std::invalid_argument("endomorphism_from_ricci: size mismatch");
    return s.omega_inv * r.m;
}

CurvatureTensor ricci_type_curvature(const SympSpace& s, const Matrix<Rational>& a) {
    if (!is_inf_symplectic(s, a))
        throw std::invalid_argument("ricci_type_curvature: A is not infinitesimally symplectic");
    int d = s.dim();
    Rational kappa(1, d + 2);
    const Matrix<Rational> wa = s.omega * a;  // (wa)_{xz} = w(e_x, A e_z)
    CurvatureTensor r(s);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Matrix<Rational> val(d, d);
            const Rational wij = s.omega.at(i, j);
            for (int z = 0; z < d; ++z) {
                // column z of R(e_i, e_j)
                for (int t = 0; t < d; ++t) {
                    Rational acc = Rational(2) * wij * a.at(t, z);      // 2 w(X,Y) AZ
                    acc += s.omega.at(i, z) * a.at(t, j);               // w(X,Z) AY
                    acc -= s.omega.at(j, z) * a.at(t, i);               // -w(Y,Z) AX
                    if (t == i) acc -= wa.at(j, z);                     // -w(Y,AZ) X
                    if (t == j) acc += wa.at(i, z);                     // +w(X,AZ) Y
                    val.at(t, z) = kappa * acc;
                }
            }
            r.set_value(i, j, std::move(val));
        }
    return r;
}

WeylPart weyl_part(const CurvatureTensor& r) {
    BilinearForm ric = ricci(r);
    if (ric.sym != Symmetry::symmetric)
        throw std::invalid_argument(
            "weyl_part: ricci(R) is not symmetric, so R admits no Ricci-type part "
            "(first Bianchi fails for this tensor)");
    const SympSpace& s = r.space();
    Matrix<Rational> a = endomorphism_from_ricci(s, ric);
    WeylPart wp{r - ricci_type_curvature(s, a), make_ricci_data(s, a), false};
    wp.is_ricci_type = wp.W.is_zero();
    return wp;
}

std::vector<std::vector<Rational>> first_bianchi_defect(const CurvatureTensor& r) {
    int d = r.dim();
    std::vector<std::vector<Rational>> defects;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                std::vector<Rational> v(d);
                Matrix<Rational> rij = r.value(i, j), rjk = r.value(j, k), rki = r.value(k, i);
                for (int t = 0; t < d; ++t)
                    v[t] = rij.at(t, k) + rjk.at(t, i) + rki.at(t, j);
                defects.push_back(std::move(v));
            }
    return defects;
}

bool first_bianchi_holds(const CurvatureTensor& r) {
    for (const auto& v : first_bianchi_defect(r))
        if (!vec_is_zero(v)) return false;
    return true;
}

SympSpace direct_sum(const SympSpace& s1, const SympSpace& s2) {
    SympSpace s;
    s.n = s1.n + s2.n;
    s.omega = Matrix<Rational>::block_diag(s1.omega, s2.omega);
    s.omega_inv = Matrix<Rational>::block_diag(s1.omega_inv, s2.omega_inv);
    return s;
}

CurvatureTensor product_curvature(const CurvatureTensor& r1, const CurvatureTensor& r2) {
    SympSpace s = direct_sum(r1.space(), r2.space());
    int d1 = r1.dim(), d = s.dim();
    CurvatureTensor r(s);
    for (int i = 0; i < d1; ++i)
        for (int j = i + 1; j < d1; ++j) {
            Matrix<Rational> val(d, d);
            val.set_block(0, 0, r1.value(i, j));
            r.set_value(i, j, std::move(val));
        }
    for (int i = 0; i < r2.dim(); ++i)
        for (int j = i + 1; j < r2.dim(); ++j) {
            Matrix<Rational> val(d, d);
            val.set_block(d1, d1, r2.value(i, j));
            r.set_value(d1 + i, d1 + j, std::move(val));
        }
    return r;
}

std::vector<Matrix<Rational>> cross_term(const SympSpace& s1, const SympSpace& s2,
                                         const Matrix<Rational>& a2) {
    if (!is_inf_symplectic(s2, a2))
        throw std::invalid_argument("cross_term: A2 is not infinitesimally symplectic");
    // extract the S2-diagonal block of W(e_i, e_j) for basis pairs of S1,
    // from the actual Weyl part of the assembled product (A1 = 0; the
    // cross block does not depend on A1)
    CurvatureTensor r1 = ricci_type_curvature(s1, Matrix<Rational>(s1.dim(), s1.dim()));
    CurvatureTensor r2 = ricci_type_curvature(s2, a2);
    WeylPart wp = weyl_part(product_curvature(r1, r2));
    int d1 = s1.dim(), d2 = s2.dim();
    std::vector<Matrix<Rational>> out;
    for (auto [i, j] : index_pairs(d1))
        out.push_back(wp.W.value(i, j).block(d1, d1, d2, d2));
    return out;
}

}  // namespace rtk
