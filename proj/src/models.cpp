#include "rtk/models.hpp"

#include <array>
#include <sstream>

namespace rtk {

namespace {

Matrix<Rational> diag_pm(int p, int q) {
    Matrix<Rational> d(p + q, p + q);
    for (int i = 0; i < p; ++i) d.at(i, i) = Rational(1);
    for (int i = p; i < p + q; ++i) d.at(i, i) = Rational(-1);
    return d;
}

template <typename S>
Matrix<S> to_scalar(const Matrix<Rational>& m) {
    Matrix<S> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = S(m.at(i, j));
    return r;
}

std::vector<Rational> unit_coords(int len, int idx) {
    std::vector<Rational> v(len);
    v[idx] = Rational(1);
    return v;
}

}  // namespace

PositiveModel build_positive_model(int n, const Rational& s) {
    if (n < 2) throw std::invalid_argument("build_positive_model: n must be >= 2");
    if (s.is_zero()) throw std::invalid_argument("build_positive_model: s must be nonzero");
    SympSpace space = standard_symplectic_space(n);
    Rational a = Rational(n + 1) * s * s;
    Matrix<Rational> A(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        A.at(i, i) = a;
        A.at(n + i, n + i) = -a;
    }
    PositiveModel model{build_triple_from_A(space, A), A, a, a * a, {}};

    // j(C, X, xi) = [[C - 2k Tr(C) I, sX], [s xi^T, -2k Tr(C)]]
    Rational two_kappa(2, 2 * n + 2);
    Embedding<Rational>& em = model.embedding;
    em.target_dim = n + 1;
    em.target = TargetAlgebra::trace_free;
    int dim_k = model.triple.dim_k(), dim_g = model.triple.dim_g();
    for (int idx = 0; idx < dim_k; ++idx) {
        const Matrix<Rational>& kmat = model.triple.k_basis()[idx];
        // k is the symplectic commutant of A: block-diagonal [[C,0],[0,-C^T]]
        Matrix<Rational> c = kmat.block(0, 0, n, n);
        if (!kmat.block(0, n, n, n).is_zero() || !kmat.block(n, 0, n, n).is_zero() ||
            kmat.block(n, n, n, n) != -c.transpose())
            throw std::logic_error("build_positive_model: k element is not gl(V)-shaped");
        Matrix<Rational> img(n + 1, n + 1);
        Rational tr = c.trace();
        img.set_block(0, 0, c - (two_kappa * tr) * Matrix<Rational>::identity(n));
        img.at(n, n) = -two_kappa * tr;
        em.domain.push_back(unit_coords(dim_g, idx));
        em.images.push_back(std::move(img));
    }
    for (int i = 0; i < n; ++i) {  // X in V
        Matrix<Rational> img(n + 1, n + 1);
        img.at(i, n) = s;
        em.domain.push_back(unit_coords(dim_g, dim_k + i));
        em.images.push_back(std::move(img));
    }
    for (int i = 0; i < n; ++i) {  // xi in V*
        Matrix<Rational> img(n + 1, n + 1);
        img.at(n, i) = s;
        em.domain.push_back(unit_coords(dim_g, dim_k + n + i));
        em.images.push_back(std::move(img));
    }
    return model;
}

NegativeModel build_negative_model(int n, int p, int q, const Rational& s) {
    if (n < 2) throw std::invalid_argument("build_negative_model: n must be >= 2");
    if (p < 0 || q < 0 || p + q != n)
        throw std::invalid_argument("build_negative_model: need p + q = n with p, q >= 0");
    if (s.is_zero()) throw std::invalid_argument("build_negative_model: s must be nonzero");
    // p_space = C^n realified; <v,w> = vbar^T eps w; Omega = Im<,>
    Matrix<Rational> eps = diag_pm(p, q);
    Matrix<Rational> omega(2 * n, 2 * n);
    omega.set_block(0, n, eps);
    omega.set_block(n, 0, -eps);
    SympSpace space = make_symp_space(omega);
    Matrix<Rational> J(2 * n, 2 * n);  // multiplication by i on (x, y)
    for (int i = 0; i < n; ++i) {
        J.at(i, n + i) = Rational(-1);
        J.at(n + i, i) = Rational(1);
    }
    Rational b = Rational(-(2 * n + 2)) * s * s;
    Matrix<Rational> A = b * J;
    NegativeModel model{build_triple_from_A(space, A), A, J, b, -(b * b), {}};

    // j(C, X) = [[C - 2k Tr(C) I, sX], [-s <X, .>, -2k Tr(C)]], realified
    Rational two_kappa(2, 2 * n + 2);
    Embedding<Rational>& em = model.embedding;
    int m = n + 1;
    em.target_dim = 2 * m;  // real realization of complex m x m
    em.target = TargetAlgebra::skew_hermitian;
    em.form = Matrix<Rational>(m, m);
    em.form.set_block(0, 0, eps);
    em.form.at(n, n) = Rational(1);
    int dim_k = model.triple.dim_k(), dim_g = model.triple.dim_g();
    auto realify = [m](const Matrix<Rational>& re, const Matrix<Rational>& im) {
        Matrix<Rational> r(2 * m, 2 * m);
        r.set_block(0, 0, re);
        r.set_block(m, m, re);
        r.set_block(0, m, -im);
        r.set_block(m, 0, im);
        return r;
    };
    for (int idx = 0; idx < dim_k; ++idx) {
        const Matrix<Rational>& kmat = model.triple.k_basis()[idx];
        // complex-linear: kmat = [[P, -Q], [Q, P]] with Chat = P + iQ
        Matrix<Rational> pr = kmat.block(0, 0, n, n), qi = kmat.block(n, 0, n, n);
        if (kmat.block(n, n, n, n) != pr || kmat.block(0, n, n, n) != -qi)
            throw std::logic_error("build_negative_model: k element does not commute with J");
        Rational trp = pr.trace(), trq = qi.trace();
        Matrix<Rational> re(m, m), im(m, m);
        re.set_block(0, 0, pr - (two_kappa * trp) * Matrix<Rational>::identity(n));
        re.at(n, n) = -two_kappa * trp;
        im.set_block(0, 0, qi - (two_kappa * trq) * Matrix<Rational>::identity(n));
        im.at(n, n) = -two_kappa * trq;
        em.domain.push_back(unit_coords(dim_g, idx));
        em.images.push_back(realify(re, im));
    }
    for (int i = 0; i < n; ++i) {  // X = e_i: Xhat = ehat_i
        Matrix<Rational> re(m, m), im(m, m);
        re.at(i, n) = s;                       // column sX
        re.at(n, i) = -s * eps.at(i, i);       // row -s Xhat^dagger eps
        em.domain.push_back(unit_coords(dim_g, dim_k + i));
        em.images.push_back(realify(re, im));
    }
    for (int i = 0; i < n; ++i) {  // X = f_i: Xhat = i * ehat_i
        Matrix<Rational> re(m, m), im(m, m);
        im.at(i, n) = s;                      // Im(s * i * ehat_i)
        im.at(n, i) = s * eps.at(i, i);       // Im(-s * conj(i ehat_i)^T eps)
        em.domain.push_back(unit_coords(dim_g, dim_k + n + i));
        em.images.push_back(realify(re, im));
    }
    return model;
}

namespace {

// k element of the zero model in block form [[K, L, -M^T J'], [0, -K^T, 0], [0, M, 0]]
Matrix<Rational> zero_k_block(const Matrix<Rational>& K, const Matrix<Rational>& L,
                              const Matrix<Rational>& M, const Matrix<Rational>& Jp, int r, int w) {
    Matrix<Rational> out(2 * r + w, 2 * r + w);
    out.set_block(0, 0, K);
    out.set_block(0, r, L);
    out.set_block(r, r, -K.transpose());
    if (w > 0) {
        out.set_block(0, 2 * r, -(M.transpose() * Jp));
        out.set_block(2 * r, r, M);
    }
    return out;
}

struct ZeroVec {
    std::vector<Rational> u, v, w;
};

std::vector<Rational> zero_p_vector(const ZeroVec& x, int r, int wdim) {
    std::vector<Rational> out(2 * r + wdim);
    for (int i = 0; i < r; ++i) out[i] = x.u[i];
    for (int i = 0; i < r; ++i) out[r + i] = x.v[i];
    for (int i = 0; i < wdim; ++i) out[2 * r + i] = x.w[i];
    return out;
}

Matrix<Rational> outer(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Matrix<Rational> m(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = a[i] * b[j];
    return m;
}

}  // namespace

ZeroModel build_zero_model(int n, int r, int p, int q) {
    if (n < 2) throw std::invalid_argument("build_zero_model: n must be >= 2");
    if (r < 1 || r > n) throw std::invalid_argument("build_zero_model: need 1 <= rank <= n");
    if (p < 0 || q < 0 || p + q != r)
        throw std::invalid_argument("build_zero_model: need p + q = rank with p, q >= 0");
    int wdim = 2 * (n - r);
    Matrix<Rational> Ap = diag_pm(p, q);
    Matrix<Rational> Jp(wdim, wdim);
    for (int i = 0; i < n - r; ++i) {
        Jp.at(i, n - r + i) = Rational(-1);
        Jp.at(n - r + i, i) = Rational(1);
    }
    Matrix<Rational> omega(2 * n, 2 * n);
    for (int i = 0; i < r; ++i) {
        omega.at(i, r + i) = Rational(-1);
        omega.at(r + i, i) = Rational(1);
    }
    omega.set_block(2 * r, 2 * r, Jp);
    SympSpace space = make_symp_space(omega);
    Matrix<Rational> A(2 * n, 2 * n);
    A.set_block(0, r, Ap);  // maps Z* isomorphically onto Z; A^2 = 0
    ZeroModel model{build_triple_from_A(space, A), A, {}, {}, {}};
    const SymmetricTriple& t = model.triple;
    int dim_k = t.dim_k(), dim_g = t.dim_g();

    model.radical_basis = nilpotent_radical(t, A);

    // Levi part: so(p,q) block matrices plus Z*, mapped into so(p, q+1)
    // over Q(sqrt(2n+2)): (K, v) -> [[K, -sqrt(kappa) A'v], [-sqrt(kappa) v^T, 0]]
    QuadExt sqrt_kappa = sqrt_in_quadext(Rational(1, 2 * n + 2));
    Embedding<QuadExt>& em = model.levi_map;
    em.target_dim = r + 1;
    em.target = TargetAlgebra::special_orthogonal;
    em.form = Matrix<QuadExt>(r + 1, r + 1);
    for (int i = 0; i < r; ++i) em.form.at(i, i) = QuadExt(Ap.at(i, i));
    em.form.at(r, r) = QuadExt(Rational(-1));
    for (int a = 0; a < r; ++a)
        for (int bcol = a + 1; bcol < r; ++bcol) {
            // so(p,q) generator K = A' (E_ab - E_ba)
            Matrix<Rational> theta(r, r);
            theta.at(a, bcol) = Rational(1);
            theta.at(bcol, a) = Rational(-1);
            Matrix<Rational> K = Ap * theta;
            Matrix<Rational> kelem = zero_k_block(K, Matrix<Rational>(r, r),
                                                  Matrix<Rational>(wdim, r), Jp, r, wdim);
            auto coords = t.k_coords(kelem);
            if (!coords)
                throw std::logic_error("build_zero_model: so(p,q) block escapes span(k)");
            std::vector<Rational> dom(dim_g);
            for (int i = 0; i < dim_k; ++i) dom[i] = (*coords)[i];
            em.domain.push_back(std::move(dom));
            Matrix<QuadExt> img(r + 1, r + 1);
            img.set_block(0, 0, to_scalar<QuadExt>(K));
            em.images.push_back(std::move(img));
        }
    for (int i = 0; i < r; ++i) {  // v = zhat*_i
        em.domain.push_back(unit_coords(dim_g, dim_k + r + i));
        Matrix<QuadExt> img(r + 1, r + 1);
        for (int row = 0; row < r; ++row)
            img.at(row, r) = QuadExt(-Ap.at(row, i)) * sqrt_kappa;
        img.at(r, i) = -sqrt_kappa;
        em.images.push_back(std::move(img));
    }

    // cross-check of the printed block bracket tables against the
    // generically generated brackets
    auto& bad = model.table_discrepancies;
    Rational kap(1, 2 * n + 2);
    auto complain = [&bad](const std::string& what) { bad.push_back(what); };

    // [p, p]: K~ = A'(v' v^T - v v'^T), L~ = A'B + B^T A' + 2(Tr B + w^T J' w') A'
    // with B = v u'^T - v' u^T, M~-part = (A'(v' w^T - v w'^T))^T
    int d = 2 * n;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            ZeroVec x{std::vector<Rational>(r), std::vector<Rational>(r), std::vector<Rational>(wdim)};
            ZeroVec y = x;
            auto fill = [&](ZeroVec& zv, int idx) {
                if (idx < r) zv.u[idx] = Rational(1);
                else if (idx < 2 * r) zv.v[idx - r] = Rational(1);
                else zv.w[idx - 2 * r] = Rational(1);
            };
            fill(x, i);
            fill(y, j);
            Matrix<Rational> Kt = Ap * (outer(y.v, x.v) - outer(x.v, y.v));
            Matrix<Rational> B = outer(x.v, y.u) - outer(y.v, x.u);
            Rational wjw;
            {
                auto jw = mat_vec(Jp, y.w);
                for (int c = 0; c < wdim; ++c) wjw += x.w[c] * jw[c];
            }
            Matrix<Rational> Lt = Ap * B + B.transpose() * Ap +
                                  (Rational(2) * (B.trace() + wjw)) * Ap;
            Matrix<Rational> Mt = (Ap * (outer(y.v, x.w) - outer(x.v, y.w))).transpose();
            Matrix<Rational> printed =
                (-kap) * zero_k_block(Kt, Lt, -Mt, Jp, r, wdim);
            // note: table lists the M block of the bracket as +k (...)^T = -k Mt
            Matrix<Rational> generic = t.pp_bracket_matrix(i, j);
            if (printed != generic) {
                std::ostringstream os;
                os << "pp table mismatch at pair (" << i << "," << j << ")";
                complain(os.str());
            }
        }

    // [k, k]: ([K,K'], L'', -M K'^T + M' K^T) with
    // L'' = KL' - L K'^T - K'L + L' K^T - M^T J' M' + M'^T J' M
    {
        std::vector<std::array<Matrix<Rational>, 3>> gens;
        for (int a = 0; a < r; ++a)
            for (int bcol = a + 1; bcol < r; ++bcol) {
                Matrix<Rational> theta(r, r);
                theta.at(a, bcol) = Rational(1);
                theta.at(bcol, a) = Rational(-1);
                gens.push_back({Ap * theta, Matrix<Rational>(r, r), Matrix<Rational>(wdim, r)});
            }
        for (int a = 0; a < r; ++a)
            for (int bcol = a; bcol < r; ++bcol) {
                Matrix<Rational> L(r, r);
                L.at(a, bcol) = Rational(1);
                L.at(bcol, a) = Rational(1);
                gens.push_back({Matrix<Rational>(r, r), L, Matrix<Rational>(wdim, r)});
            }
        for (int a = 0; a < wdim; ++a)
            for (int bcol = 0; bcol < r; ++bcol) {
                Matrix<Rational> M(wdim, r);
                M.at(a, bcol) = Rational(1);
                gens.push_back({Matrix<Rational>(r, r), Matrix<Rational>(r, r), M});
            }
        if (static_cast<int>(gens.size()) != dim_k)
            complain("block parameter count disagrees with dim k");
        for (std::size_t x = 0; x < gens.size(); ++x)
            for (std::size_t y = x + 1; y < gens.size(); ++y) {
                const auto& [K1, L1, M1] = gens[x];
                const auto& [K2, L2, M2] = gens[y];
                Matrix<Rational> Kn = K1 * K2 - K2 * K1;
                Matrix<Rational> Ln = K1 * L2 - L1 * K2.transpose() - K2 * L1 +
                                      L2 * K1.transpose();
                if (wdim > 0)
                    Ln += -(M1.transpose() * (Jp * M2)) + M2.transpose() * (Jp * M1);
                Matrix<Rational> Mn = -(M1 * K2.transpose()) + M2 * K1.transpose();
                Matrix<Rational> printed = zero_k_block(Kn, Ln, Mn, Jp, r, wdim);
                Matrix<Rational> e1 = zero_k_block(K1, L1, M1, Jp, r, wdim);
                Matrix<Rational> e2 = zero_k_block(K2, L2, M2, Jp, r, wdim);
                if (printed != e1 * e2 - e2 * e1) {
                    std::ostringstream os;
                    os << "kk table mismatch at generator pair (" << x << "," << y << ")";
                    complain(os.str());
                }
            }

        // [k, p]: (Ku + Lv - M^T J' w, -K^T v, M v)
        for (const auto& [K, L, M] : gens)
            for (int idx = 0; idx < d; ++idx) {
                ZeroVec zv{std::vector<Rational>(r), std::vector<Rational>(r),
                           std::vector<Rational>(wdim)};
                if (idx < r) zv.u[idx] = Rational(1);
                else if (idx < 2 * r) zv.v[idx - r] = Rational(1);
                else zv.w[idx - 2 * r] = Rational(1);
                ZeroVec res;
                res.u = vec_add(mat_vec(K, zv.u), mat_vec(L, zv.v));
                if (wdim > 0) {
                    auto mw = mat_vec(M.transpose() * Jp, zv.w);
                    for (int c = 0; c < r; ++c) res.u[c] -= mw[c];
                }
                res.v = vec_scale(mat_vec(K.transpose(), zv.v), Rational(-1));
                res.w = mat_vec(M, zv.v);
                auto printed = zero_p_vector(res, r, wdim);
                auto generic = mat_vec(zero_k_block(K, L, M, Jp, r, wdim),
                                       zero_p_vector(zv, r, wdim));
                if (printed != generic) {
                    std::ostringstream os;
                    os << "kp table mismatch";
                    complain(os.str());
                }
            }
    }
    return model;
}

template <typename S>
EmbeddingReport verify_embedding(const Embedding<S>& e, const SymmetricTriple& t) {
    EmbeddingReport rep;
    int nd = static_cast<int>(e.domain.size());
    rep.subalgebra = true;
    rep.bracket_preserved = true;
    rep.membership = true;
    CoordinateSolver<Rational> dom_solver(e.domain);

    auto image_of = [&](const std::vector<Rational>& coords) {
        Matrix<S> img(e.target_dim, e.target_dim);
        for (int i = 0; i < nd; ++i)
            if (!coords[i].is_zero()) img += S(coords[i]) * e.images[i];
        return img;
    };

    for (int x = 0; x < nd && rep.bracket_preserved; ++x)
        for (int y = x + 1; y < nd; ++y) {
            std::vector<Rational> br = t.bracket_coords(e.domain[x], e.domain[y]);
            auto c = dom_solver.coords(br);
            if (!c) {
                rep.subalgebra = false;
                rep.bracket_preserved = false;
                rep.failures.push_back("domain is not closed under the bracket at pair (" +
                                       std::to_string(x) + "," + std::to_string(y) + ")");
                break;
            }
            Matrix<S> lhs = image_of(*c);
            Matrix<S> rhs = e.images[x] * e.images[y] - e.images[y] * e.images[x];
            if (lhs != rhs) {
                rep.bracket_preserved = false;
                rep.failures.push_back("bracket not preserved at pair (" + std::to_string(x) +
                                       "," + std::to_string(y) + ")");
                break;
            }
        }

    {
        Span<S> span(e.target_dim * e.target_dim);
        for (const auto& img : e.images) span.add(img.vectorize());
        rep.image_dim = span.dim();
        rep.injective = rep.image_dim == nd;
        if (!rep.injective) rep.failures.push_back("images are linearly dependent");
    }

    for (int i = 0; i < nd && rep.membership; ++i) {
        const Matrix<S>& m = e.images[i];
        switch (e.target) {
            case TargetAlgebra::trace_free:
                rep.membership = m.trace().is_zero();
                break;
            case TargetAlgebra::skew_hermitian: {
                int half = e.target_dim / 2;
                Matrix<S> pr = m.block(0, 0, half, half), qi = m.block(half, 0, half, half);
                const Matrix<S>& h = e.form;
                rep.membership = m.block(half, half, half, half) == pr &&
                                 m.block(0, half, half, half) == -qi &&
                                 (pr.transpose() * h + h * pr).is_zero() &&
                                 (qi.transpose() * h - h * qi).is_zero() &&
                                 pr.trace().is_zero() && qi.trace().is_zero();
                break;
            }
            case TargetAlgebra::special_orthogonal:
                rep.membership = (m.transpose() * e.form + e.form * m).is_zero();
                break;
        }
        if (!rep.membership)
            rep.failures.push_back("image " + std::to_string(i) + " outside the target algebra");
    }
    return rep;
}

template EmbeddingReport verify_embedding<Rational>(const Embedding<Rational>&,
                                                    const SymmetricTriple&);
template EmbeddingReport verify_embedding<QuadExt>(const Embedding<QuadExt>&,
                                                   const SymmetricTriple&);

}  // namespace rtk
