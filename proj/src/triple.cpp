#include "rtk/triple.hpp"

#include <sstream>

namespace rtk {

SymmetricTriple SymmetricTriple::from_parts(SympSpace space, std::vector<Matrix<Rational>> k_basis,
                                            std::vector<std::vector<Rational>> pp_coeffs) {
    SymmetricTriple t;
    int d = space.dim();
    std::size_t npairs = static_cast<std::size_t>(d) * (d - 1) / 2;
    if (pp_coeffs.size() != npairs)
        throw std::invalid_argument("SymmetricTriple: need one pp coefficient vector per basis pair");
    for (const auto& m : k_basis)
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("SymmetricTriple: k basis matrix has wrong size");
    for (const auto& c : pp_coeffs)
        if (c.size() != k_basis.size())
            throw std::invalid_argument("SymmetricTriple: pp coefficients have wrong length");
    t.space_ = std::move(space);
    t.k_basis_ = std::move(k_basis);
    t.pp_coeffs_ = std::move(pp_coeffs);
    return t;
}

void SymmetricTriple::ensure_pp_mats() const {
    if (!pp_mats_.empty() || pp_coeffs_.empty()) return;
    int d = space_.dim();
    pp_mats_.reserve(pp_coeffs_.size());
    for (const auto& c : pp_coeffs_) {
        Matrix<Rational> m(d, d);
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (c[a].is_zero()) continue;
            m += c[a] * k_basis_[a];
        }
        pp_mats_.push_back(std::move(m));
    }
}

Matrix<Rational> SymmetricTriple::pp_bracket_matrix(int i, int j) const {
    ensure_pp_mats();
    int d = space_.dim();
    if (i == j) return Matrix<Rational>(d, d);
    if (i < j) return pp_mats_[pair_index(i, j, d)];
    return -pp_mats_[pair_index(j, i, d)];
}

GElem SymmetricTriple::bracket(const GElem& x, const GElem& y) const {
    ensure_pp_mats();
    int d = space_.dim();
    GElem r;
    r.k = x.k * y.k - y.k * x.k;
    for (int i = 0; i < d; ++i) {
        if (x.p[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (i == j || y.p[j].is_zero()) continue;
            Rational c = x.p[i] * y.p[j];
            if (i < j)
                r.k += c * pp_mats_[pair_index(i, j, d)];
            else
                r.k -= c * pp_mats_[pair_index(j, i, d)];
        }
    }
    std::vector<Rational> py = mat_vec(x.k, y.p), px = mat_vec(y.k, x.p);
    r.p.resize(d);
    for (int i = 0; i < d; ++i) r.p[i] = py[i] - px[i];
    return r;
}

GElem SymmetricTriple::basis_element(int idx) const {
    int d = space_.dim();
    GElem e;
    e.k = Matrix<Rational>(d, d);
    e.p.assign(d, Rational(0));
    if (idx < dim_k())
        e.k = k_basis_[idx];
    else
        e.p[idx - dim_k()] = Rational(1);
    return e;
}

GElem SymmetricTriple::element_from_coords(const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != dim_g())
        throw std::invalid_argument("element_from_coords: wrong length");
    int d = space_.dim();
    GElem e;
    e.k = Matrix<Rational>(d, d);
    e.p.assign(d, Rational(0));
    for (int a = 0; a < dim_k(); ++a)
        if (!coords[a].is_zero()) e.k += coords[a] * k_basis_[a];
    for (int i = 0; i < d; ++i) e.p[i] = coords[dim_k() + i];
    return e;
}

const CoordinateSolver<Rational>* SymmetricTriple::solver() const {
    if (k_solver_) return &*k_solver_;
    if (k_solver_failed_) return nullptr;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(k_basis_.size());
    for (const auto& m : k_basis_) rows.push_back(m.vectorize());
    try {
        k_solver_.emplace(rows);
    } catch (const std::invalid_argument&) {
        k_solver_failed_ = true;  // dependent k basis; validation will say so
        return nullptr;
    }
    return &*k_solver_;
}

std::optional<std::vector<Rational>> SymmetricTriple::k_coords(const Matrix<Rational>& m) const {
    const auto* s = solver();
    if (!s) return std::nullopt;
    return s->coords(m.vectorize());
}

std::optional<std::vector<Rational>> SymmetricTriple::coords(const GElem& x) const {
    auto kc = k_coords(x.k);
    if (!kc) return std::nullopt;
    std::vector<Rational> c = std::move(*kc);
    c.insert(c.end(), x.p.begin(), x.p.end());
    return c;
}

void SymmetricTriple::ensure_bracket_table() const {
    if (!bracket_table_.empty()) return;
    int m = dim_g();
    zero_coords_.assign(m, Rational(0));
    bracket_table_.assign(m, std::vector<std::vector<Rational>>());
    for (int a = 0; a < m; ++a) {
        bracket_table_[a].resize(m);
        for (int b = 0; b < m; ++b) bracket_table_[a][b] = zero_coords_;
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            GElem br = bracket(basis_element(a), basis_element(b));
            auto c = coords(br);
            if (!c)
                throw std::domain_error(
                    "bracket_table: triple is not closed (a bracket escapes k (+) p)");
            bracket_table_[a][b] = *c;
            for (int i = 0; i < m; ++i) bracket_table_[b][a][i] = -(*c)[i];
        }
}

const std::vector<Rational>& SymmetricTriple::bracket_table(int a, int b) const {
    ensure_bracket_table();
    if (a == b) return zero_coords_;
    return bracket_table_[a][b];
}

std::vector<Rational> SymmetricTriple::bracket_coords(const std::vector<Rational>& x,
                                                      const std::vector<Rational>& y) const {
    ensure_bracket_table();
    int m = dim_g();
    std::vector<Rational> r(m);
    for (int a = 0; a < m; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < m; ++b) {
            if (y[b].is_zero() || a == b) continue;
            Rational c = x[a] * y[b];
            const auto& t = bracket_table_[a][b];
            for (int i = 0; i < m; ++i)
                if (!t[i].is_zero()) r[i] += c * t[i];
        }
    }
    return r;
}

static SymmetricTriple build_from_curvature(const SympSpace& s, const CurvatureTensor& r) {
    int d = s.dim();
    auto pairs = index_pairs(d);
    // greedy independent subset of the curvature values spans k
    Span<Rational> span(d * d);
    std::vector<Matrix<Rational>> k_basis;
    for (auto [i, j] : pairs) {
        Matrix<Rational> v = r.value(i, j);
        if (span.add(v.vectorize())) k_basis.push_back(std::move(v));
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& m : k_basis) rows.push_back(m.vectorize());
    CoordinateSolver<Rational> solver(rows);
    std::vector<std::vector<Rational>> pp;
    pp.reserve(pairs.size());
    for (auto [i, j] : pairs) {
        auto c = solver.coords((-r.value(i, j)).vectorize());
        if (!c) throw std::logic_error("build_triple_from_A: curvature value escaped its own span");
        pp.push_back(std::move(*c));
    }
    return SymmetricTriple::from_parts(s, std::move(k_basis), std::move(pp));
}

SymmetricTriple build_triple_from_A(const SympSpace& s, const Matrix<Rational>& a) {
    RicciData rd = make_ricci_data(s, a);  // throws when A is not admissible
    if (!rd.lambda)
        throw std::domain_error(
            "build_triple_from_A: A^2 is not a scalar multiple of Id, "
            "so no symmetric symplectic triple exists for this A");
    return build_triple_from_A_unchecked(s, a);
}

SymmetricTriple build_triple_from_A_unchecked(const SympSpace& s, const Matrix<Rational>& a) {
    CurvatureTensor r = ricci_type_curvature(s, a);  // still requires admissibility
    SymmetricTriple t = build_from_curvature(s, r);
    // record structure constants of [k,k] when k closes
    int k = t.dim_k();
    std::vector<std::vector<Rational>> kk;
    bool closed = true;
    for (int x = 0; x < k && closed; ++x)
        for (int y = x + 1; y < k; ++y) {
            Matrix<Rational> comm = t.k_basis()[x] * t.k_basis()[y] - t.k_basis()[y] * t.k_basis()[x];
            auto c = t.k_coords(comm);
            if (!c) { closed = false; break; }
            kk.push_back(std::move(*c));
        }
    if (closed) t.kk_structure_ = std::move(kk);
    return t;
}

TripleReport validate_triple(const SymmetricTriple& t) {
    TripleReport report;
    const SympSpace& s = t.space();
    int d = s.dim(), k = t.dim_k();
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    // (d) independence (faithfulness of the k action is structural)
    {
        Span<Rational> span(d * d);
        int got = 0;
        for (const auto& m : t.k_basis())
            if (span.add(m.vectorize())) ++got;
        add("k_basis_independent", got == k,
            "rank " + std::to_string(got) + " of " + std::to_string(k));
    }

    // (c) every k element preserves omega
    {
        int bad = -1;
        for (int a = 0; a < k; ++a)
            if (!is_inf_symplectic(s, t.k_basis()[a])) { bad = a; break; }
        add("k_preserves_omega", bad < 0,
            bad < 0 ? "all " + std::to_string(k) + " basis elements infinitesimally symplectic"
                    : "k basis element " + std::to_string(bad) + " does not preserve omega");
    }

    // (b) [p,p] = k as spans
    {
        Span<Rational> pp_span(d * d);
        for (auto [i, j] : index_pairs(d)) pp_span.add(t.pp_bracket_matrix(i, j).vectorize());
        Span<Rational> k_span(d * d);
        for (const auto& m : t.k_basis()) k_span.add(m.vectorize());
        bool equal = pp_span.dim() == k_span.dim();
        add("pp_spans_k", equal,
            "dim span[p,p] = " + std::to_string(pp_span.dim()) +
                ", dim k = " + std::to_string(k_span.dim()));
    }

    // (a-closure) [k,k] inside span(k) and consistent structure constants
    bool closed = true;
    {
        std::string detail = "all commutators land in k";
        std::size_t idx = 0;
        for (int a = 0; a < k && closed; ++a)
            for (int b = a + 1; b < k; ++b, ++idx) {
                Matrix<Rational> comm =
                    t.k_basis()[a] * t.k_basis()[b] - t.k_basis()[b] * t.k_basis()[a];
                auto c = t.k_coords(comm);
                if (!c) {
                    closed = false;
                    detail = "[C_" + std::to_string(a) + ", C_" + std::to_string(b) +
                             "] escapes span(k)";
                    break;
                }
                if (t.kk_structure()) {
                    const auto& stored = (*t.kk_structure())[idx];
                    if (stored != *c) {
                        closed = false;
                        detail = "stored kk structure constants disagree with commutators at (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")";
                        break;
                    }
                }
            }
        add("kk_closure", closed, detail);
    }

    // (a) Jacobi over every basis triple of g, on concrete elements
    {
        int m = t.dim_g();
        bool ok = true;
        std::string detail = "all " + std::to_string(m * (m - 1) * (m - 2) / 6) + " basis triples";
        std::vector<GElem> basis;
        for (int i = 0; i < m; ++i) basis.push_back(t.basis_element(i));
        for (int x = 0; x < m && ok; ++x)
            for (int y = x + 1; y < m && ok; ++y)
                for (int z = y + 1; z < m; ++z) {
                    GElem j1 = t.bracket(t.bracket(basis[x], basis[y]), basis[z]);
                    GElem j2 = t.bracket(t.bracket(basis[y], basis[z]), basis[x]);
                    GElem j3 = t.bracket(t.bracket(basis[z], basis[x]), basis[y]);
                    Matrix<Rational> ksum = j1.k + j2.k + j3.k;
                    std::vector<Rational> psum = vec_add(vec_add(j1.p, j2.p), j3.p);
                    if (!ksum.is_zero() || !vec_is_zero(psum)) {
                        ok = false;
                        std::ostringstream os;
                        os << "Jacobi fails at basis triple (" << x << "," << y << "," << z << ")";
                        detail = os.str();
                        break;
                    }
                }
        add("jacobi", ok, detail);
    }

    report.valid = true;
    for (const auto& c : report.checks) report.valid = report.valid && c.passed;
    return report;
}

CurvatureTensor curvature_of_triple(const SymmetricTriple& t) {
    CurvatureTensor r(t.space());
    for (auto [i, j] : index_pairs(t.dim_p()))
        r.set_value(i, j, -t.pp_bracket_matrix(i, j));  // R(X,Y)Z = -[[X,Y],Z]
    return r;
}

std::vector<Matrix<Rational>> k_from_lemma(const SympSpace& s, const Matrix<Rational>& a) {
    if (!is_inf_symplectic(s, a))
        throw std::invalid_argument("k_from_lemma: A is not infinitesimally symplectic");
    int d = s.dim();
    Span<Rational> span(d * d);
    std::vector<Matrix<Rational>> basis;
    for (const auto& b : antisymplectic_basis(s)) {
        Matrix<Rational> c = a * b + b * a;
        if (span.add(c.vectorize())) basis.push_back(std::move(c));
    }
    return basis;
}

std::vector<Matrix<Rational>> commutant_sp(const SympSpace& s, const Matrix<Rational>& a) {
    if (!is_inf_symplectic(s, a))
        throw std::invalid_argument("commutant_sp: A is not infinitesimally symplectic");
    int d = s.dim();
    // unknowns: C_{uv} row-major; constraints: omega*C symmetric, CA = AC
    int sym_rows = d * (d - 1) / 2;
    Matrix<Rational> sys(sym_rows + d * d, d * d);
    int row = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++row)
            for (int u = 0; u < d; ++u) {
                // (omega C)_{ij} - (omega C)_{ji} = 0
                sys.at(row, u * d + j) += s.omega.at(i, u);
                sys.at(row, u * d + i) -= s.omega.at(j, u);
            }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j, ++row)
            for (int u = 0; u < d; ++u) {
                sys.at(row, i * d + u) += a.at(u, j);  // (CA)_{ij}
                sys.at(row, u * d + j) -= a.at(i, u);  // (AC)_{ij}
            }
    std::vector<Matrix<Rational>> basis;
    for (const auto& v : nullspace(sys)) basis.push_back(Matrix<Rational>::from_vector(v, d, d));
    return basis;
}

namespace {

// subspace spanned by brackets of two coordinate-space families
std::vector<std::vector<Rational>> bracket_span(const SymmetricTriple& t,
                                                const std::vector<std::vector<Rational>>& xs,
                                                const std::vector<std::vector<Rational>>& ys) {
    Span<Rational> span(t.dim_g());
    for (const auto& x : xs)
        for (const auto& y : ys) span.add(t.bracket_coords(x, y));
    return span.echelon_basis();
}

std::vector<std::vector<Rational>> identity_basis(int m) {
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i) rows[i][i] = Rational(1);
    return rows;
}

Matrix<Rational> killing_matrix(const std::vector<std::vector<std::vector<Rational>>>& ad) {
    int m = static_cast<int>(ad.size());
    // ad[a] columns: ad[a][b] = [b_a, b_b] coords
    std::vector<Matrix<Rational>> admat(m, Matrix<Rational>(m, m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int i = 0; i < m; ++i) admat[a].at(i, b) = ad[a][b][i];
    Matrix<Rational> kf(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            Rational tr = (admat[a] * admat[b]).trace();
            kf.at(a, b) = tr;
            kf.at(b, a) = tr;
        }
    return kf;
}

}  // namespace

LieDiagnostics lie_diagnostics(const SymmetricTriple& t,
                               const std::vector<std::vector<Rational>>* ideal_basis) {
    LieDiagnostics diag;
    int m = t.dim_g();
    auto full = identity_basis(m);

    // derived series until stabilization
    std::vector<std::vector<Rational>> cur = full;
    diag.derived_series_dims.push_back(m);
    while (true) {
        auto next = bracket_span(t, cur, cur);
        int dim = static_cast<int>(next.size());
        if (dim == diag.derived_series_dims.back()) break;
        diag.derived_series_dims.push_back(dim);
        cur = std::move(next);
        if (dim == 0) break;
    }

    // Killing form of g
    std::vector<std::vector<std::vector<Rational>>> ad(m);
    for (int a = 0; a < m; ++a) {
        ad[a].resize(m);
        for (int b = 0; b < m; ++b) ad[a][b] = t.bracket_table(a, b);
    }
    Matrix<Rational> kf = killing_matrix(ad);
    diag.killing_rank = rank(kf);
    diag.killing_signature = signature(kf);

    if (!ideal_basis) return diag;

    // ideal verification
    Span<Rational> ideal_span(m);
    for (const auto& v : *ideal_basis) ideal_span.add(v);
    for (const auto& g : full)
        for (const auto& u : *ideal_basis)
            if (!ideal_span.contains(t.bracket_coords(g, u)))
                throw std::invalid_argument("lie_diagnostics: designated subspace is not an ideal");

    // lower central series of the ideal
    std::vector<std::vector<Rational>> level(ideal_basis->begin(), ideal_basis->end());
    diag.lower_central_dims.push_back(ideal_span.dim());
    while (true) {
        auto next = bracket_span(t, *ideal_basis, level);
        int dim = static_cast<int>(next.size());
        if (dim == diag.lower_central_dims.back()) break;
        diag.lower_central_dims.push_back(dim);
        level = std::move(next);
        if (dim == 0) break;
    }

    // quotient g/ideal: complement by greedy coordinate extension
    Span<Rational> ext(m);
    for (const auto& v : *ideal_basis) ext.add(v);
    std::vector<std::vector<Rational>> ideal_rows = ext.echelon_basis();
    std::vector<std::vector<Rational>> complement;
    for (int i = 0; i < m; ++i) {
        std::vector<Rational> unit(m);
        unit[i] = Rational(1);
        if (ext.add(unit)) complement.push_back(std::move(unit));
    }
    int q = static_cast<int>(complement.size());
    std::vector<std::vector<Rational>> stacked = ideal_rows;
    stacked.insert(stacked.end(), complement.begin(), complement.end());
    CoordinateSolver<Rational> qsolver(stacked);
    int nideal = static_cast<int>(ideal_rows.size());
    auto project = [&](const std::vector<Rational>& v) {
        auto c = qsolver.coords(v);
        if (!c) throw std::logic_error("lie_diagnostics: quotient projection failed");
        return std::vector<Rational>(c->begin() + nideal, c->end());
    };
    std::vector<std::vector<std::vector<Rational>>> qad(q);
    for (int a = 0; a < q; ++a) {
        qad[a].resize(q);
        for (int b = 0; b < q; ++b) qad[a][b] = project(t.bracket_coords(complement[a], complement[b]));
    }
    Matrix<Rational> qkf = killing_matrix(qad);
    diag.quotient_killing_rank = rank(qkf);
    diag.quotient_killing_signature = signature(qkf);
    return diag;
}

std::vector<std::vector<Rational>> nilpotent_radical(const SymmetricTriple& t,
                                                     const Matrix<Rational>& a) {
    int d = t.dim_p(), k = t.dim_k();
    // image of A
    Span<Rational> image(d);
    std::vector<std::vector<Rational>> im_basis;
    for (int j = 0; j < d; ++j) {
        auto c = a.col(j);
        if (image.add(c)) im_basis.push_back(std::move(c));
    }
    // k coefficients c with (sum_a c_a C_a) u = 0 for all u in Image A
    Matrix<Rational> sys(static_cast<int>(im_basis.size()) * d, k);
    int row = 0;
    for (const auto& u : im_basis) {
        for (int comp = 0; comp < d; ++comp, ++row)
            for (int idx = 0; idx < k; ++idx) {
                Rational acc;
                for (int col = 0; col < d; ++col) acc += t.k_basis()[idx].at(comp, col) * u[col];
                sys.at(row, idx) = acc;
            }
    }
    std::vector<std::vector<Rational>> result;
    int m = t.dim_g();
    for (const auto& coeff : nullspace(sys)) {
        std::vector<Rational> v(m);
        for (int idx = 0; idx < k; ++idx) v[idx] = coeff[idx];
        result.push_back(std::move(v));
    }
    // plus Ker A inside p
    for (const auto& kerv : nullspace(a)) {
        std::vector<Rational> v(m);
        for (int i = 0; i < d; ++i) v[k + i] = kerv[i];
        result.push_back(std::move(v));
    }
    return result;
}

}  // namespace rtk
