#include "coeffective/structures.hpp"

#include <stdexcept>

namespace coeffective {

const ColumnProfile::Entry& ColumnProfile::at(int k) const {
    for (const auto& e : entries)
        if (e.k == k) return e;
    throw std::out_of_range("no column profile entry for requested degree");
}

bool ColumnProfile::has_neither() const {
    for (const auto& e : entries)
        if (e.cls == ColumnClass::Neither) return true;
    return false;
}

std::string column_class_name(ColumnClass c) {
    switch (c) {
        case ColumnClass::Injective: return "injective";
        case ColumnClass::Isomorphism: return "isomorphism";
        case ColumnClass::Surjective: return "surjective";
        case ColumnClass::Neither: return "neither";
    }
    return "?";
}

std::optional<int> Calibration::n() const {
    if (kind == CalKind::Symplectic) return dim / 2;
    return std::nullopt;
}

ColumnProfile column_profile(const Form& F) {
    if (!F.is_homogeneous() || F.is_zero())
        throw std::invalid_argument("column_profile: need a nonzero homogeneous form");
    int p = F.degree();
    int m = F.dim;
    ColumnProfile out;
    for (int k = 0; k + p <= m; ++k) {
        ColumnProfile::Entry e;
        e.k = k;
        Matrix w = wedge_map(F, k);
        e.dim_src = w.cols();
        e.dim_dst = w.rows();
        e.rank = rank(w);
        bool inj = (e.rank == e.dim_src);
        bool surj = (e.rank == e.dim_dst);
        e.cls = inj && surj  ? ColumnClass::Isomorphism
                : inj        ? ColumnClass::Injective
                : surj       ? ColumnClass::Surjective
                             : ColumnClass::Neither;
        out.entries.push_back(e);
    }
    return out;
}

ColumnProfile column_profile(const Calibration& c) { return c.profile; }

namespace {

void check_symplectic_profile(const ColumnProfile& p, int n) {
    for (const auto& e : p.entries) {
        ColumnClass want = e.k < n - 1    ? ColumnClass::Injective
                           : e.k == n - 1 ? ColumnClass::Isomorphism
                                          : ColumnClass::Surjective;
        // in dimension 2 the single entry k=0 is an isomorphism
        if (e.cls != want)
            throw CalibrationError("degenerate symplectic form: J^ at k=" + std::to_string(e.k) +
                                   " is " + column_class_name(e.cls) + ", expected " +
                                   column_class_name(want));
    }
}

void check_g2_profile(const ColumnProfile& p) {
    const ColumnClass want[5] = {ColumnClass::Injective, ColumnClass::Injective,
                                 ColumnClass::Isomorphism, ColumnClass::Surjective,
                                 ColumnClass::Surjective};
    if (p.entries.size() != 5) throw CalibrationError("G2 profile must cover k=0..4");
    for (int k = 0; k <= 4; ++k)
        if (p.at(k).cls != want[k])
            throw CalibrationError("3-form fails the G2 wedge profile at k=" + std::to_string(k) +
                                   ": got " + column_class_name(p.at(k).cls));
}

Bivector invert_symplectic(const Form& J, int m) {
    // J_{ab} from the form; J^{ab} solves J_ac J^{bc} = delta_a^b, i.e.
    // Jinv = (Jmat^{-1})^T as matrices.
    Matrix jmat(m, m);
    for (const auto& [b, c] : J.terms) {
        auto idx = b.indices();
        jmat.set(idx[0] - 1, idx[1] - 1, c);
        jmat.set(idx[1] - 1, idx[0] - 1, -c);
    }
    // J^{ab} = (Jmat^{-1})[b][a]
    Bivector out(m);
    for (int a = 1; a <= m; ++a) {
        Vec e(m, Rational(0));
        e[a - 1] = 1;
        auto x = solve(jmat, e);
        if (!x) throw CalibrationError("symplectic form is not invertible");
        for (int b = a + 1; b <= m; ++b) out.set(a, b, (*x)[b - 1]);
    }
    return out;
}

}  // namespace

Calibration make_calibration(CalKind kind, const Form& F) {
    Calibration c;
    c.kind = kind;
    c.dim = F.dim;
    c.F = F;
    if (!F.is_homogeneous() || F.is_zero())
        throw CalibrationError("calibration form must be nonzero and homogeneous");
    c.profile = column_profile(F);
    switch (kind) {
        case CalKind::Symplectic: {
            if (F.degree() != 2) throw CalibrationError("symplectic calibration must be a 2-form");
            if (c.dim % 2 != 0) throw CalibrationError("symplectic dimension must be even");
            int n = c.dim / 2;
            if (wedge_power(F, n).is_zero()) throw CalibrationError("symplectic form with J^n = 0");
            check_symplectic_profile(c.profile, n);
            c.Finv = invert_symplectic(F, c.dim);
            break;
        }
        case CalKind::G2: {
            if (c.dim != 7 || F.degree() != 3)
                throw CalibrationError("G2 calibration must be a 3-form on Q^7");
            check_g2_profile(c.profile);
            break;
        }
        case CalKind::Generic:
            break;
    }
    return c;
}

Calibration standard_symplectic(int n) {
    if (n < 1) throw std::invalid_argument("standard_symplectic: n must be positive");
    Form J(2 * n);
    for (int i = 1; i <= n; ++i) J.add_term(Blade(2 * n, {2 * i - 1, 2 * i}), 1);
    return make_calibration(CalKind::Symplectic, J);
}

Calibration standard_g2() {
    Form phi(7);
    phi.add_term(Blade(7, {1, 2, 3}), 1);
    phi.add_term(Blade(7, {1, 4, 5}), 1);
    phi.add_term(Blade(7, {1, 6, 7}), 1);
    phi.add_term(Blade(7, {2, 4, 6}), 1);
    phi.add_term(Blade(7, {2, 5, 7}), -1);
    phi.add_term(Blade(7, {3, 4, 7}), -1);
    phi.add_term(Blade(7, {3, 5, 6}), -1);
    return make_calibration(CalKind::G2, phi);
}

namespace {

// Ambient degree of the kernel realization of perp^k.
int kernel_home_degree(const Calibration& c, int k) {
    if (c.kind == CalKind::Symplectic) return c.dim - k;  // ker J^ : L^{2n-k} -> L^{2n-k+2}
    if (c.kind == CalKind::G2) return 7 - k;              // perp^3 in L^4, perp^4 in L^3
    throw std::invalid_argument("perp_space: generic calibrations are not supported");
}

}  // namespace

PerpSpace perp_space(const Calibration& c, int k, PerpSide side) {
    int p = c.form_degree();
    int m = c.dim;
    int top = (c.kind == CalKind::Symplectic) ? *c.n() : 4;
    if (k < 0 || k > top) throw std::out_of_range("perp_space: degree out of range");

    PerpSpace out;
    out.degree_label = k;
    out.realization = side;

    // cokernel presentation in degree k is always materialized
    std::vector<Vec> image_cols;
    if (k - p >= 0) {
        Matrix w = wedge_map(c.F, k - p);
        for (int j = 0; j < w.cols(); ++j) image_cols.push_back(w.column_vec(j));
    }
    out.subquotient = quotient(static_cast<int>(enumerate_basis(m, k).size()), image_cols);

    if (side == PerpSide::Cokernel) {
        out.ambient_degree = k;
        for (int c2 : out.subquotient.rep_coords)
            out.basis.push_back(vec_to_form(
                [&] {
                    Vec v(out.subquotient.ambient_dim, Rational(0));
                    v[c2] = 1;
                    return v;
                }(),
                m, k));
    } else {
        int q = kernel_home_degree(c, k);
        out.ambient_degree = q;
        if (q + p <= m) {
            Matrix w = wedge_map(c.F, q);
            for (const auto& v : kernel_basis(w)) out.basis.push_back(vec_to_form(v, m, q));
        } else {
            for (const auto& b : enumerate_basis(m, q)) {
                Form f(m);
                f.terms.emplace(b, Rational(1));
                out.basis.push_back(f);
            }
        }
        if (out.subquotient.dim() != static_cast<int>(out.basis.size()))
            throw std::logic_error("perp_space: kernel and cokernel dimensions disagree");
        // canonical identification (symplectic): kernel element v in L^{2n-k}
        // pulls back through J^{n-k} ^ _ : L^k -> L^{2n-k}, then projects.
        if (c.kind == CalKind::Symplectic) {
            int n = *c.n();
            Matrix iso = wedge_map(wedge_power(c.F, n - k), k);
            Matrix inter(out.subquotient.dim(), static_cast<int>(out.basis.size()));
            for (size_t j = 0; j < out.basis.size(); ++j) {
                auto wvec = form_to_vec(out.basis[j], q);
                auto pre = solve(iso, wvec);
                if (!pre) throw std::logic_error("perp_space: wedge isomorphism failed to solve");
                Vec coords = out.subquotient.project_vec(*pre);
                for (int i = 0; i < out.subquotient.dim(); ++i)
                    if (coords[i] != 0) inter.set(i, static_cast<int>(j), coords[i]);
            }
            if (rank(inter) != inter.cols())
                throw std::logic_error("perp_space: intertwiner is singular");
            out.intertwine = inter;
        }
    }
    return out;
}

std::vector<Form> trace_free_basis(const Calibration& c, int k) {
    if (c.kind != CalKind::Symplectic)
        throw std::invalid_argument("trace_free_basis: symplectic calibrations only");
    int m = c.dim;
    if (k < 2) {
        std::vector<Form> out;
        for (const auto& b : enumerate_basis(m, k)) {
            Form f(m);
            f.terms.emplace(b, Rational(1));
            out.push_back(f);
        }
        return out;
    }
    Matrix tr = contract_map(*c.Finv, k);
    std::vector<Form> out;
    for (const auto& v : kernel_basis(tr)) out.push_back(vec_to_form(v, m, k));
    return out;
}

std::vector<Form> lepage_decompose(const Calibration& c, const Form& w) {
    if (c.kind != CalKind::Symplectic)
        throw std::invalid_argument("lepage_decompose: symplectic calibrations only");
    if (!w.is_homogeneous()) throw std::invalid_argument("lepage_decompose: inhomogeneous form");
    int n = *c.n();
    int k = w.is_zero() ? 0 : w.degree();
    if (k > n) throw std::invalid_argument("lepage_decompose: degree above middle");

    // unknowns: coefficients of w_j against trace-free bases of degree k-2j
    std::vector<std::vector<Form>> bases;
    std::vector<int> offsets;
    int total = 0;
    for (int j = 0; 2 * j <= k; ++j) {
        bases.push_back(trace_free_basis(c, k - 2 * j));
        offsets.push_back(total);
        total += static_cast<int>(bases.back().size());
    }
    int amb = static_cast<int>(enumerate_basis(c.dim, k).size());
    Matrix sys(amb, total);
    for (int j = 0; 2 * j <= k; ++j) {
        Form Jj = wedge_power(c.F, j);
        for (size_t t = 0; t < bases[j].size(); ++t) {
            Vec col = form_to_vec(wedge(Jj, bases[j][t]), k);
            for (int r = 0; r < amb; ++r)
                if (col[r] != 0) sys.set(r, offsets[j] + static_cast<int>(t), col[r]);
        }
    }
    auto x = solve(sys, form_to_vec(w, k));
    if (!x) throw std::logic_error("lepage_decompose: decomposition system unsolvable");
    std::vector<Form> out;
    for (int j = 0; 2 * j <= k; ++j) {
        Form wj(c.dim);
        for (size_t t = 0; t < bases[j].size(); ++t)
            wj = wj + bases[j][t].scaled((*x)[offsets[j] + static_cast<int>(t)]);
        out.push_back(wj);
    }
    return out;
}

Rational pairing(const Calibration& c, const Form& a, const Form& b) {
    if (c.kind != CalKind::Symplectic)
        throw std::invalid_argument("pairing: symplectic calibrations only");
    int n = *c.n();
    if (!a.is_homogeneous() || !b.is_homogeneous())
        throw std::invalid_argument("pairing: inhomogeneous input");
    int k = a.is_zero() ? (b.is_zero() ? 0 : b.degree()) : a.degree();
    if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
        throw std::invalid_argument("pairing: degree mismatch");
    if (k > n) throw std::invalid_argument("pairing: degree above middle");
    if (k >= 2) {
        if (!contract(*c.Finv, a).is_zero() || !contract(*c.Finv, b).is_zero())
            throw std::invalid_argument("pairing: inputs must be trace-free");
    }
    Form top = wedge(wedge(wedge_power(c.F, n - k), a), b);
    if (top.is_zero()) return Rational(0);
    return top.terms.begin()->second;
}

}  // namespace coeffective
