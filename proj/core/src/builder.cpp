#include "coeffective/builder.hpp"

#include <stdexcept>

namespace coeffective {

DifferentialFamily ce_family(const LieAlgebraModel& model) {
    DifferentialFamily out;
    out.dim = model.dim;
    for (int k = 0; k <= model.dim; ++k) out.d.push_back(model.d_matrix(k));
    return out;
}

DifferentialFamily koszul_family(const Form& xi) {
    if (xi.is_zero() || xi.degree() != 1)
        throw std::invalid_argument("koszul_family: need a nonzero 1-form");
    DifferentialFamily out;
    out.dim = xi.dim;
    for (int k = 0; k < xi.dim; ++k) out.d.push_back(wedge_map(xi, k));
    out.d.push_back(Matrix(0, 1));  // Lambda^m -> 0
    return out;
}

std::vector<Matrix> twisted_differential(const LieAlgebraModel& model, const Form& alpha,
                                         const Rational& weight) {
    std::vector<Matrix> out;
    for (int k = 0; k <= model.dim; ++k) {
        Matrix d = model.d_matrix(k);
        if (!alpha.is_zero() && weight != 0 && k < model.dim) {
            Matrix a = wedge_map(alpha, k);
            for (int c = 0; c < a.cols(); ++c)
                for (const auto& [r, v] : a.column(c)) d.add(r, c, -weight * v);
        }
        out.push_back(std::move(d));
    }
    return out;
}

const char* ValidationReport::code_name(Code c) {
    switch (c) {
        case Code::Ok: return "ok";
        case Code::DSquaredNonzero: return "d_squared_nonzero";
        case Code::AlphaNotClosed: return "alpha_not_closed";
        case Code::StructureEquationFails: return "structure_equation_fails";
        case Code::DegenerateCalibration: return "degenerate_calibration";
    }
    return "?";
}

namespace {

std::string leading_terms(const Form& f, size_t count = 3) {
    std::string out;
    size_t i = 0;
    for (const auto& [b, c] : f.terms) {
        if (i++ == count) {
            out += ", ...";
            break;
        }
        if (!out.empty()) out += ", ";
        out += to_string(c) + "*e";
        for (int idx : b.indices()) out += std::to_string(idx);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

ValidationReport validate_structure(const StructureData& s) {
    ValidationReport rep;
    // 1. d^2 = 0 on the model
    try {
        s.model.validate();
    } catch (const ModelError& e) {
        rep.code = ValidationReport::Code::DSquaredNonzero;
        rep.message = e.what();
        return rep;
    }
    // 2. d alpha = 0
    Form dalpha = s.model.d(s.alpha);
    if (!dalpha.is_zero()) {
        rep.code = ValidationReport::Code::AlphaNotClosed;
        rep.offending = dalpha;
        rep.message = "d alpha != 0: " + leading_terms(dalpha);
        return rep;
    }
    // 3. dF = 2 alpha ^ F
    Form residual = s.model.d(s.F) - wedge(s.alpha, s.F).scaled(2);
    if (!residual.is_zero()) {
        rep.code = ValidationReport::Code::StructureEquationFails;
        rep.offending = residual;
        rep.message = "dF - 2 alpha ^ F != 0: " + leading_terms(residual);
        return rep;
    }
    // 4. calibration column profile
    try {
        make_calibration(s.kind, s.F);
    } catch (const std::exception& e) {
        rep.code = ValidationReport::Code::DegenerateCalibration;
        rep.message = e.what();
        return rep;
    }
    rep.ok = true;
    rep.code = ValidationReport::Code::Ok;
    rep.message = "valid";
    return rep;
}

namespace {

struct Layout {
    int mid;
    int length;  // R
    // ambient degree of the kernel realization at position r (> mid)
    int kernel_degree(int r, int m) const { return r - (length - m); }
};

Layout layout_for(const Calibration& cal) {
    if (cal.kind == CalKind::Symplectic) {
        int n = *cal.n();
        return Layout{n, 2 * n + 1};
    }
    if (cal.kind == CalKind::G2) return Layout{4, 9};
    throw std::invalid_argument("extended complex needs a symplectic or G2 calibration");
}

std::string position_label(const Calibration& cal, const Layout& lay, int r) {
    int p = cal.form_degree();
    if (r <= lay.mid) {
        if (r < p) return "Lambda^" + std::to_string(r);
        return "Lambda^" + std::to_string(r) + "/F^Lambda^" + std::to_string(r - p);
    }
    int q = lay.kernel_degree(r, cal.dim);
    if (q + p > cal.dim) return "Lambda^" + std::to_string(q);
    return "ker(F^: Lambda^" + std::to_string(q) + ")";
}

// Dense-prepared solver for repeated right-hand sides against one matrix:
// records the row operations E with E*A in RREF, then each solve is a single
// E*b pass plus a consistency check on the zero rows.
class PreparedSolver {
  public:
    explicit PreparedSolver(const Matrix& a) : cols_(a.cols()), rows_(a.rows()) {
        std::vector<Vec> aug(rows_, Vec(cols_ + rows_, Rational(0)));
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : a.column(c)) aug[r][c] = v;
        for (int r = 0; r < rows_; ++r) aug[r][cols_ + r] = 1;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i)
                if (aug[i][c] != 0) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            std::swap(aug[r], aug[sel]);
            Rational pv = aug[r][c];
            if (pv != 1)
                for (auto& x : aug[r]) x /= pv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || aug[i][c] == 0) continue;
                Rational f = aug[i][c];
                for (int j = 0; j < cols_ + rows_; ++j)
                    if (aug[r][j] != 0) aug[i][j] -= f * aug[r][j];
            }
            pivots_.push_back(c);
            ++r;
        }
        aug_ = std::move(aug);
        rank_ = static_cast<int>(pivots_.size());
    }

    std::optional<Vec> solve(const Vec& b) const {
        Vec x(cols_, Rational(0));
        for (int i = 0; i < rows_; ++i) {
            Rational y(0);
            for (int j = 0; j < rows_; ++j)
                if (aug_[i][cols_ + j] != 0 && b[j] != 0) y += aug_[i][cols_ + j] * b[j];
            if (i < rank_)
                x[pivots_[i]] = y;
            else if (y != 0)
                return std::nullopt;
        }
        return x;
    }

  private:
    int cols_, rows_, rank_ = 0;
    std::vector<Vec> aug_;
    std::vector<int> pivots_;
};

std::vector<int> kernel_pivots_of(const std::vector<Vec>& kernel) {
    return kernel.empty() ? std::vector<int>() : rref_pivots(kernel);
}

// coordinates of v against an RREF kernel basis; throws when v is outside
Vec kernel_coordinates(const std::vector<Vec>& kernel, const std::vector<int>& pivots,
                       const Vec& v, const char* what) {
    Vec coords(kernel.size(), Rational(0));
    for (size_t i = 0; i < kernel.size(); ++i) coords[i] = v[pivots[i]];
    // RREF basis vectors carry 1 at their own pivot and 0 at the others, so
    // reconstruction either matches v exactly or v was not in the space.
    Vec recon(v.size(), Rational(0));
    for (size_t i = 0; i < kernel.size(); ++i) {
        if (coords[i] == 0) continue;
        for (size_t c = 0; c < v.size(); ++c)
            if (kernel[i][c] != 0) recon[c] += coords[i] * kernel[i][c];
    }
    if (recon != v) throw std::logic_error(std::string("vector escaped the kernel space in ") + what);
    return coords;
}

ExtendedComplex build_from_families(const Calibration& cal, const std::vector<Matrix>& twisted,
                                    const DifferentialFamily& plain) {
    const int m = cal.dim;
    const int p = cal.form_degree();
    const Layout lay = layout_for(cal);
    ExtendedComplex out;
    out.kind = cal.kind;
    out.ambient_dim = m;
    out.mid = lay.mid;
    out.length = lay.length;
    out.positions.resize(lay.length + 1);

    // first half: cokernel realizations
    for (int r = 0; r <= lay.mid; ++r) {
        auto& pos = out.positions[r];
        pos.index = r;
        pos.ambient_degree = r;
        pos.label = position_label(cal, lay, r);
        std::vector<Vec> image_cols;
        if (r - p >= 0) {
            Matrix w = wedge_map(cal.F, r - p);
            for (int j = 0; j < w.cols(); ++j) image_cols.push_back(w.column_vec(j));
            pos.realization = Realization::Cokernel;
        } else {
            pos.realization = Realization::Full;
        }
        pos.space = quotient(static_cast<int>(enumerate_basis(m, r).size()), image_cols);
        pos.dim = pos.space.dim();
    }
    // second half: kernel realizations
    for (int r = lay.mid + 1; r <= lay.length; ++r) {
        auto& pos = out.positions[r];
        pos.index = r;
        int q = lay.kernel_degree(r, m);
        pos.ambient_degree = q;
        pos.label = position_label(cal, lay, r);
        int amb = static_cast<int>(enumerate_basis(m, q).size());
        if (q + p <= m) {
            pos.realization = Realization::Kernel;
            pos.kernel = kernel_basis(wedge_map(cal.F, q));
        } else {
            pos.realization = Realization::Full;
            for (int i = 0; i < amb; ++i) {
                Vec v(amb, Rational(0));
                v[i] = 1;
                pos.kernel.push_back(std::move(v));
            }
        }
        pos.kernel_pivots = kernel_pivots_of(pos.kernel);
        pos.dim = static_cast<int>(pos.kernel.size());
    }

    // differentials: first half (projected twisted d)
    for (int r = 0; r < lay.mid; ++r) {
        auto& pos = out.positions[r];
        auto& nxt = out.positions[r + 1];
        Matrix d(nxt.dim, pos.dim);
        for (int j = 0; j < pos.dim; ++j) {
            Vec e(pos.dim, Rational(0));
            e[j] = 1;
            Vec img = twisted[r].apply(pos.space.include(e));
            Vec coords = nxt.space.project_vec(img);
            for (int i = 0; i < nxt.dim; ++i)
                if (coords[i] != 0) d.set(i, j, coords[i]);
        }
        pos.diff_out = std::move(d);
        pos.order = OperatorOrder::First;
    }
    // middle: zig-zag through the wedge isomorphism
    {
        auto& pos = out.positions[lay.mid];
        auto& nxt = out.positions[lay.mid + 1];
        PreparedSolver iso(wedge_map(cal.F, lay.mid - p + 1));
        Matrix d(nxt.dim, pos.dim);
        for (int j = 0; j < pos.dim; ++j) {
            Vec e(pos.dim, Rational(0));
            e[j] = 1;
            Vec u = twisted[lay.mid].apply(pos.space.include(e));
            auto sigma = iso.solve(u);
            if (!sigma)
                throw std::logic_error("middle operator: wedge isomorphism failed to solve");
            Vec ds = plain.d[lay.mid - p + 1].apply(*sigma);
            Vec coords = kernel_coordinates(nxt.kernel, nxt.kernel_pivots, ds, "middle operator");
            for (int i = 0; i < nxt.dim; ++i)
                if (coords[i] != 0) d.set(i, j, coords[i]);
        }
        pos.diff_out = std::move(d);
        pos.order = OperatorOrder::Second;
    }
    // second half: plain d restricted to kernels
    for (int r = lay.mid + 1; r < lay.length; ++r) {
        auto& pos = out.positions[r];
        auto& nxt = out.positions[r + 1];
        int q = lay.kernel_degree(r, m);
        Matrix d(nxt.dim, pos.dim);
        for (int j = 0; j < pos.dim; ++j) {
            Vec img = plain.d[q].apply(pos.kernel[j]);
            Vec coords = kernel_coordinates(nxt.kernel, nxt.kernel_pivots, img, "second half");
            for (int i = 0; i < nxt.dim; ++i)
                if (coords[i] != 0) d.set(i, j, coords[i]);
        }
        pos.diff_out = std::move(d);
        pos.order = OperatorOrder::First;
    }
    out.positions[lay.length].diff_out = Matrix(0, out.positions[lay.length].dim);
    return out;
}

}  // namespace

CochainComplex ExtendedComplex::cochain() const {
    CochainComplex cx;
    for (const auto& pos : positions) {
        cx.labels.push_back(pos.label);
        cx.dims.push_back(pos.dim);
    }
    for (size_t r = 0; r + 1 < positions.size(); ++r) cx.diffs.push_back(positions[r].diff_out);
    return cx;
}

ExtendedComplex build_extended_complex(const StructureData& s) {
    ValidationReport rep = validate_structure(s);
    if (!rep.ok) throw StructureError(rep);
    Calibration cal = make_calibration(s.kind, s.F);
    ExtendedComplex out =
        build_from_families(cal, twisted_differential(s.model, s.alpha, 2), ce_family(s.model));
    out.provenance = s;
    return out;
}

Form middle_operator(const StructureData& s, const Form& w) {
    ValidationReport rep = validate_structure(s);
    if (!rep.ok) throw StructureError(rep);
    Calibration cal = make_calibration(s.kind, s.F);
    Layout lay = layout_for(cal);
    int p = cal.form_degree();
    if (!w.is_zero() && (!w.is_homogeneous() || w.degree() != lay.mid))
        throw std::invalid_argument("middle_operator: representative must have the middle degree");
    Form u = s.model.d(w) - wedge(s.alpha, w).scaled(2);
    auto sigma = solve(wedge_map(cal.F, lay.mid - p + 1), form_to_vec(u, lay.mid + 1));
    if (!sigma) throw std::logic_error("middle_operator: wedge isomorphism failed to solve");
    return s.model.d(vec_to_form(*sigma, cal.dim, lay.mid - p + 1));
}

CochainComplex symbol_complex(const Calibration& shape, const Form& xi) {
    if (xi.is_zero()) throw std::invalid_argument("symbol_complex: xi must be nonzero");
    DifferentialFamily kos = koszul_family(xi);
    return build_from_families(shape, kos.d, kos).cochain();
}

CochainComplex symbol_complex_second_half(const Calibration& shape, const Form& xi) {
    if (xi.is_zero()) throw std::invalid_argument("symbol_complex: xi must be nonzero");
    if (shape.kind != CalKind::Symplectic)
        throw std::invalid_argument("second-half symbol complex is symplectic-only");
    DifferentialFamily kos = koszul_family(xi);
    ExtendedComplex full = build_from_families(shape, kos.d, kos);
    CochainComplex cx;
    for (int r = full.mid + 1; r <= full.length; ++r) {
        cx.labels.push_back(full.positions[r].label);
        cx.dims.push_back(full.positions[r].dim);
        if (r < full.length) cx.diffs.push_back(full.positions[r].diff_out);
    }
    return cx;
}

}  // namespace coeffective
