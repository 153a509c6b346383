#include "coeffective/homology.hpp"

#include <stdexcept>

#include "coeffective/model.hpp"

namespace coeffective {

void CochainComplex::validate(bool check_composition) const {
    if (diffs.size() + 1 != dims.size())
        throw std::invalid_argument("cochain complex: need one differential per adjacent pair");
    for (size_t r = 0; r < diffs.size(); ++r) {
        if (diffs[r].cols() != dims[r] || diffs[r].rows() != dims[r + 1])
            throw std::invalid_argument("cochain complex: differential shape mismatch at " +
                                        std::to_string(r));
    }
    if (!check_composition) return;
    for (size_t r = 0; r + 1 < diffs.size(); ++r) {
        // column-wise composition check keeps sparse matrices cheap
        for (int j = 0; j < diffs[r].cols(); ++j) {
            Vec col = diffs[r].column_vec(j);
            Vec out = diffs[r + 1].apply(col);
            for (const auto& x : out)
                if (x != 0)
                    throw std::invalid_argument("cochain complex: d after d nonzero at position " +
                                                std::to_string(r));
        }
    }
}

CohomologyTable cohomology(const CochainComplex& c, bool with_generators) {
    CohomologyTable out;
    int len = c.length();
    std::vector<int> ranks(len, 0);  // ranks[r] = rank of diffs[r], 0 at the top
    for (int r = 0; r + 1 < len; ++r) ranks[r] = rank(c.diffs[r]);
    out.dims.resize(len);
    for (int r = 0; r < len; ++r) {
        int ker = (r + 1 < len) ? c.dims[r] - ranks[r] : c.dims[r];
        int im = (r > 0) ? ranks[r - 1] : 0;
        out.dims[r] = ker - im;
    }
    if (!with_generators) return out;

    // The image is contained in the kernel and RREF pivot sets are nested
    // along inclusions, so the kernel's canonical RREF rows whose pivots are
    // not image pivots are kernel representatives reduced modulo the image.
    out.generators.resize(len);
    for (int r = 0; r < len; ++r) {
        std::vector<Vec> kernel;
        if (r + 1 < len) {
            kernel = kernel_basis(c.diffs[r]);
        } else {
            for (int i = 0; i < c.dims[r]; ++i) {
                Vec v(c.dims[r], Rational(0));
                v[i] = 1;
                kernel.push_back(std::move(v));
            }
        }
        std::vector<Vec> image =
            (r > 0) ? column_space_basis(c.diffs[r - 1]) : std::vector<Vec>();
        std::vector<bool> is_image_pivot(c.dims[r], false);
        for (int p : rref_pivots(image)) is_image_pivot[p] = true;
        for (auto& row : kernel) {
            int p = -1;
            for (int c2 = 0; c2 < c.dims[r]; ++c2)
                if (row[c2] != 0) {
                    p = c2;
                    break;
                }
            if (p >= 0 && !is_image_pivot[p]) out.generators[r].push_back(std::move(row));
        }
        if (static_cast<int>(out.generators[r].size()) != out.dims[r])
            throw std::logic_error("cohomology: generator count disagrees with dimension");
    }
    return out;
}

namespace {

CochainComplex twisted_complex(const LieAlgebraModel& model, const Form& alpha,
                               const Rational& weight) {
    if (!model.d(alpha).is_zero())
        throw std::invalid_argument("twisted cohomology requires a closed twisting form");
    CochainComplex cx;
    int m = model.dim;
    for (int k = 0; k <= m; ++k) {
        cx.labels.push_back("Lambda^" + std::to_string(k));
        cx.dims.push_back(static_cast<int>(enumerate_basis(m, k).size()));
    }
    for (int k = 0; k < m; ++k) {
        Matrix d = model.d_matrix(k);
        if (!alpha.is_zero() && weight != 0) {
            Matrix a = wedge_map(alpha, k);
            for (int c = 0; c < a.cols(); ++c)
                for (const auto& [r, v] : a.column(c)) d.add(r, c, -weight * v);
        }
        cx.diffs.push_back(std::move(d));
    }
    return cx;
}

}  // namespace

CohomologyTable twisted_cohomology(const LieAlgebraModel& model, const Form& alpha,
                                   const Rational& weight, bool with_generators) {
    return cohomology(twisted_complex(model, alpha, weight), with_generators);
}

ModelCohomology model_cohomology(const LieAlgebraModel& model, const Form& alpha,
                                 const Rational& weight) {
    ModelCohomology out;
    out.ambient_dim = model.dim;
    out.cx = twisted_complex(model, alpha, weight);
    out.table = cohomology(out.cx, true);
    return out;
}

namespace {

// coordinates of v in span(generators) modulo span(image); nullopt when v is
// not in the combined span
std::optional<Vec> class_coordinates(const Vec& v, const std::vector<Vec>& generators,
                                     const std::vector<Vec>& image, int ambient) {
    Matrix sys(ambient, static_cast<int>(generators.size() + image.size()));
    int col = 0;
    for (const auto& g : generators) {
        for (int r = 0; r < ambient; ++r)
            if (g[r] != 0) sys.set(r, col, g[r]);
        ++col;
    }
    for (const auto& e : image) {
        for (int r = 0; r < ambient; ++r)
            if (e[r] != 0) sys.set(r, col, e[r]);
        ++col;
    }
    auto x = solve(sys, v);
    if (!x) return std::nullopt;
    return Vec(x->begin(), x->begin() + static_cast<long>(generators.size()));
}

}  // namespace

Matrix cup_map(const ModelCohomology& source, const ModelCohomology& target, const Form& cls,
               int r) {
    if (!cls.is_homogeneous()) throw std::invalid_argument("cup_map: class must be homogeneous");
    int p = cls.degree();
    int m = source.ambient_dim;
    if (r < 0 || r >= source.cx.length()) throw std::out_of_range("cup_map: bad degree");
    int rt = r + p;
    const auto& src_gens = source.table.generators.at(r);
    int target_dim = (rt < target.cx.length()) ? static_cast<int>(target.table.generators[rt].size()) : 0;
    Matrix out(target_dim, static_cast<int>(src_gens.size()));
    if (rt >= target.cx.length()) return out;

    // the class must be closed in the target complex
    if (!cls.is_zero()) {
        Vec cls_vec = form_to_vec(cls, p);
        if (p < target.cx.length() - 1) {
            for (const auto& x : target.cx.diffs[p].apply(cls_vec))
                if (x != 0) throw std::invalid_argument("cup_map: class is not closed");
        }
    }

    Matrix w = cls.is_zero() ? Matrix(static_cast<int>(enumerate_basis(m, rt).size()),
                                      static_cast<int>(enumerate_basis(m, r).size()))
                             : wedge_map(cls, r);
    std::vector<Vec> target_image =
        (rt > 0) ? column_space_basis(target.cx.diffs[rt - 1]) : std::vector<Vec>();

    // well-definedness: cls ^ (exact) stays exact
    if (r > 0) {
        for (const auto& e : column_space_basis(source.cx.diffs[r - 1])) {
            Vec img = w.apply(e);
            auto c = class_coordinates(img, {}, target_image, target.cx.dims[rt]);
            if (!c) throw std::invalid_argument("cup_map: class does not send exact to exact");
        }
    }

    for (size_t j = 0; j < src_gens.size(); ++j) {
        Vec img = w.apply(src_gens[j]);
        auto coords =
            class_coordinates(img, target.table.generators[rt], target_image, target.cx.dims[rt]);
        if (!coords) throw std::logic_error("cup_map: image class not in target cohomology");
        for (int i = 0; i < target_dim; ++i)
            if ((*coords)[i] != 0) out.set(i, static_cast<int>(j), (*coords)[i]);
    }
    return out;
}

std::vector<Matrix> cup_family(const ModelCohomology& source, const ModelCohomology& target,
                               const Form& cls) {
    std::vector<Matrix> out;
    for (int r = 0; r < source.cx.length(); ++r) out.push_back(cup_map(source, target, cls, r));
    return out;
}

const char* les_kind_name(LESKind k) { return k == LESKind::Symplectic ? "symplectic" : "g2"; }

LESReport les_predict(LESKind kind, int n, const std::vector<int>& betti_plain,
                      const std::vector<int>& betti_twisted, const std::vector<Matrix>& cup) {
    LESReport out;
    out.kind = kind;
    out.n = n;
    out.betti_plain = betti_plain;
    out.betti_twisted = betti_twisted;

    auto cup_rank = [&](int r) -> int {
        if (r < 0 || r >= static_cast<int>(cup.size())) return 0;
        return rank(cup[r]);
    };
    for (const auto& c : cup) out.delta_ranks.push_back(rank(c));

    auto betti = [](const std::vector<int>& v, int r) -> int {
        return (r >= 0 && r < static_cast<int>(v.size())) ? v[r] : 0;
    };

    if (kind == LESKind::Symplectic) {
        int m = 2 * n;
        if (static_cast<int>(betti_plain.size()) != m + 1 ||
            static_cast<int>(betti_twisted.size()) != m + 1)
            throw std::invalid_argument("les_predict: Betti vectors must cover degrees 0..2n");
        for (int r = 0; r < static_cast<int>(cup.size()); ++r) {
            if (cup[r].cols() != betti(betti_plain, r) ||
                cup[r].rows() != betti(betti_twisted, r + 2))
                throw std::invalid_argument("les_predict: cup matrix shape mismatch at degree " +
                                            std::to_string(r));
        }
        int R = 2 * n + 1;
        out.predicted.assign(R + 1, 0);
        out.predicted[0] = betti(betti_twisted, 0);
        out.predicted[R] = betti(betti_plain, 2 * n);
        for (int r = 1; r <= 2 * n; ++r) {
            int coker = betti(betti_twisted, r) - cup_rank(r - 2);
            int ker = betti(betti_plain, r - 1) - cup_rank(r - 1);
            out.predicted[r] = coker + ker;
        }
        out.boundary_notes = {"H^0 equals the degree-0 twisted cohomology",
                              "H^{2n+1} equals the plain Betti number b_{2n}"};
    } else {
        if (static_cast<int>(betti_plain.size()) != 8 || static_cast<int>(betti_twisted.size()) != 8)
            throw std::invalid_argument("les_predict: Betti vectors must cover degrees 0..7");
        for (int r = 0; r < static_cast<int>(cup.size()); ++r) {
            if (cup[r].cols() != betti(betti_plain, r) ||
                cup[r].rows() != betti(betti_twisted, r + 3))
                throw std::invalid_argument("les_predict: cup matrix shape mismatch at degree " +
                                            std::to_string(r));
        }
        out.predicted.assign(10, 0);
        out.predicted[0] = betti(betti_twisted, 0);
        out.predicted[1] = betti(betti_twisted, 1);
        out.predicted[8] = betti(betti_plain, 6);
        out.predicted[9] = betti(betti_plain, 7);
        for (int r = 2; r <= 7; ++r) {
            int coker = betti(betti_twisted, r) - cup_rank(r - 3);
            int ker = betti(betti_plain, r - 2) - cup_rank(r - 2);
            out.predicted[r] = coker + ker;
        }
        out.boundary_notes = {"H^0, H^1 equal the twisted cohomology in degrees 0, 1",
                              "H^8, H^9 equal the plain Betti numbers b_6, b_7"};
    }
    return out;
}

}  // namespace coeffective
