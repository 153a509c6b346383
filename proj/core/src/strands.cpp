#include "coeffective/strands.hpp"

#include <stdexcept>

namespace coeffective {

std::vector<std::vector<int>> monomials(int m, int d) {
    std::vector<std::vector<int>> out;
    if (d < 0) return out;
    std::vector<int> cur(m, 0);
    // first exponent descending, recursively
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == m - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (m == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

namespace {

std::vector<int> rref_pivots_or_empty(const std::vector<Vec>& rows) {
    return rows.empty() ? std::vector<int>() : rref_pivots(rows);
}

Vec kernel_coords_checked(const std::vector<Vec>& kernel, const std::vector<int>& pivots,
                          const Vec& v, const char* what) {
    Vec coords(kernel.size(), Rational(0));
    for (size_t i = 0; i < kernel.size(); ++i) coords[i] = v[pivots[i]];
    Vec recon(v.size(), Rational(0));
    for (size_t i = 0; i < kernel.size(); ++i) {
        if (coords[i] == 0) continue;
        for (size_t c = 0; c < v.size(); ++c)
            if (kernel[i][c] != 0) recon[c] += coords[i] * kernel[i][c];
    }
    if (recon != v) throw std::logic_error(std::string("strand vector escaped its kernel space in ") + what);
    return coords;
}

}  // namespace

StrandBuilder::StrandBuilder(const Calibration& cal) : cal_(cal) {
    const int m = cal.dim;
    const int p = cal.form_degree();
    if (cal.kind == CalKind::Symplectic) {
        mid_ = *cal.n();
        length_ = 2 * mid_ + 1;
    } else if (cal.kind == CalKind::G2) {
        mid_ = 4;
        length_ = 9;
    } else {
        throw std::invalid_argument("strand builder needs a symplectic or G2 calibration");
    }

    for (int r = 0; r <= mid_; ++r) {
        std::vector<Vec> image_cols;
        if (r - p >= 0) {
            Matrix w = wedge_map(cal.F, r - p);
            for (int j = 0; j < w.cols(); ++j) image_cols.push_back(w.column_vec(j));
        }
        quots_.push_back(quotient(static_cast<int>(enumerate_basis(m, r).size()), image_cols));
    }
    for (int r = mid_ + 1; r <= length_; ++r) {
        int q = r - (length_ - m);
        kernel_degrees_.push_back(q);
        std::vector<Vec> kernel;
        if (q + p <= m) {
            kernel = kernel_basis(wedge_map(cal.F, q));
        } else {
            int amb = static_cast<int>(enumerate_basis(m, q).size());
            for (int i = 0; i < amb; ++i) {
                Vec v(amb, Rational(0));
                v[i] = 1;
                kernel.push_back(std::move(v));
            }
        }
        kernel_pivots_.push_back(rref_pivots_or_empty(kernel));
        kernels_.push_back(std::move(kernel));
    }

    // small blade-level operators reused by every strand
    for (int r = 0; r < mid_; ++r) {
        std::vector<Matrix> ops;
        for (int i = 1; i <= m; ++i) {
            Matrix w = wedge_map(Form::basis_form(m, {i}), r);
            Matrix op(quots_[r + 1].dim(), quots_[r].dim());
            for (int b = 0; b < quots_[r].dim(); ++b) {
                Vec e(quots_[r].dim(), Rational(0));
                e[b] = 1;
                Vec coords = quots_[r + 1].project_vec(w.apply(quots_[r].include(e)));
                for (int t = 0; t < op.rows(); ++t)
                    if (coords[t] != 0) op.set(t, b, coords[t]);
            }
            ops.push_back(std::move(op));
        }
        first_half_ops_.push_back(std::move(ops));
    }
    {
        Matrix iso = wedge_map(cal.F, mid_ - p + 1);
        int amb_next = static_cast<int>(enumerate_basis(m, mid_ - p + 2).size());
        std::vector<std::vector<Vec>> sigma(m);  // sigma[i-1][b]
        for (int i = 1; i <= m; ++i) {
            Matrix wi = wedge_map(Form::basis_form(m, {i}), mid_);
            sigma[i - 1].resize(quots_[mid_].dim());
            for (int b = 0; b < quots_[mid_].dim(); ++b) {
                Vec e(quots_[mid_].dim(), Rational(0));
                e[b] = 1;
                auto s = solve(iso, wi.apply(quots_[mid_].include(e)));
                if (!s) throw std::logic_error("strand middle: wedge isomorphism failed to solve");
                sigma[i - 1][b] = *s;
            }
        }
        middle_ops_.resize(m);
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= m; ++j) {
                Matrix wj = wedge_map(Form::basis_form(m, {j}), mid_ - p + 1);
                Matrix op(amb_next, quots_[mid_].dim());
                for (int b = 0; b < quots_[mid_].dim(); ++b) {
                    Vec v = wj.apply(sigma[i - 1][b]);
                    for (int t = 0; t < amb_next; ++t)
                        if (v[t] != 0) op.set(t, b, v[t]);
                }
                middle_ops_[i - 1].push_back(std::move(op));
            }
        }
    }
    for (int r = mid_ + 1; r < length_; ++r) {
        int q = kernel_degrees_[r - (mid_ + 1)];
        const auto& K = kernels_[r - (mid_ + 1)];
        const auto& K2 = kernels_[r - mid_];
        const auto& piv2 = kernel_pivots_[r - mid_];
        std::vector<Matrix> ops;
        for (int i = 1; i <= m; ++i) {
            Matrix w = wedge_map(Form::basis_form(m, {i}), q);
            Matrix op(static_cast<int>(K2.size()), static_cast<int>(K.size()));
            for (size_t b = 0; b < K.size(); ++b) {
                Vec coords =
                    kernel_coords_checked(K2, piv2, w.apply(K[b]), "second-half operator");
                for (size_t t = 0; t < K2.size(); ++t)
                    if (coords[t] != 0) op.set(static_cast<int>(t), static_cast<int>(b), coords[t]);
            }
            ops.push_back(std::move(op));
        }
        second_half_ops_.push_back(std::move(ops));
    }
}

CochainComplex StrandBuilder::strand(int h) const {
    const int m = cal_.dim;
    CochainComplex cx;
    std::vector<std::vector<std::vector<int>>> mons(length_ + 1);
    std::vector<std::map<std::vector<int>, int>> mon_index(length_ + 1);
    std::vector<int> bdim(length_ + 1);
    for (int r = 0; r <= length_; ++r) {
        bdim[r] = (r <= mid_) ? quots_[r].dim() : static_cast<int>(kernels_[r - (mid_ + 1)].size());
        mons[r] = monomials(m, h - shift(r));
        for (int t = 0; t < static_cast<int>(mons[r].size()); ++t) mon_index[r][mons[r][t]] = t;
        cx.dims.push_back(static_cast<int>(mons[r].size()) * bdim[r]);
        cx.labels.push_back("B^" + std::to_string(r) + " x S^" + std::to_string(h - shift(r)));
    }

    for (int r = 0; r < length_; ++r) {
        Matrix d(cx.dims[r + 1], cx.dims[r]);
        if (cx.dims[r] == 0 || cx.dims[r + 1] == 0) {
            cx.diffs.push_back(std::move(d));
            continue;
        }
        for (int ui = 0; ui < static_cast<int>(mons[r].size()); ++ui) {
            const auto& u = mons[r][ui];
            if (r != mid_) {
                for (int i = 1; i <= m; ++i) {
                    if (u[i - 1] == 0) continue;
                    std::vector<int> u2 = u;
                    --u2[i - 1];
                    int ti = mon_index[r + 1].at(u2);
                    const Matrix& op = (r < mid_) ? first_half_ops_[r][i - 1]
                                                  : second_half_ops_[r - (mid_ + 1)][i - 1];
                    Rational coef(u[i - 1]);
                    for (int b = 0; b < bdim[r]; ++b)
                        for (const auto& [t, v] : op.column(b))
                            d.add(ti * bdim[r + 1] + t, ui * bdim[r] + b, coef * v);
                }
            } else {
                const auto& K = kernels_[0];
                const auto& piv = kernel_pivots_[0];
                int amb = middle_ops_[0][0].rows();
                for (int b = 0; b < bdim[r]; ++b) {
                    // ambient per-monomial slices of d(sigma); each slice lies
                    // in the kernel space, the individual (i, j) pieces do not
                    std::map<int, Vec> slices;
                    for (int i = 1; i <= m; ++i) {
                        if (u[i - 1] == 0) continue;
                        std::vector<int> u1 = u;
                        --u1[i - 1];
                        for (int j = 1; j <= m; ++j) {
                            if (u1[j - 1] == 0) continue;
                            std::vector<int> u2 = u1;
                            --u2[j - 1];
                            Rational coef = Rational(u[i - 1]) * Rational(u1[j - 1]);
                            int ti = mon_index[r + 1].at(u2);
                            auto [it, fresh] = slices.try_emplace(ti, Vec(amb, Rational(0)));
                            for (const auto& [t, v] : middle_ops_[i - 1][j - 1].column(b))
                                it->second[t] += coef * v;
                        }
                    }
                    for (const auto& [ti, slice] : slices) {
                        Vec coords = kernel_coords_checked(K, piv, slice, "middle strand");
                        for (int t = 0; t < bdim[r + 1]; ++t)
                            if (coords[t] != 0)
                                d.add(ti * bdim[r + 1] + t, ui * bdim[r] + b, coords[t]);
                    }
                }
            }
        }
        cx.diffs.push_back(std::move(d));
    }
    return cx;
}

CochainComplex strand_complex(const PolynomialModel& pm, const StructureData& shape, int h) {
    if (!shape.alpha.is_zero())
        throw std::invalid_argument(
            "strand_complex: polynomial models support only alpha = 0 (constant rescalings of "
            "the symplectic or calibrated case)");
    if (h < 0 || h > pm.max_homogeneity)
        throw std::out_of_range("strand_complex: homogeneity out of range");
    Calibration cal = make_calibration(shape.kind, shape.F);
    if (cal.dim != pm.dim)
        throw std::invalid_argument("strand_complex: calibration dimension mismatch");
    return StrandBuilder(cal).strand(h);
}

CochainComplex de_rham_strand(int m, int h) {
    CochainComplex cx;
    std::vector<std::vector<std::vector<int>>> mons(m + 1);
    std::vector<std::map<std::vector<int>, int>> mon_index(m + 1);
    std::vector<int> bdim(m + 1);
    for (int k = 0; k <= m; ++k) {
        bdim[k] = static_cast<int>(enumerate_basis(m, k).size());
        mons[k] = monomials(m, h - k);
        for (int t = 0; t < static_cast<int>(mons[k].size()); ++t) mon_index[k][mons[k][t]] = t;
        cx.dims.push_back(static_cast<int>(mons[k].size()) * bdim[k]);
        cx.labels.push_back("Lambda^" + std::to_string(k) + " x S^" + std::to_string(h - k));
    }
    for (int k = 0; k < m; ++k) {
        Matrix d(cx.dims[k + 1], cx.dims[k]);
        if (cx.dims[k] != 0 && cx.dims[k + 1] != 0) {
            std::vector<Matrix> w;
            for (int i = 1; i <= m; ++i) w.push_back(wedge_map(Form::basis_form(m, {i}), k));
            for (int ui = 0; ui < static_cast<int>(mons[k].size()); ++ui) {
                const auto& u = mons[k][ui];
                for (int i = 1; i <= m; ++i) {
                    if (u[i - 1] == 0) continue;
                    std::vector<int> u2 = u;
                    --u2[i - 1];
                    int ti = mon_index[k + 1].at(u2);
                    Rational coef(u[i - 1]);
                    for (int b = 0; b < bdim[k]; ++b)
                        for (const auto& [t, v] : w[i - 1].column(b))
                            d.add(ti * bdim[k + 1] + t, ui * bdim[k] + b, coef * v);
                }
            }
        }
        cx.diffs.push_back(std::move(d));
    }
    return cx;
}

}  // namespace coeffective
