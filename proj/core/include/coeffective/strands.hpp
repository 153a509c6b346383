#pragma once

#include <map>
#include <vector>

#include "coeffective/builder.hpp"

namespace coeffective {

/// All exponent vectors of total degree d in m variables, in a fixed
/// deterministic order; empty for d < 0.
std::vector<std::vector<int>> monomials(int m, int d);

/// Builds the homogeneity strands of the extended complex on polynomial
/// coefficient forms over Q^m, for a constant calibration and alpha = 0.
/// Position r of strand h carries polynomial degree h - r before the middle
/// and h - r - 1 after it (the middle drops two degrees).
class StrandBuilder {
  public:
    explicit StrandBuilder(const Calibration& cal);

    CochainComplex strand(int h) const;
    int mid() const { return mid_; }
    int length() const { return length_; }

  private:
    Calibration cal_;
    int mid_ = 0, length_ = 0;
    std::vector<Subquotient> quots_;               // positions 0..mid
    std::vector<std::vector<Vec>> kernels_;        // positions mid+1..R (ambient RREF rows)
    std::vector<std::vector<int>> kernel_pivots_;
    std::vector<int> kernel_degrees_;
    // first half: wedge-by-e_i pushed to the quotients, dim(r+1) x dim(r)
    std::vector<std::vector<Matrix>> first_half_ops_;  // [r][i-1]
    // middle: ambient vectors of e_j ^ sigma_i(b); only per-monomial sums of
    // these land in the kernel space
    std::vector<std::vector<Matrix>> middle_ops_;  // [i-1][j-1]
    // second half: wedge-by-e_i in kernel coordinates
    std::vector<std::vector<Matrix>> second_half_ops_;  // [r-(mid+1)][i-1]

    int shift(int r) const { return r <= mid_ ? r : r + 1; }
};

/// Strand h of the extended complex for a polynomial local model; requires
/// alpha = 0 (conformal germ models are not supported).
CochainComplex strand_complex(const PolynomialModel& pm, const StructureData& shape, int h);

/// Strand h of the plain polynomial de Rham complex on Q^m; the machinery
/// calibration (its cohomology is the polynomial Poincare lemma).
CochainComplex de_rham_strand(int m, int h);

}  // namespace coeffective
