#pragma once

#include <string>
#include <vector>

#include "coeffective/exterior.hpp"
#include "coeffective/matrix.hpp"

namespace coeffective {

struct LieAlgebraModel;  // model.hpp
struct RingModel;

/// A finite labeled cochain complex: dims[r] spaces, diffs[r] mapping
/// position r to r+1 (so diffs has one fewer entry than dims).
struct CochainComplex {
    std::vector<std::string> labels;
    std::vector<int> dims;
    std::vector<Matrix> diffs;

    int length() const { return static_cast<int>(dims.size()); }
    /// Shape consistency and, optionally, d after d = 0.
    void validate(bool check_composition = true) const;
};

struct CohomologyTable {
    std::vector<int> dims;
    /// generators[r]: kernel representatives reduced modulo image, in the
    /// coordinates of position r; filled only when requested.
    std::vector<std::vector<Vec>> generators;
};

/// dim H^r = dim ker d_r - rank d_{r-1} per position; generators are reduced
/// deterministically (echelon order).
CohomologyTable cohomology(const CochainComplex& c, bool with_generators = false);

/// Cohomology of (Lambda^*, d - weight * alpha ^ _) on the model.
/// Requires d alpha = 0.
CohomologyTable twisted_cohomology(const LieAlgebraModel& model, const Form& alpha,
                                   const Rational& weight, bool with_generators = false);

/// A cochain complex in blade coordinates together with its cohomology and
/// generators; source/target bundles for cup products.
struct ModelCohomology {
    int ambient_dim = 0;
    CochainComplex cx;
    CohomologyTable table;
};

ModelCohomology model_cohomology(const LieAlgebraModel& model, const Form& alpha,
                                 const Rational& weight);

/// Matrix of [w] -> [cls ^ w] : H^r(source) -> H^{r+deg cls}(target) in the
/// chosen generator bases. cls must be closed in the target complex; the map
/// is checked to send exact classes to exact classes.
Matrix cup_map(const ModelCohomology& source, const ModelCohomology& target, const Form& cls,
               int r);

/// cup matrices for all degrees r = 0..top (zero-row matrices once the target
/// degree leaves the model).
std::vector<Matrix> cup_family(const ModelCohomology& source, const ModelCohomology& target,
                               const Form& cls);

enum class LESKind { Symplectic, G2 };

/// Dimension prediction for the extended-complex cohomology out of plain and
/// twisted Betti numbers plus the connecting cup maps, consumed through the
/// coker + ker rule of the long exact sequence.
struct LESReport {
    LESKind kind = LESKind::Symplectic;
    int n = 0;  // symplectic only
    std::vector<int> betti_plain;
    std::vector<int> betti_twisted;
    std::vector<int> delta_ranks;  // rank of cup[r] per source degree r
    std::vector<int> predicted;    // dims of H^0..H^R
    std::vector<std::string> boundary_notes;
};

LESReport les_predict(LESKind kind, int n, const std::vector<int>& betti_plain,
                      const std::vector<int>& betti_twisted, const std::vector<Matrix>& cup);

const char* les_kind_name(LESKind k);

}  // namespace coeffective
