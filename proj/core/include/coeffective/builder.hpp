#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coeffective/homology.hpp"
#include "coeffective/model.hpp"
#include "coeffective/structures.hpp"

namespace coeffective {

/// Differentials of a cochain model per degree: d[k] : Lambda^k -> Lambda^{k+1}.
struct DifferentialFamily {
    int dim = 0;
    std::vector<Matrix> d;  // size dim+1; d[dim] has zero rows
};

DifferentialFamily ce_family(const LieAlgebraModel& model);
DifferentialFamily koszul_family(const Form& xi);

/// Matrices of omega -> d omega - weight * alpha ^ omega per degree.
/// Squares to zero exactly when d alpha = 0.
std::vector<Matrix> twisted_differential(const LieAlgebraModel& model, const Form& alpha,
                                         const Rational& weight);

/// A model together with the conformal data: Lee form candidate and raw
/// calibration form. The calibration object itself is produced by
/// validate_structure / build, so invalid inputs are reportable values.
struct StructureData {
    LieAlgebraModel model;
    Form alpha;
    CalKind kind = CalKind::Generic;
    Form F;

    static StructureData from_model_data(const ModelData& m) {
        return StructureData{m.model, m.alpha, m.kind, m.F};
    }
};

struct ValidationReport {
    enum class Code {
        Ok,
        DSquaredNonzero,
        AlphaNotClosed,
        StructureEquationFails,
        DegenerateCalibration,
    };
    bool ok = false;
    Code code = Code::Ok;
    std::string message;
    Form offending;  // leading blade coefficients of the failing expression

    static const char* code_name(Code c);
};

/// Checks, in order: d^2 = 0 on the model; d alpha = 0; dF - 2 alpha ^ F = 0;
/// calibration column profile. Stops at the first failure.
ValidationReport validate_structure(const StructureData& s);

enum class Realization { Full, Cokernel, Kernel };
enum class OperatorOrder { First, Second };

struct ComplexPosition {
    int index = 0;
    Realization realization = Realization::Full;
    int ambient_degree = 0;
    int dim = 0;
    std::string label;
    Subquotient space;             // cokernel positions (trivial subspace for Full)
    std::vector<Vec> kernel;       // kernel positions: RREF basis in ambient coords
    std::vector<int> kernel_pivots;
    Matrix diff_out;               // to the next position; empty at the top
    OperatorOrder order = OperatorOrder::First;
};

/// The extended complex B^0 .. B^R: first half cokernel realizations with the
/// twisted differential pushed to the quotient, a second-order middle map, and
/// kernels with the plain differential in the second half.
struct ExtendedComplex {
    CalKind kind = CalKind::Generic;
    int ambient_dim = 0;
    int mid = 0;     // position of the second-order differential
    int length = 0;  // R: positions run 0..R
    StructureData provenance;  // the validated input (empty for symbol complexes)
    std::vector<ComplexPosition> positions;

    CochainComplex cochain() const;
};

ExtendedComplex build_extended_complex(const StructureData& s);

/// The second-order middle map on a representative w of the middle cokernel:
/// u = (d - 2 alpha^) w, solve F ^ sigma = u, return d sigma. Vanishes on
/// representatives of the form F ^ tau.
Form middle_operator(const StructureData& s, const Form& w);

/// The extended complex built with d := xi ^ _ and alpha := 0 on constant
/// forms. Exact at every position for xi != 0: that is the symbol-level
/// ellipticity statement.
CochainComplex symbol_complex(const Calibration& shape, const Form& xi);

/// Only the second (coeffective) half of the symplectic symbol complex;
/// exact except at its first position.
CochainComplex symbol_complex_second_half(const Calibration& shape, const Form& xi);

struct StructureError : std::runtime_error {
    ValidationReport report;
    explicit StructureError(ValidationReport r)
        : std::runtime_error(r.message), report(std::move(r)) {}
};

}  // namespace coeffective
