#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coeffective/exterior.hpp"
#include "coeffective/matrix.hpp"

namespace coeffective {

enum class CalKind { Symplectic, G2, Generic };

enum class ColumnClass { Injective, Isomorphism, Surjective, Neither };

/// Per-degree classification of F ^ _ : Lambda^k -> Lambda^{k+p} by exact rank.
struct ColumnProfile {
    struct Entry {
        int k = 0;
        int dim_src = 0;
        int dim_dst = 0;
        int rank = 0;
        ColumnClass cls = ColumnClass::Neither;
    };
    std::vector<Entry> entries;

    const Entry& at(int k) const;
    bool has_neither() const;
};

std::string column_class_name(ColumnClass c);

/// A calibration form with its non-degeneracy data. Degenerate forms are
/// rejected at construction; every downstream construction assumes the
/// profile holds.
struct Calibration {
    CalKind kind = CalKind::Generic;
    int dim = 0;
    Form F;
    std::optional<Bivector> Finv;  // symplectic only
    ColumnProfile profile;

    int form_degree() const { return F.degree(); }
    /// n for symplectic (dim = 2n); unset otherwise.
    std::optional<int> n() const;
};

struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

/// J = e12 + e34 + ... on Q^{2n}, with the inverse bivector satisfying
/// J_ac J^{bc} = delta_a^b.
Calibration standard_symplectic(int n);

/// The fundamental 3-form e123 + e145 + e167 + e246 - e257 - e347 - e356 on
/// Q^7. The constructor re-checks the full wedge-rank profile, so swapping in
/// another representative of the orbit is caught if it breaks any rank.
Calibration standard_g2();

/// Validating constructor for calibrations read from model files.
Calibration make_calibration(CalKind kind, const Form& F);

/// Rank classification of F ^ _ per degree (any homogeneous F).
ColumnProfile column_profile(const Form& F);
ColumnProfile column_profile(const Calibration& c);

enum class PerpSide { Kernel, Cokernel };

/// One realization of the trace-free space perp^k: either the kernel of a
/// wedge map in the complementary degree or the cokernel presentation in
/// degree k itself.
struct PerpSpace {
    int degree_label = 0;  // the k of perp^k
    PerpSide realization = PerpSide::Cokernel;
    int ambient_degree = 0;  // where the realization lives
    std::vector<Form> basis;
    Subquotient subquotient;  // cokernel presentation of the same space
    /// kernel coords -> cokernel rep coords through the canonical wedge
    /// isomorphism; symplectic only (empty otherwise).
    Matrix intertwine;

    int dim() const { return static_cast<int>(basis.size()); }
};

PerpSpace perp_space(const Calibration& c, int k, PerpSide side);

/// Splits w (degree k <= n) as w = sum_j J^j ^ w_j with each w_j trace-free.
/// Returns (w_0, w_1, ...), w_j of degree k - 2j.
std::vector<Form> lepage_decompose(const Calibration& c, const Form& w);

/// Pairing of trace-free k-forms: the top-blade coefficient of
/// (J^{n-k} ^ a) ^ b.
Rational pairing(const Calibration& c, const Form& a, const Form& b);

/// Basis of the trace-free subspace of Lambda^k (kernel of the trace for
/// k >= 2; the whole space for k < 2).
std::vector<Form> trace_free_basis(const Calibration& c, int k);

}  // namespace coeffective
