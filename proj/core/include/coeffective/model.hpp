#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "coeffective/exterior.hpp"
#include "coeffective/structures.hpp"

namespace coeffective {

struct ModelError : std::runtime_error {
    std::string code;  // "schema" | "jacobi"
    ModelError(std::string code_, const std::string& what)
        : std::runtime_error(what), code(std::move(code_)) {}
};

/// Finite-dimensional model given by structure constants: d e^k contains
/// coeff * e^i ^ e^j (i < j). The differential extends to all degrees as a
/// derivation; d^2 = 0 is checked at load.
struct LieAlgebraModel {
    int dim = 0;
    std::string name;
    struct Term {
        int k = 0, i = 0, j = 0;
        Rational coeff;
    };
    std::vector<Term> structure;

    Form d_basis(int k) const;          // d e^k
    Form d(const Form& w) const;        // derivation extension
    Matrix d_matrix(int degree) const;  // Lambda^degree -> Lambda^{degree+1}
    void validate() const;              // throws ModelError("jacobi", ...) when d^2 != 0
};

/// Cohomology-ring model: Betti numbers plus cup-with-class matrices, for
/// spaces whose ring is known without a cochain model (projective spaces).
struct RingModel {
    std::string name;
    std::vector<int> betti;    // degrees 0..len-1
    int class_degree = 2;      // degree of the distinguished class
    std::vector<Matrix> cup;   // cup[r]: H^r -> H^{r+class_degree}
};

/// Ambient data for polynomial-coefficient local models.
struct PolynomialModel {
    int dim = 0;
    int max_homogeneity = 0;
};

/// A parsed model file: cochain model, Lee form candidate, and the raw
/// calibration data. The calibration is validated later (validate_structure),
/// so deliberately broken files can still be loaded and reported on.
struct ModelData {
    LieAlgebraModel model;
    Form alpha;
    CalKind kind = CalKind::Generic;
    Form F;
};

ModelData parse_model(const nlohmann::json& j);
ModelData parse_model_file(const std::string& path);
nlohmann::ordered_json model_to_json(const ModelData& m);

struct Builtin {
    std::string name;
    std::variant<ModelData, RingModel, PolynomialModel> data;

    bool is_model() const { return std::holds_alternative<ModelData>(data); }
    const ModelData& model() const { return std::get<ModelData>(data); }
    const RingModel& ring() const { return std::get<RingModel>(data); }
    const PolynomialModel& polynomial() const { return std::get<PolynomialModel>(data); }
};

/// Built-in models: torus(n), torus7_g2, hopf4, kodaira_thurston, cpn(n),
/// local(m, H). Unknown names throw ModelError("schema", ...).
Builtin builtin(const std::string& name, int n = 0, int max_homogeneity = 0);

std::vector<std::string> builtin_names();

}  // namespace coeffective
