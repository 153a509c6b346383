#include "coeffective/model.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "coeffective/serialize.hpp"

namespace coeffective {

using nlohmann::json;
using nlohmann::ordered_json;

Form LieAlgebraModel::d_basis(int k) const {
    Form out(dim);
    for (const auto& t : structure)
        if (t.k == k) out.add_term(Blade(dim, {t.i, t.j}), t.coeff);
    return out;
}

Form LieAlgebraModel::d(const Form& w) const {
    Form out(dim);
    for (const auto& [b, c] : w.terms) {
        auto idx = b.indices();
        for (size_t pos = 0; pos < idx.size(); ++pos) {
            Form db = d_basis(idx[pos]);
            if (db.is_zero()) continue;
            // d(e_{i1..ik}) term at slot pos: sign (-1)^pos, d(e_i) wedged into place
            std::vector<int> rest;
            for (size_t q = 0; q < idx.size(); ++q)
                if (q != pos) rest.push_back(idx[q]);
            Form rest_form(dim);
            rest_form.terms.emplace(Blade(dim, rest), Rational(1));
            Form piece = wedge(db, rest_form);
            out = out + piece.scaled((pos % 2 == 0) ? c : -c);
        }
    }
    return out;
}

Matrix LieAlgebraModel::d_matrix(int degree) const {
    auto src = enumerate_basis(dim, degree);
    int dst_dim = degree + 1 > dim ? 0 : static_cast<int>(enumerate_basis(dim, degree + 1).size());
    Matrix out(dst_dim, static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        Form e(dim);
        e.terms.emplace(src[j], Rational(1));
        for (const auto& [b, c] : d(e).terms) out.set(blade_index(b), j, c);
    }
    return out;
}

void LieAlgebraModel::validate() const {
    for (const auto& t : structure) {
        if (t.k < 1 || t.k > dim || t.i < 1 || t.j > dim || t.i >= t.j)
            throw ModelError("schema", "structure term with bad indices in model '" + name + "'");
    }
    for (int k = 1; k <= dim; ++k) {
        Form e(dim);
        e.terms.emplace(Blade(dim, {k}), Rational(1));
        Form dd = d(d(e));
        if (!dd.is_zero()) {
            const auto& [b, c] = *dd.terms.begin();
            std::string idx;
            for (int i : b.indices()) idx += std::to_string(i);
            throw ModelError("jacobi", "d^2 e" + std::to_string(k) + " has coefficient " +
                                           to_string(c) + " on e" + idx + " in model '" + name +
                                           "'");
        }
    }
}

ModelData parse_model(const json& j) {
    ModelData out;
    try {
        out.model.name = j.at("name").get<std::string>();
        out.model.dim = j.at("dim").get<int>();
        if (out.model.dim < 1 || out.model.dim > 16)
            throw ModelError("schema", "dim out of range");
        for (const auto& t : j.at("structure")) {
            LieAlgebraModel::Term term;
            term.k = t.at("k").get<int>();
            term.i = t.at("i").get<int>();
            term.j = t.at("j").get<int>();
            term.coeff = rational_from_string(t.at("coeff").get<std::string>());
            out.model.structure.push_back(term);
        }
        out.alpha = form_from_json(j.at("alpha"), out.model.dim);
        const auto& cal = j.at("calibration");
        std::string kind = cal.at("kind").get<std::string>();
        if (kind == "symplectic")
            out.kind = CalKind::Symplectic;
        else if (kind == "g2")
            out.kind = CalKind::G2;
        else if (kind == "generic")
            out.kind = CalKind::Generic;
        else
            throw ModelError("schema", "unknown calibration kind: " + kind);
        out.F = form_from_json(cal.at("form"), out.model.dim);
    } catch (const ModelError&) {
        throw;
    } catch (const std::exception& e) {
        throw ModelError("schema", std::string("model schema violation: ") + e.what());
    }
    out.model.validate();
    return out;
}

ModelData parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("schema", "cannot open model file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ModelError("schema", std::string("model file is not valid JSON: ") + e.what());
    }
    return parse_model(j);
}

ordered_json model_to_json(const ModelData& m) {
    ordered_json j;
    j["name"] = m.model.name;
    j["dim"] = m.model.dim;
    j["structure"] = ordered_json::array();
    for (const auto& t : m.model.structure) {
        ordered_json term;
        term["k"] = t.k;
        term["i"] = t.i;
        term["j"] = t.j;
        term["coeff"] = to_string(t.coeff);
        j["structure"].push_back(term);
    }
    j["alpha"] = form_to_json(m.alpha);
    j["calibration"]["kind"] = m.kind == CalKind::Symplectic ? "symplectic"
                               : m.kind == CalKind::G2       ? "g2"
                                                             : "generic";
    j["calibration"]["form"] = form_to_json(m.F);
    return j;
}

namespace {

ModelData make_torus(int n) {
    ModelData out;
    out.model.dim = 2 * n;
    out.model.name = "torus" + std::to_string(2 * n);
    out.alpha = Form(2 * n);
    out.kind = CalKind::Symplectic;
    out.F = standard_symplectic(n).F;
    return out;
}

ModelData make_torus7_g2() {
    ModelData out;
    out.model.dim = 7;
    out.model.name = "torus7_g2";
    out.alpha = Form(7);
    out.kind = CalKind::G2;
    out.F = standard_g2().F;
    return out;
}

// Invariant model of S^1 x S^3: e1 spans the circle direction, e2..e4 carry
// the su(2) relations d e2 = e34, d e3 = -e24, d e4 = e23.
ModelData make_hopf4() {
    ModelData out;
    out.model.dim = 4;
    out.model.name = "hopf4";
    out.model.structure = {{2, 3, 4, Rational(1)}, {3, 2, 4, Rational(-1)}, {4, 2, 3, Rational(1)}};
    out.alpha = Form::basis_form(4, {1});
    out.kind = CalKind::Symplectic;
    Form J(4);
    J.add_term(Blade(4, {1, 2}), -2);
    J.add_term(Blade(4, {3, 4}), 1);
    out.F = J;
    return out;
}

ModelData make_kodaira_thurston() {
    ModelData out;
    out.model.dim = 4;
    out.model.name = "kodaira_thurston";
    out.model.structure = {{4, 1, 2, Rational(1)}};
    out.alpha = Form(4);
    out.kind = CalKind::Symplectic;
    Form J(4);
    J.add_term(Blade(4, {1, 3}), 1);
    J.add_term(Blade(4, {2, 4}), 1);
    out.F = J;
    return out;
}

RingModel make_cpn(int n) {
    RingModel out;
    out.name = "cpn" + std::to_string(n);
    out.betti.assign(2 * n + 1, 0);
    for (int j = 0; j <= n; ++j) out.betti[2 * j] = 1;
    out.class_degree = 2;
    // cup with the hyperplane class: identity H^{2j} -> H^{2j+2}, j < n
    for (int r = 0; r <= 2 * n; ++r) {
        int target = (r + 2 <= 2 * n) ? out.betti[r + 2] : 0;
        Matrix cup(target, out.betti[r]);
        if (r % 2 == 0 && r + 2 <= 2 * n) cup.set(0, 0, 1);
        out.cup.push_back(cup);
    }
    return out;
}

}  // namespace

Builtin builtin(const std::string& name, int n, int max_homogeneity) {
    Builtin out;
    out.name = name;
    if (name == "torus") {
        if (n < 1) throw ModelError("schema", "torus requires --n >= 1");
        out.data = make_torus(n);
    } else if (name == "torus7_g2") {
        out.data = make_torus7_g2();
    } else if (name == "hopf4") {
        out.data = make_hopf4();
    } else if (name == "kodaira_thurston") {
        out.data = make_kodaira_thurston();
    } else if (name == "cpn") {
        if (n < 1) throw ModelError("schema", "cpn requires --n >= 1");
        out.data = make_cpn(n);
    } else if (name == "local") {
        if (n < 1 || max_homogeneity < 0)
            throw ModelError("schema", "local requires ambient dimension and max homogeneity");
        out.data = PolynomialModel{n, max_homogeneity};
    } else {
        throw ModelError("schema", "unknown builtin: " + name);
    }
    return out;
}

std::vector<std::string> builtin_names() {
    return {"torus", "torus7_g2", "hopf4", "kodaira_thurston", "cpn", "local"};
}

}  // namespace coeffective
