#include "coeffective/serialize.hpp"

#include <sstream>

namespace coeffective {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json form_to_json(const Form& f) {
    ordered_json out = ordered_json::array();
    for (const auto& [b, c] : f.terms) {
        ordered_json term;
        term["blade"] = b.indices();
        term["coeff"] = to_string(c);
        out.push_back(term);
    }
    return out;
}

Form form_from_json(const json& j, int dim) {
    if (!j.is_array()) throw std::invalid_argument("form literal must be an array");
    Form f(dim);
    for (const auto& term : j) {
        std::vector<int> idx = term.at("blade").get<std::vector<int>>();
        Rational c = rational_from_string(term.at("coeff").get<std::string>());
        f.add_term(Blade(dim, idx), c);
    }
    return f;
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.get(r, c)));
        rows.push_back(row);
    }
    out["entries"] = rows;
    return out;
}

ordered_json profile_to_json(const ColumnProfile& p) {
    ordered_json out = ordered_json::array();
    for (const auto& e : p.entries) {
        ordered_json row;
        row["k"] = e.k;
        row["dim_source"] = e.dim_src;
        row["dim_target"] = e.dim_dst;
        row["rank"] = e.rank;
        row["class"] = column_class_name(e.cls);
        out.push_back(row);
    }
    return out;
}

std::string profile_to_markdown(const ColumnProfile& p) {
    std::ostringstream os;
    os << "| k | dim source | dim target | rank | class |\n";
    os << "|---|-----------:|-----------:|-----:|-------|\n";
    for (const auto& e : p.entries)
        os << "| " << e.k << " | " << e.dim_src << " | " << e.dim_dst << " | " << e.rank << " | "
           << column_class_name(e.cls) << " |\n";
    return os.str();
}

ordered_json complex_to_json(const ExtendedComplex& c) {
    ordered_json out;
    out["kind"] = c.kind == CalKind::Symplectic ? "symplectic" : "g2";
    if (!c.provenance.model.name.empty()) out["provenance"] = c.provenance.model.name;
    out["ambient_dim"] = c.ambient_dim;
    out["mid"] = c.mid;
    out["length"] = c.length;
    ordered_json positions = ordered_json::array();
    for (const auto& p : c.positions) {
        ordered_json pos;
        pos["index"] = p.index;
        pos["label"] = p.label;
        pos["dim"] = p.dim;
        pos["realization"] = p.realization == Realization::Full       ? "full"
                             : p.realization == Realization::Cokernel ? "cokernel"
                                                                      : "kernel";
        pos["ambient_degree"] = p.ambient_degree;
        pos["operator_order"] = p.order == OperatorOrder::Second ? 2 : 1;
        if (p.index < c.length) pos["differential"] = matrix_to_json(p.diff_out);
        positions.push_back(pos);
    }
    out["positions"] = positions;
    return out;
}

ordered_json table_to_json(const CohomologyTable& t, const std::string& name) {
    ordered_json out;
    out["name"] = name;
    out["dims"] = t.dims;
    return out;
}

std::string table_to_markdown(const CohomologyTable& t, const std::string& name) {
    std::ostringstream os;
    os << "| degree |";
    for (size_t r = 0; r < t.dims.size(); ++r) os << " " << r << " |";
    os << "\n|--------|";
    for (size_t r = 0; r < t.dims.size(); ++r) os << "---|";
    os << "\n| " << name << " |";
    for (int d : t.dims) os << " " << d << " |";
    os << "\n";
    return os.str();
}

ordered_json validation_to_json(const ValidationReport& r) {
    ordered_json out;
    out["valid"] = r.ok;
    out["code"] = ValidationReport::code_name(r.code);
    out["message"] = r.message;
    if (!r.offending.is_zero()) out["offending"] = form_to_json(r.offending);
    return out;
}

std::string validation_to_markdown(const ValidationReport& r) {
    std::ostringstream os;
    os << "| check | result |\n|-------|--------|\n";
    os << "| status | " << (r.ok ? "valid" : "invalid") << " |\n";
    os << "| code | " << ValidationReport::code_name(r.code) << " |\n";
    os << "| detail | " << r.message << " |\n";
    return os.str();
}

ordered_json les_to_json(const LESComparison& c) {
    ordered_json out;
    out["model"] = c.model_name;
    out["kind"] = les_kind_name(c.report.kind);
    out["betti_plain"] = c.report.betti_plain;
    out["betti_twisted"] = c.report.betti_twisted;
    out["delta_ranks"] = c.report.delta_ranks;
    out["predicted"] = c.report.predicted;
    if (c.has_direct) out["direct"] = c.direct;
    out["match"] = c.match;
    out["boundary_identifications"] = c.report.boundary_notes;
    return out;
}

std::string les_to_markdown(const LESComparison& c) {
    std::ostringstream os;
    os << "### " << c.model_name << "\n\n";
    os << "| degree | dim_direct | dim_predicted | match |\n";
    os << "|-------:|-----------:|--------------:|-------|\n";
    for (size_t r = 0; r < c.report.predicted.size(); ++r) {
        os << "| " << r << " | ";
        if (c.has_direct)
            os << c.direct[r];
        else
            os << "-";
        os << " | " << c.report.predicted[r] << " | ";
        if (c.has_direct)
            os << (c.direct[r] == c.report.predicted[r] ? "yes" : "NO");
        else
            os << "n/a";
        os << " |\n";
    }
    os << "\nmatch: " << (c.match ? "true" : "false") << "\n";
    return os.str();
}

std::string les_to_csv(const LESComparison& c) {
    std::ostringstream os;
    os << "degree,dim_direct,dim_predicted,match\n";
    for (size_t r = 0; r < c.report.predicted.size(); ++r) {
        os << r << ",";
        if (c.has_direct)
            os << c.direct[r];
        os << "," << c.report.predicted[r] << ",";
        if (c.has_direct)
            os << (c.direct[r] == c.report.predicted[r] ? "true" : "false");
        else
            os << "true";
        os << "\n";
    }
    return os.str();
}

}  // namespace coeffective
