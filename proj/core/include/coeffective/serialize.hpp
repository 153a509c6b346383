#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "coeffective/builder.hpp"
#include "coeffective/homology.hpp"
#include "coeffective/structures.hpp"

namespace coeffective {

// Forms serialize as [{"blade": [1,2], "coeff": "p/q"}]; rationals as strings
// with the denominator omitted when 1.

nlohmann::ordered_json form_to_json(const Form& f);
Form form_from_json(const nlohmann::json& j, int dim);

nlohmann::ordered_json matrix_to_json(const Matrix& m);  // dense rows of strings

nlohmann::ordered_json profile_to_json(const ColumnProfile& p);
std::string profile_to_markdown(const ColumnProfile& p);

nlohmann::ordered_json complex_to_json(const ExtendedComplex& c);

nlohmann::ordered_json table_to_json(const CohomologyTable& t, const std::string& name);
std::string table_to_markdown(const CohomologyTable& t, const std::string& name);

nlohmann::ordered_json validation_to_json(const ValidationReport& r);
std::string validation_to_markdown(const ValidationReport& r);

/// Prediction vs direct computation, with a per-degree match column.
struct LESComparison {
    std::string model_name;
    LESReport report;
    std::vector<int> direct;  // empty when no direct route exists (ring models)
    bool has_direct = false;
    bool match = true;        // direct == predicted degree-by-degree when present
};

nlohmann::ordered_json les_to_json(const LESComparison& c);
std::string les_to_markdown(const LESComparison& c);
std::string les_to_csv(const LESComparison& c);

}  // namespace coeffective
