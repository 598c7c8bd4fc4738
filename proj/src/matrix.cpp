#include "dearank/matrix.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dearank {

DecisionMatrix::DecisionMatrix(std::vector<std::string> names,
                               std::vector<Attribute> attributes,
                               std::vector<std::vector<double>> values)
    : names_(std::move(names)),
      attributes_meta_(std::move(attributes)),
      values_(std::move(values)) {
    if (names_.empty())
        throw std::invalid_argument("decision matrix needs at least one alternative");
    if (names_.size() != values_.size())
        throw std::invalid_argument("alternative names and value rows differ in count");
    for (const auto& row : values_)
        if (row.size() != attributes_meta_.size())
            throw std::invalid_argument("value row width does not match attribute count");
    for (std::size_t i = 0; i < attributes_meta_.size(); ++i) {
        if (attributes_meta_[i].role == AttributeRole::Input)
            input_columns_.push_back(i);
        else
            output_columns_.push_back(i);
    }
    if (input_columns_.empty())
        throw std::invalid_argument("decision matrix needs at least one input attribute");
    if (output_columns_.empty())
        throw std::invalid_argument("decision matrix needs at least one output attribute");
}

double DecisionMatrix::column_max(std::size_t i) const {
    double best = values_[0][i];
    for (std::size_t j = 1; j < values_.size(); ++j)
        best = std::max(best, values_[j][i]);
    return best;
}

std::vector<ValidationIssue> DecisionMatrix::validate() const {
    std::vector<ValidationIssue> issues;
    auto error = [&](std::string msg) {
        issues.push_back({ValidationIssue::Severity::Error, std::move(msg)});
    };
    auto warning = [&](std::string msg) {
        issues.push_back({ValidationIssue::Severity::Warning, std::move(msg)});
    };

    for (std::size_t j = 0; j < alternatives(); ++j) {
        for (std::size_t i = 0; i < attributes(); ++i) {
            double v = values_[j][i];
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << "non-finite value for alternative '" << names_[j]
                   << "', attribute '" << attributes_meta_[i].label << "'";
                error(os.str());
            }
        }
    }

    for (std::size_t j = 0; j < alternatives(); ++j) {
        for (std::size_t k = 0; k < inputs(); ++k) {
            double v = input(j, k);
            if (std::isfinite(v) && v <= 0.0) {
                std::ostringstream os;
                os << "input '" << attributes_meta_[input_columns_[k]].label
                   << "' of alternative '" << names_[j] << "' must be positive, got "
                   << v;
                error(os.str());
            }
        }
        bool any_positive_output = false;
        bool outputs_ok = true;
        for (std::size_t r = 0; r < outputs(); ++r) {
            double v = output(j, r);
            if (!std::isfinite(v)) outputs_ok = false;
            if (std::isfinite(v) && v < 0.0) {
                std::ostringstream os;
                os << "output '" << attributes_meta_[output_columns_[r]].label
                   << "' of alternative '" << names_[j] << "' must be nonnegative, got "
                   << v;
                error(os.str());
            }
            if (v > 0.0) any_positive_output = true;
        }
        if (outputs_ok && !any_positive_output) {
            std::ostringstream os;
            os << "alternative '" << names_[j] << "' has no positive output";
            error(os.str());
        }
    }

    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second)
            warning("duplicate alternative name '" + n + "'");

    return issues;
}

void DecisionMatrix::ensure_valid() const {
    std::string combined;
    for (const auto& issue : validate()) {
        if (issue.severity != ValidationIssue::Severity::Error) continue;
        if (!combined.empty()) combined += "; ";
        combined += issue.message;
    }
    if (!combined.empty())
        throw std::invalid_argument("invalid decision matrix: " + combined);
}

DecisionMatrix DecisionMatrix::with_value(std::size_t j, std::size_t i,
                                          double v) const {
    auto values = values_;
    values.at(j).at(i) = v;
    return DecisionMatrix(names_, attributes_meta_, std::move(values));
}

NormalizedMatrix::NormalizedMatrix(DecisionMatrix scaled, std::vector<double> maxima)
    : scaled_(std::move(scaled)), maxima_(std::move(maxima)) {
    if (maxima_.size() != scaled_.attributes())
        throw std::invalid_argument("column maxima count does not match attributes");
}

NormalizedMatrix normalize(const DecisionMatrix& m) {
    std::vector<double> maxima(m.attributes());
    for (std::size_t i = 0; i < m.attributes(); ++i) {
        maxima[i] = m.column_max(i);
        if (!(maxima[i] > 0.0)) {
            throw std::invalid_argument("attribute '" + m.attribute(i).label +
                                        "' has no positive value to scale by");
        }
    }
    std::vector<std::vector<double>> scaled(m.alternatives(),
                                            std::vector<double>(m.attributes()));
    std::vector<std::string> names;
    std::vector<Attribute> attrs;
    for (std::size_t j = 0; j < m.alternatives(); ++j) {
        names.push_back(m.name(j));
        for (std::size_t i = 0; i < m.attributes(); ++i)
            scaled[j][i] = m.value(j, i) / maxima[i];
    }
    for (std::size_t i = 0; i < m.attributes(); ++i) attrs.push_back(m.attribute(i));
    return NormalizedMatrix(DecisionMatrix(std::move(names), std::move(attrs),
                                           std::move(scaled)),
                            std::move(maxima));
}

} // namespace dearank
