#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dearank {

/// Whether an attribute is consumed (input / cost) or produced (output / benefit).
enum class AttributeRole { Input, Output };

struct Attribute {
    std::string label;
    AttributeRole role = AttributeRole::Input;
};

/// One diagnostic emitted by DecisionMatrix::validate().
struct ValidationIssue {
    enum class Severity { Warning, Error };
    Severity severity = Severity::Error;
    std::string message;
};

/// Dense alternatives-by-attributes table. Row j holds the attribute values of
/// alternative j; columns are tagged as inputs (costs) or outputs (benefits).
///
/// The constructor rejects structural defects (ragged rows, missing roles);
/// value-level problems are reported by validate() and enforced by
/// ensure_valid().
class DecisionMatrix {
public:
    DecisionMatrix(std::vector<std::string> names,
                   std::vector<Attribute> attributes,
                   std::vector<std::vector<double>> values);

    std::size_t alternatives() const { return values_.size(); }
    std::size_t attributes() const { return attributes_meta_.size(); }
    std::size_t inputs() const { return input_columns_.size(); }
    std::size_t outputs() const { return output_columns_.size(); }

    const std::string& name(std::size_t j) const { return names_[j]; }
    const Attribute& attribute(std::size_t i) const { return attributes_meta_[i]; }
    double value(std::size_t j, std::size_t i) const { return values_[j][i]; }
    const std::vector<double>& row(std::size_t j) const { return values_[j]; }

    /// Attribute indices of the input (resp. output) columns, ascending.
    const std::vector<std::size_t>& input_columns() const { return input_columns_; }
    const std::vector<std::size_t>& output_columns() const { return output_columns_; }

    /// k-th input value of alternative j (k indexes input_columns()).
    double input(std::size_t j, std::size_t k) const {
        return values_[j][input_columns_[k]];
    }
    /// r-th output value of alternative j (r indexes output_columns()).
    double output(std::size_t j, std::size_t r) const {
        return values_[j][output_columns_[r]];
    }

    /// Largest value in attribute column i.
    double column_max(std::size_t i) const;

    /// Reports data problems: non-finite entries and non-positive inputs are
    /// errors, an all-zero output row is an error, duplicate alternative
    /// names are a warning.
    std::vector<ValidationIssue> validate() const;

    /// Throws std::invalid_argument listing every error found by validate().
    void ensure_valid() const;

    /// Copy with one cell replaced; used by perturbation-style analyses.
    DecisionMatrix with_value(std::size_t j, std::size_t i, double v) const;

private:
    std::vector<std::string> names_;
    std::vector<Attribute> attributes_meta_;
    std::vector<std::vector<double>> values_;
    std::vector<std::size_t> input_columns_;
    std::vector<std::size_t> output_columns_;
};

/// Decision matrix scaled column-wise into [0, 1] by dividing each column by
/// its maximum, plus the maxima that were divided out.
class NormalizedMatrix {
public:
    NormalizedMatrix(DecisionMatrix scaled, std::vector<double> maxima);

    const DecisionMatrix& matrix() const { return scaled_; }
    double column_max(std::size_t i) const { return maxima_[i]; }
    const std::vector<double>& maxima() const { return maxima_; }

private:
    DecisionMatrix scaled_;
    std::vector<double> maxima_;
};

/// Column-max normalization. Throws std::invalid_argument if a column has no
/// positive value to divide by.
NormalizedMatrix normalize(const DecisionMatrix& m);

} // namespace dearank
