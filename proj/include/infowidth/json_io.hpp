#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "infowidth/core_measures.hpp"
#include "infowidth/errors.hpp"
#include "infowidth/function_classes.hpp"
#include "infowidth/random_classes.hpp"

namespace infowidth {

/// Malformed or schema-violating JSON input; what() carries "line L, column C".
class JsonInputError : public DomainError {
public:
    JsonInputError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// {"ny": N, "subsets": [[i, ...], ...]} or {"ny": N, "counts": {"k": "<decimal>", ...}}.
PropertyCollection parse_property_json(std::string_view text);
nlohmann::json property_to_json(const PropertyCollection& x);

/// Target set for the provider perspective: {"target": [i, ...]} or a bare array.
TargetSubset parse_target_json(std::string_view text, const TargetSpace& space);

/// {"n": 2, "class": [0, 1]}.
FunctionClass parse_class_json(std::string_view text);
nlohmann::json class_to_json(const FunctionClass& g);

/// {"sample": [[point, label], ...]} with 1-based points.
LabeledSample parse_sample_json(std::string_view text);
nlohmann::json sample_to_json(const LabeledSample& s);

/// {"I", "H", "l", "kappa", "eta", "method", "notes"}; undefined values are null.
nlohmann::json report_to_json(const InfoReport& r);

/// {"estimate", "stderr", "trials", "seed"}.
nlohmann::json estimate_to_json(const McEstimate& e);

}  // namespace infowidth
