#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "taut/pinwheel.hpp"
#include "taut/rational.hpp"

namespace taut {

enum class OutputFormat { plain, json, latex };

/// Throws InvalidInput on anything but "plain", "json", "latex".
OutputFormat parse_output_format(std::string_view name);

/// plain: "num/den" or "num"; json: {"den":"..","num":".."}; latex: \frac{num}{den}.
std::string render_value(const Rational& value, OutputFormat format);

/// One line per term, e.g. "-psi_b1^4 [Delta_{1,2}{3}]".
std::string render_terms_plain(const std::vector<PinwheelTerm>& terms);
/// Compact JSON list of {partition, sign, spine_exponents, tail_exponents}.
std::string render_terms_json(const std::vector<PinwheelTerm>& terms);
/// "\omega_1^3\omega_2^2 = \psi_1^3\psi_2^2 - \psi_\bullet^4[\Delta_{\{1,2\}\{3\}}] ..."
std::string render_terms_latex(const OmegaMonomial& m, const std::vector<PinwheelTerm>& terms);

std::string render_terms(const OmegaMonomial& m, const std::vector<PinwheelTerm>& terms,
                         OutputFormat format);

/// Inverse of render_terms_json. The marks count n is inferred from the labels.
std::vector<PinwheelTerm> parse_terms_json(std::string_view text);

}  // namespace taut
