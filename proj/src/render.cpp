#include "taut/render.hpp"

#include <sstream>

#include <json.hpp>

#include "taut/errors.hpp"

namespace taut {

namespace {

// LaTeX script argument: single characters bare, anything longer braced.
std::string script(const std::string& s) { return s.size() == 1 ? s : "{" + s + "}"; }

std::string latex_power(const std::string& base, int exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return base;
  return base + "^" + script(std::to_string(exponent));
}

std::string plain_power(const std::string& base, int exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

std::string join_parts(const SetPartition& p, const char* open, const char* close) {
  std::string out;
  for (const auto& part : p.parts()) {
    out += open;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(part[i]);
    }
    out += close;
  }
  return out;
}

std::string plain_monomial(const PinwheelTerm& t) {
  std::vector<std::string> factors;
  for (std::size_t j = 0; j < t.partition.length(); ++j) {
    const auto& part = t.partition.part(j);
    if (part.size() == 1) {
      factors.push_back(plain_power("psi_" + std::to_string(part.front()), t.spine_exponents[j]));
    } else {
      const std::string idx = std::to_string(j + 1);
      factors.push_back(plain_power("psi_b" + idx, t.spine_exponents[j]));
      factors.push_back(plain_power("psi_s" + idx, t.tail_exponents[j]));
    }
  }
  std::string out;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!out.empty()) out += '*';
    out += f;
  }
  return out.empty() ? "1" : out;
}

// Empty when the monomial is 1.
std::string latex_monomial(const PinwheelTerm& t) {
  const bool single_tail = codimension(t.partition) == 1;
  std::string out;
  for (std::size_t j = 0; j < t.partition.length(); ++j) {
    const auto& part = t.partition.part(j);
    if (part.size() == 1) {
      out += latex_power("\\psi_" + script(std::to_string(part.front())), t.spine_exponents[j]);
      continue;
    }
    const std::string idx = std::to_string(j + 1);
    const std::string spine = single_tail ? "\\psi_\\bullet" : "\\psi_{\\bullet_" + idx + "}";
    const std::string tail = single_tail ? "\\psi_\\star" : "\\psi_{\\star_" + idx + "}";
    out += latex_power(spine, t.spine_exponents[j]);
    out += latex_power(tail, t.tail_exponents[j]);
  }
  return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  throw InvalidInput("unknown output format '" + std::string(name) + "' (expected plain, json, latex)");
}

std::string render_value(const Rational& value, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain:
      return value.to_string();
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["num"] = value.numerator_string();
      j["den"] = value.denominator_string();
      return j.dump();
    }
    case OutputFormat::latex: {
      if (value.is_integer()) return value.numerator_string();
      const Rational magnitude = value.sign() < 0 ? -value : value;
      return std::string(value.sign() < 0 ? "-" : "") + "\\frac{" + magnitude.numerator_string() + "}{" +
             magnitude.denominator_string() + "}";
    }
  }
  return {};
}

std::string render_terms_plain(const std::vector<PinwheelTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += '\n';
    out += t.sign > 0 ? '+' : '-';
    out += plain_monomial(t);
    if (!t.partition.is_trivial()) out += " [Delta_" + join_parts(t.partition, "{", "}") + "]";
  }
  return out;
}

std::string render_terms_json(const std::vector<PinwheelTerm>& terms) {
  auto list = nlohmann::json::array();
  for (const auto& t : terms) {
    list.push_back({{"partition", t.partition.parts()},
                    {"sign", t.sign},
                    {"spine_exponents", t.spine_exponents},
                    {"tail_exponents", t.tail_exponents}});
  }
  return list.dump();
}

std::vector<PinwheelTerm> parse_terms_json(std::string_view text) {
  std::vector<PinwheelTerm> terms;
  try {
    for (const auto& item : nlohmann::json::parse(text)) {
      auto parts = item.at("partition").get<std::vector<Part>>();
      int n = 0;
      for (const auto& part : parts) {
        for (int label : part) n = std::max(n, label);
      }
      SetPartition partition(n, std::move(parts));
      auto spine = item.at("spine_exponents").get<std::vector<int>>();
      auto tail = item.at("tail_exponents").get<std::vector<int>>();
      PinwheelTerm t{std::move(partition), item.at("sign").get<int>(), std::move(spine), std::move(tail)};
      validate_term(n, t);
      terms.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed term list: ") + e.what());
  }
  return terms;
}

std::string render_terms_latex(const OmegaMonomial& m, const std::vector<PinwheelTerm>& terms) {
  std::string lhs;
  for (int i = 0; i < m.marks(); ++i) {
    lhs += latex_power("\\omega_" + script(std::to_string(i + 1)), m.exponents()[i]);
  }
  std::ostringstream out;
  out << (lhs.empty() ? "1" : lhs) << " =";

  bool first = true;
  for (std::size_t i = 0; i < terms.size();) {
    // Terms of one stratum are adjacent; group them under a common bracket.
    std::size_t end = i + 1;
    while (end < terms.size() && terms[end].partition == terms[i].partition) ++end;

    const auto& lead = terms[i];
    const std::string stratum =
        lead.partition.is_trivial() ? "" : "[\\Delta_{" + join_parts(lead.partition, "\\{", "\\}") + "}]";
    if (first) {
      out << (lead.sign < 0 ? " -" : "");
    } else {
      out << (lead.sign < 0 ? " -" : " +");
    }
    out << ' ';
    if (end - i == 1) {
      std::string mono = latex_monomial(lead);
      out << (mono.empty() && stratum.empty() ? "1" : mono) << stratum;
    } else {
      out << '(';
      for (std::size_t k = i; k < end; ++k) {
        std::string mono = latex_monomial(terms[k]);
        if (mono.empty()) mono = "1";
        if (k > i) out << (terms[k].sign == lead.sign ? " + " : " - ");
        out << mono;
      }
      out << ')' << stratum;
    }
    first = false;
    i = end;
  }
  return out.str();
}

std::string render_terms(const OmegaMonomial& m, const std::vector<PinwheelTerm>& terms, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain:
      return render_terms_plain(terms);
    case OutputFormat::json:
      return render_terms_json(terms);
    case OutputFormat::latex:
      return render_terms_latex(m, terms);
  }
  return {};
}

}  // namespace taut
