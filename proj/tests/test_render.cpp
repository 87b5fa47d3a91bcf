#include <doctest.h>

#include "taut/errors.hpp"
#include "taut/pinwheel.hpp"
#include "taut/render.hpp"

using namespace taut;

TEST_CASE("values") {
  CHECK(render_value(Rational(1, 24), OutputFormat::plain) == "1/24");
  CHECK(render_value(Rational(1), OutputFormat::plain) == "1");
  CHECK(render_value(Rational(0), OutputFormat::plain) == "0");
  CHECK(render_value(Rational(1, 24), OutputFormat::json) == R"({"num":"1","den":"24"})");
  CHECK(render_value(Rational(1, 24), OutputFormat::latex) == R"(\frac{1}{24})");
  CHECK(render_value(Rational(-1, 24), OutputFormat::latex) == R"(-\frac{1}{24})");
  CHECK(render_value(Rational(-3), OutputFormat::latex) == "-3");
}

TEST_CASE("format names") {
  CHECK(parse_output_format("latex") == OutputFormat::latex);
  CHECK_THROWS_AS(parse_output_format("xml"), InvalidInput);
}

TEST_CASE("plain term lists") {
  CHECK(render_terms_plain(expand_graph_formula(OmegaMonomial(1, {2}))) == "+psi_1^2");
  CHECK(render_terms_plain(expand_graph_formula(OmegaMonomial(1, {0, 0}))) == "+1");
  CHECK(render_terms_plain(expand_graph_formula(OmegaMonomial(1, {1, 0}))) == "-1 [Delta_{1,2}]\n+psi_1");
}

TEST_CASE("latex for omega_1^3 omega_2^2") {
  OmegaMonomial m(2, {3, 2, 0});
  CHECK(render_terms_latex(m, expand_graph_formula(m)) ==
        R"(\omega_1^3\omega_2^2 = - (\psi_\bullet^4 - \psi_\bullet^3\psi_\star)[\Delta_{\{1,2,3\}}])"
        R"( - \psi_\bullet^4[\Delta_{\{1,2\}\{3\}}] - \psi_\bullet^2\psi_2^2[\Delta_{\{1,3\}\{2\}}])"
        R"( - \psi_1^3\psi_\bullet[\Delta_{\{1\}\{2,3\}}] + \psi_1^3\psi_2^2)");
}

TEST_CASE("latex indexes flags when there are several tails") {
  OmegaMonomial m(2, {1, 1, 1, 1});
  auto latex = render_terms_latex(m, expand_graph_formula(m));
  CHECK(latex.find(R"( - \psi_{\bullet_1}\psi_{\bullet_2}[\Delta_{\{1,2\}\{3,4\}}])") == std::string::npos);
  CHECK(latex.find(R"( + \psi_{\bullet_1}\psi_{\bullet_2}[\Delta_{\{1,2\}\{3,4\}}])") != std::string::npos);
  // A single tail keeps the bare labels even when it is not the first part.
  CHECK(latex.find(R"(\psi_1\psi_2\psi_\bullet[\Delta_{\{1\}\{2\}\{3,4\}}])") != std::string::npos);
  CHECK(render_terms_latex(OmegaMonomial(1, {12}), expand_graph_formula(OmegaMonomial(1, {12}))) ==
        R"(\omega_1^{12} = \psi_1^{12})");
}

TEST_CASE("json round trip is byte identical") {
  for (auto k : std::vector<std::vector<int>>{{3, 2, 0}, {1}, {0, 0}, {2, 1, 1, 1}, {4, 0, 3, 1, 2}}) {
    OmegaMonomial m(2, k);
    for (bool full : {false, true}) {
      auto terms = expand_graph_formula(m, {.full_series = full});
      auto json = render_terms_json(terms);
      auto parsed = parse_terms_json(json);
      CHECK(parsed == terms);
      CHECK(render_terms_json(parsed) == json);
    }
  }
}

TEST_CASE("malformed json term lists") {
  CHECK_THROWS_AS(parse_terms_json("{"), InvalidInput);
  CHECK_THROWS_AS(parse_terms_json(R"([{"partition":[[1,2]],"sign":-1}])"), InvalidInput);
  CHECK_THROWS_AS(
      parse_terms_json(R"([{"partition":[[1],[3]],"sign":1,"spine_exponents":[0,0],"tail_exponents":[0,0]}])"),
      InvalidInput);
}
