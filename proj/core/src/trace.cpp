#include "reducts/classifier.hpp"

#include <type_traits>

namespace reducts {

std::string_view label(Generator g) { return g == Generator::Meet ? "meet" : "join"; }

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string step_text(const TraceStep& step) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, IdentifyStep>) {
          return "identify " + pair_text(s.i, s.j) + " [" + std::string(label(s.which)) +
                 "] -> " + render_anf(s.result);
        } else if constexpr (std::is_same_v<S, TernaryCaseStep>) {
          std::string out = "ternary [" + std::string(label(s.which)) + "] on " +
                            render_anf(s.ternary);
          if (s.pair) {
            out += " identify " + pair_text(s.pair->first, s.pair->second);
          } else if (s.which == TernaryCase::MedianEvenLinear) {
            out += " restrict " + s.ternary.vars()[2] + ":=0";
          } else {
            const std::string& x = s.ternary.vars()[0];
            out += " substitute " + s.ternary.vars()[2] + ":=f(" + x + "," + x + "," + x + ")";
          }
          return out + " -> " + render_anf(s.witness);
        } else if constexpr (std::is_same_v<S, BinaryIdentityStep>) {
          return "binary-identity " + render_composition(s.identity, s.function.vars()) + " = " +
                 render_anf(s.result) + " for f = " + render_anf(s.function) + " [" +
                 std::string(label(s.generator)) + "]";
        } else if constexpr (std::is_same_v<S, TranslationCovarianceStep>) {
          return "translation-covariance defect " + render_anf(s.defect) + "; at " +
                 s.defect.vars().back() + ":=1: " + render_anf(s.defect_at_one) + " -> " +
                 (s.covariant ? "covariant" : "not covariant");
        } else if constexpr (std::is_same_v<S, LinearCanonicalStep>) {
          return "linear-canonical m=" + std::to_string(s.essential) +
                 " alpha=" + (s.alpha ? "1" : "0") + " -> " + render_anf(s.canonical);
        } else {
          return "constant-or-projection " + render_anf(s.function);
        }
      },
      step);
}

} // namespace

std::string render_trace(const Trace& trace) {
  std::string out = "input " + render_anf(trace.input) + "\n";
  for (std::size_t n = 0; n < trace.steps.size(); ++n) {
    out += std::to_string(n + 1) + ". " + step_text(trace.steps[n]) + "\n";
  }
  out += "result ";
  out += identifier(trace.result);
  out += "\n";
  return out;
}

} // namespace reducts
