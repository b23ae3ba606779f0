#include "json_output.hpp"

#include <type_traits>

namespace reducts::cli {

Json to_json(const Anf& f) {
  Json monomials = Json::array();
  for (Monomial m : f.monomials()) {
    monomials.push_back(indices(m));
  }
  return {{"vars", f.vars()}, {"monomials", monomials}, {"text", render_anf(f)}};
}

Json to_json(ReductNode node) {
  return {{"id", identifier(node)}, {"name", display_name(node)}};
}

namespace {

Json pair_json(std::size_t i, std::size_t j) { return Json::array({i, j}); }

Json step_json(const TraceStep& step) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IdentifyStep>) {
          return {{"kind", "identify"},
                  {"pair", pair_json(s.i, s.j)},
                  {"case", label(s.which)},
                  {"result", to_json(s.result)}};
        } else if constexpr (std::is_same_v<T, TernaryCaseStep>) {
          Json j = {{"kind", "ternary"}, {"case", label(s.which)}, {"ternary", to_json(s.ternary)}};
          j["pair"] = s.pair ? pair_json(s.pair->first, s.pair->second) : Json(nullptr);
          j["witness"] = to_json(s.witness);
          return j;
        } else if constexpr (std::is_same_v<T, BinaryIdentityStep>) {
          return {{"kind", "binary-identity"},
                  {"function", to_json(s.function)},
                  {"identity", render_composition(s.identity, s.function.vars())},
                  {"result", to_json(s.result)},
                  {"generator", label(s.generator)}};
        } else if constexpr (std::is_same_v<T, TranslationCovarianceStep>) {
          return {{"kind", "translation-covariance"},
                  {"defect", to_json(s.defect)},
                  {"defect_at_one", to_json(s.defect_at_one)},
                  {"covariant", s.covariant}};
        } else if constexpr (std::is_same_v<T, LinearCanonicalStep>) {
          return {{"kind", "linear-canonical"},
                  {"essential", s.essential},
                  {"alpha", s.alpha ? 1 : 0},
                  {"canonical", to_json(s.canonical)}};
        } else {
          return {{"kind", "constant-or-projection"}, {"function", to_json(s.function)}};
        }
      },
      step);
}

} // namespace

Json to_json(const Trace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(step_json(s));
  }
  return {{"input", to_json(trace.input)}, {"steps", steps}, {"result", identifier(trace.result)}};
}

Json to_json(const IdentityCheck& check) {
  return {{"name", check.name},
          {"lhs", check.lhs},
          {"rhs", check.rhs},
          {"holds", check.holds},
          {"finding", check.finding}};
}

Json to_json(const CriterionResult& r) {
  return {{"id", r.id},           {"title", r.title},       {"passed", r.passed},
          {"seconds", r.seconds}, {"details", r.details}, {"findings", r.findings}};
}

Json to_json(const Permutation& p) {
  Json images = Json::array();
  for (Element e : p.images()) {
    images.push_back(static_cast<int>(e));
  }
  return images;
}

std::string verdict_key(Verdict v) {
  switch (v) {
  case Verdict::Equivalent:
    return "equivalent";
  case Verdict::FirstDefinesSecondStrictly:
    return "first_defines_second_strictly";
  case Verdict::SecondDefinesFirstStrictly:
    return "second_defines_first_strictly";
  case Verdict::Incomparable:
    return "incomparable";
  }
  return "";
}

Json lattice_json() {
  Json nodes = Json::array();
  for (ReductNode n : kAllNodes) {
    nodes.push_back({{"id", identifier(n)},
                     {"name", display_name(n)},
                     {"description", description(n)},
                     {"representatives", representatives(n)}});
  }
  Json covers = Json::array();
  for (auto [lo, hi] : hasse_edges()) {
    covers.push_back(Json::array({identifier(lo), identifier(hi)}));
  }
  return {{"nodes", nodes}, {"covers", covers}};
}

} // namespace reducts::cli
