#include "reducts/classifier.hpp"

#include "reducts/error.hpp"

#include <array>

namespace reducts {

std::string_view label(IdentifyCase c) {
  switch (c) {
  case IdentifyCase::MiddleDegree:
    return "middle-degree";
  case IdentifyCase::FullProduct:
    return "full-product";
  case IdentifyCase::CoDegreeOne:
    return "codegree-one";
  }
  return "?";
}

std::string_view label(TernaryCase c) {
  switch (c) {
  case TernaryCase::CubicPresent:
    return "a7=1, two equal among a4,a5,a6";
  case TernaryCase::OneQuadratic:
    return "a7=0, exactly one of a4,a5,a6 is 1";
  case TernaryCase::TwoQuadratics:
    return "a7=0, exactly one of a4,a5,a6 is 0";
  case TernaryCase::MedianEvenLinear:
    return "a7=0, a4=a5=a6=1, even ones";
  case TernaryCase::MedianOddLinear:
    return "a7=0, a4=a5=a6=1, odd ones";
  }
  return "?";
}

std::string_view describe(Verdict v) {
  switch (v) {
  case Verdict::Equivalent:
    return "equivalent";
  case Verdict::FirstDefinesSecondStrictly:
    return "first strictly defines second";
  case Verdict::SecondDefinesFirstStrictly:
    return "second strictly defines first";
  case Verdict::Incomparable:
    return "incomparable";
  }
  return "?";
}

Composition Composition::variable(std::size_t index) {
  Composition c;
  c.index_ = index;
  return c;
}

Composition Composition::apply(Composition lhs, Composition rhs) {
  Composition c;
  c.args_.push_back(std::move(lhs));
  c.args_.push_back(std::move(rhs));
  return c;
}

Anf evaluate_composition(const Anf& f, const Composition& c) {
  if (f.variable_count() != 2) {
    throw Error("evaluate_composition: the function symbol must be binary");
  }
  if (c.is_variable()) {
    return Anf::variable(f.vars(), c.index());
  }
  const std::array<Anf, 2> subs{evaluate_composition(f, c.args()[0]),
                                evaluate_composition(f, c.args()[1])};
  return compose(f, subs);
}

std::string render_composition(const Composition& c, const std::vector<std::string>& names) {
  if (c.is_variable()) {
    return names.at(c.index());
  }
  return "f(" + render_composition(c.args()[0], names) + "," +
         render_composition(c.args()[1], names) + ")";
}

namespace {

// Ternary monomial masks over (x, y, z) = bits (0, 1, 2).
constexpr Monomial kXyz = 0b111;
constexpr Monomial kXy = 0b011;
constexpr Monomial kYz = 0b110;
constexpr Monomial kZx = 0b101;

bool is_nonlinear(const Anf& f) { return std::holds_alternative<NonLinearShape>(shape(f)); }

bool is_one(const Anf& f) { return f.monomials().size() == 1 && f.monomials().front() == 0; }

Anf canonical_linear(std::size_t arity, bool alpha) {
  static const std::vector<std::string> names{"x", "y", "z"};
  std::vector<std::string> vars(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(arity));
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < arity; ++i) {
    ms.push_back(Monomial{1} << i);
  }
  if (alpha) {
    ms.push_back(0);
  }
  return Anf(std::move(vars), std::move(ms));
}

ReductNode classify_linear(std::size_t m, bool alpha) {
  if (m == 1) {
    return alpha ? ReductNode::Neg : ReductNode::Sym;
  }
  if (m % 2 == 0) {
    return alpha ? ReductNode::Plus1 : ReductNode::Plus0;
  }
  return alpha ? ReductNode::Sigma1 : ReductNode::Sigma;
}

Anf defect_at_one(const Anf& defect) {
  return restrict_variable(defect, defect.variable_count() - 1, true);
}

struct BinaryIdentity {
  Composition identity;
  Generator generator;
};

// One entry per binary non-linear function xy + a*x + b*y + c.
BinaryIdentity binary_identity(const Anf& g) {
  using C = Composition;
  const bool ax = g.contains(0b01);
  const bool by = g.contains(0b10);
  const bool c = g.contains(0);
  const C x = C::variable(0);
  const C y = C::variable(1);
  const C plain = C::apply(x, y);
  const C diag = C::apply(C::apply(x, x), C::apply(y, y));
  if (!c) {
    if (!ax && !by) {
      return {plain, Generator::Meet};
    }
    if (ax && by) {
      return {plain, Generator::Join};
    }
    if (ax) {
      return {C::apply(x, C::apply(x, y)), Generator::Meet};
    }
    return {C::apply(C::apply(x, y), y), Generator::Meet};
  }
  if (!ax && !by) {
    return {diag, Generator::Join};
  }
  if (ax && by) {
    return {diag, Generator::Meet};
  }
  if (ax) {
    return {C::apply(C::apply(x, y), y), Generator::Join};
  }
  return {C::apply(x, C::apply(x, y)), Generator::Join};
}

Anf generator_polynomial(const std::vector<std::string>& vars, Generator g) {
  if (g == Generator::Meet) {
    return Anf(vars, {0b11});
  }
  return Anf(vars, {0b11, 0b01, 0b10});
}

BinaryIdentityStep binary_step(const Anf& g) {
  auto [identity, generator] = binary_identity(g);
  Anf result = evaluate_composition(g, identity);
  return {g, std::move(identity), std::move(result), generator};
}

struct IdentifyChoice {
  std::size_t i;
  std::size_t j;
  IdentifyCase which;
};

IdentifyChoice choose_identification(const Anf& f) {
  const std::size_t k = f.variable_count();
  const Monomial full = static_cast<Monomial>((std::uint64_t{1} << k) - 1);
  for (Monomial m : f.monomials()) {
    const int d = degree(m);
    if (d >= 2 && d <= static_cast<int>(k) - 2) {
      auto outside = indices(full & ~m);
      return {outside[0], outside[1], IdentifyCase::MiddleDegree};
    }
  }
  bool only_full = true;
  for (Monomial m : f.monomials()) {
    if (degree(m) >= 2 && m != full) {
      only_full = false;
    }
  }
  if (only_full) {
    return {k - 2, k - 1, IdentifyCase::FullProduct};
  }
  for (Monomial m : f.monomials()) {
    if (degree(m) == static_cast<int>(k) - 1) {
      auto inside = indices(m);
      return {inside[0], inside[1], IdentifyCase::CoDegreeOne};
    }
  }
  throw Error("arity reduction: no case applies to " + render_anf(f));
}

TernaryCase ternary_case(const Anf& f) {
  const bool a7 = f.contains(kXyz);
  const int quadratics = int(f.contains(kXy)) + int(f.contains(kYz)) + int(f.contains(kZx));
  if (a7) {
    return TernaryCase::CubicPresent;
  }
  switch (quadratics) {
  case 1:
    return TernaryCase::OneQuadratic;
  case 2:
    return TernaryCase::TwoQuadratics;
  case 3: {
    const int ones = int(f.contains(0b001)) + int(f.contains(0b010)) + int(f.contains(0b100));
    return ones % 2 == 0 ? TernaryCase::MedianEvenLinear : TernaryCase::MedianOddLinear;
  }
  default:
    throw Error("ternary case analysis: " + render_anf(f) + " is linear");
  }
}

// Witness of the ternary branch, plus the identified pair where one is used.
std::pair<std::optional<std::pair<std::size_t, std::size_t>>, Anf>
ternary_witness(const Anf& f, TernaryCase which) {
  switch (which) {
  case TernaryCase::CubicPresent: {
    const bool a6 = f.contains(kXy);
    const bool a5 = f.contains(kYz);
    const bool a4 = f.contains(kZx);
    std::pair<std::size_t, std::size_t> pair{0, 1};
    if (a5 == a6) {
      pair = {0, 2};
    } else if (a4 == a6) {
      pair = {1, 2};
    }
    return {pair, identify(f, pair.first, pair.second)};
  }
  case TernaryCase::OneQuadratic:
  case TernaryCase::TwoQuadratics: {
    constexpr std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (auto p : pairs) {
      Anf g = identify(f, p.first, p.second);
      if (is_nonlinear(g)) {
        return {p, std::move(g)};
      }
    }
    throw Error("ternary case analysis: no non-linear identification of " + render_anf(f));
  }
  case TernaryCase::MedianEvenLinear:
    return {std::nullopt, restrict_variable(f, 2, false)};
  case TernaryCase::MedianOddLinear: {
    const std::vector<std::string> vars{f.vars()[0], f.vars()[1]};
    const Anf x = Anf::variable(vars, 0);
    const Anf y = Anf::variable(vars, 1);
    const std::array<Anf, 3> diagonal{x, x, x};
    const std::array<Anf, 3> subs{x, y, compose(f, diagonal)};
    return {std::nullopt, compose(f, subs)};
  }
  }
  throw Error("unreachable ternary case");
}

TranslationCovarianceStep covariance_step(const Anf& f) {
  Anf defect = translation_defect(f);
  Anf at_one = defect_at_one(defect);
  const bool covariant = is_one(at_one);
  return {std::move(defect), std::move(at_one), covariant};
}

} // namespace

ReductNode classify_term(const Anf& f) {
  const Shape s = shape(f);
  if (const auto* c = std::get_if<ConstantShape>(&s)) {
    return c->value ? ReductNode::Stab1 : ReductNode::Stab0;
  }
  if (std::holds_alternative<ProjectionShape>(s)) {
    return ReductNode::Sym;
  }
  if (const auto* l = std::get_if<LinearShape>(&s)) {
    return classify_linear(l->essential, l->alpha);
  }
  return is_one(defect_at_one(translation_defect(f))) ? ReductNode::Median : ReductNode::Ba;
}

Anf canonicalize_linear(const Anf& f) {
  const Shape s = shape(f);
  if (const auto* c = std::get_if<ConstantShape>(&s)) {
    return canonical_linear(0, c->value);
  }
  if (std::holds_alternative<ProjectionShape>(s)) {
    return canonical_linear(1, false);
  }
  if (const auto* l = std::get_if<LinearShape>(&s)) {
    if (l->essential == 1) {
      return canonical_linear(1, l->alpha);
    }
    return canonical_linear(l->essential % 2 == 0 ? 2 : 3, l->alpha);
  }
  throw Error("canonicalize_linear: " + render_anf(f) + " is not linear");
}

Trace reduction_trace(const Anf& f) {
  if (!is_nonlinear(f)) {
    throw Error("reduction_trace: " + render_anf(f) + " is not non-linear");
  }
  Trace trace{f, {}, ReductNode::Ba};
  Anf carried = f;
  while (carried.variable_count() >= 4) {
    const auto [i, j, which] = choose_identification(carried);
    Anf next = identify(carried, i, j);
    if (!is_nonlinear(next)) {
      throw Error("arity reduction lost non-linearity on " + render_anf(carried));
    }
    trace.steps.push_back(IdentifyStep{i, j, which, next});
    carried = std::move(next);
  }
  if (carried.variable_count() == 2) {
    trace.steps.push_back(binary_step(carried));
    return trace;
  }
  const TernaryCase which = ternary_case(carried);
  auto [pair, witness] = ternary_witness(carried, which);
  trace.steps.push_back(TernaryCaseStep{which, carried, pair, witness});
  if (which == TernaryCase::MedianEvenLinear) {
    auto covariance = covariance_step(f);
    trace.result = covariance.covariant ? ReductNode::Median : ReductNode::Ba;
    trace.steps.push_back(std::move(covariance));
  }
  trace.steps.push_back(binary_step(witness));
  return trace;
}

Trace certificate(const Anf& f) {
  const Shape s = shape(f);
  if (std::holds_alternative<NonLinearShape>(s)) {
    return reduction_trace(f);
  }
  if (const auto* l = std::get_if<LinearShape>(&s)) {
    return {f, {LinearCanonicalStep{l->essential, l->alpha, canonicalize_linear(f)}},
            classify_term(f)};
  }
  return {f, {ConstantOrProjectionStep{f}}, classify_term(f)};
}

namespace {

class Replayer {
public:
  explicit Replayer(const Trace& t) : trace_(t), carried_(t.input) {}

  std::optional<std::string> run() {
    try {
      for (std::size_t n = 0; n < trace_.steps.size(); ++n) {
        step_ = n;
        std::visit([this](const auto& s) { check(s); }, trace_.steps[n]);
      }
      if (result_ != trace_.result) {
        fail("recorded result " + std::string(identifier(trace_.result)) +
             " but the steps establish " + std::string(identifier(result_)));
      }
      if (!finished_) {
        fail("trace does not end in a concluding step");
      }
    } catch (const Mismatch& m) {
      return "step " + std::to_string(m.step) + ": " + m.what;
    } catch (const Error& e) {
      return "step " + std::to_string(step_) + ": " + e.what();
    }
    return std::nullopt;
  }

private:
  struct Mismatch {
    std::size_t step;
    std::string what;
  };

  [[noreturn]] void fail(std::string what) const { throw Mismatch{step_, std::move(what)}; }

  void expect(bool ok, const std::string& what) const {
    if (!ok) {
      fail(what);
    }
  }

  void check(const IdentifyStep& s) {
    expect(!finished_, "identify after a concluding step");
    expect(carried_.variable_count() >= 4, "identify below arity 4");
    const auto choice = choose_identification(carried_);
    expect(choice.which == s.which, "case label " + std::string(label(s.which)) +
                                        " does not match " + std::string(label(choice.which)));
    Anf next = identify(carried_, s.i, s.j);
    expect(next == s.result, "identify(" + std::to_string(s.i) + "," + std::to_string(s.j) +
                                 ") gives " + render_anf(next) + ", recorded " +
                                 render_anf(s.result));
    expect(is_nonlinear(next), "identification became linear");
    carried_ = std::move(next);
  }

  void check(const TernaryCaseStep& s) {
    expect(!finished_ && !binary_.has_value(), "ternary step out of order");
    expect(carried_.variable_count() == 3, "ternary step on arity " +
                                                std::to_string(carried_.variable_count()));
    expect(s.ternary == carried_, "ternary polynomial differs from the carried one");
    expect(ternary_case(carried_) == s.which, "ternary case label mismatch");
    auto [pair, witness] = ternary_witness(carried_, s.which);
    expect(pair == s.pair, "ternary identified pair mismatch");
    expect(witness == s.witness, "ternary witness " + render_anf(witness) + " recorded as " +
                                     render_anf(s.witness));
    expect(witness.variable_count() == 2 && is_nonlinear(witness), "witness not binary non-linear");
    if (s.which == TernaryCase::MedianEvenLinear) {
      expect(is_one(defect_at_one(translation_defect(carried_))),
             "median-type ternary is not translation covariant");
      median_branch_ = true;
    }
    binary_ = witness;
  }

  void check(const TranslationCovarianceStep& s) {
    expect(median_branch_ && !covariance_.has_value(), "covariance step out of order");
    const Anf defect = translation_defect(trace_.input);
    expect(defect == s.defect, "defect " + render_anf(defect) + " recorded as " +
                                   render_anf(s.defect));
    const Anf at_one = defect_at_one(defect);
    expect(at_one == s.defect_at_one, "defect at c:=1 mismatch");
    expect(is_one(at_one) == s.covariant, "covariance verdict mismatch");
    covariance_ = s.covariant;
  }

  void check(const BinaryIdentityStep& s) {
    expect(!finished_, "second concluding step");
    const Anf& expected = binary_ ? *binary_ : carried_;
    expect(expected.variable_count() == 2, "binary identity on arity " +
                                               std::to_string(expected.variable_count()));
    expect(s.function == expected, "binary function differs from the carried one");
    expect(is_nonlinear(s.function), "binary function is linear");
    const Anf value = evaluate_composition(s.function, s.identity);
    expect(value == s.result, "identity evaluates to " + render_anf(value) + ", recorded " +
                                  render_anf(s.result));
    expect(value == generator_polynomial(s.function.vars(), s.generator),
           "identity does not produce the meet or join");
    if (median_branch_) {
      expect(covariance_.has_value(), "median branch without covariance step");
      result_ = *covariance_ ? ReductNode::Median : ReductNode::Ba;
    } else {
      result_ = ReductNode::Ba;
    }
    finished_ = true;
  }

  void check(const LinearCanonicalStep& s) {
    expect(trace_.steps.size() == 1, "linear step must stand alone");
    const Shape sh = shape(trace_.input);
    const auto* l = std::get_if<LinearShape>(&sh);
    expect(l != nullptr, "input is not linear");
    expect(l->essential == s.essential && l->alpha == s.alpha, "linear shape mismatch");
    expect(canonicalize_linear(trace_.input) == s.canonical, "canonical function mismatch");
    result_ = classify_linear(l->essential, l->alpha);
    finished_ = true;
  }

  void check(const ConstantOrProjectionStep& s) {
    expect(trace_.steps.size() == 1, "constant/projection step must stand alone");
    expect(s.function == trace_.input, "function mismatch");
    const Shape sh = shape(s.function);
    if (const auto* c = std::get_if<ConstantShape>(&sh)) {
      result_ = c->value ? ReductNode::Stab1 : ReductNode::Stab0;
    } else {
      expect(std::holds_alternative<ProjectionShape>(sh), "neither constant nor projection");
      result_ = ReductNode::Sym;
    }
    finished_ = true;
  }

  const Trace& trace_;
  Anf carried_;
  std::optional<Anf> binary_;
  std::optional<bool> covariance_;
  bool median_branch_ = false;
  bool finished_ = false;
  ReductNode result_ = ReductNode::Sym;
  std::size_t step_ = 0;
};

} // namespace

std::optional<std::string> replay(const Trace& trace) { return Replayer(trace).run(); }

ReductNode classify_reduct(std::span<const Anf> fs) {
  ReductNode node = ReductNode::Sym;
  for (const Anf& f : fs) {
    node = meet(node, classify_term(f));
  }
  return node;
}

Verdict interdefinability(std::span<const Anf> first, std::span<const Anf> second) {
  const ReductNode a = classify_reduct(first);
  const ReductNode b = classify_reduct(second);
  if (a == b) {
    return Verdict::Equivalent;
  }
  if (leq(a, b)) {
    return Verdict::FirstDefinesSecondStrictly;
  }
  if (leq(b, a)) {
    return Verdict::SecondDefinesFirstStrictly;
  }
  return Verdict::Incomparable;
}

} // namespace reducts
