#pragma once

#include "reducts/anf.hpp"
#include "reducts/lattice.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace reducts {

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// The binary generator a binary identity produces: x*y or x*y + x + y.
enum class Generator { Meet, Join };

/// Which argument of the arity-reduction step located the identified pair.
enum class IdentifyCase {
  MiddleDegree, ///< a monomial of degree 2..k-2 survives untouched
  FullProduct,  ///< the product of all variables is the only non-linear monomial
  CoDegreeOne,  ///< a degree k-1 monomial collapses to degree k-2
};

/// Branches of the ternary case analysis. Coefficients refer to
/// a7*xyz + a6*xy + a5*yz + a4*zx + a3*x + a2*y + a1*z + a0.
enum class TernaryCase {
  CubicPresent,      ///< a7=1; two of a4,a5,a6 agree
  OneQuadratic,      ///< a7=0; exactly one of a4,a5,a6 is 1
  TwoQuadratics,     ///< a7=0; exactly one of a4,a5,a6 is 0
  MedianEvenLinear,  ///< a7=0; a4=a5=a6=1; zero or two of a1,a2,a3 are 1
  MedianOddLinear,   ///< a7=0; a4=a5=a6=1; one or three of a1,a2,a3 are 1
};

std::string_view label(IdentifyCase c);
std::string_view label(TernaryCase c);
std::string_view label(Generator g);

/// A term built from a binary function symbol and the variables x (0), y (1).
class Composition {
public:
  static Composition variable(std::size_t index);
  static Composition apply(Composition lhs, Composition rhs);

  bool is_variable() const noexcept { return args_.empty(); }
  std::size_t index() const noexcept { return index_; }
  const std::vector<Composition>& args() const noexcept { return args_; }

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  std::size_t index_ = 0;
  std::vector<Composition> args_;
};

/// Evaluates `c` with `f` (binary) as the function symbol; the result is
/// over f's own variable list.
Anf evaluate_composition(const Anf& f, const Composition& c);
/// "f(x,f(x,y))" style text, variables named after f's variable list.
std::string render_composition(const Composition& c, const std::vector<std::string>& names);

struct IdentifyStep {
  std::size_t i;
  std::size_t j;
  IdentifyCase which;
  Anf result;
};

struct TernaryCaseStep {
  TernaryCase which;
  Anf ternary;
  /// Identified pair for the first three branches.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  /// The binary non-linear function handed to the binary identities.
  Anf witness;
};

struct BinaryIdentityStep {
  Anf function;
  Composition identity;
  Anf result;
  Generator generator;
};

struct TranslationCovarianceStep {
  Anf defect;
  Anf defect_at_one;
  bool covariant;
};

struct LinearCanonicalStep {
  std::size_t essential;
  bool alpha;
  Anf canonical;
};

struct ConstantOrProjectionStep {
  Anf function;
};

using TraceStep = std::variant<IdentifyStep, TernaryCaseStep, BinaryIdentityStep,
                               TranslationCovarianceStep, LinearCanonicalStep,
                               ConstantOrProjectionStep>;

struct Trace {
  Anf input;
  std::vector<TraceStep> steps;
  ReductNode result;
};

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class Verdict { Equivalent, FirstDefinesSecondStrictly, SecondDefinesFirstStrictly, Incomparable };

std::string_view describe(Verdict v);

/// Class of the reduct generated by the single function f. Non-linear
/// functions are decided by the translation-defect test.
ReductNode classify_term(const Anf& f);

/// The canonical linear function (0, 1, x, x+1, x+y, x+y+1, x+y+z,
/// x+y+z+1) interdefinable with f, over variables named x, y, z.
Anf canonicalize_linear(const Anf& f);

/// Constructive certificate for a non-linear f.
Trace reduction_trace(const Anf& f);

/// Certificate for any f: reduction_trace for non-linear functions, a single
/// canonical or constant/projection step otherwise.
Trace certificate(const Anf& f);

/// Line-oriented text form: one tagged line per step, polynomials in
/// canonical form, closed by a "result" line.
std::string render_trace(const Trace& trace);

/// Re-derives every recorded intermediate with the anf operations. Returns
/// a description of the first mismatch, or nothing if the trace checks.
std::optional<std::string> replay(const Trace& trace);

/// Meet over the classes of all members; the empty reduct is SYM.
ReductNode classify_reduct(std::span<const Anf> fs);

Verdict interdefinability(std::span<const Anf> first, std::span<const Anf> second);

} // namespace reducts
