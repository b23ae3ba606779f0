#include "reducts/identities.hpp"

#include "reducts/anf.hpp"

#include <algorithm>
#include <initializer_list>

namespace reducts {
namespace {

std::vector<std::string> names(std::size_t k, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

Anf poly(const std::vector<std::string>& vars, std::initializer_list<Monomial> ms) {
  return Anf(vars, std::vector<Monomial>(ms));
}

Anf apply(const Anf& f, std::initializer_list<Anf> args) {
  const std::vector<Anf> subs(args);
  return compose(f, subs);
}

// Sum of all variables plus alpha.
Anf linear(const std::vector<std::string>& vars, bool alpha) {
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    ms.push_back(Monomial{1} << i);
  }
  if (alpha) {
    ms.push_back(0);
  }
  return Anf(vars, std::move(ms));
}

IdentityCheck check(std::string name, const Anf& lhs, const Anf& rhs) {
  return {std::move(name), render_anf(lhs), render_anf(rhs), lhs == rhs};
}

void binary_identities(std::vector<IdentityCheck>& out) {
  const std::vector<std::string> xy{"x", "y"};
  const Anf x = Anf::variable(xy, 0);
  const Anf y = Anf::variable(xy, 1);
  const Anf meet = poly(xy, {0b11});
  const Anf join = poly(xy, {0b11, 0b01, 0b10});

  const Anf f = poly(xy, {0b11, 0b01});
  out.push_back(check("f=xy+x: f(x,f(x,y)) = xy", apply(f, {x, apply(f, {x, y})}), meet));
  const Anf fy = poly(xy, {0b11, 0b10});
  out.push_back(check("f=xy+y: f(f(x,y),y) = xy", apply(fy, {apply(fy, {x, y}), y}), meet));
  const Anf g = poly(xy, {0b11, 0b01, 0});
  out.push_back(
      check("g=xy+x+1: g(g(x,y),y) = xy+x+y", apply(g, {apply(g, {x, y}), y}), join));
  const Anf gy = poly(xy, {0b11, 0b10, 0});
  out.push_back(
      check("g=xy+y+1: g(x,g(x,y)) = xy+x+y", apply(gy, {x, apply(gy, {x, y})}), join));
  const Anf h = poly(xy, {0b11, 0});
  out.push_back(check("h=xy+1: h(h(x,x),h(y,y)) = xy+x+y",
                      apply(h, {apply(h, {x, x}), apply(h, {y, y})}), join));
  const Anf k = poly(xy, {0b11, 0b01, 0b10, 0});
  out.push_back(check("k=xy+x+y+1: k(k(x,x),k(y,y)) = xy",
                      apply(k, {apply(k, {x, x}), apply(k, {y, y})}), meet));
}

void median_identity(std::vector<IdentityCheck>& out) {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const Anf m = poly(xyz, {0b011, 0b110, 0b101});
  const Anf defect = translation_defect(m);
  out.push_back(check("M(x+c,y+c,z+c) = M(x,y,z)+c", defect,
                      Anf::variable(defect.vars(), defect.variable_count() - 1)));
}

void sigma_identities(std::vector<IdentityCheck>& out) {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const Anf x = Anf::variable(xyz, 0);
  const Anf y = Anf::variable(xyz, 1);
  const Anf z = Anf::variable(xyz, 2);
  const Anf zero = Anf::zero(xyz);
  const Anf one = Anf::one(xyz);
  const Anf sigma = linear(xyz, false);
  const Anf sigma1 = linear(xyz, true);
  const std::vector<std::string> xy{"x", "y"};
  const Anf plus0 = linear(xy, false);
  const Anf plus1 = linear(xy, true);
  const Anf neg = linear({"x"}, true);

  out.push_back(check("Sigma(x,y,z) = Sigma1(x,y,Sigma1(z,z,z))",
                      apply(sigma1, {x, y, apply(sigma1, {z, z, z})}), sigma));
  out.push_back(check("Sigma1(x,y,z) = Sigma(x,y,!z)", apply(sigma, {x, y, apply(neg, {z})}),
                      sigma1));
  out.push_back(check("!x = Sigma1(x,x,x)", apply(sigma1, {x, x, x}), apply(neg, {x})));
  out.push_back(check("+0(x,y) = Sigma(x,y,0)", apply(sigma, {x, y, zero}), apply(plus0, {x, y})));
  out.push_back(check("0 = +0(x,x)", apply(plus0, {x, x}), zero));
  out.push_back(check("Sigma(x,y,z) = +0(x,+0(y,z))", apply(plus0, {x, apply(plus0, {y, z})}),
                      sigma));
  out.push_back(check("+1(x,y) = Sigma(x,y,1)", apply(sigma, {x, y, one}), apply(plus1, {x, y})));
  out.push_back(check("1 = +1(x,x)", apply(plus1, {x, x}), one));
  out.push_back(check("Sigma(x,y,z) = +1(x,+1(y,z))", apply(plus1, {x, apply(plus1, {y, z})}),
                      sigma));
  out.push_back(check("!x = +0(x,1)", apply(plus0, {x, one}), apply(neg, {x})));
  out.push_back(check("+0(x,y) = Sigma(x,y,!1)", apply(sigma, {x, y, apply(neg, {one})}),
                      apply(plus0, {x, y})));
  out.push_back(check("Sigma1(x+c,y+c,z+c) = Sigma1(x,y,z)+c",
                      translation_defect(sigma1),
                      Anf::variable(translation_defect(sigma1).vars(), 3)));
}

// l(x_1..x_k) = x_1 + ... + x_k + alpha against the canonical function f of
// its class: f is obtained from l by repeating the last argument, and l is
// rebuilt from f recursively.
void linear_chains(std::vector<IdentityCheck>& out) {
  for (bool alpha : {false, true}) {
    const std::string a = alpha ? "1" : "0";
    for (std::size_t k = 2; k <= 9; ++k) {
      const auto vars = names(k, "x");
      const Anf l = linear(vars, alpha);
      std::vector<Anf> xs;
      for (std::size_t i = 0; i < k; ++i) {
        xs.push_back(Anf::variable(vars, i));
      }
      const std::string tag = "l_" + std::to_string(k) + " (alpha=" + a + ")";
      if (k % 2 == 0) {
        const std::vector<std::string> xy{"x", "y"};
        const Anf f = linear(xy, alpha);
        std::vector<Anf> repeat{Anf::variable(xy, 0)};
        repeat.resize(k, Anf::variable(xy, 1));
        out.push_back(check(tag + ": f(x,y) = l(x,y,...,y)", compose(l, repeat), f));
        Anf chain = apply(f, {xs[0], xs[1]});
        for (std::size_t j = 2; j < k; ++j) {
          chain = apply(f, {chain, xs[j]});
        }
        out.push_back(check(tag + ": l = f(...f(f(x1,x2),x3)...,xk)", chain, l));
        continue;
      }
      const std::vector<std::string> xyz{"x", "y", "z"};
      const Anf f = linear(xyz, alpha);
      std::vector<Anf> repeat{Anf::variable(xyz, 0), Anf::variable(xyz, 1)};
      repeat.resize(k, Anf::variable(xyz, 2));
      out.push_back(check(tag + ": f(x,y,z) = l(x,y,z,...,z)", compose(l, repeat), f));
      auto diag = [&](const Anf& v) { return apply(f, {v, v, v}); };
      // Pairs of new arguments each pass through f(v,v,v) = v + alpha.
      Anf both = apply(f, {xs[0], xs[1], xs[2]});
      // One new argument passes through f(v,v,v); the constants cancel.
      Anf one = both;
      for (std::size_t j = 3; j + 1 < k; j += 2) {
        both = apply(f, {both, diag(xs[j]), diag(xs[j + 1])});
        one = apply(f, {one, xs[j], diag(xs[j + 1])});
      }
      IdentityCheck both_check =
          check(tag + ": l = f(l', f(u,u,u), f(v,v,v)) recursion", both, l);
      if (!alpha) {
        out.push_back(std::move(both_check));
      } else {
        out.push_back(check(tag + ": l = f(l', u, f(v,v,v)) recursion", one, l));
        if (!both_check.holds) {
          both_check.finding = true;
          out.push_back(std::move(both_check));
        }
      }
    }
  }
}

} // namespace

std::vector<IdentityCheck> identity_suite() {
  std::vector<IdentityCheck> out;
  binary_identities(out);
  median_identity(out);
  sigma_identities(out);
  linear_chains(out);
  return out;
}

bool all_hold(const std::vector<IdentityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.finding || c.holds; });
}

} // namespace reducts
