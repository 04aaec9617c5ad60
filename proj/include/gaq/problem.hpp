#pragma once

// Problem-definition files: a minimal line-oriented format declaring the
// field, an algebra by structure constants, a module by action tables, an
// optional monomial presentation and default parameters.
//
//   field Q | field Fp <p>
//   algebra
//     basis 1 x
//     unit 1
//     1*1 = 1
//     x*x = 0
//   end
//   module
//     basis m
//     1*m = m
//     x*m = 0
//   end
//   presentation
//     vars x
//     relator x^2
//     ci
//   end
//   params N=3 B=3 d=1
//
// Right-hand sides are sums of terms `coeff*label`, a bare `label`
// (coefficient one) or `0`; coefficients are integers or fractions.

#include <fstream>
#include <sstream>

#include "gaq/algebra.hpp"

namespace gaq {

struct ParseError : std::runtime_error {
  int line;
  std::string token;
  ParseError(int line_, std::string token_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", token '" + token_ + "': " + msg),
        line(line_),
        token(std::move(token_)) {}
};

struct RawTerm {
  std::string coeff;  // "1", "-2/3", ...
  std::string label;
};

struct RawProduct {
  std::string lhs_a, lhs_b;
  std::vector<RawTerm> rhs;
  int line = 0;
};

struct ProblemFile {
  FieldSpec field;
  std::string name;
  std::vector<std::string> algebra_basis;
  std::string unit_label;
  std::vector<RawProduct> algebra_products;
  std::vector<std::string> module_basis;
  std::vector<RawProduct> module_actions;
  bool has_presentation = false;
  std::vector<std::string> vars;
  std::vector<std::string> relators;
  bool complete_intersection = false;
  int N = 3, B = 3, d = 1;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::vector<RawTerm> parse_rhs(const std::string& rhs, int line) {
  std::vector<RawTerm> terms;
  std::string part;
  std::istringstream in(rhs);
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : rhs) {
      if (c == '+') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
  }
  for (auto& p : parts) {
    auto toks = split_ws(p);
    if (toks.empty()) throw ParseError(line, p, "empty term");
    std::string t;
    for (auto& x : toks) t += x;
    if (t == "0") continue;
    auto star = t.rfind('*');
    bool coeff_form = false;
    if (star != std::string::npos) {
      // coeff*label when the prefix parses as a number
      std::string pre = t.substr(0, star);
      if (!pre.empty() && (std::isdigit(static_cast<unsigned char>(pre[0])) || pre[0] == '-')) coeff_form = true;
      if (coeff_form)
        terms.push_back({pre, t.substr(star + 1)});
    }
    if (!coeff_form) terms.push_back({"1", t});
  }
  return terms;
}

}  // namespace detail

inline ProblemFile parse_problem_text(const std::string& text, const std::string& name = "") {
  ProblemFile p;
  p.name = name;
  enum class Block { none, algebra, module, presentation };
  Block block = Block::none;
  bool saw_field = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    auto toks = detail::split_ws(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (block == Block::none) {
      if (head == "field") {
        if (toks.size() < 2) throw ParseError(lineno, head, "expected Q or Fp <p>");
        if (toks[1] == "Q") {
          p.field = FieldSpec::rationals();
        } else if (toks[1] == "Fp" && toks.size() >= 3) {
          try {
            p.field = FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(toks[2])));
          } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, toks[2], e.what());
          }
        } else {
          throw ParseError(lineno, toks[1], "unknown field (use Q or Fp <p>)");
        }
        saw_field = true;
      } else if (head == "algebra") {
        block = Block::algebra;
      } else if (head == "module") {
        block = Block::module;
      } else if (head == "presentation") {
        block = Block::presentation;
        p.has_presentation = true;
      } else if (head == "params") {
        for (std::size_t i = 1; i < toks.size(); ++i) {
          auto eq = toks[i].find('=');
          if (eq == std::string::npos) throw ParseError(lineno, toks[i], "expected key=value");
          std::string key = toks[i].substr(0, eq);
          int val = std::stoi(toks[i].substr(eq + 1));
          if (key == "N")
            p.N = val;
          else if (key == "B")
            p.B = val;
          else if (key == "d")
            p.d = val;
          else
            throw ParseError(lineno, key, "unknown parameter");
        }
      } else if (head == "name") {
        p.name = toks.size() > 1 ? toks[1] : "";
      } else {
        throw ParseError(lineno, head, "unknown directive");
      }
      continue;
    }

    if (head == "end") {
      block = Block::none;
      continue;
    }
    if (head == "basis") {
      auto& dst = block == Block::algebra ? p.algebra_basis : p.module_basis;
      if (block == Block::presentation) throw ParseError(lineno, head, "no basis in a presentation block");
      dst.assign(toks.begin() + 1, toks.end());
      continue;
    }
    if (block == Block::algebra && head == "unit") {
      if (toks.size() != 2) throw ParseError(lineno, head, "expected a single unit label");
      p.unit_label = toks[1];
      continue;
    }
    if (block == Block::presentation) {
      if (head == "vars") {
        p.vars.assign(toks.begin() + 1, toks.end());
      } else if (head == "relator") {
        if (toks.size() != 2) throw ParseError(lineno, head, "expected a single monomial");
        p.relators.push_back(toks[1]);
      } else if (head == "ci") {
        p.complete_intersection = true;
      } else {
        throw ParseError(lineno, head, "unknown presentation directive");
      }
      continue;
    }
    // product line: a*b = rhs
    auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, head, "expected a product line lhs = rhs");
    std::string lhs = raw.substr(0, eq);
    auto star = lhs.find('*');
    if (star == std::string::npos) throw ParseError(lineno, lhs, "expected lhs of the form a*b");
    auto lt = detail::split_ws(lhs.substr(0, star));
    auto rt = detail::split_ws(lhs.substr(star + 1));
    if (lt.size() != 1 || rt.size() != 1) throw ParseError(lineno, lhs, "expected lhs of the form a*b");
    RawProduct prod{lt[0], rt[0], detail::parse_rhs(raw.substr(eq + 1), lineno), lineno};
    (block == Block::algebra ? p.algebra_products : p.module_actions).push_back(std::move(prod));
  }
  if (!saw_field) throw ParseError(0, "field", "missing field declaration");
  if (p.algebra_basis.empty()) throw ParseError(0, "algebra", "missing algebra block");
  if (p.unit_label.empty()) throw ParseError(0, "unit", "missing unit declaration");
  if (p.module_basis.empty()) throw ParseError(0, "module", "missing module block");
  return p;
}

inline ProblemFile parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return parse_problem_text(ss.str(), name);
}

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Typed instantiation of a parsed problem over its field.
template <class F>
struct Instance {
  AlgebraPtr<F> algebra;
  std::shared_ptr<const FiniteModule<F>> module;
  std::optional<PresentedAlgebra<F>> presented;
};

template <class F>
Instance<F> instantiate(const F& f, const ProblemFile& p) {
  Instance<F> inst;
  auto alg = std::make_shared<FiniteAlgebra<F>>();
  alg->field = f;
  alg->name = p.name.empty() ? "A" : p.name;
  alg->basis = p.algebra_basis;
  const long d = alg->dim();
  auto a_index = [&](const std::string& label, int line) {
    long i = alg->basis_index(label);
    if (i < 0) throw ParseError(line, label, "unknown algebra basis label");
    return i;
  };
  alg->structure.assign(d, std::vector<Vec<F>>(d, Vec<F>(d, f.zero())));
  std::vector<std::vector<bool>> seen(d, std::vector<bool>(d, false));
  for (const auto& prod : p.algebra_products) {
    long i = a_index(prod.lhs_a, prod.line), j = a_index(prod.lhs_b, prod.line);
    Vec<F> v(d, f.zero());
    for (const auto& t : prod.rhs) v[a_index(t.label, prod.line)] = f.add(v[a_index(t.label, prod.line)], f.parse(t.coeff));
    if (seen[i][j]) {
      // both orders were declared; they must agree
      for (long k = 0; k < d; ++k)
        if (!f.eq(alg->structure[i][j][k], v[k]))
          throw ValidationError("commutativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                                "): conflicting products for " + alg->basis[i] + "*" + alg->basis[j]);
    }
    alg->structure[i][j] = v;
    alg->structure[j][i] = v;
    seen[i][j] = seen[j][i] = true;
  }
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j)
      if (!seen[i][j])
        throw ValidationError("missing product " + alg->basis[i] + "*" + alg->basis[j]);
  alg->unit = Vec<F>(d, f.zero());
  alg->unit[a_index(p.unit_label, 0)] = f.one();
  if (auto viol = validate_algebra(*alg)) throw ValidationError("algebra axiom violated: " + *viol);
  inst.algebra = alg;

  auto mod = std::make_shared<FiniteModule<F>>();
  mod->over = alg;
  mod->name = "M";
  mod->basis = p.module_basis;
  const long dm = mod->dim();
  auto m_index = [&](const std::string& label, int line) {
    for (long i = 0; i < dm; ++i)
      if (mod->basis[i] == label) return i;
    throw ParseError(line, label, "unknown module basis label");
  };
  mod->action.assign(d, Matrix<F>(f, dm, dm));
  std::vector<std::vector<bool>> mseen(d, std::vector<bool>(dm, false));
  for (const auto& act : p.module_actions) {
    long i = a_index(act.lhs_a, act.line);
    long c = m_index(act.lhs_b, act.line);
    for (const auto& t : act.rhs) {
      long r = m_index(t.label, act.line);
      mod->action[i].at(r, c) = f.add(mod->action[i].at(r, c), f.parse(t.coeff));
    }
    mseen[i][c] = true;
  }
  for (long i = 0; i < d; ++i)
    for (long c = 0; c < dm; ++c)
      if (!mseen[i][c])
        throw ValidationError("missing module action " + alg->basis[i] + "*" + mod->basis[c]);
  if (auto viol = validate_module(*mod)) throw ValidationError("module axiom violated: " + *viol);
  inst.module = mod;

  if (p.has_presentation) {
    PresentedAlgebra<F> pres;
    pres.field = f;
    pres.vars = p.vars;
    pres.complete_intersection = p.complete_intersection;
    for (const auto& rel : p.relators) {
      Monomial mono(p.vars.size(), 0);
      std::string cur;
      std::vector<std::string> factors;
      for (char ch : rel + "*") {
        if (ch == '*') {
          if (!cur.empty()) factors.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      for (auto& factor : factors) {
        auto caret = factor.find('^');
        std::string var = caret == std::string::npos ? factor : factor.substr(0, caret);
        int exp = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
        auto it = std::find(pres.vars.begin(), pres.vars.end(), var);
        if (it == pres.vars.end()) throw ValidationError("relator uses unknown variable " + var);
        mono[it - pres.vars.begin()] += exp;
      }
      Polynomial<F> g;
      g[mono] = f.one();
      pres.relators.push_back(std::move(g));
    }
    // presentation must normal-form onto the declared algebra
    auto basis = pres.monomial_basis();
    if (static_cast<long>(basis.size()) != alg->dim())
      throw ValidationError("presentation normal form has dimension " + std::to_string(basis.size()) +
                            " but the algebra has dimension " + std::to_string(alg->dim()));
    for (const auto& mono : basis)
      if (alg->basis_index(monomial_string(pres.vars, mono)) < 0)
        throw ValidationError("algebra basis labels do not include the monomial " +
                              monomial_string(pres.vars, mono));
    inst.presented = std::move(pres);
  }
  return inst;
}

}  // namespace gaq
