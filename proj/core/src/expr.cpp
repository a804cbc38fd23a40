#include "geomcrystal/expr.hpp"

#include <algorithm>
#include <sstream>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

Expr operator+(Expr a, Expr b) { return a.pool()->add(a, b); }
Expr operator*(Expr a, Expr b) { return a.pool()->mul(a, b); }
Expr operator/(Expr a, Expr b) { return a.pool()->div(a, b); }

Expr ExprPool::intern(Op op, std::uint32_t a, std::uint32_t b) {
  Key key{op, a, b};
  auto it = index_.find(key);
  if (it != index_.end()) return Expr(this, it->second);
  auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({op, a, b});
  index_.emplace(key, id);
  return Expr(this, id);
}

Expr ExprPool::var(const std::string& name) {
  auto it = var_index_.find(name);
  std::uint32_t idx;
  if (it == var_index_.end()) {
    idx = static_cast<std::uint32_t>(var_names_.size());
    var_names_.push_back(name);
    var_index_.emplace(name, idx);
  } else {
    idx = it->second;
  }
  return intern(Op::Var, idx, 0);
}

Expr ExprPool::constant(std::uint32_t m) {
  if (m == 0) throw DomainError("constants must be positive");
  return intern(Op::Const, m, 0);
}

static bool is_one(const ExprPool& p, Expr e) {
  const auto& n = p.node(e.id());
  return n.op == Op::Const && n.a == 1;
}

Expr ExprPool::add(Expr a, Expr b) {
  auto x = a.id(), y = b.id();
  if (x > y) std::swap(x, y);
  return intern(Op::Add, x, y);
}

Expr ExprPool::mul(Expr a, Expr b) {
  if (is_one(*this, a)) return b;
  if (is_one(*this, b)) return a;
  auto x = a.id(), y = b.id();
  if (x > y) std::swap(x, y);
  return intern(Op::Mul, x, y);
}

Expr ExprPool::div(Expr a, Expr b) {
  if (is_one(*this, b)) return a;
  return intern(Op::Div, a.id(), b.id());
}

Expr ExprPool::pow(Expr a, unsigned e) {
  Expr r = one();
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

Expr ExprPool::sum(std::span<const Expr> terms) {
  if (terms.empty()) throw DomainError("empty sum is zero, not subtraction-free");
  Expr s = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) s = add(s, terms[i]);
  return s;
}

Expr ExprPool::product(std::span<const Expr> factors) {
  Expr p = one();
  for (Expr f : factors) p = mul(p, f);
  return p;
}

std::vector<std::uint32_t> ExprPool::reachable(std::span<const Expr> roots) const {
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<std::uint32_t> stack;
  for (Expr r : roots) {
    if (!seen[r.id()]) {
      seen[r.id()] = 1;
      stack.push_back(r.id());
    }
  }
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    const auto& n = nodes_[id];
    if (n.op == Op::Add || n.op == Op::Mul || n.op == Op::Div) {
      for (auto c : {n.a, n.b}) {
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < nodes_.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

Expr ExprPool::substitute(Expr e, const std::map<std::string, Expr>& repl) {
  Expr roots[] = {e};
  auto order = reachable(roots);
  std::unordered_map<std::uint32_t, Expr> image;
  for (auto id : order) {
    ExprNode n = nodes_[id];
    Expr r;
    switch (n.op) {
      case Op::Var: {
        auto it = repl.find(var_names_[n.a]);
        r = it == repl.end() ? Expr(this, id) : it->second;
        break;
      }
      case Op::Const: r = Expr(this, id); break;
      case Op::Add: r = add(image.at(n.a), image.at(n.b)); break;
      case Op::Mul: r = mul(image.at(n.a), image.at(n.b)); break;
      case Op::Div: r = div(image.at(n.a), image.at(n.b)); break;
    }
    image.emplace(id, r);
  }
  return image.at(e.id());
}

std::string ExprPool::to_string(Expr e) const {
  const auto& n = nodes_[e.id()];
  switch (n.op) {
    case Op::Var: return var_names_[n.a];
    case Op::Const: return std::to_string(n.a);
    case Op::Add: return "(" + to_string(Expr(e.pool(), n.a)) + " + " + to_string(Expr(e.pool(), n.b)) + ")";
    case Op::Mul: return to_string(Expr(e.pool(), n.a)) + "*" + to_string(Expr(e.pool(), n.b));
    case Op::Div: return "(" + to_string(Expr(e.pool(), n.a)) + ")/(" + to_string(Expr(e.pool(), n.b)) + ")";
  }
  return {};
}

namespace {

template <class T, class Leaf, class Konst, class Add, class Mul, class Div>
T evaluate(Expr e, Leaf leaf, Konst konst, Add add, Mul mul, Div div) {
  const ExprPool& pool = *e.pool();
  Expr roots[] = {e};
  auto order = pool.reachable(roots);
  std::unordered_map<std::uint32_t, T> val;
  val.reserve(order.size());
  for (auto id : order) {
    const auto& n = pool.node(id);
    switch (n.op) {
      case Op::Var: val.emplace(id, leaf(pool.var_name(n.a))); break;
      case Op::Const: val.emplace(id, konst(n.a)); break;
      case Op::Add: val.emplace(id, add(val.at(n.a), val.at(n.b))); break;
      case Op::Mul: val.emplace(id, mul(val.at(n.a), val.at(n.b))); break;
      case Op::Div: val.emplace(id, div(val.at(n.a), val.at(n.b))); break;
    }
  }
  return val.at(e.id());
}

template <class V>
const V& lookup(const std::map<std::string, V>& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw MissingBinding("no binding for variable " + name);
  return it->second;
}

}  // namespace

Rat eval_rational(Expr e, const RationalEnv& env) {
  return evaluate<Rat>(
      e,
      [&](const std::string& name) {
        const Rat& v = lookup(env, name);
        if (v <= 0) throw DomainError("variable " + name + " must be positive");
        return v;
      },
      [](std::uint32_t m) { return Rat(m); }, [](const Rat& a, const Rat& b) { return Rat(a + b); },
      [](const Rat& a, const Rat& b) { return Rat(a * b); }, [](const Rat& a, const Rat& b) { return Rat(a / b); });
}

long eval_tropical(Expr e, const TropicalEnv& env) {
  return evaluate<long>(
      e, [&](const std::string& name) { return lookup(env, name); }, [](std::uint32_t) { return 0L; },
      [](long a, long b) { return std::min(a, b); }, [](long a, long b) { return a + b; },
      [](long a, long b) { return a - b; });
}

LaurentFraction eval_laurent(Expr e, const TropicalEnv& exponents) {
  return evaluate<LaurentFraction>(
      e,
      [&](const std::string& name) {
        return LaurentFraction{LaurentPoly::monomial(1, static_cast<int>(lookup(exponents, name))), LaurentPoly(1)};
      },
      [](std::uint32_t m) { return LaurentFraction{LaurentPoly(Rat(m)), LaurentPoly(1)}; },
      [](const LaurentFraction& a, const LaurentFraction& b) { return a + b; },
      [](const LaurentFraction& a, const LaurentFraction& b) { return a * b; },
      [](const LaurentFraction& a, const LaurentFraction& b) { return a / b; });
}

int valuation_probe(Expr e, const TropicalEnv& exponents) { return eval_laurent(e, exponents).order(); }

Program::Program(const ExprPool& pool, std::vector<Expr> outputs, std::vector<std::string> inputs)
    : inputs_(std::move(inputs)) {
  std::unordered_map<std::string, std::uint32_t> input_pos;
  for (std::uint32_t i = 0; i < inputs_.size(); ++i) input_pos.emplace(inputs_[i], i);
  auto order = pool.reachable(outputs);
  std::unordered_map<std::uint32_t, std::uint32_t> slot;
  for (auto id : order) {
    const auto& n = pool.node(id);
    Step s{n.op, 0, 0};
    switch (n.op) {
      case Op::Var: {
        auto it = input_pos.find(pool.var_name(n.a));
        if (it == input_pos.end()) throw MissingBinding("no input for variable " + pool.var_name(n.a));
        s.a = it->second;
        break;
      }
      case Op::Const: s.a = n.a; break;
      default:
        s.a = slot.at(n.a);
        s.b = slot.at(n.b);
    }
    slot.emplace(id, static_cast<std::uint32_t>(steps_.size()));
    steps_.push_back(s);
  }
  for (Expr o : outputs) outputs_.push_back(slot.at(o.id()));
}

void Program::run_tropical(std::span<const long> in, std::span<long> out) const {
  thread_local std::vector<long> v;
  v.resize(steps_.size());
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    switch (s.op) {
      case Op::Var: v[i] = in[s.a]; break;
      case Op::Const: v[i] = 0; break;
      case Op::Add: v[i] = std::min(v[s.a], v[s.b]); break;
      case Op::Mul: v[i] = v[s.a] + v[s.b]; break;
      case Op::Div: v[i] = v[s.a] - v[s.b]; break;
    }
  }
  for (std::size_t j = 0; j < outputs_.size(); ++j) out[j] = v[outputs_[j]];
}

std::vector<long> Program::run_tropical(std::span<const long> in) const {
  std::vector<long> out(outputs_.size());
  run_tropical(in, out);
  return out;
}

std::vector<Rat> Program::run_rational(std::span<const Rat> in) const {
  std::vector<Rat> v(steps_.size());
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    switch (s.op) {
      case Op::Var:
        if (in[s.a] <= 0) throw DomainError("variable " + inputs_[s.a] + " must be positive");
        v[i] = in[s.a];
        break;
      case Op::Const: v[i] = s.a; break;
      case Op::Add: v[i] = v[s.a] + v[s.b]; break;
      case Op::Mul: v[i] = v[s.a] * v[s.b]; break;
      case Op::Div: v[i] = v[s.a] / v[s.b]; break;
    }
  }
  std::vector<Rat> out;
  out.reserve(outputs_.size());
  for (auto o : outputs_) out.push_back(v[o]);
  return out;
}

}  // namespace geomcrystal
