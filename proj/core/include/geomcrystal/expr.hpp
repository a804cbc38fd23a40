#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "geomcrystal/laurent.hpp"
#include "geomcrystal/rational.hpp"

namespace geomcrystal {

enum class Op : std::uint8_t { Var, Const, Add, Mul, Div };

struct ExprNode {
  Op op;
  std::uint32_t a;  // variable index, constant value, or left child
  std::uint32_t b;  // right child
};

class ExprPool;

// Handle to a node of an ExprPool. Cheap to copy; equality is node identity,
// which thanks to hash-consing is structural equality.
class Expr {
 public:
  Expr() = default;
  Expr(ExprPool* pool, std::uint32_t id) : pool_(pool), id_(id) {}

  ExprPool* pool() const { return pool_; }
  std::uint32_t id() const { return id_; }
  bool valid() const { return pool_ != nullptr; }

  friend Expr operator+(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b);
  friend Expr operator/(Expr a, Expr b);
  Expr& operator+=(Expr o) { return *this = *this + o; }
  Expr& operator*=(Expr o) { return *this = *this * o; }
  Expr& operator/=(Expr o) { return *this = *this / o; }
  friend bool operator==(Expr a, Expr b) { return a.pool_ == b.pool_ && a.id_ == b.id_; }

 private:
  ExprPool* pool_ = nullptr;
  std::uint32_t id_ = 0;
};

// Arena of subtraction-free expressions built from positive variables, positive
// integer constants, +, * and /. Identical subexpressions are stored once.
// Nodes are appended after their children, so node ids are a topological order.
class ExprPool {
 public:
  ExprPool() = default;
  ExprPool(const ExprPool&) = delete;
  ExprPool& operator=(const ExprPool&) = delete;

  Expr var(const std::string& name);
  Expr constant(std::uint32_t m);
  Expr one() { return constant(1); }
  Expr add(Expr a, Expr b);
  Expr mul(Expr a, Expr b);
  Expr div(Expr a, Expr b);
  Expr pow(Expr a, unsigned e);
  Expr sum(std::span<const Expr> terms);
  Expr product(std::span<const Expr> factors);

  // Replace variables by expressions of this pool.
  Expr substitute(Expr e, const std::map<std::string, Expr>& repl);

  const ExprNode& node(std::uint32_t id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t var_count() const { return var_names_.size(); }
  const std::string& var_name(std::uint32_t index) const { return var_names_[index]; }
  const std::vector<std::string>& var_names() const { return var_names_; }

  // Node ids reachable from the roots, in increasing (topological) order.
  std::vector<std::uint32_t> reachable(std::span<const Expr> roots) const;
  std::string to_string(Expr e) const;

 private:
  Expr intern(Op op, std::uint32_t a, std::uint32_t b);

  struct Key {
    Op op;
    std::uint32_t a, b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = (std::uint64_t(k.a) << 32) ^ k.b ^ (std::uint64_t(k.op) << 61);
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdULL;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  std::vector<ExprNode> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
  std::vector<std::string> var_names_;
  std::unordered_map<std::string, std::uint32_t> var_index_;
};

using RationalEnv = std::map<std::string, Rat>;
using TropicalEnv = std::map<std::string, long>;

// Exact evaluation; every bound variable must be strictly positive.
Rat eval_rational(Expr e, const RationalEnv& env);
// Min-plus evaluation: + -> min, * -> +, / -> -, constants -> 0.
long eval_tropical(Expr e, const TropicalEnv& env);
// Lowest exponent of e after x -> eps^{a_x}, computed exactly in Q(eps).
int valuation_probe(Expr e, const TropicalEnv& exponents);
LaurentFraction eval_laurent(Expr e, const TropicalEnv& exponents);

// Fixed-arity compiled evaluator for evaluating many points.
class Program {
 public:
  Program(const ExprPool& pool, std::vector<Expr> outputs, std::vector<std::string> inputs);

  std::size_t input_count() const { return inputs_.size(); }
  std::size_t output_count() const { return outputs_.size(); }
  const std::vector<std::string>& inputs() const { return inputs_; }

  void run_tropical(std::span<const long> in, std::span<long> out) const;
  std::vector<long> run_tropical(std::span<const long> in) const;
  std::vector<Rat> run_rational(std::span<const Rat> in) const;

 private:
  struct Step {
    Op op;
    std::uint32_t a, b;  // slot indices, or input index / constant
  };
  std::vector<std::string> inputs_;
  std::vector<Step> steps_;
  std::vector<std::uint32_t> outputs_;  // slot indices
};

}  // namespace geomcrystal
