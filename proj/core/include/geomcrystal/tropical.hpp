#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "geomcrystal/expr.hpp"
#include "geomcrystal/parametrization.hpp"
#include "geomcrystal/tableau.hpp"

namespace geomcrystal {

enum class MapId { PR, PRInverse, Gamma, Phi, Epsilon, Decoration, E1, S, D, GeometricPR };

std::string map_name(MapId id, int i = 0);

// Chart of rectangles with `rows` rows in Z/n data; pairs with Gr(n - rows, n).
struct ChartShape {
  int n = 0;
  int rows = 0;  // 0 for scalar-valued maps
};

// A map conjugated by the positive chart, written as subtraction-free expressions
// in the chart variables X_i_j, t (and c for the crystal action).
struct SymbolicMap {
  std::string name;
  ChartShape input, output;
  std::vector<std::string> inputs;
  std::vector<Expr> outputs;
  std::shared_ptr<const Program> program;
};

// Owns the expression pool for one (n, rows) chart and the maps built over it.
// Build on one thread, then share read-only.
class SymbolicContext {
 public:
  SymbolicContext(int n, int rows);

  int n() const { return n_; }
  int rows() const { return rows_; }
  int dim() const { return n_ - rows_; }
  ExprPool& pool() { return *pool_; }
  const Rectangle<Expr>& chart() const { return chart_; }
  std::vector<std::string> chart_variables() const;

  // P_J of the point Theta(X, t) in Gr(dim, n); J in set form, reduced mod n.
  Expr plucker(const Subset& J);
  const SymbolicMap& map(MapId id, int i = 0);

 private:
  SymbolicMap build(MapId id, int i);
  SymbolicMap finish(std::string name, ChartShape out, std::vector<Expr> outputs, bool uses_c);
  std::vector<Expr> chart_ratios(int out_rows, const std::function<Expr(const Subset&)>& basic);

  int n_, rows_;
  std::unique_ptr<ExprPool> pool_;
  Rectangle<Expr> chart_;
  std::map<Subset, Expr> plucker_cache_;
  std::map<std::pair<MapId, int>, SymbolicMap> maps_;
};

// Substitute inner's outputs for outer's chart variables.
SymbolicMap compose(SymbolicContext& ctx, const SymbolicMap& outer, const SymbolicMap& inner);

// Tropicalization: coordinatewise min-plus evaluation. point = chart coordinates, then L,
// then the step m when the map uses c.
std::vector<long> trop_apply(const SymbolicMap& m, std::span<const long> point);

// Tropical crystal on integer points (B, L) of the chart with k rows.
class TropicalCrystal {
 public:
  TropicalCrystal(int n, int k);

  int n() const { return ctx_.n(); }
  int k() const { return ctx_.rows(); }
  SymbolicContext& context() { return ctx_; }

  std::vector<long> pr(const std::vector<long>& B, long L);
  std::vector<long> pr_inverse(const std::vector<long>& B, long L);
  // e_i with step m, i in Z/n, by conjugating e_1 with powers of pr.
  std::vector<long> e(int i, long m, const std::vector<long>& B, long L);
  long gamma(int i, const std::vector<long>& B, long L);
  long phi(int i, const std::vector<long>& B, long L);
  long epsilon(int i, const std::vector<long>& B, long L);
  long decoration(const std::vector<long>& B, long L);
  std::vector<long> schutzenberger(const std::vector<long>& B, long L);
  // Lands in the chart with n - k rows.
  std::vector<long> duality(const std::vector<long>& B, long L);
  std::vector<long> geometric_promotion(const std::vector<long>& B, long L);

 private:
  std::vector<long> run(MapId id, int i, const std::vector<long>& B, long L, const long* m = nullptr);
  SymbolicContext ctx_;
};

struct TheoremOutcome {
  std::string check_id;
  std::string anchor;
  long cases = 0;
  long failures = 0;
  std::string counterexample;  // first failure, empty when none
};

struct TropReport {
  int n = 0, k = 0, L_max = 0;
  std::vector<TheoremOutcome> outcomes;
  bool passed() const;
};

// Exhaustive checks over all k-rectangles with L <= L_max, and the decoration
// inequality on the box [-2, L+2]^{R_k} for L <= box_L_max.
TropReport check_trop_theorems(int n, int k, int L_max, int box_L_max);

}  // namespace geomcrystal
