#pragma once

#include <vector>

#include "geomcrystal/matrix.hpp"
#include "geomcrystal/random.hpp"
#include "geomcrystal/rational.hpp"

namespace geomcrystal {

using Subset = std::vector<int>;

// {a, a+1, ..., b}; empty when a > b. Entries are not reduced.
Subset interval(int a, int b);
Subset join(Subset a, const Subset& b);
int reduce_index(int i, int n);  // representative in [1, n]

// A point of Gr(k, n), represented by an n x k matrix of full rank whose
// column span is the subspace. Pluecker coordinates are computed once.
class GrassmannPoint {
 public:
  explicit GrassmannPoint(RatMatrix m);

  int n() const { return static_cast<int>(m_.rows()); }
  int k() const { return static_cast<int>(m_.cols()); }
  const RatMatrix& matrix() const { return m_; }

  // Set form: indices reduced mod n; 0 unless they form k distinct elements.
  Rat plucker(const Subset& idx) const;
  // Ordered form: the signed minor on rows listed in the given order.
  Rat plucker_ordered(const std::vector<int>& idx) const;
  const std::vector<Rat>& plucker_table() const { return table_; }
  // Subsets in the order used by plucker_table().
  static std::vector<Subset> subsets(int n, int k);

 private:
  RatMatrix m_;
  std::vector<Rat> table_;  // indexed by rank of the subset bitmask among k-subsets
  std::vector<int> slot_;   // bitmask -> table index
};

// Equal as points of Gr(k, n): all cross products of Pluecker pairs agree.
bool projectively_equal(const GrassmannPoint& a, const GrassmannPoint& b);

struct CrystalPoint {
  GrassmannPoint M;
  Rat t;
};

bool equivalent(const CrystalPoint& a, const CrystalPoint& b);

// Geometric crystal structure on Gr(k, n) x C^*. Indices live in Z/n.
Rat gamma(const CrystalPoint& p, int i);
std::vector<Rat> gamma_vector(const CrystalPoint& p);
Rat phi(const CrystalPoint& p, int i);
Rat epsilon(const CrystalPoint& p, int i);
Rat decoration(const CrystalPoint& p);
CrystalPoint apply_e(const CrystalPoint& p, int i, const Rat& c);
// Rows shift down by one; the new first row is (-1)^{k-1} t times the old last row.
CrystalPoint cyclic_shift(const CrystalPoint& p);
CrystalPoint cyclic_shift_inverse(const CrystalPoint& p);

// Three-term relation P_{Iab}P_{Icd} + P_{Iad}P_{Ibc} - P_{Iac}P_{Ibd}.
Rat three_term_residual(const GrassmannPoint& p, const Subset& I, int a, int b, int c, int d);
// sum_r (-1)^r P<i_1..^i_r..i_{k+1}> P<i_r j_1..j_{k-1}>, |i| = k+1, |j| = k-1.
Rat grassmann_plucker_residual(const GrassmannPoint& p, const std::vector<int>& i, const std::vector<int>& j);

// Entries uniform in {1..9}, resampled until every Pluecker coordinate is nonzero; t in {1..9}.
CrystalPoint random_point(Rng& rng, int n, int k);
// Uniform from {1/3, 1/2, 1, 2, 3, 5}.
Rat random_scalar(Rng& rng);

}  // namespace geomcrystal
