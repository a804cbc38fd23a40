#pragma once

#include <map>
#include <utility>

#include "geomcrystal/grassmannian.hpp"
#include "geomcrystal/matrix.hpp"
#include "geomcrystal/random.hpp"

namespace geomcrystal {

// n x n matrices with Laurent polynomial entries in lambda are stored folded.
// The unfolded n-periodic array satisfies X_{rn+i, sn+j} = [lambda^{r-s}] A_{ij}.
Rat unfolded_entry(const LaurentMatrix& a, long I, long J);

// Explicit n-periodic array, given by the nonzero entries of rows 1..n.
struct PeriodicMatrix {
  int n = 0;
  std::map<std::pair<int, long>, Rat> entries;  // (row in [1, n], column in Z) -> value
  Rat at(long I, long J) const;
  friend bool operator==(const PeriodicMatrix&, const PeriodicMatrix&) = default;
};

PeriodicMatrix unfold(const LaurentMatrix& a);
LaurentMatrix fold(const PeriodicMatrix& x);
PeriodicMatrix operator*(const PeriodicMatrix& x, const PeriodicMatrix& y);

// Polynomial entries, nonzero constant terms on the diagonal, zero constant terms above it.
bool in_lower_borel(const LaurentMatrix& a);
// X_{ij} = 0 for i - j > l and X_{ij} = 1 for i - j = l, in unfolded indexing.
bool is_shifted_unipotent(const LaurentMatrix& a, int l);
// sum_{j=1}^{n} X_{j+l-1, j} for an l-shifted unipotent matrix.
Rat chi(const LaurentMatrix& a, int l);
// sh(X)_{ij} = X_{i-1, j-1}.
LaurentMatrix shift(const LaurentMatrix& a);

// x_i(a) = I + a E_{i,i+1}; for i = 0 (mod n), I + a lambda^{-1} E_{n,1}.
LaurentMatrix x_hat(int n, int i, const Rat& a);
// x_i(a) . X = x_i(a) X x_i(tau) with tau chosen to stay in the lower Borel.
LaurentMatrix u_action(int i, const Rat& a, const LaurentMatrix& x);
// Action on Gr(k, n) x C^*: multiply by x_i(a) specialized at lambda = (-1)^{k-1} t.
CrystalPoint u_action(int i, const Rat& a, const CrystalPoint& p);

// Geometric crystal induced by a matrix in the lower Borel.
Rat induced_gamma(const LaurentMatrix& x, int i);
Rat induced_phi(const LaurentMatrix& x, int i);
Rat induced_epsilon(const LaurentMatrix& x, int i);
LaurentMatrix induced_e(const LaurentMatrix& x, int i, const Rat& c);

// A_{ij} = c_{ij} P_{[j-k+1,j-1] u {i}} / P_{[j-k,j-1]}, with c_{ij} in {1, t, lambda}.
LaurentMatrix g_matrix(const CrystalPoint& p);
// B_{ij} = (-1)^{i+j} c'_{ij} P_{[i-k,i] \ {j}} / P_{[i-k+1,i]}; h g = (t + (-1)^k lambda) I.
LaurentMatrix h_matrix(const CrystalPoint& p);

// Entry (i,j) times (-1)^{i+j}, and lambda -> (-1)^n lambda.
LaurentMatrix sign_twist(const LaurentMatrix& a);
// adj(A) with the sign twist applied.
LaurentMatrix loop_inverse(const LaurentMatrix& a);
// fl(A)_{ij} = A_{n-j+1, n-i+1}.
LaurentMatrix flip(const LaurentMatrix& a);

// Orthogonal complement for <v_i, v_j> = (-1)^{i+1} delta_{ij}.
GrassmannPoint perp(const GrassmannPoint& m);
GrassmannPoint reverse_rows(const GrassmannPoint& m);
// Span of the first k columns of fl(g(M, t)) at lambda = (-1)^{k-1} t.
CrystalPoint schutzenberger(const CrystalPoint& p);
// S applied to the row reversal of the orthogonal complement; lands in Gr(n-k, n).
CrystalPoint duality(const CrystalPoint& p);

LaurentPoly lambda_poly();

}  // namespace geomcrystal
