#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geomcrystal {

// Semistandard Young tableau with entries in [1, n]; rows stored top to bottom.
class Tableau {
 public:
  Tableau() = default;
  Tableau(std::vector<std::vector<int>> rows, int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> shape() const;
  std::size_t size() const;
  // Rows concatenated, bottom row first.
  std::vector<int> reading_word() const;
  // content()[i-1] = number of entries equal to i.
  std::vector<int> content() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

enum class Dir { Raise, Lower };

struct CrystalStats {
  int epsilon;
  int phi;
};

// Bracketing statistics for i in [1, n-1].
CrystalStats crystal_stats(const Tableau& t, int i);
// Kashiwara operator e_i (Raise) or f_i (Lower) for i in [1, n-1]; nullopt when undefined.
std::optional<Tableau> crystal_op(const Tableau& t, int i, Dir dir);

// Bender-Knuth involution exchanging the roles of i and i+1.
Tableau bender_knuth(const Tableau& t, int i);
Tableau promote(const Tableau& t);
Tableau promote_inverse(const Tableau& t);
Tableau evacuate(const Tableau& t);

// Operators for i in Z/n; index 0 is obtained by conjugating index 1 by promotion.
CrystalStats affine_stats(const Tableau& t, int i);
std::optional<Tableau> affine_op(const Tableau& t, int i, Dir dir);

// Integer extended by a top element, for the A_{0,j} = infinity boundary.
struct ExtInt {
  bool inf = false;
  long v = 0;
  static ExtInt infinity() { return {true, 0}; }
  friend bool operator==(const ExtInt&, const ExtInt&) = default;
};
ExtInt min(ExtInt a, ExtInt b);
ExtInt max(ExtInt a, ExtInt b);

// Gelfand-Tsetlin pattern A_{ij}, 1 <= i <= j <= n.
class GTPattern {
 public:
  GTPattern() = default;
  // rows[j-1] lists A_{1j}, ..., A_{jj}.
  explicit GTPattern(std::vector<std::vector<long>> rows);

  int n() const { return static_cast<int>(rows_.size()); }
  long at(int i, int j) const { return rows_[j - 1][i - 1]; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }
  friend bool operator==(const GTPattern&, const GTPattern&) = default;

 private:
  std::vector<std::vector<long>> rows_;
};

GTPattern to_gt(const Tableau& t);
Tableau from_gt(const GTPattern& a);
// Piecewise-linear Bender-Knuth move on row r of the pattern, r in [1, n-1].
GTPattern bk_piecewise_linear(const GTPattern& a, int r);

// A k-rectangle: integers B_{ij} on R_k = {1 <= i <= k, i <= j <= i+n-k-1} and a width L,
// whose padded pattern is a GT pattern.
class KRectangle {
 public:
  KRectangle(int n, int k, std::vector<long> entries, long width);

  // Cells of R_k in row-major order; this is the order of the entry vector.
  static std::vector<std::pair<int, int>> cells(int n, int k);
  static bool in_region(int n, int k, int i, int j) { return i >= 1 && i <= k && j >= i && j <= i + n - k - 1; }
  static bool is_valid(int n, int k, const std::vector<long>& entries, long width);
  static KRectangle from_tableau(const Tableau& t, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  long width() const { return L_; }
  const std::vector<long>& entries() const { return B_; }
  long at(int i, int j) const;

  GTPattern padded() const;
  Tableau to_tableau() const;
  friend bool operator==(const KRectangle&, const KRectangle&) = default;

 private:
  int n_, k_;
  std::vector<long> B_;
  long L_;
};

KRectangle rect_rot(const KRectangle& b);
// Lands in (n-k)-rectangles.
KRectangle rect_refl(const KRectangle& b);

// All semistandard tableaux of rectangular shape (L^k) with entries in [1, n].
std::vector<Tableau> rectangular_tableaux(int n, int k, int L);

std::string format_tableau(const Tableau& t);
// One row per line, entries separated by commas.
Tableau parse_tableau(const std::string& text, int n);

}  // namespace geomcrystal
