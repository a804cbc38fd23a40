#include "geomcrystal/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

Tableau::Tableau(std::vector<std::vector<int>> rows, int n) : n_(n) {
  if (n < 1) throw InvariantViolation("tableau needs n >= 1");
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) throw InvariantViolation("empty row above a nonempty row");
    if (r > 0 && row.size() > rows[r - 1].size()) throw InvariantViolation("row lengths must weakly decrease");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n) throw InvariantViolation("entry out of range [1, n]");
      if (c > 0 && row[c] < row[c - 1]) throw InvariantViolation("rows must weakly increase");
      if (r > 0 && row[c] <= rows[r - 1][c]) throw InvariantViolation("columns must strictly increase");
    }
  }
  rows_ = std::move(rows);
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
  return s;
}

std::size_t Tableau::size() const {
  std::size_t s = 0;
  for (const auto& r : rows_) s += r.size();
  return s;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::vector<int> Tableau::content() const {
  std::vector<int> c(n_, 0);
  for (const auto& r : rows_)
    for (int x : r) ++c[x - 1];
  return c;
}

namespace {

struct Bracketing {
  std::vector<std::pair<int, int>> free_i;     // unmatched i, left to right
  std::vector<std::pair<int, int>> free_next;  // unmatched i+1, left to right
};

Bracketing bracket(const Tableau& t, int i) {
  Bracketing b;
  const auto& rows = t.rows();
  for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
      int x = rows[r][c];
      if (x == i + 1) {
        b.free_next.emplace_back(r, c);
      } else if (x == i) {
        if (!b.free_next.empty()) b.free_next.pop_back();
        else b.free_i.emplace_back(r, c);
      }
    }
  }
  return b;
}

void check_index(const Tableau& t, int i) {
  if (i < 1 || i > t.n() - 1) throw InvariantViolation("crystal index out of range [1, n-1]");
}

Tableau with_entry(const Tableau& t, std::pair<int, int> pos, int value) {
  auto rows = t.rows();
  rows[pos.first][pos.second] = value;
  return Tableau(std::move(rows), t.n());
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

CrystalStats crystal_stats(const Tableau& t, int i) {
  check_index(t, i);
  auto b = bracket(t, i);
  return {static_cast<int>(b.free_next.size()), static_cast<int>(b.free_i.size())};
}

std::optional<Tableau> crystal_op(const Tableau& t, int i, Dir dir) {
  check_index(t, i);
  auto b = bracket(t, i);
  if (dir == Dir::Raise) {
    if (b.free_next.empty()) return std::nullopt;
    return with_entry(t, b.free_next.front(), i);
  }
  if (b.free_i.empty()) return std::nullopt;
  return with_entry(t, b.free_i.back(), i + 1);
}

Tableau bender_knuth(const Tableau& t, int i) {
  check_index(t, i);
  auto rows = t.rows();
  const auto& orig = t.rows();
  for (std::size_t r = 0; r < orig.size(); ++r) {
    std::vector<int> free_cols;
    int alpha = 0, beta = 0;
    for (std::size_t c = 0; c < orig[r].size(); ++c) {
      int x = orig[r][c];
      if (x == i) {
        bool below = r + 1 < orig.size() && c < orig[r + 1].size() && orig[r + 1][c] == i + 1;
        if (!below) {
          free_cols.push_back(static_cast<int>(c));
          ++alpha;
        }
      } else if (x == i + 1) {
        bool above = r > 0 && orig[r - 1][c] == i;
        if (!above) {
          free_cols.push_back(static_cast<int>(c));
          ++beta;
        }
      }
    }
    for (std::size_t m = 0; m < free_cols.size(); ++m)
      rows[r][free_cols[m]] = static_cast<int>(m) < beta ? i : i + 1;
  }
  return Tableau(std::move(rows), t.n());
}

Tableau promote(const Tableau& t) {
  Tableau u = t;
  for (int i = t.n() - 1; i >= 1; --i) u = bender_knuth(u, i);
  return u;
}

Tableau promote_inverse(const Tableau& t) {
  Tableau u = t;
  for (int i = 1; i <= t.n() - 1; ++i) u = bender_knuth(u, i);
  return u;
}

Tableau evacuate(const Tableau& t) {
  Tableau u = t;
  for (int j = 1; j <= t.n() - 1; ++j)
    for (int i = t.n() - 1; i >= j; --i) u = bender_knuth(u, i);
  return u;
}

CrystalStats affine_stats(const Tableau& t, int i) {
  int r = mod(i, t.n());
  if (r != 0) return crystal_stats(t, r);
  if (t.n() < 2) throw InvariantViolation("affine crystal needs n >= 2");
  return crystal_stats(promote(t), 1);
}

std::optional<Tableau> affine_op(const Tableau& t, int i, Dir dir) {
  int r = mod(i, t.n());
  if (r != 0) return crystal_op(t, r, dir);
  if (t.n() < 2) throw InvariantViolation("affine crystal needs n >= 2");
  auto moved = crystal_op(promote(t), 1, dir);
  if (!moved) return std::nullopt;
  return promote_inverse(*moved);
}

ExtInt min(ExtInt a, ExtInt b) {
  if (a.inf) return b;
  if (b.inf) return a;
  return {false, std::min(a.v, b.v)};
}

ExtInt max(ExtInt a, ExtInt b) {
  if (a.inf || b.inf) return ExtInt::infinity();
  return {false, std::max(a.v, b.v)};
}

GTPattern::GTPattern(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
  const int n = static_cast<int>(rows_.size());
  for (int j = 1; j <= n; ++j)
    if (static_cast<int>(rows_[j - 1].size()) != j) throw InvariantViolation("pattern row j must have j entries");
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= j; ++i)
      if (!(at(i, j + 1) >= at(i, j) && at(i, j) >= at(i + 1, j + 1)))
        throw InvariantViolation("pattern entries do not interlace");
  for (int i = 1; i <= n; ++i)
    if (n > 0 && at(i, n) < 0) throw InvariantViolation("pattern entries must be nonnegative");
}

GTPattern to_gt(const Tableau& t) {
  const int n = t.n();
  std::vector<std::vector<long>> rows(n);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= j; ++i) {
      long count = 0;
      if (i <= static_cast<int>(t.rows().size()))
        for (int x : t.rows()[i - 1]) count += x <= j;
      rows[j - 1].push_back(count);
    }
  }
  return GTPattern(std::move(rows));
}

Tableau from_gt(const GTPattern& a) {
  const int n = a.n();
  std::vector<std::vector<int>> rows(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      long prev = j == i ? 0 : a.at(i, j - 1);
      rows[i - 1].insert(rows[i - 1].end(), a.at(i, j) - prev, j);
    }
  return Tableau(std::move(rows), n);
}

GTPattern bk_piecewise_linear(const GTPattern& a, int r) {
  const int n = a.n();
  if (r < 1 || r > n - 1) throw InvariantViolation("row index out of range [1, n-1]");
  auto entry = [&](int i, int j) -> ExtInt {
    if (i == 0) return ExtInt::infinity();
    if (j == i - 1) return {false, 0};
    return {false, a.at(i, j)};
  };
  auto rows = a.rows();
  for (int i = 1; i <= r; ++i) {
    ExtInt lo = min(entry(i - 1, r - 1), entry(i, r + 1));
    ExtInt hi = max(entry(i, r - 1), entry(i + 1, r + 1));
    rows[r - 1][i - 1] = lo.v + hi.v - a.at(i, r);
  }
  return GTPattern(std::move(rows));
}

std::vector<std::pair<int, int>> KRectangle::cells(int n, int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= i + n - k - 1; ++j) out.emplace_back(i, j);
  return out;
}

namespace {

std::vector<std::vector<long>> padded_rows(int n, int k, const std::vector<long>& B, long L) {
  std::vector<std::vector<long>> rows(n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= j; ++i) {
      long v;
      if (i > k) {
        v = 0;
      } else if (j > i + n - k - 1) {
        v = L;
      } else {
        v = B[(i - 1) * (n - k) + (j - i)];
      }
      rows[j - 1].push_back(v);
    }
  return rows;
}

}  // namespace

bool KRectangle::is_valid(int n, int k, const std::vector<long>& entries, long width) {
  if (k < 1 || k > n - 1 || width < 0) return false;
  if (entries.size() != static_cast<std::size_t>(k * (n - k))) return false;
  auto rows = padded_rows(n, k, entries, width);
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= j; ++i)
      if (!(rows[j][i - 1] >= rows[j - 1][i - 1] && rows[j - 1][i - 1] >= rows[j][i])) return false;
  return true;
}

KRectangle::KRectangle(int n, int k, std::vector<long> entries, long width)
    : n_(n), k_(k), B_(std::move(entries)), L_(width) {
  if (!is_valid(n, k, B_, L_)) throw InvariantViolation("not a k-rectangle");
}

long KRectangle::at(int i, int j) const {
  if (!in_region(n_, k_, i, j)) throw InvariantViolation("cell outside R_k");
  return B_[(i - 1) * (n_ - k_) + (j - i)];
}

GTPattern KRectangle::padded() const { return GTPattern(padded_rows(n_, k_, B_, L_)); }

Tableau KRectangle::to_tableau() const { return from_gt(padded()); }

KRectangle KRectangle::from_tableau(const Tableau& t, int k) {
  const int n = t.n();
  auto shape = t.shape();
  long L = shape.empty() ? 0 : shape[0];
  if (!(shape.empty() || (static_cast<int>(shape.size()) == k &&
                          std::all_of(shape.begin(), shape.end(), [&](int s) { return s == L; }))))
    throw InvariantViolation("tableau is not a k x L rectangle");
  auto a = to_gt(t);
  std::vector<long> B;
  for (auto [i, j] : cells(n, k)) B.push_back(a.at(i, j));
  return KRectangle(n, k, std::move(B), L);
}

KRectangle rect_rot(const KRectangle& b) {
  const int n = b.n(), k = b.k();
  std::vector<long> out;
  for (auto [i, j] : KRectangle::cells(n, k)) out.push_back(b.width() - b.at(k - i + 1, n - j));
  return KRectangle(n, k, std::move(out), b.width());
}

KRectangle rect_refl(const KRectangle& b) {
  const int n = b.n(), k = b.k();
  std::vector<long> out;
  for (auto [i, j] : KRectangle::cells(n, n - k)) out.push_back(b.width() - b.at(j - i + 1, j));
  return KRectangle(n, n - k, std::move(out), b.width());
}

std::vector<Tableau> rectangular_tableaux(int n, int k, int L) {
  std::vector<Tableau> out;
  if (L == 0) {
    out.emplace_back(std::vector<std::vector<int>>{}, n);
    return out;
  }
  std::vector<std::vector<int>> rows(k, std::vector<int>(L, 0));
  auto fill = [&](auto&& self, int pos) -> void {
    if (pos == k * L) {
      out.emplace_back(rows, n);
      return;
    }
    int r = pos / L, c = pos % L;
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    int hi = n - (k - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      rows[r][c] = v;
      self(self, pos + 1);
    }
  };
  fill(fill, 0);
  return out;
}

std::string format_tableau(const Tableau& t) {
  std::ostringstream os;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << "\n";
  }
  return os.str();
}

Tableau parse_tableau(const std::string& text, int n) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<int> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t end = line.find(',', pos);
      if (end == std::string::npos) end = line.size();
      std::string field = line.substr(pos, end - pos);
      auto b = field.find_first_not_of(" \t");
      auto e = field.find_last_not_of(" \t");
      int column = static_cast<int>(pos) + 1;
      if (b == std::string::npos) throw ParseError("empty entry", line_no, column);
      field = field.substr(b, e - b + 1);
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(field, &used);
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + field + "'", line_no, column);
      }
      if (used != field.size()) throw ParseError("expected an integer, got '" + field + "'", line_no, column);
      row.push_back(value);
      pos = end + 1;
    }
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows), n);
}

}  // namespace geomcrystal
