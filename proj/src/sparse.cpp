#include "regge/sparse.hpp"

#include <algorithm>
#include <set>

namespace regge {

SparseMat::SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::ShapeMismatch, "negative matrix extent");
}

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

SparseMat SparseMat::from_dense(const DenseMat& a, int cols) {
  SparseMat m(static_cast<int>(a.size()), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m.add(static_cast<int>(i), static_cast<int>(j), a[i][j]);
  return m;
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMat::add(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error(ErrorKind::ShapeMismatch,
                "entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  if (sgn(v) == 0) return;
  auto& row = data_[static_cast<std::size_t>(r)];
  auto [it, inserted] = row.emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (sgn(it->second) == 0) row.erase(it);
  }
}

Rational SparseMat::get(int r, int c) const {
  const auto& row = data_[static_cast<std::size_t>(r)];
  const auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row(i)) t.data_[static_cast<std::size_t>(j)].emplace(i, v);
  return t;
}

DenseVec SparseMat::apply(const DenseVec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error(ErrorKind::ShapeMismatch, "vector length " + std::to_string(x.size()) + " vs " + std::to_string(cols_));
  DenseVec y(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row(i)) y[static_cast<std::size_t>(i)] += v * x[static_cast<std::size_t>(j)];
  return y;
}

DenseVec SparseMat::column(int c) const {
  DenseVec y(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) y[static_cast<std::size_t>(i)] = get(i, c);
  return y;
}

SparseMat SparseMat::kron_identity(int d) const {
  SparseMat k(rows_ * d, cols_ * d);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row(i))
      for (int a = 0; a < d; ++a) k.data_[static_cast<std::size_t>(d * i + a)].emplace(d * j + a, v);
  return k;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::ShapeMismatch, "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                              " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  SparseMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (const auto& [k, v] : a.row(i))
      for (const auto& [j, w] : b.row(k)) c.add(i, j, v * w);
  return c;
}

namespace {
SparseMat combine(const SparseMat& a, const SparseMat& b, const Rational& sb) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "sum of mismatched matrices");
  SparseMat c = a;
  for (int i = 0; i < b.rows(); ++i)
    for (const auto& [j, v] : b.row(i)) c.add(i, j, sb * v);
  return c;
}
}  // namespace

SparseMat operator+(const SparseMat& a, const SparseMat& b) { return combine(a, b, 1); }
SparseMat operator-(const SparseMat& a, const SparseMat& b) { return combine(a, b, -1); }
SparseMat operator*(const Rational& s, const SparseMat& a) {
  SparseMat c(a.rows_, a.cols_);
  if (sgn(s) == 0) return c;
  for (int i = 0; i < a.rows_; ++i)
    for (const auto& [j, v] : a.row(i)) c.data_[static_cast<std::size_t>(i)].emplace(j, s * v);
  return c;
}

SparseMat block_matrix(const std::vector<std::vector<const SparseMat*>>& blocks, const std::vector<int>& row_sizes,
                       const std::vector<int>& col_sizes) {
  int total_r = 0;
  int total_c = 0;
  for (int r : row_sizes) total_r += r;
  for (int c : col_sizes) total_c += c;
  SparseMat out(total_r, total_c);
  int r0 = 0;
  for (std::size_t bi = 0; bi < row_sizes.size(); ++bi) {
    int c0 = 0;
    for (std::size_t bj = 0; bj < col_sizes.size(); ++bj) {
      const SparseMat* b = blocks[bi][bj];
      if (b != nullptr) {
        if (b->rows() != row_sizes[bi] || b->cols() != col_sizes[bj])
          throw Error(ErrorKind::ShapeMismatch, "block (" + std::to_string(bi) + "," + std::to_string(bj) +
                                                    ") has extent " + std::to_string(b->rows()) + "x" +
                                                    std::to_string(b->cols()));
        for (int i = 0; i < b->rows(); ++i)
          for (const auto& [j, v] : b->row(i)) out.add(r0 + i, c0 + j, v);
      }
      c0 += col_sizes[bj];
    }
    r0 += row_sizes[bi];
  }
  return out;
}

namespace {

struct IntRow {
  std::vector<int> cols;
  std::vector<Integer> vals;
  bool empty() const { return cols.empty(); }
};

IntRow to_int_row(const SparseMat::Row& row, const Rational* rhs, int rhs_col) {
  Integer lcm = 1;
  for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  if (rhs != nullptr && sgn(*rhs) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs->get_den().get_mpz_t());
  IntRow out;
  for (const auto& [c, v] : row) {
    out.cols.push_back(c);
    out.vals.push_back(v.get_num() * (lcm / v.get_den()));
  }
  if (rhs != nullptr && sgn(*rhs) != 0) {
    out.cols.push_back(rhs_col);
    out.vals.push_back(rhs->get_num() * (lcm / rhs->get_den()));
  }
  return out;
}

void normalize(IntRow& r) {
  Integer g = 0;
  for (const auto& v : r.vals) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : r.vals) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r <- p*r - q*piv where p, q are the pivot-column entries of piv and r.
IntRow eliminate(const IntRow& r, const IntRow& piv, int col) {
  const auto find = [col](const IntRow& x) {
    const auto it = std::lower_bound(x.cols.begin(), x.cols.end(), col);
    return static_cast<std::size_t>(it - x.cols.begin());
  };
  Integer p = piv.vals[find(piv)];
  Integer q = r.vals[find(r)];
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  IntRow out;
  out.cols.reserve(r.cols.size() + piv.cols.size());
  out.vals.reserve(r.cols.size() + piv.cols.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < r.cols.size() || j < piv.cols.size()) {
    int c;
    Integer v;
    if (j == piv.cols.size() || (i < r.cols.size() && r.cols[i] < piv.cols[j])) {
      c = r.cols[i];
      v = p * r.vals[i++];
    } else if (i == r.cols.size() || piv.cols[j] < r.cols[i]) {
      c = piv.cols[j];
      v = -q * piv.vals[j++];
    } else {
      c = r.cols[i];
      v = p * r.vals[i++] - q * piv.vals[j++];
    }
    if (sgn(v) != 0) {
      out.cols.push_back(c);
      out.vals.push_back(std::move(v));
    }
  }
  normalize(out);
  return out;
}

struct EchelonResult {
  std::vector<IntRow> pivot_rows;
  std::vector<int> pivot_cols;
  bool inconsistent = false;
};

// Columns >= ncols are never chosen as pivots (augmented right-hand side).
EchelonResult echelon(std::vector<IntRow> rows, int ncols, bool keep_rows) {
  EchelonResult res;
  std::vector<std::set<int>> col_rows(static_cast<std::size_t>(ncols));
  std::set<int> active;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    normalize(rows[i]);
    const int id = static_cast<int>(i);
    for (int c : rows[i].cols)
      if (c < ncols) col_rows[static_cast<std::size_t>(c)].insert(id);
    active.insert(id);
  }
  const auto pivot_len = [&](const IntRow& r) {
    return static_cast<std::size_t>(std::lower_bound(r.cols.begin(), r.cols.end(), ncols) - r.cols.begin());
  };
  while (!active.empty()) {
    int best = -1;
    std::size_t best_len = 0;
    for (auto it = active.begin(); it != active.end();) {
      const IntRow& r = rows[static_cast<std::size_t>(*it)];
      const std::size_t len = pivot_len(r);
      if (len == 0) {
        if (!r.empty()) res.inconsistent = true;
        it = active.erase(it);
        continue;
      }
      if (best < 0 || len < best_len) {
        best = *it;
        best_len = len;
        if (len == 1) break;
      }
      ++it;
    }
    if (best < 0) break;
    IntRow piv = std::move(rows[static_cast<std::size_t>(best)]);
    active.erase(best);
    int col = -1;
    std::size_t col_count = 0;
    for (std::size_t k = 0; k < best_len; ++k) {
      const int c = piv.cols[k];
      const std::size_t n = col_rows[static_cast<std::size_t>(c)].size();
      if (col < 0 || n < col_count) {
        col = c;
        col_count = n;
      }
    }
    for (std::size_t k = 0; k < best_len; ++k) col_rows[static_cast<std::size_t>(piv.cols[k])].erase(best);
    const std::vector<int> targets(col_rows[static_cast<std::size_t>(col)].begin(),
                                   col_rows[static_cast<std::size_t>(col)].end());
    for (int t : targets) {
      IntRow& r = rows[static_cast<std::size_t>(t)];
      for (int c : r.cols)
        if (c < ncols) col_rows[static_cast<std::size_t>(c)].erase(t);
      r = eliminate(r, piv, col);
      for (int c : r.cols)
        if (c < ncols) col_rows[static_cast<std::size_t>(c)].insert(t);
    }
    res.pivot_cols.push_back(col);
    if (keep_rows) res.pivot_rows.push_back(std::move(piv));
  }
  return res;
}

// Back substitution over the recorded pivot rows; free columns take the
// values already present in x.
void back_substitute(const EchelonResult& e, int ncols, DenseVec& x) {
  for (std::size_t k = e.pivot_rows.size(); k-- > 0;) {
    const IntRow& r = e.pivot_rows[k];
    const int pc = e.pivot_cols[k];
    Rational acc = 0;
    Integer a;
    for (std::size_t i = 0; i < r.cols.size(); ++i) {
      const int c = r.cols[i];
      if (c == pc) {
        a = r.vals[i];
      } else if (c >= ncols) {
        acc += Rational(r.vals[i]);
      } else if (sgn(x[static_cast<std::size_t>(c)]) != 0) {
        acc -= r.vals[i] * x[static_cast<std::size_t>(c)];
      }
    }
    Rational v = acc / a;
    v.canonicalize();
    x[static_cast<std::size_t>(pc)] = v;
  }
}

}  // namespace

int rank_exact(const SparseMat& m) {
  std::vector<IntRow> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) rows.push_back(to_int_row(m.row(i), nullptr, 0));
  return static_cast<int>(echelon(std::move(rows), m.cols(), false).pivot_cols.size());
}

std::optional<DenseVec> solve_exact(const SparseMat& a, const DenseVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length");
  std::vector<IntRow> rows;
  for (int i = 0; i < a.rows(); ++i) rows.push_back(to_int_row(a.row(i), &b[static_cast<std::size_t>(i)], a.cols()));
  const EchelonResult e = echelon(std::move(rows), a.cols(), true);
  if (e.inconsistent) return std::nullopt;
  DenseVec x(static_cast<std::size_t>(a.cols()));
  back_substitute(e, a.cols(), x);
  return x;
}

std::vector<DenseVec> nullspace_exact(const SparseMat& a) {
  std::vector<IntRow> rows;
  for (int i = 0; i < a.rows(); ++i)
    if (!a.row(i).empty()) rows.push_back(to_int_row(a.row(i), nullptr, 0));
  const EchelonResult e = echelon(std::move(rows), a.cols(), true);
  std::vector<bool> pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : e.pivot_cols) pivot[static_cast<std::size_t>(c)] = true;
  std::vector<DenseVec> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (pivot[static_cast<std::size_t>(f)]) continue;
    DenseVec x(static_cast<std::size_t>(a.cols()));
    x[static_cast<std::size_t>(f)] = 1;
    back_substitute(e, a.cols(), x);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace regge
