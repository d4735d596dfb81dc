#include "qz/linalg.hpp"

#include <cstddef>
#include <utility>

#include "qz/errors.hpp"

namespace qz {

namespace {

std::size_t dim_checked(const Matrix& a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != (a.empty() ? 0 : a[0].size()))
      fail("DescriptorMismatch", "ragged matrix");
  return n;
}

}  // namespace

Matrix identity_matrix(const FieldPtr& k, int n) {
  Matrix m(static_cast<std::size_t>(n),
           std::vector<Elem>(static_cast<std::size_t>(n), Elem::zero(k)));
  for (int i = 0; i < n; ++i)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Elem::one(k);
  return m;
}

Elem det(const FieldPtr& k, Matrix a) {
  std::size_t n = dim_checked(a);
  if (n > 0 && a[0].size() != n) fail("DescriptorMismatch", "determinant of a non-square matrix");
  Elem d = Elem::one(k);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return Elem::zero(k);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d = d * a[col][col];
    Elem inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Elem factor = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
    }
  }
  return d;
}

bool solve_linear(const FieldPtr& k, Matrix a, std::vector<Elem> b,
                  std::vector<Elem>& out) {
  std::size_t rows = dim_checked(a);
  if (b.size() != rows) fail("DescriptorMismatch", "right-hand side has the wrong length");
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    Elem inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Elem factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
      b[i] = b[i] - factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return false;
  out.assign(cols, Elem::zero(k));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) out[pivot_col[i]] = b[i];
  return true;
}

std::vector<std::vector<Elem>> kernel_basis(const FieldPtr& k, Matrix a) {
  std::size_t rows = dim_checked(a);
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Elem inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Elem factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
    }
    pivot_of_col[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<Elem>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Elem> v(cols, Elem::zero(k));
    v[c] = Elem::one(k);
    for (std::size_t j = 0; j < cols; ++j) {
      if (pivot_of_col[j] < 0) continue;
      v[j] = -a[static_cast<std::size_t>(pivot_of_col[j])][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Elem> congruence_diagonalize(const FieldPtr& k, Matrix g) {
  std::size_t n = dim_checked(g);
  if (n > 0 && g[0].size() != n) fail("DescriptorMismatch", "Gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(g[i][j] == g[j][i])) fail("DescriptorMismatch", "Gram matrix is not symmetric");

  auto add_row_col = [&](std::size_t dst, std::size_t src, const Elem& factor) {
    for (std::size_t c = 0; c < n; ++c) g[dst][c] = g[dst][c] + factor * g[src][c];
    for (std::size_t r2 = 0; r2 < n; ++r2) g[r2][dst] = g[r2][dst] + factor * g[r2][src];
  };
  auto swap_row_col = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(g[i], g[j]);
    for (std::size_t r2 = 0; r2 < n; ++r2) std::swap(g[r2][i], g[r2][j]);
  };

  std::vector<Elem> diag;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t piv = n;
    for (std::size_t j = i; j < n && piv == n; ++j)
      if (!g[j][j].is_zero()) piv = j;
    if (piv == n) {
      std::size_t pj = n, pl = n;
      for (std::size_t j = i; j < n && pj == n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          if (!g[j][l].is_zero()) {
            pj = j;
            pl = l;
            break;
          }
      if (pj == n) {
        for (std::size_t j = i; j < n; ++j) diag.push_back(Elem::zero(k));
        return diag;
      }
      add_row_col(pj, pl, Elem::one(k));  // creates 2*g[pj][pl] on the diagonal
      piv = pj;
    }
    swap_row_col(i, piv);
    Elem d = g[i][i];
    diag.push_back(d);
    Elem inv = d.inverse();
    for (std::size_t r2 = i + 1; r2 < n; ++r2) {
      if (g[r2][i].is_zero()) continue;
      add_row_col(r2, i, -(g[r2][i] * inv));
    }
  }
  return diag;
}

}  // namespace qz
