#include "sextic/matrix.hpp"

#include <algorithm>

namespace sextic {

IntMat identity_matrix(std::size_t n) {
  IntMat m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat zero_matrix(std::size_t rows, std::size_t cols) { return IntMat(rows, IntVec(cols, Int(0))); }

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t = zero_matrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat mul(const IntMat& a, const IntMat& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  IntMat c = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntVec mul(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

RatVec mul(const IntMat& a, const RatVec& v) {
  RatVec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += Rat(a[i][j]) * v[j];
  return r;
}

RatMat to_rat(const IntMat& a) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const Int& x : a[i]) r[i].emplace_back(x);
  return r;
}

Rat dot(const RatVec& x, const IntMat& g, const RatVec& y) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (g[i][j] != 0 && y[j] != 0) row += Rat(g[i][j]) * y[j];
    s += x[i] * row;
  }
  return s;
}

Int dot(const IntVec& x, const IntMat& g, const IntVec& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += g[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

Int determinant(const IntMat& a) {
  // Bareiss fraction-free elimination.
  std::size_t n = a.size();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

RatMat inverse(const RatMat& a) {
  std::size_t n = a.size();
  RatMat m = a;
  RatMat inv(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw DomainError("inverse: singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rat piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

IntMat unimodular_inverse(const IntMat& a) {
  RatMat inv = inverse(to_rat(a));
  IntMat out = zero_matrix(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (inv[i][j].get_den() != 1) throw DomainError("unimodular_inverse: matrix is not unimodular");
      out[i][j] = inv[i][j].get_num();
    }
  return out;
}

IntMat hnf_rows(const IntMat& a) {
  if (a.empty()) return {};
  IntMat m = a;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == rows) break;
      std::swap(m[r], m[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = floor_div(m[i][c], m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (std::size_t j = c; j < cols; ++j) m[r][j] = -m[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(m[i][c], m[r][c]);
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

SmithForm smith_normal_form(const IntMat& a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  IntMat m = a;
  IntMat U = identity_matrix(rows), V = identity_matrix(cols);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(m[i], m[j]);
    std::swap(U[i], U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
    for (std::size_t j = 0; j < rows; ++j) U[dst][j] += f * U[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
    for (std::size_t i = 0; i < cols; ++i) V[i][dst] += f * V[i][src];
  };
  std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (bi == rows || abs(m[i][j]) < abs(m[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = floor_div(m[i][t], m[t][t]);
        add_row(i, t, -q);
        if (m[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = floor_div(m[t][j], m[t][t]);
        add_col(j, t, -q);
        if (m[t][j] != 0) done = false;
      }
      if (!done) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            add_row(t, i, Int(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (m[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) m[t][j] = -m[t][j];
      for (std::size_t j = 0; j < rows; ++j) U[t][j] = -U[t][j];
    }
  }
  SmithForm s;
  for (std::size_t t = 0; t < n; ++t) s.diagonal.push_back(m[t][t]);
  s.U = std::move(U);
  s.V = std::move(V);
  return s;
}

}  // namespace sextic
