#include "k3ns/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace k3ns {

Int det_bareiss(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return Int(0);
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Exact by the Bareiss identity.
        a(i, j) = num / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

// Position of an entry with minimal nonzero absolute value in the
// trailing submatrix starting at (t, t), or nullopt if it is zero.
std::optional<std::pair<int, int>> min_nonzero(const IntMatrix& a, int t) {
  std::optional<std::pair<int, int>> best;
  Int best_abs;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const int n = input.rows();
  const int m = input.cols();
  SmithForm s{input, IntMatrix::identity(n), IntMatrix::identity(m)};
  IntMatrix& d = s.d;

  const int steps = std::min(n, m);
  for (int t = 0; t < steps; ++t) {
    auto pos = min_nonzero(d, t);
    if (!pos) break;  // trailing block is zero

    for (;;) {
      pos = min_nonzero(d, t);
      if (!pos) throw internal_error("smith_normal_form: pivot vanished");
      d.swap_rows(t, pos->first);
      s.u.swap_rows(t, pos->first);
      d.swap_cols(t, pos->second);
      s.v.swap_cols(t, pos->second);

      bool clean = true;
      for (int i = t + 1; i < n && clean; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);  // C++ truncated quotient keeps |rem| < |pivot|
        d.add_row(i, t, -q);
        s.u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;  // remainder became the new minimum
      }
      if (!clean) continue;
      for (int j = t + 1; j < m && clean; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility fixup: pivot must divide the whole trailing block.
      bool divides = true;
      for (int i = t + 1; i < n && divides; ++i)
        for (int j = t + 1; j < m && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, Int(1));
            s.u.add_row(t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }

    if (d(t, t) < 0) {
      d.scale_row(t, Int(-1));
      s.u.scale_row(t, Int(-1));
    }
  }
  return s;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<Int> out;
  const int k = std::min(a.rows(), a.cols());
  for (int i = 0; i < k; ++i)
    if (s.d(i, i) != 0) out.push_back(s.d(i, i));
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<int> zero_cols;
  for (int j = 0; j < a.cols(); ++j) {
    bool zero = j >= a.rows() || s.d(j, j) == 0;
    if (zero) zero_cols.push_back(j);
  }
  IntMatrix kernel(a.cols(), static_cast<int>(zero_cols.size()));
  for (int c = 0; c < static_cast<int>(zero_cols.size()); ++c)
    for (int i = 0; i < a.cols(); ++i) kernel(i, c) = s.v(i, zero_cols[c]);
  return kernel;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("inverse of non-square matrix");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw domain_error("matrix is singular");
    a.swap_rows(k, pivot);
    inv.swap_rows(k, pivot);
    Rat inv_p = ratio(Int(1), Int(1)) / a(k, k);
    a.scale_row(k, inv_p);
    inv.scale_row(k, inv_p);
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat c = -a(i, k);
      a.add_row(i, k, c);
      inv.add_row(i, k, c);
    }
  }
  return inv;
}

Signature signature_of(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric())
    throw domain_error("signature of non-symmetric matrix");
  RatMatrix a = symmetric;
  const int n = a.rows();
  Signature sig;
  int t = 0;
  while (t < n) {
    int pivot = -1;
    for (int i = t; i < n; ++i)
      if (a(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot >= 0) {
      a.swap_rows(t, pivot);
      a.swap_cols(t, pivot);
      const Rat p = a(t, t);
      if (p > 0)
        ++sig.positive;
      else
        ++sig.negative;
      for (int i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        Rat c = -a(i, t) / p;
        a.add_row(i, t, c);
        a.add_col(i, t, c);
      }
      ++t;
      continue;
    }
    // All remaining diagonal entries vanish. Look for an off-diagonal
    // partner; the hyperbolic 2x2 block [[0,c],[c,0]] has signature (1,1).
    int hi = -1, hj = -1;
    for (int i = t; i < n && hi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a(i, j) != 0) {
          hi = i;
          hj = j;
          break;
        }
    if (hi < 0) {
      sig.zero += n - t;
      break;
    }
    a.swap_rows(t, hi);
    a.swap_cols(t, hi);
    a.swap_rows(t + 1, hj);
    a.swap_cols(t + 1, hj);
    const Rat c = a(t, t + 1);
    ++sig.positive;
    ++sig.negative;
    for (int k = t + 2; k < n; ++k) {
      Rat c1 = -a(k, t + 1) / c;  // kills pairing with e_t
      Rat c2 = -a(k, t) / c;      // kills pairing with e_{t+1}
      if (c1 != 0) {
        a.add_row(k, t, c1);
        a.add_col(k, t, c1);
      }
      if (c2 != 0) {
        a.add_row(k, t + 1, c2);
        a.add_col(k, t + 1, c2);
      }
    }
    t += 2;
  }
  return sig;
}

RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw domain_error("solve_exact shape mismatch");
  const int rows = a.rows();
  const int cols = a.cols();
  RatMatrix aug(rows, cols + b.cols());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, cols + j) = b(i, j);
  }
  int row = 0;
  std::vector<int> pivot_row(cols, -1);
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (aug(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    aug.swap_rows(row, pivot);
    Rat inv_p = ratio(Int(1), Int(1)) / aug(row, col);
    aug.scale_row(row, inv_p);
    for (int i = 0; i < rows; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      aug.add_row(i, row, -aug(i, col));
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int col = 0; col < cols; ++col)
    if (pivot_row[col] < 0)
      throw internal_error("solve_exact: system is rank deficient");
  for (int i = row; i < rows; ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (aug(i, cols + j) != 0)
        throw internal_error("solve_exact: inconsistent system");
  RatMatrix x(cols, b.cols());
  for (int col = 0; col < cols; ++col)
    for (int j = 0; j < b.cols(); ++j) x(col, j) = aug(pivot_row[col], cols + j);
  return x;
}

}  // namespace k3ns
