#pragma once

#include <array>
#include <bit>
#include <map>
#include <string>
#include <vector>

#include "g2/ratfn.hpp"

namespace g2 {

template <typename R>
R ring_cast(const Rat& c) {
  return R(c);
}

// Square matrix of fixed size 7 over an exact commutative ring (Rat or RatFn).
template <typename R>
class Mat7 {
 public:
  static constexpr int kN = 7;

  Mat7() : e_{} {}

  static Mat7 zero() { return Mat7(); }

  static Mat7 identity() {
    Mat7 m;
    for (int i = 0; i < kN; ++i) m.at(i, i) = ring_cast<R>(1);
    return m;
  }

  R& at(int r, int c) { return e_[r * kN + c]; }
  const R& at(int r, int c) const { return e_[r * kN + c]; }

  friend Mat7 operator+(const Mat7& a, const Mat7& b) {
    Mat7 m;
    for (int i = 0; i < kN * kN; ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
  }
  friend Mat7 operator-(const Mat7& a, const Mat7& b) {
    Mat7 m;
    for (int i = 0; i < kN * kN; ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
  }
  Mat7 operator-() const {
    Mat7 m;
    for (int i = 0; i < kN * kN; ++i) m.e_[i] = -e_[i];
    return m;
  }

  friend Mat7 operator*(const Mat7& a, const Mat7& b) {
    Mat7 m;
    for (int i = 0; i < kN; ++i)
      for (int k = 0; k < kN; ++k) {
        const R& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < kN; ++j) {
          const R& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          m.at(i, j) += aik * bkj;
        }
      }
    return m;
  }

  Mat7& operator+=(const Mat7& o) { *this = *this + o; return *this; }
  Mat7& operator*=(const Mat7& o) { *this = *this * o; return *this; }

  friend Mat7 operator*(const R& c, const Mat7& a) {
    Mat7 m;
    for (int i = 0; i < kN * kN; ++i) m.e_[i] = c * a.e_[i];
    return m;
  }

  friend bool operator==(const Mat7& a, const Mat7& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Mat7& a, const Mat7& b) { return !(a == b); }

  bool is_zero() const {
    for (const R& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  Mat7 transpose() const {
    Mat7 m;
    for (int i = 0; i < kN; ++i)
      for (int j = 0; j < kN; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  R trace() const {
    R t = ring_cast<R>(0);
    for (int i = 0; i < kN; ++i) t += at(i, i);
    return t;
  }

  R det() const {
    MinorCache cache;
    return minor_det(kFullMask, kFullMask, cache);
  }

  // Inverse through the adjugate, so the only division is by det. Shares one
  // minor cache across all cofactors.
  Mat7 inverse() const {
    MinorCache cache;
    R d = minor_det(kFullMask, kFullMask, cache);
    if (d.is_zero()) throw input_error("matrix is singular");
    Mat7 inv;
    for (int i = 0; i < kN; ++i)
      for (int j = 0; j < kN; ++j) {
        R m = minor_det(kFullMask & ~(1u << j), kFullMask & ~(1u << i), cache);
        if (((i + j) & 1) != 0) m = -m;
        inv.at(i, j) = m / d;
      }
    return inv;
  }

 private:
  std::array<R, kN * kN> e_;

  static constexpr unsigned kFullMask = (1u << kN) - 1;
  using MinorCache = std::map<unsigned, R>;

  // Determinant of the submatrix on the given row/column masks, expanding
  // along the first remaining row. Masks always have equal popcount.
  R minor_det(unsigned rows, unsigned cols, MinorCache& cache) const {
    if (rows == 0) return ring_cast<R>(1);
    unsigned key = (rows << kN) | cols;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int r = std::countr_zero(rows);
    unsigned rrest = rows & (rows - 1);
    R acc = ring_cast<R>(0);
    int sign = 1;
    for (int c = 0; c < kN; ++c) {
      if (!(cols & (1u << c))) continue;
      const R& v = at(r, c);
      if (!v.is_zero()) {
        R sub = minor_det(rrest, cols & ~(1u << c), cache);
        if (!sub.is_zero()) acc += (sign > 0) ? v * sub : -(v * sub);
      }
      sign = -sign;
    }
    cache.emplace(key, acc);
    return acc;
  }
};

// Truncated exponential series of a nilpotent matrix; rejects input whose 7th
// power is nonzero, so the sum X^0/0! + ... + X^6/6! is exact.
template <typename R>
Mat7<R> exp_nilpotent(const Mat7<R>& x) {
  Mat7<R> acc = Mat7<R>::identity();
  Mat7<R> p = Mat7<R>::identity();
  Rat fact = 1;
  for (int k = 1; k <= 7; ++k) {
    p = p * x;
    if (p.is_zero()) return acc;
    if (k == 7) throw input_error("exp: matrix is not nilpotent");
    fact *= Rat(k);
    acc += ring_cast<R>(fact.inverse()) * p;
  }
  return acc;
}

// Truncated logarithm of a unipotent matrix; inverse of exp_nilpotent.
template <typename R>
Mat7<R> log_unipotent(const Mat7<R>& u) {
  Mat7<R> n = u - Mat7<R>::identity();
  Mat7<R> acc = Mat7<R>::zero();
  Mat7<R> p = Mat7<R>::identity();
  for (int k = 1; k <= 7; ++k) {
    p = p * n;
    if (p.is_zero()) return acc;
    if (k == 7) throw input_error("log: matrix is not unipotent");
    Rat coeff = Rat(k % 2 == 1 ? 1 : -1, k);
    acc += ring_cast<R>(coeff) * p;
  }
  return acc;
}

// Shape constraint on matrix entries: fixed zero, fixed one, or unconstrained.
class ZeroPattern {
 public:
  enum Cell : uint8_t { kZero, kFree, kOne };

  // Built from 7 strings of 7 characters drawn from "0*1".
  static ZeroPattern parse(const std::array<std::string, 7>& rows) {
    ZeroPattern p;
    for (int i = 0; i < 7; ++i) {
      if (rows[i].size() != 7) throw input_error("pattern row must have 7 cells");
      for (int j = 0; j < 7; ++j) {
        switch (rows[i][j]) {
          case '0': p.cells_[i * 7 + j] = kZero; break;
          case '*': p.cells_[i * 7 + j] = kFree; break;
          case '1': p.cells_[i * 7 + j] = kOne; break;
          default: throw input_error("pattern cell must be one of 0, *, 1");
        }
      }
    }
    return p;
  }

  Cell cell(int r, int c) const { return cells_[r * 7 + c]; }

  int constrained_cells() const {
    int n = 0;
    for (Cell c : cells_)
      if (c != kFree) ++n;
    return n;
  }

 private:
  std::array<Cell, 49> cells_{};
};

template <typename R>
bool matches_pattern(const Mat7<R>& m, const ZeroPattern& p) {
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      ZeroPattern::Cell c = p.cell(i, j);
      if (c == ZeroPattern::kZero && !m.at(i, j).is_zero()) return false;
      if (c == ZeroPattern::kOne && !(m.at(i, j) == ring_cast<R>(1))) return false;
    }
  return true;
}

inline Mat7<RatFn> to_ratfn(const Mat7<Rat>& m) {
  Mat7<RatFn> out;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) out.at(i, j) = RatFn(m.at(i, j));
  return out;
}

// Column-aligned rendering for reports and the CLI.
template <typename R>
std::string render(const Mat7<R>& m) {
  std::array<std::string, 49> cells;
  std::array<size_t, 7> width{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      cells[i * 7 + j] = m.at(i, j).str();
      width[j] = std::max(width[j], cells[i * 7 + j].size());
    }
  std::string out;
  for (int i = 0; i < 7; ++i) {
    out += "[ ";
    for (int j = 0; j < 7; ++j) {
      const std::string& s = cells[i * 7 + j];
      out.append(width[j] - s.size(), ' ');
      out += s;
      out += (j + 1 < 7) ? "  " : " ]\n";
    }
  }
  return out;
}

// Determinant of a small dense matrix over R, for jacobians. Plain cofactor
// expansion along the first row; n stays at most 5 here.
template <typename R>
R det_small(const std::vector<std::vector<R>>& m) {
  size_t n = m.size();
  if (n == 0) return ring_cast<R>(1);
  if (n == 1) return m[0][0];
  R acc = ring_cast<R>(0);
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<R>> sub(n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (j != c) sub[i - 1].push_back(m[i][j]);
    R term = m[0][c] * det_small(sub);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace g2
