#pragma once

// Exact integer / rational linear algebra.  No floating point here.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace origami {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(Int(s.substr(0, slash)), den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an exact rational: '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  bool row_is_zero(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct HermiteResult {
  IntMatrix basis;  // nonzero rows only
  std::size_t rank = 0;
};

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot).  The integer row space is preserved.
inline HermiteResult hermite_normal_form(IntMatrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    // Euclid on column `col` among rows >= pivot_row.
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t r = pivot_row; r < m.rows(); ++r) {
        if (m(r, col) == 0) continue;
        if (best == m.rows() || abs(m(r, col)) < abs(m(best, col))) best = r;
      }
      if (best == m.rows()) break;
      m.swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
        if (m(r, col) == 0) continue;
        m.add_row(r, pivot_row, -(m(r, col) / m(pivot_row, col)));
        if (m(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(pivot_row, col) == 0) continue;
    if (m(pivot_row, col) < 0) m.negate_row(pivot_row);
    for (std::size_t r = 0; r < pivot_row; ++r)
      m.add_row(r, pivot_row, -floor_div(m(r, col), m(pivot_row, col)));
    ++pivot_row;
  }
  HermiteResult out;
  out.rank = pivot_row;
  out.basis = IntMatrix(pivot_row, m.cols());
  for (std::size_t r = 0; r < pivot_row; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.basis(r, c) = m(r, c);
  return out;
}

using PlaneVector = std::array<Rational, 2>;

// Subgroup of the plane generated by finitely many rational vectors.
struct LatticeBasis {
  int rank = 0;
  std::vector<PlaneVector> basis;
  Rational covolume = 0;  // 0 when rank < 2

  // True iff the lattice is exactly Z x Z.
  bool is_unit_square() const {
    if (rank != 2 || covolume != 1) return false;
    for (const auto& v : basis)
      if (denominator(v[0]) != 1 || denominator(v[1]) != 1) return false;
    return true;
  }
};

inline LatticeBasis lattice_of(const std::vector<PlaneVector>& vectors) {
  Int den = 1;
  for (const auto& v : vectors)
    for (const auto& x : v) den = boost::multiprecision::lcm(den, Int(denominator(x)));
  IntMatrix m(vectors.size(), 2);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Rational scaled = vectors[i][j] * den;
      m(i, j) = numerator(scaled);
    }
  const auto hnf = hermite_normal_form(std::move(m));
  LatticeBasis out;
  out.rank = static_cast<int>(hnf.rank);
  for (std::size_t r = 0; r < hnf.rank; ++r)
    out.basis.push_back({Rational(hnf.basis(r, 0), den), Rational(hnf.basis(r, 1), den)});
  if (out.rank == 2) {
    const Rational det = out.basis[0][0] * out.basis[1][1] - out.basis[0][1] * out.basis[1][0];
    out.covolume = det < 0 ? Rational(-det) : det;
  }
  return out;
}

}  // namespace origami
