#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trophodge/error.hpp"

namespace trophodge {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

std::string to_string(const Rational& q);
// accepts "p", "p/q", "-p/q"; throws Error("bad-rational")
Rational parse_rational(const std::string& s);

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const Rational& c);
Rational dot(const Vec& a, const Vec& b);

// Rows x cols rational matrix. Dense below kDenseColLimit columns,
// otherwise one ordered map per row.
class Matrix {
 public:
  static constexpr std::size_t kDenseColLimit = 64;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool sparse() const { return cols_ >= kDenseColLimit; }

  Rational at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& v);
  void add(std::size_t i, std::size_t j, const Rational& v);

  std::vector<std::pair<std::size_t, Rational>> row_entries(std::size_t i) const;
  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;

  Matrix transpose() const;
  Vec apply(const Vec& x) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& c) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

 private:
  void check(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> dense_;
  std::vector<std::map<std::size_t, Rational>> sparse_;
};

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// reduced row echelon form; rows[i] has leading 1 at pivots[i]
struct Rref {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<SparseRow> rows;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;
  std::size_t dim() const { return basis.size(); }
  Matrix as_columns() const;
};

Subspace kernel_basis(const Matrix& m);
// pivot columns of m, i.e. a column-space basis drawn from m itself
std::vector<std::size_t> independent_columns(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vecs);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
// solve for several right-hand sides at once (columns of b)
std::optional<Matrix> solve_many(const Matrix& m, const Matrix& b);
bool contains(const Subspace& s, const Vec& v);
std::size_t quotient_dim(const Subspace& ambient, const Subspace& sub);

// indices of columns of `extra` that extend span(base) to span(base + extra)
std::vector<std::size_t> greedy_complement(const Matrix& base, const Matrix& extra);

}  // namespace trophodge
