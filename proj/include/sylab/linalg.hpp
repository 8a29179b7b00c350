#ifndef SYLAB_LINALG_HPP
#define SYLAB_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sylab {

using Rng = std::mt19937_64;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The field F_p. Elements are stored as residues in [0, p).
class PrimeField {
public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem random(Rng &rng) const;

  static bool is_prime(std::uint64_t n);

  bool operator==(const PrimeField &o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField &o) const { return p_ != o.p_; }

private:
  std::uint32_t p_;
};

/// Dense row-major matrix over a prime field. 0xn and nx0 shapes are legal.
class FMatrix {
public:
  using Elem = PrimeField::Elem;

  FMatrix() : field_(2) {}
  FMatrix(PrimeField f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FMatrix identity(PrimeField f, std::size_t n);
  static FMatrix from_rows(PrimeField f, std::size_t rows, std::size_t cols,
                           const std::vector<std::vector<std::int64_t>> &v);
  static FMatrix random(PrimeField f, std::size_t rows, std::size_t cols,
                        Rng &rng);

  const PrimeField &field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Elem &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Elem> &data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  FMatrix transpose() const;
  FMatrix column(std::size_t c) const;
  FMatrix select_columns(const std::vector<std::size_t> &cols) const;
  FMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const FMatrix &b);
  FMatrix scaled(Elem s) const;

  friend FMatrix operator*(const FMatrix &a, const FMatrix &b);
  friend FMatrix operator+(const FMatrix &a, const FMatrix &b);
  friend FMatrix operator-(const FMatrix &a, const FMatrix &b);
  bool operator==(const FMatrix &o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           data_ == o.data_;
  }
  bool operator!=(const FMatrix &o) const { return !(*this == o); }

  std::string to_string() const;

private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

FMatrix hstack(const std::vector<FMatrix> &parts, PrimeField f,
               std::size_t rows);
FMatrix vstack(const std::vector<FMatrix> &parts, PrimeField f,
               std::size_t cols);

struct EchelonForm {
  FMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

EchelonForm row_reduce(FMatrix m);

std::size_t rank(const FMatrix &m);

/// Columns form a basis of {x : m x = 0}.
FMatrix kernel_basis(const FMatrix &m);

/// Some X with a X = b, or nullopt when b leaves the column space of a.
std::optional<FMatrix> solve(const FMatrix &a, const FMatrix &b);

/// Linearly independent columns spanning the column space (a subset of m's
/// columns, taken in pivot order).
FMatrix column_space_basis(const FMatrix &m);

/// Unit vectors that complete the columns of `sub` to a basis of F_p^n,
/// chosen greedily in index order.
FMatrix complement_basis(const FMatrix &sub);

/// Columns spanning the intersection of two column spaces.
FMatrix intersect_spaces(const FMatrix &a, const FMatrix &b);

std::optional<FMatrix> inverse(const FMatrix &m);
bool is_invertible(const FMatrix &m);

FMatrix matrix_power(const FMatrix &m, std::uint64_t e);

// Polynomials over F_p, coefficients from the constant term upwards. The
// zero polynomial is the empty vector.
using Poly = std::vector<PrimeField::Elem>;

/// Monic minimal polynomial of a square matrix.
Poly minimal_polynomial(const FMatrix &m);

FMatrix evaluate(const Poly &f, const FMatrix &m);

namespace poly {
void trim(Poly &f);
std::size_t degree(const Poly &f); // degree of a nonzero polynomial
Poly mul(const PrimeField &k, const Poly &a, const Poly &b);
Poly sub(const PrimeField &k, const Poly &a, const Poly &b);
Poly mod(const PrimeField &k, Poly a, const Poly &b);
Poly div(const PrimeField &k, Poly a, const Poly &b);
Poly monic(const PrimeField &k, Poly a);
Poly gcd(const PrimeField &k, Poly a, Poly b);
Poly powmod(const PrimeField &k, Poly base,
            const boost::multiprecision::cpp_int &e, const Poly &modulus);
/// Some monic irreducible factor of a monic f with deg f >= 1.
Poly irreducible_factor(const PrimeField &k, const Poly &f, Rng &rng);
} // namespace poly

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries.
class ZMatrix {
public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ZMatrix from_rows(const std::vector<std::vector<std::int64_t>> &v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BigInt &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  BigInt &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  friend ZMatrix operator*(const ZMatrix &a, const ZMatrix &b);
  bool operator==(const ZMatrix &o) const = default;

  /// Entries reduced modulo q.
  FMatrix reduce_mod(PrimeField q) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rank over Q, by fraction-free (Bareiss) elimination.
std::size_t rank(const ZMatrix &m);

} // namespace sylab

#endif
