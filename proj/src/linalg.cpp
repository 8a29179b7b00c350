#include "sylab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace sylab {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31) || !is_prime(p))
    throw Error("field modulus must be a prime below 2^31, got " +
                std::to_string(p));
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1 % p_;
  while (e) {
    if (e & 1)
      result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0)
    throw Error("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

PrimeField::Elem PrimeField::random(Rng &rng) const {
  return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(
      0, p_ - 1)(rng));
}

// ---------------------------------------------------------------- FMatrix

FMatrix FMatrix::identity(PrimeField f, std::size_t n) {
  FMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

FMatrix FMatrix::from_rows(PrimeField f, std::size_t rows, std::size_t cols,
                           const std::vector<std::vector<std::int64_t>> &v) {
  if (v.size() != rows)
    throw Error("matrix row count mismatch");
  FMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (v[r].size() != cols)
      throw Error("matrix column count mismatch in row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = f.reduce(v[r][c]);
  }
  return m;
}

FMatrix FMatrix::random(PrimeField f, std::size_t rows, std::size_t cols,
                        Rng &rng) {
  FMatrix m(f, rows, cols);
  for (auto &x : m.data_)
    x = f.random(rng);
  return m;
}

bool FMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool FMatrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u))
        return false;
  return true;
}

FMatrix FMatrix::transpose() const {
  FMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

FMatrix FMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

FMatrix FMatrix::select_columns(const std::vector<std::size_t> &cols) const {
  FMatrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(r, j) = (*this)(r, cols[j]);
  return out;
}

FMatrix FMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                       std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw Error("matrix block out of range");
  FMatrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void FMatrix::set_block(std::size_t r0, std::size_t c0, const FMatrix &b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw Error("matrix block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c)
      (*this)(r0 + r, c0 + c) = b(r, c);
}

FMatrix FMatrix::scaled(Elem s) const {
  FMatrix out = *this;
  for (auto &x : out.data_)
    x = field_.mul(x, s);
  return out;
}

FMatrix operator*(const FMatrix &a, const FMatrix &b) {
  if (a.field_ != b.field_)
    throw Error("matrix fields differ");
  if (a.cols_ != b.rows_)
    throw Error("matrix product shape mismatch: " + std::to_string(a.rows_) +
                "x" + std::to_string(a.cols_) + " * " +
                std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  const std::uint64_t p = a.field_.characteristic();
  FMatrix out(a.field_, a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::uint64_t x = a(r, k);
      if (x == 0)
        continue;
      const auto *brow = &b.data_[k * b.cols_];
      for (std::size_t c = 0; c < b.cols_; ++c)
        acc[c] = (acc[c] + x * brow[c]) % p;
    }
    for (std::size_t c = 0; c < b.cols_; ++c)
      out(r, c) = static_cast<FMatrix::Elem>(acc[c]);
  }
  return out;
}

FMatrix operator+(const FMatrix &a, const FMatrix &b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error("matrix sum shape mismatch");
  FMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

FMatrix operator-(const FMatrix &a, const FMatrix &b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error("matrix difference shape mismatch");
  FMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

std::string FMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "] (" << rows_ << "x" << cols_ << " mod " << field_.characteristic()
     << ")";
  return os.str();
}

FMatrix hstack(const std::vector<FMatrix> &parts, PrimeField f,
               std::size_t rows) {
  std::size_t cols = 0;
  for (const auto &m : parts) {
    if (m.rows() != rows)
      throw Error("hstack row mismatch");
    cols += m.cols();
  }
  FMatrix out(f, rows, cols);
  std::size_t c0 = 0;
  for (const auto &m : parts) {
    out.set_block(0, c0, m);
    c0 += m.cols();
  }
  return out;
}

FMatrix vstack(const std::vector<FMatrix> &parts, PrimeField f,
               std::size_t cols) {
  std::size_t rows = 0;
  for (const auto &m : parts) {
    if (m.cols() != cols)
      throw Error("vstack column mismatch");
    rows += m.rows();
  }
  FMatrix out(f, rows, cols);
  std::size_t r0 = 0;
  for (const auto &m : parts) {
    out.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return out;
}

// ------------------------------------------------------------ elimination

EchelonForm row_reduce(FMatrix m) {
  const PrimeField k = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  EchelonForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0)
      ++piv;
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(m(piv, j), m(r, j));
    const auto s = k.inv(m(r, c));
    if (s != 1)
      for (std::size_t j = c; j < cols; ++j)
        m(r, j) = k.mul(m(r, j), s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      const auto f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j))
          m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const FMatrix &m) {
  if (m.empty())
    return 0;
  return row_reduce(m).pivots.size();
}

FMatrix kernel_basis(const FMatrix &m) {
  const PrimeField k = m.field();
  const std::size_t n = m.cols();
  if (m.rows() == 0)
    return FMatrix::identity(k, n);
  auto ef = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : ef.pivots)
    is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c])
      free.push_back(c);
  FMatrix basis(k, n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], j) = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r)
      basis(ef.pivots[r], j) = k.neg(ef.reduced(r, free[j]));
  }
  return basis;
}

std::optional<FMatrix> solve(const FMatrix &a, const FMatrix &b) {
  if (a.rows() != b.rows())
    throw Error("solve: row count mismatch (" + std::to_string(a.rows()) +
                " vs " + std::to_string(b.rows()) + ")");
  const PrimeField k = a.field();
  const std::size_t n = a.cols();
  FMatrix aug = hstack({a, b}, k, a.rows());
  auto ef = row_reduce(std::move(aug));
  FMatrix x(k, n, b.cols());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
    if (ef.pivots[r] >= n)
      return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c)
      x(ef.pivots[r], c) = ef.reduced(r, n + c);
  }
  return x;
}

FMatrix column_space_basis(const FMatrix &m) {
  if (m.empty())
    return FMatrix(m.field(), m.rows(), 0);
  return m.select_columns(row_reduce(m).pivots);
}

FMatrix complement_basis(const FMatrix &sub) {
  const PrimeField k = sub.field();
  const std::size_t n = sub.rows();
  FMatrix all = hstack({sub, FMatrix::identity(k, n)}, k, n);
  auto ef = row_reduce(all);
  std::vector<std::size_t> extra;
  for (auto c : ef.pivots)
    if (c >= sub.cols())
      extra.push_back(c - sub.cols());
  FMatrix out(k, n, extra.size());
  for (std::size_t j = 0; j < extra.size(); ++j)
    out(extra[j], j) = 1;
  return out;
}

FMatrix intersect_spaces(const FMatrix &a, const FMatrix &b) {
  const PrimeField k = a.field();
  if (a.rows() != b.rows())
    throw Error("intersect_spaces: ambient dimension mismatch");
  FMatrix ab = column_space_basis(a), bb = column_space_basis(b);
  // a x = b y  <=>  [a | -b] (x; y) = 0
  FMatrix joint = hstack({ab, bb.scaled(k.neg(1))}, k, a.rows());
  FMatrix ker = kernel_basis(joint);
  FMatrix coeffs = ker.block(0, 0, ab.cols(), ker.cols());
  return column_space_basis(ab * coeffs);
}

std::optional<FMatrix> inverse(const FMatrix &m) {
  if (m.rows() != m.cols())
    return std::nullopt;
  auto x = solve(m, FMatrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows())
    return std::nullopt;
  return x;
}

bool is_invertible(const FMatrix &m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

FMatrix matrix_power(const FMatrix &m, std::uint64_t e) {
  if (m.rows() != m.cols())
    throw Error("matrix_power: non-square matrix");
  FMatrix result = FMatrix::identity(m.field(), m.rows());
  FMatrix base = m;
  while (e) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

// ------------------------------------------------------------ polynomials

namespace poly {

void trim(Poly &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

std::size_t degree(const Poly &f) {
  if (f.empty())
    throw Error("degree of the zero polynomial");
  return f.size() - 1;
}

Poly mul(const PrimeField &k, const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  trim(out);
  return out;
}

Poly sub(const PrimeField &k, const Poly &a, const Poly &b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = k.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

static void divmod(const PrimeField &k, Poly &a, const Poly &b, Poly *q) {
  if (b.empty())
    throw Error("polynomial division by zero");
  trim(a);
  const auto lead_inv = k.inv(b.back());
  if (q)
    q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const auto c = k.mul(a.back(), lead_inv);
    if (q)
      (*q)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
    trim(a);
  }
}

Poly mod(const PrimeField &k, Poly a, const Poly &b) {
  divmod(k, a, b, nullptr);
  return a;
}

Poly div(const PrimeField &k, Poly a, const Poly &b) {
  Poly q;
  divmod(k, a, b, &q);
  trim(q);
  return q;
}

Poly monic(const PrimeField &k, Poly a) {
  trim(a);
  if (a.empty())
    return a;
  const auto s = k.inv(a.back());
  for (auto &x : a)
    x = k.mul(x, s);
  return a;
}

Poly gcd(const PrimeField &k, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

Poly powmod(const PrimeField &k, Poly base, const BigInt &e,
            const Poly &modulus) {
  Poly result = mod(k, Poly{1}, modulus);
  base = mod(k, base, modulus);
  const auto bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(k, mul(k, result, result), modulus);
    if (boost::multiprecision::bit_test(e, i))
      result = mod(k, mul(k, result, base), modulus);
  }
  return result;
}

// Splits a squarefree product of distinct irreducibles of degree d.
static Poly equal_degree_factor(const PrimeField &k, Poly g, std::size_t d,
                                Rng &rng) {
  const std::uint32_t p = k.characteristic();
  while (degree(g) > d) {
    Poly a(degree(g));
    for (auto &c : a)
      c = k.random(rng);
    trim(a);
    if (a.size() < 2)
      continue;
    Poly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Poly t = mod(k, a, g), acc = t;
      for (std::size_t i = 1; i < d; ++i) {
        t = mod(k, mul(k, t, t), g);
        acc = sub(k, acc, t); // characteristic 2: subtraction is addition
      }
      b = acc;
    } else {
      BigInt e = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d));
      e = (e - 1) / 2;
      b = sub(k, powmod(k, a, e, g), Poly{1});
    }
    Poly h = gcd(k, g, b);
    if (h.size() > 1 && h.size() < g.size()) {
      Poly other = monic(k, div(k, g, h));
      g = h.size() <= other.size() ? h : other;
    }
  }
  return monic(k, g);
}

Poly irreducible_factor(const PrimeField &k, const Poly &f_in, Rng &rng) {
  Poly f = monic(k, f_in);
  if (f.size() < 2)
    throw Error("irreducible_factor: constant polynomial");
  if (f.size() == 2)
    return f;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t d = 1; d <= degree(f); ++d) {
    h = powmod(k, h, BigInt(k.characteristic()), f);
    Poly g = gcd(k, f, sub(k, h, x));
    if (g.size() > 1)
      return equal_degree_factor(k, g, d, rng);
  }
  return f; // unreachable for nonconstant f
}

} // namespace poly

Poly minimal_polynomial(const FMatrix &m) {
  if (m.rows() != m.cols())
    throw Error("minimal_polynomial: non-square matrix");
  const PrimeField k = m.field();
  const std::size_t n = m.rows();
  if (n == 0)
    return Poly{1};
  // Columns are vec(I), vec(m), vec(m^2), ...; the first linear dependency
  // gives the minimal polynomial.
  std::vector<FMatrix> powers{FMatrix::identity(k, n)};
  for (std::size_t deg = 1; deg <= n; ++deg) {
    powers.push_back(powers.back() * m);
    FMatrix krylov(k, n * n, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < n * n; ++i)
        krylov(i, j) = powers[j].data()[i];
    FMatrix ker = kernel_basis(krylov);
    if (ker.cols() == 0)
      continue;
    Poly f(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i)
      f[i] = ker(i, 0);
    f = poly::monic(k, f);
    if (!evaluate(f, m).is_zero())
      throw Error("minimal_polynomial: annihilation check failed");
    return f;
  }
  throw Error("minimal_polynomial: no dependency found");
}

FMatrix evaluate(const Poly &f, const FMatrix &m) {
  const PrimeField k = m.field();
  FMatrix acc(k, m.rows(), m.cols());
  // Horner
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * m;
    if (f[i])
      for (std::size_t d = 0; d < m.rows(); ++d)
        acc(d, d) = k.add(acc(d, d), f[i]);
  }
  return acc;
}

// ---------------------------------------------------------------- ZMatrix

ZMatrix ZMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &v) {
  const std::size_t rows = v.size(), cols = rows ? v[0].size() : 0;
  ZMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (v[r].size() != cols)
      throw Error("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = v[r][c];
  }
  return m;
}

ZMatrix operator*(const ZMatrix &a, const ZMatrix &b) {
  if (a.cols_ != b.rows_)
    throw Error("integer matrix product shape mismatch");
  ZMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt &x = a(r, k);
      if (x == 0)
        continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (b(k, c) != 0)
          out(r, c) += x * b(k, c);
    }
  return out;
}

FMatrix ZMatrix::reduce_mod(PrimeField q) const {
  FMatrix out(q, rows_, cols_);
  const BigInt mod = q.characteristic();
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      BigInt v = (*this)(r, c) % mod;
      if (v < 0)
        v += mod;
      out(r, c) = static_cast<FMatrix::Elem>(v);
    }
  return out;
}

std::size_t rank(const ZMatrix &in) {
  ZMatrix m = in;
  const std::size_t rows = m.rows(), cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0)
      ++piv;
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

} // namespace sylab
