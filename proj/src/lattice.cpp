#include "fanomut/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace fanomut {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::InvariantViolation, "dimension mismatch");
}

void add_row_multiple(IntVector& target, const IntVector& source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] += factor * source[j];
}

}  // namespace

IntVector make_vector(std::initializer_list<long> coords) {
  IntVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& c : v) r.emplace_back(c);
  return r;
}

IntVector to_integer(const RatVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& c : v) {
    if (c.get_den() != 1) throw Error(ErrorKind::NotLattice, "non-integral point " + to_string(v));
    r.push_back(c.get_num());
  }
  return r;
}

Integer dot(const IntVector& a, const IntVector& b) {
  check_same_dim(a.size(), b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  check_same_dim(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
  check_same_dim(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer det2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational det2(const RatVector& a, const RatVector& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational det3(const RatVector& a, const RatVector& b, const RatVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  check_same_dim(a.size(), b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  check_same_dim(a.size(), b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector operator*(const Integer& s, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  check_same_dim(a.size(), b.size());
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  check_same_dim(a.size(), b.size());
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; });
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return g;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

PrimitivePart primitive_part(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorKind::ZeroVector, "primitive part of the zero vector");
  IntVector u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] / g;
  return {std::move(u), g};
}

IntVector primitive_direction(const RatVector& v) {
  Integer l = 1;
  for (const auto& c : v) l = lcm(l, Integer(c.get_den()));
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    scaled[i] = s.get_num();
  }
  return primitive_part(scaled).direction;
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ')';
  return out.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix r(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    check_same_dim(a[i].size(), inner);
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

RatVector operator*(const IntMatrix& a, const RatVector& v) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    check_same_dim(a[i].size(), v.size());
    Rational s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += a[i][j] * v[j];
    r[i] = s;
  }
  return r;
}

Integer determinant(const IntMatrix& input) {
  // Bareiss fraction-free elimination.
  std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns[0].size(), IntVector(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    check_same_dim(columns[j].size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i][j] = columns[j][i];
  }
  return m;
}

UnimodularMap UnimodularMap::identity(std::size_t dim) { return UnimodularMap(identity_matrix(dim)); }

UnimodularMap::UnimodularMap(IntMatrix matrix) : matrix_(std::move(matrix)) {
  for (const auto& row : matrix_) check_same_dim(row.size(), matrix_.size());
  Integer d = determinant(matrix_);
  if (d != 1 && d != -1) throw Error(ErrorKind::InvariantViolation, "matrix is not unimodular");
}

UnimodularMap UnimodularMap::inverse() const { return UnimodularMap(inverse_unimodular(matrix_)); }

UnimodularMap UnimodularMap::then(const UnimodularMap& next) const {
  return UnimodularMap(next.matrix_ * matrix_);
}

RowEchelon row_echelon(const IntMatrix& a) {
  RowEchelon out;
  out.echelon = a;
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  out.transform = identity_matrix(rows);
  IntMatrix& h = out.echelon;
  IntMatrix& u = out.transform;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h[i][c] != 0 && (best == rows || abs(h[i][c]) < abs(h[best][c]))) best = i;
      }
      if (best == rows) break;
      if (best != r) {
        std::swap(h[best], h[r]);
        std::swap(u[best], u[r]);
      }
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Integer q = floor_div(h[i][c], h[r][c]);
        add_row_multiple(h[i], h[r], -q);
        add_row_multiple(u[i], u[r], -q);
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      h[r] = -h[r];
      u[r] = -u[r];
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h[i][c], h[r][c]);
      add_row_multiple(h[i], h[r], -q);
      add_row_multiple(u[i], u[r], -q);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  std::size_t n = a.size();
  for (const auto& row : a) check_same_dim(row.size(), n);
  // Reverse columns, echelonize, reverse rows: upper staircase becomes lower.
  IntMatrix reversed = a;
  for (auto& row : reversed) std::reverse(row.begin(), row.end());
  RowEchelon e = row_echelon(reversed);
  if (e.rank != n) throw Error(ErrorKind::RankDeficient, "hermite_normal_form needs full rank");
  IntMatrix h(n), u(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = e.echelon[n - 1 - i];
    std::reverse(h[i].begin(), h[i].end());
    u[i] = e.transform[n - 1 - i];
  }
  assert(u * a == h);
  return {std::move(h), UnimodularMap(std::move(u))};
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t columns) {
  if (a.empty()) return identity_matrix(columns);
  RowEchelon e = row_echelon(transpose(a));
  IntMatrix kernel(e.transform.begin() + static_cast<std::ptrdiff_t>(e.rank), e.transform.end());
  return kernel;
}

IntMatrix saturate(const IntMatrix& rows, std::size_t columns) {
  IntMatrix annihilator = integer_kernel(rows, columns);
  if (annihilator.empty()) return identity_matrix(columns);
  return integer_kernel(annihilator, columns);
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  RowEchelon e = row_echelon(a);
  if (e.echelon != identity_matrix(a.size()))
    throw Error(ErrorKind::InvariantViolation, "matrix is not unimodular");
  return e.transform;
}

IntMatrix unimodular_completion(const IntMatrix& rows, std::size_t columns) {
  std::size_t k = rows.size();
  if (k == 0) return identity_matrix(columns);
  // V * rows^T = [T; 0]  =>  rows = [T^T | 0] * V^{-T}.
  RowEchelon e = row_echelon(transpose(rows));
  if (e.rank != k) throw Error(ErrorKind::RankDeficient, "rows are linearly dependent");
  IntMatrix t(k, IntVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i][j] = e.echelon[i][j];
  Integer d = determinant(t);
  if (d != 1 && d != -1) throw Error(ErrorKind::RankDeficient, "rows do not span a saturated lattice");
  IntMatrix left = identity_matrix(columns);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) left[i][j] = t[j][i];
  IntMatrix result = left * transpose(inverse_unimodular(e.transform));
  return result;
}

}  // namespace fanomut
