#pragma once

// Grading sets, degrees, exponent vectors, binomials and fibers.
//
// Every other header builds on the types declared here. Exponents and degrees
// are stored as 64-bit integers; all coefficients are exact GMP rationals.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agalg {

using Int = std::int64_t;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Raised when a computation would exceed a configured size ceiling.
class GuardExceeded : public Error {
public:
  using Error::Error;
};

/// A theorem-level invariant failed; the input or the library is broken.
class ConsistencyFailure : public Error {
public:
  using Error::Error;
};

/// Fixed-length integer vector with a tag so that degrees and exponent
/// vectors cannot be mixed up. Comparison is lexicographic.
template <class Tag>
class IntVector {
public:
  using value_type = Int;
  using iterator = std::vector<Int>::iterator;
  using const_iterator = std::vector<Int>::const_iterator;

  IntVector() = default;
  explicit IntVector(std::size_t n) : v_(n, 0) {}
  IntVector(std::initializer_list<Int> il) : v_(il) {}
  explicit IntVector(std::vector<Int> v) : v_(std::move(v)) {}

  std::size_t size() const { return v_.size(); }
  Int& operator[](std::size_t i) { return v_[i]; }
  Int operator[](std::size_t i) const { return v_[i]; }
  iterator begin() { return v_.begin(); }
  iterator end() { return v_.end(); }
  const_iterator begin() const { return v_.begin(); }
  const_iterator end() const { return v_.end(); }
  const std::vector<Int>& values() const { return v_; }

  auto operator<=>(const IntVector&) const = default;
  bool operator==(const IntVector&) const = default;

  IntVector& operator+=(const IntVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(Int k, IntVector a) {
    for (auto& x : a.v_) x *= k;
    return a;
  }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](Int x) { return x >= 0; });
  }
  /// Componentwise partial order.
  bool leq(const IntVector& o) const {
    check_same(o);
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] > o.v_[i]) return false;
    return true;
  }
  Int total() const { return std::accumulate(v_.begin(), v_.end(), Int{0}); }

  std::string str(char sep = ' ') const {
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(v_[i]);
    }
    return s;
  }

private:
  void check_same(const IntVector& o) const {
    if (o.v_.size() != v_.size())
      throw DimensionMismatch("vector length mismatch");
  }
  std::vector<Int> v_;
};

struct DegreeTag {};
struct ExponentTag {};
using Degree = IntVector<DegreeTag>;
using ExponentVector = IntVector<ExponentTag>;

struct IntVectorHash {
  template <class Tag>
  std::size_t operator()(const IntVector<Tag>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Int x : v) h = (h ^ std::hash<Int>{}(x)) * 0x100000001b3ull;
    return h;
  }
};

/// Graded-lex on degrees: total first, then lexicographic. Refines the
/// componentwise order, so it is a valid processing order for divisibility.
inline bool graded_lex_less(const Degree& a, const Degree& b) {
  const Int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a < b;
}

inline ExponentVector unit_vector(std::size_t n, std::size_t i, Int k = 1) {
  ExponentVector e(n);
  e[i] = k;
  return e;
}

/// Indices with nonzero entry, as a bitmask (n is at most 64 here).
inline std::uint64_t support_mask(const ExponentVector& u) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) m |= (std::uint64_t{1} << i);
  return m;
}

inline std::vector<std::size_t> support(const ExponentVector& u) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) s.push_back(i);
  return s;
}

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  return a.leq(b);
}

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

/// Renders x^u as "x1^2*x3"; the constant monomial renders as "1".
inline std::string monomial_string(const ExponentVector& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (u[i] > 1) s += "^" + std::to_string(u[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw InvalidInput("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline Rational rational_pow(const Rational& base, Int e) {
  if (e < 0) {
    if (base == 0) throw InvalidInput("zero to a negative power");
    return rational_pow(Rational(1) / base, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// The configuration A = {a_1, ..., a_n} in N^d \ {0}.
class GradingSet {
public:
  GradingSet() = default;

  /// Builds from column vectors. For d = 1 duplicates are rejected and a
  /// common divisor g > 1 is divided out (see scale()).
  explicit GradingSet(std::vector<Degree> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw InvalidInput("grading set needs at least one column");
    const std::size_t d = columns_.front().size();
    if (d == 0) throw InvalidInput("grading set needs positive dimension");
    for (const auto& c : columns_) {
      if (c.size() != d) throw DimensionMismatch("columns of different dimension");
      if (!c.is_nonnegative()) throw InvalidInput("column with a negative entry");
      if (c.is_zero()) throw InvalidInput("zero column");
    }
    if (d == 1) {
      std::set<Int> seen;
      Int g = 0;
      for (const auto& c : columns_) {
        if (!seen.insert(c[0]).second) throw InvalidInput("duplicate entry in grading set");
        g = std::gcd(g, c[0]);
      }
      if (g > 1) {
        for (auto& c : columns_) c[0] /= g;
        scale_ = g;
      }
    }
  }

  /// d = 1 from a strictly increasing list.
  static GradingSet from_sorted_1d(const std::vector<Int>& entries) {
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i] <= entries[i - 1])
        throw InvalidInput("entries must be strictly increasing");
    return from_rows({entries});
  }

  /// d rows of n entries each (the text format, row-major).
  static GradingSet from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows.front().empty()) throw InvalidInput("empty grading set");
    const std::size_t n = rows.front().size();
    std::vector<Degree> cols(n, Degree(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != n) throw InvalidInput("ragged grading rows");
      for (std::size_t i = 0; i < n; ++i) cols[i][r] = rows[r][i];
    }
    return GradingSet(std::move(cols));
  }

  /// Text format: d non-empty lines, each with n nonnegative integers.
  static GradingSet parse(std::string_view text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      std::istringstream ls(line);
      std::vector<Int> row;
      std::string tok;
      while (ls >> tok) {
        std::size_t pos = 0;
        Int x = 0;
        try {
          x = std::stoll(tok, &pos);
        } catch (const std::exception&) {
          throw InvalidInput("bad integer in grading set: '" + tok + "'");
        }
        if (pos != tok.size()) throw InvalidInput("bad integer in grading set: '" + tok + "'");
        row.push_back(x);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
    return from_rows(rows);
  }

  std::size_t n() const { return columns_.size(); }
  std::size_t d() const { return columns_.front().size(); }
  const Degree& column(std::size_t i) const { return columns_.at(i); }
  const std::vector<Degree>& columns() const { return columns_; }
  /// Common divisor removed at construction (1 when none was removed).
  Int scale() const { return scale_; }

  Degree zero_degree() const { return Degree(d()); }

  Degree degree_of(const ExponentVector& u) const {
    if (u.size() != n()) throw DimensionMismatch("exponent vector has wrong length");
    Degree b(d());
    for (std::size_t i = 0; i < n(); ++i)
      if (u[i] != 0)
        for (std::size_t k = 0; k < d(); ++k) b[k] += u[i] * columns_[i][k];
    return b;
  }

  /// Subconfiguration on the given column indices (no gcd rescaling).
  GradingSet restrict_to(const std::vector<std::size_t>& idx) const {
    GradingSet g;
    for (auto i : idx) g.columns_.push_back(columns_.at(i));
    if (g.columns_.empty()) throw InvalidInput("empty restriction");
    return g;
  }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < d(); ++k) {
      if (k) s += '\n';
      for (std::size_t i = 0; i < n(); ++i) {
        if (i) s += ' ';
        s += std::to_string(columns_[i][k]);
      }
    }
    return s;
  }

  /// "[1347]" style label for d = 1 sets with single-digit entries,
  /// otherwise a bracketed comma list.
  std::string bracket() const {
    bool digits = d() == 1;
    for (const auto& c : columns_) digits = digits && c[0] < 10;
    std::string s = "[";
    for (std::size_t i = 0; i < n(); ++i) {
      if (!digits && i) s += ',';
      if (d() == 1) {
        s += std::to_string(columns_[i][0]);
      } else {
        s += "(" + columns_[i].str(',') + ")";
      }
    }
    return s + "]";
  }

  bool operator==(const GradingSet& o) const { return columns_ == o.columns_; }

private:
  std::vector<Degree> columns_;
  Int scale_ = 1;
};

/// x^u - c x^v with exact c != 0. A pure monomial x^u has monomial = true
/// and v, c ignored.
struct Binomial {
  ExponentVector u;
  ExponentVector v;
  Rational c{1};
  bool monomial = false;

  bool operator==(const Binomial& o) const {
    if (monomial != o.monomial || u != o.u) return false;
    return monomial || (v == o.v && c == o.c);
  }

  std::string str() const {
    if (monomial) return monomial_string(u);
    std::string s = monomial_string(u) + " - ";
    if (c != 1) s += rational_string(c) + "*";
    return s + monomial_string(v);
  }
};

inline Binomial monomial_generator(ExponentVector u) {
  Binomial b;
  b.v = ExponentVector(u.size());
  b.u = std::move(u);
  b.monomial = true;
  return b;
}

/// Orientation-normalized representative: the lexicographically larger
/// exponent vector comes first, rescaled so the leading coefficient is 1.
inline Binomial canonical_binomial(const GradingSet& A, ExponentVector u, ExponentVector v,
                                   Rational c) {
  c.canonicalize();
  if (c == 0) throw InvalidInput("binomial coefficient must be nonzero");
  if (u == v) throw InvalidInput("degenerate binomial with equal terms");
  if (A.degree_of(u) != A.degree_of(v)) throw InvalidInput("binomial is not homogeneous");
  if (u < v) {
    std::swap(u, v);
    c = Rational(1) / c;
  }
  return Binomial{std::move(u), std::move(v), std::move(c), false};
}

inline Binomial canonical_binomial(const GradingSet& A, const Binomial& b) {
  if (b.monomial) return b;
  return canonical_binomial(A, b.u, b.v, b.c);
}

struct Fiber {
  Degree degree;
  std::vector<ExponentVector> points;  // sorted ascending lexicographically

  bool contains(const ExponentVector& u) const {
    return std::binary_search(points.begin(), points.end(), u);
  }
  std::size_t index_of(const ExponentVector& u) const {
    auto it = std::lower_bound(points.begin(), points.end(), u);
    if (it == points.end() || *it != u) throw InvalidInput("point not in fiber");
    return static_cast<std::size_t>(it - points.begin());
  }
};

namespace detail {

// Depth-first over variables in index order. `rem` is the remaining degree;
// `reach[i]` masks the coordinates some column j >= i can still fill.
inline void fiber_dfs(const GradingSet& A, std::size_t i, Degree& rem, ExponentVector& u,
                      const std::vector<std::uint64_t>& reach,
                      std::vector<ExponentVector>& out, std::size_t guard) {
  const std::size_t n = A.n(), d = A.d();
  if (i == n) {
    if (rem.is_zero()) {
      out.push_back(u);
      if (out.size() > guard) throw GuardExceeded("fiber larger than guard");
    }
    return;
  }
  for (std::size_t k = 0; k < d; ++k)
    if (rem[k] != 0 && !((reach[i] >> k) & 1)) return;
  const Degree& a = A.column(i);
  Int kmax = -1;
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k] == 0) continue;
    const Int q = rem[k] / a[k];
    kmax = kmax < 0 ? q : std::min(kmax, q);
  }
  if (i + 1 == n) {
    // Last variable: a single candidate multiplicity.
    if (kmax < 0) kmax = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (rem[k] != kmax * a[k]) return;
    u[i] = kmax;
    out.push_back(u);
    u[i] = 0;
    if (out.size() > guard) throw GuardExceeded("fiber larger than guard");
    return;
  }
  // Smaller exponents of earlier variables first gives ascending lex order
  // only after sorting; we sort at the end.
  for (Int m = 0; m <= kmax; ++m) {
    u[i] = m;
    fiber_dfs(A, i + 1, rem, u, reach, out, guard);
    for (std::size_t k = 0; k < d; ++k) rem[k] -= a[k];
  }
  for (std::size_t k = 0; k < d; ++k) rem[k] += (kmax + 1) * a[k];
  u[i] = 0;
}

inline std::vector<std::uint64_t> reach_masks(const GradingSet& A) {
  std::vector<std::uint64_t> reach(A.n() + 1, 0);
  for (std::size_t i = A.n(); i-- > 0;) {
    std::uint64_t m = reach[i + 1];
    for (std::size_t k = 0; k < A.d(); ++k)
      if (A.column(i)[k] != 0) m |= (std::uint64_t{1} << k);
    reach[i] = m;
  }
  return reach;
}

}  // namespace detail

inline constexpr std::size_t kDefaultFiberGuard = 5'000'000;

/// All u in N^n with deg(u) = b, sorted lexicographically.
inline Fiber enumerate_fiber(const GradingSet& A, const Degree& b,
                             std::size_t guard = kDefaultFiberGuard) {
  if (b.size() != A.d()) throw DimensionMismatch("degree has wrong dimension");
  Fiber f{b, {}};
  if (!b.is_nonnegative()) return f;
  Degree rem = b;
  ExponentVector u(A.n());
  detail::fiber_dfs(A, 0, rem, u, detail::reach_masks(A), f.points, guard);
  std::sort(f.points.begin(), f.points.end());
  return f;
}

/// Mixed-radix indexing of the box [0, cap] in N^d.
class DegreeBox {
public:
  explicit DegreeBox(Degree cap) : cap_(std::move(cap)), stride_(cap_.size()) {
    std::size_t s = 1;
    for (std::size_t k = cap_.size(); k-- > 0;) {
      if (cap_[k] < 0) throw InvalidInput("negative cap");
      stride_[k] = s;
      s *= static_cast<std::size_t>(cap_[k] + 1);
    }
    size_ = s;
  }
  std::size_t size() const { return size_; }
  const Degree& cap() const { return cap_; }
  bool contains(const Degree& b) const { return b.is_nonnegative() && b.leq(cap_); }
  std::size_t index(const Degree& b) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < b.size(); ++k) idx += static_cast<std::size_t>(b[k]) * stride_[k];
    return idx;
  }
  Degree degree(std::size_t idx) const {
    Degree b(cap_.size());
    for (std::size_t k = 0; k < cap_.size(); ++k) {
      b[k] = static_cast<Int>(idx / stride_[k]);
      idx %= stride_[k];
    }
    return b;
  }

private:
  Degree cap_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

/// Membership table for NA inside a box, by dynamic programming.
inline std::vector<char> semigroup_indicator(const GradingSet& A, const DegreeBox& box) {
  std::vector<char> in(box.size(), 0);
  // Box indices increase along the componentwise order, so b - a_i is
  // always visited before b.
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const Degree b = box.degree(idx);
    if (b.is_zero()) {
      in[idx] = 1;
      continue;
    }
    for (const auto& a : A.columns()) {
      Degree p = b - a;
      if (p.is_nonnegative() && in[box.index(p)]) {
        in[idx] = 1;
        break;
      }
    }
  }
  return in;
}

/// All b <= cap (componentwise) in NA, including 0, in graded-lex order.
inline std::vector<Degree> semigroup_members_up_to(const GradingSet& A, const Degree& cap) {
  if (cap.size() != A.d()) throw DimensionMismatch("cap has wrong dimension");
  DegreeBox box(cap);
  auto in = semigroup_indicator(A, box);
  std::vector<Degree> out;
  for (std::size_t idx = 0; idx < box.size(); ++idx)
    if (in[idx]) out.push_back(box.degree(idx));
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

/// Every fiber with degree inside a box, built by one enumeration of all
/// exponent vectors of degree <= cap.
class FiberTable {
public:
  FiberTable(const GradingSet& A, Degree cap, std::size_t guard = kDefaultFiberGuard)
      : A_(&A), box_(std::move(cap)), fibers_(box_.size()) {
    ExponentVector u(A.n());
    Degree acc(A.d());
    std::size_t count = 0;
    fill(0, u, acc, count, guard);
    for (auto& f : fibers_) std::sort(f.begin(), f.end());
  }

  const GradingSet& grading() const { return *A_; }
  const DegreeBox& box() const { return box_; }
  bool covers(const Degree& b) const { return box_.contains(b); }

  const std::vector<ExponentVector>& points(const Degree& b) const {
    if (!covers(b)) throw InvalidInput("degree outside fiber table");
    return fibers_[box_.index(b)];
  }
  Fiber fiber(const Degree& b) const { return Fiber{b, points(b)}; }

  /// Nonempty fibers in graded-lex order of degree.
  std::vector<Degree> degrees() const {
    std::vector<Degree> out;
    for (std::size_t idx = 0; idx < fibers_.size(); ++idx)
      if (!fibers_[idx].empty()) out.push_back(box_.degree(idx));
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
  }

private:
  void fill(std::size_t i, ExponentVector& u, Degree& acc, std::size_t& count,
            std::size_t guard) {
    if (i == A_->n()) {
      fibers_[box_.index(acc)].push_back(u);
      if (++count > guard) throw GuardExceeded("fiber table larger than guard");
      return;
    }
    const Degree& a = A_->column(i);
    Int m = 0;
    while (acc.leq(box_.cap())) {
      u[i] = m;
      fill(i + 1, u, acc, count, guard);
      acc += a;
      ++m;
    }
    acc -= m * a;
    u[i] = 0;
  }

  const GradingSet* A_;
  DegreeBox box_;
  std::vector<std::vector<ExponentVector>> fibers_;
};

}  // namespace agalg
