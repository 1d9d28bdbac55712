#include "psbent/polynomials.hpp"

#include <string>
#include <tuple>

#include "psbent/errors.hpp"
#include "psbent/hex.hpp"

namespace psbent {

BitMatrix BitMatrix::identity(unsigned dim) {
  std::vector<std::uint32_t> cols(dim);
  for (unsigned c = 0; c < dim; ++c) cols[c] = 1u << c;
  return BitMatrix(std::move(cols));
}

std::uint32_t BitMatrix::apply(std::uint32_t v) const {
  std::uint32_t out = 0;
  for (unsigned c = 0; c < dim(); ++c) {
    if ((v >> c) & 1u) out ^= cols_[c];
  }
  return out;
}

unsigned BitMatrix::rank() const {
  std::vector<std::uint32_t> work = cols_;
  unsigned rank = 0;
  for (unsigned bit = 0; bit < dim() && rank < work.size(); ++bit) {
    const std::uint32_t pivot_mask = 1u << bit;
    std::size_t pivot = rank;
    while (pivot < work.size() && !(work[pivot] & pivot_mask)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    for (std::size_t j = 0; j < work.size(); ++j) {
      if (j != rank && (work[j] & pivot_mask)) work[j] ^= work[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  const unsigned n = dim();
  // Row-reduce [A | I] where row r of A is gathered from the columns.
  std::vector<std::uint32_t> left(n, 0);
  std::vector<std::uint32_t> right(n, 0);
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned c = 0; c < n; ++c) {
      if (at(r, c)) left[r] |= 1u << c;
    }
    right[r] = 1u << r;
  }
  for (unsigned c = 0; c < n; ++c) {
    unsigned pivot = c;
    while (pivot < n && !((left[pivot] >> c) & 1u)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(left[c], left[pivot]);
    std::swap(right[c], right[pivot]);
    for (unsigned r = 0; r < n; ++r) {
      if (r != c && ((left[r] >> c) & 1u)) {
        left[r] ^= left[c];
        right[r] ^= right[c];
      }
    }
  }
  // right[r] is row r of the inverse; transpose back into columns.
  std::vector<std::uint32_t> cols(n, 0);
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned c = 0; c < n; ++c) {
      if ((right[r] >> c) & 1u) cols[c] |= 1u << r;
    }
  }
  return BitMatrix(std::move(cols));
}

LinearizedMap::LinearizedMap(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_.degree()) {
    throw InvalidParameter("--coeffs: expected " + std::to_string(field_.degree()) + " coefficients, got " +
                           std::to_string(coeffs_.size()));
  }
  for (Elem c : coeffs_) {
    if (!field_.contains(c)) throw InvalidParameter("--coeffs: coefficient " + to_hex(c) + " is not a field element");
  }
}

LinearizedMap LinearizedMap::identity(const Field& field) { return frobenius(field, 0); }

LinearizedMap LinearizedMap::frobenius(const Field& field, unsigned i) {
  std::vector<Elem> coeffs(field.degree(), 0);
  coeffs[i % field.degree()] = 1;
  return LinearizedMap(field, std::move(coeffs));
}

LinearizedMap LinearizedMap::trace(const Field& field) {
  return LinearizedMap(field, std::vector<Elem>(field.degree(), 1));
}

LinearizedMap LinearizedMap::from_matrix(const Field& field, const BitMatrix& matrix) {
  const unsigned m = field.degree();
  if (matrix.dim() != m) throw InvalidParameter("matrix dimension does not match the field degree");

  // Trace-dual basis: dual_j = sum_k (T^-1)_{jk} x^k with T_{jk} = tr(x^j x^k).
  BitMatrix gram(m);
  {
    std::vector<std::uint32_t> cols(m, 0);
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned k = 0; k < m; ++k) {
        if (field.trace(field.mul(1u << j, 1u << k))) cols[k] |= 1u << j;
      }
    }
    gram = BitMatrix(std::move(cols));
  }
  const auto gram_inv = gram.inverse();  // the trace form is nondegenerate
  std::vector<Elem> dual(m, 0);
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned k = 0; k < m; ++k) {
      if (gram_inv->at(j, k)) dual[j] ^= 1u << k;
    }
  }

  // M(z) = sum_j tr(dual_j z) M(x^j), so c_i = sum_j M(x^j) dual_j^(2^i).
  std::vector<Elem> coeffs(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) {
      coeffs[i] ^= field.mul(matrix.column(j), field.frobenius(dual[j], i));
    }
  }
  return LinearizedMap(field, std::move(coeffs));
}

Elem LinearizedMap::operator()(Elem z) const {
  Elem acc = 0;
  Elem power = z;
  for (Elem c : coeffs_) {
    acc ^= field_.mul(c, power);
    power = field_.square(power);
  }
  return acc;
}

BitMatrix LinearizedMap::matrix() const {
  std::vector<std::uint32_t> cols(field_.degree());
  for (unsigned j = 0; j < field_.degree(); ++j) cols[j] = (*this)(1u << j);
  return BitMatrix(std::move(cols));
}

LinearizedMap invert_linearized(const LinearizedMap& map) {
  const auto inverse = map.matrix().inverse();
  if (!inverse) throw NotBijective("linearized map has a singular matrix");
  return LinearizedMap::from_matrix(map.field(), *inverse);
}

// ---------------------------------------------------------------------------

namespace {

void require_odd(const Field& field, const char* what) {
  if (field.degree() % 2 == 0) {
    throw InvalidParameter(std::string("--m: ") + what + " requires odd m, got " + std::to_string(field.degree()));
  }
}

// c<i_1, ..., i_s> = sum_j c^(2^{i_j})
struct AngleSum {
  const Field& field;
  Elem base;
  Elem value = 0;

  void add_range(int first, int last) {
    for (int i = first; i <= last; i += 2) value ^= field.frobenius(base, static_cast<unsigned>(i));
  }
};

}  // namespace

Elem trace_quadratic_forward(const Field& field, Elem a, Elem z) {
  return field.mul(a, z) ^ field.mul(field.square(a), field.square(z)) ^ field.trace(z);
}

LinearizedMap trace_quadratic_map(const Field& field, Elem a) {
  std::vector<Elem> coeffs(field.degree(), 1);
  coeffs[0] ^= a;
  coeffs[1] ^= field.square(a);
  return LinearizedMap(field, std::move(coeffs));
}

std::vector<Elem> trace_quadratic_c_coefficients(const Field& field, Elem a, ProgressionReading reading) {
  const int m = static_cast<int>(field.degree());
  const Elem b = field.inv(a);
  std::vector<Elem> c(static_cast<std::size_t>(m), 0);

  AngleSum c0{field, b};
  c0.add_range(1, reading == ProgressionReading::Extended ? m - 2 : m - 4);
  c[0] = c0.value;

  for (int i = 1; i < m; ++i) {
    AngleSum s{field, b};
    if (i % 2 == 1) {
      s.add_range(1, i - 2);
      s.add_range(i + 1, m - 1);
      c[static_cast<std::size_t>(i)] = 1u ^ s.value;
    } else {
      s.add_range(0, i - 2);
      s.add_range(i + 1, m - 2);
      c[static_cast<std::size_t>(i)] = s.value;
    }
  }
  return c;
}

Elem TraceQuadraticInverse::operator()(Elem z) const {
  const Field& f = c_map_.field();
  return f.mul(inv_a_, c_map_(z)) ^ f.mul(inv_a_, f.trace(f.mul(z, inv_a_)));
}

LinearizedMap TraceQuadraticInverse::as_linearized() const {
  const Field& f = c_map_.field();
  std::vector<Elem> coeffs(f.degree());
  for (unsigned i = 0; i < f.degree(); ++i) {
    // (1/a) tr(z/a) contributes (1/a) (1/a)^(2^i) to the z^(2^i) coefficient.
    coeffs[i] = f.mul(inv_a_, c_map_.coefficients()[i] ^ f.frobenius(inv_a_, i));
  }
  return LinearizedMap(f, std::move(coeffs));
}

TraceQuadraticInverse trace_quadratic_inverse(const Field& field, Elem a, ProgressionReading reading) {
  require_odd(field, "L_a(x) = ax + a^2x^2 + tr(x) inversion");
  if (!field.contains(a) || field.trace(field.inv(a)) != 1) {
    throw InvalidParameter("a = " + to_hex(a) + " does not satisfy tr(1/a) = 1");
  }
  TraceQuadraticInverse result(a, field.inv(a), LinearizedMap(field, trace_quadratic_c_coefficients(field, a, reading)));
  const LinearizedMap oracle = invert_linearized(trace_quadratic_map(field, a));
  if (!(result.as_linearized() == oracle)) {
    throw FormulaMismatch("closed-form C_a disagrees with the matrix inverse at m = " +
                          std::to_string(field.degree()) + ", a = " + to_hex(a) + " (" +
                          (reading == ProgressionReading::Extended ? "extended" : "truncated") + " reading)");
  }
  return result;
}

std::vector<ReadingCheck> trace_quadratic_reading_report(const Field& field) {
  require_odd(field, "the C_a reading report");
  std::vector<ReadingCheck> report;
  for (ProgressionReading reading : {ProgressionReading::Truncated, ProgressionReading::Extended}) {
    ReadingCheck check{reading, true, 0, 0};
    for (Elem a = 1; a < field.size(); ++a) {
      if (field.trace(field.inv(a)) != 1) continue;
      ++check.valid_a_count;
      const Elem inv_a = field.inv(a);
      std::vector<Elem> coeffs = trace_quadratic_c_coefficients(field, a, reading);
      for (unsigned i = 0; i < field.degree(); ++i) {
        coeffs[i] = field.mul(inv_a, coeffs[i] ^ field.frobenius(inv_a, i));
      }
      if (!(LinearizedMap(field, std::move(coeffs)) == invert_linearized(trace_quadratic_map(field, a)))) {
        ++check.mismatching_a_count;
      }
    }
    check.matches_oracle = check.mismatching_a_count == 0;
    report.push_back(check);
  }
  return report;
}

// ---------------------------------------------------------------------------

Elem knuth_map_forward(const Field& field, Elem a, Elem z) {
  const Elem quad = field.trace(field.inv(a)) ? field.mul(field.square(a), field.square(z)) : 0;
  return field.mul(a, z) ^ quad ^ field.trace(z);
}

KnuthMapInverse::KnuthMapInverse(const Field& field, Elem a)
    : field_(field), inv_a_(field.inv(a)), trace_inv_a_(field.trace(field.inv(a))) {
  require_odd(field, "the Knuth-type inverse");
  if (a == 0 || !field.contains(a)) throw InvalidParameter("Knuth-type inverse needs a nonzero a");
  if (trace_inv_a_ == 1) trace_quadratic_ = trace_quadratic_inverse(field, a);
}

Elem KnuthMapInverse::operator()(Elem z) const {
  const Elem z_over_a = field_.mul(z, inv_a_);
  Elem r = field_.mul(inv_a_, field_.trace(z_over_a));
  if (trace_inv_a_ == 0) {
    r ^= z_over_a;
  } else {
    r ^= field_.mul(inv_a_, trace_quadratic_->c_map()(z));
  }
  return r;
}

// ---------------------------------------------------------------------------

Elem kantor_map_forward(const Field& field, Elem a, Elem z) {
  const Elem linear = field.trace(a) ? z : 0;
  return field.mul(a, field.square(z)) ^ field.trace(field.mul(a, z)) ^ linear;
}

KantorMapInverse::KantorMapInverse(const Field& field, Elem a, KantorReading reading)
    : field_(field), reading_(reading), a_(a) {
  require_odd(field, "the Kantor-type inverse");
  const unsigned m = field.degree();
  bracket_scale_ = field.trace(a) ? field.inv(a) : 0;
  trace_coeff_ = reading == KantorReading::Corrected ? 1 : 0;
  for (unsigned i = 0; 2 * i + 3 <= m; ++i) trace_coeff_ ^= field.frobenius(a, 2 * i);
  tail_scale_ = field.pow(a, (std::uint64_t{1} << (m - 1)) - 1);
}

Elem KantorMapInverse::operator()(Elem z) const {
  const unsigned m = field_.degree();
  const Elem w = field_.mul(a_, z);
  const Elem tw = field_.trace(w);

  Elem bracket = field_.sqrt(w);
  for (unsigned i = 0; 2 * i + 1 <= m; ++i) {
    bracket ^= reading_ == KantorReading::Corrected ? field_.frobenius(w, 2 * i)
                                                    : field_.pow(w, (std::uint64_t{1} << (2 * i)) - 1);
  }
  if (tw) bracket ^= trace_coeff_;

  return field_.mul(bracket_scale_, bracket) ^ field_.mul(tail_scale_, field_.sqrt(z) ^ tw);
}

// ---------------------------------------------------------------------------

Elem dickson_eval(const ExtField& ext, std::uint64_t k, Elem x) {
  if (x == 0) return 0;
  const ExtElem t = ext.solve_quadratic(x);
  const ExtElem tk = ext.pow(t, k);
  const ExtElem value = ExtField::add(tk, ext.inv(tk));
  if (!ExtField::in_base(value)) {
    throw ConsistencyFailure("t^k + t^-k left the base field");  // cannot happen for a correct root
  }
  return value.lo;
}

Elem dickson_eval_recurrence(const Field& field, std::uint64_t k, Elem x) {
  if (k > kMaxRecurrenceDegree) {
    throw InvalidParameter("--k: recurrence evaluation is limited to k <= 2^20");
  }
  if (k == 0) return 0;
  Elem prev = 0;
  Elem cur = x;
  for (std::uint64_t i = 2; i <= k; ++i) {
    const Elem next = field.mul(x, cur) ^ prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::uint64_t dickson_inverse_exponent(std::uint64_t k, unsigned m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw InvalidParameter("--m: extension degree must lie in [2, 16], got " + std::to_string(m));
  }
  const std::int64_t n = static_cast<std::int64_t>((std::uint64_t{1} << (2 * m)) - 1);
  std::int64_t r0 = n;
  std::int64_t r1 = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(n));
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) {
    throw NotCoprime("--k: gcd(" + std::to_string(k) + ", 2^" + std::to_string(2 * m) + " - 1) = " +
                     std::to_string(r0) + ", no inverse exponent exists");
  }
  return static_cast<std::uint64_t>(((s0 % n) + n) % n);
}

}  // namespace psbent
