#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "ncx/errors.hpp"

namespace ncx {

// Exact rational numbers (arbitrary precision, always canonical).
using Rational = mpq_class;

enum class FieldKind { prime, cyclotomic };

namespace detail {
struct FieldData;
}

class Scalar;

// An exact coefficient field: either Z/p (p prime) or the cyclotomic field
// Q(zeta_n) = Q[x]/Phi_n(x) with rational coefficients.  Immutable and cheap
// to copy; all Scalars carry a reference to their field.
class Field {
 public:
  static Field prime(long p);        // throws Error unless p is prime
  static Field cyclotomic(int order);  // order >= 1; order 1 gives plain Q

  FieldKind kind() const;
  bool is_prime_field() const { return kind() == FieldKind::prime; }
  long modulus() const;  // prime fields only
  int order() const;     // cyclotomic order n
  int degree() const;    // dimension over Q (= phi(order)); 1 for prime fields
  // Monic minimal polynomial Phi_order, coefficients low-to-high.
  const std::vector<Rational>& minimal_polynomial() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const Rational& v) const;
  // Cyclotomic element from polynomial coefficients in zeta (any length;
  // reduced mod Phi_order).  Errors on prime fields.
  Scalar from_coeffs(const std::vector<Rational>& c) const;
  Scalar zeta() const;  // the class of x; cyclotomic fields only

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string describe() const;  // "zmod:7" or "cyclotomic:3"

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d);
  std::shared_ptr<const detail::FieldData> data_;
  friend class Scalar;
};

// An element of a Field.  Value type with exact arithmetic; operations
// require both operands to belong to the same field.
class Scalar {
 public:
  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws Error on division by zero
  Scalar operator-() const;
  Scalar inv() const;          // throws Error on zero
  Scalar pow(long e) const;    // negative e via inverse

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical representation accessors.
  long residue() const;                         // prime fields: value in [0,p)
  const std::vector<Rational>& coeffs() const;  // cyclotomic: length = degree

  std::string str() const;  // canonical human-readable form

 private:
  Scalar(Field f, long r);
  Scalar(Field f, std::vector<Rational> c);
  Field field_;
  long r_ = 0;                 // prime-field residue
  std::vector<Rational> c_;    // cyclotomic coefficients (length = degree)
  friend class Field;
};

// The ambient data of the whole theory: a field k, a distinguished q in k and
// the nilpotency order N of the differential.
struct QContext {
  Field field;
  Scalar q;
  int N;
};

// Validates N >= 2 and that q lives in the field.
QContext make_context(Field field, Scalar q, int N);

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.  Negative n is supported through
// [-n]_q = -q^{-n} [n]_q (requires q invertible).
Scalar q_number(const QContext& ctx, long n);

// [n]_q! = [1]_q [2]_q ... [n]_q for n >= 0 ([0]_q! = 1).
Scalar q_factorial(const QContext& ctx, long n);

// Gaussian binomial, defined by the recursion
//   [n,0] = [n,n] = 1,   [n,m] + q^{m+1} [n,m+1] = [n+1,m+1],
// not by the factorial quotient (valid even when q-numbers are singular).
// Requires 0 <= m <= n.
Scalar q_binomial(const QContext& ctx, long n, long m);

struct Assumptions {
  bool a0 = false;          // [N]_q = 0
  bool a1 = false;          // a0 and [n]_q invertible for 1 <= n <= N-1
  bool q_pow_n_is_one = false;  // q^N = 1 (reported when a0 holds)
};

Assumptions check_assumptions(const QContext& ctx);

// Throw AssumptionViolation unless (A0) resp. (A1) holds.
void require_a0(const QContext& ctx);
void require_a1(const QContext& ctx);

}  // namespace ncx
