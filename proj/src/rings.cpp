#include "ncx/rings.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace ncx {

namespace detail {

struct FieldData {
  FieldKind kind;
  long p = 0;                  // prime modulus
  int order = 0;               // cyclotomic order
  std::vector<Rational> phi;   // minimal polynomial, low-to-high, monic
};

namespace {

// ----- dense polynomials over Q, low-to-high coefficients -----

using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw Error("division by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_scale(Poly a, const Rational& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Cyclotomic polynomial Phi_n by iterated exact division:
// x^n - 1 = prod_{d | n} Phi_d.
Poly cyclotomic_poly(int n) {
  static std::map<int, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly f(n + 1, Rational(0));
  f[0] = -1;
  f[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = poly_divmod(f, cyclotomic_poly(d));
    if (!r.empty()) throw Error("cyclotomic polynomial division left a remainder");
    f = q;
  }
  cache[n] = f;
  return f;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a = g mod b, g = gcd(a, b)
// normalized monic.  Only u is needed (inverse of a mod b when g = 1).
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly b) {
  Poly u0 = {Rational(1)}, u1 = {};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    a = b;
    b = r;
    u0 = u1;
    u1 = u2;
  }
  if (a.empty()) return {a, u0};
  Rational lead = a.back();
  return {poly_scale(a, Rational(1) / lead), poly_scale(u0, Rational(1) / lead)};
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_inverse(long a, long p) {
  long t = 0, newt = 1, r = p, newr = a % p;
  if (newr < 0) newr += p;
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw Error("element has no inverse mod " + std::to_string(p));
  return ((t % p) + p) % p;
}

}  // namespace
}  // namespace detail

using detail::FieldData;

Field::Field(std::shared_ptr<const FieldData> d) : data_(std::move(d)) {}

Field Field::prime(long p) {
  if (!detail::is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  auto d = std::make_shared<FieldData>();
  d->kind = FieldKind::prime;
  d->p = p;
  return Field(std::move(d));
}

Field Field::cyclotomic(int order) {
  if (order < 1) throw Error("cyclotomic order must be >= 1");
  auto d = std::make_shared<FieldData>();
  d->kind = FieldKind::cyclotomic;
  d->order = order;
  d->phi = detail::cyclotomic_poly(order);
  return Field(std::move(d));
}

FieldKind Field::kind() const { return data_->kind; }

long Field::modulus() const {
  if (kind() != FieldKind::prime) throw Error("modulus() on a non-prime field");
  return data_->p;
}

int Field::order() const {
  if (kind() != FieldKind::cyclotomic) throw Error("order() on a non-cyclotomic field");
  return data_->order;
}

int Field::degree() const {
  return kind() == FieldKind::prime ? 1 : static_cast<int>(data_->phi.size()) - 1;
}

const std::vector<Rational>& Field::minimal_polynomial() const {
  if (kind() != FieldKind::cyclotomic) throw Error("minimal_polynomial() on a prime field");
  return data_->phi;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  if (kind() == FieldKind::prime) {
    long p = data_->p;
    long r = v % p;
    if (r < 0) r += p;
    return Scalar(*this, r);
  }
  std::vector<Rational> c(degree(), Rational(0));
  if (degree() > 0) c[0] = Rational(v);
  return Scalar(*this, std::move(c));
}

Scalar Field::from_rational(const Rational& v) const {
  if (kind() == FieldKind::prime) {
    long p = data_->p;
    mpz_class num = v.get_num() % p;
    mpz_class den = v.get_den() % p;
    long n = num.get_si() % p;
    if (n < 0) n += p;
    long d = den.get_si() % p;
    if (d < 0) d += p;
    if (d == 0) throw Error("denominator not invertible mod " + std::to_string(p));
    return Scalar(*this, n * detail::mod_inverse(d, p) % p);
  }
  std::vector<Rational> c(degree(), Rational(0));
  if (degree() > 0) c[0] = v;
  return Scalar(*this, std::move(c));
}

Scalar Field::from_coeffs(const std::vector<Rational>& c) const {
  if (kind() != FieldKind::cyclotomic) throw Error("from_coeffs() on a prime field");
  detail::Poly a = c;
  detail::trim(a);
  a = detail::poly_mod(a, data_->phi);
  a.resize(degree(), Rational(0));
  return Scalar(*this, std::move(a));
}

Scalar Field::zeta() const {
  if (kind() != FieldKind::cyclotomic) throw Error("zeta() on a prime field");
  std::vector<Rational> c(1 + 1, Rational(0));
  c[1] = 1;
  return from_coeffs(c);
}

bool Field::operator==(const Field& o) const {
  if (data_ == o.data_) return true;
  if (kind() != o.kind()) return false;
  return kind() == FieldKind::prime ? data_->p == o.data_->p
                                    : data_->order == o.data_->order;
}

std::string Field::describe() const {
  return kind() == FieldKind::prime ? "zmod:" + std::to_string(data_->p)
                                    : "cyclotomic:" + std::to_string(data_->order);
}

// ----- Scalar -----

Scalar::Scalar(Field f, long r) : field_(std::move(f)), r_(r) {}
Scalar::Scalar(Field f, std::vector<Rational> c)
    : field_(std::move(f)), c_(std::move(c)) {}

bool Scalar::is_zero() const {
  if (field_.kind() == FieldKind::prime) return r_ == 0;
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool Scalar::is_one() const { return *this == field_.one(); }

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) throw Error("scalar operands from different fields");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(*this, o);
  if (field_.kind() == FieldKind::prime)
    return Scalar(field_, (r_ + o.r_) % field_.modulus());
  std::vector<Rational> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (field_.kind() == FieldKind::prime)
    return Scalar(field_, r_ == 0 ? 0 : field_.modulus() - r_);
  std::vector<Rational> c(c_);
  for (auto& x : c) x = -x;
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(*this, o);
  if (field_.kind() == FieldKind::prime)
    return Scalar(field_, (r_ * o.r_) % field_.modulus());
  detail::Poly prod = detail::poly_mul(c_, o.c_);
  prod = detail::poly_mod(prod, field_.minimal_polynomial());
  prod.resize(field_.degree(), Rational(0));
  return Scalar(field_, std::move(prod));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("inverse of zero");
  if (field_.kind() == FieldKind::prime)
    return Scalar(field_, detail::mod_inverse(r_, field_.modulus()));
  detail::Poly a = c_;
  detail::trim(a);
  auto [g, u] = detail::poly_half_ext_gcd(a, field_.minimal_polynomial());
  if (g.size() != 1) throw Error("element not invertible in cyclotomic field");
  u = detail::poly_scale(u, Rational(1) / g[0]);
  u = detail::poly_mod(u, field_.minimal_polynomial());
  u.resize(field_.degree(), Rational(0));
  return Scalar(field_, std::move(u));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result = field_.one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(*this, o);
  return field_.kind() == FieldKind::prime ? r_ == o.r_ : c_ == o.c_;
}

long Scalar::residue() const {
  if (field_.kind() != FieldKind::prime) throw Error("residue() on cyclotomic scalar");
  return r_;
}

const std::vector<Rational>& Scalar::coeffs() const {
  if (field_.kind() != FieldKind::cyclotomic) throw Error("coeffs() on prime-field scalar");
  return c_;
}

std::string Scalar::str() const {
  if (field_.kind() == FieldKind::prime) return std::to_string(r_);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (any) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

// ----- QContext and q-calculus -----

QContext make_context(Field field, Scalar q, int N) {
  if (N < 2) throw Error("context needs N >= 2");
  if (q.field() != field) throw Error("q does not belong to the context field");
  return QContext{std::move(field), std::move(q), N};
}

Scalar q_number(const QContext& ctx, long n) {
  if (n < 0) return -(ctx.q.pow(n) * q_number(ctx, -n));
  Scalar s = ctx.field.zero();
  Scalar p = ctx.field.one();
  for (long k = 0; k < n; ++k) {
    s = s + p;
    p = p * ctx.q;
  }
  return s;
}

Scalar q_factorial(const QContext& ctx, long n) {
  if (n < 0) throw Error("q_factorial needs n >= 0");
  Scalar r = ctx.field.one();
  for (long k = 1; k <= n; ++k) r = r * q_number(ctx, k);
  return r;
}

Scalar q_binomial(const QContext& ctx, long n, long m) {
  if (n < 1 || m < 0 || m > n) throw Error("q_binomial needs 1 <= n and 0 <= m <= n");
  // Row-by-row evaluation of [n', m'] + q^{m'+1} [n', m'+1] = [n'+1, m'+1].
  std::vector<Scalar> row;
  row.reserve(static_cast<size_t>(n) + 1);
  row.push_back(ctx.field.one());  // [1, 0]
  row.push_back(ctx.field.one());  // [1, 1]
  for (long np = 1; np < n; ++np) {
    std::vector<Scalar> next;
    next.reserve(row.size() + 1);
    next.push_back(ctx.field.one());
    for (long mp = 1; mp <= np; ++mp)
      next.push_back(row[mp - 1] + ctx.q.pow(mp) * row[mp]);
    next.push_back(ctx.field.one());
    row = std::move(next);
  }
  return row[m];
}

Assumptions check_assumptions(const QContext& ctx) {
  Assumptions a;
  a.a0 = q_number(ctx, ctx.N).is_zero();
  a.a1 = a.a0;
  for (int n = 1; a.a1 && n < ctx.N; ++n)
    if (q_number(ctx, n).is_zero()) a.a1 = false;
  if (a.a0) a.q_pow_n_is_one = ctx.q.pow(ctx.N).is_one();
  return a;
}

void require_a0(const QContext& ctx) {
  if (!check_assumptions(ctx).a0)
    throw AssumptionViolation("[N]_q != 0 in " + ctx.field.describe() +
                              " with q = " + ctx.q.str() + ", N = " + std::to_string(ctx.N));
}

void require_a1(const QContext& ctx) {
  if (!check_assumptions(ctx).a1)
    throw AssumptionViolation("(A1) fails in " + ctx.field.describe() + " with q = " +
                              ctx.q.str() + ", N = " + std::to_string(ctx.N));
}

}  // namespace ncx
