#include "cmfield/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cmfield/errors.hpp"

namespace cmfield {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of a by the monic polynomial b.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw InternalInconsistency("divide_exact: degree too small");
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw InternalInconsistency("divide_exact: nonzero remainder");
  return q;
}

Poly cyclotomic_memo(std::int64_t e, std::map<std::int64_t, Poly>& memo) {
  if (auto it = memo.find(e); it != memo.end()) return it->second;
  Poly p(static_cast<std::size_t>(e) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(e)] = 1;
  for (std::int64_t d : divisors(e))
    if (d != e) p = divide_exact(std::move(p), cyclotomic_memo(d, memo));
  memo.emplace(e, p);
  return p;
}

void reduce(std::vector<BigInt>& v, const CycContext& ctx) {
  const auto deg = static_cast<std::size_t>(ctx.degree);
  BigInt c;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    c = v[i];
    for (auto [j, coef] : ctx.phi_terms) {
      if (coef > 0)
        mpz_submul_ui(v[i - deg + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(coef));
      else
        mpz_addmul_ui(v[i - deg + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-coef));
    }
  }
  v.resize(deg);
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t e) {
  if (e < 1) throw PreconditionViolated("cyclotomic_polynomial: e must be positive");
  std::map<std::int64_t, Poly> memo;
  return cyclotomic_memo(e, memo);
}

std::shared_ptr<const CycContext> cyclotomic_context(std::int64_t e) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const CycContext>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<CycContext>();
  ctx->level = e;
  ctx->phi_coeffs = cyclotomic_polynomial(e);
  ctx->degree = static_cast<std::int64_t>(ctx->phi_coeffs.size()) - 1;
  for (std::size_t j = 0; j + 1 < ctx->phi_coeffs.size(); ++j)
    if (ctx->phi_coeffs[j] != 0) ctx->phi_terms.emplace_back(j, ctx->phi_coeffs[j]);
  std::lock_guard lock(mu);
  return cache.try_emplace(e, std::move(ctx)).first->second;
}

CycNumber::CycNumber(std::shared_ptr<const CycContext> ctx, std::vector<BigInt> num, BigInt den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycNumber::CycNumber(std::int64_t level)
    : ctx_(cyclotomic_context(level)), num_(static_cast<std::size_t>(ctx_->degree)), den_(1) {}

CycNumber::CycNumber(std::int64_t level, const Rational& constant) : CycNumber(level) {
  num_[0] = constant.get_num();
  den_ = constant.get_den();
}

CycNumber::CycNumber(std::int64_t level, const std::vector<Rational>& coords) : CycNumber(level) {
  if (coords.size() != num_.size()) throw LengthMismatch("CycNumber: expected phi(level) coordinates");
  BigInt den = 1;
  for (const auto& c : coords) den = den / gcd(den, c.get_den()) * c.get_den();
  for (std::size_t i = 0; i < coords.size(); ++i) num_[i] = coords[i].get_num() * (den / coords[i].get_den());
  den_ = den;
  normalize();
}

CycNumber CycNumber::zeta(std::int64_t level) { return zeta_power(level, 1); }

CycNumber CycNumber::zeta_power(std::int64_t level, std::int64_t k) {
  std::vector<BigInt> sums(static_cast<std::size_t>(level));
  sums[static_cast<std::size_t>(mod(k, level))] = 1;
  return from_exponent_sums(level, std::move(sums));
}

CycNumber CycNumber::from_exponent_sums(std::int64_t level, std::vector<BigInt> sums, BigInt den) {
  if (den == 0) throw DivisionByZero("from_exponent_sums: zero denominator");
  auto ctx = cyclotomic_context(level);
  if (sums.size() < static_cast<std::size_t>(ctx->degree)) sums.resize(static_cast<std::size_t>(ctx->degree));
  reduce(sums, *ctx);
  if (den < 0) {
    den = -den;
    for (auto& s : sums) s = -s;
  }
  return CycNumber(std::move(ctx), std::move(sums), std::move(den));
}

void CycNumber::normalize() {
  BigInt g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycNumber::require_same_level(const CycNumber& o, const char* op) const {
  if (level() != o.level())
    throw PreconditionViolated(std::string("CycNumber ") + op + ": levels differ (" +
                               std::to_string(level()) + " vs " + std::to_string(o.level()) + ")");
}

Rational CycNumber::coeff(std::size_t i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycNumber::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> CycNumber::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return std::nullopt;
  return coeff(0);
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  require_same_level(o, "add");
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  require_same_level(o, "mul");
  const std::size_t n = num_.size();
  std::vector<BigInt> prod(n == 0 ? 0 : 2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
  }
  reduce(prod, *ctx_);
  num_ = std::move(prod);
  den_ *= o.den_;
  normalize();
  return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& o) {
  require_same_level(o, "div");
  if (o.is_zero()) throw DivisionByZero("CycNumber division by zero");
  // 1/o = (product of the other conjugates) / N(o)
  const std::int64_t e = level();
  CycNumber others(e, Rational(1));
  for (std::int64_t k = 2; k < e; ++k)
    if (std::gcd(k, e) == 1) others *= galois_apply(k, o);
  const auto norm = (others * o).as_rational();
  if (!norm) throw InternalInconsistency("CycNumber division: norm not rational");
  *this *= others;
  *this *= Rational(1) / *norm;
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& r) {
  for (auto& c : num_) c *= r.get_num();
  den_ *= r.get_den();
  normalize();
  return *this;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  return a.level() == b.level() && a.den_ == b.den_ && a.num_ == b.num_;
}

bool operator==(const CycNumber& a, const Rational& r) {
  auto v = a.as_rational();
  return v && *v == r;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const Rational c = coeff(i);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Rational a = abs(c);
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << level();
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycNumber cyc_arith(const CycNumber& a, const CycNumber& b, CycOp op) {
  switch (op) {
    case CycOp::add: return a + b;
    case CycOp::sub: return a - b;
    case CycOp::mul: return a * b;
    case CycOp::div: return a / b;
  }
  throw PreconditionViolated("cyc_arith: unknown op");
}

CycNumber galois_apply(std::int64_t k, const CycNumber& x) {
  const std::int64_t e = x.level();
  if (std::gcd(mod(k, e), e) != 1 && e != 1)
    throw NotCoprime("galois_apply: " + std::to_string(k) + " not coprime to " + std::to_string(e));
  const std::int64_t kk = mod(k, e);
  std::vector<BigInt> v(static_cast<std::size_t>(e));
  for (std::size_t i = 0; i < x.num_.size(); ++i)
    if (x.num_[i] != 0) v[static_cast<std::size_t>(static_cast<std::int64_t>(i) * kk % e)] += x.num_[i];
  reduce(v, *x.ctx_);
  return CycNumber(x.ctx_, std::move(v), x.den_);
}

CycNumber lift(const CycNumber& x, std::int64_t new_level) {
  if (new_level % x.level() != 0)
    throw PreconditionViolated("lift: " + std::to_string(x.level()) + " does not divide " +
                               std::to_string(new_level));
  const std::int64_t step = new_level / x.level();
  auto ctx = cyclotomic_context(new_level);
  std::vector<BigInt> v(static_cast<std::size_t>(std::max(new_level, ctx->degree)));
  for (std::size_t i = 0; i < x.num_.size(); ++i) v[i * static_cast<std::size_t>(step)] = x.num_[i];
  reduce(v, *ctx);
  return CycNumber(std::move(ctx), std::move(v), x.den_);
}

Rational absolute_norm(const CycNumber& x) {
  const std::int64_t e = x.level();
  CycNumber prod = x;
  for (std::int64_t k = 2; k < e; ++k)
    if (std::gcd(k, e) == 1) prod *= galois_apply(k, x);
  auto r = prod.as_rational();
  if (!r) throw InternalInconsistency("absolute_norm: product of conjugates is not rational");
  return *r;
}

CycNumber pi_element(int m) {
  if (m < 2) throw PreconditionViolated("pi_element: m must be at least 2");
  const std::int64_t e = ipow(2, m);
  return CycNumber(e, Rational(2)) + CycNumber::zeta_power(e, 1) + CycNumber::zeta_power(e, -1);
}

}  // namespace cmfield
