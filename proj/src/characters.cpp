#include "cmfield/characters.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "cmfield/errors.hpp"

namespace cmfield {

DlogTable::DlogTable(std::int64_t m)
    : group_(unit_group(m)),
      logs_(static_cast<std::size_t>(m) * group_.rank() + 1, 0),  // never empty, so log() of a unit is non-null
      unit_(static_cast<std::size_t>(m), false) {
  const std::size_t rank = group_.rank();
  std::vector<std::int64_t> digits(rank, 0);
  // Precomputed generator powers keep the walk O(phi(m) * rank).
  std::vector<std::vector<std::int64_t>> powers(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    powers[i].resize(static_cast<std::size_t>(group_.orders[i]));
    std::int64_t x = 1 % m;
    for (auto& p : powers[i]) {
      p = x;
      x = x * group_.generators[i] % m;
    }
  }
  const std::int64_t total = group_.group_order();
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t r = 1 % m;
    for (std::size_t i = 0; i < rank; ++i) r = r * powers[i][static_cast<std::size_t>(digits[i])] % m;
    const auto ur = static_cast<std::size_t>(r);
    if (unit_[ur]) throw InternalInconsistency("DlogTable: generators are not independent mod " + std::to_string(m));
    unit_[ur] = true;
    std::copy(digits.begin(), digits.end(), logs_.begin() + static_cast<std::ptrdiff_t>(ur * rank));
    for (std::size_t i = 0; i < rank; ++i) {
      if (++digits[i] < group_.orders[i]) break;
      digits[i] = 0;
    }
  }
}

const std::int64_t* DlogTable::log(std::int64_t a) const {
  const auto r = static_cast<std::size_t>(mod(a, group_.modulus));
  if (!unit_[r]) return nullptr;
  return logs_.data() + r * group_.rank();
}

std::shared_ptr<const DlogTable> dlog_table(std::int64_t m) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const DlogTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is harmless.
  auto table = std::make_shared<const DlogTable>(m);
  std::lock_guard lock(mu);
  return cache.try_emplace(m, std::move(table)).first->second;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const DlogTable> table,
                                       std::vector<std::int64_t> exponents)
    : table_(std::move(table)), exponents_(std::move(exponents)) {
  const auto& g = table_->group();
  group_exponent_ = g.exponent();
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    exponents_[i] = mod(exponents_[i], g.orders[i]);
    order_ = std::lcm(order_, g.orders[i] / std::gcd(g.orders[i], exponents_[i]));
  }
}

std::optional<std::int64_t> DirichletCharacter::exponent_at(std::int64_t a) const {
  const std::int64_t* l = table_->log(a);
  if (l == nullptr) return std::nullopt;
  const auto& orders = table_->group().orders;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    s = (s + l[i] * exponents_[i] % orders[i] * (group_exponent_ / orders[i])) % group_exponent_;
  return s / (group_exponent_ / order_);
}

DirichletCharacter make_character(std::int64_t m, std::vector<std::int64_t> exponents) {
  auto table = dlog_table(m);
  if (exponents.size() != table->group().rank())
    throw LengthMismatch("make_character: modulus " + std::to_string(m) + " needs " +
                         std::to_string(table->group().rank()) + " exponents, got " +
                         std::to_string(exponents.size()));
  return DirichletCharacter(std::move(table), std::move(exponents));
}

DirichletCharacter principal_character(std::int64_t m) {
  return make_character(m, std::vector<std::int64_t>(unit_group(m).rank(), 0));
}

std::vector<DirichletCharacter> all_characters(std::int64_t m) {
  const auto g = unit_group(m);
  std::vector<DirichletCharacter> out;
  std::vector<std::int64_t> digits(g.rank(), 0);
  const std::int64_t total = g.group_order();
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    out.push_back(make_character(m, digits));
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (++digits[i] < g.orders[i]) break;
      digits[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycNumber evaluate(const DirichletCharacter& chi, std::int64_t a) {
  auto t = chi.exponent_at(a);
  if (!t) return CycNumber(chi.order());
  return CycNumber::zeta_power(chi.order(), *t);
}

std::int64_t conductor(const DirichletCharacter& chi) {
  const std::int64_t m = chi.modulus();
  if (chi.is_principal()) return 1;
  for (std::int64_t f : divisors(m)) {
    bool trivial = true;
    for (std::int64_t k = 0; k < m / f; ++k) {
      auto t = chi.exponent_at(1 + k * f);
      if (t && *t != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) return f;
  }
  return m;
}

int parity(const DirichletCharacter& chi) {
  auto t = chi.exponent_at(-1);
  // chi(-1) = +-1, so t is 0 or order/2.
  return (t && *t != 0) ? -1 : 1;
}

DirichletCharacter change_modulus(const DirichletCharacter& chi, std::int64_t n) {
  const std::int64_t m = chi.modulus();
  if (n == m) return chi;
  if (n % m != 0 && n % conductor(chi) != 0)
    throw PreconditionViolated("change_modulus: character mod " + std::to_string(m) +
                               " does not factor through modulus " + std::to_string(n));
  const auto g = unit_group(n);
  std::vector<std::int64_t> exps(g.rank());
  const std::int64_t ord = chi.order();
  for (std::size_t j = 0; j < g.rank(); ++j) {
    std::int64_t a = g.generators[j];
    while (std::gcd(a, m) != 1) a += n;
    const std::int64_t t = *chi.exponent_at(a);
    if (t * g.orders[j] % ord != 0)
      throw InternalInconsistency("change_modulus: value order does not divide generator order");
    exps[j] = t * g.orders[j] / ord;
  }
  auto out = make_character(n, std::move(exps));
  if (out.order() != ord) throw InternalInconsistency("change_modulus: order changed");
  return out;
}

DirichletCharacter primitive(const DirichletCharacter& chi) { return change_modulus(chi, conductor(chi)); }

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b) {
  const std::int64_t m = lcm(a.modulus(), b.modulus());
  const auto x = change_modulus(a, m);
  const auto y = change_modulus(b, m);
  std::vector<std::int64_t> exps(x.exponents().size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = x.exponents()[i] + y.exponents()[i];
  return make_character(m, std::move(exps));
}

DirichletCharacter char_pow(const DirichletCharacter& chi, std::int64_t k) {
  std::vector<std::int64_t> exps(chi.exponents());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = mod(exps[i] * mod(k, chi.group().orders[i]), chi.group().orders[i]);
  return make_character(chi.modulus(), std::move(exps));
}

DirichletCharacter char_inverse(const DirichletCharacter& chi) { return char_pow(chi, -1); }

DirichletCharacter kronecker_character(std::int64_t d) {
  if (!is_fundamental_discriminant(d))
    throw NotFundamentalDiscriminant(std::to_string(d) + " is not a fundamental discriminant");
  const std::int64_t m = d < 0 ? -d : d;
  const auto g = unit_group(m);
  std::vector<std::int64_t> exps(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const int k = kronecker(d, g.generators[i]);
    if (k == 0) throw InternalInconsistency("kronecker_character: generator not coprime");
    exps[i] = k == 1 ? 0 : g.orders[i] / 2;
  }
  return make_character(m, std::move(exps));
}

std::vector<std::vector<DirichletCharacter>> galois_orbits(const std::vector<DirichletCharacter>& s) {
  std::vector<DirichletCharacter> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::set<DirichletCharacter> seen;
  std::vector<std::vector<DirichletCharacter>> orbits;
  for (const auto& chi : sorted) {
    if (seen.contains(chi)) continue;
    std::set<DirichletCharacter> orbit;
    for (std::int64_t k = 1; k <= std::max<std::int64_t>(chi.order(), 1); ++k) {
      if (std::gcd(k, chi.order()) != 1) continue;
      auto c = char_pow(chi, k);
      if (!std::binary_search(sorted.begin(), sorted.end(), c))
        throw NotClosed("galois_orbits: set not closed under Galois conjugation (" + encode(c) + " missing)");
      orbit.insert(std::move(c));
    }
    seen.insert(orbit.begin(), orbit.end());
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

std::string encode(const DirichletCharacter& chi) {
  std::string out = "f=" + std::to_string(chi.modulus()) + ":e=";
  for (std::size_t i = 0; i < chi.exponents().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(chi.exponents()[i]);
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text, std::size_t& pos, std::size_t base_offset) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
  if (ec != std::errc()) throw ParseError(base_offset + pos, "integer");
  pos = static_cast<std::size_t>(ptr - text.data());
  return v;
}

}  // namespace

DirichletCharacter decode_character(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, 2) != "f=") throw ParseError(0, "'f='");
  pos = 2;
  const std::int64_t m = parse_int(text, pos, 0);
  if (m < 1) throw ParseError(2, "positive modulus");
  if (text.substr(pos, 3) != ":e=") throw ParseError(pos, "':e='");
  pos += 3;
  std::vector<std::int64_t> exps;
  if (pos < text.size()) {
    while (true) {
      exps.push_back(parse_int(text, pos, 0));
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError(pos, "',' or end of character");
      ++pos;
    }
  }
  try {
    return make_character(m, std::move(exps));
  } catch (const LengthMismatch&) {
    throw ParseError(pos, std::to_string(unit_group(m).rank()) + " exponents for modulus " + std::to_string(m));
  }
}

}  // namespace cmfield
