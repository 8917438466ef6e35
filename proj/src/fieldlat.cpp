#include "cmfield/fieldlat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cmfield/errors.hpp"

namespace cmfield {

namespace {

DirichletCharacter mul_same_modulus(const DirichletCharacter& a, const DirichletCharacter& b) {
  std::vector<std::int64_t> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
  return make_character(a.modulus(), std::move(e));
}

// Closure of gens (all at modulus m) under multiplication.
std::vector<DirichletCharacter> closure(std::int64_t m, const std::vector<DirichletCharacter>& gens,
                                        std::size_t max_degree) {
  std::set<DirichletCharacter> seen{principal_character(m)};
  std::vector<DirichletCharacter> queue{principal_character(m)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      auto y = mul_same_modulus(queue[head], g);
      if (seen.insert(y).second) {
        if (seen.size() > max_degree)
          throw DegreeBoundExceeded("field degree exceeds bound " + std::to_string(max_degree));
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

bool AbelianField::contains(const DirichletCharacter& chi) const {
  if (chi.modulus() != conductor_) {
    if (conductor_ % cmfield::conductor(chi) != 0) return false;
    return std::binary_search(chars_.begin(), chars_.end(), change_modulus(chi, conductor_));
  }
  return std::binary_search(chars_.begin(), chars_.end(), chi);
}

AbelianField field_from_generators(const std::vector<DirichletCharacter>& gens, std::size_t max_degree) {
  if (gens.empty()) throw PreconditionViolated("field_from_generators: no generators");
  std::int64_t f = 1;
  for (const auto& g : gens) f = lcm(f, conductor(g));
  std::vector<DirichletCharacter> lifted;
  lifted.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_principal()) lifted.push_back(change_modulus(g, f));
  return AbelianField(f, closure(f, lifted, max_degree));
}

AbelianField rational_field() { return field_from_generators({principal_character(1)}); }

AbelianField cyclotomic_field(std::int64_t m, std::size_t max_degree) {
  if (m < 1) throw PreconditionViolated("cyclotomic_field: m must be positive");
  if (m % 4 == 2) m /= 2;
  if (static_cast<std::size_t>(euler_phi(m)) > max_degree)
    throw DegreeBoundExceeded("Q(zeta_" + std::to_string(m) + ") has degree " +
                              std::to_string(euler_phi(m)) + " > " + std::to_string(max_degree));
  const auto g = unit_group(m);
  std::vector<DirichletCharacter> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<std::int64_t> e(g.rank(), 0);
    e[i] = 1;
    gens.push_back(make_character(m, std::move(e)));
  }
  if (gens.empty()) return rational_field();
  return field_from_generators(gens, max_degree);
}

AbelianField quadratic_field(std::int64_t d) { return field_from_generators({kronecker_character(d)}); }

std::vector<DirichletCharacter> generators_of(const AbelianField& k) {
  std::vector<DirichletCharacter> gens;
  std::set<DirichletCharacter> span{principal_character(k.conductor())};
  for (const auto& chi : k.characters()) {
    if (span.contains(chi)) continue;
    gens.push_back(chi);
    auto c = closure(k.conductor(), gens, k.degree());
    span = std::set<DirichletCharacter>(c.begin(), c.end());
  }
  return gens;
}

std::vector<DirichletCharacter> odd_characters(const AbelianField& k) {
  std::vector<DirichletCharacter> out;
  for (const auto& chi : k.characters())
    if (is_odd(chi)) out.push_back(chi);
  return out;
}

bool is_cm(const AbelianField& k) {
  return std::any_of(k.characters().begin(), k.characters().end(), [](const auto& c) { return is_odd(c); });
}

AbelianField maximal_real_subfield(const AbelianField& k) {
  std::vector<DirichletCharacter> even;
  for (const auto& chi : k.characters())
    if (!is_odd(chi)) even.push_back(chi);
  return field_from_generators(even, k.degree());
}

std::int64_t roots_of_unity_order(const AbelianField& k) {
  auto divs = divisors(k.conductor());
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const std::int64_t n = *it;
    if (n % 4 == 2) continue;
    const auto g = unit_group(n);
    bool full = true;
    for (std::size_t i = 0; i < g.rank() && full; ++i) {
      std::vector<std::int64_t> e(g.rank(), 0);
      e[i] = 1;
      full = k.contains(make_character(n, std::move(e)));
    }
    if (full) return n % 2 == 0 ? n : 2 * n;
  }
  return 2;
}

AbelianField compositum(const AbelianField& a, const AbelianField& b, std::size_t max_degree) {
  auto gens = generators_of(a);
  for (auto& g : generators_of(b)) gens.push_back(std::move(g));
  if (gens.empty()) return rational_field();
  return field_from_generators(gens, max_degree);
}

AbelianField intersection(const AbelianField& a, const AbelianField& b) {
  std::vector<DirichletCharacter> common;
  for (const auto& chi : a.characters())
    if (b.contains(chi)) common.push_back(chi);
  return field_from_generators(common, a.degree());
}

bool is_subfield(const AbelianField& k, const AbelianField& l) {
  if (l.conductor() % k.conductor() != 0) return false;
  return std::all_of(k.characters().begin(), k.characters().end(),
                     [&](const auto& chi) { return l.contains(chi); });
}

namespace {

// chi restricted to the i-th prime-power component of its modulus.
DirichletCharacter project(const DirichletCharacter& chi, const UnitGroupStructure::Component& c) {
  std::vector<std::int64_t> e(chi.exponents().size(), 0);
  for (std::size_t j = c.first_generator; j < c.first_generator + c.generator_count; ++j)
    e[j] = chi.exponents()[j];
  return make_character(chi.modulus(), std::move(e));
}

}  // namespace

std::optional<std::vector<AbelianField>> prime_power_decomposition(const AbelianField& k) {
  const auto g = unit_group(k.conductor());
  std::vector<AbelianField> parts;
  std::size_t product = 1;
  for (const auto& c : g.components) {
    std::vector<DirichletCharacter> proj;
    for (const auto& chi : k.characters()) proj.push_back(project(chi, c));
    auto part = field_from_generators(proj, k.degree() * k.degree());
    product *= part.degree();
    parts.push_back(std::move(part));
  }
  if (parts.empty()) return std::vector<AbelianField>{k};
  if (product != k.degree()) return std::nullopt;
  return parts;
}

AbelianField two_primary_subfield(const AbelianField& k) {
  std::vector<DirichletCharacter> sylow;
  for (const auto& chi : k.characters())
    if (is_power_of_two(chi.order())) sylow.push_back(chi);
  return field_from_generators(sylow, k.degree());
}

std::int64_t character_exponent(const AbelianField& k) {
  std::int64_t e = 1;
  for (const auto& chi : k.characters()) e = std::lcm(e, chi.order());
  return e;
}

bool is_cyclic(const AbelianField& k) {
  return static_cast<std::size_t>(character_exponent(k)) == k.degree();
}

std::vector<AbelianField> all_subfields(const AbelianField& k) {
  const auto& x = k.characters();
  const std::size_t n = x.size();
  // Subgroups as sorted index sets.
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = mul_same_modulus(x[i], x[j]);
      mult[i][j] = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), prod) - x.begin());
    }
  // <H, g> is the union of the cosets g^k H.
  auto join = [&](const std::vector<std::size_t>& h, std::size_t g) {
    std::set<std::size_t> s(h.begin(), h.end());
    std::vector<std::size_t> coset(h);
    while (true) {
      for (auto& c : coset) c = mult[c][g];
      if (s.contains(coset.front())) break;
      s.insert(coset.begin(), coset.end());
    }
    return std::vector<std::size_t>(s.begin(), s.end());
  };
  const std::size_t principal_index = static_cast<std::size_t>(
      std::lower_bound(x.begin(), x.end(), principal_character(k.conductor())) - x.begin());
  std::set<std::vector<std::size_t>> found{{principal_index}};
  std::vector<std::vector<std::size_t>> queue{{principal_index}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto h = queue[head];
    for (std::size_t g = 0; g < n; ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      auto j = join(h, g);
      if (found.insert(j).second) queue.push_back(std::move(j));
    }
  }
  std::vector<AbelianField> out;
  for (const auto& h : found) {
    std::vector<DirichletCharacter> chars;
    for (std::size_t i : h) chars.push_back(x[i]);
    out.push_back(field_from_generators(chars, k.degree()));
  }
  std::sort(out.begin(), out.end(), [](const AbelianField& a, const AbelianField& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a.characters() < b.characters();
  });
  return out;
}

std::int64_t quadratic_discriminant(const AbelianField& k) {
  if (k.degree() != 2) throw PreconditionViolated("quadratic_discriminant: field is not quadratic");
  for (const auto& chi : k.characters())
    if (!chi.is_principal()) return is_odd(chi) ? -k.conductor() : k.conductor();
  throw InternalInconsistency("quadratic field without a nontrivial character");
}

std::string describe(const AbelianField& k) {
  if (k.degree() == 1) return "Q";
  if (k.degree() == 2) {
    const std::int64_t d = quadratic_discriminant(k);
    return "Q(sqrt(" + std::to_string(d % 4 == 0 ? d / 4 : d) + "))";
  }
  if (static_cast<std::int64_t>(k.degree()) == euler_phi(k.conductor()))
    return "Q(zeta_" + std::to_string(k.conductor()) + ")";
  return "field(conductor=" + std::to_string(k.conductor()) + ",degree=" + std::to_string(k.degree()) + ")";
}

}  // namespace cmfield
