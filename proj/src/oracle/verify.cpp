#include "wreathlab/oracle/verify.hpp"

#include <map>
#include <sstream>

#include "wreathlab/error.hpp"
#include "wreathlab/oracle/series.hpp"

namespace wreathlab::oracle {

AbelianPGroup abelian_structure(const FiniteGroup& g, std::uint64_t p) {
  require_prime(p);
  if (!g.abelian()) throw DomainError(g.name() + " is not abelian");
  if (!is_p_power(g.order(), p)) {
    throw DomainError("group order " + std::to_string(g.order()) + " is not a power of " +
                      std::to_string(p));
  }
  // histogram of element orders p^e
  std::map<unsigned, std::uint64_t> by_log;
  for (Code x = 0; x < g.order(); ++x) ++by_log[log_p_exact(g.element_order(x), p)];
  unsigned vmax = by_log.rbegin()->first;

  // n_log[k] = log_p #{x : x^{p^k} = 1}; the counts are subgroup orders, so
  // exact p-powers.
  std::vector<unsigned> n_log(vmax + 1);
  std::uint64_t cum = 0;
  for (unsigned k = 0; k <= vmax; ++k) {
    cum += by_log.count(k) ? by_log[k] : 0;
    n_log[k] = log_p_exact(cum, p);
  }

  // m[k] = number of cyclic factors of exponent >= k; factor counts are the
  // successive differences.
  AbelianPGroup::FactorMap factors;
  for (unsigned e = 1; e <= vmax; ++e) {
    unsigned m_e = n_log[e] - n_log[e - 1];
    unsigned m_next = e < vmax ? n_log[e + 1] - n_log[e] : 0;
    if (m_e < m_next) throw Error("element-order statistics not abelian-consistent");
    if (m_e > m_next) factors[e] = m_e - m_next;
  }
  return AbelianPGroup::from_factors(p, std::move(factors));
}

std::uint64_t common_prime(const FiniteGroup& a, const FiniteGroup& b) {
  std::uint64_t n = a.order() > 1 ? a.order() : b.order();
  if (n == 1) throw DomainError("cannot infer a prime from two trivial groups");
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  if (!is_p_power(a.order(), p) || !is_p_power(b.order(), p)) {
    throw DomainError("group orders " + std::to_string(a.order()) + " and " +
                      std::to_string(b.order()) + " are not powers of a common prime");
  }
  return p;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << "oracle=";
  if (oracle_class) {
    os << *oracle_class;
  } else {
    os << "not-nilpotent";
  }
  os << " formula=" << formula_class << (equal ? " OK" : " MISMATCH");
  return os.str();
}

VerifyReport verify_shield(const GroupPtr& a, const GroupPtr& b, std::uint64_t p,
                           std::uint64_t size_limit) {
  ActiveProfile profile = profile_extract(*a, p);
  AbelianPGroup b_structure = abelian_structure(*b, p);
  if (b_structure.is_trivial()) throw DomainError("B must be non-trivial");

  GroupPtr w = wreath_product(a, b, size_limit);
  std::optional<std::uint32_t> oracle = nilpotency_class(*w);
  BigInt formula = shield_class(profile, b_structure);

  VerifyReport r{a->name(),  b->name(), p,       w->order(), oracle,
                 formula,    profile,   b_structure,
                 oracle.has_value() && BigInt(*oracle) == formula};
  return r;
}

}  // namespace wreathlab::oracle
