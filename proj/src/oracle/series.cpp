#include "wreathlab/oracle/series.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wreathlab/error.hpp"

namespace wreathlab::oracle {

namespace {

void append_unique(std::vector<Code>& v, Code c) {
  if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
}

// Check [h, y] lands in s for every y in gens(G) and h over all of H
// (a seeded sample when H is large). Returns the escapees.
std::vector<Code> commutator_escapees(const FiniteGroup& g, const Subgroup& h,
                                      const Subgroup& s) {
  constexpr std::size_t kFullCheck = 4096;
  std::vector<Code> missing;
  auto check = [&](Code a) {
    for (Code y : g.generators()) {
      Code c = g.comm_code(a, y);
      if (!s.contains(c)) append_unique(missing, c);
    }
  };
  if (h.elements().size() <= kFullCheck) {
    for (Code a : h.elements()) check(a);
  } else {
    std::mt19937_64 rng(0xC0117ECDULL ^ h.elements().size());
    std::uniform_int_distribution<std::size_t> pick(0, h.elements().size() - 1);
    for (std::size_t i = 0; i < kFullCheck; ++i) check(h.elements()[pick(rng)]);
  }
  return missing;
}

}  // namespace

Subgroup commutator_with_group(const FiniteGroup& g, const Subgroup& h) {
  const std::vector<Code>& gg = g.generators();

  std::vector<Code> gens;
  for (Code a : h.generators()) {
    for (Code y : gg) append_unique(gens, g.comm_code(a, y));
  }
  Subgroup s = subgroup_closure(g, gens);

  // Normal closure: push conjugates of (new) generators by the generators
  // of G and their inverses until nothing escapes. Conjugates of already
  // processed generators stay inside the grown subgroup, so only the
  // frontier needs revisiting.
  std::vector<Code> frontier = s.generators();
  while (!frontier.empty()) {
    std::vector<Code> added;
    for (Code x : frontier) {
      for (Code y : gg) {
        for (Code e : {g.conj_code(x, y), g.conj_code(x, g.inv_code(y))}) {
          if (!s.contains(e)) append_unique(added, e);
        }
      }
    }
    if (added.empty()) break;
    gens = s.generators();
    gens.insert(gens.end(), added.begin(), added.end());
    s = subgroup_closure(g, gens);
    frontier = std::move(added);
  }

  // Final verification pass over the elements of H; feeding escapees back
  // keeps the result correct even if the generator bookkeeping above were
  // ever wrong.
  for (int rounds = 0;; ++rounds) {
    std::vector<Code> missing = commutator_escapees(g, h, s);
    if (missing.empty()) break;
    if (rounds > 64) throw Error("commutator subgroup failed to stabilize");
    gens = s.generators();
    gens.insert(gens.end(), missing.begin(), missing.end());
    s = subgroup_closure(g, gens);
  }
  return s;
}

LowerCentralSeries lower_central_series(const FiniteGroup& g) {
  LowerCentralSeries out;
  out.terms.push_back(full_subgroup(g));
  out.reached_trivial = out.terms.back().is_trivial();
  while (!out.reached_trivial) {
    Subgroup next = commutator_with_group(g, out.terms.back());
    if (next.order() == out.terms.back().order()) break;  // stabilized above 1
    out.reached_trivial = next.is_trivial();
    out.terms.push_back(std::move(next));
  }
  return out;
}

std::optional<std::uint32_t> nilpotency_class(const LowerCentralSeries& series) {
  if (!series.reached_trivial) return std::nullopt;
  return static_cast<std::uint32_t>(series.terms.size() - 1);
}

std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& g) {
  return nilpotency_class(lower_central_series(g));
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

unsigned log_p_exact(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) throw DomainError(std::to_string(n) + " is not a power of " + std::to_string(p));
  return e;
}

ActiveProfile profile_extract(const FiniteGroup& g, std::uint64_t p) {
  require_prime(p);
  if (!is_p_power(g.order(), p)) {
    throw DomainError("group order " + std::to_string(g.order()) + " is not a power of " +
                      std::to_string(p));
  }
  if (g.order() == 1) throw DomainError("profile of the trivial group is undefined");
  LowerCentralSeries series = lower_central_series(g);
  if (!series.reached_trivial) throw DomainError(g.name() + " is not nilpotent");
  std::vector<unsigned> s;
  for (std::size_t h = 0; h + 1 < series.terms.size(); ++h) {
    s.push_back(log_p_exact(subgroup_exponent(g, series.terms[h]), p));
  }
  return ActiveProfile(p, std::move(s));
}

std::vector<Subgroup> kp_series_definitional(const FiniteGroup& g, std::uint64_t p) {
  require_prime(p);
  if (!is_p_power(g.order(), p)) {
    throw DomainError("group order " + std::to_string(g.order()) + " is not a power of " +
                      std::to_string(p));
  }
  std::vector<Subgroup> out;
  out.push_back(full_subgroup(g));
  if (g.order() == 1) return out;

  // Finite p-groups are nilpotent, so the gamma series reaches 1.
  LowerCentralSeries lcs = lower_central_series(g);
  if (!lcs.reached_trivial) throw Error("p-group is not nilpotent; engine broken");
  // Non-trivial terms gamma_1 .. gamma_c only; trivial terms contribute
  // nothing to any K_i.
  std::vector<const Subgroup*> gamma;
  for (const Subgroup& t : lcs.terms) {
    if (!t.is_trivial()) gamma.push_back(&t);
  }

  // K_i only changes when some minimal j with r*p^j >= i ticks up, so
  // consecutive i with the same j-vector reuse the previous term.
  std::vector<unsigned> prev_js;
  for (std::uint64_t i = 2;; ++i) {
    std::vector<unsigned> js(gamma.size());
    for (std::size_t r1 = 0; r1 < gamma.size(); ++r1) {
      std::uint64_t r = r1 + 1;
      unsigned j = 0;
      std::uint64_t rpj = r;
      while (rpj < i) {
        rpj *= p;
        ++j;
      }
      js[r1] = j;
    }
    if (!prev_js.empty() && js == prev_js) {
      out.push_back(out.back());
    } else {
      std::vector<Code> gens;
      for (std::size_t r1 = 0; r1 < gamma.size(); ++r1) {
        std::uint64_t pj = 1;
        for (unsigned k = 0; k < js[r1]; ++k) pj *= p;
        for (Code x : gamma[r1]->elements()) gens.push_back(g.pow_code(x, pj));
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      out.push_back(subgroup_closure(g, std::move(gens)));
      prev_js = std::move(js);
    }
    if (out.back().is_trivial()) break;
    if (i > (std::uint64_t{1} << 40)) throw Error("K_p-series failed to reach 1");
  }
  return out;
}

std::string series_report(const FiniteGroup& g, const LowerCentralSeries& series) {
  std::ostringstream os;
  for (std::size_t h = 0; h < series.terms.size(); ++h) {
    os << "gamma[" << h + 1 << "] order=" << series.terms[h].order()
       << " exponent=" << subgroup_exponent(g, series.terms[h]) << "\n";
  }
  return os.str();
}

std::string kp_report(const FiniteGroup& g, const std::vector<Subgroup>& terms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    os << "K[" << i + 1 << "] order=" << terms[i].order()
       << " exponent=" << subgroup_exponent(g, terms[i]) << "\n";
  }
  return os.str();
}

}  // namespace wreathlab::oracle
