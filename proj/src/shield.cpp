#include "wreathlab/shield.hpp"

#include <utility>

namespace wreathlab {

ActiveProfile::ActiveProfile(std::uint64_t p, std::vector<unsigned> s)
    : p_(p), s_(std::move(s)) {
  require_prime(p);
  if (s_.empty()) throw DomainError("profile needs class c >= 1");
  for (std::size_t h = 0; h < s_.size(); ++h) {
    if (s_[h] == 0) throw DomainError("profile exponents s(h) must be >= 1");
    if (h > 0 && s_[h] > s_[h - 1]) {
      throw DomainError("profile exponents must be non-increasing");
    }
  }
}

ActiveProfile ActiveProfile::d4() { return ActiveProfile(2, {2, 1}); }
ActiveProfile ActiveProfile::q8() { return ActiveProfile(2, {2, 1}); }

ActiveProfile ActiveProfile::constant(std::uint64_t p, unsigned c, unsigned alpha) {
  if (c == 0) throw DomainError("profile needs class c >= 1");
  return ActiveProfile(p, std::vector<unsigned>(c, alpha));
}

std::string ActiveProfile::to_string() const {
  std::string out = "p=" + std::to_string(p_) + " c=" + std::to_string(cls()) + " s=";
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s_[i]);
  }
  return out;
}

bool baumslag_nilpotent(const std::optional<ActiveProfile>& a, bool a_exp_finite,
                        const AbelianPGroup& b, bool b_finite) {
  if (!a) return true;           // 1 Wr B = B, abelian, nilpotent
  if (b.is_trivial()) return true;  // A Wr 1 = A, nilpotent by profile
  return a_exp_finite && b_finite && a->prime() == b.prime();
}

namespace {

void check_shield_inputs(const ActiveProfile& a, const AbelianPGroup& b) {
  if (a.prime() != b.prime()) {
    throw DomainError("active and passive groups use different primes (p=" +
                      std::to_string(a.prime()) + " vs p=" + std::to_string(b.prime()) + ")");
  }
  if (b.is_trivial()) {
    throw DomainError("class formula requires a non-trivial passive group");
  }
}

}  // namespace

BigInt shield_class(const ActiveProfile& a, const AbelianPGroup& b) {
  check_shield_inputs(a, b);
  const ShieldParams params = shield_params(b);
  BigInt best = 0;
  for (unsigned h = 1; h <= a.cls(); ++h) {
    BigInt val = params.a * h + BigInt(a.s_at(h) - 1) * params.b;
    if (val > best) best = val;
  }
  return best;
}

unsigned shield_argmax(const ActiveProfile& a, const AbelianPGroup& b) {
  check_shield_inputs(a, b);
  const ShieldParams params = shield_params(b);
  BigInt best = -1;
  unsigned best_h = 1;
  for (unsigned h = 1; h <= a.cls(); ++h) {
    BigInt val = params.a * h + BigInt(a.s_at(h) - 1) * params.b;
    if (val >= best) {  // ties resolve to the larger h
      best = val;
      best_h = h;
    }
  }
  return best_h;
}

AbelianPGroup z_group(std::uint64_t p, unsigned v, const BigInt& l, const BigInt& t) {
  if (v == 0) throw DomainError("Z(l,t) needs v >= 1");
  if (l < 1 || t < l) throw DomainError("Z(l,t) needs 1 <= l <= t");
  AbelianPGroup::FactorMap f;
  f[v] = l;
  if (v >= 2) f[v - 1] = t - l;  // v = 1: the C_{p^0} factors are trivial
  return AbelianPGroup::from_factors(p, std::move(f));
}

AbelianPGroup y_group(std::uint64_t p, unsigned v, const BigInt& z, const BigInt& t) {
  if (v == 0) throw DomainError("Y(z,t) needs v >= 1");
  if (z < 1 || t <= z) throw DomainError("Y(z,t) needs t > z >= 1");
  AbelianPGroup::FactorMap f;
  f[v] = t - z;
  return AbelianPGroup::from_factors(p, std::move(f));
}

namespace {

void check_lemma_common(const LemmaInputs& in) {
  require_prime(in.p);
  if (in.c < 1 || in.alpha < 1 || in.v < 1) {
    throw DomainError("closed forms need c, alpha, v >= 1");
  }
}

/// (alpha-1)*(p-1)*p^{v-1}, the summand shared by both closed forms.
BigInt alpha_term(const LemmaInputs& in) {
  return BigInt(in.alpha - 1) * BigInt(in.p - 1) * pow_big(in.p, in.v - 1);
}

}  // namespace

BigInt lemma1_class(const LemmaInputs& in) {
  check_lemma_common(in);
  if (in.l < 1 || in.t < in.l) throw DomainError("lemma1 needs 1 <= l <= t");
  const BigInt geo = geometric_sum(in.p, in.v - 1);
  const BigInt pv1 = pow_big(in.p, in.v - 1);
  return BigInt(in.c) + BigInt(in.c) * BigInt(in.p - 1) * (in.t * geo + in.l * pv1) +
         alpha_term(in);
}

BigInt lemma2_class(const LemmaInputs& in) {
  check_lemma_common(in);
  if (in.z < 1 || in.t <= in.z) throw DomainError("lemma2 needs t > z >= 1");
  const BigInt geo = geometric_sum(in.p, in.v);
  return BigInt(in.c) + BigInt(in.c) * (in.t - in.z) * BigInt(in.p - 1) * geo +
         alpha_term(in);
}

namespace {

/// Smallest a satisfying a*(c-h) >= (s(h)-s(c))*b for every h < c.
/// This is exactly the condition for the class maximum to be attained at c.
BigInt required_a(const ActiveProfile& prof, const BigInt& b) {
  const unsigned c = prof.cls();
  BigInt req = 0;
  for (unsigned h = 1; h < c; ++h) {
    BigInt need = ceil_div(BigInt(prof.s_at(h) - prof.s_at(c)) * b, BigInt(c - h));
    if (need > req) req = need;
  }
  return req;
}

/// Confirm by direct evaluation that the maximum sits at h = c for the
/// given passive group, and (one step beyond) that it persists.
void verify_argmax_at_c(const ActiveProfile& prof, const AbelianPGroup& b_group) {
  if (shield_argmax(prof, b_group) != prof.cls()) {
    throw Error("internal: threshold verification failed");  // unreachable
  }
}

}  // namespace

BigInt t0_threshold(const ActiveProfile& a, unsigned v, const BigInt& l) {
  if (v < 1 || l < 1) throw DomainError("t0 needs v >= 1 and l >= 1");
  const unsigned c = a.cls();
  if (c == 1) return l;  // single candidate h = 1 = c

  const std::uint64_t p = a.prime();
  const BigInt pv1 = pow_big(p, v - 1);
  const BigInt b = BigInt(p - 1) * pv1;
  const BigInt geo = geometric_sum(p, v - 1);
  const BigInt req = required_a(a, b);

  // a(t) = 1 + (p-1)*(t*geo + l*p^{v-1}), non-decreasing in t.
  const BigInt a_at_l = 1 + BigInt(p - 1) * (l * geo + l * pv1);
  BigInt t;
  if (a_at_l >= req) {
    t = l;
  } else if (geo == 0) {
    // v = 1: Z(l,t) = C_p^l is independent of t, so a never grows.
    throw ThresholdError(
        "t0 does not exist: v = 1 makes Z(l,t) independent of t and the "
        "class maximum never reaches h = c for profile " + a.to_string() +
        ", l = " + l.str());
  } else {
    const BigInt step = BigInt(p - 1) * geo;  // a(t+1) - a(t)
    t = l + ceil_div(req - a_at_l, step);
  }
  verify_argmax_at_c(a, z_group(p, v, l, t));
  verify_argmax_at_c(a, z_group(p, v, l, t + 1));
  return t;
}

BigInt t1_threshold(const ActiveProfile& a, unsigned v, const BigInt& z) {
  if (v < 1 || z < 1) throw DomainError("t1 needs v >= 1 and z >= 1");
  const unsigned c = a.cls();
  if (c == 1) return z + 1;  // first admissible t

  const std::uint64_t p = a.prime();
  const BigInt pv1 = pow_big(p, v - 1);
  const BigInt b = BigInt(p - 1) * pv1;
  const BigInt geo = geometric_sum(p, v);  // >= 1, so a grows strictly with t
  const BigInt req = required_a(a, b);

  // a(t) = 1 + (p-1)*(t-z)*geo.
  const BigInt a_first = 1 + BigInt(p - 1) * geo;  // at t = z+1
  BigInt t = z + 1;
  if (a_first < req) {
    const BigInt step = BigInt(p - 1) * geo;
    t += ceil_div(req - a_first, step);
  }
  verify_argmax_at_c(a, y_group(p, v, z, t));
  verify_argmax_at_c(a, y_group(p, v, z, t + 1));
  return t;
}

BigInt crossover_tstar(const ActiveProfile& a, unsigned v, const BigInt& l, const BigInt& z) {
  if (v < 1 || l < 1 || z < 1) throw DomainError("crossover needs v, l, z >= 1");
  const std::uint64_t p = a.prime();
  const BigInt pv1 = pow_big(p, v - 1);

  // lemma2(t) - lemma1(t) = c*(p-1)*(t*p^{v-1} - rhs) with
  // rhs = (l+z)*p^{v-1} + z*(1 + p + ... + p^{v-2}); strict inequality
  // holds for every t > floor(rhs / p^{v-1}).
  const BigInt rhs = (l + z) * pv1 + z * geometric_sum(p, v - 1);
  BigInt t = rhs / pv1;

  const BigInt t0 = t0_threshold(a, v, l);
  const BigInt t1 = t1_threshold(a, v, z);
  if (t0 > t) t = t0;
  if (t1 > t) t = t1;
  if (l > t) t = l;
  if (z + 1 > t) t = z + 1;
  return t;
}

}  // namespace wreathlab
