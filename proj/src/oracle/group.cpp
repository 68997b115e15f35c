#include "wreathlab/oracle/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "wreathlab/bigint.hpp"
#include "wreathlab/error.hpp"
#include "wreathlab/oracle/kernels.hpp"

namespace wreathlab::oracle {

namespace {

// Codes must stay well inside 64 bits; anything near this cap is far beyond
// enumerable anyway.
constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxRadix = std::uint64_t{1} << 31;  // kernel contract

std::uint64_t effective_limit(std::uint64_t limit) { return std::min(limit, kOrderCap); }

// Wrap composite names so "A wr B" factors stay unambiguous.
std::string paren_name(const FiniteGroup& g) {
  const std::string& n = g.name();
  if (n.find(' ') != std::string::npos) return "(" + n + ")";
  return n;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<Digit> radices, bool abelian,
                         bool coordinatewise)
    : name_(std::move(name)),
      radices_(std::move(radices)),
      abelian_(abelian),
      coordinatewise_(coordinatewise) {
  if (radices_.size() > kMaxDigits) {
    throw SizeLimitError("group needs " + std::to_string(radices_.size()) +
                             " digits per element, encoding caps at " +
                             std::to_string(kMaxDigits),
                         std::to_string(radices_.size()), kMaxDigits);
  }
  order_ = 1;
  strides_.reserve(radices_.size());
  for (Digit r : radices_) {
    if (r < 2 || r > kMaxRadix) {
      throw DomainError("digit radix " + std::to_string(r) + " outside [2, 2^31]");
    }
    strides_.push_back(order_);
    if (order_ > kOrderCap / r) {
      throw SizeLimitError("group order exceeds the encodable range", "2^62+", kOrderCap);
    }
    order_ *= r;
  }
}

void FiniteGroup::decode(Code c, Digit* out) const {
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    out[i] = static_cast<Digit>((c / strides_[i]) % radices_[i]);
  }
}

Code FiniteGroup::encode(const Digit* d) const {
  Code c = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) c += Code{d[i]} * strides_[i];
  return c;
}

Code FiniteGroup::mul_code(Code a, Code b) const {
  std::array<Digit, kMaxDigits> da, db, dout;
  decode(a, da.data());
  decode(b, db.data());
  mul(da.data(), db.data(), dout.data());
  return encode(dout.data());
}

Code FiniteGroup::inv_code(Code a) const {
  std::array<Digit, kMaxDigits> da, dout;
  decode(a, da.data());
  inv(da.data(), dout.data());
  return encode(dout.data());
}

Code FiniteGroup::conj_code(Code a, Code g) const {
  return mul_code(mul_code(inv_code(g), a), g);
}

Code FiniteGroup::comm_code(Code a, Code b) const {
  return mul_code(mul_code(inv_code(a), inv_code(b)), mul_code(a, b));
}

Code FiniteGroup::pow_code(Code a, std::uint64_t k) const {
  if (a == identity || k == 0) return identity;
  if (coordinatewise_) {
    std::array<Digit, kMaxDigits> d, o;
    decode(a, d.data());
    kernels::active_ops().scale_mod(d.data(), k, radices_.data(), o.data(), radices_.size());
    return encode(o.data());
  }
  Code result = identity;
  Code base = a;
  while (k) {
    if (k & 1) result = mul_code(result, base);
    k >>= 1;
    if (k) base = mul_code(base, base);
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Code a) const {
  if (a == identity) return 1;
  if (coordinatewise_) {
    std::array<Digit, kMaxDigits> d;
    decode(a, d.data());
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      if (d[i]) ord = std::lcm(ord, radices_[i] / std::gcd<std::uint64_t>(radices_[i], d[i]));
    }
    return ord;
  }
  std::uint64_t n = 1;
  Code x = a;
  while (x != identity) {
    x = mul_code(x, a);
    if (++n > order_) throw Error("element order exceeds group order; multiplication broken");
  }
  return n;
}

namespace {

class CyclicGroup final : public FiniteGroup {
 public:
  explicit CyclicGroup(Digit n)
      : FiniteGroup("C_" + std::to_string(n), {n}, /*abelian=*/true, /*coordinatewise=*/true),
        n_(n) {
    set_generators({1});
  }

  void mul(const Digit* a, const Digit* b, Digit* out) const override {
    Digit s = a[0] + b[0];
    out[0] = s >= n_ ? s - n_ : s;
  }

  void inv(const Digit* a, Digit* out) const override {
    Digit v = a[0];
    out[0] = v == 0 ? 0 : n_ - v;
  }

 private:
  Digit n_;
};

// Order-1 group: zero digits, the single code 0.
class TrivialGroup final : public FiniteGroup {
 public:
  TrivialGroup() : FiniteGroup("1", {}, true, true) {}
  void mul(const Digit*, const Digit*, Digit*) const override {}
  void inv(const Digit*, Digit*) const override {}
};

class TableGroup final : public FiniteGroup {
 public:
  TableGroup(std::string name, std::size_t n, std::vector<Digit> table, std::vector<Code> gens)
      : FiniteGroup(std::move(name), {static_cast<Digit>(n)}, /*abelian=*/false,
                    /*coordinatewise=*/false),
        n_(n),
        table_(std::move(table)) {
    validate();
    set_generators(std::move(gens));
  }

  void mul(const Digit* a, const Digit* b, Digit* out) const override {
    out[0] = table_[a[0] * n_ + b[0]];
  }

  void inv(const Digit* a, Digit* out) const override { out[0] = inv_[a[0]]; }

 private:
  // Tables are compiled in, so this is a construction-time safety net:
  // identity behavior, full associativity, and two-sided inverses.
  void validate() {
    if (table_.size() != n_ * n_) throw Error("table group: wrong table size");
    for (std::size_t i = 0; i < n_; ++i) {
      if (table_[i] != i || table_[i * n_] != i) throw Error("table group: 0 is not an identity");
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (table_[i * n_ + j] >= n_) throw Error("table group: entry out of range");
        for (std::size_t k = 0; k < n_; ++k) {
          if (table_[table_[i * n_ + j] * n_ + k] != table_[i * n_ + table_[j * n_ + k]]) {
            throw Error("table group: multiplication not associative");
          }
        }
      }
    }
    inv_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < n_; ++j) {
        if (table_[i * n_ + j] == 0 && table_[j * n_ + i] == 0) {
          inv_[i] = static_cast<Digit>(j);
          found = true;
          break;
        }
      }
      if (!found) throw Error("table group: element without inverse");
    }
  }

  std::size_t n_;
  std::vector<Digit> table_;
  std::vector<Digit> inv_;
};

class ProductGroup final : public FiniteGroup {
 public:
  ProductGroup(std::string name, std::vector<GroupPtr> factors)
      : FiniteGroup(std::move(name), concat_radices(factors), all_abelian(factors),
                    all_coordinatewise(factors)),
        factors_(std::move(factors)) {
    std::vector<Code> gens;
    std::uint64_t stride = 1;
    std::size_t off = 0;
    for (const GroupPtr& f : factors_) {
      offsets_.push_back(off);
      for (Code g : f->generators()) gens.push_back(g * stride);
      stride *= f->order();
      off += f->digit_count();
    }
    set_generators(std::move(gens));
  }

  void mul(const Digit* a, const Digit* b, Digit* out) const override {
    if (coordinatewise_) {
      kernels::active_ops().add_mod(a, b, radices_.data(), out, radices_.size());
      return;
    }
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      std::size_t off = offsets_[k];
      factors_[k]->mul(a + off, b + off, out + off);
    }
  }

  void inv(const Digit* a, Digit* out) const override {
    if (coordinatewise_) {
      kernels::active_ops().neg_mod(a, radices_.data(), out, radices_.size());
      return;
    }
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      std::size_t off = offsets_[k];
      factors_[k]->inv(a + off, out + off);
    }
  }

 private:
  static std::vector<Digit> concat_radices(const std::vector<GroupPtr>& fs) {
    std::vector<Digit> r;
    for (const GroupPtr& f : fs) r.insert(r.end(), f->radices().begin(), f->radices().end());
    return r;
  }
  static bool all_abelian(const std::vector<GroupPtr>& fs) {
    return std::all_of(fs.begin(), fs.end(), [](const GroupPtr& f) { return f->abelian(); });
  }
  static bool all_coordinatewise(const std::vector<GroupPtr>& fs) {
    return std::all_of(fs.begin(), fs.end(), [](const GroupPtr& f) { return f->coordinatewise(); });
  }

  std::vector<GroupPtr> factors_;
  std::vector<std::size_t> offsets_;
};

class WreathGroup final : public FiniteGroup {
 public:
  WreathGroup(GroupPtr a, GroupPtr b)
      : FiniteGroup(paren_name(*a) + " wr " + paren_name(*b), wreath_radices(*a, *b),
                    wreath_abelian(*a, *b), wreath_coordinatewise(*a, *b)),
        a_(std::move(a)),
        b_(std::move(b)),
        da_(a_->digit_count()),
        nb_(static_cast<std::size_t>(b_->order())),
        base_len_(da_ * nb_) {
    // right-translation table: rt[b][x] = code of x*b
    if (da_ > 0) {
      rt_.resize(nb_ * nb_);
      for (std::size_t bc = 0; bc < nb_; ++bc) {
        for (std::size_t x = 0; x < nb_; ++x) {
          rt_[bc * nb_ + x] = static_cast<std::uint32_t>(b_->mul_code(x, bc));
        }
      }
    }
    std::vector<Code> gens;
    // copies of A's generators in the coordinate of B's identity …
    for (Code g : a_->generators()) gens.push_back(g);
    // … plus B's generators in the top component
    std::uint64_t base_order = strides_.size() > base_len_ ? strides_[base_len_] : order_;
    for (Code g : b_->generators()) gens.push_back(g * base_order);
    set_generators(std::move(gens));
  }

  void mul(const Digit* a, const Digit* b, Digit* out) const override {
    const std::size_t nd = digit_count();
    std::array<Digit, kMaxDigits> bb;  // copy: out may alias b, blocks permute
    std::copy(b, b + nd, bb.begin());
    std::array<Digit, kMaxDigits> atop;
    std::copy(a + base_len_, a + nd, atop.begin());
    if (da_ > 0) {
      Code b1 = b_->encode(atop.data());
      const std::uint32_t* row = rt_.data() + b1 * nb_;
      if (a_->coordinatewise()) {
        std::array<Digit, kMaxDigits> gath;
        for (std::size_t x = 0; x < nb_; ++x) {
          std::copy_n(bb.begin() + row[x] * da_, da_, gath.begin() + x * da_);
        }
        kernels::active_ops().add_mod(a, gath.data(), radices_.data(), out, base_len_);
      } else {
        for (std::size_t x = 0; x < nb_; ++x) {
          a_->mul(a + x * da_, bb.data() + row[x] * da_, out + x * da_);
        }
      }
    }
    b_->mul(atop.data(), bb.data() + base_len_, out + base_len_);
  }

  void inv(const Digit* a, Digit* out) const override {
    const std::size_t nd = digit_count();
    std::array<Digit, kMaxDigits> aa;  // blocks permute: read from a copy
    std::copy(a, a + nd, aa.begin());
    std::array<Digit, kMaxDigits> binv;
    b_->inv(aa.data() + base_len_, binv.data());
    if (da_ > 0) {
      Code bi = b_->encode(binv.data());
      const std::uint32_t* row = rt_.data() + bi * nb_;
      if (a_->coordinatewise()) {
        std::array<Digit, kMaxDigits> gath;
        for (std::size_t x = 0; x < nb_; ++x) {
          std::copy_n(aa.begin() + row[x] * da_, da_, gath.begin() + x * da_);
        }
        kernels::active_ops().neg_mod(gath.data(), radices_.data(), out, base_len_);
      } else {
        for (std::size_t x = 0; x < nb_; ++x) {
          a_->inv(aa.data() + row[x] * da_, out + x * da_);
        }
      }
    }
    std::copy(binv.begin(), binv.begin() + (nd - base_len_), out + base_len_);
  }

 private:
  static std::vector<Digit> wreath_radices(const FiniteGroup& a, const FiniteGroup& b) {
    std::vector<Digit> r;
    std::uint64_t nb = b.order();
    r.reserve(a.digit_count() * nb + b.digit_count());
    for (std::uint64_t x = 0; x < nb; ++x) {
      r.insert(r.end(), a.radices().begin(), a.radices().end());
    }
    r.insert(r.end(), b.radices().begin(), b.radices().end());
    return r;
  }
  // The action only collapses for trivial A or trivial B.
  static bool wreath_abelian(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() == 1) return b.abelian();
    if (b.order() == 1) return a.abelian();
    return false;
  }
  static bool wreath_coordinatewise(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() == 1) return b.coordinatewise();
    if (b.order() == 1) return a.coordinatewise();
    return false;
  }

  GroupPtr a_;
  GroupPtr b_;
  std::size_t da_;
  std::size_t nb_;
  std::size_t base_len_;
  std::vector<std::uint32_t> rt_;
};

}  // namespace

GroupPtr cyclic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  if (n == 1) return std::make_shared<TrivialGroup>();
  if (n > kMaxRadix) throw DomainError("cyclic group order exceeds the 2^31 digit bound");
  return std::make_shared<CyclicGroup>(static_cast<Digit>(n));
}

GroupPtr trivial_group() { return cyclic(1); }

GroupPtr d4_group() {
  // index = 4*eps + k for r^k s^eps, with s r = r^{-1} s
  auto idx = [](unsigned k, unsigned e) { return 4 * e + k; };
  std::vector<Digit> t(64);
  for (unsigned k1 = 0; k1 < 4; ++k1) {
    for (unsigned e1 = 0; e1 < 2; ++e1) {
      for (unsigned k2 = 0; k2 < 4; ++k2) {
        for (unsigned e2 = 0; e2 < 2; ++e2) {
          unsigned k = e1 ? (k1 + 4 - k2) % 4 : (k1 + k2) % 4;
          t[idx(k1, e1) * 8 + idx(k2, e2)] = idx(k, e1 ^ e2);
        }
      }
    }
  }
  return std::make_shared<TableGroup>("D4", 8, std::move(t), std::vector<Code>{idx(1, 0), idx(0, 1)});
}

GroupPtr q8_group() {
  // index = 4*s + u over units (1, i, j, k) with sign bit s
  struct US {
    unsigned u, s;
  };
  // unit products: uprod[u1][u2] = (unit, sign)
  static constexpr US uprod[4][4] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<Digit> t(64);
  for (unsigned u1 = 0; u1 < 4; ++u1) {
    for (unsigned s1 = 0; s1 < 2; ++s1) {
      for (unsigned u2 = 0; u2 < 4; ++u2) {
        for (unsigned s2 = 0; s2 < 2; ++s2) {
          US r = uprod[u1][u2];
          t[(4 * s1 + u1) * 8 + (4 * s2 + u2)] = 4 * (s1 ^ s2 ^ r.s) + r.u;
        }
      }
    }
  }
  return std::make_shared<TableGroup>("Q8", 8, std::move(t), std::vector<Code>{1, 2});
}

namespace {

GroupPtr make_product(std::string name, std::vector<GroupPtr> factors, std::uint64_t limit) {
  BigInt req = 1;
  for (const GroupPtr& f : factors) req *= f->order();
  if (req > effective_limit(limit)) {
    throw SizeLimitError("direct product needs " + req.str() + " elements, limit is " +
                             std::to_string(limit),
                         req.str(), limit);
  }
  if (factors.empty()) return std::make_shared<TrivialGroup>();
  if (factors.size() == 1) return factors.front();
  return std::make_shared<ProductGroup>(std::move(name), std::move(factors));
}

}  // namespace

GroupPtr direct_product_group(std::vector<GroupPtr> factors, std::uint64_t size_limit) {
  std::string name;
  for (const GroupPtr& f : factors) {
    if (!name.empty()) name += " x ";
    name += paren_name(*f);
  }
  if (factors.empty()) name = "1";
  return make_product(std::move(name), std::move(factors), size_limit);
}

GroupPtr wreath_product(const GroupPtr& a, const GroupPtr& b, std::uint64_t size_limit) {
  BigInt req = pow_big(a->order(), b->order()) * b->order();
  if (req > effective_limit(size_limit)) {
    throw SizeLimitError("wreath product " + paren_name(*a) + " wr " + paren_name(*b) +
                             " needs " + req.str() + " elements, limit is " +
                             std::to_string(size_limit),
                         req.str(), size_limit);
  }
  std::size_t digits = a->digit_count() * static_cast<std::size_t>(b->order()) + b->digit_count();
  if (digits > FiniteGroup::kMaxDigits) {
    throw SizeLimitError("wreath product needs " + std::to_string(digits) +
                             " digits per element, encoding caps at " +
                             std::to_string(FiniteGroup::kMaxDigits),
                         req.str(), size_limit);
  }
  return std::make_shared<WreathGroup>(a, b);
}

GroupPtr abelian_explicit(const AbelianPGroup& g, std::uint64_t size_limit) {
  BigInt req = g.order();
  if (req > effective_limit(size_limit)) {
    throw SizeLimitError("explicit realization of " + g.to_string() + " needs " + req.str() +
                             " elements, limit is " + std::to_string(size_limit),
                         req.str(), size_limit);
  }
  std::vector<GroupPtr> factors;
  for (auto it = g.factors().rbegin(); it != g.factors().rend(); ++it) {
    std::uint64_t fac = to_u64(pow_big(g.prime(), it->first), "cyclic factor order");
    std::uint64_t count = to_u64(it->second, "factor multiplicity");
    for (std::uint64_t i = 0; i < count; ++i) factors.push_back(cyclic(fac));
  }
  return make_product(g.to_string(), std::move(factors), size_limit);
}

}  // namespace wreathlab::oracle
