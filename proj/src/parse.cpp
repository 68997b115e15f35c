#include "wreathlab/parse.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "wreathlab/error.hpp"

namespace wreathlab {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) {
      throw ParseError(std::string("expected '") + c + "' (" + what + ") at position " +
                           std::to_string(pos),
                       pos);
    }
  }

  // Case-insensitive keyword match; consumes on success.
  bool eat_keyword(const char* kw) {
    skip_ws();
    std::size_t i = 0;
    while (kw[i]) {
      if (pos + i >= s.size() ||
          std::tolower(static_cast<unsigned char>(s[pos + i])) !=
              std::tolower(static_cast<unsigned char>(kw[i]))) {
        return false;
      }
      ++i;
    }
    pos += i;
    return true;
  }

  std::uint64_t parse_u64(const char* what) {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      throw ParseError(std::string("expected ") + what + " at position " + std::to_string(pos),
                       pos);
    }
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError(std::string(what) + " overflows at position " + std::to_string(start),
                         start);
      }
      v = v * 10 + digit;
      ++pos;
    }
    return v;
  }

  void expect_end() {
    if (!at_end()) {
      throw ParseError("unexpected trailing characters at position " + std::to_string(pos), pos);
    }
  }
};

void accumulate(AbelianGroupSpec::FactorMap& m, unsigned e, const Multiplicity& n) {
  auto [it, inserted] = m.emplace(e, n);
  if (inserted) return;
  if (n.infinite || it->second.infinite) {
    it->second = Multiplicity::inf();
  } else {
    it->second.count += n.count;
  }
}

}  // namespace

AbelianGroupSpec parse_group_spec(const std::string& s) {
  Cursor c{s};
  c.expect('p', "group spec starts with p=<prime>");
  c.expect('=', "group spec starts with p=<prime>");
  c.skip_ws();
  std::size_t p_pos = c.pos;
  std::uint64_t p = c.parse_u64("prime");
  if (!is_prime(p)) {
    throw ParseError(std::to_string(p) + " is not prime (position " + std::to_string(p_pos) + ")",
                     p_pos);
  }
  c.expect(':', "after the prime");

  AbelianGroupSpec::FactorMap factors;
  while (true) {
    c.skip_ws();
    std::size_t e_pos = c.pos;
    std::uint64_t e = c.parse_u64("factor exponent");
    if (e == 0) {
      throw ParseError("zero exponent at position " + std::to_string(e_pos), e_pos);
    }
    if (e > std::numeric_limits<unsigned>::max()) {
      throw ParseError("exponent too large at position " + std::to_string(e_pos), e_pos);
    }
    Multiplicity n = Multiplicity::of(1);
    if (c.eat('*')) {
      if (c.eat_keyword("inf")) {
        n = Multiplicity::inf();
      } else {
        n = Multiplicity::of(c.parse_u64("multiplicity"));
      }
    }
    accumulate(factors, static_cast<unsigned>(e), n);
    if (!c.eat(',')) break;
  }
  c.expect_end();
  return AbelianGroupSpec::from_factors(p, std::move(factors));
}

std::string to_spec_string(const AbelianGroupSpec& spec) {
  std::ostringstream os;
  os << "p=" << spec.prime() << ":";
  bool first = true;
  for (auto it = spec.factors().rbegin(); it != spec.factors().rend(); ++it) {
    os << (first ? " " : ",") << it->first;
    first = false;
    if (it->second.infinite) {
      os << "*inf";
    } else if (it->second.count != 1) {
      os << "*" << it->second.count;
    }
  }
  if (first) os << " 1*0";  // trivial group: an explicitly empty layer
  return os.str();
}

std::string to_spec_string(const AbelianPGroup& g) {
  return to_spec_string(AbelianGroupSpec::from_finite(g));
}

nlohmann::json group_spec_to_json(const AbelianGroupSpec& spec) {
  nlohmann::json factors = nlohmann::json::array();
  for (auto it = spec.factors().rbegin(); it != spec.factors().rend(); ++it) {
    nlohmann::json f{{"e", it->first}};
    if (it->second.infinite) {
      f["n"] = "inf";
    } else if (it->second.count <= BigInt(std::uint64_t{1} << 53)) {
      f["n"] = static_cast<std::uint64_t>(it->second.count);
    } else {
      f["n"] = it->second.count.str();
    }
    factors.push_back(std::move(f));
  }
  return nlohmann::json{{"p", spec.prime()}, {"factors", std::move(factors)}};
}

AbelianGroupSpec group_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("factors") || !j["factors"].is_array()) {
    throw ParseError("group spec JSON must be {\"p\": <prime>, \"factors\": [...]}");
  }
  if (!j["p"].is_number_unsigned()) throw ParseError("group spec JSON: p must be an unsigned number");
  std::uint64_t p = j["p"].get<std::uint64_t>();
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");

  AbelianGroupSpec::FactorMap factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_object() || !f.contains("e") || !f["e"].is_number_unsigned()) {
      throw ParseError("group spec JSON: each factor needs an unsigned \"e\"");
    }
    std::uint64_t e = f["e"].get<std::uint64_t>();
    if (e == 0) throw ParseError("group spec JSON: zero exponent");
    if (e > std::numeric_limits<unsigned>::max()) throw ParseError("group spec JSON: exponent too large");
    Multiplicity n = Multiplicity::of(1);
    if (f.contains("n")) {
      const auto& jn = f["n"];
      if (jn.is_string()) {
        std::string sv = jn.get<std::string>();
        if (sv == "inf") {
          n = Multiplicity::inf();
        } else {
          try {
            n = Multiplicity::of(BigInt(sv));
          } catch (const std::exception&) {
            throw ParseError("group spec JSON: bad multiplicity \"" + sv + "\"");
          }
          if (n.count < 0) throw ParseError("group spec JSON: negative multiplicity");
        }
      } else if (jn.is_number_unsigned()) {
        n = Multiplicity::of(jn.get<std::uint64_t>());
      } else {
        throw ParseError("group spec JSON: \"n\" must be an unsigned number, a decimal string, or \"inf\"");
      }
    }
    accumulate(factors, static_cast<unsigned>(e), n);
  }
  return AbelianGroupSpec::from_factors(p, std::move(factors));
}

ActiveProfile parse_profile(const std::string& s) {
  Cursor c{s};
  if (c.eat_keyword("D4") && c.at_end()) return ActiveProfile::d4();
  c.pos = 0;
  if (c.eat_keyword("Q8") && c.at_end()) return ActiveProfile::q8();
  c.pos = 0;

  c.expect('p', "profile is p=<prime> c=<class> s=<s1>,<s2>,...");
  c.expect('=', "after p");
  c.skip_ws();
  std::size_t p_pos = c.pos;
  std::uint64_t p = c.parse_u64("prime");
  if (!is_prime(p)) {
    throw ParseError(std::to_string(p) + " is not prime (position " + std::to_string(p_pos) + ")",
                     p_pos);
  }
  c.expect('c', "profile needs c=<class>");
  c.expect('=', "after c");
  std::uint64_t cls = c.parse_u64("class");
  c.expect('s', "profile needs s=<s1>,<s2>,...");
  c.expect('=', "after s");
  std::vector<unsigned> sv;
  do {
    c.skip_ws();
    std::size_t s_pos = c.pos;
    std::uint64_t e = c.parse_u64("exponent entry");
    if (e == 0 || e > std::numeric_limits<unsigned>::max()) {
      throw ParseError("exponent entry out of range at position " + std::to_string(s_pos), s_pos);
    }
    sv.push_back(static_cast<unsigned>(e));
  } while (c.eat(','));
  c.expect_end();

  if (cls != sv.size()) {
    throw ParseError("profile class c=" + std::to_string(cls) + " does not match " +
                     std::to_string(sv.size()) + " s-entries");
  }
  try {
    return ActiveProfile(p, std::move(sv));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string to_profile_string(const ActiveProfile& a) {
  std::ostringstream os;
  os << "p=" << a.prime() << " c=" << a.cls() << " s=";
  for (std::size_t i = 0; i < a.s().size(); ++i) os << (i ? "," : "") << a.s()[i];
  return os.str();
}

namespace {

oracle::GroupPtr parse_expr(Cursor& c, std::uint64_t limit);

oracle::GroupPtr parse_term(Cursor& c, std::uint64_t limit) {
  if (c.eat('(')) {
    oracle::GroupPtr g = parse_expr(c, limit);
    c.expect(')', "closing parenthesis");
    return g;
  }
  if (c.eat_keyword("wr")) {
    c.expect('(', "wr(A, B)");
    oracle::GroupPtr a = parse_expr(c, limit);
    c.expect(',', "wr(A, B)");
    oracle::GroupPtr b = parse_expr(c, limit);
    c.expect(')', "wr(A, B)");
    return oracle::wreath_product(a, b, limit);
  }
  if (c.eat_keyword("D4")) return oracle::d4_group();
  if (c.eat_keyword("Q8")) return oracle::q8_group();
  if (c.eat_keyword("C")) {
    c.eat('_');
    c.skip_ws();
    std::size_t n_pos = c.pos;
    std::uint64_t n = c.parse_u64("cyclic group order");
    if (n == 0) throw ParseError("cyclic group order must be positive", n_pos);
    try {
      return oracle::cyclic(n);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), n_pos);
    }
  }
  throw ParseError("expected a group term (C<n>, D4, Q8, wr(...), or parentheses) at position " +
                       std::to_string(c.pos),
                   c.pos);
}

oracle::GroupPtr parse_expr(Cursor& c, std::uint64_t limit) {
  std::vector<oracle::GroupPtr> factors{parse_term(c, limit)};
  while (true) {
    // 'x' only acts as a product operator when a term follows.
    std::size_t save = c.pos;
    if (!c.eat('x') && !c.eat('X')) break;
    if (c.at_end() || c.peek() == ',' || c.peek() == ')') {
      c.pos = save;
      break;
    }
    factors.push_back(parse_term(c, limit));
  }
  if (factors.size() == 1) return factors.front();
  return oracle::direct_product_group(std::move(factors), limit);
}

}  // namespace

oracle::GroupPtr parse_group_expr(const std::string& s, std::uint64_t size_limit) {
  Cursor c{s};
  oracle::GroupPtr g = parse_expr(c, size_limit);
  c.expect_end();
  return g;
}

}  // namespace wreathlab
