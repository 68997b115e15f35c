#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "wreathlab/oracle/group.hpp"
#include "wreathlab/shield.hpp"
#include "wreathlab/variety.hpp"

namespace wreathlab {

/// Parse the group-spec grammar
///   p=<prime>: <e>[*<n|inf>] (,<e>[*<n|inf>])*
/// e.g. "p=5: 3,1,1" or "p=2: 2*inf,1*3". Repeated exponents accumulate.
/// Throws ParseError (with byte position) on malformed input, non-prime p,
/// or a zero exponent. Call .to_finite() when a finite group is required.
AbelianGroupSpec parse_group_spec(const std::string& s);

/// Canonical grammar string for a spec, descending exponents:
/// "p=2: 2*inf,1*3". Parses back to an equal spec.
std::string to_spec_string(const AbelianGroupSpec& spec);
std::string to_spec_string(const AbelianPGroup& g);

/// JSON form: {"p":5,"factors":[{"e":3,"n":1},{"e":1,"n":2}]}, with
/// "n":"inf" for infinite multiplicity; "n" defaults to 1 when absent.
/// Counts beyond 2^53 are carried as decimal strings.
nlohmann::json group_spec_to_json(const AbelianGroupSpec& spec);
AbelianGroupSpec group_spec_from_json(const nlohmann::json& j);

/// Profile syntax: "p=2 c=2 s=2,1", or the builtins "D4" and "Q8".
/// c must match the length of s. Throws ParseError on malformed or
/// inconsistent input.
ActiveProfile parse_profile(const std::string& s);

/// Canonical profile string, "p=2 c=2 s=2,1"; parses back equal.
std::string to_profile_string(const ActiveProfile& a);

/// Explicit-group expressions:
///   expr := term ('x' term)*
///   term := C<n> | C_<n> | D4 | Q8 | wr(expr, expr) | (expr)
/// e.g. "C_2", "C_2xC_2", "wr(C_2, C_4)". Keywords are case-insensitive.
oracle::GroupPtr parse_group_expr(const std::string& s,
                                  std::uint64_t size_limit = oracle::kDefaultSizeLimit);

}  // namespace wreathlab
