#pragma once
#include <stdexcept>
#include <string>

namespace mmp3 {

// every failure a caller can act on carries one of these codes; the what()
// string adds context (offending generators, budgets, positions).
enum class errc {
  parse_error,
  field_mismatch,
  not_homogeneous,
  not_prime,
  contains_irrelevant,
  domain_not_everywhere_defined,
  saturator_not_found,
  not_basepoint_free,
  restriction_degenerate,
  stabilization_budget_exceeded,
  budget_exceeded,
  oracle_missing,
  no_graph_component,
  factorization_failure,
  bad_input,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::not_prime: return "NotPrime";
    case errc::contains_irrelevant: return "ContainsIrrelevant";
    case errc::domain_not_everywhere_defined: return "DomainNotEverywhereDefined";
    case errc::saturator_not_found: return "SaturatorNotFound";
    case errc::not_basepoint_free: return "NotBasePointFree";
    case errc::restriction_degenerate: return "RestrictionDegenerate";
    case errc::stabilization_budget_exceeded: return "StabilizationBudgetExceeded";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::oracle_missing: return "OracleMissing";
    case errc::no_graph_component: return "NoGraphComponent";
    case errc::factorization_failure: return "FactorizationFailure";
    case errc::bad_input: return "BadInput";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool ok, errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace mmp3
