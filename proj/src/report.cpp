#include "skewline/report.hpp"

namespace skewline {

std::string_view claim_status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::NotInstantiable: return "not-instantiable";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

}  // namespace skewline
