#pragma once

#include <functional>
#include <string>
#include <vector>

#include "phigraph/claimlab.hpp"

namespace phigraph::detail {

struct ClaimParam {
  std::string label;
  std::vector<std::uint64_t> values;
};

struct ClaimScope {
  std::string name;
  std::function<bool(const ClaimParam&)> includes;
};

struct ClaimDef {
  ClaimInfo info;
  std::function<std::vector<ClaimParam>(const ClaimParams&)> params;
  std::function<std::string(const ClaimParams&)> range;
  std::function<Verdict(const ClaimParam&, const ClaimParams&, const Guards&)> evaluate;
  std::vector<ClaimScope> scopes;
};

const std::vector<ClaimDef>& claim_definitions();
const std::vector<ClaimDef>& variant_definitions();

}  // namespace phigraph::detail
