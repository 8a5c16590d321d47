#pragma once

#include <string>
#include <vector>

#include "ivmc/certify.hpp"
#include "ivmc/graph.hpp"
#include "ivmc/instance.hpp"
#include "ivmc/reduction.hpp"
#include "ivmc/solvers.hpp"

namespace ivmc {

// All artifacts are structured plain text (JSON) with fixed field names and
// deterministic formatting: rerunning a command on identical inputs yields
// byte-identical files. Counters that may exceed 64 bits are decimal
// strings.

std::string instance_to_json(const IntervalInstance& inst);
IntervalInstance instance_from_json(const std::string& text);

std::string partition_to_json(const GroupPartition& part);
GroupPartition partition_from_json(const std::string& text);

std::string cut_to_json(const VertexCut& cut);
VertexCut cut_from_json(const std::string& text);

std::string units_to_json(const UnitIntervalSet& u);
UnitIntervalSet units_from_json(const std::string& text);

std::string certificates_to_json(const std::vector<Certificate>& certs);
std::string audit_to_json(const AuditReport& rep);
std::string validation_to_json(const ValidationReport& rep);
std::string params_to_json(const ParamReport& rep);
std::string canonical_constant_to_json(const CanonicalConstantReport& rep);

struct SolverResultDoc {
  std::string method;
  Big cut_size;
  std::vector<Side> sides;          // explicit-interval inputs
  const GroupPartition* partition = nullptr;  // grouped-instance inputs
  std::vector<std::pair<std::string, std::string>> metadata;
};
std::string solver_result_to_json(const SolverResultDoc& doc);

/// Decision record emitted by reduce --threshold X.
struct DecisionDoc {
  std::int64_t x = 0;
  Big s0;
  Big operative_threshold;  // s0 + 2xq'
  Big formula_value;        // serialized as F_paper
};
std::string decision_to_json(const DecisionDoc& doc);

}  // namespace ivmc
