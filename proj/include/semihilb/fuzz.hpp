#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semihilb/inequalities.hpp"

namespace semihilb {

/// mixed draws one of the four concrete kinds per trial.
enum class AKind { identity, diagonal, dense_psd, rank_deficient, mixed };
enum class TKind { dense, a_commuting, a_selfadjoint, a_positive };

struct GenSpec {
  int dim = 3;
  int dim_max = 0;  ///< when > dim, each trial draws its dimension from [dim, dim_max]
  AKind a_kind = AKind::mixed;
  int rank = 1;     ///< used by rank_deficient; clamped to [1, dim - 1] per trial
  TKind t_kind = TKind::dense;
  double scale = 1.0;
  std::uint64_t seed = 0;
};

/// Throws InvalidSpec.
void validate_spec(const GenSpec& spec);

/// Raw weight before make_context; deterministic in the generator state.
CMatrix gen_weight(std::mt19937_64& rng, AKind kind, int dim, int rank, double scale);
/// Operator of the requested class; dense operators are projected into B_A(H).
CMatrix gen_operator(std::mt19937_64& rng, const SemiInnerContext& ctx, TKind kind, double scale);

/// Deterministic in spec.seed.
SemiInnerContext gen_context(const GenSpec& spec);
CMatrix gen_operator(const SemiInnerContext& ctx, const GenSpec& spec);

/// Everything needed to rerun one checker evaluation.
struct CaseRecord {
  std::string inequality_id;
  std::uint64_t trial = 0;
  CMatrix weight;  ///< the raw weight handed to make_context
  Instance instance;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_slack = 0.0;
  bool hypotheses_ok = true;
  std::map<std::string, double> intermediates;
};

struct CampaignReport {
  std::string inequality_id;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::uint64_t advisory = 0;  ///< trials with hypotheses_ok false
  double min_rel_slack = 0.0;
  double mean_rel_slack = 0.0;
  CaseRecord sharpest_case;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> audit_violations;  ///< per audit_* intermediate
  std::vector<CaseRecord> violation_cases;
};

/// One trial: generator state derived from (seed, trial, id).
CaseRecord run_trial(const std::string& id, const GenSpec& gen, std::uint64_t trial);
std::vector<CampaignReport> run_campaign(const std::vector<std::string>& ids, const GenSpec& gen,
                                         std::uint64_t trials);

/// Re-evaluates a persisted case.
BoundReport replay(const CaseRecord& rec);

}  // namespace semihilb
