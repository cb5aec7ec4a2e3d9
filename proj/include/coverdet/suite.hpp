#pragma once

// Experiment orchestration: the invariant check suite and the per-theorem
// term ledgers, emitted as RunReports.

#include "coverdet/config.hpp"
#include "coverdet/report.hpp"

namespace coverdet {

// runs ring properties, sequence additivity, direct-image chi equality,
// Riemann-Hurwitz, delta matrix, Serre pairing, torsion identities,
// Lefschetz consistency, R-coefficient dual route and quadrature oracles
RunReport run_check_suite(const ExperimentConfig& cfg);

// term ledger for one of the two comparison formulas; which is "t32" or "t41"
RunReport compute_theorem(const ExperimentConfig& cfg, const std::string& which);

RunReport euler_report(const ExperimentConfig& cfg);
RunReport lefschetz_report(const ExperimentConfig& cfg);
RunReport cech_report(const ExperimentConfig& cfg);
RunReport rgenus_report(int max_order);

}  // namespace coverdet
