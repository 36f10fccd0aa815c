#pragma once

// Exhaustive checks over small n, each returning a JSON report.

#include <string>
#include <string_view>
#include <vector>

#include "annarc/arc_algebra.hpp"
#include "annarc/json_io.hpp"

namespace annarc {

struct VerifyOptions {
  int n = 1;
  Coaction coaction = Coaction::Paper;
  int contexts = 20;       // relations: flat contexts per instance
  int max_examples = 8;    // failures kept in the report
};

struct SuiteReport {
  bool passed = false;
  Json report;
};

/// Every rule instance of arity at most max(n, 1) in random flat contexts.
SuiteReport verify_relations(const VerifyOptions& opt);
/// (xy)z == x(yz) over all quadruples of matchings of size n and all basis
/// tensors; also counts products whose degree is not the sum of the factors'.
SuiteReport verify_associativity(const VerifyOptions& opt);
/// 2k rotation steps fix every basis element of every Hom space, k = 1..n.
SuiteReport verify_rotation(const VerifyOptions& opt);
/// Every admissible surgery order gives the same product, k = 1..n.
SuiteReport verify_order_independence(const VerifyOptions& opt);
/// Loop classes from seam counting against the picture's winding numbers, k = 1..n.
SuiteReport verify_oracle(const VerifyOptions& opt);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opt);

std::string coaction_name(Coaction c);
/// Throws std::invalid_argument.
Coaction coaction_from_name(std::string_view name);

/// Loop classes of dual(alpha) o beta by following arcs and summing seam
/// counts, in the order of the loops' smallest points.
std::vector<std::pair<std::vector<int>, LoopClass>> seam_loops(const AffineMatching& alpha,
                                                               const AffineMatching& beta);

}  // namespace annarc
