#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cuspchar/document.hpp"
#include "cuspchar/newton_puiseux.hpp"
#include "cuspchar/report.hpp"

namespace cuspchar {

/// Runs the P_k engine on the document's (truncated) series.
/// Input problems (smooth germ, uncertified order) propagate as exceptions.
Report cmd_analyze(const InputDocument& doc);

/// Same contract as cmd_analyze, computed by the Newton-Puiseux oracle.
Report cmd_oracle(const InputDocument& doc, const OracleOptions& options = {});

/// Runs both engines (concurrently) and compares r-sequence, characteristic
/// sequence, coefficients and the Lemma 2 identity leading(P_k) =
/// prod_{j<k}(r_k - r_j) p^{k-1} c~_{r_k} a0^{2k-1}.
CheckReport cmd_check(const InputDocument& doc, bool time, const OracleOptions& options = {});

/// Compares two finished reports; returns the first disagreeing quantity or "".
std::string first_mismatch(const Report& engine, const Report& oracle);

/// Entry point of the cusp-char tool; args excludes the program name.
/// Exit codes: 0 Ok, 1 input error, 2 NonInjective, 3 undecided
/// (InsufficientPrecision, MaxStepsExceeded, IncompleteSequence),
/// 4 check mismatch.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cuspchar
