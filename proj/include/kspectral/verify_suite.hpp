#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kspectral {

enum class Suite { Kernels, Lemma, SBound, All };

struct VerifyOptions {
  Suite suite = Suite::All;
  double R = 2.0;
  int dim = 4;
  int samples = 10;
  std::uint64_t seed = 0;
  /// Slack on the theorem inequalities (PSD, S-bounds, lemma).
  double tol = 1e-6;
};

/// One check: passes iff measured <= bound.
struct VerifyRow {
  std::string name;
  double measured;
  double bound;
  bool pass;
};

std::vector<VerifyRow> run_verify(const VerifyOptions& options);

void write_verify_csv(std::ostream& out, const std::vector<VerifyRow>& rows);

}  // namespace kspectral
