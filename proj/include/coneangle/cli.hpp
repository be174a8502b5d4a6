#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coneangle::cli {

/// One row of the gamma_n lower-bound table: for a prime power q the pair
/// order is n = (q+1)(q^3+1) and the analytic cosine is
/// -sqrt(q^2+1)/(q+1). When `constructed` is set the row also carries the
/// parameters certified from the built elliptic quadrangle and the cosine
/// recomputed from them (the two routes must agree to 1e-10).
struct Table1Row {
  long long q = 0;
  long long n = 0;
  double cosine = 0.0;
  double angle = 0.0;
  double angle_over_pi = 0.0;
  bool constructed = false;
  long long srg_n = 0, srg_k = 0, srg_a = 0, srg_c = 0;
  double constructed_cosine = 0.0;
  long long cos2_num = 0, cos2_den = 0;
};

std::vector<Table1Row> table1_rows(long long qmax, bool construct);

/// Runs one CLI invocation. Exit codes: 0 success, 1 invalid input or
/// precondition violation, 2 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, char** argv);

}  // namespace coneangle::cli
