#pragma once

#include "vertexlab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vtx {

struct SuiteParams {
    std::string algebra = "sl2-adjoint";
    int max_weight = 3;   // W: howe-dims weight bound
    int max_degree = 6;   // component degree bound
    int level = 1;        // N: variable-level truncation
    int max_level = 2;    // component total-level bound
    uint64_t seed = 0;
    bool extended = false;
    std::string cache_dir;
};

/// suite registry: ope-currents, virasoro, identities, commutant-membership,
/// gr-compat, weyl, tau-independence, groebner, theorem41, howe-dims, all
std::vector<std::string> suite_names();

VerificationReport run_suite(const std::string& name, const SuiteParams& params);

/// dimension of the joint kernel of {v^u(n) : u, 0 <= n <= w+1} on the
/// weight-w, degree <= 2w component of S(V) for the sl(2)-adjoint spec
long howe_kernel_dim(int w);

}  // namespace vtx
