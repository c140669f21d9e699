#pragma once

#include <vector>

#include "jordan/flow.hpp"
#include "jordan/moment.hpp"
#include "jordan/tensor.hpp"

namespace jordan {

// Batch kernels over tensor collections. Each *_serial function is the
// reference the OpenMP version is tested against; results are identical
// because every item is computed independently.

std::vector<MomentReport> batch_soliton_check(const std::vector<StructureTensor>& mus,
                                              double tol = kSolitonTol, int jobs = 0);
std::vector<MomentReport> batch_soliton_check_serial(const std::vector<StructureTensor>& mus,
                                                     double tol = kSolitonTol);

std::vector<FlowTrace> batch_flow(const std::vector<StructureTensor>& mus,
                                  const FlowOptions& opts, int jobs = 0);
std::vector<FlowTrace> batch_flow_serial(const std::vector<StructureTensor>& mus,
                                         const FlowOptions& opts);

// Jordan defect with the outer quadruple index split across threads.
double jordan_defect_parallel(const StructureTensor& mu, int jobs = 0);

int max_threads();

}  // namespace jordan
