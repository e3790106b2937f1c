#pragma once

#include <vector>

#include "romsched/construction.hpp"

namespace romsched {

struct SwapRecord {
    int delivery = 0;
    int reclaimer = 0;
    size_t index = 0;  // position of the first swapped job within the segment
    double dv2 = 0.0;
    double du = 0.0;
};

/// Segment-wise adjacent-swap local search. Walks deliveries in order and
/// reclaimers within each delivery; in segment x_d^r every adjacent pair swap
/// is replayed, the best strictly improving one is committed and the segment
/// rescanned, and the outer sweep repeats until a full pass commits nothing.
/// v1 is preserved exactly (swaps permute jobs within a delivery);
/// f never increases. Throws ModelError on an infeasible input.
Schedule improve(const Instance& inst, const Schedule& s,
                 std::vector<SwapRecord>* swap_log = nullptr);

}  // namespace romsched
