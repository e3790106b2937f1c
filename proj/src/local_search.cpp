#include "romsched/local_search.hpp"

#include <algorithm>
#include <utility>

#include "romsched/objective.hpp"

namespace romsched {

Schedule improve(const Instance& inst, const Schedule& input,
                 std::vector<SwapRecord>* swap_log) {
    FeasibilityReport report = validate(inst, input);
    if (!report.ok)
        throw ModelError("improve: infeasible input schedule: " + report.violation);

    Schedule cur = input;
    ObjectiveValue cur_f = evaluate_schedule_unchecked(inst, cur);

    bool committed = true;
    while (committed) {
        committed = false;
        for (int d = 1; d <= cur.deliveries; ++d) {
            for (int r = 0; r < cur.reclaimers; ++r) {
                // scan this segment, commit its best improving swap, rescan
                while (true) {
                    const size_t len = cur.segment(d, r).size();
                    if (len < 2) break;

                    int best_i = -1;
                    Schedule best_sched;
                    ObjectiveValue best_f = cur_f;
                    for (size_t i = 0; i + 1 < len; ++i) {
                        Schedule cand = cur;
                        auto& seg = cand.segment(d, r);
                        // exchange the two slots; start times act as replay
                        // ordering keys, so they stay with the slot
                        std::swap(seg[i], seg[i + 1]);
                        std::swap(seg[i].start, seg[i + 1].start);

                        ReplayResult res = replay(inst, cand);
                        if (!res.ok) continue;
                        ObjectiveValue f = evaluate_schedule_unchecked(inst, res.schedule);
                        if (lex_less(f, best_f)) {
                            best_f = f;
                            best_sched = std::move(res.schedule);
                            best_i = int(i);
                        }
                    }
                    if (best_i < 0) break;
                    if (swap_log)
                        swap_log->push_back({d, r, size_t(best_i),
                                             best_f.v2 - cur_f.v2, best_f.u - cur_f.u});
                    cur = std::move(best_sched);
                    cur_f = best_f;
                    committed = true;
                }
            }
        }
    }
    return cur;
}

}  // namespace romsched
