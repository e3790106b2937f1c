#include "romsched/stockyard.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace romsched {

namespace {

std::string coord_string(const Cut& c) {
    std::ostringstream os;
    os << "(row " << c.row << ", stockpile " << c.stockpile << ", bench " << c.bench
       << ", position " << c.position << ")";
    return os.str();
}

}  // namespace

void Instance::build_precedence() {
    coord_index_.clear();
    for (const Cut& c : cuts) {
        auto key = std::make_tuple(c.row, c.stockpile, c.bench, c.position);
        auto [it, inserted] = coord_index_.emplace(key, c.id);
        if (!inserted)
            throw ModelError("duplicate cut coordinates " + coord_string(c));
    }

    auto find = [&](int row, int sp, int bench, int pos) -> int {
        auto it = coord_index_.find(std::make_tuple(row, sp, bench, pos));
        return it == coord_index_.end() ? -1 : int(it->second);
    };

    for (int di = 0; di < 2; ++di) {
        preds_[di].assign(cuts.size(), {});
        succs_[di].assign(cuts.size(), {});
    }
    for (const Cut& c : cuts) {
        // Within-bench chain from the direction's entry end, plus the
        // overlying cut one bench above.
        int west = find(c.row, c.stockpile, c.bench, c.position - 1);
        int east = find(c.row, c.stockpile, c.bench, c.position + 1);
        int above = find(c.row, c.stockpile, c.bench - 1, c.position);
        auto add = [&](Direction d, int pred) {
            if (pred < 0) return;
            preds_[direction_index(d)][c.id].push_back(uint32_t(pred));
            succs_[direction_index(d)][uint32_t(pred)].push_back(c.id);
        };
        add(Direction::Phi1, west);
        add(Direction::Phi2, east);
        add(Direction::Phi1, above);
        add(Direction::Phi2, above);
    }
}

void Instance::check_invariants() const {
    if (cuts.empty()) throw ModelError("instance has no cuts");
    if (minerals <= 0) throw ModelError("instance declares no minerals");
    if (directions != 1 && directions != 2)
        throw ModelError("directions must be 1 or 2");
    if (deliveries.empty()) throw ModelError("instance has no deliveries");
    if (reclaimers.empty()) throw ModelError("instance has no reclaimers");
    if (safety_min_columns < 0) throw ModelError("negative safety distance");
    if (cost.row_move < 0 || cost.col_move < 0 || cost.dir_change < 0)
        throw ModelError("negative relocation cost component");

    for (size_t i = 0; i < cuts.size(); ++i) {
        const Cut& c = cuts[i];
        if (c.id != i) throw ModelError("cut ids must be dense and ordered");
        if (!(c.tonnage > 0.0))
            throw ModelError("cut " + std::to_string(c.id) + ": tonnage must be > 0");
        if (!(c.reclaim_time > 0.0))
            throw ModelError("cut " + std::to_string(c.id) + ": reclaim_time must be > 0");
        if (int(c.grades.size()) != minerals)
            throw ModelError("cut " + std::to_string(c.id) + ": expected " +
                             std::to_string(minerals) + " grades, got " +
                             std::to_string(c.grades.size()));
        if (c.bench < 1 || c.position < 1)
            throw ModelError("cut " + std::to_string(c.id) + ": bench and position are 1-based");
        if (c.material < 0)
            throw ModelError("cut " + std::to_string(c.id) + ": negative material kind");
    }

    for (size_t i = 0; i < deliveries.size(); ++i) {
        const Delivery& d = deliveries[i];
        if (d.id != int(i) + 1) throw ModelError("delivery ids must be 1..D in order");
        if (!(d.tonnage > 0.0))
            throw ModelError("delivery " + std::to_string(d.id) + ": target tonnage must be > 0");
        if (int(d.bounds.size()) != minerals)
            throw ModelError("delivery " + std::to_string(d.id) + ": expected " +
                             std::to_string(minerals) + " quality bounds");
        for (int k = 0; k < minerals; ++k) {
            const Bounds& b = d.bounds[size_t(k)];
            if (b.lo > b.hi)
                throw ModelError("delivery " + std::to_string(d.id) + ", mineral " +
                                 std::to_string(k) + ": lower bound " + std::to_string(b.lo) +
                                 " exceeds upper bound " + std::to_string(b.hi));
            if (b.lo == 0.0 || b.hi == 0.0)
                throw ModelError("delivery " + std::to_string(d.id) + ", mineral " +
                                 std::to_string(k) + ": zero quality bound is degenerate");
        }
    }

    std::set<uint32_t> entries;
    for (size_t i = 0; i < reclaimers.size(); ++i) {
        const Reclaimer& r = reclaimers[i];
        if (r.id != int(i)) throw ModelError("reclaimer ids must be 0..R-1 in order");
        if (r.rows.empty() || r.rows.size() > 2)
            throw ModelError("reclaimer " + std::to_string(r.id) + ": needs 1 or 2 accessible rows");
        if (r.rows.size() == 2 && r.rows[1] != r.rows[0] + 1)
            throw ModelError("reclaimer " + std::to_string(r.id) + ": rows must be adjacent");
        if (r.dirs.empty()) throw ModelError("reclaimer " + std::to_string(r.id) + ": no directions");
        for (Direction d : r.dirs)
            if (!direction_declared(d))
                throw ModelError("reclaimer " + std::to_string(r.id) +
                                 ": uses an undeclared direction");
        if (r.entry_cut >= cuts.size())
            throw ModelError("reclaimer " + std::to_string(r.id) + ": unknown entry cut");
        if (!entries.insert(r.entry_cut).second)
            throw ModelError("two reclaimers share entry cut " + std::to_string(r.entry_cut));
        if (std::find(r.rows.begin(), r.rows.end(), cuts[r.entry_cut].row) == r.rows.end())
            throw ModelError("reclaimer " + std::to_string(r.id) +
                             ": entry cut outside its accessible rows");
        if (!predecessors({r.entry_cut, r.entry_dir}).empty())
            throw ModelError("reclaimer " + std::to_string(r.id) +
                             ": entry cut has predecessors under its initial direction");
        if (cuts[r.entry_cut].material != deliveries[0].material)
            throw ModelError("reclaimer " + std::to_string(r.id) +
                             ": entry cut material does not match delivery 1");
    }
    // Lateral order: accessible row intervals must not regress, so machine
    // paths cannot cross.
    for (size_t i = 0; i + 1 < reclaimers.size(); ++i) {
        if (reclaimers[i].rows.front() > reclaimers[i + 1].rows.front() ||
            reclaimers[i].rows.back() > reclaimers[i + 1].rows.back())
            throw ModelError("reclaimer rows are not laterally ordered");
    }
    // Initial positions must respect the safety distance pairwise.
    for (size_t i = 0; i < reclaimers.size(); ++i)
        for (size_t j = i + 1; j < reclaimers.size(); ++j)
            if (safety_conflict(reclaimers[i].entry_cut, reclaimers[j].entry_cut))
                throw ModelError("entry cuts of reclaimers " + std::to_string(i) + " and " +
                                 std::to_string(j) + " violate the safety distance");

    // Precedence must be acyclic for each declared direction (Kahn).
    for (int di = 0; di < directions; ++di) {
        std::vector<int> indeg(cuts.size(), 0);
        for (size_t c = 0; c < cuts.size(); ++c) indeg[c] = int(preds_[di][c].size());
        std::vector<uint32_t> queue;
        for (size_t c = 0; c < cuts.size(); ++c)
            if (indeg[c] == 0) queue.push_back(uint32_t(c));
        size_t seen = 0;
        while (seen < queue.size()) {
            uint32_t c = queue[seen++];
            for (uint32_t s : succs_[di][c])
                if (--indeg[s] == 0) queue.push_back(s);
        }
        if (seen != cuts.size())
            throw ModelError("cyclic precedence under direction " + std::to_string(di + 1));
    }
}

void Instance::finalize() {
    build_precedence();
    check_invariants();
    material_cuts_.clear();
    for (const Cut& c : cuts) {
        if (size_t(c.material) >= material_cuts_.size())
            material_cuts_.resize(size_t(c.material) + 1);
        material_cuts_[size_t(c.material)].push_back(c.id);
    }
    finalized_ = true;
}

int Instance::entry_cut(int row, int stockpile, Direction d) const {
    int best = -1;
    for (const Cut& c : cuts) {
        if (c.row != row || c.stockpile != stockpile) continue;
        if (!preds_[direction_index(d)][c.id].empty()) continue;
        if (best < 0) best = int(c.id);
    }
    return best;
}

double Instance::relocation_cost(Job from, Job to) const {
    if (from.cut >= cuts.size() || to.cut >= cuts.size())
        throw ModelError("relocation_cost: unknown cut id");
    const Cut& a = cuts[from.cut];
    const Cut& b = cuts[to.cut];
    double c = std::abs(a.row - b.row) * cost.row_move +
               std::abs(column(from.cut) - column(to.cut)) * cost.col_move;
    if (from.dir != to.dir) c += cost.dir_change;
    return c;
}

double Instance::job_cost(Job prev, Job next) const {
    return relocation_cost(prev, next) + cuts[next.cut].reclaim_time;
}

std::vector<Job> Instance::accessible_cuts(const std::vector<bool>& reclaimed,
                                           const Reclaimer& r) const {
    std::vector<Job> out;
    for (const Cut& c : cuts) {
        if (std::find(r.rows.begin(), r.rows.end(), c.row) == r.rows.end()) continue;
        if (reclaimed[c.id]) continue;
        for (Direction d : r.dirs) {
            bool ready = true;
            for (uint32_t p : preds_[direction_index(d)][c.id])
                if (!reclaimed[p]) { ready = false; break; }
            if (ready) out.push_back({c.id, d});
        }
    }
    return out;
}

double Instance::total_tonnage(int material, const std::vector<int>& rows) const {
    double t = 0.0;
    for (const Cut& c : cuts)
        if (c.material == material &&
            std::find(rows.begin(), rows.end(), c.row) != rows.end())
            t += c.tonnage;
    return t;
}

}  // namespace romsched
