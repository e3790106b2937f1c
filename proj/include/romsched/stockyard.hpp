#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace romsched {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent instance data (unknown cut ids, cyclic precedence, ...).
struct ModelError : Error {
    using Error::Error;
};

// Unreadable or schema-violating file.
struct ParseError : Error {
    using Error::Error;
};

/// Mechanical reclaiming direction of a machine arm.
enum class Direction : uint8_t { Phi1 = 0, Phi2 = 1 };

inline int direction_index(Direction d) { return d == Direction::Phi1 ? 0 : 1; }
inline int direction_label(Direction d) { return d == Direction::Phi1 ? 1 : 2; }

/// One reclamation action: a destination cut approached with a given direction.
struct Job {
    uint32_t cut = 0;
    Direction dir = Direction::Phi1;

    friend bool operator==(const Job& a, const Job& b) {
        return a.cut == b.cut && a.dir == b.dir;
    }
    friend bool operator<(const Job& a, const Job& b) {
        if (a.cut != b.cut) return a.cut < b.cut;
        return direction_index(a.dir) < direction_index(b.dir);
    }
};

/// A discretized slice of a stockpile. bench 1 is the top layer; position is
/// 1-based within the bench.
struct Cut {
    uint32_t id = 0;
    int row = 0;
    int stockpile = 0;
    int bench = 1;
    int position = 1;
    int material = 0;
    double tonnage = 0.0;       // gamma, tonnes
    double reclaim_time = 0.0;  // tau, minutes
    std::vector<double> grades; // m_{j,k}, one per mineral
};

/// Rectilinear travel model plus a penalty when the reclaiming direction flips.
struct CostModel {
    double row_move = 5.0;    // minutes per row step
    double col_move = 0.5;    // minutes per column step
    double dir_change = 10.0; // minutes added when directions differ
};

struct Reclaimer {
    int id = 0;
    std::vector<int> rows;            // adjacent pair, sorted
    std::vector<Direction> dirs;      // allowed directions
    uint32_t entry_cut = 0;           // fixed initial job c_0^r
    Direction entry_dir = Direction::Phi1;
};

struct Bounds {
    double lo = 0.0;
    double hi = 0.0;
};

struct Delivery {
    int id = 1;  // 1-based
    int material = 0;
    double tonnage = 0.0;        // target gamma
    std::vector<Bounds> bounds;  // per mineral
};

/// Full problem instance: stockyard graph, machines, deliveries and cost
/// structure. finalize() derives the precedence relation from cut coordinates
/// (within-bench chain from the direction's entry end, plus the overlying cut
/// one bench above) and validates model invariants.
class Instance {
public:
    std::string name;
    int minerals = 0;
    int directions = 1;          // number of declared directions (1 or 2)
    int safety_min_columns = 10; // s_min
    int cuts_per_bench = 10;     // bench width, defines the column coordinate
    CostModel cost;
    std::vector<Cut> cuts;
    std::vector<Reclaimer> reclaimers;
    std::vector<Delivery> deliveries;

    void finalize();  // throws ModelError
    bool finalized() const { return finalized_; }

    size_t cut_count() const { return cuts.size(); }
    int column(uint32_t cut) const {
        const Cut& c = cuts[cut];
        return c.stockpile * cuts_per_bench + (c.position - 1);
    }
    bool direction_declared(Direction d) const {
        return directions >= 2 || d == Direction::Phi1;
    }

    const std::vector<uint32_t>& predecessors(Job j) const {
        return preds_[direction_index(j.dir)][j.cut];
    }
    const std::vector<uint32_t>& successors(Direction d, uint32_t cut) const {
        return succs_[direction_index(d)][cut];
    }

    /// Entry cut of a stockpile for a direction (zero-predecessor cut of the
    /// top bench), or -1 if the (row, stockpile) pair holds no cuts.
    int entry_cut(int row, int stockpile, Direction d) const;

    double relocation_cost(Job from, Job to) const;  // minutes, >= 0
    double job_cost(Job prev, Job next) const;       // relocation + tau of next

    bool same_row(uint32_t a, uint32_t b) const { return cuts[a].row == cuts[b].row; }
    bool safety_conflict(uint32_t a, uint32_t b) const {
        return same_row(a, b) && std::abs(column(a) - column(b)) <= safety_min_columns;
    }

    /// Jobs currently reachable by a reclaimer: allowed direction, accessible
    /// row, not yet reclaimed, all predecessors reclaimed. No material or
    /// safety filtering (the construction engine layers those on top).
    std::vector<Job> accessible_cuts(const std::vector<bool>& reclaimed,
                                     const Reclaimer& r) const;

    /// Cut ids of one material kind, ascending.
    const std::vector<uint32_t>& cuts_of_material(int m) const {
        static const std::vector<uint32_t> empty;
        return m >= 0 && m < int(material_cuts_.size()) ? material_cuts_[size_t(m)] : empty;
    }
    int material_kinds() const { return int(material_cuts_.size()); }

    double total_tonnage(int material, const std::vector<int>& rows) const;

private:
    void build_precedence();
    void check_invariants() const;

    bool finalized_ = false;
    std::vector<std::vector<uint32_t>> preds_[2];
    std::vector<std::vector<uint32_t>> succs_[2];
    std::vector<std::vector<uint32_t>> material_cuts_;
    std::map<std::tuple<int, int, int, int>, uint32_t> coord_index_;
};

}  // namespace romsched
