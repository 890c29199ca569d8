#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netrecon/graph.hpp"

namespace netrecon {

struct Infection {
    NodeId node;
    uint32_t time;

    friend bool operator==(const Infection&, const Infection&) = default;
};

// One realization of a spreading process: which nodes were infected and when.
// Infections are sorted by (time, node).
struct Cascade {
    uint32_t item = 0;
    std::vector<Infection> infections;
};

// A batch of independent cascades over a fixed node set, indexable both ways:
// adopters per item and adoptions per node.  Equivalent to the node x item
// incidence matrix plus the infection-time table.
class CascadeSet {
public:
    CascadeSet(NodeId n, uint32_t m) : n_(n), items_(m), node_adoptions_(n) {}

    static CascadeSet from_cascades(NodeId n, std::span<const Cascade> cascades);

    NodeId num_nodes() const { return n_; }
    uint32_t num_items() const { return static_cast<uint32_t>(items_.size()); }
    std::size_t num_records() const { return records_; }

    // Adopters of one item, sorted by node id.
    std::span<const Infection> item(uint32_t alpha) const { return items_[alpha]; }

    // (item, time) adoptions of one node, sorted by item id.
    std::span<const std::pair<uint32_t, uint32_t>> adoptions(NodeId i) const {
        return node_adoptions_[i];
    }
    uint32_t adoption_count(NodeId i) const {
        return static_cast<uint32_t>(node_adoptions_[i].size());
    }

    std::optional<uint32_t> time_of(NodeId i, uint32_t alpha) const;

    // Throws std::invalid_argument if (node, item) was already recorded or is
    // out of range.
    void add(NodeId node, uint32_t item, uint32_t time);

    // CSV with header "node,item,time", one row per infection event.
    // n/m default to max id + 1 unless overridden (override must cover data).
    static CascadeSet load_csv(std::istream& in, std::optional<NodeId> n_override = {},
                               std::optional<uint32_t> m_override = {});
    static CascadeSet load_csv_file(const std::string& path, std::optional<NodeId> n_override = {},
                                    std::optional<uint32_t> m_override = {});
    void save_csv(std::ostream& out) const;
    void save_csv_file(const std::string& path) const;

private:
    NodeId n_;
    std::size_t records_ = 0;
    std::vector<std::vector<Infection>> items_;
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> node_adoptions_;
};

} // namespace netrecon
