#pragma once

#include <vector>

#include "rwnca/topology.hpp"

namespace rwnca {

// A wavelength-continuous path: consecutive directed links from source to
// sink on one wavelength.
struct Lightpath {
    std::vector<int> link_ids;
    int wavelength = 0;

    std::vector<int> node_sequence(const Topology& t) const;
    bool uses_link(int link_id) const;
    // True if the path traverses the physical edge of `link_id` in either
    // direction.
    bool uses_edge(const Topology& t, int link_id) const;
};

enum class Configuration { network_side, client_side };

// Two demands whose protection signals are XOR-merged from `node` to their
// shared destination over `link_ids` on `wavelength`.
struct CodingGroup {
    int demand_a = 0;
    int demand_b = 0;
    int node = 0;
    std::vector<int> link_ids;
    int wavelength = 0;
};

struct DemandProvision {
    Demand demand;
    Lightpath working;
    Lightpath protection;
    Configuration configuration = Configuration::network_side;
};

struct Solution {
    std::vector<DemandProvision> demands;
    std::vector<CodingGroup> coding;

    const DemandProvision* find(int demand_id) const;
    const CodingGroup* coding_of(int demand_id) const;
    std::vector<int> used_wavelengths() const;
};

struct Metrics {
    int wavelength_count = 0;
    int client_side_count = 0;
    int transponder_count = 0;
};

}  // namespace rwnca
