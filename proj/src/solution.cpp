#include "rwnca/solution.hpp"

#include <algorithm>
#include <set>

namespace rwnca {

std::vector<int> Lightpath::node_sequence(const Topology& t) const {
    std::vector<int> nodes;
    if (link_ids.empty()) return nodes;
    nodes.push_back(t.link(link_ids.front()).from);
    for (int e : link_ids) nodes.push_back(t.link(e).to);
    return nodes;
}

bool Lightpath::uses_link(int link_id) const {
    return std::find(link_ids.begin(), link_ids.end(), link_id) != link_ids.end();
}

bool Lightpath::uses_edge(const Topology& t, int link_id) const {
    return uses_link(link_id) || uses_link(t.reverse_of(link_id));
}

const DemandProvision* Solution::find(int demand_id) const {
    for (const DemandProvision& p : demands)
        if (p.demand.id == demand_id) return &p;
    return nullptr;
}

const CodingGroup* Solution::coding_of(int demand_id) const {
    for (const CodingGroup& g : coding)
        if (g.demand_a == demand_id || g.demand_b == demand_id) return &g;
    return nullptr;
}

std::vector<int> Solution::used_wavelengths() const {
    std::set<int> used;
    for (const DemandProvision& p : demands) {
        used.insert(p.working.wavelength);
        used.insert(p.protection.wavelength);
    }
    return {used.begin(), used.end()};
}

}  // namespace rwnca
