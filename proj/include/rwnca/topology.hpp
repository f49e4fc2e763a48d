#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rwnca {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A directed fiber link. Every physical (undirected) edge is expanded into
// two opposite directed links; `id` is 1-based.
struct Link {
    int id = 0;
    int from = 0;
    int to = 0;
};

// Physical topology. Nodes are 1..node_count to match common published
// node numbering. Immutable after construction.
class Topology {
  public:
    Topology() = default;
    Topology(int node_count, const std::vector<std::pair<int, int>>& undirected_edges);

    // Parses the plain-text format: first line "nodes <N>", then one
    // "u v" undirected edge per line. '#' starts a comment. Errors name
    // the offending 1-based line number.
    static Topology parse(std::istream& in);
    static Topology load_file(const std::string& path);

    int node_count() const { return node_count_; }
    const std::vector<Link>& links() const { return links_; }
    const Link& link(int id) const { return links_.at(id - 1); }
    int link_count() const { return (int)links_.size(); }
    int reverse_of(int link_id) const { return reverse_of_.at(link_id - 1); }

    const std::vector<int>& out_links(int node) const { return out_links_.at(node); }
    const std::vector<int>& in_links(int node) const { return in_links_.at(node); }

    bool has_node(int node) const { return node >= 1 && node <= node_count_; }
    int undirected_degree(int node) const { return (int)out_links_.at(node).size(); }
    int undirected_edge_count() const { return (int)links_.size() / 2; }

    // Link id of directed arc u->v, or 0 if absent.
    int find_link(int u, int v) const;

    // Undirected degree -> sorted node ids.
    std::map<int, std::vector<int>> degree_histogram() const;

    // Canonical undirected edge list (u < v), sorted; the inverse of the
    // directed expansion.
    std::vector<std::pair<int, int>> undirected_edges() const;

    // Stable content hash used to fingerprint solution files.
    uint64_t fingerprint() const;
    std::string fingerprint_hex() const;

  private:
    void index();

    int node_count_ = 0;
    std::vector<Link> links_;
    std::vector<int> reverse_of_;                 // link id -> reverse link id
    std::vector<std::vector<int>> out_links_;     // node -> outgoing link ids
    std::vector<std::vector<int>> in_links_;      // node -> incoming link ids
};

// A unit-capacity connection request.
struct Demand {
    int id = 0;
    int src = 0;
    int dst = 0;
};

// One planning problem: topology, demand set and per-link wavelength budget.
struct Instance {
    Topology topology;
    std::vector<Demand> demands;
    int wavelength_count = 0;  // wavelengths are indexed 1..wavelength_count

    void check() const;
};

// One demand from every node other than `dest` towards `dest`.
std::vector<Demand> all_to_one(const Topology& t, int dest);

// Counting bound on the number of wavelengths needed across the cut around
// the (single) destination: every working signal arrives individually and
// protection signals arrive at best pairwise-merged when coding is allowed.
// Requires all demands to share one destination.
int cut_lower_bound(const Instance& inst, bool coding_enabled);

// Every node must have degree >= 3 for a topology to be a sensible target
// for coding-aware planning; low-degree instances still build and solve.
bool meets_coding_degree(const Topology& t);

}  // namespace rwnca
