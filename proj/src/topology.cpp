#include "rwnca/topology.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rwnca {

Topology::Topology(int node_count, const std::vector<std::pair<int, int>>& undirected_edges) {
    node_count_ = node_count;
    if (node_count_ <= 0) throw Error("topology needs at least one node");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : undirected_edges) {
        if (u < 1 || u > node_count_ || v < 1 || v > node_count_)
            throw Error("edge references unknown node " + std::to_string(u < 1 || u > node_count_ ? u : v));
        if (u == v) throw Error("self-loop at node " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw Error("duplicate edge " + std::to_string(key.first) + "-" + std::to_string(key.second));
        int id = (int)links_.size() + 1;
        links_.push_back({id, u, v});
        links_.push_back({id + 1, v, u});
        reverse_of_.push_back(id + 1);
        reverse_of_.push_back(id);
    }
    index();
}

void Topology::index() {
    out_links_.assign(node_count_ + 1, {});
    in_links_.assign(node_count_ + 1, {});
    for (const Link& l : links_) {
        out_links_[l.from].push_back(l.id);
        in_links_[l.to].push_back(l.id);
    }
}

Topology Topology::parse(std::istream& in) {
    std::string line;
    int lineno = 0;
    int node_count = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only
        if (node_count < 0) {
            int n;
            if (first != "nodes" || !(ls >> n) || n <= 0)
                throw Error("line " + std::to_string(lineno) + ": expected 'nodes <N>'");
            std::string extra;
            if (ls >> extra) throw Error("line " + std::to_string(lineno) + ": trailing tokens");
            node_count = n;
            continue;
        }
        int u, v;
        std::string extra;
        std::istringstream es(line);
        if (!(es >> u >> v) || (es >> extra))
            throw Error("line " + std::to_string(lineno) + ": expected 'u v'");
        if (u < 1 || u > node_count || v < 1 || v > node_count)
            throw Error("line " + std::to_string(lineno) + ": unknown node id");
        if (u == v) throw Error("line " + std::to_string(lineno) + ": self-loop forbidden");
        edges.emplace_back(u, v);
    }
    if (node_count < 0) throw Error("empty topology document");
    try {
        return Topology(node_count, edges);
    } catch (const Error& e) {
        throw Error(std::string("topology: ") + e.what());
    }
}

Topology Topology::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open topology file: " + path);
    return parse(f);
}

int Topology::find_link(int u, int v) const {
    if (!has_node(u) || !has_node(v)) return 0;
    for (int id : out_links_[u])
        if (link(id).to == v) return id;
    return 0;
}

std::map<int, std::vector<int>> Topology::degree_histogram() const {
    std::map<int, std::vector<int>> h;
    for (int v = 1; v <= node_count_; ++v) h[undirected_degree(v)].push_back(v);
    return h;
}

std::vector<std::pair<int, int>> Topology::undirected_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const Link& l : links_)
        if (l.from < l.to) out.emplace_back(l.from, l.to);
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t Topology::fingerprint() const {
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix((uint64_t)node_count_);
    for (auto [u, v] : undirected_edges()) {
        mix((uint64_t)u);
        mix((uint64_t)v);
    }
    return h;
}

std::string Topology::fingerprint_hex() const {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fingerprint());
    return buf;
}

void Instance::check() const {
    if (wavelength_count < 1) throw Error("instance needs at least one wavelength");
    std::set<int> ids;
    for (const Demand& d : demands) {
        if (!topology.has_node(d.src) || !topology.has_node(d.dst))
            throw Error("demand " + std::to_string(d.id) + " references unknown node");
        if (d.src == d.dst) throw Error("demand " + std::to_string(d.id) + " has equal endpoints");
        if (!ids.insert(d.id).second) throw Error("duplicate demand id " + std::to_string(d.id));
    }
}

std::vector<Demand> all_to_one(const Topology& t, int dest) {
    if (!t.has_node(dest)) throw Error("unknown destination node " + std::to_string(dest));
    std::vector<Demand> out;
    int id = 1;
    for (int v = 1; v <= t.node_count(); ++v)
        if (v != dest) out.push_back({id++, v, dest});
    return out;
}

int cut_lower_bound(const Instance& inst, bool coding_enabled) {
    if (inst.demands.empty()) return 0;
    int dest = inst.demands.front().dst;
    for (const Demand& d : inst.demands)
        if (d.dst != dest) throw Error("cut bound requires a single shared destination");
    int n = (int)inst.demands.size();
    int arrivals = coding_enabled ? n + (n + 1) / 2 : 2 * n;
    int degree = inst.topology.undirected_degree(dest);
    if (degree == 0) throw Error("destination node is isolated");
    return (arrivals + degree - 1) / degree;
}

bool meets_coding_degree(const Topology& t) {
    for (int v = 1; v <= t.node_count(); ++v)
        if (t.undirected_degree(v) < 3) return false;
    return true;
}

}  // namespace rwnca
