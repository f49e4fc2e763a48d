#include "rwnca/model_build.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

namespace rwnca {

namespace {

std::string fmt(const char* pattern, int a, int b = -1, int c = -1, int d = -1, int e = -1) {
    char buf[96];
    snprintf(buf, sizeof buf, pattern, a, b, c, d, e);
    return buf;
}

// Canonical representatives of physical edges: directed links whose id is
// smaller than their reverse.
std::vector<int> canonical_edges(const Topology& t) {
    std::vector<int> out;
    for (const Link& l : t.links())
        if (l.id < t.reverse_of(l.id)) out.push_back(l.id);
    return out;
}

}  // namespace

std::vector<std::vector<VarId>> VarCatalog::wavelength_blocks() const {
    std::vector<std::vector<VarId>> blocks;
    for (int w = 1; w <= W_; ++w) {
        std::vector<VarId> b;
        b.push_back(wl_used(w));
        for (int d = 1; d <= D_; ++d) {
            b.push_back(work_wl(d, w));
            b.push_back(prot_wl(d, w));
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

BuiltModel build_model(const Instance& inst, const DesignSpec& spec) {
    inst.check();
    const Topology& t = inst.topology;
    const int D = (int)inst.demands.size();
    const int V = t.node_count();
    const int E = t.link_count();
    const int W = inst.wavelength_count;

    for (int i = 0; i < D; ++i)
        if (inst.demands[i].id != i + 1)
            throw Error("demand ids must be 1..|D| in order");
    if (spec.coding_enabled) {
        for (const Demand& d : inst.demands)
            if (d.dst != inst.demands.front().dst)
                throw Error("coding-enabled instances must share a single destination");
    }

    ModelBuilder b;
    VarCatalog cat;
    cat.D_ = D;
    cat.V_ = V;
    cat.E_ = E;
    cat.W_ = W;
    cat.has_coding_ = spec.coding_enabled;
    cat.has_split_ = spec.secondary_objective;

    // Variable creation order doubles as the deterministic branching and
    // tie-breaking order: global wavelength indicators first, then
    // per-demand wavelength choices, pairing, routing, and finally the
    // derived per-link usage indicators.
    for (int w = 1; w <= W; ++w) cat.wl_used_.push_back(b.add_var(fmt("wu_w%d", w)));
    if (cat.has_split_)
        for (int d = 1; d <= D; ++d) cat.wl_split_.push_back(b.add_var(fmt("sp_d%d", d)));
    for (int d = 1; d <= D; ++d)
        for (int w = 1; w <= W; ++w) cat.work_wl_.push_back(b.add_var(fmt("wa_d%d_w%d", d, w)));
    for (int d = 1; d <= D; ++d)
        for (int w = 1; w <= W; ++w) cat.prot_wl_.push_back(b.add_var(fmt("wb_d%d_w%d", d, w)));
    if (spec.coding_enabled) {
        for (int d1 = 1; d1 <= D; ++d1)
            for (int d2 = 1; d2 <= D; ++d2)
                cat.code_pair_.push_back(b.add_var(fmt("cp_d%d_d%d", d1, d2)));
        for (int d = 1; d <= D; ++d)
            for (int v = 1; v <= V; ++v) cat.code_node_.push_back(b.add_var(fmt("cn_d%d_n%d", d, v)));
    }
    for (int d = 1; d <= D; ++d)
        for (int e = 1; e <= E; ++e)
            for (int w = 1; w <= W; ++w)
                cat.work_link_.push_back(b.add_var(fmt("x_d%d_e%d_w%d", d, e, w)));
    for (int d = 1; d <= D; ++d)
        for (int e = 1; e <= E; ++e)
            for (int w = 1; w <= W; ++w)
                cat.prot_link_.push_back(b.add_var(fmt("y_d%d_e%d_w%d", d, e, w)));
    if (spec.coding_enabled)
        for (int d = 1; d <= D; ++d)
            for (int v = 1; v <= V; ++v)
                for (int e = 1; e <= E; ++e)
                    for (int w = 1; w <= W; ++w)
                        cat.code_flow_.push_back(b.add_var(fmt("z_d%d_n%d_e%d_w%d", d, v, e, w)));
    for (int e = 1; e <= E; ++e)
        for (int w = 1; w <= W; ++w) cat.link_used_.push_back(b.add_var(fmt("lu_e%d_w%d", e, w)));

    const std::vector<int> edges = canonical_edges(t);
    const Rational half(1, 2);

    // Each demand picks exactly one working wavelength, and as many
    // protection wavelengths as working ones.
    for (int d = 1; d <= D; ++d) {
        std::vector<LinTerm> terms;
        for (int w = 1; w <= W; ++w) terms.push_back({cat.work_wl(d, w), 1});
        b.add_row(fmt("wassign_d%d", d), std::move(terms), Rel::eq, 1);
    }
    for (int d = 1; d <= D; ++d) {
        std::vector<LinTerm> terms;
        for (int w = 1; w <= W; ++w) terms.push_back({cat.work_wl(d, w), 1});
        for (int w = 1; w <= W; ++w) terms.push_back({cat.prot_wl(d, w), -1});
        b.add_row(fmt("wpmatch_d%d", d), std::move(terms), Rel::eq, 0);
    }

    // Unit flow conservation per demand, node and wavelength, separately for
    // the working and protection layer.
    auto add_flow_rows = [&](bool protection) {
        for (int d = 1; d <= D; ++d) {
            const Demand& dem = inst.demands[d - 1];
            for (int v = 1; v <= V; ++v) {
                for (int w = 1; w <= W; ++w) {
                    std::vector<LinTerm> terms;
                    for (int e : t.out_links(v))
                        terms.push_back({protection ? cat.prot_link(d, e, w) : cat.work_link(d, e, w), 1});
                    for (int e : t.in_links(v))
                        terms.push_back({protection ? cat.prot_link(d, e, w) : cat.work_link(d, e, w), -1});
                    VarId pick = protection ? cat.prot_wl(d, w) : cat.work_wl(d, w);
                    if (v == dem.src)
                        terms.push_back({pick, -1});
                    else if (v == dem.dst)
                        terms.push_back({pick, 1});
                    b.add_row(fmt(protection ? "flow_p_d%d_n%d_w%d" : "flow_w_d%d_n%d_w%d", d, v, w),
                              std::move(terms), Rel::eq, 0);
                }
            }
        }
    };
    add_flow_rows(false);
    add_flow_rows(true);

    // Working and protection routes of one demand never touch the same
    // physical edge (in either direction); a fiber cut severs both
    // directions at once.
    for (int d = 1; d <= D; ++d) {
        for (int e : edges) {
            int r = t.reverse_of(e);
            std::vector<LinTerm> terms;
            for (int w = 1; w <= W; ++w) {
                terms.push_back({cat.work_link(d, e, w), 1});
                terms.push_back({cat.work_link(d, r, w), 1});
                terms.push_back({cat.prot_link(d, e, w), 1});
                terms.push_back({cat.prot_link(d, r, w), 1});
            }
            b.add_row(fmt("disj_d%d_p%d", d, e), std::move(terms), Rel::le, 1);
        }
    }

    // Wavelength singleness per directed link: plain signals occupy a slot
    // each; a merged coded pair (two protection flows with two coded-flow
    // marks) nets out to a single occupancy.
    for (int e = 1; e <= E; ++e) {
        for (int w = 1; w <= W; ++w) {
            std::vector<LinTerm> terms;
            for (int d = 1; d <= D; ++d) terms.push_back({cat.work_link(d, e, w), 1});
            for (int d = 1; d <= D; ++d) terms.push_back({cat.prot_link(d, e, w), 1});
            if (spec.coding_enabled)
                for (int d = 1; d <= D; ++d)
                    for (int v = 1; v <= V; ++v) terms.push_back({cat.code_flow(d, v, e, w), -half});
            terms.push_back({cat.link_used(e, w), -1});
            b.add_row(fmt("cap_e%d_w%d", e, w), std::move(terms), Rel::le, 0);
        }
    }

    if (spec.coding_enabled) {
        // At most one coding node per demand, never its destination.
        for (int d = 1; d <= D; ++d) {
            std::vector<LinTerm> terms;
            for (int v = 1; v <= V; ++v) terms.push_back({cat.code_node(d, v), 1});
            b.add_row(fmt("cnone_d%d", d), std::move(terms), Rel::le, 1);
            b.add_row(fmt("cndst_d%d", d), {{cat.code_node(d, inst.demands[d - 1].dst), 1}},
                      Rel::eq, 0);
        }
        // A demand encoded at v sends at least one coded flow out of v.
        for (int d = 1; d <= D; ++d) {
            for (int v = 1; v <= V; ++v) {
                std::vector<LinTerm> terms{{cat.code_node(d, v), 1}};
                for (int e : t.out_links(v))
                    for (int w = 1; w <= W; ++w) terms.push_back({cat.code_flow(d, v, e, w), -1});
                b.add_row(fmt("cnout_d%d_n%d", d, v), std::move(terms), Rel::le, 0);
            }
        }
        // Pairing: at most one partner, same destination only, symmetric,
        // and paired exactly when a coding node exists.
        for (int d1 = 1; d1 <= D; ++d1) {
            std::vector<LinTerm> terms;
            for (int d2 = 1; d2 <= D; ++d2) terms.push_back({cat.code_pair(d1, d2), 1});
            b.add_row(fmt("pairone_d%d", d1), std::move(terms), Rel::le, 1);
        }
        for (int d1 = 1; d1 <= D; ++d1) {
            std::vector<LinTerm> terms{{cat.code_pair(d1, d1), 1}};
            for (int d2 = 1; d2 <= D; ++d2)
                if (d2 != d1 && inst.demands[d2 - 1].dst != inst.demands[d1 - 1].dst)
                    terms.push_back({cat.code_pair(d1, d2), 1});
            b.add_row(fmt("pairdst_d%d", d1), std::move(terms), Rel::eq, 0);
        }
        for (int d1 = 1; d1 <= D; ++d1)
            for (int d2 = d1 + 1; d2 <= D; ++d2)
                b.add_row(fmt("pairsym_d%d_d%d", d1, d2),
                          {{cat.code_pair(d1, d2), 1}, {cat.code_pair(d2, d1), -1}}, Rel::eq, 0);
        for (int d1 = 1; d1 <= D; ++d1) {
            std::vector<LinTerm> terms;
            for (int d2 = 1; d2 <= D; ++d2) terms.push_back({cat.code_pair(d1, d2), 1});
            for (int v = 1; v <= V; ++v) terms.push_back({cat.code_node(d1, v), -1});
            b.add_row(fmt("paircn_d%d", d1), std::move(terms), Rel::eq, 0);
        }
        // Coded flows exist only for paired demands, only out of the
        // demand's coding node, and a formed pair carries coded flow.
        for (int d1 = 1; d1 <= D; ++d1) {
            for (int e = 1; e <= E; ++e) {
                std::vector<LinTerm> terms;
                for (int v = 1; v <= V; ++v)
                    for (int w = 1; w <= W; ++w) terms.push_back({cat.code_flow(d1, v, e, w), 1});
                for (int d2 = 1; d2 <= D; ++d2) terms.push_back({cat.code_pair(d1, d2), -1});
                b.add_row(fmt("codepaired_d%d_e%d", d1, e), std::move(terms), Rel::le, 0);
            }
        }
        for (int d = 1; d <= D; ++d)
            for (int v = 1; v <= V; ++v)
                for (int e = 1; e <= E; ++e) {
                    std::vector<LinTerm> terms;
                    for (int w = 1; w <= W; ++w) terms.push_back({cat.code_flow(d, v, e, w), 1});
                    terms.push_back({cat.code_node(d, v), -1});
                    b.add_row(fmt("codeatcn_d%d_n%d_e%d", d, v, e), std::move(terms), Rel::le, 0);
                }
        for (int d1 = 1; d1 <= D; ++d1)
            for (int d2 = d1 + 1; d2 <= D; ++d2) {
                std::vector<LinTerm> terms{{cat.code_pair(d1, d2), 1}};
                for (int v = 1; v <= V; ++v)
                    for (int e = 1; e <= E; ++e)
                        for (int w = 1; w <= W; ++w) {
                            terms.push_back({cat.code_flow(d1, v, e, w), -half});
                            terms.push_back({cat.code_flow(d2, v, e, w), -half});
                        }
                b.add_row(fmt("pairhascode_d%d_d%d", d1, d2), std::move(terms), Rel::le, 0);
            }
        // Partners share coded flows and the coding node exactly.
        for (int d1 = 1; d1 <= D; ++d1)
            for (int d2 = d1 + 1; d2 <= D; ++d2)
                for (int v = 1; v <= V; ++v) {
                    for (int e = 1; e <= E; ++e)
                        for (int w = 1; w <= W; ++w) {
                            VarId z1 = cat.code_flow(d1, v, e, w);
                            VarId z2 = cat.code_flow(d2, v, e, w);
                            VarId cp = cat.code_pair(d1, d2);
                            b.add_row(fmt("codeq_a_d%d_d%d_n%d_e%d_w%d", d1, d2, v, e, w),
                                      {{z1, 1}, {z2, -1}, {cp, 1}}, Rel::le, 1);
                            b.add_row(fmt("codeq_b_d%d_d%d_n%d_e%d_w%d", d1, d2, v, e, w),
                                      {{z2, 1}, {z1, -1}, {cp, 1}}, Rel::le, 1);
                        }
                    VarId n1 = cat.code_node(d1, v);
                    VarId n2 = cat.code_node(d2, v);
                    VarId cp = cat.code_pair(d1, d2);
                    b.add_row(fmt("cneq_a_d%d_d%d_n%d", d1, d2, v), {{n1, 1}, {n2, -1}, {cp, 1}},
                              Rel::le, 1);
                    b.add_row(fmt("cneq_b_d%d_d%d_n%d", d1, d2, v), {{n2, 1}, {n1, -1}, {cp, 1}},
                              Rel::le, 1);
                }
        // Recovery: a coded pair keeps both workings and each working vs.
        // the partner's protection physically disjoint, so any single cut
        // leaves the XOR decodable.
        for (int d1 = 1; d1 <= D; ++d1)
            for (int d2 = d1 + 1; d2 <= D; ++d2)
                for (int e : edges) {
                    int r = t.reverse_of(e);
                    std::vector<LinTerm> terms;
                    for (int w = 1; w <= W; ++w) {
                        terms.push_back({cat.work_link(d1, e, w), 1});
                        terms.push_back({cat.work_link(d1, r, w), 1});
                        terms.push_back({cat.work_link(d2, e, w), 1});
                        terms.push_back({cat.work_link(d2, r, w), 1});
                    }
                    terms.push_back({cat.code_pair(d1, d2), 1});
                    b.add_row(fmt("recww_d%d_d%d_p%d", d1, d2, e), std::move(terms), Rel::le, 2);
                }
        for (int d1 = 1; d1 <= D; ++d1)
            for (int d2 = 1; d2 <= D; ++d2) {
                if (d1 == d2) continue;
                for (int e : edges) {
                    int r = t.reverse_of(e);
                    std::vector<LinTerm> terms;
                    for (int w = 1; w <= W; ++w) {
                        terms.push_back({cat.work_link(d1, e, w), 1});
                        terms.push_back({cat.work_link(d1, r, w), 1});
                        terms.push_back({cat.prot_link(d2, e, w), 1});
                        terms.push_back({cat.prot_link(d2, r, w), 1});
                    }
                    terms.push_back({cat.code_pair(d1, d2), 1});
                    b.add_row(fmt("recwp_d%d_d%d_p%d", d1, d2, e), std::move(terms), Rel::le, 2);
                }
            }
        // Coding rides on the protection route only.
        for (int d = 1; d <= D; ++d)
            for (int e = 1; e <= E; ++e)
                for (int w = 1; w <= W; ++w) {
                    std::vector<LinTerm> terms;
                    for (int v = 1; v <= V; ++v) terms.push_back({cat.code_flow(d, v, e, w), 1});
                    terms.push_back({cat.prot_link(d, e, w), -1});
                    b.add_row(fmt("codeonprot_d%d_e%d_w%d", d, e, w), std::move(terms), Rel::le, 0);
                }
        // Coded flow conservation: one unit from the coding node to the
        // destination.
        for (int d = 1; d <= D; ++d) {
            const Demand& dem = inst.demands[d - 1];
            for (int v = 1; v <= V; ++v) {
                for (int i = 1; i <= V; ++i) {
                    std::vector<LinTerm> terms;
                    for (int e : t.out_links(i))
                        for (int w = 1; w <= W; ++w) terms.push_back({cat.code_flow(d, v, e, w), 1});
                    for (int e : t.in_links(i))
                        for (int w = 1; w <= W; ++w) terms.push_back({cat.code_flow(d, v, e, w), -1});
                    if (i == v)
                        terms.push_back({cat.code_node(d, v), -1});
                    else if (i == dem.dst)
                        terms.push_back({cat.code_node(d, v), 1});
                    b.add_row(fmt("codeflow_d%d_n%d_i%d", d, v, i), std::move(terms), Rel::eq, 0);
                }
            }
        }
    }

    // A wavelength is used by the network when any link carries it.
    for (int w = 1; w <= W; ++w) {
        std::vector<LinTerm> terms;
        for (int e = 1; e <= E; ++e) terms.push_back({cat.link_used(e, w), 1});
        terms.push_back({cat.wl_used(w), -E});
        b.add_row(fmt("wldef_w%d", w), std::move(terms), Rel::le, 0);
    }

    // Same-wavelength designs pin the protection wavelength to the working
    // one per demand and wavelength.
    if (spec.force_same_wavelength)
        for (int d = 1; d <= D; ++d)
            for (int w = 1; w <= W; ++w)
                b.add_row(fmt("samewl_d%d_w%d", d, w),
                          {{cat.work_wl(d, w), 1}, {cat.prot_wl(d, w), -1}}, Rel::eq, 0);

    return {b.build(), cat};
}

MilpModel set_weighted_objective(MilpModel m, const VarCatalog& cat, const Rational& c1,
                                 const Rational& c2) {
    if (!c2.is_zero() && !cat.has_split())
        throw Error("secondary weight requires client-side indicator variables; "
                    "the design pins both paths to one wavelength");
    std::vector<LinTerm> obj;
    for (int w = 1; w <= cat.wavelength_count(); ++w) obj.push_back({cat.wl_used(w), c1});
    if (!c2.is_zero())
        for (int d = 1; d <= cat.demand_count(); ++d) obj.push_back({cat.wl_split(d), c2});

    // Models are immutable, so reconstruct through a fresh builder.
    ModelBuilder nb;
    for (VarId v = 0; v < m.var_count(); ++v) nb.add_var(m.var_name(v));
    for (const Row& r : m.rows()) nb.add_row(r);
    if (cat.has_split()) {
        bool already = false;
        for (const Row& r : m.rows())
            if (r.name == "split_ge_d1_w1") { already = true; break; }
        if (!already) {
            const Rational half(1, 2);
            for (int d = 1; d <= cat.demand_count(); ++d)
                for (int w = 1; w <= cat.wavelength_count(); ++w) {
                    nb.add_row(fmt("split_ge_d%d_w%d", d, w),
                               {{cat.work_wl(d, w), half},
                                {cat.prot_wl(d, w), -half},
                                {cat.wl_split(d), -1}},
                               Rel::le, 0);
                    nb.add_row(fmt("split_le_d%d_w%d", d, w),
                               {{cat.prot_wl(d, w), half},
                                {cat.work_wl(d, w), -half},
                                {cat.wl_split(d), -1}},
                               Rel::le, 0);
                }
        }
    }
    nb.set_objective(std::move(obj));
    return nb.build();
}

std::vector<LinTerm> wavelength_objective_terms(const VarCatalog& cat) {
    std::vector<LinTerm> t;
    for (int w = 1; w <= cat.wavelength_count(); ++w) t.push_back({cat.wl_used(w), 1});
    return t;
}

std::vector<LinTerm> split_objective_terms(const VarCatalog& cat) {
    std::vector<LinTerm> t;
    for (int d = 1; d <= cat.demand_count(); ++d) t.push_back({cat.wl_split(d), 1});
    return t;
}

namespace {

// Follows a set of selected links from `src` to `dst`; rejects branching,
// cycles, revisits and unused leftovers.
Lightpath trace_path(const Topology& t, const std::set<int>& links, int src, int dst, int w,
                     const std::string& what) {
    std::map<int, int> next;  // from-node -> link id
    for (int e : links) {
        const Link& l = t.link(e);
        if (!next.emplace(l.from, e).second)
            throw Error("decode: " + what + " branches at node " + std::to_string(l.from));
    }
    Lightpath lp;
    lp.wavelength = w;
    std::set<int> visited{src};
    int at = src;
    while (at != dst) {
        auto it = next.find(at);
        if (it == next.end())
            throw Error("decode: " + what + " is disconnected at node " + std::to_string(at));
        const Link& l = t.link(it->second);
        lp.link_ids.push_back(l.id);
        at = l.to;
        if (!visited.insert(at).second)
            throw Error("decode: " + what + " revisits node " + std::to_string(at));
    }
    if (lp.link_ids.size() != links.size())
        throw Error("decode: " + what + " carries stray flow off the path");
    return lp;
}

}  // namespace

Solution decode_solution(const Instance& inst, const DesignSpec& spec, const VarCatalog& cat,
                         const Assignment& a) {
    const Topology& t = inst.topology;
    const int D = cat.demand_count();
    const int W = cat.wavelength_count();
    Solution sol;

    for (int d = 1; d <= D; ++d) {
        const Demand& dem = inst.demands[d - 1];
        auto pick_wl = [&](bool protection) {
            int found = 0;
            for (int w = 1; w <= W; ++w)
                if (a.get(protection ? cat.prot_wl(d, w) : cat.work_wl(d, w))) {
                    if (found) throw Error("decode: demand " + std::to_string(d) +
                                           " selects two wavelengths");
                    found = w;
                }
            if (!found)
                throw Error("decode: demand " + std::to_string(d) + " selects no wavelength");
            return found;
        };
        int lw = pick_wl(false);
        int lp = pick_wl(true);
        auto collect = [&](bool protection, int w) {
            std::set<int> links;
            for (int e = 1; e <= t.link_count(); ++e) {
                for (int ww = 1; ww <= W; ++ww) {
                    if (a.get(protection ? cat.prot_link(d, e, ww) : cat.work_link(d, e, ww))) {
                        if (ww != w)
                            throw Error("decode: demand " + std::to_string(d) +
                                        " routes off its assigned wavelength");
                        links.insert(e);
                    }
                }
            }
            return links;
        };
        DemandProvision p;
        p.demand = dem;
        p.working = trace_path(t, collect(false, lw), dem.src, dem.dst, lw,
                               fmt("working route of demand %d", d));
        p.protection = trace_path(t, collect(true, lp), dem.src, dem.dst, lp,
                                  fmt("protection route of demand %d", d));
        p.configuration = lw == lp ? Configuration::network_side : Configuration::client_side;
        if (cat.has_split()) {
            int u = a.get(cat.wl_split(d));
            if (u != (lw != lp ? 1 : 0))
                throw Error("decode: client-side indicator of demand " + std::to_string(d) +
                            " disagrees with its wavelengths");
        }
        sol.demands.push_back(std::move(p));
    }

    if (cat.has_coding()) {
        std::vector<int> partner(D + 1, 0);
        for (int d1 = 1; d1 <= D; ++d1)
            for (int d2 = 1; d2 <= D; ++d2)
                if (a.get(cat.code_pair(d1, d2))) {
                    if (a.get(cat.code_pair(d2, d1)) != 1 || d1 == d2)
                        throw Error("decode: pairing variables are not symmetric");
                    if (partner[d1] && partner[d1] != d2)
                        throw Error("decode: demand " + std::to_string(d1) + " paired twice");
                    partner[d1] = d2;
                }
        for (int d1 = 1; d1 <= D; ++d1) {
            int d2 = partner[d1];
            // Coding node and coded flow must vanish for unpaired demands.
            if (!d2) {
                for (int v = 1; v <= t.node_count(); ++v) {
                    if (a.get(cat.code_node(d1, v)))
                        throw Error("decode: unpaired demand " + std::to_string(d1) +
                                    " has a coding node");
                    for (int e = 1; e <= t.link_count(); ++e)
                        for (int w = 1; w <= W; ++w)
                            if (a.get(cat.code_flow(d1, v, e, w)))
                                throw Error("decode: unpaired demand " + std::to_string(d1) +
                                            " carries coded flow");
                }
                continue;
            }
            if (d2 < d1) continue;  // emit each pair once
            auto node_of = [&](int d) {
                int found = 0;
                for (int v = 1; v <= t.node_count(); ++v)
                    if (a.get(cat.code_node(d, v))) {
                        if (found) throw Error("decode: two coding nodes for demand " +
                                               std::to_string(d));
                        found = v;
                    }
                if (!found)
                    throw Error("decode: paired demand " + std::to_string(d) + " lacks a coding node");
                return found;
            };
            int v1 = node_of(d1), v2 = node_of(d2);
            if (v1 != v2) throw Error("decode: partners disagree on the coding node");
            auto flow_of = [&](int d) {
                std::set<int> links;
                int wl = 0;
                for (int v = 1; v <= t.node_count(); ++v)
                    for (int e = 1; e <= t.link_count(); ++e)
                        for (int w = 1; w <= W; ++w)
                            if (a.get(cat.code_flow(d, v, e, w))) {
                                if (v != v1)
                                    throw Error("decode: coded flow away from the coding node");
                                if (wl && wl != w)
                                    throw Error("decode: coded flow on mixed wavelengths");
                                wl = w;
                                links.insert(e);
                            }
                return std::make_pair(links, wl);
            };
            auto [links1, wl1] = flow_of(d1);
            auto [links2, wl2] = flow_of(d2);
            if (links1 != links2 || wl1 != wl2)
                throw Error("decode: partners disagree on coded links or wavelength");
            if (links1.empty()) throw Error("decode: coded pair without coded links");
            Lightpath coded = trace_path(t, links1, v1, inst.demands[d1 - 1].dst, wl1,
                                         fmt("coded segment of pair (%d,%d)", d1, d2));
            CodingGroup g;
            g.demand_a = d1;
            g.demand_b = d2;
            g.node = v1;
            g.link_ids = coded.link_ids;
            g.wavelength = wl1;
            sol.coding.push_back(std::move(g));
        }
    }
    (void)spec;
    return sol;
}

Assignment encode_solution(const Instance& inst, const DesignSpec& spec, const MilpModel& m,
                           const VarCatalog& cat, const Solution& sol) {
    Assignment a(m.var_count());
    for (VarId v = 0; v < m.var_count(); ++v) a.set(v, 0);
    const int W = cat.wavelength_count();

    for (const DemandProvision& p : sol.demands) {
        int d = p.demand.id;
        a.set(cat.work_wl(d, p.working.wavelength), 1);
        a.set(cat.prot_wl(d, p.protection.wavelength), 1);
        for (int e : p.working.link_ids) a.set(cat.work_link(d, e, p.working.wavelength), 1);
        for (int e : p.protection.link_ids) a.set(cat.prot_link(d, e, p.protection.wavelength), 1);
        if (cat.has_split())
            a.set(cat.wl_split(d), p.working.wavelength != p.protection.wavelength ? 1 : 0);
    }
    if (cat.has_coding()) {
        for (const CodingGroup& g : sol.coding) {
            a.set(cat.code_pair(g.demand_a, g.demand_b), 1);
            a.set(cat.code_pair(g.demand_b, g.demand_a), 1);
            a.set(cat.code_node(g.demand_a, g.node), 1);
            a.set(cat.code_node(g.demand_b, g.node), 1);
            for (int e : g.link_ids) {
                a.set(cat.code_flow(g.demand_a, g.node, e, g.wavelength), 1);
                a.set(cat.code_flow(g.demand_b, g.node, e, g.wavelength), 1);
            }
        }
    }
    // Usage indicators follow from the routes.
    for (int e = 1; e <= cat.link_count(); ++e)
        for (int w = 1; w <= W; ++w) {
            bool used = false;
            for (const DemandProvision& p : sol.demands) {
                if (p.working.wavelength == w && p.working.uses_link(e)) used = true;
                if (p.protection.wavelength == w && p.protection.uses_link(e)) used = true;
            }
            if (used) a.set(cat.link_used(e, w), 1);
        }
    for (int w = 1; w <= W; ++w) {
        bool used = false;
        for (int e = 1; e <= cat.link_count(); ++e)
            if (a.get(cat.link_used(e, w))) used = true;
        if (used) a.set(cat.wl_used(w), 1);
    }
    (void)spec;
    (void)inst;
    return a;
}

}  // namespace rwnca
