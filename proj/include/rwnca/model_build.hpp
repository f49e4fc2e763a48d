#pragma once

#include <vector>

#include "rwnca/design.hpp"
#include "rwnca/milp.hpp"
#include "rwnca/solution.hpp"
#include "rwnca/topology.hpp"

namespace rwnca {

// Maps logical planning variables to model variable ids. Index arguments
// are 1-based (demand id, link id, wavelength, node id). Coding variables
// exist only when the design enables coding; the client-side indicators
// only when the design carries the secondary objective.
class VarCatalog {
  public:
    int demand_count() const { return D_; }
    int node_count() const { return V_; }
    int link_count() const { return E_; }
    int wavelength_count() const { return W_; }
    bool has_coding() const { return has_coding_; }
    bool has_split() const { return has_split_; }

    VarId wl_used(int w) const { return wl_used_.at(w - 1); }
    VarId link_used(int e, int w) const { return link_used_.at(idx_ew(e, w)); }
    VarId work_wl(int d, int w) const { return work_wl_.at(idx_dw(d, w)); }
    VarId prot_wl(int d, int w) const { return prot_wl_.at(idx_dw(d, w)); }
    VarId work_link(int d, int e, int w) const { return work_link_.at(idx_dew(d, e, w)); }
    VarId prot_link(int d, int e, int w) const { return prot_link_.at(idx_dew(d, e, w)); }
    VarId code_flow(int d, int v, int e, int w) const { return code_flow_.at(idx_dvew(d, v, e, w)); }
    VarId code_node(int d, int v) const { return code_node_.at(idx_dv(d, v)); }
    VarId code_pair(int d1, int d2) const { return code_pair_.at((d1 - 1) * D_ + (d2 - 1)); }
    VarId wl_split(int d) const { return wl_split_.at(d - 1); }

    int code_flow_count() const { return (int)code_flow_.size(); }
    int code_pair_count() const { return (int)code_pair_.size(); }
    int split_count() const { return (int)wl_split_.size(); }

    // Wavelength-interchange symmetry: for each wavelength, the variable
    // block that a permutation of wavelength indices permutes wholesale.
    // Used as a solver hint; blocks list the assignment indicators.
    std::vector<std::vector<VarId>> wavelength_blocks() const;

  private:
    friend struct BuildContext;
    int idx_dw(int d, int w) const { return (d - 1) * W_ + (w - 1); }
    int idx_ew(int e, int w) const { return (e - 1) * W_ + (w - 1); }
    int idx_dew(int d, int e, int w) const { return ((d - 1) * E_ + (e - 1)) * W_ + (w - 1); }
    int idx_dv(int d, int v) const { return (d - 1) * V_ + (v - 1); }
    int idx_dvew(int d, int v, int e, int w) const {
        return (((d - 1) * V_ + (v - 1)) * E_ + (e - 1)) * W_ + (w - 1);
    }

    int D_ = 0, V_ = 0, E_ = 0, W_ = 0;
    bool has_coding_ = false, has_split_ = false;
    std::vector<VarId> wl_used_, link_used_, work_wl_, prot_wl_, work_link_, prot_link_;
    std::vector<VarId> code_flow_, code_node_, code_pair_, wl_split_;
};

struct BuiltModel {
    MilpModel model;
    VarCatalog catalog;
};

// Builds the full routing / wavelength / coding / protection-configuration
// program for the instance under the given design toggles. The objective is
// left unset; apply set_weighted_objective afterwards.
// Coding requires all demands to share one destination.
BuiltModel build_model(const Instance& inst, const DesignSpec& spec);

// Sets objective c1 * (wavelengths used) + c2 * (client-side connections)
// and appends the indicator rows tying the client-side variables to
// differing working/protection wavelengths. Requires split variables when
// c2 is nonzero.
MilpModel set_weighted_objective(MilpModel m, const VarCatalog& cat, const Rational& c1,
                                 const Rational& c2);

// Objective term lists for lexicographic solving.
std::vector<LinTerm> wavelength_objective_terms(const VarCatalog& cat);
std::vector<LinTerm> split_objective_terms(const VarCatalog& cat);

// Reconstructs lightpaths, configurations and coding groups from a feasible
// assignment. Throws Error when flows do not decode to simple paths.
Solution decode_solution(const Instance& inst, const DesignSpec& spec, const VarCatalog& cat,
                         const Assignment& a);

// Inverse of decode_solution for a structurally valid solution.
Assignment encode_solution(const Instance& inst, const DesignSpec& spec, const MilpModel& m,
                           const VarCatalog& cat, const Solution& sol);

}  // namespace rwnca
