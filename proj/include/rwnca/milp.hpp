#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rwnca/rational.hpp"
#include "rwnca/topology.hpp"

namespace rwnca {

using VarId = int32_t;

struct LinTerm {
    VarId var;
    Rational coef;
};

enum class Rel { le, eq, ge };

struct Row {
    std::string name;
    std::vector<LinTerm> terms;
    Rel rel = Rel::le;
    Rational rhs;
};

// A pure binary linear program (minimization). Immutable once built.
class MilpModel {
  public:
    int var_count() const { return (int)var_names_.size(); }
    const std::string& var_name(VarId v) const { return var_names_.at(v); }
    VarId find_var(const std::string& name) const;  // -1 if absent
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<LinTerm>& objective() const { return objective_; }

  private:
    friend class ModelBuilder;
    std::vector<std::string> var_names_;
    std::unordered_map<std::string, VarId> index_;
    std::vector<Row> rows_;
    std::vector<LinTerm> objective_;
};

class ModelBuilder {
  public:
    VarId add_var(std::string name);
    void add_row(Row row);
    void add_row(std::string name, std::vector<LinTerm> terms, Rel rel, Rational rhs);
    void set_objective(std::vector<LinTerm> terms);
    int var_count() const { return model_.var_count(); }
    MilpModel build();

  private:
    void check_terms(const std::vector<LinTerm>& terms, const std::string& where) const;
    MilpModel model_;
    bool built_ = false;
};

// 0/1 value per variable; kUnset marks holes.
struct Assignment {
    static constexpr int8_t kUnset = -1;
    std::vector<int8_t> value;

    explicit Assignment(int n = 0) : value(n, kUnset) {}
    void set(VarId v, int b) { value.at(v) = (int8_t)b; }
    int get(VarId v) const { return value.at(v); }
    bool is_set(VarId v) const { return value.at(v) != kUnset; }
};

struct EvalResult {
    bool feasible = false;
    std::vector<std::string> violated;  // names of failed rows
    Rational objective;
};

// Judges feasibility by direct substitution in exact arithmetic.
// Throws Error listing missing variables if the assignment is incomplete.
EvalResult evaluate(const MilpModel& m, const Assignment& a);

// CPLEX-style LP text; every variable is declared in the Binary section.
std::string export_lp(const MilpModel& m);

// Column-aligned MPS text with BV bounds for every variable.
std::string export_mps(const MilpModel& m, const std::string& problem_name = "RWNCA");

}  // namespace rwnca
