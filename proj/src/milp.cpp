#include "rwnca/milp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rwnca {

VarId MilpModel::find_var(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

VarId ModelBuilder::add_var(std::string name) {
    if (name.empty()) throw Error("variable name must not be empty");
    if (model_.index_.count(name)) throw Error("duplicate variable name: " + name);
    VarId id = (VarId)model_.var_names_.size();
    model_.index_.emplace(name, id);
    model_.var_names_.push_back(std::move(name));
    return id;
}

void ModelBuilder::check_terms(const std::vector<LinTerm>& terms, const std::string& where) const {
    for (const LinTerm& t : terms)
        if (t.var < 0 || t.var >= (VarId)model_.var_names_.size())
            throw Error(where + " references undeclared variable index " + std::to_string(t.var));
}

void ModelBuilder::add_row(Row row) {
    check_terms(row.terms, "constraint " + row.name);
    model_.rows_.push_back(std::move(row));
}

void ModelBuilder::add_row(std::string name, std::vector<LinTerm> terms, Rel rel, Rational rhs) {
    add_row(Row{std::move(name), std::move(terms), rel, rhs});
}

void ModelBuilder::set_objective(std::vector<LinTerm> terms) {
    check_terms(terms, "objective");
    model_.objective_ = std::move(terms);
}

MilpModel ModelBuilder::build() {
    if (built_) throw Error("model already built");
    built_ = true;
    return std::move(model_);
}

EvalResult evaluate(const MilpModel& m, const Assignment& a) {
    if ((int)a.value.size() != m.var_count())
        throw Error("assignment covers " + std::to_string(a.value.size()) + " of " +
                    std::to_string(m.var_count()) + " variables");
    std::string missing;
    int missing_count = 0;
    for (VarId v = 0; v < m.var_count(); ++v) {
        if (!a.is_set(v)) {
            if (missing_count < 8) missing += (missing.empty() ? "" : ", ") + m.var_name(v);
            ++missing_count;
        }
    }
    if (missing_count > 0)
        throw Error("incomplete assignment, " + std::to_string(missing_count) +
                    " variable(s) unset: " + missing + (missing_count > 8 ? ", ..." : ""));

    EvalResult res;
    for (const Row& r : m.rows()) {
        Rational lhs;
        for (const LinTerm& t : r.terms)
            if (a.get(t.var)) lhs += t.coef;
        bool ok = r.rel == Rel::le ? lhs <= r.rhs : r.rel == Rel::ge ? lhs >= r.rhs : lhs == r.rhs;
        if (!ok) res.violated.push_back(r.name);
    }
    res.feasible = res.violated.empty();
    for (const LinTerm& t : m.objective())
        if (a.get(t.var)) res.objective += t.coef;
    return res;
}

namespace {

std::string coef_str(const Rational& c) {
    if (c.is_integer()) return std::to_string(c.num());
    std::ostringstream os;
    os.precision(17);
    os << c.to_double();
    return os.str();
}

void append_expr(std::ostringstream& os, const std::vector<LinTerm>& terms, const MilpModel& m) {
    bool first = true;
    for (const LinTerm& t : terms) {
        if (t.coef.is_zero()) continue;
        Rational c = t.coef;
        if (first) {
            if (c < Rational(0)) { os << "- "; c = -c; }
        } else {
            os << (c < Rational(0) ? " - " : " + ");
            if (c < Rational(0)) c = -c;
        }
        if (c != Rational(1)) os << coef_str(c) << " ";
        os << m.var_name(t.var);
        first = false;
    }
    if (first) os << "0 " << m.var_name(0);  // degenerate all-zero expression
}

}  // namespace

std::string export_lp(const MilpModel& m) {
    std::ostringstream os;
    os << "\\ binary linear program, " << m.var_count() << " variables, "
       << m.rows().size() << " constraints\n";
    os << "Minimize\n obj: ";
    if (m.objective().empty())
        os << "0 " << (m.var_count() ? m.var_name(0) : std::string("x0"));
    else
        append_expr(os, m.objective(), m);
    os << "\nSubject To\n";
    for (const Row& r : m.rows()) {
        os << " " << r.name << ": ";
        append_expr(os, r.terms, m);
        os << (r.rel == Rel::le ? " <= " : r.rel == Rel::ge ? " >= " : " = ");
        os << coef_str(r.rhs) << "\n";
    }
    os << "Binary\n";
    for (VarId v = 0; v < m.var_count(); ++v) os << " " << m.var_name(v) << "\n";
    os << "End\n";
    return os.str();
}

std::string export_mps(const MilpModel& m, const std::string& problem_name) {
    // Column positions follow the classic fixed MPS layout, widened when
    // names exceed eight characters so fields stay aligned.
    size_t w = 8;
    for (VarId v = 0; v < m.var_count(); ++v) w = std::max(w, m.var_name(v).size());
    for (const Row& r : m.rows()) w = std::max(w, r.name.size());
    auto pad = [w](const std::string& s) {
        std::string out = s;
        out.resize(std::max(w, s.size()), ' ');
        return out;
    };
    std::ostringstream os;
    os << "NAME          " << problem_name << "\n";
    os << "ROWS\n";
    os << " N  " << pad("COST") << "\n";
    for (const Row& r : m.rows()) {
        char t = r.rel == Rel::le ? 'L' : r.rel == Rel::ge ? 'G' : 'E';
        os << " " << t << "  " << pad(r.name) << "\n";
    }
    // Column-major coefficient lists.
    std::vector<std::vector<std::pair<std::string, Rational>>> cols(m.var_count());
    for (const LinTerm& t : m.objective()) cols[t.var].push_back({"COST", t.coef});
    for (const Row& r : m.rows())
        for (const LinTerm& t : r.terms) cols[t.var].push_back({r.name, t.coef});
    os << "COLUMNS\n";
    for (VarId v = 0; v < m.var_count(); ++v) {
        for (auto& [row, coef] : cols[v]) {
            if (coef.is_zero()) continue;
            os << "    " << pad(m.var_name(v)) << "  " << pad(row) << "  " << coef_str(coef)
               << "\n";
        }
    }
    os << "RHS\n";
    for (const Row& r : m.rows())
        if (!r.rhs.is_zero())
            os << "    " << pad("RHS") << "  " << pad(r.name) << "  " << coef_str(r.rhs) << "\n";
    os << "BOUNDS\n";
    for (VarId v = 0; v < m.var_count(); ++v)
        os << " BV " << pad("BND") << "  " << pad(m.var_name(v)) << "\n";
    os << "ENDATA\n";
    return os.str();
}

}  // namespace rwnca
