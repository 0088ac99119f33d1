#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bkp {

enum class VarKind { Binary, Continuous };  // Continuous means x >= 0

enum class Relation { LessEq, Eq, GreaterEq };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Binary;
    bool fixed = false;
    double fixed_value = 0.0;
};

struct Row {
    std::vector<std::pair<int, double>> terms;  // (variable id, coefficient)
    Relation rel = Relation::LessEq;
    double rhs = 0.0;
};

// A 0-1 MILP in minimization form: binary variables plus nonnegative
// continuous ones, linear rows, optional constant objective offset.
// Coefficients are doubles, which hold the integer data of this codebase
// exactly.
class LinearModel {
  public:
    int add_binary(std::string name);
    int add_continuous(std::string name);

    void set_objective(int var, double coeff);
    void set_objective_offset(double off) { offset_ = off; }

    void add_row(Row row);
    void add_rows(std::vector<Row> rows);

    // Pins a variable at a value (0/1 for binaries). The model is mutated in
    // place; previously computed solutions are stale after this.
    void fix_variable(int var, double value);

    int num_vars() const { return static_cast<int>(vars_.size()); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    const Variable& var(int i) const { return vars_.at(i); }
    const Row& row(int i) const { return rows_.at(i); }
    const std::vector<Row>& rows() const { return rows_; }
    double objective_coeff(int i) const { return obj_.at(i); }
    double objective_offset() const { return offset_; }

    double lower_bound(int i) const;
    double upper_bound(int i) const;

    double evaluate_objective(const std::vector<double>& values) const;

    // Set by builders whose integer optimum is provably integral; lets the
    // solvers round bounds up when pruning.
    bool objective_integral = false;

    // Ordered groups of binaries of which exactly one is 1 (enforced by a
    // model row). Branch-and-bound may dichotomize a whole group at once.
    std::vector<std::vector<int>> sos1_groups;

    // CPLEX-style LP text format, for cross-checks with external solvers.
    void write_lp(std::ostream& out) const;

  private:
    void check_var(int var, const char* where) const;

    std::vector<Variable> vars_;
    std::vector<double> obj_;
    std::vector<Row> rows_;
    double offset_ = 0.0;
};

}  // namespace bkp
