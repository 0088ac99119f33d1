#include "linear_model.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bkp {

int LinearModel::add_binary(std::string name) {
    vars_.push_back(Variable{std::move(name), VarKind::Binary, false, 0.0});
    obj_.push_back(0.0);
    return num_vars() - 1;
}

int LinearModel::add_continuous(std::string name) {
    vars_.push_back(Variable{std::move(name), VarKind::Continuous, false, 0.0});
    obj_.push_back(0.0);
    return num_vars() - 1;
}

void LinearModel::check_var(int var, const char* where) const {
    if (var < 0 || var >= num_vars())
        throw std::invalid_argument(std::string(where) + ": unknown variable id " +
                                    std::to_string(var));
}

void LinearModel::set_objective(int var, double coeff) {
    check_var(var, "set_objective");
    obj_[var] = coeff;
}

void LinearModel::add_row(Row row) {
    for (const auto& [v, c] : row.terms) check_var(v, "add_row");
    rows_.push_back(std::move(row));
}

void LinearModel::add_rows(std::vector<Row> rows) {
    for (auto& r : rows) add_row(std::move(r));
}

void LinearModel::fix_variable(int var, double value) {
    check_var(var, "fix_variable");
    Variable& v = vars_[var];
    if (v.kind == VarKind::Binary && std::abs(value) > 1e-9 && std::abs(value - 1.0) > 1e-9)
        throw std::invalid_argument("fix_variable: binary value must be 0 or 1");
    if (v.kind == VarKind::Continuous && value < -1e-9)
        throw std::invalid_argument("fix_variable: negative value for nonnegative variable");
    v.fixed = true;
    v.fixed_value = v.kind == VarKind::Binary ? std::round(value) : value;
}

double LinearModel::lower_bound(int i) const {
    const Variable& v = vars_.at(i);
    return v.fixed ? v.fixed_value : 0.0;
}

double LinearModel::upper_bound(int i) const {
    const Variable& v = vars_.at(i);
    if (v.fixed) return v.fixed_value;
    return v.kind == VarKind::Binary ? 1.0 : std::numeric_limits<double>::infinity();
}

double LinearModel::evaluate_objective(const std::vector<double>& values) const {
    double z = offset_;
    for (int i = 0; i < num_vars(); ++i) z += obj_[i] * values[i];
    return z;
}

namespace {

void write_term(std::ostream& out, double coeff, const std::string& name, bool& first) {
    if (coeff == 0.0) return;
    if (first) {
        if (coeff < 0) out << "- ";
        first = false;
    } else {
        out << (coeff < 0 ? " - " : " + ");
    }
    double a = std::abs(coeff);
    if (a != 1.0) out << a << ' ';
    out << name;
}

}  // namespace

void LinearModel::write_lp(std::ostream& out) const {
    out << "Minimize\n obj:";
    bool first = true;
    out << ' ';
    for (int i = 0; i < num_vars(); ++i) write_term(out, obj_[i], vars_[i].name, first);
    if (offset_ != 0.0) {
        out << (first ? (offset_ < 0 ? "- " : "") : (offset_ < 0 ? " - " : " + "))
            << std::abs(offset_);
        first = false;
    }
    if (first) out << "0";
    out << "\nSubject To\n";
    for (int r = 0; r < num_rows(); ++r) {
        out << " r" << r << ":";
        bool f = true;
        out << ' ';
        for (const auto& [v, c] : rows_[r].terms) write_term(out, c, vars_[v].name, f);
        if (f) out << "0";
        switch (rows_[r].rel) {
            case Relation::LessEq: out << " <= "; break;
            case Relation::Eq: out << " = "; break;
            case Relation::GreaterEq: out << " >= "; break;
        }
        out << rows_[r].rhs << '\n';
    }
    out << "Bounds\n";
    for (int i = 0; i < num_vars(); ++i) {
        if (vars_[i].fixed)
            out << ' ' << vars_[i].name << " = " << vars_[i].fixed_value << '\n';
        else if (vars_[i].kind == VarKind::Continuous)
            out << ' ' << vars_[i].name << " >= 0\n";
    }
    bool any_bin = false;
    for (int i = 0; i < num_vars(); ++i) {
        if (vars_[i].kind == VarKind::Binary) {
            if (!any_bin) out << "Binaries\n";
            out << (any_bin ? " " : " ") << vars_[i].name;
            any_bin = true;
        }
    }
    if (any_bin) out << '\n';
    out << "End\n";
}

}  // namespace bkp
