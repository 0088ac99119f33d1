#include "bkp/bkp.h"

#include <cstring>
#include <exception>
#include <string>

#include "generator.hpp"
#include "instance.hpp"
#include "oracle.hpp"
#include "solver.hpp"

struct bkp_instance {
    bkp::Instance inst;
};

struct bkp_solution {
    bkp::BilevelSolution sol;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Maps the C++ error taxonomy onto the C codes at the library boundary.
int guard(const std::exception& e) {
    if (dynamic_cast<const bkp::ParseError*>(&e)) return fail(BKP_ERR_PARSE, e.what());
    if (dynamic_cast<const bkp::ValidationError*>(&e)) return fail(BKP_ERR_VALIDATION, e.what());
    if (dynamic_cast<const bkp::GenerationError*>(&e)) return fail(BKP_ERR_GENERATION, e.what());
    if (dynamic_cast<const std::invalid_argument*>(&e))
        return fail(BKP_ERR_INVALID_ARGUMENT, e.what());
    if (dynamic_cast<const std::runtime_error*>(&e)) return fail(BKP_ERR_IO, e.what());
    return fail(BKP_ERR_INTERNAL, e.what());
}

char* copy_text(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bkp::SolverParams to_params(const bkp_params* p) {
    if (!p) return bkp::small_preset();
    bkp::SolverParams out;
    out.tuples = bkp::TupleGenParams{p->alpha, p->beta, p->delta, p->mu};
    out.gamma = p->gamma;
    if (p->time_limit_s > 0) out.time_limit_s = p->time_limit_s;
    out.reduced_cost_fixing = p->reduced_cost_fixing != 0;
    return out;
}

}  // namespace

extern "C" {

const char* bkp_version(void) { return "1.0.0"; }

const char* bkp_last_error(void) { return g_last_error.c_str(); }

void bkp_params_small(bkp_params* out) {
    *out = bkp_params{100, 100, 10, 150, 2, 0.0, 1};
}

void bkp_params_large(bkp_params* out) {
    *out = bkp_params{500, 500, 20, 1000, 5, 0.0, 1};
}

int bkp_instance_generate(int32_t n, int32_t ins, uint64_t seed, bkp_instance** out) {
    if (!out) return fail(BKP_ERR_INVALID_ARGUMENT, "null output pointer");
    try {
        auto gen = bkp::generate(bkp::GenSpec{n, ins, seed});
        *out = new bkp_instance{std::move(gen.instance)};
        return BKP_OK;
    } catch (const std::exception& e) {
        return guard(e);
    }
}

int bkp_instance_parse(const char* text, bkp_instance** out) {
    if (!text || !out) return fail(BKP_ERR_INVALID_ARGUMENT, "null argument");
    try {
        *out = new bkp_instance{bkp::read_instance(text)};
        return BKP_OK;
    } catch (const std::exception& e) {
        return guard(e);
    }
}

int bkp_instance_load(const char* path, bkp_instance** out) {
    if (!path || !out) return fail(BKP_ERR_INVALID_ARGUMENT, "null argument");
    try {
        *out = new bkp_instance{bkp::read_instance_file(path)};
        return BKP_OK;
    } catch (const std::exception& e) {
        return guard(e);
    }
}

int bkp_instance_save(const bkp_instance* inst, const char* path) {
    if (!inst || !path) return fail(BKP_ERR_INVALID_ARGUMENT, "null argument");
    try {
        bkp::write_instance_file(inst->inst, path);
        return BKP_OK;
    } catch (const std::exception& e) {
        return guard(e);
    }
}

int bkp_instance_format(const bkp_instance* inst, char** text_out) {
    if (!inst || !text_out) return fail(BKP_ERR_INVALID_ARGUMENT, "null argument");
    *text_out = copy_text(bkp::write_instance(inst->inst));
    return BKP_OK;
}

void bkp_free_text(char* text) { delete[] text; }

int32_t bkp_instance_n(const bkp_instance* inst) { return inst ? inst->inst.n : 0; }

int64_t bkp_instance_cap_leader(const bkp_instance* inst) {
    return inst ? inst->inst.cap_leader : 0;
}

int64_t bkp_instance_cap_follower(const bkp_instance* inst) {
    return inst ? inst->inst.cap_follower : 0;
}

int bkp_instance_item(const bkp_instance* inst, int32_t index, int64_t* profit,
                      int64_t* weight, int64_t* leader_weight) {
    if (!inst || index < 0 || index >= inst->inst.n)
        return fail(BKP_ERR_INVALID_ARGUMENT, "item index out of range");
    if (profit) *profit = inst->inst.profit[index];
    if (weight) *weight = inst->inst.weight[index];
    if (leader_weight) *leader_weight = inst->inst.leader_weight[index];
    return BKP_OK;
}

int bkp_instance_validate(const bkp_instance* inst, char** report_out) {
    if (!inst || !report_out) return fail(BKP_ERR_INVALID_ARGUMENT, "null argument");
    std::string joined;
    for (const auto& line : bkp::validate(inst->inst)) {
        joined += line;
        joined += '\n';
    }
    *report_out = copy_text(joined);
    return BKP_OK;
}

void bkp_instance_free(bkp_instance* inst) { delete inst; }

int bkp_solve(const bkp_instance* inst, const bkp_params* params, bkp_solution** out) {
    if (!inst || !out) return fail(BKP_ERR_INVALID_ARGUMENT, "null argument");
    try {
        *out = new bkp_solution{bkp::solve(inst->inst, to_params(params))};
        return BKP_OK;
    } catch (const std::exception& e) {
        if (dynamic_cast<const bkp::ValidationError*>(&e)) return guard(e);
        if (dynamic_cast<const std::invalid_argument*>(&e)) return guard(e);
        return fail(BKP_ERR_NUMERIC, e.what());
    }
}

int bkp_oracle(const bkp_instance* inst, int32_t hard_limit_n, bkp_solution** out) {
    if (!inst || !out) return fail(BKP_ERR_INVALID_ARGUMENT, "null argument");
    try {
        bkp::OracleResult res = bkp::brute_force(inst->inst, hard_limit_n);
        bkp::BilevelSolution sol;
        sol.has_solution = true;
        sol.value = res.value;
        sol.proven_optimal = true;
        sol.x = std::move(res.x);
        sol.y = std::move(res.y);
        *out = new bkp_solution{std::move(sol)};
        return BKP_OK;
    } catch (const std::exception& e) {
        return guard(e);
    }
}

int bkp_solution_has_value(const bkp_solution* sol) {
    return sol && sol->sol.has_solution ? 1 : 0;
}

int64_t bkp_solution_value(const bkp_solution* sol) { return sol ? sol->sol.value : 0; }

int bkp_solution_proven_optimal(const bkp_solution* sol) {
    return sol && sol->sol.proven_optimal ? 1 : 0;
}

int bkp_solution_vectors(const bkp_solution* sol, int32_t* x, int32_t* y, int32_t len) {
    if (!sol) return fail(BKP_ERR_INVALID_ARGUMENT, "null solution");
    if (!sol->sol.has_solution) return fail(BKP_ERR_INVALID_ARGUMENT, "solution holds no value");
    if (len != static_cast<int32_t>(sol->sol.x.size()))
        return fail(BKP_ERR_INVALID_ARGUMENT, "vector length mismatch");
    for (int32_t i = 0; i < len; ++i) {
        if (x) x[i] = sol->sol.x[i];
        if (y) y[i] = sol->sol.y[i];
    }
    return BKP_OK;
}

double bkp_solution_wall_time_s(const bkp_solution* sol) {
    return sol ? sol->sol.stats.wall_time_s : 0.0;
}

int64_t bkp_solution_step2_subproblems(const bkp_solution* sol) {
    return sol ? sol->sol.stats.step2_subproblems : 0;
}

int64_t bkp_solution_crit2_solves(const bkp_solution* sol) {
    return sol ? sol->sol.stats.crit2_solves : 0;
}

int64_t bkp_solution_cut_rounds(const bkp_solution* sol) {
    return sol ? sol->sol.stats.cut_rounds : 0;
}

int bkp_solution_entered_step2(const bkp_solution* sol) {
    return sol && sol->sol.stats.entered_step2 ? 1 : 0;
}

void bkp_solution_free(bkp_solution* sol) { delete sol; }

}  // extern "C"
