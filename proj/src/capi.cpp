#include "fermatrank.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "fermatrank/bounds.hpp"
#include "fermatrank/errors.hpp"
#include "fermatrank/modchar.hpp"
#include "fermatrank/report.hpp"
#include "fermatrank/semidirect.hpp"
#include "fermatrank/tower.hpp"

using namespace fermatrank;

struct frk_action {
  GaloisAction impl;
};

struct frk_orbit_list {
  std::vector<Orbit> orbits;
};

struct frk_irrep_list {
  std::vector<IrrepDatum> irreps;
};

namespace {

thread_local std::string g_last_error;

frk_status status_of(const Error& error) {
  switch (error.code()) {
    case ErrorCode::budget_exceeded:
      return FRK_ERR_BUDGET;
    case ErrorCode::hypothesis_missing:
    case ErrorCode::mu_hypothesis_missing:
      return FRK_ERR_HYPOTHESIS;
    case ErrorCode::non_abelian:
      return FRK_ERR_UNSUPPORTED;
    default:
      return FRK_ERR_ARGUMENT;
  }
}

template <typename F>
frk_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const Error& error) {
    g_last_error = error.what();
    return status_of(error);
  } catch (const std::exception& error) {
    g_last_error = error.what();
    return FRK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return FRK_ERR_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) fail(ErrorCode::invalid_argument, message);
}

/* malloc so the boundary stays new/delete-agnostic; frk_string_free frees. */
char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

frk_status make_action(GaloisAction action, frk_action** out) {
  *out = new frk_action{std::move(action)};
  return FRK_OK;
}

}  // namespace

extern "C" {

const char* frk_last_error(void) { return g_last_error.c_str(); }

void frk_string_free(char* s) { std::free(s); }

frk_status frk_action_full_units(const char* p, unsigned n, uint64_t budget,
                                 frk_action** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "p and out must not be NULL");
    return make_action(
        GaloisAction::full_units(PrimePower(int_from_string(p), n), budget),
        out);
  });
}

frk_status frk_action_trivial(const char* p, unsigned n, frk_action** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "p and out must not be NULL");
    return make_action(GaloisAction::trivial(PrimePower(int_from_string(p), n)),
                       out);
  });
}

frk_status frk_action_scalar(const char* p, unsigned n,
                             const char* const* generators,
                             size_t generator_count, uint64_t budget,
                             frk_action** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "p and out must not be NULL");
    require(generators != nullptr || generator_count == 0,
            "generators must not be NULL");
    std::vector<Int> gens;
    for (size_t i = 0; i < generator_count; ++i) {
      require(generators[i] != nullptr, "generator strings must not be NULL");
      gens.push_back(int_from_string(generators[i]));
    }
    return make_action(
        GaloisAction::scalar(PrimePower(int_from_string(p), n), gens, budget),
        out);
  });
}

frk_status frk_action_matrix(const char* p, unsigned n,
                             const char* const* entries, size_t generator_count,
                             uint64_t budget, frk_action** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "p and out must not be NULL");
    require(entries != nullptr || generator_count == 0,
            "entries must not be NULL");
    std::vector<Mat2> gens;
    for (size_t i = 0; i < generator_count; ++i) {
      for (size_t j = 0; j < 4; ++j)
        require(entries[4 * i + j] != nullptr,
                "matrix entry strings must not be NULL");
      gens.push_back(Mat2{int_from_string(entries[4 * i + 0]),
                          int_from_string(entries[4 * i + 1]),
                          int_from_string(entries[4 * i + 2]),
                          int_from_string(entries[4 * i + 3])});
    }
    return make_action(
        GaloisAction::matrix(PrimePower(int_from_string(p), n), gens, budget),
        out);
  });
}

void frk_action_free(frk_action* action) { delete action; }

uint64_t frk_action_group_order(const frk_action* action) {
  return action == nullptr ? 0 : action->impl.group_order();
}

int frk_action_is_abelian(const frk_action* action) {
  return action != nullptr && action->impl.group_is_abelian() ? 1 : 0;
}

frk_status frk_orbits(const frk_action* action, uint64_t budget,
                      frk_orbit_list** out) {
  return guarded([&] {
    require(action != nullptr && out != nullptr,
            "action and out must not be NULL");
    *out = new frk_orbit_list{all_orbits(action->impl, budget)};
    return FRK_OK;
  });
}

void frk_orbit_list_free(frk_orbit_list* list) { delete list; }

size_t frk_orbit_count(const frk_orbit_list* list) {
  return list == nullptr ? 0 : list->orbits.size();
}

frk_status frk_orbit_get(const frk_orbit_list* list, size_t index, char** rep_a,
                         char** rep_b, uint64_t* size,
                         uint64_t* stabilizer_order) {
  return guarded([&] {
    require(list != nullptr && rep_a != nullptr && rep_b != nullptr &&
                size != nullptr && stabilizer_order != nullptr,
            "all output pointers must not be NULL");
    require(index < list->orbits.size(), "orbit index out of range");
    const Orbit& orbit = list->orbits[index];
    char* a = dup_string(int_to_string(orbit.representative.a));
    char* b = nullptr;
    try {
      b = dup_string(int_to_string(orbit.representative.b));
    } catch (...) {
      std::free(a);
      throw;
    }
    *rep_a = a;
    *rep_b = b;
    *size = orbit.size;
    *stabilizer_order = orbit.stabilizer_order;
    return FRK_OK;
  });
}

frk_status frk_irreps(const frk_action* action, uint64_t budget,
                      frk_irrep_list** out) {
  return guarded([&] {
    require(action != nullptr && out != nullptr,
            "action and out must not be NULL");
    *out = new frk_irrep_list{enumerate_irreps(action->impl, budget)};
    return FRK_OK;
  });
}

void frk_irrep_list_free(frk_irrep_list* list) { delete list; }

size_t frk_irrep_count(const frk_irrep_list* list) {
  return list == nullptr ? 0 : list->irreps.size();
}

frk_status frk_irrep_get(const frk_irrep_list* list, size_t index,
                         char** orbit_rep_a, char** orbit_rep_b, uint64_t* dim,
                         int* psi_trivial, int* fixed_dim) {
  return guarded([&] {
    require(list != nullptr && orbit_rep_a != nullptr &&
                orbit_rep_b != nullptr && dim != nullptr &&
                psi_trivial != nullptr && fixed_dim != nullptr,
            "all output pointers must not be NULL");
    require(index < list->irreps.size(), "irrep index out of range");
    const IrrepDatum& irrep = list->irreps[index];
    char* a = dup_string(int_to_string(irrep.orbit.representative.a));
    char* b = nullptr;
    try {
      b = dup_string(int_to_string(irrep.orbit.representative.b));
    } catch (...) {
      std::free(a);
      throw;
    }
    *orbit_rep_a = a;
    *orbit_rep_b = b;
    *dim = irrep.dim;
    *psi_trivial = irrep.psi_is_trivial ? 1 : 0;
    *fixed_dim = irrep.fixed_dim;
    return FRK_OK;
  });
}

frk_status frk_char_order(const char* p, unsigned n, const char* a,
                          const char* b, char** order_out) {
  return guarded([&] {
    require(p != nullptr && a != nullptr && b != nullptr && order_out != nullptr,
            "arguments must not be NULL");
    Character chi(PrimePower(int_from_string(p), n), int_from_string(a),
                  int_from_string(b));
    *order_out = dup_string(int_to_string(char_exact_order(chi)));
    return FRK_OK;
  });
}

frk_status frk_fermat_genus(const char* d, char** genus_out) {
  return guarded([&] {
    require(d != nullptr && genus_out != nullptr, "arguments must not be NULL");
    *genus_out = dup_string(int_to_string(fermat_genus(int_from_string(d))));
    return FRK_OK;
  });
}

frk_status frk_rank_sum(const char* p, unsigned n, const char* k_degree,
                        char** sum_out) {
  return guarded([&] {
    require(p != nullptr && k_degree != nullptr && sum_out != nullptr,
            "arguments must not be NULL");
    Int prime = int_from_string(p);
    FieldDegrees degrees = field_degrees(prime, n, int_from_string(k_degree));
    *sum_out = dup_string(rat_to_string(rank_sum(prime, n, degrees)));
    return FRK_OK;
  });
}

frk_status frk_fermat_exact_bound(const char* p, unsigned n,
                                  const char* k_degree, const char* c,
                                  int mu_zero, char** bound_out) {
  return guarded([&] {
    require(p != nullptr && k_degree != nullptr && c != nullptr &&
                bound_out != nullptr,
            "arguments must not be NULL");
    Int prime = int_from_string(p);
    FieldDegrees degrees = field_degrees(prime, n, int_from_string(k_degree));
    Rat bound = fermat_rank_bound_exact(prime, n, degrees, rat_from_string(c),
                                        mu_zero != 0);
    *bound_out = dup_string(rat_to_string(bound));
    return FRK_OK;
  });
}

frk_status frk_filtration_bound(const int64_t* ranks, size_t count, int64_t h1,
                                size_t start_index, char** bound_out) {
  return guarded([&] {
    require(bound_out != nullptr, "bound_out must not be NULL");
    require(ranks != nullptr || count == 0, "ranks must not be NULL");
    FiltrationData filtration;
    for (size_t i = 0; i < count; ++i) {
      require(ranks[i] >= 0, "ranks must be non-negative");
      filtration.ranks.push_back(Int(ranks[i]));
    }
    Int bound = filtration_h1_bound(filtration, Int(h1), start_index);
    *bound_out = dup_string(int_to_string(bound));
    return FRK_OK;
  });
}

frk_status frk_run_json(const char* config_json, char** report_out) {
  return guarded([&] {
    require(config_json != nullptr && report_out != nullptr,
            "config_json and report_out must not be NULL");
    RunConfig config = config_from_json_text(config_json);
    *report_out = dup_string(run(config));
    return FRK_OK;
  });
}

}  // extern "C"
