#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "matdec/instances.hpp"
#include "matdec/rng.hpp"

namespace matdec {

// One checked case of a suite.  Count fields hold -1 and bound holds 0 when
// the column does not apply to the suite; note carries the failure witness
// (or a short measurement summary) and never contains commas.
struct SuiteRow {
    int index = 0;
    uint64_t instance = 0;  // hash of the canonical instance text
    int lambda = -1;
    int sim_classes = -1;
    int refine_classes = -1;
    uint64_t bound = 0;
    bool pass = true;
    std::string note;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteRow> rows;
    bool pass = true;

    void add(SuiteRow row);  // assigns index, folds row.pass into pass
    int failures() const;
    std::string to_csv() const;   // header line + one line per row
    std::string to_text() const;  // summary + failing rows
};

// Seeded instance generation shared by the suites and the gen command.
// Kinds: uniform, linear-gf2, linear-gf3, ftransversal, latticepath,
// bicircular, gain-z2, gain-z3, gain-s3, gammoid, sparsepaving.
// max_elements tightens the instance size where applicable (0 = default).
std::vector<std::string> generator_kinds();
Instance generate_instance(const std::string& kind, Lcg& rng, int max_elements = 0);

// The per-kind signature relation on subsets of U, as a key function (equal
// keys = related).  Throws std::domain_error for kinds without one
// (latticepath, gammoid, sparsepaving).
std::function<std::string(subset_t)> refinement_key(const Instance& inst, const MatroidOracle& M,
                                                    subset_t U);

// Refinement containment: every class of the per-kind signature relation is
// a union-free part of a single independence-equivalence class.
SuiteResult refinement_suite(uint64_t seed, int per_class = 200);
// Signature-count ceilings and boundary-cover / boundary-vertex caps.
SuiteResult bounds_suite(uint64_t seed, int per_class = 60);
// Parse-tree acceptance == path oracle on every subset; path oracle ==
// exhaustive intermediate-path enumeration on the smaller instances.
SuiteResult parsetree_suite(uint64_t seed, int instances = 20);
// Known widths and the staircase-size cap against exhaustive branch-width.
SuiteResult width_suite(uint64_t seed, int lattice_instances = 12);
// Certificate compatibility decides independence across a separation.
SuiteResult ftcompat_suite(uint64_t seed, int instances = 100);
// Graph-level delete/contract agrees with the oracle-level minor.
SuiteResult minors_suite(uint64_t seed, int instances = 100);
// Axiom checks and exact circuit structure of the named constructions.
SuiteResult constructions_suite();
// Loop-pair and incidence-triple circuits of the gadget, all graphs <= 5
// vertices.
SuiteResult courcelle_suite();
// nu(G) = nu(G[L]) + nu(G[R]) + (shared vertices) over random bipartitions.
SuiteResult nu_identity_suite(uint64_t seed, int pairs = 1000);

std::vector<std::string> suite_names();
// Dispatch by name with each suite's default sizes; unknown name throws
// std::domain_error.
SuiteResult run_suite(const std::string& name, uint64_t seed);

}  // namespace matdec
