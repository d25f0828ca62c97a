#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symquot/constructions.hpp"

namespace symquot {

// Each check is evaluated independently; a failure is a report entry, never an exception.
struct HypothesisReport {
  bool g_symmetric = false;        // G <= Aut(graph), arc-transitive
  bool block_system = false;       // partition is a G-block system with equal block sizes
  bool no_intra_block_edges = false;
  bool complete_quotient = false;  // quotient is K_{b+1}
  bool two_transitive_on_block = false;
  bool all() const {
    return g_symmetric && block_system && no_intra_block_edges && complete_quotient && two_transitive_on_block;
  }
};

struct TripleParams {
  std::size_t v = 0, b = 0, s = 0, t = 0, m = 0, r = 0, k = 0;
  std::optional<std::size_t> lambda;  // pair coverage of D(B) when constant
  std::size_t rho = 1;                // block repetition in D(B)
};

enum class CorollaryCase { A, B, C, D, NotApplicable };
std::string to_string(CorollaryCase c);

struct ClassificationVerdict {
  std::string tag;  // normalized tag of the classified triple
  HypothesisReport hypotheses;
  std::optional<TripleParams> params;
  std::string params_error;  // set when parameter extraction failed
  CorollaryCase corollary_case = CorollaryCase::NotApplicable;
  // Every listed case whose construction reproduces the graph.
  std::vector<std::string> matching_cases;
  // Empty when not applicable, "Unmatched" when applicable but nothing fits.
  std::string theorem_case;
  StructureTag structure;
};

HypothesisReport verify_hypotheses(const Triple& t);

// Requires hypotheses (1)-(4). Throws DomainError on nonconstant valency or cross-valency.
TripleParams compute_params(const Triple& t);

// Throws ValidationError when no case applies or a cross-check fails.
CorollaryCase corollary_case(const TripleParams& p, const IncidenceStructure& db);

ClassificationVerdict classify_triple(const Triple& t);

// Designs with known flag-graph orbit tables.
enum class KnownDesign { None, AffineHyperplanes, Witt22, Hadamard12 };
KnownDesign identify_design(const IncidenceStructure& d);

struct OrbitLengthReport {
  KnownDesign design = KnownDesign::None;
  std::vector<std::size_t> incident, non_incident;                    // measured, sorted
  std::vector<std::size_t> expected_incident, expected_non_incident;  // sorted
  bool ok = false;
};

// `t` must be a flag triple over `d` (vertices in flags(d) order). Orbits of the stabilizer of
// vertex 0 = (P, beta) and of the block B_{P'} inside B_{P'}, for P' on beta and P' off beta.
OrbitLengthReport orbit_length_check(const Triple& t, const IncidenceStructure& d);

struct CensusRow {
  std::string tag;
  std::string declared_case;
  ClassificationVerdict verdict;
  bool ok() const { return !declared_case.empty() ? verdict.theorem_case == declared_case
                                                  : verdict.theorem_case != "Unmatched"; }
};

// Every in-range instance of every family, classified. Throws DomainError when max_q > 16 or max_d > 4.
std::vector<CensusRow> census(std::uint32_t max_q, std::uint32_t max_d, unsigned threads = 0);

}  // namespace symquot
