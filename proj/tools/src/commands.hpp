#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>

namespace olymp::cli {

// ---- park ----------------------------------------------------------------

/// Walk one configuration of a layout file and check the visit bounds.
RunReport park_simulate(const std::string& layout_file, int start, int first_trail,
                        bool first_turn_right);

/// Validate a layout file and walk every configuration of it.
RunReport park_verify(const std::string& layout_file);

/// Random layouts, every configuration walked; reports the extremal walk.
RunReport park_search(int max_junctions, int samples, std::uint64_t seed);

// ---- tromino ---------------------------------------------------------------

/// Build the explicit clearing schedule for n divisible by 3; optionally
/// write the move sequence to `out_file`.
RunReport tromino_construct(int n, const std::string& out_file);

/// Breadth-first search for the shortest empty-to-empty sequence.
RunReport tromino_search(int n, std::uint64_t max_states, int threads);

/// Certify a move sequence (from a file, or the constructed schedule when
/// `moves_file` is empty): replay, polynomial identity, nonroot evaluation,
/// prefix invariants.
RunReport tromino_certify(int n, const std::string& moves_file);

// ---- gcdset ----------------------------------------------------------------

RunReport gcdset_verify(const std::string& set_file);

/// `primes` holds 2k whitespace-separated primes, alternating between the
/// two pair members: "p1 q1 p2 q2 ...".
RunReport gcdset_construct(int k, const std::string& primes);

RunReport gcdset_search(long long max_element, int max_size, bool prune_by_divisor_count);

// ---- cyclic ----------------------------------------------------------------

/// Newton solves from the canonical point and from `starts` random positive
/// initial assignments.
RunReport cyclic_solve(int n, int starts, double tol, std::uint64_t seed);

// ---- geom ------------------------------------------------------------------

/// Rectangle concurrency over random configurations; `perturb` > 0 also
/// checks that breaking the angle condition by that relative amount is
/// detected.
RunReport geom_p1(int trials, std::uint64_t seed, double perturb);

/// Hexagon midpoint/collinearity/power verification over random hexagons.
RunReport geom_p6(int trials, std::uint64_t seed);

// ---- aggregate ---------------------------------------------------------------

/// Runs a representative workload of every subcommand twice and adds a
/// cross-run determinism claim; sub-reports are embedded in the output.
RunReport run_all(std::uint64_t seed, const std::string& data_dir);

}  // namespace olymp::cli
