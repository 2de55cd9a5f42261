#ifndef BZF_VERIFY_HPP_
#define BZF_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bzf/family.hpp"
#include "bzf/semigroup.hpp"

// Seeded property suites. Every sample draws from its own generator seeded
// by sample_seed(config.seed, index), so a failure is reproducible from the
// reported seed alone.

namespace bzf::verify {

  using Rng = std::mt19937_64;

  struct Config {
    std::uint64_t seed    = 20240601;
    std::size_t   samples = 10000;
    std::int64_t  window  = 128;
    // Largest |i|, |j| drawn for elements.
    std::int64_t index_bound = 20;
    // Bounds for random sets.
    std::int64_t max_threshold = 8;
    std::int64_t max_period    = 6;
    // Largest random family kept.
    std::size_t max_family = 16;
    // Candidate sweeps for negative Green verdicts: half-width of the index
    // box around the canonical witness, and how many false pairs per
    // relation and family are swept.
    std::int64_t sweep_radius = 2;
    std::size_t  sweep_limit  = 400;
  };

  struct SuiteResult {
    std::string                  name;
    std::size_t                  samples  = 0;
    std::size_t                  failures = 0;
    std::optional<std::uint64_t> failing_seed;
    std::string                  first_failure;

    bool passed() const noexcept {
      return failures == 0;
    }

    //! Adds other's counts; keeps the first failure seen.
    void absorb(SuiteResult const& other);
  };

  std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

  std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

  //! threshold <= max_threshold, period <= max_period, random head/residues.
  EpSet random_epset(Rng& rng, Config const& config);

  //! Closure of one to three random sets; retries until the closure has at
  //! most config.max_family members. cofinite restricts generators to sets
  //! with full tails, which keeps the empty set out of the closure.
  Family random_family(Rng& rng, Config const& config, bool cofinite = false);

  //! Uniform over the family members (empty member -> zero) with indices in
  //! [-index_bound, index_bound].
  Element random_element(Rng& rng, SemigroupCtx const& ctx, Config const& c);

  Element random_idempotent(Rng& rng, SemigroupCtx const& ctx, Config const& c);

  //! The four named families followed by `random_count` random closures.
  std::vector<Family> standard_families(Config const& config,
                                        std::size_t   random_count = 20);

  //! Brute-force k-scan on explicit windows, independent of is_subset and
  //! exists_shift_subset.
  std::optional<std::int64_t> brute_shift_subset(EpSet const& a,
                                                 EpSet const& b,
                                                 std::int64_t k_limit);

  // Individual suites.
  SuiteResult check_associativity(SemigroupCtx const& ctx, Config const& c);
  SuiteResult check_inverse(SemigroupCtx const& ctx, Config const& c);
  SuiteResult check_natural_order(SemigroupCtx const& ctx, Config const& c);
  SuiteResult check_green(SemigroupCtx const& ctx, Config const& c);
  SuiteResult check_oracle(Config const& c);
  SuiteResult check_partial_shift_square(Config const& c);
  SuiteResult check_classification(SemigroupCtx const& ctx, Config const& c);
  SuiteResult check_sigma(SemigroupCtx const& ctx, Config const& c);
  SuiteResult check_brandt(Config const& c);
  SuiteResult check_reindex(Config const& c);
  SuiteResult check_matrix_units(Config const& c);
  SuiteResult check_ext_bicyclic(Config const& c);
  SuiteResult check_closure(Config const& c, std::size_t generator_sets = 100);
  SuiteResult check_shift_subset(Config const& c);

  //! Named homomorphism suite: sigma, ext-bicyclic, matrix-units, brandt,
  //! reindex, partial-shift. Throws std::invalid_argument for other names.
  SuiteResult check_hom(std::string const& name, Config const& c);

  //! Suites: associativity, inverse, order, green, oracle, classify,
  //! morphisms, family, all. Throws std::invalid_argument for other names.
  std::vector<SuiteResult> run_selftest(std::string const& suite,
                                        Config const&      c);

  std::vector<std::string> const& suite_names();

}  // namespace bzf::verify

#endif  // BZF_VERIFY_HPP_
