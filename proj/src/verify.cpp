#include "bzf/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bzf/classify.hpp"
#include "bzf/error.hpp"
#include "bzf/morphisms.hpp"
#include "bzf/partial_maps.hpp"

namespace bzf::verify {

  void SuiteResult::absorb(SuiteResult const& other) {
    samples += other.samples;
    failures += other.failures;
    if (!failing_seed && other.failing_seed) {
      failing_seed  = other.failing_seed;
      first_failure = other.first_failure;
    }
  }

  std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
    // splitmix64 step over seed + index.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  namespace {
    bool coin(Rng& rng) {
      return uniform(rng, 0, 1) == 1;
    }

    EpSet random_set_with(Rng& rng, Config const& c, bool cofinite) {
      std::int64_t const        t = uniform(rng, 0, c.max_threshold);
      std::int64_t const        p = uniform(rng, 1, c.max_period);
      std::vector<std::int64_t> head;
      for (std::int64_t n = 0; n < t; ++n) {
        if (coin(rng)) {
          head.push_back(n);
        }
      }
      std::vector<bool> residues(p, true);
      if (!cofinite) {
        for (std::int64_t r = 0; r < p; ++r) {
          residues[r] = coin(rng);
        }
      }
      return EpSet::from_parts(std::move(head), t, p, std::move(residues));
    }

    template <typename T>
    T const& pick(Rng& rng, std::vector<T> const& v) {
      return v[uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1)];
    }

    using Outcome = std::optional<std::string>;

    template <typename Body>
    SuiteResult run(std::string name,
                    Config const& c,
                    std::size_t   samples,
                    Body&&        body) {
      SuiteResult r;
      r.name = std::move(name);
      for (std::size_t idx = 0; idx < samples; ++idx) {
        std::uint64_t const seed = sample_seed(c.seed, idx);
        Rng                 rng(seed);
        Outcome             failure;
        try {
          failure = body(rng, idx);
        } catch (std::exception const& e) {
          failure = std::string("exception: ") + e.what();
        }
        ++r.samples;
        if (failure) {
          ++r.failures;
          if (!r.failing_seed) {
            r.failing_seed  = seed;
            r.first_failure = *failure;
          }
        }
      }
      return r;
    }

    std::string str(Element const& a) {
      return a.to_string();
    }

    // Elements (p, q, G) with p, q in a box around (p0, q0), plus zero.
    template <typename Pred>
    bool any_candidate(SemigroupCtx const& ctx,
                       std::int64_t        p0,
                       std::int64_t        q0,
                       std::int64_t        radius,
                       Pred&&              pred) {
      if (ctx.has_empty() && pred(Element::zero())) {
        return true;
      }
      for (std::int64_t p = p0 - radius; p <= p0 + radius; ++p) {
        for (std::int64_t q = q0 - radius; q <= q0 + radius; ++q) {
          for (EpSet const& f : ctx.family()->members()) {
            if (!f.is_empty() && pred(Element::triple(p, q, f))) {
              return true;
            }
          }
        }
      }
      return false;
    }

    bool definitional_leq(SemigroupCtx const& ctx,
                          Element const&      a,
                          Element const&      b) {
      return a == ctx.multiply(a, inverse(a), b);
    }
  }  // namespace

  EpSet random_epset(Rng& rng, Config const& config) {
    return random_set_with(rng, config, false);
  }

  Family random_family(Rng& rng, Config const& config, bool cofinite) {
    for (;;) {
      std::vector<EpSet> gens;
      std::int64_t const count = uniform(rng, 1, 3);
      for (std::int64_t k = 0; k < count; ++k) {
        gens.push_back(random_set_with(rng, config, cofinite));
      }
      try {
        return Family::close(gens, config.max_family);
      } catch (Error const&) {
        // over the cap; draw again
      }
    }
  }

  Element random_element(Rng& rng, SemigroupCtx const& ctx, Config const& c) {
    std::int64_t const i = uniform(rng, -c.index_bound, c.index_bound);
    std::int64_t const j = uniform(rng, -c.index_bound, c.index_bound);
    if (ctx.is_singletons()) {
      if (uniform(rng, 0, 7) == 0) {
        return Element::zero();
      }
      return Element::triple(i, j, EpSet::finite({uniform(rng, 0, 10)}));
    }
    EpSet const& f = pick(rng, ctx.family()->members());
    return f.is_empty() ? Element::zero() : Element::triple(i, j, f);
  }

  Element random_idempotent(Rng& rng, SemigroupCtx const& ctx, Config const& c) {
    Element a = random_element(rng, ctx, c);
    return a.is_zero() ? a : Element::triple(a.i(), a.i(), a.set());
  }

  std::vector<Family> standard_families(Config const& config,
                                        std::size_t   random_count) {
    std::vector<Family> out;
    out.push_back(Family::close(std::vector{EpSet::ray(0)}));
    out.push_back(Family::close(std::vector{EpSet(), EpSet::finite({3})}));
    out.push_back(Family::close(std::vector{EpSet::progression(2, 3)}));
    out.push_back(Family::close(std::vector{EpSet::finite({0, 1})}));
    Rng rng(sample_seed(config.seed, 0xFA311));
    for (std::size_t k = 0; k < random_count; ++k) {
      out.push_back(random_family(rng, config));
    }
    return out;
  }

  std::optional<std::int64_t> brute_shift_subset(EpSet const& a,
                                                 EpSet const& b,
                                                 std::int64_t k_limit) {
    std::int64_t const span = a.threshold() + b.threshold()
                              + 2 * std::lcm(a.period(), b.period()) + 1;
    for (std::int64_t k = 0; k <= k_limit; ++k) {
      bool ok = true;
      for (std::int64_t x = 0; x < k + span && ok; ++x) {
        ok = !a.contains(x) || b.contains(x + k);
      }
      if (ok) {
        return k;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup axioms
  ////////////////////////////////////////////////////////////////////////

  SuiteResult check_associativity(SemigroupCtx const& ctx, Config const& c) {
    return run("associativity " + ctx.to_string(),
               c,
               c.samples,
               [&](Rng& rng, std::size_t) -> Outcome {
                 Element a = random_element(rng, ctx, c);
                 Element b = random_element(rng, ctx, c);
                 Element d = random_element(rng, ctx, c);
                 Element l = ctx.multiply(ctx.multiply(a, b), d);
                 Element r = ctx.multiply(a, ctx.multiply(b, d));
                 if (l != r) {
                   return "(ab)c=" + str(l) + " a(bc)=" + str(r) + " for "
                          + str(a) + "," + str(b) + "," + str(d);
                 }
                 return std::nullopt;
               });
  }

  SuiteResult check_inverse(SemigroupCtx const& ctx, Config const& c) {
    return run(
        "inverse " + ctx.to_string(),
        c,
        c.samples,
        [&](Rng& rng, std::size_t) -> Outcome {
          Element const a  = random_element(rng, ctx, c);
          Element const ai = inverse(a);
          if (ctx.multiply(a, ai, a) != a || ctx.multiply(ai, a, ai) != ai) {
            return "inverse axioms fail for " + str(a);
          }
          if ((ctx.multiply(a, a) == a) != is_idempotent(a)) {
            return "idempotent criterion disagrees for " + str(a);
          }
          Element e = random_idempotent(rng, ctx, c);
          Element f = random_idempotent(rng, ctx, c);
          if (ctx.multiply(e, f) != ctx.multiply(f, e)) {
            return "idempotents do not commute: " + str(e) + "," + str(f);
          }
          // Any x with axa = a and xax = x must equal a^-1.
          std::int64_t const p0 = a.is_zero() ? 0 : a.j();
          std::int64_t const q0 = a.is_zero() ? 0 : a.i();
          Element            rogue = Element::zero();
          bool const         found = any_candidate(
              ctx, p0, q0, 1, [&](Element const& x) {
                if (x != ai && ctx.multiply(a, x, a) == a
                    && ctx.multiply(x, a, x) == x) {
                  rogue = x;
                  return true;
                }
                return false;
              });
          if (found) {
            return "second inverse " + str(rogue) + " of " + str(a);
          }
          return std::nullopt;
        });
  }

  SuiteResult check_natural_order(SemigroupCtx const& ctx, Config const& c) {
    return run(
        "order " + ctx.to_string(),
        c,
        c.samples,
        [&](Rng& rng, std::size_t idx) -> Outcome {
          Element const b = random_element(rng, ctx, c);
          Element       a = random_element(rng, ctx, c);
          if (idx % 2 == 0) {
            // a = b e lies below b.
            a = ctx.multiply(b, random_idempotent(rng, ctx, c));
          }
          if (natural_leq(a, b) != definitional_leq(ctx, a, b)) {
            return "order criterion disagrees for " + str(a) + " <= "
                   + str(b);
          }
          Element const f = random_idempotent(rng, ctx, c);
          Element       e = random_idempotent(rng, ctx, c);
          if (idx % 2 == 1) {
            e = ctx.multiply(f, e);
          }
          if (idempotent_leq(e, f) != natural_leq(e, f)
              || idempotent_leq(e, f) != definitional_leq(ctx, e, f)) {
            return "idempotent order disagrees for " + str(e) + " <= "
                   + str(f);
          }
          return std::nullopt;
        });
  }

  SuiteResult check_green(SemigroupCtx const& ctx, Config const& c) {
    std::size_t swept_r = 0, swept_l = 0, swept_d = 0;
    return run(
        "green " + ctx.to_string(),
        c,
        c.samples,
        [&](Rng& rng, std::size_t idx) -> Outcome {
          Element const a = random_element(rng, ctx, c);
          Element       b = random_element(rng, ctx, c);
          if (!a.is_zero()) {
            std::int64_t const i = uniform(rng, -c.index_bound, c.index_bound);
            switch (idx % 4) {
              case 0: b = Element::triple(a.i(), i, a.set()); break;
              case 1: b = Element::triple(i, a.j(), a.set()); break;
              case 2:
                b = Element::triple(
                    i, uniform(rng, -c.index_bound, c.index_bound), a.set());
                break;
              default: break;
            }
          }

          // R
          if (green(a, b, GreenRel::R)) {
            auto [x, y] = green_witness(a, b, GreenRel::R);
            ctx.validate(x);
            ctx.validate(y);
            if (ctx.multiply(a, x) != b || ctx.multiply(b, y) != a) {
              return "bad R witness for " + str(a) + "," + str(b);
            }
          } else if (swept_r < c.sweep_limit) {
            ++swept_r;
            std::int64_t const aj = a.is_zero() ? 0 : a.j();
            std::int64_t const bj = b.is_zero() ? 0 : b.j();
            bool const         fwd = any_candidate(
                ctx, aj, bj, c.sweep_radius, [&](Element const& x) {
                  return ctx.multiply(a, x) == b;
                });
            bool const back = any_candidate(
                ctx, bj, aj, c.sweep_radius, [&](Element const& y) {
                  return ctx.multiply(b, y) == a;
                });
            if (fwd && back) {
              return "R witness found for non-R pair " + str(a) + ","
                     + str(b);
            }
          }

          // L
          if (green(a, b, GreenRel::L)) {
            auto [x, y] = green_witness(a, b, GreenRel::L);
            ctx.validate(x);
            ctx.validate(y);
            if (ctx.multiply(x, a) != b || ctx.multiply(y, b) != a) {
              return "bad L witness for " + str(a) + "," + str(b);
            }
          } else if (swept_l < c.sweep_limit) {
            ++swept_l;
            std::int64_t const ai = a.is_zero() ? 0 : a.i();
            std::int64_t const bi = b.is_zero() ? 0 : b.i();
            bool const         fwd = any_candidate(
                ctx, bi, ai, c.sweep_radius, [&](Element const& x) {
                  return ctx.multiply(x, a) == b;
                });
            bool const back = any_candidate(
                ctx, ai, bi, c.sweep_radius, [&](Element const& y) {
                  return ctx.multiply(y, b) == a;
                });
            if (fwd && back) {
              return "L witness found for non-L pair " + str(a) + ","
                     + str(b);
            }
          }

          // D, via the idempotent characterization a a^-1 = c c^-1 and
          // c^-1 c = b^-1 b.
          Element const left  = ctx.multiply(a, inverse(a));
          Element const right = ctx.multiply(inverse(b), b);
          auto          links = [&](Element const& cc) {
            return ctx.multiply(cc, inverse(cc)) == left
                   && ctx.multiply(inverse(cc), cc) == right;
          };
          if (green(a, b, GreenRel::D)) {
            auto [cc, cci] = green_witness(a, b, GreenRel::D);
            ctx.validate(cc);
            if (!links(cc) || cci != inverse(cc)) {
              return "bad D witness for " + str(a) + "," + str(b);
            }
          } else if (swept_d < c.sweep_limit) {
            ++swept_d;
            std::int64_t const ai = a.is_zero() ? 0 : a.i();
            std::int64_t const bj = b.is_zero() ? 0 : b.j();
            if (any_candidate(ctx, ai, bj, c.sweep_radius, links)) {
              return "D link found for non-D pair " + str(a) + "," + str(b);
            }
          }

          // H is equality.
          if (green(a, b, GreenRel::H) != (a == b)) {
            return "H differs from equality for " + str(a) + "," + str(b);
          }

          // J: a D b' <= b and b D a' <= a for some a', b'.
          bool expected_j;
          if (a.is_zero() || b.is_zero()) {
            expected_j = a.is_zero() && b.is_zero();
          } else {
            std::int64_t const bound = shift_subset_bound(a.set(), b.set());
            auto dominated = [&](Element const& top, EpSet const& set) {
              for (std::int64_t k = 0; k <= bound; ++k) {
                Element const below
                    = Element::triple(top.i() + k, top.j() + k, set);
                if (definitional_leq(ctx, below, top)) {
                  return true;
                }
              }
              return false;
            };
            expected_j = dominated(b, a.set()) && dominated(a, b.set());
          }
          if (green(a, b, GreenRel::J) != expected_j) {
            return "J criterion disagrees with domination for " + str(a)
                   + "," + str(b);
          }
          return std::nullopt;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracle
  ////////////////////////////////////////////////////////////////////////

  SuiteResult check_oracle(Config const& c) {
    return run(
        "oracle window " + std::to_string(c.window),
        c,
        c.samples,
        [&](Rng& rng, std::size_t) -> Outcome {
          auto draw = [&] {
            return RestrictedShift{
                {uniform(rng, -16, 16), uniform(rng, -16, 16)},
                random_epset(rng, c)};
          };
          RestrictedShift const a = draw();
          RestrictedShift const b = draw();
          Triple const          t = multiply_triples(
              {a.shift.i, a.shift.j, a.offsets},
              {b.shift.i, b.shift.j, b.offsets});

          PartialShift const composed = compose_shifts(a.shift, b.shift);
          if (composed.i != t.i || composed.j != t.j) {
            return "index pair mismatch";
          }

          std::vector<RestrictedShift> const maps{a, b};
          std::int64_t const w = covering_window(maps, c.window);
          auto const pointwise = restricted_compose_dom(a, b, w);
          auto const closed    = closed_form_dom(a, b).members_in(w);
          auto const product   = ShiftedSet{t.i, t.set}.members_in(w);
          if (pointwise != closed || closed != product) {
            return "domain mismatch for (" + std::to_string(a.shift.i) + ","
                   + std::to_string(a.shift.j) + ";"
                   + a.offsets.to_string() + ")*("
                   + std::to_string(b.shift.i) + ","
                   + std::to_string(b.shift.j) + ";"
                   + b.offsets.to_string() + ")";
          }
          for (std::int64_t x : pointwise) {
            if (*b.apply(*a.apply(x)) != x - t.i + t.j) {
              return "map rule mismatch at " + std::to_string(x);
            }
          }
          // Same domain through explicit window graphs, with room for the
          // intermediate point.
          WindowFn const graph
              = compose(eval_window(a, w + 64), eval_window(b, w + 64));
          std::vector<std::int64_t> via_graph;
          for (std::int64_t x : graph.domain()) {
            if (x >= -w && x <= w) {
              via_graph.push_back(x);
            }
          }
          if (via_graph != pointwise) {
            return "window graph composition mismatch";
          }
          return std::nullopt;
        });
  }

  SuiteResult check_partial_shift_square(Config const& c) {
    return run("partial-shift square",
               c,
               c.samples,
               [&](Rng& rng, std::size_t) -> Outcome {
                 PartialShift const a{uniform(rng, -20, 20),
                                      uniform(rng, -20, 20)};
                 PartialShift const b{uniform(rng, -20, 20),
                                      uniform(rng, -20, 20)};
                 PartialShift const ab = compose_shifts(a, b);
                 if (partial_shift_iso(ab)
                     != ext_bicyclic_mul(partial_shift_iso(a),
                                         partial_shift_iso(b))) {
                   return std::string("commuting square fails");
                 }
                 for (std::int64_t x = -64; x <= 64; ++x) {
                   std::optional<std::int64_t> lhs;
                   if (auto mid = a.apply(x)) {
                     lhs = b.apply(*mid);
                   }
                   if (lhs != ab.apply(x)) {
                     return "pointwise composition differs at "
                            + std::to_string(x);
                   }
                 }
                 return std::nullopt;
               });
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification cross-checks
  ////////////////////////////////////////////////////////////////////////

  SuiteResult check_classification(SemigroupCtx const& ctx, Config const& c) {
    StructureReport const report  = classify(ctx);
    auto const&           members = ctx.family()->members();
    auto const            nonempty = ctx.family()->nonempty_members();

    SuiteResult r;
    r.name = "classify " + ctx.to_string();
    auto fail = [&](std::string what) {
      ++r.failures;
      if (!r.failing_seed) {
        r.failing_seed  = c.seed;
        r.first_failure = std::move(what);
      }
    };

    // simple / 0-simple against pairwise J on (0, 0, F).
    auto all_j = [&](std::vector<EpSet> const& sets) {
      for (EpSet const& x : sets) {
        for (EpSet const& y : sets) {
          if (!green(representative(x), representative(y), GreenRel::J)) {
            return false;
          }
        }
      }
      return true;
    };
    ++r.samples;
    if (!report.has_zero && report.simple != all_j(members)) {
      fail("simple disagrees with pairwise J");
    }
    if (report.has_zero && members.size() > 1
        && report.zero_simple != all_j(nonempty)) {
      fail("zero_simple disagrees with pairwise J");
    }
    ++r.samples;
    if (report.bisimple != (members.size() == 1)
        || (report.zero_bisimple
            && !(report.has_zero && members.size() == 2))) {
      fail("bisimplicity invariants violated");
    }
    ++r.samples;
    if (report.nonzero_d_classes != d_class_count(ctx)
        || report.nonzero_d_classes != nonempty.size()) {
      fail("D-class count mismatch");
    }

    SuiteResult sampled = run(
        r.name,
        c,
        c.samples,
        [&](Rng& rng, std::size_t) -> Outcome {
          Element const a = random_element(rng, ctx, c);
          Element const b = random_element(rng, ctx, c);
          // bisimple iff every pair of elements is D-related.
          if (report.bisimple && !green(a, b, GreenRel::D)) {
            return "bisimple but " + str(a) + "," + str(b) + " not D";
          }
          // E-unitary scan: e <= s with e idempotent forces s idempotent.
          Element const e = random_idempotent(rng, ctx, c);
          for (Element const& s : {a, b}) {
            if (report.e_unitary && natural_leq(e, s) && !is_idempotent(s)) {
              return "E-unitary violated by " + str(e) + " <= " + str(s);
            }
          }
          if (!report.e_unitary) {
            // The reported witness must really break E-unitarity.
            auto const& w = report.witnesses.at("e_unitary").pair;
            if (!w || !natural_leq(w->first, w->second)
                || !is_idempotent(w->first) || is_idempotent(w->second)) {
              return std::string("bad e_unitary witness");
            }
          }
          // Identity: only for {empty}; otherwise every idempotent
          // candidate (i, i, F) fails against (i - 1, i - 1, F).
          if (report.has_identity) {
            if (ctx.multiply(Element::zero(), a) != a) {
              return std::string("zero is not an identity of {0}");
            }
          } else if (!a.is_zero()) {
            Element const cand = Element::triple(a.i(), a.i(), a.set());
            Element const low
                = Element::triple(a.i() - 1, a.i() - 1, a.set());
            if (ctx.multiply(cand, low) == low
                && ctx.multiply(low, cand) == low) {
              return "candidate identity " + str(cand) + " survived";
            }
            if (ctx.has_empty() && ctx.multiply(Element::zero(), a) == a) {
              return std::string("zero acts as identity");
            }
          }
          return std::nullopt;
        });
    r.absorb(sampled);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  SuiteResult check_sigma(SemigroupCtx const& ctx, Config const& c) {
    return run(
        "sigma " + ctx.to_string(),
        c,
        c.samples,
        [&](Rng& rng, std::size_t idx) -> Outcome {
          Element const a = random_element(rng, ctx, c);
          Element       b = random_element(rng, ctx, c);
          if (sigma_hom(ctx, ctx.multiply(a, b))
              != sigma_hom(ctx, a) + sigma_hom(ctx, b)) {
            return "sigma not additive on " + str(a) + "," + str(b);
          }
          if (idx % 2 == 0) {
            // Same i - j as a.
            std::int64_t const s = uniform(rng, -c.index_bound, c.index_bound);
            b = Element::triple(b.i() + s, b.i() + s - sigma_hom(ctx, a),
                                b.set());
          }
          // a sigma b iff e a = e b for some idempotent e.
          std::int64_t const top = std::max(a.i(), b.i());
          bool               by_definition = false;
          for (std::int64_t m = top - 2; m <= top + 4 && !by_definition;
               ++m) {
            for (EpSet const& g : ctx.family()->members()) {
              Element const e = Element::triple(m, m, g);
              if (ctx.multiply(e, a) == ctx.multiply(e, b)) {
                by_definition = true;
                break;
              }
            }
          }
          if (by_definition != (sigma_hom(ctx, a) == sigma_hom(ctx, b))) {
            return "sigma classes disagree for " + str(a) + "," + str(b);
          }
          // Congruence.
          Element const d = random_element(rng, ctx, c);
          if (sigma_hom(ctx, a) == sigma_hom(ctx, b)
              && (sigma_hom(ctx, ctx.multiply(d, a))
                      != sigma_hom(ctx, ctx.multiply(d, b))
                  || sigma_hom(ctx, ctx.multiply(a, d))
                         != sigma_hom(ctx, ctx.multiply(b, d)))) {
            return std::string("sigma is not a congruence");
          }
          return std::nullopt;
        });
  }

  SuiteResult check_brandt(Config const& c) {
    SemigroupCtx const ctx = SemigroupCtx::singletons();
    return run(
        "brandt",
        c,
        c.samples,
        [&](Rng& rng, std::size_t idx) -> Outcome {
          std::int64_t const i1 = uniform(rng, -c.index_bound, c.index_bound);
          std::int64_t const j1 = uniform(rng, -c.index_bound, c.index_bound);
          std::int64_t const j2 = uniform(rng, -c.index_bound, c.index_bound);
          std::int64_t       k1 = uniform(rng, 1, 10);
          std::int64_t       i2 = j1, k2 = k1;
          bool const         meet = idx % 2 == 0;
          switch (idx % 6 / 2) {
            case 0:  // j1 < i2
              i2 = j1 + uniform(rng, 1, k1);
              break;
            case 1:  // j1 == i2
              break;
            default:  // j1 > i2
              i2 = j1 - uniform(rng, 1, 10);
              break;
          }
          k2 = j1 + k1 - i2;
          if (!meet) {
            k2 = k2 == 0 ? 1 : k2 - 1;
          }
          Element const x = Element::triple(i1, j1, EpSet::finite({k1}));
          Element const y = Element::triple(i2, j2, EpSet::finite({k2}));
          if (to_brandt(ctx.multiply(x, y))
              != brandt_mul(to_brandt(x), to_brandt(y))) {
            return "brandt map not multiplicative on " + str(x) + ","
                   + str(y);
          }
          if (from_brandt(to_brandt(x)) != x) {
            return "brandt map not injective at " + str(x);
          }
          BrandtElt const target = BrandtElt::make(
              uniform(rng, -30, 30), uniform(rng, 0, 10), uniform(rng, -30, 30));
          if (to_brandt(from_brandt(target)) != target) {
            return "no preimage for " + target.to_string();
          }
          return std::nullopt;
        });
  }

  SuiteResult check_reindex(Config const& c) {
    return run(
        "reindex",
        c,
        c.samples,
        [&](Rng& rng, std::size_t) -> Outcome {
          std::int64_t const i1 = uniform(rng, 0, 8);
          std::int64_t const i2 = uniform(rng, 0, 8);
          std::int64_t const j0 = uniform(rng, 1, 6);
          SemigroupCtx const src(Family::from_members(
              std::vector{EpSet(), EpSet::progression(i1, j0)}));
          SemigroupCtx const dst(Family::from_members(
              std::vector{EpSet(), EpSet::progression(i2, j0)}));
          Element const x = random_element(rng, src, c);
          Element const y = random_element(rng, src, c);
          auto          h = [&](Element const& a) {
            return progression_reindex(a, i1, i2, j0);
          };
          if (h(src.multiply(x, y)) != dst.multiply(h(x), h(y))) {
            return "reindex not multiplicative on " + str(x) + "," + str(y);
          }
          dst.validate(h(x));
          if (progression_reindex(h(x), i2, i1, j0) != x) {
            return "reindex not invertible at " + str(x);
          }
          return std::nullopt;
        });
  }

  SuiteResult check_matrix_units(Config const& c) {
    return run(
        "matrix-units",
        c,
        c.samples,
        [&](Rng& rng, std::size_t idx) -> Outcome {
          EpSet const        point = EpSet::finite({uniform(rng, 0, 10)});
          SemigroupCtx const ctx(
              Family::from_members(std::vector{EpSet(), point}));
          Element const x = random_element(rng, ctx, c);
          Element       y = random_element(rng, ctx, c);
          if (idx % 3 == 0 && !x.is_zero() && !y.is_zero()) {
            y = Element::triple(x.j(), y.j(), point);
          }
          auto f = [&](Element const& a) { return to_matrix_units(ctx, a); };
          if (f(ctx.multiply(x, y)) != matrix_unit_mul(f(x), f(y))) {
            return "matrix units not multiplicative on " + str(x) + ","
                   + str(y);
          }
          auto g = [&](Element const& a) {
            return to_matrix_units_omega(ctx, a);
          };
          if (g(ctx.multiply(x, y)) != matrix_unit_mul(g(x), g(y))) {
            return "omega-indexed matrix units not multiplicative";
          }
          if (from_matrix_units(ctx, f(x)) != x) {
            return "matrix units not injective at " + str(x);
          }
          MatrixUnitElt const target = MatrixUnitElt::unit(
              uniform(rng, -30, 30), uniform(rng, -30, 30));
          if (f(from_matrix_units(ctx, target)) != target) {
            return "no preimage for " + target.to_string();
          }
          // Restricted to omega indices the product is that of B_omega^F.
          if (!x.is_zero() && !y.is_zero()) {
            Element const xw = Element::triple(
                std::abs(x.i()), std::abs(x.j()), point);
            Element const yw = Element::triple(
                std::abs(y.i()), std::abs(y.j()), point);
            MatrixUnitElt const m = f(ctx.multiply(xw, yw));
            if (m != matrix_unit_mul(f(xw), f(yw))
                || (!m.is_zero() && (m.row() < 0 || m.col() < 0))) {
              return std::string("omega restriction leaves omega x omega");
            }
          }
          return std::nullopt;
        });
  }

  SuiteResult check_ext_bicyclic(Config const& c) {
    return run(
        "ext-bicyclic",
        c,
        c.samples,
        [&](Rng& rng, std::size_t) -> Outcome {
          SemigroupCtx const ctx(
              Family::from_members(std::vector{EpSet::ray(uniform(rng, 0, 8))}));
          Element const x = random_element(rng, ctx, c);
          Element const y = random_element(rng, ctx, c);
          auto f = [&](Element const& a) { return to_ext_bicyclic(ctx, a); };
          if (f(ctx.multiply(x, y)) != ext_bicyclic_mul(f(x), f(y))) {
            return "ext-bicyclic map not multiplicative on " + str(x) + ","
                   + str(y);
          }
          ExtBicyclicElt const target{uniform(rng, -30, 30),
                                      uniform(rng, -30, 30)};
          if (f(from_ext_bicyclic(ctx, target)) != target
              || from_ext_bicyclic(ctx, f(x)) != x) {
            return std::string("ext-bicyclic map not bijective");
          }
          return std::nullopt;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Family machinery
  ////////////////////////////////////////////////////////////////////////

  SuiteResult check_closure(Config const& c, std::size_t generator_sets) {
    std::size_t diverged = 0;
    SuiteResult r        = run(
        "closure",
        c,
        generator_sets,
        [&](Rng& rng, std::size_t) -> Outcome {
          for (;;) {
            std::vector<EpSet> gens;
            std::int64_t const count = uniform(rng, 1, 3);
            for (std::int64_t k = 0; k < count; ++k) {
              gens.push_back(random_epset(rng, c));
            }
            std::optional<Family> closed;
            try {
              closed = Family::close(gens, c.max_family);
            } catch (Error const& e) {
              if (e.code() != "ClosureDiverged") {
                throw;
              }
              ++diverged;
              continue;
            }
            if (!is_omega_closed(closed->members()).closed) {
              return "closure is not omega-closed: " + closed->to_string();
            }
            for (EpSet const& g : gens) {
              if (!closed->contains(g)) {
                return "closure lost generator " + g.to_string();
              }
            }
            if (Family::close(closed->members()) != *closed) {
              return "closure not idempotent: " + closed->to_string();
            }
            // Monotone in the generators.
            std::vector<EpSet> bigger = gens;
            bigger.push_back(random_epset(rng, c));
            try {
              Family const wide = Family::close(bigger, c.max_family);
              for (EpSet const& m : closed->members()) {
                if (!wide.contains(m)) {
                  return "closure not monotone";
                }
              }
            } catch (Error const& e) {
              if (e.code() != "ClosureDiverged") {
                throw;
              }
            }
            return std::nullopt;
          }
        });
    if (diverged > 0) {
      r.name += " (" + std::to_string(diverged) + " draws over the cap)";
    }
    return r;
  }

  SuiteResult check_shift_subset(Config const& c) {
    return run(
        "exists_shift_subset",
        c,
        c.samples,
        [&](Rng& rng, std::size_t idx) -> Outcome {
          EpSet const b = random_epset(rng, c);
          EpSet       a = random_epset(rng, c);
          if (idx % 2 == 0) {
            // Plant a shifted subset of b.
            a = shift(intersect(b, random_epset(rng, c)), -uniform(rng, 0, 12));
          }
          std::int64_t const bound = shift_subset_bound(a, b);
          auto const         fast  = exists_shift_subset(a, b);
          auto const         slow  = brute_shift_subset(a, b, 4 * bound);
          if (fast != slow) {
            return "shift subset mismatch for " + a.to_string() + " in "
                   + b.to_string();
          }
          if (fast && !is_subset(shift(a, *fast), b)) {
            return std::string("returned shift is not a subset");
          }
          return std::nullopt;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Drivers
  ////////////////////////////////////////////////////////////////////////

  SuiteResult check_hom(std::string const& name, Config const& c) {
    if (name == "sigma") {
      SuiteResult r;
      r.name = "sigma";
      Rng rng(sample_seed(c.seed, 0x5161));
      std::vector<Family> fams{
          Family::close(std::vector{EpSet::ray(0)}),
          Family::close(std::vector{EpSet::ray(0), EpSet::ray(3)})};
      for (int k = 0; k < 3; ++k) {
        fams.push_back(random_family(rng, c, true));
      }
      Config per = c;
      per.samples = (c.samples + fams.size() - 1) / fams.size();
      for (Family const& f : fams) {
        r.absorb(check_sigma(SemigroupCtx(f), per));
      }
      return r;
    }
    if (name == "ext-bicyclic") {
      return check_ext_bicyclic(c);
    }
    if (name == "matrix-units") {
      return check_matrix_units(c);
    }
    if (name == "brandt") {
      return check_brandt(c);
    }
    if (name == "reindex") {
      return check_reindex(c);
    }
    if (name == "partial-shift") {
      return check_partial_shift_square(c);
    }
    throw std::invalid_argument("unknown morphism " + name);
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{"associativity",
                                                "inverse",
                                                "order",
                                                "green",
                                                "oracle",
                                                "classify",
                                                "morphisms",
                                                "family"};
    return names;
  }

  namespace {
    SuiteResult over_families(std::string             name,
                              std::vector<Family> const& fams,
                              Config const&           c,
                              SuiteResult (*suite)(SemigroupCtx const&,
                                                   Config const&)) {
      SuiteResult total;
      total.name = std::move(name);
      for (Family const& f : fams) {
        total.absorb(suite(SemigroupCtx(f), c));
      }
      return total;
    }
  }  // namespace

  std::vector<SuiteResult> run_selftest(std::string const& suite,
                                        Config const&      c) {
    if (suite == "all") {
      std::vector<SuiteResult> out;
      for (std::string const& name : suite_names()) {
        auto part = run_selftest(name, c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    if (suite == "associativity") {
      return {over_families(
          "associativity", standard_families(c), c, check_associativity)};
    }
    if (suite == "inverse") {
      return {over_families(
          "inverse", standard_families(c), c, check_inverse)};
    }
    if (suite == "order") {
      return {over_families(
          "order", standard_families(c), c, check_natural_order)};
    }
    if (suite == "green") {
      return {over_families(
          "green", standard_families(c), c, check_green)};
    }
    if (suite == "oracle") {
      return {check_oracle(c), check_partial_shift_square(c)};
    }
    if (suite == "classify") {
      Config per  = c;
      per.samples = std::max<std::size_t>(c.samples / 10, 1);
      return {over_families(
          "classify", standard_families(c), per, check_classification)};
    }
    if (suite == "morphisms") {
      return {check_hom("sigma", c),
              check_hom("brandt", c),
              check_hom("reindex", c),
              check_hom("matrix-units", c),
              check_hom("ext-bicyclic", c),
              check_hom("partial-shift", c)};
    }
    if (suite == "family") {
      return {check_closure(c), check_shift_subset(c)};
    }
    throw std::invalid_argument("unknown suite " + suite);
  }

}  // namespace bzf::verify
