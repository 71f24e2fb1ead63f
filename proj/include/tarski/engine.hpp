#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tarski/axiom.hpp"
#include "tarski/report.hpp"
#include "tarski/rng.hpp"

namespace tarski {

struct not_checkable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Outcome { premise_false, conclusion_true, conclusion_false };

struct Evaluation {
  Outcome outcome;
  std::vector<std::string> evidence;  // exact, replayable strings
};

template <class M>
concept Model = requires(const M& m, const typename M::Point& p, std::string_view s) {
  typename M::Point;
  { m.eq(p, p) } -> std::convertible_to<bool>;
  { m.bet(p, p, p) } -> std::convertible_to<bool>;
  { m.cong(p, p, p, p) } -> std::convertible_to<bool>;
  { m.point_str(p) } -> std::convertible_to<std::string>;
  { m.parse_point(s) } -> std::convertible_to<typename M::Point>;
  { m.name() } -> std::convertible_to<std::string>;
};

/// Finite universe; existential conclusions are resolved by full search.
template <class M>
concept EnumerableModel = Model<M> && requires(const M& m, int i) {
  { m.universe_size() } -> std::convertible_to<int>;
  { m.point_at(i) } -> std::convertible_to<typename M::Point>;
};

/// Premise-directed instance generator; nullopt means the axiom has no
/// generator on this model.
template <class M>
concept SampledModel = Model<M> && requires(const M& m, AxiomId ax, SplitMix64& g) {
  { m.generate(ax, g) } -> std::convertible_to<std::optional<std::vector<typename M::Point>>>;
};

namespace detail_engine {

template <Model M>
bool col3(const M& m, const typename M::Point& a, const typename M::Point& b,
          const typename M::Point& c) {
  return m.bet(a, b, c) || m.bet(b, c, a) || m.bet(c, a, b);
}

// SST-style parallelism for models with no algebraic line primitive: equal
// lines, or no point lying on both.
template <EnumerableModel M>
bool par_derived(const M& m, const typename M::Point& a, const typename M::Point& b,
                 const typename M::Point& c, const typename M::Point& d) {
  if (m.eq(a, b) || m.eq(c, d)) return false;
  if (col3(m, a, b, c) && col3(m, a, b, d)) return true;
  for (int i = 0; i < m.universe_size(); ++i) {
    auto y = m.point_at(i);
    if (col3(m, a, b, y) && col3(m, c, d, y)) return false;
  }
  return true;
}

template <Model M>
Evaluation witness_verified(const M& m, bool ok, const std::string& label,
                            const typename M::Point& w) {
  Evaluation ev;
  ev.evidence.push_back(label + "=" + m.point_str(w));
  if (ok) {
    ev.outcome = Outcome::conclusion_true;
  } else {
    ev.outcome = Outcome::conclusion_false;
    ev.evidence.push_back("witness_check=failed");
  }
  return ev;
}

inline Evaluation search_exhausted(int universe) {
  return Evaluation{Outcome::conclusion_false,
                    {"witness_search=exhausted", "universe_size=" + std::to_string(universe)}};
}

}  // namespace detail_engine

/// Evaluates one axiom instance: decides the premise exactly, and on a true
/// premise resolves any existential through the model's witness oracles
/// (whose output is re-checked, never trusted) or, on finite models, by
/// exhaustive search.
template <Model M>
Evaluation evaluate_instance(AxiomId ax, const M& m,
                             const std::vector<typename M::Point>& pts) {
  using detail_engine::col3;
  if (!axiom_checkable(ax))
    throw not_checkable_error(std::string(axiom_name(ax)) +
                              " is a continuity schema and cannot be checked");
  if (static_cast<int>(pts.size()) != axiom_arity(ax))
    throw std::invalid_argument(std::string(axiom_name(ax)) + " takes " +
                                std::to_string(axiom_arity(ax)) + " points, got " +
                                std::to_string(pts.size()));

  const auto premise_false = [] { return Evaluation{Outcome::premise_false, {}}; };
  const auto conclude = [](bool ok) {
    return Evaluation{ok ? Outcome::conclusion_true : Outcome::conclusion_false, {}};
  };

  switch (ax) {
    case AxiomId::A0: {
      bool same = m.eq(pts[0], pts[1]);
      return conclude(same || !same);
    }
    case AxiomId::A1:
      return conclude(m.cong(pts[0], pts[1], pts[1], pts[0]));
    case AxiomId::A2: {
      const auto &a = pts[0], &b = pts[1], &c = pts[2], &d = pts[3], &e = pts[4], &f = pts[5];
      if (!(m.cong(a, b, c, d) && m.cong(a, b, e, f))) return premise_false();
      return conclude(m.cong(c, d, e, f));
    }
    case AxiomId::A2p: {
      const auto &a = pts[0], &b = pts[1], &c = pts[2], &d = pts[3], &e = pts[4], &f = pts[5];
      if (!(m.cong(a, b, e, f) && m.cong(c, d, e, f))) return premise_false();
      return conclude(m.cong(a, b, c, d));
    }
    case AxiomId::A3: {
      if (!m.cong(pts[0], pts[1], pts[2], pts[2])) return premise_false();
      return conclude(m.eq(pts[0], pts[1]));
    }
    case AxiomId::A4: {
      const auto &a = pts[0], &b = pts[1], &c = pts[2], &d = pts[3];
      auto holds = [&](const typename M::Point& e) {
        return m.bet(a, b, e) && m.cong(b, e, c, d);
      };
      if constexpr (EnumerableModel<M>) {
        for (int i = 0; i < m.universe_size(); ++i) {
          auto e = m.point_at(i);
          if (holds(e)) return detail_engine::witness_verified(m, true, "witness", e);
        }
        return detail_engine::search_exhausted(m.universe_size());
      } else if constexpr (requires { m.segment_witness(a, b, c, d); }) {
        auto e = m.segment_witness(a, b, c, d);
        return detail_engine::witness_verified(m, holds(e), "witness", e);
      } else {
        throw not_checkable_error("A4 needs a segment-construction oracle on " + m.name());
      }
    }
    case AxiomId::A5: {
      const auto &a = pts[0], &b = pts[1], &c = pts[2], &d = pts[3];
      const auto &a2 = pts[4], &b2 = pts[5], &c2 = pts[6], &d2 = pts[7];
      bool prem = m.cong(a, b, a2, b2) && m.cong(b, c, b2, c2) && m.cong(a, d, a2, d2) &&
                  m.cong(b, d, b2, d2) && m.bet(a, b, c) && m.bet(a2, b2, c2) && !m.eq(a, b);
      if (!prem) return premise_false();
      return conclude(m.cong(c, d, c2, d2));
    }
    case AxiomId::A6: {
      if (!m.bet(pts[0], pts[1], pts[0])) return premise_false();
      return conclude(m.eq(pts[0], pts[1]));
    }
    case AxiomId::A7:
    case AxiomId::A7p: {
      const auto &a = pts[0], &b = pts[1], &c = pts[2], &p = pts[3], &q = pts[4];
      bool prem = m.bet(a, p, c) && m.bet(b, q, c);
      if (ax == AxiomId::A7p)
        prem = prem && !m.eq(a, p) && !m.eq(p, c) && !m.eq(b, q) && !m.eq(q, c) &&
               !col3(m, a, b, c);
      if (!prem) return premise_false();
      auto holds = [&](const typename M::Point& x) {
        return m.bet(p, x, b) && m.bet(q, x, a);
      };
      if constexpr (EnumerableModel<M>) {
        for (int i = 0; i < m.universe_size(); ++i) {
          auto x = m.point_at(i);
          if (holds(x)) return detail_engine::witness_verified(m, true, "witness", x);
        }
        return detail_engine::search_exhausted(m.universe_size());
      } else if constexpr (requires { m.pasch_witness(a, b, c, p, q); }) {
        // formula witness for the strict configuration, named points as
        // fallback for the degenerate ones A7 admits
        std::vector<typename M::Point> candidates;
        if (auto x = m.pasch_witness(a, b, c, p, q)) candidates.push_back(*x);
        for (const auto& named : pts) candidates.push_back(named);
        for (const auto& x : candidates)
          if (holds(x)) return detail_engine::witness_verified(m, true, "witness", x);
        return Evaluation{Outcome::conclusion_false, {"witness_candidates=exhausted"}};
      } else {
        throw not_checkable_error(std::string(axiom_name(ax)) +
                                  " needs an inner-Pasch oracle on " + m.name());
      }
    }
    case AxiomId::A8: {
      auto holds = [&](const typename M::Point& a, const typename M::Point& b,
                       const typename M::Point& c) {
        return !m.bet(a, b, c) && !m.bet(b, c, a) && !m.bet(c, a, b);
      };
      if constexpr (EnumerableModel<M>) {
        int k = m.universe_size();
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
              auto a = m.point_at(i), b = m.point_at(j), c = m.point_at(l);
              if (holds(a, b, c))
                return Evaluation{Outcome::conclusion_true,
                                  {"witness=" + m.point_str(a) + " " + m.point_str(b) + " " +
                                   m.point_str(c)}};
            }
        return detail_engine::search_exhausted(k);
      } else if constexpr (requires { m.lower_dim_witness(); }) {
        auto w = m.lower_dim_witness();
        if (!w)
          throw not_checkable_error("A8 has no witness triple on " + m.name());
        auto [a, b, c] = *w;
        bool ok = holds(a, b, c);
        Evaluation ev{ok ? Outcome::conclusion_true : Outcome::conclusion_false,
                      {"witness=" + m.point_str(a) + " " + m.point_str(b) + " " +
                       m.point_str(c)}};
        if (!ok) ev.evidence.push_back("witness_check=failed");
        return ev;
      } else {
        throw not_checkable_error("A8 needs a lower-dimension witness on " + m.name());
      }
    }
    case AxiomId::A9:
    case AxiomId::A9p: {
      const auto &a = pts[0], &b = pts[1], &c = pts[2], &p = pts[3], &q = pts[4];
      bool prem = m.cong(a, p, a, q) && m.cong(b, p, b, q) && m.cong(c, p, c, q) && !m.eq(p, q);
      if (ax == AxiomId::A9p)
        prem = prem && !m.eq(a, b) && !m.eq(a, c) && !m.eq(b, c);
      if (!prem) return premise_false();
      return conclude(col3(m, a, b, c));
    }
    case AxiomId::A10: {
      const auto &a = pts[0], &b = pts[1], &c = pts[2], &d = pts[3], &t = pts[4];
      if (!(m.bet(a, d, t) && m.bet(b, d, c) && !m.eq(a, d))) return premise_false();
      auto holds = [&](const typename M::Point& x, const typename M::Point& y) {
        return m.bet(a, b, x) && m.bet(a, c, y) && m.bet(x, t, y);
      };
      auto found = [&](const typename M::Point& x, const typename M::Point& y) {
        return Evaluation{Outcome::conclusion_true,
                          {"witness_x=" + m.point_str(x), "witness_y=" + m.point_str(y)}};
      };
      if constexpr (EnumerableModel<M>) {
        int k = m.universe_size();
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            auto x = m.point_at(i), y = m.point_at(j);
            if (holds(x, y)) return found(x, y);
          }
        return detail_engine::search_exhausted(k);
      } else if constexpr (requires { m.euclid_witnesses(a, b, c, d, t); }) {
        if (auto pair = m.euclid_witnesses(a, b, c, d, t))
          if (holds(pair->first, pair->second)) return found(pair->first, pair->second);
        // d = t leaves t on segment bc, where (b, c) already witnesses
        if (holds(b, c)) return found(b, c);
        return Evaluation{Outcome::conclusion_false, {"witness_candidates=exhausted"}};
      } else {
        throw not_checkable_error("A10 needs a Euclid oracle on " + m.name());
      }
    }
    case AxiomId::A10p: {
      if constexpr (requires { m.eval_a10p(pts); }) {
        return m.eval_a10p(pts);
      } else {
        const auto &a = pts[0], &b = pts[1], &c = pts[2], &d = pts[3], &p = pts[4],
                   &q = pts[5];
        bool prem;
        if constexpr (requires { m.par(a, b, c, d); }) {
          prem = !m.eq(a, b) && !m.eq(c, d) && m.par(a, b, c, d);
        } else if constexpr (EnumerableModel<M>) {
          prem = detail_engine::par_derived(m, a, b, c, d);
        } else {
          throw not_checkable_error("A10p needs a parallelism predicate on " + m.name());
        }
        prem = prem && col3(m, a, b, p) && !col3(m, a, b, q);
        if (!prem) return premise_false();
        auto holds = [&](const typename M::Point& y) {
          return col3(m, c, d, y) && col3(m, p, q, y);
        };
        if constexpr (EnumerableModel<M>) {
          for (int i = 0; i < m.universe_size(); ++i) {
            auto y = m.point_at(i);
            if (holds(y)) return detail_engine::witness_verified(m, true, "witness", y);
          }
          return detail_engine::search_exhausted(m.universe_size());
        } else if constexpr (requires { m.line_intersection(c, d, p, q); }) {
          std::vector<typename M::Point> candidates;
          if (auto y = m.line_intersection(c, d, p, q)) candidates.push_back(*y);
          candidates.push_back(p);
          candidates.push_back(q);
          for (const auto& y : candidates)
            if (holds(y)) return detail_engine::witness_verified(m, true, "witness", y);
          return Evaluation{Outcome::conclusion_false, {"witness_candidates=exhausted"}};
        } else {
          throw not_checkable_error("A10p needs a line-intersection oracle on " + m.name());
        }
      }
    }
    case AxiomId::A14: {
      if (!m.bet(pts[0], pts[1], pts[2])) return premise_false();
      return conclude(m.bet(pts[2], pts[1], pts[0]));
    }
    case AxiomId::A15: {
      const auto &a = pts[0], &b = pts[1], &c = pts[2], &d = pts[3];
      if (!(m.bet(a, b, d) && m.bet(b, c, d))) return premise_false();
      return conclude(m.bet(a, b, c));
    }
    case AxiomId::A11:
    case AxiomId::A11p:
      break;  // unreachable, rejected above
  }
  throw std::logic_error("unhandled axiom");
}

template <Model M>
Certificate make_certificate(AxiomId ax, const M& m,
                             const std::vector<typename M::Point>& pts,
                             const std::vector<std::string>& evidence) {
  Certificate cert;
  cert.axiom = ax;
  cert.model = m.name();
  for (const auto& p : pts) cert.points.push_back(m.point_str(p));
  cert.evidence = evidence;
  return cert;
}

/// Runs `trials` premise-directed instances. Premise-satisfying trials are
/// counted separately so a vacuous run can never masquerade as a pass.
template <SampledModel M>
CheckReport sample_check(AxiomId ax, const M& m, long trials, std::uint64_t seed) {
  if (!axiom_checkable(ax))
    throw not_checkable_error(std::string(axiom_name(ax)) +
                              " is a continuity schema and cannot be checked");
  if (trials < 1) throw std::invalid_argument("sample_check: trials must be >= 1");
  CheckReport report;
  report.axiom = ax;
  report.mode = CheckMode::sampled;
  report.seed = seed;
  report.trials = trials;
  for (long t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t)));
    auto pts = m.generate(ax, rng);
    if (!pts)
      throw not_checkable_error(std::string(axiom_name(ax)) + " has no generator on " +
                                m.name());
    Evaluation ev = evaluate_instance(ax, m, *pts);
    if (ev.outcome == Outcome::premise_false) continue;
    ++report.premise_hits;
    if (ev.outcome == Outcome::conclusion_false) {
      ++report.failures;
      if (!report.certificate)
        report.certificate = make_certificate(ax, m, *pts, ev.evidence);
    }
  }
  report.status = report.failures > 0
                      ? CheckStatus::fail
                      : (report.premise_hits == 0 ? CheckStatus::unknown : CheckStatus::pass);
  if (report.status == CheckStatus::unknown) report.note = "no premise-satisfying trials";
  return report;
}

/// Checks every tuple of the finite universe in row-major order; the
/// certificate, if any, is the lexicographically first falsifying tuple.
template <EnumerableModel M>
CheckReport exhaustive_check(AxiomId ax, const M& m) {
  if (!axiom_checkable(ax))
    throw not_checkable_error(std::string(axiom_name(ax)) +
                              " is a continuity schema and cannot be checked");
  CheckReport report;
  report.axiom = ax;
  report.mode = CheckMode::exhaustive;
  int arity = axiom_arity(ax);
  int k = m.universe_size();
  std::vector<int> idx(static_cast<size_t>(arity), 0);
  bool done = false;
  while (!done) {
    std::vector<typename M::Point> pts;
    pts.reserve(idx.size());
    for (int i : idx) pts.push_back(m.point_at(i));
    ++report.trials;
    Evaluation ev = evaluate_instance(ax, m, pts);
    if (ev.outcome != Outcome::premise_false) {
      ++report.premise_hits;
      if (ev.outcome == Outcome::conclusion_false) {
        ++report.failures;
        if (!report.certificate)
          report.certificate = make_certificate(ax, m, pts, ev.evidence);
      }
    }
    done = true;
    for (int i = arity - 1; i >= 0; --i) {
      if (++idx[static_cast<size_t>(i)] < k) {
        done = false;
        break;
      }
      idx[static_cast<size_t>(i)] = 0;
    }
  }
  report.status = report.failures > 0 ? CheckStatus::fail : CheckStatus::pass;
  return report;
}

inline CheckReport not_checked_report(AxiomId ax, const std::string& why) {
  CheckReport report;
  report.axiom = ax;
  report.mode = CheckMode::sampled;
  report.status = CheckStatus::not_checked;
  report.note = why;
  return report;
}

template <Model M>
std::vector<CheckReport> check_suite(const M& m, const std::vector<AxiomId>& axioms,
                                     long trials, std::uint64_t seed) {
  std::vector<CheckReport> out;
  out.reserve(axioms.size());
  for (AxiomId ax : axioms) {
    try {
      if constexpr (EnumerableModel<M>) {
        out.push_back(exhaustive_check(ax, m));
      } else {
        out.push_back(sample_check(ax, m, trials, seed));
      }
    } catch (const not_checkable_error& e) {
      out.push_back(not_checked_report(ax, e.what()));
    }
  }
  return out;
}

/// Replays a certificate: the tuple must land on a true premise, the
/// conclusion must fail again, and the recomputed evidence must match the
/// stored evidence byte for byte.
template <Model M>
bool verify_certificate(const Certificate& cert, const M& m) {
  std::vector<typename M::Point> pts;
  try {
    for (const auto& text : cert.points) pts.push_back(m.parse_point(text));
    Evaluation ev = evaluate_instance(cert.axiom, m, pts);
    return ev.outcome == Outcome::conclusion_false && ev.evidence == cert.evidence;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace tarski
