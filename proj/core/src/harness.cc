// Copyright 2026 The pgtool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pgtool/harness.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "pgtool/generators.h"
#include "pgtool/parallel.h"

namespace pgtool {
namespace {

using Outcome = std::optional<std::string>;  // witness on failure

struct Case {
  std::string key;
  std::function<Outcome()> run;
};

std::string show(const Point& p) { return to_json(p).dump(); }

std::string show(std::span<const Point> pts) {
  Json j = Json::array();
  for (const auto& p : pts) j.push_back(to_json(p));
  return j.dump();
}

std::string pad(std::uint64_t x) {
  std::string s = std::to_string(x);
  return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

int span_dim(const Space& space, std::span<const Point> pts) {
  return Subspace::span(space, pts).dim();
}

std::vector<Point> pick(const std::vector<Point>& pool, std::uint32_t mask) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask >> i & 1u) out.push_back(pool[i]);
  }
  return out;
}

// Calls visit on every subset of pool with at most max_size elements.
bool for_small_subsets(const std::vector<Point>& pool, std::size_t max_size,
                       const std::function<bool(const std::vector<Point>&)>& visit) {
  std::vector<Point> current;
  std::function<bool(std::size_t)> walk = [&](std::size_t from) {
    if (!visit(current)) return false;
    if (current.size() == max_size) return true;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      if (!walk(i + 1)) return false;
      current.pop_back();
    }
    return true;
  };
  return walk(0);
}

std::vector<Point> random_subset(const std::vector<Point>& pool, std::size_t size, Rng& rng) {
  std::vector<Point> all = pool;
  for (std::size_t i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(all.size() - i)]);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

bool proportional(const Field& field, const Mat& a, const Mat& b) {
  std::optional<Elem> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if ((a[i][j] == 0) != (b[i][j] == 0)) return false;
      if (a[i][j] == 0) continue;
      const Elem r = field.div(b[i][j], a[i][j]);
      if (ratio && *ratio != r) return false;
      ratio = r;
    }
  }
  return true;
}

struct SuiteSpec {
  std::string id;
  std::string anchor;
  std::uint64_t default_count;
  bool parallel_cases;
  std::function<std::vector<Case>(std::uint64_t seed, std::uint64_t count)> cases;
  std::function<Json(std::uint64_t count)> describe;
};

std::vector<Case> closure_transfer_cases(std::uint64_t, std::uint64_t) {
  std::vector<Case> out;
  for (auto [n, q] : {std::pair{2, 2}, std::pair{1, 3}}) {
    out.push_back({"pg(" + std::to_string(n) + "," + std::to_string(q) + ")", [n, q]() -> Outcome {
      const Space space(field_of_order(q), n);
      const ClosureEngine engine(space);
      const std::size_t count = engine.points().size();
      for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
        std::vector<PointIndex> m;
        for (PointIndex i = 0; i < count; ++i) {
          if (mask >> i & 1u) m.push_back(i);
        }
        if (engine.closure_by_forms(m) != engine.closure(m)) {
          return "M = " + show(pick(engine.points(), mask));
        }
      }
      return std::nullopt;
    }});
  }
  return out;
}

const std::vector<std::pair<int, int>> kDimensionGrid = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2},
                                                         {2, 3}, {2, 4}, {3, 2}, {3, 3}};

std::vector<Case> target_dimension_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  for (auto [n, q] : kDimensionGrid) {
    for (std::uint64_t s = 0; s <= count; ++s) {
      const std::string key = "n=" + std::to_string(n) + ",q=" + std::to_string(q) +
                              (s == 0 ? ",rho" : ",kappa-" + pad(s - 1));
      out.push_back({key, [n, q, s, seed]() -> Outcome {
        const Space source(field_of_order(q), n);
        const Veronese veronese(source);
        PointMap nu = veronese_map(source);
        if (s > 0) {
          Rng rng(seed + s - 1);
          nu = veronese_kappa_map(
              source, random_semilinear(source.field_ptr(), veronese.target().vec_size(), rng));
        }
        const int dim = span_dim(nu.target(), nu.table());
        if (dim != delta(n) - 1) return "dim span(im nu) = " + std::to_string(dim);
        return std::nullopt;
      }});
    }
  }
  return out;
}

std::vector<Case> closed_chain_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  auto check = [](const Space& space, const std::vector<Point>& m) -> Outcome {
    const Veronese veronese(space);
    std::vector<Point> images;
    for (const auto& x : m) images.push_back(veronese.rho(x));
    const int expected = span_dim(veronese.target(), images);
    const int chain = longest_closed_chain(space, m);
    if (chain != expected) {
      return "M = " + show(m) + ": chain " + std::to_string(chain) + ", rank " +
             std::to_string(expected);
    }
    return std::nullopt;
  };
  out.push_back({"pg(2,2)-all", [check]() -> Outcome {
    const Space space(field_of_order(2), 2);
    const auto pts = space.points();
    for (std::uint32_t mask = 0; mask < (1u << pts.size()); ++mask) {
      if (auto w = check(space, pick(pts, mask))) return w;
    }
    return std::nullopt;
  }});
  for (std::uint64_t s = 0; s < count; ++s) {
    out.push_back({"pg(2,3)-" + pad(s), [check, seed, s]() -> Outcome {
      const Space space(field_of_order(3), 2);
      Rng rng(seed + s);
      const auto pts = space.points();
      return check(space, random_subset(pts, rng.below(7), rng));
    }});
  }
  return out;
}

std::vector<Case> hyperplane_dimension_cases(std::uint64_t, std::uint64_t) {
  std::vector<Case> out;
  const Space source(field_of_order(3), 2);
  const auto lines = hyperplanes(source);
  for (std::size_t t = 0; t < lines.size(); ++t) {
    out.push_back({"T-" + pad(t), [source, line = lines[t]]() -> Outcome {
      const PointMap nu = veronese_map(source);
      const auto t_points = line.points();
      std::vector<Point> affine;
      for (const auto& x : source.points()) {
        if (!line.contains(x)) affine.push_back(x);
      }
      const int offset = static_cast<int>(delta(source.n() - 1));
      Outcome witness;
      for_small_subsets(affine, 3, [&](const std::vector<Point>& m) {
        std::vector<Point> both = nu.image_of(t_points);
        for (const auto& y : nu.image_of(m)) both.push_back(y);
        const int lhs = span_dim(nu.target(), both);
        const int rhs = offset + span_dim(source, m);
        if (lhs != rhs) {
          witness = "T = " + show(t_points) + ", M = " + show(m) + ": " + std::to_string(lhs) +
                    " vs " + std::to_string(rhs);
          return false;
        }
        return true;
      });
      return witness;
    }});
  }
  return out;
}

std::vector<Case> affine_embedding_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  const Space source(field_of_order(3), 2);
  const auto lines = hyperplanes(source);
  for (std::size_t t = 0; t < lines.size(); ++t) {
    for (std::uint64_t e = 0; e < count; ++e) {
      const std::uint64_t case_seed = seed + t * count + e;
      out.push_back({"T-" + pad(t) + ",E-" + pad(e), [source, line = lines[t], case_seed]() -> Outcome {
        const PointMap nu = veronese_map(source);
        const Subspace t_span = Subspace::span(nu.target(), nu.image_of(line.points()));
        Rng rng(case_seed);
        const auto iota = build_iota(nu, line, random_complement(t_span, rng));
        std::vector<Point> affine;
        for (const auto& [a, image] : iota.table) affine.push_back(a);
        Outcome witness;
        for_small_subsets(affine, 4, [&](const std::vector<Point>& m) {
          const int lhs = span_dim(nu.target(), iota.image_of(m));
          const int rhs = span_dim(source, m);
          if (lhs != rhs) {
            witness = "M = " + show(m) + ": dim " + std::to_string(rhs) + " becomes " +
                      std::to_string(lhs);
            return false;
          }
          return true;
        });
        return witness;
      }});
    }
  }
  return out;
}

std::vector<Case> hyperplane_extension_cases(std::uint64_t, std::uint64_t) {
  std::vector<Case> out;
  for (auto [n, q] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    out.push_back({"pg(" + std::to_string(n) + "," + std::to_string(q) + ")", [n, q]() -> Outcome {
      const Space source(field_of_order(q), n);
      const PointMap nu = veronese_map(source);
      std::set<std::vector<Vec>> images;
      const auto ts = hyperplanes(source);
      for (const auto& t : ts) {
        const Subspace t_span = Subspace::span(nu.target(), nu.image_of(t.points()));
        const auto iota = build_iota(nu, t, standard_complement(t_span));
        const auto beta = extend_beta(nu, iota);
        if (beta.concurrency_lines == 0) return "no concurrency lines for T = " + show(t.points());
        const auto quotients = nu_t(nu, beta);
        std::set<std::vector<Vec>> distinct;
        for (const auto& qp : quotients) distinct.insert(qp.basis());
        if (distinct.size() != source.num_points()) {
          return "nu_T is not injective for T = " + show(t.points());
        }
        const Subspace h = hyperplane_image(nu, beta);
        if (h.dim() != nu.target().n() - 1) {
          return "H'_T is not a hyperplane for T = " + show(t.points());
        }
        if (nu.preimage(h) != t.points()) {
          auto pre = nu.preimage(h);
          return "preimage of H'_T is " + show(pre) + " for T = " + show(t.points());
        }
        images.insert(h.basis());
      }
      if (images.size() != ts.size()) return std::string("two hyperplanes share H'_T");
      return std::nullopt;
    }});
  }
  return out;
}

std::vector<Case> collinear_dichotomy_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  for (int q : {4, 9}) {
    for (int twisted = 0; twisted < 2; ++twisted) {
      for (std::uint64_t s = 0; s < count; ++s) {
        const std::string key = "q=" + std::to_string(q) +
                                (twisted ? ",frobenius-" : ",projective-") + pad(s);
        out.push_back({key, [q, twisted, seed, s]() -> Outcome {
          const FieldPtr field = field_of_order(q);
          const Space plane(field, 2);
          const Point p0(*field, Vec{1, 0, 0});
          Rng rng(seed + s);
          for (int attempt = 0; attempt < 1000; ++attempt) {
            const auto sigma = random_semilinear(field, 3, rng, FieldAutomorphism{twisted});
            std::vector<Point> locus;
            try {
              locus = pencil_meet_locus(sigma, p0);
            } catch (const Error& e) {
              if (e.code() == ErrorCode::kSigmaFixesP0 || e.code() == ErrorCode::kSigmaFixesLine) {
                continue;
              }
              throw;
            }
            const bool collinear = has_collinear_triple(*field, locus);
            if (collinear != static_cast<bool>(twisted)) {
              return "sigma = " + to_json(sigma).dump() + ", locus " + show(locus);
            }
            return std::nullopt;
          }
          return std::string("no admissible sigma drawn");
        }});
      }
    }
  }
  return out;
}

std::vector<Case> line_conic_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  for (int q : {3, 4}) {
    for (std::uint64_t s = 0; s < count; ++s) {
      out.push_back({"q=" + std::to_string(q) + "," + pad(s), [q, seed, s]() -> Outcome {
        const Space source(field_of_order(q), 2);
        Rng rng(seed + s);
        const auto kappa = random_semilinear(source.field_ptr(), delta(2), rng);
        const PointMap nu = veronese_kappa_map(source, kappa);
        for (const auto& line : all_lines(source)) {
          const auto images = nu.image_of(line.points());
          Subspace plane = Subspace::span(nu.target(), images);
          if (plane.dim() != 2 || !is_regular_conic(PlaneArc(std::move(plane), images))) {
            return "image of line " + show(line.points()) + " is not a regular conic";
          }
        }
        return std::nullopt;
      }});
    }
  }
  return out;
}

std::vector<Case> tangent_frame_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  for (auto [n, q] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 2}}) {
    for (std::uint64_t s = 0; s < count; ++s) {
      const std::string key = "n=" + std::to_string(n) + ",q=" + std::to_string(q) + "," + pad(s);
      out.push_back({key, [n, q, seed, s]() -> Outcome {
        const Space source(field_of_order(q), n);
        const Veronese veronese(source);
        Rng rng(seed + s);
        const auto kappa =
            random_semilinear(source.field_ptr(), veronese.target().vec_size(), rng);
        const PointMap nu = veronese_kappa_map(source, kappa);
        const FrameData frame = build_q_frame(nu, Frame::standard(source));
        // The tangent points are the images of the standard unit points.
        const auto expected = Frame::standard(veronese.target()).points();
        const auto got = frame.frame_points();
        for (std::size_t i = 0; i < got.size(); ++i) {
          if (!(kappa.apply(expected[i]) == got[i])) {
            return "frame point " + std::to_string(i) + " is " + show(got[i]);
          }
        }
        return std::nullopt;
      }});
    }
  }
  return out;
}

std::vector<Case> factorization_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  for (int q : {2, 3, 4, 5, 9}) {
    for (std::uint64_t s = 0; s < count; ++s) {
      out.push_back({"q=" + std::to_string(q) + "," + pad(s), [q, seed, s]() -> Outcome {
        const Space source(field_of_order(q), 2);
        Rng rng(seed + s);
        const auto kappa = random_semilinear(source.field_ptr(), delta(2), rng);
        const PointMap nu = veronese_kappa_map(source, kappa);
        const auto cert = reconstruct_kappa(nu);
        if (cert.points_checked != source.num_points()) return std::string("certificate incomplete");
        if (!(cert.kappa.alpha() == kappa.alpha())) {
          return "recovered exponent " + std::to_string(cert.kappa.alpha().exponent) +
                 ", expected " + std::to_string(kappa.alpha().exponent);
        }
        if (!proportional(source.field(), kappa.matrix(), cert.kappa.matrix())) {
          return "recovered " + to_json(cert.kappa).dump() + ", expected " + to_json(kappa).dump();
        }
        return std::nullopt;
      }});
    }
  }
  return out;
}

std::vector<Case> frame_injection_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  for (std::uint64_t s = 0; s < count; ++s) {
    out.push_back({pad(s), [seed, s]() -> Outcome {
      const PointMap nu =
          generate_embedding(EmbeddingKind::kFrameInjection, 2, field_of_order(2), seed + s);
      const auto report = is_quadratic_embedding(nu, {VerifyMode::kExhaustive, 0, 0});
      if (!report.is_embedding) return "violated at M = " + show(*report.violated_set);
      reconstruct_kappa(nu);
      return std::nullopt;
    }});
  }
  return out;
}

std::vector<Case> oval_scan_cases(std::uint64_t, std::uint64_t) {
  std::vector<Case> out;
  for (int q : {2, 3, 4, 5}) {
    out.push_back({"q=" + std::to_string(q), [q]() -> Outcome {
      const auto report = scan_ovals(q);
      if (!report.non_conic_ovals.empty()) {
        return "oval " + show(report.non_conic_ovals.front()) + " is not a conic";
      }
      const std::uint64_t expected =
          static_cast<std::uint64_t>(q) * q * q * q * q - static_cast<std::uint64_t>(q) * q;
      if (report.ovals != expected || report.conics != expected) {
        return "found " + std::to_string(report.ovals) + " ovals and " +
               std::to_string(report.conics) + " conics, expected " + std::to_string(expected);
      }
      return std::nullopt;
    }});
  }
  return out;
}

std::vector<Case> negative_control_cases(std::uint64_t seed, std::uint64_t count) {
  std::vector<Case> out;
  for (std::uint64_t s = 0; s < count; ++s) {
    out.push_back({pad(s), [seed, s]() -> Outcome {
      const PointMap nu =
          generate_embedding(EmbeddingKind::kBroken, 2, field_of_order(3), seed + s);
      const auto report = is_quadratic_embedding(nu, {VerifyMode::kReduced, 0, 0});
      if (report.is_embedding) return std::string("broken map accepted");
      if (!violates_closure_transfer(nu, *report.violated_set)) {
        return "reported set " + show(*report.violated_set) + " does not violate the identity";
      }
      return std::nullopt;
    }});
  }
  return out;
}

Json seeded(std::uint64_t count, Json extra) {
  extra["count"] = count;
  return extra;
}

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> specs = {
      {"closure-transfer",
       "clos(M) equals the preimage of span(rho(M)) for every subset M of PG(2,2) and PG(1,3)", 0,
       true, closure_transfer_cases,
       [](std::uint64_t) { return Json{{"spaces", {"PG(2,2)", "PG(1,3)"}}, {"subsets", "all"}}; }},
      {"target-dimension",
       "the image of a quadratic embedding of PG(n,q) spans a space of dimension C(n+2,2)-1", 20,
       true, target_dimension_cases,
       [](std::uint64_t c) {
         return seeded(c, {{"grid", kDimensionGrid}, {"maps", "rho and rho*kappa"}});
       }},
      {"closed-chains",
       "the longest chain of distinct closed sets below clos(M) has length dim span(rho(M))", 200,
       true, closed_chain_cases,
       [](std::uint64_t c) {
         return seeded(c, {{"exhaustive", "PG(2,2)"}, {"sampled", "PG(2,3)"}, {"max_size", 6}});
       }},
      {"hyperplane-dimension",
       "dim span(rho(T u M)) = C(n+1,2) + dim span(M) for hyperplanes T and M off T", 0, true,
       hyperplane_dimension_cases,
       [](std::uint64_t) { return Json{{"space", "PG(2,3)"}, {"max_size", 3}}; }},
      {"affine-embedding",
       "A -> span(nu(T u {A})) meet E' preserves the dimension of spans of affine point sets", 3,
       true, affine_embedding_cases,
       [](std::uint64_t c) {
         return Json{{"space", "PG(2,3)"}, {"complements_per_hyperplane", c}, {"max_size", 4}};
       }},
      {"hyperplane-extension",
       "each affine map extends uniquely to the hyperplane, overnu is injective and "
       "the preimage of H'_T is T",
       0, true, hyperplane_extension_cases,
       [](std::uint64_t) { return Json{{"spaces", {"PG(2,2)", "PG(2,3)", "PG(3,2)"}}}; }},
      {"collinear-dichotomy",
       "the pencil meet locus of sigma has three collinear points iff sigma is not projective",
       50, true, collinear_dichotomy_cases,
       [](std::uint64_t c) { return seeded(c, {{"fields", {4, 9}}, {"p0", {1, 0, 0}}}); }},
      {"line-conics", "every line of PG(2,q) is mapped onto a regular conic by rho*kappa", 20, true,
       line_conic_cases, [](std::uint64_t c) { return seeded(c, {{"fields", {3, 4}}, {"n", 2}}); }},
      {"tangent-frame",
       "the tangent intersection points together with nu(E) form a frame of the target", 20, true,
       tangent_frame_cases,
       [](std::uint64_t c) {
         return seeded(c, {{"grid", {{2, 2}, {2, 3}, {2, 4}, {3, 2}}}});
       }},
      {"factorization",
       "every regular quadratic embedding factors as nu = rho*kappa for a collineation kappa", 100,
       true, factorization_cases,
       [](std::uint64_t c) { return seeded(c, {{"fields", {2, 3, 4, 5, 9}}, {"n", 2}}); }},
      {"frame-injection",
       "every injection of PG(2,2) onto a frame of PG(5,2) is a quadratic embedding", 20, true,
       frame_injection_cases,
       [](std::uint64_t c) { return seeded(c, {{"mode", "exhaustive"}}); }},
      {"oval-scan", "every oval of PG(2,q) is a conic, q in {2,3,4,5}", 0, false, oval_scan_cases,
       [](std::uint64_t) { return Json{{"q", {2, 3, 4, 5}}}; }},
      {"negative-controls", "perturbed embeddings are rejected with a violating set", 20, true,
       negative_control_cases,
       [](std::uint64_t c) { return seeded(c, {{"n", 2}, {"q", 3}, {"mode", "reduced"}}); }},
  };
  return specs;
}

}  // namespace

Json result_body(const SuiteResult& result) {
  return Json{{"id", result.id},         {"anchor", result.anchor},
              {"params", result.params}, {"pass", result.pass},
              {"cases", result.cases},   {"witnesses", result.witnesses}};
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.id);
  return out;
}

SuiteResult run_suite(const std::string& id, const SuiteParams& params) {
  const auto& specs = registry();
  auto it = std::find_if(specs.begin(), specs.end(), [&](const auto& s) { return s.id == id; });
  if (it == specs.end()) throw Error(ErrorCode::kUnknownSuite, "no suite named '" + id + "'");
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t count = params.count.value_or(it->default_count);
  std::vector<Case> cases = it->cases(params.seed, count);
  std::sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.key < b.key; });
  std::vector<Outcome> outcomes(cases.size());
  auto run_one = [&](std::size_t i) {
    try {
      outcomes[i] = cases[i].run();
    } catch (const std::exception& e) {
      outcomes[i] = std::string(e.what());
    }
  };
  if (it->parallel_cases) {
    parallel_for(cases.size(), run_one);
  } else {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
  }

  SuiteResult result;
  result.id = it->id;
  result.anchor = it->anchor;
  result.params = it->describe(count);
  result.params["seed"] = params.seed;
  result.cases = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (outcomes[i]) result.witnesses.push_back(cases[i].key + ": " + *outcomes[i]);
  }
  result.pass = result.witnesses.empty();
  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::vector<SuiteResult> run_all_suites(const SuiteParams& params) {
  std::vector<SuiteResult> out;
  for (const auto& id : suite_ids()) out.push_back(run_suite(id, params));
  return out;
}

}  // namespace pgtool
