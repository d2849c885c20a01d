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

#include "pgtool/embedding.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "pgtool/generators.h"

namespace pgtool {
namespace {

std::string describe(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

// Shared state for checking clos(M) = preimage(span(nu(M))) on many sets M.
class TransferChecker {
 public:
  explicit TransferChecker(const PointMap& nu)
      : nu_(nu), engine_(nu.source()), rho_cols_(engine_.veronese().target().vec_size()) {}

  const ClosureEngine& engine() const { return engine_; }
  std::size_t num_points() const { return engine_.points().size(); }
  EchelonBasis rho_basis() const { return EchelonBasis(nu_.source().field(), rho_cols_); }
  EchelonBasis nu_basis() const {
    return EchelonBasis(nu_.target().field(), nu_.target().vec_size());
  }
  const Vec& rho(PointIndex i) const { return engine_.rho_vector(i); }
  const Vec& nu(PointIndex i) const { return nu_.image(i).coords(); }

  bool holds(const EchelonBasis& rho_span, const EchelonBasis& nu_span) const {
    if (rho_span.rank() == 0 && nu_span.rank() == 0) return true;
    for (PointIndex x = 0; x < num_points(); ++x) {
      const bool in_closure = rho_span.rank() > 0 && rho_span.contains(rho(x));
      const bool in_preimage = nu_span.rank() > 0 && nu_span.contains(nu(x));
      if (in_closure != in_preimage) return false;
    }
    return true;
  }

  bool holds(std::span<const PointIndex> m) const {
    auto rb = rho_basis();
    auto nb = nu_basis();
    for (PointIndex i : m) {
      rb.insert(rho(i));
      nb.insert(nu(i));
    }
    return holds(rb, nb);
  }

  std::vector<Point> points_of(std::span<const PointIndex> m) const {
    std::vector<Point> out;
    for (PointIndex i : m) out.push_back(engine_.points()[i]);
    return out;
  }

 private:
  const PointMap& nu_;
  ClosureEngine engine_;
  std::size_t rho_cols_;
};

double binomial(double n, double k) {
  if (k < 0 || k > n) return 0;
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

// Depth-first walk over subsets in lexicographic order, up to max_size
// elements. Returns the first violating subset, if any.
std::optional<std::vector<PointIndex>> subset_search(const TransferChecker& checker,
                                                     std::size_t max_size,
                                                     std::uint64_t& checked) {
  std::vector<PointIndex> current;
  std::optional<std::vector<PointIndex>> witness;
  const std::size_t count = checker.num_points();
  std::function<bool(PointIndex, const EchelonBasis&, const EchelonBasis&)> walk =
      [&](PointIndex from, const EchelonBasis& rb, const EchelonBasis& nb) -> bool {
    ++checked;
    if (!checker.holds(rb, nb)) {
      witness = current;
      return true;
    }
    if (current.size() == max_size) return false;
    for (PointIndex i = from; i < count; ++i) {
      EchelonBasis rb2 = rb;
      EchelonBasis nb2 = nb;
      rb2.insert(checker.rho(i));
      nb2.insert(checker.nu(i));
      current.push_back(i);
      if (walk(i + 1, rb2, nb2)) return true;
      current.pop_back();
    }
    return false;
  };
  walk(0, checker.rho_basis(), checker.nu_basis());
  return witness;
}

using Mask = std::vector<std::uint64_t>;

// Compares the closed sets generated by quadrics with the subspace preimages
// generated by hyperplanes. A generator whose point set already appears on the
// other side is settled by that match; the rest get the direct rank test.
std::optional<std::vector<PointIndex>> closed_set_search(const PointMap& nu,
                                                         const TransferChecker& checker,
                                                         std::uint64_t& checked) {
  const Field& sf = nu.source().field();
  const Field& tf = nu.target().field();
  const std::size_t count = checker.num_points();
  const std::size_t words = (count + 63) / 64;
  const Space forms(nu.source().field_ptr(), checker.engine().veronese().target().n());
  const Space& target = nu.target();

  auto collect = [&](const Space& generators, const Field& f, auto&& vector_of) {
    std::vector<Mask> out(generators.num_points(), Mask(words, 0));
    for (std::uint64_t g = 0; g < generators.num_points(); ++g) {
      const Point eq = generators.point(g);
      for (PointIndex x = 0; x < count; ++x) {
        if (dot(f, eq.coords(), vector_of(x)) == 0) out[g][x / 64] |= std::uint64_t{1} << (x % 64);
      }
    }
    return out;
  };
  const auto quadric_sets = collect(forms, sf, [&](PointIndex x) -> const Vec& { return checker.rho(x); });
  const auto hyperplane_sets = collect(target, tf, [&](PointIndex x) -> const Vec& { return checker.nu(x); });
  auto sorted = [](std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto quadric_sorted = sorted(quadric_sets);
  const auto hyperplane_sorted = sorted(hyperplane_sets);
  auto members_of = [&](const Mask& m) {
    std::vector<PointIndex> out;
    for (PointIndex x = 0; x < count; ++x) {
      if (m[x / 64] >> (x % 64) & 1u) out.push_back(x);
    }
    return out;
  };

  // Every quadric must be a preimage of a subspace.
  for (const auto& zero_mask : quadric_sets) {
    ++checked;
    if (std::binary_search(hyperplane_sorted.begin(), hyperplane_sorted.end(), zero_mask)) continue;
    const auto zeros = members_of(zero_mask);
    auto nb = checker.nu_basis();
    for (PointIndex x : zeros) nb.insert(checker.nu(x));
    std::vector<PointIndex> pre;
    for (PointIndex x = 0; x < count && nb.rank() > 0; ++x) {
      if (nb.contains(checker.nu(x))) pre.push_back(x);
    }
    if (pre != zeros) return zeros;
  }
  // Every hyperplane preimage must be closed.
  for (const auto& pre_mask : hyperplane_sets) {
    ++checked;
    if (std::binary_search(quadric_sorted.begin(), quadric_sorted.end(), pre_mask)) continue;
    const auto members = members_of(pre_mask);
    auto rb = checker.rho_basis();
    for (PointIndex x : members) rb.insert(checker.rho(x));
    if (checker.engine().members(rb) != members) return members;
  }
  return std::nullopt;
}

}  // namespace

PointMap::PointMap(Space source, Space target, std::vector<Point> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (source_.field().p() != target_.field().p()) {
    throw Error(ErrorCode::kForeignTarget, "source and target fields differ in characteristic");
  }
  if (table_.size() != source_.num_points()) {
    throw Error(ErrorCode::kNotTotal, "table has " + std::to_string(table_.size()) +
                                          " entries for " +
                                          std::to_string(source_.num_points()) + " points");
  }
  std::map<Point, PointIndex> seen;
  for (PointIndex i = 0; i < table_.size(); ++i) {
    target_.check(table_[i]);
    auto [it, fresh] = seen.emplace(table_[i], i);
    if (!fresh) {
      throw Error(ErrorCode::kNonInjective,
                  describe(source_.point(it->second)) + " and " + describe(source_.point(i)) +
                      " both map to " + describe(table_[i]));
    }
  }
}

PointMap PointMap::from_pairs(Space source, Space target,
                              std::vector<std::pair<Point, Point>> pairs) {
  std::vector<std::optional<Point>> slots(source.num_points());
  for (auto& [x, y] : pairs) {
    const auto i = source.index_of(x);
    if (slots[i]) throw Error(ErrorCode::kDuplicateSource, "duplicate source " + describe(x));
    slots[i] = std::move(y);
  }
  std::vector<Point> table;
  table.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw Error(ErrorCode::kNotTotal, "no image for " + describe(source.point(i)));
    table.push_back(std::move(*slots[i]));
  }
  return PointMap(std::move(source), std::move(target), std::move(table));
}

std::vector<Point> PointMap::image_of(std::span<const Point> m) const {
  std::vector<Point> out;
  out.reserve(m.size());
  for (const auto& x : m) out.push_back((*this)(x));
  return out;
}

std::vector<Point> PointMap::preimage(const Subspace& s) const {
  std::vector<Point> out;
  for (PointIndex i = 0; i < table_.size(); ++i) {
    if (s.contains(table_[i])) out.push_back(source_.point(i));
  }
  return out;
}

std::string to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kExhaustive: return "exhaustive";
    case VerifyMode::kReduced: return "reduced";
    case VerifyMode::kSampled: return "sampled";
    case VerifyMode::kClosedSets: return "closed-sets";
  }
  return "unknown";
}

VerifyMode parse_verify_mode(const std::string& text) {
  for (auto m : {VerifyMode::kExhaustive, VerifyMode::kReduced, VerifyMode::kSampled,
                 VerifyMode::kClosedSets}) {
    if (to_string(m) == text) return m;
  }
  throw Error(ErrorCode::kParamOutOfRange, "unknown verification mode '" + text + "'");
}

EmbeddingReport is_quadratic_embedding(const PointMap& nu, const VerifyOptions& options) {
  const TransferChecker checker(nu);
  const std::size_t count = checker.num_points();
  const std::size_t target_rank = nu.target().vec_size();
  EmbeddingReport report;
  report.mode = options.mode;

  std::optional<std::vector<PointIndex>> witness;
  switch (options.mode) {
    case VerifyMode::kExhaustive:
      if (count > kExhaustiveMaxPoints) {
        throw Error(ErrorCode::kModeInfeasible, "exhaustive mode needs at most 15 source points");
      }
      witness = subset_search(checker, count, report.sets_checked);
      break;
    case VerifyMode::kReduced:
      if (binomial(static_cast<double>(count), static_cast<double>(target_rank)) >
          kReducedMaxSubsets) {
        throw Error(ErrorCode::kModeInfeasible, "reduced mode would exceed 10^7 subsets");
      }
      witness = subset_search(checker, target_rank, report.sets_checked);
      break;
    case VerifyMode::kSampled: {
      Rng rng(options.seed);
      std::vector<PointIndex> all(count);
      for (PointIndex i = 0; i < count; ++i) all[i] = i;
      for (std::uint64_t t = 0; t < options.trials && !witness; ++t) {
        const std::size_t size = rng.below(count + 1);
        for (std::size_t i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(count - i)]);
        std::vector<PointIndex> m(all.begin(), all.begin() + size);
        std::sort(m.begin(), m.end());
        ++report.sets_checked;
        if (!checker.holds(m)) witness = m;
      }
      break;
    }
    case VerifyMode::kClosedSets: {
      const Space forms(nu.source().field_ptr(), static_cast<int>(delta(nu.source().n()) - 1));
      const double generators = static_cast<double>(forms.num_points()) +
                                static_cast<double>(nu.target().num_points());
      if (generators > kClosedSetsMaxGenerators) {
        throw Error(ErrorCode::kModeInfeasible, "closed-sets mode would exceed 2*10^6 generators");
      }
      witness = closed_set_search(nu, checker, report.sets_checked);
      break;
    }
  }

  Mat images;
  for (const auto& y : nu.table()) images.push_back(y.coords());
  report.span_condition = rank(nu.target().field(), images, target_rank) == target_rank;

  if (witness) {
    report.violated_set = checker.points_of(*witness);
  } else if (!report.span_condition) {
    report.violated_set = nu.source().points();
  }
  report.is_embedding = !report.violated_set.has_value();

  const Field& sf = nu.source().field();
  const bool theorem_applies =
      sf.q() > 2 && nu.source().n() >= 2 && !(sf.q() == 3 && nu.source().n() == 2);
  if (report.is_embedding && theorem_applies) {
    report.field_relation_ok = subfield_embedding(sf, nu.target().field()).has_value();
  }
  return report;
}

bool violates_closure_transfer(const PointMap& nu, std::span<const Point> m) {
  const TransferChecker checker(nu);
  std::vector<PointIndex> idx;
  for (const auto& x : m) idx.push_back(checker.engine().index_of(x));
  return !checker.holds(idx);
}

bool check_closure_image(const PointMap& nu, std::span<const Point> m) {
  const ClosureEngine engine(nu.source());
  std::vector<PointIndex> idx;
  for (const auto& x : m) idx.push_back(engine.index_of(x));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  std::set<Point> closure_image;
  for (PointIndex i : engine.closure(idx)) closure_image.insert(nu.image(i));

  const auto images = nu.image_of(m);
  const Subspace span = Subspace::span(nu.target(), images);
  std::set<Point> section;
  std::vector<PointIndex> pre;
  for (PointIndex i = 0; i < nu.table().size(); ++i) {
    if (span.contains(nu.image(i))) {
      section.insert(nu.image(i));
      pre.push_back(i);
    }
  }
  return closure_image == section && engine.closure(pre) == pre;
}

bool is_regular_at(const PointMap& nu, const Point& p, const Subspace& line) {
  if (line.dim() != 1 || !(line.space() == nu.source())) {
    throw Error(ErrorCode::kNotALine, "regularity needs a line of the source");
  }
  if (!line.contains(p)) throw Error(ErrorCode::kNotIncident, "point is not on the line");
  const auto images = nu.image_of(line.points());
  Subspace plane = Subspace::span(nu.target(), images);
  if (plane.dim() != 2) return false;
  if (!is_arc(plane, images)) return false;
  const PlaneArc arc(std::move(plane), images);
  return unisecants_at(arc, nu(p)).size() == 1;
}

bool is_regular(const PointMap& nu) {
  for (const auto& line : all_lines(nu.source())) {
    for (const auto& p : line.points()) {
      if (!is_regular_at(nu, p, line)) return false;
    }
  }
  return true;
}

const Point& AffineEmbedding::operator()(const Point& a) const {
  auto it = std::lower_bound(table.begin(), table.end(), a,
                             [](const auto& entry, const Point& x) { return entry.first < x; });
  if (it == table.end() || !(it->first == a)) {
    throw Error(ErrorCode::kPointInBase, "point lies on the hyperplane");
  }
  return it->second;
}

std::vector<Point> AffineEmbedding::image_of(std::span<const Point> m) const {
  std::vector<Point> out;
  for (const auto& a : m) out.push_back((*this)(a));
  return out;
}

AffineEmbedding build_iota(const PointMap& nu, const Subspace& hyperplane,
                           const Subspace& complement) {
  if (!(hyperplane.space() == nu.source()) || hyperplane.dim() != nu.source().n() - 1) {
    throw Error(ErrorCode::kDimensionMismatch, "T must be a hyperplane of the source");
  }
  if (!(complement.space() == nu.target())) {
    throw Error(ErrorCode::kSpaceMismatch, "E must live in the target");
  }
  const auto t_points = hyperplane.points();
  Subspace t_span = Subspace::span(nu.target(), nu.image_of(t_points));
  if (meet(t_span, complement).dim() != -1 ||
      join(t_span, complement).dim() != nu.target().n()) {
    throw Error(ErrorCode::kNotComplementary, "E is not a complement of span(nu(T))");
  }
  AffineEmbedding iota{hyperplane, complement, t_span, {}};
  for (const auto& a : nu.source().points()) {
    if (hyperplane.contains(a)) continue;
    const Point single[1] = {nu(a)};
    const Subspace extended = join(t_span, Subspace::span(nu.target(), single));
    const Subspace cut = meet(extended, complement);
    if (cut.dim() != 0) {
      throw Error(ErrorCode::kImageNotAPoint, "iota image of " + describe(a) + " is not a point");
    }
    iota.table.emplace_back(a, Point(nu.target().field(), cut.basis()[0]));
  }
  return iota;
}

HyperplaneExtension extend_beta(const PointMap& nu, const AffineEmbedding& iota) {
  const Space& source = nu.source();
  if (source.n() < 2) throw Error(ErrorCode::kParamOutOfRange, "extension needs n >= 2");
  if (!(source.field() == nu.target().field())) {
    throw Error(ErrorCode::kForeignTarget, "extension needs equal source and target fields");
  }
  const Field& field = source.field();
  const Subspace whole = Subspace::whole(source);
  std::vector<Point> table(source.num_points());
  std::uint64_t lines_used = 0;
  for (PointIndex i = 0; i < table.size(); ++i) {
    const Point x = source.point(i);
    if (!iota.hyperplane.contains(x)) {
      table[i] = iota(x);
      continue;
    }
    std::optional<Subspace> common;
    for (const auto& g : lines_through(x, whole)) {
      if (iota.hyperplane.contains(g)) continue;
      std::vector<Point> affine;
      for (const auto& y : g.points()) {
        if (!(y == x)) affine.push_back(iota(y));
      }
      const Subspace image_line = Subspace::span(nu.target(), affine);
      common = common ? meet(*common, image_line) : image_line;
      ++lines_used;
    }
    if (!common || common->dim() != 0) {
      throw Error(ErrorCode::kLinesNotConcurrent,
                  "image lines through the point " + describe(x) + " do not share one point");
    }
    table[i] = Point(field, common->basis()[0]);
  }

  // Fit a semilinear map in coordinates relative to the complement's basis.
  const Space coords_space(source.field_ptr(), source.n());
  std::vector<Point> coords;
  coords.reserve(table.size());
  for (const auto& y : table) coords.emplace_back(field, iota.complement.coordinates(y.coords()));
  const Frame std_frame = Frame::standard(source);
  std::vector<Point> frame_images;
  for (const auto& p : std_frame.points()) frame_images.push_back(coords[source.index_of(p)]);
  if (!is_frame(coords_space, frame_images)) {
    throw Error(ErrorCode::kNotACollineation, "beta does not map a frame to a frame");
  }
  const Frame image_frame(coords_space, frame_images);
  const Mat matrix = transpose(image_frame.scaled_basis());
  for (const auto alpha : automorphisms(field)) {
    const SemilinearMap candidate(source.field_ptr(), matrix, alpha);
    bool fits = true;
    for (PointIndex i = 0; i < table.size() && fits; ++i) {
      fits = candidate.apply(source.point(i)) == coords[i];
    }
    if (fits) {
      return HyperplaneExtension{iota.hyperplane, iota.complement, iota.hyperplane_span,
                                 candidate, std::move(table), lines_used};
    }
  }
  throw Error(ErrorCode::kNotACollineation, "beta is not induced by a semilinear map");
}

std::vector<QuotientPoint> nu_t(const PointMap& nu, const HyperplaneExtension& beta) {
  if (beta.table.size() != nu.source().num_points()) {
    throw Error(ErrorCode::kBetaUnavailable, "beta does not cover the source");
  }
  std::vector<QuotientPoint> out;
  out.reserve(beta.table.size());
  for (const auto& y : beta.table) out.push_back(quotient_point(beta.hyperplane_span, y));
  return out;
}

Subspace hyperplane_image(const PointMap& nu, const HyperplaneExtension& beta) {
  std::vector<Point> t_images;
  for (const auto& x : beta.hyperplane.points()) {
    t_images.push_back(beta(static_cast<PointIndex>(nu.source().index_of(x))));
  }
  return join(beta.hyperplane_span, Subspace::span(nu.target(), t_images));
}

std::vector<HyperplaneImage> overnu(const PointMap& nu) {
  std::vector<HyperplaneImage> out;
  for (const auto& t : hyperplanes(nu.source())) {
    const Subspace t_span = Subspace::span(nu.target(), nu.image_of(t.points()));
    const auto iota = build_iota(nu, t, standard_complement(t_span));
    const auto beta = extend_beta(nu, iota);
    out.push_back({t, hyperplane_image(nu, beta)});
  }
  return out;
}

std::vector<Point> FrameData::frame_points() const {
  std::vector<Point> out = q_points;
  out.push_back(e_prime);
  return out;
}

FrameData build_q_frame(const PointMap& nu, const Frame& source_frame) {
  const Space& source = nu.source();
  if (source.n() < 2) throw Error(ErrorCode::kFrameCheckFailed, "frame construction needs n >= 2");
  const auto& frame = source_frame.points();
  if (frame.size() != source.vec_size() + 1) {
    throw Error(ErrorCode::kNotAFrame, "source frame has the wrong size");
  }
  FrameData data;
  data.source_frame = frame;
  const int n = source.n();
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (i == j) {
        data.q_points.push_back(nu(frame[i]));
        continue;
      }
      const Point ends[2] = {frame[i], frame[j]};
      const auto images = nu.image_of(Subspace::span(source, ends).points());
      Subspace plane = Subspace::span(nu.target(), images);
      if (plane.dim() != 2) {
        throw Error(ErrorCode::kFrameCheckFailed, "a line image does not span a plane");
      }
      try {
        const PlaneArc arc(std::move(plane), images);
        data.q_points.push_back(tangent_meet(arc, nu(frame[i]), nu(frame[j])));
      } catch (const Error& e) {
        throw Error(ErrorCode::kFrameCheckFailed, e.what());
      }
    }
  }
  data.e_prime = nu(frame.back());
  if (!is_frame(nu.target(), data.frame_points())) {
    throw Error(ErrorCode::kFrameCheckFailed, "tangent points and E' are not a frame");
  }
  return data;
}

FieldAutomorphism recover_automorphism(const PointMap& nu, const FrameData& frame) {
  const Space& source = nu.source();
  const Field& field = source.field();
  if (!(field == nu.target().field())) {
    throw Error(ErrorCode::kForeignTarget, "automorphism recovery needs equal fields");
  }
  const Frame source_frame(source, frame.source_frame);
  const Frame target_frame(nu.target(), frame.frame_points());
  const Veronese veronese(source);
  const std::size_t i00 = veronese.flat_index(0, 0);
  const std::size_t i01 = veronese.flat_index(0, 1);
  const Vec& v0 = source_frame.scaled_basis()[0];
  const Vec& v1 = source_frame.scaled_basis()[1];
  // t -> t^alpha read off as y_01 / y_00 for X = v_0 + t v_1.
  std::vector<Elem> twisted(field.q());
  for (Elem t = 0; t < field.q(); ++t) {
    Vec x(source.vec_size());
    for (std::size_t c = 0; c < x.size(); ++c) x[c] = field.add(v0[c], field.mul(t, v1[c]));
    const Vec y = target_frame.coordinates(nu(Point(field, x)));
    if (y[i00] == 0) throw Error(ErrorCode::kNoAutomorphismMatch, "y_00 vanishes");
    twisted[t] = field.div(y[i01], y[i00]);
  }
  for (const auto alpha : automorphisms(field)) {
    bool match = true;
    for (Elem t = 0; t < field.q() && match; ++t) {
      match = twisted[t] == apply_automorphism(field, alpha, t);
    }
    if (match) return alpha;
  }
  throw Error(ErrorCode::kNoAutomorphismMatch, "t -> y01/y00 is not a field automorphism");
}

KappaCertificate reconstruct_kappa(const PointMap& nu) {
  const Space& source = nu.source();
  if (!(source.field() == nu.target().field())) {
    throw Error(ErrorCode::kForeignTarget, "reconstruction needs equal source and target fields");
  }
  if (source.n() < 2) throw Error(ErrorCode::kNotRegular, "reconstruction needs n >= 2");
  if (nu.target().n() != delta(source.n()) - 1) {
    throw Error(ErrorCode::kNotRegular, "target dimension is not C(n+2,2)-1");
  }
  FrameData frame;
  FieldAutomorphism alpha;
  try {
    frame = build_q_frame(nu, Frame::standard(source));
    alpha = recover_automorphism(nu, frame);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFrameCheckFailed || e.code() == ErrorCode::kNoAutomorphismMatch) {
      throw Error(ErrorCode::kNotRegular, e.what());
    }
    throw;
  }
  const Frame target_frame(nu.target(), frame.frame_points());
  SemilinearMap kappa(source.field_ptr(), transpose(target_frame.scaled_basis()), alpha);
  const Veronese veronese(source);
  std::uint64_t checked = 0;
  for (PointIndex i = 0; i < nu.table().size(); ++i) {
    const Point x = source.point(i);
    if (!(kappa.apply(veronese.rho(x)) == nu.image(i))) {
      throw Error(ErrorCode::kVerificationFailed,
                  "nu and rho kappa differ at " + describe(x));
    }
    ++checked;
  }
  return KappaCertificate{std::move(kappa), std::move(frame), checked};
}

}  // namespace pgtool
