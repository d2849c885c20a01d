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

#ifndef PGTOOL_EMBEDDING_H_
#define PGTOOL_EMBEDDING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgtool/arcs.h"
#include "pgtool/projective.h"
#include "pgtool/quadrics.h"

namespace pgtool {

// A total map from the points of PG(n,q) to the points of PG(n',q'), stored
// as a table indexed by the source enumeration order. Construction rejects
// partial tables, non-injective tables (a witness pair is named in the error)
// and targets of a different characteristic.
class PointMap {
 public:
  PointMap(Space source, Space target, std::vector<Point> table);
  static PointMap from_pairs(Space source, Space target,
                             std::vector<std::pair<Point, Point>> pairs);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const std::vector<Point>& table() const { return table_; }
  const Point& image(PointIndex i) const { return table_[i]; }
  const Point& operator()(const Point& x) const {
    return table_[source_.index_of(x)];
  }
  std::vector<Point> image_of(std::span<const Point> m) const;
  // {X : nu(X) in s}
  std::vector<Point> preimage(const Subspace& s) const;

 private:
  Space source_;
  Space target_;
  std::vector<Point> table_;
};

enum class VerifyMode {
  kExhaustive,  // every subset; at most 15 source points
  kReduced,     // every subset of size <= n'+1
  kSampled,     // seeded random subsets
  kClosedSets,  // compares the two families of closed sets through generators
};

std::string to_string(VerifyMode mode);
VerifyMode parse_verify_mode(const std::string& text);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kReduced;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
};

struct EmbeddingReport {
  bool is_embedding = false;
  VerifyMode mode = VerifyMode::kReduced;
  // A set M with clos(M) != preimage(span(nu(M))), or, when only the span
  // condition fails, the whole point set. Present iff !is_embedding.
  std::optional<std::vector<Point>> violated_set;
  bool span_condition = false;
  std::uint64_t sets_checked = 0;
  // False only if the map is an embedding with |F| > 2, n >= 2, (|F|,n) !=
  // (3,2) whose source field is not a subfield of the target field.
  bool field_relation_ok = true;
};

inline constexpr std::size_t kExhaustiveMaxPoints = 15;
inline constexpr double kReducedMaxSubsets = 1e7;
inline constexpr double kClosedSetsMaxGenerators = 2e6;

// clos(M) == preimage(span(nu(M))) for every M, and span(im nu) = target.
EmbeddingReport is_quadratic_embedding(const PointMap& nu, const VerifyOptions& options);

// Does M violate clos(M) = preimage(span(nu(M)))?
bool violates_closure_transfer(const PointMap& nu, std::span<const Point> m);

// clos(M)^nu == span(M^nu) meet im(nu), and the preimage of span(M^nu) is
// closed.
bool check_closure_image(const PointMap& nu, std::span<const Point> m);

// The arc nu(line) has exactly one unisecant through nu(p) in its plane.
bool is_regular_at(const PointMap& nu, const Point& p, const Subspace& line);
bool is_regular(const PointMap& nu);

// iota : A -> span(nu(T) + nu(A)) meet E on the affine part P \ T.
struct AffineEmbedding {
  Subspace hyperplane;   // T, in the source
  Subspace complement;   // E, in the target
  Subspace hyperplane_span;  // span(nu(T))
  std::vector<std::pair<Point, Point>> table;  // sorted by source point

  const Point& operator()(const Point& a) const;
  std::vector<Point> image_of(std::span<const Point> m) const;
};

AffineEmbedding build_iota(const PointMap& nu, const Subspace& hyperplane,
                           const Subspace& complement);

// The collineation beta : PG(n,q) -> E extending iota.
struct HyperplaneExtension {
  Subspace hyperplane;
  Subspace complement;
  Subspace hyperplane_span;
  // Acts on coordinates relative to complement.basis().
  SemilinearMap coordinate_map;
  std::vector<Point> table;  // indexed by source point index
  // Number of lines whose images were intersected to place the points of T.
  std::uint64_t concurrency_lines = 0;

  const Point& operator()(PointIndex i) const { return table[i]; }
};

HyperplaneExtension extend_beta(const PointMap& nu, const AffineEmbedding& iota);

// X -> span(beta(X)) join span(nu(T)), indexed by source point.
std::vector<QuotientPoint> nu_t(const PointMap& nu, const HyperplaneExtension& beta);
// H'_T = span(nu(T) + beta(T)).
Subspace hyperplane_image(const PointMap& nu, const HyperplaneExtension& beta);

struct HyperplaneImage {
  Subspace hyperplane;
  Subspace image;
};
// T -> H'_T over every hyperplane, using standard_complement(span(nu(T))).
std::vector<HyperplaneImage> overnu(const PointMap& nu);

struct FrameData {
  std::vector<Point> source_frame;  // P_0..P_n, E
  std::vector<Point> q_points;      // Q'_ij in Veronese flat order
  Point e_prime;

  std::vector<Point> frame_points() const;
};

FrameData build_q_frame(const PointMap& nu, const Frame& source_frame);
FieldAutomorphism recover_automorphism(const PointMap& nu, const FrameData& frame);

struct KappaCertificate {
  SemilinearMap kappa;
  FrameData frame;
  std::uint64_t points_checked = 0;
};

// kappa with nu = rho kappa, verified at every source point.
KappaCertificate reconstruct_kappa(const PointMap& nu);

}  // namespace pgtool

#endif  // PGTOOL_EMBEDDING_H_
