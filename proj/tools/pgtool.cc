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

// Command-line front end. Exit status: 0 when every checked property holds,
// 1 when one is violated (a witness is printed), 2 for input or usage errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pgtool/arcs.h"
#include "pgtool/embedding.h"
#include "pgtool/generators.h"
#include "pgtool/harness.h"
#include "pgtool/io.h"
#include "pgtool/quadrics.h"
#include "pgtool/veronese.h"

namespace {

using pgtool::ErrorCode;
using pgtool::Json;

constexpr int kPass = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

bool is_property_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonInjective:
    case ErrorCode::kImageNotAPoint:
    case ErrorCode::kLinesNotConcurrent:
    case ErrorCode::kNotACollineation:
    case ErrorCode::kFrameCheckFailed:
    case ErrorCode::kNoAutomorphismMatch:
    case ErrorCode::kVerificationFailed:
    case ErrorCode::kNotRegular:
      return true;
    default:
      return false;
  }
}

void print(const Json& j) { std::cout << j.dump() << "\n"; }

pgtool::Space make_space(int q, int n) {
  if (n < 0) throw pgtool::Error(ErrorCode::kParamOutOfRange, "n must be >= 0");
  if (q < 2) throw pgtool::Error(ErrorCode::kParamOutOfRange, "q must be a prime power");
  return pgtool::Space(pgtool::field_of_order(static_cast<std::uint64_t>(q)), n);
}

Json parse_inline(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw pgtool::Error(ErrorCode::kParseError, e.what());
  }
}

std::vector<pgtool::Point> parse_points(const pgtool::Space& space, const std::string& text) {
  const Json j = parse_inline(text);
  if (!j.is_array()) throw pgtool::Error(ErrorCode::kParseError, "expected a list of points");
  std::vector<pgtool::Point> out;
  for (const auto& p : j) out.push_back(pgtool::point_from_json(space, p));
  return out;
}

Json points_json(const std::vector<pgtool::Point>& pts) {
  Json j = Json::array();
  for (const auto& p : pts) j.push_back(pgtool::to_json(p));
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic embeddings of finite projective spaces"};
  app.require_subcommand(1);

  int p = 2, k = 1, q = 2, n = 2;
  std::string op, point_text, points_text, map_path, out_path, mode_text = "reduced";
  std::string kind_text = "veronese", suite_id;
  std::uint64_t a = 0, b = 0, seed = 0, trials = 1000, count = 0;
  bool preimage = false, all_suites = false;

  auto* field_cmd = app.add_subcommand("field", "Describe GF(p^k) or evaluate an operation");
  field_cmd->add_option("--p", p, "characteristic")->required();
  field_cmd->add_option("--k", k, "extension degree")->default_val(1);
  field_cmd->add_option("--op", op, "add, mul, inv, pow or frobenius")
      ->check(CLI::IsMember({"add", "mul", "inv", "pow", "frobenius"}));
  field_cmd->add_option("--a", a, "first operand (element code)");
  field_cmd->add_option("--b", b, "second operand (code, exponent, or Frobenius power)");

  auto* enum_cmd = app.add_subcommand("enum", "List the points of PG(n,q)");
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_option("--q", q)->required();

  auto* ver_cmd = app.add_subcommand("veronese", "Apply the Veronese map or invert it");
  ver_cmd->add_option("--n", n, "source dimension")->required();
  ver_cmd->add_option("--q", q)->required();
  ver_cmd->add_option("--point", point_text, "point as a JSON code list")->required();
  ver_cmd->add_flag("--preimage", preimage, "treat the point as a target point and invert");

  auto* clos_cmd = app.add_subcommand("closure", "Quadratic closure of a point set");
  clos_cmd->add_option("--n", n)->required();
  clos_cmd->add_option("--q", q)->required();
  clos_cmd->add_option("--points", points_text, "JSON list of points")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a map file");
  gen_cmd->add_option("--kind", kind_text)
      ->check(CLI::IsMember({"veronese", "veronese_kappa", "frame_injection", "broken"}));
  gen_cmd->add_option("--n", n)->default_val(2);
  gen_cmd->add_option("--q", q)->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* verify_cmd = app.add_subcommand("verify", "Check the closure-transfer identity");
  verify_cmd->add_option("--map", map_path)->required();
  verify_cmd->add_option("--mode", mode_text)
      ->check(CLI::IsMember({"exhaustive", "reduced", "sampled", "closed-sets"}));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", trials);

  auto* regular_cmd = app.add_subcommand("regular", "Check regularity at every incident pair");
  regular_cmd->add_option("--map", map_path)->required();

  auto* rec_cmd = app.add_subcommand("reconstruct", "Recover kappa with nu = rho kappa");
  rec_cmd->add_option("--map", map_path)->required();
  rec_cmd->add_option("--out", out_path, "kappa file (stdout when omitted)");

  auto* segre_cmd = app.add_subcommand("segre", "Scan all ovals of PG(2,q)");
  segre_cmd->add_option("--q", q)->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run verification suites");
  auto* id_opt = suite_cmd->add_option("--id", suite_id)->check(CLI::IsMember(pgtool::suite_ids()));
  auto* all_opt = suite_cmd->add_flag("--all", all_suites);
  id_opt->excludes(all_opt);
  suite_cmd->add_option("--seed", seed, "base seed");
  suite_cmd->add_option("--count", count, "number of seeded cases (default per suite)");
  suite_cmd->add_flag("--list", "list suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*field_cmd) {
      const auto field = pgtool::create_field(p, k);
      if (op.empty()) {
        print(pgtool::to_json(*field));
        return kPass;
      }
      if (a >= field->q() || ((op == "add" || op == "mul") && b >= field->q())) {
        throw pgtool::Error(ErrorCode::kParamOutOfRange, "operand outside the field");
      }
      const auto x = static_cast<pgtool::Elem>(a);
      pgtool::Elem r = 0;
      if (op == "add") r = field->add(x, static_cast<pgtool::Elem>(b));
      if (op == "mul") r = field->mul(x, static_cast<pgtool::Elem>(b));
      if (op == "inv") r = field->inv(x);
      if (op == "pow") r = field->pow(x, b);
      if (op == "frobenius") r = field->frobenius(x, static_cast<int>(b % field->k()));
      print(Json{{"result", r}});
      return kPass;
    }
    if (*enum_cmd) {
      const auto space = make_space(q, n);
      print(points_json(space.points()));
      return kPass;
    }
    if (*ver_cmd) {
      const pgtool::Veronese veronese(make_space(q, n));
      const Json j = parse_inline(point_text);
      if (preimage) {
        const auto x = veronese.preimage(pgtool::point_from_json(veronese.target(), j));
        print(x ? pgtool::to_json(*x) : Json("not-in-image"));
      } else {
        print(pgtool::to_json(veronese.rho(pgtool::point_from_json(veronese.source(), j))));
      }
      return kPass;
    }
    if (*clos_cmd) {
      const auto space = make_space(q, n);
      const auto closed = pgtool::quadratic_closure(space, parse_points(space, points_text));
      Json forms = Json::array();
      for (const auto& f : closed.forms) forms.push_back(f);
      print(Json{{"points", points_json(closed.points)}, {"forms", forms}});
      return kPass;
    }
    if (*gen_cmd) {
      const auto map = pgtool::generate_embedding(pgtool::parse_embedding_kind(kind_text), n,
                                                  pgtool::field_of_order(q), seed);
      if (out_path.empty()) {
        print(pgtool::to_json(map));
      } else {
        pgtool::write_json_file(out_path, pgtool::to_json(map));
      }
      return kPass;
    }
    if (*verify_cmd) {
      const auto map = pgtool::point_map_from_json(pgtool::read_json_file(map_path));
      const auto report = pgtool::is_quadratic_embedding(
          map, {pgtool::parse_verify_mode(mode_text), seed, trials});
      print(pgtool::to_json(report));
      return report.is_embedding ? kPass : kViolated;
    }
    if (*regular_cmd) {
      const auto map = pgtool::point_map_from_json(pgtool::read_json_file(map_path));
      for (const auto& line : pgtool::all_lines(map.source())) {
        for (const auto& x : line.points()) {
          if (!pgtool::is_regular_at(map, x, line)) {
            print(Json{{"regular", false},
                       {"point", pgtool::to_json(x)},
                       {"line", pgtool::to_json(line)}});
            return kViolated;
          }
        }
      }
      print(Json{{"regular", true}});
      return kPass;
    }
    if (*rec_cmd) {
      const auto map = pgtool::point_map_from_json(pgtool::read_json_file(map_path));
      const auto cert = pgtool::reconstruct_kappa(map);
      const Json kappa = pgtool::to_json(cert.kappa);
      if (out_path.empty()) {
        print(kappa);
      } else {
        pgtool::write_json_file(out_path, kappa);
        print(Json{{"points_checked", cert.points_checked}, {"alpha_exponent", cert.kappa.alpha().exponent}});
      }
      return kPass;
    }
    if (*segre_cmd) {
      const auto report = pgtool::scan_ovals(q);
      print(pgtool::to_json(report));
      return report.non_conic_ovals.empty() ? kPass : kViolated;
    }
    if (*suite_cmd) {
      if (suite_cmd->count("--list")) {
        for (const auto& id : pgtool::suite_ids()) std::cout << id << "\n";
        return kPass;
      }
      if (!all_suites && suite_id.empty()) {
        std::cerr << "suite: pass --id ID or --all\n";
        return kUsage;
      }
      pgtool::SuiteParams params;
      params.seed = seed;
      if (count > 0) params.count = count;
      const auto ids = all_suites ? pgtool::suite_ids() : std::vector<std::string>{suite_id};
      bool ok = true;
      for (const auto& id : ids) {
        const auto result = pgtool::run_suite(id, params);
        ok = ok && result.pass;
        print(Json{{"result", pgtool::result_body(result)}, {"wall_ms", result.wall_ms}});
      }
      return ok ? kPass : kViolated;
    }
  } catch (const pgtool::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_property_failure(e.code()) ? kViolated : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
