#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mukai/fm.hpp"

namespace mukai {

// Sheaf invariants: rank, first Chern class in H^2 coordinates, ch2 scalar,
// and the degree in which the transform is concentrated, when known.
struct ChernCharacter {
  Rational rank;
  VecR c1;
  Rational ch2;
  std::optional<int> wit;
  std::string label;

  GradedClass as_graded() const { return GradedClass(rank, c1, ch2); }
  static ChernCharacter from_graded(const GradedClass& g, std::optional<int> wit = std::nullopt,
                                    std::string label = {}) {
    return ChernCharacter{g.deg0, g.deg2, g.deg4, wit, std::move(label)};
  }
};

// A named transform with its expected image:
//   expected = (-1)^wit * rr_transform(source).
struct Fixture {
  ChernCharacter source;
  ChernCharacter expected_transform;
  std::string provenance;
};

struct FixtureReport {
  std::string label;
  bool pass = false;
  GradedClass expected;
  GradedClass computed;
};

enum class CurveKind { Section, Fiber, FiberComponent };

// GRR oracle for curves on the surface: ch(i_* L) = i_*(ch L . td(TC)) with
// the ambient Todd restriction trivial on a curve. For a smooth rational
// curve C with C^2 = -2 this gives [C] + (d+1) w; for an elliptic fiber,
// mu + d w.
ChernCharacter grr_pushforward_curve(const K3Model& model, CurveKind kind, long bundle_degree,
                                     int component_index = 0);

// The catalog of explicitly known transforms: the section structure sheaf,
// a skyscraper, a rank-one degree-zero fiber sheaf, O_X(-1), and
// O_X(-C_i) for every fiber component in the model.
std::vector<Fixture> fixture_catalog(const K3Model& model, const FmAction& fm);

FixtureReport verify_fixture(const FmAction& fm, const Fixture& fx);

}  // namespace mukai
