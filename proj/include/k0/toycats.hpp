#pragma once

// Desk-scale categories whose pushouts are enumerated honestly.
//
//  * finset: finite sets, cofibrations = injections, weak equivalences =
//    bijections. Unpointed: there is no map from a nonempty set to the
//    empty set.
//  * pointed_finset: pointed finite sets, classes are reduced cardinalities,
//    cofibrations = basepoint-preserving injections.
//  * free_module_trunc: free Z-modules of rank <= bound, cofibrations =
//    split injections.
//
// Classes are the integers 0..bound, labelled by their decimal string.
// Squares whose pushout class exceeds the bound are dropped.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k0/grothendieck.hpp"

namespace k0::toycats {

enum class Kind { FinSet, PointedFinSet, FreeModuleTrunc };

const char* to_string(Kind kind);
/// "finset" | "pointed_finset" | "free_module_trunc"; throws InputError otherwise.
Kind parse_kind(const std::string& text);

struct CategoryData {
  Kind kind = Kind::FinSet;
  int size_bound = 0;
  std::vector<std::string> class_labels;
  std::vector<grothendieck::CofiberSequence> cofibers;
  std::vector<grothendieck::PushoutSquare> pushouts;
  /// Label of the zero class for pointed kinds.
  std::optional<std::string> zero;
};

/// Squares (x, y, z, x+z-y) with y <= z, x+z-y <= bound, and y = 0 or x >= 1.
CategoryData generate_finset(int bound);

/// Cofibers (x, y, y-x) for x <= y, and squares (x, y, z, x+z-y) with
/// y <= z and x+z-y <= bound. With `bicartesian` every square is annotated
/// bicartesian instead of by its cofibration legs. Throws InputError for
/// the finset kind.
CategoryData generate_pointed(Kind kind, int bound, bool bicartesian = false);

CategoryData generate(Kind kind, int bound, bool bicartesian = false);

/// Class of the pushout of x <- y >-> z.
using PushoutLaw = std::function<long(int x, int y, int z)>;

long standard_pushout_law(int x, int y, int z);

struct GluingFailure {
  int x, y, z;
  std::string realization;
  long expected;
  /// Class of the explicit pushout; -1 when it is not an object of the
  /// category (a module pushout with torsion).
  long got;
};

struct GluingReport {
  std::size_t spans = 0;
  std::size_t realizations = 0;
  std::optional<GluingFailure> failure;
  bool pass() const { return !failure.has_value(); }
};

/// For every span of classes within the bound, builds explicit objects and
/// maps in each class, computes their pushout element by element and checks
/// that its class is the one the law predicts. Spans run in parallel.
GluingReport gluing_check(Kind kind, int bound);
GluingReport gluing_check(Kind kind, int bound, const PushoutLaw& law);

namespace serial {
GluingReport gluing_check(Kind kind, int bound, const PushoutLaw& law);
}  // namespace serial

}  // namespace k0::toycats
