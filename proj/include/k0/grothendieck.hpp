#pragma once

// Grothendieck groups and Grothendieck heaps from category relation data.
//
// Objects enter only through their weak-equivalence class labels. A cofiber
// sequence X >-> Y -> Z contributes e_X + e_Z - e_Y to the classical group;
// a pushout square of the span X <- Y -> Z with pushout W contributes the
// heap relation [X,Y,Z] = W.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k0/abheap.hpp"
#include "k0/intlinalg.hpp"

namespace k0::grothendieck {

using linalg::AbelianInvariants;
using linalg::IntegerMatrix;
using linalg::IntVector;

/// X >-> Y -> Z.
struct CofiberSequence {
  std::string sub;
  std::string total;
  std::string quotient;
  friend bool operator==(const CofiberSequence&, const CofiberSequence&) = default;
};

/// Which legs of the span X <- Y -> Z are cofibrations, or that the square
/// is bicartesian (stable setting). `None` marks a square with no
/// cofibration leg; it is never a valid relation source.
enum class SquareKind { LeftLeg, RightLeg, BothLegs, Bicartesian, None };

const char* to_string(SquareKind kind);
/// "left" | "right" | "both" | "bicartesian"; throws InputError otherwise.
SquareKind parse_square_kind(const std::string& text);

/// Pushout of the span x <- y -> z, with w the class of the pushout.
struct PushoutSquare {
  std::string x, y, z, w;
  SquareKind kind = SquareKind::None;
  friend bool operator==(const PushoutSquare&, const PushoutSquare&) = default;
};

class GroupPresentation {
 public:
  /// Throws InputError on duplicate generators or unknown labels.
  GroupPresentation(std::vector<std::string> generators, std::vector<CofiberSequence> relations);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<CofiberSequence>& relations() const { return relations_; }
  std::size_t index_of(const std::string& label) const;
  IntVector relation_vector(const CofiberSequence& s) const;
  linalg::Lattice lattice() const;

 private:
  std::vector<std::string> generators_;
  std::vector<CofiberSequence> relations_;
};

struct ClassicalK0 {
  GroupPresentation presentation;
  linalg::FinitelyPresentedGroup group;
  const AbelianInvariants& invariants() const { return group.invariants(); }
};

ClassicalK0 classical_k0(std::vector<std::string> generators, std::vector<CofiberSequence> cofibers);

struct HeapK0 {
  abheap::PresentationPtr presentation;
  abheap::TorsorStructure torsor;
};

/// Unpointed Waldhausen setting: every square needs a cofibration leg.
HeapK0 heap_k0(std::vector<std::string> generators, const std::vector<PushoutSquare>& pushouts);
/// Stable setting: every square must be annotated bicartesian.
HeapK0 heap_k0_stable(std::vector<std::string> generators, const std::vector<PushoutSquare>& squares);

/// Invariants of the retract at the zero class.
AbelianInvariants retract_at_zero(const abheap::PresentationPtr& presentation, const std::string& zero_label);

struct TheoremWitness {
  /// "relation-preserved", "zero-class", "invariants" or "lattice-equality".
  std::string check;
  std::string description;
  IntVector vector;
};

struct TheoremVerdict {
  bool pass = false;
  bool stable = false;
  std::size_t heap_relations = 0;
  /// Cofiber sequences added as pushout squares (0, X, Y, Z).
  std::size_t registered_cofibers = 0;
  AbelianInvariants retract_invariants;
  AbelianInvariants classical_invariants;
  /// Map from the retract's chart Z^(G-1) (basepoint dropped) to Z^G:
  /// the class of X goes to the class of X.
  IntegerMatrix psi;
  std::optional<TheoremWitness> witness;
};

/// Certifies that the retract of the Grothendieck heap at the zero class is
/// isomorphic to the classical Grothendieck group via X -> X. The setting
/// (Waldhausen or stable) follows from the square annotations, which must
/// not be mixed.
TheoremVerdict verify_theorem(const std::vector<std::string>& generators, const std::string& zero_label,
                              const std::vector<PushoutSquare>& pushouts,
                              const std::vector<CofiberSequence>& cofibers);

enum class MapMode { Group, Heap };

struct MorphismWitness {
  std::string relation;
  IntVector image;
};

struct InducedMorphism {
  bool valid = false;
  /// Generator-level matrix, column s holds the image of source generator s.
  IntegerMatrix generator_matrix;
  /// Matrix on Smith coordinates (target coordinates x source coordinates);
  /// torsion rows are reduced modulo their factor. In heap mode these are
  /// the translation groups of the torsors.
  IntegerMatrix matrix;
  /// Heap mode: image of source generator 0.
  std::optional<std::string> basepoint_image;
  std::optional<MorphismWitness> witness;
};

/// Relation data for one side of a functor.
struct RelationData {
  std::vector<std::string> generators;
  std::vector<CofiberSequence> cofibers;
  std::vector<PushoutSquare> pushouts;
};

/// Checks that every source relation lands in the target relation lattice
/// and, if so, the induced matrix. Throws InputError when the generator map
/// is not total or names unknown labels.
InducedMorphism induced_map(const RelationData& source, const RelationData& target,
                            const std::map<std::string, std::string>& generator_map, MapMode mode);

}  // namespace k0::grothendieck
