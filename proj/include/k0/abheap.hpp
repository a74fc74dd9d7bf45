#pragma once

// Finitely presented abelian heaps.
//
// The free abelian heap on generators G is modelled as the affine sublattice
// { v in Z^G : sum(v) = 1 } with bracket [u,v,w] = u - v + w; generator g is
// the unit vector e_g. A relation [x,y,z] = w contributes the degree-zero
// vector e_x - e_y + e_z - e_w, and a presented heap is the affine sublattice
// modulo the span of its relation vectors. Elements are stored as canonical
// coset representatives, so equality is coordinate equality.

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "k0/intlinalg.hpp"

namespace k0::abheap {

using linalg::Integer;
using linalg::IntVector;

class HeapPresentation {
 public:
  /// Indices into generators(): [x,y,z] = w.
  struct Relation {
    std::size_t x, y, z, w;
    friend bool operator==(const Relation&, const Relation&) = default;
  };

  /// Throws InputError on duplicate generators or unknown relation labels.
  static std::shared_ptr<const HeapPresentation> create(std::vector<std::string> generators,
                                                        const std::vector<std::array<std::string, 4>>& relations);

  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t index_of(const std::string& label) const;

  IntVector relation_vector(const Relation& r) const;
  const linalg::Lattice& lattice() const { return lattice_; }

 private:
  HeapPresentation() = default;

  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
  linalg::Lattice lattice_;
};

using PresentationPtr = std::shared_ptr<const HeapPresentation>;

/// Span of all relation vectors, in Hermite normal form.
linalg::Lattice relation_lattice(const HeapPresentation& presentation);

class HeapElement {
 public:
  /// The class of a generator. Throws InputError for unknown labels.
  static HeapElement generator(PresentationPtr presentation, const std::string& label);
  /// Any integer vector with coordinate sum 1; reduced to its canonical
  /// representative. Throws InputError otherwise.
  static HeapElement from_coords(PresentationPtr presentation, std::span<const Integer> coords);

  const PresentationPtr& presentation() const { return presentation_; }
  const IntVector& coords() const { return coords_; }
  std::string to_string() const;

 private:
  HeapElement(PresentationPtr presentation, IntVector canonical)
      : presentation_(std::move(presentation)), coords_(std::move(canonical)) {}

  PresentationPtr presentation_;
  IntVector coords_;
};

/// Canonical representative of u - v + w. Throws InputError when the
/// elements come from different presentations.
HeapElement heap_bracket(const HeapElement& u, const HeapElement& v, const HeapElement& w);
bool heap_equal(const HeapElement& u, const HeapElement& v);

inline bool operator==(const HeapElement& u, const HeapElement& v) { return heap_equal(u, v); }

/// Group of translations of the heap: the degree-zero sublattice of Z^G
/// modulo the relations, written in the chart that drops coordinate
/// `chart_column` (generator 0 unless stated otherwise).
struct TorsorStructure {
  bool empty_heap = false;
  std::size_t chart_column = 0;
  linalg::FinitelyPresentedGroup translations;

  std::size_t free_rank() const { return translations.invariants().free_rank; }
  const std::vector<Integer>& invariant_factors() const { return translations.invariants().torsion; }
  const linalg::AbelianInvariants& invariants() const { return translations.invariants(); }
};

TorsorStructure torsor_structure(const HeapPresentation& presentation);

/// Degree-zero vector in Z^G -> coordinates in Z^(G-1) with `column` removed.
IntVector to_chart(std::span<const Integer> v, std::size_t column);
/// Inverse of to_chart: reinserts the removed coordinate as minus the sum.
IntVector from_chart(std::span<const Integer> v, std::size_t column);

/// The retract of a presented heap along a generator e: the group on heap
/// elements with x + y = [x,e,y], identity e and -x = [e,x,e].
class Retract {
 public:
  Retract(PresentationPtr presentation, std::size_t basepoint);

  const PresentationPtr& presentation() const { return presentation_; }
  std::size_t basepoint_index() const { return basepoint_; }
  const HeapElement& basepoint() const { return zero_; }
  /// Z^(G-1) modulo the relations, in the chart that drops the basepoint.
  const linalg::FinitelyPresentedGroup& group() const { return group_; }

  HeapElement add(const HeapElement& a, const HeapElement& b) const;
  HeapElement negate(const HeapElement& a) const;
  HeapElement subtract(const HeapElement& a, const HeapElement& b) const { return add(a, negate(b)); }

  /// v -> v - e_basepoint, a degree-zero vector in Z^G.
  IntVector translation(const HeapElement& a) const;
  /// Smith coordinates of the translation in group().
  IntVector coordinates(const HeapElement& a) const;
  /// Inverse of translation for a degree-zero vector.
  HeapElement element(std::span<const Integer> translation) const;

 private:
  PresentationPtr presentation_;
  std::size_t basepoint_;
  HeapElement zero_;
  linalg::FinitelyPresentedGroup group_;
};

/// Throws InputError for an unknown basepoint label.
Retract retract_at(PresentationPtr presentation, const std::string& basepoint);

}  // namespace k0::abheap
