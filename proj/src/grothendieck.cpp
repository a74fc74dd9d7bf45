#include "k0/grothendieck.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "k0/error.hpp"

namespace k0::grothendieck {

namespace {

std::size_t find_label(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("unknown label \"" + label + "\"");
  return static_cast<std::size_t>(it - labels.begin());
}

std::string describe(const CofiberSequence& s) { return s.sub + " >-> " + s.total + " -> " + s.quotient; }

std::string describe(const PushoutSquare& s) {
  return "[" + s.x + "," + s.y + "," + s.z + "] = " + s.w + " (" + to_string(s.kind) + ")";
}

std::vector<std::array<std::string, 4>> quadruples(const std::vector<PushoutSquare>& squares) {
  std::vector<std::array<std::string, 4>> out;
  out.reserve(squares.size());
  for (const auto& s : squares) out.push_back({s.x, s.y, s.z, s.w});
  return out;
}

HeapK0 build_heap(std::vector<std::string> generators, const std::vector<PushoutSquare>& squares) {
  HeapK0 out;
  out.presentation = abheap::HeapPresentation::create(std::move(generators), quadruples(squares));
  out.torsor = abheap::torsor_structure(*out.presentation);
  return out;
}

// Exactly one of the two settings; an empty square list counts as Waldhausen.
bool squares_are_stable(const std::vector<PushoutSquare>& squares) {
  std::size_t bicartesian = 0;
  for (const auto& s : squares) {
    if (s.kind == SquareKind::None) throw InputError("square without a cofibration leg: " + describe(s));
    if (s.kind == SquareKind::Bicartesian) ++bicartesian;
  }
  if (bicartesian != 0 && bicartesian != squares.size())
    throw InputError("bicartesian squares cannot be mixed with cofibration-leg squares");
  return bicartesian != 0;
}

// Row-convention generator matrix: row s has a one in column F(s).
IntegerMatrix generator_map_matrix(const std::vector<std::string>& source, const std::vector<std::string>& target,
                                   const std::map<std::string, std::string>& map) {
  for (const auto& [from, to] : map) {
    find_label(source, from);
    find_label(target, to);
  }
  IntegerMatrix m(source.size(), target.size());
  for (std::size_t s = 0; s < source.size(); ++s) {
    auto it = map.find(source[s]);
    if (it == map.end()) throw InputError("generator map is not total: no image for \"" + source[s] + "\"");
    m(s, find_label(target, it->second)) = 1;
  }
  return m;
}

IntegerMatrix coordinate_matrix(const linalg::FinitelyPresentedGroup& source,
                                const linalg::FinitelyPresentedGroup& target,
                                const std::function<IntVector(const IntVector&)>& apply) {
  IntegerMatrix m(target.coordinate_count(), source.coordinate_count());
  for (std::size_t j = 0; j < source.coordinate_count(); ++j) {
    IntVector image = target.coordinates(apply(source.generators()[j]));
    for (std::size_t i = 0; i < image.size(); ++i) m(i, j) = image[i];
  }
  return m;
}

}  // namespace

const char* to_string(SquareKind kind) {
  switch (kind) {
    case SquareKind::LeftLeg: return "left";
    case SquareKind::RightLeg: return "right";
    case SquareKind::BothLegs: return "both";
    case SquareKind::Bicartesian: return "bicartesian";
    case SquareKind::None: return "none";
  }
  return "none";
}

SquareKind parse_square_kind(const std::string& text) {
  if (text == "left") return SquareKind::LeftLeg;
  if (text == "right") return SquareKind::RightLeg;
  if (text == "both") return SquareKind::BothLegs;
  if (text == "bicartesian") return SquareKind::Bicartesian;
  throw InputError("invalid square annotation \"" + text + "\" (expected left, right, both or bicartesian)");
}

// ---------------------------------------------------------------------------

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<CofiberSequence> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& g : generators_)
    if (!seen.insert(g).second) throw InputError("duplicate generator \"" + g + "\"");
  for (const auto& r : relations_) relation_vector(r);
}

std::size_t GroupPresentation::index_of(const std::string& label) const { return find_label(generators_, label); }

IntVector GroupPresentation::relation_vector(const CofiberSequence& s) const {
  IntVector v = linalg::zero_vector(generators_.size());
  v[index_of(s.sub)] += 1;
  v[index_of(s.quotient)] += 1;
  v[index_of(s.total)] -= 1;
  return v;
}

linalg::Lattice GroupPresentation::lattice() const {
  std::vector<IntVector> rows;
  for (const auto& r : relations_) rows.push_back(relation_vector(r));
  return linalg::lattice_span(generators_.size(), rows);
}

ClassicalK0 classical_k0(std::vector<std::string> generators, std::vector<CofiberSequence> cofibers) {
  GroupPresentation p(std::move(generators), std::move(cofibers));
  linalg::FinitelyPresentedGroup g(p.lattice());
  return {std::move(p), std::move(g)};
}

HeapK0 heap_k0(std::vector<std::string> generators, const std::vector<PushoutSquare>& pushouts) {
  for (const auto& s : pushouts) {
    if (s.kind == SquareKind::None) throw InputError("square without a cofibration leg: " + describe(s));
    if (s.kind == SquareKind::Bicartesian)
      throw InputError("bicartesian square given to the Waldhausen construction: " + describe(s));
  }
  return build_heap(std::move(generators), pushouts);
}

HeapK0 heap_k0_stable(std::vector<std::string> generators, const std::vector<PushoutSquare>& squares) {
  for (const auto& s : squares)
    if (s.kind != SquareKind::Bicartesian) throw InputError("square is not annotated bicartesian: " + describe(s));
  return build_heap(std::move(generators), squares);
}

AbelianInvariants retract_at_zero(const abheap::PresentationPtr& presentation, const std::string& zero_label) {
  return abheap::retract_at(presentation, zero_label).group().invariants();
}

// ---------------------------------------------------------------------------

TheoremVerdict verify_theorem(const std::vector<std::string>& generators, const std::string& zero_label,
                              const std::vector<PushoutSquare>& pushouts,
                              const std::vector<CofiberSequence>& cofibers) {
  TheoremVerdict verdict;
  verdict.stable = squares_are_stable(pushouts);
  const std::size_t zero = find_label(generators, zero_label);
  const std::size_t n = generators.size();

  // A cofiber sequence X >-> Y -> Z is the pushout of 0 <- X >-> Y.
  std::vector<PushoutSquare> squares = pushouts;
  const SquareKind cofiber_kind = verdict.stable ? SquareKind::Bicartesian : SquareKind::RightLeg;
  for (const auto& c : cofibers) {
    PushoutSquare s{zero_label, c.sub, c.total, c.quotient, cofiber_kind};
    bool present = std::any_of(pushouts.begin(), pushouts.end(), [&](const PushoutSquare& p) {
      return p.x == s.x && p.y == s.y && p.z == s.z && p.w == s.w;
    });
    if (!present) {
      squares.push_back(s);
      ++verdict.registered_cofibers;
    }
  }
  verdict.heap_relations = squares.size();

  HeapK0 heap = verdict.stable ? heap_k0_stable(generators, squares) : heap_k0(generators, squares);
  ClassicalK0 classical = classical_k0(generators, cofibers);
  abheap::Retract retract(heap.presentation, zero);
  verdict.retract_invariants = retract.group().invariants();
  verdict.classical_invariants = classical.invariants();

  verdict.psi = IntegerMatrix(n - 1, n);
  for (std::size_t j = 0, row = 0; j < n; ++j) {
    if (j == zero) continue;
    verdict.psi(row, j) = 1;
    verdict.psi(row, zero) = -1;
    ++row;
  }

  const linalg::Lattice& classical_lattice = classical.group.relations();
  const auto& presentation = *heap.presentation;
  auto fail = [&](std::string check, std::string description, IntVector v) {
    if (!verdict.witness) verdict.witness = TheoremWitness{std::move(check), std::move(description), std::move(v)};
  };

  // (a) Every heap relation, read in the retract at zero and pushed through
  // psi, holds classically; and psi sends the zero class to zero.
  for (std::size_t i = 0; i < presentation.relations().size(); ++i) {
    IntVector image = abheap::to_chart(presentation.relation_vector(presentation.relations()[i]), zero) * verdict.psi;
    if (!linalg::lattice_contains(classical_lattice, image)) {
      fail("relation-preserved", "heap relation " + describe(squares[i]) + " does not hold classically", image);
      break;
    }
  }
  IntVector zero_class = linalg::unit_vector(n, zero);
  if (!linalg::lattice_contains(classical_lattice, zero_class))
    fail("zero-class", "class of " + zero_label + " is nonzero classically", zero_class);

  // (b) Same abstract group on both sides.
  if (verdict.retract_invariants != verdict.classical_invariants)
    fail("invariants",
         "retract is " + verdict.retract_invariants.to_string() + ", classical group is " +
             verdict.classical_invariants.to_string(),
         {});

  // (c) psi carries the retract relations (plus the zero class) onto the
  // classical relations, so the induced map is injective.
  linalg::Lattice carried = linalg::lattice_sum(linalg::lattice_image(retract.group().relations(), verdict.psi),
                                                linalg::lattice_span(n, {zero_class}));
  if (!linalg::lattice_equal(carried, classical_lattice)) {
    bool found = false;
    for (const auto& c : classical.presentation.relations()) {
      IntVector v = classical.presentation.relation_vector(c);
      if (!linalg::lattice_contains(carried, v)) {
        fail("lattice-equality", "cofiber relation " + describe(c) + " is not forced by the heap", v);
        found = true;
        break;
      }
    }
    if (!found) fail("lattice-equality", "relation lattices differ", {});
  }

  verdict.pass = !verdict.witness.has_value();
  return verdict;
}

// ---------------------------------------------------------------------------

InducedMorphism induced_map(const RelationData& source, const RelationData& target,
                            const std::map<std::string, std::string>& generator_map, MapMode mode) {
  InducedMorphism out;
  const IntegerMatrix rows = generator_map_matrix(source.generators, target.generators, generator_map);
  out.generator_matrix = rows.transposed();

  if (mode == MapMode::Group) {
    ClassicalK0 src = classical_k0(source.generators, source.cofibers);
    ClassicalK0 dst = classical_k0(target.generators, target.cofibers);
    for (const auto& c : src.presentation.relations()) {
      IntVector image = src.presentation.relation_vector(c) * rows;
      if (!linalg::lattice_contains(dst.group.relations(), image)) {
        out.witness = MorphismWitness{describe(c), std::move(image)};
        return out;
      }
    }
    out.matrix = coordinate_matrix(src.group, dst.group, [&](const IntVector& v) { return v * rows; });
    out.valid = true;
    return out;
  }

  squares_are_stable(source.pushouts);
  squares_are_stable(target.pushouts);
  HeapK0 src = build_heap(source.generators, source.pushouts);
  HeapK0 dst = build_heap(target.generators, target.pushouts);
  const auto& sp = *src.presentation;
  for (std::size_t i = 0; i < sp.relations().size(); ++i) {
    IntVector image = sp.relation_vector(sp.relations()[i]) * rows;
    if (!linalg::lattice_contains(dst.presentation->lattice(), image)) {
      out.witness = MorphismWitness{describe(source.pushouts[i]), std::move(image)};
      return out;
    }
  }
  // Generator-to-generator maps preserve coordinate sums, hence degree one
  // and degree zero, so the linear part acts on translations.
  if (sp.size() > 0) {
    out.basepoint_image = generator_map.at(sp.generators().front());
    out.matrix = coordinate_matrix(src.torsor.translations, dst.torsor.translations, [&](const IntVector& v) {
      return abheap::to_chart(abheap::from_chart(v, src.torsor.chart_column) * rows, dst.torsor.chart_column);
    });
  }
  out.valid = true;
  return out;
}

}  // namespace k0::grothendieck
