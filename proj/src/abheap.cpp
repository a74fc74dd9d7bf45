#include "k0/abheap.hpp"

#include <algorithm>
#include <set>

#include "k0/error.hpp"

namespace k0::abheap {

namespace {

void same_presentation(const HeapElement& a, const HeapElement& b) {
  if (a.presentation() != b.presentation()) throw InputError("heap elements belong to different presentations");
}

linalg::Lattice chart_lattice(const HeapPresentation& p, std::size_t column) {
  return linalg::hermite_normal_form(p.lattice().basis().without_column(column));
}

}  // namespace

PresentationPtr HeapPresentation::create(std::vector<std::string> generators,
                                         const std::vector<std::array<std::string, 4>>& relations) {
  std::shared_ptr<HeapPresentation> p(new HeapPresentation());
  std::set<std::string> seen;
  for (const auto& g : generators)
    if (!seen.insert(g).second) throw InputError("duplicate generator \"" + g + "\"");
  p->generators_ = std::move(generators);
  for (const auto& r : relations)
    p->relations_.push_back({p->index_of(r[0]), p->index_of(r[1]), p->index_of(r[2]), p->index_of(r[3])});

  std::vector<IntVector> rows;
  rows.reserve(p->relations_.size());
  for (const auto& r : p->relations_) rows.push_back(p->relation_vector(r));
  p->lattice_ = linalg::lattice_span(p->size(), rows);
  return p;
}

std::size_t HeapPresentation::index_of(const std::string& label) const {
  auto it = std::find(generators_.begin(), generators_.end(), label);
  if (it == generators_.end()) throw InputError("unknown label \"" + label + "\"");
  return static_cast<std::size_t>(it - generators_.begin());
}

IntVector HeapPresentation::relation_vector(const Relation& r) const {
  IntVector v = linalg::zero_vector(size());
  v.at(r.x) += 1;
  v.at(r.y) -= 1;
  v.at(r.z) += 1;
  v.at(r.w) -= 1;
  return v;
}

linalg::Lattice relation_lattice(const HeapPresentation& presentation) { return presentation.lattice(); }

// ---------------------------------------------------------------------------

HeapElement HeapElement::generator(PresentationPtr presentation, const std::string& label) {
  const std::size_t i = presentation->index_of(label);
  auto v = linalg::unit_vector(presentation->size(), i);
  return from_coords(std::move(presentation), v);
}

HeapElement HeapElement::from_coords(PresentationPtr presentation, std::span<const Integer> coords) {
  if (presentation->size() == 0) throw InputError("the empty heap has no elements");
  if (coords.size() != presentation->size())
    throw InputError("heap element has " + std::to_string(coords.size()) + " coordinates, expected " +
                     std::to_string(presentation->size()));
  if (linalg::coordinate_sum(coords) != 1) throw InputError("heap element coordinates must sum to 1");
  auto canonical = linalg::canonical_coset_rep(presentation->lattice(), coords);
  return HeapElement(std::move(presentation), std::move(canonical));
}

std::string HeapElement::to_string() const {
  std::string s;
  const auto& gens = presentation_->generators();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    const bool negative = coords_[i] < 0;
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    Integer mag = abs(coords_[i]);
    if (mag != 1) s += mag.get_str() + "*";
    s += gens[i];
  }
  return s.empty() ? "0" : s;
}

HeapElement heap_bracket(const HeapElement& u, const HeapElement& v, const HeapElement& w) {
  same_presentation(u, v);
  same_presentation(u, w);
  auto sum = linalg::add(linalg::subtract(u.coords(), v.coords()), w.coords());
  return HeapElement::from_coords(u.presentation(), sum);
}

bool heap_equal(const HeapElement& u, const HeapElement& v) {
  same_presentation(u, v);
  return u.coords() == v.coords();
}

// ---------------------------------------------------------------------------

IntVector to_chart(std::span<const Integer> v, std::size_t column) {
  IntVector out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != column) out.push_back(v[i]);
  return out;
}

IntVector from_chart(std::span<const Integer> v, std::size_t column) {
  IntVector out(v.begin(), v.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(column), -linalg::coordinate_sum(v));
  return out;
}

TorsorStructure torsor_structure(const HeapPresentation& presentation) {
  TorsorStructure t;
  if (presentation.size() == 0) {
    t.empty_heap = true;
    return t;
  }
  t.chart_column = 0;
  t.translations = linalg::FinitelyPresentedGroup(chart_lattice(presentation, 0));
  return t;
}

Retract::Retract(PresentationPtr presentation, std::size_t basepoint)
    : presentation_(std::move(presentation)),
      basepoint_(basepoint),
      zero_(HeapElement::generator(presentation_, presentation_->generators().at(basepoint))),
      group_(chart_lattice(*presentation_, basepoint)) {}

HeapElement Retract::add(const HeapElement& a, const HeapElement& b) const { return heap_bracket(a, zero_, b); }

HeapElement Retract::negate(const HeapElement& a) const { return heap_bracket(zero_, a, zero_); }

IntVector Retract::translation(const HeapElement& a) const {
  if (a.presentation() != presentation_) throw InputError("heap element belongs to a different presentation");
  return linalg::subtract(a.coords(), zero_.coords());
}

IntVector Retract::coordinates(const HeapElement& a) const {
  return group_.coordinates(to_chart(translation(a), basepoint_));
}

HeapElement Retract::element(std::span<const Integer> translation) const {
  return HeapElement::from_coords(presentation_, linalg::add(translation, zero_.coords()));
}

Retract retract_at(PresentationPtr presentation, const std::string& basepoint) {
  const std::size_t e = presentation->index_of(basepoint);
  return Retract(std::move(presentation), e);
}

}  // namespace k0::abheap
