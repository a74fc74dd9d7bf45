#include "k0/heap_core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "k0/error.hpp"

namespace k0::heap {

namespace {

void check_distinct(const std::vector<std::string>& elements) {
  std::set<std::string> seen;
  for (const auto& e : elements)
    if (!seen.insert(e).second) throw InputError("duplicate element label \"" + e + "\"");
}

Index find_label(const std::vector<std::string>& elements, const std::string& label) {
  auto it = std::find(elements.begin(), elements.end(), label);
  if (it == elements.end()) throw InputError("unknown element \"" + label + "\"");
  return static_cast<Index>(it - elements.begin());
}

void check_unitality(const FiniteHeapTable& h, AxiomReport& report) {
  const auto n = static_cast<Index>(h.size());
  auto left = [&]() -> std::optional<AxiomViolation> {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (h(x, x, y) != y) return AxiomViolation{AxiomViolation::Law::LeftUnitality, {x, y}, {x, x, y}, h(x, x, y), y};
    return std::nullopt;
  };
  auto right = [&]() -> std::optional<AxiomViolation> {
    for (Index y = 0; y < n; ++y)
      for (Index x = 0; x < n; ++x)
        if (h(y, x, x) != y) return AxiomViolation{AxiomViolation::Law::RightUnitality, {y, x}, {y, x, x}, h(y, x, x), y};
    return std::nullopt;
  };
  if (auto v = left()) report.violations.push_back(std::move(*v));
  if (auto v = right()) report.violations.push_back(std::move(*v));
}

// First associativity failure with the given leading argument, in
// lexicographic order of the remaining four.
std::optional<AxiomViolation> first_associativity_failure(const FiniteHeapTable& h, Index x) {
  const auto n = static_cast<Index>(h.size());
  for (Index y = 0; y < n; ++y)
    for (Index x2 = 0; x2 < n; ++x2) {
      const Index left_inner = h(x, y, x2);
      for (Index y2 = 0; y2 < n; ++y2)
        for (Index z2 = 0; z2 < n; ++z2) {
          const Index inner = h(x2, y2, z2);
          const Index lhs = h(x, y, inner);
          const Index rhs = h(left_inner, y2, z2);
          if (lhs != rhs)
            return AxiomViolation{AxiomViolation::Law::Associativity, {x, y, x2, y2, z2}, {x, y, inner}, lhs, rhs};
        }
    }
  return std::nullopt;
}

void require_heap(const FiniteHeapTable& table) {
  auto report = check_heap_axioms(table);
  if (!report.pass())
    throw InputError("table is not a heap: " + report.violations.front().describe(table));
}

}  // namespace

// ---------------------------------------------------------------------------

FiniteHeapTable::FiniteHeapTable(std::vector<std::string> elements, std::vector<Index> bracket)
    : elements_(std::move(elements)), table_(std::move(bracket)) {
  check_distinct(elements_);
  const std::size_t n = elements_.size();
  if (table_.size() != n * n * n)
    throw InputError("bracket table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(n * n * n));
  for (Index v : table_)
    if (v >= n) throw InputError("bracket value out of range");
}

FiniteHeapTable FiniteHeapTable::from_function(std::vector<std::string> elements,
                                               const std::function<Index(Index, Index, Index)>& bracket) {
  const auto n = static_cast<Index>(elements.size());
  std::vector<Index> table(static_cast<std::size_t>(n) * n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) table[(x * n + y) * n + z] = bracket(x, y, z);
  return FiniteHeapTable(std::move(elements), std::move(table));
}

Index FiniteHeapTable::index_of(const std::string& label) const { return find_label(elements_, label); }

FiniteGroupTable::FiniteGroupTable(std::vector<std::string> elements, std::vector<Index> op,
                                   std::vector<Index> inverses, Index identity)
    : elements_(std::move(elements)), op_(std::move(op)), inverse_(std::move(inverses)), identity_(identity) {
  check_distinct(elements_);
  const auto n = static_cast<Index>(elements_.size());
  if (n == 0) throw InputError("a group needs at least one element");
  if (op_.size() != static_cast<std::size_t>(n) * n || inverse_.size() != n)
    throw InputError("group table has the wrong size");
  if (identity_ >= n) throw InputError("identity out of range");
  for (Index v : op_)
    if (v >= n) throw InputError("group product out of range");
  for (Index v : inverse_)
    if (v >= n) throw InputError("group inverse out of range");
  for (Index x = 0; x < n; ++x) {
    if (multiply(identity_, x) != x || multiply(x, identity_) != x)
      throw InputError("identity law fails at " + elements_[x]);
    if (multiply(x, inverse(x)) != identity_ || multiply(inverse(x), x) != identity_)
      throw InputError("inverse law fails at " + elements_[x]);
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z)))
          throw InputError("associativity fails at (" + elements_[x] + "," + elements_[y] + "," +
                           elements_[z] + ")");
  }
}

Index FiniteGroupTable::index_of(const std::string& label) const { return find_label(elements_, label); }

bool FiniteGroupTable::is_commutative() const {
  const auto n = static_cast<Index>(size());
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (multiply(x, y) != multiply(y, x)) return false;
  return true;
}

FiniteGroupTable cyclic_group(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Index> op(n * n), inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    inv[i] = static_cast<Index>((n - i) % n);
    for (std::size_t j = 0; j < n; ++j) op[i * n + j] = static_cast<Index>((i + j) % n);
  }
  return FiniteGroupTable(std::move(labels), std::move(op), std::move(inv), 0);
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  auto pack = [nb](Index i, Index j) { return static_cast<Index>(i * nb + j); };
  std::vector<std::string> labels;
  std::vector<Index> op(n * n), inv(n);
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < nb; ++j) {
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      inv[pack(i, j)] = pack(a.inverse(i), b.inverse(j));
      for (Index k = 0; k < na; ++k)
        for (Index l = 0; l < nb; ++l)
          op[pack(i, j) * n + pack(k, l)] = pack(a.multiply(i, k), b.multiply(j, l));
    }
  return FiniteGroupTable(std::move(labels), std::move(op), std::move(inv), pack(a.identity(), b.identity()));
}

FiniteGroupTable symmetric_group(std::size_t k) {
  std::vector<std::vector<Index>> perms;
  std::vector<Index> p(k);
  std::iota(p.begin(), p.end(), Index{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  auto find = [&](const std::vector<Index>& q) {
    return static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::string> labels;
  std::vector<Index> op(n * n), inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string label;
    for (Index v : perms[a]) label += std::to_string(v + 1);
    labels.push_back(label);
    std::vector<Index> q(k);
    for (std::size_t i = 0; i < k; ++i) q[perms[a][i]] = static_cast<Index>(i);
    inv[a] = find(q);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) q[i] = perms[a][perms[b][i]];
      op[a * n + b] = find(q);
    }
  }
  return FiniteGroupTable(std::move(labels), std::move(op), std::move(inv), 0);
}

// ---------------------------------------------------------------------------

std::string AxiomViolation::describe(const FiniteHeapTable& table) const {
  auto tri = [&](Index a, Index b, Index c) {
    return "[" + table.label(a) + "," + table.label(b) + "," + table.label(c) + "]";
  };
  switch (law) {
    case Law::LeftUnitality:
    case Law::RightUnitality:
      return std::string(law == Law::LeftUnitality ? "left" : "right") + " unitality: " +
             tri(triple[0], triple[1], triple[2]) + " = " + table.label(got) + ", expected " +
             table.label(expected);
    case Law::Associativity: {
      const auto& a = arguments;
      return "associativity: [" + table.label(a[0]) + "," + table.label(a[1]) + "," +
             tri(a[2], a[3], a[4]) + "] = " + table.label(got) + " but [" + tri(a[0], a[1], a[2]) + "," +
             table.label(a[3]) + "," + table.label(a[4]) + "] = " + table.label(expected);
    }
  }
  return {};
}

AxiomReport check_heap_axioms(const FiniteHeapTable& table) {
  AxiomReport report;
  report.empty_heap = table.size() == 0;
  check_unitality(table, report);

  const auto n = static_cast<long>(table.size());
  // Each leading argument is scanned sequentially, so the smallest failing
  // one carries the lexicographically first counterexample.
  long first = std::numeric_limits<long>::max();
  std::optional<AxiomViolation> found;
#pragma omp parallel for schedule(dynamic, 1)
  for (long x = 0; x < n; ++x) {
    long seen;
#pragma omp atomic read
    seen = first;
    if (x > seen) continue;
    auto v = first_associativity_failure(table, static_cast<Index>(x));
    if (!v) continue;
#pragma omp critical(k0_heap_assoc)
    if (x < first) {
#pragma omp atomic write
      first = x;
      found = std::move(v);
    }
  }
  if (found) report.violations.push_back(std::move(*found));
  return report;
}

namespace serial {
AxiomReport check_heap_axioms(const FiniteHeapTable& table) {
  AxiomReport report;
  report.empty_heap = table.size() == 0;
  check_unitality(table, report);
  for (Index x = 0; x < table.size(); ++x)
    if (auto v = first_associativity_failure(table, x)) {
      report.violations.push_back(std::move(*v));
      break;
    }
  return report;
}
}  // namespace serial

FiniteHeapTable heap_from_group(const FiniteGroupTable& g) {
  return FiniteHeapTable::from_function(
      g.elements(), [&](Index x, Index y, Index z) { return g.multiply(g.multiply(x, g.inverse(y)), z); });
}

bool check_abelian(const FiniteHeapTable& table) {
  require_heap(table);
  const auto n = static_cast<Index>(table.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = x + 1; z < n; ++z)
        if (table(x, y, z) != table(z, y, x)) return false;
  return true;
}

FiniteGroupTable retract(const FiniteHeapTable& table, Index e) {
  if (e >= table.size()) throw InputError("retract basepoint out of range");
  require_heap(table);
  const std::size_t n = table.size();
  std::vector<Index> op(n * n), inv(n);
  for (Index x = 0; x < n; ++x) {
    inv[x] = table(e, x, e);
    for (Index y = 0; y < n; ++y) op[x * n + y] = table(x, e, y);
  }
  return FiniteGroupTable(table.elements(), std::move(op), std::move(inv), e);
}

bool check_heap_morphism(std::span<const Index> f, const FiniteHeapTable& source, const FiniteHeapTable& target) {
  if (f.size() != source.size())
    throw InputError("map is not total: " + std::to_string(f.size()) + " images for " +
                     std::to_string(source.size()) + " elements");
  for (Index v : f)
    if (v >= target.size()) throw InputError("map image out of range");
  const auto n = static_cast<Index>(source.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (f[source(x, y, z)] != target(f[x], f[y], f[z])) return false;
  return true;
}

}  // namespace k0::heap
