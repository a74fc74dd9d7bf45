#pragma once

// Finite heaps and groups given by explicit operation tables.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace k0::heap {

using Index = std::uint32_t;

/// A set with a total ternary operation, stored as an n^3 table indexed
/// by element position. Axioms are not assumed; see check_heap_axioms.
class FiniteHeapTable {
 public:
  FiniteHeapTable() = default;
  /// Throws InputError on duplicate labels, wrong table size or an entry
  /// outside the element range.
  FiniteHeapTable(std::vector<std::string> elements, std::vector<Index> bracket);

  static FiniteHeapTable from_function(std::vector<std::string> elements,
                                       const std::function<Index(Index, Index, Index)>& bracket);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(Index i) const { return elements_.at(i); }
  Index index_of(const std::string& label) const;

  Index operator()(Index x, Index y, Index z) const { return table_[(x * size() + y) * size() + z]; }
  void set(Index x, Index y, Index z, Index value) { table_.at((x * size() + y) * size() + z) = value; }

  friend bool operator==(const FiniteHeapTable&, const FiniteHeapTable&) = default;

 private:
  std::vector<std::string> elements_;
  std::vector<Index> table_;
};

/// A group given by multiplication and inverse tables. Group axioms are
/// checked on construction.
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::vector<std::string> elements, std::vector<Index> op, std::vector<Index> inverse,
                   Index identity);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(Index i) const { return elements_.at(i); }
  Index index_of(const std::string& label) const;

  Index multiply(Index x, Index y) const { return op_[x * size() + y]; }
  Index inverse(Index x) const { return inverse_[x]; }
  Index identity() const { return identity_; }
  bool is_commutative() const;

  friend bool operator==(const FiniteGroupTable&, const FiniteGroupTable&) = default;

 private:
  std::vector<std::string> elements_;
  std::vector<Index> op_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
};

FiniteGroupTable cyclic_group(std::size_t n);
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
/// Permutations of {1..k} with (p*q)(i) = p(q(i)); labels in one-line
/// notation such as "213".
FiniteGroupTable symmetric_group(std::size_t k);

struct AxiomViolation {
  enum class Law { LeftUnitality, RightUnitality, Associativity };
  Law law;
  /// (x, y) for [x,x,y]=y, (y, x) for [y,x,x]=y, (x,y,x',y',z') for associativity.
  std::vector<Index> arguments;
  /// The bracket triple whose value is wrong, and the two sides compared.
  std::array<Index, 3> triple;
  Index got;
  Index expected;

  std::string describe(const FiniteHeapTable& table) const;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  /// Set for the empty table; all laws hold vacuously.
  bool empty_heap = false;
  /// Lexicographically first violation of each law, in law order.
  std::vector<AxiomViolation> violations;

  bool pass() const { return violations.empty(); }
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Unitality over all pairs, associativity over all quintuples. The
/// quintuple sweep runs in parallel over the first argument.
AxiomReport check_heap_axioms(const FiniteHeapTable& table);

namespace serial {
AxiomReport check_heap_axioms(const FiniteHeapTable& table);
}  // namespace serial

/// [x,y,z] = x * y^-1 * z.
FiniteHeapTable heap_from_group(const FiniteGroupTable& group);

/// [x,y,z] == [z,y,x] for all triples. Throws InputError if `table` is not a heap.
bool check_abelian(const FiniteHeapTable& table);

/// Group on the heap's elements with x + y = [x,e,y], identity e and
/// inverse [e,x,e]. Throws InputError if `e` is out of range or the table
/// is not a heap.
FiniteGroupTable retract(const FiniteHeapTable& table, Index e);

/// f[x,y,z] == [fx,fy,fz] for all triples. Throws InputError if `f` is not a
/// total map into `target`.
bool check_heap_morphism(std::span<const Index> f, const FiniteHeapTable& source,
                         const FiniteHeapTable& target);

}  // namespace k0::heap
