#include <gtest/gtest.h>

#include <array>
#include <map>

#include "k0/error.hpp"
#include "k0/heap_core.hpp"

using namespace k0::heap;
using k0::InputError;

namespace {

// Permutation product on one-line strings, (p*q)(i) = p(q(i)).
std::string compose(const std::string& p, const std::string& q) {
  std::string out(q.size(), '?');
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i] - '1'];
  return out;
}

std::string invert(const std::string& p) {
  std::string out(p.size(), '?');
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - '1'] = static_cast<char>('1' + i);
  return out;
}

FiniteGroupTable group_from(std::vector<std::string> labels, const std::function<Index(Index, Index)>& mul) {
  const auto n = static_cast<Index>(labels.size());
  std::vector<Index> op(n * n), inv(n);
  Index e = n;
  for (Index x = 0; x < n; ++x) {
    bool unit = true;
    for (Index y = 0; y < n; ++y) unit = unit && mul(x, y) == y;
    if (unit) e = x;
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      op[x * n + y] = mul(x, y);
      if (mul(x, y) == e) inv[x] = y;
    }
  return FiniteGroupTable(std::move(labels), std::move(op), std::move(inv), e);
}

// r^i s^j, with s r s = r^-1.
FiniteGroupTable dihedral4() {
  std::vector<std::string> labels;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) labels.push_back("r" + std::to_string(i) + "s" + std::to_string(j));
  return group_from(labels, [](Index a, Index b) {
    const int i1 = a % 4, j1 = a / 4, i2 = b % 4, j2 = b / 4;
    const int i = ((i1 + (j1 ? -i2 : i2)) % 4 + 4) % 4;
    return static_cast<Index>(((j1 + j2) % 2) * 4 + i);
  });
}

// Unit quaternions +-1, +-i, +-j, +-k as (sign, unit) with Hamilton products.
FiniteGroupTable quaternion8() {
  const std::array<std::string, 4> names{"1", "i", "j", "k"};
  // table[u][v] = (sign, unit) of names[u] * names[v]
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::string> labels;
  for (int s = 0; s < 2; ++s)
    for (int u = 0; u < 4; ++u) labels.push_back((s ? "-" : "+") + names[u]);
  return group_from(labels, [&](Index a, Index b) {
    const int s = (a / 4) ^ (b / 4) ^ (sign[a % 4][b % 4] < 0 ? 1 : 0);
    return static_cast<Index>(s * 4 + unit[a % 4][b % 4]);
  });
}

std::vector<FiniteGroupTable> groups_up_to(std::size_t order) {
  std::vector<FiniteGroupTable> out;
  for (std::size_t n = 1; n <= order; ++n) out.push_back(cyclic_group(n));
  if (order >= 4) out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  if (order >= 6) out.push_back(symmetric_group(3));
  if (order >= 8) {
    out.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
    out.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
    out.push_back(dihedral4());
    out.push_back(quaternion8());
  }
  return out;
}

FiniteHeapTable z2_corrupted() {
  auto t = heap_from_group(cyclic_group(2));
  t.set(0, 1, 1, 1);
  return t;
}

}  // namespace

TEST(GroupTables, ConstructionChecksAxioms) {
  EXPECT_THROW(FiniteGroupTable({"a", "b"}, {0, 1, 1, 1}, {0, 1}, 0), InputError);
  EXPECT_THROW(FiniteGroupTable({"a", "a"}, {0, 1, 1, 0}, {0, 1}, 0), InputError);
  EXPECT_THROW(FiniteGroupTable({"a"}, {0, 0}, {0}, 0), InputError);
  EXPECT_NO_THROW(FiniteGroupTable({"a", "b"}, {0, 1, 1, 0}, {0, 1}, 0));
  EXPECT_NO_THROW(dihedral4());
  EXPECT_NO_THROW(quaternion8());
}

TEST(HeapTables, ConstructionValidates) {
  EXPECT_THROW(FiniteHeapTable({"a", "b"}, std::vector<Index>(7, 0)), InputError);
  EXPECT_THROW(FiniteHeapTable({"a", "b"}, std::vector<Index>(8, 2)), InputError);
  EXPECT_THROW(FiniteHeapTable({"a", "a"}, std::vector<Index>(8, 0)), InputError);
}

TEST(CheckHeapAxioms, GroupHeapPasses) {
  const auto report = check_heap_axioms(heap_from_group(cyclic_group(3)));
  EXPECT_TRUE(report.pass());
  EXPECT_FALSE(report.empty_heap);
}

TEST(CheckHeapAxioms, ConstantTableFailsLeftUnitality) {
  const auto t = FiniteHeapTable::from_function({"a", "b", "c"}, [](Index, Index, Index) { return Index{0}; });
  const auto report = check_heap_axioms(t);
  ASSERT_FALSE(report.pass());
  const auto& v = report.violations.front();
  EXPECT_EQ(v.law, AxiomViolation::Law::LeftUnitality);
  EXPECT_EQ(v.triple, (std::array<Index, 3>{0, 0, 1}));
  EXPECT_EQ(v.got, 0u);
  EXPECT_EQ(v.expected, 1u);
}

TEST(CheckHeapAxioms, CorruptedEntryGivesRightUnitalityWitness) {
  const auto t = z2_corrupted();
  const auto report = check_heap_axioms(t);
  ASSERT_FALSE(report.pass());
  auto it = std::find_if(report.violations.begin(), report.violations.end(),
                         [](const AxiomViolation& v) { return v.law == AxiomViolation::Law::RightUnitality; });
  ASSERT_NE(it, report.violations.end());
  EXPECT_EQ(it->triple, (std::array<Index, 3>{0, 1, 1}));
  EXPECT_EQ(it->got, 1u);
  EXPECT_EQ(it->expected, 0u);
  EXPECT_EQ(it->describe(t), "right unitality: [0,1,1] = 1, expected 0");
}

TEST(CheckHeapAxioms, AssociativityOnlyFailure) {
  // [x,y,z] = x - y + z on Z/3, except that [1,0,1] and [1,2,0] are permuted
  // among values consistent with unitality on their own.
  auto t = heap_from_group(cyclic_group(3));
  t.set(1, 0, 1, 0);
  const auto report = check_heap_axioms(t);
  ASSERT_FALSE(report.pass());
  bool associativity = false;
  for (const auto& v : report.violations) {
    if (v.law != AxiomViolation::Law::Associativity) continue;
    associativity = true;
    const auto& a = v.arguments;
    ASSERT_EQ(a.size(), 5u);
    EXPECT_EQ(t(a[0], a[1], t(a[2], a[3], a[4])), v.got);
    EXPECT_EQ(t(t(a[0], a[1], a[2]), a[3], a[4]), v.expected);
    EXPECT_NE(v.got, v.expected);
  }
  EXPECT_TRUE(associativity);
}

TEST(CheckHeapAxioms, EmptyHeapIsFlagged) {
  const auto report = check_heap_axioms(FiniteHeapTable({}, {}));
  EXPECT_TRUE(report.pass());
  EXPECT_TRUE(report.empty_heap);
}

TEST(HeapFromGroup, Examples) {
  const auto z5 = heap_from_group(cyclic_group(5));
  EXPECT_EQ(z5.label(z5(z5.index_of("1"), z5.index_of("3"), z5.index_of("4"))), "2");

  for (const auto& g : groups_up_to(6)) {
    const auto h = heap_from_group(g);
    for (Index x = 0; x < g.size(); ++x)
      for (Index y = 0; y < g.size(); ++y) EXPECT_EQ(h(x, x, y), y);
    EXPECT_TRUE(check_heap_axioms(h).pass());
  }
}

TEST(HeapFromGroup, SymmetricGroupByHand) {
  const auto s3 = symmetric_group(3);
  const auto h = heap_from_group(s3);
  const std::string p12 = "213", p13 = "321", p23 = "132";
  const std::string expected = compose(compose(p12, invert(p13)), p23);
  EXPECT_EQ(expected, "321");
  EXPECT_EQ(h.label(h(h.index_of(p12), h.index_of(p13), h.index_of(p23))), expected);

  for (Index a = 0; a < s3.size(); ++a)
    for (Index b = 0; b < s3.size(); ++b)
      EXPECT_EQ(s3.label(s3.multiply(a, b)), compose(s3.label(a), s3.label(b)));
}

TEST(CheckAbelian, Examples) {
  EXPECT_TRUE(check_abelian(heap_from_group(cyclic_group(4))));
  EXPECT_TRUE(check_abelian(heap_from_group(cyclic_group(1))));
  const auto s3 = heap_from_group(symmetric_group(3));
  EXPECT_FALSE(check_abelian(s3));

  bool found = false;
  for (Index x = 0; x < 6 && !found; ++x)
    for (Index y = 0; y < 6 && !found; ++y)
      for (Index z = 0; z < 6 && !found; ++z) found = s3(x, y, z) != s3(z, y, x);
  EXPECT_TRUE(found);
}

TEST(CheckAbelian, MatchesCommutativityUpToOrderEight) {
  for (const auto& g : groups_up_to(8)) EXPECT_EQ(check_abelian(heap_from_group(g)), g.is_commutative());
}

TEST(CheckAbelian, RejectsNonHeap) { EXPECT_THROW(check_abelian(z2_corrupted()), InputError); }

TEST(Retract, Examples) {
  const auto z5 = cyclic_group(5);
  EXPECT_EQ(retract(heap_from_group(z5), 0), z5);

  const auto z8 = heap_from_group(cyclic_group(8));
  const auto r = retract(z8, z8.index_of("3"));
  EXPECT_EQ(r.label(r.multiply(z8.index_of("5"), z8.index_of("4"))), "6");
  EXPECT_EQ(r.label(r.identity()), "3");
}

TEST(Retract, RoundTripAtIdentity) {
  for (const auto& g : groups_up_to(8)) EXPECT_EQ(retract(heap_from_group(g), g.identity()), g);
}

TEST(Retract, ReconstructsBracketExhaustively) {
  for (const auto& g : groups_up_to(6)) {
    const auto h = heap_from_group(g);
    const auto n = static_cast<Index>(h.size());
    for (Index e = 0; e < n; ++e) {
      const auto r = retract(h, e);
      EXPECT_EQ(heap_from_group(r), h);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          for (Index c = 0; c < n; ++c)
            ASSERT_EQ(h(a, b, c), r.multiply(r.multiply(a, r.inverse(b)), c));
    }
  }
}

TEST(Retract, InverseIsBracketAtBasepoint) {
  const auto h = heap_from_group(symmetric_group(3));
  for (Index e = 0; e < h.size(); ++e) {
    const auto r = retract(h, e);
    for (Index x = 0; x < h.size(); ++x) EXPECT_EQ(r.inverse(x), h(e, x, e));
  }
}

TEST(Retract, Errors) {
  EXPECT_THROW(retract(heap_from_group(cyclic_group(3)), 3), InputError);
  EXPECT_THROW(retract(z2_corrupted(), 0), InputError);
}

TEST(HeapMorphism, Examples) {
  const auto z4 = heap_from_group(cyclic_group(4));
  const std::vector<Index> id{0, 1, 2, 3}, constant{2, 2, 2, 2}, doubling{0, 2, 0, 2}, swap01{1, 0, 2, 3};
  EXPECT_TRUE(check_heap_morphism(id, z4, z4));
  EXPECT_TRUE(check_heap_morphism(constant, z4, z4));
  EXPECT_TRUE(check_heap_morphism(doubling, z4, z4));
  EXPECT_FALSE(check_heap_morphism(swap01, z4, z4));
}

TEST(HeapMorphism, DoublingAgreesWithExhaustiveCheck) {
  const auto z4 = heap_from_group(cyclic_group(4));
  const std::vector<Index> f{0, 2, 0, 2};
  bool ok = true;
  for (Index x = 0; x < 4; ++x)
    for (Index y = 0; y < 4; ++y)
      for (Index z = 0; z < 4; ++z) ok = ok && f[(x - y + z + 8) % 4] == (f[x] - f[y] + f[z] + 8) % 4;
  EXPECT_TRUE(ok);
  EXPECT_EQ(check_heap_morphism(f, z4, z4), ok);
}

TEST(HeapMorphism, Errors) {
  const auto z4 = heap_from_group(cyclic_group(4));
  const std::vector<Index> short_map{0, 1}, out_of_range{0, 1, 2, 4};
  EXPECT_THROW(check_heap_morphism(short_map, z4, z4), InputError);
  EXPECT_THROW(check_heap_morphism(out_of_range, z4, z4), InputError);
}

TEST(Kernels, SerialAndParallelAxiomSweepsAgree) {
  for (const auto& g : groups_up_to(8)) {
    auto t = heap_from_group(g);
    EXPECT_EQ(check_heap_axioms(t), serial::check_heap_axioms(t));
    if (t.size() > 2) {
      t.set(2, 1, 0, 1);
      EXPECT_EQ(check_heap_axioms(t), serial::check_heap_axioms(t));
    }
  }
}
