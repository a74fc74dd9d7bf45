#include "k0/toycats.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "k0/error.hpp"
#include "k0/intlinalg.hpp"

namespace k0::toycats {

using grothendieck::CofiberSequence;
using grothendieck::PushoutSquare;
using grothendieck::SquareKind;

namespace {

std::vector<std::string> labels(int bound) {
  std::vector<std::string> out;
  for (int i = 0; i <= bound; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string lbl(long i) { return std::to_string(i); }

bool map_exists(Kind kind, int x, int y) { return kind != Kind::FinSet || y == 0 || x >= 1; }

// Legs of the span x <- y >-> z that can be chosen as cofibrations.
SquareKind leg_kind(int x, int y) { return y <= x ? SquareKind::BothLegs : SquareKind::RightLeg; }

std::vector<PushoutSquare> enumerate_squares(Kind kind, int bound, bool bicartesian) {
  std::vector<PushoutSquare> out;
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; y <= bound; ++y)
      for (int z = y; z <= bound; ++z) {
        const int w = x + z - y;
        if (w > bound || !map_exists(kind, x, y)) continue;
        out.push_back({lbl(x), lbl(y), lbl(z), lbl(w), bicartesian ? SquareKind::Bicartesian : leg_kind(x, y)});
      }
  return out;
}

// -- explicit realizations --------------------------------------------------

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
    return c;
  }
};

// All functions {0..n-1} -> {0..m-1}, as value lists.
std::vector<std::vector<int>> all_maps(int n, int m) {
  std::vector<std::vector<int>> out;
  if (n > 0 && m == 0) return out;
  std::vector<int> f(n, 0);
  while (true) {
    out.push_back(f);
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::vector<std::vector<int>> all_injections(int n, int m) {
  std::vector<std::vector<int>> out;
  for (auto& f : all_maps(n, m)) {
    auto g = f;
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) == g.end()) out.push_back(std::move(f));
  }
  return out;
}

std::string show(const std::vector<int>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

struct SpanResult {
  std::size_t realizations = 0;
  std::optional<GluingFailure> failure;
};

SpanResult check_finset_span(int x, int y, int z, long expected) {
  SpanResult r;
  for (const auto& f : all_maps(y, x))
    for (const auto& c : all_injections(y, z)) {
      UnionFind uf(x + z);
      for (int i = 0; i < y; ++i) uf.unite(f[i], x + c[i]);
      const long got = uf.components();
      ++r.realizations;
      if (got != expected) {
        r.failure = GluingFailure{x, y, z, "f=" + show(f) + " c=" + show(c), expected, got};
        return r;
      }
    }
  return r;
}

// Element 0 is the basepoint; maps send the y non-base points anywhere and
// cofibrations inject them into non-base points.
SpanResult check_pointed_span(int x, int y, int z, long expected) {
  SpanResult r;
  for (const auto& f : all_maps(y, x + 1))
    for (auto c : all_injections(y, z)) {
      for (auto& v : c) ++v;
      UnionFind uf(x + 1 + z + 1);
      uf.unite(0, x + 1);
      for (int i = 0; i < y; ++i) uf.unite(f[i], x + 1 + c[i]);
      const long got = uf.components() - 1;
      ++r.realizations;
      if (got != expected) {
        r.failure = GluingFailure{x, y, z, "f=" + show(f) + " c=" + show(c), expected, got};
        return r;
      }
    }
  return r;
}

// Pushout of Z^x <-f- Z^y -c-> Z^z is Z^(x+z) modulo the rows (f(e_i), -c(e_i)).
SpanResult check_module_span(int x, int y, int z, long expected) {
  using linalg::IntegerMatrix;
  SpanResult r;

  std::vector<IntegerMatrix> maps;
  if (x * y <= 4) {
    for (const auto& bits : all_maps(x * y, 2)) {
      IntegerMatrix f(y, x);
      for (int k = 0; k < x * y; ++k) f(k / std::max(x, 1), k % std::max(x, 1)) = bits[k];
      maps.push_back(std::move(f));
    }
  } else {
    std::mt19937 rng(static_cast<unsigned>(1000003 * x + 1009 * y + z));
    std::uniform_int_distribution<int> entry(-2, 2);
    maps.emplace_back(y, x);
    for (int s = 0; s < 15; ++s) {
      IntegerMatrix f(y, x);
      for (int i = 0; i < y; ++i)
        for (int j = 0; j < x; ++j) f(i, j) = entry(rng);
      maps.push_back(std::move(f));
    }
  }

  // Coordinate inclusions, plus one inclusion followed by a shear.
  std::vector<IntegerMatrix> cofibrations;
  auto injections = all_injections(y, z);
  for (std::size_t k = 0; k < injections.size() && k < 6; ++k) {
    IntegerMatrix c(y, z);
    for (int i = 0; i < y; ++i) c(i, injections[k][i]) = 1;
    cofibrations.push_back(std::move(c));
  }
  if (y > 0) {
    IntegerMatrix shear(y, z);
    for (int i = 0; i < y; ++i)
      for (int j = i; j < z; ++j) shear(i, j) = 1;
    cofibrations.push_back(std::move(shear));
  }

  for (const auto& f : maps)
    for (const auto& c : cofibrations) {
      IntegerMatrix rel(y, x + z);
      for (int i = 0; i < y; ++i) {
        for (int j = 0; j < x; ++j) rel(i, j) = f(i, j);
        for (int j = 0; j < z; ++j) rel(i, x + j) = -c(i, j);
      }
      auto snf = linalg::smith_normal_form(rel);
      const long got = snf.invariant_factors.empty() ? static_cast<long>(snf.row_quotient_free_rank()) : -1;
      ++r.realizations;
      if (got != expected) {
        r.failure = GluingFailure{x, y, z, "f=" + f.to_string() + " c=" + c.to_string(), expected, got};
        return r;
      }
    }
  return r;
}

SpanResult check_span(Kind kind, int x, int y, int z, long expected) {
  switch (kind) {
    case Kind::FinSet: return check_finset_span(x, y, z, expected);
    case Kind::PointedFinSet: return check_pointed_span(x, y, z, expected);
    case Kind::FreeModuleTrunc: return check_module_span(x, y, z, expected);
  }
  return {};
}

struct Span {
  int x, y, z;
};

std::vector<Span> spans(Kind kind, int bound) {
  std::vector<Span> out;
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; y <= bound; ++y)
      for (int z = y; z <= bound; ++z)
        if (map_exists(kind, x, y)) out.push_back({x, y, z});
  return out;
}

}  // namespace

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::FinSet: return "finset";
    case Kind::PointedFinSet: return "pointed_finset";
    case Kind::FreeModuleTrunc: return "free_module_trunc";
  }
  return "finset";
}

Kind parse_kind(const std::string& text) {
  if (text == "finset") return Kind::FinSet;
  if (text == "pointed_finset") return Kind::PointedFinSet;
  if (text == "free_module_trunc") return Kind::FreeModuleTrunc;
  throw InputError("unknown category kind \"" + text + "\" (expected finset, pointed_finset or free_module_trunc)");
}

CategoryData generate_finset(int bound) {
  if (bound < 0) throw InputError("bound must be non-negative");
  CategoryData d;
  d.kind = Kind::FinSet;
  d.size_bound = bound;
  d.class_labels = labels(bound);
  d.pushouts = enumerate_squares(Kind::FinSet, bound, false);
  return d;
}

CategoryData generate_pointed(Kind kind, int bound, bool bicartesian) {
  if (kind == Kind::FinSet) throw InputError("finset is not a pointed kind");
  if (bound < 0) throw InputError("bound must be non-negative");
  CategoryData d;
  d.kind = kind;
  d.size_bound = bound;
  d.class_labels = labels(bound);
  d.zero = "0";
  for (int x = 0; x <= bound; ++x)
    for (int y = x; y <= bound; ++y) d.cofibers.push_back(CofiberSequence{lbl(x), lbl(y), lbl(y - x)});
  d.pushouts = enumerate_squares(kind, bound, bicartesian);
  return d;
}

CategoryData generate(Kind kind, int bound, bool bicartesian) {
  if (kind == Kind::FinSet) {
    if (bicartesian) throw InputError("finset data has no bicartesian variant");
    return generate_finset(bound);
  }
  return generate_pointed(kind, bound, bicartesian);
}

long standard_pushout_law(int x, int y, int z) { return static_cast<long>(x) + z - y; }

GluingReport gluing_check(Kind kind, int bound) { return gluing_check(kind, bound, standard_pushout_law); }

GluingReport gluing_check(Kind kind, int bound, const PushoutLaw& law) {
  const auto all = spans(kind, bound);
  std::vector<SpanResult> results(all.size());
  const long count = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const auto& s = all[i];
    long expected;
#pragma omp critical(k0_pushout_law)
    expected = law(s.x, s.y, s.z);
    results[i] = check_span(kind, s.x, s.y, s.z, expected);
  }
  GluingReport report;
  report.spans = all.size();
  for (auto& r : results) {
    report.realizations += r.realizations;
    if (r.failure && !report.failure) report.failure = std::move(r.failure);
  }
  return report;
}

namespace serial {
GluingReport gluing_check(Kind kind, int bound, const PushoutLaw& law) {
  GluingReport report;
  for (const auto& s : spans(kind, bound)) {
    auto r = check_span(kind, s.x, s.y, s.z, law(s.x, s.y, s.z));
    ++report.spans;
    report.realizations += r.realizations;
    if (r.failure && !report.failure) report.failure = std::move(r.failure);
  }
  return report;
}
}  // namespace serial

}  // namespace k0::toycats
