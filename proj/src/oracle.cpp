#include "orsolv/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "orsolv/errors.hpp"

namespace orsolv {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {  // apply p, then q
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm identity_perm(int degree) {
  Perm e(degree);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

/* Closes the generators under composition, indexes the elements in
 * lexicographic order (the identity permutation sorts first), tabulates
 * products and inverses, and verifies the whole table. */
FiniteGroup from_permutations(std::string name, int degree, std::vector<Perm> gens) {
  std::set<Perm> closure{identity_perm(degree)};
  for (const Perm& g : gens) closure.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> current(closure.begin(), closure.end());
    for (const Perm& a : current) {
      for (const Perm& g : gens) {
        if (closure.insert(compose(a, g)).second) grew = true;
      }
    }
  }

  std::vector<Perm> elems(closure.begin(), closure.end());
  auto index_of = [&](const Perm& p) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };

  FiniteGroup g;
  g.name = std::move(name);
  g.order = static_cast<int>(elems.size());
  g.identity = index_of(identity_perm(degree));
  if (g.identity != 0) throw Error(g.name + ": identity did not sort first");
  g.table.resize(static_cast<std::size_t>(g.order) * g.order);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      g.table[static_cast<std::size_t>(a) * g.order + b] = index_of(compose(elems[a], elems[b]));
    }
  }

  g.inverse.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) g.inverse[a] = b;
    }
    if (g.inverse[a] < 0) throw Error(g.name + ": element without inverse");
  }
  for (int a = 0; a < g.order; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw Error(g.name + ": identity law fails");
    for (int b = 0; b < g.order; ++b) {
      for (int c = 0; c < g.order; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw Error(g.name + ": associativity fails");
        }
      }
    }
  }
  return g;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::set<int> seed) {
  seed.insert(g.identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(seed.begin(), seed.end());
    for (int a : current) {
      for (int b : current) {
        if (seed.insert(g.mul(a, b)).second) grew = true;
      }
      if (seed.insert(g.inv(a)).second) grew = true;
    }
  }
  return {seed.begin(), seed.end()};
}

std::vector<int> derived_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  std::set<int> comms;
  for (int a : h) {
    for (int b : h) {
      comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  }
  return subgroup_closure(g, std::move(comms));
}

int compute_derived_length(const FiniteGroup& g) {
  std::vector<int> h(g.order);
  std::iota(h.begin(), h.end(), 0);
  int length = 0;
  while (h.size() > 1) {
    std::vector<int> next = derived_subgroup(g, h);
    if (next.size() == h.size()) throw Error(g.name + ": derived series stalls, not solvable");
    h = std::move(next);
    ++length;
  }
  return length;
}

Perm cycle_shift(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

Perm reflection(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (n - i) % n;
  return p;
}

}  // namespace

std::vector<FiniteGroup> build_catalog(int max_order) {
  std::vector<FiniteGroup> catalog;
  auto add = [&](FiniteGroup g) {
    if (g.order <= max_order) {
      g.derived_length = compute_derived_length(g);
      catalog.push_back(std::move(g));
    }
  };

  for (int n = 2; n <= 12; ++n) {
    add(from_permutations("C" + std::to_string(n), n, {cycle_shift(n)}));
  }
  add(from_permutations("V4", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}));
  for (int n = 3; n <= 6; ++n) {
    add(from_permutations("D" + std::to_string(n), n, {cycle_shift(n), reflection(n)}));
  }
  add(from_permutations("S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}));
  add(from_permutations("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
  {
    Perm add1 = cycle_shift(7);
    Perm mul2(7);
    for (int i = 0; i < 7; ++i) mul2[i] = 2 * i % 7;
    add(from_permutations("C7:C3", 7, {add1, mul2}));
  }
  return catalog;
}

int eval_word(const FiniteGroup& g, const Word& w, const std::vector<int>& images) {
  int acc = g.identity;
  for (const Letter& l : w) {
    int x = images[l.gen];
    acc = g.mul(acc, l.sign > 0 ? x : g.inv(x));
  }
  return acc;
}

namespace {

// odometer over image tuples, first generator most significant
template <typename Fn>
void for_each_tuple(int order, int q, Fn&& fn) {
  std::vector<int> images(q, 0);
  for (;;) {
    if (!fn(images)) return;
    int i = q - 1;
    while (i >= 0 && images[i] == order - 1) images[i--] = 0;
    if (i < 0) return;
    ++images[i];
  }
}

}  // namespace

std::vector<Hom> enumerate_homs(const OneRelatorPresentation& p, const FiniteGroup& g) {
  std::vector<Hom> homs;
  for_each_tuple(g.order, p.num_generators(), [&](const std::vector<int>& images) {
    if (eval_word(g, p.relator_cyclic, images) == g.identity) homs.push_back(Hom{images});
    return true;
  });
  return homs;
}

std::optional<SeparationWitness> separate(const OneRelatorPresentation& p, const Word& w,
                                          const std::vector<FiniteGroup>& catalog) {
  std::optional<SeparationWitness> found;
  for (std::size_t gi = 0; gi < catalog.size() && !found; ++gi) {
    const FiniteGroup& g = catalog[gi];
    for_each_tuple(g.order, p.num_generators(), [&](const std::vector<int>& images) {
      if (eval_word(g, p.relator_cyclic, images) == g.identity &&
          eval_word(g, w, images) != g.identity) {
        found = SeparationWitness{gi, Hom{images}};
        return false;
      }
      return true;
    });
  }
  if (found) {
    // re-check the witness before handing it out
    const FiniteGroup& g = catalog[found->catalog_index];
    if (eval_word(g, p.relator_cyclic, found->hom.images) != g.identity ||
        eval_word(g, w, found->hom.images) == g.identity) {
      throw Error("separation witness failed its own re-check");
    }
  }
  return found;
}

AbelianizationData abelianization(const OneRelatorPresentation& p) {
  AbelianizationData data;
  data.exponent_vector.reserve(p.num_generators());
  long long d = 0;
  for (int g = 0; g < p.num_generators(); ++g) {
    long long s = exponent_sum(p.relator_cyclic, g);
    data.exponent_vector.push_back(s);
    d = std::gcd(d, s);
  }
  data.divisor = d;
  data.free_rank = d != 0 ? p.num_generators() - 1 : p.num_generators();

  std::ostringstream os;
  bool wrote = false;
  if (data.free_rank == 1) {
    os << "Z";
    wrote = true;
  } else if (data.free_rank > 1) {
    os << "Z^" << data.free_rank;
    wrote = true;
  }
  if (d >= 2) {
    if (wrote) os << " + ";
    os << "Z/" << d;
    wrote = true;
  }
  if (!wrote) os << "1";
  data.structure = os.str();
  return data;
}

bool separate_in_abelianization(const OneRelatorPresentation& p, const Word& w) {
  const AbelianizationData a = abelianization(p);
  std::vector<long long> wv;
  wv.reserve(p.num_generators());
  bool w_zero = true;
  for (int g = 0; g < p.num_generators(); ++g) {
    wv.push_back(exponent_sum(w, g));
    if (wv.back() != 0) w_zero = false;
  }
  if (w_zero) return false;

  const auto& rv = a.exponent_vector;
  bool r_zero = std::all_of(rv.begin(), rv.end(), [](long long x) { return x == 0; });
  if (r_zero) return true;  // w nonzero in Z^q

  // w separated unless w = k r for an integer k
  std::size_t pivot = 0;
  while (rv[pivot] == 0) ++pivot;
  if (wv[pivot] % rv[pivot] != 0) return true;
  long long k = wv[pivot] / rv[pivot];
  for (std::size_t i = 0; i < rv.size(); ++i) {
    if (wv[i] != k * rv[i]) return true;
  }
  return false;
}

}  // namespace orsolv
