#include <conewright/chern.hpp>

#include <conewright/errors.hpp>

#include <utility>
#include <vector>

namespace conewright::chern {

using ring::PolyClass;
using ring::RingHandle;

namespace {

Rat factorial(unsigned k) {
  Rat f = 1;
  for (unsigned j = 2; j <= k; ++j) {
    f *= j;
  }
  return f;
}

void require_genuine(const Bundle& e, const char* op) {
  if (e.is_virtual) {
    throw ConfigError(std::string(op) + " requires a genuine bundle, got virtual expression '" +
                      e.label + "'");
  }
}

// Power sums p_1..p_top from elementary symmetric classes e_1..e_top via
// p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
std::vector<PolyClass> elementary_to_power(const std::vector<PolyClass>& e,
                                           const RingHandle& ring) {
  const int top = ring->top_degree();
  std::vector<PolyClass> p(top + 1, ring->zero());
  for (int k = 1; k <= top; ++k) {
    PolyClass acc = e[k] * Rat((k % 2 == 1) ? k : -k);
    for (int i = 1; i < k; ++i) {
      const PolyClass term = e[i] * p[k - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    p[k] = acc;
  }
  return p;
}

// Inverse direction: e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
std::vector<PolyClass> power_to_elementary(const std::vector<PolyClass>& p,
                                           const RingHandle& ring) {
  const int top = ring->top_degree();
  std::vector<PolyClass> e(top + 1, ring->zero());
  e[0] = ring->one();
  for (int k = 1; k <= top; ++k) {
    PolyClass acc = ring->zero();
    for (int i = 1; i <= k; ++i) {
      const PolyClass term = e[k - i] * p[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[k] = acc * Rat(1, k);
  }
  return e;
}

}  // namespace

Bundle make_bundle(int rank, const PolyClass& total_chern, std::string label) {
  if (rank < 0) {
    throw ConfigError("bundle '" + label + "' must have nonnegative rank");
  }
  if (total_chern.constant_part() != 1) {
    throw ConfigError("bundle '" + label + "' needs total Chern class with degree-0 part 1");
  }
  for (int k = rank + 1; k <= total_chern.ring()->top_degree(); ++k) {
    if (!total_chern.component(k).is_zero()) {
      throw ConfigError("bundle '" + label + "' has Chern classes above its rank");
    }
  }
  return Bundle{rank, total_chern, std::move(label), false};
}

Bundle trivial_bundle(const RingHandle& ring, int rank) {
  return make_bundle(rank, ring->one(), "O^" + std::to_string(rank));
}

Bundle line_bundle(const PolyClass& c1, std::string label) {
  if (!c1.is_homogeneous(1)) {
    throw ConfigError("line bundle '" + label + "' needs a degree-1 first Chern class");
  }
  return make_bundle(1, c1.ring()->one() + c1, std::move(label));
}

PolyClass chern_class(const Bundle& e, int k) {
  if (k < 0) {
    throw ConfigError("Chern class index must be nonnegative");
  }
  if (k > e.total_chern.ring()->top_degree()) {
    return e.total_chern.ring()->zero();
  }
  return e.total_chern.component(k);
}

Bundle whitney_sum(const Bundle& e, const Bundle& f) {
  return Bundle{e.rank + f.rank, e.total_chern * f.total_chern,
                e.label + "+" + f.label, e.is_virtual || f.is_virtual};
}

Bundle virtual_difference(const Bundle& e, const Bundle& f) {
  return Bundle{e.rank - f.rank, e.total_chern * f.total_chern.inverse(),
                e.label + "-" + f.label, true};
}

Bundle dual(const Bundle& e) {
  PolyClass c = e.total_chern.ring()->zero();
  for (int k = 0; k <= e.total_chern.ring()->top_degree(); ++k) {
    const PolyClass part = e.total_chern.component(k);
    c += (k % 2 == 0) ? part : -part;
  }
  return Bundle{e.rank, c, e.label + "^", e.is_virtual};
}

Bundle twist_by_line(const Bundle& e, const PolyClass& lambda) {
  require_genuine(e, "twist");
  if (!lambda.is_homogeneous(1)) {
    throw ConfigError("twist requires a homogeneous degree-1 class");
  }
  const RingHandle& ring = e.total_chern.ring();
  PolyClass c = ring->zero();
  for (int k = 0; k <= ring->top_degree(); ++k) {
    PolyClass part = ring->zero();
    for (int i = 0; i <= k; ++i) {
      const PolyClass ci = e.total_chern.component(i);
      if (ci.is_zero()) {
        continue;
      }
      const Int b = binomial(e.rank - i, static_cast<unsigned>(k - i));
      if (b == 0) {
        continue;
      }
      part += ci * lambda.pow(static_cast<unsigned>(k - i)) * Rat(b);
    }
    c += part;
  }
  return Bundle{e.rank, c, e.label + "(twist)", false};
}

Bundle tensor(const Bundle& e, const Bundle& f) {
  require_genuine(e, "tensor");
  require_genuine(f, "tensor");
  const PolyClass ch = to_character(e) * to_character(f);
  return from_character(e.rank * f.rank, ch, e.label + "*" + f.label);
}

Bundle exterior_top_minus_one(const Bundle& e) {
  require_genuine(e, "exterior power");
  if (e.rank < 2) {
    throw ConfigError("exterior power requires rank >= 2, got '" + e.label + "'");
  }
  // wedge^{r-1} E is dual(E) (x) det E.
  Bundle out = twist_by_line(dual(e), chern_class(e, 1));
  out.label = "wedge^" + std::to_string(e.rank - 1) + "(" + e.label + ")";
  return out;
}

PolyClass to_character(const Bundle& e) {
  const RingHandle& ring = e.total_chern.ring();
  std::vector<PolyClass> elem(ring->top_degree() + 1, ring->zero());
  for (int k = 0; k <= ring->top_degree(); ++k) {
    elem[k] = e.total_chern.component(k);
  }
  const std::vector<PolyClass> p = elementary_to_power(elem, ring);
  PolyClass ch = PolyClass::constant(ring, e.rank);
  for (int k = 1; k <= ring->top_degree(); ++k) {
    ch += p[k] * (Rat(1) / factorial(static_cast<unsigned>(k)));
  }
  return ch;
}

Bundle from_character(int rank, const PolyClass& character, std::string label) {
  if (character.constant_part() != rank) {
    throw ConfigError("character of '" + label + "' disagrees with the declared rank");
  }
  const RingHandle& ring = character.ring();
  std::vector<PolyClass> p(ring->top_degree() + 1, ring->zero());
  for (int k = 1; k <= ring->top_degree(); ++k) {
    p[k] = character.component(k) * factorial(static_cast<unsigned>(k));
  }
  const std::vector<PolyClass> elem = power_to_elementary(p, ring);
  PolyClass c = ring->zero();
  for (int k = 0; k <= ring->top_degree(); ++k) {
    c += elem[k];
  }
  return make_bundle(rank, c, std::move(label));
}

PolyClass exp_class(const PolyClass& x) {
  if (x.constant_part() != 0) {
    throw ConfigError("exp expects a class with zero degree-0 part");
  }
  const RingHandle& ring = x.ring();
  PolyClass acc = ring->one();
  PolyClass xpow = ring->one();
  for (int k = 1; k <= ring->top_degree(); ++k) {
    xpow = xpow * x;
    if (xpow.is_zero()) {
      break;
    }
    acc += xpow * (Rat(1) / factorial(static_cast<unsigned>(k)));
  }
  return acc;
}

}  // namespace conewright::chern
