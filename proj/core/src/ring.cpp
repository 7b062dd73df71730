#include <conewright/ring.hpp>

#include <conewright/errors.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace conewright::ring {

namespace {

// Descending lexicographic comparison of exponent vectors; within a fixed
// degree this is the graded-lex order used to pick elimination pivots.
bool lex_greater(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void append_monomials(const std::vector<Generator>& gens, std::size_t index,
                      int remaining, Monomial& current, std::vector<Monomial>& out) {
  if (index + 1 == gens.size()) {
    if (remaining % gens[index].degree == 0) {
      current[index] = static_cast<unsigned>(remaining / gens[index].degree);
      out.push_back(current);
    }
    return;
  }
  const int w = gens[index].degree;
  // Highest exponent first so the output is already in descending lex order.
  for (int e = remaining / w; e >= 0; --e) {
    current[index] = static_cast<unsigned>(e);
    append_monomials(gens, index + 1, remaining - e * w, current, out);
  }
  current[index] = 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyClass
// ---------------------------------------------------------------------------

PolyClass::PolyClass(RingHandle ring) : ring_(std::move(ring)) {
  if (!ring_) {
    throw ConfigError("class requires a ring presentation");
  }
}

PolyClass PolyClass::constant(RingHandle ring, const Rat& value) {
  PolyClass p(std::move(ring));
  if (value != 0) {
    p.coef_.emplace(Monomial(p.ring_->generators().size(), 0), value);
  }
  return p;
}

PolyClass PolyClass::generator(RingHandle ring, std::size_t index) {
  PolyClass p(std::move(ring));
  if (index >= p.ring_->generators().size()) {
    throw ConfigError("generator index out of range in ring " + p.ring_->name());
  }
  Monomial m(p.ring_->generators().size(), 0);
  m[index] = 1;
  p.insert_reduced(m, 1);
  p.reduce_all();
  return p;
}

PolyClass PolyClass::from_terms(RingHandle ring, const TermList& terms) {
  PolyClass p(std::move(ring));
  const std::size_t width = p.ring_->generators().size();
  for (const Term& t : terms) {
    if (t.exps.size() != width) {
      throw ConfigError("term exponent width does not match ring " + p.ring_->name());
    }
    if (t.coef == 0) {
      continue;
    }
    auto [it, inserted] = p.coef_.emplace(t.exps, t.coef);
    if (!inserted) {
      it->second += t.coef;
      if (it->second == 0) {
        p.coef_.erase(it);
      }
    }
  }
  p.reduce_all();
  return p;
}

int PolyClass::max_degree() const {
  int best = -1;
  for (const auto& [m, c] : coef_) {
    best = std::max(best, ring_->degree_of(m));
  }
  return best;
}

bool PolyClass::is_homogeneous(int degree) const {
  for (const auto& [m, c] : coef_) {
    if (ring_->degree_of(m) != degree) {
      return false;
    }
  }
  return true;
}

PolyClass PolyClass::component(int degree) const {
  PolyClass out(ring_);
  for (const auto& [m, c] : coef_) {
    if (ring_->degree_of(m) == degree) {
      out.coef_.emplace(m, c);
    }
  }
  return out;
}

Rat PolyClass::constant_part() const {
  const Monomial unit(ring_->generators().size(), 0);
  const auto it = coef_.find(unit);
  return it == coef_.end() ? Rat(0) : it->second;
}

PolyClass PolyClass::operator-() const {
  PolyClass out(ring_);
  for (const auto& [m, c] : coef_) {
    out.coef_.emplace(m, -c);
  }
  return out;
}

PolyClass PolyClass::operator+(const PolyClass& rhs) const {
  PolyClass out = *this;
  out += rhs;
  return out;
}

PolyClass PolyClass::operator-(const PolyClass& rhs) const {
  PolyClass out = *this;
  out -= rhs;
  return out;
}

PolyClass& PolyClass::operator+=(const PolyClass& rhs) {
  require_same_ring(*this, rhs);
  // Sums of normal forms are normal forms: reduction is linear.
  for (const auto& [m, c] : rhs.coef_) {
    auto [it, inserted] = coef_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        coef_.erase(it);
      }
    }
  }
  return *this;
}

PolyClass& PolyClass::operator-=(const PolyClass& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [m, c] : rhs.coef_) {
    auto [it, inserted] = coef_.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) {
        coef_.erase(it);
      }
    }
  }
  return *this;
}

PolyClass PolyClass::operator*(const PolyClass& rhs) const {
  require_same_ring(*this, rhs);
  PolyClass out(ring_);
  const int top = ring_->top_degree();
  for (const auto& [ma, ca] : coef_) {
    const int da = ring_->degree_of(ma);
    for (const auto& [mb, cb] : rhs.coef_) {
      if (da + ring_->degree_of(mb) > top) {
        continue;  // classes above the top degree vanish on the space
      }
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = ma[i] + mb[i];
      }
      auto [it, inserted] = out.coef_.emplace(std::move(m), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) {
          out.coef_.erase(it);
        }
      }
    }
  }
  out.reduce_all();
  return out;
}

PolyClass& PolyClass::operator*=(const PolyClass& rhs) {
  *this = *this * rhs;
  return *this;
}

PolyClass PolyClass::operator*(const Rat& scalar) const {
  PolyClass out(ring_);
  if (scalar == 0) {
    return out;
  }
  for (const auto& [m, c] : coef_) {
    out.coef_.emplace(m, c * scalar);
  }
  return out;
}

bool PolyClass::operator==(const PolyClass& rhs) const {
  require_same_ring(*this, rhs);
  return coef_ == rhs.coef_;  // both sides are in normal form
}

PolyClass PolyClass::pow(unsigned exponent) const {
  PolyClass out = PolyClass::constant(ring_, 1);
  for (unsigned i = 0; i < exponent; ++i) {
    out *= *this;
  }
  return out;
}

PolyClass PolyClass::inverse() const {
  const Rat c0 = constant_part();
  if (c0 == 0) {
    throw ConfigError("class has no multiplicative inverse (degree-0 part is 0)");
  }
  // Write the class as c0 (1 + u) with u of positive degree; the inverse is
  // c0^{-1} sum_k (-u)^k, truncated at the top degree.
  const PolyClass u = *this * (Rat(1) / c0) - constant(ring_, 1);
  PolyClass acc = constant(ring_, 1);
  PolyClass upow = constant(ring_, 1);
  for (int k = 1; k <= ring_->top_degree(); ++k) {
    upow = upow * u;
    if (upow.is_zero()) {
      break;
    }
    acc += (k % 2 == 0) ? upow : -upow;
  }
  return acc * (Rat(1) / c0);
}

std::string PolyClass::to_string() const {
  if (coef_.empty()) {
    return "0";
  }
  // Present terms by ascending degree, then descending lex, for readability.
  std::vector<std::pair<Monomial, Rat>> terms(coef_.begin(), coef_.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int da = ring_->degree_of(a.first);
    const int db = ring_->degree_of(b.first);
    if (da != db) {
      return da < db;
    }
    return lex_greater(a.first, b.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) {
        a = -a;
      }
    }
    first = false;
    bool trivial_monomial = true;
    for (unsigned e : m) {
      if (e > 0) {
        trivial_monomial = false;
      }
    }
    if (a != 1 || trivial_monomial) {
      os << a;
    }
    bool needs_star = (a != 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) {
        continue;
      }
      if (needs_star) {
        os << "*";
      }
      needs_star = true;
      os << ring_->generators()[i].name;
      if (m[i] > 1) {
        os << "^" << m[i];
      }
    }
  }
  return os.str();
}

void PolyClass::insert_reduced(const Monomial& m, const Rat& c) {
  auto [it, inserted] = coef_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      coef_.erase(it);
    }
  }
}

void PolyClass::reduce_all() {
  // Split into degree slices, rewrite each against the relation tables, and
  // reassemble. Degrees above the top are dropped.
  std::map<int, std::map<Monomial, Rat>> slices;
  for (auto& [m, c] : coef_) {
    const int d = ring_->degree_of(m);
    if (d <= ring_->top_degree()) {
      slices[d].emplace(m, c);
    }
  }
  coef_.clear();
  for (auto& [d, slice] : slices) {
    ring_->reduce_slice(d, slice);
    for (auto& [m, c] : slice) {
      if (c != 0) {
        coef_.emplace(m, std::move(c));
      }
    }
  }
}

void PolyClass::require_same_ring(const PolyClass& a, const PolyClass& b) {
  if (a.ring_.get() != b.ring_.get()) {
    throw ConfigError("classes live in different rings (" + a.ring_->name() +
                      " vs " + b.ring_->name() + ")");
  }
}

// ---------------------------------------------------------------------------
// RingPresentation
// ---------------------------------------------------------------------------

RingHandle RingPresentation::make(std::string name, std::vector<Generator> generators,
                                  std::vector<TermList> relations, int top_degree,
                                  TermList integral) {
  if (generators.empty()) {
    throw ConfigError("ring '" + name + "' needs at least one generator");
  }
  for (const Generator& g : generators) {
    if (g.degree <= 0) {
      throw ConfigError("generator '" + g.name + "' must have positive degree");
    }
  }
  if (top_degree < 0) {
    throw ConfigError("ring '" + name + "' needs a nonnegative top degree");
  }
  auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
  ring->name_ = std::move(name);
  ring->generators_ = std::move(generators);
  ring->top_degree_ = top_degree;
  ring->build_tables(relations);

  // The integration functional must assign a value to every top-degree basis
  // monomial, and to nothing else.
  const std::vector<Monomial>& top_basis = ring->tables_[top_degree].basis;
  for (const Term& t : integral) {
    if (std::find(top_basis.begin(), top_basis.end(), t.exps) == top_basis.end()) {
      throw ConfigError("integration functional assigns a value to a non-basis monomial in ring '" +
                        ring->name_ + "'");
    }
    ring->integral_[t.exps] = t.coef;
  }
  for (const Monomial& m : top_basis) {
    if (!ring->integral_.count(m)) {
      throw ConfigError("integration functional misses a top-degree basis monomial in ring '" +
                        ring->name_ + "'");
    }
  }
  return ring;
}

std::size_t RingPresentation::generator_index(std::string_view generator_name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == generator_name) {
      return i;
    }
  }
  throw ConfigError("ring '" + name_ + "' has no generator named '" +
                    std::string(generator_name) + "'");
}

int RingPresentation::degree_of(const Monomial& m) const {
  if (m.size() != generators_.size()) {
    throw ConfigError("monomial width does not match ring '" + name_ + "'");
  }
  long long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    d += static_cast<long long>(m[i]) * generators_[i].degree;
  }
  return static_cast<int>(d);
}

const std::vector<Monomial>& RingPresentation::monomials(int degree) const {
  if (degree < 0 || degree > top_degree_) {
    throw ConfigError("degree out of range for ring '" + name_ + "'");
  }
  return tables_[degree].monos;
}

const std::vector<Monomial>& RingPresentation::basis(int degree) const {
  if (degree < 0 || degree > top_degree_) {
    throw ConfigError("degree out of range for ring '" + name_ + "'");
  }
  return tables_[degree].basis;
}

Rat RingPresentation::integrate(const PolyClass& p) const {
  if (p.ring().get() != this) {
    throw ConfigError("class does not live in ring '" + name_ + "'");
  }
  Rat total = 0;
  for (const auto& [m, c] : p.terms()) {
    if (degree_of(m) == top_degree_) {
      total += c * integral_.at(m);  // top component is in normal form
    }
  }
  return total;
}

PolyClass RingPresentation::zero() const { return PolyClass(shared_from_this()); }

PolyClass RingPresentation::one() const {
  return PolyClass::constant(shared_from_this(), 1);
}

PolyClass RingPresentation::gen(std::size_t index) const {
  return PolyClass::generator(shared_from_this(), index);
}

PolyClass RingPresentation::gen(std::string_view generator_name) const {
  return PolyClass::generator(shared_from_this(), generator_index(generator_name));
}

void RingPresentation::reduce_slice(int degree, std::map<Monomial, Rat>& slice) const {
  const DegreeTable& table = tables_[degree];
  if (table.rows.empty()) {
    return;
  }
  // Densify over the degree's monomial columns, apply the reduction rows
  // (each clears exactly its pivot column), and sparsify the remainder.
  std::vector<Rat> dense(table.monos.size(), Rat(0));
  for (const auto& [m, c] : slice) {
    dense[table.column.at(m)] = c;
  }
  for (const ReductionRow& row : table.rows) {
    const Rat t = dense[row.pivot];
    if (t == 0) {
      continue;
    }
    for (std::size_t j = 0; j < dense.size(); ++j) {
      if (row.coef[j] != 0) {
        dense[j] -= t * row.coef[j];
      }
    }
  }
  slice.clear();
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] != 0) {
      slice.emplace(table.monos[j], std::move(dense[j]));
    }
  }
}

void RingPresentation::build_tables(const std::vector<TermList>& relations) {
  // Validate the relations: homogeneous, positive degree, matching width.
  struct RawRelation {
    int degree;
    std::map<Monomial, Rat> terms;
  };
  std::vector<RawRelation> raw;
  for (const TermList& rel : relations) {
    RawRelation r{-1, {}};
    for (const Term& t : rel) {
      if (t.exps.size() != generators_.size()) {
        throw ConfigError("relation exponent width does not match ring '" + name_ + "'");
      }
      if (t.coef == 0) {
        continue;
      }
      const int d = degree_of(t.exps);
      if (r.degree == -1) {
        r.degree = d;
      } else if (r.degree != d) {
        throw ConfigError("relations of ring '" + name_ + "' must be homogeneous");
      }
      r.terms[t.exps] += t.coef;
    }
    if (r.degree == -1) {
      throw ConfigError("empty relation in ring '" + name_ + "'");
    }
    if (r.degree == 0) {
      throw ConfigError("degree-0 relation would collapse ring '" + name_ + "'");
    }
    raw.push_back(std::move(r));
  }

  tables_.resize(top_degree_ + 1);
  for (int d = 0; d <= top_degree_; ++d) {
    DegreeTable& table = tables_[d];
    Monomial scratch(generators_.size(), 0);
    append_monomials(generators_, 0, d, scratch, table.monos);
    for (unsigned j = 0; j < table.monos.size(); ++j) {
      table.column.emplace(table.monos[j], j);
    }

    // Span of the relation ideal in degree d: each relation of degree e <= d
    // multiplied by every monomial of degree d - e.
    std::vector<std::vector<Rat>> rows;
    for (const RawRelation& rel : raw) {
      if (rel.degree > d) {
        continue;
      }
      Monomial shift_scratch(generators_.size(), 0);
      std::vector<Monomial> shifts;
      append_monomials(generators_, 0, d - rel.degree, shift_scratch, shifts);
      for (const Monomial& s : shifts) {
        std::vector<Rat> row(table.monos.size(), Rat(0));
        for (const auto& [m, c] : rel.terms) {
          Monomial shifted(m.size());
          for (std::size_t i = 0; i < m.size(); ++i) {
            shifted[i] = m[i] + s[i];
          }
          row[table.column.at(shifted)] += c;
        }
        rows.push_back(std::move(row));
      }
    }

    // Exact reduced row echelon form. Columns are scanned left to right, and
    // the monomials are stored in descending graded-lex order, so pivots land
    // on the lexicographically largest monomials.
    std::size_t next_row = 0;
    std::vector<unsigned> pivot_cols;
    for (unsigned c = 0; c < table.monos.size() && next_row < rows.size(); ++c) {
      std::size_t pivot_row = next_row;
      while (pivot_row < rows.size() && rows[pivot_row][c] == 0) {
        ++pivot_row;
      }
      if (pivot_row == rows.size()) {
        continue;
      }
      std::swap(rows[next_row], rows[pivot_row]);
      const Rat inv = Rat(1) / rows[next_row][c];
      for (Rat& v : rows[next_row]) {
        v *= inv;
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == next_row || rows[i][c] == 0) {
          continue;
        }
        const Rat t = rows[i][c];
        for (unsigned j = 0; j < table.monos.size(); ++j) {
          if (rows[next_row][j] != 0) {
            rows[i][j] -= t * rows[next_row][j];
          }
        }
      }
      pivot_cols.push_back(c);
      ++next_row;
    }

    std::vector<bool> is_pivot(table.monos.size(), false);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      is_pivot[pivot_cols[i]] = true;
      table.rows.push_back(ReductionRow{pivot_cols[i], std::move(rows[i])});
    }
    for (unsigned j = 0; j < table.monos.size(); ++j) {
      if (!is_pivot[j]) {
        table.basis.push_back(table.monos[j]);
      }
    }
  }

  if (tables_[0].basis.size() != 1) {
    throw ConfigError("ring '" + name_ + "' does not have a one-dimensional degree-0 part");
  }
}

}  // namespace conewright::ring
