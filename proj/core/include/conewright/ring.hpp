#pragma once

#include <conewright/numeric.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace conewright::ring {

// A monomial is the exponent vector over the presentation's generators, in
// declaration order.
using Monomial = std::vector<unsigned>;

struct Generator {
  std::string name;
  int degree;  // positive grading weight
};

struct Term {
  Monomial exps;
  Rat coef;
};
using TermList = std::vector<Term>;

class RingPresentation;
using RingHandle = std::shared_ptr<const RingPresentation>;

// An element of a graded quotient ring, kept in normal form: every graded
// component is reduced against the relation ideal and components above the
// top degree are dropped (they vanish on the underlying space). Equality of
// elements is therefore plain coefficient equality.
class PolyClass {
 public:
  explicit PolyClass(RingHandle ring);  // the zero class
  static PolyClass constant(RingHandle ring, const Rat& value);
  static PolyClass generator(RingHandle ring, std::size_t index);
  static PolyClass from_terms(RingHandle ring, const TermList& terms);

  const RingHandle& ring() const { return ring_; }
  bool is_zero() const { return coef_.empty(); }
  // Largest degree with a nonzero coefficient; -1 for the zero class.
  int max_degree() const;
  bool is_homogeneous(int degree) const;
  PolyClass component(int degree) const;
  Rat constant_part() const;

  PolyClass operator-() const;
  PolyClass operator+(const PolyClass& rhs) const;
  PolyClass operator-(const PolyClass& rhs) const;
  PolyClass operator*(const PolyClass& rhs) const;
  PolyClass operator*(const Rat& scalar) const;
  PolyClass& operator+=(const PolyClass& rhs);
  PolyClass& operator-=(const PolyClass& rhs);
  PolyClass& operator*=(const PolyClass& rhs);
  bool operator==(const PolyClass& rhs) const;
  bool operator!=(const PolyClass& rhs) const { return !(*this == rhs); }

  PolyClass pow(unsigned exponent) const;
  // Multiplicative inverse of a class with nonzero degree-0 part, truncated
  // at the top degree.
  PolyClass inverse() const;

  const std::map<Monomial, Rat>& terms() const { return coef_; }
  std::string to_string() const;

 private:
  friend class RingPresentation;
  RingHandle ring_;
  std::map<Monomial, Rat> coef_;  // normal-form terms, zero coefficients erased

  void insert_reduced(const Monomial& m, const Rat& c);
  void reduce_all();
  static void require_same_ring(const PolyClass& a, const PolyClass& b);
};

inline PolyClass operator*(const Rat& scalar, const PolyClass& p) { return p * scalar; }

// A finitely presented graded ring with rational coefficients, together with
// an integration functional on the top-degree normal-form basis. Reduction
// works degree by degree: the degree-d slice of the relation ideal is spanned
// by (relation x complementary-degree monomial) products, and exact Gaussian
// elimination over the degree-d monomial span yields a reduced row-echelon
// table whose pivots eliminate the lexicographically largest monomials
// (graded-lex order, generators in declaration order).
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
 public:
  // relations: homogeneous elements of positive degree, given as raw terms.
  // integral: the value of the functional on each top-degree basis monomial;
  // every basis monomial must be covered.
  static RingHandle make(std::string name, std::vector<Generator> generators,
                         std::vector<TermList> relations, int top_degree,
                         TermList integral);

  const std::string& name() const { return name_; }
  int top_degree() const { return top_degree_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t generator_index(std::string_view generator_name) const;

  int degree_of(const Monomial& m) const;
  // All monomials of the given degree, descending graded-lex.
  const std::vector<Monomial>& monomials(int degree) const;
  // The normal-form basis monomials of the given degree, descending graded-lex.
  const std::vector<Monomial>& basis(int degree) const;

  // Integrates the top-degree component via the stored functional; classes
  // with no top-degree part integrate to zero.
  Rat integrate(const PolyClass& p) const;

  PolyClass zero() const;
  PolyClass one() const;
  PolyClass gen(std::size_t index) const;
  PolyClass gen(std::string_view generator_name) const;

 private:
  friend class PolyClass;
  RingPresentation() = default;

  struct ReductionRow {
    unsigned pivot;          // column eliminated by this row
    std::vector<Rat> coef;   // dense row over the degree's monomial columns
  };
  struct DegreeTable {
    std::vector<Monomial> monos;           // descending graded-lex
    std::map<Monomial, unsigned> column;   // monomial -> column index
    std::vector<ReductionRow> rows;        // reduced row-echelon form
    std::vector<Monomial> basis;           // non-pivot monomials
  };

  // Rewrites a raw degree-d slice (monomial -> coefficient) into normal form.
  void reduce_slice(int degree, std::map<Monomial, Rat>& slice) const;
  void build_tables(const std::vector<TermList>& relations);

  std::string name_;
  std::vector<Generator> generators_;
  int top_degree_ = 0;
  std::vector<DegreeTable> tables_;        // indexed by degree 0..top
  std::map<Monomial, Rat> integral_;       // on basis(top_degree_)
};

}  // namespace conewright::ring
