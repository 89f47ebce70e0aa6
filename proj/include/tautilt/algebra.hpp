// Quivers with relations and their compiled based algebras.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautilt/exactla.hpp"

namespace tautilt {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int source = 0;  // 0-based
  int target = 0;
};

struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;
  int arrow_index(std::string_view name) const;  // -1 when absent
};

/// Arrow indices in traversal order: {a, c} is "a then c", written c*a.
using Path = std::vector<int>;

struct Relation {
  std::vector<std::pair<Scalar, Path>> terms;
};

struct AlgebraSpec {
  std::string name;
  Quiver quiver;
  std::vector<Relation> relations;
};

/// Parse the text format:
///   name: <word>                (optional)
///   vertices: n
///   arrows:
///     a: 1 -> 2
///   relations: c*a - c*b, b2*a1
/// '#' starts a comment.
AlgebraSpec parse_algebra(std::string_view text);

struct BasisElement {
  int source = 0;
  int target = 0;
  std::string label;
};

/// One term of a basis element written as a linear combination of
/// products of generators; `word` lists generators in order of application.
struct WordTerm {
  Scalar coeff;
  std::vector<int> word;
};

using SparseVec = std::vector<std::pair<int, Scalar>>;

/// Finite-dimensional basic algebra: basis elements are homogeneous for the
/// vertex grading (e_t b e_s = b), the first n are the idempotents e_1..e_n.
/// Product convention: x*y means "y then x"; e_t * b * e_s = b for b: s -> t.
class BasedAlgebra {
 public:
  /// Validates the table (idempotent laws, grading, associativity), picks
  /// generators spanning rad/rad^2 when `generators` is empty, and expresses
  /// every basis element through generator words.
  BasedAlgebra(std::string name, int rank, std::vector<BasisElement> basis,
               std::vector<std::vector<SparseVec>> mult, std::vector<int> generators = {});

  const std::string& name() const { return name_; }
  int rank() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int b) const { return basis_[b]; }
  const SparseVec& product(int x, int y) const { return mult_[x][y]; }
  const std::vector<int>& generators() const { return gens_; }
  const std::vector<WordTerm>& expansion(int b) const { return expand_[b]; }
  bool is_idempotent(int b) const { return b < n_; }
  int find_label(std::string_view label) const;  // -1 when absent

  /// Dense product of elements given in basis coordinates.
  Vec multiply(const Vec& x, const Vec& y) const;
  /// Basis elements b with source s and target t.
  std::vector<int> block(int s, int t) const;
  /// Radical layers: basis indices of rad^k, computed from generators.
  int loewy_length() const;

 private:
  void audit() const;
  void choose_generators();
  void compute_expansions();

  std::string name_;
  int n_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<SparseVec>> mult_;
  std::vector<int> gens_;
  std::vector<std::vector<WordTerm>> expand_;
};

using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

/// Path algebra modulo an admissible ideal. Throws AlgebraError when the
/// relations are not admissible or the path closure exceeds `path_cap`.
AlgebraPtr compile(const AlgebraSpec& spec, int path_cap = 30);
AlgebraPtr compile_text(std::string_view text, int path_cap = 30);

/// Opposite algebra: same basis, source/target swapped, x*y := y*x.
AlgebraPtr opposite(const BasedAlgebra& a);

/// True when a vertex permutation together with a permutation of the
/// remaining basis elements identifies the two multiplication tables.
bool isomorphic_tables(const BasedAlgebra& a, const BasedAlgebra& b);

}  // namespace tautilt
