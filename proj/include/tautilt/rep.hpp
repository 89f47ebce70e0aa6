// Modules over a BasedAlgebra, their morphisms, and the interned registry of
// indecomposables.
#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"

namespace tautilt {

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A left module: vector spaces at the vertices and, for every basis element
/// b: s -> t, a dims[t] x dims[s] matrix.
struct Rep {
  AlgebraPtr algebra;
  std::vector<int> dims;
  std::vector<Mat> action;

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::vector<int> offsets() const;
  /// Action of basis element b on the whole space, as a block matrix.
  Mat full_action(int b) const;
};

/// Module homomorphism, one block per vertex (target dims x source dims).
struct RepMor {
  std::vector<Mat> blocks;
  Mat full(const Rep& source, const Rep& target) const;
};

Rep zero_rep(const AlgebraPtr& a);
Rep projective_rep(const AlgebraPtr& a, int v);   // A e_v
Rep injective_rep(const AlgebraPtr& a, int v);    // D(e_v A)
Rep simple_rep(const AlgebraPtr& a, int v);
/// Module over opposite(a) given as `op`, dual to x.
Rep dualize(const Rep& x, const AlgebraPtr& op);
RepMor dualize(const RepMor& f);
/// Module from generator actions; fills in every basis element through the
/// generator expansions and checks the relations.
Rep from_generators(const AlgebraPtr& a, std::vector<int> dims, const std::vector<Mat>& generator_actions);
/// Throws std::invalid_argument unless x is a module for its algebra.
void validate(const Rep& x);

RepMor identity(const Rep& x);
RepMor zero_mor(const Rep& x, const Rep& y);
RepMor compose(const RepMor& g, const RepMor& f);  // g after f
RepMor add(const RepMor& f, const RepMor& g);
RepMor scale(const RepMor& f, const Scalar& c);
RepMor combine(const std::vector<RepMor>& fs, const std::vector<Scalar>& coeffs, const Rep& x, const Rep& y);
bool is_zero(const RepMor& f);
bool is_mono(const RepMor& f);
bool is_epi(const RepMor& f);
bool is_iso(const RepMor& f);
bool is_morphism(const RepMor& f, const Rep& x, const Rep& y);
RepMor inverse(const RepMor& f);
/// Flatten / unflatten a morphism to a vector (vertex blocks, row-major).
Vec flatten(const RepMor& f);
RepMor unflatten(const Vec& v, const Rep& x, const Rep& y);

std::vector<RepMor> hom_basis(const Rep& x, const Rep& y);
int hom_dim(const Rep& x, const Rep& y);

struct SubRep {
  Rep rep;
  RepMor map;  // inclusion into, or projection from, the ambient module
};

SubRep kernel(const RepMor& f, const Rep& x, const Rep& y);
SubRep cokernel(const RepMor& f, const Rep& x, const Rep& y);
SubRep image(const RepMor& f, const Rep& x, const Rep& y);

/// Per-vertex subspaces of a module.
using VertexSpaces = std::vector<Subspace>;

/// Smallest submodule containing the given vectors (columns per vertex).
SubRep subrep_from_vectors(const Rep& x, const std::vector<Mat>& gens);
/// Submodule given by per-vertex subspaces that are already closed.
SubRep subrep_of(const Rep& x, const VertexSpaces& s);
SubRep quotient_by_subrep(const Rep& x, const VertexSpaces& s);
VertexSpaces closure(const Rep& x, VertexSpaces s);

struct DirectSum {
  Rep rep;
  std::vector<RepMor> inj, proj;
};
DirectSum direct_sum(const std::vector<Rep>& parts);
Rep power(const Rep& x, int k);

/// rad X = sum of images of all non-idempotent basis elements.
VertexSpaces radical(const Rep& x);
std::vector<int> top_dims(const Rep& x);
/// Sum of the images of all morphisms m -> x.
VertexSpaces trace_spaces(const Rep& m, const Rep& x);
SubRep trace_in(const Rep& m, const Rep& x);
/// x / (intersection of kernels of all morphisms x -> m).
SubRep reject_in(const Rep& m, const Rep& x);

/// Endomorphism algebra data: a Hom basis and the radical via the trace form.
struct EndData {
  std::vector<RepMor> basis;
  std::vector<Vec> radical;  // coordinate vectors w.r.t. basis
  int dim() const { return static_cast<int>(basis.size()); }
  int top_dim() const { return dim() - static_cast<int>(radical.size()); }
};
EndData endomorphisms(const Rep& x);
/// Radical of a finite-dimensional algebra of matrices via the trace form;
/// valid in characteristic 0 or large p.
std::vector<Vec> trace_form_radical(const std::vector<Mat>& elems);

using Rng = std::mt19937_64;

/// Invertible morphism x -> y when one is found by seeded search.
std::optional<RepMor> find_iso(const Rep& x, const Rep& y, Rng& rng);
bool iso(const Rep& x, const Rep& y, Rng& rng);

/// Splits x into indecomposable summands (with inclusion maps whose sum is
/// an isomorphism). Throws DecompositionError when no split is found for a
/// decomposable-looking module (division algebra obstruction over Q).
std::vector<SubRep> split_indecomposables(const Rep& x, Rng& rng);
bool is_indecomposable(const Rep& x, Rng& rng);

/// True when x has a filtration with subquotients among s.
bool filt_member(const Rep& x, const std::vector<Rep>& s, Rng& rng, int budget = 20000);

/// Strong id of an interned indecomposable.
struct IndecId {
  int value = -1;
  auto operator<=>(const IndecId&) const = default;
};

/// Interned indecomposables; the first representative seen for an
/// isomorphism class is kept. Guarded for concurrent readers.
class Registry {
 public:
  explicit Registry(AlgebraPtr a) : algebra_(std::move(a)) {}
  /// Returns the id of x (registering it when new) and an isomorphism from
  /// the stored representative to x.
  std::pair<IndecId, RepMor> intern(const Rep& indecomposable, Rng& rng);
  std::optional<std::pair<IndecId, RepMor>> find(const Rep& x, Rng& rng) const;
  const Rep& rep(IndecId id) const;
  std::size_t size() const;

 private:
  AlgebraPtr algebra_;
  mutable std::shared_mutex mu_;
  std::deque<Rep> reps_;
  std::map<std::vector<int>, std::vector<int>> by_dims_;
};

/// A summand id together with its isomorphism into the decomposed module.
struct Summand {
  IndecId id;
  RepMor inclusion;
};

/// The category mod A for one algebra: registry, seeded randomness and the
/// standard objects. Higher layers hang their caches off this object.
class ModuleCategory {
 public:
  explicit ModuleCategory(AlgebraPtr a, std::uint64_t seed = 0);
  ModuleCategory(const ModuleCategory&) = delete;
  ModuleCategory& operator=(const ModuleCategory&) = delete;
  ~ModuleCategory();

  const BasedAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  int rank() const { return algebra_->rank(); }
  Rng& rng() { return rng_; }
  std::uint64_t seed() const { return seed_; }
  Registry& registry() { return registry_; }
  const Rep& rep(IndecId id) const { return registry_.rep(id); }
  std::vector<int> dims(IndecId id) const { return rep(id).dims; }

  IndecId intern(const Rep& indecomposable);
  /// Sorted multiset of summand ids.
  std::vector<IndecId> decompose(const Rep& x);
  /// Decomposition with a certificate: the inclusions form an isomorphism
  /// from the direct sum of representatives onto x.
  std::vector<Summand> decompose_certified(const Rep& x);
  Rep sum_of(const std::vector<IndecId>& ids) const;

  IndecId projective(int v);
  IndecId injective(int v);
  IndecId simple(int v);
  /// Vertex v when id is the projective P(v).
  std::optional<int> projective_vertex(IndecId id);
  bool is_projective(IndecId id) { return projective_vertex(id).has_value(); }
  std::optional<int> injective_vertex(IndecId id);
  std::optional<int> simple_vertex(IndecId id);
  /// Display name: P(i), S(i) or M(d1,...,dn), with #id when ambiguous.
  std::string name(IndecId id);

  int hom_dim(IndecId x, IndecId y);

  /// Category over the opposite algebra, created on first use.
  ModuleCategory& opposite();

  /// Memo table for derived data owned by higher layers.
  struct Cache;
  Cache& cache() { return *cache_; }

 private:
  void ensure_standard();

  AlgebraPtr algebra_;
  std::uint64_t seed_;
  Rng rng_;
  Registry registry_;
  std::vector<IndecId> proj_, inj_, simp_;
  std::map<std::pair<int, int>, int> hom_dims_;
  std::unique_ptr<ModuleCategory> opposite_;
  std::unique_ptr<Cache> cache_;
  std::recursive_mutex mu_;
};

std::string dims_string(const std::vector<int>& d);

}  // namespace tautilt
