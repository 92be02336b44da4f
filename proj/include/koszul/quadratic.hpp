#pragma once

// Quadratic presentations (V, R) with R a subspace of V (x) V, and the graded
// pieces they generate: components of the two-sided ideal (R), components of
// the coalgebra cut out by R, Hilbert dimensions, the quadratic dual on the
// annihilator of R, and quotients by degree-one subspaces.
//
// Tensor words of length n over dim_v letters are ordered lexicographically;
// the word (w_0, ..., w_{n-1}) sits at index sum w_t * dim_v^{n-1-t}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/f2.hpp"

namespace koszul {

// largest dense tensor-word space the library will materialize
inline constexpr std::uint64_t kMaxAmbient = std::uint64_t{1} << 20;

// dim_v^n, guarded against kMaxAmbient
std::uint64_t tensor_power_dim(std::size_t dim_v, std::size_t n);

struct QuadraticPresentation {
  std::size_t dim_v = 0;
  std::vector<std::string> generator_names;  // size dim_v
  Subspace relations;                        // subspace of V (x) V, ambient dim_v^2

  friend bool operator==(const QuadraticPresentation&, const QuadraticPresentation&) = default;
};

// Canonicalizes the relation rows and fills in default names x1..xd when none
// are given. Throws schema_error on inconsistent sizes.
QuadraticPresentation make_presentation(std::size_t dim_v, const BitMatrix& relation_rows,
                                        std::vector<std::string> names = {});
QuadraticPresentation make_presentation(std::size_t dim_v, const Subspace& relations,
                                        std::vector<std::string> names = {});

QuadraticPresentation free_presentation(std::size_t d);
QuadraticPresentation square_zero_presentation(std::size_t d);
QuadraticPresentation exterior_presentation(std::size_t n);
QuadraticPresentation polynomial_presentation(std::size_t n);

using GradedDims = std::vector<std::uint64_t>;

// degree-n component of the two-sided ideal generated by R: the sum of the
// embeddings V^i (x) R (x) V^j over i + j = n - 2
Subspace ideal_component(const QuadraticPresentation& q, std::size_t n);

// degree-n component of the coalgebra cut out by R: the intersection of the
// same embeddings
Subspace coalgebra_component(const QuadraticPresentation& q, std::size_t n);

GradedDims algebra_dims(const QuadraticPresentation& q, std::size_t max_n);
GradedDims coalgebra_dims(const QuadraticPresentation& q, std::size_t max_n);

// (V, R) -> (V, R^perp); an involution
QuadraticPresentation quadratic_dual(const QuadraticPresentation& q);

struct HilbertCheck {
  bool pass = false;
  std::optional<std::size_t> first_failure;  // lowest degree where the product misses 1
  GradedDims algebra;
  GradedDims dual;
};

// verifies H_A(t) * H_{A^dual}(-t) == 1 coefficientwise up to degree max_n
HilbertCheck hilbert_product_check(const QuadraticPresentation& q, std::size_t max_n);

// presentation of the quotient algebra by the two-sided ideal generated by a
// degree-one subspace u: generators V/u, relations the image of R
QuadraticPresentation quotient_by_degree_one(const QuadraticPresentation& q, const Subspace& u);

// The algebra T(V)/(R) computed degree by degree up to a cap: ideal
// components, a standard-monomial basis of each quotient component, and
// products of standard monomials expressed on that basis. Standard monomials
// are the tensor words away from the pivot columns of the ideal.
class GradedAlgebra {
 public:
  GradedAlgebra(QuadraticPresentation q, std::size_t max_degree);

  const QuadraticPresentation& presentation() const { return q_; }
  std::size_t max_degree() const { return max_degree_; }

  std::uint64_t dim(std::size_t n) const { return words_[n].size(); }
  const Subspace& ideal_at(std::size_t n) const { return ideal_[n]; }
  const std::vector<std::uint64_t>& basis_words(std::size_t n) const { return words_[n]; }

  // coordinates, on the degree-(a+b) standard basis, of the product of the
  // u-th standard monomial of degree a with the v-th of degree b
  std::vector<word_t> product(std::size_t a, std::size_t u, std::size_t b, std::size_t v) const;

 private:
  QuadraticPresentation q_;
  std::size_t max_degree_;
  std::vector<std::uint64_t> pow_;                 // dim_v^n
  std::vector<Subspace> ideal_;                    // per degree
  std::vector<std::vector<std::uint64_t>> words_;  // standard monomial words per degree
  std::vector<std::vector<std::int64_t>> code_;    // word -> monomial position, or -(row+1)
  std::vector<BitMatrix> rewrite_;                 // ideal pivot rows on the standard basis
};

}  // namespace koszul
