#pragma once

/**
 * @file constraints.hpp
 * @brief Integration-by-parts constraint generation and exact elimination.
 *
 * An equational constraint R is a degree-4 / total-order-4 form with
 * integral(u^(3p-6) R) = 0; it arises by peeling one derivative off a seed
 * monomial and integrating by parts, the boundary term vanishing for
 * rapidly decaying densities. The inequality constraint I1 comes from the
 * trace inequality |Hess f|^2 >= (Laplacian f)^2 / n.
 */

#include <crep/diffform.hpp>

#include <optional>
#include <string>
#include <vector>

namespace crep {

struct Constraint {
    enum class Kind { equational, inequality };
    DiffForm form;
    Kind kind = Kind::equational;
    std::string label;
};

struct ConstraintSet {
    std::vector<Constraint> equational;
    std::vector<Constraint> inequality;
};

struct SplitSet {
    std::vector<Constraint> quadratic;     // rows with quadratic monomials only
    std::vector<Constraint> nonquadratic;  // rows led by a non-quadratic monomial
};

/// One integration-by-parts step: peels one copy of `peel` off `seed` along
/// `axis` (the peeled factor must have order >= 1 there) and returns
/// seed + u^(6-3p) * w * d/dx(u^(3p-6) * seed / peel), w the antiderivative.
DiffForm generate_ibp(const DiffMonomial& seed, const DerivSymbol& peel, Axis axis);

/// Enumerates all (seed, peel, axis) choices over the degree-4 monomials of
/// the two-axis jet space, deduplicates by exact form, and labels the output
/// against the known 28-constraint list where it matches. Also carries I1.
ConstraintSet generate_all_constraints();

/// The trace-inequality constraint I1_{a,b}, fully expanded.
Constraint trace_constraint();

/// The 28 published equational constraints R_{1..28,a,b} (transcribed).
const std::vector<Constraint>& appendix_constraints();

/// The published Gaussian-elimination results: Rhat_{1..9} (quadratic) and
/// Rtilde_{1..13} (one non-quadratic head each).
const std::vector<Constraint>& paper_quadratic_rows();
const std::vector<Constraint>& paper_nonquadratic_rows();

/// Reduced row echelon form over the rational-function field, heads chosen
/// by the monomial order (non-quadratic monomials eliminate first). Rows
/// come back monic with pairwise distinct heads, in descending head order.
std::vector<DiffForm> echelonize(const std::vector<DiffForm>& rows);

/// Fraction-free style elimination of the equational constraints, split into
/// all-quadratic rows and rows led by one non-quadratic monomial.
SplitSet gaussian_split(const ConstraintSet& cs);

/// Membership test against an echelonized basis.
bool in_span(const DiffForm& f, const std::vector<DiffForm>& echelon);

struct ReduceResult {
    DiffForm normal_form;
    std::vector<std::pair<std::string, RatFunc>> multipliers;  // label -> factor
};

/// Reduces f against the split rows (non-quadratic heads first), recording
/// multipliers so that f = sum(multiplier * row) + normal_form exactly.
ReduceResult span_reduce(const DiffForm& f, const SplitSet& basis);

/// Solves f = sum(x_i * basis_i) exactly; empty when f is outside the span.
std::optional<std::vector<RatFunc>> decompose_over(
    const DiffForm& f, const std::vector<DiffForm>& basis);

}  // namespace crep
