#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/checkers.hpp"
#include "bihom/error.hpp"
#include "bihom/linalg.hpp"
#include "bihom/parallel.hpp"
#include "bihom/quasitriangular.hpp"
#include "bihom/tensors.hpp"

namespace bihom {

/// Basis of all D with D(e_i*e_j) = D(e_i)*tau(e_j) + sigma(e_i)*D(e_j),
/// found as the exact nullspace of the linear system the condition imposes
/// on the n^2 matrix entries of D.
inline std::vector<LinearOperator> derivation_space(const StructureBundle& b,
                                                    const LinearOperator& tau,
                                                    const LinearOperator& sigma,
                                                    const std::string& prod =
                                                        "mul") {
    const BilinearProduct& mul = b.product(prod);
    std::size_t n = b.dim;
    LinearOperator system(n * n * n, n * n, b.field);
    for (std::size_t i = 0; i < n; ++i) {
        Vec sigma_i = sigma.apply(b.basis(i));
        for (std::size_t j = 0; j < n; ++j) {
            Vec tau_j = tau.apply(b.basis(j));
            std::size_t row0 = (i * n + j) * n;
            // D(e_i * e_j): coefficient of D[k][c] is (e_i*e_j)_c.
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t k = 0; k < n; ++k)
                    system.at(row0 + k, k * n + c) += mul.at(i, j, c);
            // -D(e_i)*tau(e_j): D(e_i) = sum_r D[r][i] e_r.
            for (std::size_t r = 0; r < n; ++r) {
                Vec term = mul.mul(basis_vec(n, r, b.field), tau_j);
                for (std::size_t k = 0; k < n; ++k)
                    system.at(row0 + k, r * n + i) -= term[k];
            }
            // -sigma(e_i)*D(e_j): D(e_j) = sum_r D[r][j] e_r.
            for (std::size_t r = 0; r < n; ++r) {
                Vec term = mul.mul(sigma_i, basis_vec(n, r, b.field));
                for (std::size_t k = 0; k < n; ++k)
                    system.at(row0 + k, r * n + j) -= term[k];
            }
        }
    }
    std::vector<Vec> kernel = nullspace(system);
    std::vector<LinearOperator> basis;
    basis.reserve(kernel.size());
    for (const Vec& v : kernel) {
        LinearOperator D(n, n, b.field);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) D.at(r, c) = v[r * n + c];
        basis.push_back(std::move(D));
    }
    return basis;
}

inline std::vector<LinearOperator> derivation_space(
    const StructureBundle& b, const std::string& tau_name = "",
    const std::string& sigma_name = "", const std::string& prod = "mul") {
    LinearOperator id = LinearOperator::identity(b.dim, b.field);
    const LinearOperator& tau = tau_name.empty() ? id : b.map(tau_name);
    const LinearOperator& sigma = sigma_name.empty() ? id : b.map(sigma_name);
    return derivation_space(b, tau, sigma, prod);
}

namespace detail {

inline std::vector<FieldScalar> field_elements(const FieldDescriptor& field) {
    if (field.kind != FieldKind::PrimeField)
        throw InvariantViolation("enumeration needs a finite field");
    std::vector<FieldScalar> out;
    for (std::int64_t v = 0; v < field.characteristic; ++v)
        out.push_back(FieldScalar::from_int(v, field));
    return out;
}

inline void check_space(std::size_t cells, std::int64_t q,
                        std::size_t max_candidates) {
    long double total = 1.0L;
    for (std::size_t i = 0; i < cells; ++i) {
        total *= static_cast<long double>(q);
        if (total > static_cast<long double>(max_candidates))
            throw SpaceTooLarge("candidate space exceeds the ceiling of " +
                                std::to_string(max_candidates));
    }
}

/// Fills `cells` scalar slots from the base-q digits of `index`, most
/// significant digit first, so increasing indices walk the space in
/// lexicographic order over the flat entry list.
inline std::vector<FieldScalar> digits_of(std::size_t index, std::size_t cells,
                                          const std::vector<FieldScalar>& elems) {
    std::vector<FieldScalar> out(cells, elems[0]);
    std::size_t q = elems.size();
    for (std::size_t pos = cells; pos-- > 0;) {
        out[pos] = elems[index % q];
        index /= q;
    }
    return out;
}

inline std::size_t pow_count(std::int64_t q, std::size_t cells) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i)
        total *= static_cast<std::size_t>(q);
    return total;
}

} // namespace detail

struct MorphismConstraints {
    std::vector<std::string> commutes_with;
    bool invertible = false;
    bool coalgebra_morphism = false;
    std::size_t max_candidates = std::size_t{1} << 24;
    std::size_t max_results = 0;  // 0 = unlimited
};

/// All matrices multiplicative for every product of the bundle (and, when
/// requested, coalgebra morphisms for every comultiplication), in
/// lexicographic order over the row-major matrix entries.
inline std::vector<LinearOperator> enumerate_morphisms(
    const StructureBundle& b, const MorphismConstraints& constraints = {}) {
    std::vector<FieldScalar> elems = detail::field_elements(b.field);
    std::size_t cells = b.dim * b.dim;
    detail::check_space(cells, b.field.characteristic,
                        constraints.max_candidates);
    std::size_t total = detail::pow_count(b.field.characteristic, cells);
    std::vector<LinearOperator> commute_targets;
    for (const auto& name : constraints.commutes_with)
        commute_targets.push_back(b.map(name));
    std::vector<LinearOperator> found = parallel_collect<LinearOperator>(
        total, [&](std::size_t index, std::vector<LinearOperator>& out) {
            std::vector<FieldScalar> entries =
                detail::digits_of(index, cells, elems);
            LinearOperator M(b.dim, b.dim, b.field);
            for (std::size_t r = 0; r < b.dim; ++r)
                for (std::size_t c = 0; c < b.dim; ++c)
                    M.at(r, c) = entries[r * b.dim + c];
            for (const auto& [name, prod] : b.products) {
                (void)name;
                if (!is_multiplicative(M, prod)) return;
            }
            if (constraints.coalgebra_morphism)
                for (const auto& [name, comul] : b.comuls) {
                    (void)name;
                    if (!is_comultiplicative(M, comul)) return;
                }
            for (const auto& target : commute_targets)
                if (!M.commutes_with(target)) return;
            if (constraints.invertible && !M.is_invertible()) return;
            out.push_back(std::move(M));
        });
    if (constraints.max_results && found.size() > constraints.max_results)
        found.resize(constraints.max_results);
    return found;
}

enum class RSearchMode { Aybe, Central };

/// All coefficient tensors passing the invariance conditions and the
/// selected Yang-Baxter or centrality check, in lexicographic order.
inline std::vector<RMatrix> enumerate_r(
    const StructureBundle& b, RSearchMode mode,
    std::size_t max_candidates = std::size_t{1} << 24) {
    std::vector<FieldScalar> elems = detail::field_elements(b.field);
    std::size_t cells = b.dim * b.dim;
    detail::check_space(cells, b.field.characteristic, max_candidates);
    std::size_t total = detail::pow_count(b.field.characteristic, cells);
    return parallel_collect<RMatrix>(
        total, [&](std::size_t index, std::vector<RMatrix>& out) {
            std::vector<FieldScalar> entries =
                detail::digits_of(index, cells, elems);
            Tensor2 t(b.dim, b.field);
            for (std::size_t i = 0; i < b.dim; ++i)
                for (std::size_t j = 0; j < b.dim; ++j)
                    t.at(i, j) = entries[i * b.dim + j];
            RMatrix rm;
            try {
                rm = make_rmatrix(b, t);
            } catch (const InvarianceFailed&) {
                return;
            }
            CheckReport verdict = mode == RSearchMode::Aybe
                                      ? check_aybe(b, rm)
                                      : check_centrality(b, rm);
            if (verdict.passed) out.push_back(std::move(rm));
        });
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace detail

struct ScanSpec {
    FieldDescriptor field = FieldDescriptor::prime(2);
    std::size_t dim = 2;
    std::function<bool(const StructureBundle&)> filter;
    LinearOperator alpha;
    LinearOperator beta;
    bool randomized = false;
    std::uint64_t seed = 0;
    // Exhaustive mode: ceiling on the q^(n^3) space.  Randomized mode: how
    // many independent samples to draw.
    std::size_t max_candidates = std::size_t{1} << 24;
    std::size_t max_results = 0;  // 0 = unlimited
};

/// Streams bundles whose "mul" structure constants walk the full q^(n^3)
/// space lexicographically, or are sampled from it with a seeded generator,
/// and survive the filter.  The given alpha and beta are attached to every
/// candidate; default-constructed operators mean the identity.  Output order
/// is deterministic for a fixed spec regardless of worker count.
inline std::vector<StructureBundle> scan_products(const ScanSpec& spec) {
    std::vector<FieldScalar> elems = detail::field_elements(spec.field);
    std::size_t q = elems.size();
    std::size_t cells = spec.dim * spec.dim * spec.dim;
    LinearOperator alpha = spec.alpha.rows() == spec.dim
                               ? spec.alpha
                               : LinearOperator::identity(spec.dim, spec.field);
    LinearOperator beta = spec.beta.rows() == spec.dim
                              ? spec.beta
                              : LinearOperator::identity(spec.dim, spec.field);
    auto build = [&](const std::vector<FieldScalar>& entries) {
        StructureBundle cand;
        cand.field = spec.field;
        cand.dim = spec.dim;
        BilinearProduct mul(spec.dim, spec.field);
        std::size_t flat = 0;
        for (std::size_t i = 0; i < spec.dim; ++i)
            for (std::size_t j = 0; j < spec.dim; ++j)
                for (std::size_t k = 0; k < spec.dim; ++k)
                    mul.at(i, j, k) = entries[flat++];
        cand.products["mul"] = std::move(mul);
        cand.maps["alpha"] = alpha;
        cand.maps["beta"] = beta;
        return cand;
    };
    std::vector<StructureBundle> found;
    if (!spec.randomized) {
        detail::check_space(cells, spec.field.characteristic,
                            spec.max_candidates);
        std::size_t total = detail::pow_count(spec.field.characteristic, cells);
        found = parallel_collect<StructureBundle>(
            total, [&](std::size_t index, std::vector<StructureBundle>& out) {
                StructureBundle cand =
                    build(detail::digits_of(index, cells, elems));
                if (spec.filter && !spec.filter(cand)) return;
                out.push_back(std::move(cand));
            });
    } else {
        found = parallel_collect<StructureBundle>(
            spec.max_candidates,
            [&](std::size_t index, std::vector<StructureBundle>& out) {
                std::mt19937_64 rng(detail::mix_seed(spec.seed, index));
                std::vector<FieldScalar> entries(cells, elems[0]);
                for (auto& e : entries) e = elems[rng() % q];
                StructureBundle cand = build(entries);
                if (spec.filter && !spec.filter(cand)) return;
                out.push_back(std::move(cand));
            });
    }
    if (spec.max_results && found.size() > spec.max_results)
        found.resize(spec.max_results);
    return found;
}

} // namespace bihom
