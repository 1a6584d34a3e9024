#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qred/algebra.hpp"
#include "qred/rep.hpp"

namespace qred::testing {

/// The fixture directory of the source tree.
std::string fixture_dir();

/// Loads a fixture by name (e.g. "FIX-A44") from the source tree.
AlgebraHandle fixture(const std::string &name);

/// Completes a presentation given in the algebra text format.
AlgebraHandle algebra_from_text(const std::string &text);

struct RandomShape {
    std::size_t max_vertices = 4;
    std::size_t max_arrows = 6;
    std::size_t max_relations = 4;
    std::uint32_t prime = 5;
};

/// A random admissible presentation (monomial and binomial relations of
/// length >= 2), retried until completion certifies finite dimension.
AlgebraHandle random_algebra(std::mt19937_64 &rng, const RandomShape &shape = {});

/// Submodule of `m` generated by vectors at vertices, as per-vertex bases.
Subspaces generated_submodule(const Rep &m, const std::vector<std::pair<VertexId, Vec>> &generators);

/// A random quotient of a direct sum of up to `max_summands` indecomposable
/// projectives by a submodule with up to `max_generators` random generators.
Rep random_module(const AlgebraHandle &a, std::mt19937_64 &rng, std::size_t max_summands = 2,
                  std::size_t max_generators = 2);

Vec random_vec(const Field &f, std::size_t n, std::mt19937_64 &rng);

/// Every path of kQ of length < max_len, in no particular order.
std::vector<Path> all_paths(const Quiver &q, std::size_t max_len);

/// dim kQ/I by linear algebra in the truncated path space kQ / J^max_len,
/// valid whenever J^max_len lies in I. Independent of the rewriting system.
std::size_t truncated_quotient_dim(const Presentation &p, std::size_t max_len);

/// Number of minimal relations from s to t read off a minimal resolution:
/// the multiplicity of P_t in the second term of the resolution of S_s.
std::size_t second_syzygy_tops(const AlgebraHandle &a, VertexId s, VertexId t);

} // namespace qred::testing
