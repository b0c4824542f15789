#pragma once

#include <random>

#include "zigzag/derived.hpp"
#include "zigzag/quiver.hpp"

namespace zigzag {

// Seeded generators for the randomized verification suites. Everything is
// driven by one engine so runs are reproducible given the seed.
using Rng = std::mt19937_64;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, Rng& rng);
Matrix random_invertible(std::size_t n, std::uint32_t p, Rng& rng);
Matrix mat_inverse(const Matrix& m);

Barcode random_barcode(std::size_t n, std::size_t max_bars, Rng& rng);
GradedBarcode random_graded_barcode(std::size_t n, int degree_lo, int degree_hi,
                                    std::size_t max_bars, Rng& rng);

// Direct sum of interval modules conjugated by random basis changes at every
// vertex; decomposing it must recover exactly `bars`.
Representation scrambled_realization(const Barcode& bars, const QuiverAn& q, std::uint32_t p,
                                     Rng& rng);

Orientation random_orientation(std::size_t n, Rng& rng);

// A random element of Hom(M, N).
Morphism random_hom_element(const Representation& m, const Representation& n, Rng& rng);

Representation random_representation(const QuiverAn& q, std::uint32_t p, std::size_t max_bars,
                                     Rng& rng);

}  // namespace zigzag
