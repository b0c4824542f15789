#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zigzag/quiver.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

// Thrown when the interleaving oracle would exceed its enumeration budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generic bottleneck matching: minimize over partial matchings the maximum of
// matched pair costs and deletion costs of unmatched items.
struct BottleneckInstance {
    std::vector<std::vector<ExtRat>> pair_cost;  // |L| x |R|
    std::vector<ExtRat> left_delete;
    std::vector<ExtRat> right_delete;
};

bool bottleneck_feasible(const BottleneckInstance& inst, const ExtRat& delta,
                         std::vector<std::pair<std::size_t, std::size_t>>* witness = nullptr);

struct BottleneckOutcome {
    ExtRat value;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // witness at `value`
};

BottleneckOutcome bottleneck_solve(const BottleneckInstance& inst);

// A delta-matching witness between two barcodes: a partial pairing covering
// every bar of length >= 2*delta on both sides, with endpoints within delta.
struct DeltaMatching {
    int delta = 0;
    std::vector<std::pair<Interval, Interval>> pairs;
};

bool validate_delta_matching(const Barcode& b1, const Barcode& b2, const DeltaMatching& m);

std::optional<DeltaMatching> delta_matching_exists(const Barcode& b1, const Barcode& b2,
                                                   int delta);

ExtRat bottleneck_distance(const Barcode& b1, const Barcode& b2);

// Closed form for the interleaving distance between interval modules (or the
// zero module, passed as nullopt).
ExtRat interval_interleaving_distance(const std::optional<Interval>& i1,
                                      const std::optional<Interval>& i2);

std::uint64_t default_oracle_cap();  // 2^20, ZZM_ORACLE_CAP overrides

// Decides delta-interleaving over GF(2) by enumerating both Hom spaces.
bool brute_force_interleaved(const Representation& m, const Representation& n, int delta,
                             std::uint64_t max_pairs = default_oracle_cap());

int min_interleaving_delta_oracle(const Representation& m, const Representation& n,
                                  std::uint64_t max_pairs = default_oracle_cap());

// Interleaving distance of equioriented modules, computed through barcodes.
ExtRat interleaving_distance(const Representation& m, const Representation& n);

// The matching canonically induced by a morphism via its epi-mono
// factorization.
struct BarMatching {
    Barcode source;
    Barcode target;
    std::vector<std::pair<Interval, Interval>> pairs;
};

BarMatching induced_matching(const Morphism& f);

enum class ImtOutcome { holds, fails, precondition_violated };

// Checks that B(f) composed with the shift re-indexing is a delta-matching,
// after widening the ambient quiver so the re-indexing is bijective. Requires
// Ker f and Coker f to be 2*delta-trivial.
ImtOutcome verify_imt(const Morphism& f, int delta);

}  // namespace zigzag
