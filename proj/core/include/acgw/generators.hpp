#pragma once

// Seeded random generators for every input shape. All outputs pass the
// corresponding validators; constrained sampling gives up after a bounded
// number of attempts with GenerationError.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "acgw/linear.hpp"
#include "acgw/set_closed.hpp"
#include "acgw/snake.hpp"

namespace acgw {

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

struct GenConfig {
    std::uint64_t seed = 42;
    std::size_t max_size = 8;      // elements (or dimension) per object
    int max_support = 6;           // support length is uniform in [1, max_support]
    int lo = 1;
    bool relabel = false;          // transitions get their own element names
    std::uint32_t p = 2;
    static constexpr int max_attempts = 1000;
};

/// Hands out e0, e1, ... (with an optional prefix).
class NameSource {
public:
    explicit NameSource(std::string prefix = "e") : prefix_(std::move(prefix)) {}
    Element next() { return prefix_ + std::to_string(count_++); }

private:
    std::string prefix_;
    std::size_t count_ = 0;
};

SetComplex gen_complex(Rng& rng, const GenConfig& cfg);
SetComplex gen_exact_complex(Rng& rng, const GenConfig& cfg);

/// A random subcomplex X >-> Y.
SetHorChainMor gen_hor_mor(Rng& rng, const SetComplex& y);
/// A random Z -|> Y.
SetVerChainMor gen_ver_mor(Rng& rng, const SetComplex& y);
/// A random chain map out of x; the target gets fresh elements.
SetChainMap gen_chain_map(Rng& rng, const SetComplex& x, NameSource& names);
ChainSES<FinSetInstance> gen_ses(Rng& rng, const GenConfig& cfg);

SnakeInput<FinSetInstance> gen_snake_input(Rng& rng, std::size_t max_size = 6);
StrongSnakeInput<FinSetInstance> gen_strong_snake_input(Rng& rng, std::size_t max_size = 6);

/// A random complex over F_p with the given support and dimensions bounded by cfg.max_size.
ChainComplex<LinearInstance> gen_linear_complex(Rng& rng, const GenConfig& cfg);

/// A random full-rank matrix (rank = min(rows, cols)).
FpMatrix random_full_rank(Rng& rng, std::size_t rows, std::size_t cols, std::uint32_t p);

}  // namespace acgw
