#pragma once

// Closed-form set computations that the generic constructions are checked against.
// Each works on images (element names of the ambient object), never on the
// generic construction path.

#include <vector>

#include "acgw/chains.hpp"
#include "acgw/finset.hpp"
#include "acgw/snake.hpp"

namespace acgw {

using SetComplex = ChainComplex<FinSetInstance>;
using SetChainMap = ChainMap<FinSetInstance>;
using SetHorChainMor = HorChainMor<FinSetInstance>;
using SetVerChainMor = VerChainMor<FinSetInstance>;
using SetFlat = FlatMor<FinSetInstance>;

/// X_i \ (Xbar_{i+1} u Xbar_i), as a subset of X_i.
FinSetObj homology_closed(const SetComplex& x, int i);

/// Image of the composite of injections f1, f2, ... (each f_k's target is f_{k+1}'s source).
FinSetObj image_of(std::initializer_list<const InjectionData*> chain);

struct LevelSets {
    int degree = 0;
    FinSetObj object;      // subset of Y_i
    FinSetObj transition;  // subset of Ybar_i
};

/// Z_i = Y_i \ X_i, Zbar_i = (Ybar_i \ Xbar_i) n (Y_{i-1} \ X_{i-1}).
std::vector<LevelSets> coker_closed(const SetHorChainMor& f);
/// X_i = Y_i \ Z_i, Xbar_i = (Ybar_i \ Zbar_i) n (Y_i \ Z_i).
std::vector<LevelSets> ker_closed(const SetVerChainMor& g);

/// The same data read off a generic complement, for comparison.
std::vector<LevelSets> level_sets(const SetVerChainMor& g);
std::vector<LevelSets> level_sets(const SetHorChainMor& f);

/// H_i(X) <-| M >-> H_i(Y) with M = Z_i \ (Xbar_i u Ybar_{i+1}).
SetFlat h_on_map_closed(const SetChainMap& f, int i);

/// The four emptiness conditions; true when all four sets are empty at every degree.
bool qiso_four_sets(const SetChainMap& f);

struct SnakeClosed {
    FinSetObj d;   // C \ (Y \ X), inside B
    FinSetObj w;   // (Y \ X) \ Z, inside B
    FinSetObj d2;  // A' \ (Y \ Z), inside B'
};

SnakeClosed snake_closed(const SnakeInput<FinSetInstance>& s);
/// D, W, D' of a snake result as subsets of B, B, B'.
SnakeClosed snake_images(const SnakeInput<FinSetInstance>& s, const SnakeResult<FinSetInstance>& r);

/// Whether each interior object is the disjoint union of the images of its two adjacent transitions.
bool zigzag_disjoint_union(const ExactZigzag<FinSetInstance>& z);

}  // namespace acgw
